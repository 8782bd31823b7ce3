//! Littlewood–Richardson coefficients.
//!
//! The generic engine counts semistandard skew tableaux whose column reading
//! word (columns top to bottom, rightmost column first) is latticed. Cheaper
//! closed forms are used for strips, squares of rectangles, rectangle times
//! its conjugate, and squares of hooks.

use std::collections::HashMap;
use std::sync::Mutex;

use num_bigint::BigInt;
use thiserror::Error;

use crate::partition::{partitions_between, Partition, SkewShape};
use crate::schur::SchurExpansion;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LrError {
    #[error("cannot remove a box from the empty partition")]
    EmptyPartition,
}

/// A filling of a skew diagram; `entries[i]` belongs to `shape.boxes()[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tableau {
    pub shape: SkewShape,
    pub entries: Vec<usize>,
}

impl Tableau {
    /// Builds a tableau from rows written top to bottom, with `None` for the
    /// boxes of the inner shape.
    pub fn from_rows(rows: &[Vec<Option<usize>>]) -> Option<Tableau> {
        let outer = Partition::new(rows.iter().map(|r| r.len()).collect()).ok()?;
        let inner = Partition::new(
            rows.iter()
                .map(|r| r.iter().take_while(|e| e.is_none()).count())
                .collect(),
        )
        .ok()?;
        let shape = SkewShape::new(outer, inner)?;
        let mut entries = Vec::new();
        for (r, c) in shape.boxes() {
            entries.push(rows[r][c]?);
        }
        Some(Tableau { shape, entries })
    }

    fn entry(&self, row: usize, col: usize) -> Option<usize> {
        self.shape
            .boxes()
            .iter()
            .position(|&b| b == (row, col))
            .map(|i| self.entries[i])
    }

    pub fn weight(&self) -> Vec<usize> {
        let max = self.entries.iter().copied().max().unwrap_or(0);
        let mut w = vec![0; max];
        for &e in &self.entries {
            w[e - 1] += 1;
        }
        w
    }

    pub fn is_semistandard(&self) -> bool {
        self.shape.boxes().iter().all(|&(r, c)| {
            let e = self.entry(r, c).unwrap();
            let right_ok = self.entry(r, c + 1).is_none_or(|x| e <= x);
            let below_ok = self.entry(r + 1, c).is_none_or(|x| e < x);
            right_ok && below_ok
        })
    }

    /// Columns read downwards, rightmost column first.
    pub fn reading_word(&self) -> Vec<usize> {
        let mut word = Vec::with_capacity(self.entries.len());
        for c in (0..self.shape.outer().first()).rev() {
            for r in 0..self.shape.outer().length() {
                if let Some(e) = self.entry(r, c) {
                    word.push(e);
                }
            }
        }
        word
    }
}

/// Every prefix has at least as many `i`s as `(i+1)`s.
pub fn is_latticed(word: &[usize]) -> bool {
    let mut counts: Vec<usize> = Vec::new();
    for &letter in word {
        if letter == 0 {
            return false;
        }
        if counts.len() < letter {
            counts.resize(letter, 0);
        }
        counts[letter - 1] += 1;
        if letter > 1 && counts[letter - 1] > counts[letter - 2] {
            return false;
        }
    }
    true
}

/// Skew boxes in reading order together with the indices of their upper and
/// right neighbours inside the skew diagram.
struct Layout {
    cells: Vec<(usize, usize)>,
    above: Vec<Option<usize>>,
    right: Vec<Option<usize>>,
}

impl Layout {
    fn new(mu: &Partition, lambda: &Partition) -> Layout {
        let lc = lambda.conjugate();
        let mc = mu.conjugate();
        let mut cells = Vec::new();
        let mut index = HashMap::new();
        for c in (0..lambda.first()).rev() {
            for r in mc.part(c)..lc.part(c) {
                index.insert((r, c), cells.len());
                cells.push((r, c));
            }
        }
        let above = cells
            .iter()
            .map(|&(r, c)| {
                if r == 0 {
                    None
                } else {
                    index.get(&(r - 1, c)).copied()
                }
            })
            .collect();
        let right = cells
            .iter()
            .map(|&(r, c)| index.get(&(r, c + 1)).copied())
            .collect();
        Layout {
            cells,
            above,
            right,
        }
    }
}

struct Search<'a> {
    layout: &'a Layout,
    weight: &'a [usize],
    fill: Vec<usize>,
    counts: Vec<usize>,
}

impl Search<'_> {
    fn run(&mut self, pos: usize, visit: &mut dyn FnMut(&[usize])) {
        if pos == self.layout.cells.len() {
            visit(&self.fill);
            return;
        }
        let lo = self.layout.above[pos].map_or(1, |i| self.fill[i] + 1);
        let hi = self.layout.right[pos].map_or(self.weight.len(), |i| self.fill[i]);
        for e in lo..=hi.min(self.weight.len()) {
            let k = e - 1;
            if self.counts[k] == self.weight[k] {
                continue;
            }
            if k > 0 && self.counts[k] + 1 > self.counts[k - 1] {
                continue;
            }
            self.counts[k] += 1;
            self.fill[pos] = e;
            self.run(pos + 1, visit);
            self.counts[k] -= 1;
        }
    }
}

fn quick_zero(mu: &Partition, nu: &Partition, lambda: &Partition) -> bool {
    mu.size() + nu.size() != lambda.size() || !lambda.contains(mu) || !lambda.contains(nu)
}

/// Counts LR tableaux of shape `λ/μ` and weight `ν` by direct enumeration.
pub fn count_lr_tableaux(mu: &Partition, nu: &Partition, lambda: &Partition) -> u64 {
    if quick_zero(mu, nu, lambda) {
        return 0;
    }
    let layout = Layout::new(mu, lambda);
    let mut search = Search {
        layout: &layout,
        weight: nu.parts(),
        fill: vec![0; layout.cells.len()],
        counts: vec![0; nu.length()],
    };
    let mut n = 0u64;
    search.run(0, &mut |_| n += 1);
    n
}

/// Materializes the LR tableaux of shape `λ/μ` and weight `ν`.
pub fn enumerate_lr_tableaux(mu: &Partition, nu: &Partition, lambda: &Partition) -> Vec<Tableau> {
    if quick_zero(mu, nu, lambda) {
        return Vec::new();
    }
    let layout = Layout::new(mu, lambda);
    let shape = SkewShape::new(lambda.clone(), mu.clone()).expect("containment checked");
    let order = shape.boxes();
    let mut search = Search {
        layout: &layout,
        weight: nu.parts(),
        fill: vec![0; layout.cells.len()],
        counts: vec![0; nu.length()],
    };
    let mut out = Vec::new();
    search.run(0, &mut |fill| {
        let mut entries = vec![0; fill.len()];
        for (i, cell) in layout.cells.iter().enumerate() {
            let j = order.iter().position(|b| b == cell).unwrap();
            entries[j] = fill[i];
        }
        out.push(Tableau {
            shape: shape.clone(),
            entries,
        });
    });
    out
}

const CACHE_LIMIT: usize = 1 << 20;

type Key = (Partition, Partition, Partition);

fn cache() -> &'static Mutex<HashMap<Key, u64>> {
    static CACHE: std::sync::OnceLock<Mutex<HashMap<Key, u64>>> = std::sync::OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `c(μ,ν;λ)`.
pub fn lr_coefficient(mu: &Partition, nu: &Partition, lambda: &Partition) -> u64 {
    if quick_zero(mu, nu, lambda) {
        return 0;
    }
    if let Some(v) = fast_path(mu, nu, lambda) {
        return v;
    }
    // the coefficient is symmetric, so normalise the key
    let (a, b) = if mu <= nu { (mu, nu) } else { (nu, mu) };
    let key = (a.clone(), b.clone(), lambda.clone());
    if let Some(&v) = cache().lock().unwrap().get(&key) {
        return v;
    }
    // enumerate against the smaller weight: fewer letters to place
    let v = if a.size() < b.size() || (a.size() == b.size() && a.length() < b.length()) {
        count_lr_tableaux(b, a, lambda)
    } else {
        count_lr_tableaux(a, b, lambda)
    };
    let mut guard = cache().lock().unwrap();
    if guard.len() >= CACHE_LIMIT {
        guard.clear();
    }
    guard.insert(key, v);
    v
}

fn fast_path(mu: &Partition, nu: &Partition, lambda: &Partition) -> Option<u64> {
    let strip = |inner: &Partition, other: &Partition| -> Option<u64> {
        let skew = SkewShape::new(lambda.clone(), inner.clone())?;
        if other.is_empty() {
            return Some(u64::from(lambda == inner));
        }
        if other.is_row() {
            return Some(u64::from(skew.is_horizontal_strip()));
        }
        if other.is_column() {
            return Some(u64::from(skew.is_vertical_strip()));
        }
        None
    };
    if let Some(v) = strip(mu, nu).or_else(|| strip(nu, mu)) {
        return Some(v);
    }
    if mu.is_rectangular() {
        let (a, b) = (mu.first(), mu.length());
        if nu == mu {
            return Some(u64::from(is_ab_birectangular(lambda, a, b)));
        }
        if *nu == mu.conjugate() {
            return Some(u64::from(is_set_birectangular(lambda, a, b)));
        }
    }
    if mu == nu && mu.is_hook() {
        return Some(hook_square_coefficient(
            mu.first() - 1,
            mu.length() - 1,
            lambda,
        ));
    }
    None
}

/// `c((a+1,1^b),(a+1,1^b);λ)`.
pub fn hook_square_coefficient(a: usize, b: usize, lambda: &Partition) -> u64 {
    let mu = Partition::hook(a, b);
    if quick_zero(&mu, &mu, lambda) {
        return 0;
    }
    let top = lambda.part(0) + lambda.part(1);
    let thin = lambda.part(1) >= 2 && lambda.part(2) <= 2;
    if top == 2 * a + 4 {
        u64::from(thin)
    } else if top == 2 * a + 2 {
        let exceptional = *lambda == Partition::hook(2 * a, 2 * b + 1);
        u64::from(thin || exceptional)
    } else if top == 2 * a + 3 {
        count_lr_tableaux(&mu, &mu, lambda)
    } else {
        0
    }
}

/// Support of `s_μ s_ν` with coefficients.
pub fn lr_product(mu: &Partition, nu: &Partition) -> SchurExpansion {
    let n = mu.size() + nu.size();
    let lower = mu.max_parts(nu);
    let mut out = SchurExpansion::zero();
    for lambda in partitions_between(n, &lower, None) {
        if lambda.length() > mu.length() + nu.length() || lambda.first() > mu.first() + nu.first() {
            continue;
        }
        let c = lr_coefficient(mu, nu, &lambda);
        if c > 0 {
            out.add_term(lambda, BigInt::from(c));
        }
    }
    out
}

/// `s_μ s_(k)` by horizontal strips.
pub fn multiply_by_row(mu: &Partition, k: usize) -> SchurExpansion {
    strips(mu, k, true)
}

/// `s_μ s_(1^k)` by vertical strips.
pub fn multiply_by_column(mu: &Partition, k: usize) -> SchurExpansion {
    strips(mu, k, false)
}

fn strips(mu: &Partition, k: usize, horizontal: bool) -> SchurExpansion {
    let mut out = SchurExpansion::zero();
    let upper = if horizontal {
        // row i may grow up to λ_{i-1}; the first row is unbounded
        let mut parts = vec![mu.first() + k];
        parts.extend((0..mu.length()).map(|i| mu.part(i)));
        Partition::new(parts).unwrap()
    } else {
        let mut parts: Vec<usize> = (0..mu.length()).map(|i| mu.part(i) + 1).collect();
        parts.extend(std::iter::repeat_n(1, k));
        Partition::new(parts).unwrap()
    };
    for lambda in partitions_between(mu.size() + k, mu, Some(&upper)) {
        let skew = SkewShape::new(lambda.clone(), mu.clone()).unwrap();
        let ok = if horizontal {
            skew.is_horizontal_strip()
        } else {
            skew.is_vertical_strip()
        };
        if ok {
            out.add_term(lambda, BigInt::from(1));
        }
    }
    out
}

/// `s_μ s_(1)`.
pub fn induce_box(mu: &Partition) -> SchurExpansion {
    let mut out = SchurExpansion::zero();
    for r in mu.addable_rows() {
        out.add_term(mu.with_box_added(r), BigInt::from(1));
    }
    out
}

/// Sum of `s_{λ−□}` over removable boxes.
pub fn restrict_box(lambda: &Partition) -> Result<SchurExpansion, LrError> {
    if lambda.is_empty() {
        return Err(LrError::EmptyPartition);
    }
    let mut out = SchurExpansion::zero();
    for r in lambda.removable_rows() {
        out.add_term(lambda.with_box_removed(r), BigInt::from(1));
    }
    Ok(out)
}

/// `s_μ s_(1)^steps`.
pub fn iterate_branching(mu: &Partition, steps: usize) -> SchurExpansion {
    let mut cur = SchurExpansion::from_partition(mu.clone());
    for _ in 0..steps {
        let mut next = SchurExpansion::zero();
        for (lambda, c) in cur.terms() {
            next = next.add(&induce_box(lambda).scale(c));
        }
        cur = next;
    }
    cur
}

/// `λ ⊢ 2ab` with `λ_i + λ_{2b+1−i} = 2a` for `i ≤ 2b`.
pub fn is_ab_birectangular(lambda: &Partition, a: usize, b: usize) -> bool {
    lambda.size() == 2 * a * b
        && (1..=2 * b).all(|i| lambda.part(i - 1) + lambda.part(2 * b - i) == 2 * a)
}

/// `λ ⊢ 2ab` with `λ_i + λ_{a+b+1−i} = a+b` for `i ≤ min` and `λ_i = min`
/// for `min < i ≤ max`.
pub fn is_set_birectangular(lambda: &Partition, a: usize, b: usize) -> bool {
    let (m, big) = (a.min(b), a.max(b));
    lambda.size() == 2 * a * b
        && (1..=m).all(|i| lambda.part(i - 1) + lambda.part(a + b - i) == a + b)
        && (m + 1..=big).all(|i| lambda.part(i - 1) == m)
}

/// All `(a,b)`-birectangular partitions, in canonical order.
pub fn enumerate_ab_birectangular(a: usize, b: usize) -> Vec<Partition> {
    // λ is fixed by its first b parts, a partition fitting in (2a)^b that
    // contains (a^b)
    let mut out: Vec<Partition> = crate::partition::bounded_partitions_range(a, 2 * a, b)
        .into_iter()
        .map(|top| {
            let mut parts = top.clone();
            parts.extend(top.iter().rev().map(|&x| 2 * a - x));
            Partition::new(parts).unwrap()
        })
        .collect();
    out.sort();
    out
}

/// All `{a,b}`-birectangular partitions, in canonical order.
pub fn enumerate_set_birectangular(a: usize, b: usize) -> Vec<Partition> {
    let (m, big) = (a.min(b), a.max(b));
    let mut out: Vec<Partition> = crate::partition::bounded_partitions_range(big, a + b, m)
        .into_iter()
        .map(|top| {
            let mut parts = top.clone();
            parts.extend(std::iter::repeat_n(m, big - m));
            parts.extend(top.iter().rev().map(|&x| a + b - x));
            Partition::new(parts).unwrap()
        })
        .collect();
    out.sort();
    out
}
