//! Integer partitions, the shape taxonomy used throughout the crate, and
//! multifunctions (compositions of `λ ↦ λ+α` and `λ ↦ λ⊔α`).

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("parts must be non-increasing: {0:?}")]
    NotNonIncreasing(Vec<usize>),
}

/// A partition stored as its positive parts in non-increasing order.
///
/// The derived ordering is the crate's canonical order: by size first, then
/// descending lexicographic on parts, so `(3) < (2,1) < (1,1,1)`.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Builds a partition from non-increasing parts; trailing zeros are dropped.
    pub fn new(mut parts: Vec<usize>) -> Result<Self, PartitionError> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(PartitionError::NotNonIncreasing(parts));
        }
        Ok(Partition { parts })
    }

    /// Sorts arbitrary non-negative parts into a partition.
    pub fn from_multiset(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// `(a^b)`; empty when either side is zero.
    pub fn rectangle(a: usize, b: usize) -> Self {
        if a == 0 {
            return Self::empty();
        }
        Partition { parts: vec![a; b] }
    }

    pub fn row(k: usize) -> Self {
        Self::rectangle(k, 1)
    }

    pub fn column(k: usize) -> Self {
        Self::rectangle(1, k)
    }

    /// `(a+1, 1^b)`.
    pub fn hook(a: usize, b: usize) -> Self {
        let mut parts = vec![a + 1];
        parts.extend(std::iter::repeat_n(1, b));
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.parts
    }

    /// `|λ|`.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `ℓ(λ)`.
    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The i-th part, 0-indexed, with zero padding.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn first(&self) -> usize {
        self.part(0)
    }

    pub fn conjugate(&self) -> Partition {
        let mut out = Vec::with_capacity(self.first());
        for i in 1..=self.first() {
            out.push(self.parts.iter().take_while(|&&p| p >= i).count());
        }
        Partition { parts: out }
    }

    /// Conjugates `r` times.
    pub fn conjugate_pow(&self, r: usize) -> Partition {
        if r.is_multiple_of(2) {
            self.clone()
        } else {
            self.conjugate()
        }
    }

    /// Componentwise sum `λ+μ`.
    pub fn plus(&self, other: &Partition) -> Partition {
        let n = self.length().max(other.length());
        Partition {
            parts: (0..n).map(|i| self.part(i) + other.part(i)).collect(),
        }
    }

    /// Multiset union of parts `λ⊔μ`.
    pub fn union_parts(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Self::from_multiset(parts)
    }

    /// `M(λ,μ)`.
    pub fn max_parts(&self, other: &Partition) -> Partition {
        let n = self.length().max(other.length());
        Partition {
            parts: (0..n).map(|i| self.part(i).max(other.part(i))).collect(),
        }
    }

    /// `m(λ,μ)`.
    pub fn min_parts(&self, other: &Partition) -> Partition {
        let n = self.length().min(other.length());
        Partition {
            parts: (0..n).map(|i| self.part(i).min(other.part(i))).collect(),
        }
    }

    /// `|λ−μ| = Σ|λ_i−μ_i|`.
    pub fn l1_distance(&self, other: &Partition) -> usize {
        let n = self.length().max(other.length());
        (0..n).map(|i| self.part(i).abs_diff(other.part(i))).sum()
    }

    /// Diagram containment `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.length() <= self.length() && other.parts.iter().zip(&self.parts).all(|(o, s)| o <= s)
    }

    /// Multiplies every part by `k`.
    pub fn scale_parts(&self, k: usize) -> Partition {
        Partition::new(self.parts.iter().map(|p| p * k).collect()).expect("scaling keeps order")
    }

    /// Repeats every part `k` times: `(α_1^k, α_2^k, …)`.
    pub fn repeat_parts(&self, k: usize) -> Partition {
        Partition {
            parts: self
                .parts
                .iter()
                .flat_map(|&p| std::iter::repeat_n(p, k))
                .collect(),
        }
    }

    /// Addable corners as 0-indexed row numbers.
    pub fn addable_rows(&self) -> Vec<usize> {
        (0..=self.length())
            .filter(|&i| i == 0 || self.part(i) < self.part(i - 1))
            .collect()
    }

    /// Removable corners as 0-indexed row numbers.
    pub fn removable_rows(&self) -> Vec<usize> {
        (0..self.length())
            .filter(|&i| self.part(i) > self.part(i + 1))
            .collect()
    }

    pub fn with_box_added(&self, row: usize) -> Partition {
        let mut parts = self.parts.clone();
        if row == parts.len() {
            parts.push(1);
        } else {
            parts[row] += 1;
        }
        Partition::new(parts).expect("addable corner")
    }

    pub fn with_box_removed(&self, row: usize) -> Partition {
        let mut parts = self.parts.clone();
        parts[row] -= 1;
        Partition::new(parts).expect("removable corner")
    }

    /// Compact rendering with exponents, e.g. `[4^2,3,1]`.
    pub fn to_exponent_string(&self) -> String {
        let mut chunks = Vec::new();
        let mut i = 0;
        while i < self.parts.len() {
            let p = self.parts[i];
            let run = self.parts[i..].iter().take_while(|&&q| q == p).count();
            chunks.push(if run > 1 {
                format!("{p}^{run}")
            } else {
                p.to_string()
            });
            i += run;
        }
        format!("[{}]", chunks.join(","))
    }

    // --- shape taxonomy -------------------------------------------------

    pub fn is_row(&self) -> bool {
        self.length() == 1
    }

    pub fn is_column(&self) -> bool {
        self.first() == 1
    }

    pub fn is_linear(&self) -> bool {
        self.is_row() || self.is_column()
    }

    pub fn is_rectangular(&self) -> bool {
        !self.is_empty() && self.parts.iter().all(|&p| p == self.parts[0])
    }

    pub fn is_square(&self) -> bool {
        self.is_rectangular() && self.first() == self.length()
    }

    pub fn is_properly_rectangular(&self) -> bool {
        self.is_rectangular() && !self.is_linear()
    }

    pub fn is_two_rectangular(&self) -> bool {
        self.is_rectangular() && (self.first() == 2 || self.length() == 2)
    }

    /// Not rectangular, but one part moved by ±1 yields a rectangle.
    pub fn is_almost_rectangular(&self) -> bool {
        if self.is_empty() || self.is_rectangular() {
            return false;
        }
        let n = self.length();
        for i in 0..n {
            for up in [true, false] {
                let mut parts = self.parts.clone();
                if up {
                    parts[i] += 1;
                } else {
                    parts[i] -= 1;
                }
                if let Ok(p) = Partition::new(parts) {
                    if p.is_rectangular() {
                        return true;
                    }
                }
            }
        }
        false
    }

    pub fn is_row_near_rectangular(&self) -> bool {
        if self.is_rectangular() || self.is_empty() {
            return false;
        }
        let head = Partition {
            parts: self.parts[..self.length() - 1].to_vec(),
        };
        head.is_rectangular()
    }

    pub fn is_column_near_rectangular(&self) -> bool {
        self.conjugate().is_row_near_rectangular()
    }

    pub fn is_near_rectangular(&self) -> bool {
        self.is_row_near_rectangular() || self.is_column_near_rectangular()
    }

    /// `(a+1,1^b)` with `a,b > 0`.
    pub fn is_hook(&self) -> bool {
        self.length() >= 2 && self.first() >= 2 && self.parts[1..].iter().all(|&p| p == 1)
    }

    /// Exactly two distinct part values.
    pub fn is_fat_hook(&self) -> bool {
        let mut distinct = self.parts.clone();
        distinct.dedup();
        distinct.len() == 2
    }

    pub fn is_row_unbalanced_fat_hook(&self) -> bool {
        self.is_fat_hook() && self.part(1) < self.first()
    }

    pub fn is_column_unbalanced_fat_hook(&self) -> bool {
        self.conjugate().is_row_unbalanced_fat_hook()
    }

    pub fn is_self_conjugate(&self) -> bool {
        *self == self.conjugate()
    }

    pub fn is_even(&self) -> bool {
        self.parts.iter().all(|p| p % 2 == 0)
    }

    pub fn classify_shape(&self) -> ShapeTags {
        ShapeTags {
            empty: self.is_empty(),
            row: self.is_row(),
            column: self.is_column(),
            linear: self.is_linear(),
            square: self.is_square(),
            rectangular: self.is_rectangular(),
            properly_rectangular: self.is_properly_rectangular(),
            two_rectangular: self.is_two_rectangular(),
            almost_rectangular: self.is_almost_rectangular(),
            row_near_rectangular: self.is_row_near_rectangular(),
            column_near_rectangular: self.is_column_near_rectangular(),
            near_rectangular: self.is_near_rectangular(),
            hook: self.is_hook(),
            fat_hook: self.is_fat_hook(),
            row_unbalanced_fat_hook: self.is_row_unbalanced_fat_hook(),
            column_unbalanced_fat_hook: self.is_column_unbalanced_fat_hook(),
            self_conjugate: self.is_self_conjugate(),
            even: self.is_even(),
        }
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = PartitionError;
    fn try_from(parts: Vec<usize>) -> Result<Self, Self::Error> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses `[4^2,3,1]`; returns the partition and the number of bytes used.
/// Byte offsets in errors are relative to `text`, shifted by `base`.
pub(crate) fn parse_partition_prefix(
    text: &str,
    base: usize,
) -> Result<(Partition, usize), PartitionError> {
    let bytes = text.as_bytes();
    let err = |pos: usize, msg: &str| PartitionError::Parse {
        pos: base + pos,
        msg: msg.to_string(),
    };
    let mut i = 0;
    let skip_ws = |i: &mut usize| {
        while *i < bytes.len() && bytes[*i].is_ascii_whitespace() {
            *i += 1;
        }
    };
    let number = |i: &mut usize| -> Option<usize> {
        let start = *i;
        while *i < bytes.len() && bytes[*i].is_ascii_digit() {
            *i += 1;
        }
        text[start..*i].parse().ok()
    };
    skip_ws(&mut i);
    if bytes.get(i) != Some(&b'[') {
        return Err(err(i, "expected '['"));
    }
    i += 1;
    let mut parts = Vec::new();
    skip_ws(&mut i);
    if bytes.get(i) == Some(&b']') {
        return Ok((Partition::empty(), i + 1));
    }
    loop {
        skip_ws(&mut i);
        let at = i;
        let value = number(&mut i).ok_or_else(|| err(at, "expected a part"))?;
        skip_ws(&mut i);
        let mut reps = 1;
        if bytes.get(i) == Some(&b'^') {
            i += 1;
            skip_ws(&mut i);
            let at = i;
            reps = number(&mut i).ok_or_else(|| err(at, "expected an exponent"))?;
            skip_ws(&mut i);
        }
        parts.extend(std::iter::repeat_n(value, reps));
        match bytes.get(i) {
            Some(b',') => i += 1,
            Some(b']') => {
                i += 1;
                break;
            }
            _ => return Err(err(i, "expected ',' or ']'")),
        }
    }
    if parts.windows(2).any(|w| w[0] < w[1]) {
        return Err(err(0, "parts must be non-increasing"));
    }
    Ok((Partition::new(parts)?, i))
}

impl FromStr for Partition {
    type Err = PartitionError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (p, used) = parse_partition_prefix(s, 0)?;
        if !s[used..].trim().is_empty() {
            return Err(PartitionError::Parse {
                pos: used,
                msg: "trailing input".into(),
            });
        }
        Ok(p)
    }
}

/// Flags of the shape taxonomy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct ShapeTags {
    pub empty: bool,
    pub row: bool,
    pub column: bool,
    pub linear: bool,
    pub square: bool,
    pub rectangular: bool,
    pub properly_rectangular: bool,
    pub two_rectangular: bool,
    pub almost_rectangular: bool,
    pub row_near_rectangular: bool,
    pub column_near_rectangular: bool,
    pub near_rectangular: bool,
    pub hook: bool,
    pub fat_hook: bool,
    pub row_unbalanced_fat_hook: bool,
    pub column_unbalanced_fat_hook: bool,
    pub self_conjugate: bool,
    pub even: bool,
}

/// Skew shape `outer/inner`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Option<Self> {
        outer.contains(&inner).then_some(SkewShape { outer, inner })
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    /// Boxes as 0-indexed `(row, col)` in row-major order.
    pub fn boxes(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for r in 0..self.outer.length() {
            for c in self.inner.part(r)..self.outer.part(r) {
                out.push((r, c));
            }
        }
        out
    }

    /// At most one box per column.
    pub fn is_horizontal_strip(&self) -> bool {
        (1..self.outer.length()).all(|r| self.outer.part(r) <= self.inner.part(r - 1))
    }

    /// At most one box per row.
    pub fn is_vertical_strip(&self) -> bool {
        (0..self.outer.length()).all(|r| self.outer.part(r) <= self.inner.part(r) + 1)
    }
}

// --- enumeration ---------------------------------------------------------

/// All partitions of `n` in descending lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    bounded_partitions(n, n, n)
}

/// Partitions of `n` with at most `max_len` parts, each at most `max_part`,
/// in descending lexicographic order.
pub fn bounded_partitions(n: usize, max_part: usize, max_len: usize) -> Vec<Partition> {
    fn go(
        rest: usize,
        cap: usize,
        len_left: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        if len_left == 0 || cap * len_left < rest {
            return;
        }
        for p in (1..=cap.min(rest)).rev() {
            cur.push(p);
            go(rest - p, p, len_left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, max_part, max_len, &mut Vec::new(), &mut out);
    out
}

/// Non-increasing sequences of exactly `len` values in `lo..=hi`.
pub fn bounded_partitions_range(lo: usize, hi: usize, len: usize) -> Vec<Vec<usize>> {
    fn go(cap: usize, lo: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for v in (lo..=cap).rev() {
            cur.push(v);
            go(v, lo, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if lo <= hi {
        go(hi, lo, len, &mut Vec::new(), &mut out);
    }
    out
}

/// Partitions `λ ⊢ n` with `lower ⊆ λ ⊆ upper` (no upper bound when `None`).
pub fn partitions_between(
    n: usize,
    lower: &Partition,
    upper: Option<&Partition>,
) -> Vec<Partition> {
    fn go(
        row: usize,
        rest: usize,
        cap: usize,
        lower: &Partition,
        upper: Option<&Partition>,
        cur: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if rest == 0 {
            if cur.len() >= lower.length() {
                out.push(Partition { parts: cur.clone() });
            }
            return;
        }
        let hi = match upper {
            Some(u) => cap.min(u.part(row)),
            None => cap,
        }
        .min(rest);
        let lo = lower.part(row).max(1);
        if hi < lo {
            return;
        }
        // the remaining lower-bound rows must still fit
        let need: usize = lower.parts().iter().skip(row + 1).sum();
        for p in (lo..=hi).rev() {
            if rest - p < need {
                continue;
            }
            cur.push(p);
            go(row + 1, rest - p, p, lower, upper, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n < lower.size() {
        return out;
    }
    go(0, n, n, lower, upper, &mut Vec::new(), &mut out);
    out
}

/// Is there `λ ⊢ n` with `μ, ν ⊆ λ`?
pub fn joinable(mu: &Partition, nu: &Partition, n: usize) -> bool {
    let total = mu.size() + nu.size();
    let d = mu.l1_distance(nu);
    2 * n >= total && d <= 2 * n - total
}

/// Is there `λ ⊢ n` with `λ ⊆ μ, ν`?
pub fn meetable(mu: &Partition, nu: &Partition, n: usize) -> bool {
    let total = mu.size() + nu.size();
    let d = mu.l1_distance(nu);
    total >= 2 * n && d <= total - 2 * n
}

// --- multifunctions --------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Step {
    /// `λ ↦ λ+α`.
    Add(Partition),
    /// `λ ↦ λ⊔α`.
    Union(Partition),
}

impl Step {
    pub fn apply(&self, lambda: &Partition) -> Partition {
        match self {
            Step::Add(a) => lambda.plus(a),
            Step::Union(a) => lambda.union_parts(a),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Multifunction {
    pub steps: Vec<Step>,
}

impl Multifunction {
    pub fn new(steps: Vec<Step>) -> Self {
        Multifunction { steps }
    }

    pub fn apply(&self, lambda: &Partition) -> Partition {
        self.steps
            .iter()
            .fold(lambda.clone(), |acc, s| s.apply(&acc))
    }

    /// `f^h`: each step replaced by its `h`-fold composition.
    pub fn power(&self, h: usize) -> Multifunction {
        let steps = self
            .steps
            .iter()
            .map(|s| match s {
                Step::Add(a) => Step::Add(a.scale_parts(h)),
                Step::Union(a) => Step::Union(a.repeat_parts(h)),
            })
            .collect();
        Multifunction { steps }
    }

    /// `ν^{′f}`: `ν` conjugated `|f′(∅)|` times, `f′` being the union steps.
    pub fn conj_twist(&self, nu: &Partition) -> Partition {
        let r: usize = self
            .steps
            .iter()
            .filter_map(|s| match s {
                Step::Union(a) => Some(a.size()),
                Step::Add(_) => None,
            })
            .sum();
        nu.conjugate_pow(r)
    }
}

/// Default step budget of the bounded search in [`reachable`].
pub const REACHABLE_DEPTH: usize = 4;

/// Finds a multifunction `f` with `f(μ) = λ`, trying the constructive recipes
/// for rectangles and for `(2,1)` first and a bounded search afterwards.
pub fn reachable(mu: &Partition, lambda: &Partition) -> Option<Multifunction> {
    reachable_with_depth(mu, lambda, REACHABLE_DEPTH)
}

pub fn reachable_with_depth(
    mu: &Partition,
    lambda: &Partition,
    depth: usize,
) -> Option<Multifunction> {
    if !lambda.contains(mu) {
        return None;
    }
    if mu == lambda {
        return Some(Multifunction::default());
    }
    if let Some(f) = recipe(mu, lambda) {
        debug_assert_eq!(f.apply(mu), *lambda);
        return Some(f);
    }
    for d in 1..=depth {
        let mut steps = Vec::new();
        if search(mu, lambda, d, &mut steps) {
            return Some(Multifunction { steps });
        }
    }
    None
}

fn recipe(mu: &Partition, lambda: &Partition) -> Option<Multifunction> {
    if mu.is_rectangular() {
        let l = mu.length();
        let alpha = Partition::from_multiset((0..l).map(|i| lambda.part(i) - mu.part(i)).collect());
        let beta = Partition::new(lambda.parts()[l.min(lambda.length())..].to_vec()).ok()?;
        // α must be a partition in the given row order for μ+α to line up
        let raw: Vec<usize> = (0..l).map(|i| lambda.part(i) - mu.part(i)).collect();
        if raw.windows(2).all(|w| w[0] >= w[1]) {
            let f = Multifunction::new(vec![Step::Add(alpha), Step::Union(beta)]);
            if f.apply(mu) == *lambda {
                return Some(f);
            }
        }
    }
    let two_one = Partition { parts: vec![2, 1] };
    if *mu == two_one {
        for (target, conj) in [(lambda.clone(), false), (lambda.conjugate(), true)] {
            if let Some(f) = two_one_recipe(&target) {
                let f = if conj { conjugate_multifunction(&f) } else { f };
                if f.apply(mu) == *lambda {
                    return Some(f);
                }
            }
        }
    }
    None
}

/// Recipes from `(2,1)` to `(a+1,1^b)`, `((a+1)^b,a)` and `(a+1,a^b)`.
fn two_one_recipe(lambda: &Partition) -> Option<Multifunction> {
    let p = lambda.parts();
    if lambda.is_hook() {
        let a = p[0] - 1;
        let b = p.len() - 1;
        return Some(Multifunction::new(vec![
            Step::Add(Partition::row(a - 1)),
            Step::Union(Partition::column(b - 1)),
        ]));
    }
    let n = p.len();
    if n >= 2 {
        let a = p[n - 1];
        if a >= 1 && p[..n - 1].iter().all(|&x| x == a + 1) {
            return Some(Multifunction::new(vec![
                Step::Add(Partition::rectangle(a - 1, 2)),
                Step::Union(Partition::rectangle(a + 1, n - 2)),
            ]));
        }
        let a = p[1];
        if a >= 1 && p[0] == a + 1 && p[1..].iter().all(|&x| x == a) {
            return Some(Multifunction::new(vec![
                Step::Add(Partition::rectangle(a - 1, 2)),
                Step::Union(Partition::rectangle(a, n - 2)),
            ]));
        }
    }
    None
}

/// `g` with `g(μ′) = f(μ)′`: swaps step kinds and conjugates their arguments.
pub fn conjugate_multifunction(f: &Multifunction) -> Multifunction {
    Multifunction {
        steps: f
            .steps
            .iter()
            .map(|s| match s {
                Step::Add(a) => Step::Union(a.conjugate()),
                Step::Union(a) => Step::Add(a.conjugate()),
            })
            .collect(),
    }
}

fn search(cur: &Partition, target: &Partition, depth: usize, steps: &mut Vec<Step>) -> bool {
    if cur == target {
        return true;
    }
    if depth == 0 {
        return false;
    }
    let room = target.size() - cur.size();
    for size in 1..=room {
        // Add(α): α_i ≤ target_i − cur_i, and α must itself be a partition
        for alpha in bounded_partitions(size, target.first(), target.length()) {
            let next = cur.plus(&alpha);
            if target.contains(&next) {
                steps.push(Step::Add(alpha));
                if search(&next, target, depth - 1, steps) {
                    return true;
                }
                steps.pop();
            }
        }
        for alpha in bounded_partitions(size, target.first(), target.length()) {
            let next = cur.union_parts(&alpha);
            if target.contains(&next) {
                steps.push(Step::Union(alpha));
                if search(&next, target, depth - 1, steps) {
                    return true;
                }
                steps.pop();
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p("[5,3,3,2,1]").conjugate(), p("[5,4,3,1,1]"));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p("[3^3]").conjugate(), p("[3,3,3]"));
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(p("[3,1]").plus(&p("[2,2]")), p("[5,3]"));
        assert_eq!(p("[3,1]").union_parts(&p("[2,2]")), p("[3,2,2,1]"));
        assert_eq!(Partition::empty().union_parts(&p("[2,1]")), p("[2,1]"));
        assert_eq!(p("[3,1]").max_parts(&p("[2,2]")), p("[3,2]"));
        assert_eq!(p("[3,1]").min_parts(&p("[2,2]")), p("[2,1]"));
        assert_eq!(p("[3,1]").l1_distance(&p("[2,2]")), 2);
        assert_eq!(p("[4,4]").l1_distance(&p("[2,2,2,2]")), 8);
    }

    #[test]
    fn joinable_examples() {
        assert!(joinable(&p("[2]"), &p("[1,1]"), 3));
        assert!(!joinable(&p("[3]"), &p("[1,1,1]"), 3));
        assert!(meetable(&p("[2,1]"), &p("[3]"), 2));
    }

    #[test]
    fn shape_examples() {
        let t = p("[2,1]").classify_shape();
        assert!(t.row_near_rectangular && t.near_rectangular && t.almost_rectangular);
        // (2,1) = (a+1,1^b) with a=b=1
        assert!(t.hook);
        let t = p("[4,1,1]").classify_shape();
        assert!(t.hook && !t.almost_rectangular);
        let t = p("[3,3,2]").classify_shape();
        assert!(t.almost_rectangular && t.self_conjugate);
        assert!(p("[3,3,1]").is_fat_hook());
        assert!(p("[5,2,2]").is_row_unbalanced_fat_hook());
        assert!(!p("[5,5,2]").is_row_unbalanced_fat_hook());
        assert!(p("[4,4,1]").is_almost_rectangular());
        assert!(!p("[4,4,2]").is_almost_rectangular());
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(p("[4^2,3,1]").parts(), &[4, 4, 3, 1]);
        assert_eq!(p(" [ 2 , 1 ] ").parts(), &[2, 1]);
        assert_eq!(p("[]"), Partition::empty());
        assert_eq!(p("[4,4,3,1]").to_exponent_string(), "[4^2,3,1]");
        assert!("[1,2]".parse::<Partition>().is_err());
        assert!("[1,".parse::<Partition>().is_err());
        let json = serde_json::to_string(&p("[4,4,3,1]")).unwrap();
        assert_eq!(json, "[4,4,3,1]");
        assert!(serde_json::from_str::<Partition>("[1,3]").is_err());
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=10).map(|n| partitions_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        let four = partitions_of(4);
        assert_eq!(four.first(), Some(&p("[4]")));
        assert!(four.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn multifunction_examples() {
        let f = Multifunction::new(vec![Step::Add(p("[1]")), Step::Union(p("[1]"))]);
        assert_eq!(f.apply(&p("[3,3]")), p("[4,3,1]"));
        let f2 = f.power(2);
        assert_eq!(f2.steps, vec![Step::Add(p("[2]")), Step::Union(p("[1,1]"))]);
        let g = Multifunction::new(vec![Step::Add(p("[2]")), Step::Union(p("[1,1]"))]);
        assert_eq!(g.conj_twist(&p("[2]")), p("[2]"));
    }

    #[test]
    fn reachable_examples() {
        let f = reachable(&p("[3,3]"), &p("[4,3,1]")).unwrap();
        assert_eq!(f.steps, vec![Step::Add(p("[1]")), Step::Union(p("[1]"))]);
        let f = reachable(&p("[2,1]"), &p("[3,2,2]")).unwrap();
        assert_eq!(f.steps, vec![Step::Add(p("[1,1]")), Step::Union(p("[2]"))]);
        assert_eq!(reachable(&p("[2,1]"), &p("[2,1]")).unwrap().steps, vec![]);
        // conjugate almost-rectangle (a^b,1)
        let f = reachable(&p("[2,1]"), &p("[3,3,1]")).unwrap();
        assert_eq!(f.apply(&p("[2,1]")), p("[3,3,1]"));
        assert!(reachable(&p("[2]"), &p("[1,1]")).is_none());
    }
}
