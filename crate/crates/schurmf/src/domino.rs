//! Domino tableaux and the plethysms `s_(2)∘s_μ`, `s_(1²)∘s_μ`.
//!
//! A domino μ-diagram tiles the doubled diagram `(2μ1,2μ1,2μ2,2μ2,…)`. The
//! coefficient of `s_λ` in `s_(2)∘s_μ` counts semistandard *even* domino
//! tableaux of weight λ with a latticed reading word; odd ones give
//! `s_(1²)∘s_μ`.
//!
//! Reading order: columns right to left, each read downwards. A vertical
//! domino is read once at its top box; a horizontal domino is read at its
//! left box and its right box is skipped.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use crate::lr::{enumerate_ab_birectangular, is_latticed};
use crate::partition::{partitions_of, Partition};
use crate::schur::SchurExpansion;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DominoError {
    #[error("inner partition must be (2) or (1,1), got {0}")]
    UnsupportedInner(Partition),
    #[error("plethysm with an empty inner partition")]
    EmptyInner,
    #[error("φ_{index} = {value} exceeds μ_{index} = {bound}")]
    OutOfRange {
        index: usize,
        value: usize,
        bound: usize,
    },
    #[error("shift-symmetric partition needs distinct parts, got {0}")]
    RepeatedParts(Partition),
    #[error("outer partition {0} is not linear")]
    NonLinearOuter(Partition),
    #[error("tiles do not partition the doubled diagram: {0}")]
    InvalidTiling(String),
}

/// A domino anchored at its top-left box.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Domino {
    pub row: usize,
    pub col: usize,
    pub horizontal: bool,
}

impl Domino {
    pub fn cells(&self) -> [(usize, usize); 2] {
        if self.horizontal {
            [(self.row, self.col), (self.row, self.col + 1)]
        } else {
            [(self.row, self.col), (self.row + 1, self.col)]
        }
    }

    fn reading_key(&self) -> (std::cmp::Reverse<usize>, usize) {
        (std::cmp::Reverse(self.col), self.row)
    }
}

/// Row lengths of the doubled diagram.
pub fn doubled_rows(mu: &Partition) -> Vec<usize> {
    mu.parts().iter().flat_map(|&p| [2 * p, 2 * p]).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DominoDiagram {
    base: Partition,
    tiles: Vec<Domino>,
}

impl DominoDiagram {
    pub fn new(base: Partition, mut tiles: Vec<Domino>) -> Result<Self, DominoError> {
        let rows = doubled_rows(&base);
        let mut seen: Vec<Vec<bool>> = rows.iter().map(|&l| vec![false; l]).collect();
        for t in &tiles {
            for (r, c) in t.cells() {
                let slot = seen
                    .get_mut(r)
                    .and_then(|row| row.get_mut(c))
                    .ok_or_else(|| {
                        DominoError::InvalidTiling(format!("box ({r},{c}) outside the diagram"))
                    })?;
                if *slot {
                    return Err(DominoError::InvalidTiling(format!(
                        "box ({r},{c}) covered twice"
                    )));
                }
                *slot = true;
            }
        }
        if seen.iter().flatten().any(|&b| !b) {
            return Err(DominoError::InvalidTiling("uncovered box".into()));
        }
        tiles.sort_unstable();
        let d = DominoDiagram { base, tiles };
        assert!(
            d.horizontal_count().is_multiple_of(2),
            "odd number of horizontal dominoes"
        );
        Ok(d)
    }

    pub fn base(&self) -> &Partition {
        &self.base
    }

    /// Tiles sorted by anchor, row-major.
    pub fn tiles(&self) -> &[Domino] {
        &self.tiles
    }

    pub fn horizontal_count(&self) -> usize {
        self.tiles.iter().filter(|t| t.horizontal).count()
    }

    /// `(horizontal count / 2) mod 2`.
    pub fn parity(&self) -> usize {
        (self.horizontal_count() / 2) % 2
    }

    pub fn is_even(&self) -> bool {
        self.parity() == 0
    }

    /// Tile indices in reading order.
    pub fn reading_order(&self) -> Vec<usize> {
        let mut idx: Vec<usize> = (0..self.tiles.len()).collect();
        idx.sort_by_key(|&i| self.tiles[i].reading_key());
        idx
    }

    /// Grid of tile indices covering each box.
    fn cover(&self) -> Vec<Vec<usize>> {
        let mut grid: Vec<Vec<usize>> = doubled_rows(&self.base)
            .iter()
            .map(|&l| vec![usize::MAX; l])
            .collect();
        for (i, t) in self.tiles.iter().enumerate() {
            for (r, c) in t.cells() {
                grid[r][c] = i;
            }
        }
        grid
    }

    /// Pairs `(i, j, strict)` meaning `label(i) ≤ label(j)`, or `<` when strict.
    fn constraints(&self) -> Vec<(usize, usize, bool)> {
        let grid = self.cover();
        let mut out = Vec::new();
        for (r, row) in grid.iter().enumerate() {
            for (c, &here) in row.iter().enumerate() {
                if let Some(&right) = row.get(c + 1) {
                    if right != here {
                        out.push((here, right, false));
                    }
                }
                if let Some(&below) = grid.get(r + 1).and_then(|g| g.get(c)) {
                    if below != here {
                        out.push((here, below, true));
                    }
                }
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }
}

/// All tilings of the doubled diagram of μ, in a canonical order.
///
/// The first untiled box in row-major order is covered either horizontally
/// or vertically, so every tiling arises exactly once.
pub fn enumerate_domino_diagrams(mu: &Partition) -> Vec<DominoDiagram> {
    let rows = doubled_rows(mu);
    let mut covered: Vec<Vec<bool>> = rows.iter().map(|&l| vec![false; l]).collect();
    let mut tiles = Vec::new();
    let mut out = Vec::new();
    fn go(
        rows: &[usize],
        covered: &mut Vec<Vec<bool>>,
        tiles: &mut Vec<Domino>,
        start: (usize, usize),
        mu: &Partition,
        out: &mut Vec<DominoDiagram>,
    ) {
        let (mut r, mut c) = start;
        loop {
            if r == rows.len() {
                let mut t = tiles.clone();
                t.sort_unstable();
                out.push(DominoDiagram {
                    base: mu.clone(),
                    tiles: t,
                });
                return;
            }
            if c == rows[r] {
                r += 1;
                c = 0;
                continue;
            }
            if !covered[r][c] {
                break;
            }
            c += 1;
        }
        if c + 1 < rows[r] && !covered[r][c + 1] {
            covered[r][c] = true;
            covered[r][c + 1] = true;
            tiles.push(Domino {
                row: r,
                col: c,
                horizontal: true,
            });
            go(rows, covered, tiles, (r, c + 2), mu, out);
            tiles.pop();
            covered[r][c] = false;
            covered[r][c + 1] = false;
        }
        if r + 1 < rows.len() && c < rows[r + 1] {
            covered[r][c] = true;
            covered[r + 1][c] = true;
            tiles.push(Domino {
                row: r,
                col: c,
                horizontal: false,
            });
            go(rows, covered, tiles, (r, c + 1), mu, out);
            tiles.pop();
            covered[r][c] = false;
            covered[r + 1][c] = false;
        }
    }
    go(&rows, &mut covered, &mut tiles, (0, 0), mu, &mut out);
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DominoTableau {
    diagram: DominoDiagram,
    /// Parallel to `diagram.tiles()`.
    labels: Vec<usize>,
}

impl DominoTableau {
    pub fn new(diagram: DominoDiagram, labels: Vec<usize>) -> Option<Self> {
        (labels.len() == diagram.tiles.len() && labels.iter().all(|&l| l >= 1))
            .then_some(DominoTableau { diagram, labels })
    }

    /// Builds a tableau from `(row, col, horizontal, label)` tuples.
    pub fn from_tiles(
        base: Partition,
        tiles: &[(usize, usize, bool, usize)],
    ) -> Result<Self, DominoError> {
        let mut sorted = tiles.to_vec();
        sorted.sort_unstable_by_key(|&(r, c, h, _)| Domino {
            row: r,
            col: c,
            horizontal: h,
        });
        let diagram = DominoDiagram::new(
            base,
            sorted
                .iter()
                .map(|&(row, col, horizontal, _)| Domino {
                    row,
                    col,
                    horizontal,
                })
                .collect(),
        )?;
        let labels = sorted.iter().map(|t| t.3).collect();
        DominoTableau::new(diagram, labels)
            .ok_or_else(|| DominoError::InvalidTiling("labels must be positive".into()))
    }

    pub fn diagram(&self) -> &DominoDiagram {
        &self.diagram
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn is_even(&self) -> bool {
        self.diagram.is_even()
    }

    pub fn weight(&self) -> Vec<usize> {
        let mut w = vec![0; self.labels.iter().copied().max().unwrap_or(0)];
        for &l in &self.labels {
            w[l - 1] += 1;
        }
        w
    }

    pub fn is_semistandard(&self) -> bool {
        self.diagram.constraints().iter().all(|&(i, j, strict)| {
            let (a, b) = (self.labels[i], self.labels[j]);
            if strict {
                a < b
            } else {
                a <= b
            }
        })
    }

    pub fn reading_word(&self) -> Vec<usize> {
        self.diagram
            .reading_order()
            .into_iter()
            .map(|i| self.labels[i])
            .collect()
    }

    /// ASCII picture: `|n` marks the top of a vertical domino and `^` its
    /// bottom, `[n` the left box of a horizontal domino and `]` its right box.
    pub fn render_ascii(&self) -> String {
        let rows = doubled_rows(&self.diagram.base);
        let mut grid: Vec<Vec<String>> = rows.iter().map(|&l| vec![String::new(); l]).collect();
        for (t, &l) in self.diagram.tiles.iter().zip(&self.labels) {
            let [a, b] = t.cells();
            if t.horizontal {
                grid[a.0][a.1] = format!("[{l}");
                grid[b.0][b.1] = "]".into();
            } else {
                grid[a.0][a.1] = format!("|{l}");
                grid[b.0][b.1] = "^".into();
            }
        }
        let width = grid.iter().flatten().map(|s| s.len()).max().unwrap_or(1);
        grid.iter()
            .map(|row| {
                row.iter()
                    .map(|s| format!("{s:<width$}"))
                    .collect::<Vec<_>>()
                    .join(" ")
                    .trim_end()
                    .to_string()
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}

impl fmt::Display for DominoTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_ascii())
    }
}

/// The reading word `R(T)`.
pub fn domino_reading_word(t: &DominoTableau) -> Vec<usize> {
    t.reading_word()
}

/// The tableau `T_φ`: in rows `2i−1, 2i` the first `φ_i` of the 2×2 blocks
/// are split vertically and the rest horizontally; each domino is labelled by
/// the number of dominoes meeting its column at or above it.
pub fn top_filling(mu: &Partition, phi: &[usize]) -> Result<DominoTableau, DominoError> {
    for (i, &f) in phi.iter().enumerate() {
        if f > mu.part(i) {
            return Err(DominoError::OutOfRange {
                index: i + 1,
                value: f,
                bound: mu.part(i),
            });
        }
    }
    let mut tiles = Vec::new();
    for (i, &m) in mu.parts().iter().enumerate() {
        let f = phi.get(i).copied().unwrap_or(0);
        for j in 0..m {
            let (r, c) = (2 * i, 2 * j);
            if j < f {
                tiles.push(Domino {
                    row: r,
                    col: c,
                    horizontal: false,
                });
                tiles.push(Domino {
                    row: r,
                    col: c + 1,
                    horizontal: false,
                });
            } else {
                tiles.push(Domino {
                    row: r,
                    col: c,
                    horizontal: true,
                });
                tiles.push(Domino {
                    row: r + 1,
                    col: c,
                    horizontal: true,
                });
            }
        }
    }
    let diagram = DominoDiagram::new(mu.clone(), tiles)?;
    let grid = diagram.cover();
    let labels = diagram
        .tiles
        .iter()
        .map(|t| {
            let (r, c) = (t.row, t.col);
            let mut above: Vec<usize> = (0..=r).map(|i| grid[i][c]).collect();
            above.dedup();
            above.len()
        })
        .collect();
    Ok(DominoTableau { diagram, labels })
}

// --- counting ---------------------------------------------------------------

/// Weight → (even count, odd count).
type Tally = HashMap<Vec<usize>, [u64; 2]>;

/// Latticed semistandard labellings of one fixed diagram.
pub fn latticed_tableaux(
    diagram: &DominoDiagram,
    weight: Option<&Partition>,
) -> Vec<DominoTableau> {
    let order = diagram.reading_order();
    let n = order.len();
    let mut pos = vec![0usize; n];
    for (p, &i) in order.iter().enumerate() {
        pos[i] = p;
    }
    // constraints against earlier dominoes, indexed by the later one
    let mut checks: Vec<Vec<(usize, bool, bool)>> = vec![Vec::new(); n];
    for (i, j, strict) in diagram.constraints() {
        // label(i) ≤/< label(j)
        if pos[i] < pos[j] {
            checks[j].push((i, strict, true));
        } else {
            checks[i].push((j, strict, false));
        }
    }
    let cap: Option<Vec<usize>> = weight.map(|w| w.parts().to_vec());
    let mut labels = vec![0usize; n];
    let mut count = vec![0usize; n + 2];
    let mut out = Vec::new();
    #[allow(clippy::too_many_arguments)]
    fn go(
        p: usize,
        order: &[usize],
        checks: &[Vec<(usize, bool, bool)>],
        cap: &Option<Vec<usize>>,
        labels: &mut Vec<usize>,
        count: &mut Vec<usize>,
        diagram: &DominoDiagram,
        out: &mut Vec<DominoTableau>,
    ) {
        if p == order.len() {
            if cap
                .as_ref()
                .is_none_or(|w| w.iter().enumerate().all(|(k, &x)| count[k + 1] == x))
            {
                out.push(DominoTableau {
                    diagram: diagram.clone(),
                    labels: labels.clone(),
                });
            }
            return;
        }
        let d = order[p];
        for k in 1..=p + 1 {
            if count[k - 1] == 0 {
                break;
            }
            if count[k] >= count[k - 1] {
                continue;
            }
            if let Some(w) = cap {
                if count[k] >= w.get(k - 1).copied().unwrap_or(0) {
                    continue;
                }
            }
            let ok = checks[d].iter().all(|&(e, strict, e_first)| {
                let (a, b) = if e_first {
                    (labels[e], k)
                } else {
                    (k, labels[e])
                };
                if strict {
                    a < b
                } else {
                    a <= b
                }
            });
            if !ok {
                continue;
            }
            labels[d] = k;
            count[k] += 1;
            go(p + 1, order, checks, cap, labels, count, diagram, out);
            count[k] -= 1;
        }
        labels[d] = 0;
    }
    // count[0] acts as an unbounded sentinel for label 1
    count[0] = usize::MAX;
    go(
        0,
        &order,
        &checks,
        &cap,
        &mut labels,
        &mut count,
        diagram,
        &mut out,
    );
    out
}

/// Two-phase count: enumerate every diagram, then label each one.
pub fn domino_tally_two_phase(mu: &Partition) -> Tally {
    let mut tally = Tally::new();
    for d in enumerate_domino_diagrams(mu) {
        let parity = d.parity();
        for t in latticed_tableaux(&d, None) {
            tally.entry(t.weight()).or_default()[parity] += 1;
        }
    }
    tally
}

struct JointSearch<'a> {
    heights: Vec<usize>,
    /// Boxes in reading order.
    order: Vec<(usize, usize)>,
    cover: Vec<Vec<usize>>,
    tiles: Vec<(Domino, usize)>,
    count: Vec<usize>,
    horizontals: usize,
    cap: Option<&'a [usize]>,
    tally: Tally,
}

const NONE: usize = usize::MAX;

impl JointSearch<'_> {
    fn label_ok(&self, tile: usize, k: usize) -> bool {
        let (d, _) = self.tiles[tile];
        for (r, c) in d.cells() {
            let look =
                |rr: Option<usize>, cc: Option<usize>, rel: fn(usize, usize) -> bool| -> bool {
                    let (Some(rr), Some(cc)) = (rr, cc) else {
                        return true;
                    };
                    let Some(&e) = self.cover.get(rr).and_then(|row| row.get(cc)) else {
                        return true;
                    };
                    if e == NONE || e == tile || self.tiles[e].1 == 0 {
                        return true;
                    }
                    rel(self.tiles[e].1, k)
                };
            if !look(Some(r), c.checked_sub(1), |e, k| e <= k)
                || !look(Some(r), Some(c + 1), |e, k| k <= e)
                || !look(r.checked_sub(1), Some(c), |e, k| e < k)
                || !look(Some(r + 1), Some(c), |e, k| k < e)
            {
                return false;
            }
        }
        true
    }

    fn labels_for(&self, tile: usize) -> Vec<usize> {
        let mut out = Vec::new();
        for k in 1.. {
            if self.count[k - 1] == 0 {
                break;
            }
            if self.count[k] >= self.count[k - 1] {
                continue;
            }
            if let Some(w) = self.cap {
                if self.count[k] >= w.get(k - 1).copied().unwrap_or(0) {
                    continue;
                }
            }
            if self.label_ok(tile, k) {
                out.push(k);
            }
        }
        out
    }

    fn with_label(&mut self, tile: usize, p: usize) {
        for k in self.labels_for(tile) {
            self.tiles[tile].1 = k;
            self.count[k] += 1;
            self.step(p + 1);
            self.count[k] -= 1;
        }
        self.tiles[tile].1 = 0;
    }

    fn step(&mut self, p: usize) {
        if p == self.order.len() {
            let top = (1..self.count.len())
                .take_while(|&k| self.count[k] > 0)
                .count();
            let w: Vec<usize> = self.count[1..=top].to_vec();
            if self.cap.is_none_or(|c| c == w.as_slice()) {
                self.tally.entry(w).or_default()[(self.horizontals / 2) % 2] += 1;
            }
            return;
        }
        let (r, c) = self.order[p];
        let here = self.cover[r][c];
        if here != NONE {
            let (d, _) = self.tiles[here];
            if d.horizontal && d.col == c {
                self.with_label(here, p);
            } else {
                self.step(p + 1);
            }
            return;
        }
        let t = self.tiles.len();
        if r + 1 < self.heights[c] && self.cover[r + 1][c] == NONE {
            self.tiles.push((
                Domino {
                    row: r,
                    col: c,
                    horizontal: false,
                },
                0,
            ));
            self.cover[r][c] = t;
            self.cover[r + 1][c] = t;
            self.with_label(t, p);
            self.cover[r][c] = NONE;
            self.cover[r + 1][c] = NONE;
            self.tiles.pop();
        }
        if c >= 1 {
            // the label is chosen when the left box is read
            self.tiles.push((
                Domino {
                    row: r,
                    col: c - 1,
                    horizontal: true,
                },
                0,
            ));
            self.cover[r][c] = t;
            self.cover[r][c - 1] = t;
            self.horizontals += 1;
            self.step(p + 1);
            self.horizontals -= 1;
            self.cover[r][c] = NONE;
            self.cover[r][c - 1] = NONE;
            self.tiles.pop();
        }
    }
}

/// Single-pass count building tilings and labels together in reading order,
/// so lattice pruning applies before a tiling is complete.
pub fn domino_tally(mu: &Partition, weight: Option<&Partition>) -> Tally {
    let rows = doubled_rows(mu);
    let width = rows.first().copied().unwrap_or(0);
    let heights: Vec<usize> = (0..width)
        .map(|c| rows.iter().filter(|&&l| l > c).count())
        .collect();
    let order = (0..width)
        .rev()
        .flat_map(|c| (0..heights[c]).map(move |r| (r, c)))
        .collect();
    let mut count = vec![0usize; 2 * mu.size() + 2];
    count[0] = usize::MAX;
    let mut search = JointSearch {
        heights,
        order,
        cover: rows.iter().map(|&l| vec![NONE; l]).collect(),
        tiles: Vec::new(),
        count,
        horizontals: 0,
        cap: weight.map(|w| w.parts()),
        tally: Tally::new(),
    };
    search.step(0);
    search.tally
}

fn tally_to_expansion(tally: &Tally, parity: usize) -> SchurExpansion {
    let mut out = SchurExpansion::zero();
    for (w, counts) in tally {
        if counts[parity] > 0 {
            let lambda = Partition::new(w.clone()).expect("latticed words have partition weight");
            out.add_term(lambda, BigInt::from(counts[parity]));
        }
    }
    out
}

fn parity_of(nu: &Partition) -> Result<usize, DominoError> {
    match nu.parts() {
        [2] => Ok(0),
        [1, 1] => Ok(1),
        _ => Err(DominoError::UnsupportedInner(nu.clone())),
    }
}

/// `s_ν∘s_μ` for `ν ⊢ 2` by the domino rule alone, with no fast paths.
pub fn domino_plethysm_generic(
    mu: &Partition,
    nu: &Partition,
) -> Result<SchurExpansion, DominoError> {
    let parity = parity_of(nu)?;
    if mu.is_empty() {
        return Err(DominoError::EmptyInner);
    }
    Ok(tally_to_expansion(&domino_tally(mu, None), parity))
}

/// The coefficient of `s_λ` in `s_ν∘s_μ` by the domino rule.
pub fn domino_coefficient(
    mu: &Partition,
    nu: &Partition,
    lambda: &Partition,
) -> Result<u64, DominoError> {
    let parity = parity_of(nu)?;
    if lambda.size() != 2 * mu.size() {
        return Ok(0);
    }
    Ok(domino_tally(mu, Some(lambda))
        .get(lambda.parts())
        .map_or(0, |c| c[parity]))
}

/// `s_ν∘s_(a^b)`: the (a,b)-birectangular λ with `λ1+…+λb` even for `ν=(2)`,
/// odd for `ν=(1²)`.
pub fn rectangle_plethysm(
    a: usize,
    b: usize,
    nu: &Partition,
) -> Result<SchurExpansion, DominoError> {
    let parity = parity_of(nu)?;
    Ok(SchurExpansion::sum_of(
        enumerate_ab_birectangular(a, b)
            .into_iter()
            .filter(|l| l.parts().iter().take(b).sum::<usize>() % 2 == parity),
    ))
}

/// `s_ν∘s_μ` for `ν ∈ {(2),(1²)}` with the rectangle and `|μ|=2` shortcuts.
pub fn plethysm_two(mu: &Partition, nu: &Partition) -> Result<SchurExpansion, DominoError> {
    parity_of(nu)?;
    if mu.is_empty() {
        return Err(DominoError::EmptyInner);
    }
    if mu.is_rectangular() {
        return rectangle_plethysm(mu.first(), mu.length(), nu);
    }
    domino_plethysm_generic(mu, nu)
}

// --- closed forms ---------------------------------------------------------------

/// Even partitions of `2h`.
pub fn even_partitions(h: usize) -> Vec<Partition> {
    partitions_of(h)
        .into_iter()
        .map(|p| p.scale_parts(2))
        .collect()
}

/// `ss[α]`: rows `α_i + i` and columns `α_i + i − 1` on the diagonal hooks.
pub fn shift_symmetric(alpha: &Partition) -> Result<Partition, DominoError> {
    let a = alpha.parts();
    if a.windows(2).any(|w| w[0] == w[1]) {
        return Err(DominoError::RepeatedParts(alpha.clone()));
    }
    // Frobenius coordinates (α_i | α_i − 1)
    let d = a.len();
    let len = if d == 0 { 0 } else { a[0] + d - 1 + 1 };
    let mut rows = vec![0usize; len.max(d)];
    for (i, &ai) in a.iter().enumerate() {
        rows[i] = ai + i + 1;
        // column i has length α_i + i; rows below the diagonal gain a box
        for row in rows.iter_mut().take(ai + i).skip(d) {
            *row += 1;
        }
    }
    Ok(Partition::from_multiset(rows))
}

/// Partitions of `h` into distinct parts.
fn strict_partitions(h: usize) -> Vec<Partition> {
    partitions_of(h)
        .into_iter()
        .filter(|p| p.parts().windows(2).all(|w| w[0] > w[1]))
        .collect()
}

/// `{ ss[α] : α ⊢ h with distinct parts }`.
pub fn shift_symmetric_set(h: usize) -> Vec<Partition> {
    let mut out: Vec<Partition> = strict_partitions(h)
        .iter()
        .map(|a| shift_symmetric(a).expect("distinct parts"))
        .collect();
    out.sort();
    out
}

/// `s_ν∘s_κ` for `κ ∈ {(2),(1²)}` and linear `ν`.
pub fn closed_form_plethysm(
    inner: &Partition,
    outer: &Partition,
) -> Result<SchurExpansion, DominoError> {
    let conj = parity_of(inner)? == 1;
    if outer.is_empty() {
        return Ok(SchurExpansion::one());
    }
    let h = outer.size();
    let base = if outer.is_row() {
        even_partitions(h)
    } else if outer.is_column() {
        shift_symmetric_set(h)
    } else {
        return Err(DominoError::NonLinearOuter(outer.clone()));
    };
    Ok(SchurExpansion::sum_of(base.into_iter().map(|l| {
        if conj {
            l.conjugate()
        } else {
            l
        }
    })))
}

/// Weights of the latticed even/odd tableaux of one diagram, for display.
pub fn diagram_summary(d: &DominoDiagram) -> BTreeMap<Partition, usize> {
    let mut out = BTreeMap::new();
    for t in latticed_tableaux(d, None) {
        *out.entry(Partition::new(t.weight()).expect("partition weight"))
            .or_default() += 1;
    }
    out
}

/// Checks the three tableau conditions of the domino rule.
pub fn is_admissible(t: &DominoTableau) -> bool {
    t.is_semistandard() && is_latticed(&t.reading_word())
}
