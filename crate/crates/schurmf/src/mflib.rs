//! Closed-form multiplicity-freeness predicates and the birectangular
//! results. Every predicate here is decided by shape alone; the brute-force
//! counterparts live in [`crate::charoracle`], [`crate::lr`] and [`crate::domino`].

use std::collections::BTreeSet;
use std::sync::OnceLock;

use num_traits::One;
use serde::Serialize;
use thiserror::Error;

use crate::charoracle::{plethysm_capped, OracleError, DEFAULT_DEGREE_CAP};
use crate::partition::{parse_partition_prefix, partitions_of, Partition};
use crate::schur::SchurExpansion;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MfError {
    #[error("input is not multiplicity-free: coefficient ≥ 2 at s{0}")]
    NotMultiplicityFree(Partition),
    #[error("a and b must differ")]
    EqualSides,
    #[error("malformed family fixture at line {line}: {msg}")]
    Fixture { line: usize, msg: String },
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

/// A yes/no answer with an offending constituent when one is at hand.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MfVerdict {
    pub verdict: bool,
    pub witness: Option<Partition>,
}

impl MfVerdict {
    pub fn yes() -> Self {
        MfVerdict {
            verdict: true,
            witness: None,
        }
    }

    pub fn of(x: &SchurExpansion) -> Self {
        let witness = x
            .terms()
            .find(|(_, c)| **c > One::one())
            .map(|(p, _)| p.clone());
        MfVerdict {
            verdict: witness.is_none(),
            witness,
        }
    }
}

// --- products and plethysms ---------------------------------------------------

/// Whether `s_μ s_ν` is multiplicity-free.
pub fn stembridge_mf(mu: &Partition, nu: &Partition) -> bool {
    let one_way = |x: &Partition, y: &Partition| {
        x.is_linear()
            || (x.is_two_rectangular() && y.is_fat_hook())
            || (x.is_rectangular() && (y.is_near_rectangular() || y.is_rectangular()))
    };
    mu.is_empty() || nu.is_empty() || one_way(mu, nu) || one_way(nu, mu)
}

/// Shape cases of the plethysm classification: `h=2` with μ rectangular,
/// almost rectangular or a hook; or `m=2` with ν linear.
pub fn bbp_shape_case(mu: &Partition, nu: &Partition) -> bool {
    (nu.size() == 2 && (mu.is_rectangular() || mu.is_almost_rectangular() || mu.is_hook()))
        || (mu.size() == 2 && nu.is_linear())
}

/// Whether `s_ν∘s_μ` is multiplicity-free.
pub fn bbp_mf(mu: &Partition, nu: &Partition) -> bool {
    if mu.size() <= 1 || nu.size() <= 1 {
        // s_ν∘s_(1) = s_ν and s_(1)∘s_μ = s_μ
        return true;
    }
    if bbp_shape_case(mu, nu) {
        return true;
    }
    mu.size() * nu.size() <= DEFAULT_DEGREE_CAP
        && small_plethysm_family()
            .iter()
            .any(|(m, n)| m == mu && n == nu)
}

const FAMILY_FIXTURE: &str = include_str!("../fixtures/small_plethysm_family.txt");

/// Every `(μ, ν)` with `|μ|,|ν| ≥ 2`, `|μ||ν| ≤ 18` and `s_ν∘s_μ`
/// multiplicity-free, by brute force over the character oracle.
pub fn compute_small_plethysm_family() -> Result<Vec<(Partition, Partition)>, MfError> {
    let mut pairs = Vec::new();
    for m in 2..=DEFAULT_DEGREE_CAP / 2 {
        for h in 2..=DEFAULT_DEGREE_CAP / m {
            for mu in partitions_of(m) {
                for nu in partitions_of(h) {
                    pairs.push((mu.clone(), nu));
                }
            }
        }
    }
    // biggest degrees first so the expensive tables are built early
    pairs.sort_by_key(|(a, b)| std::cmp::Reverse(a.size() * b.size()));
    let verdicts = par_filter(&pairs, |(mu, nu)| {
        plethysm_capped(mu, nu, DEFAULT_DEGREE_CAP)
            .map_err(MfError::from)
            .and_then(|x| {
                x.is_multiplicity_free()
                    .map_err(|_| unreachable!("plethysms are Schur positive"))
            })
    })?;
    let mut out: Vec<(Partition, Partition)> = pairs
        .into_iter()
        .zip(verdicts)
        .filter(|(_, ok)| *ok)
        .map(|(p, _)| p)
        .collect();
    out.sort();
    Ok(out)
}

#[cfg(feature = "parallel")]
fn par_filter<T: Sync>(
    items: &[T],
    f: impl Fn(&T) -> Result<bool, MfError> + Sync,
) -> Result<Vec<bool>, MfError> {
    use rayon::prelude::*;
    items.par_iter().map(&f).collect()
}

#[cfg(not(feature = "parallel"))]
fn par_filter<T>(
    items: &[T],
    f: impl Fn(&T) -> Result<bool, MfError>,
) -> Result<Vec<bool>, MfError> {
    items.iter().map(f).collect()
}

/// The pairs of a family not already covered by [`bbp_shape_case`].
pub fn exclusive_family(all: &[(Partition, Partition)]) -> Vec<(Partition, Partition)> {
    all.iter()
        .filter(|(m, n)| !bbp_shape_case(m, n))
        .cloned()
        .collect()
}

/// The residual family (pairs outside the shape cases), loaded from the
/// bundled fixture.
pub fn small_plethysm_family() -> &'static [(Partition, Partition)] {
    static FAMILY: OnceLock<Vec<(Partition, Partition)>> = OnceLock::new();
    FAMILY.get_or_init(|| {
        parse_family(FAMILY_FIXTURE).expect("bundled family fixture is well formed")
    })
}

/// One `mu=[..] nu=[..]` line per pair.
pub fn format_family(pairs: &[(Partition, Partition)]) -> String {
    pairs
        .iter()
        .map(|(m, n)| format!("mu={m} nu={n}\n"))
        .collect()
}

pub fn parse_family(text: &str) -> Result<Vec<(Partition, Partition)>, MfError> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let bad = |msg: &str| MfError::Fixture {
            line: i + 1,
            msg: msg.to_string(),
        };
        let rest = line
            .strip_prefix("mu=")
            .ok_or_else(|| bad("expected mu="))?;
        let (mu, used) = parse_partition_prefix(rest, 0).map_err(|e| bad(&e.to_string()))?;
        let rest = rest[used..]
            .trim_start()
            .strip_prefix("nu=")
            .ok_or_else(|| bad("expected nu="))?;
        let (nu, used) = parse_partition_prefix(rest, 0).map_err(|e| bad(&e.to_string()))?;
        if !rest[used..].trim().is_empty() {
            return Err(bad("trailing input"));
        }
        out.push((mu, nu));
    }
    Ok(out)
}

/// Whether `s_λ (s_ν∘s_μ)` is multiplicity-free, for `ν ⊢ 2`, `|μ| ≥ 2`.
pub fn mf_product_with_wreath2(lambda: &Partition, mu: &Partition, nu: &Partition) -> bool {
    let k = lambda.size();
    (lambda.is_column() && mu.is_row())
        || (lambda.is_row() && mu.is_column())
        || (k == 1 && mu.is_rectangular())
        || (mu.size() == 2 && lambda.is_rectangular() && nu.parts() == [1, 1])
}

/// Whether `s_λ (s_ν∘s_(2))` is multiplicity-free, for `|ν| ≥ 3`.
pub fn mf_product_with_2wreath(lambda: &Partition, nu: &Partition) -> bool {
    let h = nu.size();
    lambda.is_column()
        && (nu.is_row()
            || (lambda.size() == 1 && nu.is_column())
            || (nu.is_column() && (h == 3 || h == 4)))
}

/// Whether `s_(1^k) x` is multiplicity-free, judged from the constituents of
/// a multiplicity-free `x`: distinct constituents must be more than `2k`
/// apart or differ by at least 2 in some part.
pub fn pieri_application_mf(x: &SchurExpansion, k: usize) -> Result<bool, MfError> {
    if let Some(w) = MfVerdict::of(x).witness {
        return Err(MfError::NotMultiplicityFree(w));
    }
    let support: Vec<&Partition> = x.support().collect();
    for (i, mu) in support.iter().enumerate() {
        for nu in &support[i + 1..] {
            let len = mu.length().max(nu.length());
            let far = (0..len).any(|j| mu.part(j).abs_diff(nu.part(j)) >= 2);
            if !far && mu.l1_distance(nu) <= 2 * k {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

// --- birectangular partitions -----------------------------------------------

/// The unique partition that is both (a,b)- and (b,a)-birectangular, if any.
pub fn conjugate_birectangular(a: usize, b: usize) -> Result<Option<Partition>, MfError> {
    if a == b {
        return Err(MfError::EqualSides);
    }
    let (hi, lo) = (a.max(b), a.min(b));
    let d = hi - lo;
    if hi % d != 0 {
        return Ok(None);
    }
    let parts = (1..=lo / d)
        .rev()
        .flat_map(|j| std::iter::repeat_n(2 * j * d, 2 * d))
        .collect();
    Ok(Some(
        Partition::new(parts).expect("non-increasing by construction"),
    ))
}

/// The unique partition that is both (a,b)- and {a,b}-birectangular, if any;
/// `None` also when `a ≤ b`.
pub fn conjugate_set_birectangular(a: usize, b: usize) -> Option<Partition> {
    if a <= b || b == 0 {
        return None;
    }
    let d = a - b;
    if !a.is_multiple_of(d) {
        return None;
    }
    let mut parts = Vec::new();
    let mut v = a + b;
    while v >= b + 2 * d {
        parts.extend(std::iter::repeat_n(v, d));
        v -= d;
    }
    let mut v = b;
    while v >= d {
        parts.extend(std::iter::repeat_n(v, d));
        v -= d;
    }
    Some(Partition::new(parts).expect("non-increasing by construction"))
}

/// `2r(d−r)` with `d = a−b` and `r = a mod d`, for `a > b`.
pub fn perturbation_threshold(a: usize, b: usize) -> Result<usize, MfError> {
    if a == b {
        return Err(MfError::EqualSides);
    }
    let (a, b) = (a.max(b), a.min(b));
    let d = a - b;
    let r = a % d;
    Ok(2 * r * (d - r))
}

/// Whether some (a,b)-birectangular μ and (b,a)-birectangular ν satisfy
/// `|μ−ν| ≤ 2t`.
pub fn close_birectangular_pair_exists(a: usize, b: usize, t: usize) -> Result<bool, MfError> {
    Ok(t >= perturbation_threshold(a, b)?)
}

/// Explicit pair attaining the threshold: `μ` is (a,b)-birectangular, `ν`
/// is (b,a)-birectangular and `|μ−ν| = 4r(d−r)`. Requires `a > b`.
pub fn close_birectangular_witness(a: usize, b: usize) -> Result<(Partition, Partition), MfError> {
    if a <= b {
        return Err(MfError::EqualSides);
    }
    if a >= 2 * b {
        // a long rectangle against a two-block birectangle
        let mu = [vec![2 * a - 2 * b; b], vec![2 * b; b]].concat();
        return Ok((Partition::from_multiset(mu), Partition::rectangle(2 * b, a)));
    }
    let d = a - b;
    let (q, r) = (a / d, a % d);
    let mut mu = Vec::new();
    // blocks alternate between 2r and 2(d−r) rows, values falling by d
    let mut step = 2 * q - 1;
    while step >= 1 {
        let (value, rows) = if (2 * q - 1 - step) % 2 == 0 {
            (step * d + r, 2 * r)
        } else {
            (step * d + r, 2 * (d - r))
        };
        mu.extend(std::iter::repeat_n(value, rows));
        step -= 1;
    }
    let mut nu = mu.clone();
    for x in nu.iter_mut().take(2 * d) {
        *x = (2 * q - 2) * d + 2 * r;
    }
    while nu.len() < 2 * d {
        nu.push((2 * q - 2) * d + 2 * r);
    }
    let clean = |v: Vec<usize>| Partition::from_multiset(v);
    Ok((clean(mu), clean(nu)))
}

/// Pairs `(a,b)` reported by the CLI: the conjugate birectangle and the threshold.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BirectReport {
    pub a: usize,
    pub b: usize,
    pub common: Option<Partition>,
    pub common_set: Option<Partition>,
    pub threshold: usize,
}

pub fn birect_report(a: usize, b: usize) -> Result<BirectReport, MfError> {
    Ok(BirectReport {
        a,
        b,
        common: conjugate_birectangular(a, b)?,
        common_set: conjugate_set_birectangular(a.max(b), a.min(b)),
        threshold: perturbation_threshold(a, b)?,
    })
}

/// The partition `β = ((a+a′)^{b′−b}, α_1+a′−a, …, α_{b+b′}+a′−a)` that
/// lifts a constituent of `s_μ²` for a smaller almost rectangle to one of
/// `s_ν²` for a larger one.
pub fn lift_almost_rectangle_constituent(
    alpha: &Partition,
    a: usize,
    b: usize,
    a2: usize,
    b2: usize,
) -> Partition {
    let mut parts: Vec<usize> = std::iter::repeat_n(a + a2, b2 - b).collect();
    parts.extend((0..b + b2).map(|i| alpha.part(i) + a2 - a));
    Partition::from_multiset(parts)
}

/// Distinct pairs drawn from a set, in a stable order.
pub fn pairs_of<T: Ord + Clone>(items: &BTreeSet<T>) -> Vec<(T, T)> {
    let v: Vec<&T> = items.iter().collect();
    let mut out = Vec::new();
    for (i, x) in v.iter().enumerate() {
        for y in &v[i + 1..] {
            out.push(((*x).clone(), (*y).clone()));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn stembridge_examples() {
        assert!(stembridge_mf(&p("[5]"), &p("[3,2,1]")));
        assert!(stembridge_mf(&p("[2,2]"), &p("[3,3,1]")));
        assert!(!stembridge_mf(&p("[2,1]"), &p("[2,1]")));
    }

    #[test]
    fn birectangle_formulas() {
        assert_eq!(conjugate_birectangular(4, 2).unwrap(), Some(p("[4,4,4,4]")));
        assert_eq!(conjugate_birectangular(3, 2).unwrap(), Some(p("[4,4,2,2]")));
        assert_eq!(conjugate_birectangular(5, 3).unwrap(), None);
        assert_eq!(conjugate_birectangular(3, 3), Err(MfError::EqualSides));
        assert_eq!(conjugate_set_birectangular(2, 1), Some(p("[3,1]")));
        assert_eq!(conjugate_set_birectangular(4, 2), Some(p("[6,6,2,2]")));
        assert_eq!(conjugate_set_birectangular(5, 3), None);
        assert_eq!(perturbation_threshold(4, 2), Ok(0));
        assert_eq!(perturbation_threshold(5, 3), Ok(2));
        assert_eq!(close_birectangular_pair_exists(5, 3, 1), Ok(false));
        assert_eq!(close_birectangular_pair_exists(5, 3, 2), Ok(true));
    }

    #[test]
    fn wreath_products() {
        assert!(mf_product_with_wreath2(&p("[1,1,1]"), &p("[4]"), &p("[2]")));
        assert!(!mf_product_with_wreath2(&p("[2]"), &p("[3]"), &p("[2]")));
        assert!(mf_product_with_wreath2(&p("[1]"), &p("[3,3]"), &p("[1,1]")));
        assert!(mf_product_with_2wreath(&p("[1^5]"), &p("[4]")));
        assert!(!mf_product_with_2wreath(&p("[1,1]"), &p("[1^5]")));
        assert!(mf_product_with_2wreath(&p("[1,1]"), &p("[1^4]")));
    }

    #[test]
    fn fixture_round_trip() {
        let fam = small_plethysm_family();
        assert_eq!(parse_family(&format_family(fam)).unwrap(), fam);
        assert!(parse_family("mu=[2] nu=[2,").is_err());
    }
}
