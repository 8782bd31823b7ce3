//! Brute-force oracle built on symmetric-group character values: the
//! Murnaghan–Nakayama rule, the power-sum basis, general plethysm, and
//! involution counts.
//!
//! Nothing here uses the tableau machinery of [`crate::lr`] or
//! [`crate::domino`], so agreement between the two routes is meaningful.

use std::collections::{BTreeMap, HashMap};
use std::io::{Read, Write};
use std::path::PathBuf;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::partition::{partitions_of, Partition};
use crate::schur::SchurExpansion;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("size mismatch: |λ|={lambda} but |ρ|={rho}")]
    SizeMismatch { lambda: usize, rho: usize },
    #[error("degree {degree} exceeds the oracle cap {cap}")]
    DegreeCapExceeded { degree: usize, cap: usize },
    #[error("plethysm with an empty inner partition")]
    EmptyInner,
    #[error("non-integral Schur coefficient {value} at s{partition}")]
    NonIntegerCoefficient {
        partition: Partition,
        value: BigRational,
    },
    #[error("power-sum expansion is not homogeneous")]
    Inhomogeneous,
}

/// Default degree cap for [`plethysm`].
pub const DEFAULT_DEGREE_CAP: usize = 18;

/// Environment variable naming the on-disk cache directory.
pub const CACHE_ENV: &str = "SCHURMF_CACHE_DIR";

// --- Murnaghan–Nakayama ------------------------------------------------------

/// Beta-set of `λ` with `len` beads: `λ_i + len − i` for `i = 1..len`.
fn beta_set(lambda: &[usize], len: usize) -> Vec<usize> {
    (0..len)
        .map(|i| lambda.get(i).copied().unwrap_or(0) + len - 1 - i)
        .collect()
}

fn from_beta(beta: &[usize]) -> Vec<usize> {
    let len = beta.len();
    let mut parts: Vec<usize> = beta
        .iter()
        .enumerate()
        .map(|(i, &b)| b + i + 1 - len)
        .collect();
    while parts.last() == Some(&0) {
        parts.pop();
    }
    parts
}

type MnKey = (Vec<usize>, Vec<usize>);

fn mn_cache() -> &'static Mutex<HashMap<MnKey, i128>> {
    static CACHE: OnceLock<Mutex<HashMap<MnKey, i128>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

const MN_CACHE_LIMIT: usize = 1 << 22;

/// `χ^λ(ρ)` with `ρ` a non-increasing cycle type; strips the largest cycle first.
fn mn(lambda: &[usize], rho: &[usize]) -> i128 {
    if rho.is_empty() {
        return i128::from(lambda.is_empty());
    }
    if lambda.len() <= 1 {
        // trivial character
        return 1;
    }
    let key = (lambda.to_vec(), rho.to_vec());
    if let Some(&v) = mn_cache().lock().unwrap().get(&key) {
        return v;
    }
    let k = rho[0];
    let rest = &rho[1..];
    let beta = beta_set(lambda, lambda.len());
    let mut total = 0i128;
    for (idx, &b) in beta.iter().enumerate() {
        if b < k {
            continue;
        }
        let target = b - k;
        if beta.contains(&target) {
            continue;
        }
        // beads strictly between target and b give the leg length
        let leg = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut nb = beta.clone();
        nb[idx] = target;
        nb.sort_unstable_by(|x, y| y.cmp(x));
        let sub = from_beta(&nb);
        let v = mn(&sub, rest);
        total += if leg % 2 == 0 { v } else { -v };
    }
    let mut guard = mn_cache().lock().unwrap();
    if guard.len() >= MN_CACHE_LIMIT {
        guard.clear();
    }
    guard.insert(key, total);
    total
}

/// `χ^λ(ρ)`.
pub fn character_value(lambda: &Partition, rho: &Partition) -> Result<i128, OracleError> {
    if lambda.size() != rho.size() {
        return Err(OracleError::SizeMismatch {
            lambda: lambda.size(),
            rho: rho.size(),
        });
    }
    Ok(mn(lambda.parts(), rho.parts()))
}

/// `f^λ = χ^λ(1^n)`.
pub fn degree(lambda: &Partition) -> BigInt {
    // hook length formula keeps this exact for any size
    let n = lambda.size();
    let conj = lambda.conjugate();
    let mut num = factorial(n);
    for (i, &row) in lambda.parts().iter().enumerate() {
        for j in 0..row {
            let hook = row - j + conj.part(j) - i - 1;
            num /= BigInt::from(hook);
        }
    }
    num
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Centralizer order `z_ρ = Π_k k^{m_k} m_k!`.
pub fn z_order(rho: &Partition) -> BigInt {
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for &p in rho.parts() {
        *counts.entry(p).or_default() += 1;
    }
    counts.iter().fold(BigInt::one(), |acc, (&k, &m)| {
        acc * BigInt::from(k).pow(m as u32) * factorial(m)
    })
}

// --- character tables ---------------------------------------------------------

/// The full character table of `S_n`, rows and columns indexed by
/// [`partitions_of`] order.
#[derive(Debug)]
pub struct CharacterTable {
    pub n: usize,
    pub partitions: Vec<Partition>,
    index: HashMap<Partition, usize>,
    values: Vec<i128>,
}

impl CharacterTable {
    fn compute(n: usize) -> CharacterTable {
        let partitions = partitions_of(n);
        let k = partitions.len();
        let mut values = vec![0i128; k * k];
        for (i, l) in partitions.iter().enumerate() {
            for (j, r) in partitions.iter().enumerate() {
                values[i * k + j] = mn(l.parts(), r.parts());
            }
        }
        Self::assemble(n, partitions, values)
    }

    fn assemble(n: usize, partitions: Vec<Partition>, values: Vec<i128>) -> CharacterTable {
        let index = partitions
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();
        CharacterTable {
            n,
            partitions,
            index,
            values,
        }
    }

    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn value(&self, lambda: usize, rho: usize) -> i128 {
        self.values[lambda * self.partitions.len() + rho]
    }

    const MAGIC: &'static [u8; 8] = b"SCHURMFC";
    const VERSION: u32 = 1;

    /// Binary layout (little endian): magic, `u32` version, `u32` n,
    /// `u32` row count, then rows of `(u32 λ index, u32 ρ index, i64 value)`.
    pub fn write_to(&self, out: &mut impl Write) -> std::io::Result<()> {
        out.write_all(Self::MAGIC)?;
        out.write_all(&Self::VERSION.to_le_bytes())?;
        out.write_all(&(self.n as u32).to_le_bytes())?;
        out.write_all(&(self.values.len() as u32).to_le_bytes())?;
        let k = self.partitions.len();
        for (idx, &v) in self.values.iter().enumerate() {
            out.write_all(&((idx / k) as u32).to_le_bytes())?;
            out.write_all(&((idx % k) as u32).to_le_bytes())?;
            let v = i64::try_from(v).map_err(|_| std::io::Error::other("value out of range"))?;
            out.write_all(&v.to_le_bytes())?;
        }
        Ok(())
    }

    pub fn read_from(input: &mut impl Read, n: usize) -> std::io::Result<CharacterTable> {
        let bad = |m: &str| std::io::Error::new(std::io::ErrorKind::InvalidData, m.to_string());
        let mut magic = [0u8; 8];
        input.read_exact(&mut magic)?;
        if &magic != Self::MAGIC {
            return Err(bad("bad magic"));
        }
        let mut word = [0u8; 4];
        let mut read_u32 = |input: &mut dyn Read| -> std::io::Result<u32> {
            input.read_exact(&mut word)?;
            Ok(u32::from_le_bytes(word))
        };
        if read_u32(input)? != Self::VERSION {
            return Err(bad("unsupported version"));
        }
        if read_u32(input)? as usize != n {
            return Err(bad("degree mismatch"));
        }
        let partitions = partitions_of(n);
        let k = partitions.len();
        let rows = read_u32(input)? as usize;
        if rows != k * k {
            return Err(bad("row count mismatch"));
        }
        let mut values = vec![0i128; k * k];
        let mut long = [0u8; 8];
        for _ in 0..rows {
            let i = read_u32(input)? as usize;
            let j = read_u32(input)? as usize;
            input.read_exact(&mut long)?;
            if i >= k || j >= k {
                return Err(bad("index out of range"));
            }
            values[i * k + j] = i128::from(i64::from_le_bytes(long));
        }
        Ok(Self::assemble(n, partitions, values))
    }
}

fn table_cache() -> &'static Mutex<HashMap<usize, Arc<CharacterTable>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<CharacterTable>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn cache_path(n: usize) -> Option<PathBuf> {
    std::env::var_os(CACHE_ENV).map(|d| PathBuf::from(d).join(format!("chartable-v1-n{n}.bin")))
}

/// Character table of `S_n`, computed once per process and optionally
/// persisted under `$SCHURMF_CACHE_DIR`. A missing or unreadable cache file
/// is silently recomputed.
pub fn character_table(n: usize) -> Arc<CharacterTable> {
    if let Some(t) = table_cache().lock().unwrap().get(&n) {
        return t.clone();
    }
    let path = cache_path(n);
    let loaded = path
        .as_ref()
        .and_then(|p| std::fs::File::open(p).ok())
        .and_then(|f| CharacterTable::read_from(&mut std::io::BufReader::new(f), n).ok());
    let table = Arc::new(match loaded {
        Some(t) => t,
        None => {
            let t = CharacterTable::compute(n);
            if let Some(p) = &path {
                let _ = std::fs::create_dir_all(p.parent().unwrap_or(p));
                if let Ok(f) = std::fs::File::create(p) {
                    let _ = t.write_to(&mut std::io::BufWriter::new(f));
                }
            }
            t
        }
    });
    table_cache()
        .lock()
        .unwrap()
        .entry(n)
        .or_insert(table)
        .clone()
}

// --- power sums ---------------------------------------------------------------

/// `Σ c_ρ p_ρ` with exact rational coefficients and no zero terms.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PowerSumExpansion {
    terms: BTreeMap<Partition, BigRational>,
}

impl PowerSumExpansion {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        let mut out = Self::zero();
        out.add_term(Partition::empty(), BigRational::one());
        out
    }

    pub fn add_term(&mut self, rho: Partition, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let e = self
            .terms
            .entry(rho.clone())
            .or_insert_with(BigRational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&rho);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, rho: &Partition) -> BigRational {
        self.terms
            .get(rho)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut sizes = self.terms.keys().map(|p| p.size());
        match sizes.next() {
            None => true,
            Some(d) => sizes.all(|e| e == d),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let mut out = Self::zero();
        for (p, x) in &self.terms {
            out.add_term(p.clone(), x * c);
        }
        out
    }

    /// `p_α p_β = p_{α⊔β}`.
    pub fn multiply(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (p, c) in &self.terms {
            for (q, d) in &other.terms {
                out.add_term(p.union_parts(q), c * d);
            }
        }
        out
    }

    /// `f[p_k]`: every `p_m` becomes `p_{km}`.
    pub fn frobenius(&self, k: usize) -> Self {
        PowerSumExpansion {
            terms: self
                .terms
                .iter()
                .map(|(p, c)| (p.scale_parts(k), c.clone()))
                .collect(),
        }
    }
}

/// `s_λ = Σ_ρ χ^λ(ρ)/z_ρ p_ρ`.
pub fn schur_to_power(lambda: &Partition) -> PowerSumExpansion {
    let mut out = PowerSumExpansion::zero();
    for rho in partitions_of(lambda.size()) {
        let chi = mn(lambda.parts(), rho.parts());
        if chi != 0 {
            out.add_term(
                rho.clone(),
                BigRational::new(BigInt::from(chi), z_order(&rho)),
            );
        }
    }
    out
}

/// Inverse basis change, via `p_ρ = Σ_λ χ^λ(ρ) s_λ`.
pub fn power_to_schur(f: &PowerSumExpansion) -> Result<SchurExpansion, OracleError> {
    if !f.is_homogeneous() {
        return Err(OracleError::Inhomogeneous);
    }
    let Some(n) = f.terms.keys().next().map(|p| p.size()) else {
        return Ok(SchurExpansion::zero());
    };
    let table = character_table(n);
    // clear denominators once, then accumulate integers
    let lcm = f
        .terms
        .values()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let cols: Vec<(usize, BigInt)> = f
        .terms
        .iter()
        .map(|(p, c)| {
            let j = table.index_of(p).expect("cycle type of the right size");
            (j, c.numer() * (&lcm / c.denom()))
        })
        .collect();
    let rows: Vec<Result<Option<(Partition, BigInt)>, OracleError>> =
        par_map(&table.partitions, |i, lambda| {
            let mut acc = BigInt::zero();
            for (j, num) in &cols {
                let chi = table.value(i, *j);
                if chi != 0 {
                    acc += num * BigInt::from(chi);
                }
            }
            if acc.is_zero() {
                return Ok(None);
            }
            let (q, r) = acc.div_rem(&lcm);
            if !r.is_zero() {
                return Err(OracleError::NonIntegerCoefficient {
                    partition: lambda.clone(),
                    value: BigRational::new(acc, lcm.clone()),
                });
            }
            Ok(Some((lambda.clone(), q)))
        });
    let mut out = SchurExpansion::zero();
    for row in rows {
        if let Some((p, c)) = row? {
            out.add_term(p, c);
        }
    }
    Ok(out)
}

#[cfg(feature = "parallel")]
fn par_map<T: Sync, R: Send>(items: &[T], f: impl Fn(usize, &T) -> R + Sync) -> Vec<R> {
    use rayon::prelude::*;
    items.par_iter().enumerate().map(|(i, x)| f(i, x)).collect()
}

#[cfg(not(feature = "parallel"))]
fn par_map<T, R>(items: &[T], f: impl Fn(usize, &T) -> R) -> Vec<R> {
    items.iter().enumerate().map(|(i, x)| f(i, x)).collect()
}

// --- plethysm -------------------------------------------------------------------

/// `s_ν ∘ s_μ` under the default degree cap.
pub fn plethysm(mu: &Partition, nu: &Partition) -> Result<SchurExpansion, OracleError> {
    plethysm_capped(mu, nu, DEFAULT_DEGREE_CAP)
}

/// `s_ν ∘ s_μ = Σ_ρ χ^ν(ρ)/z_ρ Π_i p_{ρ_i}[s_μ]`, expanded back into Schur functions.
pub fn plethysm_capped(
    mu: &Partition,
    nu: &Partition,
    cap: usize,
) -> Result<SchurExpansion, OracleError> {
    if mu.is_empty() {
        return Err(OracleError::EmptyInner);
    }
    let degree = mu.size() * nu.size();
    if degree > cap {
        return Err(OracleError::DegreeCapExceeded { degree, cap });
    }
    let inner = schur_to_power(mu);
    let mut powers: HashMap<usize, PowerSumExpansion> = HashMap::new();
    let mut total = PowerSumExpansion::zero();
    for rho in partitions_of(nu.size()) {
        let chi = mn(nu.parts(), rho.parts());
        if chi == 0 {
            continue;
        }
        let mut prod = PowerSumExpansion::one();
        for &k in rho.parts() {
            let pk = powers.entry(k).or_insert_with(|| inner.frobenius(k));
            prod = prod.multiply(pk);
        }
        let c = BigRational::new(BigInt::from(chi), z_order(&rho));
        total = total.add(&prod.scale(&c));
    }
    power_to_schur(&total)
}

/// Product of Schur functions computed pointwise on characters.
pub fn product_via_characters(
    x: &SchurExpansion,
    y: &SchurExpansion,
) -> Result<SchurExpansion, OracleError> {
    let to_power = |e: &SchurExpansion| {
        let mut out = PowerSumExpansion::zero();
        for (p, c) in e.terms() {
            out = out.add(&schur_to_power(p).scale(&BigRational::from_integer(c.clone())));
        }
        out
    };
    power_to_schur(&to_power(x).multiply(&to_power(y)))
}

// --- involutions ------------------------------------------------------------------

/// Number of involutions (including the identity) in `S_n`.
pub fn involution_count(n: usize) -> BigInt {
    let (mut prev, mut cur) = (BigInt::one(), BigInt::one());
    for k in 2..=n {
        let next = &cur + BigInt::from(k - 1) * &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// `n!/a_n`, the smallest order a multiplicity-free subgroup of `S_n` can have.
pub fn order_bound(n: usize) -> BigRational {
    BigRational::new(factorial(n), involution_count(n))
}

/// Evaluation of the standard involution bounds at one `n`.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct InvolutionReport {
    pub n: usize,
    pub a_n: String,
    /// `a_n ≤ n·a_{n−1}` for odd `n ≥ 1`; `None` when not applicable.
    pub odd_step: Option<bool>,
    /// `a_n < n!/(2⌊n/2⌋!)`, applicable for `n ≥ 7`.
    pub half_factorial: Option<bool>,
    /// `a_n < n!/2^{n−1}`, applicable for `n ≥ 11`.
    pub power_of_two: Option<bool>,
}

pub fn check_involution_bounds(n: usize) -> InvolutionReport {
    let a = involution_count(n);
    let fact = factorial(n);
    let odd_step = (n % 2 == 1).then(|| a <= BigInt::from(n) * involution_count(n - 1));
    // compare a·(2⌊n/2⌋!) < n! to avoid division
    let half_factorial = (n >= 7).then(|| &a * BigInt::from(2) * factorial(n / 2) < fact);
    let power_of_two = (n >= 11).then(|| &a * (BigInt::one() << (n - 1)) < fact);
    InvolutionReport {
        n,
        a_n: a.to_string(),
        odd_step,
        half_factorial,
        power_of_two,
    }
}

/// `Σ_λ f^λ` via character values at the identity.
pub fn sum_of_degrees(n: usize) -> BigInt {
    let id = Partition::rectangle(1, n);
    partitions_of(n)
        .iter()
        .map(|l| BigInt::from(mn(l.parts(), id.parts())))
        .sum()
}

/// Helper used in reports: `BigRational` as a decimal string when integral.
pub fn rational_to_string(q: &BigRational) -> String {
    if q.is_integer() {
        q.to_integer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn character_examples() {
        assert_eq!(character_value(&p("[4]"), &p("[2,1,1]")), Ok(1));
        assert_eq!(character_value(&p("[1,1,1,1]"), &p("[2,1,1]")), Ok(-1));
        assert_eq!(character_value(&p("[2,1]"), &p("[1,1,1]")), Ok(2));
        assert_eq!(character_value(&p("[2,1]"), &p("[3]")), Ok(-1));
        assert!(character_value(&p("[2,1]"), &p("[2]")).is_err());
    }

    #[test]
    fn basis_change() {
        assert_eq!(
            schur_to_power(&p("[1]")).coeff(&p("[1]")),
            BigRational::one()
        );
        let two = schur_to_power(&p("[2]"));
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(two.coeff(&p("[1,1]")), half);
        assert_eq!(two.coeff(&p("[2]")), half);
        for n in 0..=6 {
            for l in partitions_of(n) {
                let back = power_to_schur(&schur_to_power(&l)).unwrap();
                assert_eq!(back, SchurExpansion::from_partition(l.clone()));
            }
        }
    }

    #[test]
    fn plethysm_examples() {
        let x = plethysm(&p("[2]"), &p("[1,1,1]")).unwrap();
        assert_eq!(x.render(), "s[4,1,1] + s[3,3]");
        assert!(plethysm(&p("[3,1]"), &p("[2]"))
            .unwrap()
            .is_multiplicity_free()
            .unwrap());
        assert_eq!(plethysm(&p("[3,1]"), &p("[1]")).unwrap(), crate::s(&[3, 1]));
        assert_eq!(
            plethysm(&Partition::empty(), &p("[2]")),
            Err(OracleError::EmptyInner)
        );
        assert!(matches!(
            plethysm(&p("[5]"), &p("[4]")),
            Err(OracleError::DegreeCapExceeded {
                degree: 20,
                cap: 18
            })
        ));
    }

    #[test]
    fn involutions() {
        let a: Vec<BigInt> = (0..=4).map(involution_count).collect();
        assert_eq!(a, [1, 1, 2, 4, 10].map(BigInt::from));
        assert_eq!(order_bound(4), BigRational::new(24.into(), 10.into()));
    }

    #[test]
    fn table_cache_round_trip() {
        let t = CharacterTable::compute(6);
        let mut buf = Vec::new();
        t.write_to(&mut buf).unwrap();
        let back = CharacterTable::read_from(&mut buf.as_slice(), 6).unwrap();
        assert_eq!(back.values, t.values);
        assert!(CharacterTable::read_from(&mut buf.as_slice(), 5).is_err());
    }
}
