//! Elements of the ring of symmetric functions in the Schur basis.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::partition::{parse_partition_prefix, Partition, PartitionError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SchurError {
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("negative coefficient {coeff} at s{partition}")]
    NegativeCoefficient { partition: Partition, coeff: BigInt },
}

impl From<PartitionError> for SchurError {
    fn from(e: PartitionError) -> Self {
        match e {
            PartitionError::Parse { pos, msg } => SchurError::Parse { pos, msg },
            other => SchurError::Parse {
                pos: 0,
                msg: other.to_string(),
            },
        }
    }
}

/// A finite Schur expansion `Σ c_λ s_λ` with no zero coefficients stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct SchurExpansion {
    terms: BTreeMap<Partition, BigInt>,
}

impl SchurExpansion {
    pub fn zero() -> Self {
        SchurExpansion {
            terms: BTreeMap::new(),
        }
    }

    /// `s_∅`.
    pub fn one() -> Self {
        Self::from_partition(Partition::empty())
    }

    /// `s_λ`.
    pub fn from_partition(lambda: Partition) -> Self {
        let mut out = Self::zero();
        out.add_term(lambda, BigInt::one());
        out
    }

    /// `Σ s_λ` over the given partitions, each with coefficient one.
    pub fn sum_of<I: IntoIterator<Item = Partition>>(parts: I) -> Self {
        let mut out = Self::zero();
        for p in parts {
            out.add_term(p, BigInt::one());
        }
        out
    }

    pub fn add_term(&mut self, lambda: Partition, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self
            .terms
            .entry(lambda.clone())
            .or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&lambda);
        }
    }

    /// Terms in canonical order: ascending degree, then descending lexicographic.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Partition> {
        self.terms.keys()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    /// `⟨x, s_λ⟩`.
    pub fn coeff(&self, lambda: &Partition) -> BigInt {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.terms.keys().map(|p| p.size()).collect();
        d.dedup();
        d
    }

    pub fn is_homogeneous(&self) -> bool {
        self.degrees().len() <= 1
    }

    pub fn add(&self, other: &SchurExpansion) -> SchurExpansion {
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &SchurExpansion) -> SchurExpansion {
        self.add(&other.scale(&BigInt::from(-1)))
    }

    pub fn scale(&self, c: &BigInt) -> SchurExpansion {
        if c.is_zero() {
            return Self::zero();
        }
        SchurExpansion {
            terms: self.terms.iter().map(|(p, x)| (p.clone(), x * c)).collect(),
        }
    }

    /// The Hall inner product.
    pub fn inner(&self, other: &SchurExpansion) -> BigInt {
        self.terms
            .iter()
            .filter_map(|(p, c)| other.terms.get(p).map(|d| c * d))
            .sum()
    }

    /// `ω`, conjugating every index.
    pub fn omega(&self) -> SchurExpansion {
        SchurExpansion {
            terms: self
                .terms
                .iter()
                .map(|(p, c)| (p.conjugate(), c.clone()))
                .collect(),
        }
    }

    /// Product in the ring, with LR coefficients.
    pub fn multiply(&self, other: &SchurExpansion) -> SchurExpansion {
        let mut out = SchurExpansion::zero();
        for (p, c) in &self.terms {
            for (q, d) in &other.terms {
                let prod = multiply_schur(p, q);
                out = out.add(&prod.scale(&(c * d)));
            }
        }
        out
    }

    fn check_nonnegative(&self) -> Result<(), SchurError> {
        match self.terms.iter().find(|(_, c)| c.is_negative()) {
            Some((p, c)) => Err(SchurError::NegativeCoefficient {
                partition: p.clone(),
                coeff: c.clone(),
            }),
            None => Ok(()),
        }
    }

    /// Every coefficient is at most one.
    pub fn is_multiplicity_free(&self) -> Result<bool, SchurError> {
        Ok(self.offending_constituent()?.is_none())
    }

    /// The first index (canonical order) whose coefficient is at least two.
    pub fn offending_constituent(&self) -> Result<Option<Partition>, SchurError> {
        self.check_nonnegative()?;
        Ok(self
            .terms
            .iter()
            .find(|(_, c)| **c > BigInt::one())
            .map(|(p, _)| p.clone()))
    }

    /// Text form, e.g. `s[2,1] + 2*s[1,1,1]`; `0` for the zero element.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (p, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let a = c.abs();
            if !a.is_one() {
                out.push_str(&format!("{a}*"));
            }
            out.push_str(&format!("s{p}"));
        }
        out
    }

    pub fn parse(text: &str) -> Result<SchurExpansion, SchurError> {
        text.parse()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("expansions serialize")
    }
}

/// `s_μ s_ν`, using the cheaper strip rules when one side is linear.
pub fn multiply_schur(mu: &Partition, nu: &Partition) -> SchurExpansion {
    if mu.is_empty() {
        return SchurExpansion::from_partition(nu.clone());
    }
    if nu.is_empty() {
        return SchurExpansion::from_partition(mu.clone());
    }
    if nu.is_row() {
        return crate::lr::multiply_by_row(mu, nu.size());
    }
    if nu.is_column() {
        return crate::lr::multiply_by_column(mu, nu.size());
    }
    if mu.is_row() {
        return crate::lr::multiply_by_row(nu, mu.size());
    }
    if mu.is_column() {
        return crate::lr::multiply_by_column(nu, mu.size());
    }
    crate::lr::lr_product(mu, nu)
}

impl fmt::Display for SchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for SchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl FromStr for SchurExpansion {
    type Err = SchurError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let bytes = text.as_bytes();
        let err = |pos: usize, msg: &str| SchurError::Parse {
            pos,
            msg: msg.to_string(),
        };
        let mut i = 0;
        let skip = |i: &mut usize| {
            while *i < bytes.len() && bytes[*i].is_ascii_whitespace() {
                *i += 1;
            }
        };
        let mut out = SchurExpansion::zero();
        skip(&mut i);
        if text[i..].trim() == "0" {
            return Ok(out);
        }
        let mut first = true;
        loop {
            skip(&mut i);
            let mut sign = BigInt::one();
            if !first || matches!(bytes.get(i), Some(b'-') | Some(b'+')) {
                match bytes.get(i) {
                    Some(b'+') => i += 1,
                    Some(b'-') => {
                        sign = BigInt::from(-1);
                        i += 1
                    }
                    _ => return Err(err(i, "expected '+' or '-'")),
                }
                skip(&mut i);
            }
            first = false;
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let mut coeff = BigInt::one();
            if i > start {
                coeff = text[start..i]
                    .parse()
                    .map_err(|_| err(start, "bad coefficient"))?;
                skip(&mut i);
                if bytes.get(i) != Some(&b'*') {
                    return Err(err(i, "expected '*' after coefficient"));
                }
                i += 1;
                skip(&mut i);
            }
            if bytes.get(i) != Some(&b's') {
                return Err(err(i, "expected 's['"));
            }
            i += 1;
            let (p, used) = parse_partition_prefix(&text[i..], i)?;
            i += used;
            out.add_term(p, sign * coeff);
            skip(&mut i);
            if i == bytes.len() {
                return Ok(out);
            }
        }
    }
}

#[derive(Serialize, Deserialize)]
struct JsonTerm {
    partition: Partition,
    coeff: serde_json::Value,
}

#[derive(Serialize, Deserialize)]
struct JsonExpansion {
    terms: Vec<JsonTerm>,
}

impl Serialize for SchurExpansion {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let terms = self
            .terms
            .iter()
            .map(|(p, c)| JsonTerm {
                partition: p.clone(),
                // large values fall back to strings to stay exact
                coeff: match c.to_i64() {
                    Some(v) => serde_json::Value::from(v),
                    None => serde_json::Value::from(c.to_string()),
                },
            })
            .collect();
        JsonExpansion { terms }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for SchurExpansion {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = JsonExpansion::deserialize(d)?;
        let mut out = SchurExpansion::zero();
        for t in raw.terms {
            let c: BigInt = match &t.coeff {
                serde_json::Value::Number(n) => n
                    .as_i64()
                    .map(BigInt::from)
                    .ok_or_else(|| D::Error::custom("coefficient must be an integer"))?,
                serde_json::Value::String(s) => s.parse().map_err(D::Error::custom)?,
                _ => return Err(D::Error::custom("coefficient must be an integer")),
            };
            out.add_term(t.partition, c);
        }
        Ok(out)
    }
}

impl std::ops::Add for &SchurExpansion {
    type Output = SchurExpansion;
    fn add(self, rhs: &SchurExpansion) -> SchurExpansion {
        SchurExpansion::add(self, rhs)
    }
}

impl std::ops::Mul for &SchurExpansion {
    type Output = SchurExpansion;
    fn mul(self, rhs: &SchurExpansion) -> SchurExpansion {
        self.multiply(rhs)
    }
}

/// Shorthand for `s_λ` from a slice of parts; panics if the parts increase.
pub fn s(parts: &[usize]) -> SchurExpansion {
    SchurExpansion::from_partition(Partition::new(parts.to_vec()).expect("non-increasing parts"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inner_products() {
        assert_eq!(s(&[2, 1]).inner(&s(&[2, 1])), BigInt::one());
        assert_eq!(s(&[3]).inner(&s(&[2, 1])), BigInt::zero());
        assert_eq!(s(&[2]).add(&s(&[2])), s(&[2]).scale(&BigInt::from(2)));
    }

    #[test]
    fn omega_examples() {
        assert_eq!(s(&[3]).omega(), s(&[1, 1, 1]));
        let x = s(&[2]).add(&s(&[1, 1]));
        assert_eq!(x.omega(), x);
        let xp = s(&[6]).add(&s(&[2, 2, 2]));
        assert_eq!(xp.omega(), s(&[1; 6]).add(&s(&[3, 3])));
    }

    #[test]
    fn multiplicity_freeness() {
        assert_eq!(s(&[2]).add(&s(&[1, 1])).is_multiplicity_free(), Ok(true));
        let two = s(&[3, 2, 1]).scale(&BigInt::from(2));
        assert_eq!(
            two.offending_constituent().unwrap(),
            Some("[3,2,1]".parse().unwrap())
        );
        let sq = s(&[2, 1]).multiply(&s(&[2, 1]));
        assert_eq!(
            sq.offending_constituent().unwrap(),
            Some("[3,2,1]".parse().unwrap())
        );
        assert!(s(&[1])
            .scale(&BigInt::from(-1))
            .is_multiplicity_free()
            .is_err());
    }

    #[test]
    fn products() {
        assert_eq!(s(&[1]).multiply(&s(&[1])), s(&[2]).add(&s(&[1, 1])));
        let p = s(&[4, 2, 1]).multiply(&s(&[3, 2, 1]));
        assert_eq!(p.coeff(&"[4,4,3,2]".parse().unwrap()), BigInt::from(2));
        assert_eq!(
            s(&[6]).multiply(&s(&[2, 2, 2])),
            s(&[2, 2, 2]).multiply(&s(&[6]))
        );
    }

    #[test]
    fn text_round_trip() {
        let x: SchurExpansion = "s[2,1] + 2*s[1,1,1]".parse().unwrap();
        assert_eq!(x.coeff(&"[1,1,1]".parse().unwrap()), BigInt::from(2));
        assert_eq!(x.render(), "s[2,1] + 2*s[1,1,1]");
        assert_eq!("1*s[]".parse::<SchurExpansion>().unwrap().render(), "s[]");
        assert_eq!("s[3^2]".parse::<SchurExpansion>().unwrap(), s(&[3, 3]));
        let y: SchurExpansion = "-s[2] + s[1,1] - 3*s[3]".parse().unwrap();
        assert_eq!(y.render().parse::<SchurExpansion>().unwrap(), y);
        assert!("s[2,1] +".parse::<SchurExpansion>().is_err());
        match "s[2,1] + 2 s[1]".parse::<SchurExpansion>() {
            Err(SchurError::Parse { pos, .. }) => assert_eq!(pos, 11),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn render_order() {
        let x = s(&[1, 1]).add(&s(&[2])).add(&s(&[3])).add(&s(&[]));
        assert_eq!(x.render(), "s[] + s[2] + s[1,1] + s[3]");
    }

    #[test]
    fn json_round_trip() {
        let x = s(&[4, 2]).add(&s(&[3, 3]).scale(&BigInt::from(3)));
        let j = serde_json::to_string(&x).unwrap();
        assert_eq!(
            j,
            r#"{"terms":[{"partition":[4,2],"coeff":1},{"partition":[3,3],"coeff":3}]}"#
        );
        assert_eq!(serde_json::from_str::<SchurExpansion>(&j).unwrap(), x);
        let big = s(&[1]).scale(&"123456789012345678901234567890".parse().unwrap());
        let j = serde_json::to_string(&big).unwrap();
        assert_eq!(serde_json::from_str::<SchurExpansion>(&j).unwrap(), big);
    }
}
