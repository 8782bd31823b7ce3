//! Multiplicity-free subgroups of symmetric groups, modelled through the
//! symmetric functions of their induced characters.
//!
//! A [`GroupDescriptor`] names a subgroup family member and an
//! [`IrredCharDescriptor`] names an irreducible character of it. For an index
//! two kernel `N = ker η ≤ G` the character descriptor names some `ρ` of `G`
//! and stands for `ρ_N`, an arbitrary constituent of `ρ↓N`; its induction to
//! `S_n` does not depend on the choice. Everything is resolved at the level of
//! Schur expansions: wreath characters become plethysms, kernels become
//! [`index_two_lift`], and an extra fixed point becomes a factor `s_(1)`.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use crate::charoracle::{plethysm_capped, OracleError, DEFAULT_DEGREE_CAP};
use crate::domino::{closed_form_plethysm, plethysm_two, DominoError};
use crate::mflib::MfVerdict;
use crate::partition::{partitions_of, Partition};
use crate::schur::{multiply_schur, SchurExpansion};

/// Smallest degree at which [`classify_subgroups`] answers.
pub const CLASSIFICATION_THRESHOLD: usize = 66;

/// Default ceiling on the degree handled by the domino and LR paths.
pub const DEFAULT_COMBINATORIAL_CAP: usize = 40;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: String, right: String },
    #[error("unsupported character: {0}")]
    UnsupportedCharacter(String),
    #[error("invalid character for this group: {0}")]
    InvalidCharacter(String),
    #[error("invalid group parameters: {0}")]
    InvalidGroup(String),
    #[error("degree {degree} exceeds the cap {cap}")]
    DegreeCapExceeded { degree: usize, cap: usize },
    #[error("n below validity threshold {CLASSIFICATION_THRESHOLD}")]
    BelowValidityThreshold { n: usize },
    #[error("unknown corollary `{0}`")]
    UnknownCorollary(String),
    #[error("bad corollary parameters: {0}")]
    InvalidParameters(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
}

impl From<DominoError> for GroupError {
    fn from(e: DominoError) -> Self {
        GroupError::InvalidCharacter(e.to_string())
    }
}

impl From<OracleError> for GroupError {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::DegreeCapExceeded { degree, cap } => {
                GroupError::DegreeCapExceeded { degree, cap }
            }
            other => GroupError::InvalidCharacter(other.to_string()),
        }
    }
}

/// Degree ceilings for the two computational back ends.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Domino and Littlewood–Richardson paths.
    pub combinatorial: usize,
    /// Character-table oracle, used for plethysms with no combinatorial rule.
    pub oracle: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            combinatorial: DEFAULT_COMBINATORIAL_CAP,
            oracle: DEFAULT_DEGREE_CAP,
        }
    }
}

// --- descriptors ---------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Sporadic {
    #[serde(rename = "PGammaL2_8")]
    PGammaL2_8,
    #[serde(rename = "ASL3_2")]
    Asl3_2,
    #[serde(rename = "PGL2_5")]
    Pgl2_5,
    #[serde(rename = "AGL1_5")]
    Agl1_5,
}

impl Sporadic {
    pub const ALL: [Sporadic; 4] = [
        Sporadic::PGammaL2_8,
        Sporadic::Asl3_2,
        Sporadic::Pgl2_5,
        Sporadic::Agl1_5,
    ];

    /// Degree of the natural permutation action.
    pub fn degree(self) -> usize {
        match self {
            Sporadic::PGammaL2_8 => 9,
            Sporadic::Asl3_2 => 8,
            Sporadic::Pgl2_5 => 6,
            Sporadic::Agl1_5 => 5,
        }
    }

    /// Whether every element acts as an even permutation.
    pub fn is_even(self) -> bool {
        matches!(self, Sporadic::PGammaL2_8 | Sporadic::Asl3_2)
    }

    fn name(self) -> &'static str {
        match self {
            Sporadic::PGammaL2_8 => "PΓL2(8)",
            Sporadic::Asl3_2 => "ASL3(2)",
            Sporadic::Pgl2_5 => "PGL2(5)",
            Sporadic::Agl1_5 => "AGL1(5)",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SporadicVariant {
    /// `S_k × L`
    Full,
    /// `A_k × L`
    AltK,
    /// `(S_k × L) ∩ A_n`
    CapAlt,
}

/// A member of one of the subgroup families, with its parameters.
///
/// Families with an `ambient` field live in `S_ambient`, which is either the
/// natural degree or one more (an extra fixed point).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(tag = "family", content = "params")]
pub enum GroupDescriptor {
    SymmetricGroup {
        n: usize,
    },
    Alternating {
        n: usize,
    },
    Young {
        k: usize,
        l: usize,
    },
    YoungCapAlt {
        k: usize,
        l: usize,
    },
    AltTimesSym {
        k: usize,
        l: usize,
    },
    AltTimesAlt {
        k: usize,
        l: usize,
    },
    SkSmWr2 {
        k: usize,
        m: usize,
    },
    SkSmWr2CapAlt {
        k: usize,
        m: usize,
    },
    #[serde(rename = "T_kmh")]
    Tkmh {
        k: usize,
        m: usize,
        h: usize,
    },
    SkS2Wrh {
        k: usize,
        h: usize,
    },
    SkS2WrhCapAlt {
        k: usize,
        h: usize,
    },
    SmWr2 {
        m: usize,
        ambient: usize,
    },
    SmWr2CapAlt {
        m: usize,
        ambient: usize,
    },
    AmWr2 {
        m: usize,
        ambient: usize,
    },
    #[serde(rename = "T_m2")]
    Tm2 {
        m: usize,
        ambient: usize,
    },
    S2Wrh {
        h: usize,
        ambient: usize,
    },
    S2WrhCapAlt {
        h: usize,
        ambient: usize,
    },
    SmWr3 {
        m: usize,
    },
    SmWr3CapAlt {
        m: usize,
    },
    #[serde(rename = "T_m3")]
    Tm3 {
        m: usize,
    },
    SkTimesSporadic {
        k: usize,
        group: Sporadic,
        variant: SporadicVariant,
    },
    /// `A_k × S_2≀S_2`
    AltTimesS2Wr2 {
        k: usize,
    },
    #[serde(rename = "N_k")]
    Nk {
        k: usize,
    },
    #[serde(rename = "T_k2h")]
    Tk2h {
        k: usize,
        h: usize,
    },
}

use GroupDescriptor as G;

/// Shape of the overgroup whose characters parameterise a family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Overgroup {
    /// `S_n`
    Sym(usize),
    /// `S_k × S_l`
    Young(usize, usize),
    /// `S_k × S_m≀S_h`, with `k = 0` for a bare wreath product.
    Wreath { k: usize, m: usize, h: usize },
    /// `S_k × L`
    Sporadic(usize, Sporadic),
}

/// How a family member sits inside its overgroup.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Embedding {
    Whole,
    /// Kernel of a sign-type character `η`; the flags say which tensor
    /// factors `η` carries a sign on.
    Kernel(Twist),
    /// Alternating groups replace the first symmetric factor (and the second
    /// when `both`).
    Alt {
        both: bool,
    },
}

/// Sign pattern of `η = ε_k ⊠ (ε_m ≀̃ ε_h)` or of `η = ε_k ⊠ ε_l`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Twist {
    first: bool,
    base: bool,
    top: bool,
}

const fn tw(first: bool, base: bool, top: bool) -> Twist {
    Twist { first, base, top }
}

impl GroupDescriptor {
    /// Degree `n` of the ambient symmetric group.
    pub fn degree(&self) -> usize {
        match *self {
            G::SymmetricGroup { n } | G::Alternating { n } => n,
            G::Young { k, l }
            | G::YoungCapAlt { k, l }
            | G::AltTimesSym { k, l }
            | G::AltTimesAlt { k, l } => k + l,
            G::SkSmWr2 { k, m } | G::SkSmWr2CapAlt { k, m } => k + 2 * m,
            G::Tkmh { k, m, h } => k + m * h,
            G::SkS2Wrh { k, h } | G::SkS2WrhCapAlt { k, h } | G::Tk2h { k, h } => k + 2 * h,
            G::SmWr2 { ambient, .. }
            | G::SmWr2CapAlt { ambient, .. }
            | G::AmWr2 { ambient, .. }
            | G::Tm2 { ambient, .. }
            | G::S2Wrh { ambient, .. }
            | G::S2WrhCapAlt { ambient, .. } => ambient,
            G::SmWr3 { m } | G::SmWr3CapAlt { m } | G::Tm3 { m } => 3 * m,
            G::SkTimesSporadic { k, group, .. } => k + group.degree(),
            G::AltTimesS2Wr2 { k } | G::Nk { k } => k + 4,
        }
    }

    /// Structural checks: positive parameters and a consistent ambient degree.
    pub fn validate(&self) -> Result<(), GroupError> {
        let bad = |msg: String| Err(GroupError::InvalidGroup(msg));
        let natural = match *self {
            G::SmWr2 { m, .. }
            | G::SmWr2CapAlt { m, .. }
            | G::AmWr2 { m, .. }
            | G::Tm2 { m, .. } => Some(2 * m),
            G::S2Wrh { h, .. } | G::S2WrhCapAlt { h, .. } => Some(2 * h),
            _ => None,
        };
        if let Some(nat) = natural {
            let amb = self.degree();
            if amb != nat && amb != nat + 1 {
                return bad(format!("ambient degree {amb} must be {nat} or {}", nat + 1));
            }
        }
        let positive = match *self {
            G::SymmetricGroup { n } | G::Alternating { n } => n >= 1,
            G::Young { k, l }
            | G::YoungCapAlt { k, l }
            | G::AltTimesSym { k, l }
            | G::AltTimesAlt { k, l } => k >= 1 && l >= 1,
            G::SkSmWr2 { k, m } | G::SkSmWr2CapAlt { k, m } => k >= 1 && m >= 1,
            G::Tkmh { k, m, h } => k >= 1 && m >= 1 && h >= 1,
            G::SkS2Wrh { k, h } | G::SkS2WrhCapAlt { k, h } => k >= 1 && h >= 1,
            G::Tk2h { k, h } => k >= 1 && h >= 1,
            G::SmWr2 { m, .. }
            | G::SmWr2CapAlt { m, .. }
            | G::AmWr2 { m, .. }
            | G::Tm2 { m, .. } => m >= 1,
            G::S2Wrh { h, .. } | G::S2WrhCapAlt { h, .. } => h >= 1,
            G::SmWr3 { m } | G::SmWr3CapAlt { m } | G::Tm3 { m } => m >= 1,
            G::SkTimesSporadic { k, .. } | G::AltTimesS2Wr2 { k } | G::Nk { k } => k >= 1,
        };
        if !positive {
            return bad(format!("{self}: parameters must be positive"));
        }
        Ok(())
    }

    fn overgroup(&self) -> Overgroup {
        match *self {
            G::SymmetricGroup { n } | G::Alternating { n } => Overgroup::Sym(n),
            G::Young { k, l }
            | G::YoungCapAlt { k, l }
            | G::AltTimesSym { k, l }
            | G::AltTimesAlt { k, l } => Overgroup::Young(k, l),
            G::SkSmWr2 { k, m } | G::SkSmWr2CapAlt { k, m } => Overgroup::Wreath { k, m, h: 2 },
            G::Tkmh { k, m, h } => Overgroup::Wreath { k, m, h },
            G::SkS2Wrh { k, h } | G::SkS2WrhCapAlt { k, h } | G::Tk2h { k, h } => {
                Overgroup::Wreath { k, m: 2, h }
            }
            G::SmWr2 { m, .. }
            | G::SmWr2CapAlt { m, .. }
            | G::AmWr2 { m, .. }
            | G::Tm2 { m, .. } => Overgroup::Wreath { k: 0, m, h: 2 },
            G::S2Wrh { h, .. } | G::S2WrhCapAlt { h, .. } => Overgroup::Wreath { k: 0, m: 2, h },
            G::SmWr3 { m } | G::SmWr3CapAlt { m } | G::Tm3 { m } => {
                Overgroup::Wreath { k: 0, m, h: 3 }
            }
            G::SkTimesSporadic { k, group, .. } => Overgroup::Sporadic(k, group),
            G::AltTimesS2Wr2 { k } | G::Nk { k } => Overgroup::Wreath { k, m: 2, h: 2 },
        }
    }

    fn embedding(&self) -> Embedding {
        // the sign of S_mh restricted to S_m≀S_h is sgn ≀̃ sgn^m
        let odd = |m: usize| m % 2 == 1;
        match *self {
            G::Alternating { .. } => Embedding::Kernel(tw(true, false, false)),
            G::YoungCapAlt { .. } => Embedding::Kernel(tw(true, true, false)),
            G::AltTimesSym { .. } | G::AltTimesS2Wr2 { .. } => Embedding::Alt { both: false },
            G::AltTimesAlt { .. } | G::AmWr2 { .. } => Embedding::Alt { both: true },
            G::SkSmWr2CapAlt { m, .. } => Embedding::Kernel(tw(true, true, odd(m))),
            G::Tkmh { m, .. } => Embedding::Kernel(tw(true, true, !odd(m))),
            G::SkS2WrhCapAlt { .. } => Embedding::Kernel(tw(true, true, false)),
            G::Tk2h { .. } => Embedding::Kernel(tw(true, true, true)),
            G::Nk { .. } => Embedding::Kernel(tw(true, false, true)),
            G::SmWr2CapAlt { m, .. } | G::SmWr3CapAlt { m } => {
                Embedding::Kernel(tw(false, true, odd(m)))
            }
            G::S2WrhCapAlt { .. } => Embedding::Kernel(tw(false, true, false)),
            G::Tm2 { m, .. } | G::Tm3 { m } => Embedding::Kernel(tw(false, true, !odd(m))),
            G::SkTimesSporadic {
                variant: SporadicVariant::CapAlt,
                ..
            } => Embedding::Kernel(tw(true, true, false)),
            G::SkTimesSporadic {
                variant: SporadicVariant::AltK,
                ..
            } => Embedding::Alt { both: false },
            _ => Embedding::Whole,
        }
    }

    /// Number of fixed points added by the embedding in `S_n`.
    fn extra_points(&self) -> usize {
        let natural = match *self {
            G::SmWr2 { m, .. }
            | G::SmWr2CapAlt { m, .. }
            | G::AmWr2 { m, .. }
            | G::Tm2 { m, .. } => 2 * m,
            G::S2Wrh { h, .. } | G::S2WrhCapAlt { h, .. } => 2 * h,
            _ => return 0,
        };
        self.degree() - natural
    }
}

impl fmt::Display for GroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let amb = |f: &mut fmt::Formatter<'_>, nat: usize, a: usize| {
            if a != nat {
                write!(f, " in S_{a}")
            } else {
                Ok(())
            }
        };
        match *self {
            G::SymmetricGroup { n } => write!(f, "S_{n}"),
            G::Alternating { n } => write!(f, "A_{n}"),
            G::Young { k, l } => write!(f, "S_{k} × S_{l}"),
            G::YoungCapAlt { k, l } => write!(f, "(S_{k} × S_{l}) ∩ A_{}", k + l),
            G::AltTimesSym { k, l } => write!(f, "A_{k} × S_{l}"),
            G::AltTimesAlt { k, l } => write!(f, "A_{k} × A_{l}"),
            G::SkSmWr2 { k, m } => write!(f, "S_{k} × S_{m}≀S_2"),
            G::SkSmWr2CapAlt { k, m } => write!(f, "(S_{k} × S_{m}≀S_2) ∩ A_{}", k + 2 * m),
            G::Tkmh { k, m, h } => write!(f, "T_{{{k},{m},{h}}}"),
            G::SkS2Wrh { k, h } => write!(f, "S_{k} × S_2≀S_{h}"),
            G::SkS2WrhCapAlt { k, h } => write!(f, "(S_{k} × S_2≀S_{h}) ∩ A_{}", k + 2 * h),
            G::SmWr2 { m, ambient } => {
                write!(f, "S_{m}≀S_2")?;
                amb(f, 2 * m, ambient)
            }
            G::SmWr2CapAlt { m, ambient } => {
                write!(f, "(S_{m}≀S_2) ∩ A_{}", 2 * m)?;
                amb(f, 2 * m, ambient)
            }
            G::AmWr2 { m, ambient } => {
                write!(f, "A_{m}≀S_2")?;
                amb(f, 2 * m, ambient)
            }
            G::Tm2 { m, ambient } => {
                write!(f, "T_{{{m},2}}")?;
                amb(f, 2 * m, ambient)
            }
            G::S2Wrh { h, ambient } => {
                write!(f, "S_2≀S_{h}")?;
                amb(f, 2 * h, ambient)
            }
            G::S2WrhCapAlt { h, ambient } => {
                write!(f, "(S_2≀S_{h}) ∩ A_{}", 2 * h)?;
                amb(f, 2 * h, ambient)
            }
            G::SmWr3 { m } => write!(f, "S_{m}≀S_3"),
            G::SmWr3CapAlt { m } => write!(f, "(S_{m}≀S_3) ∩ A_{}", 3 * m),
            G::Tm3 { m } => write!(f, "T_{{{m},3}}"),
            G::SkTimesSporadic { k, group, variant } => match variant {
                SporadicVariant::Full => write!(f, "S_{k} × {}", group.name()),
                SporadicVariant::AltK => write!(f, "A_{k} × {}", group.name()),
                SporadicVariant::CapAlt => {
                    write!(f, "(S_{k} × {}) ∩ A_{}", group.name(), k + group.degree())
                }
            },
            G::AltTimesS2Wr2 { k } => write!(f, "A_{k} × S_2≀S_2"),
            G::Nk { k } => write!(f, "N_{k}"),
            G::Tk2h { k, h } => write!(f, "T_{{{k},2,{h}}}"),
        }
    }
}

/// Linear characters of the sporadic groups whose inductions are tabulated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SporadicCharacter {
    Trivial,
    /// The restriction of the sign character.
    Sign,
    /// A non-real linear character.
    Complex,
    ComplexConjugate,
    /// Inflation of a degree 3 Weil character of `SL_3(2)`.
    Weil,
    WeilConjugate,
    /// Inflation of a linear character of the Galois quotient `C_3`.
    Galois,
}

impl SporadicCharacter {
    /// `ψ ⊗ sgn` for a group that contains odd permutations.
    fn sign_twist(self) -> Self {
        match self {
            SporadicCharacter::Trivial => SporadicCharacter::Sign,
            SporadicCharacter::Sign => SporadicCharacter::Trivial,
            SporadicCharacter::Complex => SporadicCharacter::ComplexConjugate,
            SporadicCharacter::ComplexConjugate => SporadicCharacter::Complex,
            other => other,
        }
    }
}

/// `χ^μ ≀̃ χ^ν` as one tensor factor of a wreath character.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct WreathFactor {
    pub mu: Partition,
    pub nu: Partition,
}

impl WreathFactor {
    pub fn new(mu: Partition, nu: Partition) -> Self {
        WreathFactor { mu, nu }
    }
}

/// An irreducible character of the overgroup of a family.
///
/// `Wreath` covers every irreducible of `S_k × S_m≀S_h`: the factors
/// `(μ_i, ν_i)` have distinct `μ_i ⊢ m` and `Σ|ν_i| = h`, and the character is
/// `χ^λ ⊠ (⊠_i χ^{μ_i}≀̃χ^{ν_i})↑`. A single factor is an elementary character.
/// For `A_m≀S_2` the `μ_i` label characters of `A_m`, so `μ` and `μ′` name the
/// same one; a self-conjugate `μ` repeated twice names its two constituents.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", content = "params")]
pub enum IrredCharDescriptor {
    Sym {
        lambda: Partition,
    },
    Product {
        lambda: Partition,
        mu: Partition,
    },
    Wreath {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        lambda: Option<Partition>,
        factors: Vec<WreathFactor>,
    },
    Sporadic {
        lambda: Partition,
        character: SporadicCharacter,
    },
}

type C = IrredCharDescriptor;

impl IrredCharDescriptor {
    /// `χ^λ ⊠ (χ^μ ≀̃ χ^ν)`, or `χ^μ ≀̃ χ^ν` when `lambda` is `None`.
    pub fn elementary(lambda: Option<Partition>, mu: Partition, nu: Partition) -> Self {
        C::Wreath {
            lambda,
            factors: vec![WreathFactor::new(mu, nu)],
        }
    }

    fn canonical(mut self) -> Self {
        if let C::Wreath { factors, .. } = &mut self {
            factors.sort();
        }
        self
    }

    fn twisted(&self, t: Twist) -> Self {
        let c = |p: &Partition, on: bool| if on { p.conjugate() } else { p.clone() };
        match self {
            C::Sym { lambda } => C::Sym {
                lambda: c(lambda, t.first),
            },
            C::Product { lambda, mu } => C::Product {
                lambda: c(lambda, t.first),
                mu: c(mu, t.base),
            },
            C::Wreath { lambda, factors } => C::Wreath {
                lambda: lambda.as_ref().map(|l| c(l, t.first)),
                factors: factors
                    .iter()
                    .map(|f| WreathFactor::new(c(&f.mu, t.base), c(&f.nu, t.top)))
                    .collect(),
            }
            .canonical(),
            C::Sporadic { lambda, character } => C::Sporadic {
                lambda: c(lambda, t.first),
                character: if t.base {
                    character.sign_twist()
                } else {
                    *character
                },
            },
        }
    }
}

impl fmt::Display for IrredCharDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            C::Sym { lambda } => write!(f, "χ^{lambda}"),
            C::Product { lambda, mu } => write!(f, "χ^{lambda} ⊠ χ^{mu}"),
            C::Wreath { lambda, factors } => {
                if let Some(l) = lambda {
                    write!(f, "χ^{l} ⊠ ")?;
                }
                let parts: Vec<String> = factors
                    .iter()
                    .map(|x| format!("χ^{}≀χ^{}", x.mu, x.nu))
                    .collect();
                if parts.len() == 1 {
                    write!(f, "{}", parts[0])
                } else {
                    write!(f, "({})↑", parts.join(" ⊠ "))
                }
            }
            C::Sporadic { lambda, character } => write!(f, "χ^{lambda} ⊠ {character:?}"),
        }
    }
}

/// One entry of [`enumerate_irreducibles`]. For index two kernels
/// `self_paired` records whether `ρ = ρ × η`, in which case `ρ` splits on
/// restriction and both constituents induce back to `ρ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterEntry {
    pub character: IrredCharDescriptor,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub self_paired: Option<bool>,
}

// --- symmetric-function building blocks --------------------------------------------

/// `(ρ_N)↑^G` at the level of symmetric functions: `big` alone when
/// `ρ = ρ × η`, otherwise `big + twisted`.
pub fn index_two_lift(
    big: &SchurExpansion,
    twisted: &SchurExpansion,
    self_paired: bool,
) -> Result<SchurExpansion, GroupError> {
    let (db, dt) = (big.degrees(), twisted.degrees());
    if db.len() > 1 || dt.len() > 1 || db != dt {
        return Err(GroupError::DegreeMismatch {
            left: format!("{db:?}"),
            right: format!("{dt:?}"),
        });
    }
    Ok(if self_paired {
        big.clone()
    } else {
        big.add(twisted)
    })
}

/// `χ^λ_{A_n}↑^{S_n}`: `s_λ` for self-conjugate `λ`, else `s_λ + s_λ′`.
pub fn alternating_induction(lambda: &Partition) -> SchurExpansion {
    let conj = lambda.conjugate();
    if conj == *lambda {
        SchurExpansion::from_partition(lambda.clone())
    } else {
        SchurExpansion::sum_of([lambda.clone(), conj])
    }
}

fn check_cap(degree: usize, cap: usize) -> Result<(), GroupError> {
    if degree > cap {
        Err(GroupError::DegreeCapExceeded { degree, cap })
    } else {
        Ok(())
    }
}

/// `s_ν∘s_μ`, routed to the domino rule for `|ν| = 2`, the closed forms for
/// `|μ| = 2` with linear `ν`, and the character oracle otherwise.
pub fn plethysm_dispatch(
    mu: &Partition,
    nu: &Partition,
    caps: &Caps,
) -> Result<SchurExpansion, GroupError> {
    if mu.is_empty() {
        return Err(GroupError::InvalidCharacter("empty inner partition".into()));
    }
    let degree = mu.size() * nu.size();
    match (mu.size(), nu.size()) {
        (_, 0) => Ok(SchurExpansion::one()),
        (_, 1) => Ok(SchurExpansion::from_partition(mu.clone())),
        (1, _) => Ok(SchurExpansion::from_partition(nu.clone())),
        (_, 2) => {
            check_cap(degree, caps.combinatorial)?;
            Ok(plethysm_two(mu, nu)?)
        }
        (2, _) if nu.is_linear() => {
            check_cap(degree, caps.combinatorial)?;
            Ok(closed_form_plethysm(mu, nu)?)
        }
        _ => Ok(plethysm_capped(mu, nu, caps.oracle)?),
    }
}

/// `s_ν∘(s_μ + s_μ′)` restricted to the ν ⊢ 1, 2 cases needed for `A_m≀S_2`;
/// collapses to `s_ν∘s_μ` for self-conjugate `μ`.
fn alt_plethysm(mu: &Partition, nu: &Partition, caps: &Caps) -> Result<SchurExpansion, GroupError> {
    let conj = mu.conjugate();
    if conj == *mu {
        return plethysm_dispatch(mu, nu, caps);
    }
    match nu.size() {
        1 => Ok(alternating_induction(mu)),
        2 => {
            check_cap(2 * mu.size(), caps.combinatorial)?;
            Ok(plethysm_dispatch(mu, nu, caps)?
                .add(&multiply_schur(mu, &conj))
                .add(&plethysm_dispatch(&conj, nu, caps)?))
        }
        _ => Err(GroupError::Unsupported(format!(
            "A_m≀S_h factor with |ν| = {}",
            nu.size()
        ))),
    }
}

/// Tabulated inductions `ψ↑^{S_l}` of the supported sporadic characters.
pub fn sporadic_induced(
    group: Sporadic,
    character: SporadicCharacter,
) -> Result<SchurExpansion, GroupError> {
    use SporadicCharacter as S;
    let sum = |ps: &[&[usize]]| {
        SchurExpansion::sum_of(ps.iter().map(|p| Partition::from_multiset(p.to_vec())))
    };
    let unsupported = || {
        Err(GroupError::UnsupportedCharacter(format!(
            "{character:?} of {}: no tabulated induced decomposition",
            group.name()
        )))
    };
    match (group, character) {
        (Sporadic::Pgl2_5, S::Trivial) => Ok(x_p()),
        (Sporadic::Pgl2_5, S::Sign) => Ok(x_p().omega()),
        (Sporadic::Agl1_5, S::Trivial) => Ok(sum(&[&[5], &[2, 2, 1]])),
        (Sporadic::Agl1_5, S::Sign) => Ok(sum(&[&[1, 1, 1, 1, 1], &[3, 2]])),
        (Sporadic::Agl1_5, S::Complex | S::ComplexConjugate) => Ok(sum(&[&[3, 1, 1]])),
        (Sporadic::Asl3_2, S::Weil | S::WeilConjugate) => Ok(sum(&[&[4, 2, 1, 1]])),
        _ => unsupported(),
    }
}

/// `x_P = s_(6) + s_(2³)`, the induced trivial character of `PGL_2(5) ≤ S_6`.
pub fn x_p() -> SchurExpansion {
    SchurExpansion::sum_of([Partition::row(6), Partition::rectangle(2, 3)])
}

/// `x_P(λ) = x_P s_λ + ω(x_P) s_λ′`.
pub fn x_p_lambda(lambda: &Partition) -> SchurExpansion {
    let x = x_p();
    x.multiply(&SchurExpansion::from_partition(lambda.clone()))
        .add(
            &x.omega()
                .multiply(&SchurExpansion::from_partition(lambda.conjugate())),
        )
}

/// The induced trivial character of the Mathieu group `M_12 ≤ S_12`.
pub fn m12_trivial_induced() -> SchurExpansion {
    let parts: [&[usize]; 8] = [
        &[12],
        &[6, 6],
        &[6, 2, 2, 2],
        &[4, 4, 4],
        &[4, 4, 1, 1, 1, 1],
        &[3, 3, 3, 3],
        &[2, 2, 2, 2, 2, 2],
        &[1; 12],
    ];
    SchurExpansion::sum_of(parts.iter().map(|p| Partition::from_multiset(p.to_vec())))
}

// --- validation and induction ---------------------------------------------------

fn check_size(p: &Partition, n: usize, what: &str) -> Result<(), GroupError> {
    if p.size() != n {
        return Err(GroupError::InvalidCharacter(format!(
            "{what} = {p} is not a partition of {n}"
        )));
    }
    Ok(())
}

fn validate_factors(
    factors: &[WreathFactor],
    m: usize,
    h: usize,
    alt: bool,
) -> Result<(), GroupError> {
    let mut total = 0;
    let mut seen: Vec<&Partition> = Vec::new();
    for f in factors {
        check_size(&f.mu, m, "μ")?;
        if f.nu.is_empty() {
            return Err(GroupError::InvalidCharacter(
                "empty ν in a wreath factor".into(),
            ));
        }
        total += f.nu.size();
        let clash = seen
            .iter()
            .any(|s| **s == f.mu || (alt && **s == f.mu.conjugate()));
        // the two constituents of a self-conjugate A_m label may each occur once
        let split_pair = alt && f.mu.is_self_conjugate() && f.nu.size() == 1;
        if clash && !(split_pair && seen.iter().filter(|s| ***s == f.mu).count() == 1) {
            return Err(GroupError::InvalidCharacter(format!(
                "repeated base character {}",
                f.mu
            )));
        }
        seen.push(&f.mu);
    }
    if total != h {
        return Err(GroupError::InvalidCharacter(format!(
            "top sizes sum to {total}, expected {h}"
        )));
    }
    Ok(())
}

/// Checks that `rho` is a character of the overgroup of `g`.
pub fn validate_character(
    g: &GroupDescriptor,
    rho: &IrredCharDescriptor,
) -> Result<(), GroupError> {
    g.validate()?;
    let alt_base = matches!(g, G::AmWr2 { .. });
    match (g.overgroup(), rho) {
        (Overgroup::Sym(n), C::Sym { lambda }) => check_size(lambda, n, "λ"),
        (Overgroup::Young(k, l), C::Product { lambda, mu }) => {
            check_size(lambda, k, "λ")?;
            check_size(mu, l, "μ")
        }
        (Overgroup::Wreath { k, m, h }, C::Wreath { lambda, factors }) => {
            match (k, lambda) {
                (0, None) => {}
                (0, Some(_)) => {
                    return Err(GroupError::InvalidCharacter(
                        "no S_k factor in this group".into(),
                    ))
                }
                (_, Some(l)) => check_size(l, k, "λ")?,
                (_, None) => {
                    return Err(GroupError::InvalidCharacter(
                        "missing λ for the S_k factor".into(),
                    ))
                }
            }
            validate_factors(factors, m, h, alt_base)
        }
        (Overgroup::Sporadic(k, group), C::Sporadic { lambda, character }) => {
            check_size(lambda, k, "λ")?;
            sporadic_induced(group, *character).map(|_| ())
        }
        _ => Err(GroupError::InvalidCharacter(format!(
            "{rho} does not parameterise a character of {g}"
        ))),
    }
}

/// Symmetric function of `ρ↑^{S}` for `ρ` a character of the overgroup `S`
/// inside its natural symmetric group (no alternating or kernel adjustment).
fn overgroup_induced(
    g: &GroupDescriptor,
    rho: &IrredCharDescriptor,
    caps: &Caps,
) -> Result<SchurExpansion, GroupError> {
    let alt = match g.embedding() {
        Embedding::Alt { both } => Some(both),
        _ => None,
    };
    let first = |lambda: &Partition| {
        if alt.is_some() {
            alternating_induction(lambda)
        } else {
            SchurExpansion::from_partition(lambda.clone())
        }
    };
    let out = match rho {
        C::Sym { lambda } => SchurExpansion::from_partition(lambda.clone()),
        C::Product { lambda, mu } => {
            check_cap(lambda.size() + mu.size(), caps.combinatorial)?;
            let second = if alt == Some(true) {
                alternating_induction(mu)
            } else {
                SchurExpansion::from_partition(mu.clone())
            };
            first(lambda).multiply(&second)
        }
        C::Wreath { lambda, factors } => {
            check_cap(g.degree(), caps.combinatorial)?;
            let alt_base = matches!(g, G::AmWr2 { .. });
            let mut acc = match lambda {
                Some(l) => first(l),
                None => SchurExpansion::one(),
            };
            for f in factors {
                let p = if alt_base {
                    alt_plethysm(&f.mu, &f.nu, caps)?
                } else {
                    plethysm_dispatch(&f.mu, &f.nu, caps)?
                };
                acc = acc.multiply(&p);
            }
            acc
        }
        C::Sporadic { lambda, character } => {
            let G::SkTimesSporadic { group, .. } = g else {
                unreachable!("validated")
            };
            first(lambda).multiply(&sporadic_induced(*group, *character)?)
        }
    };
    Ok(out)
}

/// `ρ × η` for an index two kernel; `None` for other embeddings.
pub fn twisted_character(
    g: &GroupDescriptor,
    rho: &IrredCharDescriptor,
) -> Option<IrredCharDescriptor> {
    match g.embedding() {
        Embedding::Kernel(t) => {
            let mut t = t;
            if let G::SkTimesSporadic { group, .. } = g {
                // ψ ⊗ sgn↓L is ψ itself when L consists of even permutations
                t.base = !group.is_even();
            }
            Some(rho.twisted(t))
        }
        _ => None,
    }
}

/// Whether `ρ = ρ × η`; `None` unless `g` is an index two kernel.
pub fn self_paired(g: &GroupDescriptor, rho: &IrredCharDescriptor) -> Option<bool> {
    twisted_character(g, rho).map(|t| t == rho.clone().canonical())
}

/// The Schur expansion of `ρ↑^{S_n}` (for kernels, of `ρ_N↑^{S_n}`).
pub fn induced_symfunc(
    g: &GroupDescriptor,
    rho: &IrredCharDescriptor,
) -> Result<SchurExpansion, GroupError> {
    induced_symfunc_with(g, rho, &Caps::default())
}

pub fn induced_symfunc_with(
    g: &GroupDescriptor,
    rho: &IrredCharDescriptor,
    caps: &Caps,
) -> Result<SchurExpansion, GroupError> {
    validate_character(g, rho)?;
    check_cap(g.degree(), caps.combinatorial)?;
    let rho = rho.clone().canonical();
    let big = overgroup_induced(g, &rho, caps)?;
    let induced = match twisted_character(g, &rho) {
        Some(twisted) => {
            let paired = twisted == rho;
            let other = if paired {
                big.clone()
            } else {
                overgroup_induced(g, &twisted, caps)?
            };
            index_two_lift(&big, &other, paired)?
        }
        None => big,
    };
    Ok(match g.extra_points() {
        0 => induced,
        e => induced.multiply(&SchurExpansion::from_partition(Partition::row(e))),
    })
}

/// Whether `ρ` is induced-multiplicity-free, with an offending constituent
/// when it is not.
pub fn is_induced_mf(
    g: &GroupDescriptor,
    rho: &IrredCharDescriptor,
) -> Result<MfVerdict, GroupError> {
    Ok(MfVerdict::of(&induced_symfunc(g, rho)?))
}

pub fn is_induced_mf_with(
    g: &GroupDescriptor,
    rho: &IrredCharDescriptor,
    caps: &Caps,
) -> Result<MfVerdict, GroupError> {
    Ok(MfVerdict::of(&induced_symfunc_with(g, rho, caps)?))
}

// --- enumeration ------------------------------------------------------------------

/// All factor lists for irreducibles of `S_m≀S_h`: distinct base partitions,
/// each carrying a partition of its share of `h`.
fn wreath_factor_lists(m: usize, h: usize) -> Vec<Vec<WreathFactor>> {
    fn go(
        bases: &[Partition],
        left: usize,
        cur: &mut Vec<WreathFactor>,
        out: &mut Vec<Vec<WreathFactor>>,
    ) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        let Some((first, rest)) = bases.split_first() else {
            return;
        };
        go(rest, left, cur, out);
        for size in 1..=left {
            for nu in partitions_of(size) {
                cur.push(WreathFactor::new(first.clone(), nu));
                go(rest, left - size, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(&partitions_of(m), h, &mut Vec::new(), &mut out);
    out
}

/// Characters of `A_m≀S_2` up to the `ρ_N` convention: one label per
/// conjugate pair `{μ, μ′}`.
fn alt_wreath2_factor_lists(m: usize) -> Vec<Vec<WreathFactor>> {
    let labels: Vec<Partition> = partitions_of(m)
        .into_iter()
        .filter(|p| *p <= p.conjugate())
        .collect();
    let one = Partition::row(1);
    let mut out = Vec::new();
    for mu in &labels {
        for nu in partitions_of(2) {
            out.push(vec![WreathFactor::new(mu.clone(), nu)]);
        }
        if mu.is_self_conjugate() {
            out.push(vec![WreathFactor::new(mu.clone(), one.clone()); 2]);
        }
    }
    for (i, a) in labels.iter().enumerate() {
        for b in &labels[i + 1..] {
            out.push(vec![
                WreathFactor::new(a.clone(), one.clone()),
                WreathFactor::new(b.clone(), one.clone()),
            ]);
        }
    }
    out
}

fn overgroup_characters(g: &GroupDescriptor) -> Result<Vec<IrredCharDescriptor>, GroupError> {
    let out = match g.overgroup() {
        Overgroup::Sym(n) => partitions_of(n)
            .into_iter()
            .map(|lambda| C::Sym { lambda })
            .collect(),
        Overgroup::Young(k, l) => {
            let mut v = Vec::new();
            for lambda in partitions_of(k) {
                for mu in partitions_of(l) {
                    v.push(C::Product {
                        lambda: lambda.clone(),
                        mu,
                    });
                }
            }
            v
        }
        Overgroup::Wreath { k, m, h } => {
            let lists = if matches!(g, G::AmWr2 { .. }) {
                alt_wreath2_factor_lists(m)
            } else {
                wreath_factor_lists(m, h)
            };
            let lambdas: Vec<Option<Partition>> = if k == 0 {
                vec![None]
            } else {
                partitions_of(k).into_iter().map(Some).collect()
            };
            let mut v = Vec::new();
            for lambda in &lambdas {
                for factors in &lists {
                    v.push(
                        C::Wreath {
                            lambda: lambda.clone(),
                            factors: factors.clone(),
                        }
                        .canonical(),
                    );
                }
            }
            v
        }
        Overgroup::Sporadic(k, group) => {
            use SporadicCharacter as S;
            let chars: &[S] = match group {
                Sporadic::Pgl2_5 => &[S::Trivial, S::Sign],
                Sporadic::Agl1_5 => &[S::Trivial, S::Sign, S::Complex, S::ComplexConjugate],
                Sporadic::Asl3_2 => &[S::Weil, S::WeilConjugate],
                Sporadic::PGammaL2_8 => {
                    return Err(GroupError::Unsupported(
                        "characters of PΓL2(8) are not tabulated".into(),
                    ));
                }
            };
            let mut v = Vec::new();
            for lambda in partitions_of(k) {
                for &character in chars {
                    v.push(C::Sporadic {
                        lambda: lambda.clone(),
                        character,
                    });
                }
            }
            v
        }
    };
    Ok(out)
}

/// The irreducible characters of `g`, one descriptor per induced character.
///
/// Alternating factors are listed once per conjugate pair, index two kernels
/// once per orbit `{ρ, ρ × η}` with the self-paired flag set.
pub fn enumerate_irreducibles(g: &GroupDescriptor) -> Result<Vec<CharacterEntry>, GroupError> {
    g.validate()?;
    check_cap(g.degree(), DEFAULT_COMBINATORIAL_CAP)?;
    let all = overgroup_characters(g)?;
    let out = match g.embedding() {
        Embedding::Whole => all
            .into_iter()
            .map(|character| CharacterEntry {
                character,
                self_paired: None,
            })
            .collect(),
        Embedding::Alt { both } => {
            let keep = |p: &Partition| *p <= p.conjugate();
            all.into_iter()
                .filter(|c| match c {
                    C::Product { lambda, mu } => keep(lambda) && (!both || keep(mu)),
                    C::Wreath {
                        lambda: Some(l), ..
                    }
                    | C::Sporadic { lambda: l, .. } => keep(l),
                    _ => true,
                })
                .map(|character| CharacterEntry {
                    character,
                    self_paired: None,
                })
                .collect()
        }
        Embedding::Kernel(_) => {
            let mut seen = BTreeSet::new();
            let mut v = Vec::new();
            for rho in all {
                let twisted = twisted_character(g, &rho).expect("kernel");
                let rep = rho.clone().min(twisted.clone());
                if seen.insert(rep.clone()) {
                    v.push(CharacterEntry {
                        character: rep,
                        self_paired: Some(twisted == rho),
                    });
                }
            }
            v
        }
    };
    Ok(out)
}

// --- classification ---------------------------------------------------------------

/// A family member admitted by [`classify_subgroups`], with the side
/// condition it had to meet.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifiedGroup {
    pub group: GroupDescriptor,
    pub condition: String,
}

fn is_square(m: usize) -> bool {
    let r = (m as f64).sqrt().round() as usize;
    r * r == m
}

/// Whether `k` lies in the window `{2m−3, …, 2m}` that excludes the index two
/// subgroups of `S_k × S_m≀S_2`.
pub fn in_wreath_window(k: usize, m: usize) -> bool {
    k + 3 >= 2 * m && k <= 2 * m
}

/// The multiplicity-free subgroups of `S_n` for `n ≥ 66`, one descriptor per
/// group up to conjugacy. Purely formulaic; see [`satisfies_side_conditions`].
///
/// Where two family labels describe the same group (`A_1 = S_1`, or
/// `(S_k × L) ∩ A_n = A_k × L` for `L` inside `A_l`) only one is listed.
pub fn classify_subgroups(n: usize) -> Result<Vec<ClassifiedGroup>, GroupError> {
    if n < CLASSIFICATION_THRESHOLD {
        return Err(GroupError::BelowValidityThreshold { n });
    }
    let mut out = Vec::new();
    let mut push =
        |group: GroupDescriptor, condition: String| out.push(ClassifiedGroup { group, condition });
    push(G::SymmetricGroup { n }, "always".into());
    push(G::Alternating { n }, "always".into());
    for k in 1..=n / 2 {
        let l = n - k;
        push(G::Young { k, l }, format!("k + l = {n}, k ≤ l"));
        if k >= 2 {
            push(G::YoungCapAlt { k, l }, format!("k + l = {n}, 2 ≤ k ≤ l"));
        }
    }
    for k in 3..n {
        push(G::AltTimesSym { k, l: n - k }, "k ≥ 3".into());
    }
    for k in 3..=n / 2 {
        if n - k >= 3 {
            push(G::AltTimesAlt { k, l: n - k }, "3 ≤ k ≤ l".into());
        }
    }
    for m in 2..=(n - 1) / 2 {
        let k = n - 2 * m;
        push(G::SkSmWr2 { k, m }, "k ≥ 1, m ≥ 2".into());
        if !in_wreath_window(k, m) {
            let cond = format!("k = {k} ∉ {{{}, …, {}}}", 2 * m - 3, 2 * m);
            push(G::SkSmWr2CapAlt { k, m }, cond.clone());
            push(G::Tkmh { k, m, h: 2 }, cond);
        }
    }
    for h in 3..=(n - 1) / 2 {
        let k = n - 2 * h;
        push(G::SkS2Wrh { k, h }, "k ≥ 1, h ≥ 3".into());
        if k >= 2 * h + 2 {
            push(
                G::SkS2WrhCapAlt { k, h },
                format!("k = {k} ≥ 2h + 2 = {}", 2 * h + 2),
            );
        }
    }
    if n.is_multiple_of(2) {
        let m = n / 2;
        for g in [
            G::SmWr2 { m, ambient: n },
            G::SmWr2CapAlt { m, ambient: n },
            G::AmWr2 { m, ambient: n },
            G::Tm2 { m, ambient: n },
        ] {
            push(g, "n = 2m".into());
        }
        push(G::S2Wrh { h: m, ambient: n }, "n = 2h".into());
        push(G::S2WrhCapAlt { h: m, ambient: n }, "n = 2h".into());
    }
    if n.is_multiple_of(3) {
        let m = n / 3;
        push(G::SmWr3 { m }, "n = 3m".into());
        push(G::SmWr3CapAlt { m }, "n = 3m".into());
        push(G::Tm3 { m }, "n = 3m".into());
    }
    for group in Sporadic::ALL {
        let k = n - group.degree();
        push(
            G::SkTimesSporadic {
                k,
                group,
                variant: SporadicVariant::Full,
            },
            "k ≥ 1".into(),
        );
        push(
            G::SkTimesSporadic {
                k,
                group,
                variant: SporadicVariant::AltK,
            },
            "k ≥ 3".into(),
        );
        if !group.is_even() {
            push(
                G::SkTimesSporadic {
                    k,
                    group,
                    variant: SporadicVariant::CapAlt,
                },
                "k ≥ 1".into(),
            );
        }
    }
    push(G::AltTimesS2Wr2 { k: n - 4 }, "k ≥ 3".into());
    push(G::Nk { k: n - 4 }, "k ≥ 1".into());
    for h in [3, 4] {
        push(G::Tk2h { k: n - 2 * h, h }, "h ∈ {3, 4}".into());
    }
    if n % 2 == 1 && is_square((n - 1) / 2) {
        let m = (n - 1) / 2;
        push(G::AmWr2 { m, ambient: n }, format!("m = {m} is a square"));
    }
    Ok(out)
}

/// Independent membership test for the classification list at degree `n`.
pub fn satisfies_side_conditions(g: &GroupDescriptor, n: usize) -> bool {
    if g.validate().is_err() || g.degree() != n || n < CLASSIFICATION_THRESHOLD {
        return false;
    }
    match *g {
        G::SymmetricGroup { .. } | G::Alternating { .. } => true,
        G::Young { k, l } => k <= l,
        G::YoungCapAlt { k, l } => 2 <= k && k <= l,
        G::AltTimesSym { k, .. } => k >= 3,
        G::AltTimesAlt { k, l } => 3 <= k && k <= l,
        G::SkSmWr2 { m, .. } => m >= 2,
        G::SkSmWr2CapAlt { k, m } => m >= 2 && !(2 * m <= k + 3 && k <= 2 * m),
        G::Tkmh { k, m, h } => h == 2 && m >= 2 && !(2 * m <= k + 3 && k <= 2 * m),
        G::SkS2Wrh { h, .. } => h >= 3,
        G::SkS2WrhCapAlt { k, h } => h >= 3 && k >= 2 * h + 2,
        G::SmWr2 { m, ambient } | G::SmWr2CapAlt { m, ambient } | G::Tm2 { m, ambient } => {
            m >= 2 && ambient == 2 * m
        }
        G::AmWr2 { m, ambient } => m >= 2 && (ambient == 2 * m || is_square(m)),
        G::S2Wrh { h, ambient } | G::S2WrhCapAlt { h, ambient } => h >= 3 && ambient == 2 * h,
        G::SmWr3 { m } | G::SmWr3CapAlt { m } | G::Tm3 { m } => m >= 2,
        G::SkTimesSporadic { k, group, variant } => match variant {
            SporadicVariant::Full => true,
            SporadicVariant::AltK => k >= 3,
            SporadicVariant::CapAlt => !group.is_even(),
        },
        G::AltTimesS2Wr2 { k } => k >= 3,
        G::Nk { .. } => true,
        G::Tk2h { h, .. } => h == 3 || h == 4,
    }
}

// --- closed-form predicates ----------------------------------------------------------

/// `ν^{′m}`: `ν′` for odd `m`, `ν` for even `m`.
fn conj_pow(nu: &Partition, m: usize) -> Partition {
    nu.conjugate_pow(m)
}

fn row2() -> Partition {
    Partition::row(2)
}

fn col2() -> Partition {
    Partition::column(2)
}

/// Whether `s_(1^k)(s_ν∘s_(m)) + s_(k)(s_ν̄∘s_(1^m))` is multiplicity-free
/// (`k, m ≥ 2`, `ν, ν̄ ⊢ 2`).
pub fn hook_and_box_mf(k: usize, m: usize, nu: &Partition, nubar: &Partition) -> bool {
    let k = k as isize;
    let m2 = 2 * m as isize;
    let is_row = *nu == row2();
    let bar_row = *nubar == conj_pow(&row2(), m);
    let in_range = |lo: isize, hi: isize| k >= m2 + lo && k <= m2 + hi;
    let bad = if is_row && bar_row {
        in_range(-4, 1)
    } else {
        in_range(-3, 0)
    };
    !bad
}

/// A cell of the common-constituent tables: `ν` and `ν̄` for even `m`,
/// `None` meaning either partition of 2 works.
type Cell = (Option<bool>, Option<bool>);

const R: Option<bool> = Some(true);
const L: Option<bool> = Some(false);
const ANY: Option<bool> = None;

/// Hooks `(u+1, 1^v)`, `u, v ∈ {2m−2, 2m−1, 2m}`; `true` is `(2)`.
const HOOK_TABLE: [[Cell; 3]; 3] = [
    [(L, L), (L, ANY), (L, R)],
    [(ANY, L), (ANY, ANY), (ANY, R)],
    [(R, L), (R, ANY), (R, R)],
];

/// `(u+1, 2, 1^{v−1})`, `u, v ∈ {2m−3, 2m−2, 2m−1}`.
const BOX_TABLE: [[Cell; 3]; 3] = [
    [(R, R), (R, ANY), (R, L)],
    [(ANY, R), (ANY, ANY), (ANY, L)],
    [(L, R), (L, ANY), (L, L)],
];

/// Which constituent shape a table describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HookBoxTable {
    /// `λ = (u+1, 1^v)`
    Hook,
    /// `λ = (u+1, 2, 1^{v−1})`
    HookAndBox,
}

impl HookBoxTable {
    /// Smallest admissible `u` (and `v`) relative to `2m`.
    fn offset(self) -> isize {
        match self {
            HookBoxTable::Hook => -2,
            HookBoxTable::HookAndBox => -3,
        }
    }

    /// The candidate constituent for row `i` and column `j` (0-based).
    pub fn lambda(self, m: usize, i: usize, j: usize) -> Partition {
        let base = (2 * m) as isize + self.offset();
        let u = (base + i as isize) as usize;
        let v = (base + j as isize) as usize;
        match self {
            HookBoxTable::Hook => Partition::hook(u, v),
            HookBoxTable::HookAndBox => {
                let mut parts = vec![u + 1, 2];
                parts.extend(std::iter::repeat_n(1, v - 1));
                Partition::from_multiset(parts)
            }
        }
    }

    /// The `k` for which the cell's `λ` has size `2m + k`.
    pub fn k(self, m: usize, i: usize, j: usize) -> usize {
        self.lambda(m, i, j).size() - 2 * m
    }
}

/// Whether `λ` of the given cell is a common constituent of
/// `s_(1^k)(s_ν∘s_(m))` and `s_(k)(s_ν̄∘s_(1^m))`, read off the tables
/// (stated for even `m`; odd `m` conjugates `ν̄`).
pub fn hook_and_box_table_predicate(
    table: HookBoxTable,
    m: usize,
    i: usize,
    j: usize,
    nu: &Partition,
    nubar: &Partition,
) -> bool {
    let cell = match table {
        HookBoxTable::Hook => HOOK_TABLE[i][j],
        HookBoxTable::HookAndBox => BOX_TABLE[i][j],
    };
    let nubar_even = conj_pow(nubar, m);
    let fits = |want: Option<bool>, p: &Partition| want.is_none_or(|r| (*p == row2()) == r);
    fits(cell.0, nu) && fits(cell.1, &nubar_even)
}

/// Whether `s_(1^k)(s_(h)∘s_(2)) + s_(k)(s_(h)∘s_(1²))` is multiplicity-free.
pub fn even_and_strip_mf(k: usize, h: usize) -> bool {
    k >= 2 * h + 2
}

/// A common constituent `λ` of both summands in the even-and-strip sum for
/// `k ≤ 2h+1`, together with the even `μ` and the `ν` with even conjugate it
/// comes from. `None` when the recipe does not yield partitions.
pub fn even_and_strip_witness(k: usize, h: usize) -> Option<(Partition, Partition, Partition)> {
    if k == 0 || k > 2 * h + 1 {
        return None;
    }
    let r = 2 * h as isize - k as isize;
    let (h, k) = (h as isize, k as isize);
    let mk = |v: Vec<isize>| -> Option<Partition> {
        if v.iter().any(|&x| x < 0) {
            return None;
        }
        Partition::new(v.into_iter().map(|x| x as usize).collect()).ok()
    };
    let ones = |n: isize| std::iter::repeat_n(1, n.max(0) as usize);
    let with_ones = |mut head: Vec<isize>, n: isize| {
        head.extend(ones(n));
        head
    };
    let (l, m, n) = match r {
        -1 => (
            with_ones(vec![2 * h + 1], 2 * h),
            vec![2 * h],
            with_ones(vec![], 2 * h),
        ),
        0 => (
            with_ones(vec![2 * h], 2 * h),
            vec![2 * h],
            with_ones(vec![], 2 * h),
        ),
        1 => (
            with_ones(vec![2 * h], 2 * h - 1),
            vec![2 * h],
            with_ones(vec![], 2 * h),
        ),
        2 => (
            with_ones(vec![2 * h - 1, 2], 2 * h - 3),
            vec![2 * h - 2, 2],
            with_ones(vec![2, 2], 2 * h - 4),
        ),
        _ => match r.rem_euclid(4) {
            3 => {
                let c = (k - 1) / 2;
                (
                    with_ones(vec![h + c, h - c], k),
                    vec![h + c, h - c],
                    with_ones(vec![h - c, h - c], k - 1),
                )
            }
            0 => {
                let c = k / 2;
                (
                    with_ones(vec![h + c, h - c], k),
                    vec![h + c, h - c],
                    with_ones(vec![h - c, h - c], k),
                )
            }
            1 => (
                with_ones(vec![h + (k - 3) / 2, h - (k + 1) / 2, 2], k),
                vec![h + (k - 3) / 2, h - (k + 1) / 2, 2],
                with_ones(vec![h - (k + 1) / 2, h - (k + 1) / 2], k + 1),
            ),
            _ => (
                with_ones(vec![h + k / 2 - 1, h - k / 2, 2], k - 1),
                vec![h + k / 2 - 1, h - k / 2 - 1, 2],
                with_ones(vec![h - k / 2, h - k / 2], k),
            ),
        },
    };
    Some((mk(l)?, mk(m)?, mk(n)?))
}

/// Whether `s_(1^k)(s_(1^h)∘s_(2)) + s_(k)(s_(1^h)∘s_(1²))` is known to be
/// multiplicity-free (`h ∈ {3,4}`, `k ≥ 10`).
pub fn shift_small_mf(k: usize, h: usize) -> bool {
    (h == 3 || h == 4) && k >= 10
}

/// Whether `s_(h)∘s_(2) + s_(h)∘s_(1²)` is multiplicity-free.
pub fn double_even_mf(h: usize) -> bool {
    h % 2 == 1
}

/// Whether `s_(1^h)∘s_(2) + s_(1^h)∘s_(1²)` is multiplicity-free.
pub fn double_shift_mf(_h: usize) -> bool {
    true
}

/// Whether `s_(1²)(s_(h−1)∘s_(2)) + s_(2)(s_(h−1)∘s_(1²))` is multiplicity-free.
pub fn even_and_two_mf(_h: usize) -> bool {
    false
}

/// Whether `s_(1)(s_(h)∘s_(2) + s_(h)∘s_(1²))` is multiplicity-free.
pub fn one_plus_double_even_mf(_h: usize) -> bool {
    false
}

/// Whether `s_(1)(s_(1^h)∘s_(2) + s_(1^h)∘s_(1²))` is multiplicity-free.
pub fn one_plus_double_shift_mf(_h: usize) -> bool {
    false
}

fn non_square(a: usize, b: usize) -> Result<usize, GroupError> {
    if a == b || a == 0 || b == 0 {
        return Err(GroupError::InvalidParameters(format!(
            "({a}^{b}) must be a non-square rectangle"
        )));
    }
    Ok(a.abs_diff(b))
}

/// Whether `s_(1)(s_ν∘s_μ + s_ν̄∘s_μ′)` is multiplicity-free for non-square
/// `μ = (a^b)`: exactly when `a − b ∤ a`.
pub fn rectangle_and_one_box_mf(a: usize, b: usize) -> Result<bool, GroupError> {
    let d = non_square(a, b)?;
    Ok(!a.is_multiple_of(d))
}

/// Whether `s_ν∘s_μ + s_ν̄∘s_μ′` is multiplicity-free for non-square `μ = (a^b)`.
pub fn rotate_rectangles_mf(
    a: usize,
    b: usize,
    nu: &Partition,
    nubar: &Partition,
) -> Result<bool, GroupError> {
    let d = non_square(a, b)?;
    Ok(!(a.is_multiple_of(d) && *nu == row2() && *nubar == row2()))
}

/// Whether `s_ν∘s_μ + s_μ s_μ′` is multiplicity-free for non-square `μ = (a^b)`.
pub fn rotate_rectangle_mf(a: usize, b: usize, nu: &Partition) -> Result<bool, GroupError> {
    let d = non_square(a, b)?;
    let bad_nu = if (a * b).is_multiple_of(4) {
        row2()
    } else {
        col2()
    };
    Ok(!(a.is_multiple_of(d) && *nu == bad_nu))
}

/// Whether `s_ν∘s_μ + s_ν̄∘s_μ′` is multiplicity-free for the hook
/// `μ = (a+1, 1^b)` with `a < b`.
pub fn hooks_mf(a: usize, b: usize, nu: &Partition, nubar: &Partition) -> Result<bool, GroupError> {
    if a >= b {
        return Err(GroupError::InvalidParameters(format!(
            "hooks need a < b, got a = {a}, b = {b}"
        )));
    }
    Ok(!(b == a + 1 && nu == nubar))
}

/// `s_ν∘s_μ + s_ν̄∘s_μ′` for `μ = (a+1, a^{a−1})` is never multiplicity-free.
pub fn square_and_a_box_mf(_a: usize) -> bool {
    false
}

/// The common constituent `(2a, (2a−1)^{a−1}, 2, 1^{a−1})` for
/// `μ = (a+1, a^{a−1})`.
pub fn square_and_a_box_witness(a: usize) -> Partition {
    let mut parts = vec![2 * a];
    parts.extend(std::iter::repeat_n(2 * a - 1, a - 1));
    parts.push(2);
    parts.extend(std::iter::repeat_n(1, a - 1));
    Partition::from_multiset(parts)
}

/// Whether `s_λ s_(3,1) + s_λ′ s_(2,1,1)` is multiplicity-free for
/// rectangular `λ` of size at least 21: exactly when `λ` is not a square.
pub fn m2_index_two_mf(lambda: &Partition) -> bool {
    !lambda.is_square()
}

/// The common constituent `(a+2, a+1, a^{a−2}, 1)` for `λ = (a^a)`, `a ≥ 2`.
pub fn m2_index_two_witness(a: usize) -> Partition {
    let mut parts = vec![a + 2, a + 1];
    parts.extend(std::iter::repeat_n(a, a - 2));
    parts.push(1);
    Partition::from_multiset(parts)
}

/// `s_λ(s_(1²)∘s_(2)) + s_λ′(s_(1²)∘s_(1²))`.
pub fn m2_index_two_symfunc(lambda: &Partition) -> SchurExpansion {
    let l = SchurExpansion::from_partition(lambda.clone());
    let lc = SchurExpansion::from_partition(lambda.conjugate());
    l.multiply(&SchurExpansion::from_partition(Partition::from_multiset(
        vec![3, 1],
    )))
    .add(
        &lc.multiply(&SchurExpansion::from_partition(Partition::from_multiset(
            vec![2, 1, 1],
        ))),
    )
}

/// Shape families `(a^a, 1^i)`, `(a, 1^{a+i−1})`, `((a+1)^i, a^{a−i})` and
/// `((a+1)^{a+1−i}, a^i)` for `family` 1 to 4 (`None` outside their range).
pub fn x_p_family_lambda(family: u8, a: usize, i: isize) -> Option<Partition> {
    let (a_i, parts) = (a as isize, |v: Vec<isize>| -> Option<Partition> {
        if v.iter().any(|&x| x < 0) {
            None
        } else {
            Partition::new(v.into_iter().map(|x| x as usize).collect()).ok()
        }
    });
    let rep = |x: isize, n: isize| std::iter::repeat_n(x, n.max(0) as usize);
    match family {
        1 if (1..=6).contains(&i) => parts(rep(a_i, a_i).chain(rep(1, i)).collect()),
        2 if (-6..=6).contains(&i) && a_i > 1 - i => {
            parts(std::iter::once(a_i).chain(rep(1, a_i + i - 1)).collect())
        }
        3 if (1..=6).contains(&i) && a_i > i => {
            parts(rep(a_i + 1, i).chain(rep(a_i, a_i - i)).collect())
        }
        4 if (1..=7).contains(&i) && a_i >= i => {
            parts(rep(a_i + 1, a_i + 1 - i).chain(rep(a_i, i)).collect())
        }
        _ => None,
    }
}

/// Characters `χ^λ ⊠ 1` of `(S_k × PGL_2(5)) ∩ A_{k+6}` that are
/// induced-multiplicity-free for `k ≥ 58`.
pub fn pgl25_cap_alt_mf(lambda: &Partition) -> bool {
    let p = lambda.parts();
    let shaped = (lambda.is_rectangular() && !lambda.is_square())
        || lambda.is_column_near_rectangular()
        || lambda.is_column_unbalanced_fat_hook();
    if !shaped {
        return false;
    }
    let exceptional = (1..=4u8).any(|fam| {
        let a_max = lambda.size();
        (1..=a_max).any(|a| {
            let range: Vec<isize> = match fam {
                1 | 3 => vec![1, 2, 4, 5, 6],
                2 => (-1..=6).collect(),
                _ => vec![1, 2, 3],
            };
            range
                .into_iter()
                .any(|i| x_p_family_lambda(fam, a, i).is_some_and(|l| l.parts() == p))
        })
    });
    !exceptional
}

fn get_usize(params: &Value, key: &str) -> Result<usize, GroupError> {
    params
        .get(key)
        .and_then(Value::as_u64)
        .map(|v| v as usize)
        .ok_or_else(|| GroupError::InvalidParameters(format!("missing integer `{key}`")))
}

fn get_partition(params: &Value, key: &str) -> Result<Partition, GroupError> {
    let v = params
        .get(key)
        .ok_or_else(|| GroupError::InvalidParameters(format!("missing partition `{key}`")))?;
    let p: Partition = serde_json::from_value(v.clone())
        .map_err(|e| GroupError::InvalidParameters(format!("`{key}`: {e}")))?;
    Ok(p)
}

fn get_two(params: &Value, key: &str) -> Result<Partition, GroupError> {
    let p = get_partition(params, key)?;
    if p.size() != 2 {
        return Err(GroupError::InvalidParameters(format!(
            "`{key}` = {p} must be a partition of 2"
        )));
    }
    Ok(p)
}

fn get_str<'a>(params: &'a Value, key: &str) -> Result<&'a str, GroupError> {
    params
        .get(key)
        .and_then(Value::as_str)
        .ok_or_else(|| GroupError::InvalidParameters(format!("missing string `{key}`")))
}

/// Identifiers accepted by [`classification_corollary_check`].
pub const COROLLARY_IDS: &[&str] = &[
    "hook-and-box",
    "hook-and-box-table",
    "m2-index-two",
    "even-and-strip",
    "shift-small",
    "double-even",
    "double-shift",
    "even-and-two",
    "one-plus-double-even",
    "one-plus-double-shift",
    "rectangle-and-one-box",
    "rotate-rectangles",
    "rotate-rectangle",
    "hooks",
    "square-and-a-box",
    "sk-sm-wr2-class",
    "sk-s2-wrh-class",
    "s2-wrh-class",
    "s1-sm-wr2-class",
    "am-wr2-class",
    "sm-wr3-class",
    "sk-small-easy-class",
    "sk-small-hard-class",
];

/// Evaluates a registered closed-form predicate on JSON parameters.
///
/// Lemma-level ids return whether the symmetric function in question is
/// multiplicity-free (for `hook-and-box-table`, whether the cell's partition
/// is a common constituent). Class-level ids return whether the described
/// character is induced-multiplicity-free; those statements are proved only
/// above a degree threshold and are evaluated regardless of it.
pub fn classification_corollary_check(id: &str, params: &Value) -> Result<bool, GroupError> {
    let p = params;
    match id {
        "hook-and-box" => Ok(hook_and_box_mf(
            get_usize(p, "k")?,
            get_usize(p, "m")?,
            &get_two(p, "nu")?,
            &get_two(p, "nubar")?,
        )),
        "hook-and-box-table" => {
            let table = match get_str(p, "table")? {
                "hook" => HookBoxTable::Hook,
                "hook_and_box" => HookBoxTable::HookAndBox,
                other => {
                    return Err(GroupError::InvalidParameters(format!(
                        "unknown table `{other}`"
                    )))
                }
            };
            let (m, u, v) = (get_usize(p, "m")?, get_usize(p, "u")?, get_usize(p, "v")?);
            let base = (2 * m) as isize + table.offset();
            let (i, j) = (u as isize - base, v as isize - base);
            if !(0..3).contains(&i) || !(0..3).contains(&j) {
                return Err(GroupError::InvalidParameters(format!(
                    "(u, v) = ({u}, {v}) outside the table"
                )));
            }
            let k = get_usize(p, "k")?;
            let (i, j) = (i as usize, j as usize);
            Ok(k == table.k(m, i, j)
                && hook_and_box_table_predicate(
                    table,
                    m,
                    i,
                    j,
                    &get_two(p, "nu")?,
                    &get_two(p, "nubar")?,
                ))
        }
        "m2-index-two" => Ok(m2_index_two_mf(&get_partition(p, "lambda")?)),
        "even-and-strip" => Ok(even_and_strip_mf(get_usize(p, "k")?, get_usize(p, "h")?)),
        "shift-small" => Ok(shift_small_mf(get_usize(p, "k")?, get_usize(p, "h")?)),
        "double-even" => Ok(double_even_mf(get_usize(p, "h")?)),
        "double-shift" => Ok(double_shift_mf(get_usize(p, "h")?)),
        "even-and-two" => Ok(even_and_two_mf(get_usize(p, "h")?)),
        "one-plus-double-even" => Ok(one_plus_double_even_mf(get_usize(p, "h")?)),
        "one-plus-double-shift" => Ok(one_plus_double_shift_mf(get_usize(p, "h")?)),
        "rectangle-and-one-box" => rectangle_and_one_box_mf(get_usize(p, "a")?, get_usize(p, "b")?),
        "rotate-rectangles" => rotate_rectangles_mf(
            get_usize(p, "a")?,
            get_usize(p, "b")?,
            &get_two(p, "nu")?,
            &get_two(p, "nubar")?,
        ),
        "rotate-rectangle" => {
            rotate_rectangle_mf(get_usize(p, "a")?, get_usize(p, "b")?, &get_two(p, "nu")?)
        }
        "hooks" => hooks_mf(
            get_usize(p, "a")?,
            get_usize(p, "b")?,
            &get_two(p, "nu")?,
            &get_two(p, "nubar")?,
        ),
        "square-and-a-box" => Ok(square_and_a_box_mf(get_usize(p, "a")?)),
        "sk-sm-wr2-class" => {
            let (k, m, nu) = (get_usize(p, "k")?, get_usize(p, "m")?, get_two(p, "nu")?);
            match get_str(p, "group")? {
                "cap_alt" => {
                    if let Ok(lambda) = get_partition(p, "lambda") {
                        // the extra family (χ^λ ⊠ χ^(2)≀χ^(1²)) for m = 2
                        return Ok(m == 2
                            && nu == col2()
                            && lambda.is_rectangular()
                            && !lambda.is_square());
                    }
                    Ok(if nu == row2() {
                        !(k + 4 >= 2 * m && k <= 2 * m + 1)
                    } else {
                        !in_wreath_window(k, m)
                    })
                }
                "t" => Ok(!in_wreath_window(k, m)),
                other => Err(GroupError::InvalidParameters(format!(
                    "unknown group `{other}`"
                ))),
            }
        }
        "sk-s2-wrh-class" => {
            let (k, h, nu) = (
                get_usize(p, "k")?,
                get_usize(p, "h")?,
                get_partition(p, "nu")?,
            );
            if nu == Partition::row(h) {
                Ok(k >= 2 * h + 2)
            } else if nu == Partition::column(h) {
                Ok(h == 3 || h == 4)
            } else {
                Ok(false)
            }
        }
        "s2-wrh-class" => {
            let (h, nu) = (get_usize(p, "h")?, get_partition(p, "nu")?);
            Ok(nu == Partition::column(h) || (nu == Partition::row(h) && h % 2 == 1))
        }
        "s1-sm-wr2-class" => {
            let (a, b) = (get_usize(p, "a")?, get_usize(p, "b")?);
            let m = a * b;
            if a == b {
                return match get_str(p, "group")? {
                    "cap_alt" => Ok(m % 2 == 0),
                    "t" => Ok(m % 2 == 1),
                    other => Err(GroupError::InvalidParameters(format!(
                        "unknown group `{other}`"
                    ))),
                };
            }
            rectangle_and_one_box_mf(a, b)
        }
        "am-wr2-class" => {
            let (mu, nu) = (get_partition(p, "mu")?, get_two(p, "nu")?);
            let (first, len) = (mu.first(), mu.length());
            let self_conj_family = mu
                == Partition::hook(first.saturating_sub(1), first.saturating_sub(1))
                || (len >= 1
                    && mu.parts()
                        == [vec![first; first - 1], vec![first - 1]]
                            .concat()
                            .as_slice());
            if self_conj_family {
                return Ok(true);
            }
            if !mu.is_rectangular() {
                return Ok(false);
            }
            let (a, b) = (first, len);
            if a == b {
                return Ok(true);
            }
            let divides = a % a.abs_diff(b) == 0;
            Ok(!divides || ((a * b) % 4 == 0 && nu == col2()))
        }
        "sm-wr3-class" => Ok(get_two(p, "nu").is_ok()),
        "sk-small-easy-class" => {
            let lambda = get_partition(p, "lambda")?;
            match get_str(p, "group")? {
                "agl15_real" => Ok(lambda.is_rectangular() && !lambda.is_square()),
                "agl15_complex" => Ok(lambda.is_linear() || lambda.is_two_rectangular()),
                "n_k" => {
                    let mu = get_two(p, "mu")?;
                    Ok((lambda.is_row() && mu == row2()) || (lambda.is_column() && mu == col2()))
                }
                "t_k2h" => {
                    let (h, nu) = (get_usize(p, "h")?, get_partition(p, "nu")?);
                    Ok(
                        (h == 3 || h == 4)
                            && lambda.is_column()
                            && nu.size() == h
                            && nu.is_linear(),
                    )
                }
                other => Err(GroupError::InvalidParameters(format!(
                    "unknown group `{other}`"
                ))),
            }
        }
        "sk-small-hard-class" => Ok(pgl25_cap_alt_mf(&get_partition(p, "lambda")?)),
        other => Err(GroupError::UnknownCorollary(other.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schur::s;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn descriptor_json_round_trip() {
        let g = G::SkSmWr2CapAlt { k: 10, m: 28 };
        let text = serde_json::to_string(&g).unwrap();
        assert_eq!(
            text,
            r#"{"family":"SkSmWr2CapAlt","params":{"k":10,"m":28}}"#
        );
        assert_eq!(serde_json::from_str::<GroupDescriptor>(&text).unwrap(), g);
        let rho = IrredCharDescriptor::elementary(Some(p(&[1, 1])), p(&[3]), p(&[2]));
        let text = serde_json::to_string(&rho).unwrap();
        assert_eq!(
            serde_json::from_str::<IrredCharDescriptor>(&text).unwrap(),
            rho
        );
        let t: GroupDescriptor =
            serde_json::from_str(r#"{"family":"T_kmh","params":{"k":3,"m":2,"h":2}}"#).unwrap();
        assert_eq!(t.degree(), 7);
    }

    #[test]
    fn lift_examples() {
        let a = s(&[3, 1]);
        let b = s(&[2, 1, 1]);
        assert_eq!(index_two_lift(&a, &b, false).unwrap(), a.add(&b));
        assert_eq!(index_two_lift(&a, &b, true).unwrap(), a);
        assert!(matches!(
            index_two_lift(&a, &s(&[2]), false),
            Err(GroupError::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn alternating_and_young() {
        let g = G::Alternating { n: 4 };
        let got = induced_symfunc(&g, &C::Sym { lambda: p(&[3, 1]) }).unwrap();
        assert_eq!(got, s(&[3, 1]).add(&s(&[2, 1, 1])));
        let got = induced_symfunc(&g, &C::Sym { lambda: p(&[2, 2]) }).unwrap();
        assert_eq!(got, s(&[2, 2]));
        let g = G::Young { k: 2, l: 1 };
        let got = induced_symfunc(
            &g,
            &C::Product {
                lambda: p(&[2]),
                mu: p(&[1]),
            },
        )
        .unwrap();
        assert_eq!(got, s(&[3]).add(&s(&[2, 1])));
    }

    #[test]
    fn sporadic_fixtures() {
        let g = G::SkTimesSporadic {
            k: 3,
            group: Sporadic::Pgl2_5,
            variant: SporadicVariant::Full,
        };
        let rho = C::Sporadic {
            lambda: p(&[3]),
            character: SporadicCharacter::Trivial,
        };
        assert_eq!(induced_symfunc(&g, &rho).unwrap(), s(&[3]).multiply(&x_p()));
        let bad = G::SkTimesSporadic {
            k: 3,
            group: Sporadic::PGammaL2_8,
            variant: SporadicVariant::Full,
        };
        let rho = C::Sporadic {
            lambda: p(&[3]),
            character: SporadicCharacter::Galois,
        };
        assert!(matches!(
            induced_symfunc(&bad, &rho),
            Err(GroupError::UnsupportedCharacter(_))
        ));
        assert_eq!(m12_trivial_induced().len(), 8);
    }

    #[test]
    fn wreath_enumeration_counts() {
        let g = G::SmWr2 { m: 2, ambient: 4 };
        assert_eq!(enumerate_irreducibles(&g).unwrap().len(), 5);
        assert_eq!(
            enumerate_irreducibles(&G::Young { k: 1, l: 1 })
                .unwrap()
                .len(),
            1
        );
        // S_3≀S_2 has (p(3)·p(2)) + C(3,2) = 9 irreducibles
        assert_eq!(
            enumerate_irreducibles(&G::SmWr2 { m: 3, ambient: 6 })
                .unwrap()
                .len(),
            9
        );
        let alt = enumerate_irreducibles(&G::Alternating { n: 4 }).unwrap();
        assert_eq!(alt.len(), 3);
        assert_eq!(
            alt.iter().filter(|e| e.self_paired == Some(true)).count(),
            1
        );
    }

    #[test]
    fn spec_examples() {
        let one = p(&[2]);
        let g = G::SmWr2CapAlt { m: 8, ambient: 17 };
        let rho = IrredCharDescriptor::elementary(None, p(&[4, 4]), one.clone());
        assert!(!is_induced_mf(&g, &rho).unwrap().verdict);
        let g = G::Tkmh { k: 5, m: 3, h: 2 };
        let rho = IrredCharDescriptor::elementary(Some(p(&[1; 5])), p(&[3]), one.clone());
        assert!(!is_induced_mf(&g, &rho).unwrap().verdict);
    }

    #[test]
    fn classification_gate() {
        assert_eq!(
            classify_subgroups(60),
            Err(GroupError::BelowValidityThreshold { n: 60 })
        );
        assert_eq!(
            GroupError::BelowValidityThreshold { n: 60 }.to_string(),
            "n below validity threshold 66"
        );
        let list = classify_subgroups(66).unwrap();
        assert!(list
            .iter()
            .any(|c| c.group == G::SkSmWr2CapAlt { k: 10, m: 28 }));
        assert!(list.iter().all(|c| satisfies_side_conditions(&c.group, 66)));
        assert!(!classify_subgroups(67)
            .unwrap()
            .iter()
            .any(|c| matches!(c.group, G::AmWr2 { ambient: 67, .. })));
    }

    #[test]
    fn table_predicates() {
        // even m, cell (u,v) = (2m−1, 2m−2): k = 2m−2, any ν, ν̄ = (1²)
        let m = 4;
        assert_eq!(HookBoxTable::Hook.k(m, 1, 0), 2 * m - 2);
        assert!(hook_and_box_table_predicate(
            HookBoxTable::Hook,
            m,
            1,
            0,
            &row2(),
            &col2()
        ));
        assert!(hook_and_box_table_predicate(
            HookBoxTable::Hook,
            m,
            1,
            0,
            &col2(),
            &col2()
        ));
        assert!(!hook_and_box_table_predicate(
            HookBoxTable::Hook,
            m,
            1,
            0,
            &col2(),
            &row2()
        ));
        let ok =
            classification_corollary_check("even-and-strip", &serde_json::json!({"k": 8, "h": 3}))
                .unwrap();
        assert!(ok);
        assert!(
            !classification_corollary_check("double-even", &serde_json::json!({"h": 4})).unwrap()
        );
        assert!(matches!(
            classification_corollary_check("nope", &Value::Null),
            Err(GroupError::UnknownCorollary(_))
        ));
    }
}
