use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::combinatorics::{factorial, BiPartition, Partition};
use crate::error::{Error, Result};
use crate::rational::{self, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    D,
}

/// A classical Weyl group: `S_n` (family A), `W(B_n) = W(C_n)`, or `W(D_n)`.
/// `n` is the degree: the number of letters permuted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WeylType {
    pub family: Family,
    pub n: usize,
}

impl WeylType {
    pub fn new(family: Family, n: usize) -> Result<Self> {
        match (family, n) {
            (_, 0) => Err(Error::InvalidWeylType(format!("{family:?} needs n >= 1"))),
            (Family::D, 1) => Err(Error::InvalidWeylType("D needs n >= 2".into())),
            _ => Ok(WeylType { family, n }),
        }
    }

    pub fn a(n: usize) -> Self {
        Self::new(Family::A, n).expect("valid S_n")
    }

    pub fn b(n: usize) -> Self {
        Self::new(Family::B, n).expect("valid W(B_n)")
    }

    pub fn d(n: usize) -> Self {
        Self::new(Family::D, n).expect("valid W(D_n)")
    }

    pub fn order(&self) -> BigInt {
        let f = factorial(self.n);
        match self.family {
            Family::A => f,
            Family::B => f * BigInt::from(2).pow(self.n as u32),
            Family::D => f * BigInt::from(2).pow(self.n as u32 - 1),
        }
    }

    /// Rank of the root system (dimension of the reflection representation).
    pub fn rank(&self) -> usize {
        match self.family {
            Family::A => self.n - 1,
            _ => self.n,
        }
    }
}

impl fmt::Display for WeylType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::A => write!(f, "S_{}", self.n),
            Family::B => write!(f, "W(B_{})", self.n),
            Family::D => write!(f, "W(D_{})", self.n),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// A conjugacy class. For B and D the bipartition holds the cycle lengths of
/// the positive and negative signed cycles; D classes whose cycles are all
/// positive and of even length split into two, tagged `+`/`-`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ConjugacyClass {
    A(Partition),
    B(BiPartition),
    D {
        signed: BiPartition,
        split: Option<Sign>,
    },
}

impl ConjugacyClass {
    /// Signed cycle type, with type A cycles counted as positive.
    pub fn signed_cycle_type(&self) -> BiPartition {
        match self {
            ConjugacyClass::A(p) => BiPartition::new(p.clone(), Partition::empty()),
            ConjugacyClass::B(b) => b.clone(),
            ConjugacyClass::D { signed, .. } => signed.clone(),
        }
    }
}

impl fmt::Display for ConjugacyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConjugacyClass::A(p) => write!(f, "{p}"),
            ConjugacyClass::B(b) => write!(f, "{}|{}", b.alpha, b.beta),
            ConjugacyClass::D { signed, split } => {
                write!(f, "{}|{}", signed.alpha, signed.beta)?;
                if let Some(s) = split {
                    write!(f, "{s}")?;
                }
                Ok(())
            }
        }
    }
}

/// Label of an irreducible `W(D_n)` representation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DLabel {
    /// Restriction of `α × β` with `α ≠ β`; stored with `α > β`.
    Pair(BiPartition),
    /// One of the two constituents `(α × α)^±`.
    Split(Partition, Sign),
}

/// Label of an irreducible Weyl group representation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WType {
    A(Partition),
    B(BiPartition),
    D(DLabel),
}

impl WType {
    /// The `W(D_n)` type obtained by restricting `α × β` (`α ≠ β`).
    pub fn d_pair(alpha: Partition, beta: Partition) -> Result<WType> {
        if alpha == beta {
            return Err(Error::InvalidLabel {
                label: format!("{alpha}x{beta}"),
                group: "W(D_n): equal pair needs a split sign".into(),
            });
        }
        let b = if alpha > beta {
            BiPartition::new(alpha, beta)
        } else {
            BiPartition::new(beta, alpha)
        };
        Ok(WType::D(DLabel::Pair(b)))
    }

    pub fn is_split(&self) -> bool {
        matches!(self, WType::D(DLabel::Split(..)))
    }

    pub fn size(&self) -> usize {
        match self {
            WType::A(p) => p.size(),
            WType::B(b) | WType::D(DLabel::Pair(b)) => b.size(),
            WType::D(DLabel::Split(a, _)) => 2 * a.size(),
        }
    }

    /// The label of `σ ⊗ sgn`.
    pub fn sign_twist(&self) -> WType {
        match self {
            WType::A(p) => WType::A(p.transpose()),
            WType::B(b) => WType::B(b.sign_twist()),
            WType::D(DLabel::Pair(b)) => {
                let t = b.sign_twist();
                WType::d_pair(t.alpha, t.beta).expect("sign twist keeps the pair distinct")
            }
            WType::D(DLabel::Split(a, s)) => {
                // sgn is (-1)^{ℓ(μ)} on the split class 2μ and σ_{α^T}(μ) =
                // (-1)^{m-ℓ(μ)} σ_α(μ), so the tag flips with the parity of m = |α|.
                let tag = if a.size() % 2 == 0 { *s } else { s.flip() };
                WType::D(DLabel::Split(a.transpose(), tag))
            }
        }
    }

    pub fn check(&self, t: WeylType) -> Result<()> {
        let bad = || Error::InvalidLabel {
            label: self.to_string(),
            group: t.to_string(),
        };
        let ok = match (self, t.family) {
            (WType::A(p), Family::A) => p.size() == t.n,
            (WType::B(b), Family::B) => b.size() == t.n,
            (WType::D(DLabel::Pair(b)), Family::D) => b.size() == t.n && b.alpha > b.beta,
            (WType::D(DLabel::Split(a, _)), Family::D) => 2 * a.size() == t.n,
            _ => false,
        };
        if ok {
            Ok(())
        } else {
            Err(bad())
        }
    }

    pub fn to_spec(&self) -> WTypeSpec {
        match self {
            WType::A(p) => WTypeSpec::Partition(p.clone()),
            WType::B(b) | WType::D(DLabel::Pair(b)) => WTypeSpec::Bipartition(b.clone()),
            WType::D(DLabel::Split(alpha, sign)) => WTypeSpec::DSplit {
                alpha: alpha.clone(),
                sign: *sign,
            },
        }
    }

    /// Interprets a serialized label in the context of `t`.
    pub fn from_spec(t: WeylType, spec: &WTypeSpec) -> Result<WType> {
        let w = match (spec, t.family) {
            (WTypeSpec::Partition(p), Family::A) => WType::A(p.clone()),
            (WTypeSpec::Bipartition(b), Family::B) => WType::B(b.clone()),
            (WTypeSpec::Bipartition(b), Family::D) => {
                WType::d_pair(b.alpha.clone(), b.beta.clone())?
            }
            (WTypeSpec::DSplit { alpha, sign }, Family::D) => {
                WType::D(DLabel::Split(alpha.clone(), *sign))
            }
            _ => {
                return Err(Error::InvalidLabel {
                    label: format!("{spec:?}"),
                    group: t.to_string(),
                })
            }
        };
        w.check(t)?;
        Ok(w)
    }
}

impl fmt::Display for WType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WType::A(p) => write!(f, "{p}"),
            WType::B(b) => write!(f, "{b}"),
            WType::D(DLabel::Pair(b)) => write!(f, "{{{},{}}}", b.alpha, b.beta),
            WType::D(DLabel::Split(a, s)) => write!(f, "{{{a},{a}}}{s}"),
        }
    }
}

/// Serialized form of a W-type label, as it appears in profile files:
/// `{"partition":[3,2]}`, `{"bipartition":[[1],[1,1]]}` or
/// `{"d_split":{"alpha":[1],"sign":"+"}}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WTypeSpec {
    Partition(Partition),
    Bipartition(BiPartition),
    DSplit { alpha: Partition, sign: Sign },
}

impl Serialize for WType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_spec().serialize(s)
    }
}

/// Rational-valued class function on a fixed Weyl group, indexed by the
/// canonical class order of [`super::conjugacy_classes`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassFunction {
    pub weyl_type: WeylType,
    pub values: Vec<Rational>,
}

impl ClassFunction {
    pub fn new(weyl_type: WeylType, values: Vec<Rational>) -> Self {
        ClassFunction { weyl_type, values }
    }

    pub fn zero(weyl_type: WeylType) -> Self {
        let k = super::character_table(weyl_type).classes.len();
        ClassFunction::new(weyl_type, vec![rational::zero(); k])
    }

    pub fn scale(&self, c: &Rational) -> ClassFunction {
        ClassFunction::new(self.weyl_type, self.values.iter().map(|v| v * c).collect())
    }

    pub fn add(&self, other: &ClassFunction) -> Result<ClassFunction> {
        same_type(self, other)?;
        Ok(ClassFunction::new(
            self.weyl_type,
            self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect(),
        ))
    }

    pub fn sub(&self, other: &ClassFunction) -> Result<ClassFunction> {
        self.add(&other.scale(&-rational::one()))
    }
}

pub(crate) fn same_type(f: &ClassFunction, g: &ClassFunction) -> Result<()> {
    if f.weyl_type != g.weyl_type || f.values.len() != g.values.len() {
        return Err(Error::MismatchedTypes(
            f.weyl_type.to_string(),
            g.weyl_type.to_string(),
        ));
    }
    Ok(())
}
