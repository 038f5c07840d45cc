//! Partitions, bipartitions, dominance order and enumeration.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Integer partition with weakly decreasing positive parts. The empty
/// partition is a valid value.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    /// Sorts the parts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The one-row partition `(n)`; empty for `n = 0`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition(vec![n])
        }
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition(vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `i` (0-based), zero beyond the length.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn transpose(&self) -> Partition {
        let first = self.part(0);
        let parts = (1..=first)
            .map(|j| self.0.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition(parts)
    }

    pub fn is_distinct(&self) -> bool {
        self.0.windows(2).all(|w| w[0] > w[1])
    }

    /// Multiplicity of the part `k`.
    pub fn multiplicity(&self, k: usize) -> usize {
        self.0.iter().filter(|&&p| p == k).count()
    }

    /// Distinct parts with their multiplicities, largest part first.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// `n(λ) = Σ (i-1) λ_i`.
    pub fn n_statistic(&self) -> usize {
        self.0.iter().enumerate().map(|(i, &p)| i * p).sum()
    }

    /// Order of the centralizer in `S_n` of a permutation with this cycle type.
    pub fn z(&self) -> BigInt {
        self.multiplicities()
            .into_iter()
            .fold(BigInt::from(1), |acc, (k, m)| {
                acc * BigInt::from(k).pow(m as u32) * factorial(m)
            })
    }

    pub fn partial_sums(&self) -> Vec<usize> {
        self.0
            .iter()
            .scan(0, |acc, &p| {
                *acc += p;
                Some(*acc)
            })
            .collect()
    }

    /// Removes the part at index `i` and re-sorts. Used by recursive rules.
    pub fn without_index(&self, i: usize) -> Partition {
        let mut v = self.0.clone();
        v.remove(i);
        Partition(v)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::from(1), |acc, k| acc * BigInt::from(k))
}

/// `a ≤ b` in dominance order. Errors unless `|a| = |b|`.
pub fn dominance_leq(a: &Partition, b: &Partition) -> Result<bool> {
    if a.size() != b.size() {
        return Err(Error::IncomparableSizes(a.size(), b.size()));
    }
    let (sa, sb) = (a.partial_sums(), b.partial_sums());
    let n = a.size();
    let at = |s: &[usize], i: usize| s.get(i).copied().unwrap_or(n);
    Ok((0..sa.len().max(sb.len())).all(|i| at(&sa, i) <= at(&sb, i)))
}

/// Dominance comparison as a partial order.
pub fn dominance_cmp(a: &Partition, b: &Partition) -> Option<Ordering> {
    match (dominance_leq(a, b).ok()?, dominance_leq(b, a).ok()?) {
        (true, true) => Some(Ordering::Equal),
        (true, false) => Some(Ordering::Less),
        (false, true) => Some(Ordering::Greater),
        (false, false) => None,
    }
}

/// All partitions of `n` in reverse lexicographic order, `(n)` first.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Partitions of `n` into distinct parts, in the same order as [`partitions_of`].
pub fn distinct_partitions_of(n: usize) -> Vec<Partition> {
    partitions_of(n).into_iter().filter(Partition::is_distinct).collect()
}

/// Ordered pair of partitions `(α, β)`, the label `α × β` of a `W(B_n)` type.
/// Serializes as a two-element array of arrays.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "(Partition, Partition)", into = "(Partition, Partition)")]
pub struct BiPartition {
    pub alpha: Partition,
    pub beta: Partition,
}

impl From<(Partition, Partition)> for BiPartition {
    fn from((alpha, beta): (Partition, Partition)) -> Self {
        BiPartition { alpha, beta }
    }
}

impl From<BiPartition> for (Partition, Partition) {
    fn from(b: BiPartition) -> Self {
        (b.alpha, b.beta)
    }
}

impl BiPartition {
    pub fn new(alpha: Partition, beta: Partition) -> Self {
        BiPartition { alpha, beta }
    }

    pub fn size(&self) -> usize {
        self.alpha.size() + self.beta.size()
    }

    /// `(α, β) ↦ (β^T, α^T)`.
    pub fn sign_twist(&self) -> BiPartition {
        BiPartition::new(self.beta.transpose(), self.alpha.transpose())
    }

    pub fn swapped(&self) -> BiPartition {
        BiPartition::new(self.beta.clone(), self.alpha.clone())
    }
}

impl fmt::Display for BiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.alpha, self.beta)
    }
}

/// All bipartitions of `n`: `α` runs over sizes `n, n-1, …, 0`, each factor
/// in reverse lexicographic order.
pub fn bipartitions_of(n: usize) -> Vec<BiPartition> {
    let mut out = Vec::new();
    for a in (0..=n).rev() {
        for alpha in partitions_of(a) {
            for beta in partitions_of(n - a) {
                out.push(BiPartition::new(alpha.clone(), beta));
            }
        }
    }
    out
}
