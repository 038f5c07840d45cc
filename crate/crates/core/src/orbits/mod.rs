//! Nilpotent orbits of the dual Lie algebra: Jordan-type validity, the
//! solvable-centralizer locus, closure order, `h∨` vectors and the
//! distinguished orbits used by the certificate engine.

mod exceptional;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::combinatorics::{dominance_leq, partitions_of, Partition};
use crate::error::{Error, Result};
use crate::rational::{self, Rational};
use crate::weyl::WeylType;

pub use exceptional::Exceptional;

/// The dual Lie algebra `g∨`. Classical variants store the matrix size:
/// `Sl(n)`, `Sp(2n)`, `So(m)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DualType {
    Sl(usize),
    Sp(usize),
    So(usize),
    Exceptional(Exceptional),
}

impl DualType {
    pub fn sl(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidDualType(format!("sl({n}) needs n >= 2")));
        }
        Ok(DualType::Sl(n))
    }

    /// `sp(two_n)`; the argument is the matrix size.
    pub fn sp(two_n: usize) -> Result<Self> {
        if two_n < 2 || !two_n.is_multiple_of(2) {
            return Err(Error::InvalidDualType(format!("sp({two_n}) needs an even size >= 2")));
        }
        Ok(DualType::Sp(two_n))
    }

    pub fn so(m: usize) -> Result<Self> {
        if m < 3 {
            return Err(Error::InvalidDualType(format!("so({m}) needs m >= 3")));
        }
        Ok(DualType::So(m))
    }

    /// Builds `g∨` from its Cartan type letter and Lie rank: `A_N = sl(N+1)`,
    /// `B_N = so(2N+1)`, `C_N = sp(2N)`, `D_N = so(2N)`, or an exceptional name.
    pub fn from_family(family: &str, rank: usize) -> Result<Self> {
        let bad = || Error::InvalidDualType(format!("{family}{rank}"));
        match family.to_ascii_uppercase().as_str() {
            "A" if rank >= 1 => DualType::sl(rank + 1),
            "B" if rank >= 1 => DualType::so(2 * rank + 1),
            "C" if rank >= 1 => DualType::sp(2 * rank),
            "D" if rank >= 2 => DualType::so(2 * rank),
            "A" | "B" | "C" | "D" => Err(bad()),
            other => {
                let e = Exceptional::from_str(other)?;
                if e.rank() != rank {
                    return Err(bad());
                }
                Ok(DualType::Exceptional(e))
            }
        }
    }

    /// Cartan type letter of `g∨` (`"A"`, `"B"`, `"C"`, `"D"` or the exceptional name).
    pub fn family(&self) -> String {
        match self {
            DualType::Sl(_) => "A".into(),
            DualType::Sp(_) => "C".into(),
            DualType::So(m) if m % 2 == 1 => "B".into(),
            DualType::So(_) => "D".into(),
            DualType::Exceptional(e) => e.to_string(),
        }
    }

    pub fn rank(&self) -> usize {
        match *self {
            DualType::Sl(n) => n - 1,
            DualType::Sp(m) | DualType::So(m) => m / 2,
            DualType::Exceptional(e) => e.rank(),
        }
    }

    /// Matrix size for classical types.
    pub fn param(&self) -> Option<usize> {
        match *self {
            DualType::Sl(n) | DualType::Sp(n) | DualType::So(n) => Some(n),
            DualType::Exceptional(_) => None,
        }
    }

    pub fn is_classical(&self) -> bool {
        !matches!(self, DualType::Exceptional(_))
    }

    /// `so(4)` is the only non-simple member of these families.
    pub fn is_simple(&self) -> bool {
        *self != DualType::So(4)
    }

    /// Weyl group of `g∨`, which is also the Weyl group of `G`.
    pub fn weyl_type(&self) -> Result<WeylType> {
        match *self {
            DualType::Sl(n) => Ok(WeylType::a(n)),
            DualType::Sp(m) => Ok(WeylType::b(m / 2)),
            DualType::So(m) if m % 2 == 1 => Ok(WeylType::b(m / 2)),
            DualType::So(m) => Ok(WeylType::d(m / 2)),
            DualType::Exceptional(e) => Err(Error::UseStaticTable(e.to_string())),
        }
    }

    /// Length of a parameter vector `ν` in standard coordinates.
    pub fn coordinate_len(&self) -> usize {
        match *self {
            DualType::Sl(n) => n,
            _ => self.rank(),
        }
    }

    fn require_classical(&self) -> Result<()> {
        match self {
            DualType::Exceptional(e) => Err(Error::UseStaticTable(e.to_string())),
            _ => Ok(()),
        }
    }

    /// Short name used in serialized orbits: `"sl"`, `"sp"`, `"so"` or the exceptional name.
    fn tag(&self) -> String {
        match self {
            DualType::Sl(_) => "sl".into(),
            DualType::Sp(_) => "sp".into(),
            DualType::So(_) => "so".into(),
            DualType::Exceptional(e) => e.to_string(),
        }
    }

    fn from_tag(tag: &str, param: Option<usize>) -> Result<Self> {
        let need = || Error::Malformed(format!("dual type {tag} needs a param"));
        match tag {
            "sl" => DualType::sl(param.ok_or_else(need)?),
            "sp" => DualType::sp(param.ok_or_else(need)?),
            "so" => DualType::so(param.ok_or_else(need)?),
            other => Ok(DualType::Exceptional(Exceptional::from_str(other)?)),
        }
    }
}

impl fmt::Display for DualType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DualType::Exceptional(e) => write!(f, "{e}"),
            t => write!(f, "{}({})", t.tag(), t.param().unwrap_or(0)),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct DualTypeSpec {
    family: String,
    rank: usize,
}

impl Serialize for DualType {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        DualTypeSpec { family: self.family(), rank: self.rank() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for DualType {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let spec = DualTypeSpec::deserialize(d)?;
        DualType::from_family(&spec.family, spec.rank).map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum OrbitData {
    Partition(Partition),
    Label(&'static str),
}

/// A nilpotent orbit of `g∨`: a Jordan type for classical algebras, a
/// Bala–Carter label from the static table otherwise.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Orbit {
    dual_type: DualType,
    data: OrbitData,
}

impl Orbit {
    pub fn classical(t: DualType, p: Partition) -> Result<Self> {
        if !is_valid_orbit(t, &p)? {
            return Err(Error::InvalidOrbit { dual_type: t.to_string(), partition: p.to_string() });
        }
        Ok(Orbit { dual_type: t, data: OrbitData::Partition(p) })
    }

    pub fn exceptional(e: Exceptional, label: &str) -> Result<Self> {
        let found = e.carried_orbits().iter().find(|l| **l == label).ok_or_else(|| {
            Error::InvalidOrbit { dual_type: e.to_string(), partition: label.to_string() }
        })?;
        Ok(Orbit { dual_type: DualType::Exceptional(e), data: OrbitData::Label(found) })
    }

    pub fn dual_type(&self) -> DualType {
        self.dual_type
    }

    pub fn partition(&self) -> Option<&Partition> {
        match &self.data {
            OrbitData::Partition(p) => Some(p),
            OrbitData::Label(_) => None,
        }
    }

    pub fn label(&self) -> Option<&'static str> {
        match self.data {
            OrbitData::Label(l) => Some(l),
            OrbitData::Partition(_) => None,
        }
    }

    fn require_partition(&self) -> Result<&Partition> {
        self.partition().ok_or_else(|| Error::UseStaticTable(self.dual_type.to_string()))
    }

    /// Position in the exceptional chain; 0 is the regular orbit.
    fn chain_index(&self) -> Option<usize> {
        let DualType::Exceptional(e) = self.dual_type else { return None };
        let l = self.label()?;
        e.carried_orbits().iter().position(|x| *x == l)
    }
}

impl fmt::Display for Orbit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.data {
            OrbitData::Partition(p) => write!(f, "{p} in {}", self.dual_type),
            OrbitData::Label(l) => write!(f, "{l}"),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct OrbitRepr {
    dual_type: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    param: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    partition: Option<Partition>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    label: Option<String>,
}

impl Serialize for Orbit {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        OrbitRepr {
            dual_type: self.dual_type.tag(),
            param: self.dual_type.param(),
            partition: self.partition().cloned(),
            label: self.label().map(str::to_string),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Orbit {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let r = OrbitRepr::deserialize(d)?;
        let t = DualType::from_tag(&r.dual_type, r.param).map_err(D::Error::custom)?;
        let o = match (t, r.partition, r.label) {
            (DualType::Exceptional(e), None, Some(l)) => Orbit::exceptional(e, &l),
            (t, Some(p), None) if t.is_classical() => Orbit::classical(t, p),
            _ => Err(Error::Malformed("orbit needs a partition or a label".into())),
        };
        o.map_err(D::Error::custom)
    }
}

/// Weakly decreasing rational vector in standard coordinates. For `sl(n)` it
/// is the full zero-sum vector; for `sp`/`so` the nonnegative half.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HVector {
    #[serde(with = "rational::serde_vec")]
    pub entries: Vec<Rational>,
}

impl HVector {
    pub fn half(&self) -> HVector {
        let two = rational::int(2);
        HVector { entries: self.entries.iter().map(|x| x / &two).collect() }
    }

    pub fn norm_sq(&self) -> Rational {
        rational::norm_sq(&self.entries)
    }
}

impl fmt::Display for HVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(rational::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Which {
    Regular,
    Subregular,
    Subsubregular,
}

impl FromStr for Which {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "regular" | "r" => Ok(Which::Regular),
            "subregular" | "sr" => Ok(Which::Subregular),
            "subsubregular" | "ssr" => Ok(Which::Subsubregular),
            _ => Err(Error::Malformed(format!("unknown orbit selector {s:?}"))),
        }
    }
}

impl fmt::Display for Which {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Which::Regular => "regular",
            Which::Subregular => "subregular",
            Which::Subsubregular => "subsubregular",
        })
    }
}

/// Jordan-type constraint of the classical algebra.
pub fn is_valid_orbit(t: DualType, p: &Partition) -> Result<bool> {
    t.require_classical()?;
    let size_ok = p.size() == t.param().unwrap_or(0);
    Ok(size_ok
        && match t {
            DualType::Sl(_) => true,
            DualType::Sp(_) => p.multiplicities().iter().all(|&(k, m)| k % 2 == 0 || m % 2 == 0),
            DualType::So(_) => p.multiplicities().iter().all(|&(k, m)| k % 2 == 1 || m % 2 == 0),
            DualType::Exceptional(_) => unreachable!(),
        })
}

fn partition_in_nsol(t: DualType, p: &Partition) -> bool {
    let mult = p.multiplicities();
    match t {
        DualType::Sl(_) => p.is_distinct(),
        DualType::Sp(_) => mult.iter().all(|&(k, m)| k % 2 == 0 && m <= 2),
        DualType::So(_) => mult.iter().all(|&(k, m)| k % 2 == 1 && m <= 2),
        DualType::Exceptional(_) => false,
    }
}

/// Membership in the solvable-centralizer locus.
pub fn is_in_nsol(o: &Orbit) -> bool {
    match o.partition() {
        Some(p) => partition_in_nsol(o.dual_type, p),
        None => o.chain_index().is_some(),
    }
}

/// All orbits of the solvable-centralizer locus, generated directly from the
/// part constraints. Classical orbits come largest-first in reverse lex order.
pub fn nsol_orbits(t: DualType) -> Vec<Orbit> {
    match t {
        DualType::Exceptional(e) => e
            .carried_orbits()
            .iter()
            .map(|l| Orbit::exceptional(e, l).expect("carried label"))
            .collect(),
        _ => {
            let m = t.param().expect("classical");
            let (step, first, cap) = match t {
                DualType::Sl(_) => (1, 1, 1),
                DualType::Sp(_) => (2, 2, 2),
                _ => (2, 1, 2),
            };
            let mut out = Vec::new();
            bounded_partitions(m, m, first, step, cap, &mut Vec::new(), &mut out);
            out.into_iter()
                .map(|p| Orbit { dual_type: t, data: OrbitData::Partition(p) })
                .collect()
        }
    }
}

/// Partitions of `rest` with parts in `{first, first+step, ...}`, each part
/// at most `max`, each used at most `cap` times.
fn bounded_partitions(
    rest: usize,
    max: usize,
    first: usize,
    step: usize,
    cap: usize,
    cur: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if rest == 0 {
        out.push(Partition::new(cur.clone()).expect("decreasing"));
        return;
    }
    let top = max.min(rest);
    if top < first {
        return;
    }
    let mut part = first + (top - first) / step * step;
    loop {
        for k in (1..=cap).rev() {
            if k * part <= rest {
                cur.extend(std::iter::repeat_n(part, k));
                let next_max = if part > first { part - 1 } else { 0 };
                bounded_partitions(rest - k * part, next_max, first, step, cap, cur, out);
                cur.truncate(cur.len() - k);
            }
        }
        if part < first + step {
            break;
        }
        part -= step;
    }
}

/// Closure order. Classical orbits compare by dominance; exceptional orbits
/// by their position in the carried chain.
pub fn closure_leq(o1: &Orbit, o2: &Orbit) -> Result<bool> {
    if o1.dual_type != o2.dual_type {
        return Err(Error::MismatchedTypes(o1.dual_type.to_string(), o2.dual_type.to_string()));
    }
    match (o1.partition(), o2.partition()) {
        (Some(a), Some(b)) => dominance_leq(a, b),
        _ => Ok(o1.chain_index() >= o2.chain_index()),
    }
}

/// `h∨` of an `sl2`-triple through the orbit, from the weights of each Jordan block.
pub fn h_vector(o: &Orbit) -> Result<HVector> {
    let t = o.dual_type;
    let p = o.require_partition()?;
    let mut weights: Vec<i64> = p
        .parts()
        .iter()
        .flat_map(|&k| (0..k).map(move |j| k as i64 - 1 - 2 * j as i64))
        .collect();
    weights.sort_unstable_by(|a, b| b.cmp(a));
    if !matches!(t, DualType::Sl(_)) {
        weights.truncate(t.rank());
    }
    Ok(HVector { entries: weights.into_iter().map(rational::int).collect() })
}

/// `h∨/2`.
pub fn h_half(o: &Orbit) -> Result<HVector> {
    Ok(h_vector(o)?.half())
}

/// `|h∨/2|²` in standard coordinates.
pub fn h_half_norm_sq(o: &Orbit) -> Result<Rational> {
    Ok(h_half(o)?.norm_sq())
}

/// Regular, subregular or sub-subregular orbit.
pub fn special_orbit(t: DualType, which: Which) -> Result<Orbit> {
    if which != Which::Regular && !t.is_simple() {
        return Err(Error::Hypothesis(format!("{which} orbit needs a simple algebra, got {t}")));
    }
    if which == Which::Subsubregular {
        if t.rank() < 4 {
            return Err(Error::Hypothesis(format!("subsubregular orbit needs rank >= 4, {t} has rank {}", t.rank())));
        }
        let family = t.family();
        if family == "C" || family == "D" {
            return Err(Error::Hypothesis(format!("subsubregular orbit is not defined for type {family}")));
        }
    }
    if let DualType::Exceptional(e) = t {
        let label = match which {
            Which::Regular => e.regular(),
            Which::Subregular => e.subregular(),
            Which::Subsubregular => e.subsubregular().expect("rank checked"),
        };
        return Orbit::exceptional(e, label);
    }
    let m = t.param().expect("classical");
    let parts: Vec<usize> = match (t, which) {
        (DualType::Sl(n), Which::Regular) => vec![n],
        (DualType::Sl(n), Which::Subregular) => vec![n - 1, 1],
        (DualType::Sl(n), Which::Subsubregular) => vec![n - 2, 2],
        (DualType::Sp(_), Which::Regular) => vec![m],
        (DualType::Sp(2), Which::Subregular) => vec![1, 1],
        (DualType::Sp(_), Which::Subregular) => vec![m - 2, 2],
        (DualType::So(_), Which::Regular) if m % 2 == 1 => vec![m],
        (DualType::So(_), Which::Regular) => vec![m - 1, 1],
        (DualType::So(3), Which::Subregular) => vec![1, 1, 1],
        (DualType::So(_), Which::Subregular) if m % 2 == 1 => vec![m - 2, 1, 1],
        (DualType::So(_), Which::Subregular) => vec![m - 3, 3],
        (DualType::So(_), Which::Subsubregular) => vec![m - 4, 3, 1],
        _ => return Err(Error::Internal(format!("no {which} orbit for {t}"))),
    };
    Orbit::classical(t, Partition::from_unsorted(parts))
}

/// Maximal valid orbits strictly below `o` in closure order, by exhaustive search.
pub fn maximal_valid_below(o: &Orbit) -> Result<Vec<Orbit>> {
    let t = o.dual_type;
    let p = o.require_partition()?;
    let below: Vec<Partition> = partitions_of(p.size())
        .into_iter()
        .filter(|q| q != p && is_valid_orbit(t, q).unwrap_or(false))
        .filter(|q| dominance_leq(q, p).unwrap_or(false))
        .collect();
    let maximal = below
        .iter()
        .filter(|q| !below.iter().any(|r| r != *q && dominance_leq(q, r).unwrap_or(false)))
        .map(|q| Orbit { dual_type: t, data: OrbitData::Partition(q.clone()) })
        .collect();
    Ok(maximal)
}

/// Smallest `ℓ ≥ 0` with `f(ℓ) ≥ n`.
fn least_with(n: usize, f: impl Fn(usize) -> usize) -> usize {
    (0..).find(|&l| f(l) >= n).expect("unbounded")
}

fn remove_one(parts: &mut Vec<usize>, value: usize) {
    if let Some(i) = parts.iter().position(|&x| x == value) {
        parts.remove(i);
    }
}

/// The unique closure-minimal orbit of the solvable-centralizer locus.
pub fn o_min(t: DualType) -> Result<Orbit> {
    if !t.is_simple() {
        return Err(Error::Hypothesis(format!("{t} is not simple")));
    }
    let parts = match t {
        DualType::Exceptional(e) => return Orbit::exceptional(e, e.o_min()),
        DualType::Sl(n) => {
            let l = least_with(n, |l| l * (l + 1) / 2);
            let k = l * (l + 1) / 2 - n;
            let mut parts: Vec<usize> = (1..=l).collect();
            if k > 0 {
                remove_one(&mut parts, k);
            }
            parts
        }
        DualType::Sp(m) => {
            let n = m / 2;
            let l = least_with(n, |l| l * (l + 1));
            let k = l * (l + 1) - n;
            let mut parts: Vec<usize> = (1..=l).flat_map(|i| [2 * i, 2 * i]).collect();
            if k > 0 && k <= l {
                remove_one(&mut parts, 2 * k);
            } else if k > l {
                remove_one(&mut parts, 2 * (k - l));
                remove_one(&mut parts, 2 * l);
            }
            parts
        }
        DualType::So(m) if m % 2 == 0 => {
            let n = m / 2;
            let l = least_with(n, |l| l * l);
            let k = l * l - n;
            let mut parts: Vec<usize> = (1..=l).flat_map(|i| [2 * i - 1, 2 * i - 1]).collect();
            if k > 0 && k <= l {
                remove_one(&mut parts, 1);
                remove_one(&mut parts, 2 * k - 1);
            } else if k > l {
                remove_one(&mut parts, 2 * (k - l) + 1);
                remove_one(&mut parts, 2 * l - 1);
            }
            parts
        }
        DualType::So(m) => {
            let n = m / 2;
            let l = least_with(n, |l| l * (l + 1));
            let k = l * (l + 1) - n;
            let mut parts: Vec<usize> = (1..=l).flat_map(|i| [2 * i - 1, 2 * i - 1]).collect();
            parts.push(2 * l + 1);
            if k > 0 && k <= l {
                remove_one(&mut parts, 1);
                remove_one(&mut parts, 2 * k - 1);
            } else if k > l {
                remove_one(&mut parts, 2 * (k - l) - 1);
                remove_one(&mut parts, 2 * l + 1);
            }
            parts
        }
    };
    Orbit::classical(t, Partition::from_unsorted(parts))
}

/// Whether `ν` lies in the Weyl-group orbit of `target` (given in the same
/// coordinates as an [`HVector`]).
pub fn w_orbit_contains(t: DualType, nu: &[Rational], target: &HVector) -> Result<bool> {
    t.require_classical()?;
    if nu.len() != t.coordinate_len() {
        return Err(Error::CoordinateLength { expected: t.coordinate_len(), got: nu.len() });
    }
    let mut v: Vec<Rational> = match t {
        DualType::Sl(_) => nu.to_vec(),
        _ => nu.iter().map(num_traits::Signed::abs).collect(),
    };
    v.sort_by(|a, b| b.cmp(a));
    let mut w = target.entries.clone();
    w.sort_by(|a, b| b.cmp(a));
    Ok(v == w)
}

/// Orders orbits of one classical type so that every orbit comes after all
/// orbits it dominates. Used wherever a dominance-compatible row order is needed.
pub fn dominance_sort(orbits: &mut [Orbit]) {
    orbits.sort_by(|a, b| match (a.partition(), b.partition()) {
        (Some(p), Some(q)) => p.cmp(q),
        _ => b.chain_index().cmp(&a.chain_index()),
    });
}
