//! Springer-theoretic data: type A transition matrices, the `X_{-1}` virtual
//! characters attached to the covered orbits, `d(σ)` and good W-types.

mod exceptional;
mod poly;
mod type_a;

use std::collections::BTreeSet;
use std::fmt;
use std::sync::{Arc, OnceLock};

use num_traits::Zero;
use serde::{Serialize, Serializer};

use crate::cache::Memo;
use crate::combinatorics::{BiPartition, Partition};
use crate::error::{Error, Result};
use crate::orbits::{
    h_half_norm_sq, nsol_orbits, special_orbit, DualType, Orbit, Which,
};
use crate::rational::Rational;
use crate::weyl::{
    character_table, elliptic_pairing, elliptic_span_member, irr_character, lr_coefficient,
    ClassFunction, Family, WType,
};

pub use poly::IntPolynomial;
pub use type_a::{
    charge, d_value_a, dominance_index, kostka_foulkes, p_matrix_a, q_matrix_at_minus1_a,
    q_support_a, reading_word, semistandard_tableaux, springer_label_a, x_minus1_a,
    GradedTransition, IntMatrix, Tableau,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LocalSystem {
    Trivial,
    Sign,
    /// The orbit carries a single local system of Springer type.
    Unique,
}

/// The class function `X_{-1}(O, E)` for a covered orbit. Tensoring it with
/// the spin module gives the genuine character `τ(O, E)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TauDatum {
    pub dual_type: DualType,
    pub orbit: Orbit,
    pub local_system: LocalSystem,
    pub class_function: ClassFunction,
    /// For `sp`/`so`: the partition `λ` such that the datum is the character of `λ × ∅`.
    pub lambda: Option<Partition>,
}

fn bcd_weyl_label(t: DualType, lambda: &Partition) -> Result<WType> {
    let w = t.weyl_type()?;
    match w.family {
        Family::B => Ok(WType::B(BiPartition::new(lambda.clone(), Partition::empty()))),
        Family::D => WType::d_pair(lambda.clone(), Partition::empty()),
        Family::A => Err(Error::Internal("type A has no bipartition data".into())),
    }
}

/// Θ-preimage data of the regular, subregular or sub-subregular orbit.
pub fn tau_data(t: DualType, which: Which) -> Result<Vec<TauDatum>> {
    let orbit = special_orbit(t, which)?;
    let uncovered = || Error::Uncovered(format!("no Theta data for the {which} orbit of {t}"));
    let n = t.rank();
    let specs: Vec<(Vec<usize>, LocalSystem)> = match (t, which) {
        (DualType::Exceptional(_), _) => return Err(uncovered()),
        (DualType::Sl(_), _) => {
            let p = orbit.partition().expect("classical").clone();
            return Ok(vec![TauDatum {
                dual_type: t,
                class_function: x_minus1_a(&p)?,
                orbit,
                local_system: LocalSystem::Unique,
                lambda: None,
            }]);
        }
        (_, Which::Regular) => vec![(vec![n], LocalSystem::Trivial)],
        (_, Which::Subregular) if n < 2 => return Err(uncovered()),
        (DualType::Sp(_), Which::Subregular) => vec![
            (vec![n - 1, 1], LocalSystem::Trivial),
            (vec![1; n], LocalSystem::Sign),
        ],
        (DualType::So(_), Which::Subregular) => vec![(vec![n - 1, 1], LocalSystem::Trivial)],
        (DualType::So(m), Which::Subsubregular) if m % 2 == 1 => vec![
            (vec![n - 2, 1, 1], LocalSystem::Trivial),
            (vec![n - 2, 2], LocalSystem::Sign),
        ],
        _ => return Err(uncovered()),
    };
    let w = t.weyl_type()?;
    specs
        .into_iter()
        .map(|(parts, local_system)| {
            let lambda = Partition::from_unsorted(parts);
            Ok(TauDatum {
                dual_type: t,
                orbit: orbit.clone(),
                local_system,
                class_function: irr_character(w, &bcd_weyl_label(t, &lambda)?)?,
                lambda: Some(lambda),
            })
        })
        .collect()
}

/// Good W-types of an orbit: classical labels, or Carter labels for exceptional types.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GoodSet {
    Classical(Vec<WType>),
    Exceptional(Vec<&'static str>),
}

impl GoodSet {
    pub fn len(&self) -> usize {
        match self {
            GoodSet::Classical(v) => v.len(),
            GoodSet::Exceptional(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn contains(&self, w: &WType) -> bool {
        matches!(self, GoodSet::Classical(v) if v.contains(w))
    }

    pub fn labels(&self) -> Vec<String> {
        match self {
            GoodSet::Classical(v) => v.iter().map(ToString::to_string).collect(),
            GoodSet::Exceptional(v) => v.iter().map(|s| s.to_string()).collect(),
        }
    }

    pub fn wtypes(&self) -> Option<&[WType]> {
        match self {
            GoodSet::Classical(v) => Some(v),
            GoodSet::Exceptional(_) => None,
        }
    }
}

impl fmt::Display for GoodSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.labels().join(", "))
    }
}

/// Classical sets serialize as W-type labels, exceptional ones as strings.
impl Serialize for GoodSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            GoodSet::Classical(v) => v.serialize(s),
            GoodSet::Exceptional(v) => v.serialize(s),
        }
    }
}

fn good_cache() -> &'static Memo<(DualType, Which), GoodSet> {
    static GOOD: OnceLock<Memo<(DualType, Which), GoodSet>> = OnceLock::new();
    GOOD.get_or_init(Memo::new)
}

/// `Good(O) = {σ : d(σ) ≥ |h∨_O/2|}` for the regular, subregular or
/// sub-subregular orbit. Type A uses `d(σ)`; `sp`/`so` use the elliptic span
/// of the Θ-preimage data; exceptional types read the static lists.
pub fn good_set(t: DualType, which: Which) -> Result<Arc<GoodSet>> {
    good_cache().get_or_try_insert_with(&(t, which), || match t {
        DualType::Exceptional(e) => {
            special_orbit(t, which)?;
            Ok(GoodSet::Exceptional(exceptional::good_labels(e, which)))
        }
        DualType::Sl(_) => good_set_by_d(t, which).map(GoodSet::Classical),
        _ => good_set_by_span(t, which).map(GoodSet::Classical),
    })
}

/// Type A route: compare `d(σ)²` with the target norm.
pub fn good_set_by_d(t: DualType, which: Which) -> Result<Vec<WType>> {
    let DualType::Sl(_) = t else {
        return Err(Error::InvalidDualType(format!("d(sigma) route needs sl(n), got {t}")));
    };
    let target = h_half_norm_sq(&special_orbit(t, which)?)?;
    let table = character_table(t.weyl_type()?);
    let mut out = Vec::new();
    for w in &table.irreps {
        let WType::A(nu) = w else { unreachable!() };
        if d_value_a(nu)? >= target {
            out.push(w.clone());
        }
    }
    Ok(out)
}

/// Θ-preimage data of every solvable orbit at least as long as the target.
fn threshold_data(t: DualType, target: &Rational) -> Result<Vec<TauDatum>> {
    let mut out = Vec::new();
    for o in nsol_orbits(t) {
        if h_half_norm_sq(&o)? < *target {
            continue;
        }
        if let DualType::Sl(_) = t {
            let p = o.partition().expect("classical").clone();
            out.push(TauDatum {
                dual_type: t,
                class_function: x_minus1_a(&p)?,
                orbit: o,
                local_system: LocalSystem::Unique,
                lambda: None,
            });
            continue;
        }
        let which = [Which::Regular, Which::Subregular, Which::Subsubregular]
            .into_iter()
            .find(|&w| special_orbit(t, w).is_ok_and(|s| s == o))
            .ok_or_else(|| Error::Uncovered(format!("no Theta data for {o}")))?;
        out.extend(tau_data(t, which)?);
    }
    Ok(out)
}

/// For `so(2n)` the elliptic span only detects good types above the first
/// orbit of shape `(a,a,b,b)`.
fn check_even_orthogonal(t: DualType, target: &Rational) -> Result<()> {
    let DualType::So(m) = t else { return Ok(()) };
    if m % 2 == 1 {
        return Ok(());
    }
    let n = m / 2;
    let k = n / 2;
    let parts = if n % 2 == 0 { vec![k + 1, k + 1, k - 1, k - 1] } else { vec![k + 2, k + 2, k - 1, k - 1] };
    let o1 = Orbit::classical(t, Partition::from_unsorted(parts))?;
    if *target <= h_half_norm_sq(&o1)? {
        return Err(Error::Hypothesis(format!(
            "{t}: target orbit is not longer than {o1}, the elliptic span is not injective there"
        )));
    }
    Ok(())
}

/// Span route: `σ` is good iff its restriction to the `(-1)`-elliptic classes
/// is a combination of the `X_{-1}` data of orbits with `|h∨'| ≥ |h∨|`.
pub fn good_set_by_span(t: DualType, which: Which) -> Result<Vec<WType>> {
    let target = h_half_norm_sq(&special_orbit(t, which)?)?;
    check_even_orthogonal(t, &target)?;
    let basis: Vec<ClassFunction> =
        threshold_data(t, &target)?.into_iter().map(|d| d.class_function).collect();
    let table = character_table(t.weyl_type()?);
    let mut out = Vec::new();
    for i in 0..table.irreps.len() {
        if elliptic_span_member(&table.character(i), &basis)?.is_some() {
            out.push(table.irreps[i].clone());
        }
    }
    Ok(out)
}

/// `sp`/`so(2n+1)` route through Littlewood–Richardson support: `α × β` is good
/// iff every `λ` with `c^λ_{α,β^T} ≠ 0` labels a datum above the threshold.
pub fn good_set_by_lr(t: DualType, which: Which) -> Result<Vec<WType>> {
    let w = t.weyl_type()?;
    if w.family != Family::B {
        return Err(Error::InvalidDualType(format!("LR route needs a type B Weyl group, got {t}")));
    }
    let target = h_half_norm_sq(&special_orbit(t, which)?)?;
    let allowed: BTreeSet<Partition> =
        threshold_data(t, &target)?.into_iter().filter_map(|d| d.lambda).collect();
    let table = character_table(w);
    let lambdas = crate::combinatorics::partitions_of(w.n);
    let mut out = Vec::new();
    for irrep in &table.irreps {
        let WType::B(ab) = irrep else { unreachable!() };
        let mut ok = true;
        for lambda in &lambdas {
            if !allowed.contains(lambda) && spin_multiplicity_b(ab, lambda)? != 0 {
                ok = false;
                break;
            }
        }
        if ok {
            out.push(irrep.clone());
        }
    }
    Ok(out)
}

/// `⟨(α×β)⊗S, (λ×∅)⊗S⟩ = c^λ_{α,β^T}`.
pub fn spin_multiplicity_b(ab: &BiPartition, lambda: &Partition) -> Result<u64> {
    if ab.size() != lambda.size() {
        return Err(Error::IncomparableSizes(ab.size(), lambda.size()));
    }
    lr_coefficient(lambda, &ab.alpha, &ab.beta.transpose())
}

/// Whether `σ ⊗ S` meets `Θ^{-1}` of the given orbit: a nonzero `Q(-1)`
/// entry in type A, a nonzero elliptic pairing with a datum otherwise.
pub fn theta_hit(t: DualType, which: Which, sigma: &WType) -> Result<bool> {
    let w = t.weyl_type()?;
    sigma.check(w)?;
    if let (DualType::Sl(_), WType::A(nu)) = (t, sigma) {
        let orbit = special_orbit(t, which)?;
        let lambda = orbit.partition().expect("classical");
        return Ok(q_support_a(nu)?.contains(lambda));
    }
    let chi = irr_character(w, sigma)?;
    for d in tau_data(t, which)? {
        if !elliptic_pairing(&chi, &d.class_function)?.is_zero() {
            return Ok(true);
        }
    }
    Ok(false)
}
