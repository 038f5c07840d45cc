use std::collections::BTreeSet;

use num_traits::Zero;
use serde::Serialize;

use crate::combinatorics::{BiPartition, Partition};
use crate::error::{Error, Result};
use crate::orbits::{DualType, Which};
use crate::springer::good_set;
use crate::weyl::{irr_character, inner_product, reflection_character, tensor, WType};

fn hook(k: usize, n: usize) -> Partition {
    let mut v = vec![k];
    v.extend(std::iter::repeat_n(1, n - k));
    Partition::from_unsorted(v)
}

/// Springer representations of the regular and subregular orbits, in the
/// normalization where the regular orbit goes to `sgn`.
pub fn springer_high(t: DualType) -> Result<Vec<WType>> {
    let n = t.rank();
    if n < 2 {
        return Err(Error::Hypothesis(format!("{t} has rank < 2")));
    }
    let e = Partition::empty;
    let col = |k: usize| Partition::column(k);
    let bp = |a: Partition, b: Partition| WType::B(BiPartition::new(a, b));
    Ok(match t {
        DualType::Sl(m) => vec![WType::A(col(m)), WType::A(hook(2, m))],
        DualType::So(m) if m % 2 == 1 => vec![
            bp(e(), col(n)),
            bp(col(1), col(n - 1)),
            bp(e(), hook(2, n)),
        ],
        DualType::Sp(_) => vec![bp(e(), col(n)), bp(col(1), col(n - 1)), bp(col(n), e())],
        DualType::So(_) => vec![
            WType::d_pair(col(n), e())?,
            WType::d_pair(col(n - 1), col(1))?,
        ],
        DualType::Exceptional(_) => return Err(Error::UseStaticTable(t.to_string())),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LinkGraph {
    pub vertices: Vec<WType>,
    /// Pairs `(i, j)`, `i ≤ j`, with `⟨σ_i ⊗ refl, σ_j⟩ ≠ 0`.
    pub edges: Vec<(usize, usize)>,
    pub high: Vec<WType>,
    pub low: Vec<WType>,
    /// `H ∩ L = ∅`.
    pub disjoint: bool,
    /// No `σ ∈ L`, `σ' ∈ H` with `⟨σ ⊗ refl, σ'⟩ ≠ 0`.
    pub link_free: bool,
    /// Inside the given vertices that are good for the subregular orbit, no
    /// chain of refl-edges joins an `L` vertex to an `H` vertex.
    pub obstruction: bool,
}

fn refl_linked(t: DualType, a: &WType, b: &WType) -> Result<bool> {
    let w = t.weyl_type()?;
    let f = tensor(&irr_character(w, a)?, &reflection_character(w))?;
    Ok(!inner_product(&f, &irr_character(w, b)?)?.is_zero())
}

/// The `⊗ refl` graph on `wtypes`, with the `H`/`L` split of the subregular good set.
pub fn refl_link_graph(t: DualType, wtypes: &[WType]) -> Result<LinkGraph> {
    let w = t.weyl_type()?;
    let vertices: Vec<WType> = {
        let mut seen = BTreeSet::new();
        wtypes.iter().filter(|s| seen.insert((*s).clone())).cloned().collect()
    };
    for v in &vertices {
        v.check(w)?;
    }
    let good = good_set(t, Which::Subregular)?;
    let high: Vec<WType> = springer_high(t)?.into_iter().filter(|s| good.contains(s)).collect();
    let low: Vec<WType> = high.iter().map(WType::sign_twist).collect();
    let disjoint = high.iter().all(|s| !low.contains(s));
    let mut link_free = true;
    for a in &low {
        for b in &high {
            if refl_linked(t, a, b)? {
                link_free = false;
            }
        }
    }
    let mut edges = Vec::new();
    for i in 0..vertices.len() {
        for j in i..vertices.len() {
            if refl_linked(t, &vertices[i], &vertices[j])? {
                edges.push((i, j));
            }
        }
    }
    let allowed: Vec<bool> = vertices.iter().map(|v| good.contains(v)).collect();
    let mut reach: Vec<bool> = vertices.iter().zip(&allowed).map(|(v, &ok)| ok && low.contains(v)).collect();
    loop {
        let mut changed = false;
        for &(i, j) in &edges {
            if allowed[i] && allowed[j] && reach[i] != reach[j] {
                reach[i] = true;
                reach[j] = true;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let obstruction = !vertices.iter().zip(&reach).any(|(v, &r)| r && high.contains(v));
    Ok(LinkGraph { vertices, edges, high, low, disjoint, link_free, obstruction })
}
