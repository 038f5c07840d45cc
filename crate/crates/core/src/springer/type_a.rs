//! Type A: Kostka–Foulkes polynomials by charge, the graded transition
//! matrices `P(q)`, `Q(-1)`, and the virtual characters `X_{-1}`.

use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use super::poly::IntPolynomial;
use crate::cache::Memo;
use crate::combinatorics::{dominance_leq, partitions_of, Partition};
use crate::error::{Error, Result};
use crate::linalg;
use crate::orbits::{h_half_norm_sq, DualType, Orbit};
use crate::rational::Rational;
use crate::weyl::{character_table, ClassFunction, WType, WeylType};

/// Semistandard tableau stored row by row.
pub type Tableau = Vec<Vec<usize>>;

/// All semistandard tableaux of shape `lambda` and content `mu`, built by
/// adding one horizontal strip of `i`s per content entry.
pub fn semistandard_tableaux(lambda: &Partition, mu: &[usize]) -> Vec<Tableau> {
    fn strips(
        lambda: &Partition,
        cur: &[usize],
        row: usize,
        left: usize,
        next: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if row == lambda.len() {
            if left == 0 {
                out.push(next.clone());
            }
            return;
        }
        let have = cur.get(row).copied().unwrap_or(0);
        let cap = if row == 0 { lambda.part(0) } else { cur[row - 1].min(lambda.part(row)) };
        let room = cap.saturating_sub(have);
        for add in (0..=room.min(left)).rev() {
            next.push(have + add);
            strips(lambda, cur, row + 1, left - add, next, out);
            next.pop();
        }
    }
    if lambda.size() != mu.iter().sum::<usize>() {
        return Vec::new();
    }
    let mut states: Vec<(Vec<usize>, Tableau)> =
        vec![(vec![0; lambda.len()], vec![Vec::new(); lambda.len()])];
    for (i, &m) in mu.iter().enumerate() {
        let mut next_states = Vec::new();
        for (shape, tab) in &states {
            let mut shapes = Vec::new();
            strips(lambda, shape, 0, m, &mut Vec::new(), &mut shapes);
            for s in shapes {
                let mut t = tab.clone();
                for (r, (&old, &new)) in shape.iter().zip(&s).enumerate() {
                    t[r].extend(std::iter::repeat_n(i + 1, new - old));
                }
                next_states.push((s, t));
            }
        }
        states = next_states;
    }
    states.into_iter().map(|(_, t)| t).collect()
}

/// Rows from bottom to top, each read left to right.
pub fn reading_word(t: &Tableau) -> Vec<usize> {
    t.iter().rev().flatten().copied().collect()
}

/// Charge of a word whose content is a partition: split into standard
/// subwords (scan leftwards, cyclically, for 1, 2, ...) and add the indices.
pub fn charge(word: &[usize]) -> usize {
    let len = word.len();
    let mut used = vec![false; len];
    let mut total = 0;
    loop {
        let Some(mut pos) = (0..len).rev().find(|&i| !used[i] && word[i] == 1) else {
            return total;
        };
        used[pos] = true;
        let mut index = 0;
        let mut letter = 2;
        loop {
            let found = (1..=len)
                .map(|s| (pos + len - s) % len)
                .find(|&i| !used[i] && word[i] == letter);
            let Some(i) = found else { break };
            if i > pos {
                index += 1;
            }
            total += index;
            used[i] = true;
            pos = i;
            letter += 1;
        }
    }
}

/// `K_{λμ}(q) = Σ_T q^{charge(T)}` over semistandard tableaux of shape `λ`, content `μ`.
pub fn kostka_foulkes(lambda: &Partition, mu: &Partition) -> Result<IntPolynomial> {
    if lambda.size() != mu.size() {
        return Err(Error::IncomparableSizes(lambda.size(), mu.size()));
    }
    let mut k = IntPolynomial::zero();
    if !dominance_leq(mu, lambda)? {
        return Ok(k);
    }
    let one = BigInt::one();
    for t in semistandard_tableaux(lambda, mu.parts()) {
        k.add_term(charge(&reading_word(&t)), &one);
    }
    Ok(k)
}

/// The W-type attached to the orbit `O_λ` with trivial local system:
/// `σ_{λ^T}`, so the zero orbit gets `triv`.
pub fn springer_label_a(lambda: &Partition) -> WType {
    WType::A(lambda.transpose())
}

/// Partitions of `n` in increasing lexicographic order, which refines dominance.
pub fn dominance_index(n: usize) -> Vec<Partition> {
    let mut v = partitions_of(n);
    v.reverse();
    v
}

/// Square matrix indexed by the orbits of `sl(n)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GradedTransition {
    pub n: usize,
    pub index: Vec<Partition>,
    pub entries: Vec<Vec<IntPolynomial>>,
}

impl GradedTransition {
    pub fn position(&self, lambda: &Partition) -> Option<usize> {
        self.index.iter().position(|p| p == lambda)
    }

    pub fn eval(&self, q: i64) -> Vec<Vec<BigInt>> {
        self.entries.iter().map(|r| r.iter().map(|p| p.eval_i64(q)).collect()).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    pub index: Vec<Partition>,
    pub entries: Vec<Vec<BigInt>>,
}

impl IntMatrix {
    pub fn position(&self, lambda: &Partition) -> Option<usize> {
        self.index.iter().position(|p| p == lambda)
    }

    pub fn get(&self, row: &Partition, col: &Partition) -> Option<&BigInt> {
        Some(&self.entries[self.position(row)?][self.position(col)?])
    }
}

impl Serialize for IntMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            index: &'a [Partition],
            entries: Vec<Vec<String>>,
        }
        Repr {
            index: &self.index,
            entries: self.entries.iter().map(|r| r.iter().map(ToString::to_string).collect()).collect(),
        }
        .serialize(s)
    }
}

fn p_cache() -> &'static Memo<usize, GradedTransition> {
    static P: OnceLock<Memo<usize, GradedTransition>> = OnceLock::new();
    P.get_or_init(Memo::new)
}

fn q_cache() -> &'static Memo<usize, IntMatrix> {
    static Q: OnceLock<Memo<usize, IntMatrix>> = OnceLock::new();
    Q.get_or_init(Memo::new)
}

/// `P(q)` with `P[μ][λ] = K_{λμ}(q)`, so that
/// `X_q(O_μ) = Σ_λ P[μ][λ] σ(O_λ)` and `P` is upper unitriangular.
pub fn p_matrix_a(n: usize) -> Result<Arc<GradedTransition>> {
    if n == 0 {
        return Err(Error::InvalidWeylType("S_0".into()));
    }
    p_cache().get_or_try_insert_with(&n, || {
        let index = dominance_index(n);
        let entries = index
            .iter()
            .map(|mu| index.iter().map(|lambda| kostka_foulkes(lambda, mu)).collect())
            .collect::<Result<Vec<Vec<_>>>>()?;
        Ok(GradedTransition { n, index, entries })
    })
}

/// `Q(-1) = P(-1)^{-1}`.
pub fn q_matrix_at_minus1_a(n: usize) -> Result<Arc<IntMatrix>> {
    q_cache().get_or_try_insert_with(&n, || {
        let p = p_matrix_a(n)?;
        let entries = linalg::unitriangular_inverse(&p.eval(-1))?;
        Ok(IntMatrix { index: p.index.clone(), entries })
    })
}

/// `X_{-1}(O_λ) = Σ_μ P(-1)[λ][μ] σ(O_μ)` as a class function on `S_n`.
pub fn x_minus1_a(lambda: &Partition) -> Result<ClassFunction> {
    let n = lambda.size();
    let p = p_matrix_a(n)?;
    let row = p.position(lambda).ok_or_else(|| Error::InvalidPartition(lambda.to_string()))?;
    let t = WeylType::new(crate::weyl::Family::A, n)?;
    let table = character_table(t);
    let mut f = ClassFunction::zero(t);
    for (j, mu) in p.index.iter().enumerate() {
        let c = p.entries[row][j].eval_i64(-1);
        if c.is_zero() {
            continue;
        }
        let i = table.irrep_index(&springer_label_a(mu)).expect("S_n irrep");
        f = f.add(&table.character(i).scale(&Rational::from_integer(c)))?;
    }
    Ok(f)
}

/// Orbits `O_λ`, `λ ∈ DP(n)`, reached from `σ_ν` by a nonzero `Q(-1)` entry.
pub fn q_support_a(nu: &Partition) -> Result<Vec<Partition>> {
    let q = q_matrix_at_minus1_a(nu.size())?;
    let row = q.position(&nu.transpose()).ok_or_else(|| Error::InvalidPartition(nu.to_string()))?;
    Ok(q.index
        .iter()
        .enumerate()
        .filter(|(j, lambda)| lambda.is_distinct() && !q.entries[row][*j].is_zero())
        .map(|(_, lambda)| lambda.clone())
        .collect())
}

/// `d(σ_ν)²`: the least `|h∨_λ/2|²` over the orbits in [`q_support_a`].
pub fn d_value_a(nu: &Partition) -> Result<Rational> {
    let t = DualType::sl(nu.size())?;
    q_support_a(nu)?
        .into_iter()
        .map(|lambda| h_half_norm_sq(&Orbit::classical(t, lambda)?))
        .try_fold(None::<Rational>, |best, x| {
            let x = x?;
            Ok(Some(match best {
                Some(b) if b <= x => b,
                _ => x,
            }))
        })?
        .ok_or_else(|| Error::Internal(format!("sigma_{nu} has no Q(-1) support on DP({})", nu.size())))
}
