//! Murnaghan–Nakayama character tables.

use std::collections::{BTreeSet, HashMap};
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_traits::Zero;

use super::types::{same_type, ClassFunction, ConjugacyClass, DLabel, Family, Sign, WType, WeylType};
use crate::cache::Memo;
use crate::combinatorics::{bipartitions_of, partitions_of, BiPartition, Partition};
use crate::error::Result;
use crate::rational::{self, Rational};

/// Ways to strip a rim hook of length `k` from `lambda`, with the sign
/// `(-1)^{height}` of each hook.
pub fn hook_removals(lambda: &Partition, k: usize) -> Vec<(Partition, i64)> {
    let len = lambda.len();
    let beta: BTreeSet<usize> = (0..len).map(|i| lambda.part(i) + len - 1 - i).collect();
    let mut out = Vec::new();
    for &x in &beta {
        if x < k || beta.contains(&(x - k)) {
            continue;
        }
        let between = beta.range(x - k + 1..x).count();
        let mut next: Vec<usize> = beta.iter().copied().filter(|&y| y != x).collect();
        next.push(x - k);
        next.sort_unstable_by(|a, b| b.cmp(a));
        let parts = next
            .iter()
            .enumerate()
            .map(|(i, &b)| b - (len - 1 - i))
            .collect();
        let sign = if between.is_multiple_of(2) { 1 } else { -1 };
        out.push((Partition::from_unsorted(parts), sign));
    }
    out
}

#[derive(Default)]
struct SnCache(HashMap<(Partition, Partition), i64>);

impl SnCache {
    fn value(&mut self, lambda: &Partition, rho: &Partition) -> i64 {
        if rho.is_empty() {
            return i64::from(lambda.is_empty());
        }
        let key = (lambda.clone(), rho.clone());
        if let Some(&v) = self.0.get(&key) {
            return v;
        }
        let k = rho.part(0);
        let rest = rho.without_index(0);
        let v = hook_removals(lambda, k)
            .into_iter()
            .map(|(mu, s)| s * self.value(&mu, &rest))
            .sum();
        self.0.insert(key, v);
        v
    }
}

/// `χ^λ(ρ)` for `S_n`.
pub fn sn_character_value(lambda: &Partition, rho: &Partition) -> i64 {
    SnCache::default().value(lambda, rho)
}

/// Hyperoctahedral Murnaghan–Nakayama: a positive `k`-cycle strips a
/// `k`-hook from either factor with sign `(-1)^{ht}`; a negative cycle does the
/// same but with an extra `-1` when the hook comes from `β`.
#[derive(Default)]
struct BnCache(HashMap<(BiPartition, BiPartition), i64>);

impl BnCache {
    fn value(&mut self, label: &BiPartition, class: &BiPartition) -> i64 {
        let (pos, neg) = (&class.alpha, &class.beta);
        if pos.is_empty() && neg.is_empty() {
            return i64::from(label.alpha.is_empty() && label.beta.is_empty());
        }
        let key = (label.clone(), class.clone());
        if let Some(&v) = self.0.get(&key) {
            return v;
        }
        let (k, eps, rest) = if !pos.is_empty() {
            (pos.part(0), 1, BiPartition::new(pos.without_index(0), neg.clone()))
        } else {
            (neg.part(0), -1, BiPartition::new(pos.clone(), neg.without_index(0)))
        };
        let mut v = 0;
        for (a, s) in hook_removals(&label.alpha, k) {
            v += s * self.value(&BiPartition::new(a, label.beta.clone()), &rest);
        }
        for (b, s) in hook_removals(&label.beta, k) {
            v += eps * s * self.value(&BiPartition::new(label.alpha.clone(), b), &rest);
        }
        self.0.insert(key, v);
        v
    }
}

/// Character table of a classical Weyl group in canonical order: classes
/// with the identity first, irreducibles with the trivial type first.
#[derive(Debug)]
pub struct CharacterTable {
    pub weyl_type: WeylType,
    pub classes: Vec<ConjugacyClass>,
    pub sizes: Vec<BigInt>,
    pub order: BigInt,
    pub irreps: Vec<WType>,
    /// `values[i][j]` is the value of `irreps[i]` on `classes[j]`.
    pub values: Vec<Vec<Rational>>,
    class_index: HashMap<ConjugacyClass, usize>,
    irrep_index: HashMap<WType, usize>,
}

impl CharacterTable {
    pub fn class_index(&self, c: &ConjugacyClass) -> Option<usize> {
        self.class_index.get(c).copied()
    }

    pub fn irrep_index(&self, w: &WType) -> Option<usize> {
        self.irrep_index.get(w).copied()
    }

    pub fn character(&self, i: usize) -> ClassFunction {
        ClassFunction::new(self.weyl_type, self.values[i].clone())
    }

    /// Multiplicities of the irreducibles in `f`, in `irreps` order.
    pub fn decompose(&self, f: &ClassFunction) -> Result<Vec<Rational>> {
        (0..self.irreps.len())
            .map(|i| inner_product(f, &self.character(i)))
            .collect()
    }

    fn build(t: WeylType) -> CharacterTable {
        let n = t.n;
        let order = t.order();
        let (classes, sizes): (Vec<_>, Vec<_>) = match t.family {
            Family::A => partitions_of(n)
                .into_iter()
                .rev()
                .map(|p| {
                    let size = &order / p.z();
                    (ConjugacyClass::A(p), size)
                })
                .unzip(),
            Family::B => signed_cycle_types(n)
                .into_iter()
                .map(|b| {
                    let size = &order / b_centralizer(&b);
                    (ConjugacyClass::B(b), size)
                })
                .unzip(),
            Family::D => {
                let b_order = WeylType::b(n).order();
                let mut out = Vec::new();
                for b in signed_cycle_types(n) {
                    if b.beta.len() % 2 != 0 {
                        continue;
                    }
                    let size = &b_order / b_centralizer(&b);
                    if is_split_class(&b) {
                        for s in [Sign::Plus, Sign::Minus] {
                            let c = ConjugacyClass::D { signed: b.clone(), split: Some(s) };
                            out.push((c, &size / 2));
                        }
                    } else {
                        out.push((ConjugacyClass::D { signed: b, split: None }, size));
                    }
                }
                out.into_iter().unzip()
            }
        };

        let irreps: Vec<WType> = match t.family {
            Family::A => partitions_of(n).into_iter().map(WType::A).collect(),
            Family::B => bipartitions_of(n).into_iter().map(WType::B).collect(),
            Family::D => {
                let mut out = Vec::new();
                for b in bipartitions_of(n) {
                    if b.alpha > b.beta {
                        out.push(WType::D(DLabel::Pair(b)));
                    } else if b.alpha == b.beta {
                        out.push(WType::D(DLabel::Split(b.alpha.clone(), Sign::Plus)));
                        out.push(WType::D(DLabel::Split(b.alpha, Sign::Minus)));
                    }
                }
                out
            }
        };

        let mut sn = SnCache::default();
        let mut bn = BnCache::default();
        let values = irreps
            .iter()
            .map(|w| {
                classes
                    .iter()
                    .map(|c| character_value(w, c, &mut sn, &mut bn))
                    .collect()
            })
            .collect();

        let class_index = classes.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect();
        let irrep_index = irreps.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        CharacterTable {
            weyl_type: t,
            classes,
            sizes,
            order,
            irreps,
            values,
            class_index,
            irrep_index,
        }
    }
}

fn character_value(
    w: &WType,
    c: &ConjugacyClass,
    sn: &mut SnCache,
    bn: &mut BnCache,
) -> Rational {
    match (w, c) {
        (WType::A(l), ConjugacyClass::A(rho)) => rational::int(sn.value(l, rho)),
        (WType::B(l), ConjugacyClass::B(b)) => rational::int(bn.value(l, b)),
        (WType::D(DLabel::Pair(l)), ConjugacyClass::D { signed, .. }) => {
            rational::int(bn.value(l, signed))
        }
        (WType::D(DLabel::Split(alpha, rep)), ConjugacyClass::D { signed, split }) => {
            let full = BiPartition::new(alpha.clone(), alpha.clone());
            let half = rational::frac(bn.value(&full, signed), 2);
            match split {
                None => half,
                Some(tag) => {
                    // class 2μ: difference term ±2^{ℓ(μ)-1} χ^α(μ)
                    let mu = Partition::from_unsorted(
                        signed.alpha.parts().iter().map(|p| p / 2).collect(),
                    );
                    let corr = sn.value(alpha, &mu) * (1i64 << (mu.len() - 1));
                    half + rational::int(rep.value() * tag.value() * corr)
                }
            }
        }
        _ => unreachable!("label and class families agree"),
    }
}

/// Signed cycle types `(ρ+, ρ-)` of `W(B_n)`, identity first.
fn signed_cycle_types(n: usize) -> Vec<BiPartition> {
    let mut out = Vec::new();
    for k in 0..=n {
        for pos in partitions_of(n - k).into_iter().rev() {
            for neg in partitions_of(k).into_iter().rev() {
                out.push(BiPartition::new(pos.clone(), neg));
            }
        }
    }
    out
}

fn b_centralizer(b: &BiPartition) -> BigInt {
    b.alpha.z() * b.beta.z() * BigInt::from(2).pow((b.alpha.len() + b.beta.len()) as u32)
}

fn is_split_class(b: &BiPartition) -> bool {
    b.beta.is_empty() && b.alpha.parts().iter().all(|p| p % 2 == 0)
}

fn tables() -> &'static Memo<WeylType, CharacterTable> {
    static TABLES: OnceLock<Memo<WeylType, CharacterTable>> = OnceLock::new();
    TABLES.get_or_init(Memo::new)
}

/// Memoized character table of `t`.
pub fn character_table(t: WeylType) -> Arc<CharacterTable> {
    tables().get_or_insert_with(&t, || CharacterTable::build(t))
}

pub fn irr_character(t: WeylType, w: &WType) -> Result<ClassFunction> {
    w.check(t)?;
    let table = character_table(t);
    let i = table.irrep_index(w).ok_or_else(|| crate::error::Error::InvalidLabel {
        label: w.to_string(),
        group: t.to_string(),
    })?;
    Ok(table.character(i))
}

pub fn trivial_character(t: WeylType) -> ClassFunction {
    character_table(t).character(0)
}

pub fn sign_character(t: WeylType) -> ClassFunction {
    let table = character_table(t);
    let values = table
        .classes
        .iter()
        .map(|c| {
            let b = c.signed_cycle_type();
            // det of a signed permutation matrix
            let odd = b.alpha.parts().iter().filter(|&&k| k % 2 == 0).count()
                + b.beta.parts().iter().filter(|&&k| k % 2 == 1).count();
            rational::int(if odd % 2 == 0 { 1 } else { -1 })
        })
        .collect();
    ClassFunction::new(t, values)
}

/// `(1/|W|) Σ_c |c| f(c) g(c)`; characters of Weyl groups are real.
pub fn inner_product(f: &ClassFunction, g: &ClassFunction) -> Result<Rational> {
    same_type(f, g)?;
    let table = character_table(f.weyl_type);
    let total = table
        .sizes
        .iter()
        .zip(f.values.iter().zip(&g.values))
        .fold(Rational::zero(), |acc, (s, (a, b))| {
            acc + Rational::from_integer(s.clone()) * a * b
        });
    Ok(total / Rational::from_integer(table.order.clone()))
}

/// Pointwise product.
pub fn tensor(f: &ClassFunction, g: &ClassFunction) -> Result<ClassFunction> {
    same_type(f, g)?;
    Ok(ClassFunction::new(
        f.weyl_type,
        f.values.iter().zip(&g.values).map(|(a, b)| a * b).collect(),
    ))
}
