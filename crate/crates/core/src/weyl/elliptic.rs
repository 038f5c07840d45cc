use super::characters::{character_table, inner_product, tensor};
use super::types::{same_type, ClassFunction, ConjugacyClass, Family, WeylType};
use crate::error::Result;
use crate::linalg;
use crate::rational::{self, Rational};

/// `det(1 + w)` on the Cartan space, read off the signed cycle type.
///
/// A positive `k`-cycle contributes `1 - (-1)^k`, a negative one `1 + (-1)^k`.
/// For `S_n` the permutation module carries one extra trivial summand, so the
/// product is halved to get the value on the `(n-1)`-dimensional reflection
/// representation.
pub fn wedge_value(t: WeylType, class: &ConjugacyClass) -> i64 {
    let b = class.signed_cycle_type();
    let pos_ok = b.alpha.parts().iter().all(|k| k % 2 == 1);
    let neg_ok = b.beta.parts().iter().all(|k| k % 2 == 0);
    if !(pos_ok && neg_ok) {
        return 0;
    }
    let cycles = (b.alpha.len() + b.beta.len()) as u32;
    match t.family {
        Family::A => 1 << (cycles - 1),
        Family::B | Family::D => 1 << cycles,
    }
}

/// The character of `⋀t`, i.e. `w ↦ det(1 + w)`.
pub fn wedge_character(t: WeylType) -> ClassFunction {
    let table = character_table(t);
    let values = table
        .classes
        .iter()
        .map(|c| rational::int(wedge_value(t, c)))
        .collect();
    ClassFunction::new(t, values)
}

/// Trace of `w` on the reflection representation.
pub fn reflection_character(t: WeylType) -> ClassFunction {
    let table = character_table(t);
    let values = table
        .classes
        .iter()
        .map(|c| {
            let b = c.signed_cycle_type();
            let fixed = b.alpha.multiplicity(1) as i64;
            let flipped = b.beta.multiplicity(1) as i64;
            rational::int(match t.family {
                Family::A => fixed - 1,
                Family::B | Family::D => fixed - flipped,
            })
        })
        .collect();
    ClassFunction::new(t, values)
}

/// Classes on which `det(1 + w) ≠ 0`.
pub fn minus1_elliptic_classes(t: WeylType) -> Vec<ConjugacyClass> {
    character_table(t)
        .classes
        .iter()
        .filter(|c| wedge_value(t, c) != 0)
        .cloned()
        .collect()
}

/// `⟨f, g ⊗ ⋀t⟩_W`.
pub fn elliptic_pairing(f: &ClassFunction, g: &ClassFunction) -> Result<Rational> {
    same_type(f, g)?;
    inner_product(f, &tensor(g, &wedge_character(f.weyl_type))?)
}

/// Coefficients `c` with `f = Σ c_i basis_i` on every `(-1)`-elliptic class,
/// or `None` if no such combination exists.
pub fn elliptic_span_member(
    f: &ClassFunction,
    basis: &[ClassFunction],
) -> Result<Option<Vec<Rational>>> {
    for b in basis {
        same_type(f, b)?;
    }
    let t = f.weyl_type;
    let table = character_table(t);
    let rows: Vec<usize> = (0..table.classes.len())
        .filter(|&j| wedge_value(t, &table.classes[j]) != 0)
        .collect();
    let a: Vec<Vec<Rational>> = rows
        .iter()
        .map(|&j| basis.iter().map(|b| b.values[j].clone()).collect())
        .collect();
    let rhs: Vec<Rational> = rows.iter().map(|&j| f.values[j].clone()).collect();
    Ok(linalg::solve(&a, &rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{BiPartition, Partition};
    use crate::weyl::{irr_character, sign_character, trivial_character, WType};

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn wedge_examples() {
        for n in 1..=5 {
            let t = WeylType::b(n);
            let w = wedge_character(t);
            assert_eq!(w.values[0], rational::int(1 << n));
            let minus_one = ConjugacyClass::B(BiPartition::new(Partition::empty(), Partition::column(n)));
            assert_eq!(wedge_value(t, &minus_one), 0);
            assert!(!minus1_elliptic_classes(t).contains(&minus_one));
        }
        assert_eq!(wedge_value(WeylType::a(3), &ConjugacyClass::A(p(&[3]))), 1);
    }

    #[test]
    fn sn_elliptic_classes_are_odd_cycle_types() {
        for n in 1..=7 {
            for c in minus1_elliptic_classes(WeylType::a(n)) {
                let ConjugacyClass::A(rho) = c else { unreachable!() };
                assert!(rho.parts().iter().all(|k| k % 2 == 1));
            }
        }
        let s5 = minus1_elliptic_classes(WeylType::a(5));
        assert!(s5.contains(&ConjugacyClass::A(p(&[3, 1, 1]))));
        assert!(s5.contains(&ConjugacyClass::A(p(&[5]))));
    }

    #[test]
    fn pairing_examples() {
        let t = WeylType::a(2);
        let triv = trivial_character(t);
        assert_eq!(elliptic_pairing(&triv, &triv).unwrap(), rational::one());
        let s5 = WeylType::a(5);
        let refl = reflection_character(s5);
        assert_eq!(
            inner_product(&tensor(&refl, &refl).unwrap(), &trivial_character(s5)).unwrap(),
            rational::one()
        );
        assert_eq!(
            inner_product(&trivial_character(WeylType::a(4)), &sign_character(WeylType::a(4)))
                .unwrap(),
            rational::zero()
        );
    }

    #[test]
    fn span_examples() {
        let s5 = WeylType::a(5);
        let refl = irr_character(s5, &WType::A(p(&[4, 1]))).unwrap();
        assert_eq!(refl, reflection_character(s5));
        assert_eq!(
            elliptic_span_member(&refl, std::slice::from_ref(&refl)).unwrap(),
            Some(vec![rational::one()])
        );
        let basis = [trivial_character(s5), sign_character(s5)];
        assert_eq!(elliptic_span_member(&refl, &basis).unwrap(), None);
        // empty basis: member iff f vanishes on elliptic classes
        let zero_on_elliptic = trivial_character(s5).sub(&sign_character(s5)).unwrap();
        assert_eq!(elliptic_span_member(&zero_on_elliptic, &[]).unwrap(), Some(vec![]));
        assert_eq!(elliptic_span_member(&refl, &[]).unwrap(), None);
    }
}
