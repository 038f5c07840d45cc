mod common;

use common::*;
use num_traits::{ToPrimitive, Zero};
use weylcert_core::combinatorics::partitions_of;
use weylcert_core::orbits::{h_half_norm_sq, h_vector, special_orbit};
use weylcert_core::rational::int;
use weylcert_core::springer::{kostka_foulkes, p_matrix_a, springer_label_a, x_minus1_a};
use weylcert_core::weyl::{
    character_table, elliptic_pairing, irr_character, lr_coefficient, wedge_value, ClassFunction, WeylType,
};
use weylcert_core::{DualType, Orbit, Rational, Which};

#[test]
fn kostka_at_one_counts_tableaux() {
    for n in 1..=7 {
        for lambda in partitions_of(n) {
            for mu in partitions_of(n) {
                let k = kostka_foulkes(&lambda, &mu).unwrap().eval_i64(1);
                assert_eq!(
                    k.to_u64().unwrap(),
                    ssyt_count(lambda.parts(), mu.parts()),
                    "K_{{{lambda},{mu}}}(1)"
                );
            }
        }
    }
}

fn check_neutral(t: DualType, e: Mat) {
    let jt = jordan_type(&e);
    let eig = neutral_eigenvalues(t, &e);
    let o = Orbit::classical(t, part(&jt)).unwrap();
    let keep = match t {
        DualType::Sl(_) => eig.len(),
        _ => t.rank(),
    };
    let want: Vec<Rational> = eig[..keep].iter().map(|&x| int(x)).collect();
    assert_eq!(h_vector(&o).unwrap().entries, want, "{t} {jt:?}");
}

#[test]
fn h_vector_matches_sl2_triples() {
    let one = int(1);
    let sl2 = DualType::sl(2).unwrap();
    check_neutral(sl2, unit(2, 0, 1));
    check_neutral(sl2, zeros(2));

    let sl3 = DualType::sl(3).unwrap();
    check_neutral(sl3, lin(&unit(3, 0, 1), &one, &unit(3, 1, 2), &one));
    check_neutral(sl3, unit(3, 0, 1));
    check_neutral(sl3, zeros(3));

    let sp4 = DualType::sp(4).unwrap();
    let u = |i, j| unit(4, i, j);
    // A = E_01, B = E_11: one block of size 4
    let a = lin(&u(0, 1), &one, &u(3, 2), &int(-1));
    check_neutral(sp4, lin(&a, &one, &u(1, 3), &one));
    assert_eq!(jordan_type(&lin(&a, &one, &u(1, 3), &one)), vec![4]);
    check_neutral(sp4, a.clone());
    assert_eq!(jordan_type(&a), vec![2, 2]);
    check_neutral(sp4, u(0, 2));
    assert_eq!(jordan_type(&u(0, 2)), vec![2, 1, 1]);
    check_neutral(sp4, zeros(4));
}

#[test]
fn regular_norm_is_rho_squared() {
    let mut types: Vec<DualType> = (2..=8).map(|n| DualType::sl(n).unwrap()).collect();
    types.extend((1..=6).map(|n| DualType::sp(2 * n).unwrap()));
    types.extend((3..=13).map(|m| DualType::so(m).unwrap()));
    for t in types {
        let reg = special_orbit(t, Which::Regular).unwrap();
        assert_eq!(h_half_norm_sq(&reg).unwrap(), rho_norm_sq(t), "{t}");
    }
}

fn check_census(t: WeylType, all_pairs: bool) {
    let c = census(t);
    let table = character_table(t);
    assert_eq!(int(c.order as i64), Rational::from_integer(table.order.clone()));
    assert!(!c.split_det_nonzero);
    let mut split_size = 0u64;
    for (j, cls) in table.classes.iter().enumerate() {
        match c.classes.get(cls) {
            Some(&(count, det)) => {
                assert_eq!(int(count as i64), Rational::from_integer(table.sizes[j].clone()), "{t} {cls}");
                assert_eq!(det, wedge_value(t, cls), "{t} {cls}");
            }
            None => split_size += table.sizes[j].to_u64().unwrap(),
        }
    }
    assert_eq!(split_size, c.split_elements);
    let k = table.irreps.len();
    let step = if all_pairs { 1 } else { 3 };
    for i in (0..k).step_by(step) {
        for j in (i..k).step_by(step) {
            let (f, g) = (table.character(i), table.character(j));
            assert_eq!(
                elliptic_pairing(&f, &g).unwrap(),
                direct_elliptic_pairing(&c, &f, &g),
                "{t}: {} vs {}",
                table.irreps[i],
                table.irreps[j]
            );
        }
    }
}

#[test]
fn elliptic_pairing_matches_group_sum() {
    for n in 1..=8 {
        check_census(WeylType::a(n), n <= 7);
    }
    for n in 1..=6 {
        check_census(WeylType::b(n), n <= 5);
    }
    for n in 2..=6 {
        check_census(WeylType::d(n), n <= 5);
    }
}

#[test]
fn lr_matches_induced_characters() {
    let mut oracle = InducedLr::new();
    for n in 1..=8 {
        for a in 0..=n {
            for mu in partitions_of(a) {
                for nu in partitions_of(n - a) {
                    for lambda in partitions_of(n) {
                        let c = lr_coefficient(&lambda, &mu, &nu).unwrap();
                        assert_eq!(oracle.coefficient(&lambda, &mu, &nu), int(c as i64), "c^{lambda}_{{{mu},{nu}}}");
                    }
                }
            }
        }
    }
}

fn gram_entry(f: &ClassFunction, g: &ClassFunction) -> Rational {
    elliptic_pairing(f, g).unwrap()
}

#[test]
fn gram_matrix_of_x_minus1() {
    for n in 1..=7 {
        let ps = partitions_of(n);
        let xs: Vec<ClassFunction> = ps.iter().map(|l| x_minus1_a(l).unwrap()).collect();
        for (i, l) in ps.iter().enumerate() {
            for (j, m) in ps.iter().enumerate() {
                let g = gram_entry(&xs[i], &xs[j]);
                if i == j && l.is_distinct() {
                    assert_eq!(g, int(1 << (l.len() - 1)), "diagonal at {l}");
                } else {
                    assert!(g.is_zero(), "off-support entry at ({l}, {m})");
                }
            }
        }
    }
}

#[test]
fn transposed_convention_breaks_the_gram_pin() {
    let mut broken = false;
    for n in 3..=6 {
        let p = p_matrix_a(n).unwrap();
        let pm = p.eval(-1);
        let t = WeylType::a(n);
        let sig: Vec<ClassFunction> = p
            .index
            .iter()
            .map(|mu| irr_character(t, &springer_label_a(mu)).unwrap())
            .collect();
        let col = |l: usize| {
            let mut f = ClassFunction::zero(t);
            for (m, s) in sig.iter().enumerate() {
                f = f.add(&s.scale(&Rational::from_integer(pm[m][l].clone()))).unwrap();
            }
            f
        };
        let xs: Vec<ClassFunction> = (0..p.index.len()).map(col).collect();
        for i in 0..xs.len() {
            for j in 0..xs.len() {
                let g = gram_entry(&xs[i], &xs[j]);
                let l = &p.index[i];
                let want = if i == j && l.is_distinct() { int(1 << (l.len() - 1)) } else { int(0) };
                broken |= g != want;
            }
        }
    }
    assert!(broken);
}
