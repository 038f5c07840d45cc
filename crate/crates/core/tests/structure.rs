use std::collections::BTreeSet;

use num_traits::Zero;
use weylcert_core::dirac::refl_link_graph;
use weylcert_core::springer::{good_set, good_set_by_d, good_set_by_span};
use weylcert_core::weyl::{character_table, inner_product, tensor, WeylType};
use weylcert_core::{DualType, WType, Which};

#[test]
fn character_tables_are_orthonormal() {
    let types = (1..=6)
        .map(WeylType::a)
        .chain((1..=6).map(WeylType::b))
        .chain((2..=5).map(WeylType::d));
    for t in types {
        let table = character_table(t);
        assert_eq!(table.irreps.len(), table.classes.len(), "{t}");
        let k = table.irreps.len();
        for i in 0..k {
            for j in i..k {
                let ip = inner_product(&table.character(i), &table.character(j)).unwrap();
                let want = if i == j { 1 } else { 0 };
                assert_eq!(ip, weylcert_core::rational::int(want), "{t}: {} {}", table.irreps[i], table.irreps[j]);
            }
        }
    }
}

#[test]
fn d_tensor_products_decompose_integrally() {
    for n in 2..=5 {
        let table = character_table(WeylType::d(n));
        let k = table.irreps.len();
        for i in 0..k {
            for j in i..k {
                let prod = tensor(&table.character(i), &table.character(j)).unwrap();
                for m in table.decompose(&prod).unwrap() {
                    assert!(m.is_integer() && m >= Zero::zero(), "D{n}: {} x {}", table.irreps[i], table.irreps[j]);
                }
            }
        }
    }
}

#[test]
fn d_and_span_routes_agree_in_type_a() {
    for n in 2..=7 {
        let t = DualType::sl(n).unwrap();
        for w in [Which::Regular, Which::Subregular, Which::Subsubregular] {
            match good_set_by_d(t, w) {
                Ok(by_d) => assert_eq!(by_d, good_set_by_span(t, w).unwrap(), "{t} {w}"),
                Err(e) => assert!(e.is_hypothesis() || n < 5, "{t} {w}: {e}"),
            }
        }
    }
}

#[test]
fn link_obstruction_ranks_4_to_6() {
    for n in 4..=6 {
        let types = [
            DualType::sl(n + 1).unwrap(),
            DualType::so(2 * n + 1).unwrap(),
            DualType::sp(2 * n).unwrap(),
            DualType::so(2 * n).unwrap(),
        ];
        for t in types {
            let all = character_table(t.weyl_type().unwrap()).irreps.clone();
            let g = refl_link_graph(t, &all).unwrap();
            assert!(g.disjoint, "{t}: H and L meet");
            assert!(g.link_free, "{t}: an L type links to an H type");
            assert!(g.obstruction, "{t}: a refl chain joins L to H inside Good(sr)");
            let good = good_set(t, Which::Subregular).unwrap();
            let good: BTreeSet<WType> = good.wtypes().unwrap().iter().cloned().collect();
            assert!(good.iter().all(|s| s.sign_twist() != *s), "{t}: sgn-self-dual good type");
            assert!(g.high.iter().chain(&g.low).all(|s| good.contains(s)));
        }
    }
}

#[test]
fn link_graph_edges_are_symmetric() {
    let t = DualType::sp(8).unwrap();
    let all = character_table(t.weyl_type().unwrap()).irreps.clone();
    let g = refl_link_graph(t, &all).unwrap();
    let table = character_table(t.weyl_type().unwrap());
    let refl = weylcert_core::weyl::reflection_character(table.weyl_type);
    for i in 0..all.len() {
        for j in 0..all.len() {
            let a = table.character(table.irrep_index(&g.vertices[i]).unwrap());
            let b = table.character(table.irrep_index(&g.vertices[j]).unwrap());
            let linked = !inner_product(&tensor(&a, &refl).unwrap(), &b).unwrap().is_zero();
            let edge = g.edges.contains(&(i.min(j), i.max(j)));
            assert_eq!(linked, edge);
        }
    }
}
