//! Module profiles at `h∨_sr/2` for `sl(4)`, `sp(6)` and `sl(6)`, with their
//! known W-structures.

use weylcert_core::dirac::ModuleProfile;
use weylcert_core::orbits::{h_half, special_orbit};
use weylcert_core::{BiPartition, DualType, Partition, WType, Which};

fn p(v: &[usize]) -> Partition {
    Partition::from_unsorted(v.to_vec())
}

fn a(v: &[usize]) -> WType {
    WType::A(p(v))
}

fn bp(x: &[usize], y: &[usize]) -> WType {
    WType::B(BiPartition::new(p(x), p(y)))
}

fn at_subregular(t: DualType, wtypes: Vec<WType>, hermitian: bool) -> ModuleProfile {
    let nu = h_half(&special_orbit(t, Which::Subregular).expect("subregular")).expect("h").entries;
    ModuleProfile::new(t, nu, wtypes).expect("valid fixture").with_hermitian(hermitian)
}

pub fn reference_profiles() -> Vec<(&'static str, ModuleProfile)> {
    let sl4 = DualType::sl(4).unwrap();
    let sp6 = DualType::sp(6).unwrap();
    let sl6 = DualType::sl(6).unwrap();
    vec![
        ("A3 4", at_subregular(sl4, vec![a(&[2, 1, 1]), a(&[1, 1, 1, 1])], true)),
        ("A3 3", at_subregular(sl4, vec![a(&[2, 2])], true)),
        ("A3 2_a", at_subregular(sl4, vec![a(&[3, 1]), a(&[2, 1, 1])], false)),
        ("A3 2_b", at_subregular(sl4, vec![a(&[3, 1]), a(&[2, 1, 1])], false)),
        ("A3 0", at_subregular(sl4, vec![a(&[4]), a(&[3, 1])], true)),
        ("C3 5_t", at_subregular(sp6, vec![bp(&[1], &[1, 1]), bp(&[], &[1, 1, 1])], true)),
        ("C3 5_s", at_subregular(sp6, vec![bp(&[1, 1, 1], &[])], true)),
        ("C3 4_b", at_subregular(sp6, vec![bp(&[], &[2, 1])], true)),
        ("C3 4_a", at_subregular(sp6, vec![bp(&[1, 1], &[1])], true)),
        ("C3 3_a", at_subregular(sp6, vec![bp(&[1], &[2])], true)),
        (
            "C3 3_bt",
            at_subregular(sp6, vec![bp(&[2], &[1]), bp(&[1], &[2]), bp(&[], &[2, 1]), bp(&[1], &[1, 1])], true),
        ),
        ("C3 3_bs", at_subregular(sp6, vec![bp(&[2, 1], &[])], true)),
        (
            "C3 2_a",
            at_subregular(sp6, vec![bp(&[2], &[1]), bp(&[2, 1], &[]), bp(&[1, 1], &[1]), bp(&[1], &[1, 1])], true),
        ),
        ("C3 2_b", at_subregular(sp6, vec![bp(&[], &[3])], true)),
        ("C3 0", at_subregular(sp6, vec![bp(&[3], &[]), bp(&[2], &[1])], true)),
        ("A5 sigma(3,2,1)", at_subregular(sl6, vec![a(&[3, 2, 1])], true)),
    ]
}
