//! Inputs shared by the benchmarks.

use weylcert_core::dirac::ModuleProfile;
use weylcert_core::orbits::{h_half, special_orbit};
use weylcert_core::{BiPartition, DualType, Partition, WType, Which};

fn p(v: &[usize]) -> Partition {
    Partition::from_unsorted(v.to_vec())
}

/// A small batch of profiles at subregular central characters.
pub fn sample_profiles() -> Vec<ModuleProfile> {
    let at = |t: DualType, wtypes: Vec<WType>| {
        let nu = h_half(&special_orbit(t, Which::Subregular).unwrap()).unwrap().entries;
        ModuleProfile::new(t, nu, wtypes).unwrap()
    };
    vec![
        at(DualType::sl(6).unwrap(), vec![WType::A(p(&[3, 2, 1]))]),
        at(DualType::sl(7).unwrap(), vec![WType::A(p(&[7])), WType::A(p(&[6, 1]))]),
        at(DualType::sp(8).unwrap(), vec![WType::B(BiPartition::new(p(&[2, 2]), Partition::empty()))]),
        at(DualType::so(11).unwrap(), vec![WType::B(BiPartition::new(p(&[4]), p(&[1])))]),
    ]
}
