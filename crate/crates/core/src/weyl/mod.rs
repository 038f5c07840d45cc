//! Conjugacy classes and exact character tables of the classical Weyl groups
//! `S_n`, `W(B_n)` and `W(D_n)`, together with the `(-1)`-elliptic machinery:
//! the exterior-algebra character `det(1+w)`, the elliptic pairing, and span
//! membership of class functions restricted to elliptic classes.

mod characters;
mod elliptic;
mod lr;
mod types;

pub use characters::{
    character_table, hook_removals, inner_product, irr_character, sign_character,
    sn_character_value, tensor, trivial_character, CharacterTable,
};
pub use elliptic::{
    elliptic_pairing, elliptic_span_member, minus1_elliptic_classes, reflection_character,
    wedge_character, wedge_value,
};
pub use lr::lr_coefficient;
pub use types::{ClassFunction, ConjugacyClass, DLabel, Family, Sign, WType, WTypeSpec, WeylType};

use num_bigint::BigInt;

/// All conjugacy classes with their sizes, in canonical order (identity first).
pub fn conjugacy_classes(t: WeylType) -> Vec<(ConjugacyClass, BigInt)> {
    let table = character_table(t);
    table
        .classes
        .iter()
        .cloned()
        .zip(table.sizes.iter().cloned())
        .collect()
}
