//! Exact Weyl-group and nilpotent-orbit combinatorics for the classical
//! groups, and a certificate engine that applies the Dirac inequality to
//! unramified principal-series parameters.
//!
//! Modules, bottom up:
//!
//! - [`combinatorics`]: partitions, bipartitions, dominance order.
//! - [`weyl`]: character tables of `S_n`, `W(B_n)`, `W(D_n)`; the elliptic pairing.
//! - [`orbits`]: nilpotent orbits of `sl(n)`, `sp(2n)`, `so(m)`; `h∨` vectors.
//! - [`springer`]: Kostka–Foulkes polynomials, `Q(-1)`, `X_{-1}` class
//!   functions, good W-types.
//! - [`dirac`]: certificates, spectral-gap regions, `refl`-link graphs.

pub mod cache;
pub mod combinatorics;
pub mod dirac;
pub mod error;
pub mod linalg;
pub mod orbits;
pub mod rational;
pub mod springer;
pub mod weyl;

pub use combinatorics::{BiPartition, Partition};
pub use error::{Error, Result};
pub use orbits::{DualType, Exceptional, HVector, Orbit, Which};
pub use rational::Rational;
pub use weyl::{ClassFunction, ConjugacyClass, Family, WType, WeylType};
pub use dirac::{certify, CertificateReport, ModuleProfile, Verdict};
