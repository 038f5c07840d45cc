use thiserror::Error;

/// Errors raised by the library.
///
/// `Hypothesis` and `Uncovered` mark requests outside the range where the
/// underlying theorems apply; the CLI maps them to exit code 2. Every other
/// variant signals malformed input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("incomparable sizes: {0} vs {1}")]
    IncomparableSizes(usize, usize),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid label {label} for {group}")]
    InvalidLabel { label: String, group: String },
    #[error("mismatched Weyl types: {0} vs {1}")]
    MismatchedTypes(String, String),
    #[error("invalid Weyl type: {0}")]
    InvalidWeylType(String),
    #[error("invalid dual type: {0}")]
    InvalidDualType(String),
    #[error("invalid orbit {partition} for {dual_type}")]
    InvalidOrbit { dual_type: String, partition: String },
    #[error("exceptional type {0}: use static table")]
    UseStaticTable(String),
    #[error("wrong coordinate length: expected {expected}, got {got}")]
    CoordinateLength { expected: usize, got: usize },
    #[error("hypothesis not met: {0}")]
    Hypothesis(String),
    #[error("not covered: {0}")]
    Uncovered(String),
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("internal consistency error: {0}")]
    Internal(String),
}

impl Error {
    /// True for errors that reject a well-formed request because a theorem's
    /// hypothesis does not hold (or the required data is not carried).
    pub fn is_hypothesis(&self) -> bool {
        matches!(self, Error::Hypothesis(_) | Error::Uncovered(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
