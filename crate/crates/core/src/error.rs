//! Error type shared by the whole library.

use thiserror::Error;

/// Errors reported by library operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A precondition on an argument was violated.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// Möbius inversion hit a non-exact division: the input series is not
    /// the Euler transform of an integer series.
    #[error("not an Euler transform of an integer series: non-exact division at degree {degree}")]
    NotAnEulerTransform { degree: usize },

    /// An operation restricted to purely even alphabets received an odd generator.
    #[error("unsupported parity: generator `{label}` is odd, only purely even alphabets are supported here")]
    UnsupportedParity { label: String },

    /// A bicharacter axiom failed; `witness` names the offending elements.
    #[error("invalid bicharacter: {reason} (witness: {witness})")]
    InvalidBicharacter { reason: String, witness: String },

    /// Restricted enveloping series requested for a small characteristic
    /// without the trivial-grading override.
    #[error("invalid characteristic: p = {p} requires p >= 5 for a nontrivial grading (pass the override for trivially graded algebras)")]
    InvalidCharacteristic { p: u64 },

    /// A brute-force computation would exceed the configured size cap.
    #[error("computation too large: {detail} exceeds cap {cap}")]
    TooLarge { detail: String, cap: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
