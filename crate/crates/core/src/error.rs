use thiserror::Error;

/// Errors produced by code construction, system construction, and the
/// enumeration-backed operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("alphabet size must be at least {min}, got {got}")]
    AlphabetTooSmall { got: u32, min: u32 },

    #[error("digit {digit} out of range for alphabet of size {size}")]
    DigitOutOfRange { digit: u32, size: u32 },

    #[error("malformed code: {0}")]
    MalformedCode(String),

    #[error("alphabet mismatch: expected size {expected}, got {got}")]
    AlphabetMismatch { expected: u32, got: u32 },

    #[error("empty prefix where a nonempty cylinder base is required")]
    EmptyPrefix,

    #[error("invalid weights: {0}")]
    InvalidWeights(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("value {0} lies outside the unit interval")]
    ValueOutOfRange(String),

    #[error("enumeration of {count} bases exceeds the guard of {guard}")]
    EnumerationGuard { count: u64, guard: u64 },

    #[error("no rank up to {bound} yields {what}")]
    NotFound { what: String, bound: u32 },
}

pub type Result<T> = std::result::Result<T, Error>;
