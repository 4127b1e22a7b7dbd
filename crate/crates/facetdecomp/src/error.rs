use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex labels must be positive integers")]
    NonPositiveLabel,
    #[error("label {label} exceeds declared vertex count {n}")]
    LabelTooLarge { label: usize, n: usize },
    #[error("at most {max} vertices supported, got {got}")]
    TooManyVertices { got: usize, max: usize },
    #[error("operation undefined for the void complex")]
    VoidComplex,
    #[error("{0} is not a face of the complex")]
    NotAFace(String),
    #[error("vertex {v} out of range 1..={n}")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("vertex {0} is not covered by any facet")]
    UncoveredVertex(usize),
    #[error("complex is not pure")]
    NotPure,
    #[error("dimension {0} out of range")]
    DimOutOfRange(i64),
    #[error("invalid parameters: {0}")]
    BadParameters(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("ideal generators do not all have the same degree")]
    MixedDegrees,
    #[error("arithmetic overflow in binomial coefficient")]
    Overflow,
    #[error("enumeration too large for n = {0} vertices")]
    EnumerationTooLarge(usize),
    #[error("malformed certificate: {0}")]
    BadCertificate(String),
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
}
