//! Error type shared by the whole crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("scalar family mismatch: {0}")]
    FamilyMismatch(String),

    #[error("entry outside declared scalar family: {0}")]
    FamilyViolation(String),

    #[error("unsupported parameter: {0}")]
    UnsupportedParameter(String),

    #[error("unknown basis element name: {0}")]
    UnknownElement(String),

    #[error("non-integer spectrum: eigenspaces of integer eigenvalues span {found} of {expected} dimensions")]
    NonIntegerSpectrum { found: usize, expected: usize },

    #[error("no strongly regular vector accepted after {0} candidates")]
    NoRegularVector(usize),

    #[error("eigenspace for eigenvalue {eigenvalue} has dimension {dim}, expected 2")]
    EigenspaceDimension { eigenvalue: i64, dim: usize },

    #[error("decomposition check failed: {0}")]
    DecompositionCheck(String),

    #[error("dual roots do not span the torus (rank {found} of {expected})")]
    SpanDefect { found: usize, expected: usize },

    #[error("not a root system: {0}")]
    AxiomViolation(String),

    #[error("integrality failure: {0}")]
    NonInteger(String),

    #[error("angle classification failed: p*q = {0} for non-parallel roots")]
    AngleOutOfRange(i64),

    #[error("Weyl group exceeds cap of {0} elements")]
    WeylCapExceeded(usize),

    #[error("base finding failed: {0}")]
    BaseFailure(String),

    #[error("simple-root pair at acute angle: {0}")]
    AcutePair(String),

    #[error("diagram construction failed: {0}")]
    DiagramFailure(String),

    #[error("complexification check failed: {0}")]
    ComplexCheck(String),

    #[error("serialization error: {0}")]
    Serialization(String),
}

pub type Result<T> = std::result::Result<T, Error>;
