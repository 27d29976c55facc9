use thiserror::Error;

/// Failures while reading serialized data (scalars, matrices, JSON payloads).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("malformed scalar {0:?}")]
    Scalar(String),
    #[error("malformed input: {0}")]
    Shape(String),
    #[error("invalid JSON: {0}")]
    Json(String),
}

/// Every failure mode of the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("ambient dimension mismatch: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },
    #[error("matrix shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("matrix is not nilpotent")]
    NotNilpotent,
    #[error("matrix is not Hermitian")]
    NotHermitian,
    #[error("matrix is singular")]
    Singular,

    #[error("inadmissible Hodge numbers: {0}")]
    InadmissibleHodgeNumbers(String),
    #[error("filtration inconsistent with Hodge decomposition: {0}")]
    InconsistentFiltration(String),
    #[error("second Hodge-Riemann relation requires the first: {0}")]
    Hr1Prerequisite(String),

    #[error("Deligne splitting does not reconstruct W and F: {0}")]
    NotMhs(String),
    #[error("limiting mixed Hodge structure is not R-split")]
    NonRSplit,
    #[error("bracket leaves the diagonal subalgebra: {0}")]
    BracketEscape(String),

    #[error("unsupported root system {0}")]
    UnsupportedType(String),
    #[error("grading element takes non-integral values on roots")]
    NonIntegralGrading,
    #[error("weight {0} violates the half-integrality condition")]
    HalfIntegralityViolation(String),
    #[error("neutral element could not be normalized into the dominant chamber")]
    NotNormalizable,
    #[error("characteristic vector entry {0} outside {{0,1,2}}")]
    EntryOutOfRange(i64),
    #[error("inconsistent involution data: {0}")]
    InconsistentInvolutions(String),

    #[error("infeasible minimal type: {0}")]
    InfeasibleType(String),
    #[error("Hodge-Tate gate failed for h = {0:?}")]
    GateFailed(Vec<usize>),
    #[error("odd weight {0} with non-Hodge-Tate splitting cannot reach the closed orbit")]
    OddWeightNonHT(i64),
    #[error("parity constraint violated: {0}")]
    ParityViolation(String),

    #[error("unknown catalog entry {name:?}; available: {available}")]
    UnknownCatalogEntry { name: String, available: String },
}

pub type Result<T> = std::result::Result<T, Error>;
