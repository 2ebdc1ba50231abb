use thiserror::Error;

/// Errors raised by state, measure and logic operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("non-finite amplitude encountered")]
    NonFinite,

    #[error("vector is not normalized (norm deviation {defect:.3e})")]
    NotNormalized { defect: f64 },

    #[error("zero vector where a nonzero vector is required")]
    ZeroVector,

    #[error("empty input where at least one vector is required")]
    EmptyInput,

    #[error("vectors are not orthonormal (defect {defect:.3e})")]
    NotOrthonormal { defect: f64 },

    #[error("basis does not span the space (got {got} vectors for dimension {dim})")]
    IncompleteBasis { got: usize, dim: usize },

    #[error("operator is not Hermitian (defect {defect:.3e})")]
    NotHermitian { defect: f64 },

    #[error("operator is not unitary (defect {defect:.3e})")]
    NotUnitary { defect: f64 },

    #[error("operator is not a projector (hermiticity defect {herm:.3e}, idempotency defect {idem:.3e})")]
    NotProjector { herm: f64, idem: f64 },

    #[error("operator is not positive semi-definite (min eigenvalue {min_eig:.3e})")]
    NotPositiveSemiDefinite { min_eig: f64 },

    #[error("measurement element spectrum exceeds 1 (max eigenvalue {max_eig})")]
    ElementSpectrumTooLarge { max_eig: f64 },

    #[error("operator is not a valid density matrix: {reason}")]
    InvalidDensityMatrix { reason: &'static str },

    #[error("invalid Gram matrix of overlaps: {reason}")]
    InvalidGram { reason: &'static str },

    #[error("partition labels must disjointly cover the index set")]
    InvalidPartition,

    #[error("probability has imaginary residue {residue:.3e}")]
    ImaginaryResidue { residue: f64 },

    #[error("value {value} lies outside [0, 1]")]
    OutOfUnitInterval { value: f64 },

    #[error("relative state undefined at index {index} (zero weight)")]
    UndefinedRelativeState { index: usize },

    #[error("tolerance {name} = {value} outside [0, 1e-3]")]
    InvalidTolerance { name: &'static str, value: f64 },

    #[error("internal invariant violated in {what} (defect {defect:.3e})")]
    InvariantViolation { what: &'static str, defect: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
