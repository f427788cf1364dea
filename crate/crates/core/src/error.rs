use thiserror::Error;

/// Errors raised by nmrsim-core operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension {0} is not a power of two")]
    DimNotPowerOfTwo(usize),

    #[error("matrix is not Hermitian (max |a_jk - conj(a_kj)| = {0:e})")]
    NotHermitian(f64),

    #[error("trace deviates from 1 by {0:e}")]
    BadTrace(f64),

    #[error("matrix is not positive semidefinite (min eigenvalue {0:e})")]
    NotPsd(f64),

    #[error("matrix is not unitary (max |U^dag U - I| = {0:e})")]
    NotUnitary(f64),

    #[error("dimension mismatch: {left} vs {right}")]
    DimMismatch { left: usize, right: usize },

    #[error("expected dimension {expected}, found {found}")]
    WrongDim { expected: usize, found: usize },

    #[error("{0}")]
    Malformed(String),

    #[error("state vector is not normalized (norm {0})")]
    NotNormalized(f64),

    #[error("invalid weight {0}: weights must be positive and sum to 1")]
    InvalidWeight(f64),

    #[error("ensemble history has no members")]
    EmptyHistory,

    #[error("epsilon {0} is outside [0, 1]")]
    EpsOutOfRange(f64),

    #[error("reference state is not pure (tr(rho^2) = {0})")]
    Rho1NotPure(f64),

    #[error("index {index} out of range for length {len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("expected {expected} populations, found {found}")]
    WrongLength { expected: usize, found: usize },

    #[error("population count {0} is negative")]
    NegativeCount(f64),

    #[error("repetition count must be at least 1")]
    ZeroRepetitions,

    #[error("shot count must be at least 1")]
    ZeroShots,

    #[error("{0} qubits exceeds the supported maximum of {max}", max = crate::tomography::MAX_QUBITS)]
    TooManyQubits(usize),

    #[error("expectation set is missing label {0:?}")]
    IncompleteSet(String),

    #[error("invalid Pauli label {0:?}")]
    InvalidLabel(String),

    #[error("numerical failure: {0}")]
    NumericalFailure(String),

    #[error("{name}: {source}")]
    Validation {
        name: String,
        #[source]
        source: Box<Error>,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn in_matrix(self, name: &str) -> Error {
        Error::Validation {
            name: name.to_string(),
            source: Box::new(self),
        }
    }
}
