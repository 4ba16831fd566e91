use thiserror::Error;

/// Failures raised while building or operating on states.
///
/// Argument errors describe malformed inputs (wrong shapes, bad indices,
/// out-of-range parameters). Domain errors describe inputs that are well
/// formed but violate a mathematical precondition.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("matrix is not Hermitian (max |M - M^dagger| = {deviation:.3e})")]
    NotHermitian { deviation: f64 },

    #[error("trace {trace} is not 1")]
    TraceNotUnit { trace: f64 },

    #[error("negative eigenvalue {value:.3e} below clamp window")]
    NegativeEigenvalue { value: f64 },

    #[error("state is not normalized (squared norm = {norm_sq})")]
    NotNormalized { norm_sq: f64 },

    #[error("qubit index {index} out of range for {num_qubits} qubits")]
    QubitOutOfRange { index: usize, num_qubits: usize },

    #[error("qubit index {0} repeated")]
    DuplicateQubit(usize),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("state has rank above 2 (third eigenvalue {third_eigenvalue:.3e})")]
    RankTooHigh { third_eigenvalue: f64 },

    #[error("eigensolver did not converge after {sweeps} sweeps")]
    NoConvergence { sweeps: usize },

    #[error("malformed state file: {0}")]
    Parse(String),
}

impl Error {
    /// True for errors caused by a malformed request rather than an invalid state.
    pub fn is_argument_error(&self) -> bool {
        matches!(
            self,
            Error::DimensionMismatch { .. }
                | Error::QubitOutOfRange { .. }
                | Error::DuplicateQubit(_)
                | Error::InvalidPartition(_)
                | Error::InvalidParameter(_)
                | Error::Parse(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
