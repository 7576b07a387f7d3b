use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch in {op}: {lhs:?} vs {rhs:?}")]
    DimensionMismatch {
        op: &'static str,
        lhs: (usize, usize),
        rhs: (usize, usize),
    },

    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("invalid size: {0}")]
    InvalidSize(String),

    #[error("qubit {qubit} out of range for a {qubits}-qubit circuit")]
    QubitOutOfRange { qubit: usize, qubits: usize },

    #[error("invalid control set: {0}")]
    InvalidControls(String),

    #[error("gate payload is not unitary (deviation {0:e})")]
    NotUnitary(f64),

    #[error("qubit count mismatch: circuit has {circuit}, state has {state}")]
    QubitMismatch { circuit: usize, state: usize },

    #[error("refusing to extract a {qubits}-qubit unitary (limit is {limit})")]
    GuardExceeded { qubits: usize, limit: usize },

    #[error("input length {len} is not valid for {kind}; valid lengths are {valid}")]
    InvalidLength {
        kind: String,
        len: usize,
        valid: String,
    },

    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
}
