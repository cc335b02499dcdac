use thiserror::Error;

/// Errors produced anywhere in the library.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("{particles} fermions do not fit into {modes} modes")]
    PauliOverflow { particles: usize, modes: usize },

    #[error("mode {mode} is out of range for a lattice of {modes} modes")]
    ModeOutOfRange { mode: usize, modes: usize },

    #[error("illegal occupation vector {occ:?}: {reason}")]
    IllegalOccupation { occ: Vec<u8>, reason: &'static str },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is not Hermitian (max deviation {deviation:e})")]
    NotHermitian { deviation: f64 },

    #[error("density matrix trace is {trace}, expected 1")]
    NotNormalized { trace: f64 },

    #[error("Fock dimension {dim} exceeds the dense oracle limit {limit}")]
    DimensionTooLarge { dim: usize, limit: usize },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("observable is not Hermitian")]
    NonHermitianObservable,

    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
