//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("malformed face {0}: vertices must be strictly increasing")]
    MalformedFace(String),

    #[error("face {0} is not in the complex")]
    MissingFace(String),

    #[error("operation is undefined on the empty complex")]
    EmptyComplex,

    #[error("dimension {k} is out of range for a complex of dimension {dim}")]
    DimOutOfRange { k: i32, dim: i32 },

    #[error("complex is not pure of dimension {d}")]
    NotPure { d: i32 },

    #[error("weight of face {face} must be positive, got {value}")]
    NonPositiveWeight { face: String, value: String },

    #[error("no faces of dimension {k}")]
    NoFaces { k: i32 },

    #[error("expected a square matrix, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix asymmetry {max_dev:.3e} exceeds tolerance {tol:.3e}")]
    NotSymmetric { max_dev: f64, tol: f64 },

    #[error("eigensolver did not converge within {sweeps} sweeps")]
    NoConvergence { sweeps: usize },

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("invalid local system: {0}")]
    InvalidSystem(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("no faces were selected after {0} attempts")]
    GenerationFailed(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
