use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(&'static str),

    #[error("non-finite coordinate in input")]
    NonFinite,

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("dimension mismatch: {0}")]
    DimMismatch(String),

    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NotSquare { rows: usize, cols: usize },

    #[error("empty input: {0}")]
    Empty(&'static str),

    #[error("frame is not a weak associative orthonormal set (residual {0:e})")]
    NotWeakAssociative(f64),

    #[error("scalar is not a unit octonion (|p| = {0})")]
    NonUnitScalar(f64),

    #[error("vector is not a unit vector (|y| = {0})")]
    NotUnit(f64),

    #[error("matrix is not an isometry")]
    NotIsometry,

    #[error("entry ({row}, {col}) lies outside C_J (residual {residual:e})")]
    EntryOutsideCJ {
        row: usize,
        col: usize,
        residual: f64,
    },

    #[error("loop factors live on different pages (J mismatch {0:e})")]
    PageMismatch(f64),

    #[error("{k} vectors cannot form a weak associative set in O^{n}")]
    TooManyVectors { k: usize, n: usize },
}
