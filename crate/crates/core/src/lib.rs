//! Octonionic linear algebra: the octonion algebra, the module `O^n`,
//! weak associative frames, para-linear matrices and isometry
//! classification.

pub mod classify;
pub mod cli;
pub mod error;
pub mod frame;
pub mod linalg;
pub mod matrix;
pub mod octonion;
pub mod sample;
pub mod tolerance;
pub mod vector;
pub mod verify;

pub use classify::{ClassificationReport, Classifier, Iso2Decomposition, StiefelReport};
pub use error::{Error, Result};
pub use frame::Frame;
pub use matrix::{OMatrix, Side};
pub use octonion::{associator, Octonion};
pub use tolerance::Tolerances;
pub use vector::OVector;
