use serde::{Deserialize, Serialize};

/// Numerical thresholds shared by every check in the crate.
///
/// `eq` is an absolute per-coordinate bound for octonion comparisons and
/// zero tests. `gram` and `assoc` bound the Gram-matrix and
/// second-associator residuals of frame checks. `rank` is relative to the
/// largest singular value.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    pub eq: f64,
    pub gram: f64,
    pub assoc: f64,
    pub rank: f64,
}

impl Tolerances {
    pub const DEFAULT: Tolerances = Tolerances {
        eq: 1e-9,
        gram: 1e-8,
        assoc: 1e-8,
        rank: 1e-8,
    };
}

impl Default for Tolerances {
    fn default() -> Self {
        Self::DEFAULT
    }
}
