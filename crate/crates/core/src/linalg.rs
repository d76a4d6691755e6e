//! Rank and nullspace of dense real matrices via SVD with a threshold
//! relative to the largest singular value.

use nalgebra::{DMatrix, DVector};

/// Rank/nullspace split of a real matrix `M` acting on column vectors.
#[derive(Debug, Clone)]
pub struct SvdSplit {
    pub rank: usize,
    pub sigma_max: f64,
    /// Orthonormal basis of `{v : M v = 0}`.
    pub null: Vec<DVector<f64>>,
    /// Orthonormal basis of the orthogonal complement of the nullspace.
    pub row_space: Vec<DVector<f64>>,
}

/// Number of singular values above `rel_tol * σ_max`.
pub fn rank(m: &DMatrix<f64>, rel_tol: f64) -> usize {
    if m.is_empty() {
        return 0;
    }
    let sv = m.singular_values();
    let smax = sv.iter().cloned().fold(0.0, f64::max);
    if smax == 0.0 {
        return 0;
    }
    sv.iter().filter(|&&s| s > rel_tol * smax).count()
}

/// Full SVD split of `m`. Wide inputs are padded with zero rows so the
/// right singular vectors span the whole domain.
pub fn split(m: &DMatrix<f64>, rel_tol: f64) -> SvdSplit {
    let cols = m.ncols();
    let padded = if m.nrows() < cols {
        let mut p = DMatrix::zeros(cols, cols);
        p.view_mut((0, 0), (m.nrows(), cols)).copy_from(m);
        p
    } else {
        m.clone()
    };
    let svd = padded.svd(false, true);
    let v_t = svd.v_t.expect("requested V^T");
    let smax = svd.singular_values.iter().cloned().fold(0.0, f64::max);
    let mut null = Vec::new();
    let mut row_space = Vec::new();
    for (i, &s) in svd.singular_values.iter().enumerate() {
        let v = v_t.row(i).transpose();
        if smax > 0.0 && s > rel_tol * smax {
            row_space.push(v);
        } else {
            null.push(v);
        }
    }
    SvdSplit {
        rank: row_space.len(),
        sigma_max: smax,
        null,
        row_space,
    }
}

/// Largest entry of `|a - I|`.
pub fn identity_residual(a: &DMatrix<f64>) -> f64 {
    let mut r: f64 = 0.0;
    for i in 0..a.nrows() {
        for j in 0..a.ncols() {
            let target = if i == j { 1.0 } else { 0.0 };
            r = r.max((a[(i, j)] - target).abs());
        }
    }
    r
}
