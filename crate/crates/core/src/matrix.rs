//! Left para-linear operators on `O^n` as octonionic matrices acting on
//! row vectors from the right: `T(y) = y T`, `(yT)_j = Σ_i y_i t_ij`.
//!
//! The octonionic matrix product, the dual (conjugate transpose), the
//! regular composition and the `⊙` scalar actions all live here, together
//! with the `8n x 8n` real matrix of the operator used for kernels and for
//! checking ordinary composition.

use std::fmt;

use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg;
use crate::octonion::{associator, Octonion};
use crate::vector::{check_len, OVector};

/// A `k x n` octonionic matrix stored by rows.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<OVector>", into = "Vec<OVector>")]
pub struct OMatrix {
    rows: Vec<OVector>,
}

impl TryFrom<Vec<OVector>> for OMatrix {
    type Error = Error;

    fn try_from(rows: Vec<OVector>) -> Result<Self> {
        OMatrix::new(rows)
    }
}

impl From<OMatrix> for Vec<OVector> {
    fn from(m: OMatrix) -> Self {
        m.rows
    }
}

impl OMatrix {
    pub fn new(rows: Vec<OVector>) -> Result<Self> {
        let first = rows.first().ok_or(Error::Empty("matrix"))?.len();
        for r in &rows {
            if r.len() != first {
                return Err(Error::DimMismatch(format!(
                    "ragged matrix: row lengths {} and {}",
                    first,
                    r.len()
                )));
            }
        }
        Ok(OMatrix { rows })
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> Octonion) -> Self {
        let rows = (0..rows)
            .map(|i| OVector::new((0..cols).map(|j| f(i, j)).collect()).expect("cols >= 1"))
            .collect();
        OMatrix::new(rows).expect("rows >= 1")
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| {
            if i == j {
                Octonion::ONE
            } else {
                Octonion::ZERO
            }
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| Octonion::ZERO)
    }

    pub fn diagonal(entries: &[Octonion]) -> Self {
        let n = entries.len();
        Self::from_fn(
            n,
            n,
            |i, j| if i == j { entries[i] } else { Octonion::ZERO },
        )
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.rows[0].len()
    }

    pub fn is_square(&self) -> bool {
        self.nrows() == self.ncols()
    }

    pub fn get(&self, i: usize, j: usize) -> Octonion {
        self.rows[i][j]
    }

    pub fn rows(&self) -> &[OVector] {
        &self.rows
    }

    /// Conjugate transpose of column `j`: `x_j† = (conj t_1j, ..., conj t_kj)`.
    pub fn column_dagger(&self, j: usize) -> OVector {
        OVector::new(self.rows.iter().map(|r| r[j].conj()).collect()).expect("rows >= 1")
    }

    pub(crate) fn square_dim(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.nrows())
        } else {
            Err(Error::NotSquare {
                rows: self.nrows(),
                cols: self.ncols(),
            })
        }
    }

    /// Entrywise `p t_ij`.
    pub fn left_scale(&self, p: Octonion) -> OMatrix {
        OMatrix {
            rows: self.rows.iter().map(|r| r.left_mul(p)).collect(),
        }
    }

    /// Entrywise `t_ij p`.
    pub fn right_scale(&self, p: Octonion) -> OMatrix {
        OMatrix {
            rows: self.rows.iter().map(|r| r.right_mul(p)).collect(),
        }
    }

    pub fn scale(&self, r: f64) -> OMatrix {
        OMatrix {
            rows: self.rows.iter().map(|row| row * r).collect(),
        }
    }

    pub fn max_abs_diff(&self, other: &OMatrix) -> f64 {
        self.rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| a.max_abs_diff(b))
            .fold(0.0, f64::max)
    }

    /// `T(y) = y T`.
    pub fn apply(&self, y: &OVector) -> Result<OVector> {
        check_len(y.len(), self.nrows())?;
        let out = (0..self.ncols())
            .map(|j| y.iter().zip(&self.rows).map(|(&yi, row)| yi * row[j]).sum())
            .collect();
        OVector::new(out)
    }

    /// Conjugate transpose; the matrix of the real-adjoint operator `T*`.
    pub fn dual(&self) -> Result<OMatrix> {
        let n = self.square_dim()?;
        Ok(OMatrix::from_fn(n, n, |i, j| self.get(j, i).conj()))
    }

    /// Octonionic matrix product `(AB)_ij = Σ_k a_ik b_kj`.
    pub fn matmul(&self, other: &OMatrix) -> Result<OMatrix> {
        if self.ncols() != other.nrows() {
            return Err(Error::DimMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.nrows(),
                self.ncols(),
                other.nrows(),
                other.ncols()
            )));
        }
        Ok(OMatrix::from_fn(self.nrows(), other.ncols(), |i, j| {
            (0..self.ncols())
                .map(|k| self.get(i, k) * other.get(k, j))
                .sum()
        }))
    }

    /// Largest coordinate deviation from the identity matrix.
    pub fn identity_residual(&self) -> f64 {
        self.max_abs_diff(&OMatrix::identity(self.nrows()))
    }

    /// The real matrix `R` with `coords(T(y)) = coords(y) R`.
    pub fn real_matrix(&self) -> Result<RealMatrix> {
        let n = self.square_dim()?;
        let mut m = DMatrix::zeros(8 * n, 8 * n);
        for i in 0..n {
            for a in 0..8 {
                let e = Octonion::basis(a);
                for j in 0..n {
                    let prod = e * self.get(i, j);
                    for b in 0..8 {
                        m[(8 * i + a, 8 * j + b)] = prod[b];
                    }
                }
            }
        }
        Ok(RealMatrix(m))
    }

    /// Orthonormal real basis of `ker T`, each vector given by its `8n`
    /// coordinates.
    pub fn kernel(&self, rel_tol: f64) -> Result<Vec<Vec<f64>>> {
        let r = self.real_matrix()?;
        let split = linalg::split(&r.0.transpose(), rel_tol);
        Ok(split
            .null
            .iter()
            .map(|v| v.iter().cloned().collect())
            .collect())
    }

    /// Real rank of the operator.
    pub fn rank(&self, rel_tol: f64) -> Result<usize> {
        Ok(linalg::rank(&self.real_matrix()?.0, rel_tol))
    }
}

impl fmt::Display for OMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{r}")?;
        }
        Ok(())
    }
}

/// Dense `8n x 8n` real realization of a para-linear operator.
#[derive(Debug, Clone, PartialEq)]
pub struct RealMatrix(pub DMatrix<f64>);

impl RealMatrix {
    pub fn dim(&self) -> usize {
        self.0.nrows()
    }

    /// `coords(y) ↦ coords(y) R`.
    pub fn apply(&self, y: &OVector) -> Result<OVector> {
        check_len(8 * y.len(), self.dim())?;
        let row = DVector::from_vec(y.coords()).transpose() * &self.0;
        OVector::from_coords(row.as_slice())
    }

    /// Matrix of the composite map "first `self`, then `other`".
    pub fn then(&self, other: &RealMatrix) -> RealMatrix {
        RealMatrix(&self.0 * &other.0)
    }

    pub fn identity_residual(&self) -> f64 {
        linalg::identity_residual(&self.0)
    }
}

/// Both evaluations of `A_p(x, f_T) = T(px) - pT(x)`.
#[derive(Debug, Clone, PartialEq)]
pub struct OpSecondAssociator {
    /// `(Σ_i [p, x_i, t_i1], ..., Σ_i [p, x_i, t_in])`
    pub closed_form: OVector,
    /// `apply(T, p x) - p apply(T, x)`
    pub definitional: OVector,
}

impl OpSecondAssociator {
    pub fn agreement(&self) -> f64 {
        self.closed_form.max_abs_diff(&self.definitional)
    }
}

/// The definitional second associator `T(px) - p T(x)`.
pub fn op_second_associator_def(p: Octonion, x: &OVector, t: &OMatrix) -> Result<OVector> {
    Ok(&t.apply(&x.left_mul(p))? - &t.apply(x)?.left_mul(p))
}

pub fn op_second_associator(p: Octonion, x: &OVector, t: &OMatrix) -> Result<OpSecondAssociator> {
    let definitional = op_second_associator_def(p, x, t)?;
    let closed = (0..t.ncols())
        .map(|j| {
            x.iter()
                .zip(t.rows())
                .map(|(&xi, row)| associator(p, xi, row[j]))
                .sum()
        })
        .collect();
    Ok(OpSecondAssociator {
        closed_form: OVector::new(closed)?,
        definitional,
    })
}

fn check_same_square(f: &OMatrix, g: &OMatrix) -> Result<usize> {
    let n = f.square_dim()?;
    let m = g.square_dim()?;
    if n != m {
        return Err(Error::DimMismatch(format!("operators on O^{n} and O^{m}")));
    }
    Ok(n)
}

/// Correction term `[f, g, x] = -Σ_{i=0}^{7} e_i Re(f(A_{e_i}(x, g)))`.
pub fn bracket_fgx(f: &OMatrix, g: &OMatrix, x: &OVector) -> Result<OVector> {
    let n = check_same_square(f, g)?;
    check_len(x.len(), n)?;
    let mut acc = OVector::zeros(n);
    // A_{e_0} vanishes identically
    for i in 1..8 {
        let e = Octonion::basis(i);
        let a = op_second_associator_def(e, x, g)?;
        let re = f.apply(&a)?.real_part();
        acc = &acc - &re.left_mul(e);
    }
    Ok(acc)
}

/// `(f ⊚ g)(x) = f(g(x)) + [f, g, x]`, evaluated from the definition.
pub fn regular_compose_eval(f: &OMatrix, g: &OMatrix, x: &OVector) -> Result<OVector> {
    let fg = f.apply(&g.apply(x)?)?;
    Ok(&fg + &bracket_fgx(f, g, x)?)
}

/// Matrix of `f_S ⊚ f_T`, which is the opposite product `T S`.
pub fn regular_compose(s: &OMatrix, t: &OMatrix) -> Result<OMatrix> {
    check_same_square(s, t)?;
    t.matmul(s)
}

/// Largest deviation between the definitional regular composition and
/// `apply(regular_compose(s, t), x)` over the given probes.
pub fn regular_compose_residual(s: &OMatrix, t: &OMatrix, probes: &[OVector]) -> Result<f64> {
    let k = regular_compose(s, t)?;
    let mut worst: f64 = 0.0;
    for x in probes {
        let lhs = regular_compose_eval(s, t, x)?;
        worst = worst.max(lhs.max_abs_diff(&k.apply(x)?));
    }
    Ok(worst)
}

/// Side of a `⊙` scalar action.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

/// `T ⊙ p` (right) or `p ⊙ T` (left) as an evaluation procedure.
#[derive(Debug, Clone, Copy)]
pub struct ScaledOperator<'a> {
    pub op: &'a OMatrix,
    pub p: Octonion,
    pub side: Side,
}

pub fn scalar_action_right(t: &OMatrix, p: Octonion) -> ScaledOperator<'_> {
    ScaledOperator {
        op: t,
        p,
        side: Side::Right,
    }
}

pub fn scalar_action_left(p: Octonion, t: &OMatrix) -> ScaledOperator<'_> {
    ScaledOperator {
        op: t,
        p,
        side: Side::Left,
    }
}

impl ScaledOperator<'_> {
    /// `(T⊙p)(x) = T(x)p - A_p(x,T)`, `(p⊙T)(x) = T(xp) + A_p(x,T)`.
    pub fn eval(&self, x: &OVector) -> Result<OVector> {
        let a = op_second_associator_def(self.p, x, self.op)?;
        match self.side {
            Side::Right => Ok(&self.op.apply(x)?.right_mul(self.p) - &a),
            Side::Left => Ok(&self.op.apply(&x.right_mul(self.p))? + &a),
        }
    }

    /// Moufang forms `(T⊙p)(x) = p T(p⁻¹x) p` and `(p⊙T)(x) = p⁻¹ T(pxp)`.
    pub fn eval_moufang(&self, x: &OVector, tol: f64) -> Result<OVector> {
        let p = self.p;
        let p_inv = p.inv_with(tol)?;
        match self.side {
            Side::Right => {
                let inner = self.op.apply(&x.left_mul(p_inv))?;
                Ok(inner.map(|v| (p * v) * p))
            }
            Side::Left => {
                let pxp = x.map(|v| (p * v) * p);
                Ok(self.op.apply(&pxp)?.left_mul(p_inv))
            }
        }
    }

    /// The matrix of the scaled operator: its rows are the images of the
    /// real basis, `x^i p` for `T⊙p` and `p x^i` for `p⊙T`.
    pub fn matrix(&self) -> OMatrix {
        match self.side {
            Side::Right => self.op.right_scale(self.p),
            Side::Left => self.op.left_scale(self.p),
        }
    }
}

/// Outcome of testing `T*∘T = Id` and `T∘T* = Id` on the real realization.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CompositionCheck {
    pub tstar_after_t: bool,
    pub t_after_tstar: bool,
    pub residual_tstar_after_t: f64,
    pub residual_t_after_tstar: f64,
}

impl CompositionCheck {
    pub fn both(&self) -> bool {
        self.tstar_after_t && self.t_after_tstar
    }
}

/// Ordinary composition of the induced real maps, not the octonionic
/// matrix product.
pub fn compose_real_check(t: &OMatrix, tol: f64) -> Result<CompositionCheck> {
    let r = t.real_matrix()?;
    let rs = t.dual()?.real_matrix()?;
    let a = r.then(&rs).identity_residual();
    let b = rs.then(&r).identity_residual();
    Ok(CompositionCheck {
        tstar_after_t: a <= tol,
        t_after_tstar: b <= tol,
        residual_tstar_after_t: a,
        residual_t_after_tstar: b,
    })
}
