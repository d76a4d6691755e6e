//! Orthonormal, associative and weak associative systems of vectors in
//! `O^n`, the Parseval and Bessel identities, and unit-scalar actions.
//!
//! A system `{x_α}` is weak associative when it is orthonormal and
//! `A_p(x_α, x_β) = 0` for every pair and every octonion `p`. Because
//! `A_p` is real-linear in `p` and `A_1 = 0`, it is enough to test
//! `p = e_1, ..., e_7`.

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg;
use crate::matrix::Side;
use crate::octonion::Octonion;
use crate::tolerance::Tolerances;
use crate::vector::{check_len, inner, second_associator_vec, OVector};

/// An ordered list of `k ≥ 1` vectors of common length `n`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<OVector>", into = "Vec<OVector>")]
pub struct Frame {
    vectors: Vec<OVector>,
}

impl TryFrom<Vec<OVector>> for Frame {
    type Error = Error;

    fn try_from(vectors: Vec<OVector>) -> Result<Self> {
        Frame::new(vectors)
    }
}

impl From<Frame> for Vec<OVector> {
    fn from(f: Frame) -> Self {
        f.vectors
    }
}

impl Frame {
    pub fn new(vectors: Vec<OVector>) -> Result<Self> {
        let n = vectors.first().ok_or(Error::Empty("frame"))?.len();
        for v in &vectors {
            check_len(v.len(), n)?;
        }
        Ok(Frame { vectors })
    }

    /// `ε^1, ..., ε^n`.
    pub fn standard(n: usize) -> Self {
        Frame {
            vectors: (0..n).map(|j| OVector::unit(n, j)).collect(),
        }
    }

    pub fn vectors(&self) -> &[OVector] {
        &self.vectors
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Length `n` of the member vectors.
    pub fn dim(&self) -> usize {
        self.vectors[0].len()
    }

    /// `G_αβ = ⟨x_α, x_β⟩`.
    pub fn gram(&self) -> Vec<Vec<Octonion>> {
        self.vectors
            .iter()
            .map(|a| {
                self.vectors
                    .iter()
                    .map(|b| inner(a, b).expect("uniform length"))
                    .collect()
            })
            .collect()
    }
}

/// A boolean verdict together with the residual that decided it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub holds: bool,
    pub residual: f64,
}

fn gram_residual(f: &Frame) -> f64 {
    let mut worst: f64 = 0.0;
    for (a, row) in f.gram().iter().enumerate() {
        for (b, g) in row.iter().enumerate() {
            let target = if a == b {
                Octonion::ONE
            } else {
                Octonion::ZERO
            };
            worst = worst.max(g.max_abs_diff(&target));
        }
    }
    worst
}

fn assoc_residual(f: &Frame) -> f64 {
    let mut worst: f64 = 0.0;
    for a in f.vectors() {
        for b in f.vectors() {
            for m in 1..8 {
                let r = second_associator_vec(Octonion::basis(m), a, b).expect("uniform length");
                worst = worst.max(r.max_abs());
            }
        }
    }
    worst
}

/// First `(m, α, β)` with `A_{e_m}(x_α, x_β) ≠ 0`, scanning `m` outermost.
pub fn assoc_witness(f: &Frame, tol: f64) -> Option<(usize, usize, usize, Octonion)> {
    for m in 1..8 {
        for (a, xa) in f.vectors().iter().enumerate() {
            for (b, xb) in f.vectors().iter().enumerate() {
                let r = second_associator_vec(Octonion::basis(m), xa, xb).expect("uniform length");
                if r.max_abs() > tol {
                    return Some((m, a, b, r));
                }
            }
        }
    }
    None
}

/// Full Gram matrix against `δ_αβ`.
pub fn is_orthonormal(f: &Frame, tol: f64) -> Check {
    let residual = gram_residual(f);
    Check {
        holds: residual <= tol,
        residual,
    }
}

/// Orthonormality plus vanishing of `A_{e_m}(x_α, x_β)` for all `m`, `α`, `β`.
/// The residual is the larger of the two.
pub fn is_weak_associative(f: &Frame, tol: &Tolerances) -> Check {
    let g = gram_residual(f);
    let a = assoc_residual(f);
    Check {
        holds: g <= tol.gram && a <= tol.assoc,
        residual: g.max(a),
    }
}

/// Orthonormal with every entry real.
pub fn is_associative_frame(f: &Frame, tol: &Tolerances) -> bool {
    is_orthonormal(f, tol.gram).holds && f.vectors().iter().all(|v| v.is_real(tol.eq))
}

/// Rank of the real span of `{e_i x_α}`.
pub fn real_span_rank(f: &Frame, rel_tol: f64) -> usize {
    let n = f.dim();
    let rows = 8 * f.len();
    let mut m = DMatrix::zeros(rows, 8 * n);
    for (a, x) in f.vectors().iter().enumerate() {
        for i in 0..8 {
            let c = x.left_mul(Octonion::basis(i)).coords();
            for (col, val) in c.into_iter().enumerate() {
                m[(8 * a + i, col)] = val;
            }
        }
    }
    linalg::rank(&m, rel_tol)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FrameReport {
    pub orthonormal: bool,
    pub associative: bool,
    pub weak_associative: bool,
    pub max_gram_residual: f64,
    pub max_assoc_residual: f64,
    pub span_rank: usize,
    /// Weak associative and spanning: the frame is a basis of `O^n`.
    pub complete: bool,
}

pub fn frame_report(f: &Frame, tol: &Tolerances) -> FrameReport {
    let g = gram_residual(f);
    let a = assoc_residual(f);
    let orthonormal = g <= tol.gram;
    let weak_associative = orthonormal && a <= tol.assoc;
    let associative = orthonormal && f.vectors().iter().all(|v| v.is_real(tol.eq));
    let span_rank = real_span_rank(f, tol.rank);
    FrameReport {
        orthonormal,
        associative,
        weak_associative,
        max_gram_residual: g,
        max_assoc_residual: a,
        span_rank,
        complete: weak_associative && span_rank == 8 * f.dim(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Parseval {
    /// `Σ_α |⟨x, x_α⟩|²`
    pub coef_energy: f64,
    /// `‖x - Σ_α ⟨x, x_α⟩ x_α‖`
    pub reconstruction_residual: f64,
}

fn expansion(f: &Frame, x: &OVector) -> Result<(f64, OVector)> {
    check_len(x.len(), f.dim())?;
    let mut energy = 0.0;
    let mut recon = OVector::zeros(x.len());
    for xa in f.vectors() {
        let c = inner(x, xa)?;
        energy += c.norm_sqr();
        recon = &recon + &xa.left_mul(c);
    }
    Ok((energy, recon))
}

pub fn parseval_check(f: &Frame, x: &OVector) -> Result<Parseval> {
    let (coef_energy, recon) = expansion(f, x)?;
    Ok(Parseval {
        coef_energy,
        reconstruction_residual: (x - &recon).norm(),
    })
}

/// Scans `x = e_i ε^j` (`i = 0..7` outer, `j = 1..n` inner) and returns the
/// first vector for which Parseval fails at tolerance `tol`.
pub fn parseval_witness(f: &Frame, tol: f64) -> Option<(OVector, Parseval)> {
    let n = f.dim();
    for i in 0..8 {
        for j in 0..n {
            let x = OVector::unit(n, j).left_mul(Octonion::basis(i));
            let p = parseval_check(f, &x).expect("matching length");
            if (p.coef_energy - x.norm_sqr()).abs() > tol || p.reconstruction_residual > tol {
                return Some((x, p));
            }
        }
    }
    None
}

/// Entrywise `p x_α` (left) or `x_α p` (right) for a unit octonion `p`.
pub fn frame_scalar_action(p: Octonion, f: &Frame, side: Side, tol: f64) -> Result<Frame> {
    let norm = p.norm();
    if (norm - 1.0).abs() > tol {
        return Err(Error::NonUnitScalar(norm));
    }
    let vectors = f
        .vectors()
        .iter()
        .map(|x| match side {
            Side::Left => x.left_mul(p),
            Side::Right => x.right_mul(p),
        })
        .collect();
    Frame::new(vectors)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BesselTerms {
    pub norm_sqr: f64,
    pub coef_energy: f64,
    /// `‖x - Σ ⟨x, ξ_i⟩ ξ_i‖²`
    pub tail: f64,
    /// `|‖x‖² - coef_energy - tail|`
    pub residual: f64,
}

/// Both sides of `‖x‖² = Σ|⟨x,ξ_i⟩|² + ‖x - Σ⟨x,ξ_i⟩ξ_i‖²` for a weak
/// associative orthonormal set.
pub fn bessel_terms(f: &Frame, x: &OVector, tol: &Tolerances) -> Result<BesselTerms> {
    let wa = is_weak_associative(f, tol);
    if !wa.holds {
        return Err(Error::NotWeakAssociative(wa.residual));
    }
    let (coef_energy, recon) = expansion(f, x)?;
    let tail = (x - &recon).norm_sqr();
    let norm_sqr = x.norm_sqr();
    Ok(BesselTerms {
        norm_sqr,
        coef_energy,
        tail,
        residual: (norm_sqr - coef_energy - tail).abs(),
    })
}

pub fn bessel_residual(f: &Frame, x: &OVector, tol: &Tolerances) -> Result<f64> {
    Ok(bessel_terms(f, x, tol)?.residual)
}
