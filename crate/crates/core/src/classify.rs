//! Isometry and partial-isometry verdicts for octonionic matrices, the
//! `Iso_O(2)` decomposition into `S^7 x U_{C_J}(2)` classes with its loop
//! product, and dimensions of `O(Oy)` for the weak Stiefel spaces.

use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::frame::{is_weak_associative, Frame};
use crate::linalg;
use crate::matrix::{compose_real_check, op_second_associator_def, OMatrix};
use crate::octonion::Octonion;
use crate::sample;
use crate::tolerance::Tolerances;
use crate::vector::OVector;

/// Full verdict on a square octonionic matrix.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub n: usize,
    pub is_paralinear_residual: f64,
    #[serde(rename = "gram_TTstar_residual")]
    pub gram_t_tstar_residual: f64,
    #[serde(rename = "gram_TstarT_residual")]
    pub gram_tstar_t_residual: f64,
    pub rows_weak_assoc: bool,
    pub rows_residual: f64,
    pub columns_weak_assoc: bool,
    pub columns_residual: f64,
    pub real_composition_identity: bool,
    pub real_composition_residual: f64,
    pub norm_preserving: bool,
    pub norm_residual: f64,
    pub is_isometry: bool,
    pub kernel_dim: usize,
    #[serde(rename = "kernel_is_O_submodule")]
    pub kernel_is_o_submodule: bool,
    pub kernel_submodule_residual: f64,
    pub complement_norm_residual: f64,
    pub nonzero_rows_weak_assoc: bool,
    pub is_partial_isometry: bool,
}

impl ClassificationReport {
    /// The four isometry criteria agree.
    pub fn verdicts_agree(&self) -> bool {
        let v = self.rows_weak_assoc;
        v == self.columns_weak_assoc
            && v == self.real_composition_identity
            && v == self.norm_preserving
    }
}

/// Classification settings: tolerances plus the seed for random probes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Classifier {
    pub tol: Tolerances,
    pub seed: u64,
}

impl Default for Classifier {
    fn default() -> Self {
        Classifier {
            tol: Tolerances::DEFAULT,
            seed: 42,
        }
    }
}

fn columns_dagger(t: &OMatrix) -> Frame {
    Frame::new((0..t.ncols()).map(|j| t.column_dagger(j)).collect()).expect("non-empty")
}

fn vec_from(c: &DVector<f64>) -> OVector {
    OVector::from_coords(c.as_slice()).expect("8n coordinates")
}

impl Classifier {
    pub fn new(tol: Tolerances, seed: u64) -> Self {
        Classifier { tol, seed }
    }

    /// Isometry verdict with all cross-checks; identical to
    /// [`Classifier::classify`].
    pub fn is_isometry(&self, t: &OMatrix) -> Result<ClassificationReport> {
        self.classify(t)
    }

    /// Partial-isometry verdict; identical to [`Classifier::classify`].
    pub fn is_partial_isometry(&self, t: &OMatrix) -> Result<ClassificationReport> {
        self.classify(t)
    }

    pub fn classify(&self, t: &OMatrix) -> Result<ClassificationReport> {
        let n = t.square_dim()?;
        let tol = &self.tol;
        let probes = sample::probe_vectors(n, sample::RANDOM_PROBES, self.seed);

        let mut paralinear: f64 = 0.0;
        let mut norm_residual: f64 = 0.0;
        for x in &probes {
            for m in 1..8 {
                let a = op_second_associator_def(Octonion::basis(m), x, t)?;
                paralinear = paralinear.max(a.iter().map(|o| o.re().abs()).fold(0.0, f64::max));
            }
            let nx = x.norm();
            let ty = t.apply(x)?.norm();
            norm_residual = norm_residual.max((ty - nx).abs() / nx);
        }

        let dual = t.dual()?;
        let gram_t_tstar = t.matmul(&dual)?.identity_residual();
        let gram_tstar_t = dual.matmul(t)?.identity_residual();

        let rows = Frame::new(t.rows().to_vec())?;
        let rows_check = is_weak_associative(&rows, tol);
        let cols_check = is_weak_associative(&columns_dagger(t), tol);
        let comp = compose_real_check(t, tol.gram)?;

        // ker T = {y : y R = 0} = null(R^T)
        let r = t.real_matrix()?;
        let split = linalg::split(&r.0.transpose(), tol.rank);
        let scale = split.sigma_max.max(1.0);
        let kernel_dim = split.null.len();

        let mut sub_residual: f64 = 0.0;
        for k in &split.null {
            let kv = vec_from(k);
            for m in 1..8 {
                let moved = kv.left_mul(Octonion::basis(m));
                sub_residual = sub_residual.max(t.apply(&moved)?.norm() / scale);
            }
        }
        let kernel_is_submodule = sub_residual <= tol.gram;

        // isometry on the real complement of the kernel: Gram of the images
        // of an orthonormal complement basis must be the identity
        let complement = &split.row_space;
        let mut comp_residual: f64 = 0.0;
        if !complement.is_empty() {
            let c = DMatrix::from_columns(complement);
            let images = c.transpose() * &r.0;
            let gram = &images * images.transpose();
            comp_residual = linalg::identity_residual(&gram);
            let mut rng = sample::rng(self.seed ^ 0x9e37_79b9_7f4a_7c15);
            for _ in 0..sample::RANDOM_PROBES {
                let w = DVector::from_fn(complement.len(), |_, _| sample::octonion(&mut rng)[0]);
                let x = &c * &w;
                let tx = x.transpose() * &r.0;
                comp_residual = comp_residual.max((tx.norm() - x.norm()).abs() / x.norm());
            }
        }
        let complement_isometric = comp_residual <= tol.gram;

        let nonzero: Vec<OVector> = t
            .rows()
            .iter()
            .filter(|row| row.max_abs() > tol.eq)
            .cloned()
            .collect();
        let nonzero_rows_weak_assoc = match Frame::new(nonzero) {
            Ok(f) => is_weak_associative(&f, tol).holds,
            Err(_) => true,
        };

        Ok(ClassificationReport {
            n,
            is_paralinear_residual: paralinear,
            gram_t_tstar_residual: gram_t_tstar,
            gram_tstar_t_residual: gram_tstar_t,
            rows_weak_assoc: rows_check.holds,
            rows_residual: rows_check.residual,
            columns_weak_assoc: cols_check.holds,
            columns_residual: cols_check.residual,
            real_composition_identity: comp.both(),
            real_composition_residual: comp.residual_tstar_after_t.max(comp.residual_t_after_tstar),
            norm_preserving: norm_residual <= tol.gram,
            norm_residual,
            is_isometry: rows_check.holds,
            kernel_dim,
            kernel_is_o_submodule: kernel_is_submodule,
            kernel_submodule_residual: sub_residual,
            complement_norm_residual: comp_residual,
            nonzero_rows_weak_assoc,
            is_partial_isometry: kernel_is_submodule && complement_isometric,
        })
    }

    /// Splits an element of `Iso_O(2)` as `p · U` with `p ∈ S^7` and
    /// `U ∈ U_{C_J}(2)`.
    ///
    /// The scalar `p` is the phase of the first row's pivot entry (`a`, or
    /// `b` when `a` vanishes); `p = 1` when that pivot is real. `J` is the
    /// normalised imaginary part of the first entry of `U` (scan order
    /// a, b, c, d) that is not real, so its `J`-coefficient is positive.
    /// An all-real `U` lies on the spine and gets `J = e_1`.
    pub fn iso2_decompose(&self, t: &OMatrix) -> Result<Iso2Decomposition> {
        if t.nrows() != 2 || t.ncols() != 2 {
            return Err(Error::DimMismatch(format!(
                "Iso_O(2) decomposition needs a 2x2 matrix, got {}x{}",
                t.nrows(),
                t.ncols()
            )));
        }
        let tol = &self.tol;
        let rows = Frame::new(t.rows().to_vec())?;
        if !is_weak_associative(&rows, tol).holds {
            return Err(Error::NotIsometry);
        }

        let a = t.get(0, 0);
        let pivot = if a.norm() > tol.eq { a } else { t.get(0, 1) };
        let p = if pivot.im().norm() <= tol.eq {
            Octonion::ONE
        } else {
            pivot.normalized(tol.eq)?
        };
        let u = t.left_scale(p.conj());

        let entries = [u.get(0, 0), u.get(0, 1), u.get(1, 0), u.get(1, 1)];
        let (j, spine) = match entries.iter().find(|x| x.im().norm() > tol.eq) {
            Some(x) => (x.im().normalized(tol.eq)?, false),
            None => (Octonion::basis(1), true),
        };

        let mut cj_residual: f64 = 0.0;
        for (idx, x) in entries.iter().enumerate() {
            let im = x.im();
            let along = j * im.dot(&j);
            let off = (im - along).max_abs();
            if off > tol.gram {
                return Err(Error::EntryOutsideCJ {
                    row: idx / 2,
                    col: idx % 2,
                    residual: off,
                });
            }
            cj_residual = cj_residual.max(off);
        }

        let unitary = u.matmul(&u.dual()?)?.identity_residual();
        let recon = u.left_scale(p).max_abs_diff(t);
        Ok(Iso2Decomposition {
            p,
            j,
            u,
            spine,
            residual: recon.max(unitary).max(cj_residual),
        })
    }

    /// `[p, U][q, S] = [pq, U S]`, re-normalised through
    /// [`Classifier::iso2_decompose`]. Both factors must share a page
    /// (`J` equal up to sign) unless one of them lies on the spine.
    pub fn loop_mul(
        &self,
        a: &Iso2Decomposition,
        b: &Iso2Decomposition,
    ) -> Result<Iso2Decomposition> {
        if !a.spine && !b.spine {
            let gap = (a.j - b.j).max_abs().min((a.j + b.j).max_abs());
            if gap > self.tol.gram {
                return Err(Error::PageMismatch(gap));
            }
        }
        let pq = a.p * b.p;
        let us = a.u.matmul(&b.u)?;
        self.iso2_decompose(&us.left_scale(pq))
    }

    /// Real dimension of `O(Oy) = span{e_i(e_j y)}` for a unit vector `y`.
    pub fn stiefel_oo_y_dim(&self, y: &OVector) -> Result<StiefelReport> {
        let norm = y.norm();
        if (norm - 1.0).abs() > self.tol.eq {
            return Err(Error::NotUnit(norm));
        }
        let n = y.len();
        let mut m = DMatrix::zeros(64, 8 * n);
        for i in 0..8 {
            for j in 0..8 {
                let v = y.left_mul(Octonion::basis(j)).left_mul(Octonion::basis(i));
                for (col, c) in v.coords().into_iter().enumerate() {
                    m[(8 * i + j, col)] = c;
                }
            }
        }
        let dim = linalg::rank(&m, self.tol.rank);
        Ok(StiefelReport {
            y: y.clone(),
            dim_oo_y: dim,
            fiber_dim: 8 * n - dim,
        })
    }

    /// Membership in `V_k^w(O^n)`; more than `n` vectors is an error.
    pub fn is_stiefel_frame(&self, f: &Frame) -> Result<bool> {
        if f.len() > f.dim() {
            return Err(Error::TooManyVectors {
                k: f.len(),
                n: f.dim(),
            });
        }
        Ok(is_weak_associative(f, &self.tol).holds)
    }
}

/// A class `[p, U]` of `S^7 x U_{C_J}(2) / ~`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Iso2Decomposition {
    pub p: Octonion,
    #[serde(rename = "J")]
    pub j: Octonion,
    #[serde(rename = "U")]
    pub u: OMatrix,
    /// `U` is real, i.e. an element of `O(2)`.
    pub spine: bool,
    pub residual: f64,
}

impl Iso2Decomposition {
    /// The represented matrix `p · U`.
    pub fn matrix(&self) -> OMatrix {
        self.u.left_scale(self.p)
    }

    /// `(p, T) ~ (q, S)` iff `pT = qS`.
    pub fn same_class(&self, other: &Iso2Decomposition, tol: f64) -> bool {
        self.matrix().max_abs_diff(&other.matrix()) <= tol
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StiefelReport {
    pub y: OVector,
    #[serde(rename = "dim_OOy")]
    pub dim_oo_y: usize,
    pub fiber_dim: usize,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sample;

    fn e(i: usize) -> Octonion {
        Octonion::basis(i)
    }

    fn m(rows: &[&[Octonion]]) -> OMatrix {
        OMatrix::new(
            rows.iter()
                .map(|r| OVector::new(r.to_vec()).unwrap())
                .collect(),
        )
        .unwrap()
    }

    fn s() -> f64 {
        0.5f64.sqrt()
    }

    #[test]
    fn isometry_examples() {
        let c = Classifier::default();
        let iso = m(&[&[e(1), e(2)], &[e(2), e(1)]]).scale(s());
        let r = c.is_isometry(&iso).unwrap();
        assert!(r.is_isometry && r.verdicts_agree());
        assert_eq!(r.kernel_dim, 0);

        let b = m(&[&[Octonion::ONE, e(1)], &[-e(3), e(2)]]).scale(s());
        let r = c.is_isometry(&b).unwrap();
        assert!(!r.is_isometry && r.verdicts_agree());
        assert!(r.gram_t_tstar_residual < 1e-12 && r.gram_tstar_t_residual < 1e-12);
        assert!(r.kernel_dim >= 1);

        let r = c.is_isometry(&OMatrix::identity(3)).unwrap();
        assert!(r.is_isometry && r.is_partial_isometry);
        assert!(r.is_paralinear_residual < 1e-12);
        assert!(c.is_isometry(&OMatrix::zeros(2, 3)).is_err());
    }

    #[test]
    fn partial_isometry_examples() {
        let c = Classifier::default();
        let iso = sample::isometry(&mut sample::rng(3), 3);
        let r = c.is_partial_isometry(&iso).unwrap();
        assert!(r.is_partial_isometry && r.kernel_dim == 0);

        let z = Octonion::ZERO;
        let single = m(&[&[e(1) * s(), e(2) * s()], &[z, z]]);
        let r = c.is_partial_isometry(&single).unwrap();
        assert!(r.is_partial_isometry && r.kernel_is_o_submodule);
        assert_eq!(r.kernel_dim, 8);
        assert!(!r.is_isometry);
        assert!(r.nonzero_rows_weak_assoc);

        let r = c.is_partial_isometry(&OMatrix::zeros(2, 2)).unwrap();
        assert!(r.is_partial_isometry);
        assert_eq!(r.kernel_dim, 16);

        // rows (x, x)/√2: not normal form but still a partial isometry
        let x = sample::unit_vector(&mut sample::rng(4), 2);
        let dup = OMatrix::new(vec![&x * s(), &x * s()]).unwrap();
        let r = c.is_partial_isometry(&dup).unwrap();
        assert!(r.is_partial_isometry);
        assert_eq!(r.kernel_dim, 8);

        let half = m(&[&[e(1) * 0.5, z], &[z, z]]);
        let r = c.is_partial_isometry(&half).unwrap();
        assert!(!r.is_partial_isometry && r.kernel_is_o_submodule);
    }

    #[test]
    fn iso2_decompose_examples() {
        let c = Classifier::default();
        let q = sample::embed_real(&sample::real_orthogonal(&mut sample::rng(5), 2));
        let d = c.iso2_decompose(&q).unwrap();
        assert_eq!(d.p, Octonion::ONE);
        assert_eq!(d.j, e(1));
        assert!(d.spine);
        assert_eq!(d.u, q);

        let t = m(&[&[e(1), e(2)], &[e(2), e(1)]]).scale(s());
        let d = c.iso2_decompose(&t).unwrap();
        assert_eq!(d.p, e(1));
        assert_eq!(d.j, -e(3));
        let expected = m(&[&[Octonion::ONE, -e(3)], &[-e(3), Octonion::ONE]]).scale(s());
        assert!(d.u.max_abs_diff(&expected) < 1e-15);
        assert!(d.residual < 1e-9);

        // a = 0: the phase is taken from b
        let z = Octonion::ZERO;
        let anti = m(&[&[z, e(1)], &[e(2), z]]);
        let d = c.iso2_decompose(&anti).unwrap();
        assert!(d.matrix().max_abs_diff(&anti) < 1e-12);

        let b = m(&[&[Octonion::ONE, e(1)], &[-e(3), e(2)]]).scale(s());
        assert_eq!(c.iso2_decompose(&b), Err(Error::NotIsometry));
        assert!(matches!(
            c.iso2_decompose(&OMatrix::identity(3)),
            Err(Error::DimMismatch(_))
        ));
    }

    #[test]
    fn iso2_round_trip() {
        let c = Classifier::default();
        let mut r = sample::rng(6);
        for _ in 0..20 {
            let p = sample::unit_octonion(&mut r);
            let j = sample::unit_imaginary(&mut r);
            let u = sample::cj_unitary(&mut r, 2, j);
            let t = u.left_scale(p);
            let d = c.iso2_decompose(&t).unwrap();
            assert!(d.matrix().max_abs_diff(&t) < 1e-9);
            assert!(d.residual < 1e-9);
            assert!((d.j - j).max_abs().min((d.j + j).max_abs()) < 1e-9);
        }
    }

    #[test]
    fn loop_examples() {
        let c = Classifier::default();
        let id = c.iso2_decompose(&OMatrix::identity(2)).unwrap();
        let sq = c.loop_mul(&id, &id).unwrap();
        assert!(sq.same_class(&id, 1e-12));

        let mut r = sample::rng(7);
        let p = sample::unit_octonion(&mut r);
        let q = sample::embed_real(&sample::real_orthogonal(&mut r, 2));
        let a = c.iso2_decompose(&q.left_scale(p)).unwrap();
        let a_inv = c
            .iso2_decompose(&q.dual().unwrap().left_scale(p.conj()))
            .unwrap();
        assert!(c.loop_mul(&a, &a_inv).unwrap().same_class(&id, 1e-9));

        let x = c
            .iso2_decompose(
                &sample::embed_real(&sample::real_orthogonal(&mut r, 2))
                    .left_scale(sample::unit_octonion(&mut r)),
            )
            .unwrap();
        let lhs = c.loop_mul(&a, &c.loop_mul(&a, &x).unwrap()).unwrap();
        let rhs = c.loop_mul(&c.loop_mul(&a, &a).unwrap(), &x).unwrap();
        assert!(lhs.same_class(&rhs, 1e-9));

        let j1 = e(1);
        let j2 = e(2);
        let u1 = c
            .iso2_decompose(&sample::cj_unitary(&mut r, 2, j1))
            .unwrap();
        let u2 = c
            .iso2_decompose(&sample::cj_unitary(&mut r, 2, j2))
            .unwrap();
        if !u1.spine && !u2.spine {
            assert!(matches!(c.loop_mul(&u1, &u2), Err(Error::PageMismatch(_))));
        }
    }

    #[test]
    fn stiefel_examples() {
        let c = Classifier::default();
        let y = sample::real_unit_vector(&mut sample::rng(8), 3);
        assert_eq!(c.stiefel_oo_y_dim(&y).unwrap().dim_oo_y, 8);
        let unit = OVector::unit(4, 0);
        assert_eq!(c.stiefel_oo_y_dim(&unit).unwrap().fiber_dim, 24);
        let y = OVector::new(vec![Octonion::ONE * s(), e(1) * s(), Octonion::ZERO]).unwrap();
        assert!(c.stiefel_oo_y_dim(&y).unwrap().dim_oo_y >= 9);
        assert!(matches!(
            c.stiefel_oo_y_dim(&OVector::unit(2, 0).left_mul(Octonion::real(2.0))),
            Err(Error::NotUnit(_))
        ));
    }

    #[test]
    fn stiefel_frame_examples() {
        let c = Classifier::default();
        let y = sample::unit_vector(&mut sample::rng(9), 3);
        assert!(c.is_stiefel_frame(&Frame::new(vec![y]).unwrap()).unwrap());
        let iso = sample::isometry(&mut sample::rng(10), 3);
        assert!(c
            .is_stiefel_frame(&Frame::new(iso.rows().to_vec()).unwrap())
            .unwrap());
        let four = Frame::new(vec![
            OVector::new(vec![e(1) * s(), e(2) * s()]).unwrap(),
            OVector::new(vec![e(4) * s(), e(7) * s()]).unwrap(),
            OVector::new(vec![e(6) * s(), e(5) * s()]).unwrap(),
            OVector::new(vec![e(0) * s(), e(3) * s()]).unwrap(),
        ])
        .unwrap();
        assert_eq!(
            c.is_stiefel_frame(&four),
            Err(Error::TooManyVectors { k: 4, n: 2 })
        );
    }
}
