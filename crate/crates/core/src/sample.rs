//! Seeded generators for octonions, vectors, frames and matrices.
//!
//! Everything draws from a `ChaCha8Rng`, so a seed fully determines the
//! output on every platform.

use nalgebra::{Complex, DMatrix};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::matrix::OMatrix;
use crate::octonion::Octonion;
use crate::vector::OVector;

pub type SampleRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn normal(rng: &mut SampleRng) -> f64 {
    rng.sample(StandardNormal)
}

/// Octonion with i.i.d. standard normal coordinates.
pub fn octonion(rng: &mut SampleRng) -> Octonion {
    Octonion::new(std::array::from_fn(|_| normal(rng))).expect("finite sample")
}

/// Uniform point on `S^7`.
pub fn unit_octonion(rng: &mut SampleRng) -> Octonion {
    loop {
        let p = octonion(rng);
        if let Ok(u) = p.normalized(1e-6) {
            return u;
        }
    }
}

/// Uniform point on `S^6`, the unit imaginary octonions.
pub fn unit_imaginary(rng: &mut SampleRng) -> Octonion {
    loop {
        let p = octonion(rng).im();
        if let Ok(u) = p.normalized(1e-6) {
            return u;
        }
    }
}

pub fn vector(rng: &mut SampleRng, n: usize) -> OVector {
    OVector::new((0..n).map(|_| octonion(rng)).collect()).expect("n >= 1")
}

pub fn unit_vector(rng: &mut SampleRng, n: usize) -> OVector {
    let v = vector(rng, n);
    let norm = v.norm();
    &v * (1.0 / norm)
}

/// Unit vector with all-real entries.
pub fn real_unit_vector(rng: &mut SampleRng, n: usize) -> OVector {
    let xs: Vec<f64> = (0..n).map(|_| normal(rng)).collect();
    let norm = xs.iter().map(|x| x * x).sum::<f64>().sqrt();
    OVector::from_reals(&xs.iter().map(|x| x / norm).collect::<Vec<_>>()).expect("n >= 1")
}

/// Random real vector (all entries real, not normalised).
pub fn real_vector(rng: &mut SampleRng, n: usize) -> OVector {
    let xs: Vec<f64> = (0..n).map(|_| normal(rng)).collect();
    OVector::from_reals(&xs).expect("n >= 1")
}

/// `rows x cols` matrix with standard normal coordinates.
pub fn matrix(rng: &mut SampleRng, rows: usize, cols: usize) -> OMatrix {
    OMatrix::new((0..rows).map(|_| vector(rng, cols)).collect()).expect("non-empty")
}

/// Random real orthogonal matrix (Q factor of a Gaussian matrix).
pub fn real_orthogonal(rng: &mut SampleRng, n: usize) -> DMatrix<f64> {
    let g = DMatrix::from_fn(n, n, |_, _| normal(rng));
    g.qr().q()
}

/// Random complex unitary matrix (Q factor of a complex Gaussian matrix).
pub fn complex_unitary(rng: &mut SampleRng, n: usize) -> DMatrix<Complex<f64>> {
    let g = DMatrix::from_fn(n, n, |_, _| Complex::new(normal(rng), normal(rng)));
    g.qr().q()
}

/// Embeds a complex matrix into `C_J = R + RJ`.
pub fn embed_complex(m: &DMatrix<Complex<f64>>, j: Octonion) -> OMatrix {
    OMatrix::from_fn(m.nrows(), m.ncols(), |r, c| {
        let z = m[(r, c)];
        Octonion::complex(z.re, z.im, j)
    })
}

pub fn embed_real(m: &DMatrix<f64>) -> OMatrix {
    OMatrix::from_fn(m.nrows(), m.ncols(), |r, c| Octonion::real(m[(r, c)]))
}

/// Random element of `U_{C_J}(n)` for the given unit imaginary `J`.
pub fn cj_unitary(rng: &mut SampleRng, n: usize, j: Octonion) -> OMatrix {
    embed_complex(&complex_unitary(rng, n), j)
}

/// An `n x n` isometry: `p · (U Q) · q` with `U ∈ U_{C_J}(n)`, `Q` real
/// orthogonal and `p, q` unit octonions. Each step preserves the weak
/// associative orthonormal row basis.
pub fn isometry(rng: &mut SampleRng, n: usize) -> OMatrix {
    let j = unit_imaginary(rng);
    let u = cj_unitary(rng, n, j);
    let q_real = embed_real(&real_orthogonal(rng, n));
    let uq = u.matmul(&q_real).expect("square");
    let p = unit_octonion(rng);
    let q = unit_octonion(rng);
    uq.left_scale(p).right_scale(q)
}

/// The first `k` rows of a random isometry of `O^n`.
pub fn weak_associative_rows(rng: &mut SampleRng, k: usize, n: usize) -> Vec<OVector> {
    let t = isometry(rng, n);
    t.rows()[..k].to_vec()
}

/// Probe set for operator identities: every `e_i ε^j` followed by `extra`
/// seeded random vectors.
pub fn probe_vectors(n: usize, extra: usize, seed: u64) -> Vec<OVector> {
    let mut out = Vec::with_capacity(8 * n + extra);
    for i in 0..8 {
        for j in 0..n {
            out.push(OVector::unit(n, j).left_mul(Octonion::basis(i)));
        }
    }
    let mut r = rng(seed);
    out.extend((0..extra).map(|_| vector(&mut r, n)));
    out
}

/// Number of random probes added to the basis probes.
pub const RANDOM_PROBES: usize = 32;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeded_output_is_reproducible() {
        let a = vector(&mut rng(7), 3);
        let b = vector(&mut rng(7), 3);
        assert_eq!(a, b);
        assert_ne!(a, vector(&mut rng(8), 3));
    }

    #[test]
    fn units_are_units() {
        let mut r = rng(1);
        for _ in 0..20 {
            assert!((unit_octonion(&mut r).norm() - 1.0).abs() < 1e-12);
            let j = unit_imaginary(&mut r);
            assert!((j.norm() - 1.0).abs() < 1e-12);
            assert_eq!(j.re(), 0.0);
            assert!((unit_vector(&mut r, 3).norm() - 1.0).abs() < 1e-12);
            assert!(real_unit_vector(&mut r, 3).is_real(0.0));
        }
    }

    #[test]
    fn probe_vectors_cover_basis() {
        let p = probe_vectors(2, 4, 1);
        assert_eq!(p.len(), 20);
        assert_eq!(p[0], OVector::unit(2, 0));
        assert_eq!(p[3], OVector::unit(2, 1).left_mul(Octonion::basis(1)));
    }
}
