//! Row vectors in `O^n`, the octonionic inner product and the second
//! associator `A_p(u, v) = ⟨pu, v⟩ - p⟨u, v⟩`.

use std::fmt;
use std::ops::{Add, Index, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::octonion::{associator, Octonion};

/// A row vector `(x_1, ..., x_n)` with `n ≥ 1`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Octonion>", into = "Vec<Octonion>")]
pub struct OVector(Vec<Octonion>);

impl TryFrom<Vec<Octonion>> for OVector {
    type Error = Error;

    fn try_from(entries: Vec<Octonion>) -> Result<Self> {
        OVector::new(entries)
    }
}

impl From<OVector> for Vec<Octonion> {
    fn from(v: OVector) -> Self {
        v.0
    }
}

impl Index<usize> for OVector {
    type Output = Octonion;

    fn index(&self, i: usize) -> &Octonion {
        &self.0[i]
    }
}

pub(crate) fn check_len(a: usize, b: usize) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::LengthMismatch { left: a, right: b })
    }
}

impl OVector {
    pub fn new(entries: Vec<Octonion>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::Empty("vector"));
        }
        Ok(OVector(entries))
    }

    pub fn zeros(n: usize) -> Self {
        assert!(n >= 1, "O^n requires n >= 1");
        OVector(vec![Octonion::ZERO; n])
    }

    /// The standard associative basis vector `ε^j` (zero-based `j`).
    pub fn unit(n: usize, j: usize) -> Self {
        let mut v = Self::zeros(n);
        v.0[j] = Octonion::ONE;
        v
    }

    /// A real vector embedded in `O^n`.
    pub fn from_reals(xs: &[f64]) -> Result<Self> {
        OVector::new(xs.iter().map(|&r| Octonion::real(r)).collect())
    }

    /// Inverse of [`OVector::coords`]; `coords.len()` must be a positive
    /// multiple of 8.
    pub fn from_coords(coords: &[f64]) -> Result<Self> {
        if coords.is_empty() || !coords.len().is_multiple_of(8) {
            return Err(Error::DimMismatch(format!(
                "{} real coordinates do not describe a vector in O^n",
                coords.len()
            )));
        }
        let entries = coords
            .chunks_exact(8)
            .map(|c| Octonion::new(c.try_into().expect("chunk of 8")))
            .collect::<Result<Vec<_>>>()?;
        OVector::new(entries)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn entries(&self) -> &[Octonion] {
        &self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Octonion> {
        self.0.iter()
    }

    /// The `8n` real coordinates, entry by entry.
    pub fn coords(&self) -> Vec<f64> {
        self.0.iter().flat_map(|o| *o.coords()).collect()
    }

    pub fn norm_sqr(&self) -> f64 {
        self.0.iter().map(Octonion::norm_sqr).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn is_real(&self, tol: f64) -> bool {
        self.0.iter().all(|o| o.is_real(tol))
    }

    /// Largest coordinate magnitude.
    pub fn max_abs(&self) -> f64 {
        self.0.iter().map(Octonion::max_abs).fold(0.0, f64::max)
    }

    pub fn max_abs_diff(&self, other: &OVector) -> f64 {
        self.0
            .iter()
            .zip(other.0.iter())
            .map(|(a, b)| a.max_abs_diff(b))
            .fold(0.0, f64::max)
    }

    /// Entrywise `p x_i`.
    pub fn left_mul(&self, p: Octonion) -> OVector {
        OVector(self.0.iter().map(|&x| p * x).collect())
    }

    /// Entrywise `x_i p`.
    pub fn right_mul(&self, p: Octonion) -> OVector {
        OVector(self.0.iter().map(|&x| x * p).collect())
    }

    /// Entrywise real projection, `Re x = (re x_1, ..., re x_n)`.
    pub fn real_part(&self) -> OVector {
        OVector(self.0.iter().map(|x| Octonion::real(x.re())).collect())
    }

    pub(crate) fn map(&self, f: impl Fn(Octonion) -> Octonion) -> OVector {
        OVector(self.0.iter().map(|&x| f(x)).collect())
    }
}

impl Add for &OVector {
    type Output = OVector;

    fn add(self, rhs: &OVector) -> OVector {
        debug_assert_eq!(self.len(), rhs.len());
        OVector(self.0.iter().zip(&rhs.0).map(|(&a, &b)| a + b).collect())
    }
}

impl Sub for &OVector {
    type Output = OVector;

    fn sub(self, rhs: &OVector) -> OVector {
        debug_assert_eq!(self.len(), rhs.len());
        OVector(self.0.iter().zip(&rhs.0).map(|(&a, &b)| a - b).collect())
    }
}

impl Neg for &OVector {
    type Output = OVector;

    fn neg(self) -> OVector {
        self.map(|x| -x)
    }
}

impl Mul<f64> for &OVector {
    type Output = OVector;

    fn mul(self, rhs: f64) -> OVector {
        self.map(|x| x * rhs)
    }
}

impl fmt::Display for OVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// `⟨x, y⟩ = Σ x_i ȳ_i`.
pub fn inner(x: &OVector, y: &OVector) -> Result<Octonion> {
    check_len(x.len(), y.len())?;
    Ok(x.iter().zip(y.iter()).map(|(&a, b)| a * b.conj()).sum())
}

/// `⟨x, y⟩_R = Re⟨x, y⟩`, the Euclidean dot product of the `8n` coordinates.
pub fn inner_real(x: &OVector, y: &OVector) -> Result<f64> {
    check_len(x.len(), y.len())?;
    Ok(x.iter().zip(y.iter()).map(|(a, b)| a.dot(b)).sum())
}

/// The second associator `A_p(u, v) = ⟨pu, v⟩ - p⟨u, v⟩`.
pub fn second_associator_vec(p: Octonion, u: &OVector, v: &OVector) -> Result<Octonion> {
    Ok(inner(&u.left_mul(p), v)? - p * inner(u, v)?)
}

pub fn scalar_mul_left(p: Octonion, x: &OVector) -> OVector {
    x.left_mul(p)
}

pub fn scalar_mul_right(x: &OVector, p: Octonion) -> OVector {
    x.right_mul(p)
}

/// Entrywise left associator `[p, q, v]_i = (pq)v_i - p(q v_i)`.
pub fn associator_vec(p: Octonion, q: Octonion, v: &OVector) -> OVector {
    v.map(|x| associator(p, q, x))
}

/// `x = Σ_i e_i · parts[i]` with every part an all-real vector.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RealDecomposition {
    pub parts: [OVector; 8],
}

impl RealDecomposition {
    pub fn reconstruct(&self) -> OVector {
        let n = self.parts[0].len();
        let mut acc = OVector::zeros(n);
        for (i, part) in self.parts.iter().enumerate() {
            acc = &acc + &part.left_mul(Octonion::basis(i));
        }
        acc
    }
}

pub fn decompose_real(x: &OVector) -> RealDecomposition {
    let parts = std::array::from_fn(|i| x.map(|xj| Octonion::real(xj[i])));
    RealDecomposition { parts }
}

/// `⟨u, v⟩ = Σ_{i=0}^{7} e_i ⟨ē_i u, v⟩_R`, computed only from real inner
/// products.
pub fn inner_from_real(x: &OVector, y: &OVector) -> Result<Octonion> {
    check_len(x.len(), y.len())?;
    let mut acc = Octonion::ZERO;
    for i in 0..8 {
        let e = Octonion::basis(i);
        acc += e * inner_real(&x.left_mul(e.conj()), y)?;
    }
    Ok(acc)
}

/// Polarization: `(1/4) Σ_{i=0}^{7} e_i (‖ē_i x + y‖² - ‖ē_i x - y‖²)`.
///
/// The conjugate `ē_i` and the factor 1/4 are what make this agree with
/// [`inner`]; the bare form `Σ e_i(‖e_i x + y‖² - ‖e_i x - y‖²)` does not.
pub fn polarization_inner(x: &OVector, y: &OVector) -> Result<Octonion> {
    check_len(x.len(), y.len())?;
    let mut acc = Octonion::ZERO;
    for i in 0..8 {
        let e = Octonion::basis(i);
        let ex = x.left_mul(e.conj());
        let plus = (&ex + y).norm_sqr();
        let minus = (&ex - y).norm_sqr();
        acc += e * (0.25 * (plus - minus));
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(i: usize) -> Octonion {
        Octonion::basis(i)
    }

    fn v(entries: &[Octonion]) -> OVector {
        OVector::new(entries.to_vec()).unwrap()
    }

    #[test]
    fn inner_examples() {
        let one = Octonion::ONE;
        let zero = Octonion::ZERO;
        assert_eq!(inner(&v(&[one, zero]), &v(&[zero, one])).unwrap(), zero);
        let s = 0.5f64.sqrt();
        let x = v(&[one * s, e(1) * s]);
        let y = v(&[-e(3) * s, e(2) * s]);
        assert!(inner(&x, &y).unwrap().max_abs() < 1e-15);
        let z = v(&[e(4) + e(2) * 0.5, one * 3.0 - e(7)]);
        let zz = inner(&z, &z).unwrap();
        assert!(zz.approx_eq(&Octonion::real(z.norm_sqr()), 1e-12));
    }

    #[test]
    fn inner_length_mismatch() {
        let a = OVector::zeros(2);
        let b = OVector::zeros(3);
        assert_eq!(
            inner(&a, &b),
            Err(Error::LengthMismatch { left: 2, right: 3 })
        );
        assert!(inner_real(&a, &b).is_err());
        assert!(second_associator_vec(e(1), &a, &b).is_err());
        assert!(polarization_inner(&a, &b).is_err());
        assert!(inner_from_real(&a, &b).is_err());
    }

    #[test]
    fn inner_real_examples() {
        let zero = Octonion::ZERO;
        assert_eq!(
            inner_real(&v(&[e(1), zero]), &v(&[e(1), zero])).unwrap(),
            1.0
        );
        assert_eq!(
            inner_real(&v(&[e(4), e(7)]), &v(&[e(4), e(7)])).unwrap(),
            2.0
        );
        let x = v(&[e(1) * 2.0 + e(0), e(5) - e(6) * 3.0]);
        let y = v(&[e(1) - e(0) * 4.0, e(6) + e(2)]);
        let dot: f64 = x.coords().iter().zip(y.coords()).map(|(a, b)| a * b).sum();
        assert_eq!(inner_real(&x, &y).unwrap(), dot);
    }

    #[test]
    fn second_associator_of_unnormalized_rows() {
        // A_p((1,e1),(-e3,e2)) = -[p, e1, e2]
        let u = v(&[Octonion::ONE, e(1)]);
        let w = v(&[-e(3), e(2)]);
        assert_eq!(second_associator_vec(e(4), &u, &w).unwrap(), e(7) * -2.0);
        for m in 0..8 {
            let expected = -associator(e(m), e(1), e(2));
            assert_eq!(second_associator_vec(e(m), &u, &w).unwrap(), expected);
        }
        assert_eq!(
            second_associator_vec(Octonion::ONE, &u, &w).unwrap(),
            Octonion::ZERO
        );
    }

    #[test]
    fn second_associator_vanishes_on_real_vectors() {
        let u = OVector::from_reals(&[0.3, -1.2, 2.0]).unwrap();
        let w = v(&[e(3) + e(5) * 2.0, e(1) - e(7), Octonion::real(0.4) + e(6)]);
        for m in 1..8 {
            let p = e(m) + e((m % 7) + 1) * 0.5;
            assert!(second_associator_vec(p, &u, &w).unwrap().max_abs() < 1e-14);
            assert!(second_associator_vec(p, &w, &u).unwrap().max_abs() < 1e-14);
        }
    }

    #[test]
    fn scalar_mul_examples() {
        let x = v(&[e(3) * 2.0 + e(0), e(6)]);
        assert_eq!(scalar_mul_left(Octonion::ONE, &x), x);
        assert_eq!(scalar_mul_right(&x, Octonion::ONE), x);
        let one_zero = OVector::unit(2, 0);
        assert_eq!(scalar_mul_left(e(1), &one_zero), v(&[e(1), Octonion::ZERO]));
        assert_eq!(
            scalar_mul_left(e(2), &v(&[e(1), Octonion::ZERO])),
            v(&[-e(3), Octonion::ZERO])
        );
    }

    #[test]
    fn decompose_examples() {
        let x = OVector::from_reals(&[1.5, -2.0]).unwrap();
        let d = decompose_real(&x);
        assert_eq!(d.parts[0], x);
        for part in &d.parts[1..] {
            assert_eq!(part.max_abs(), 0.0);
        }
        let d = decompose_real(&v(&[e(1), e(2)]));
        assert_eq!(d.parts[1], OVector::from_reals(&[1.0, 0.0]).unwrap());
        assert_eq!(d.parts[2], OVector::from_reals(&[0.0, 1.0]).unwrap());
        for (i, part) in d.parts.iter().enumerate() {
            if i != 1 && i != 2 {
                assert_eq!(part.max_abs(), 0.0);
            }
            assert!(part.is_real(0.0));
        }
    }

    #[test]
    fn inner_from_real_and_polarization_examples() {
        let one_zero = OVector::unit(2, 0);
        assert!(inner_from_real(&one_zero, &one_zero)
            .unwrap()
            .approx_eq(&Octonion::ONE, 1e-15));
        let a = v(&[e(1), Octonion::ZERO]);
        let b = v(&[e(2), Octonion::ZERO]);
        // e1 · conj(e2) = -e1 e2 = -e3
        assert_eq!(inner(&a, &b).unwrap(), -e(3));
        assert!(inner_from_real(&a, &b).unwrap().approx_eq(&-e(3), 1e-15));
        let r = OVector::from_reals(&[1.0, -2.0]).unwrap();
        assert!(polarization_inner(&r, &r)
            .unwrap()
            .approx_eq(&Octonion::real(5.0), 1e-12));
        assert!(
            polarization_inner(&OVector::unit(2, 0), &OVector::unit(2, 1))
                .unwrap()
                .max_abs()
                < 1e-15
        );
    }

    #[test]
    fn literal_polarization_disagrees() {
        // Σ e_i(‖e_i x + y‖² - ‖e_i x - y‖²) without 1/4 and conjugation.
        let x = OVector::unit(2, 0);
        let mut literal = Octonion::ZERO;
        for i in 0..8 {
            let ex = x.left_mul(e(i));
            literal += e(i) * ((&ex + &x).norm_sqr() - (&ex - &x).norm_sqr());
        }
        assert!(!literal.approx_eq(&inner(&x, &x).unwrap(), 1e-6));
    }

    #[test]
    fn from_coords_roundtrip_and_errors() {
        let x = v(&[e(1) * 2.0 - e(0), e(7) * 0.25]);
        assert_eq!(OVector::from_coords(&x.coords()).unwrap(), x);
        assert!(OVector::from_coords(&[1.0; 7]).is_err());
        assert!(OVector::from_coords(&[]).is_err());
        assert_eq!(OVector::new(vec![]), Err(Error::Empty("vector")));
    }

    #[test]
    fn json_encoding() {
        let x: OVector = serde_json::from_str("[[1,0,0,0,0,0,0,0],[0,1,0,0,0,0,0,0]]").unwrap();
        assert_eq!(x, v(&[Octonion::ONE, e(1)]));
        assert!(serde_json::from_str::<OVector>("[]").is_err());
    }
}
