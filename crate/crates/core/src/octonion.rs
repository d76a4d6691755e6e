//! Octonion arithmetic over an exact signed-basis multiplication table.
//!
//! The imaginary units obey `e_i e_j = ε_ijk e_k - δ_ij` where ε is the
//! completely antisymmetric tensor equal to 1 on the triples listed in
//! [`TRIPLES`]. Products of basis elements are table lookups and never
//! round.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Index, Mul, Neg, Sub, SubAssign};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Oriented triples `(i, j, k)` with `e_i e_j = e_k`.
pub const TRIPLES: [[usize; 3]; 7] = [
    [1, 2, 3],
    [1, 4, 5],
    [1, 7, 6],
    [2, 4, 6],
    [2, 5, 7],
    [3, 4, 7],
    [3, 6, 5],
];

/// Signed basis element produced by multiplying two basis units.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BasisProduct {
    pub sign: i8,
    pub index: u8,
}

const fn build_table() -> [[BasisProduct; 8]; 8] {
    let mut t = [[BasisProduct { sign: 0, index: 0 }; 8]; 8];
    let mut i = 0;
    while i < 8 {
        t[0][i] = BasisProduct {
            sign: 1,
            index: i as u8,
        };
        t[i][0] = BasisProduct {
            sign: 1,
            index: i as u8,
        };
        if i > 0 {
            t[i][i] = BasisProduct { sign: -1, index: 0 };
        }
        i += 1;
    }
    let mut n = 0;
    while n < TRIPLES.len() {
        let [a, b, c] = TRIPLES[n];
        // cyclic rotations carry sign +1, transpositions -1
        let rot = [[a, b, c], [b, c, a], [c, a, b]];
        let mut r = 0;
        while r < 3 {
            let [x, y, z] = rot[r];
            t[x][y] = BasisProduct {
                sign: 1,
                index: z as u8,
            };
            t[y][x] = BasisProduct {
                sign: -1,
                index: z as u8,
            };
            r += 1;
        }
        n += 1;
    }
    t
}

static TABLE: [[BasisProduct; 8]; 8] = build_table();

/// The exact product `e_i e_j`.
///
/// # Panics
///
/// Panics if either index exceeds 7.
#[inline]
pub fn basis_mul(i: usize, j: usize) -> BasisProduct {
    TABLE[i][j]
}

/// The full 8x8 signed basis multiplication table.
pub fn mult_table() -> &'static [[BasisProduct; 8]; 8] {
    &TABLE
}

/// An octonion `Σ c_i e_i` stored as its eight real coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(try_from = "[f64; 8]", into = "[f64; 8]")]
pub struct Octonion([f64; 8]);

impl TryFrom<[f64; 8]> for Octonion {
    type Error = Error;

    fn try_from(coords: [f64; 8]) -> Result<Self> {
        Octonion::new(coords)
    }
}

impl From<Octonion> for [f64; 8] {
    fn from(p: Octonion) -> Self {
        p.0
    }
}

impl From<f64> for Octonion {
    fn from(r: f64) -> Self {
        Octonion::real(r)
    }
}

impl Octonion {
    pub const ZERO: Octonion = Octonion([0.0; 8]);
    pub const ONE: Octonion = Octonion::basis(0);

    /// Builds an octonion, rejecting NaN and infinite coordinates.
    pub fn new(coords: [f64; 8]) -> Result<Self> {
        if coords.iter().all(|c| c.is_finite()) {
            Ok(Octonion(coords))
        } else {
            Err(Error::NonFinite)
        }
    }

    /// The basis unit `e_i` (`e_0 = 1`).
    pub const fn basis(i: usize) -> Self {
        let mut c = [0.0; 8];
        c[i] = 1.0;
        Octonion(c)
    }

    pub const fn real(r: f64) -> Self {
        let mut c = [0.0; 8];
        c[0] = r;
        Octonion(c)
    }

    /// `r + s·J` for a unit imaginary `J`, i.e. the image of the complex
    /// number `r + s i` in the subalgebra `C_J`.
    pub fn complex(r: f64, s: f64, j: Octonion) -> Self {
        Octonion::real(r) + j * s
    }

    pub fn coords(&self) -> &[f64; 8] {
        &self.0
    }

    pub fn re(&self) -> f64 {
        self.0[0]
    }

    pub fn im(&self) -> Octonion {
        let mut c = self.0;
        c[0] = 0.0;
        Octonion(c)
    }

    pub fn conj(&self) -> Octonion {
        let mut c = self.0.map(|x| -x);
        c[0] = self.0[0];
        Octonion(c)
    }

    pub fn norm_sqr(&self) -> f64 {
        self.0.iter().map(|x| x * x).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    /// `conj(p) / |p|²`; fails when `|p|` does not exceed `tol`.
    pub fn inv_with(&self, tol: f64) -> Result<Octonion> {
        let n2 = self.norm_sqr();
        if n2.sqrt() <= tol {
            return Err(Error::Domain("zero divisor"));
        }
        Ok(self.conj() / n2)
    }

    pub fn inv(&self) -> Result<Octonion> {
        self.inv_with(crate::Tolerances::DEFAULT.eq)
    }

    /// Returns `p / |p|`, or an error for a (near-)zero octonion.
    pub fn normalized(&self, tol: f64) -> Result<Octonion> {
        let n = self.norm();
        if n <= tol {
            return Err(Error::Domain("zero divisor"));
        }
        Ok(*self / n)
    }

    pub fn is_real(&self, tol: f64) -> bool {
        self.0[1..].iter().all(|c| c.abs() <= tol)
    }

    /// Largest coordinate difference.
    pub fn max_abs_diff(&self, other: &Octonion) -> f64 {
        self.0
            .iter()
            .zip(other.0.iter())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    pub fn max_abs(&self) -> f64 {
        self.0.iter().fold(0.0, |m, c| m.max(c.abs()))
    }

    pub fn approx_eq(&self, other: &Octonion, tol: f64) -> bool {
        self.max_abs_diff(other) <= tol
    }

    /// Real dot product of the coordinate vectors, `Re(p q̄)`.
    pub fn dot(&self, other: &Octonion) -> f64 {
        self.0.iter().zip(other.0.iter()).map(|(a, b)| a * b).sum()
    }

    /// The real-part operator evaluated through the bimodule formula
    /// `Re x = (5/12) x - (1/12) Σ_{i=1}^{7} e_i x e_i`.
    ///
    /// This is an independent route to `re(p) · 1`; the two must agree.
    pub fn real_part_formula(&self) -> Octonion {
        let mut acc = Octonion::ZERO;
        for i in 1..8 {
            let e = Octonion::basis(i);
            acc += (e * *self) * e;
        }
        *self * (5.0 / 12.0) - acc * (1.0 / 12.0)
    }
}

impl Index<usize> for Octonion {
    type Output = f64;

    fn index(&self, i: usize) -> &f64 {
        &self.0[i]
    }
}

impl Add for Octonion {
    type Output = Octonion;

    fn add(self, rhs: Octonion) -> Octonion {
        let mut c = self.0;
        for (a, b) in c.iter_mut().zip(rhs.0) {
            *a += b;
        }
        Octonion(c)
    }
}

impl AddAssign for Octonion {
    fn add_assign(&mut self, rhs: Octonion) {
        *self = *self + rhs;
    }
}

impl Sub for Octonion {
    type Output = Octonion;

    fn sub(self, rhs: Octonion) -> Octonion {
        self + (-rhs)
    }
}

impl SubAssign for Octonion {
    fn sub_assign(&mut self, rhs: Octonion) {
        *self = *self - rhs;
    }
}

impl Neg for Octonion {
    type Output = Octonion;

    fn neg(self) -> Octonion {
        Octonion(self.0.map(|x| -x))
    }
}

impl Mul for Octonion {
    type Output = Octonion;

    fn mul(self, rhs: Octonion) -> Octonion {
        let mut c = [0.0; 8];
        for (i, &a) in self.0.iter().enumerate() {
            if a == 0.0 {
                continue;
            }
            for (j, &b) in rhs.0.iter().enumerate() {
                let bp = TABLE[i][j];
                c[bp.index as usize] += f64::from(bp.sign) * a * b;
            }
        }
        Octonion(c)
    }
}

impl Mul<f64> for Octonion {
    type Output = Octonion;

    fn mul(self, rhs: f64) -> Octonion {
        Octonion(self.0.map(|x| x * rhs))
    }
}

impl Mul<Octonion> for f64 {
    type Output = Octonion;

    fn mul(self, rhs: Octonion) -> Octonion {
        rhs * self
    }
}

impl Div<f64> for Octonion {
    type Output = Octonion;

    fn div(self, rhs: f64) -> Octonion {
        Octonion(self.0.map(|x| x / rhs))
    }
}

impl std::iter::Sum for Octonion {
    fn sum<I: Iterator<Item = Octonion>>(iter: I) -> Octonion {
        iter.fold(Octonion::ZERO, Add::add)
    }
}

/// `(pq)r - p(qr)`.
pub fn associator(p: Octonion, q: Octonion, r: Octonion) -> Octonion {
    (p * q) * r - p * (q * r)
}

/// Formats `x` with `digits` significant digits, trailing zeros trimmed.
pub(crate) fn fmt_sig(x: f64, digits: usize) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    let mag = x.abs().log10().floor() as i32;
    if !(-4..6).contains(&mag) {
        let s = format!("{:.*e}", digits.saturating_sub(1), x);
        let (mant, exp) = s.split_once('e').expect("exponent form");
        let mant = if mant.contains('.') {
            mant.trim_end_matches('0').trim_end_matches('.')
        } else {
            mant
        };
        return format!("{mant}e{exp}");
    }
    let decimals = (digits as i32 - 1 - mag).max(0) as usize;
    let s = format!("{:.*}", decimals, x);
    let s = if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    };
    if s == "-0" {
        "0".to_string()
    } else {
        s
    }
}

impl fmt::Display for Octonion {
    /// Symbolic form such as `0.707107 - 0.707107e3`, six significant digits.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, &c) in self.0.iter().enumerate() {
            let s = fmt_sig(c, 6);
            if s == "0" {
                continue;
            }
            let (sign, mag) = match s.strip_prefix('-') {
                Some(m) => ("-", m.to_string()),
                None => ("+", s),
            };
            let unit = if i == 0 {
                String::new()
            } else {
                format!("e{i}")
            };
            let mag = if i > 0 && mag == "1" {
                String::new()
            } else if i > 0 && mag.contains('e') {
                format!("{mag}*")
            } else {
                mag
            };
            match (wrote, sign) {
                (false, "-") => write!(f, "-{mag}{unit}")?,
                (false, _) => write!(f, "{mag}{unit}")?,
                (true, s) => write!(f, " {s} {mag}{unit}")?,
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}
