//! Independent reference arithmetic for the integration tests. Octonions
//! are plain `[f64; 8]` arrays multiplied by scanning the seven triples
//! directly; ranks come from Gaussian elimination, not the SVD.

#![allow(dead_code)]

use octolin::{OMatrix, OVector, Octonion};

pub type O = [f64; 8];

const TRIPLES: [[usize; 3]; 7] = [
    [1, 2, 3],
    [1, 4, 5],
    [1, 7, 6],
    [2, 4, 6],
    [2, 5, 7],
    [3, 4, 7],
    [3, 6, 5],
];

/// `e_i e_j` as `(sign, index)` found by scanning the triples.
pub fn basis_prod(i: usize, j: usize) -> (i32, usize) {
    if i == 0 {
        return (1, j);
    }
    if j == 0 {
        return (1, i);
    }
    if i == j {
        return (-1, 0);
    }
    for t in TRIPLES {
        for r in 0..3 {
            let a = t[r];
            let b = t[(r + 1) % 3];
            let c = t[(r + 2) % 3];
            if a == i && b == j {
                return (1, c);
            }
            if a == j && b == i {
                return (-1, c);
            }
        }
    }
    unreachable!("every pair of distinct imaginary units lies on a line")
}

pub fn mul(a: &O, b: &O) -> O {
    let mut c = [0.0; 8];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            let (s, k) = basis_prod(i, j);
            c[k] += s as f64 * x * y;
        }
    }
    c
}

pub fn add(a: &O, b: &O) -> O {
    std::array::from_fn(|i| a[i] + b[i])
}

pub fn sub(a: &O, b: &O) -> O {
    std::array::from_fn(|i| a[i] - b[i])
}

pub fn scale(a: &O, r: f64) -> O {
    a.map(|x| x * r)
}

pub fn conj(a: &O) -> O {
    std::array::from_fn(|i| if i == 0 { a[0] } else { -a[i] })
}

pub fn basis(i: usize) -> O {
    let mut c = [0.0; 8];
    c[i] = 1.0;
    c
}

pub fn re(a: &O) -> O {
    let mut c = [0.0; 8];
    c[0] = a[0];
    c
}

pub fn max_abs(a: &O) -> f64 {
    a.iter().fold(0.0, |m, x| m.max(x.abs()))
}

pub fn diff(a: &O, b: &O) -> f64 {
    max_abs(&sub(a, b))
}

pub fn of(o: &Octonion) -> O {
    *o.coords()
}

pub fn vec_of(v: &OVector) -> Vec<O> {
    v.iter().map(of).collect()
}

pub fn mat_of(m: &OMatrix) -> Vec<Vec<O>> {
    m.rows().iter().map(vec_of).collect()
}

pub fn vdiff(a: &[O], b: &[O]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| diff(x, y)).fold(0.0, f64::max)
}

pub fn vmax(a: &[O]) -> f64 {
    a.iter().map(max_abs).fold(0.0, f64::max)
}

pub fn vnorm(a: &[O]) -> f64 {
    a.iter()
        .flat_map(|o| o.iter())
        .map(|x| x * x)
        .sum::<f64>()
        .sqrt()
}

pub fn left(p: &O, v: &[O]) -> Vec<O> {
    v.iter().map(|x| mul(p, x)).collect()
}

pub fn right(v: &[O], p: &O) -> Vec<O> {
    v.iter().map(|x| mul(x, p)).collect()
}

pub fn vsub(a: &[O], b: &[O]) -> Vec<O> {
    a.iter().zip(b).map(|(x, y)| sub(x, y)).collect()
}

pub fn vadd(a: &[O], b: &[O]) -> Vec<O> {
    a.iter().zip(b).map(|(x, y)| add(x, y)).collect()
}

/// `Σ_i u_i conj(v_i)`
pub fn inner(u: &[O], v: &[O]) -> O {
    u.iter()
        .zip(v)
        .fold([0.0; 8], |acc, (a, b)| add(&acc, &mul(a, &conj(b))))
}

/// `⟨pu, v⟩ - p⟨u, v⟩`
pub fn second_assoc(p: &O, u: &[O], v: &[O]) -> O {
    sub(&inner(&left(p, u), v), &mul(p, &inner(u, v)))
}

/// Row vector times matrix: `(yT)_j = Σ_i y_i t_ij`.
pub fn apply(t: &[Vec<O>], y: &[O]) -> Vec<O> {
    let n = t[0].len();
    (0..n)
        .map(|j| {
            y.iter()
                .zip(t)
                .fold([0.0; 8], |acc, (yi, row)| add(&acc, &mul(yi, &row[j])))
        })
        .collect()
}

pub fn matmul(a: &[Vec<O>], b: &[Vec<O>]) -> Vec<Vec<O>> {
    a.iter().map(|row| apply(b, row)).collect()
}

pub fn dual(t: &[Vec<O>]) -> Vec<Vec<O>> {
    let n = t.len();
    let m = t[0].len();
    (0..m)
        .map(|i| (0..n).map(|j| conj(&t[j][i])).collect())
        .collect()
}

pub fn mdiff(a: &[Vec<O>], b: &[Vec<O>]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| vdiff(x, y))
        .fold(0.0, f64::max)
}

pub fn identity(n: usize) -> Vec<Vec<O>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { basis(0) } else { [0.0; 8] })
                .collect()
        })
        .collect()
}

/// `T(px) - pT(x)`
pub fn op_assoc(p: &O, x: &[O], t: &[Vec<O>]) -> Vec<O> {
    vsub(&apply(t, &left(p, x)), &left(p, &apply(t, x)))
}

pub fn coords(v: &[O]) -> Vec<f64> {
    v.iter().flat_map(|o| o.iter().copied()).collect()
}

/// Rank by Gaussian elimination with partial pivoting; pivots below
/// `rel * max|entry|` count as zero.
pub fn rank(rows: &[Vec<f64>], rel: f64) -> usize {
    let mut m: Vec<Vec<f64>> = rows.to_vec();
    if m.is_empty() {
        return 0;
    }
    let cols = m[0].len();
    let scale = m
        .iter()
        .flat_map(|r| r.iter())
        .fold(0.0f64, |a, x| a.max(x.abs()));
    if scale == 0.0 {
        return 0;
    }
    let mut r = 0;
    for c in 0..cols {
        if r == m.len() {
            break;
        }
        let (piv, val) = (r..m.len())
            .map(|i| (i, m[i][c].abs()))
            .fold(
                (r, -1.0),
                |best, cur| if cur.1 > best.1 { cur } else { best },
            );
        if val <= rel * scale {
            continue;
        }
        m.swap(r, piv);
        let pivot_row = m[r].clone();
        for row in m.iter_mut().skip(r + 1) {
            let f = row[c] / pivot_row[c];
            if f != 0.0 {
                for (x, p) in row.iter_mut().zip(&pivot_row).skip(c) {
                    *x -= f * p;
                }
            }
        }
        r += 1;
    }
    r
}

/// Real matrix of `y ↦ yT` with rows `coords(e_a ε^i T)`.
pub fn real_rows(t: &[Vec<O>]) -> Vec<Vec<f64>> {
    let n = t.len();
    let mut out = Vec::with_capacity(8 * n);
    for i in 0..n {
        for a in 0..8 {
            let mut y = vec![[0.0; 8]; n];
            y[i] = basis(a);
            out.push(coords(&apply(t, &y)));
        }
    }
    out
}

pub fn to_octonion(o: &O) -> Octonion {
    Octonion::new(*o).unwrap()
}

pub fn to_vector(v: &[O]) -> OVector {
    OVector::new(v.iter().map(to_octonion).collect()).unwrap()
}

pub fn to_matrix(m: &[Vec<O>]) -> OMatrix {
    OMatrix::new(m.iter().map(|r| to_vector(r)).collect()).unwrap()
}

/// `(a e_i)` shorthand for building fixtures.
pub fn e(i: usize, a: f64) -> O {
    scale(&basis(i), a)
}
