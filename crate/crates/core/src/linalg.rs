//! Dense exact linear algebra over ℚ and a few integer-lattice helpers.

#![allow(clippy::needless_range_loop)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::algebra::{int, Rational};

pub type Matrix = Vec<Vec<Rational>>;

/// Row-reduces a copy of `m` and returns its rank.
pub fn rank(m: &Matrix) -> usize {
    let mut a = m.clone();
    row_reduce(&mut a).len()
}

/// In-place reduced row echelon form. Returns the pivot columns.
pub fn row_reduce(a: &mut Matrix) -> Vec<usize> {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, pr);
        let inv = a[r][c].recip();
        for v in a[r].iter_mut() {
            *v *= &inv;
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..cols {
                    let t = &f * &a[r][j];
                    a[i][j] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Solves `m · x = rhs`. Returns `None` when the system is inconsistent or
/// the solution is not unique.
pub fn solve(m: &Matrix, rhs: &[Rational]) -> Option<Vec<Rational>> {
    let cols = m.first().map_or(0, |r| r.len());
    let mut aug: Matrix = m
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut row = row.clone();
            row.push(b.clone());
            row
        })
        .collect();
    let pivots = row_reduce(&mut aug);
    if pivots.contains(&cols) || pivots.len() != cols {
        return None;
    }
    Some((0..cols).map(|i| aug[i][cols].clone()).collect())
}

pub fn determinant(m: &Matrix) -> Rational {
    let n = m.len();
    let mut a = m.clone();
    let mut det = Rational::one();
    for c in 0..n {
        let Some(pr) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return Rational::zero();
        };
        if pr != c {
            a.swap(pr, c);
            det = -det;
        }
        det *= &a[c][c];
        let inv = a[c][c].recip();
        for i in c + 1..n {
            if a[i][c].is_zero() {
                continue;
            }
            let f = &a[i][c] * &inv;
            for j in c..n {
                let t = &f * &a[c][j];
                a[i][j] -= t;
            }
        }
    }
    det
}

pub fn inverse(m: &Matrix) -> Option<Matrix> {
    let n = m.len();
    let mut aug: Matrix = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut row = row.clone();
            row.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            row
        })
        .collect();
    let pivots = row_reduce(&mut aug);
    if pivots.len() < n || pivots[n - 1] >= n {
        return None;
    }
    Some(aug.into_iter().map(|row| row[n..].to_vec()).collect())
}

pub fn mat_vec(m: &Matrix, v: &[Rational]) -> Vec<Rational> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

/// Signature (positive minus negative inertia) of a symmetric rational
/// matrix by congruence diagonalisation. When every remaining diagonal
/// entry vanishes an off-diagonal pair is folded in first.
pub fn signature(m: &Matrix) -> i64 {
    let mut a = m.clone();
    let mut n = a.len();
    let mut sig = 0i64;
    while n > 0 {
        let last = n - 1;
        if a[last][last].is_zero() {
            if let Some(k) = (0..last).find(|&k| !a[k][k].is_zero()) {
                swap_sym(&mut a, k, last);
            } else if let Some(k) = (0..last).find(|&k| !a[k][last].is_zero()) {
                // e_last ↦ e_last + e_k gives diagonal 2 a[k][last]
                for j in 0..n {
                    let t = a[k][j].clone();
                    a[last][j] += t;
                }
                for i in 0..n {
                    let t = a[i][k].clone();
                    a[i][last] += t;
                }
            } else {
                // zero row and column: contributes nothing
                n -= 1;
                continue;
            }
        }
        let d = a[last][last].clone();
        sig += if d.is_positive() { 1 } else { -1 };
        for i in 0..last {
            if a[i][last].is_zero() {
                continue;
            }
            let f = &a[i][last] / &d;
            for j in 0..n {
                let t = &f * &a[last][j];
                a[i][j] -= t;
            }
        }
        for i in 0..last {
            a[i][last] = Rational::zero();
        }
        n = last;
    }
    sig
}

fn swap_sym(a: &mut Matrix, i: usize, j: usize) {
    a.swap(i, j);
    for row in a.iter_mut() {
        row.swap(i, j);
    }
}

/// Basis of the lattice `{x ∈ basis-span : f·x ≡ 0 (mod m)}` for an integer
/// functional `f` and modulus `m > 0`. Works by unimodular column operations
/// that concentrate the values `f·b_i` on one basis vector.
pub fn congruence_sublattice(basis: &[Vec<BigInt>], f: &[BigInt], m: &BigInt) -> Vec<Vec<BigInt>> {
    let dot = |v: &[BigInt]| -> BigInt { v.iter().zip(f).map(|(a, b)| a * b).sum() };
    let mut b: Vec<Vec<BigInt>> = basis.to_vec();
    let mut vals: Vec<BigInt> = b.iter().map(|v| dot(v)).collect();
    // Euclid on the values, mirrored on the basis vectors
    loop {
        let nonzero: Vec<usize> = (0..b.len()).filter(|&i| !vals[i].is_zero()).collect();
        if nonzero.len() <= 1 {
            break;
        }
        let (mut best, mut other) = (nonzero[0], nonzero[1]);
        for &i in &nonzero {
            if vals[i].abs() < vals[best].abs() {
                best = i;
            }
        }
        if other == best {
            other = nonzero[0];
        }
        let q = vals[other].div_floor(&vals[best]);
        let sub: Vec<BigInt> = b[best].iter().map(|x| x * &q).collect();
        for (x, s) in b[other].iter_mut().zip(sub) {
            *x -= s;
        }
        vals[other] = &vals[other] - &q * &vals[best];
    }
    if let Some(i) = (0..b.len()).find(|&i| !vals[i].is_zero()) {
        let g = vals[i].abs();
        let step = m / g.gcd(m);
        for x in b[i].iter_mut() {
            *x *= &step;
        }
    }
    b
}

pub fn identity_lattice(n: usize) -> Vec<Vec<BigInt>> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect()
}

pub fn to_rational_matrix(m: &[Vec<i64>]) -> Matrix {
    m.iter()
        .map(|row| row.iter().map(|&v| int(&BigInt::from(v))).collect())
        .collect()
}
