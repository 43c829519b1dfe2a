//! Exact integer and rational linear algebra.
//!
//! Determinants use Bareiss fraction-free elimination, linear systems are
//! solved by exact Gaussian elimination over the rationals, and inertia of a
//! symmetric matrix comes from congruence diagonalization. All entries are
//! arbitrary-precision, so no overflow and no rounding anywhere.

// Index loops mirror the textbook elimination schemes; iterator rewrites
// obscure the row/column bookkeeping here.
#![allow(clippy::needless_range_loop)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Arbitrary-precision integer used throughout the crate.
pub type Int = BigInt;
/// Reduced arbitrary-precision rational used throughout the crate.
pub type Rat = BigRational;

/// Builds a rational from machine integers. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(Int::from(num), Int::from(den))
}

/// Builds an integer-valued rational.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LinalgError {
    #[error("matrix is singular")]
    Singular,
    #[error("matrix is not symmetric")]
    NotSymmetric,
}

/// Square matrix of arbitrary-precision integers, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    n: usize,
    rows: Vec<Vec<Int>>,
}

impl IntMatrix {
    /// Builds a matrix from its rows. Panics unless the grid is n x n.
    pub fn from_rows(rows: Vec<Vec<Int>>) -> Self {
        let n = rows.len();
        for row in &rows {
            assert_eq!(row.len(), n, "matrix rows must form a square grid");
        }
        IntMatrix { n, rows }
    }

    /// Convenience constructor from machine integers.
    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| Int::from(v)).collect())
                .collect(),
        )
    }

    /// The n x n zero matrix. `n = 0` gives the empty matrix.
    pub fn zero(n: usize) -> Self {
        IntMatrix {
            n,
            rows: vec![vec![Int::zero(); n]; n],
        }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Int {
        &self.rows[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Int) {
        self.rows[i][j] = v;
    }

    pub fn rows(&self) -> &[Vec<Int>] {
        &self.rows
    }

    pub fn is_symmetric(&self) -> bool {
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.rows[i][j] != self.rows[j][i] {
                    return false;
                }
            }
        }
        true
    }

    /// Matrix-vector product over the rationals, for checking solutions.
    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.n, "dimension mismatch");
        self.rows
            .iter()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .map(|(a, x)| Rat::from_integer(a.clone()) * x)
                    .sum()
            })
            .collect()
    }
}

/// Exact determinant by Bareiss fraction-free elimination.
///
/// Every division in the Bareiss recurrence is exact over the integers, so
/// intermediate entries stay polynomially sized. The empty matrix has
/// determinant 1.
pub fn det(m: &IntMatrix) -> Int {
    let n = m.n;
    if n == 0 {
        return Int::one();
    }
    let mut a = m.rows.clone();
    let mut negate = false;
    let mut prev = Int::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return Int::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = t / &prev;
            }
            a[i][k] = Int::zero();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// Solves `M x = b` exactly over the rationals.
///
/// Returns [`LinalgError::Singular`] when `M` has determinant zero. Panics if
/// `b` has the wrong length. The empty system has the empty solution.
pub fn solve(m: &IntMatrix, b: &[Rat]) -> Result<Vec<Rat>, LinalgError> {
    let n = m.n;
    assert_eq!(b.len(), n, "dimension mismatch");
    let mut a: Vec<Vec<Rat>> = m
        .rows
        .iter()
        .map(|row| row.iter().map(|v| Rat::from_integer(v.clone())).collect())
        .collect();
    let mut x: Vec<Rat> = b.to_vec();
    for k in 0..n {
        let piv = (k..n)
            .find(|&r| !a[r][k].is_zero())
            .ok_or(LinalgError::Singular)?;
        a.swap(k, piv);
        x.swap(k, piv);
        for r in k + 1..n {
            if a[r][k].is_zero() {
                continue;
            }
            let f = &a[r][k] / &a[k][k];
            for c in k..n {
                let t = &a[r][c] - &(&f * &a[k][c]);
                a[r][c] = t;
            }
            let t = &x[r] - &(&f * &x[k]);
            x[r] = t;
        }
    }
    for k in (0..n).rev() {
        let mut s = x[k].clone();
        for c in k + 1..n {
            s -= &a[k][c] * &x[c];
        }
        x[k] = s / &a[k][k];
    }
    Ok(x)
}

/// Eigenvalue sign counts of a symmetric matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Inertia {
    pub positives: usize,
    pub negatives: usize,
    pub nullity: usize,
}

impl Inertia {
    pub fn signature(&self) -> i64 {
        self.positives as i64 - self.negatives as i64
    }

    pub fn rank(&self) -> usize {
        self.positives + self.negatives
    }
}

/// Signature of a symmetric integer matrix: positives minus negatives.
pub fn signature(m: &IntMatrix) -> Result<i64, LinalgError> {
    Ok(inertia(m)?.signature())
}

/// Full inertia of a symmetric integer matrix by congruence diagonalization.
///
/// When every remaining diagonal entry vanishes but some off-diagonal entry
/// `c` does not, the 2x2 block [[0, c], [c, 0]] is split off; it contributes
/// one positive and one negative eigenvalue, and the rest of the matrix is
/// replaced by the Schur complement (itself a congruence). Returns
/// [`LinalgError::NotSymmetric`] for non-symmetric input.
pub fn inertia(m: &IntMatrix) -> Result<Inertia, LinalgError> {
    if !m.is_symmetric() {
        return Err(LinalgError::NotSymmetric);
    }
    let n = m.n;
    let mut a: Vec<Vec<Rat>> = m
        .rows
        .iter()
        .map(|row| row.iter().map(|v| Rat::from_integer(v.clone())).collect())
        .collect();
    let sym_swap = |a: &mut Vec<Vec<Rat>>, i: usize, j: usize| {
        if i == j {
            return;
        }
        a.swap(i, j);
        for row in a.iter_mut() {
            row.swap(i, j);
        }
    };
    let mut inertia = Inertia {
        positives: 0,
        negatives: 0,
        nullity: 0,
    };
    let mut i = 0;
    while i < n {
        if let Some(j) = (i..n).find(|&j| !a[j][j].is_zero()) {
            sym_swap(&mut a, i, j);
            for r in i + 1..n {
                if a[r][i].is_zero() {
                    continue;
                }
                let f = &a[r][i] / &a[i][i];
                for c in i..n {
                    let t = &a[r][c] - &(&f * &a[i][c]);
                    a[r][c] = t;
                }
                for c in i..n {
                    let t = &a[c][r] - &(&f * &a[c][i]);
                    a[c][r] = t;
                }
            }
            if a[i][i].is_positive() {
                inertia.positives += 1;
            } else {
                inertia.negatives += 1;
            }
            i += 1;
        } else {
            let mut coupling = None;
            'scan: for r in i..n {
                for c in r + 1..n {
                    if !a[r][c].is_zero() {
                        coupling = Some((r, c));
                        break 'scan;
                    }
                }
            }
            match coupling {
                None => {
                    inertia.nullity += n - i;
                    break;
                }
                Some((r, c)) => {
                    sym_swap(&mut a, i, r);
                    let c = if c == i { r } else { c };
                    sym_swap(&mut a, i + 1, c);
                    let pivot = a[i][i + 1].clone();
                    for r in i + 2..n {
                        for s in i + 2..n {
                            let adj =
                                (&a[r][i] * &a[s][i + 1] + &a[r][i + 1] * &a[s][i]) / &pivot;
                            let t = &a[r][s] - &adj;
                            a[r][s] = t;
                        }
                    }
                    inertia.positives += 1;
                    inertia.negatives += 1;
                    i += 2;
                }
            }
        }
    }
    Ok(inertia)
}
