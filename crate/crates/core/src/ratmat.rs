//! Dense matrices over arbitrary-precision rationals.
//!
//! Used wherever a computation must be exact: boundary products, operator
//! Laplacians, rank (and hence Betti number) computations, and the entrywise
//! identity checks in [`crate::interlace`]. Everything is row-major and at
//! desk scale (hundreds of rows), so no attempt is made at sparsity.

use ndarray::Array2;
use num::{BigRational, Signed, Zero};

use crate::error::Result;
use crate::weight::rat_to_f64;

#[derive(Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix { rows, cols, data: vec![BigRational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = num::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigRational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        RatMatrix { rows, cols, data }
    }

    pub fn from_diag(diag: &[BigRational]) -> Self {
        let mut m = Self::zeros(diag.len(), diag.len());
        for (i, v) in diag.iter().enumerate() {
            m[(i, i)] = v.clone();
        }
        m
    }

    pub fn from_int(a: &Array2<i64>) -> Self {
        Self::from_fn(a.nrows(), a.ncols(), |i, j| crate::weight::rat_int(a[[i, j]]))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "inner dimensions must agree");
        Self::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = BigRational::zero();
            for t in 0..self.cols {
                let a = &self[(i, t)];
                let b = &other[(t, j)];
                if !a.is_zero() && !b.is_zero() {
                    acc += a * b;
                }
            }
            acc
        })
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] + &other[(i, j)])
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] - &other[(i, j)])
    }

    pub fn scale(&self, factor: &BigRational) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] * factor)
    }

    /// Multiplies row `i` by `diag[i]`; computes `D · self` for diagonal `D`.
    pub fn scale_rows(&self, diag: &[BigRational]) -> Self {
        assert_eq!(diag.len(), self.rows);
        Self::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] * &diag[i])
    }

    /// Multiplies column `j` by `diag[j]`; computes `self · D`.
    pub fn scale_cols(&self, diag: &[BigRational]) -> Self {
        assert_eq!(diag.len(), self.cols);
        Self::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] * &diag[j])
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn to_f64(&self) -> Result<Array2<f64>> {
        let mut out = Array2::zeros((self.rows, self.cols));
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[[i, j]] = rat_to_f64(&self[(i, j)])?;
            }
        }
        Ok(out)
    }

    /// Rank over the rationals by Gaussian elimination.
    ///
    /// Pivots are chosen by largest numerator magnitude among the nonzero
    /// candidates, which keeps the reduced fractions from growing more than
    /// necessary at this scale.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let mut rank = 0;
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let pivot = (row..m.rows)
                .filter(|&i| !m[(i, col)].is_zero())
                .max_by_key(|&i| m[(i, col)].numer().abs());
            let Some(p) = pivot else { continue };
            if p != row {
                for j in 0..m.cols {
                    let a = m[(p, j)].clone();
                    let b = m[(row, j)].clone();
                    m[(p, j)] = b;
                    m[(row, j)] = a;
                }
            }
            for i in row + 1..m.rows {
                if m[(i, col)].is_zero() {
                    continue;
                }
                let factor = &m[(i, col)] / &m[(row, col)];
                for j in col..m.cols {
                    let delta = &factor * &m[(row, j)];
                    m[(i, j)] -= delta;
                }
            }
            row += 1;
            rank += 1;
        }
        rank
    }
}

impl std::ops::Index<(usize, usize)> for RatMatrix {
    type Output = BigRational;
    fn index(&self, (i, j): (usize, usize)) -> &BigRational {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RatMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigRational {
        &mut self.data[i * self.cols + j]
    }
}

impl std::fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "RatMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self[(i, j)].to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}
