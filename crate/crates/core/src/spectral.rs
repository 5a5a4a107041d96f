//! Symmetric eigensolving, spectra, and exact homology ranks.
//!
//! Eigenvalues come from a cyclic Jacobi iteration: deterministic, free of
//! external dependencies, and accurate to near machine precision at the
//! dense sizes this crate targets. Betti numbers never touch floating
//! point; they are differences of exact ranks of the integer boundary
//! matrices over the rationals.

use ndarray::Array2;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::laplacian::boundary_matrix;
use crate::ratmat::RatMatrix;

/// Hard cap on Jacobi sweeps; convergence at these sizes takes well under
/// twenty.
const MAX_SWEEPS: usize = 100;

/// Relative tolerance on the off-diagonal Frobenius norm at which a sweep
/// declares convergence.
const SWEEP_TOL: f64 = 1e-13;

/// Allowed relative asymmetry of an input matrix before it is rejected.
const ASYMMETRY_TOL: f64 = 1e-10;

/// A multiset of real eigenvalues, stored in ascending order.
///
/// Index conventions used throughout the crate are one-based and mirror the
/// usual min/max notation: `lambda_min(i)` is the i-th smallest value and
/// `lambda_max(i)` the i-th largest.
#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum {
    values: Vec<f64>,
}

impl Spectrum {
    pub fn from_values(mut values: Vec<f64>) -> Self {
        assert!(values.iter().all(|v| !v.is_nan()), "spectrum cannot contain NaN");
        values.sort_unstable_by(f64::total_cmp);
        Spectrum { values }
    }

    pub fn empty() -> Self {
        Spectrum { values: Vec::new() }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// The i-th smallest eigenvalue, `1 ≤ i ≤ len`.
    pub fn lambda_min(&self, i: usize) -> f64 {
        assert!(i >= 1 && i <= self.values.len(), "eigenvalue index {i} out of range");
        self.values[i - 1]
    }

    /// The i-th largest eigenvalue, `1 ≤ i ≤ len`.
    pub fn lambda_max(&self, i: usize) -> f64 {
        assert!(i >= 1 && i <= self.values.len(), "eigenvalue index {i} out of range");
        self.values[self.values.len() - i]
    }

    pub fn smallest(&self) -> Option<f64> {
        self.values.first().copied()
    }

    pub fn largest(&self) -> Option<f64> {
        self.values.last().copied()
    }

    /// How many eigenvalues are `≤ threshold + tol`.
    pub fn count_at_most(&self, threshold: f64, tol: f64) -> usize {
        self.values.partition_point(|v| *v <= threshold + tol)
    }

    /// The spectrum of the block-diagonal direct sum: the merged multiset.
    pub fn direct_sum(parts: &[Spectrum]) -> Spectrum {
        let mut values: Vec<f64> = parts.iter().flat_map(|s| s.values.iter().copied()).collect();
        values.sort_unstable_by(f64::total_cmp);
        Spectrum { values }
    }
}

fn frobenius(a: &Array2<f64>) -> f64 {
    a.iter().map(|v| v * v).sum::<f64>().sqrt()
}

fn off_diagonal_frobenius(a: &Array2<f64>) -> f64 {
    let n = a.nrows();
    let mut acc = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                acc += a[[i, j]] * a[[i, j]];
            }
        }
    }
    acc.sqrt()
}

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations.
///
/// The input may deviate from exact symmetry by at most `1e-10` relative to
/// its largest entry; it is symmetrized by averaging before iteration.
/// Sweeps run in fixed row-cyclic order, so the result is deterministic.
pub fn eigenvalues_symmetric(a: &Array2<f64>) -> Result<Spectrum> {
    if a.nrows() != a.ncols() {
        return Err(Error::NotSquare { rows: a.nrows(), cols: a.ncols() });
    }
    let n = a.nrows();
    if n == 0 {
        return Ok(Spectrum::empty());
    }
    let scale = 1.0 + a.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let max_dev = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .map(|(i, j)| (a[[i, j]] - a[[j, i]]).abs())
        .fold(0.0, f64::max);
    let tol = ASYMMETRY_TOL * scale;
    if max_dev > tol {
        return Err(Error::NotSymmetric { max_dev, tol });
    }
    let mut m = Array2::zeros((n, n));
    for i in 0..n {
        for j in 0..n {
            m[[i, j]] = 0.5 * (a[[i, j]] + a[[j, i]]);
        }
    }
    jacobi_in_place(&mut m)?;
    Ok(Spectrum::from_values((0..n).map(|i| m[[i, i]]).collect()))
}

/// Row-cyclic Jacobi iteration; on success the diagonal holds the
/// eigenvalues.
fn jacobi_in_place(a: &mut Array2<f64>) -> Result<()> {
    let n = a.nrows();
    if n <= 1 {
        return Ok(());
    }
    let target = SWEEP_TOL * (1.0 + frobenius(a));
    for _ in 0..MAX_SWEEPS {
        if off_diagonal_frobenius(a) <= target {
            return Ok(());
        }
        for p in 0..n - 1 {
            for q in p + 1..n {
                let apq = a[[p, q]];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[[q, q]] - a[[p, p]]) / (2.0 * apq);
                // Smaller root of t² + 2θt - 1 = 0, the stable choice.
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                let app = a[[p, p]];
                let aqq = a[[q, q]];
                a[[p, p]] = app - t * apq;
                a[[q, q]] = aqq + t * apq;
                a[[p, q]] = 0.0;
                a[[q, p]] = 0.0;
                for i in 0..n {
                    if i == p || i == q {
                        continue;
                    }
                    let aip = a[[i, p]];
                    let aiq = a[[i, q]];
                    a[[i, p]] = c * aip - s * aiq;
                    a[[i, q]] = s * aip + c * aiq;
                    a[[p, i]] = a[[i, p]];
                    a[[q, i]] = a[[i, q]];
                }
            }
        }
    }
    if off_diagonal_frobenius(a) <= target {
        return Ok(());
    }
    Err(Error::NoConvergence { sweeps: MAX_SWEEPS })
}

/// Rank of a rational matrix, exactly.
pub fn exact_rank(m: &RatMatrix) -> usize {
    m.rank()
}

/// Reduced Betti number together with the two boundary ranks it came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BettiResult {
    pub k: i32,
    pub betti: usize,
    /// rank ∂_k
    pub rank_down: usize,
    /// rank ∂_{k+1}; zero at the top dimension.
    pub rank_up: usize,
}

/// Dimension of the k-th reduced homology over the rationals:
/// `|X(k)| - rank ∂_k - rank ∂_{k+1}`.
pub fn homology_dimension(x: &SimplicialComplex, k: i32) -> Result<BettiResult> {
    let dim = x.dim().ok_or(Error::EmptyComplex)?;
    if k < 0 || k > dim {
        return Err(Error::DimOutOfRange { k, dim });
    }
    let rank_down = RatMatrix::from_int(&boundary_matrix(x, k)?.matrix).rank();
    let rank_up = if k < dim {
        RatMatrix::from_int(&boundary_matrix(x, k + 1)?.matrix).rank()
    } else {
        0
    };
    let betti = x
        .n_faces(k)
        .checked_sub(rank_down + rank_up)
        .expect("boundary ranks cannot exceed the number of faces");
    Ok(BettiResult { k, betti, rank_down, rank_up })
}

/// Number of near-kernel eigenvalues of a positive semidefinite matrix:
/// those strictly below `tol * max(1, λ_max)`.
pub fn numeric_kernel_dim(a: &Array2<f64>, tol: f64) -> Result<usize> {
    let spectrum = eigenvalues_symmetric(a)?;
    let Some(largest) = spectrum.largest() else {
        return Ok(0);
    };
    let cut = tol * largest.max(1.0);
    Ok(spectrum.values().iter().filter(|v| **v < cut).count())
}

/// Default relative tolerance for [`numeric_kernel_dim`].
pub const KERNEL_TOL: f64 = 1e-8;
