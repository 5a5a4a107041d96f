//! Boundary matrices and weighted Laplacians.
//!
//! For a complex `X` with positive weight `w` and `W_k = diag(w on X(k))`,
//! the signed boundary matrix `∂_k` maps k-chains to (k-1)-chains; with the
//! empty face indexing the single row of `∂_0`, the chain complex is the
//! augmented (reduced) one. The three operators at dimension `k` are
//!
//! ```text
//!   up    L⁺_k = W_k⁻¹ ∂_{k+1} W_{k+1} ∂ᵀ_{k+1}        (zero when k = dim X)
//!   down  L⁻_k = ∂ᵀ_k W_{k-1}⁻¹ ∂_k W_k
//!   total L_k  = L⁺_k + L⁻_k
//! ```
//!
//! Each also comes in a symmetrized flavor `W_k^{1/2} · L · W_k^{-1/2}`,
//! which is a symmetric positive semidefinite matrix with the same spectrum.
//! Operator-flavor entries are rational whenever the weights are, so that
//! flavor is also available exactly as a [`RatMatrix`].

use ndarray::Array2;
use num::{BigRational, Zero};

use crate::complex::{incidence_sign, SimplicialComplex};
use crate::error::{Error, Result};
use crate::ratmat::RatMatrix;
use crate::weight::{rat_to_f64, WeightFunction};

/// Which of the three operators at dimension `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Flavor {
    Up,
    Down,
    Total,
}

/// Basis flavor: the raw (generally non-symmetric) operator, or its
/// conjugation by `W_k^{1/2}`, which is symmetric with the same spectrum.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Symmetry {
    Operator,
    Symmetrized,
}

/// A dense Laplacian indexed by the faces of dimension `k` in lexicographic
/// order.
#[derive(Clone, Debug)]
pub struct LaplacianMatrix {
    pub k: i32,
    pub flavor: Flavor,
    pub symmetry: Symmetry,
    pub matrix: Array2<f64>,
}

/// The signed boundary matrix `∂_k`, rows indexed by `X(k-1)` and columns by
/// `X(k)`. Entries are in `{-1, 0, 1}` with exactly `k+1` nonzeros per
/// column.
#[derive(Clone, Debug)]
pub struct BoundaryMatrix {
    pub k: i32,
    pub matrix: Array2<i64>,
}

fn checked_dim(x: &SimplicialComplex) -> Result<i32> {
    x.dim().ok_or(Error::EmptyComplex)
}

fn check_k_range(x: &SimplicialComplex, k: i32, low: i32) -> Result<i32> {
    let dim = checked_dim(x)?;
    if k < low || k > dim {
        return Err(Error::DimOutOfRange { k, dim });
    }
    Ok(dim)
}

/// Builds `∂_k` for `0 ≤ k ≤ dim X`.
pub fn boundary_matrix(x: &SimplicialComplex, k: i32) -> Result<BoundaryMatrix> {
    check_k_range(x, k, 0)?;
    let rows = x.faces_of_dim(k - 1);
    let cols = x.faces_of_dim(k);
    let mut m = Array2::zeros((rows.len(), cols.len()));
    for (j, tau) in cols.iter().enumerate() {
        for v in tau.vertices() {
            let sigma = tau.without_vertex(*v);
            let i = x.position(&sigma).expect("facet of a face is a face");
            m[[i, j]] = incidence_sign(tau, &sigma)? as i64;
        }
    }
    Ok(BoundaryMatrix { k, matrix: m })
}

/// The exact operator-flavor Laplacian over the rationals.
pub fn laplacian_rational(
    x: &SimplicialComplex,
    w: &WeightFunction,
    k: i32,
    flavor: Flavor,
) -> Result<RatMatrix> {
    let dim = check_k_range(x, k, 0)?;
    let n = x.n_faces(k);
    match flavor {
        Flavor::Up => {
            if k == dim {
                return Ok(RatMatrix::zeros(n, n));
            }
            let b = RatMatrix::from_int(&boundary_matrix(x, k + 1)?.matrix);
            let w_k_inv = invert_all(&w.diag(x, k)?);
            let w_up = w.diag(x, k + 1)?;
            Ok(b.scale_cols(&w_up).matmul(&b.transpose()).scale_rows(&w_k_inv))
        }
        Flavor::Down => {
            let b = RatMatrix::from_int(&boundary_matrix(x, k)?.matrix);
            let w_low_inv = invert_all(&w.diag(x, k - 1)?);
            let w_k = w.diag(x, k)?;
            Ok(b.transpose().matmul(&b.scale_rows(&w_low_inv)).scale_cols(&w_k))
        }
        Flavor::Total => {
            let up = laplacian_rational(x, w, k, Flavor::Up)?;
            let down = laplacian_rational(x, w, k, Flavor::Down)?;
            Ok(up.add(&down))
        }
    }
}

fn invert_all(diag: &[BigRational]) -> Vec<BigRational> {
    diag.iter().map(|v| v.recip()).collect()
}

/// Builds the requested Laplacian as a dense float matrix.
///
/// The operator flavor converts the exact rational matrix; the symmetrized
/// flavor rescales entry `(i, j)` by `sqrt(w_i / w_j)` and averages away the
/// rounding asymmetry, so the result is exactly symmetric.
pub fn laplacian(
    x: &SimplicialComplex,
    w: &WeightFunction,
    k: i32,
    flavor: Flavor,
    symmetry: Symmetry,
) -> Result<LaplacianMatrix> {
    let rational = laplacian_rational(x, w, k, flavor)?;
    let matrix = match symmetry {
        Symmetry::Operator => rational.to_f64()?,
        Symmetry::Symmetrized => {
            let sqrt_w: Vec<f64> = w
                .diag(x, k)?
                .iter()
                .map(|v| rat_to_f64(v).map(f64::sqrt))
                .collect::<Result<_>>()?;
            let raw = rational.to_f64()?;
            let n = raw.nrows();
            let mut m = Array2::zeros((n, n));
            for i in 0..n {
                for j in 0..n {
                    m[[i, j]] = raw[[i, j]] * sqrt_w[i] / sqrt_w[j];
                }
            }
            let mut sym = Array2::zeros((n, n));
            for i in 0..n {
                for j in 0..n {
                    sym[[i, j]] = 0.5 * (m[[i, j]] + m[[j, i]]);
                }
            }
            sym
        }
    };
    Ok(LaplacianMatrix { k, flavor, symmetry, matrix })
}

/// Builds the symmetrized Laplacian entry by entry from the closed-form
/// expressions, bypassing the boundary matrices:
///
/// ```text
/// up:   diag  Σ_{v ∈ N(σ)} w(σ∪v)/w(σ)
///       off   -(σ:σ∩τ)(τ:σ∩τ) · w(σ∪τ)/sqrt(w(σ)w(τ))   if |σ∩τ| = k, σ∪τ ∈ X
/// down: diag  Σ_{v ∈ σ} w(σ)/w(σ∖v)
///       off   +(σ:σ∩τ)(τ:σ∩τ) · sqrt(w(σ)w(τ))/w(σ∩τ)   if |σ∩τ| = k
/// ```
///
/// where σ, τ run over `X(k)` and N(σ) is the neighbor set of σ.
pub fn laplacian_by_formula(
    x: &SimplicialComplex,
    w: &WeightFunction,
    k: i32,
    flavor: Flavor,
) -> Result<LaplacianMatrix> {
    check_k_range(x, k, 0)?;
    let faces = x.faces_of_dim(k);
    let n = faces.len();
    // Two distinct k-faces interact only when they share all but one vertex.
    let shared_card = k as usize;
    let mut m = Array2::zeros((n, n));
    for (i, sigma) in faces.iter().enumerate() {
        let w_sigma = w.get_f64(sigma)?;
        let mut diag = 0.0;
        if matches!(flavor, Flavor::Up | Flavor::Total) {
            for v in x.neighbors(sigma)? {
                diag += w.get_f64(&sigma.with_vertex(v))? / w_sigma;
            }
        }
        if matches!(flavor, Flavor::Down | Flavor::Total) {
            for v in sigma.vertices() {
                diag += w_sigma / w.get_f64(&sigma.without_vertex(*v))?;
            }
        }
        m[[i, i]] = diag;
        for (j, tau) in faces.iter().enumerate().skip(i + 1) {
            let inter = sigma.intersection(tau);
            if inter.card() != shared_card {
                continue;
            }
            let w_tau = w.get_f64(tau)?;
            let signs =
                (incidence_sign(sigma, &inter)? * incidence_sign(tau, &inter)?) as f64;
            let mut entry = 0.0;
            if matches!(flavor, Flavor::Up | Flavor::Total) {
                let union = sigma.union(tau);
                if x.contains(&union) {
                    entry -= signs * w.get_f64(&union)? / (w_sigma * w_tau).sqrt();
                }
            }
            if matches!(flavor, Flavor::Down | Flavor::Total) {
                entry += signs * (w_sigma * w_tau).sqrt() / w.get_f64(&inter)?;
            }
            m[[i, j]] = entry;
            m[[j, i]] = entry;
        }
    }
    Ok(LaplacianMatrix { k, flavor, symmetry: Symmetry::Symmetrized, matrix: m })
}

/// The weighted up-degree of every face of dimension `k`, in face order:
/// `deg(σ) = Σ_{v ∈ N(σ)} w(σ∪v)/w(σ)`. This is the diagonal of the degree
/// matrix `R_k` and of the up Laplacian.
pub fn up_degrees(
    x: &SimplicialComplex,
    w: &WeightFunction,
    k: i32,
) -> Result<Vec<BigRational>> {
    check_k_range(x, k, 0)?;
    x.faces_of_dim(k)
        .iter()
        .map(|sigma| {
            let w_sigma = w.get(sigma)?;
            let mut acc = BigRational::zero();
            for v in x.neighbors(sigma)? {
                acc += w.get(&sigma.with_vertex(v))? / w_sigma;
            }
            Ok(acc)
        })
        .collect()
}

/// The diagonal degree matrix `R_k`.
pub fn degree_matrix(
    x: &SimplicialComplex,
    w: &WeightFunction,
    k: i32,
) -> Result<LaplacianMatrix> {
    let degs = up_degrees(x, w, k)?;
    let n = degs.len();
    let mut m = Array2::zeros((n, n));
    for (i, d) in degs.iter().enumerate() {
        m[[i, i]] = rat_to_f64(d)?;
    }
    Ok(LaplacianMatrix { k, flavor: Flavor::Up, symmetry: Symmetry::Symmetrized, matrix: m })
}

/// The largest weighted up-degree over `X(k)`, exactly.
pub fn max_up_degree(
    x: &SimplicialComplex,
    w: &WeightFunction,
    k: i32,
) -> Result<BigRational> {
    let degs = up_degrees(x, w, k)?;
    degs.into_iter().max().ok_or(Error::NoFaces { k })
}

/// The smallest weighted up-degree over `X(k)`, exactly.
pub fn min_up_degree(
    x: &SimplicialComplex,
    w: &WeightFunction,
    k: i32,
) -> Result<BigRational> {
    let degs = up_degrees(x, w, k)?;
    degs.into_iter().min().ok_or(Error::NoFaces { k })
}
