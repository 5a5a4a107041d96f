//! Local systems and eigenvalue interlacing verification.
//!
//! A *local system* is a family of symmetric blocks `M_i`, each living on a
//! subset of a common ground set, together with per-block coefficient
//! functions `s_i` whose squares sum to one at every ground element. The
//! assembled global matrix
//!
//! ```text
//!   M[σ, τ] = Σ_{i : σ, τ ∈ I_i} s_i(σ) s_i(τ) M_i[σ, τ]
//! ```
//!
//! is a compression of the block-diagonal direct sum by a matrix with
//! orthonormal columns, so Cauchy interlacing forces `λ_j(M) ≥ λ_j(⊕ M_i)`
//! and `λ^max_j(M) ≤ λ^max_j(⊕ M_i)` for every `j` up to the ground size.
//!
//! The Garland-type systems assemble the symmetrized link Laplacians of all
//! (ℓ)-faces with coefficients `s_η(σ) = ±binom(k+1, ℓ+1)^{-1/2}`, and the
//! assembled matrix collapses to `((k-ℓ) L̄_k + (ℓ+1) R_k) / (k+1)`. The
//! verifiers in this module check those identities, the two sign lemmas
//! they rest on, and the interlacing statements themselves — exactly over
//! the rationals where the identity is rational, in floating point
//! elsewhere.

use ndarray::Array2;
use num::{BigInt, BigRational, One};
use rand::Rng;

use crate::complex::{incidence_sign, Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::laplacian::{laplacian, laplacian_rational, up_degrees, Flavor, Symmetry};
use crate::ratmat::RatMatrix;
use crate::spectral::{eigenvalues_symmetric, Spectrum};
use crate::weight::{rat_int, WeightFunction};

/// Relative tolerance for the per-element normalization Σ s² = 1.
const NORMALIZATION_TOL: f64 = 1e-12;

/// Relative tolerance for floating-point entrywise identity checks.
const ENTRY_TOL: f64 = 1e-10;

/// Relative slack allowed when checking eigenvalue inequalities.
const EIGEN_SLACK_TOL: f64 = 1e-8;

/// One block of a local system: a symmetric matrix on a subset of the
/// ground set, with one coefficient per member.
#[derive(Clone, Debug)]
pub struct Block {
    /// Ground-set indices carried by this block, in the order of the
    /// matrix rows.
    pub members: Vec<usize>,
    pub matrix: Array2<f64>,
    pub coeffs: Vec<f64>,
}

/// A family of blocks over a ground set `0..ground_size`.
#[derive(Clone, Debug)]
pub struct LocalSystem {
    pub ground_size: usize,
    pub blocks: Vec<Block>,
}

/// Outcome of a verification pass.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Verdict {
    pub holds: bool,
    /// Number of individual comparisons made.
    pub checks: usize,
    /// Comparisons that failed (exact mode) or exceeded tolerance (float).
    pub failures: usize,
    /// Worst violation seen, as a magnitude; 0 when everything holds.
    pub max_violation: f64,
}

impl Verdict {
    fn passing(checks: usize) -> Self {
        Verdict { holds: true, checks, failures: 0, max_violation: 0.0 }
    }
}

impl LocalSystem {
    /// Checks structural coherence: member indices in range and unique,
    /// square symmetric blocks, and Σ_i s_i(σ)² = 1 at every ground
    /// element (which also forces every element to be covered).
    pub fn validate(&self) -> Result<()> {
        let mut norms = vec![0.0f64; self.ground_size];
        for (bi, block) in self.blocks.iter().enumerate() {
            let m = block.members.len();
            if block.matrix.nrows() != m || block.matrix.ncols() != m {
                return Err(Error::InvalidSystem(format!(
                    "block {bi} has {m} members but a {}x{} matrix",
                    block.matrix.nrows(),
                    block.matrix.ncols()
                )));
            }
            if block.coeffs.len() != m {
                return Err(Error::InvalidSystem(format!(
                    "block {bi} has {m} members but {} coefficients",
                    block.coeffs.len()
                )));
            }
            let mut seen = std::collections::BTreeSet::new();
            for &g in &block.members {
                if g >= self.ground_size {
                    return Err(Error::InvalidSystem(format!(
                        "block {bi} refers to element {g} outside the ground set"
                    )));
                }
                if !seen.insert(g) {
                    return Err(Error::InvalidSystem(format!(
                        "block {bi} lists element {g} twice"
                    )));
                }
            }
            let scale = 1.0 + block.matrix.iter().fold(0.0f64, |a, v| a.max(v.abs()));
            for i in 0..m {
                for j in 0..m {
                    if (block.matrix[[i, j]] - block.matrix[[j, i]]).abs() > ENTRY_TOL * scale {
                        return Err(Error::InvalidSystem(format!("block {bi} is not symmetric")));
                    }
                }
            }
            for (a, &g) in block.members.iter().enumerate() {
                norms[g] += block.coeffs[a] * block.coeffs[a];
            }
        }
        for (g, n) in norms.iter().enumerate() {
            if (n - 1.0).abs() > NORMALIZATION_TOL {
                return Err(Error::InvalidSystem(format!(
                    "squared coefficients at element {g} sum to {n}, expected 1"
                )));
            }
        }
        Ok(())
    }

    /// The assembled global matrix on the ground set.
    pub fn assemble_global(&self) -> Result<Array2<f64>> {
        self.validate()?;
        let n = self.ground_size;
        let mut m = Array2::zeros((n, n));
        for block in &self.blocks {
            for (a, &ga) in block.members.iter().enumerate() {
                for (b, &gb) in block.members.iter().enumerate() {
                    m[[ga, gb]] += block.coeffs[a] * block.coeffs[b] * block.matrix[[a, b]];
                }
            }
        }
        Ok(m)
    }

    /// The block-diagonal direct sum `⊕ M_i`.
    pub fn direct_sum_matrix(&self) -> Array2<f64> {
        let total: usize = self.blocks.iter().map(|b| b.members.len()).sum();
        let mut m = Array2::zeros((total, total));
        let mut off = 0;
        for block in &self.blocks {
            let s = block.members.len();
            for i in 0..s {
                for j in 0..s {
                    m[[off + i, off + j]] = block.matrix[[i, j]];
                }
            }
            off += s;
        }
        m
    }

    /// Spectrum of the direct sum, eigensolving block by block.
    pub fn direct_sum_spectrum(&self) -> Result<Spectrum> {
        let parts: Vec<Spectrum> = self
            .blocks
            .iter()
            .map(|b| eigenvalues_symmetric(&b.matrix))
            .collect::<Result<_>>()?;
        Ok(Spectrum::direct_sum(&parts))
    }

    /// The projection matrix `S` with `S[(i,σ), τ] = s_i(σ) [σ = τ]`, rows
    /// ordered block by block. Its columns are orthonormal exactly when the
    /// normalization invariant holds, and `Sᵀ (⊕ M_i) S` equals the
    /// assembled global matrix.
    pub fn projection_matrix(&self) -> Result<Array2<f64>> {
        self.validate()?;
        let rows: usize = self.blocks.iter().map(|b| b.members.len()).sum();
        let mut s = Array2::zeros((rows, self.ground_size));
        let mut off = 0;
        for block in &self.blocks {
            for (a, &g) in block.members.iter().enumerate() {
                s[[off + a, g]] = block.coeffs[a];
            }
            off += block.members.len();
        }
        Ok(s)
    }
}

/// Checks `λ_j(M) ≥ λ_j(⊕ M_i)` and `λ^max_j(M) ≤ λ^max_j(⊕ M_i)` for all
/// `j` up to the ground size, within a relative slack.
pub fn verify_interlacing(sys: &LocalSystem) -> Result<Verdict> {
    let global = sys.assemble_global()?;
    let spec_m = eigenvalues_symmetric(&global)?;
    let spec_d = sys.direct_sum_spectrum()?;
    let n = sys.ground_size;
    if spec_d.len() < n {
        return Err(Error::InvalidSystem(format!(
            "direct sum carries {} eigenvalues for a ground set of {n}",
            spec_d.len()
        )));
    }
    let scale = 1.0
        + spec_m.values().iter().chain(spec_d.values()).fold(0.0f64, |a, v| a.max(v.abs()));
    let tol = EIGEN_SLACK_TOL * scale;
    let mut verdict = Verdict::passing(0);
    for j in 1..=n {
        for violation in [
            spec_d.lambda_min(j) - spec_m.lambda_min(j),
            spec_m.lambda_max(j) - spec_d.lambda_max(j),
        ] {
            verdict.checks += 1;
            if violation > tol {
                verdict.failures += 1;
                verdict.holds = false;
            }
            verdict.max_violation = verdict.max_violation.max(violation);
        }
    }
    Ok(verdict)
}

/// Exact representation of the Garland coefficient
/// `s_η(σ) = sign · binom(k+1, ℓ+1)^{-1/2}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SCoefficient {
    pub sign: i32,
    pub binom: u64,
}

impl SCoefficient {
    pub fn value(&self) -> f64 {
        self.sign as f64 / (self.binom as f64).sqrt()
    }

    /// The exact square, `1 / binom`.
    pub fn squared(&self) -> BigRational {
        BigRational::new(BigInt::one(), BigInt::from(self.binom))
    }

    /// The exact product of two coefficients with the same binomial:
    /// `± 1 / binom`.
    pub fn product(&self, other: &SCoefficient) -> BigRational {
        assert_eq!(self.binom, other.binom, "coefficients from different systems");
        BigRational::new(BigInt::from(self.sign * other.sign), BigInt::from(self.binom))
    }
}

pub(crate) fn binomial(n: u64, r: u64) -> u64 {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    let mut acc: u64 = 1;
    for i in 0..r {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// The coefficient `s_η(σ)` for `η ⊆ σ` with `|η| = ℓ+1` and `|σ| = k+1`:
/// magnitude `binom(k+1, ℓ+1)^{-1/2}` and sign `(-1)^m` where `m` counts
/// the pairs `(u, v) ∈ (σ∖η) × η` with `u > v`. The degenerate case
/// `ℓ = k` forces `σ = η` and yields 1; the one-step identity consumes it.
pub fn s_coefficient(eta: &Face, sigma: &Face, k: i32, l: i32) -> Result<SCoefficient> {
    if l < 0 || l > k {
        return Err(Error::InvalidParameter(format!("need 0 ≤ ℓ ≤ k, got k = {k}, ℓ = {l}")));
    }
    if eta.dim() != l || sigma.dim() != k || !eta.is_subset_of(sigma) {
        return Err(Error::InvalidParameter(format!(
            "s-coefficient needs η ⊆ σ with dim η = {l}, dim σ = {k}; got η = {eta}, σ = {sigma}"
        )));
    }
    let mut inversions = 0u64;
    for u in sigma.difference(eta).vertices() {
        for v in eta.vertices() {
            if u > v {
                inversions += 1;
            }
        }
    }
    let sign = if inversions % 2 == 0 { 1 } else { -1 };
    Ok(SCoefficient { sign, binom: binomial(k as u64 + 1, l as u64 + 1) })
}

fn check_pair(x: &SimplicialComplex, k: i32, l: i32) -> Result<i32> {
    let dim = x.dim().ok_or(Error::EmptyComplex)?;
    if !(0 <= l && l < k && k <= dim) {
        return Err(Error::InvalidParameter(format!(
            "need 0 ≤ ℓ < k ≤ dim = {dim}, got k = {k}, ℓ = {l}"
        )));
    }
    Ok(dim)
}

/// The Garland-type local system at `(k, ℓ)`: one block per ℓ-face η whose
/// link reaches dimension `k-ℓ-1`, carrying the symmetrized total link
/// Laplacian re-indexed along `ρ ↦ ρ ∪ η`, with coefficients `s_η`.
pub fn garland_system(
    x: &SimplicialComplex,
    w: &WeightFunction,
    k: i32,
    l: i32,
) -> Result<LocalSystem> {
    check_pair(x, k, l)?;
    let mut blocks = Vec::new();
    for eta in x.faces_of_dim(l) {
        let lk = x.link(eta)?;
        if lk.dim().map_or(true, |d| d < k - l - 1) {
            continue;
        }
        let weta = w.link(x, eta)?;
        let lap = laplacian(&lk, &weta, k - l - 1, Flavor::Total, Symmetry::Symmetrized)?;
        let mut members = Vec::new();
        let mut coeffs = Vec::new();
        for rho in lk.faces_of_dim(k - l - 1) {
            let sigma = rho.union(eta);
            members.push(x.position(&sigma).expect("link face unions stay in the complex"));
            coeffs.push(s_coefficient(eta, &sigma, k, l)?.value());
        }
        blocks.push(Block { members, matrix: lap.matrix, coeffs });
    }
    Ok(LocalSystem { ground_size: x.n_faces(k), blocks })
}

/// Mode for the entrywise identity verifiers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerifyMode {
    /// Conjugate the identity by `W_k^{1/2}` so every entry is rational,
    /// and compare exactly.
    Exact,
    /// Compare the symmetrized floating-point matrices entrywise.
    Float,
}

/// Checks the up-Laplacian assembly identity at `(k, ℓ)`:
///
/// ```text
///   Σ_η s_η(σ) s_η(τ) (k+1) L̄⁺(lk η)[σ∖η, τ∖η] = (k-ℓ) L̄⁺_k[σ,τ] + (ℓ+1) R_k[σ,τ]
/// ```
pub fn verify_prop_upper(
    x: &SimplicialComplex,
    w: &WeightFunction,
    k: i32,
    l: i32,
    mode: VerifyMode,
) -> Result<Verdict> {
    verify_prop(x, w, k, l, mode, Flavor::Up)
}

/// Checks the down-Laplacian assembly identity at `(k, ℓ)`:
///
/// ```text
///   Σ_η s_η(σ) s_η(τ) (k+1) L̄⁻(lk η)[σ∖η, τ∖η] = (k-ℓ) L̄⁻_k[σ,τ]
/// ```
pub fn verify_prop_lower(
    x: &SimplicialComplex,
    w: &WeightFunction,
    k: i32,
    l: i32,
    mode: VerifyMode,
) -> Result<Verdict> {
    verify_prop(x, w, k, l, mode, Flavor::Down)
}

fn verify_prop(
    x: &SimplicialComplex,
    w: &WeightFunction,
    k: i32,
    l: i32,
    mode: VerifyMode,
    flavor: Flavor,
) -> Result<Verdict> {
    check_pair(x, k, l)?;
    match mode {
        VerifyMode::Exact => verify_prop_exact(x, w, k, l, flavor),
        VerifyMode::Float => verify_prop_float(x, w, k, l, flavor),
    }
}

/// Exact mode. Conjugating the symmetrized identity by `W_k^{1/2}` turns
/// every symmetrized Laplacian into its operator flavor, whose entries are
/// rational, while `s_η(σ) s_η(τ)` is `±1/binom`: the whole identity
/// becomes an equation between rational matrices and is checked with zero
/// tolerance.
fn verify_prop_exact(
    x: &SimplicialComplex,
    w: &WeightFunction,
    k: i32,
    l: i32,
    flavor: Flavor,
) -> Result<Verdict> {
    let n = x.n_faces(k);
    let mut lhs = RatMatrix::zeros(n, n);
    let k_plus_1 = rat_int(k as i64 + 1);
    for eta in x.faces_of_dim(l) {
        let lk = x.link(eta)?;
        if lk.dim().map_or(true, |d| d < k - l - 1) {
            continue;
        }
        let weta = w.link(x, eta)?;
        let link_op = laplacian_rational(&lk, &weta, k - l - 1, flavor)?;
        let link_faces = lk.faces_of_dim(k - l - 1);
        let globals: Vec<usize> = link_faces
            .iter()
            .map(|rho| x.position(&rho.union(eta)).expect("link face unions stay in the complex"))
            .collect();
        let coeffs: Vec<SCoefficient> = link_faces
            .iter()
            .map(|rho| s_coefficient(eta, &rho.union(eta), k, l))
            .collect::<Result<_>>()?;
        for (a, &ga) in globals.iter().enumerate() {
            for (b, &gb) in globals.iter().enumerate() {
                let term = coeffs[a].product(&coeffs[b]) * &k_plus_1 * &link_op[(a, b)];
                let cur = lhs[(ga, gb)].clone();
                lhs[(ga, gb)] = cur + term;
            }
        }
    }
    let mut rhs = laplacian_rational(x, w, k, flavor)?.scale(&rat_int((k - l) as i64));
    if flavor == Flavor::Up {
        let r = RatMatrix::from_diag(&up_degrees(x, w, k)?);
        rhs = rhs.add(&r.scale(&rat_int(l as i64 + 1)));
    }
    let mut verdict = Verdict::passing(n * n);
    for i in 0..n {
        for j in 0..n {
            if lhs[(i, j)] != rhs[(i, j)] {
                verdict.failures += 1;
                verdict.holds = false;
                let diff = crate::weight::rat_to_f64(&(&lhs[(i, j)] - &rhs[(i, j)]))?.abs();
                verdict.max_violation = verdict.max_violation.max(diff);
            }
        }
    }
    Ok(verdict)
}

fn verify_prop_float(
    x: &SimplicialComplex,
    w: &WeightFunction,
    k: i32,
    l: i32,
    flavor: Flavor,
) -> Result<Verdict> {
    let n = x.n_faces(k);
    let mut lhs: Array2<f64> = Array2::zeros((n, n));
    for eta in x.faces_of_dim(l) {
        let lk = x.link(eta)?;
        if lk.dim().map_or(true, |d| d < k - l - 1) {
            continue;
        }
        let weta = w.link(x, eta)?;
        let sym = laplacian(&lk, &weta, k - l - 1, flavor, Symmetry::Symmetrized)?;
        let link_faces = lk.faces_of_dim(k - l - 1);
        let globals: Vec<usize> = link_faces
            .iter()
            .map(|rho| x.position(&rho.union(eta)).expect("link face unions stay in the complex"))
            .collect();
        let coeffs: Vec<f64> = link_faces
            .iter()
            .map(|rho| s_coefficient(eta, &rho.union(eta), k, l).map(|c| c.value()))
            .collect::<Result<_>>()?;
        for (a, &ga) in globals.iter().enumerate() {
            for (b, &gb) in globals.iter().enumerate() {
                lhs[[ga, gb]] += coeffs[a] * coeffs[b] * (k as f64 + 1.0) * sym.matrix[[a, b]];
            }
        }
    }
    let mut rhs = laplacian(x, w, k, flavor, Symmetry::Symmetrized)?.matrix;
    rhs.mapv_inplace(|v| v * (k - l) as f64);
    if flavor == Flavor::Up {
        let r = crate::laplacian::degree_matrix(x, w, k)?.matrix;
        rhs = rhs + r.mapv(|v| v * (l as f64 + 1.0));
    }
    let scale = 1.0 + rhs.iter().fold(0.0f64, |a, v| a.max(v.abs()));
    let tol = ENTRY_TOL * scale;
    let mut verdict = Verdict::passing(n * n);
    for i in 0..n {
        for j in 0..n {
            let diff = (lhs[[i, j]] - rhs[[i, j]]).abs();
            if diff > tol {
                verdict.failures += 1;
                verdict.holds = false;
            }
            verdict.max_violation = verdict.max_violation.max(diff);
        }
    }
    Ok(verdict)
}

/// Exhaustively checks the facet sign identity on `X(k)`: whenever two
/// k-faces σ ≠ τ share all but one vertex and their union is a face,
///
/// ```text
///   (σ∪τ : σ)(σ∪τ : τ) = -(σ : σ∩τ)(τ : σ∩τ)
/// ```
pub fn verify_sign_product(x: &SimplicialComplex, k: i32) -> Result<Verdict> {
    let dim = x.dim().ok_or(Error::EmptyComplex)?;
    if k < 0 || k > dim {
        return Err(Error::DimOutOfRange { k, dim });
    }
    let faces = x.faces_of_dim(k);
    let mut verdict = Verdict::passing(0);
    for sigma in faces {
        for tau in faces {
            if sigma == tau {
                continue;
            }
            let inter = sigma.intersection(tau);
            if inter.card() != k as usize {
                continue;
            }
            let union = sigma.union(tau);
            if !x.contains(&union) {
                continue;
            }
            verdict.checks += 1;
            let lhs = incidence_sign(&union, sigma)? * incidence_sign(&union, tau)?;
            let rhs = -incidence_sign(sigma, &inter)? * incidence_sign(tau, &inter)?;
            if lhs != rhs {
                verdict.failures += 1;
                verdict.holds = false;
                verdict.max_violation = 2.0;
            }
        }
    }
    Ok(verdict)
}

/// Exhaustively checks the one-step coefficient identity: for η an ℓ-face,
/// τ a k-face over η, `u ∈ τ∖η` and `σ = τ∖{u}`,
///
/// ```text
///   s_η(τ) (τ∖η : σ∖η) = sqrt((k-ℓ)/(k+1)) · s_η(σ) (τ : σ)
/// ```
///
/// Both sides have rational squares, so signs and squared magnitudes are
/// compared exactly.
pub fn verify_sign1(x: &SimplicialComplex, k: i32, l: i32) -> Result<Verdict> {
    check_pair(x, k, l)?;
    let mut verdict = Verdict::passing(0);
    // Squared magnitudes: 1/binom(k+1, ℓ+1) vs (k-ℓ)/(k+1) · 1/binom(k, ℓ+1).
    let lhs_sq = BigRational::new(BigInt::one(), BigInt::from(binomial(k as u64 + 1, l as u64 + 1)));
    let rhs_sq = BigRational::new(BigInt::from(k - l), BigInt::from(k + 1))
        * BigRational::new(BigInt::one(), BigInt::from(binomial(k as u64, l as u64 + 1)));
    for eta in x.faces_of_dim(l) {
        for tau in x.faces_of_dim(k) {
            if !eta.is_subset_of(tau) {
                continue;
            }
            for u in tau.difference(eta).vertices() {
                let sigma = tau.without_vertex(*u);
                verdict.checks += 1;
                let lhs_sign = s_coefficient(eta, tau, k, l)?.sign
                    * incidence_sign(&tau.difference(eta), &sigma.difference(eta))?;
                let rhs_sign =
                    s_coefficient(eta, &sigma, k - 1, l)?.sign * incidence_sign(tau, &sigma)?;
                if lhs_sign != rhs_sign || lhs_sq != rhs_sq {
                    verdict.failures += 1;
                    verdict.holds = false;
                    verdict.max_violation = 1.0;
                }
            }
        }
    }
    Ok(verdict)
}

/// Exhaustively checks the two-face coefficient identity: for η an ℓ-face
/// and σ ≠ τ two k-faces over η sharing all but one vertex,
///
/// ```text
///   (σ : σ∩τ)(τ : σ∩τ)
///     = binom(k+1, ℓ+1) · s_η(σ) s_η(τ) · (σ∖η : (σ∩τ)∖η)(τ∖η : (σ∩τ)∖η)
/// ```
///
/// The binomial cancels the coefficient magnitudes, so this is a pure sign
/// comparison, checked exactly.
pub fn verify_sign2(x: &SimplicialComplex, k: i32, l: i32) -> Result<Verdict> {
    check_pair(x, k, l)?;
    let mut verdict = Verdict::passing(0);
    for eta in x.faces_of_dim(l) {
        let over_eta: Vec<&Face> =
            x.faces_of_dim(k).iter().filter(|f| eta.is_subset_of(f)).collect();
        for sigma in &over_eta {
            for tau in &over_eta {
                if sigma == tau {
                    continue;
                }
                let inter = sigma.intersection(tau);
                if inter.card() != k as usize || !eta.is_subset_of(&inter) {
                    continue;
                }
                verdict.checks += 1;
                let lhs = incidence_sign(sigma, &inter)? * incidence_sign(tau, &inter)?;
                let s_pair = s_coefficient(eta, sigma, k, l)?.sign
                    * s_coefficient(eta, tau, k, l)?.sign;
                let rhs = s_pair
                    * incidence_sign(&sigma.difference(eta), &inter.difference(eta))?
                    * incidence_sign(&tau.difference(eta), &inter.difference(eta))?;
                if lhs != rhs {
                    verdict.failures += 1;
                    verdict.holds = false;
                    verdict.max_violation = 2.0;
                }
            }
        }
    }
    Ok(verdict)
}

/// Oracle for Cauchy interlacing: for symmetric `A` and `S` with
/// orthonormal columns, `B = SᵀAS` satisfies `λ_j(B) ≥ λ_j(A)` and
/// `λ^max_j(B) ≤ λ^max_j(A)`.
pub fn verify_cauchy(a: &Array2<f64>, s: &Array2<f64>) -> Result<Verdict> {
    if a.nrows() != a.ncols() {
        return Err(Error::NotSquare { rows: a.nrows(), cols: a.ncols() });
    }
    if s.nrows() != a.nrows() || s.ncols() > s.nrows() {
        return Err(Error::ShapeMismatch(format!(
            "projection is {}x{} against a matrix of order {}",
            s.nrows(),
            s.ncols(),
            a.nrows()
        )));
    }
    let m = s.ncols();
    let gram = s.t().dot(s);
    for i in 0..m {
        for j in 0..m {
            let expect = if i == j { 1.0 } else { 0.0 };
            if (gram[[i, j]] - expect).abs() > EIGEN_SLACK_TOL {
                return Err(Error::InvalidSystem(
                    "projection columns are not orthonormal".into(),
                ));
            }
        }
    }
    let b = s.t().dot(a).dot(s);
    let spec_a = eigenvalues_symmetric(a)?;
    let spec_b = eigenvalues_symmetric(&b)?;
    let scale = 1.0
        + spec_a.values().iter().chain(spec_b.values()).fold(0.0f64, |x, v| x.max(v.abs()));
    let tol = EIGEN_SLACK_TOL * scale;
    let mut verdict = Verdict::passing(0);
    for j in 1..=m {
        for violation in [
            spec_a.lambda_min(j) - spec_b.lambda_min(j),
            spec_b.lambda_max(j) - spec_a.lambda_max(j),
        ] {
            verdict.checks += 1;
            if violation > tol {
                verdict.failures += 1;
                verdict.holds = false;
            }
            verdict.max_violation = verdict.max_violation.max(violation);
        }
    }
    Ok(verdict)
}

/// Oracle for the additive eigenvalue bound: for symmetric `A`, `B` of the
/// same order and every `j`,
/// `λ_j(A) + λ_min(B) ≤ λ_j(A+B) ≤ λ_j(A) + λ_max(B)`.
pub fn verify_weyl(a: &Array2<f64>, b: &Array2<f64>) -> Result<Verdict> {
    if a.nrows() != a.ncols() || b.nrows() != b.ncols() || a.nrows() != b.nrows() {
        return Err(Error::ShapeMismatch(format!(
            "need two symmetric matrices of equal order, got {}x{} and {}x{}",
            a.nrows(),
            a.ncols(),
            b.nrows(),
            b.ncols()
        )));
    }
    let n = a.nrows();
    let sum = a + b;
    let spec_a = eigenvalues_symmetric(a)?;
    let spec_b = eigenvalues_symmetric(b)?;
    let spec_sum = eigenvalues_symmetric(&sum)?;
    if n == 0 {
        return Ok(Verdict::passing(0));
    }
    let scale = 1.0
        + spec_a
            .values()
            .iter()
            .chain(spec_b.values())
            .chain(spec_sum.values())
            .fold(0.0f64, |x, v| x.max(v.abs()));
    let tol = EIGEN_SLACK_TOL * scale;
    let bmin = spec_b.lambda_min(1);
    let bmax = spec_b.lambda_max(1);
    let mut verdict = Verdict::passing(0);
    for j in 1..=n {
        for violation in [
            spec_a.lambda_min(j) + bmin - spec_sum.lambda_min(j),
            spec_sum.lambda_min(j) - spec_a.lambda_min(j) - bmax,
        ] {
            verdict.checks += 1;
            if violation > tol {
                verdict.failures += 1;
                verdict.holds = false;
            }
            verdict.max_violation = verdict.max_violation.max(violation);
        }
    }
    Ok(verdict)
}

/// A random symmetric matrix with entries uniform in `[-scale, scale]`.
pub fn random_symmetric(rng: &mut impl Rng, n: usize, scale: f64) -> Array2<f64> {
    let mut m = Array2::zeros((n, n));
    for i in 0..n {
        for j in i..n {
            let v = rng.gen_range(-scale..=scale);
            m[[i, j]] = v;
            m[[j, i]] = v;
        }
    }
    m
}

/// A random matrix with `m ≤ n` orthonormal columns, by Gram-Schmidt on
/// Gaussian-ish uniform columns.
pub fn random_orthonormal(rng: &mut impl Rng, n: usize, m: usize) -> Array2<f64> {
    assert!(m <= n, "cannot fit {m} orthonormal columns in dimension {n}");
    let mut s: Array2<f64> = Array2::zeros((n, m));
    let mut col = 0;
    while col < m {
        let mut v: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..=1.0)).collect();
        for prev in 0..col {
            let dot: f64 = (0..n).map(|i| v[i] * s[[i, prev]]).sum();
            for i in 0..n {
                v[i] -= dot * s[[i, prev]];
            }
        }
        let norm: f64 = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm < 1e-6 {
            continue;
        }
        for i in 0..n {
            s[[i, col]] = v[i] / norm;
        }
        col += 1;
    }
    s
}

/// A random valid local system: a handful of blocks over a small ground
/// set, with positive coefficients normalized per element. Elements left
/// uncovered by the random draw get a dedicated singleton block, so the
/// normalization invariant always holds.
pub fn random_local_system(rng: &mut impl Rng) -> LocalSystem {
    let ground = rng.gen_range(2..=10usize);
    let n_blocks = rng.gen_range(1..=4usize);
    let mut blocks = Vec::new();
    for _ in 0..n_blocks {
        let size = rng.gen_range(1..=ground.min(6));
        let mut members: Vec<usize> = (0..ground).collect();
        for i in (1..members.len()).rev() {
            members.swap(i, rng.gen_range(0..=i));
        }
        members.truncate(size);
        members.sort_unstable();
        let matrix = random_symmetric(rng, size, 2.0);
        let coeffs: Vec<f64> = (0..size).map(|_| rng.gen_range(0.1..=1.5)).collect();
        blocks.push(Block { members, matrix, coeffs });
    }
    let mut covered = vec![false; ground];
    for b in &blocks {
        for &g in &b.members {
            covered[g] = true;
        }
    }
    for (g, was) in covered.iter().enumerate() {
        if !was {
            blocks.push(Block {
                members: vec![g],
                matrix: random_symmetric(rng, 1, 2.0),
                coeffs: vec![1.0],
            });
        }
    }
    // Normalize so the squared coefficients at each element sum to one.
    let mut norms = vec![0.0f64; ground];
    for b in &blocks {
        for (a, &g) in b.members.iter().enumerate() {
            norms[g] += b.coeffs[a] * b.coeffs[a];
        }
    }
    for b in &mut blocks {
        for (a, &g) in b.members.iter().enumerate() {
            b.coeffs[a] /= norms[g].sqrt();
        }
    }
    LocalSystem { ground_size: ground, blocks }
}
