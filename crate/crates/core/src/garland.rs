//! Garland-style spectral bounds on homology.
//!
//! The machinery: eigenvalues of the weighted k-Laplacian of a complex are
//! bounded below, index by index, by eigenvalues of the direct sum of
//! (k-ℓ-1)-Laplacians over the links of ℓ-faces,
//!
//! ```text
//!   (k-ℓ) λ_i(L̄_k) ≥ (k+1) λ_i(⊕_η L̄(lk η)) - (ℓ+1) Δ_k
//! ```
//!
//! where `Δ_k` is the largest weighted up-degree and η ranges over ℓ-faces
//! whose link reaches dimension k-ℓ-1. Counting direct-sum eigenvalues at
//! most `(ℓ+1) Δ_k / (k+1)` then bounds the k-th reduced Betti number,
//! and the same interlacing argument run on largest eigenvalues bounds the
//! up-Laplacian spectrum from above via the smallest up-degree `δ_k`.
//!
//! On a pure d-dimensional complex with cofacet weights every up-degree is
//! exactly `d-k`, which recovers the classical vanishing criterion: if
//! every link gap exceeds `(ℓ+1)(d-k)/(k+1)`, the k-th homology vanishes.
//!
//! Spectra are floating point, so every report carries the tolerances it
//! used alongside the exact Betti number, making soundness self-auditing.

use num::BigRational;
use rayon::prelude::*;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::laplacian::{laplacian, max_up_degree, min_up_degree, Flavor, Symmetry};
use crate::spectral::{eigenvalues_symmetric, homology_dimension, Spectrum};
use crate::weight::{rat_to_f64, WeightFunction};

/// Relative slack allowed before an eigenvalue inequality counts as
/// violated.
const SLACK_TOL: f64 = 1e-8;

/// Default relative tolerance for counting eigenvalues at or below the
/// homology threshold. Counting is inclusive, so the tolerance errs toward
/// overcounting: undercounting could miss kernel eigenvalues sitting
/// exactly at the threshold and break soundness.
const THRESHOLD_TOL: f64 = 1e-9;

/// Relative guard added to the vanishing threshold before predicting
/// trivial homology; a gap inside the guard band is treated as
/// inconclusive rather than as a prediction.
const PREDICTION_GUARD: f64 = 1e-9;

fn check_pair(x: &SimplicialComplex, k: i32, l: i32) -> Result<i32> {
    let dim = x.dim().ok_or(Error::EmptyComplex)?;
    if l < 0 || l >= k {
        return Err(Error::InvalidParameter(format!("need 0 ≤ ℓ < k, got k = {k}, ℓ = {l}")));
    }
    Ok(dim)
}

/// Direct sum of link Laplacian spectra at `(k, ℓ)`.
#[derive(Clone, Debug)]
pub struct LinkSpectra {
    /// Merged spectrum over all admissible links.
    pub spectrum: Spectrum,
    /// Links of dimension at least k-ℓ-1, which contribute a block.
    pub admissible_links: usize,
    /// Links too shallow to contribute.
    pub skipped_links: usize,
    /// Set when no link qualifies while X(k) is nonempty; the spectrum is
    /// then empty and any bound derived from it is vacuous.
    pub empty_warning: bool,
}

/// Merges the spectra of the (k-ℓ-1)-dimensional link Laplacians of the
/// given flavor, with induced weights, over all ℓ-faces whose link reaches
/// dimension k-ℓ-1. Links are processed in parallel; the merged multiset
/// is order-independent.
pub fn link_spectra_direct_sum(
    x: &SimplicialComplex,
    w: &WeightFunction,
    k: i32,
    l: i32,
    flavor: Flavor,
) -> Result<LinkSpectra> {
    check_pair(x, k, l)?;
    let parts: Vec<Option<Spectrum>> = x
        .faces_of_dim(l)
        .par_iter()
        .map(|eta| -> Result<Option<Spectrum>> {
            let lk = x.link(eta)?;
            if lk.dim().map_or(true, |d| d < k - l - 1) {
                return Ok(None);
            }
            // A link of dimension ≥ k-ℓ-1 is downward closed, so the level
            // the Laplacian lives on is populated.
            debug_assert!(lk.n_faces(k - l - 1) > 0);
            let weta = w.link(x, eta)?;
            let lap = laplacian(&lk, &weta, k - l - 1, flavor, Symmetry::Symmetrized)?;
            eigenvalues_symmetric(&lap.matrix).map(Some)
        })
        .collect::<Result<_>>()?;
    let admissible: Vec<Spectrum> = parts.iter().flatten().cloned().collect();
    let admissible_links = admissible.len();
    let skipped_links = parts.len() - admissible_links;
    Ok(LinkSpectra {
        spectrum: Spectrum::direct_sum(&admissible),
        admissible_links,
        skipped_links,
        empty_warning: admissible_links == 0 && x.n_faces(k) > 0,
    })
}

/// Outcome of the lower-bound and homology-bound pipeline at one `(k, ℓ)`.
#[derive(Clone, Debug)]
pub struct GarlandReport {
    pub k: i32,
    pub l: i32,
    /// Largest weighted up-degree `Δ_k`.
    pub max_up_degree: f64,
    /// Homology counting threshold `(ℓ+1) Δ_k / (k+1)`.
    pub threshold: f64,
    /// Tolerance used when counting eigenvalues against the threshold.
    pub threshold_tol: f64,
    pub link_spectrum: Spectrum,
    pub admissible_links: usize,
    pub skipped_links: usize,
    /// Lower bound for the i-th smallest Laplacian eigenvalue,
    /// `((k+1) λ_i(⊕) - (ℓ+1) Δ_k) / (k-ℓ)`, for 1 ≤ i ≤ |X(k)|.
    pub lower_bounds: Vec<f64>,
    /// Spectrum of the symmetrized total k-Laplacian.
    pub laplacian_spectrum: Spectrum,
    /// True when every eigenvalue meets its lower bound within slack_tol.
    pub inequalities_hold: bool,
    /// Indices whose bound failed.
    pub violations: usize,
    /// Worst (bound - eigenvalue) excess over all indices; 0 when none.
    pub max_violation: f64,
    pub slack_tol: f64,
    /// Count of direct-sum eigenvalues at most the threshold.
    pub homology_bound: usize,
    /// Reduced Betti number from exact boundary ranks.
    pub exact_betti: usize,
}

impl GarlandReport {
    /// The bound is sound when it dominates the exact Betti number.
    pub fn sound(&self) -> bool {
        self.homology_bound >= self.exact_betti
    }
}

fn trivial_report(k: i32, l: i32) -> GarlandReport {
    GarlandReport {
        k,
        l,
        max_up_degree: 0.0,
        threshold: 0.0,
        threshold_tol: 0.0,
        link_spectrum: Spectrum::empty(),
        admissible_links: 0,
        skipped_links: 0,
        lower_bounds: Vec::new(),
        laplacian_spectrum: Spectrum::empty(),
        inequalities_hold: true,
        violations: 0,
        max_violation: 0.0,
        slack_tol: 0.0,
        homology_bound: 0,
        exact_betti: 0,
    }
}

fn garland_report(
    x: &SimplicialComplex,
    w: &WeightFunction,
    k: i32,
    l: i32,
    threshold_tol: Option<f64>,
) -> Result<GarlandReport> {
    let dim = x.dim().ok_or(Error::EmptyComplex)?;
    if l < 0 || l >= k {
        return Err(Error::InvalidParameter(format!("need 0 ≤ ℓ < k, got k = {k}, ℓ = {l}")));
    }
    // Batch pipelines sweep (k, ℓ) grids; a level with no faces yields an
    // empty report rather than an error.
    if k > dim {
        return Ok(trivial_report(k, l));
    }
    let delta = max_up_degree(x, w, k)?;
    let delta_f = rat_to_f64(&delta)?;
    let threshold_exact =
        BigRational::from_integer((l as i64 + 1).into()) * &delta
            / BigRational::from_integer((k as i64 + 1).into());
    let threshold = rat_to_f64(&threshold_exact)?;
    let threshold_tol = match threshold_tol {
        Some(t) => t,
        None => THRESHOLD_TOL * delta_f.max(1.0),
    };
    let links = link_spectra_direct_sum(x, w, k, l, Flavor::Total)?;
    let lap = laplacian(x, w, k, Flavor::Total, Symmetry::Symmetrized)?;
    let lap_spectrum = eigenvalues_symmetric(&lap.matrix)?;
    let n = x.n_faces(k);
    // Every k-face σ yields the link face σ∖η for each of its ℓ-subsets η,
    // so the direct sum always carries at least |X(k)| eigenvalues.
    assert!(links.spectrum.len() >= n);
    let lower_bounds: Vec<f64> = (1..=n)
        .map(|i| {
            ((k as f64 + 1.0) * links.spectrum.lambda_min(i) - (l as f64 + 1.0) * delta_f)
                / (k - l) as f64
        })
        .collect();
    let scale = lap_spectrum
        .values()
        .iter()
        .chain(lower_bounds.iter())
        .fold(delta_f, |a, v| a.max(v.abs()));
    let slack_tol = SLACK_TOL * (1.0 + scale);
    let mut violations = 0;
    let mut max_violation = 0.0f64;
    for (i, bound) in lower_bounds.iter().enumerate() {
        let excess = bound - lap_spectrum.lambda_min(i + 1);
        if excess > slack_tol {
            violations += 1;
        }
        max_violation = max_violation.max(excess);
    }
    let homology_bound = links.spectrum.count_at_most(threshold, threshold_tol);
    let exact_betti = homology_dimension(x, k)?.betti;
    Ok(GarlandReport {
        k,
        l,
        max_up_degree: delta_f,
        threshold,
        threshold_tol,
        link_spectrum: links.spectrum,
        admissible_links: links.admissible_links,
        skipped_links: links.skipped_links,
        lower_bounds,
        laplacian_spectrum: lap_spectrum,
        inequalities_hold: violations == 0,
        violations,
        max_violation,
        slack_tol,
        homology_bound,
        exact_betti,
    })
}

/// Evaluates the per-index lower bounds on the total k-Laplacian spectrum
/// together with the homology bound, using the default threshold
/// tolerance.
pub fn garland_lower_bounds(
    x: &SimplicialComplex,
    w: &WeightFunction,
    k: i32,
    l: i32,
) -> Result<GarlandReport> {
    garland_report(x, w, k, l, None)
}

/// Same pipeline with an explicit threshold-counting tolerance, for
/// callers that want to tighten or loosen the homology bound.
pub fn homology_upper_bound(
    x: &SimplicialComplex,
    w: &WeightFunction,
    k: i32,
    l: i32,
    threshold_tol: f64,
) -> Result<GarlandReport> {
    if !threshold_tol.is_finite() || threshold_tol < 0.0 {
        return Err(Error::InvalidParameter(format!(
            "threshold tolerance must be a nonnegative finite number, got {threshold_tol}"
        )));
    }
    garland_report(x, w, k, l, Some(threshold_tol))
}

/// The lower-bound pipeline with constant weights; `Δ_k` is then the
/// maximal number of cofacets over k-faces.
pub fn unweighted_garland(x: &SimplicialComplex, k: i32, l: i32) -> Result<GarlandReport> {
    garland_lower_bounds(x, &WeightFunction::constant(x), k, l)
}

/// One row of the upper-bound family: the i-th largest eigenvalue of the
/// up k-Laplacian against its interlacing bound.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct UpperBound {
    /// 1-based index into the largest-eigenvalue order.
    pub i: usize,
    /// `(k-ℓ) λ^max_i(L̄⁺_k)`.
    pub lhs: f64,
    /// `(k+1) λ^max_i(⊕_η L̄⁺(lk η)) - (ℓ+1) δ_k`.
    pub rhs: f64,
}

/// Outcome of the upper-bound pipeline at one `(k, ℓ)`.
#[derive(Clone, Debug)]
pub struct UpperBoundsReport {
    pub k: i32,
    pub l: i32,
    /// Smallest weighted up-degree `δ_k`.
    pub min_up_degree: f64,
    pub bounds: Vec<UpperBound>,
    pub holds: bool,
    /// Worst (lhs - rhs) excess; 0 when every bound holds.
    pub max_violation: f64,
    pub slack_tol: f64,
}

/// Evaluates the per-index upper bounds on the up k-Laplacian spectrum.
/// Requires k ≤ dim-1: at the top dimension there are no cofaces and the
/// bound is not stated.
pub fn garland_upper_bounds(
    x: &SimplicialComplex,
    w: &WeightFunction,
    k: i32,
    l: i32,
) -> Result<UpperBoundsReport> {
    let dim = check_pair(x, k, l)?;
    if k > dim - 1 {
        return Err(Error::InvalidParameter(format!(
            "upper bounds need k ≤ dim-1 = {}, got k = {k}",
            dim - 1
        )));
    }
    let delta = rat_to_f64(&min_up_degree(x, w, k)?)?;
    let links = link_spectra_direct_sum(x, w, k, l, Flavor::Up)?;
    let lap = laplacian(x, w, k, Flavor::Up, Symmetry::Symmetrized)?;
    let lap_spectrum = eigenvalues_symmetric(&lap.matrix)?;
    let n = x.n_faces(k);
    assert!(links.spectrum.len() >= n);
    let bounds: Vec<UpperBound> = (1..=n)
        .map(|i| UpperBound {
            i,
            lhs: (k - l) as f64 * lap_spectrum.lambda_max(i),
            rhs: (k as f64 + 1.0) * links.spectrum.lambda_max(i) - (l as f64 + 1.0) * delta,
        })
        .collect();
    let scale = bounds
        .iter()
        .flat_map(|b| [b.lhs.abs(), b.rhs.abs()])
        .fold(delta.abs(), f64::max);
    let slack_tol = SLACK_TOL * (1.0 + scale);
    let mut max_violation = 0.0f64;
    for b in &bounds {
        max_violation = max_violation.max(b.lhs - b.rhs);
    }
    Ok(UpperBoundsReport {
        k,
        l,
        min_up_degree: delta,
        holds: max_violation <= slack_tol,
        bounds,
        max_violation,
        slack_tol,
    })
}

/// Outcome of the classical vanishing criterion on a pure complex.
#[derive(Clone, Debug)]
pub struct ClassicalReport {
    pub k: i32,
    pub l: i32,
    /// Dimension of the pure complex.
    pub d: i32,
    /// Smallest link-Laplacian eigenvalue over all ℓ-faces.
    pub min_link_gap: f64,
    /// Vanishing threshold `(ℓ+1)(d-k)/(k+1)`.
    pub threshold: f64,
    /// `(k-ℓ) λ_1(L̄_k)`.
    pub lhs: f64,
    /// `(k+1) min_gap - (ℓ+1)(d-k)`.
    pub rhs: f64,
    pub inequality_holds: bool,
    /// Guard band above the threshold that the gap must clear before a
    /// prediction is made; inside the band the verdict is inconclusive.
    pub prediction_guard: f64,
    /// True when the gap hypothesis holds: every link gap exceeds the
    /// threshold. Soundness then demands exact_betti = 0.
    pub vanishing_predicted: bool,
    pub exact_betti: usize,
}

/// The classical gap criterion: on a pure d-dimensional complex with
/// cofacet weights, if every ℓ-face link has spectral gap above
/// `(ℓ+1)(d-k)/(k+1)`, the k-th reduced homology vanishes. Links of
/// ℓ-faces in a pure complex are pure of dimension d-ℓ-1, so all of them
/// qualify.
pub fn classical_garland(x: &SimplicialComplex, k: i32, l: i32) -> Result<ClassicalReport> {
    let d = check_pair(x, k, l)?;
    if !x.is_pure(d)? {
        return Err(Error::NotPure { d });
    }
    if k > d {
        return Err(Error::DimOutOfRange { k, dim: d });
    }
    let w = WeightFunction::pure_cofacet(x, d)?;
    let gaps: Vec<f64> = x
        .faces_of_dim(l)
        .par_iter()
        .map(|eta| -> Result<f64> {
            let lk = x.link(eta)?;
            let weta = w.link(x, eta)?;
            let lap = laplacian(&lk, &weta, k - l - 1, Flavor::Total, Symmetry::Symmetrized)?;
            Ok(eigenvalues_symmetric(&lap.matrix)?.lambda_min(1))
        })
        .collect::<Result<_>>()?;
    let min_link_gap = gaps.iter().fold(f64::INFINITY, |a, &g| a.min(g));
    let lap = laplacian(x, &w, k, Flavor::Total, Symmetry::Symmetrized)?;
    let lambda_1 = eigenvalues_symmetric(&lap.matrix)?.lambda_min(1);
    let lhs = (k - l) as f64 * lambda_1;
    let rhs = (k as f64 + 1.0) * min_link_gap - (l as f64 + 1.0) * (d - k) as f64;
    let threshold = (l as f64 + 1.0) * (d - k) as f64 / (k as f64 + 1.0);
    let scale = 1.0 + lhs.abs().max(rhs.abs());
    let prediction_guard = PREDICTION_GUARD * ((d - k) as f64).max(1.0);
    Ok(ClassicalReport {
        k,
        l,
        d,
        min_link_gap,
        threshold,
        lhs,
        rhs,
        inequality_holds: lhs >= rhs - SLACK_TOL * scale,
        prediction_guard,
        vanishing_predicted: min_link_gap > threshold + prediction_guard,
        exact_betti: homology_dimension(x, k)?.betti,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{
        boundary_tetrahedron, face, full_simplex, hollow_triangle, two_triangles,
    };
    use crate::generator::random_pure;

    fn assert_spectrum_close(spec: &Spectrum, expected: &[f64], tol: f64) {
        assert_eq!(spec.len(), expected.len(), "spectrum size");
        for (got, want) in spec.values().iter().zip(expected) {
            assert!((got - want).abs() <= tol, "got {got}, want {want}");
        }
    }

    #[test]
    fn edge_links_of_the_sphere_give_zeros_and_ones() {
        // Each of the six edges has a two-point link whose weighted
        // 0-Laplacian has spectrum {0, 1}.
        let x = boundary_tetrahedron();
        let w = WeightFunction::pure_cofacet(&x, 2).unwrap();
        let links = link_spectra_direct_sum(&x, &w, 2, 1, Flavor::Total).unwrap();
        assert_eq!(links.admissible_links, 6);
        assert_eq!(links.skipped_links, 0);
        assert!(!links.empty_warning);
        let expected = [0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0];
        assert_spectrum_close(&links.spectrum, &expected, 1e-9);
    }

    #[test]
    fn vertex_links_of_the_solid_tetrahedron() {
        // Vertex links are full simplexes on three vertices: {3, 3, 3} each.
        let x = full_simplex(4);
        let w = WeightFunction::constant(&x);
        let links = link_spectra_direct_sum(&x, &w, 1, 0, Flavor::Total).unwrap();
        assert_eq!(links.admissible_links, 4);
        assert_spectrum_close(&links.spectrum, &[3.0; 12], 1e-9);
    }

    #[test]
    fn too_shallow_links_are_skipped() {
        // A triangle with a far-away isolated vertex: the lone vertex has
        // an empty link and contributes nothing at (k, ℓ) = (1, 0).
        let x = SimplicialComplex::build(&[face(&[0, 1, 2]), face(&[5])]).unwrap();
        let w = WeightFunction::constant(&x);
        let links = link_spectra_direct_sum(&x, &w, 1, 0, Flavor::Total).unwrap();
        assert_eq!(links.admissible_links, 3);
        assert_eq!(links.skipped_links, 1);
        assert!(!links.empty_warning);
        assert_spectrum_close(&links.spectrum, &[2.0; 6], 1e-9);

        let report = garland_lower_bounds(&x, &w, 1, 0).unwrap();
        assert!(report.inequalities_hold);
        // Δ_1 = 1 (edges of the triangle have one cofacet), bounds all
        // (2·2 - 1)/1 = 3, and the Laplacian spectrum is {3, 3, 3}.
        for b in &report.lower_bounds {
            assert!((b - 3.0).abs() < 1e-9);
        }
        assert_spectrum_close(&report.laplacian_spectrum, &[3.0; 3], 1e-9);
    }

    #[test]
    fn sphere_top_dimension_bounds_hold_with_equality_at_the_kernel() {
        let x = boundary_tetrahedron();
        let w = WeightFunction::pure_cofacet(&x, 2).unwrap();
        let report = garland_lower_bounds(&x, &w, 2, 1).unwrap();
        // Δ_2 = 0: no 2-face has a cofacet, so threshold and bounds at the
        // kernel are exactly 0.
        assert_eq!(report.max_up_degree, 0.0);
        assert_eq!(report.threshold, 0.0);
        assert!((report.lower_bounds[0] - 0.0).abs() < 1e-12);
        assert!((report.laplacian_spectrum.lambda_min(1) - 0.0).abs() < 1e-9);
        assert!(report.inequalities_hold);
        assert_eq!(report.homology_bound, 6);
        assert_eq!(report.exact_betti, 1);
        assert!(report.sound());
    }

    #[test]
    fn solid_tetrahedron_meets_its_bounds_with_equality() {
        let x = full_simplex(4);
        let report = unweighted_garland(&x, 1, 0).unwrap();
        // ⊕ spectrum is {3, ..., 3} and Δ_1 = 2, so every bound is
        // (2·3 - 2)/1 = 4, met with equality by L_1 = 4I.
        for b in &report.lower_bounds {
            assert!((b - 4.0).abs() < 1e-9);
        }
        assert_spectrum_close(&report.laplacian_spectrum, &[4.0; 6], 1e-9);
        assert!(report.inequalities_hold);
        assert!(report.max_violation.abs() < report.slack_tol);
        // Threshold 2/2 = 1 sits below every link eigenvalue: bound 0.
        assert_eq!(report.homology_bound, 0);
        assert_eq!(report.exact_betti, 0);
    }

    #[test]
    fn hollow_triangle_unweighted() {
        let x = hollow_triangle();
        let report = unweighted_garland(&x, 1, 0).unwrap();
        // No triangles: Δ_1 = 0, so the bounds are 2 λ_i(⊕) with
        // ⊕ = {0, 0, 0, 2, 2, 2}; the first three are 0 against {0, 3, 3}.
        assert_eq!(report.max_up_degree, 0.0);
        assert_spectrum_close(
            &report.link_spectrum,
            &[0.0, 0.0, 0.0, 2.0, 2.0, 2.0],
            1e-9,
        );
        for b in &report.lower_bounds {
            assert!((b - 0.0).abs() < 1e-9);
        }
        assert_spectrum_close(&report.laplacian_spectrum, &[0.0, 3.0, 3.0], 1e-9);
        assert!(report.inequalities_hold);
        // Threshold 0 catches the three link zeros; the circle has β₁ = 1.
        assert_eq!(report.homology_bound, 3);
        assert_eq!(report.exact_betti, 1);
        assert!(report.sound());
    }

    #[test]
    fn weightings_disagree_on_the_sphere() {
        let x = boundary_tetrahedron();
        let unit = unweighted_garland(&x, 1, 0).unwrap();
        let pure =
            garland_lower_bounds(&x, &WeightFunction::pure_cofacet(&x, 2).unwrap(), 1, 0).unwrap();
        // Unweighted Δ_1 counts cofacets (2); cofacet weights give d-k = 1.
        assert_eq!(unit.max_up_degree, 2.0);
        assert_eq!(pure.max_up_degree, 1.0);
        assert!((unit.threshold - 1.0).abs() < 1e-12);
        assert!((pure.threshold - 0.5).abs() < 1e-12);
        assert!(unit.inequalities_hold && pure.inequalities_hold);
        assert!(unit.sound() && pure.sound());
    }

    #[test]
    fn pure_cofacet_threshold_matches_the_closed_form() {
        // With cofacet weights on a pure complex every up-degree is d-k,
        // so the threshold collapses to (ℓ+1)(d-k)/(k+1).
        for (x, d) in [
            (boundary_tetrahedron(), 2),
            (two_triangles(), 2),
            (full_simplex(5), 4),
            (random_pure(7, 2, 0.7, 5).unwrap(), 2),
        ] {
            let w = WeightFunction::pure_cofacet(&x, d).unwrap();
            for k in 1..=d {
                for l in 0..k {
                    let report = garland_lower_bounds(&x, &w, k, l).unwrap();
                    assert_eq!(report.max_up_degree, (d - k) as f64);
                    let expected = (l + 1) as f64 * (d - k) as f64 / (k + 1) as f64;
                    assert!((report.threshold - expected).abs() < 1e-15);
                }
            }
        }
    }

    #[test]
    fn bounds_and_soundness_on_random_complexes() {
        for seed in 0..10 {
            let n = 5 + (seed % 3) as u32;
            let d = 2 + (seed % 2) as i32;
            let x = match random_pure(n, d, 0.6, seed) {
                Ok(x) => x,
                Err(_) => continue,
            };
            let dim = x.dim().unwrap();
            for w in [
                WeightFunction::constant(&x),
                WeightFunction::pure_cofacet(&x, dim).unwrap(),
            ] {
                for k in 1..=dim {
                    for l in 0..k {
                        let report = garland_lower_bounds(&x, &w, k, l).unwrap();
                        assert!(
                            report.inequalities_hold,
                            "seed {seed}, (k, ℓ) = ({k}, {l}): violation {}",
                            report.max_violation
                        );
                        assert!(report.sound(), "seed {seed}, (k, ℓ) = ({k}, {l})");
                    }
                }
            }
        }
    }

    #[test]
    fn one_step_link_count_matches_a_direct_enumeration() {
        // With ℓ = k-1 the homology bound counts 0-Laplacian eigenvalues
        // of (k-1)-face links; recompute it without the direct-sum helper.
        let x = random_pure(7, 2, 0.7, 3).unwrap();
        let w = WeightFunction::pure_cofacet(&x, x.dim().unwrap()).unwrap();
        let k = 2;
        let report = garland_lower_bounds(&x, &w, k, k - 1).unwrap();
        let mut count = 0;
        for eta in x.faces_of_dim(k - 1) {
            let lk = x.link(eta).unwrap();
            if lk.dim().map_or(true, |d| d < 0) {
                continue;
            }
            let weta = w.link(&x, eta).unwrap();
            let lap = laplacian(&lk, &weta, 0, Flavor::Total, Symmetry::Symmetrized).unwrap();
            let spec = eigenvalues_symmetric(&lap.matrix).unwrap();
            count += spec.count_at_most(report.threshold, report.threshold_tol);
        }
        assert_eq!(report.homology_bound, count);
    }

    #[test]
    fn homology_bound_tolerance_is_configurable() {
        let x = boundary_tetrahedron();
        let w = WeightFunction::pure_cofacet(&x, 2).unwrap();
        // An absurdly wide tolerance sweeps in the whole link spectrum.
        let wide = homology_upper_bound(&x, &w, 2, 1, 10.0).unwrap();
        assert_eq!(wide.homology_bound, 12);
        assert!(homology_upper_bound(&x, &w, 2, 1, -1.0).is_err());
        assert!(homology_upper_bound(&x, &w, 2, 1, f64::NAN).is_err());
    }

    #[test]
    fn levels_above_the_dimension_give_trivial_reports() {
        let x = boundary_tetrahedron();
        let w = WeightFunction::constant(&x);
        let report = garland_lower_bounds(&x, &w, 5, 1).unwrap();
        assert!(report.inequalities_hold);
        assert!(report.lower_bounds.is_empty());
        assert_eq!(report.homology_bound, 0);
        assert_eq!(report.exact_betti, 0);
    }

    #[test]
    fn parameter_errors() {
        let x = boundary_tetrahedron();
        let w = WeightFunction::constant(&x);
        assert!(matches!(
            garland_lower_bounds(&x, &w, 1, 1),
            Err(Error::InvalidParameter(_))
        ));
        assert!(matches!(
            garland_lower_bounds(&x, &w, 1, -1),
            Err(Error::InvalidParameter(_))
        ));
        let empty = SimplicialComplex::build(&[]).unwrap();
        let we = WeightFunction::constant(&empty);
        assert!(matches!(garland_lower_bounds(&empty, &we, 1, 0), Err(Error::EmptyComplex)));
    }

    #[test]
    fn upper_bounds_on_the_solid_tetrahedron() {
        let x = full_simplex(4);
        let w = WeightFunction::constant(&x);
        let report = garland_upper_bounds(&x, &w, 1, 0).unwrap();
        assert_eq!(report.min_up_degree, 2.0);
        assert!(report.holds, "violation {}", report.max_violation);
        // L̄⁺_1 has spectrum {0, 0, 0, 4, 4, 4}; the top link eigenvalue is
        // 3, so the first bound is 2·3 - 2 = 4, met with equality.
        let first = report.bounds[0];
        assert_eq!(first.i, 1);
        assert!((first.lhs - 4.0).abs() < 1e-9);
        assert!((first.rhs - 4.0).abs() < 1e-9);
    }

    #[test]
    fn upper_bounds_use_the_minimal_degree() {
        let x = two_triangles();
        let w = WeightFunction::constant(&x);
        let report = garland_upper_bounds(&x, &w, 1, 0).unwrap();
        // The shared edge has two cofacets, the rest one: δ_1 = 1.
        assert_eq!(report.min_up_degree, 1.0);
        assert!(report.holds);
    }

    #[test]
    fn upper_bounds_reject_the_top_dimension() {
        let x = boundary_tetrahedron();
        let w = WeightFunction::constant(&x);
        assert!(matches!(
            garland_upper_bounds(&x, &w, 2, 1),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn upper_bounds_hold_on_random_complexes() {
        for seed in 0..8 {
            let x = match random_pure(7, 2, 0.65, 100 + seed) {
                Ok(x) => x,
                Err(_) => continue,
            };
            let dim = x.dim().unwrap();
            if dim < 2 {
                continue;
            }
            for w in [
                WeightFunction::constant(&x),
                WeightFunction::pure_cofacet(&x, dim).unwrap(),
            ] {
                for k in 1..dim {
                    for l in 0..k {
                        let report = garland_upper_bounds(&x, &w, k, l).unwrap();
                        assert!(
                            report.holds,
                            "seed {seed}, (k, ℓ) = ({k}, {l}): violation {}",
                            report.max_violation
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn classical_prediction_on_the_solid_four_simplex() {
        let x = full_simplex(5);
        let report = classical_garland(&x, 1, 0).unwrap();
        assert_eq!(report.d, 4);
        // Vertex links are solid tetrahedra with unit cofacet weights:
        // gap 4, well above the threshold 1·3/2.
        assert!((report.min_link_gap - 4.0).abs() < 1e-9);
        assert!((report.threshold - 1.5).abs() < 1e-12);
        assert!(report.inequality_holds);
        assert!(report.vanishing_predicted);
        assert_eq!(report.exact_betti, 0);
    }

    #[test]
    fn classical_criterion_is_inconclusive_on_the_sphere() {
        let x = boundary_tetrahedron();
        let report = classical_garland(&x, 2, 1).unwrap();
        // Edge links are two points: gap 0, threshold 2·0/3 = 0. The gap
        // hypothesis fails, so nothing is predicted even though the
        // inequality itself holds with equality.
        assert!((report.min_link_gap - 0.0).abs() < 1e-9);
        assert_eq!(report.threshold, 0.0);
        assert!(report.inequality_holds);
        assert!(!report.vanishing_predicted);
        assert_eq!(report.exact_betti, 1);
    }

    #[test]
    fn classical_rejects_impure_complexes() {
        let x = SimplicialComplex::build(&[face(&[0, 1, 2]), face(&[3, 4])]).unwrap();
        assert!(matches!(classical_garland(&x, 1, 0), Err(Error::NotPure { d: 2 })));
    }

    #[test]
    fn classical_predictions_are_sound_on_random_complexes() {
        let mut predictions = 0;
        for seed in 0..20 {
            let x = match random_pure(6, 2, 0.75, 200 + seed) {
                Ok(x) => x,
                Err(_) => continue,
            };
            let d = x.dim().unwrap();
            if !x.is_pure(d).unwrap() {
                continue;
            }
            for k in 1..=d {
                for l in 0..k {
                    let report = classical_garland(&x, k, l).unwrap();
                    assert!(report.inequality_holds, "seed {seed}, (k, ℓ) = ({k}, {l})");
                    if report.vanishing_predicted {
                        predictions += 1;
                        assert_eq!(
                            report.exact_betti, 0,
                            "unsound prediction at seed {seed}, (k, ℓ) = ({k}, {l})"
                        );
                    }
                }
            }
        }
        // The corpus is dense enough that at least one prediction fires.
        assert!(predictions > 0);
    }

    #[test]
    fn report_indices_line_up_with_one_based_eigenvalue_order() {
        let x = two_triangles();
        let w = WeightFunction::constant(&x);
        let report = garland_lower_bounds(&x, &w, 1, 0).unwrap();
        assert_eq!(report.lower_bounds.len(), x.n_faces(1));
        assert_eq!(report.laplacian_spectrum.len(), x.n_faces(1));
        for (i, b) in report.lower_bounds.iter().enumerate() {
            assert!(report.laplacian_spectrum.lambda_min(i + 1) >= b - report.slack_tol);
        }
    }

    #[test]
    fn random_pure_generator_feeds_the_pipeline() {
        let x = random_pure(7, 3, 0.5, 42).unwrap();
        let d = x.dim().unwrap();
        let w = WeightFunction::pure_cofacet(&x, d).unwrap();
        for k in 1..=d {
            for l in 0..k {
                let report = garland_lower_bounds(&x, &w, k, l).unwrap();
                assert!(report.inequalities_hold);
                assert!(report.sound());
            }
        }
    }
}
