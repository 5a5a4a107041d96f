//! Serializable report documents.
//!
//! Every float is rounded to 12 significant digits before serialization,
//! so a fixed seed yields byte-identical reports across runs and the
//! trailing digits of iterative eigensolves never leak into diffs.

use garland_core::garland::{GarlandReport, UpperBoundsReport};
use garland_core::interlace::Verdict;
use garland_core::SimplicialComplex;
use serde::Serialize;

/// Rounds to 12 significant digits through the decimal representation.
pub fn sig12(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        // Normalizes -0 as well.
        return if x == 0.0 { 0.0 } else { x };
    }
    format!("{x:.11e}").parse().expect("scientific notation round-trips")
}

#[derive(Serialize)]
pub struct ComplexSummary {
    /// Face counts from dimension 0 upward; the empty face is implicit.
    pub n_faces_by_dim: Vec<usize>,
    pub pure: bool,
    pub d: i32,
}

impl ComplexSummary {
    pub fn new(x: &SimplicialComplex) -> Self {
        let d = x.dim().unwrap_or(-1);
        let n_faces_by_dim = (0..=d).map(|k| x.n_faces(k)).collect();
        let pure = d >= 0 && x.is_pure(d).unwrap_or(false);
        ComplexSummary { n_faces_by_dim, pure, d }
    }
}

#[derive(Serialize)]
pub struct LinkSpectrumSummary {
    pub min: Option<f64>,
    pub count_at_most_threshold: usize,
    pub size: usize,
    pub admissible_links: usize,
    pub skipped_links: usize,
}

#[derive(Serialize)]
pub struct UpperBoundsSummary {
    pub min_up_degree: f64,
    pub holds: bool,
    pub max_violation: f64,
}

#[derive(Serialize)]
pub struct IdentityChecks {
    pub mode: &'static str,
    pub up_holds: bool,
    pub down_holds: bool,
}

#[derive(Serialize)]
pub struct RunSummary {
    pub k: i32,
    pub l: i32,
    pub weighting: String,
    pub threshold: f64,
    pub threshold_tol: f64,
    pub link_spectrum_summary: LinkSpectrumSummary,
    pub lower_bounds_violations: usize,
    pub max_violation: f64,
    pub slack_tol: f64,
    pub laplacian_min: Option<f64>,
    pub homology_bound: usize,
    pub exact_betti: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub upper_bounds: Option<UpperBoundsSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub identities: Option<IdentityChecks>,
    pub holds: bool,
}

impl RunSummary {
    pub fn new(report: &GarlandReport, weighting: &str) -> Self {
        let spectrum = &report.link_spectrum;
        RunSummary {
            k: report.k,
            l: report.l,
            weighting: weighting.to_string(),
            threshold: sig12(report.threshold),
            threshold_tol: sig12(report.threshold_tol),
            link_spectrum_summary: LinkSpectrumSummary {
                min: spectrum.values().first().map(|&v| sig12(v)),
                count_at_most_threshold: report.homology_bound,
                size: spectrum.len(),
                admissible_links: report.admissible_links,
                skipped_links: report.skipped_links,
            },
            lower_bounds_violations: report.violations,
            max_violation: sig12(report.max_violation),
            slack_tol: sig12(report.slack_tol),
            laplacian_min: report.laplacian_spectrum.values().first().map(|&v| sig12(v)),
            homology_bound: report.homology_bound,
            exact_betti: report.exact_betti,
            upper_bounds: None,
            identities: None,
            holds: report.inequalities_hold && report.sound(),
        }
    }

    pub fn attach_upper(&mut self, upper: &UpperBoundsReport) {
        self.upper_bounds = Some(UpperBoundsSummary {
            min_up_degree: sig12(upper.min_up_degree),
            holds: upper.holds,
            max_violation: sig12(upper.max_violation),
        });
        self.holds = self.holds && upper.holds;
    }

    pub fn attach_identities(&mut self, mode: &'static str, up: &Verdict, down: &Verdict) {
        self.identities = Some(IdentityChecks {
            mode,
            up_holds: up.holds,
            down_holds: down.holds,
        });
        self.holds = self.holds && up.holds && down.holds;
    }
}

#[derive(Serialize)]
pub struct AnalyzeDoc {
    pub complex: ComplexSummary,
    pub runs: Vec<RunSummary>,
    pub holds: bool,
}

#[derive(Serialize)]
pub struct SpectrumRun {
    pub k: i32,
    pub weighting: String,
    pub flavor: &'static str,
    pub spectrum: Vec<f64>,
}

#[derive(Serialize)]
pub struct SpectrumDoc {
    pub complex: ComplexSummary,
    pub runs: Vec<SpectrumRun>,
}

#[derive(Serialize)]
pub struct HomologyRow {
    pub k: i32,
    pub betti: usize,
    pub rank_down: usize,
    pub rank_up: usize,
}

#[derive(Serialize)]
pub struct HomologyDoc {
    pub complex: ComplexSummary,
    pub betti: Vec<HomologyRow>,
}

#[derive(Serialize)]
pub struct PropResult {
    pub name: String,
    pub checks: usize,
    pub failures: usize,
    pub max_violation: f64,
    pub holds: bool,
}

impl PropResult {
    pub fn from_verdict(name: impl Into<String>, v: &Verdict) -> Self {
        PropResult {
            name: name.into(),
            checks: v.checks,
            failures: v.failures,
            max_violation: sig12(v.max_violation),
            holds: v.holds,
        }
    }
}

#[derive(Serialize)]
pub struct VerifyDoc {
    pub complex: ComplexSummary,
    pub props: Vec<PropResult>,
    pub holds: bool,
}

/// Renders a document as pretty JSON with a trailing newline.
pub fn render<T: Serialize>(doc: &T) -> String {
    let mut text = serde_json::to_string_pretty(doc).expect("reports serialize infallibly");
    text.push('\n');
    text
}
