//! Acceptance gate for the workspace.
//!
//! Each test checks one shipped guarantee end to end and prints a single
//! `ACCEPTANCE NN <name>: PASS/FAIL` line (visible with `--nocapture`)
//! before asserting. The corpus is fixed: the boundary of the tetrahedron,
//! the full simplex on 5 vertices, and 100 seeded random pure complexes
//! with n <= 8 and d <= 3.

use std::process::Command;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use garland_core::garland::{classical_garland, garland_lower_bounds, garland_upper_bounds};
use garland_core::generator::{random_pure, simplex, simplex_boundary, skeleton};
use garland_core::interlace::{
    garland_system, random_local_system, verify_interlacing, verify_prop_lower,
    verify_prop_upper, verify_sign1, verify_sign2, verify_sign_product, LocalSystem, VerifyMode,
};
use garland_core::laplacian::{laplacian, Flavor, Symmetry};
use garland_core::spectral::{
    eigenvalues_symmetric, homology_dimension, numeric_kernel_dim, KERNEL_TOL,
};
use garland_core::{SimplicialComplex, WeightFunction};

const SLACK: f64 = 1e-8;
const RANDOM_COUNT: usize = 100;

fn gate(number: u32, name: &str, errors: &[String]) {
    let verdict = if errors.is_empty() { "PASS" } else { "FAIL" };
    println!("ACCEPTANCE {number:02} {name}: {verdict}");
    assert!(
        errors.is_empty(),
        "ACCEPTANCE {number:02} {name}: {} failure(s)\n{}",
        errors.len(),
        errors.join("\n")
    );
}

/// Boundary tetrahedron, full simplex on 5 vertices, then 100 seeded
/// random pure complexes on a fixed parameter schedule.
fn corpus() -> &'static [SimplicialComplex] {
    static CORPUS: OnceLock<Vec<SimplicialComplex>> = OnceLock::new();
    CORPUS.get_or_init(|| {
        let mut all = vec![simplex_boundary(4).unwrap(), simplex(5).unwrap()];
        let mut seed = 0u64;
        while all.len() < 2 + RANDOM_COUNT {
            let n = 5 + (seed % 4) as u32;
            let d = 1 + (seed % 3) as i32;
            let p = 0.35 + 0.05 * (seed % 6) as f64;
            if let Ok(x) = random_pure(n, d, p, seed) {
                all.push(x);
            }
            seed += 1;
        }
        all
    })
}

fn pairs(x: &SimplicialComplex) -> Vec<(i32, i32)> {
    let dim = x.dim().unwrap();
    (1..=dim).flat_map(|k| (0..k).map(move |l| (k, l))).collect()
}

/// Every corpus complex is pure by construction, so both weightings apply.
fn weightings(x: &SimplicialComplex) -> Vec<(&'static str, WeightFunction)> {
    let d = x.dim().unwrap();
    vec![
        ("unit", WeightFunction::constant(x)),
        ("pure", WeightFunction::pure_cofacet(x, d).unwrap()),
    ]
}

fn for_each_run<F>(check: F) -> Vec<String>
where
    F: Fn(usize, &SimplicialComplex, &str, &WeightFunction, i32, i32) -> Vec<String> + Sync,
{
    corpus()
        .par_iter()
        .enumerate()
        .flat_map_iter(|(ci, x)| {
            let mut errs = Vec::new();
            for (wname, w) in weightings(x) {
                for (k, l) in pairs(x) {
                    errs.extend(check(ci, x, wname, &w, k, l));
                }
            }
            errs
        })
        .collect()
}

#[test]
fn acceptance_01_exact_assembly_identities() {
    let start = Instant::now();
    let mut errors = for_each_run(|ci, x, wname, w, k, l| {
        let mut errs = Vec::new();
        for (flavor, run) in [
            ("up", verify_prop_upper(x, w, k, l, VerifyMode::Exact)),
            ("down", verify_prop_lower(x, w, k, l, VerifyMode::Exact)),
        ] {
            match run {
                Ok(v) if v.failures == 0 => {}
                Ok(v) => errs.push(format!(
                    "complex {ci} {wname} k={k} l={l} {flavor}: {} exact mismatches",
                    v.failures
                )),
                Err(e) => errs.push(format!("complex {ci} {wname} k={k} l={l} {flavor}: {e}")),
            }
        }
        errs
    });
    let elapsed = start.elapsed();
    if elapsed > Duration::from_secs(60) {
        errors.push(format!("exact suite took {elapsed:?}, budget is 60s"));
    }
    gate(1, "exact assembly identities", &errors);
}

#[test]
fn acceptance_02_spectral_lower_bounds() {
    let errors = for_each_run(|ci, x, wname, w, k, l| {
        let mut errs = Vec::new();
        let r = match garland_lower_bounds(x, w, k, l) {
            Ok(r) => r,
            Err(e) => return vec![format!("complex {ci} {wname} k={k} l={l}: {e}")],
        };
        let n = r.laplacian_spectrum.len();
        let tol = SLACK * (1.0 + r.max_up_degree);
        for i in 1..=n {
            let lhs = (k - l) as f64 * r.laplacian_spectrum.lambda_min(i);
            let rhs =
                (k + 1) as f64 * r.link_spectrum.lambda_min(i) - (l + 1) as f64 * r.max_up_degree;
            if lhs < rhs - tol {
                errs.push(format!(
                    "complex {ci} {wname} k={k} l={l} i={i}: {lhs} < {rhs} - {tol}"
                ));
            }
        }
        errs
    });
    gate(2, "spectral lower bounds", &errors);
}

#[test]
fn acceptance_03_homology_bound_soundness() {
    let mut errors = for_each_run(|ci, x, wname, w, k, l| {
        match garland_lower_bounds(x, w, k, l) {
            Ok(r) if r.sound() => Vec::new(),
            Ok(r) => vec![format!(
                "complex {ci} {wname} k={k} l={l}: bound {} < betti {}",
                r.homology_bound, r.exact_betti
            )],
            Err(e) => vec![format!("complex {ci} {wname} k={k} l={l}: {e}")],
        }
    });

    // Pinned case: boundary tetrahedron, pure weights, top dimension.
    let sphere = simplex_boundary(4).unwrap();
    let w = WeightFunction::pure_cofacet(&sphere, 2).unwrap();
    let r = garland_lower_bounds(&sphere, &w, 2, 1).unwrap();
    if r.homology_bound != 6 || r.exact_betti != 1 {
        errors.push(format!(
            "sphere pure k=2 l=1: expected bound 6 / betti 1, got {} / {}",
            r.homology_bound, r.exact_betti
        ));
    }
    gate(3, "homology bound soundness", &errors);
}

#[test]
fn acceptance_04_spectral_upper_bounds() {
    let errors = for_each_run(|ci, x, wname, w, k, l| {
        if k >= x.dim().unwrap() {
            return Vec::new();
        }
        match garland_upper_bounds(x, w, k, l) {
            Ok(r) if r.holds => Vec::new(),
            Ok(r) => vec![format!(
                "complex {ci} {wname} k={k} l={l}: max violation {}",
                r.max_violation
            )],
            Err(e) => vec![format!("complex {ci} {wname} k={k} l={l}: {e}")],
        }
    });
    gate(4, "spectral upper bounds", &errors);
}

#[test]
fn acceptance_05_kernel_dimension_matches_betti() {
    let errors: Vec<String> = corpus()
        .par_iter()
        .enumerate()
        .flat_map_iter(|(ci, x)| {
            let mut errs = Vec::new();
            let dim = x.dim().unwrap();
            for (wname, w) in weightings(x) {
                for k in 0..=dim {
                    let m = laplacian(x, &w, k, Flavor::Total, Symmetry::Symmetrized).unwrap();
                    let kernel = numeric_kernel_dim(&m.matrix, KERNEL_TOL).unwrap();
                    let betti = homology_dimension(x, k).unwrap().betti;
                    if kernel != betti {
                        errs.push(format!(
                            "complex {ci} {wname} k={k}: kernel {kernel} != betti {betti}"
                        ));
                    }
                }
            }
            errs
        })
        .collect();
    gate(5, "kernel dimension matches betti", &errors);
}

fn total_spectrum(x: &SimplicialComplex, k: i32) -> Vec<f64> {
    let w = WeightFunction::constant(x);
    let m = laplacian(x, &w, k, Flavor::Total, Symmetry::Symmetrized).unwrap();
    eigenvalues_symmetric(&m.matrix).unwrap().values().to_vec()
}

#[test]
fn acceptance_06_closed_form_spectra() {
    let mut errors = Vec::new();
    let mut expect = |name: &str, got: Vec<f64>, want: Vec<f64>| {
        if got.len() != want.len()
            || got.iter().zip(&want).any(|(g, w)| (g - w).abs() > 1e-9)
        {
            errors.push(format!("{name}: expected {want:?}, got {got:?}"));
        }
    };

    let k4 = skeleton(4, 1).unwrap();
    expect("K4 L_0", total_spectrum(&k4, 0), vec![4.0; 4]);

    let hollow = simplex_boundary(3).unwrap();
    expect("hollow triangle L_1", total_spectrum(&hollow, 1), vec![0.0, 3.0, 3.0]);

    for n in [4u32, 5] {
        let x = simplex(n).unwrap();
        for k in 0..=(n as i32 - 1) {
            let size = x.n_faces(k);
            expect(
                &format!("simplex n={n} L_{k}"),
                total_spectrum(&x, k),
                vec![n as f64; size],
            );
        }
    }
    gate(6, "closed form spectra", &errors);
}

fn random_systems() -> Vec<LocalSystem> {
    (0..200u64)
        .map(|seed| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            random_local_system(&mut rng)
        })
        .collect()
}

#[test]
fn acceptance_07_interlacing_holds() {
    let mut errors: Vec<String> = random_systems()
        .par_iter()
        .enumerate()
        .filter_map(|(i, sys)| match verify_interlacing(sys) {
            Ok(v) if v.holds => None,
            Ok(v) => Some(format!("random system {i}: max violation {}", v.max_violation)),
            Err(e) => Some(format!("random system {i}: {e}")),
        })
        .collect();

    errors.extend(for_each_run(|ci, x, wname, w, k, l| {
        let sys = garland_system(x, w, k, l).unwrap();
        match verify_interlacing(&sys) {
            Ok(v) if v.holds => Vec::new(),
            Ok(v) => vec![format!(
                "complex {ci} {wname} k={k} l={l}: max violation {}",
                v.max_violation
            )],
            Err(e) => vec![format!("complex {ci} {wname} k={k} l={l}: {e}")],
        }
    }));
    gate(7, "interlacing holds", &errors);
}

fn projection_errors(label: &str, sys: &LocalSystem) -> Vec<String> {
    let mut errs = Vec::new();
    let s = sys.projection_matrix().unwrap();
    let d = sys.direct_sum_matrix();
    let m = sys.assemble_global().unwrap();
    let scale = d.iter().fold(1.0f64, |acc, v| acc.max(v.abs()));

    let gram = s.t().dot(&s);
    for ((i, j), v) in gram.indexed_iter() {
        let want = if i == j { 1.0 } else { 0.0 };
        if (v - want).abs() > 1e-12 {
            errs.push(format!("{label}: gram[{i},{j}] = {v}, want {want}"));
        }
    }

    let compressed = s.t().dot(&d).dot(&s);
    for ((i, j), v) in compressed.indexed_iter() {
        if (v - m[(i, j)]).abs() > 1e-12 * scale {
            errs.push(format!(
                "{label}: compression[{i},{j}] = {v}, want {}",
                m[(i, j)]
            ));
        }
    }
    errs
}

#[test]
fn acceptance_08_projection_identities() {
    let mut errors: Vec<String> = random_systems()
        .par_iter()
        .enumerate()
        .flat_map_iter(|(i, sys)| projection_errors(&format!("random system {i}"), sys))
        .collect();

    errors.extend(for_each_run(|ci, x, wname, w, k, l| {
        let sys = garland_system(x, w, k, l).unwrap();
        projection_errors(&format!("complex {ci} {wname} k={k} l={l}"), &sys)
    }));
    gate(8, "projection identities", &errors);
}

#[test]
fn acceptance_09_sign_lemmas_exact() {
    // Exhaustive exact checks on the two fixed complexes plus 20 random ones.
    let targets: Vec<&SimplicialComplex> = corpus().iter().take(22).collect();
    let errors: Vec<String> = targets
        .par_iter()
        .enumerate()
        .flat_map_iter(|(ci, x)| {
            let mut errs = Vec::new();
            let dim = x.dim().unwrap();
            for k in 1..=dim {
                match verify_sign_product(x, k) {
                    Ok(v) if v.failures == 0 => {}
                    Ok(v) => errs.push(format!("complex {ci} k={k}: {} facet-product sign mismatches", v.failures)),
                    Err(e) => errs.push(format!("complex {ci} k={k}: {e}")),
                }
            }
            for (k, l) in pairs(x) {
                for (name, run) in [
                    ("one-step", verify_sign1(x, k, l)),
                    ("two-face", verify_sign2(x, k, l)),
                ] {
                    match run {
                        Ok(v) if v.failures == 0 => {}
                        Ok(v) => errs.push(format!(
                            "complex {ci} k={k} l={l} {name}: {} mismatches",
                            v.failures
                        )),
                        Err(e) => errs.push(format!("complex {ci} k={k} l={l} {name}: {e}")),
                    }
                }
            }
            errs
        })
        .collect();
    gate(9, "sign lemmas exact", &errors);
}

#[test]
fn acceptance_10_classical_vanishing() {
    let mut predictions = 0usize;
    let mut errors = Vec::new();
    for (ci, x) in corpus().iter().enumerate() {
        for (k, l) in pairs(x) {
            let r = classical_garland(x, k, l).unwrap();
            if !r.inequality_holds {
                errors.push(format!("complex {ci} k={k} l={l}: spectral bound violated"));
            }
            if r.vanishing_predicted {
                predictions += 1;
                if r.exact_betti != 0 {
                    errors.push(format!(
                        "complex {ci} k={k} l={l}: vanishing predicted but betti = {}",
                        r.exact_betti
                    ));
                }
            }
        }
    }

    // Positive case: links of vertices in the full simplex on 5 vertices
    // have gap 4, beating the threshold 3/2.
    let x = simplex(5).unwrap();
    let r = classical_garland(&x, 1, 0).unwrap();
    if !r.vanishing_predicted {
        errors.push(format!(
            "simplex n=5 k=1 l=0: gap {} vs threshold {} should predict vanishing",
            r.min_link_gap, r.threshold
        ));
    }
    if predictions == 0 {
        errors.push("no corpus complex triggered the vanishing criterion".into());
    }
    gate(10, "classical vanishing", &errors);
}

#[test]
fn acceptance_11_deterministic_reports() {
    let run = |args: &[&str]| {
        let out = Command::new(env!("CARGO_BIN_EXE_garland"))
            .args(args)
            .output()
            .expect("failed to spawn binary");
        assert!(out.status.success(), "{:?} failed: {}", args, String::from_utf8_lossy(&out.stderr));
        out.stdout
    };
    let mut errors = Vec::new();

    let analyze: &[&str] = &[
        "analyze", "--model", "random-pure", "--n", "7", "--d", "2", "--p", "0.55", "--seed",
        "123",
    ];
    if run(analyze) != run(analyze) {
        errors.push("analyze reports differ across identical runs".into());
    }

    let verify: &[&str] = &[
        "verify", "--model", "random-pure", "--n", "6", "--d", "2", "--p", "0.5", "--seed", "9",
        "--seeds", "25",
    ];
    if run(verify) != run(verify) {
        errors.push("verify reports differ across identical runs".into());
    }
    gate(11, "deterministic reports", &errors);
}
