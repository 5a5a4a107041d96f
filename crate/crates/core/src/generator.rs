//! Deterministic complex generators.
//!
//! Every generator is a pure function of its parameters (and seed), so
//! repeated runs produce identical complexes.

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};

/// How many rounds of face selection to attempt before giving up when the
/// random model selects nothing.
const MAX_ATTEMPTS: usize = 100;

/// Full simplex on vertices `0..n`.
pub fn simplex(n: u32) -> Result<SimplicialComplex> {
    if n == 0 {
        return Err(Error::InvalidParameter("simplex requires n ≥ 1".into()));
    }
    let top = Face::new((0..n).collect()).expect("range is strictly increasing");
    SimplicialComplex::build(&[top])
}

/// Boundary of the (n-1)-simplex: all proper subsets of `{0..n}`.
pub fn simplex_boundary(n: u32) -> Result<SimplicialComplex> {
    if n == 0 {
        return Err(Error::InvalidParameter("simplex boundary requires n ≥ 1".into()));
    }
    let everything = Face::new((0..n).collect()).expect("range is strictly increasing");
    let facets = everything.subsets_of_card(n as usize - 1);
    SimplicialComplex::build(&facets)
}

/// d-skeleton of the full simplex on `n` vertices: every face with at most
/// `d + 1` vertices.
pub fn skeleton(n: u32, d: i32) -> Result<SimplicialComplex> {
    if n == 0 || d < 0 || d > n as i32 - 1 {
        return Err(Error::InvalidParameter(format!(
            "skeleton requires n ≥ 1 and 0 ≤ d ≤ n-1, got n = {n}, d = {d}"
        )));
    }
    let everything = Face::new((0..n).collect()).expect("range is strictly increasing");
    SimplicialComplex::build(&everything.subsets_of_card(d as usize + 1))
}

/// Random pure d-dimensional complex: each d-face of the full simplex on
/// `n` vertices is kept independently with probability `p`, and the result
/// is the downward closure of the kept faces.
///
/// Candidate faces are visited in lexicographic order with one Bernoulli
/// draw each, so a fixed `(n, d, p, seed)` always produces the same
/// complex. If no face is kept, the draw repeats (continuing the same
/// random stream) up to 100 times before failing.
pub fn random_pure(n: u32, d: i32, p: f64, seed: u64) -> Result<SimplicialComplex> {
    if n == 0 || d < 0 || d > n as i32 - 1 {
        return Err(Error::InvalidParameter(format!(
            "random pure complex requires 0 ≤ d ≤ n-1, got n = {n}, d = {d}"
        )));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!("probability p = {p} outside [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let candidates: Vec<Face> = (0..n)
        .combinations(d as usize + 1)
        .map(|vs| Face::new(vs).expect("combinations are strictly increasing"))
        .collect();
    for _ in 0..MAX_ATTEMPTS {
        let kept: Vec<Face> =
            candidates.iter().filter(|_| rng.gen_bool(p)).cloned().collect();
        if !kept.is_empty() {
            return SimplicialComplex::build(&kept);
        }
    }
    Err(Error::GenerationFailed(MAX_ATTEMPTS))
}
