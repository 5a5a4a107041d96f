//! Text formats for complexes and weight functions.
//!
//! Complex files carry one face per non-empty line as whitespace-separated
//! vertex ids; `#` starts a comment running to the end of the line. The
//! complex is the downward closure of the listed faces, so listing the
//! maximal faces is enough. Vertices may appear in any order within a
//! line, but repeats are rejected.
//!
//! Weight files carry one face per line followed by `: p/q`, a positive
//! rational; the empty face is written as a bare `:`. Unlisted faces keep
//! weight 1.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use anyhow::{anyhow, bail, Context, Result};
use garland_core::{Face, SimplicialComplex, WeightFunction};
use num::{BigInt, BigRational};

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(pos) => &line[..pos],
        None => line,
    }
}

fn parse_face(tokens: &[&str], line_no: usize) -> Result<Face> {
    let mut vertices = Vec::with_capacity(tokens.len());
    for tok in tokens {
        let v: u32 = tok
            .parse()
            .map_err(|_| anyhow!("line {line_no}: invalid vertex id {tok:?}"))?;
        vertices.push(v);
    }
    vertices.sort_unstable();
    if vertices.windows(2).any(|w| w[0] == w[1]) {
        bail!("line {line_no}: repeated vertex in face");
    }
    Ok(Face::new(vertices).expect("sorted deduplicated vertices form a face"))
}

/// Parses a complex file into the downward closure of its faces.
pub fn parse_complex(text: &str) -> Result<SimplicialComplex> {
    let mut generators = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = strip_comment(raw);
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.is_empty() {
            continue;
        }
        generators.push(parse_face(&tokens, idx + 1)?);
    }
    if generators.is_empty() {
        bail!("no faces listed: a complex file needs at least one face line");
    }
    SimplicialComplex::build(&generators).context("building the downward closure")
}

/// Writes the maximal faces, one per line; parsing the result reproduces
/// the complex.
pub fn serialize_complex(x: &SimplicialComplex) -> String {
    let mut out = String::new();
    for face in x.maximal_faces() {
        let verts: Vec<String> = face.vertices().iter().map(u32::to_string).collect();
        writeln!(out, "{}", verts.join(" ")).expect("string writes cannot fail");
    }
    out
}

fn parse_rational(tok: &str, line_no: usize) -> Result<BigRational> {
    let (num_str, den_str) = match tok.split_once('/') {
        Some((n, d)) => (n, d),
        None => (tok, "1"),
    };
    let numer = BigInt::from_str(num_str.trim())
        .map_err(|_| anyhow!("line {line_no}: invalid numerator {num_str:?}"))?;
    let denom = BigInt::from_str(den_str.trim())
        .map_err(|_| anyhow!("line {line_no}: invalid denominator {den_str:?}"))?;
    if denom == BigInt::from(0) {
        bail!("line {line_no}: zero denominator");
    }
    Ok(BigRational::new(numer, denom))
}

/// Parses a weight file against a complex. Listed faces must belong to the
/// complex and carry positive weights; everything else defaults to 1.
pub fn parse_weights(text: &str, x: &SimplicialComplex) -> Result<WeightFunction> {
    let mut overrides: BTreeMap<Face, BigRational> = BTreeMap::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = strip_comment(raw);
        if line.trim().is_empty() {
            continue;
        }
        let (face_part, weight_part) = line
            .split_once(':')
            .ok_or_else(|| anyhow!("line {line_no}: expected \"v1 v2 ... : p/q\""))?;
        let tokens: Vec<&str> = face_part.split_whitespace().collect();
        let face = if tokens.is_empty() {
            Face::empty()
        } else {
            parse_face(&tokens, line_no)?
        };
        let weight_tok = weight_part.trim();
        if weight_tok.is_empty() {
            bail!("line {line_no}: missing weight after ':'");
        }
        let value = parse_rational(weight_tok, line_no)?;
        if overrides.insert(face.clone(), value).is_some() {
            bail!("line {line_no}: face {face} listed twice");
        }
    }
    WeightFunction::with_overrides(x, &overrides)
        .map_err(|e| anyhow!("weight file does not fit the complex: {e}"))
}
