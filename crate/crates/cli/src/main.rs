//! `garland`: spectral bounds on simplicial homology from the command line.
//!
//! Subcommands: `analyze` runs the eigenvalue lower/upper bound and
//! homology bound pipelines over a (k, ℓ) grid, `verify` checks the
//! assembly and sign identities plus the interlacing oracles, `homology`
//! computes exact reduced Betti numbers, `spectrum` prints Laplacian
//! eigenvalues, and `generate` emits complex files for the built-in
//! families.
//!
//! Exit codes: 0 when every checked inequality and identity holds, 1 on a
//! violation, 2 on input or usage errors.

mod io;
mod report;

use std::fmt;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use garland_core::garland::{garland_lower_bounds, garland_upper_bounds, homology_upper_bound};
use garland_core::generator;
use garland_core::interlace::{
    garland_system, random_local_system, random_orthonormal, random_symmetric, verify_cauchy,
    verify_interlacing, verify_prop_lower, verify_prop_upper, verify_sign1, verify_sign2,
    verify_sign_product, verify_weyl, Verdict, VerifyMode,
};
use garland_core::laplacian::{laplacian, Flavor, Symmetry};
use garland_core::spectral::{eigenvalues_symmetric, homology_dimension};
use garland_core::{SimplicialComplex, WeightFunction};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use report::{
    render, sig12, AnalyzeDoc, ComplexSummary, HomologyDoc, HomologyRow, PropResult, RunSummary,
    SpectrumDoc, SpectrumRun, VerifyDoc,
};

#[derive(Parser)]
#[command(name = "garland", version, about = "Spectral bounds on simplicial homology via links")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Eigenvalue lower bounds, upper bounds, and homology bounds over a (k, l) grid
    Analyze(AnalyzeArgs),
    /// Assembly identities, sign identities, and interlacing oracles
    Verify(VerifyArgs),
    /// Exact reduced Betti numbers from rational boundary ranks
    Homology(HomologyArgs),
    /// Eigenvalues of the weighted total Laplacian
    Spectrum(SpectrumArgs),
    /// Print a complex file for a built-in family
    Generate(GenerateArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Model {
    /// Full simplex on n vertices
    Simplex,
    /// Boundary of the full simplex on n+1 vertices
    SimplexBoundary,
    /// d-skeleton of the full simplex on n vertices
    Skeleton,
    /// Each d-face of n vertices kept independently with probability p
    RandomPure,
}

#[derive(Args)]
struct InputArgs {
    /// Complex file; omit to generate the input with --model
    #[arg(value_name = "FILE", conflicts_with = "model")]
    file: Option<PathBuf>,
    /// Built-in family used when no file is given
    #[arg(long, value_enum)]
    model: Option<Model>,
    /// Vertex count for --model
    #[arg(long)]
    n: Option<u32>,
    /// Dimension for --model skeleton and random-pure
    #[arg(long)]
    d: Option<i32>,
    /// Face probability for --model random-pure
    #[arg(long)]
    p: Option<f64>,
    /// Seed for --model random-pure and for the verify oracles
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Clone)]
enum WeightSpec {
    Unit,
    Pure,
    File(PathBuf),
}

impl FromStr for WeightSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "unit" => Ok(WeightSpec::Unit),
            "pure" => Ok(WeightSpec::Pure),
            _ => match s.strip_prefix("file:") {
                Some(path) if !path.is_empty() => Ok(WeightSpec::File(PathBuf::from(path))),
                _ => Err(format!("expected unit, pure, or file:<path>, got {s:?}")),
            },
        }
    }
}

impl fmt::Display for WeightSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeightSpec::Unit => write!(f, "unit"),
            WeightSpec::Pure => write!(f, "pure"),
            WeightSpec::File(p) => write!(f, "file:{}", p.display()),
        }
    }
}

#[derive(Args)]
struct AnalyzeArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Laplacian level; the whole grid when omitted
    #[arg(long)]
    k: Option<i32>,
    /// Link dimension; all 0 <= l < k when omitted
    #[arg(long)]
    l: Option<i32>,
    /// Weighting: unit, pure, or file:<path>
    #[arg(long, default_value = "unit")]
    weights: WeightSpec,
    /// Override the threshold-counting tolerance
    #[arg(long)]
    tol: Option<f64>,
    /// Also check the exact rational assembly identities per run
    #[arg(long)]
    exact: bool,
    /// Write the JSON report here instead of stdout
    #[arg(long, value_name = "PATH")]
    json: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PropSuite {
    All,
    Lplus,
    Lminus,
    Signs,
    Interlace,
    Cauchy,
    Weyl,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Which identity families to check
    #[arg(long, value_enum, default_value_t = PropSuite::All)]
    props: PropSuite,
    /// Random draws for the interlace, cauchy, and weyl oracles
    #[arg(long, default_value_t = 50)]
    seeds: u64,
    /// Check the assembly identities in exact rational mode
    #[arg(long)]
    exact: bool,
    /// Weighting for the assembly identities and systems
    #[arg(long, default_value = "unit")]
    weights: WeightSpec,
    /// Write the JSON verdicts here instead of stdout
    #[arg(long, value_name = "PATH")]
    json: Option<PathBuf>,
}

#[derive(Args)]
struct HomologyArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Single homology dimension; all levels when omitted
    #[arg(long)]
    k: Option<i32>,
    /// Write the JSON table here instead of stdout
    #[arg(long, value_name = "PATH")]
    json: Option<PathBuf>,
}

#[derive(Args)]
struct SpectrumArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Single Laplacian level; all levels when omitted
    #[arg(long)]
    k: Option<i32>,
    /// Weighting: unit, pure, or file:<path>
    #[arg(long, default_value = "unit")]
    weights: WeightSpec,
    /// Write the JSON spectra here instead of stdout
    #[arg(long, value_name = "PATH")]
    json: Option<PathBuf>,
}

#[derive(Args)]
struct GenerateArgs {
    /// Built-in family to generate
    #[arg(long, value_enum)]
    model: Model,
    /// Vertex count
    #[arg(long)]
    n: Option<u32>,
    /// Dimension for skeleton and random-pure
    #[arg(long)]
    d: Option<i32>,
    /// Face probability for random-pure
    #[arg(long)]
    p: Option<f64>,
    /// Seed for random-pure
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Analyze(args) => run_analyze(args),
        Command::Verify(args) => run_verify(args),
        Command::Homology(args) => run_homology(args),
        Command::Spectrum(args) => run_spectrum(args),
        Command::Generate(args) => run_generate(args),
    }
}

fn emit(text: &str, path: &Option<PathBuf>) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn generate_model(
    model: Model,
    n: Option<u32>,
    d: Option<i32>,
    p: Option<f64>,
    seed: u64,
) -> Result<SimplicialComplex> {
    let need_n = || n.ok_or_else(|| anyhow!("--model needs --n"));
    let need_d = || d.ok_or_else(|| anyhow!("this model needs --d"));
    let x = match model {
        Model::Simplex => generator::simplex(need_n()?)?,
        Model::SimplexBoundary => generator::simplex_boundary(need_n()?)?,
        Model::Skeleton => generator::skeleton(need_n()?, need_d()?)?,
        Model::RandomPure => {
            let p = p.ok_or_else(|| anyhow!("random-pure needs --p"))?;
            generator::random_pure(need_n()?, need_d()?, p, seed)?
        }
    };
    Ok(x)
}

fn load_complex(input: &InputArgs) -> Result<SimplicialComplex> {
    if let Some(path) = &input.file {
        let text =
            fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        return io::parse_complex(&text).with_context(|| format!("parsing {}", path.display()));
    }
    if let Some(model) = input.model {
        return generate_model(model, input.n, input.d, input.p, input.seed);
    }
    bail!("provide a complex file or --model");
}

fn build_weights(spec: &WeightSpec, x: &SimplicialComplex) -> Result<WeightFunction> {
    match spec {
        WeightSpec::Unit => Ok(WeightFunction::constant(x)),
        WeightSpec::Pure => {
            let d = x.dim().ok_or_else(|| anyhow!("the complex has no faces"))?;
            WeightFunction::pure_cofacet(x, d)
                .map_err(|e| anyhow!("--weights pure: {e}"))
        }
        WeightSpec::File(path) => {
            let text =
                fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            io::parse_weights(&text, x).with_context(|| format!("parsing {}", path.display()))
        }
    }
}

/// The (k, l) pairs selected by the flags: a single pair, one axis fixed,
/// or the whole admissible grid.
fn grid(dim: i32, k: Option<i32>, l: Option<i32>) -> Result<Vec<(i32, i32)>> {
    if let Some(k) = k {
        if k < 1 {
            bail!("--k must be at least 1, got {k}");
        }
        if k > dim {
            bail!("--k {k} exceeds the complex dimension {dim}");
        }
    }
    if let Some(l) = l {
        if l < 0 {
            bail!("--l must be nonnegative, got {l}");
        }
    }
    let pairs: Vec<(i32, i32)> = match (k, l) {
        (Some(k), Some(l)) => {
            if l >= k {
                bail!("need l < k, got k = {k}, l = {l}");
            }
            vec![(k, l)]
        }
        (Some(k), None) => (0..k.min(dim + 1)).map(|l| (k, l)).collect(),
        (None, Some(l)) => ((l + 1)..=dim).map(|k| (k, l)).collect(),
        (None, None) => (1..=dim).flat_map(|k| (0..k).map(move |l| (k, l))).collect(),
    };
    if pairs.is_empty() {
        bail!("no admissible (k, l) pairs for a complex of dimension {dim}");
    }
    Ok(pairs)
}

fn run_analyze(args: AnalyzeArgs) -> Result<bool> {
    let x = load_complex(&args.input)?;
    let w = build_weights(&args.weights, &x)?;
    let dim = x.dim().ok_or_else(|| anyhow!("the complex has no faces"))?;
    if let Some(tol) = args.tol {
        if !tol.is_finite() || tol < 0.0 {
            bail!("--tol must be a nonnegative finite number, got {tol}");
        }
    }
    let weighting = args.weights.to_string();
    let mut runs = Vec::new();
    for (k, l) in grid(dim, args.k, args.l)? {
        let report = match args.tol {
            Some(tol) => homology_upper_bound(&x, &w, k, l, tol)?,
            None => garland_lower_bounds(&x, &w, k, l)?,
        };
        let mut run = RunSummary::new(&report, &weighting);
        if k < dim {
            run.attach_upper(&garland_upper_bounds(&x, &w, k, l)?);
        }
        if args.exact && k <= dim {
            let up = verify_prop_upper(&x, &w, k, l, VerifyMode::Exact)?;
            let down = verify_prop_lower(&x, &w, k, l, VerifyMode::Exact)?;
            run.attach_identities("exact", &up, &down);
        }
        runs.push(run);
    }
    let holds = runs.iter().all(|r| r.holds);
    let doc = AnalyzeDoc { complex: ComplexSummary::new(&x), runs, holds };
    emit(&render(&doc), &args.json)?;
    Ok(holds)
}

fn merge(into: &mut Verdict, v: Verdict) {
    into.holds &= v.holds;
    into.checks += v.checks;
    into.failures += v.failures;
    into.max_violation = into.max_violation.max(v.max_violation);
}

fn run_verify(args: VerifyArgs) -> Result<bool> {
    let x = load_complex(&args.input)?;
    let dim = x.dim().ok_or_else(|| anyhow!("the complex has no faces"))?;
    let w = build_weights(&args.weights, &x)?;
    let mode = if args.exact { VerifyMode::Exact } else { VerifyMode::Float };
    let mode_name = if args.exact { "exact" } else { "float" };
    let wants = |suite: PropSuite| args.props == PropSuite::All || args.props == suite;
    let pairs: Vec<(i32, i32)> =
        (1..=dim).flat_map(|k| (0..k).map(move |l| (k, l))).collect();
    let mut props = Vec::new();

    if wants(PropSuite::Lplus) {
        for &(k, l) in &pairs {
            let v = verify_prop_upper(&x, &w, k, l, mode)?;
            props.push(PropResult::from_verdict(format!("lplus[{mode_name}] k={k} l={l}"), &v));
        }
    }
    if wants(PropSuite::Lminus) {
        for &(k, l) in &pairs {
            let v = verify_prop_lower(&x, &w, k, l, mode)?;
            props.push(PropResult::from_verdict(format!("lminus[{mode_name}] k={k} l={l}"), &v));
        }
    }
    if wants(PropSuite::Signs) {
        let mut facet = Verdict { holds: true, checks: 0, failures: 0, max_violation: 0.0 };
        for k in 0..=dim {
            merge(&mut facet, verify_sign_product(&x, k)?);
        }
        props.push(PropResult::from_verdict("signs facet-product", &facet));
        for &(k, l) in &pairs {
            let v1 = verify_sign1(&x, k, l)?;
            props.push(PropResult::from_verdict(format!("signs one-step k={k} l={l}"), &v1));
            let v2 = verify_sign2(&x, k, l)?;
            props.push(PropResult::from_verdict(format!("signs two-face k={k} l={l}"), &v2));
        }
    }
    if wants(PropSuite::Interlace) {
        for &(k, l) in &pairs {
            let sys = garland_system(&x, &w, k, l)?;
            let v = verify_interlacing(&sys)?;
            props.push(PropResult::from_verdict(format!("interlace system k={k} l={l}"), &v));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(args.input.seed ^ 0x1a7e);
        let mut agg = Verdict { holds: true, checks: 0, failures: 0, max_violation: 0.0 };
        for _ in 0..args.seeds {
            let sys = random_local_system(&mut rng);
            merge(&mut agg, verify_interlacing(&sys)?);
        }
        props.push(PropResult::from_verdict(
            format!("interlace random x{}", args.seeds),
            &agg,
        ));
    }
    if wants(PropSuite::Cauchy) {
        let mut rng = ChaCha8Rng::seed_from_u64(args.input.seed ^ 0xca0c);
        let mut agg = Verdict { holds: true, checks: 0, failures: 0, max_violation: 0.0 };
        for _ in 0..args.seeds {
            let n = rng.gen_range(2..=8usize);
            let m = rng.gen_range(1..=n);
            let a = random_symmetric(&mut rng, n, 3.0);
            let s = random_orthonormal(&mut rng, n, m);
            merge(&mut agg, verify_cauchy(&a, &s)?);
        }
        props.push(PropResult::from_verdict(format!("cauchy random x{}", args.seeds), &agg));
    }
    if wants(PropSuite::Weyl) {
        let mut rng = ChaCha8Rng::seed_from_u64(args.input.seed ^ 0x3e71);
        let mut agg = Verdict { holds: true, checks: 0, failures: 0, max_violation: 0.0 };
        for _ in 0..args.seeds {
            let n = rng.gen_range(1..=8usize);
            let a = random_symmetric(&mut rng, n, 3.0);
            let b = random_symmetric(&mut rng, n, 3.0);
            merge(&mut agg, verify_weyl(&a, &b)?);
        }
        props.push(PropResult::from_verdict(format!("weyl random x{}", args.seeds), &agg));
    }

    let holds = props.iter().all(|p| p.holds);
    let doc = VerifyDoc { complex: ComplexSummary::new(&x), props, holds };
    emit(&render(&doc), &args.json)?;
    Ok(holds)
}

fn run_homology(args: HomologyArgs) -> Result<bool> {
    let x = load_complex(&args.input)?;
    let dim = x.dim().ok_or_else(|| anyhow!("the complex has no faces"))?;
    let ks: Vec<i32> = match args.k {
        Some(k) => vec![k],
        None => (0..=dim).collect(),
    };
    let mut rows = Vec::new();
    for k in ks {
        let r = homology_dimension(&x, k)?;
        rows.push(HomologyRow {
            k,
            betti: r.betti,
            rank_down: r.rank_down,
            rank_up: r.rank_up,
        });
    }
    let doc = HomologyDoc { complex: ComplexSummary::new(&x), betti: rows };
    emit(&render(&doc), &args.json)?;
    Ok(true)
}

fn run_spectrum(args: SpectrumArgs) -> Result<bool> {
    let x = load_complex(&args.input)?;
    let dim = x.dim().ok_or_else(|| anyhow!("the complex has no faces"))?;
    let w = build_weights(&args.weights, &x)?;
    let weighting = args.weights.to_string();
    let ks: Vec<i32> = match args.k {
        Some(k) => vec![k],
        None => (0..=dim).collect(),
    };
    let mut runs = Vec::new();
    for k in ks {
        let lap = laplacian(&x, &w, k, Flavor::Total, Symmetry::Symmetrized)?;
        let spec = eigenvalues_symmetric(&lap.matrix)?;
        runs.push(SpectrumRun {
            k,
            weighting: weighting.clone(),
            flavor: "total",
            spectrum: spec.values().iter().map(|&v| sig12(v)).collect(),
        });
    }
    let doc = SpectrumDoc { complex: ComplexSummary::new(&x), runs };
    emit(&render(&doc), &args.json)?;
    Ok(true)
}

fn run_generate(args: GenerateArgs) -> Result<bool> {
    let x = generate_model(args.model, args.n, args.d, args.p, args.seed)?;
    print!("{}", io::serialize_complex(&x));
    Ok(true)
}
