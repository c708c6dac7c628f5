//! Command-line frontend: algebra inspection, metric evaluation, dual-space
//! queries, isometry construction/verification/factorization, and the
//! seeded property-suite runner.
//!
//! Machine-readable JSON goes to stdout; human summaries go to stderr.
//! Exit codes: 0 success/all-pass, 1 property or verification failure,
//! 2 usage error (bad arguments, unreadable input, malformed JSON).

use std::fmt::Display;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use jordan_cone::{
    classify_isometry_group, default_algebras, dual_norm, extreme_point_check, factor_hilbert_isometry,
    factor_variation_isometry, hamhalter_decompose, hilbert_distance, orthogonal_decomposition,
    quotient_norm, run_suite, sample_element, sample_interior, sample_jordan_iso, support_projection,
    variation_seminorm, verify_hilbert_isometry, verify_variation_isometry, AffineVariationIsometry,
    AlgebraDescriptor, CoordLinearMap, Element, Functional, HilbertIsometry, QuotientClass, Ray,
    Rng, Sign, SuiteConfig, VariationIsometry,
};

#[derive(Parser)]
#[command(
    name = "jordan-cone",
    version,
    about = "Symmetric-cone toolkit: spectral calculus, Hilbert metric, dual faces, isometries"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    global: Global,
}

#[derive(Args)]
struct Global {
    /// Master seed (falls back to JORDAN_CONE_SEED, then 7)
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Sample count for verification and suite properties
    #[arg(long, global = true, default_value_t = 200)]
    samples: usize,
    /// Multiplier applied to every documented tolerance
    #[arg(long = "tol-scale", global = true, default_value_t = 1.0)]
    tol_scale: f64,
    /// Emit only the JSON payload (suppress the stderr summary)
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Inspect algebra descriptors
    Algebra {
        #[command(subcommand)]
        cmd: AlgebraCmd,
    },
    /// Evaluate cone metrics
    Metric {
        #[command(subcommand)]
        cmd: MetricCmd,
    },
    /// Dual-space queries on functionals
    Dual {
        #[command(subcommand)]
        cmd: DualCmd,
    },
    /// Construct, apply, verify, and factor isometries
    Iso {
        #[command(subcommand)]
        cmd: IsoCmd,
    },
    /// Isometry-group structure of an algebra
    Group {
        #[command(subcommand)]
        cmd: GroupCmd,
    },
    /// Run a property suite over the default algebras
    Verify {
        /// algebra | spectral | cone | dual | isometry | sampling | acceptance | all
        suite: String,
    },
}

#[derive(Subcommand)]
enum AlgebraCmd {
    /// Report dimension, rank, and structure of a descriptor
    Info { algebra: PathBuf },
}

#[derive(Subcommand)]
enum MetricCmd {
    /// Projective distance between two interior elements
    Hilbert { x: PathBuf, y: PathBuf },
    /// Variation seminorm and quotient norm of an element
    Variation { x: PathBuf },
}

#[derive(Subcommand)]
enum DualCmd {
    /// Split a functional into orthogonal positive parts
    Decompose { phi: PathBuf },
    /// Support projection of a positive functional
    Support { phi: PathBuf },
    /// Test whether a hyperplane functional is an extreme point of 2B
    Extreme { phi: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum IsoKind {
    Hilbert,
    Variation,
    Affine,
}

#[derive(Subcommand)]
enum IsoCmd {
    /// Sample a random isometry of the given algebra
    Make {
        algebra: PathBuf,
        #[arg(long, value_enum, default_value = "hilbert")]
        kind: IsoKind,
    },
    /// Apply an isometry (any serialized form) to an element
    Apply { iso: PathBuf, x: PathBuf },
    /// Measure the distance-preservation defect of an isometry
    Verify { iso: PathBuf },
    /// Factor a black-box isometry into structured form
    Factor { iso: PathBuf },
    /// Decompose an affine quotient isometry into sign, algebra part, and shift
    Hamhalter { map: PathBuf },
}

#[derive(Subcommand)]
enum GroupCmd {
    /// Classify the ray-isometry group of an algebra
    Classify { algebra: PathBuf },
}

struct Failure {
    message: String,
    code: u8,
}

impl Failure {
    fn usage(message: impl Display) -> Failure {
        Failure { message: message.to_string(), code: 2 }
    }
}

impl From<jordan_cone::Error> for Failure {
    fn from(e: jordan_cone::Error) -> Failure {
        Failure::usage(e)
    }
}

type CmdResult = Result<ExitCode, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn resolve_seed(global: &Global) -> Result<u64, Failure> {
    if let Some(s) = global.seed {
        return Ok(s);
    }
    match std::env::var("JORDAN_CONE_SEED") {
        Ok(v) => v
            .parse::<u64>()
            .map_err(|_| Failure::usage(format!("JORDAN_CONE_SEED is not a valid seed: {v:?}"))),
        Err(_) => Ok(7),
    }
}

fn read_file(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path)
        .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))
}

fn emit(global: &Global, payload: &serde_json::Value, summary: impl Display) {
    println!("{}", serde_json::to_string_pretty(payload).expect("serializable payload"));
    if !global.json {
        eprintln!("{summary}");
    }
}

fn run(cli: &Cli) -> CmdResult {
    let seed = resolve_seed(&cli.global)?;
    match &cli.command {
        Command::Algebra { cmd: AlgebraCmd::Info { algebra } } => algebra_info(cli, algebra),
        Command::Metric { cmd } => metric(cli, cmd),
        Command::Dual { cmd } => dual(cli, cmd),
        Command::Iso { cmd } => iso(cli, cmd, seed),
        Command::Group { cmd: GroupCmd::Classify { algebra } } => classify(cli, algebra),
        Command::Verify { suite } => verify(cli, suite, seed),
    }
}

fn load_algebra(path: &Path) -> Result<AlgebraDescriptor, Failure> {
    Ok(AlgebraDescriptor::from_json(&read_file(path)?)?)
}

fn load_element(path: &Path) -> Result<Element, Failure> {
    Ok(Element::from_json(&read_file(path)?)?)
}

fn load_functional(path: &Path) -> Result<Functional, Failure> {
    Ok(Functional::from_json(&read_file(path)?)?)
}

fn algebra_info(cli: &Cli, path: &Path) -> CmdResult {
    let alg = load_algebra(path)?;
    let summands = match &alg {
        AlgebraDescriptor::DirectSum { summands } => summands.len(),
        _ => 1,
    };
    let payload = json!({
        "algebra": alg,
        "dim": alg.dim(),
        "rank": alg.rank(),
        "summands": summands,
    });
    emit(
        &cli.global,
        &payload,
        format!("dim {} rank {} ({} summand{})", alg.dim(), alg.rank(), summands,
            if summands == 1 { "" } else { "s" }),
    );
    Ok(ExitCode::SUCCESS)
}

fn metric(cli: &Cli, cmd: &MetricCmd) -> CmdResult {
    match cmd {
        MetricCmd::Hilbert { x, y } => {
            let x = load_element(x)?;
            let y = load_element(y)?;
            let d = hilbert_distance(&x, &y)?;
            emit(&cli.global, &json!({ "distance": d }), format!("projective distance {d:.12}"));
        }
        MetricCmd::Variation { x } => {
            let x = load_element(x)?;
            let v = variation_seminorm(&x);
            let q = quotient_norm(&x);
            emit(
                &cli.global,
                &json!({ "variation_seminorm": v, "quotient_norm": q }),
                format!("variation {v:.12}, quotient norm {q:.12}"),
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn dual(cli: &Cli, cmd: &DualCmd) -> CmdResult {
    match cmd {
        DualCmd::Decompose { phi } => {
            let phi = load_functional(phi)?;
            let (plus, minus) = orthogonal_decomposition(&phi)?;
            let payload = json!({
                "plus": plus,
                "minus": minus,
                "plus_norm": dual_norm(&plus),
                "minus_norm": dual_norm(&minus),
            });
            emit(
                &cli.global,
                &payload,
                format!("‖φ⁺‖ = {:.9}, ‖φ⁻‖ = {:.9}", dual_norm(&plus), dual_norm(&minus)),
            );
        }
        DualCmd::Support { phi } => {
            let phi = load_functional(phi)?;
            let s = support_projection(&phi)?;
            let payload = json!({ "projection": s.element(), "rank": s.rank() });
            emit(&cli.global, &payload, format!("support projection of rank {}", s.rank()));
        }
        DualCmd::Extreme { phi } => {
            let phi = load_functional(phi)?;
            let extreme = extreme_point_check(&phi)?;
            emit(
                &cli.global,
                &json!({ "extreme": extreme }),
                if extreme { "extreme point" } else { "not an extreme point" },
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

/// Any serialized isometry the `iso` verbs accept, tried most-specific first.
enum AnyIso {
    Hilbert(HilbertIsometry),
    Affine(AffineVariationIsometry),
    Variation(VariationIsometry),
    Linear(CoordLinearMap),
}

fn load_iso(path: &Path) -> Result<AnyIso, Failure> {
    let text = read_file(path)?;
    if let Ok(h) = HilbertIsometry::from_json(&text) {
        return Ok(AnyIso::Hilbert(h));
    }
    if let Ok(t) = AffineVariationIsometry::from_json(&text) {
        return Ok(AnyIso::Affine(t));
    }
    if let Ok(v) = serde_json::from_str::<VariationIsometry>(&text) {
        return Ok(AnyIso::Variation(v));
    }
    if let Ok(m) = CoordLinearMap::from_json(&text) {
        return Ok(AnyIso::Linear(m));
    }
    Err(Failure::usage(format!("{} is not a recognized isometry encoding", path.display())))
}

fn iso(cli: &Cli, cmd: &IsoCmd, seed: u64) -> CmdResult {
    match cmd {
        IsoCmd::Make { algebra, kind } => {
            let alg = load_algebra(algebra)?;
            let mut rng = Rng::new(seed);
            let eps = if rng.next_bool() { Sign::Plus } else { Sign::Minus };
            let payload = match kind {
                IsoKind::Hilbert => {
                    let h = HilbertIsometry::new(
                        eps,
                        sample_interior(&alg, &mut rng),
                        sample_jordan_iso(&alg, &mut rng),
                    )?;
                    serde_json::to_value(&h).expect("serializable")
                }
                IsoKind::Variation => {
                    let v = VariationIsometry::new(eps, sample_jordan_iso(&alg, &mut rng));
                    serde_json::to_value(&v).expect("serializable")
                }
                IsoKind::Affine => loop {
                    let cand = AffineVariationIsometry::new(
                        eps,
                        sample_jordan_iso(&alg, &mut rng),
                        Functional::new(sample_element(&alg, &mut rng).scale(0.25)),
                    )?;
                    if cand.is_surjective() {
                        break serde_json::to_value(&cand).expect("serializable");
                    }
                },
            };
            emit(&cli.global, &payload, format!("sampled isometry with seed {seed}"));
        }
        IsoCmd::Apply { iso, x } => {
            let x = load_element(x)?;
            let payload = match load_iso(iso)? {
                AnyIso::Hilbert(h) => {
                    let img = h.apply_ray(&Ray::of(&x)?)?;
                    json!({ "image": img.representative() })
                }
                AnyIso::Affine(t) => json!({ "image": t.apply(&x)? }),
                AnyIso::Variation(v) => {
                    let img = v.apply_class(&QuotientClass::of(&x))?;
                    json!({ "image": img.representative() })
                }
                AnyIso::Linear(m) => json!({ "image": m.apply(&x)? }),
            };
            emit(&cli.global, &payload, "applied");
        }
        IsoCmd::Verify { iso } => {
            let samples = cli.global.samples;
            let residual = match load_iso(iso)? {
                AnyIso::Hilbert(h) => {
                    verify_hilbert_isometry(&h.as_ray_map(), h.domain(), seed, samples)?
                }
                AnyIso::Variation(v) => verify_variation_isometry(&v.as_matrix(), seed, samples)?,
                AnyIso::Linear(m) => verify_variation_isometry(&m, seed, samples)?,
                AnyIso::Affine(t) => {
                    // Affine forms act on quotient classes; measure the
                    // variation-distance defect directly.
                    let mut rng = Rng::new(seed);
                    let mut worst: f64 = 0.0;
                    for _ in 0..samples {
                        let a = sample_element(t.domain(), &mut rng);
                        let b = sample_element(t.domain(), &mut rng);
                        let d = variation_seminorm(&a.sub(&b)?);
                        let d2 = variation_seminorm(&t.apply(&a)?.sub(&t.apply(&b)?)?);
                        worst = worst.max((d - d2).abs() / (1.0 + d));
                    }
                    worst
                }
            };
            let tolerance = 1e-8 * cli.global.tol_scale;
            let pass = residual <= tolerance;
            emit(
                &cli.global,
                &json!({ "residual": residual, "tolerance": tolerance, "pass": pass, "samples": samples }),
                format!("defect {residual:.3e} over {samples} samples → {}",
                    if pass { "pass" } else { "FAIL" }),
            );
            if !pass {
                return Ok(ExitCode::from(1));
            }
        }
        IsoCmd::Factor { iso } => {
            let payload = match load_iso(iso)? {
                AnyIso::Hilbert(h) => {
                    let back = factor_hilbert_isometry(
                        &h.as_ray_map(),
                        h.domain(),
                        h.codomain(),
                        seed,
                        cli.global.samples,
                    )?;
                    serde_json::to_value(&back).expect("serializable")
                }
                AnyIso::Variation(v) => {
                    let back = factor_variation_isometry(&v.as_matrix(), seed, cli.global.samples)?;
                    serde_json::to_value(&back).expect("serializable")
                }
                AnyIso::Linear(m) => {
                    let back = factor_variation_isometry(&m, seed, cli.global.samples)?;
                    serde_json::to_value(&back).expect("serializable")
                }
                AnyIso::Affine(_) => {
                    return Err(Failure::usage(
                        "affine forms are decomposed by `iso hamhalter`, not `iso factor`",
                    ))
                }
            };
            emit(&cli.global, &payload, "factored");
        }
        IsoCmd::Hamhalter { map } => {
            let m = CoordLinearMap::from_json(&read_file(map)?)?;
            let t = hamhalter_decompose(&m, seed, cli.global.samples)?;
            let payload = serde_json::to_value(&t).expect("serializable");
            emit(&cli.global, &payload, "decomposed into sign, algebra part, and shift");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn classify(cli: &Cli, path: &Path) -> CmdResult {
    let alg = load_algebra(path)?;
    let group = classify_isometry_group(&alg);
    let payload = json!({ "algebra": alg, "group": group });
    emit(&cli.global, &payload, format!("{group:?}"));
    Ok(ExitCode::SUCCESS)
}

fn verify(cli: &Cli, suite: &str, seed: u64) -> CmdResult {
    let cfg = SuiteConfig { seed, samples: cli.global.samples, tol_scale: cli.global.tol_scale };
    let report = run_suite(suite, &default_algebras(), &cfg)?;
    println!("{}", serde_json::to_string_pretty(&report).expect("serializable report"));
    if !cli.global.json {
        for rec in &report.properties {
            eprintln!(
                "[{}] {:<42} samples={:<7} residual={:.3e} tolerance={:.1e}",
                if rec.pass { "pass" } else { "FAIL" },
                rec.name,
                rec.samples,
                rec.max_residual,
                rec.tolerance,
            );
        }
        eprintln!(
            "suite {} with seed {}: {} ({} properties, {} ms)",
            report.suite,
            report.seed,
            if report.pass { "all-pass" } else { "FAILED" },
            report.properties.len(),
            report.wall_time_ms,
        );
    }
    Ok(if report.pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
}
