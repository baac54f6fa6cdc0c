//! Command-line front end: matrix files, one-off computations and verification suites.

pub mod matrix_io;
pub mod report;

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use sectormeans::cones::sector_angle;
use sectormeans::maps_norms::{numerical_radius, ui_norm, NormKind};
use sectormeans::means::{geometric_mean, geometric_mean_integral, principal_power, MeanEngine};
use sectormeans::numerics::ComplexMatrix;
use sectormeans::quadrature::{quadrature_rule, MeanOrder, DEFAULT_NODES};
use sectormeans::verify::{self, Check, EngineChoice, Suite, VerifyConfig};

use matrix_io::{matrix_to_string, parse_matrix};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_PRECONDITION: i32 = 2;
pub const EXIT_VERIFICATION: i32 = 3;

/// Environment variable capping trial parallelism (`0` = one thread per core).
pub const THREADS_ENV: &str = "SECTORMEANS_THREADS";

#[derive(Debug, Parser)]
#[command(name = "sectormeans", version, about = "Geometric means of accretive matrices and their inequalities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate one operation on matrix files.
    Compute {
        #[command(subcommand)]
        op: ComputeOp,
    },
    /// Fuzz a suite of inequality and identity checks.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum PowerEngine {
    Quad,
    Eigen,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MeanMethod {
    Quad,
    Eigen,
    Integral,
}

#[derive(Debug, Subcommand)]
enum ComputeOp {
    /// Principal power A^r.
    Power {
        #[arg(long, allow_hyphen_values = true)]
        r: f64,
        #[arg(long, value_enum, default_value = "quad")]
        engine: PowerEngine,
        #[arg(long, default_value_t = DEFAULT_NODES)]
        nodes: usize,
        a: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Weighted geometric mean A #_r B.
    Mean {
        #[arg(long, allow_hyphen_values = true)]
        r: f64,
        #[arg(long, value_enum, default_value = "quad")]
        engine: MeanMethod,
        #[arg(long, default_value_t = DEFAULT_NODES)]
        nodes: usize,
        a: PathBuf,
        b: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Least sector half-angle containing the numerical range.
    Sector { a: PathBuf },
    /// Numerical radius.
    Wradius { a: PathBuf },
    /// Unitarily invariant norm: operator, frobenius, trace or kyfan:K.
    Norm {
        #[arg(long, default_value = "operator", value_parser = parse_norm)]
        kind: NormKind,
        a: PathBuf,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// all, r12, rneg, r01 or identities.
    suite: String,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long, default_value_t = 500)]
    trials: usize,
    /// Inclusive dimension range, `A..B` or a single dimension.
    #[arg(long, default_value = "2..8", value_parser = parse_dims)]
    dims: (usize, usize),
    #[arg(long, default_value_t = DEFAULT_NODES)]
    nodes: usize,
    #[arg(long, default_value_t = 1e-8)]
    tol: f64,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    #[arg(long, value_enum, default_value = "quad")]
    engine: PowerEngine,
    /// Fixed order r; checks whose hypothesis excludes it are skipped.
    #[arg(long, allow_hyphen_values = true)]
    r: Option<f64>,
    /// Comma-separated sector half-angles in radians.
    #[arg(long, value_delimiter = ',', default_values_t = verify::DEFAULT_ALPHAS)]
    alphas: Vec<f64>,
    /// Sample every matrix positive definite (all angles become zero).
    #[arg(long)]
    pd_only: bool,
    /// Run a single catalog entry.
    #[arg(long)]
    check: Option<String>,
    /// Reproduce one trial of `--check` from its seed.
    #[arg(long, requires = "check")]
    replay: Option<u64>,
    /// Write the report here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

fn parse_dims(s: &str) -> Result<(usize, usize), String> {
    let parse = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("bad dimension {t:?}: {e}"));
    match s.split_once("..") {
        Some((lo, hi)) => Ok((parse(lo)?, parse(hi.trim_start_matches('='))?)),
        None => parse(s).map(|n| (n, n)),
    }
}

fn parse_norm(s: &str) -> Result<NormKind, String> {
    match s {
        "operator" => Ok(NormKind::Operator),
        "frobenius" => Ok(NormKind::Frobenius),
        "trace" => Ok(NormKind::Trace),
        _ => match s.strip_prefix("kyfan:").map(str::parse::<usize>) {
            Some(Ok(k)) if k > 0 => Ok(NormKind::KyFan(k)),
            _ => Err(format!("unknown norm {s:?}; expected operator, frobenius, trace or kyfan:K")),
        },
    }
}

/// A failed command: exit code plus diagnostic.
struct Failure(i32, String);

impl Failure {
    fn precondition(e: impl std::fmt::Display) -> Self {
        Failure(EXIT_PRECONDITION, e.to_string())
    }

    fn usage(e: impl std::fmt::Display) -> Self {
        Failure(EXIT_USAGE, e.to_string())
    }
}

fn emit(text: &str, output: Option<&PathBuf>, out: &mut dyn Write) -> Result<(), Failure> {
    match output {
        Some(path) => fs::write(path, text).map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display()))),
        None => out.write_all(text.as_bytes()).map_err(Failure::usage),
    }
}

fn load(path: &PathBuf) -> Result<ComplexMatrix, Failure> {
    parse_matrix(path).map_err(|e| Failure::precondition(format!("{}: {e}", path.display())))
}

fn order(r: f64) -> Result<MeanOrder, Failure> {
    MeanOrder::new(r).map_err(Failure::usage)
}

fn compute(op: ComputeOp, out: &mut dyn Write) -> Result<(), Failure> {
    match op {
        ComputeOp::Power { r, engine, nodes, a, output } => {
            let r = order(r)?;
            let engine = match engine {
                PowerEngine::Quad => MeanEngine::Quadrature { nodes },
                PowerEngine::Eigen => MeanEngine::Eigen,
            };
            let p = principal_power(&load(&a)?, r, engine).map_err(Failure::precondition)?;
            emit(&(matrix_to_string(&p) + "\n"), output.as_ref(), out)
        }
        ComputeOp::Mean { r, engine, nodes, a, b, output } => {
            let r = order(r)?;
            let (a, b) = (load(&a)?, load(&b)?);
            let g = match engine {
                MeanMethod::Quad => geometric_mean(&a, &b, r, MeanEngine::Quadrature { nodes }),
                MeanMethod::Eigen => geometric_mean(&a, &b, r, MeanEngine::Eigen),
                MeanMethod::Integral if r.measure_exponent().is_none() => {
                    geometric_mean(&a, &b, r, MeanEngine::Quadrature { nodes })
                }
                MeanMethod::Integral => {
                    let rule = quadrature_rule(r, nodes).map_err(Failure::usage)?;
                    geometric_mean_integral(&a, &b, &rule)
                }
            }
            .map_err(Failure::precondition)?;
            emit(&(matrix_to_string(&g) + "\n"), output.as_ref(), out)
        }
        ComputeOp::Sector { a } => {
            let alpha = sector_angle(&load(&a)?).map_err(Failure::precondition)?;
            emit(&format!("{}\n", alpha.radians()), None, out)
        }
        ComputeOp::Wradius { a } => emit(&format!("{}\n", numerical_radius(&load(&a)?)), None, out),
        ComputeOp::Norm { kind, a } => {
            let a = load(&a)?;
            if let NormKind::KyFan(k) = kind {
                if k > a.dim() {
                    return Err(Failure::usage(format!("kyfan:{k} exceeds the dimension {}", a.dim())));
                }
            }
            let value = ui_norm(&a, kind).map_err(Failure::precondition)?;
            emit(&format!("{value}\n"), None, out)
        }
    }
}

fn valid_ids() -> String {
    verify::catalog().iter().map(|c| c.id).collect::<Vec<_>>().join(", ")
}

fn run_verify(args: VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), Failure> {
    let suite: Suite = args.suite.parse().map_err(|_| {
        let names: Vec<_> = Suite::ALL.iter().map(|s| s.name()).collect();
        Failure::usage(format!("unknown suite {:?}; valid suites: {}", args.suite, names.join(", ")))
    })?;
    let checks: Vec<Check> = match &args.check {
        Some(id) => vec![verify::find_check(id)
            .ok_or_else(|| Failure::usage(format!("unknown check id {id:?}; valid ids: {}", valid_ids())))?],
        None => suite.checks(),
    };
    let config = VerifyConfig {
        dims: args.dims,
        trials: args.trials,
        tol: args.tol,
        nodes: args.nodes,
        engine: match args.engine {
            PowerEngine::Quad => EngineChoice::Quad,
            PowerEngine::Eigen => EngineChoice::Eigen,
        },
        alphas: args.alphas,
        pd_only: args.pd_only,
        r: args.r,
    };
    config.validate().map_err(Failure::usage)?;

    if let Some(seed) = args.replay {
        let trial = verify::replay(&checks[0], &config, seed);
        let text = serde_json::to_string_pretty(&trial).expect("trial reports serialize") + "\n";
        emit(&text, args.output.as_ref(), out)?;
        return if trial.violated || trial.margin.is_none() {
            Err(Failure(EXIT_VERIFICATION, format!("{} trial {seed} failed", trial.check)))
        } else {
            Ok(())
        };
    }

    let report = verify::run_checks(suite.name(), &checks, &config, args.seed).map_err(Failure::usage)?;
    let text = match args.format {
        Format::Json => report::to_json(&report),
        Format::Csv => report::to_csv(&report),
    };
    emit(&text, args.output.as_ref(), out)?;
    let s = &report.summary;
    let _ = writeln!(
        err,
        "{}: {} checks, {} trials, {} violations, {} sampler failures",
        report.suite, s.checks, s.trials, s.violations, s.sampler_failures
    );
    if s.passed {
        Ok(())
    } else {
        Err(Failure(EXIT_VERIFICATION, format!("failing checks: {}", s.failed.join(", "))))
    }
}

fn configure_threads() -> Result<(), Failure> {
    let Ok(value) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let threads: usize = value
        .trim()
        .parse()
        .map_err(|_| Failure::usage(format!("{THREADS_ENV} must be a non-negative integer, got {value:?}")))?;
    // A second initialization (e.g. repeated in-process runs) keeps the first pool.
    let _ = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global();
    Ok(())
}

/// Runs the command line `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(err, "{}", e.render())
            } else {
                write!(out, "{}", e.render())
            };
            return code;
        }
    };
    let result = configure_threads().and_then(|()| match cli.command {
        Command::Compute { op } => compute(op, out),
        Command::Verify(args) => run_verify(args, out, err),
    });
    match result {
        Ok(()) => EXIT_OK,
        Err(Failure(code, message)) => {
            let _ = writeln!(err, "error: {message}");
            code
        }
    }
}
