//! `quadform`: solve, classify and benchmark quadratic equations.
//!
//! Exit status: 0 success, 1 domain or convergence failure, 2 usage error.

mod commands;
mod parse;
mod report;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use quadform::bench::{FamilyKind, Method};
use quadform::CScalar;

#[derive(Parser, Debug)]
#[command(
    name = "quadform",
    version,
    about = "Quadratic equation solvers and benchmarks"
)]
struct Cli {
    /// Report format; csv is only valid for `bench`.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Solve ax² + bx + c = 0.
    Solve(SolveArgs),
    /// Classify the roots of x² − 4ux + v² from u and v².
    Classify(ClassifyArgs),
    /// Depth of a well from the time until the splash is heard.
    Well(WellArgs),
    /// Find a polynomial root with Muller's method.
    Muller(MullerArgs),
    /// Score the solvers against the high-precision oracle.
    Bench(BenchArgs),
}

#[derive(Args, Debug)]
pub struct SolveArgs {
    /// Coefficient a, as `re` or `re,im`.
    #[arg(long, allow_hyphen_values = true, value_parser = parse::parse_scalar)]
    pub a: CScalar,
    #[arg(long, allow_hyphen_values = true, value_parser = parse::parse_scalar)]
    pub b: CScalar,
    #[arg(long, allow_hyphen_values = true, value_parser = parse::parse_scalar)]
    pub c: CScalar,
    #[arg(long, value_enum, default_value_t = SolveMethod::Robust)]
    pub method: SolveMethod,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SolveMethod {
    Classical,
    Reciprocal,
    Alternative,
    Hyperbolic,
    Trigonometric,
    Robust,
    All,
}

#[derive(Args, Debug)]
pub struct ClassifyArgs {
    #[arg(long, allow_hyphen_values = true, value_parser = parse::parse_finite)]
    pub u: f64,
    #[arg(long, allow_hyphen_values = true, value_parser = parse::parse_finite)]
    pub v2: f64,
    #[arg(long, value_parser = parse::parse_finite,
          default_value_t = quadform::classification::DEFAULT_CLASSIFY_TOL)]
    pub tol: f64,
}

#[derive(Args, Debug)]
pub struct WellArgs {
    /// Total time in seconds.
    #[arg(long, allow_hyphen_values = true, value_parser = parse::parse_finite)]
    pub t: f64,
    /// Speed of sound, m/s.
    #[arg(long, allow_hyphen_values = true, value_parser = parse::parse_finite,
          default_value_t = quadform::well::DEFAULT_SOUND_SPEED)]
    pub c: f64,
    /// Gravitational acceleration, m/s².
    #[arg(long, allow_hyphen_values = true, value_parser = parse::parse_finite,
          default_value_t = quadform::well::DEFAULT_GRAVITY)]
    pub g: f64,
    /// Also print the truncated series of this order.
    #[arg(long, value_parser = clap::value_parser!(u32).range(2..=3))]
    pub series: Option<u32>,
}

#[derive(Args, Debug)]
pub struct MullerArgs {
    /// Coefficients highest degree first; complex ones as `(re,im)`.
    #[arg(long, allow_hyphen_values = true, value_parser = parse::parse_poly)]
    pub poly: parse::Poly,
    #[arg(long, allow_hyphen_values = true, value_parser = parse::parse_scalar)]
    pub x0: CScalar,
    #[arg(long, allow_hyphen_values = true, value_parser = parse::parse_scalar)]
    pub x1: CScalar,
    #[arg(long, allow_hyphen_values = true, value_parser = parse::parse_scalar)]
    pub x2: CScalar,
    /// Residual tolerance.
    #[arg(long, value_parser = parse::parse_finite)]
    pub tol: Option<f64>,
    #[arg(long)]
    pub max_iter: Option<usize>,
}

#[derive(Args, Debug)]
pub struct BenchArgs {
    #[arg(long)]
    pub family: FamilyKind,
    /// Family severity; defaults per family.
    #[arg(long, value_parser = parse::parse_finite)]
    pub param: Option<f64>,
    #[arg(long, default_value_t = 100)]
    pub count: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Comma-separated methods, or `all`.
    #[arg(long, default_value = "all", value_parser = parse_methods)]
    pub methods: MethodList,
    /// Write the report here instead of standard output.
    #[arg(long)]
    pub out: Option<std::path::PathBuf>,
}

#[derive(Debug, Clone)]
pub struct MethodList(pub Vec<Method>);

fn parse_methods(s: &str) -> Result<MethodList, String> {
    if s == "all" {
        return Ok(MethodList(Method::ALL.to_vec()));
    }
    s.split(',')
        .map(|m| {
            m.trim()
                .parse::<Method>()
                .map_err(|_| format!("unknown method '{m}'"))
        })
        .collect::<Result<Vec<_>, _>>()
        .map(MethodList)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Bench(args) => commands::bench(args, cli.format),
        _ if cli.format == Format::Csv => Err(commands::CliError::Usage(
            "--format csv is only supported by `bench`".into(),
        )),
        Command::Solve(args) => commands::solve(args),
        Command::Classify(args) => commands::classify(args),
        Command::Well(args) => commands::well(args),
        Command::Muller(args) => commands::muller(args),
    };
    match outcome {
        Ok(outcome) => {
            let mut stdout = std::io::stdout().lock();
            let written = match (&outcome.report, cli.format) {
                (None, _) => Ok(()),
                (Some(report), Format::Json) => writeln!(stdout, "{}", report.json),
                (Some(report), Format::Text | Format::Csv) => write!(stdout, "{}", report.text),
            };
            if let Err(e) = written.and_then(|_| stdout.flush()) {
                eprintln!("error: {e}");
                return ExitCode::FAILURE;
            }
            ExitCode::from(outcome.status)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.status())
        }
    }
}
