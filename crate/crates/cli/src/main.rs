//! `octohopf` command-line entry point.
//!
//! Exit status: 0 when every check passes, 1 when a check fails, 2 for
//! invalid arguments, 3 for I/O errors. Every flag can also be set through
//! an `OCTOHOPF_*` environment variable.

mod run;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use octohopf::seed::DEFAULT_SEED;
use octohopf::AlgebraDim;

use run::{export_leaf, verify, CliError, LeafRequest, SlopeSpec, SuiteConfig};

#[derive(Parser, Debug)]
#[command(name = "octohopf", version, about = "Verify the octonionic Hopf groupoid, algebroid and Lie 3-algebroid")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run verification suites and write a report.
    Verify(VerifyArgs),
    /// Sample points on one leaf and write them as CSV.
    ExportLeaf(ExportArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Algebra,
    Leaves,
    Groupoid,
    Algebroid,
    Lie3,
    Foliation,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Backend {
    Exact,
    Float,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

fn parse_dim(s: &str) -> Result<AlgebraDim, String> {
    s.parse()
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, value_enum, default_value = "all", env = "OCTOHOPF_SUITE")]
    suite: Suite,
    /// 1, 2, 4, 8, 16 or a name such as `octonion`.
    #[arg(long, value_parser = parse_dim, default_value = "8", env = "OCTOHOPF_DIM")]
    dim: AlgebraDim,
    #[arg(long, default_value_t = DEFAULT_SEED, env = "OCTOHOPF_SEED")]
    seed: u64,
    /// Sample count; each suite has its own default.
    #[arg(long, env = "OCTOHOPF_SAMPLES")]
    samples: Option<usize>,
    /// Tolerance for floating-point checks; each suite has its own default.
    #[arg(long, env = "OCTOHOPF_TOL")]
    tol: Option<f64>,
    /// `exact` runs the Lie 3-algebroid identities with symbolic sections,
    /// `float` with sampled rational sections.
    #[arg(long, value_enum, default_value = "exact", env = "OCTOHOPF_BACKEND")]
    backend: Backend,
    /// Output file; standard output when omitted.
    #[arg(long, env = "OCTOHOPF_OUT")]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json", env = "OCTOHOPF_FORMAT")]
    format: Format,
}

#[derive(Args, Debug)]
struct ExportArgs {
    /// `inf`, `origin`, a basis element `e<i>`, or comma-separated coefficients.
    #[arg(long, env = "OCTOHOPF_SLOPE")]
    slope: SlopeSpec,
    #[arg(long, default_value_t = 1.0, env = "OCTOHOPF_RADIUS")]
    radius: f64,
    #[arg(long, default_value_t = 100, env = "OCTOHOPF_N")]
    n: usize,
    #[arg(long, value_parser = parse_dim, default_value = "8", env = "OCTOHOPF_DIM")]
    dim: AlgebraDim,
    #[arg(long, default_value_t = DEFAULT_SEED, env = "OCTOHOPF_SEED")]
    seed: u64,
    #[arg(long, env = "OCTOHOPF_OUT")]
    out: PathBuf,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Verify(a) => {
            let config = SuiteConfig {
                suite: a.suite,
                dim: a.dim,
                seed: a.seed,
                samples: a.samples,
                tol: a.tol,
                backend: a.backend,
                format: a.format,
            };
            verify(&config, a.out.as_deref())
        }
        Command::ExportLeaf(a) => {
            let req = LeafRequest { slope: a.slope, radius: a.radius, n: a.n, dim: a.dim, seed: a.seed };
            export_leaf(&req, &a.out).and_then(|summary| {
                let mut stdout = std::io::stdout().lock();
                writeln!(stdout, "{summary}").map_err(|e| CliError::Io("stdout".into(), e))?;
                Ok(true)
            })
        }
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
