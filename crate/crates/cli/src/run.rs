use std::fs::File;
use std::io::{self, Write};
use std::path::Path;
use std::str::FromStr;

use octohopf::hopf::{sample_leaf, summarize_sample, write_csv, LeafId};
use octohopf::lie3::Lie3Mode;
use octohopf::report::SCHEMA_VERSION;
use octohopf::{algebroid, cayley_dickson, foliation, groupoid, hopf, lie3, AlgebraDim, AlgebraElement, VerificationReport};
use serde::Serialize;
use thiserror::Error;

use crate::{Backend, Format, Suite};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Config(String),
    #[error("{0}: {1}")]
    Io(String, #[source] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Config(_) => 2,
            CliError::Io(..) => 3,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub suite: Suite,
    pub dim: AlgebraDim,
    pub seed: u64,
    pub samples: Option<usize>,
    pub tol: Option<f64>,
    pub backend: Backend,
    pub format: Format,
}

/// Resolved parameters echoed into the report.
#[derive(Clone, Debug, Serialize)]
struct Resolved {
    suite: String,
    dim: usize,
    seed: u64,
    samples: Option<usize>,
    tol: Option<f64>,
    backend: String,
}

#[derive(Serialize)]
struct RunReport {
    schema_version: u32,
    version: &'static str,
    config: Resolved,
    passed: bool,
    reports: Vec<VerificationReport>,
}

const GROUPOID_DIMS: [AlgebraDim; 4] = [AlgebraDim::R, AlgebraDim::C, AlgebraDim::H, AlgebraDim::O];
const FOLIATION_DIMS: [AlgebraDim; 3] = [AlgebraDim::C, AlgebraDim::H, AlgebraDim::O];

fn suite_name(s: Suite) -> &'static str {
    match s {
        Suite::Algebra => "algebra",
        Suite::Leaves => "leaves",
        Suite::Groupoid => "groupoid",
        Suite::Algebroid => "algebroid",
        Suite::Lie3 => "lie3",
        Suite::Foliation => "foliation",
        Suite::All => "all",
    }
}

fn check_dim(suite: Suite, dim: AlgebraDim) -> Result<(), CliError> {
    let allowed: &[AlgebraDim] = match suite {
        Suite::Algebra => return Ok(()),
        Suite::Leaves | Suite::Groupoid | Suite::Algebroid => &GROUPOID_DIMS,
        Suite::Foliation | Suite::All => &FOLIATION_DIMS,
        Suite::Lie3 => &[AlgebraDim::O],
    };
    if allowed.contains(&dim) {
        Ok(())
    } else {
        let list: Vec<String> = allowed.iter().map(|d| d.value().to_string()).collect();
        Err(CliError::Config(format!(
            "suite `{}` is defined for dims {} only, got {}",
            suite_name(suite),
            list.join("/"),
            dim.value()
        )))
    }
}

fn validate(c: &SuiteConfig) -> Result<(), CliError> {
    check_dim(c.suite, c.dim)?;
    if let Some(t) = c.tol {
        if !(t.is_finite() && t > 0.0) {
            return Err(CliError::Config(format!("--tol must be a positive number, got {t}")));
        }
    }
    if c.samples == Some(0) {
        return Err(CliError::Config("--samples must be at least 1".into()));
    }
    Ok(())
}

fn run_suite(c: &SuiteConfig, suite: Suite) -> Vec<VerificationReport> {
    let n = |default: usize| c.samples.unwrap_or(default);
    let tol = |default: f64| c.tol.unwrap_or(default);
    let (dim, seed) = (c.dim, c.seed);
    match suite {
        Suite::Algebra => vec![cayley_dickson::verify_algebra_identities_seeded(dim, seed)],
        Suite::Leaves => vec![hopf::verify_leaves(dim, n(200), seed, tol(1e-9))],
        Suite::Groupoid => {
            let mut r = vec![groupoid::verify_structure(dim, n(1000), seed, tol(1e-9)), groupoid::verify_phi(dim, n(500), seed, tol(1e-9))];
            if dim == AlgebraDim::O {
                r.push(groupoid::verify_g2_equivariance(n(50), seed, tol(1e-8)));
            }
            r
        }
        Suite::Algebroid => vec![algebroid::verify_algebroid(dim, n(200), seed, tol(1e-6))],
        Suite::Lie3 => {
            let mode = match c.backend {
                Backend::Exact => Lie3Mode::Symbolic,
                Backend::Float => Lie3Mode::Sampled,
            };
            vec![lie3::verify_lie3(mode, n(4), seed), lie3::verify_matrix_transcription(), lie3::generic_ranks(n(100), seed, 1e-8)]
        }
        Suite::Foliation => {
            let mut r = vec![foliation::verify_foliation(dim, n(20), seed, tol(1e-9))];
            if dim == AlgebraDim::O {
                r.push(foliation::linear_obstruction_report());
            }
            r
        }
        Suite::All => [Suite::Algebra, Suite::Leaves, Suite::Groupoid, Suite::Algebroid, Suite::Lie3, Suite::Foliation]
            .into_iter()
            .flat_map(|s| run_suite(c, s))
            .collect(),
    }
}

fn render(c: &SuiteConfig, reports: Vec<VerificationReport>) -> (String, bool) {
    let passed = reports.iter().all(|r| r.passed);
    match c.format {
        Format::Text => {
            let mut out = String::new();
            for r in &reports {
                out.push_str(&r.to_text());
                out.push('\n');
            }
            out.push_str(if passed { "overall: PASS\n" } else { "overall: FAIL\n" });
            (out, passed)
        }
        Format::Json => {
            let run = RunReport {
                schema_version: SCHEMA_VERSION,
                version: env!("CARGO_PKG_VERSION"),
                config: Resolved {
                    suite: suite_name(c.suite).into(),
                    dim: c.dim.value(),
                    seed: c.seed,
                    samples: c.samples,
                    tol: c.tol,
                    backend: format!("{:?}", c.backend).to_lowercase(),
                },
                passed,
                reports,
            };
            let mut s = serde_json::to_string_pretty(&run).expect("report serializes");
            s.push('\n');
            (s, passed)
        }
    }
}

fn write_out(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| CliError::Io(p.display().to_string(), e)),
        None => io::stdout().lock().write_all(text.as_bytes()).map_err(|e| CliError::Io("stdout".into(), e)),
    }
}

/// Runs the configured suites; `Ok(true)` iff every check passed.
pub fn verify(c: &SuiteConfig, out: Option<&Path>) -> Result<bool, CliError> {
    validate(c)?;
    let (text, passed) = render(c, run_suite(c, c.suite));
    write_out(out, &text)?;
    Ok(passed)
}

#[derive(Clone, Debug, PartialEq)]
pub enum SlopeSpec {
    Origin,
    Infinity,
    Basis(usize),
    Coefficients(Vec<f64>),
}

impl FromStr for SlopeSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        match s.to_ascii_lowercase().as_str() {
            "origin" | "0" => return Ok(SlopeSpec::Origin),
            "inf" | "infinity" | "∞" => return Ok(SlopeSpec::Infinity),
            _ => {}
        }
        if let Some(i) = s.strip_prefix('e') {
            return i.parse().map(SlopeSpec::Basis).map_err(|_| format!("bad basis element `{s}`"));
        }
        s.split(',')
            .map(|t| t.trim().parse::<f64>())
            .collect::<Result<Vec<_>, _>>()
            .map(SlopeSpec::Coefficients)
            .map_err(|_| format!("bad slope `{s}`: expected inf, origin, e<i> or comma-separated numbers"))
    }
}

#[derive(Clone, Debug)]
pub struct LeafRequest {
    pub slope: SlopeSpec,
    pub radius: f64,
    pub n: usize,
    pub dim: AlgebraDim,
    pub seed: u64,
}

fn leaf_of(req: &LeafRequest) -> Result<LeafId<f64>, CliError> {
    let d = req.dim;
    if !GROUPOID_DIMS.contains(&d) {
        return Err(CliError::Config(format!("leaves are defined for dims 1/2/4/8 only, got {}", d.value())));
    }
    if !(req.radius.is_finite() && req.radius > 0.0) {
        return Err(CliError::Config(format!("--radius must be positive, got {}", req.radius)));
    }
    let r2 = req.radius * req.radius;
    Ok(match &req.slope {
        SlopeSpec::Origin => LeafId::origin(d),
        SlopeSpec::Infinity => LeafId::infinity(d, r2),
        SlopeSpec::Basis(i) if *i < d.value() => LeafId::finite(AlgebraElement::basis(d, *i), r2),
        SlopeSpec::Basis(i) => return Err(CliError::Config(format!("e{i} is not a basis element in dim {}", d.value()))),
        SlopeSpec::Coefficients(c) if c.len() == d.value() && c.iter().all(|x| x.is_finite()) => {
            LeafId::finite(AlgebraElement::from_slice(d, c), r2)
        }
        SlopeSpec::Coefficients(c) => {
            return Err(CliError::Config(format!("slope needs {} finite coefficients, got {}", d.value(), c.len())))
        }
    })
}

/// Writes the sampled leaf to `out` and returns the invariant summary as
/// JSON. The origin leaf is written as a single row.
pub fn export_leaf(req: &LeafRequest, out: &Path) -> Result<String, CliError> {
    if req.n == 0 {
        return Err(CliError::Config("--n must be at least 1".into()));
    }
    let leaf = leaf_of(req)?;
    let n = if matches!(req.slope, SlopeSpec::Origin) { 1 } else { req.n };
    let points = sample_leaf(&leaf, n, req.seed);
    let io_err = |e: io::Error| CliError::Io(out.display().to_string(), e);
    let file = File::create(out).map_err(io_err)?;
    write_csv(&points, file).map_err(|e| io_err(io::Error::other(e)))?;
    let summary = summarize_sample(&leaf, &points);
    Ok(serde_json::to_string(&summary).expect("summary serializes"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn slope_specs() {
        assert_eq!("inf".parse(), Ok(SlopeSpec::Infinity));
        assert_eq!("origin".parse(), Ok(SlopeSpec::Origin));
        assert_eq!("e3".parse(), Ok(SlopeSpec::Basis(3)));
        assert_eq!("1, 0,-2".parse(), Ok(SlopeSpec::Coefficients(vec![1.0, 0.0, -2.0])));
        assert!("ex".parse::<SlopeSpec>().is_err());
        assert!("1,a".parse::<SlopeSpec>().is_err());
    }

    #[test]
    fn dimension_rules() {
        assert!(check_dim(Suite::Algebra, AlgebraDim::S).is_ok());
        assert!(check_dim(Suite::Groupoid, AlgebraDim::R).is_ok());
        assert!(check_dim(Suite::Lie3, AlgebraDim::H).is_err());
        assert!(check_dim(Suite::All, AlgebraDim::R).is_err());
    }
}
