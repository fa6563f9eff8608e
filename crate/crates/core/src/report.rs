//! Structured verification outcomes.

use serde::{Deserialize, Serialize};

use crate::poly::Polynomial;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// What was measured for a check.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Evidence {
    /// Exact polynomial or rational residual; `residual_terms == 0` means
    /// identically zero.
    Exact {
        residual_terms: usize,
        #[serde(skip_serializing_if = "Option::is_none", default)]
        residual: Option<String>,
    },
    Numeric {
        max_residual: f64,
        tol: f64,
        samples: usize,
    },
    Integers {
        observed: Vec<i64>,
        expected: Vec<i64>,
    },
    Value {
        observed: String,
        expected: String,
    },
    /// A concrete witness for a property expected to fail.
    Witness {
        found: bool,
        description: String,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    /// The statement being checked, in plain notation.
    pub anchor: String,
    pub evidence: Evidence,
}

const MAX_RESIDUAL_CHARS: usize = 400;

impl Check {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn exact(name: impl Into<String>, anchor: impl Into<String>, residual: &Polynomial) -> Check {
        let residual_terms = residual.num_terms();
        let shown = (residual_terms > 0).then(|| {
            let mut s = residual.to_string();
            if s.len() > MAX_RESIDUAL_CHARS {
                s.truncate(MAX_RESIDUAL_CHARS);
                s.push_str(" ...");
            }
            s
        });
        Check {
            name: name.into(),
            status: if residual_terms == 0 { Status::Pass } else { Status::Fail },
            anchor: anchor.into(),
            evidence: Evidence::Exact { residual_terms, residual: shown },
        }
    }

    /// Exact check over several residual polynomials (e.g. vector components).
    pub fn exact_all<'a>(
        name: impl Into<String>,
        anchor: impl Into<String>,
        residuals: impl IntoIterator<Item = &'a Polynomial>,
    ) -> Check {
        let mut total = 0;
        let mut first: Option<&Polynomial> = None;
        for r in residuals {
            if !r.is_zero() {
                total += r.num_terms();
                first.get_or_insert(r);
            }
        }
        let mut c = Check::exact(name, anchor, first.unwrap_or(&Polynomial::zero()));
        if let Evidence::Exact { residual_terms, .. } = &mut c.evidence {
            *residual_terms = total;
        }
        c
    }

    pub fn numeric(
        name: impl Into<String>,
        anchor: impl Into<String>,
        max_residual: f64,
        tol: f64,
        samples: usize,
    ) -> Check {
        let ok = max_residual.is_finite() && max_residual <= tol;
        Check {
            name: name.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            anchor: anchor.into(),
            evidence: Evidence::Numeric { max_residual, tol, samples },
        }
    }

    pub fn integers(name: impl Into<String>, anchor: impl Into<String>, observed: Vec<i64>, expected: Vec<i64>) -> Check {
        Check {
            name: name.into(),
            status: if observed == expected { Status::Pass } else { Status::Fail },
            anchor: anchor.into(),
            evidence: Evidence::Integers { observed, expected },
        }
    }

    pub fn value(name: impl Into<String>, anchor: impl Into<String>, observed: String, expected: String) -> Check {
        Check {
            name: name.into(),
            status: if observed == expected { Status::Pass } else { Status::Fail },
            anchor: anchor.into(),
            evidence: Evidence::Value { observed, expected },
        }
    }

    pub fn witness(name: impl Into<String>, anchor: impl Into<String>, found: Option<String>) -> Check {
        Check {
            name: name.into(),
            status: if found.is_some() { Status::Pass } else { Status::Fail },
            anchor: anchor.into(),
            evidence: Evidence::Witness {
                found: found.is_some(),
                description: found.unwrap_or_else(|| "no witness found".into()),
            },
        }
    }

    /// One line for human-readable output.
    pub fn summary(&self) -> String {
        let status = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        };
        let detail = match &self.evidence {
            Evidence::Exact { residual_terms, .. } => format!("residual={residual_terms}"),
            Evidence::Numeric { max_residual, tol, samples } => {
                format!("max_residual={max_residual:.3e} tol={tol:.1e} samples={samples}")
            }
            Evidence::Integers { observed, expected } => format!("observed={observed:?} expected={expected:?}"),
            Evidence::Value { observed, expected } => format!("observed={observed} expected={expected}"),
            Evidence::Witness { description, .. } => description.clone(),
        };
        format!("{status}  {}: {detail}", self.name)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema_version: u32,
    pub version: String,
    pub suite: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub dim: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub seed: Option<u64>,
    pub checks: Vec<Check>,
    pub passed: bool,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>) -> Self {
        VerificationReport {
            schema_version: SCHEMA_VERSION,
            version: env!("CARGO_PKG_VERSION").to_string(),
            suite: suite.into(),
            dim: None,
            seed: None,
            checks: Vec::new(),
            passed: true,
        }
    }

    pub fn with_dim(mut self, dim: usize) -> Self {
        self.dim = Some(dim);
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    pub fn push(&mut self, check: Check) {
        self.passed &= check.passed();
        self.checks.push(check);
    }

    pub fn extend(&mut self, checks: impl IntoIterator<Item = Check>) {
        for c in checks {
            self.push(c);
        }
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("suite {}", self.suite);
        if let Some(d) = self.dim {
            out.push_str(&format!(" dim={d}"));
        }
        if let Some(s) = self.seed {
            out.push_str(&format!(" seed={s}"));
        }
        out.push('\n');
        for c in &self.checks {
            out.push_str(&c.summary());
            out.push('\n');
        }
        out.push_str(if self.passed { "result: PASS\n" } else { "result: FAIL\n" });
        out
    }
}
