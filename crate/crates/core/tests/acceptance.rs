//! Acceptance suite: one line per criterion, nonzero exit on any failure.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use octohopf::cayley_dickson::verify_algebra_identities;
use octohopf::foliation::{expected_linear_nullspace, linear_nullspace, linear_obstruction_report, sampled_nullspace_dimension};
use octohopf::groupoid::{verify_g2_equivariance, verify_phi, verify_structure};
use octohopf::hopf::right_mult_counterexample;
use octohopf::lie3::{generic_ranks, verify_lie3, verify_matrix_transcription, Lie3Mode};
use octohopf::seed::DEFAULT_SEED;
use octohopf::{algebroid, AlgebraDim, VerificationReport};

const GROUPOID_TOL: f64 = 1e-9;
const GROUPOID_SAMPLES: usize = 1000;
const PHI_TOL: f64 = 1e-9;
const PHI_SAMPLES: usize = 500;
const G2_TOL: f64 = 1e-8;
const G2_SAMPLES: usize = 50;
const ALGEBROID_TOL: f64 = 1e-6;
const ALGEBROID_SAMPLES: usize = 200;
const RANK_SAMPLES: usize = 100;
const SVD_TOL: f64 = 1e-8;
const ALGEBRA_LIMIT: Duration = Duration::from_secs(60);
const LIE3_LIMIT: Duration = Duration::from_secs(600);

struct Outcome {
    pass: bool,
    detail: String,
}

fn from_reports(reports: &[VerificationReport]) -> Outcome {
    let failures: Vec<String> = reports.iter().flat_map(|r| r.failures().map(|c| format!("{}/{}", r.suite, c.summary()))).collect();
    let checks: usize = reports.iter().map(|r| r.checks.len()).sum();
    if failures.is_empty() {
        Outcome { pass: true, detail: format!("{checks} checks") }
    } else {
        Outcome { pass: false, detail: failures.join("; ") }
    }
}

fn timed(limit: Duration, f: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    let mut o = f();
    let elapsed = start.elapsed();
    if elapsed > limit {
        o.pass = false;
    }
    o.detail = format!("{} in {:.1}s (limit {}s)", o.detail, elapsed.as_secs_f64(), limit.as_secs());
    o
}

fn algebra() -> Outcome {
    timed(ALGEBRA_LIMIT, || {
        let mut reports = vec![verify_algebra_identities(AlgebraDim::O)];
        for d in [AlgebraDim::R, AlgebraDim::C, AlgebraDim::H] {
            let r = verify_algebra_identities(d);
            let mut only = VerificationReport::new(format!("algebra dim {}", d.value()));
            only.extend(r.check("associator_vanishes").cloned());
            reports.push(only);
        }
        let s = verify_algebra_identities(AlgebraDim::S);
        let mut only = VerificationReport::new("algebra dim 16");
        only.extend(s.check("norm_multiplicative_violated").cloned());
        reports.push(only);
        let mut o = from_reports(&reports);
        if reports[1..].iter().any(|r| r.checks.is_empty()) {
            o.pass = false;
            o.detail.push_str(" (missing check)");
        }
        o
    })
}

fn counterexample() -> Outcome {
    from_reports(&[right_mult_counterexample()])
}

fn groupoid() -> Outcome {
    from_reports(&[verify_structure(AlgebraDim::O, GROUPOID_SAMPLES, DEFAULT_SEED, GROUPOID_TOL)])
}

fn phi() -> Outcome {
    let reports: Vec<_> = [AlgebraDim::C, AlgebraDim::H, AlgebraDim::O]
        .into_iter()
        .map(|d| verify_phi(d, PHI_SAMPLES, DEFAULT_SEED, PHI_TOL))
        .collect();
    let mut o = from_reports(&reports);
    if reports[2].check("phi_fails_nonassociative").is_none() {
        o.pass = false;
        o.detail.push_str(" (no dim-8 witness)");
    }
    o
}

fn g2() -> Outcome {
    from_reports(&[verify_g2_equivariance(G2_SAMPLES, DEFAULT_SEED, G2_TOL)])
}

fn algebroid_suite() -> Outcome {
    from_reports(&[algebroid::verify_algebroid(AlgebraDim::O, ALGEBROID_SAMPLES, DEFAULT_SEED, ALGEBROID_TOL)])
}

fn lie3() -> Outcome {
    timed(LIE3_LIMIT, || from_reports(&[verify_lie3(Lie3Mode::Symbolic, 0, DEFAULT_SEED)]))
}

fn matrix() -> Outcome {
    from_reports(&[verify_matrix_transcription()])
}

fn ranks() -> Outcome {
    from_reports(&[generic_ranks(RANK_SAMPLES, DEFAULT_SEED, SVD_TOL)])
}

fn nullspaces() -> Outcome {
    let mut observed = Vec::new();
    let mut pass = true;
    for d in [AlgebraDim::O, AlgebraDim::H, AlgebraDim::C] {
        let expected = expected_linear_nullspace(d).expect("supported dimension");
        let exact = linear_nullspace(d).dimension;
        let sampled = sampled_nullspace_dimension(d, DEFAULT_SEED);
        pass &= exact == expected && sampled == expected;
        observed.push(format!("dim {} -> {exact} (sampled {sampled}, expected {expected})", d.value()));
    }
    Outcome { pass, detail: observed.join(", ") }
}

fn obstruction() -> Outcome {
    from_reports(&[linear_obstruction_report()])
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("algebra identities", algebra),
        ("right-multiplication counterexample", counterexample),
        ("groupoid structure", groupoid),
        ("phi morphism", phi),
        ("G2 equivariance", g2),
        ("algebroid", algebroid_suite),
        ("Lie 3-algebroid", lie3),
        ("J matrix transcription", matrix),
        ("fiberwise ranks", ranks),
        ("linear tangent fields", nullspaces),
        ("module obstruction", obstruction),
    ];
    let mut all = true;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let o = f();
        all &= o.pass;
        println!("criterion {:>2} [{}] {name}: {}", i + 1, if o.pass { "PASS" } else { "FAIL" }, o.detail);
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
