use octohopf::algebroid::{anchor, bracket_e0, symbolic_checks, verify_algebroid, E0Section};
use octohopf::foliation::{is_tangent, TangencyMode};
use octohopf::poly::Symbol;
use octohopf::AlgebraDim;

#[test]
fn symbolic_identities_hold() {
    for dim in [AlgebraDim::C, AlgebraDim::H, AlgebraDim::O] {
        for c in symbolic_checks(dim) {
            assert!(c.passed(), "dim {}: {}", dim.value(), c.summary());
        }
    }
}

#[test]
fn full_suite_matches_groupoid() {
    let r = verify_algebroid(AlgebraDim::O, 50, 17, 1e-6);
    assert!(r.passed, "{}", r.to_text());
    assert!(r.check("lambda_derivative").is_some());
}

#[test]
fn brackets_of_basis_sections_are_tangent() {
    let o = AlgebraDim::O;
    let s = bracket_e0(&E0Section::basis(o, 1), &E0Section::basis(o, 10));
    assert!(is_tangent(&anchor(&s), TangencyMode::Symbolic));
    let sym = E0Section::symbolic(o, Symbol::new("u"), Symbol::new("v"));
    assert!(bracket_e0(&sym, &sym).is_zero());
}
