use octohopf::lie3::{
    reference_matrix, bracket, d1, d2, fiber_ranks, generic_ranks, symbolic_base, verify_lie3, verify_matrix_transcription, Degree, GradedSection,
    Lie3Mode, REFERENCE_J,
};
use octohopf::hopf::PointD2;
use octohopf::{AlgebraDim, Polynomial};

#[test]
fn symbolic_suite_passes() {
    let r = verify_lie3(Lie3Mode::Symbolic, 0, 1);
    assert!(r.passed, "{}", r.to_text());
    let j = r.check("jacobi(0,0,-1)").unwrap();
    assert!(j.summary().ends_with("jacobi(0,0,-1): residual=0"), "{}", j.summary());
    for name in ["ddistr(0,-1)", "ddistr(0,-2)", "ddistr(-1,-1)", "jacobi(0,0,0)", "jacobi(0,0,-2)", "jacobi(0,-1,-1)"] {
        assert!(r.check(name).is_some(), "missing {name}");
    }
}

#[test]
fn sampled_suite_passes() {
    let r = verify_lie3(Lie3Mode::Sampled, 2, 8);
    assert!(r.passed, "{}", r.to_text());
}

#[test]
fn matrix_reproduced() {
    let r = verify_matrix_transcription();
    assert!(r.passed, "{}", r.to_text());
    let m = reference_matrix();
    assert_eq!((m.j.len(), m.j[0].len()), (10, 16));
    assert_eq!((m.rho.len(), m.d1.len(), m.d1[0].len(), m.d2.len()), (16, 16, 10, 10));
    assert_eq!(REFERENCE_J[2][6], "y_7");
}

#[test]
fn ranks() {
    let r = generic_ranks(20, 3, 1e-8);
    assert!(r.passed, "{}", r.to_text());
    assert_eq!(fiber_ranks(&PointD2::origin(AlgebraDim::O), 1e-8), [0, 0, 0]);
}

#[test]
fn differentials_compose_to_zero() {
    let o = AlgebraDim::O;
    let base = symbolic_base(o);
    let t = GradedSection::<Polynomial>::basis(Degree::MinusTwo, o, 0);
    assert!(d1(&base, &d2(&base, &t).unwrap()).unwrap().is_zero());
    let m = GradedSection::<Polynomial>::basis(Degree::MinusOne, o, 3);
    assert!(bracket(&m, &GradedSection::basis(Degree::MinusTwo, o, 0)).is_none());
}
