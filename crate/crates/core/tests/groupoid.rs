use octohopf::groupoid::{compose, connecting_arrow, random_arrow, rescale_lemma_residual, verify_g2_equivariance, verify_phi, verify_structure, Arrow, GroupoidError};
use octohopf::hopf::PointD2;
use octohopf::{seed, AlgebraDim, AlgebraElement};

#[test]
fn structure_maps_at_every_dimension() {
    for dim in [AlgebraDim::R, AlgebraDim::C, AlgebraDim::H, AlgebraDim::O] {
        let r = verify_structure(dim, 200, 11, 1e-9);
        assert!(r.passed, "{}", r.to_text());
    }
}

#[test]
fn rescale_lemma_is_exact() {
    assert!(rescale_lemma_residual(AlgebraDim::O).is_zero());
}

#[test]
fn phi_is_a_morphism_only_when_associative() {
    for dim in [AlgebraDim::C, AlgebraDim::H] {
        let r = verify_phi(dim, 100, 5, 1e-9);
        assert!(r.passed, "{}", r.to_text());
        assert!(r.check("phi_multiplicative").is_some());
    }
    let r = verify_phi(AlgebraDim::O, 100, 5, 1e-9);
    assert!(r.passed, "{}", r.to_text());
    assert!(r.check("phi_fails_nonassociative").unwrap().passed());
}

#[test]
fn g2_equivariance() {
    let r = verify_g2_equivariance(20, 2, 1e-8);
    assert!(r.passed, "{}", r.to_text());
}

#[test]
fn composition_requires_matching_endpoints() {
    let mut rng = seed::rng(1, "test", 0);
    let g = random_arrow(AlgebraDim::O, &mut rng);
    let h = random_arrow(AlgebraDim::O, &mut rng);
    assert!(matches!(compose(&h, &g, 1e-12), Err(GroupoidError::NotComposable(_))));
    let unit = Arrow::unit(&g.target().unwrap());
    assert!(compose(&unit, &g, 1e-12).unwrap().dist(&g) < 1e-12);
}

#[test]
fn connecting_arrow_round_trip() {
    let o = AlgebraDim::O;
    let x = AlgebraElement::from_slice(o, &[0.3, -0.2, 0.5, 0.1, 0.0, 0.7, -0.4, 0.2]);
    let m = AlgebraElement::from_slice(o, &[0.1, 0.9, 0.0, -0.3, 0.2, 0.0, 0.5, 0.0]);
    let p = PointD2::new(x.clone(), m.mul(&x));
    let g = connecting_arrow(&p).unwrap();
    assert!(g.target().unwrap().dist(&p) < 1e-12);
    assert!(connecting_arrow(&PointD2::origin(o)).is_err());
}
