use octohopf::cayley_dickson::{verify_algebra_identities, AlgebraDim};
use octohopf::report::Evidence;

#[test]
fn octonion_identities_hold_symbolically() {
    let r = verify_algebra_identities(AlgebraDim::O);
    for c in &r.checks {
        assert!(c.passed(), "{}", c.summary());
    }
    for name in ["moufang_1", "moufang_2", "moufang_3", "semiassociative_inner", "associator_nonzero"] {
        assert!(r.check(name).is_some(), "missing {name}");
    }
}

#[test]
fn associative_dims_have_vanishing_associator() {
    for dim in [AlgebraDim::R, AlgebraDim::C, AlgebraDim::H] {
        let r = verify_algebra_identities(dim);
        assert!(r.passed, "{}", r.to_text());
        assert!(r.check("associator_vanishes").unwrap().passed());
    }
}

#[test]
fn sedenions_violate_norm_multiplicativity() {
    let r = verify_algebra_identities(AlgebraDim::S);
    assert!(r.passed, "{}", r.to_text());
    let c = r.check("norm_multiplicative_violated").unwrap();
    match &c.evidence {
        Evidence::Witness { found, description } => {
            assert!(found);
            assert!(description.contains("‖ab‖²"));
        }
        e => panic!("unexpected evidence {e:?}"),
    }
    assert!(r.check("moufang_1").is_none());
}
