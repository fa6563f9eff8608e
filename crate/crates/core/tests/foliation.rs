use octohopf::foliation::{
    generator_min_degree, is_tangent, leaf_dimension_at, linear_nullspace, rotation_example_residual, sampled_nullspace_dimension,
    verify_foliation, TangencyMode,
};
use octohopf::algebroid::VectorFieldO2;
use octohopf::hopf::PointD2;
use octohopf::{AlgebraDim, AlgebraElement};

#[test]
fn linear_nullspace_dimensions() {
    for (dim, expected) in [(AlgebraDim::C, 1), (AlgebraDim::H, 3), (AlgebraDim::O, 0)] {
        let ns = linear_nullspace(dim);
        assert_eq!(ns.dimension, expected, "dim {}", dim.value());
        assert_eq!(sampled_nullspace_dimension(dim, 23), expected);
        for b in &ns.basis {
            assert!(is_tangent(&b.field(), TangencyMode::Symbolic));
        }
    }
}

#[test]
fn suites_pass() {
    for dim in [AlgebraDim::C, AlgebraDim::H, AlgebraDim::O] {
        let r = verify_foliation(dim, 5, 4, 1e-9);
        assert!(r.passed, "{}", r.to_text());
    }
}

#[test]
fn unsupported_dimensions_are_reported() {
    for dim in [AlgebraDim::R, AlgebraDim::S] {
        let r = verify_foliation(dim, 5, 4, 1e-9);
        assert!(!r.passed);
        assert!(r.check("dimension_supported").is_some());
    }
}

#[test]
fn quadratic_generators_and_rotation_example() {
    assert_eq!(generator_min_degree(AlgebraDim::O), Some(2));
    assert!(rotation_example_residual().flat().all(|p| p.is_zero()));
    assert!(!is_tangent(&VectorFieldO2::euler(AlgebraDim::O), TangencyMode::Sampled { samples: 3, seed: 1, tol: 1e-9 }));
}

#[test]
fn leaf_dimension_drops_only_at_origin() {
    let o = AlgebraDim::O;
    let p = PointD2::new(AlgebraElement::from_ints(o, &[0; 8]), AlgebraElement::from_ints(o, &[1, 2, 0, 0, -1, 0, 3, 1]));
    assert_eq!(leaf_dimension_at(&p), 7);
    assert_eq!(leaf_dimension_at(&PointD2::origin(o)), 16);
}
