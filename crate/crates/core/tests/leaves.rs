use octohopf::hopf::{classify, right_mult_counterexample, same_leaf, sample_leaf, summarize_sample, verify_leaves, write_csv, LeafId, PointD2, Slope};
use octohopf::{AlgebraDim, AlgebraElement};

#[test]
fn counterexample_values() {
    let r = right_mult_counterexample();
    assert!(r.passed, "{}", r.to_text());
    assert!(r.check("u3_from_x").unwrap().summary().contains("observed=-e1"));
}

#[test]
fn leaf_suites_pass() {
    for dim in [AlgebraDim::C, AlgebraDim::H, AlgebraDim::O] {
        let r = verify_leaves(dim, 50, 3, 1e-9);
        assert!(r.passed, "{}", r.to_text());
    }
}

#[test]
fn sampled_points_lie_on_their_leaf() {
    let o = AlgebraDim::O;
    let leaf = LeafId::finite(AlgebraElement::basis(o, 1), 1.0);
    let pts = sample_leaf(&leaf, 1000, 9);
    let s = summarize_sample(&leaf, &pts);
    assert!(s.max_sphere_residual <= 1e-12 && s.max_slope_residual <= 1e-12, "{s:?}");
    assert!(pts.windows(2).all(|w| same_leaf(&w[0], &w[1], 1e-9)));
    assert!(matches!(classify(&pts[0]).slope, Slope::Finite(_)));
}

#[test]
fn infinity_and_origin_rows() {
    let o = AlgebraDim::O;
    let inf = sample_leaf(&LeafId::infinity(o, 1.0), 1, 1);
    assert!(inf[0].x.is_zero());
    let origin = sample_leaf(&LeafId::origin(o), 3, 1);
    assert!(origin.iter().all(PointD2::is_origin));
    let mut buf = Vec::new();
    write_csv(&origin[..1], &mut buf).unwrap();
    let text = String::from_utf8(buf).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(lines[0].starts_with("x0,x1"));
    assert!(lines[1].split(',').all(|v| v.parse::<f64>().unwrap() == 0.0));
}
