//! Lines in 𝔻², the singular Hopf leaf decomposition, and leaf sampling.
//!
//! The leaves are `L_{m,r} = l_m ∩ S(r)` with `l_m = {(x, m·x)}`, the
//! leaves `L_{∞,r}` of `l_∞ = {(0, y)}`, and the origin.

use std::io::Write;

use rand::Rng;
use serde::Serialize;

use crate::cayley_dickson::{AlgebraDim, AlgebraElement};
use crate::foliation;
use crate::poly::Rational;
use crate::report::{Check, VerificationReport};
use crate::scalar::Scalar;
use crate::seed;

/// A point `(x, y)` of 𝔻².
#[derive(Clone, Debug, PartialEq)]
pub struct PointD2<S: Scalar> {
    pub x: AlgebraElement<S>,
    pub y: AlgebraElement<S>,
}

impl<S: Scalar> PointD2<S> {
    pub fn new(x: AlgebraElement<S>, y: AlgebraElement<S>) -> Self {
        assert_eq!(x.dim(), y.dim(), "point components of different dimension");
        PointD2 { x, y }
    }

    pub fn origin(dim: AlgebraDim) -> Self {
        PointD2 { x: AlgebraElement::zero(dim), y: AlgebraElement::zero(dim) }
    }

    pub fn dim(&self) -> AlgebraDim {
        self.x.dim()
    }

    pub fn norm_sq(&self) -> S {
        self.x.norm_sq().plus(&self.y.norm_sq())
    }

    pub fn is_origin(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> PointD2<T> {
        PointD2 { x: self.x.map(&f), y: self.y.map(&f) }
    }
}

impl PointD2<f64> {
    pub fn dist(&self, other: &Self) -> f64 {
        (self.x.sub(&other.x).norm_sq() + self.y.sub(&other.y).norm_sq()).sqrt()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sq().sqrt()
    }

    /// The 16 coordinates `x0..x7, y0..y7`, zero-padded below dimension 8.
    pub fn to_row(&self) -> [f64; 16] {
        let mut row = [0.0; 16];
        for (i, c) in self.x.coeffs().iter().enumerate().take(8) {
            row[i] = *c;
        }
        for (i, c) in self.y.coeffs().iter().enumerate().take(8) {
            row[8 + i] = *c;
        }
        row
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Slope<S: Scalar> {
    Origin,
    Infinity,
    Finite(AlgebraElement<S>),
}

#[derive(Clone, Debug, PartialEq)]
pub struct LeafId<S: Scalar> {
    pub dim: AlgebraDim,
    pub slope: Slope<S>,
    pub radius_sq: S,
}

impl<S: Scalar> LeafId<S> {
    pub fn origin(dim: AlgebraDim) -> Self {
        LeafId { dim, slope: Slope::Origin, radius_sq: S::zero() }
    }

    pub fn infinity(dim: AlgebraDim, radius_sq: S) -> Self {
        LeafId { dim, slope: Slope::Infinity, radius_sq }
    }

    pub fn finite(m: AlgebraElement<S>, radius_sq: S) -> Self {
        LeafId { dim: m.dim(), slope: Slope::Finite(m), radius_sq }
    }
}

/// The leaf through `p`: slope `m = y·x⁻¹` and squared radius `‖p‖²`.
pub fn classify<S: Scalar>(p: &PointD2<S>) -> LeafId<S> {
    let dim = p.dim();
    if p.is_origin() {
        return LeafId::origin(dim);
    }
    if p.x.is_zero() {
        return LeafId::infinity(dim, p.y.norm_sq());
    }
    let xinv = p.x.inverse().expect("nonzero element over a field backend");
    LeafId::finite(p.y.mul(&xinv), p.norm_sq())
}

/// Whether `p` and `q` lie on the same leaf. The slope is compared via
/// `‖y·x̄ − m·‖x‖²‖ ≤ tol·‖x‖²` with `m` the slope of `p`.
pub fn same_leaf(p: &PointD2<f64>, q: &PointD2<f64>, tol: f64) -> bool {
    let (rp, rq) = (p.norm_sq(), q.norm_sq());
    if (rp - rq).abs() > tol * (1.0 + rp.max(rq)) {
        return false;
    }
    match classify(p).slope {
        Slope::Origin => q.norm_sq() <= tol,
        Slope::Infinity => q.x.norm_sq() <= tol * tol * (1.0 + rq),
        Slope::Finite(m) => {
            let xx = q.x.norm_sq();
            if xx <= tol * tol * (1.0 + rq) {
                return false;
            }
            let lhs = q.y.mul(&q.x.conjugate());
            lhs.sub(&m.scale(&xx)).norm() <= tol * xx.max(tol)
        }
    }
}

/// Exact variant of [`same_leaf`] on the rational backend.
pub fn same_leaf_exact(p: &PointD2<Rational>, q: &PointD2<Rational>) -> bool {
    classify(p) == classify(q)
}

fn random_unit<R: Rng + ?Sized>(dim: AlgebraDim, rng: &mut R) -> AlgebraElement<f64> {
    loop {
        let u = AlgebraElement::random_gaussian(dim, rng);
        let n = u.norm();
        if n > 1e-12 {
            return u.scale(&(1.0 / n));
        }
    }
}

/// `n` points on `leaf`, deterministic in `seed`. Points on `l_m` are
/// `x = c·u`, `y = m·x` with `u` uniform on the unit sphere and
/// `c = r/√(1+‖m‖²)`. The origin yields `n` copies of `(0,0)`.
pub fn sample_leaf(leaf: &LeafId<f64>, n: usize, seed: u64) -> Vec<PointD2<f64>> {
    assert!(n >= 1, "sample count must be positive");
    let dim = leaf.dim;
    let r = leaf.radius_sq.max(0.0).sqrt();
    let mut rng = seed::rng(seed, "leaf/sample", 0);
    (0..n)
        .map(|_| match &leaf.slope {
            Slope::Origin => PointD2::origin(dim),
            Slope::Infinity => PointD2::new(AlgebraElement::zero(dim), random_unit(dim, &mut rng).scale(&r)),
            Slope::Finite(m) => {
                let c = r / (1.0 + m.norm_sq()).sqrt();
                let x = random_unit(dim, &mut rng).scale(&c);
                let y = m.mul(&x);
                PointD2::new(x, y)
            }
        })
        .collect()
}

pub const CSV_HEADER: [&str; 16] =
    ["x0", "x1", "x2", "x3", "x4", "x5", "x6", "x7", "y0", "y1", "y2", "y3", "y4", "y5", "y6", "y7"];

/// Writes one row per point with the 16 columns of [`CSV_HEADER`].
pub fn write_csv<W: Write>(points: &[PointD2<f64>], out: W) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for p in points {
        w.write_record(p.to_row().iter().map(|v| format!("{v:e}")))?;
    }
    w.flush()?;
    Ok(())
}

/// Invariants of a sampled leaf.
#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct LeafSampleSummary {
    pub points: usize,
    pub max_sphere_residual: f64,
    pub max_slope_residual: f64,
}

pub fn summarize_sample(leaf: &LeafId<f64>, points: &[PointD2<f64>]) -> LeafSampleSummary {
    let mut sphere: f64 = 0.0;
    let mut slope: f64 = 0.0;
    for p in points {
        sphere = sphere.max((p.norm_sq() - leaf.radius_sq).abs());
        let s = match &leaf.slope {
            Slope::Origin => p.norm(),
            Slope::Infinity => p.x.norm(),
            Slope::Finite(m) => p.y.sub(&m.mul(&p.x)).norm(),
        };
        slope = slope.max(s);
    }
    LeafSampleSummary { points: points.len(), max_sphere_residual: sphere, max_slope_residual: slope }
}

/// Solutions `u₃ = x⁻¹((x·u₁)·u₂)` and `u₃ = y⁻¹((y·u₁)·u₂)` of
/// `(x·u₁)·u₂ = x·u₃` and `(y·u₁)·u₂ = y·u₃`.
pub fn right_mult_solutions(
    p: &PointD2<Rational>,
    u1: &AlgebraElement<Rational>,
    u2: &AlgebraElement<Rational>,
) -> (AlgebraElement<Rational>, AlgebraElement<Rational>) {
    let solve = |z: &AlgebraElement<Rational>| z.inverse().expect("nonzero").mul(&z.mul(u1).mul(u2));
    (solve(&p.x), solve(&p.y))
}

/// Right multiplication by unit octonions does not act on S¹⁵: for
/// `(x,y) = (e₁,e₂)/√2`, `u₁ = e₅`, `u₂ = e₄`, the two equations force
/// `u₃ = −e₁` and `u₃ = e₁`. The solutions are invariant under real
/// rescaling of `x` and `y`, so the computation runs at `(e₁, e₂)`.
/// The quaternionic analogue (`u₁ = e₃`, `u₂ = e₂`) is consistent.
pub fn right_mult_counterexample() -> VerificationReport {
    let mut report = VerificationReport::new("right_multiplication");
    let o = AlgebraDim::O;
    let e = |i| AlgebraElement::<Rational>::basis(o, i);
    let p = PointD2::new(e(1), e(2));
    let (from_x, from_y) = right_mult_solutions(&p, &e(5), &e(4));
    report.push(Check::value(
        "u3_from_x",
        "(x·u1)·u2 = x·u3 with x = e1/√2, u1 = e5, u2 = e4",
        from_x.to_string(),
        e(1).neg().to_string(),
    ));
    report.push(Check::value(
        "u3_from_y",
        "(y·u1)·u2 = y·u3 with y = e2/√2, u1 = e5, u2 = e4",
        from_y.to_string(),
        e(1).to_string(),
    ));
    report.push(Check::value(
        "solutions_contradict",
        "no single u3 solves both equations",
        (from_x != from_y).to_string(),
        "true".into(),
    ));

    let h = AlgebraDim::H;
    let q = |i| AlgebraElement::<Rational>::basis(h, i);
    let (qx, qy) = right_mult_solutions(&PointD2::new(q(1), q(2)), &q(3), &q(2));
    report.push(Check::value(
        "quaternion_solutions_agree",
        "over ℍ both equations give u3 = u1·u2",
        format!("{qx} | {qy}"),
        format!("{} | {}", q(3).mul(&q(2)), q(3).mul(&q(2))),
    ));
    report
}

/// Dimensions of the unit-sphere leaves through points of S(1) with
/// `x ≠ 0`, in order for dims 1, 2, 4, 8.
pub const LEAF_DIMENSIONS: [(AlgebraDim, usize); 4] =
    [(AlgebraDim::R, 0), (AlgebraDim::C, 1), (AlgebraDim::H, 3), (AlgebraDim::O, 7)];

fn random_rational_point(dim: AlgebraDim, rng: &mut impl Rng) -> PointD2<Rational> {
    let mut draw = || {
        let coeffs: Vec<Rational> =
            (0..dim.value()).map(|_| Rational::new(rng.random_range(-9..=9), rng.random_range(1..=4))).collect();
        AlgebraElement::new(dim, coeffs).unwrap()
    };
    loop {
        let p = PointD2::new(draw(), draw());
        if !p.x.is_zero() && !p.y.is_zero() {
            return p;
        }
    }
}

/// Leaf suite: the right-multiplication counterexample, classification,
/// sampling invariants, and leaf dimensions.
pub fn verify_leaves(dim: AlgebraDim, samples: usize, root_seed: u64, tol: f64) -> VerificationReport {
    let mut report = VerificationReport::new("leaves").with_dim(dim.value()).with_seed(root_seed);
    if dim == AlgebraDim::O {
        report.extend(right_mult_counterexample().checks);
    }

    let mut rng = seed::rng(root_seed, "leaves/classify", 0);
    let mut scaling: f64 = 0.0;
    let mut sphere: f64 = 0.0;
    let mut same = true;
    for i in 0..samples {
        let m = AlgebraElement::random_gaussian(dim, &mut rng);
        let x = AlgebraElement::random_gaussian(dim, &mut rng);
        let p = PointD2::new(x.clone(), m.mul(&x));
        let lam: f64 = rng.random_range(0.25..4.0);
        let q = PointD2::new(x.scale(&lam), m.mul(&x).scale(&lam));
        if let (Slope::Finite(a), Slope::Finite(b)) = (classify(&p).slope, classify(&q).slope) {
            scaling = scaling.max(a.dist(&b) / (1.0 + a.norm()));
        } else {
            scaling = f64::INFINITY;
        }
        let leaf = LeafId::finite(m.clone(), rng.random_range(0.25..4.0));
        let pts = sample_leaf(&leaf, 4, seed::derive(root_seed, "leaves/sample", i as u64));
        let s = summarize_sample(&leaf, &pts);
        sphere = sphere.max(s.max_sphere_residual / leaf.radius_sq).max(s.max_slope_residual);
        same &= pts.windows(2).all(|w| same_leaf(&w[0], &w[1], 1e-8));
    }
    report.push(Check::numeric("slope_scale_invariant", "classify(λx, λm·x) has slope m", scaling, tol, samples));
    report.push(Check::numeric("samples_on_leaf", "sampled points satisfy ‖p‖² = r², y = m·x", sphere, tol, samples));
    report.push(Check::value("samples_share_leaf", "same_leaf on consecutive samples", same.to_string(), "true".into()));

    let inf = LeafId::infinity(dim, 1.0);
    let pts = sample_leaf(&inf, samples.max(1), seed::derive(root_seed, "leaves/infinity", 0));
    let s = summarize_sample(&inf, &pts);
    report.push(Check::numeric(
        "infinity_samples_on_leaf",
        "samples of L_{∞,1} satisfy x = 0, ‖y‖ = 1",
        s.max_sphere_residual.max(s.max_slope_residual),
        tol,
        pts.len(),
    ));

    let mut rng = seed::rng(root_seed, "leaves/dimension", 0);
    let mut observed = Vec::new();
    let mut expected = Vec::new();
    for (d, want) in LEAF_DIMENSIONS {
        if d > dim {
            continue;
        }
        let p = random_rational_point(d, &mut rng);
        observed.push(foliation::leaf_dimension_at(&p) as i64);
        expected.push(want as i64);
    }
    report.push(Check::integers(
        "leaf_dimensions",
        "leaves through S(1) have dimension 0, 1, 3, 7 for 𝔻 = ℝ, ℂ, ℍ, 𝕆",
        observed,
        expected,
    ));
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn o(i: usize) -> AlgebraElement<f64> {
        AlgebraElement::basis(AlgebraDim::O, i)
    }

    #[test]
    fn classify_examples() {
        let z = PointD2::<f64>::origin(AlgebraDim::O);
        assert_eq!(classify(&z).slope, Slope::Origin);
        let p = PointD2::new(o(0), o(1));
        assert_eq!(classify(&p), LeafId::finite(o(1), 2.0));
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let q = PointD2::new(o(1).scale(&s), o(2).scale(&s));
        let leaf = classify(&q);
        assert!(leaf.radius_sq - 1.0 < 1e-15);
        match leaf.slope {
            Slope::Finite(m) => assert!(m.dist(&o(3)) < 1e-15),
            _ => panic!(),
        }
    }

    #[test]
    fn same_leaf_examples() {
        let m = o(1).add(&o(5).scale(&0.5));
        let x = o(2).add(&o(7));
        let x2 = o(3).sub(&o(4));
        let p = PointD2::new(x.clone(), m.mul(&x));
        let q = PointD2::new(x2.clone(), m.mul(&x2));
        assert!(same_leaf(&p, &p, 1e-12));
        assert!(same_leaf(&p, &q, 1e-12));
        let m2 = o(6);
        assert!(!same_leaf(&p, &PointD2::new(x.clone(), m2.mul(&x)), 1e-9));
    }

    #[test]
    fn sampling_examples() {
        let d = AlgebraDim::O;
        let z = sample_leaf(&LeafId::origin(d), 3, 1);
        assert_eq!(z.len(), 3);
        assert!(z.iter().all(|p| p.is_origin()));
        let inf = LeafId::infinity(d, 1.0);
        let pts = sample_leaf(&inf, 10, 2);
        assert!(pts.iter().all(|p| p.x.is_zero() && (p.y.norm() - 1.0).abs() < 1e-12));
        let leaf = LeafId::finite(o(1), 1.0);
        let pts = sample_leaf(&leaf, 100, 3);
        let s = summarize_sample(&leaf, &pts);
        assert!(s.max_sphere_residual < 1e-12 && s.max_slope_residual < 1e-12);
        assert_eq!(sample_leaf(&leaf, 5, 9), sample_leaf(&leaf, 5, 9));
    }

    #[test]
    fn csv_layout() {
        let pts = sample_leaf(&LeafId::infinity(AlgebraDim::O, 1.0), 1, 0);
        let mut buf = Vec::new();
        write_csv(&pts, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next().unwrap(), CSV_HEADER.join(","));
        let row: Vec<f64> = lines.next().unwrap().split(',').map(|v| v.parse().unwrap()).collect();
        assert_eq!(row.len(), 16);
        assert!(row[..8].iter().all(|&v| v == 0.0));
    }

    #[test]
    fn counterexample() {
        let r = right_mult_counterexample();
        assert!(r.passed, "{}", r.to_text());
    }
}
