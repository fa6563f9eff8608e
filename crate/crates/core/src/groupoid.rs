//! The Lie groupoid 𝒢 ⇒ 𝔻² whose orbits are the singular Hopf leaves.
//!
//! An arrow is `g = (F, G, x, y)` with source `(x, y)` and target
//! `t(g) = (x + ‖x‖²F + (x·ȳ)·G, y + ‖y‖²G + (y·x̄)·F) / λ(g)`, where
//! `λ(g)² = 1 + 2(⟨x,F⟩ + ⟨y,G⟩ + ⟨x·ȳ, F·Ḡ⟩) + ‖x‖²‖F‖² + ‖y‖²‖G‖²`.
//! Arrows with `λ(g)² = 0` are excluded.

use rand::Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::cayley_dickson::{AlgebraDim, AlgebraElement};
use crate::hopf::{classify, same_leaf, PointD2, Slope};
use crate::poly::{Polynomial, Symbol};
use crate::report::{Check, VerificationReport};
use crate::scalar::Scalar;
use crate::seed;

/// Arrows with `λ² ≤ MEMBERSHIP_EPS` are treated as lying on the excluded
/// zero locus.
pub const MEMBERSHIP_EPS: f64 = 1e-12;

/// Randomized suites resample arrows with `λ² ≤ SAMPLING_MARGIN`.
pub const SAMPLING_MARGIN: f64 = 1e-4;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GroupoidError {
    #[error("arrow lies on the zero locus of the rescaling function (λ² = {0:e})")]
    OffGroupoid(f64),
    #[error("arrows are not composable: ‖s(g₂) − t(g₁)‖ = {0:e}")]
    NotComposable(f64),
    #[error("the origin is a single-point leaf")]
    Origin,
    #[error("dimension {0} not supported here")]
    UnsupportedDim(AlgebraDim),
    #[error("basic triple check failed: {0}")]
    BadTriple(String),
    #[error("the morphism denominator vanishes")]
    ZeroDenominator,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Arrow<S: Scalar> {
    pub f: AlgebraElement<S>,
    pub g: AlgebraElement<S>,
    pub x: AlgebraElement<S>,
    pub y: AlgebraElement<S>,
}

impl<S: Scalar> Arrow<S> {
    pub fn new(f: AlgebraElement<S>, g: AlgebraElement<S>, x: AlgebraElement<S>, y: AlgebraElement<S>) -> Self {
        let d = x.dim();
        assert!(f.dim() == d && g.dim() == d && y.dim() == d, "arrow components of different dimension");
        Arrow { f, g, x, y }
    }

    pub fn dim(&self) -> AlgebraDim {
        self.x.dim()
    }

    pub fn source(&self) -> PointD2<S> {
        PointD2::new(self.x.clone(), self.y.clone())
    }

    pub fn unit(p: &PointD2<S>) -> Self {
        let d = p.dim();
        Arrow::new(AlgebraElement::zero(d), AlgebraElement::zero(d), p.x.clone(), p.y.clone())
    }

    /// `λ(g)²`, defined on every backend.
    pub fn rescale_sq(&self) -> S {
        let (f, g, x, y) = (&self.f, &self.g, &self.x, &self.y);
        let cross = x.mul(&y.conjugate()).inner(&f.mul(&g.conjugate()));
        let lin = x.inner(f).plus(&y.inner(g)).plus(&cross);
        let quad = x.norm_sq().times(&f.norm_sq()).plus(&y.norm_sq().times(&g.norm_sq()));
        S::one().plus(&lin.plus(&lin)).plus(&quad)
    }

    /// Numerator of the x-component of the target, `x + ‖x‖²F + (x·ȳ)·G`.
    pub fn target_x_numerator(&self) -> AlgebraElement<S> {
        let (f, g, x, y) = (&self.f, &self.g, &self.x, &self.y);
        x.add(&f.scale(&x.norm_sq())).add(&x.mul(&y.conjugate()).mul(g))
    }

    /// Numerator of the y-component of the target, `y + ‖y‖²G + (y·x̄)·F`.
    pub fn target_y_numerator(&self) -> AlgebraElement<S> {
        let (f, g, x, y) = (&self.f, &self.g, &self.x, &self.y);
        y.add(&g.scale(&y.norm_sq())).add(&y.mul(&x.conjugate()).mul(f))
    }

    pub fn map<T: Scalar>(&self, h: impl Fn(&S) -> T) -> Arrow<T> {
        Arrow { f: self.f.map(&h), g: self.g.map(&h), x: self.x.map(&h), y: self.y.map(&h) }
    }
}

impl Arrow<f64> {
    pub fn rescale(&self) -> Result<f64, GroupoidError> {
        let l2 = self.rescale_sq();
        if l2 > MEMBERSHIP_EPS {
            Ok(l2.sqrt())
        } else {
            Err(GroupoidError::OffGroupoid(l2))
        }
    }

    pub fn target(&self) -> Result<PointD2<f64>, GroupoidError> {
        let inv = 1.0 / self.rescale()?;
        Ok(PointD2::new(self.target_x_numerator().scale(&inv), self.target_y_numerator().scale(&inv)))
    }

    /// `g⁻¹ = (−F/λ, −G/λ, t(g))`.
    pub fn inverse(&self) -> Result<Arrow<f64>, GroupoidError> {
        let l = self.rescale()?;
        let t = self.target()?;
        let s = -1.0 / l;
        Ok(Arrow::new(self.f.scale(&s), self.g.scale(&s), t.x, t.y))
    }

    /// Largest componentwise distance to another arrow.
    pub fn dist(&self, other: &Arrow<f64>) -> f64 {
        [self.f.dist(&other.f), self.g.dist(&other.g), self.x.dist(&other.x), self.y.dist(&other.y)]
            .into_iter()
            .fold(0.0, f64::max)
    }
}

/// `g₂·g₁ = (F₁ + λ(g₁)F₂, G₁ + λ(g₁)G₂, x₁, y₁)`, requiring
/// `‖s(g₂) − t(g₁)‖ ≤ tol·(1 + ‖t(g₁)‖)`.
pub fn compose(g2: &Arrow<f64>, g1: &Arrow<f64>, tol: f64) -> Result<Arrow<f64>, GroupoidError> {
    let t1 = g1.target()?;
    let gap = g2.source().dist(&t1);
    if gap > tol * (1.0 + t1.norm()) {
        return Err(GroupoidError::NotComposable(gap));
    }
    let l1 = g1.rescale()?;
    Ok(Arrow::new(g1.f.add(&g2.f.scale(&l1)), g1.g.add(&g2.g.scale(&l1)), g1.x.clone(), g1.y.clone()))
}

/// Arrow from the base point of the leaf through `p` to `p`:
/// `((x − 1)/‖x‖, 0, ‖x‖, m·‖x‖)` with `m = y·x⁻¹`, or
/// `(0, (y − 1)/‖y‖, 0, ‖y‖)` when `x = 0`.
pub fn connecting_arrow(p: &PointD2<f64>) -> Result<Arrow<f64>, GroupoidError> {
    let d = p.dim();
    let one = AlgebraElement::<f64>::one(d);
    let zero = AlgebraElement::<f64>::zero(d);
    if p.is_origin() {
        return Err(GroupoidError::Origin);
    }
    match classify(p).slope {
        Slope::Finite(m) => {
            let r = p.x.norm();
            Ok(Arrow::new(p.x.sub(&one).scale(&(1.0 / r)), zero, one.scale(&r), m.scale(&r)))
        }
        _ => {
            let r = p.y.norm();
            Ok(Arrow::new(zero.clone(), p.y.sub(&one).scale(&(1.0 / r)), zero, one.scale(&r)))
        }
    }
}

/// `‖x‖²·λ² − ‖x + ‖x‖²F + (x·ȳ)·G‖²` with all 4n coordinates symbolic.
pub fn rescale_lemma_residual(dim: AlgebraDim) -> Polynomial {
    let arrow = Arrow::new(
        AlgebraElement::symbolic(dim, Symbol::new("F")),
        AlgebraElement::symbolic(dim, Symbol::new("G")),
        AlgebraElement::base_x(dim),
        AlgebraElement::base_y(dim),
    );
    &(&arrow.x.norm_sq() * &arrow.rescale_sq()) - &arrow.target_x_numerator().norm_sq()
}

/// Element of the action groupoid `𝔻² ⋊ U(𝔻)` for associative 𝔻.
#[derive(Clone, Debug, PartialEq)]
pub struct ActionArrow {
    pub source: PointD2<f64>,
    pub element: AlgebraElement<f64>,
}

impl ActionArrow {
    /// `(x, y)·w`.
    pub fn target(&self) -> PointD2<f64> {
        PointD2::new(self.source.x.mul(&self.element), self.source.y.mul(&self.element))
    }
}

/// `w(g) = 1 + x̄·F + ȳ·G`.
fn phi_numerator(g: &Arrow<f64>) -> AlgebraElement<f64> {
    let one = AlgebraElement::one(g.dim());
    one.add(&g.x.conjugate().mul(&g.f)).add(&g.y.conjugate().mul(&g.g))
}

fn phi_formula(g: &Arrow<f64>) -> Result<ActionArrow, GroupoidError> {
    let w = phi_numerator(g);
    let n = w.norm();
    if n == 0.0 {
        return Err(GroupoidError::ZeroDenominator);
    }
    Ok(ActionArrow { source: g.source(), element: w.scale(&(1.0 / n)) })
}

/// `φ(F,G,x,y) = ((x,y), w/‖w‖)` with `w = 1 + x̄·F + ȳ·G`; a groupoid
/// morphism into the action groupoid for associative 𝔻 only.
pub fn phi_to_action_groupoid(g: &Arrow<f64>) -> Result<ActionArrow, GroupoidError> {
    if !g.dim().is_associative() {
        return Err(GroupoidError::UnsupportedDim(g.dim()));
    }
    phi_formula(g)
}

/// Residual of `φ(g₂·g₁) = φ(g₂)·φ(g₁)`, where the action-groupoid
/// product of `((x,y), w₁)` then `(t, w₂)` is `((x,y), w₁·w₂)`. Evaluated
/// with the same formula in every dimension.
pub fn phi_multiplicativity_residual(g2: &Arrow<f64>, g1: &Arrow<f64>, tol: f64) -> Result<f64, GroupoidError> {
    let g21 = compose(g2, g1, tol)?;
    let lhs = phi_formula(&g21)?.element;
    let rhs = phi_formula(g1)?.element.mul(&phi_formula(g2)?.element);
    Ok(lhs.dist(&rhs))
}

/// Automorphism of 𝕆 determined by the images of the basic triple
/// `(e₁, e₂, e₄)`.
#[derive(Clone, Debug, PartialEq)]
pub struct G2Automorphism {
    /// Column `j` is the image of `e_j`.
    columns: Vec<AlgebraElement<f64>>,
    pub triple: [AlgebraElement<f64>; 3],
}

impl G2Automorphism {
    pub fn image(&self, j: usize) -> &AlgebraElement<f64> {
        &self.columns[j]
    }

    pub fn matrix(&self) -> [[f64; 8]; 8] {
        let mut m = [[0.0; 8]; 8];
        for (j, col) in self.columns.iter().enumerate() {
            for (i, c) in col.coeffs().iter().enumerate() {
                m[i][j] = *c;
            }
        }
        m
    }

    pub fn apply(&self, a: &AlgebraElement<f64>) -> AlgebraElement<f64> {
        let mut out = AlgebraElement::zero(AlgebraDim::O);
        for (c, col) in a.coeffs().iter().zip(&self.columns) {
            out = out.add(&col.scale(c));
        }
        out
    }

    pub fn apply_point(&self, p: &PointD2<f64>) -> PointD2<f64> {
        PointD2::new(self.apply(&p.x), self.apply(&p.y))
    }

    pub fn apply_arrow(&self, g: &Arrow<f64>) -> Arrow<f64> {
        Arrow::new(self.apply(&g.f), self.apply(&g.g), self.apply(&g.x), self.apply(&g.y))
    }

    /// Largest `‖A(e_i·e_j) − A(e_i)·A(e_j)‖` over all 64 basis pairs.
    pub fn automorphism_residual(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..8 {
            for j in 0..8 {
                let e = |k| AlgebraElement::<f64>::basis(AlgebraDim::O, k);
                let lhs = self.apply(&e(i).mul(&e(j)));
                let rhs = self.columns[i].mul(&self.columns[j]);
                worst = worst.max(lhs.dist(&rhs));
            }
        }
        worst
    }

    /// Largest entry of `AᵀA − I`.
    pub fn orthogonality_residual(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..8 {
            for j in 0..8 {
                let want = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((self.columns[i].inner(&self.columns[j]) - want).abs());
            }
        }
        worst
    }
}

/// The automorphism sending `(e₁, e₂, e₄)` to `(t1, t2, t3)`:
/// `e₃ ↦ t1·t2`, `e₅ ↦ t1·t3`, `e₆ ↦ t2·t3`, `e₇ ↦ (t1·t2)·t3`.
pub fn g2_from_basic_triple(
    t1: &AlgebraElement<f64>,
    t2: &AlgebraElement<f64>,
    t3: &AlgebraElement<f64>,
    tol: f64,
) -> Result<G2Automorphism, GroupoidError> {
    for t in [t1, t2, t3] {
        if t.dim() != AlgebraDim::O {
            return Err(GroupoidError::UnsupportedDim(t.dim()));
        }
        if t.re().abs() > tol {
            return Err(GroupoidError::BadTriple("element is not imaginary".into()));
        }
        if (t.norm() - 1.0).abs() > tol {
            return Err(GroupoidError::BadTriple("element is not of unit norm".into()));
        }
    }
    let t12 = t1.mul(t2);
    for (a, b, what) in [(t1, t2, "t1·t2"), (t1, t3, "t1·t3"), (t2, t3, "t2·t3"), (&t12, t3, "t1t2·t3")] {
        if a.inner(b).abs() > tol {
            return Err(GroupoidError::BadTriple(format!("{what} inner product is not zero")));
        }
    }
    let columns = vec![
        AlgebraElement::one(AlgebraDim::O),
        t1.clone(),
        t2.clone(),
        t12.clone(),
        t3.clone(),
        t1.mul(t3),
        t2.mul(t3),
        t12.mul(t3),
    ];
    Ok(G2Automorphism { columns, triple: [t1.clone(), t2.clone(), t3.clone()] })
}

fn orthonormalize(v: AlgebraElement<f64>, against: &[&AlgebraElement<f64>]) -> Option<AlgebraElement<f64>> {
    let mut v = v.im();
    for a in against {
        v = v.sub(&a.scale(&v.inner(a)));
    }
    let n = v.norm();
    (n > 1e-6).then(|| v.scale(&(1.0 / n)))
}

/// Gram–Schmidt on Gaussian imaginary vectors.
pub fn random_basic_triple<R: Rng + ?Sized>(rng: &mut R) -> [AlgebraElement<f64>; 3] {
    let o = AlgebraDim::O;
    loop {
        let Some(t1) = orthonormalize(AlgebraElement::random_gaussian(o, rng), &[]) else { continue };
        let Some(t2) = orthonormalize(AlgebraElement::random_gaussian(o, rng), &[&t1]) else { continue };
        let t12 = t1.mul(&t2);
        let Some(t3) = orthonormalize(AlgebraElement::random_gaussian(o, rng), &[&t1, &t2, &t12]) else { continue };
        return [t1, t2, t3];
    }
}

fn random_unit_scale<R: Rng + ?Sized>(dim: AlgebraDim, rng: &mut R) -> AlgebraElement<f64> {
    AlgebraElement::random_gaussian(dim, rng).scale(&(1.0 / (dim.value() as f64).sqrt()))
}

pub fn random_point<R: Rng + ?Sized>(dim: AlgebraDim, rng: &mut R) -> PointD2<f64> {
    PointD2::new(random_unit_scale(dim, rng), random_unit_scale(dim, rng))
}

/// Random arrow with source `p`, components of unit scale, away from the
/// zero locus.
pub fn random_arrow_at<R: Rng + ?Sized>(p: &PointD2<f64>, rng: &mut R) -> Arrow<f64> {
    let d = p.dim();
    loop {
        let g = Arrow::new(random_unit_scale(d, rng), random_unit_scale(d, rng), p.x.clone(), p.y.clone());
        if g.rescale_sq() > SAMPLING_MARGIN {
            return g;
        }
    }
}

pub fn random_arrow<R: Rng + ?Sized>(dim: AlgebraDim, rng: &mut R) -> Arrow<f64> {
    let p = random_point(dim, rng);
    random_arrow_at(&p, rng)
}

#[derive(Default, Clone, Copy)]
struct Residuals {
    lambda_mult: f64,
    assoc: f64,
    unit: f64,
    inverse: f64,
    lambda_inverse: f64,
    target_inverse: f64,
    norm: f64,
    slope: f64,
    orbit_in_leaf: f64,
    connect: f64,
    leaf_in_orbit: f64,
    targets_compose: f64,
}

impl Residuals {
    fn max(self, o: Residuals) -> Residuals {
        Residuals {
            lambda_mult: self.lambda_mult.max(o.lambda_mult),
            assoc: self.assoc.max(o.assoc),
            unit: self.unit.max(o.unit),
            inverse: self.inverse.max(o.inverse),
            lambda_inverse: self.lambda_inverse.max(o.lambda_inverse),
            target_inverse: self.target_inverse.max(o.target_inverse),
            norm: self.norm.max(o.norm),
            slope: self.slope.max(o.slope),
            orbit_in_leaf: self.orbit_in_leaf.max(o.orbit_in_leaf),
            connect: self.connect.max(o.connect),
            leaf_in_orbit: self.leaf_in_orbit.max(o.leaf_in_orbit),
            targets_compose: self.targets_compose.max(o.targets_compose),
        }
    }
}

fn structure_sample(dim: AlgebraDim, root_seed: u64, i: u64) -> Result<Residuals, GroupoidError> {
    let mut rng = seed::rng(root_seed, "groupoid/structure", i);
    let loose = 1e-6;
    let g1 = random_arrow(dim, &mut rng);
    let t1 = g1.target()?;
    let g2 = random_arrow_at(&t1, &mut rng);
    let t2 = g2.target()?;
    let g3 = random_arrow_at(&t2, &mut rng);

    let g21 = compose(&g2, &g1, loose)?;
    let lambda_mult = (g21.rescale()? - g2.rescale()? * g1.rescale()?).abs();
    let assoc = compose(&compose(&g3, &g2, loose)?, &g1, loose)?.dist(&compose(&g3, &g21, loose)?);
    let targets_compose = g21.target()?.dist(&t2).max(g21.source().dist(&g1.source()));

    let unit = compose(&Arrow::unit(&t1), &g1, loose)?.dist(&g1).max(compose(&g1, &Arrow::unit(&g1.source()), loose)?.dist(&g1));
    let inv = g1.inverse()?;
    let inverse = compose(&inv, &g1, loose)?
        .dist(&Arrow::unit(&g1.source()))
        .max(compose(&g1, &inv, loose)?.dist(&Arrow::unit(&t1)));
    let lambda_inverse = (inv.rescale()? * g1.rescale()? - 1.0).abs();
    let target_inverse = inv.target()?.dist(&g1.source());

    let s1 = g1.source();
    let norm = (t1.norm() - s1.norm()).abs();
    let slope = t1.y.mul(&t1.x.conjugate()).dist(&s1.y.mul(&s1.x.conjugate()));
    let orbit_in_leaf = if same_leaf(&s1, &t1, 1e-9) { 0.0 } else { f64::INFINITY };

    let p = random_point(dim, &mut rng);
    let c = connecting_arrow(&p)?;
    let connect = c.target()?.dist(&p);
    // Two points of one leaf are joined by c_q · c_p⁻¹.
    let m = match classify(&p).slope {
        Slope::Finite(m) => m,
        _ => unreachable!("random points have x ≠ 0"),
    };
    let x2 = random_unit_scale(dim, &mut rng);
    let x2 = x2.scale(&(p.x.norm() / x2.norm()));
    let q = PointD2::new(x2.clone(), m.mul(&x2));
    let path = compose(&connecting_arrow(&q)?, &c.inverse()?, loose)?;
    let leaf_in_orbit = path.source().dist(&p).max(path.target()?.dist(&q));

    Ok(Residuals {
        lambda_mult,
        assoc,
        unit,
        inverse,
        lambda_inverse,
        target_inverse,
        norm,
        slope,
        orbit_in_leaf,
        connect,
        leaf_in_orbit,
        targets_compose,
    })
}

/// Randomized checks of the groupoid axioms plus the exact identity
/// `‖x‖²λ² = ‖x + ‖x‖²F + (x·ȳ)·G‖²`.
pub fn verify_structure(dim: AlgebraDim, samples: usize, root_seed: u64, tol: f64) -> VerificationReport {
    let mut report = VerificationReport::new("groupoid").with_dim(dim.value()).with_seed(root_seed);
    if !dim.is_division() {
        report.push(Check::value("dimension_supported", "groupoid defined for dims 1, 2, 4, 8", dim.to_string(), "1|2|4|8".into()));
        return report;
    }
    let results: Vec<Result<Residuals, GroupoidError>> =
        (0..samples as u64).into_par_iter().map(|i| structure_sample(dim, root_seed, i)).collect();
    let failures: Vec<String> = results.iter().filter_map(|r| r.as_ref().err().map(|e| e.to_string())).collect();
    let r = results.into_iter().flatten().fold(Residuals::default(), Residuals::max);
    report.push(Check::value(
        "samples_well_defined",
        "every sampled arrow lies in 𝒢 and every sampled pair composes",
        failures.first().cloned().unwrap_or_else(|| "ok".into()),
        "ok".into(),
    ));
    let n = samples;
    report.push(Check::numeric("lambda_multiplicative", "λ(g'·g) = λ(g')λ(g)", r.lambda_mult, tol, n));
    report.push(Check::numeric("associativity", "(g''·g')·g = g''·(g'·g)", r.assoc, tol, n));
    report.push(Check::numeric("composition_endpoints", "t(g'·g) = t(g'), s(g'·g) = s(g)", r.targets_compose, tol, n));
    report.push(Check::numeric("unit_laws", "1_{t(g)}·g = g = g·1_{s(g)}", r.unit, tol, n));
    report.push(Check::numeric("inverse_laws", "g⁻¹·g = 1_{s(g)}, g·g⁻¹ = 1_{t(g)}", r.inverse, tol, n));
    report.push(Check::numeric("lambda_of_inverse", "λ(g⁻¹)λ(g) = 1", r.lambda_inverse, tol, n));
    report.push(Check::numeric("target_of_inverse", "t∘i = s", r.target_inverse, tol, n));
    report.push(Check::numeric("norm_preserved", "‖t(g)‖ = ‖s(g)‖", r.norm, tol, n));
    report.push(Check::numeric("slope_preserved", "y'·x̄' = y·x̄ for (x',y') = t(g)", r.slope, tol, n));
    report.push(Check::numeric("orbit_in_leaf", "s(g) and t(g) lie on one leaf", r.orbit_in_leaf, tol, n));
    report.push(Check::numeric("connecting_arrow_target", "t(g_{m,r}) = (x, m·x)", r.connect, tol, n));
    report.push(Check::numeric("leaf_in_orbit", "leaf points are joined by g_q·g_p⁻¹", r.leaf_in_orbit, tol, n));
    report.push(Check::exact(
        "rescale_lemma",
        "‖x‖²λ(g)² = ‖x + ‖x‖²F + (x·ȳ)·G‖²",
        &rescale_lemma_residual(dim),
    ));
    report
}

/// `φ` suite: multiplicativity and `λ = ‖1 + x̄F + ȳG‖` at an associative
/// dimension, or the recorded failure of the same formula at dimension 8.
pub fn verify_phi(dim: AlgebraDim, samples: usize, root_seed: u64, tol: f64) -> VerificationReport {
    let mut report = VerificationReport::new("phi_morphism").with_dim(dim.value()).with_seed(root_seed);
    let sample = |i: u64| -> Result<(f64, f64, f64, f64), GroupoidError> {
        let mut rng = seed::rng(root_seed, "groupoid/phi", i);
        let g1 = random_arrow(dim, &mut rng);
        let g2 = random_arrow_at(&g1.target()?, &mut rng);
        let mult = phi_multiplicativity_residual(&g2, &g1, 1e-6)?;
        let lam = (g1.rescale()? - phi_numerator(&g1).norm()).abs();
        let phi1 = phi_formula(&g1)?;
        let target = phi1.target().dist(&g1.target()?);
        let unit = phi_formula(&Arrow::unit(&g1.source()))?.element.dist(&AlgebraElement::one(dim));
        Ok((mult, lam, target, unit))
    };
    let results: Vec<_> = (0..samples as u64).into_par_iter().map(sample).collect();
    if dim.is_associative() {
        let mut m = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
        for r in &results {
            match r {
                Ok((a, b, c, d)) => m = (m.0.max(*a), m.1.max(*b), m.2.max(*c), m.3.max(*d)),
                Err(_) => m.0 = f64::INFINITY,
            }
        }
        report.push(Check::numeric("phi_multiplicative", "φ(g'·g) = φ(g')·φ(g)", m.0, tol, samples));
        report.push(Check::numeric("lambda_is_norm", "λ(g) = ‖1 + x̄·F + ȳ·G‖", m.1, tol, samples));
        report.push(Check::numeric("phi_covers_target", "(x,y)·φ(g) = t(g)", m.2, tol, samples));
        report.push(Check::numeric("phi_of_unit", "φ(1_p) = (p, 1)", m.3, tol, samples));
    } else {
        let failure = results.iter().enumerate().find_map(|(i, r)| match r {
            Ok((mult, ..)) if *mult > 1e-3 => Some(format!("sample {i}: ‖φ(g'·g) − φ(g')·φ(g)‖ = {mult:.3e}")),
            _ => None,
        });
        report.push(Check::witness(
            "phi_fails_nonassociative",
            "φ(g'·g) ≠ φ(g')·φ(g) for octonions (residual > 1e-3)",
            failure,
        ));
    }
    report
}

/// Equivariance of λ, t and composition under random G₂ automorphisms.
pub fn verify_g2_equivariance(samples: usize, root_seed: u64, tol: f64) -> VerificationReport {
    let mut report = VerificationReport::new("g2").with_dim(8).with_seed(root_seed);
    let e = |k| AlgebraElement::<f64>::basis(AlgebraDim::O, k);
    let id = g2_from_basic_triple(&e(1), &e(2), &e(4), tol).expect("standard triple");
    let id_err = (0..8).map(|j| id.image(j).dist(&e(j))).fold(0.0, f64::max);
    report.push(Check::numeric("standard_triple_identity", "(e1,e2,e4) ↦ identity", id_err, tol, 1));

    let sample = |i: u64| -> Result<[f64; 5], GroupoidError> {
        let mut rng = seed::rng(root_seed, "groupoid/g2", i);
        let [t1, t2, t3] = random_basic_triple(&mut rng);
        let a = g2_from_basic_triple(&t1, &t2, &t3, 1e-9)?;
        let g1 = random_arrow(AlgebraDim::O, &mut rng);
        let g2 = random_arrow_at(&g1.target()?, &mut rng);
        let (ag1, ag2) = (a.apply_arrow(&g1), a.apply_arrow(&g2));
        let lam = (ag1.rescale()? - g1.rescale()?).abs();
        let target = ag1.target()?.dist(&a.apply_point(&g1.target()?));
        let comp = compose(&ag2, &ag1, 1e-6)?.dist(&a.apply_arrow(&compose(&g2, &g1, 1e-6)?));
        Ok([a.automorphism_residual(), a.orthogonality_residual(), lam, target, comp])
    };
    let results: Vec<_> = (0..samples as u64).into_par_iter().map(sample).collect();
    let mut m = [0.0f64; 5];
    for r in &results {
        match r {
            Ok(v) => {
                for k in 0..5 {
                    m[k] = m[k].max(v[k]);
                }
            }
            Err(_) => m = [f64::INFINITY; 5],
        }
    }
    report.push(Check::numeric("automorphism", "A(e_i·e_j) = A(e_i)·A(e_j) on all 64 pairs", m[0], tol, samples));
    report.push(Check::numeric("orthogonal", "AᵀA = I", m[1], tol, samples));
    report.push(Check::numeric("lambda_invariant", "λ(A·g) = λ(g)", m[2], tol, samples));
    report.push(Check::numeric("target_equivariant", "t(A·g) = A·t(g)", m[3], tol, samples));
    report.push(Check::numeric("composition_equivariant", "A(g'·g) = (A·g')·(A·g)", m[4], tol, samples));
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn o(i: usize) -> AlgebraElement<f64> {
        AlgebraElement::basis(AlgebraDim::O, i)
    }

    #[test]
    fn rescale_examples() {
        let p = PointD2::new(o(1).add(&o(3)), o(2));
        assert_eq!(Arrow::unit(&p).rescale().unwrap(), 1.0);
        let z = AlgebraElement::zero(AlgebraDim::O);
        assert_eq!(Arrow::new(o(1), o(2), z.clone(), z).rescale().unwrap(), 1.0);
        // F = -x/‖x‖² lands on the zero locus.
        let x = o(1).scale(&2.0);
        let g = Arrow::new(x.scale(&-0.25), AlgebraElement::zero(AlgebraDim::O), x, AlgebraElement::zero(AlgebraDim::O));
        assert!(matches!(g.rescale(), Err(GroupoidError::OffGroupoid(_))));
    }

    #[test]
    fn connecting_arrow_examples() {
        let x = o(0).scale(&0.6).add(&o(5).scale(&0.8)).scale(&2.0);
        let m = o(1).add(&o(6));
        let p = PointD2::new(x.clone(), m.mul(&x));
        let c = connecting_arrow(&p).unwrap();
        assert!((c.rescale().unwrap() - 2.0).abs() < 1e-12);
        assert!(c.target().unwrap().dist(&p) < 1e-12);
        assert!(same_leaf(&c.source(), &p, 1e-9));
        let q = PointD2::new(AlgebraElement::zero(AlgebraDim::O), o(3).add(&o(4)));
        assert!(connecting_arrow(&q).unwrap().target().unwrap().dist(&q) < 1e-12);
        let r = PointD2::new(o(0), o(1));
        let cr = connecting_arrow(&r).unwrap();
        assert!(cr.source().dist(&r) < 1e-15 && cr.target().unwrap().dist(&r) < 1e-15);
        assert_eq!(connecting_arrow(&PointD2::origin(AlgebraDim::O)), Err(GroupoidError::Origin));
    }

    #[test]
    fn non_composable_pair_is_rejected() {
        let mut rng = seed::rng(1, "t", 0);
        let g1 = random_arrow(AlgebraDim::O, &mut rng);
        let g2 = random_arrow(AlgebraDim::O, &mut rng);
        assert!(matches!(compose(&g2, &g1, 1e-9), Err(GroupoidError::NotComposable(_))));
    }

    #[test]
    fn phi_rejects_octonions() {
        let mut rng = seed::rng(1, "t", 1);
        let g = random_arrow(AlgebraDim::O, &mut rng);
        assert_eq!(phi_to_action_groupoid(&g), Err(GroupoidError::UnsupportedDim(AlgebraDim::O)));
        let h = random_arrow(AlgebraDim::H, &mut rng);
        let a = phi_to_action_groupoid(&h).unwrap();
        assert!((a.element.norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn bad_triples_are_rejected() {
        assert!(g2_from_basic_triple(&o(1), &o(2), &o(3), 1e-9).is_err());
        assert!(g2_from_basic_triple(&o(0), &o(2), &o(4), 1e-9).is_err());
        assert!(g2_from_basic_triple(&o(1), &o(2).scale(&2.0), &o(4), 1e-9).is_err());
    }

    #[test]
    fn lemma_is_an_identity_in_small_dims() {
        for d in [AlgebraDim::R, AlgebraDim::C, AlgebraDim::H] {
            assert!(rescale_lemma_residual(d).is_zero());
        }
    }
}
