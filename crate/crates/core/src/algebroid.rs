//! The Lie algebroid of 𝒢: the trivial bundle E₀ = 𝔻² × 𝔻² with anchor
//!
//! ```text
//! ρ(u, v) = (‖x‖²u + (x·ȳ)·v − (⟨x,u⟩ + ⟨y,v⟩)x,
//!            ‖y‖²v + (y·x̄)·u − (⟨x,u⟩ + ⟨y,v⟩)y)
//! ```
//!
//! and bracket `[(u,v),(u',v')] = (⟨x,u⟩+⟨y,v⟩)(u',v') − (⟨x,u'⟩+⟨y,v'⟩)(u,v)`
//! on constant sections, extended to polynomial sections by the Leibniz rule.

use rayon::prelude::*;

use crate::cayley_dickson::{AlgebraDim, AlgebraElement};
use crate::foliation;
use crate::groupoid::{self, Arrow};
use crate::hopf::PointD2;
use crate::poly::{Polynomial, Rational, Symbol, VariableId};
use crate::report::{Check, VerificationReport};
use crate::seed;

type Sym = AlgebraElement<Polynomial>;

/// Coordinate variable of slot `j` in 𝔻²: `x^j` for `j < n`, `y^{j−n}` after.
pub fn coordinate(dim: AlgebraDim, j: usize) -> VariableId {
    let n = dim.value();
    if j < n {
        VariableId::x(j)
    } else {
        VariableId::y(j - n)
    }
}

/// Polynomial vector field on 𝔻², components along `∂/∂x^i` then `∂/∂y^i`.
#[derive(Clone, Debug, PartialEq)]
pub struct VectorFieldO2 {
    dim: AlgebraDim,
    comps: Vec<Polynomial>,
}

impl VectorFieldO2 {
    pub fn new(dim: AlgebraDim, comps: Vec<Polynomial>) -> Self {
        assert!(dim.value() <= 8, "vector fields live on 𝔻² with dim ≤ 8");
        assert_eq!(comps.len(), 2 * dim.value());
        VectorFieldO2 { dim, comps }
    }

    pub fn zero(dim: AlgebraDim) -> Self {
        Self::new(dim, vec![Polynomial::zero(); 2 * dim.value()])
    }

    /// Coordinate field `∂/∂(slot j)`.
    pub fn coordinate_field(dim: AlgebraDim, j: usize) -> Self {
        let mut v = Self::zero(dim);
        v.comps[j] = Polynomial::one();
        v
    }

    /// Euler field `x·∂_x + y·∂_y`.
    pub fn euler(dim: AlgebraDim) -> Self {
        Self::new(dim, (0..2 * dim.value()).map(|j| Polynomial::var(coordinate(dim, j))).collect())
    }

    pub fn from_blocks(u: &Sym, v: &Sym) -> Self {
        let mut comps = u.coeffs().to_vec();
        comps.extend_from_slice(v.coeffs());
        Self::new(u.dim(), comps)
    }

    pub fn dim(&self) -> AlgebraDim {
        self.dim
    }

    pub fn comps(&self) -> &[Polynomial] {
        &self.comps
    }

    /// The `x`-block and `y`-block as algebra elements.
    pub fn blocks(&self) -> (Sym, Sym) {
        let n = self.dim.value();
        (
            AlgebraElement::new(self.dim, self.comps[..n].to_vec()).unwrap(),
            AlgebraElement::new(self.dim, self.comps[n..].to_vec()).unwrap(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(Polynomial::is_zero)
    }

    /// `X(f) = Σ_j X_j ∂_j f`.
    pub fn apply(&self, f: &Polynomial) -> Polynomial {
        let parts: Vec<Polynomial> = self
            .comps
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| c * &f.derive(coordinate(self.dim, j)).expect("base coordinate"))
            .collect();
        Polynomial::sum(parts.iter())
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::new(self.dim, self.comps.iter().zip(&other.comps).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, f: &Polynomial) -> Self {
        Self::new(self.dim, self.comps.iter().map(|c| c * f).collect())
    }

    pub fn eval_f64(&self, p: &PointD2<f64>) -> Vec<f64> {
        let assign = base_assignment(p);
        self.comps.iter().map(|c| c.eval_f64(&assign).expect("only base coordinates")).collect()
    }
}

/// `[X, Y]_k = X(Y_k) − Y(X_k)`.
pub fn vf_commutator(x: &VectorFieldO2, y: &VectorFieldO2) -> VectorFieldO2 {
    let comps = x.comps.iter().zip(&y.comps).map(|(xk, yk)| &x.apply(yk) - &y.apply(xk)).collect();
    VectorFieldO2::new(x.dim, comps)
}

/// Assignment of the base coordinates at a float point.
pub fn base_assignment(p: &PointD2<f64>) -> impl Fn(VariableId) -> Option<f64> + '_ {
    move |v: VariableId| match v.base_slot() {
        Some(s) if s < 8 => p.x.coeffs().get(s).copied(),
        Some(s) => p.y.coeffs().get(s - 8).copied(),
        None => None,
    }
}

/// Section `(u, v)` of E₀ with polynomial coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct E0Section {
    pub u: Sym,
    pub v: Sym,
}

impl E0Section {
    pub fn new(u: Sym, v: Sym) -> Self {
        assert_eq!(u.dim(), v.dim());
        E0Section { u, v }
    }

    pub fn zero(dim: AlgebraDim) -> Self {
        E0Section::new(Sym::zero(dim), Sym::zero(dim))
    }

    /// Constant section with symbolic components `tag_u0…`, `tag_v0…`.
    pub fn symbolic(dim: AlgebraDim, tag_u: Symbol, tag_v: Symbol) -> Self {
        E0Section::new(Sym::symbolic(dim, tag_u), Sym::symbolic(dim, tag_v))
    }

    pub fn constant(u: &AlgebraElement<Rational>, v: &AlgebraElement<Rational>) -> Self {
        E0Section::new(Sym::from_rational(u), Sym::from_rational(v))
    }

    /// Basis section: `(e_j, 0)` for `j < n`, `(0, e_{j−n})` otherwise.
    pub fn basis(dim: AlgebraDim, j: usize) -> Self {
        let n = dim.value();
        if j < n {
            E0Section::new(Sym::basis(dim, j), Sym::zero(dim))
        } else {
            E0Section::new(Sym::zero(dim), Sym::basis(dim, j - n))
        }
    }

    pub fn dim(&self) -> AlgebraDim {
        self.u.dim()
    }

    pub fn add(&self, o: &Self) -> Self {
        E0Section::new(self.u.add(&o.u), self.v.add(&o.v))
    }

    pub fn sub(&self, o: &Self) -> Self {
        E0Section::new(self.u.sub(&o.u), self.v.sub(&o.v))
    }

    pub fn scale(&self, f: &Polynomial) -> Self {
        E0Section::new(self.u.scale(f), self.v.scale(f))
    }

    pub fn is_zero(&self) -> bool {
        self.u.is_zero() && self.v.is_zero()
    }

    pub fn coeffs(&self) -> impl Iterator<Item = &Polynomial> {
        self.u.coeffs().iter().chain(self.v.coeffs())
    }

    /// Whether no base coordinate occurs in the coefficients.
    pub fn is_constant(&self) -> bool {
        self.coeffs().all(|c| c.variables().iter().all(|v| !v.is_base()))
    }

    /// Applies a vector field to every coefficient.
    pub fn derive_along(&self, x: &VectorFieldO2) -> Self {
        E0Section::new(self.u.map(|c| x.apply(c)), self.v.map(|c| x.apply(c)))
    }
}

/// `⟨x,u⟩ + ⟨y,v⟩`.
pub fn pairing(s: &E0Section) -> Polynomial {
    let d = s.dim();
    &Sym::base_x(d).inner(&s.u) + &Sym::base_y(d).inner(&s.v)
}

pub fn anchor(s: &E0Section) -> VectorFieldO2 {
    let d = s.dim();
    let (x, y) = (Sym::base_x(d), Sym::base_y(d));
    let c = pairing(s);
    let a = s.u.scale(&x.norm_sq()).add(&x.mul(&y.conjugate()).mul(&s.v)).sub(&x.scale(&c));
    let b = s.v.scale(&y.norm_sq()).add(&y.mul(&x.conjugate()).mul(&s.u)).sub(&y.scale(&c));
    VectorFieldO2::from_blocks(&a, &b)
}

/// Bracket on E₀: the tensorial part evaluated on the coefficients, plus
/// `ρ(s₁)` acting on the coefficients of `s₂` minus `ρ(s₂)` acting on those
/// of `s₁`.
pub fn bracket_e0(s1: &E0Section, s2: &E0Section) -> E0Section {
    let tensorial = s2.scale(&pairing(s1)).sub(&s1.scale(&pairing(s2)));
    let mut out = tensorial;
    if !s2.is_constant() {
        out = out.add(&s2.derive_along(&anchor(s1)));
    }
    if !s1.is_constant() {
        out = out.sub(&s1.derive_along(&anchor(s2)));
    }
    out
}

fn section_residuals(s: &E0Section) -> Vec<Polynomial> {
    s.coeffs().cloned().collect()
}

/// Exact algebroid identities with symbolic constant sections.
pub fn symbolic_checks(dim: AlgebraDim) -> Vec<Check> {
    let s1 = E0Section::symbolic(dim, Symbol::new("u"), Symbol::new("v"));
    let s2 = E0Section::symbolic(dim, Symbol::new("u'"), Symbol::new("v'"));
    let s3 = E0Section::symbolic(dim, Symbol::new("u''"), Symbol::new("v''"));

    type Job<'a> = Box<dyn Fn() -> Check + Send + Sync + 'a>;
    let jobs: Vec<Job> = vec![
        Box::new(|| {
            let lhs = vf_commutator(&anchor(&s1), &anchor(&s2));
            let rhs = anchor(&bracket_e0(&s1, &s2));
            Check::exact_all("anchor_morphism", "[ρ(s), ρ(s')] = ρ([s, s'])", lhs.sub(&rhs).comps())
        }),
        Box::new(|| {
            let j = bracket_e0(&s1, &bracket_e0(&s2, &s3))
                .add(&bracket_e0(&s2, &bracket_e0(&s3, &s1)))
                .add(&bracket_e0(&s3, &bracket_e0(&s1, &s2)));
            Check::exact_all("jacobi", "[s,[s',s'']] + [s',[s'',s]] + [s'',[s,s']] = 0", &section_residuals(&j))
        }),
        Box::new(|| {
            let r = bracket_e0(&s1, &s2).add(&bracket_e0(&s2, &s1));
            Check::exact_all("antisymmetry", "[s, s'] = −[s', s]", &section_residuals(&r))
        }),
        Box::new(|| {
            let (a, b, c) = foliation::j_map(&anchor(&s1));
            let mut r = vec![a, c];
            r.extend(b.into_coeffs());
            Check::exact_all("j_of_anchor", "J(ρ(u,v)) = 0", &r)
        }),
        Box::new(|| {
            let f = Polynomial::var(VariableId::x(0));
            let g = &(&f * &Polynomial::var(coordinate(dim, dim.value()))) + &Polynomial::from_int(3);
            let lhs = bracket_e0(&s1, &s1.scale(&g));
            let rhs = s1.scale(&anchor(&s1).apply(&g));
            Check::exact_all("leibniz", "[s, f·s] = (ρ(s)f)·s", &section_residuals(&lhs.sub(&rhs)))
        }),
        Box::new(|| {
            let origin = |p: &Polynomial| p.substitute(|v| v.is_base().then(Rational::zero));
            let r: Vec<Polynomial> = anchor(&s1).comps().iter().map(origin).collect();
            Check::exact_all("anchor_vanishes_at_origin", "ρ(u,v)(0,0) = 0", &r)
        }),
    ];
    jobs.par_iter().map(|j| j()).collect()
}

/// Central difference of `f` at 0 with step `h`.
fn central(f: &impl Fn(f64) -> Vec<f64>, h: f64) -> Vec<f64> {
    let (a, b) = (f(h), f(-h));
    a.iter().zip(&b).map(|(p, m)| (p - m) / (2.0 * h)).collect()
}

fn max_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(p, q)| (p - q).abs()).fold(0.0, f64::max)
}

/// Derivative at 0 by central differences, falling back to one Richardson
/// step when the plain estimate misses `reference` by more than `tol`.
fn derivative(f: &impl Fn(f64) -> Vec<f64>, h: f64, reference: &[f64], tol: f64) -> Vec<f64> {
    let d = central(f, h);
    if max_diff(&d, reference) <= tol {
        return d;
    }
    let d2 = central(f, h / 2.0);
    d2.iter().zip(&d).map(|(a, b)| (4.0 * a - b) / 3.0).collect()
}

fn point_coords(p: &PointD2<f64>) -> Vec<f64> {
    p.x.coeffs().iter().chain(p.y.coeffs()).copied().collect()
}

/// Differentiates the groupoid along `τ ↦ (τe_i, 0, x, y)` and
/// `τ ↦ (0, τe_i, x, y)` and compares with the anchor and with
/// `dλ/dτ = x^i` (resp. `y^i`).
pub fn verify_groupoid_consistency(dim: AlgebraDim, samples: usize, root_seed: u64, tol: f64) -> Vec<Check> {
    let n = dim.value();
    let fields: Vec<VectorFieldO2> = (0..2 * n).map(|j| anchor(&E0Section::basis(dim, j))).collect();
    let sample = |i: u64| -> (f64, f64) {
        let mut rng = seed::rng(root_seed, "algebroid/fd", i);
        let p = if i == 0 { PointD2::origin(dim) } else { groupoid::random_point(dim, &mut rng) };
        let h = 1e-5 * (1.0 + p.norm());
        let mut t_res: f64 = 0.0;
        let mut l_res: f64 = 0.0;
        for (j, field) in fields.iter().enumerate() {
            let basis = E0Section::basis(dim, j);
            let dir_f = basis.u.map(|c| c.as_constant().unwrap().to_f64());
            let dir_g = basis.v.map(|c| c.as_constant().unwrap().to_f64());
            let arrow = |tau: f64| Arrow::new(dir_f.scale(&tau), dir_g.scale(&tau), p.x.clone(), p.y.clone());
            let expected = field.eval_f64(&p);
            let target = |tau: f64| point_coords(&arrow(tau).target().expect("near the unit arrow"));
            t_res = t_res.max(max_diff(&derivative(&target, h, &expected, tol), &expected));
            let coord = point_coords(&p)[j];
            let lam = |tau: f64| vec![arrow(tau).rescale().expect("near the unit arrow")];
            l_res = l_res.max(max_diff(&derivative(&lam, h, &[coord], tol), &[coord]));
        }
        (t_res, l_res)
    };
    let results: Vec<(f64, f64)> = (0..samples as u64).into_par_iter().map(sample).collect();
    let (t, l) = results.iter().fold((0.0f64, 0.0f64), |a, r| (a.0.max(r.0), a.1.max(r.1)));
    vec![
        Check::numeric("target_derivative", "d/dτ t(τe_i, 0, x, y)|₀ = ρ(e_i, 0), likewise for G", t, tol, samples),
        Check::numeric("lambda_derivative", "d/dτ λ(τe_i, 0, x, y)|₀ = x^i, likewise y^i", l, tol, samples),
    ]
}

/// Algebroid suite.
pub fn verify_algebroid(dim: AlgebraDim, samples: usize, root_seed: u64, tol: f64) -> VerificationReport {
    let mut report = VerificationReport::new("algebroid").with_dim(dim.value()).with_seed(root_seed);
    if !dim.is_division() {
        report.push(Check::value("dimension_supported", "algebroid defined for dims 1, 2, 4, 8", dim.to_string(), "1|2|4|8".into()));
        return report;
    }
    report.extend(symbolic_checks(dim));
    let e0 = E0Section::basis(dim, 0);
    let f0 = E0Section::basis(dim, dim.value());
    let x0 = Polynomial::var(VariableId::x(0));
    let y0 = Polynomial::var(VariableId::y(0));
    let want = f0.scale(&x0).sub(&e0.scale(&y0));
    report.push(Check::exact_all(
        "bracket_example",
        "[(1,0),(0,1)] = x⁰(0,1) − y⁰(1,0)",
        &section_residuals(&bracket_e0(&e0, &f0).sub(&want)),
    ));
    report.extend(verify_groupoid_consistency(dim, samples, root_seed, tol));
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    const O: AlgebraDim = AlgebraDim::O;

    #[test]
    fn anchor_on_basis() {
        let x = Sym::base_x(O);
        let y = Sym::base_y(O);
        for i in 0..8 {
            let (a, b) = anchor(&E0Section::basis(O, i)).blocks();
            let xi = Polynomial::var(VariableId::x(i));
            let ei = Sym::basis(O, i);
            assert_eq!(a, ei.scale(&x.norm_sq()).sub(&x.scale(&xi)));
            assert_eq!(b, y.mul(&x.conjugate()).mul(&ei).sub(&y.scale(&xi)));
        }
    }

    #[test]
    fn commutator_examples() {
        let d0 = VectorFieldO2::coordinate_field(O, 0);
        let mut comps = vec![Polynomial::zero(); 16];
        comps[1] = Polynomial::var(VariableId::x(0));
        let x0d1 = VectorFieldO2::new(O, comps);
        assert_eq!(vf_commutator(&d0, &x0d1), VectorFieldO2::coordinate_field(O, 1));
        let e = VectorFieldO2::euler(O);
        assert!(vf_commutator(&e, &e).is_zero());
    }

    #[test]
    fn anchor_morphism_on_basis_pair() {
        let s1 = E0Section::basis(O, 0);
        let s2 = E0Section::basis(O, 8);
        let lhs = vf_commutator(&anchor(&s1), &anchor(&s2));
        assert_eq!(lhs, anchor(&bracket_e0(&s1, &s2)));
        assert!(bracket_e0(&s1, &s1).is_zero());
    }

    #[test]
    fn small_dimensions_pass() {
        for d in [AlgebraDim::R, AlgebraDim::C, AlgebraDim::H] {
            let r = verify_algebroid(d, 8, 3, 1e-6);
            assert!(r.passed, "{}", r.to_text());
        }
    }
}
