//! The universal Lie 3-algebroid of the octonionic Hopf foliation.
//!
//! Graded bundle `E₀ = 𝕆²`, `E₋₁ = ℝ ⊕ 𝕆 ⊕ ℝ`, `E₋₂ = ℝ` with
//!
//! ```text
//! d⁽¹⁾(μ, a, ν) = (μx + a·y, νy + ā·x)
//! d⁽²⁾(t)       = (−‖y‖²t, (x·ȳ)t, −‖x‖²t)
//! [(u,v),(μ,a,ν)] = (−2⟨y,ā·u⟩ + 2⟨y,v⟩μ,
//!                    x·(ū·a) + (a·v)·ȳ − μ(x·v̄) − ν(u·ȳ),
//!                    −2⟨x,a·v⟩ + 2⟨x,u⟩ν)
//! [(u,v), t]      = 2(⟨x,u⟩ + ⟨y,v⟩)t
//! [(μ,a,ν),(μ',a',ν')] = 4⟨a,a'⟩ − 2μν' − 2μ'ν
//! ```
//!
//! and the E₀ bracket of the algebroid. Brackets of polynomial sections
//! follow the Leibniz rule in degree-0 arguments; all other degree pairs
//! bracket to zero.

use nalgebra::DMatrix;
use rand::Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::algebroid::{anchor, E0Section, VectorFieldO2};
use crate::cayley_dickson::{AlgebraDim, AlgebraElement};
use crate::foliation;
use crate::hopf::PointD2;
use crate::linalg;
use crate::poly::{Polynomial, Rational, Symbol, VariableId};
use crate::report::{Check, VerificationReport};
use crate::scalar::Scalar;
use crate::seed;

type Sym = AlgebraElement<Polynomial>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Degree {
    Zero,
    MinusOne,
    MinusTwo,
}

impl Degree {
    pub const ALL: [Degree; 3] = [Degree::Zero, Degree::MinusOne, Degree::MinusTwo];

    pub fn value(self) -> i32 {
        match self {
            Degree::Zero => 0,
            Degree::MinusOne => -1,
            Degree::MinusTwo => -2,
        }
    }

    pub fn from_value(v: i32) -> Option<Degree> {
        match v {
            0 => Some(Degree::Zero),
            -1 => Some(Degree::MinusOne),
            -2 => Some(Degree::MinusTwo),
            _ => None,
        }
    }

    /// Fiber rank for 𝔻 of dimension `n`: `2n`, `n + 2`, `1`.
    pub fn rank(self, n: usize) -> usize {
        match self {
            Degree::Zero => 2 * n,
            Degree::MinusOne => n + 2,
            Degree::MinusTwo => 1,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Lie3Error {
    #[error("expected a section of degree {expected}, got degree {found}")]
    DegreeMismatch { expected: i32, found: i32 },
}

fn sign(e: i32) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum GradedSection<S: Scalar> {
    Zero { u: AlgebraElement<S>, v: AlgebraElement<S> },
    MinusOne { mu: S, a: AlgebraElement<S>, nu: S },
    MinusTwo { t: S },
}

impl<S: Scalar> GradedSection<S> {
    pub fn zero(degree: Degree, dim: AlgebraDim) -> Self {
        match degree {
            Degree::Zero => GradedSection::Zero { u: AlgebraElement::zero(dim), v: AlgebraElement::zero(dim) },
            Degree::MinusOne => GradedSection::MinusOne { mu: S::zero(), a: AlgebraElement::zero(dim), nu: S::zero() },
            Degree::MinusTwo => GradedSection::MinusTwo { t: S::zero() },
        }
    }

    pub fn degree(&self) -> Degree {
        match self {
            GradedSection::Zero { .. } => Degree::Zero,
            GradedSection::MinusOne { .. } => Degree::MinusOne,
            GradedSection::MinusTwo { .. } => Degree::MinusTwo,
        }
    }

    /// Components in fiber order: `u, v`; `μ, a, ν`; `t`.
    pub fn coeffs(&self) -> Vec<S> {
        match self {
            GradedSection::Zero { u, v } => u.coeffs().iter().chain(v.coeffs()).cloned().collect(),
            GradedSection::MinusOne { mu, a, nu } => {
                let mut c = vec![mu.clone()];
                c.extend(a.coeffs().iter().cloned());
                c.push(nu.clone());
                c
            }
            GradedSection::MinusTwo { t } => vec![t.clone()],
        }
    }

    /// Inverse of [`coeffs`](Self::coeffs). `dim` is ignored in degree −2.
    pub fn from_coeffs(degree: Degree, dim: AlgebraDim, c: Vec<S>) -> Self {
        let n = dim.value();
        assert_eq!(c.len(), degree.rank(n), "wrong number of components");
        let elem = |s: &[S]| AlgebraElement::new(dim, s.to_vec()).expect("length checked");
        match degree {
            Degree::Zero => GradedSection::Zero { u: elem(&c[..n]), v: elem(&c[n..]) },
            Degree::MinusOne => GradedSection::MinusOne { mu: c[0].clone(), a: elem(&c[1..=n]), nu: c[n + 1].clone() },
            Degree::MinusTwo => GradedSection::MinusTwo { t: c[0].clone() },
        }
    }

    pub fn basis(degree: Degree, dim: AlgebraDim, k: usize) -> Self {
        let mut c = vec![S::zero(); degree.rank(dim.value())];
        c[k] = S::one();
        GradedSection::from_coeffs(degree, dim, c)
    }

    fn zip(&self, o: &Self, dim: AlgebraDim, f: impl Fn(&S, &S) -> S) -> Self {
        assert_eq!(self.degree(), o.degree(), "degree mismatch");
        let c = self.coeffs().iter().zip(o.coeffs().iter()).map(|(a, b)| f(a, b)).collect();
        GradedSection::from_coeffs(self.degree(), dim, c)
    }

    pub fn add(&self, o: &Self, dim: AlgebraDim) -> Self {
        self.zip(o, dim, S::plus)
    }

    pub fn sub(&self, o: &Self, dim: AlgebraDim) -> Self {
        self.zip(o, dim, S::minus)
    }

    pub fn scale(&self, s: &S, dim: AlgebraDim) -> Self {
        let c = self.coeffs().iter().map(|a| a.times(s)).collect();
        GradedSection::from_coeffs(self.degree(), dim, c)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs().iter().all(S::is_zero)
    }
}

/// `ρ(u, v)` at the base point, as a pair of fiber vectors.
pub fn anchor_fiber<S: Scalar>(p: &PointD2<S>, u: &AlgebraElement<S>, v: &AlgebraElement<S>) -> (AlgebraElement<S>, AlgebraElement<S>) {
    let (x, y) = (&p.x, &p.y);
    let c = x.inner(u).plus(&y.inner(v));
    let a = u.scale(&x.norm_sq()).add(&x.mul(&y.conjugate()).mul(v)).sub(&x.scale(&c));
    let b = v.scale(&y.norm_sq()).add(&y.mul(&x.conjugate()).mul(u)).sub(&y.scale(&c));
    (a, b)
}

pub fn d1<S: Scalar>(p: &PointD2<S>, s: &GradedSection<S>) -> Result<GradedSection<S>, Lie3Error> {
    let GradedSection::MinusOne { mu, a, nu } = s else {
        return Err(Lie3Error::DegreeMismatch { expected: -1, found: s.degree().value() });
    };
    Ok(GradedSection::Zero {
        u: p.x.scale(mu).add(&a.mul(&p.y)),
        v: p.y.scale(nu).add(&a.conjugate().mul(&p.x)),
    })
}

pub fn d2<S: Scalar>(p: &PointD2<S>, s: &GradedSection<S>) -> Result<GradedSection<S>, Lie3Error> {
    let GradedSection::MinusTwo { t } = s else {
        return Err(Lie3Error::DegreeMismatch { expected: -2, found: s.degree().value() });
    };
    Ok(GradedSection::MinusOne {
        mu: p.y.norm_sq().times(t).negate(),
        a: p.x.mul(&p.y.conjugate()).scale(t),
        nu: p.x.norm_sq().times(t).negate(),
    })
}

/// The differential on any degree; `None` on E₀.
pub fn differential<S: Scalar>(p: &PointD2<S>, s: &GradedSection<S>) -> Option<GradedSection<S>> {
    match s.degree() {
        Degree::Zero => None,
        Degree::MinusOne => d1(p, s).ok(),
        Degree::MinusTwo => d2(p, s).ok(),
    }
}

fn bracket_0_m1<S: Scalar>(p: &PointD2<S>, u: &AlgebraElement<S>, v: &AlgebraElement<S>, mu: &S, a: &AlgebraElement<S>, nu: &S) -> GradedSection<S> {
    let (x, y) = (&p.x, &p.y);
    let two = S::from_i64(2);
    let first = y.inner(&a.conjugate().mul(u)).times(&two).negate().plus(&y.inner(v).times(mu).times(&two));
    let mid = x
        .mul(&u.conjugate().mul(a))
        .add(&a.mul(v).mul(&y.conjugate()))
        .sub(&x.mul(&v.conjugate()).scale(mu))
        .sub(&u.mul(&y.conjugate()).scale(nu));
    let last = x.inner(&a.mul(v)).times(&two).negate().plus(&x.inner(u).times(nu).times(&two));
    GradedSection::MinusOne { mu: first, a: mid, nu: last }
}

/// Pointwise (tensorial) part of the 2-bracket. `None` when the degrees sum
/// below −2.
pub fn bracket_tensorial<S: Scalar>(p: &PointD2<S>, s1: &GradedSection<S>, s2: &GradedSection<S>) -> Option<GradedSection<S>> {
    use GradedSection::*;
    let dim = p.dim();
    Some(match (s1, s2) {
        (Zero { u, v }, Zero { u: u2, v: v2 }) => {
            let c1 = p.x.inner(u).plus(&p.y.inner(v));
            let c2 = p.x.inner(u2).plus(&p.y.inner(v2));
            s2.scale(&c1, dim).sub(&s1.scale(&c2, dim), dim)
        }
        (Zero { u, v }, MinusOne { mu, a, nu }) => bracket_0_m1(p, u, v, mu, a, nu),
        (MinusOne { .. }, Zero { .. }) => {
            let r = bracket_tensorial(p, s2, s1)?;
            r.scale(&S::from_i64(-1), dim)
        }
        (Zero { u, v }, MinusTwo { t }) => {
            let c = p.x.inner(u).plus(&p.y.inner(v));
            MinusTwo { t: c.times(t).times(&S::from_i64(2)) }
        }
        (MinusTwo { .. }, Zero { .. }) => {
            let r = bracket_tensorial(p, s2, s1)?;
            r.scale(&S::from_i64(-1), dim)
        }
        (MinusOne { mu, a, nu }, MinusOne { mu: mu2, a: a2, nu: nu2 }) => {
            let t = a.inner(a2).times(&S::from_i64(4)).minus(&mu.times(nu2).times(&S::from_i64(2))).minus(&mu2.times(nu).times(&S::from_i64(2)));
            MinusTwo { t }
        }
        _ => return None,
    })
}

/// Symbolic base point `(x, y)`.
pub fn symbolic_base(dim: AlgebraDim) -> PointD2<Polynomial> {
    PointD2::new(Sym::base_x(dim), Sym::base_y(dim))
}

fn anchor_field(s: &GradedSection<Polynomial>) -> VectorFieldO2 {
    match s {
        GradedSection::Zero { u, v } => anchor(&E0Section::new(u.clone(), v.clone())),
        _ => unreachable!("anchor of a negative-degree section"),
    }
}

fn derive_coeffs(s: &GradedSection<Polynomial>, field: &VectorFieldO2, dim: AlgebraDim) -> GradedSection<Polynomial> {
    let c = s.coeffs().iter().map(|f| field.apply(f)).collect();
    GradedSection::from_coeffs(s.degree(), dim, c)
}

fn is_constant(s: &GradedSection<Polynomial>) -> bool {
    s.coeffs().iter().all(|c| c.variables().iter().all(|v| !v.is_base()))
}

/// The 2-bracket on polynomial sections: tensorial part plus
/// `ρ(s₁)(coefficients of s₂)` when `|s₁| = 0` and
/// `−ρ(s₂)(coefficients of s₁)` when `|s₂| = 0`.
pub fn bracket(s1: &GradedSection<Polynomial>, s2: &GradedSection<Polynomial>) -> Option<GradedSection<Polynomial>> {
    let dim = match (s1, s2) {
        (GradedSection::Zero { u, .. } | GradedSection::MinusOne { a: u, .. }, _) => u.dim(),
        (_, GradedSection::Zero { u, .. } | GradedSection::MinusOne { a: u, .. }) => u.dim(),
        _ => AlgebraDim::O,
    };
    let mut out = bracket_tensorial(&symbolic_base(dim), s1, s2)?;
    if s1.degree() == Degree::Zero && !is_constant(s2) {
        out = out.add(&derive_coeffs(s2, &anchor_field(s1), dim), dim);
    }
    if s2.degree() == Degree::Zero && !is_constant(s1) {
        out = out.sub(&derive_coeffs(s1, &anchor_field(s2), dim), dim);
    }
    Some(out)
}

fn bracket_degree(a: Degree, b: Degree) -> Option<Degree> {
    Degree::from_value(a.value() + b.value())
}

fn residuals(s: &GradedSection<Polynomial>) -> Vec<Polynomial> {
    s.coeffs()
}

fn add_opt(dim: AlgebraDim, acc: Option<GradedSection<Polynomial>>, term: Option<GradedSection<Polynomial>>) -> Option<GradedSection<Polynomial>> {
    match (acc, term) {
        (Some(a), Some(b)) => Some(a.add(&b, dim)),
        (a, b) => a.or(b),
    }
}

/// `d[s₁,s₂] − [ds₁,s₂] − (−1)^{|s₁|}[s₁,ds₂]`; `None` means every term
/// vanishes.
pub fn ddistr_residual(dim: AlgebraDim, s1: &GradedSection<Polynomial>, s2: &GradedSection<Polynomial>) -> Option<GradedSection<Polynomial>> {
    let base = symbolic_base(dim);
    let lhs = bracket(s1, s2).and_then(|b| differential(&base, &b));
    let t1 = differential(&base, s1).and_then(|d| bracket(&d, s2)).map(|b| b.scale(&Polynomial::from_int(-1), dim));
    let t2 = differential(&base, s2)
        .and_then(|d| bracket(s1, &d))
        .map(|b| b.scale(&Polynomial::from_int(-sign(s1.degree().value())), dim));
    add_opt(dim, add_opt(dim, lhs, t1), t2)
}

/// `(−1)^{|x||z|}[x,[y,z]] + (−1)^{|y||x|}[y,[z,x]] + (−1)^{|z||y|}[z,[x,y]]`.
pub fn jacobiator(dim: AlgebraDim, x: &GradedSection<Polynomial>, y: &GradedSection<Polynomial>, z: &GradedSection<Polynomial>) -> Option<GradedSection<Polynomial>> {
    let (dx, dy, dz) = (x.degree().value(), y.degree().value(), z.degree().value());
    let term = |a: &GradedSection<Polynomial>, b: &GradedSection<Polynomial>, c: &GradedSection<Polynomial>, e: i32| {
        bracket(b, c).and_then(|bc| bracket(a, &bc)).map(|r| r.scale(&Polynomial::from_int(sign(e)), dim))
    };
    let j = add_opt(dim, term(x, y, z, dx * dz), term(y, z, x, dy * dx));
    add_opt(dim, j, term(z, x, y, dz * dy))
}

/// Whether every Jacobiator term has a bracket pair whose degrees sum
/// below −2.
pub fn jacobi_vanishes_by_degree(degrees: [Degree; 3]) -> bool {
    let [a, b, c] = degrees;
    let term_zero = |p: Degree, q: Degree, r: Degree| bracket_degree(q, r).and_then(|qr| bracket_degree(p, qr)).is_none();
    term_zero(a, b, c) && term_zero(b, c, a) && term_zero(c, a, b)
}

/// Whether every term of the `ddistr` identity for the pair vanishes by
/// degree: no differential applies or the bracket leaves the graded range.
pub fn ddistr_vanishes_by_degree(a: Degree, b: Degree) -> bool {
    let d = |x: Degree| Degree::from_value(x.value() + 1).filter(|_| x != Degree::Zero);
    let lhs = bracket_degree(a, b).and_then(d).is_none();
    let t1 = d(a).and_then(|da| bracket_degree(da, b)).is_none();
    let t2 = d(b).and_then(|db| bracket_degree(a, db)).is_none();
    lhs && t1 && t2
}

/// Section generators for the symbolic checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Coefficients {
    /// Every component an independent indeterminate.
    Symbolic,
    /// Components drawn as random small rationals.
    Sampled { seed: u64, index: u64 },
}

struct Sections {
    dim: AlgebraDim,
    coeffs: Coefficients,
}

impl Sections {
    fn make(&self, degree: Degree, tag: &str, slot: u64) -> GradedSection<Polynomial> {
        let n = self.dim.value();
        match self.coeffs {
            Coefficients::Symbolic => {
                let sym = |t: &str| Sym::symbolic(self.dim, Symbol::new(t));
                let scalar = |t: &str| Polynomial::var(VariableId::section(Symbol::new(t), 0));
                let primes = &tag[1..];
                match degree {
                    Degree::Zero => GradedSection::Zero { u: sym(&format!("u{primes}")), v: sym(&format!("v{primes}")) },
                    Degree::MinusOne => GradedSection::MinusOne {
                        mu: scalar(&format!("mu{primes}")),
                        a: sym(&format!("a{primes}")),
                        nu: scalar(&format!("nu{primes}")),
                    },
                    Degree::MinusTwo => GradedSection::MinusTwo { t: scalar(&format!("t{primes}")) },
                }
            }
            Coefficients::Sampled { seed: s, index } => {
                let mut rng = seed::rng(s, "lie3/sections", index * 16 + slot);
                let c = (0..degree.rank(n))
                    .map(|_| Polynomial::constant(Rational::new(rng.random_range(-9..=9), rng.random_range(1..=4))))
                    .collect();
                GradedSection::from_coeffs(degree, self.dim, c)
            }
        }
    }
}

/// The identity cases of the 3-algebroid, each a named list of residual
/// polynomials.
fn lie3_cases(dim: AlgebraDim, coeffs: Coefficients) -> Vec<(String, String, Vec<Polynomial>)> {
    use Degree::*;
    let gen = Sections { dim, coeffs };
    let base = symbolic_base(dim);
    let s0 = gen.make(Zero, "s", 0);
    let s0p = gen.make(Zero, "s'", 1);
    let s0pp = gen.make(Zero, "s''", 2);
    let m = gen.make(MinusOne, "m", 3);
    let mp = gen.make(MinusOne, "m'", 4);
    let t = gen.make(MinusTwo, "t", 5);
    let tp = gen.make(MinusTwo, "t'", 6);

    type Job<'a> = (&'static str, &'static str, Box<dyn Fn() -> Vec<Polynomial> + Send + Sync + 'a>);
    let opt = |r: Option<GradedSection<Polynomial>>| r.map(|s| residuals(&s)).unwrap_or_default();
    let jobs: Vec<Job> = vec![
        ("d1_after_d2", "d⁽¹⁾∘d⁽²⁾ = 0", Box::new(|| residuals(&d1(&base, &d2(&base, &t).unwrap()).unwrap()))),
        (
            "anchor_after_d1",
            "ρ∘d⁽¹⁾ = 0",
            Box::new(|| anchor_field(&d1(&base, &m).unwrap()).comps().to_vec()),
        ),
        (
            "minimal_at_origin",
            "d⁽¹⁾ and d⁽²⁾ vanish at x = y = 0",
            Box::new(|| {
                let at0 = |p: &Polynomial| p.substitute(|v| v.is_base().then(Rational::zero));
                let mut r: Vec<Polynomial> = residuals(&d1(&base, &m).unwrap()).iter().map(at0).collect();
                r.extend(residuals(&d2(&base, &t).unwrap()).iter().map(at0));
                r
            }),
        ),
        ("ddistr(0,-1)", "d[s,m] = [ds,m] + [s,dm]", Box::new(|| opt(ddistr_residual(dim, &s0, &m)))),
        ("ddistr(0,-2)", "d[s,t] = [ds,t] + [s,dt]", Box::new(|| opt(ddistr_residual(dim, &s0, &t)))),
        ("ddistr(-1,-1)", "d[m,m'] = [dm,m'] − [m,dm']", Box::new(|| opt(ddistr_residual(dim, &m, &mp)))),
        ("ddistr(-1,-2)", "0 = [dm,t] − [m,dt]", Box::new(|| opt(ddistr_residual(dim, &m, &t)))),
        ("jacobi(0,0,0)", "graded Jacobi on E₀ ⊗ E₀ ⊗ E₀", Box::new(|| opt(jacobiator(dim, &s0, &s0p, &s0pp)))),
        ("jacobi(0,0,-1)", "[s,[s',m]] − [s',[s,m]] − [[s,s'],m] = 0", Box::new(|| opt(jacobiator(dim, &s0, &s0p, &m)))),
        ("jacobi(0,0,-2)", "[s,[s',t]] − [s',[s,t]] − [[s,s'],t] = 0", Box::new(|| opt(jacobiator(dim, &s0, &s0p, &t)))),
        ("jacobi(0,-1,-1)", "graded Jacobi on E₀ ⊗ E₋₁ ⊗ E₋₁", Box::new(|| opt(jacobiator(dim, &s0, &m, &mp)))),
        (
            "antisymmetry",
            "[a,b] + (−1)^{|a||b|}[b,a] = 0",
            Box::new(|| {
                let pairs = [(&s0, &s0p), (&s0, &m), (&s0, &t), (&m, &mp), (&t, &tp), (&m, &t)];
                pairs
                    .iter()
                    .flat_map(|(a, b)| {
                        let e = sign(a.degree().value() * b.degree().value());
                        match (bracket(a, b), bracket(b, a)) {
                            (Some(x), Some(y)) => residuals(&x.add(&y.scale(&Polynomial::from_int(e), dim), dim)),
                            (None, None) => vec![],
                            _ => vec![Polynomial::one()],
                        }
                    })
                    .collect()
            }),
        ),
        (
            "self_bracket_minus_one",
            "[(μ,a,ν),(μ,a,ν)] = 4‖a‖² − 4μν",
            Box::new(|| match (bracket(&m, &m), &m) {
                (Some(GradedSection::MinusTwo { t }), GradedSection::MinusOne { mu, a, nu }) => {
                    vec![&t - &(&a.norm_sq().scale_int(4) - &(mu * nu).scale_int(4))]
                }
                _ => vec![Polynomial::one()],
            }),
        ),
    ];
    jobs.into_par_iter().map(|(name, anchor, f)| (name.to_string(), anchor.to_string(), f())).collect()
}

/// Degree triples whose Jacobiator is checked explicitly.
pub const JACOBI_CASES: [[Degree; 3]; 4] = [
    [Degree::Zero, Degree::Zero, Degree::Zero],
    [Degree::Zero, Degree::Zero, Degree::MinusOne],
    [Degree::Zero, Degree::Zero, Degree::MinusTwo],
    [Degree::Zero, Degree::MinusOne, Degree::MinusOne],
];

/// Degree pairs for `ddistr` that are checked explicitly.
pub const DDISTR_CASES: [[Degree; 2]; 4] = [
    [Degree::Zero, Degree::MinusOne],
    [Degree::Zero, Degree::MinusTwo],
    [Degree::MinusOne, Degree::MinusOne],
    [Degree::MinusOne, Degree::MinusTwo],
];

fn multisets3() -> Vec<[Degree; 3]> {
    let mut out = Vec::new();
    for (i, a) in Degree::ALL.iter().enumerate() {
        for (j, b) in Degree::ALL.iter().enumerate().skip(i) {
            for c in Degree::ALL.iter().skip(j) {
                out.push([*a, *b, *c]);
            }
        }
    }
    out
}

fn degree_reason_checks() -> Vec<Check> {
    let fmt3 = |d: &[Degree; 3]| format!("({},{},{})", d[0].value(), d[1].value(), d[2].value());
    let other_jacobi: Vec<[Degree; 3]> = multisets3().into_iter().filter(|d| !JACOBI_CASES.contains(d)).collect();
    let jacobi_bad: Vec<String> = other_jacobi
        .iter()
        .filter(|d| {
            // Every ordering, not just the sorted one.
            let [a, b, c] = **d;
            ![[a, b, c], [a, c, b], [b, a, c], [b, c, a], [c, a, b], [c, b, a]].iter().all(|o| jacobi_vanishes_by_degree(*o))
        })
        .map(fmt3)
        .collect();
    let mut ddistr_other = Vec::new();
    for a in Degree::ALL {
        for b in Degree::ALL {
            if !DDISTR_CASES.contains(&[a, b]) && !DDISTR_CASES.contains(&[b, a]) {
                ddistr_other.push((a, b));
            }
        }
    }
    let ddistr_bad: Vec<String> = ddistr_other
        .iter()
        .filter(|(a, b)| !ddistr_vanishes_by_degree(*a, *b))
        .map(|(a, b)| format!("({},{})", a.value(), b.value()))
        .collect();
    vec![
        Check::value(
            "jacobi_degree_reasons",
            "remaining degree triples have a zero bracket in every term",
            if jacobi_bad.is_empty() { format!("{} triples", other_jacobi.len()) } else { jacobi_bad.join(" ") },
            format!("{} triples", other_jacobi.len()),
        ),
        Check::value(
            "ddistr_degree_reasons",
            "remaining degree pairs have no surviving term",
            if ddistr_bad.is_empty() { format!("{} pairs", ddistr_other.len()) } else { ddistr_bad.join(" ") },
            format!("{} pairs", ddistr_other.len()),
        ),
    ]
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Lie3Mode {
    Symbolic,
    Sampled,
}

/// Complex property, `ddistr`, graded Jacobi, antisymmetry and minimality
/// at the origin. In sampled mode the sections get random rational
/// coefficients while the base coordinates stay symbolic.
pub fn verify_lie3(mode: Lie3Mode, samples: usize, root_seed: u64) -> VerificationReport {
    let dim = AlgebraDim::O;
    let mut report = VerificationReport::new("lie3").with_dim(8);
    match mode {
        Lie3Mode::Symbolic => {
            for (name, anchor, r) in lie3_cases(dim, Coefficients::Symbolic) {
                report.push(Check::exact_all(name, anchor, &r));
            }
        }
        Lie3Mode::Sampled => {
            report = report.with_seed(root_seed);
            let runs: Vec<_> = (0..samples.max(1) as u64)
                .into_par_iter()
                .map(|i| lie3_cases(dim, Coefficients::Sampled { seed: root_seed, index: i }))
                .collect();
            let first = &runs[0];
            for (k, (name, anchor, _)) in first.iter().enumerate() {
                let all = runs.iter().flat_map(|r| r[k].2.iter());
                report.push(Check::exact_all(name.clone(), anchor.clone(), all));
            }
        }
    }
    report.extend(degree_reason_checks());
    report
}

/// Entries of the transcribed 10×16 matrix of `J` in the basis
/// `(u₀…u₇, v₀…v₇)`.
#[rustfmt::skip]
pub const REFERENCE_J: [[&str; 16]; 10] = [
    [ "x_0",  "x_1",  "x_2",  "x_3",  "x_4",  "x_5",  "x_6",  "x_7",
      "0",    "0",    "0",    "0",    "0",    "0",    "0",    "0"   ],
    [ "y_0",  "y_1",  "y_2",  "y_3",  "y_4",  "y_5",  "y_6",  "y_7",
      "x_0",  "x_1",  "x_2",  "x_3",  "x_4",  "x_5",  "x_6",  "x_7" ],
    ["-y_1",  "y_0", "-y_3",  "y_2", "-y_5",  "y_4",  "y_7", "-y_6",
      "x_1", "-x_0",  "x_3", "-x_2",  "x_5", "-x_4", "-x_7",  "x_6" ],
    ["-y_2",  "y_3",  "y_0", "-y_1", "-y_6", "-y_7",  "y_4",  "y_5",
      "x_2", "-x_3", "-x_0",  "x_1",  "x_6",  "x_7", "-x_4", "-x_5" ],
    ["-y_3", "-y_2",  "y_1",  "y_0", "-y_7",  "y_6", "-y_5",  "y_4",
      "x_3",  "x_2", "-x_1", "-x_0",  "x_7", "-x_6",  "x_5", "-x_4" ],
    ["-y_4",  "y_5",  "y_6",  "y_7",  "y_0", "-y_1", "-y_2", "-y_3",
      "x_4", "-x_5", "-x_6", "-x_7", "-x_0",  "x_1",  "x_2",  "x_3" ],
    ["-y_5", "-y_4",  "y_7", "-y_6",  "y_1",  "y_0",  "y_3", "-y_2",
      "x_5",  "x_4", "-x_7",  "x_6", "-x_1", "-x_0", "-x_3",  "x_2" ],
    ["-y_6", "-y_7", "-y_4",  "y_5",  "y_2", "-y_3",  "y_0",  "y_1",
      "x_6",  "x_7",  "x_4", "-x_5", "-x_2",  "x_3", "-x_0", "-x_1" ],
    ["-y_7",  "y_6", "-y_5", "-y_4",  "y_3",  "y_2", "-y_1",  "y_0",
      "x_7", "-x_6",  "x_5",  "x_4", "-x_3", "-x_2",  "x_1", "-x_0" ],
    [ "0",    "0",    "0",    "0",    "0",    "0",    "0",    "0",
      "y_0",  "y_1",  "y_2",  "y_3",  "y_4",  "y_5",  "y_6",  "y_7" ],
];

/// Parses an entry of the form `0`, `x_i`, `-y_i`.
pub fn parse_entry(s: &str) -> Option<Polynomial> {
    if s == "0" {
        return Some(Polynomial::zero());
    }
    let (neg, rest) = match s.strip_prefix('-') {
        Some(r) => (true, r),
        None => (false, s),
    };
    let (kind, idx) = rest.split_once('_')?;
    let i: usize = idx.parse().ok().filter(|&i| i < 8)?;
    let v = match kind {
        "x" => VariableId::x(i),
        "y" => VariableId::y(i),
        _ => return None,
    };
    let p = Polynomial::var(v);
    Some(if neg { -&p } else { p })
}

pub type PolyMatrix = Vec<Vec<Polynomial>>;

/// Matrices of `J`, `ρ`, `d⁽¹⁾`, `d⁽²⁾` over the polynomial ring, columns
/// indexed by basis sections.
#[derive(Clone, Debug, PartialEq)]
pub struct ResolutionMatrices {
    pub j: PolyMatrix,
    pub rho: PolyMatrix,
    pub d1: PolyMatrix,
    pub d2: PolyMatrix,
}

fn columns_to_matrix(cols: Vec<Vec<Polynomial>>) -> PolyMatrix {
    let rows = cols.first().map_or(0, Vec::len);
    (0..rows).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect()
}

/// Generates all four matrices from the multiplication table.
pub fn resolution_matrices(dim: AlgebraDim) -> ResolutionMatrices {
    let n = dim.value();
    let base = symbolic_base(dim);
    let j = columns_to_matrix(
        (0..2 * n)
            .map(|k| {
                let s = E0Section::basis(dim, k);
                let (a, b, c) = foliation::j_components(&base.x, &base.y, &s.u, &s.v);
                let mut col = vec![a];
                col.extend(b.into_coeffs());
                col.push(c);
                col
            })
            .collect(),
    );
    let rho = columns_to_matrix((0..2 * n).map(|k| anchor(&E0Section::basis(dim, k)).comps().to_vec()).collect());
    let d1m = columns_to_matrix(
        (0..n + 2).map(|k| d1(&base, &GradedSection::basis(Degree::MinusOne, dim, k)).unwrap().coeffs()).collect(),
    );
    let d2m = columns_to_matrix(vec![d2(&base, &GradedSection::basis(Degree::MinusTwo, dim, 0)).unwrap().coeffs()]);
    ResolutionMatrices { j, rho, d1: d1m, d2: d2m }
}

/// Generated matrices for the octonions.
pub fn reference_matrix() -> ResolutionMatrices {
    resolution_matrices(AlgebraDim::O)
}

fn mat_mul(a: &PolyMatrix, b: &PolyMatrix) -> PolyMatrix {
    let inner = b.len();
    a.iter()
        .map(|row| {
            (0..b[0].len())
                .map(|c| {
                    let terms: Vec<(i8, &Polynomial, &Polynomial)> = (0..inner).map(|k| (1, &row[k], &b[k][c])).collect();
                    Polynomial::signed_sum_of_products(&terms)
                })
                .collect()
        })
        .collect()
}

/// Entrywise comparison of the generated `J` with [`REFERENCE_J`], plus the
/// vanishing of consecutive matrix products.
pub fn verify_matrix_transcription() -> VerificationReport {
    let mut report = VerificationReport::new("reference_matrix").with_dim(8);
    let m = reference_matrix();
    let mut matched = 0;
    let mut mismatches = Vec::new();
    let mut unparsed = 0;
    for (i, row) in REFERENCE_J.iter().enumerate() {
        for (k, entry) in row.iter().enumerate() {
            match parse_entry(entry) {
                Some(p) if p == m.j[i][k] => matched += 1,
                Some(_) => mismatches.push(format!("({i},{k})")),
                None => unparsed += 1,
            }
        }
    }
    report.push(Check::integers(
        "matrix_entries_match",
        "J(u,v) = (⟨x,u⟩, u·ȳ + x·v̄, ⟨y,v⟩) against the transcribed 10×16 matrix",
        vec![matched, mismatches.len() as i64, unparsed],
        vec![160, 0, 0],
    ));
    report.push(Check::value(
        "row_0",
        "row 0 is (x₀,…,x₇, 0,…,0)",
        (0..16).all(|k| m.j[0][k] == if k < 8 { Polynomial::var(VariableId::x(k)) } else { Polynomial::zero() }).to_string(),
        "true".into(),
    ));
    report.push(Check::value(
        "row_9",
        "row 9 is (0,…,0, y₀,…,y₇)",
        (0..16).all(|k| m.j[9][k] == if k < 8 { Polynomial::zero() } else { Polynomial::var(VariableId::y(k - 8)) }).to_string(),
        "true".into(),
    ));
    let (jr, (rd, dd)) = rayon::join(|| mat_mul(&m.j, &m.rho), || rayon::join(|| mat_mul(&m.rho, &m.d1), || mat_mul(&m.d1, &m.d2)));
    report.push(Check::exact_all("j_times_rho", "J·ρ = 0", jr.iter().flatten()));
    report.push(Check::exact_all("rho_times_d1", "ρ·d⁽¹⁾ = 0", rd.iter().flatten()));
    report.push(Check::exact_all("d1_times_d2", "d⁽¹⁾·d⁽²⁾ = 0", dd.iter().flatten()));
    report
}

/// Fiber matrices of `(ρ, d⁽¹⁾, d⁽²⁾)` at a float point.
pub fn fiber_matrices(p: &PointD2<f64>) -> (DMatrix<f64>, DMatrix<f64>, DMatrix<f64>) {
    let d = p.dim();
    let n = d.value();
    let mut rho = DMatrix::zeros(2 * n, 2 * n);
    for k in 0..2 * n {
        let (u, v) = if k < n {
            (AlgebraElement::basis(d, k), AlgebraElement::zero(d))
        } else {
            (AlgebraElement::zero(d), AlgebraElement::basis(d, k - n))
        };
        let (a, b) = anchor_fiber(p, &u, &v);
        for (i, c) in a.coeffs().iter().chain(b.coeffs()).enumerate() {
            rho[(i, k)] = *c;
        }
    }
    let mut m1 = DMatrix::zeros(2 * n, n + 2);
    for k in 0..n + 2 {
        let s = d1(p, &GradedSection::basis(Degree::MinusOne, d, k)).unwrap();
        for (i, c) in s.coeffs().into_iter().enumerate() {
            m1[(i, k)] = c;
        }
    }
    let s = d2(p, &GradedSection::basis(Degree::MinusTwo, d, 0)).unwrap();
    let m2 = DMatrix::from_column_slice(n + 2, 1, &s.coeffs());
    (rho, m1, m2)
}

pub fn fiber_ranks(p: &PointD2<f64>, svd_tol: f64) -> [usize; 3] {
    let (r, a, b) = fiber_matrices(p);
    [linalg::numerical_rank(&r, svd_tol), linalg::numerical_rank(&a, svd_tol), linalg::numerical_rank(&b, svd_tol)]
}

/// Point with every coordinate in `[−2, −0.5] ∪ [0.5, 2]`.
pub fn generic_point<R: Rng + ?Sized>(dim: AlgebraDim, rng: &mut R) -> PointD2<f64> {
    let n = dim.value();
    let mut c = || {
        let m: f64 = rng.random_range(0.5..=2.0);
        if rng.random_bool(0.5) {
            m
        } else {
            -m
        }
    };
    let x: Vec<f64> = (0..n).map(|_| c()).collect();
    let y: Vec<f64> = (0..n).map(|_| c()).collect();
    PointD2::new(AlgebraElement::from_slice(dim, &x), AlgebraElement::from_slice(dim, &y))
}

pub const GENERIC_RANKS: [usize; 3] = [7, 9, 1];

/// Fiberwise ranks of `(ρ, d⁽¹⁾, d⁽²⁾)` at generic points, the origin and
/// a point of `l_∞`.
pub fn generic_ranks(samples: usize, root_seed: u64, svd_tol: f64) -> VerificationReport {
    let dim = AlgebraDim::O;
    let mut report = VerificationReport::new("ranks").with_dim(8).with_seed(root_seed);
    let ranks: Vec<[usize; 3]> = (0..samples as u64)
        .into_par_iter()
        .map(|i| fiber_ranks(&generic_point(dim, &mut seed::rng(root_seed, "lie3/ranks", i)), svd_tol))
        .collect();
    let off = ranks.iter().find(|r| **r != GENERIC_RANKS).copied().unwrap_or(GENERIC_RANKS);
    let as_i64 = |r: [usize; 3]| r.iter().map(|&x| x as i64).collect::<Vec<_>>();
    report.push(Check::integers(
        "generic_ranks",
        "rank of (ρ, d⁽¹⁾, d⁽²⁾) at generic points",
        as_i64(off),
        as_i64(GENERIC_RANKS),
    ));
    let exact = ranks.iter().all(|r| r[1] + r[2] == 10 && r[0] + r[1] == 16);
    report.push(Check::value(
        "fiberwise_exactness",
        "rank d⁽²⁾ + rank d⁽¹⁾ = 10 and rank d⁽¹⁾ + rank ρ = 16",
        exact.to_string(),
        "true".into(),
    ));
    report.push(Check::integers(
        "origin_ranks",
        "rank of (ρ, d⁽¹⁾, d⁽²⁾) at the origin",
        as_i64(fiber_ranks(&PointD2::origin(dim), svd_tol)),
        vec![0, 0, 0],
    ));
    let mut rng = seed::rng(root_seed, "lie3/ranks_l_infinity", 0);
    let q = generic_point(dim, &mut rng);
    let on_l_inf = PointD2::new(AlgebraElement::zero(dim), q.y);
    report.push(Check::integers(
        "l_infinity_ranks",
        "rank of (ρ, d⁽¹⁾, d⁽²⁾) at (0, y), y ≠ 0",
        as_i64(fiber_ranks(&on_l_inf, svd_tol)),
        as_i64(GENERIC_RANKS),
    ));
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_mismatch() {
        let base = symbolic_base(AlgebraDim::O);
        let t = GradedSection::<Polynomial>::zero(Degree::MinusTwo, AlgebraDim::O);
        assert_eq!(d1(&base, &t), Err(Lie3Error::DegreeMismatch { expected: -1, found: -2 }));
    }

    #[test]
    fn d1_of_mu() {
        let base = symbolic_base(AlgebraDim::O);
        let s = d1(&base, &GradedSection::basis(Degree::MinusOne, AlgebraDim::O, 0)).unwrap();
        assert_eq!(s, GradedSection::Zero { u: Sym::base_x(AlgebraDim::O), v: Sym::zero(AlgebraDim::O) });
    }

    #[test]
    fn out_of_range_brackets() {
        let d = AlgebraDim::O;
        let m = GradedSection::<Polynomial>::basis(Degree::MinusOne, d, 0);
        let t = GradedSection::<Polynomial>::basis(Degree::MinusTwo, d, 0);
        assert!(bracket(&m, &t).is_none());
        assert!(bracket(&t, &t).is_none());
        assert!(jacobi_vanishes_by_degree([Degree::Zero, Degree::MinusOne, Degree::MinusTwo]));
        assert!(!jacobi_vanishes_by_degree([Degree::Zero, Degree::Zero, Degree::MinusOne]));
        assert!(ddistr_vanishes_by_degree(Degree::Zero, Degree::Zero));
        assert!(!ddistr_vanishes_by_degree(Degree::MinusOne, Degree::MinusTwo));
    }

    #[test]
    fn bracket_at_origin() {
        let d = AlgebraDim::O;
        let p = PointD2::<f64>::origin(d);
        let s = GradedSection::Zero { u: AlgebraElement::basis(d, 0), v: AlgebraElement::basis(d, 3) };
        let t = GradedSection::MinusTwo { t: 1.5 };
        assert!(bracket_tensorial(&p, &s, &t).unwrap().is_zero());
    }

    #[test]
    fn quaternion_cases_hold() {
        for (name, _, r) in lie3_cases(AlgebraDim::H, Coefficients::Symbolic) {
            assert!(r.iter().all(Polynomial::is_zero), "{name}");
        }
    }

    #[test]
    fn matrix_matches() {
        assert!(verify_matrix_transcription().passed, "{}", verify_matrix_transcription().to_text());
    }

    #[test]
    fn parse_entries() {
        assert_eq!(parse_entry("-y_3"), Some(-&Polynomial::var(VariableId::y(3))));
        assert_eq!(parse_entry("x_9"), None);
        assert_eq!(parse_entry("z_1"), None);
    }
}
