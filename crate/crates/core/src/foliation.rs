//! Tangency to the Hopf leaves and the absence of linear tangent fields.
//!
//! A vector field `(u, v)` on 𝔻² is tangent to the leaves iff
//! `J(u, v) = (⟨x,u⟩, u·ȳ + x·v̄, ⟨y,v⟩)` vanishes.

use rand::Rng;
use rayon::prelude::*;

use crate::algebroid::{anchor, coordinate, E0Section, VectorFieldO2};
use crate::cayley_dickson::{AlgebraDim, AlgebraElement};
use crate::groupoid;
use crate::hopf::{same_leaf, PointD2};
use crate::linalg;
use crate::poly::{Polynomial, Rational, Symbol, VariableId};
use crate::report::{Check, VerificationReport};
use crate::scalar::Scalar;
use crate::seed;

type Sym = AlgebraElement<Polynomial>;

/// `J(u, v)` for algebra elements with any scalar coefficients, given the
/// base point `(x, y)` in the same backend.
pub fn j_components<S: Scalar>(
    x: &AlgebraElement<S>,
    y: &AlgebraElement<S>,
    u: &AlgebraElement<S>,
    v: &AlgebraElement<S>,
) -> (S, AlgebraElement<S>, S) {
    (x.inner(u), u.mul(&y.conjugate()).add(&x.mul(&v.conjugate())), y.inner(v))
}

/// `J` applied to a polynomial vector field.
pub fn j_map(field: &VectorFieldO2) -> (Polynomial, Sym, Polynomial) {
    let d = field.dim();
    let (u, v) = field.blocks();
    j_components(&Sym::base_x(d), &Sym::base_y(d), &u, &v)
}

fn j_residuals(field: &VectorFieldO2) -> Vec<Polynomial> {
    let (a, b, c) = j_map(field);
    let mut r = vec![a];
    r.extend(b.into_coeffs());
    r.push(c);
    r
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum TangencyMode {
    Symbolic,
    Sampled { samples: usize, seed: u64, tol: f64 },
}

/// Whether `J` vanishes on the field: identically, or at random points
/// within `tol`.
pub fn is_tangent(field: &VectorFieldO2, mode: TangencyMode) -> bool {
    let residuals = j_residuals(field);
    match mode {
        TangencyMode::Symbolic => residuals.iter().all(Polynomial::is_zero),
        TangencyMode::Sampled { samples, seed: s, tol } => {
            let mut rng = seed::rng(s, "foliation/tangent", 0);
            (0..samples).all(|_| {
                let p = groupoid::random_point(field.dim(), &mut rng);
                let assign = crate::algebroid::base_assignment(&p);
                residuals.iter().all(|r| r.eval_f64(&assign).map(|v| v.abs() <= tol).unwrap_or(false))
            })
        }
    }
}

/// Matrix of `J` at a rational point: `n + 2` rows, `2n` columns, column
/// `j` the image of the `j`-th basis vector of 𝔻².
pub fn j_matrix_at(p: &PointD2<Rational>) -> Vec<Vec<Rational>> {
    let d = p.dim();
    let n = d.value();
    let mut m = vec![vec![Rational::zero(); 2 * n]; n + 2];
    for j in 0..2 * n {
        let (u, v) = if j < n {
            (AlgebraElement::basis(d, j), AlgebraElement::zero(d))
        } else {
            (AlgebraElement::zero(d), AlgebraElement::basis(d, j - n))
        };
        let (a, b, c) = j_components(&p.x, &p.y, &u, &v);
        m[0][j] = a;
        for (i, bi) in b.into_coeffs().into_iter().enumerate() {
            m[1 + i][j] = bi;
        }
        m[n + 1][j] = c;
    }
    m
}

/// Dimension of `ker J` at `p`: the dimension of the leaf through `p` for
/// `p ≠ 0`.
pub fn leaf_dimension_at(p: &PointD2<Rational>) -> usize {
    let n = p.dim().value();
    2 * n - linalg::rank(&j_matrix_at(p), 2 * n)
}

/// `u = A·x + B·y`, `v = C·x + D·y` with `n × n` rational matrices.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearFieldAnsatz {
    pub dim: AlgebraDim,
    pub a: Vec<Vec<Rational>>,
    pub b: Vec<Vec<Rational>>,
    pub c: Vec<Vec<Rational>>,
    pub d: Vec<Vec<Rational>>,
}

const BLOCK_TAGS: [Symbol; 4] = [Symbol::new("A"), Symbol::new("B"), Symbol::new("C"), Symbol::new("D")];

/// Unknown entry `(block, i, j)` as a section variable; column order is
/// block-major then row-major.
fn unknown(n: usize, block: usize, i: usize, j: usize) -> VariableId {
    VariableId::section(BLOCK_TAGS[block], i * n + j)
}

fn unknown_column(n: usize, v: VariableId) -> usize {
    let block = BLOCK_TAGS.iter().position(|t| *t == v.tag()).expect("ansatz variable");
    block * n * n + v.index()
}

/// The generic linear field with symbolic matrix entries.
fn symbolic_ansatz(dim: AlgebraDim) -> VectorFieldO2 {
    let n = dim.value();
    let lin = |block_x: usize, block_y: usize, i: usize| {
        let terms: Vec<Polynomial> = (0..n)
            .flat_map(|j| {
                [
                    &Polynomial::var(unknown(n, block_x, i, j)) * &Polynomial::var(VariableId::x(j)),
                    &Polynomial::var(unknown(n, block_y, i, j)) * &Polynomial::var(VariableId::y(j)),
                ]
            })
            .collect();
        Polynomial::sum(terms.iter())
    };
    let mut comps: Vec<Polynomial> = (0..n).map(|i| lin(0, 1, i)).collect();
    comps.extend((0..n).map(|i| lin(2, 3, i)));
    VectorFieldO2::new(dim, comps)
}

impl LinearFieldAnsatz {
    fn from_vector(dim: AlgebraDim, v: &[Rational]) -> Self {
        let n = dim.value();
        let block = |b: usize| (0..n).map(|i| (0..n).map(|j| v[b * n * n + i * n + j].clone()).collect()).collect();
        LinearFieldAnsatz { dim, a: block(0), b: block(1), c: block(2), d: block(3) }
    }

    pub fn field(&self) -> VectorFieldO2 {
        let n = self.dim.value();
        let lin = |mx: &Vec<Vec<Rational>>, my: &Vec<Vec<Rational>>, i: usize| {
            let terms: Vec<Polynomial> = (0..n)
                .flat_map(|j| {
                    [
                        Polynomial::var(VariableId::x(j)).scale(&mx[i][j]),
                        Polynomial::var(VariableId::y(j)).scale(&my[i][j]),
                    ]
                })
                .collect();
            Polynomial::sum(terms.iter())
        };
        let mut comps: Vec<Polynomial> = (0..n).map(|i| lin(&self.a, &self.b, i)).collect();
        comps.extend((0..n).map(|i| lin(&self.c, &self.d, i)));
        VectorFieldO2::new(self.dim, comps)
    }

    /// Whether the cross blocks `B` and `C` vanish.
    pub fn is_block_diagonal(&self) -> bool {
        self.b.iter().chain(&self.c).flatten().all(Rational::is_zero)
    }
}

#[derive(Clone, Debug)]
pub struct LinearNullspace {
    pub dimension: usize,
    pub basis: Vec<LinearFieldAnsatz>,
    pub equations: usize,
}

/// Rows of the linear system `J(Ax+By, Cx+Dy) ≡ 0`, one per (component,
/// base monomial).
pub fn linear_system(dim: AlgebraDim) -> Vec<Vec<Rational>> {
    let n = dim.value();
    let mut rows = Vec::new();
    for r in j_residuals(&symbolic_ansatz(dim)) {
        for (_, coeff) in r.collect_by(|v| v.is_base()) {
            let mut row = vec![Rational::zero(); 4 * n * n];
            for (m, c) in coeff.terms() {
                let (v, e) = m.factors()[0];
                debug_assert!(m.factors().len() == 1 && e == 1);
                row[unknown_column(n, v)] = c.clone();
            }
            rows.push(row);
        }
    }
    rows
}

/// Exact nullspace of the linear-field system.
pub fn linear_nullspace(dim: AlgebraDim) -> LinearNullspace {
    let n = dim.value();
    let rows = linear_system(dim);
    let ns = linalg::nullspace(&rows, 4 * n * n);
    LinearNullspace {
        dimension: ns.len(),
        basis: ns.iter().map(|v| LinearFieldAnsatz::from_vector(dim, v)).collect(),
        equations: rows.len(),
    }
}

/// Independent oracle: evaluates `J(ansatz)` at `4n²` random rational
/// points and returns the nullspace dimension of the stacked equations,
/// with the rank taken over `𝔽_p` for `p = 2⁶¹ − 1`. The modular rank is a
/// lower bound on the rational one, so the result bounds the true
/// nullspace dimension from above.
pub fn sampled_nullspace_dimension(dim: AlgebraDim, root_seed: u64) -> usize {
    let n = dim.value();
    let cols = 4 * n * n;
    let residuals = j_residuals(&symbolic_ansatz(dim));
    let mut rng = seed::rng(root_seed, "foliation/sampled_nullspace", n as u64);
    let mut rows = Vec::new();
    for _ in 0..cols {
        let point: Vec<Rational> = (0..2 * n).map(|_| Rational::new(rng.random_range(-20..=20), rng.random_range(1..=7))).collect();
        let at = |v: VariableId| v.base_slot().map(|s| if s < 8 { point[s].clone() } else { point[n + s - 8].clone() });
        for r in &residuals {
            let lin = r.substitute(at);
            let mut row = vec![Rational::zero(); cols];
            for (m, c) in lin.terms() {
                row[unknown_column(n, m.factors()[0].0)] = c.clone();
            }
            rows.push(row);
        }
    }
    cols - linalg::rank_mod_p(&rows, cols).expect("denominators below p")
}

/// Symmetric 2-tensor with polynomial entries.
#[derive(Clone, Debug, PartialEq)]
pub struct SymmetricTensor {
    pub entries: Vec<Vec<Polynomial>>,
}

impl SymmetricTensor {
    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.size();
        (0..n).all(|i| (0..n).all(|j| self.entries[i][j] == self.entries[j][i]))
    }

    pub fn scale(&self, f: &Polynomial) -> Self {
        SymmetricTensor { entries: self.entries.iter().map(|r| r.iter().map(|e| e * f).collect()).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        SymmetricTensor {
            entries: self.entries.iter().zip(&o.entries).map(|(a, b)| a.iter().zip(b).map(|(p, q)| p - q).collect()).collect(),
        }
    }

    pub fn flat(&self) -> impl Iterator<Item = &Polynomial> {
        self.entries.iter().flatten()
    }

    /// `α ⊙ β = ½(α⊗β + β⊗α)`.
    pub fn sym_product(alpha: &[Polynomial], beta: &[Polynomial]) -> Self {
        let half = Rational::new(1, 2);
        let n = alpha.len();
        let entries = (0..n)
            .map(|i| (0..n).map(|j| (&(&alpha[i] * &beta[j]) + &(&alpha[j] * &beta[i])).scale(&half)).collect())
            .collect();
        SymmetricTensor { entries }
    }
}

/// `(𝓛_X g)_ij = ∂_i X_j + ∂_j X_i` for the flat metric.
pub fn lie_derivative_flat(field: &VectorFieldO2) -> SymmetricTensor {
    let d = field.dim();
    let m = field.comps().len();
    let del = |i: usize, p: &Polynomial| p.derive(coordinate(d, i)).expect("base coordinate");
    let entries = (0..m)
        .map(|i| (0..m).map(|j| &del(i, &field.comps()[j]) + &del(j, &field.comps()[i])).collect())
        .collect();
    SymmetricTensor { entries }
}

/// In the plane `(x, y) = (x⁰, y⁰)`, with `V = (x²+y²)(x∂_y − y∂_x)`:
/// `(x²+y²)·𝓛_V g − 4(x dx + y dy) ⊙ g♭(V)`.
pub fn rotation_example_residual() -> SymmetricTensor {
    let plane = AlgebraDim::R;
    let x = Polynomial::var(VariableId::x(0));
    let y = Polynomial::var(VariableId::y(0));
    let r2 = &(&x * &x) + &(&y * &y);
    let v = VectorFieldO2::new(plane, vec![-&(&y * &r2), &x * &r2]);
    let lhs = lie_derivative_flat(&v).scale(&r2);
    let radial = [x.scale_int(4), y.scale_int(4)];
    lhs.sub(&SymmetricTensor::sym_product(&radial, v.comps()))
}

/// Smallest total degree over all components of the generators
/// `ρ(e_j)` of the foliation.
pub fn generator_min_degree(dim: AlgebraDim) -> Option<u32> {
    (0..2 * dim.value())
        .flat_map(|j| anchor(&E0Section::basis(dim, j)).comps().to_vec())
        .filter_map(|p| p.min_degree())
        .min()
}

/// Expected nullspace dimension of the linear-field system.
pub fn expected_linear_nullspace(dim: AlgebraDim) -> Option<usize> {
    match dim {
        AlgebraDim::C => Some(1),
        AlgebraDim::H => Some(3),
        AlgebraDim::O => Some(0),
        _ => None,
    }
}

/// Linear obstruction: no nonzero linear tangent field on 𝕆², all
/// generators vanish quadratically at 0, and the planar rotation identity.
pub fn linear_obstruction_report() -> VerificationReport {
    let mut report = VerificationReport::new("linear_obstruction").with_dim(8);
    let ns = linear_nullspace(AlgebraDim::O);
    report.push(Check::integers(
        "linear_nullspace",
        "J(Ax+By, Cx+Dy) ≡ 0 forces A = B = C = D = 0 on 𝕆²",
        vec![ns.dimension as i64],
        vec![0],
    ));
    report.push(Check::integers(
        "generator_min_degree",
        "every component of ρ(e_j) vanishes to order 2 at the origin",
        vec![generator_min_degree(AlgebraDim::O).map_or(-1, |d| d as i64)],
        vec![2],
    ));
    report.push(Check::exact_all(
        "rotation_example",
        "(x²+y²)𝓛_V g = 4(x dx + y dy) ⊙ g♭(V) for V = (x²+y²)(x∂_y − y∂_x)",
        rotation_example_residual().flat(),
    ));
    report
}

fn rk4(f: &impl Fn(&[f64]) -> Vec<f64>, p: &[f64], h: f64) -> Vec<f64> {
    let add = |a: &[f64], b: &[f64], s: f64| a.iter().zip(b).map(|(x, y)| x + s * y).collect::<Vec<_>>();
    let k1 = f(p);
    let k2 = f(&add(p, &k1, h / 2.0));
    let k3 = f(&add(p, &k2, h / 2.0));
    let k4 = f(&add(p, &k3, h));
    (0..p.len()).map(|i| p[i] + h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i])).collect()
}

fn to_point(dim: AlgebraDim, c: &[f64]) -> PointD2<f64> {
    let n = dim.value();
    PointD2::new(AlgebraElement::from_slice(dim, &c[..n]), AlgebraElement::from_slice(dim, &c[n..]))
}

/// Integrates `ρ(s)` for a random constant section from a random point and
/// reports the largest drift off the initial leaf.
pub fn flow_drift(dim: AlgebraDim, root_seed: u64, index: u64) -> f64 {
    let mut rng = seed::rng(root_seed, "foliation/flow", index);
    let u = AlgebraElement::random_gaussian(dim, &mut rng);
    let v = AlgebraElement::random_gaussian(dim, &mut rng);
    let p0 = groupoid::random_point(dim, &mut rng);
    let rhs = |c: &[f64]| {
        let p = to_point(dim, c);
        let pair = p.x.inner(&u) + p.y.inner(&v);
        let a = u.scale(&p.x.norm_sq()).add(&p.x.mul(&p.y.conjugate()).mul(&v)).sub(&p.x.scale(&pair));
        let b = v.scale(&p.y.norm_sq()).add(&p.y.mul(&p.x.conjugate()).mul(&u)).sub(&p.y.scale(&pair));
        a.coeffs().iter().chain(b.coeffs()).copied().collect::<Vec<_>>()
    };
    let mut c: Vec<f64> = p0.x.coeffs().iter().chain(p0.y.coeffs()).copied().collect();
    let mut worst: f64 = 0.0;
    let s0 = p0.y.mul(&p0.x.conjugate());
    for _ in 0..200 {
        c = rk4(&rhs, &c, 2.5e-3);
        let p = to_point(dim, &c);
        let slope = p.y.mul(&p.x.conjugate()).dist(&s0);
        worst = worst.max((p.norm_sq() - p0.norm_sq()).abs()).max(slope);
        if !same_leaf(&p0, &p, 1e-6) {
            worst = worst.max(1.0);
        }
    }
    worst
}

/// Foliation suite for dimensions 2, 4, 8.
pub fn verify_foliation(dim: AlgebraDim, samples: usize, root_seed: u64, tol: f64) -> VerificationReport {
    let mut report = VerificationReport::new("foliation").with_dim(dim.value()).with_seed(root_seed);
    let Some(expected) = expected_linear_nullspace(dim) else {
        report.push(Check::value("dimension_supported", "foliation checks run for dims 2, 4, 8", dim.to_string(), "2|4|8".into()));
        return report;
    };
    let s = E0Section::symbolic(dim, Symbol::new("u"), Symbol::new("v"));
    report.push(Check::exact_all("anchor_tangent", "J(ρ(u,v)) = 0", &j_residuals(&anchor(&s))));
    let euler = VectorFieldO2::euler(dim);
    report.push(Check::value(
        "euler_not_tangent",
        "J(x, y) = (‖x‖², 2x·ȳ, ‖y‖²) ≠ 0",
        is_tangent(&euler, TangencyMode::Symbolic).to_string(),
        "false".into(),
    ));
    let (a, b, c) = j_map(&euler);
    let (x, y) = (Sym::base_x(dim), Sym::base_y(dim));
    let mut r = vec![&a - &x.norm_sq(), &c - &y.norm_sq()];
    r.extend(b.sub(&x.mul(&y.conjugate()).scale_i64(2)).into_coeffs());
    report.push(Check::exact_all("euler_image", "J(x, y) = (‖x‖², 2x·ȳ, ‖y‖²)", &r));

    let (ns, sampled) = rayon::join(|| linear_nullspace(dim), || sampled_nullspace_dimension(dim, root_seed));
    report.push(Check::integers(
        "linear_nullspace",
        "dimension of {(A,B,C,D) : J(Ax+By, Cx+Dy) ≡ 0}",
        vec![ns.dimension as i64],
        vec![expected as i64],
    ));
    report.push(Check::integers(
        "linear_nullspace_sampled",
        "same system evaluated at 4n² random rational points",
        vec![sampled as i64],
        vec![expected as i64],
    ));
    let fields: Vec<VectorFieldO2> = ns.basis.iter().map(LinearFieldAnsatz::field).collect();
    let residuals: Vec<Polynomial> = fields.iter().flat_map(j_residuals).collect();
    report.push(Check::exact_all("linear_basis_tangent", "each nullspace basis field satisfies J ≡ 0", &residuals));
    report.push(Check::value(
        "linear_basis_block_diagonal",
        "the cross blocks B, C vanish: u depends on x only, v on y only",
        ns.basis.iter().all(LinearFieldAnsatz::is_block_diagonal).to_string(),
        "true".into(),
    ));
    report.push(Check::integers(
        "generator_min_degree",
        "components of ρ(e_j) have minimum total degree 2",
        vec![generator_min_degree(dim).map_or(-1, |d| d as i64)],
        vec![2],
    ));
    report.push(Check::exact_all(
        "rotation_example",
        "(x²+y²)𝓛_V g = 4(x dx + y dy) ⊙ g♭(V) for V = (x²+y²)(x∂_y − y∂_x)",
        rotation_example_residual().flat(),
    ));
    let drift = (0..samples.min(20) as u64).into_par_iter().map(|i| flow_drift(dim, root_seed, i)).reduce(|| 0.0, f64::max);
    report.push(Check::numeric("flow_stays_on_leaf", "the flow of ρ(u,v) preserves ‖p‖² and y·x̄", drift, tol.max(1e-9), samples.min(20)));
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn j_examples() {
        let z = VectorFieldO2::zero(AlgebraDim::O);
        assert!(is_tangent(&z, TangencyMode::Symbolic));
        assert!(!is_tangent(&VectorFieldO2::euler(AlgebraDim::O), TangencyMode::Symbolic));
        let a = anchor(&E0Section::basis(AlgebraDim::O, 0));
        assert!(is_tangent(&a, TangencyMode::Symbolic));
        assert!(is_tangent(&a, TangencyMode::Sampled { samples: 5, seed: 1, tol: 1e-12 }));
    }

    #[test]
    fn lie_derivative_examples() {
        let r = AlgebraDim::R;
        let x = Polynomial::var(VariableId::x(0));
        let y = Polynomial::var(VariableId::y(0));
        let rot = VectorFieldO2::new(r, vec![-&y, x.clone()]);
        assert!(lie_derivative_flat(&rot).flat().all(Polynomial::is_zero));
        let e = lie_derivative_flat(&VectorFieldO2::euler(r));
        assert_eq!(e.entries[0][0], Polynomial::from_int(2));
        assert_eq!(e.entries[1][1], Polynomial::from_int(2));
        assert!(e.entries[0][1].is_zero());
        assert!(rotation_example_residual().flat().all(Polynomial::is_zero));
    }

    #[test]
    fn small_nullspaces() {
        assert_eq!(linear_nullspace(AlgebraDim::C).dimension, 1);
        assert_eq!(sampled_nullspace_dimension(AlgebraDim::C, 5), 1);
    }

    #[test]
    fn leaf_dimensions() {
        let p = |d: AlgebraDim| {
            let n = d.value();
            let x: Vec<i64> = (0..n).map(|i| i as i64 + 1).collect();
            let y: Vec<i64> = (0..n).map(|i| 2 - i as i64 * 3).collect();
            PointD2::new(AlgebraElement::from_ints(d, &x), AlgebraElement::from_ints(d, &y))
        };
        assert_eq!(leaf_dimension_at(&p(AlgebraDim::R)), 0);
        assert_eq!(leaf_dimension_at(&p(AlgebraDim::C)), 1);
        assert_eq!(leaf_dimension_at(&p(AlgebraDim::H)), 3);
        assert_eq!(leaf_dimension_at(&p(AlgebraDim::O)), 7);
    }
}
