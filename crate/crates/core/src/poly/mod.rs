//! Exact sparse multivariate polynomials over the rationals.
//!
//! Every symbolic identity in this crate is checked by expanding both sides
//! into [`Polynomial`]s and testing the difference with
//! [`Polynomial::is_zero`]. Indeterminates are either base coordinates
//! `x^0..x^7`, `y^0..y^7` (the only ones that can be differentiated) or
//! section variables, which play the role of free parameters.

mod monomial;
mod polynomial;
mod rational;
mod var;

use std::collections::BTreeSet;

use thiserror::Error;

pub use monomial::Monomial;
pub use polynomial::Polynomial;
pub use rational::Rational;
pub use var::{Symbol, VarClass, VariableId};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("polynomial uses variable {0} outside the ring context")]
    RingMismatch(VariableId),
    #[error("cannot differentiate with respect to section variable {0}")]
    NotACoordinate(VariableId),
    #[error("no value assigned to variable {0}")]
    MissingVariable(VariableId),
}

#[derive(Clone, Debug, PartialEq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Scale(Rational),
}

/// A declared set of indeterminates. Operations routed through a ring
/// reject operands that mention undeclared variables.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Ring {
    vars: BTreeSet<VariableId>,
}

impl Ring {
    pub fn new(vars: impl IntoIterator<Item = VariableId>) -> Self {
        Ring { vars: vars.into_iter().collect() }
    }

    /// Base coordinates `x^0..x^{n-1}`, `y^0..y^{n-1}`.
    pub fn base(n: usize) -> Self {
        Ring::new((0..n).map(VariableId::x).chain((0..n).map(VariableId::y)))
    }

    pub fn with_section(mut self, tag: Symbol, len: usize) -> Self {
        self.vars.extend((0..len).map(|i| VariableId::section(tag, i)));
        self
    }

    pub fn contains(&self, v: VariableId) -> bool {
        self.vars.contains(&v)
    }

    pub fn variables(&self) -> impl Iterator<Item = VariableId> + '_ {
        self.vars.iter().copied()
    }

    pub fn var(&self, v: VariableId) -> Result<Polynomial, PolyError> {
        if self.contains(v) {
            Ok(Polynomial::var(v))
        } else {
            Err(PolyError::RingMismatch(v))
        }
    }

    pub fn check(&self, p: &Polynomial) -> Result<(), PolyError> {
        match p.variables().into_iter().find(|v| !self.contains(*v)) {
            Some(v) => Err(PolyError::RingMismatch(v)),
            None => Ok(()),
        }
    }

    pub fn arith(&self, p: &Polynomial, q: &Polynomial, op: ArithOp) -> Result<Polynomial, PolyError> {
        self.check(p)?;
        self.check(q)?;
        Ok(match op {
            ArithOp::Add => p + q,
            ArithOp::Sub => p - q,
            ArithOp::Mul => p * q,
            ArithOp::Scale(c) => p.scale(&c),
        })
    }
}

#[cfg(test)]
mod tests {
    use std::collections::HashMap;

    use super::*;

    fn x(i: usize) -> Polynomial {
        Polynomial::var(VariableId::x(i))
    }
    fn y(i: usize) -> Polynomial {
        Polynomial::var(VariableId::y(i))
    }

    #[test]
    fn square_of_variable() {
        let p = &x(0) * &x(0);
        assert_eq!(p.num_terms(), 1);
        let (m, c) = &p.terms()[0];
        assert_eq!(m.exponent(VariableId::x(0)), 2);
        assert!(c.is_one());
    }

    #[test]
    fn additive_inverse() {
        let p = &(&x(0) * &y(3)) + &Polynomial::from_int(5);
        assert!((&p + &(-&p)).is_zero());
        assert!((&p - &p).is_zero());
    }

    #[test]
    fn difference_of_squares() {
        let lhs = &(&x(0) + &y(0)) * &(&x(0) - &y(0));
        let rhs = &(&x(0) * &x(0)) - &(&y(0) * &y(0));
        assert_eq!(lhs, rhs);
        assert_eq!(lhs.num_terms(), 2);
    }

    #[test]
    fn derivatives() {
        let sq = &x(0) * &x(0);
        assert_eq!(sq.derive(VariableId::x(0)).unwrap(), x(0).scale_int(2));
        assert!(y(3).derive(VariableId::x(0)).unwrap().is_zero());
        let norm = Polynomial::sum((0..8).map(|i| &x(i) * &x(i)).collect::<Vec<_>>().iter());
        assert_eq!(norm.derive(VariableId::x(1)).unwrap(), x(1).scale_int(2));
        let s = VariableId::section(Symbol::new("u"), 0);
        assert_eq!(
            Polynomial::var(s).derive(s),
            Err(PolyError::NotACoordinate(s))
        );
    }

    #[test]
    fn evaluation() {
        let mut a = HashMap::new();
        a.insert(VariableId::x(0), Rational::from_integer(1));
        a.insert(VariableId::y(0), Rational::from_integer(2));
        assert!(Polynomial::zero().evaluate(&a).unwrap().is_zero());
        assert_eq!((&x(0) + &y(0)).evaluate(&a).unwrap(), Rational::from_integer(3));
        assert_eq!(x(1).evaluate(&a), Err(PolyError::MissingVariable(VariableId::x(1))));
    }

    #[test]
    fn non_identity_is_nonzero() {
        let p = &(&x(0) * &x(0)) - &x(0);
        assert!(!p.is_zero());
    }

    #[test]
    fn ring_context_mismatch() {
        let ring = Ring::base(2);
        let ok = ring.arith(&x(0), &y(1), ArithOp::Mul).unwrap();
        assert_eq!(ok, &x(0) * &y(1));
        assert_eq!(
            ring.arith(&x(0), &x(5), ArithOp::Add),
            Err(PolyError::RingMismatch(VariableId::x(5)))
        );
        assert_eq!(
            ring.arith(&x(1), &x(1), ArithOp::Scale(Rational::new(1, 2))).unwrap(),
            x(1).scale(&Rational::new(1, 2))
        );
    }

    #[test]
    fn collect_by_base_monomial() {
        let u = Polynomial::var(VariableId::section(Symbol::new("u"), 0));
        let p = &(&(&x(0) * &u) + &x(0)) + &(&y(1) * &u);
        let groups = p.collect_by(|v| v.is_base());
        assert_eq!(groups.len(), 2);
        assert_eq!(groups[&Monomial::var(VariableId::x(0))], &u + &Polynomial::one());
    }

    #[test]
    fn display() {
        let p = &(&x(0) * &x(0)).scale_int(3) - &y(2);
        assert_eq!(p.to_string(), "3*x0^2 - y2");
    }
}
