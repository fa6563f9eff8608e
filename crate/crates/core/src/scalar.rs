//! Coefficient backends for algebra elements.

use std::fmt::Debug;

use crate::poly::{Polynomial, Rational};

/// Commutative ring of coefficients. Division is optional: it is available
/// for `Rational` and `f64` but not for `Polynomial`.
pub trait Scalar: Clone + Debug + PartialEq + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(n: i64) -> Self;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negate(&self) -> Self;
    fn is_zero(&self) -> bool;

    /// `None` when the divisor is zero or the backend has no division.
    fn try_div(&self, other: &Self) -> Option<Self>;

    fn is_finite(&self) -> bool {
        true
    }

    /// Sum of signed products `Σ sign·a·b`; backends may override for speed.
    fn signed_dot(terms: &[(i8, &Self, &Self)]) -> Self {
        let mut acc = Self::zero();
        for &(s, a, b) in terms {
            let p = a.times(b);
            acc = if s < 0 { acc.minus(&p) } else { acc.plus(&p) };
        }
        acc
    }

    fn sum<'a>(items: impl IntoIterator<Item = &'a Self>) -> Self
    where
        Self: 'a,
    {
        items.into_iter().fold(Self::zero(), |acc, x| acc.plus(x))
    }
}

impl Scalar for f64 {
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn from_i64(n: i64) -> Self {
        n as f64
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negate(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        *self == 0.0
    }
    fn try_div(&self, other: &Self) -> Option<Self> {
        (*other != 0.0).then(|| self / other)
    }
    fn is_finite(&self) -> bool {
        f64::is_finite(*self)
    }
}

impl Scalar for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn one() -> Self {
        Rational::one()
    }
    fn from_i64(n: i64) -> Self {
        Rational::from_integer(n)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negate(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn try_div(&self, other: &Self) -> Option<Self> {
        other.recip().map(|r| self * &r)
    }
}

impl Scalar for Polynomial {
    fn zero() -> Self {
        Polynomial::zero()
    }
    fn one() -> Self {
        Polynomial::one()
    }
    fn from_i64(n: i64) -> Self {
        Polynomial::from_int(n)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negate(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        Polynomial::is_zero(self)
    }
    fn try_div(&self, _other: &Self) -> Option<Self> {
        None
    }

    fn signed_dot(terms: &[(i8, &Self, &Self)]) -> Self {
        Polynomial::signed_sum_of_products(terms)
    }

    fn sum<'a>(items: impl IntoIterator<Item = &'a Self>) -> Self {
        Polynomial::sum(items)
    }
}
