use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::monomial::Monomial;
use super::rational::Rational;
use super::var::VariableId;
use super::PolyError;

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are kept sorted in descending graded-lex order with no zero
/// coefficients, so structural equality is mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: Vec<(Monomial, Rational)>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Polynomial { terms: vec![(Monomial::one(), c)] }
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(Rational::from_integer(n))
    }

    pub fn var(v: VariableId) -> Self {
        Polynomial { terms: vec![(Monomial::var(v), Rational::one())] }
    }

    pub fn monomial(m: Monomial, c: Rational) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Polynomial { terms: vec![(m, c)] }
        }
    }

    /// Builds a polynomial from arbitrary terms, combining like monomials.
    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut v: Vec<(Monomial, Rational)> = terms.into_iter().collect();
        Self::normalize(&mut v);
        Polynomial { terms: v }
    }

    fn normalize(v: &mut Vec<(Monomial, Rational)>) {
        v.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        let mut out: Vec<(Monomial, Rational)> = Vec::with_capacity(v.len());
        for (m, c) in v.drain(..) {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc += &c,
                _ => {
                    if let Some((_, lc)) = out.last() {
                        if lc.is_zero() {
                            out.pop();
                        }
                    }
                    out.push((m, c));
                }
            }
        }
        if let Some((_, lc)) = out.last() {
            if lc.is_zero() {
                out.pop();
            }
        }
        *v = out;
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// `Some(c)` when the polynomial is the constant `c` (including zero).
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    /// Highest total degree, `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    /// Lowest total degree of any term, `None` for the zero polynomial.
    pub fn min_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).min()
    }

    /// Lowest total degree counting only variables that satisfy `pred`.
    pub fn min_degree_in(&self, pred: impl Fn(VariableId) -> bool) -> Option<u32> {
        self.terms
            .iter()
            .map(|(m, _)| m.factors().iter().filter(|(v, _)| pred(*v)).map(|&(_, e)| e as u32).sum())
            .min()
    }

    pub fn variables(&self) -> BTreeSet<VariableId> {
        self.terms.iter().flat_map(|(m, _)| m.variables()).collect()
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Self::zero();
        }
        Polynomial { terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect() }
    }

    pub fn scale_int(&self, n: i64) -> Polynomial {
        match n {
            0 => Self::zero(),
            1 => self.clone(),
            -1 => -self,
            _ => self.scale(&Rational::from_integer(n)),
        }
    }

    fn merge(&self, other: &Polynomial, negate_other: bool) -> Polynomial {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    let c = if negate_other { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate_other { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        for t in &b[j..] {
            let c = if negate_other { -&t.1 } else { t.1.clone() };
            out.push((t.0.clone(), c));
        }
        Polynomial { terms: out }
    }

    fn product(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if let Some(c) = self.as_constant() {
            return other.scale(&c);
        }
        if let Some(c) = other.as_constant() {
            return self.scale(&c);
        }
        let mut v = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                v.push((ma.mul(mb), ca * cb));
            }
        }
        Self::normalize(&mut v);
        Polynomial { terms: v }
    }

    /// Sum of many polynomials in one normalization pass.
    pub fn sum<'a>(items: impl IntoIterator<Item = &'a Polynomial>) -> Polynomial {
        let mut v = Vec::new();
        for p in items {
            v.extend(p.terms.iter().cloned());
        }
        Self::normalize(&mut v);
        Polynomial { terms: v }
    }

    /// `Σ sign·a·b` expanded in a single normalization pass.
    pub fn signed_sum_of_products(terms: &[(i8, &Polynomial, &Polynomial)]) -> Polynomial {
        let mut v = Vec::new();
        for &(s, a, b) in terms {
            for (ma, ca) in &a.terms {
                for (mb, cb) in &b.terms {
                    let c = ca * cb;
                    v.push((ma.mul(mb), if s < 0 { -c } else { c }));
                }
            }
        }
        Self::normalize(&mut v);
        Polynomial { terms: v }
    }

    /// Formal partial derivative with respect to a base coordinate.
    pub fn derive(&self, v: VariableId) -> Result<Polynomial, PolyError> {
        if !v.is_base() {
            return Err(PolyError::NotACoordinate(v));
        }
        Ok(self.derive_unchecked(v))
    }

    pub(crate) fn derive_unchecked(&self, v: VariableId) -> Polynomial {
        let mut out = Vec::new();
        for (m, c) in &self.terms {
            if let Some((e, dm)) = m.derive(v) {
                out.push((dm, c * &Rational::from_integer(e as i64)));
            }
        }
        // Distinct monomials stay distinct after removing one power of v,
        // but the order can change.
        Self::normalize(&mut out);
        Polynomial { terms: out }
    }

    /// Exact value under a complete assignment.
    pub fn evaluate(&self, assignment: &HashMap<VariableId, Rational>) -> Result<Rational, PolyError> {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for &(v, e) in m.factors() {
                let val = assignment.get(&v).ok_or(PolyError::MissingVariable(v))?;
                for _ in 0..e {
                    t = &t * val;
                }
            }
            acc += &t;
        }
        Ok(acc)
    }

    /// Partial evaluation: variables for which `f` returns a value are
    /// replaced, the rest stay symbolic.
    pub fn substitute(&self, f: impl Fn(VariableId) -> Option<Rational>) -> Polynomial {
        let mut out = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut rest = Vec::new();
            for &(v, e) in m.factors() {
                match f(v) {
                    Some(val) => {
                        for _ in 0..e {
                            coeff = &coeff * &val;
                        }
                    }
                    None => rest.push((v, e)),
                }
            }
            if !coeff.is_zero() {
                out.push((Monomial::from_pairs(rest), coeff));
            }
        }
        Self::normalize(&mut out);
        Polynomial { terms: out }
    }

    /// Replaces each variable by a polynomial (variables mapped to `None` are kept).
    pub fn compose(&self, f: &impl Fn(VariableId) -> Option<Polynomial>) -> Polynomial {
        let mut acc = Vec::new();
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(c.clone());
            for &(v, e) in m.factors() {
                let base = f(v).unwrap_or_else(|| Polynomial::var(v));
                for _ in 0..e {
                    t = &t * &base;
                }
            }
            acc.push(t);
        }
        Polynomial::sum(acc.iter())
    }

    /// Floating-point value; `f` must cover every variable.
    pub fn eval_f64(&self, f: impl Fn(VariableId) -> Option<f64>) -> Result<f64, PolyError> {
        let mut acc = 0.0;
        for (m, c) in &self.terms {
            let mut t = c.to_f64();
            for &(v, e) in m.factors() {
                let val = f(v).ok_or(PolyError::MissingVariable(v))?;
                t *= val.powi(e as i32);
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Groups terms by the sub-monomial in the variables selected by `pred`;
    /// each group's value is the cofactor polynomial in the remaining variables.
    pub fn collect_by(&self, pred: impl Fn(VariableId) -> bool) -> BTreeMap<Monomial, Polynomial> {
        let mut groups: BTreeMap<Monomial, Vec<(Monomial, Rational)>> = BTreeMap::new();
        for (m, c) in &self.terms {
            let (key, rest) = m.split(&pred);
            groups.entry(key).or_default().push((rest, c.clone()));
        }
        groups.into_iter().map(|(k, v)| (k, Polynomial::from_terms(v))).collect()
    }

    /// Coefficient of a monomial (exact match).
    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms
            .binary_search_by(|(tm, _)| m.cmp(tm))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| Rational::zero())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c < &Rational::zero();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.merge(rhs, false)
    }
}

impl Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.merge(rhs, true)
    }
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.product(rhs)
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(mut self) -> Polynomial {
        for t in &mut self.terms {
            t.1 = -std::mem::take(&mut t.1);
        }
        self
    }
}
