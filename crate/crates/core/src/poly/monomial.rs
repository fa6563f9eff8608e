use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

use super::var::VariableId;

/// Power product of indeterminates, stored sparsely as `(variable, exponent)`
/// pairs sorted by variable. Exponents are always positive.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    factors: SmallVec<[(VariableId, u16); 6]>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(v: VariableId) -> Self {
        let mut factors = SmallVec::new();
        factors.push((v, 1));
        Monomial { factors }
    }

    /// Builds a monomial from arbitrary `(variable, exponent)` pairs; repeated
    /// variables are merged and zero exponents dropped.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (VariableId, u16)>) -> Self {
        let mut factors: SmallVec<[(VariableId, u16); 6]> =
            pairs.into_iter().filter(|&(_, e)| e > 0).collect();
        factors.sort_unstable_by_key(|&(v, _)| v);
        let mut merged: SmallVec<[(VariableId, u16); 6]> = SmallVec::new();
        for (v, e) in factors {
            match merged.last_mut() {
                Some((lv, le)) if *lv == v => *le += e,
                _ => merged.push((v, e)),
            }
        }
        Monomial { factors: merged }
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn factors(&self) -> &[(VariableId, u16)] {
        &self.factors
    }

    pub fn degree(&self) -> u32 {
        self.factors.iter().map(|&(_, e)| e as u32).sum()
    }

    pub fn exponent(&self, v: VariableId) -> u16 {
        self.factors
            .binary_search_by_key(&v, |&(w, _)| w)
            .map(|i| self.factors[i].1)
            .unwrap_or(0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        if self.is_one() {
            return other.clone();
        }
        if other.is_one() {
            return self.clone();
        }
        let (a, b) = (&self.factors, &other.factors);
        let mut out = SmallVec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial { factors: out }
    }

    /// Formal partial derivative: `(exponent of v, monomial / v)`, or `None`
    /// when `v` does not occur.
    pub fn derive(&self, v: VariableId) -> Option<(u16, Monomial)> {
        let pos = self.factors.binary_search_by_key(&v, |&(w, _)| w).ok()?;
        let e = self.factors[pos].1;
        let mut factors = self.factors.clone();
        if e == 1 {
            factors.remove(pos);
        } else {
            factors[pos].1 = e - 1;
        }
        Some((e, Monomial { factors }))
    }

    /// Splits into the part built from variables satisfying `pred` and the rest.
    pub fn split(&self, pred: impl Fn(VariableId) -> bool) -> (Monomial, Monomial) {
        let mut yes = SmallVec::new();
        let mut no = SmallVec::new();
        for &f in &self.factors {
            if pred(f.0) {
                yes.push(f);
            } else {
                no.push(f);
            }
        }
        (Monomial { factors: yes }, Monomial { factors: no })
    }

    pub fn variables(&self) -> impl Iterator<Item = VariableId> + '_ {
        self.factors.iter().map(|&(v, _)| v)
    }
}

/// Graded lexicographic order: higher total degree first, ties broken
/// lexicographically along the variable order.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        let d = self.degree().cmp(&other.degree());
        if d != Ordering::Equal {
            return d;
        }
        for (a, b) in self.factors.iter().zip(other.factors.iter()) {
            if a.0 != b.0 {
                // The monomial containing the earlier variable is larger.
                return b.0.cmp(&a.0);
            }
            if a.1 != b.1 {
                return a.1.cmp(&b.1);
            }
        }
        self.factors.len().cmp(&other.factors.len())
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        for (k, (v, e)) in self.factors.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize) -> VariableId {
        VariableId::x(i)
    }

    #[test]
    fn graded_lex() {
        let x0 = Monomial::var(x(0));
        let x1 = Monomial::var(x(1));
        let x0x0 = x0.mul(&x0);
        let x0x1 = x0.mul(&x1);
        let x1x1 = x1.mul(&x1);
        assert!(x0x0 > x0x1);
        assert!(x0x1 > x1x1);
        assert!(x1x1 > x0);
        assert!(x0 > x1);
        assert!(x1 > Monomial::one());
    }

    #[test]
    fn merge_and_derive() {
        let m = Monomial::from_pairs([(x(2), 1), (x(0), 2), (x(2), 2)]);
        assert_eq!(m.exponent(x(2)), 3);
        assert_eq!(m.degree(), 5);
        let (e, d) = m.derive(x(0)).unwrap();
        assert_eq!(e, 2);
        assert_eq!(d, Monomial::from_pairs([(x(0), 1), (x(2), 3)]));
        assert!(m.derive(x(5)).is_none());
    }
}
