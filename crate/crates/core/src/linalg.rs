//! Exact elimination over the rationals and SVD-based numerical rank.

use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::poly::Rational;

/// Row-reduced form of an integer matrix, computed without fractions.
#[derive(Clone, Debug)]
pub struct Echelon {
    cols: usize,
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Integer basis of the right nullspace, one vector per free column.
    pub fn nullspace(&self) -> Vec<Vec<Rational>> {
        let free: Vec<usize> = (0..self.cols).filter(|c| !self.pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Rational::zero(); self.cols];
                v[f] = Rational::one();
                for (row, &p) in self.rows.iter().zip(&self.pivots) {
                    if !row[f].is_zero() {
                        v[p] = Rational::from_big(-row[f].clone(), row[p].clone());
                    }
                }
                clear_denominators(&v)
            })
            .collect()
    }
}

/// Scales a rational vector to a primitive integer vector.
pub fn clear_denominators(v: &[Rational]) -> Vec<Rational> {
    let lcm = v.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    let ints: Vec<BigInt> = v.iter().map(|r| r.numer() * (&lcm / r.denom())).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    let g = if g.is_zero() { BigInt::one() } else { g };
    ints.into_iter().map(|x| Rational::from_big(x / &g, BigInt::one())).collect()
}

fn primitive(row: &mut [BigInt]) {
    let g = row.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in row.iter_mut() {
            *x /= &g;
        }
    }
}

/// Fraction-free Gauss–Jordan reduction. Each row is first scaled to
/// integers; eliminations use cross multiplication followed by division by
/// the row content, so entries stay integral and small.
pub fn row_reduce(matrix: &[Vec<Rational>], cols: usize) -> Echelon {
    let mut rows: Vec<Vec<BigInt>> = matrix
        .iter()
        .map(|r| {
            assert_eq!(r.len(), cols, "ragged matrix");
            clear_denominators(r).iter().map(|x| x.numer().clone()).collect()
        })
        .filter(|r: &Vec<BigInt>| r.iter().any(|x| !x.is_zero()))
        .collect();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len())
            .filter(|&r| !rows[r][c].is_zero())
            .min_by_key(|&r| rows[r][c].abs())
        else {
            continue;
        };
        rows.swap(rank, p);
        let pivot_row = rows[rank].clone();
        let pv = &pivot_row[c];
        for (r, row) in rows.iter_mut().enumerate() {
            if r == rank || row[c].is_zero() {
                continue;
            }
            let g = pv.gcd(&row[c]);
            let a = pv / &g;
            let b = &row[c] / &g;
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                *x = &a * &*x - &b * y;
            }
            primitive(row);
        }
        pivots.push(c);
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rows.truncate(rank);
    Echelon { cols, rows, pivots }
}

pub fn rank(matrix: &[Vec<Rational>], cols: usize) -> usize {
    row_reduce(matrix, cols).rank()
}

pub fn nullspace(matrix: &[Vec<Rational>], cols: usize) -> Vec<Vec<Rational>> {
    row_reduce(matrix, cols).nullspace()
}

/// Mersenne prime `2⁶¹ − 1`.
pub const PRIME: u64 = (1 << 61) - 1;

fn mul_mod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % PRIME as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a);
        }
        a = mul_mod(a, a);
        e >>= 1;
    }
    r
}

/// Image of a rational in `𝔽_p`, `None` if the denominator vanishes mod p.
pub fn reduce_mod_p(r: &Rational) -> Option<u64> {
    let p = BigInt::from(PRIME);
    let n = r.numer().mod_floor(&p);
    let d = r.denom().mod_floor(&p);
    let (n, d) = (u64::try_from(n).ok()?, u64::try_from(d).ok()?);
    if d == 0 {
        return None;
    }
    Some(mul_mod(n, pow_mod(d, PRIME - 2)))
}

/// Rank over `𝔽_p` with `p = 2⁶¹ − 1`. For a rational matrix this is a
/// lower bound on the rank over ℚ.
pub fn rank_mod_p(matrix: &[Vec<Rational>], cols: usize) -> Option<usize> {
    let mut rows: Vec<Vec<u64>> = matrix
        .iter()
        .map(|r| r.iter().map(reduce_mod_p).collect::<Option<Vec<u64>>>())
        .collect::<Option<_>>()?;
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][c] != 0) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = pow_mod(rows[rank][c], PRIME - 2);
        let pivot: Vec<u64> = rows[rank].iter().map(|&x| mul_mod(x, inv)).collect();
        for row in rows.iter_mut().skip(rank + 1) {
            let f = row[c];
            if f == 0 {
                continue;
            }
            for (x, y) in row.iter_mut().zip(&pivot) {
                *x = (*x + PRIME - mul_mod(f, *y)) % PRIME;
            }
        }
        rows[rank] = pivot;
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    Some(rank)
}

/// Number of singular values above `rel_tol · σ_max`. A zero matrix has
/// rank 0.
pub fn numerical_rank(m: &DMatrix<f64>, rel_tol: f64) -> usize {
    if m.nrows() == 0 || m.ncols() == 0 {
        return 0;
    }
    let sv = m.singular_values();
    let max = sv.iter().cloned().fold(0.0, f64::max);
    if max == 0.0 {
        return 0;
    }
    sv.iter().filter(|&&s| s > rel_tol * max).count()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter().map(|r| r.iter().map(|&x| Rational::from_integer(x)).collect()).collect()
    }

    fn mat_vec(a: &[Vec<Rational>], v: &[Rational]) -> Vec<Rational> {
        a.iter()
            .map(|r| r.iter().zip(v).fold(Rational::zero(), |acc, (x, y)| &acc + &(x * y)))
            .collect()
    }

    #[test]
    fn rank_and_nullspace() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(rank(&a, 3), 2);
        let ns = nullspace(&a, 3);
        assert_eq!(ns.len(), 1);
        assert!(mat_vec(&a, &ns[0]).iter().all(Rational::is_zero));
    }

    #[test]
    fn fractions_and_zero_rows() {
        let a = vec![
            vec![Rational::new(1, 2), Rational::new(1, 3)],
            vec![Rational::zero(), Rational::zero()],
            vec![Rational::new(3, 2), Rational::from_integer(1)],
        ];
        assert_eq!(rank(&a, 2), 1);
        assert_eq!(nullspace(&a, 2), vec![vec![Rational::from_integer(-2), Rational::from_integer(3)]]);
        assert_eq!(nullspace(&[], 3).len(), 3);
    }

    #[test]
    fn full_rank_has_trivial_nullspace() {
        let a = m(&[&[2, 1, 0], &[0, 3, 1], &[1, 0, 5]]);
        assert_eq!(rank(&a, 3), 3);
        assert!(nullspace(&a, 3).is_empty());
    }

    #[test]
    fn modular_rank() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(rank_mod_p(&a, 3), Some(2));
        assert_eq!(reduce_mod_p(&Rational::new(1, 2)).map(|h| mul_mod(h, 2)), Some(1));
        assert_eq!(reduce_mod_p(&Rational::from_integer(-1)), Some(PRIME - 1));
    }

    #[test]
    fn svd_rank() {
        let a = DMatrix::from_row_slice(3, 3, &[1.0, 2.0, 3.0, 2.0, 4.0, 6.0, 1.0, 0.0, 1.0]);
        assert_eq!(numerical_rank(&a, 1e-8), 2);
        assert_eq!(numerical_rank(&DMatrix::zeros(4, 4), 1e-8), 0);
    }
}
