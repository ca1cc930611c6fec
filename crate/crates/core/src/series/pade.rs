//! Exact rational-function reconstruction from series coefficients.
//!
//! Generating functions of walks in a finite domain are rational, so a long
//! enough prefix determines them. [`pade_reconstruct`] searches for the
//! lowest-degree `N(t)/D(t)` with `D(0) = 1` whose expansion reproduces
//! every supplied coefficient, using exact Gaussian elimination over ℚ.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::trunc::TruncSeries;
use crate::error::{Error, Result};

type Q = BigRational;

/// `numerator / denominator`, coprime, with `denominator(0) = 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalFn {
    numerator: Vec<Q>,
    denominator: Vec<Q>,
}

fn trim(mut p: Vec<Q>) -> Vec<Q> {
    while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    if p.is_empty() {
        p.push(Q::zero());
    }
    p
}

fn is_zero_poly(p: &[Q]) -> bool {
    p.iter().all(Zero::is_zero)
}

/// Polynomial remainder of `a` by non-zero `b`.
fn poly_rem(a: &[Q], b: &[Q]) -> Vec<Q> {
    let b = trim(b.to_vec());
    let lead = b.last().unwrap().clone();
    let mut r = trim(a.to_vec());
    while !is_zero_poly(&r) && r.len() >= b.len() {
        let shift = r.len() - b.len();
        let factor = r.last().unwrap() / &lead;
        for (i, bc) in b.iter().enumerate() {
            r[shift + i] = &r[shift + i] - &factor * bc;
        }
        r = trim(r);
        if r.len() == 1 && r[0].is_zero() {
            break;
        }
    }
    r
}

fn poly_gcd(a: &[Q], b: &[Q]) -> Vec<Q> {
    let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
    while !is_zero_poly(&b) {
        let r = poly_rem(&a, &b);
        a = b;
        b = r;
    }
    a
}

/// Exact quotient of `a` by `b` (caller guarantees divisibility).
fn poly_div_exact(a: &[Q], b: &[Q]) -> Vec<Q> {
    let b = trim(b.to_vec());
    let mut r = trim(a.to_vec());
    if r.len() < b.len() {
        return vec![Q::zero()];
    }
    let lead = b.last().unwrap().clone();
    let mut q = vec![Q::zero(); r.len() - b.len() + 1];
    for shift in (0..q.len()).rev() {
        let factor = &r[shift + b.len() - 1] / &lead;
        for (i, bc) in b.iter().enumerate() {
            r[shift + i] = &r[shift + i] - &factor * bc;
        }
        q[shift] = factor;
    }
    trim(q)
}

fn degree(p: &[Q]) -> usize {
    trim(p.to_vec()).len() - 1
}

impl RationalFn {
    /// Normalizes `num/den`: cancels the polynomial gcd and scales so that
    /// the denominator has constant term 1.
    pub fn new(numerator: Vec<Q>, denominator: Vec<Q>) -> Result<Self> {
        let den = trim(denominator);
        if den[0].is_zero() {
            return Err(Error::Precondition(
                "denominator must have a nonzero constant term".into(),
            ));
        }
        let num = trim(numerator);
        let g = poly_gcd(&num, &den);
        let (mut num, mut den) = if degree(&g) > 0 {
            (poly_div_exact(&num, &g), poly_div_exact(&den, &g))
        } else {
            (num, den)
        };
        let c0 = den[0].clone();
        for c in num.iter_mut().chain(den.iter_mut()) {
            *c = &*c / &c0;
        }
        Ok(Self {
            numerator: num,
            denominator: den,
        })
    }

    pub fn numerator(&self) -> &[Q] {
        &self.numerator
    }

    pub fn denominator(&self) -> &[Q] {
        &self.denominator
    }

    /// Degree of the numerator; the zero polynomial counts as degree 0.
    pub fn deg_num(&self) -> usize {
        self.numerator.len() - 1
    }

    pub fn deg_den(&self) -> usize {
        self.denominator.len() - 1
    }

    /// Power-series expansion through `t^order`.
    pub fn expand(&self, order: usize) -> TruncSeries<Q> {
        let num = TruncSeries::from_prefix(&self.numerator, order);
        let den = TruncSeries::from_prefix(&self.denominator, order);
        num.trunc_div(&den)
            .expect("normalized denominator has constant term 1")
    }

    fn fmt_poly(p: &[Q], f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in p.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*t")?,
                _ => write!(f, "({c})*t^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        Self::fmt_poly(&self.numerator, f)?;
        write!(f, ") / (")?;
        Self::fmt_poly(&self.denominator, f)?;
        write!(f, ")")
    }
}

/// Solves `A x = b` exactly, taking the first nonzero entry in each column
/// as pivot. Free variables are set to zero. Returns `None` if inconsistent.
fn solve_linear(mut rows: Vec<Vec<Q>>, ncols: usize) -> Option<Vec<Q>> {
    // Each row holds ncols coefficients followed by the right-hand side.
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(pr) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, pr);
        let inv = rows[r][col].recip();
        for x in &mut rows[r][col..] {
            *x = &*x * &inv;
        }
        let pivot = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[col].is_zero() {
                let factor = row[col].clone();
                for (x, pv) in row[col..].iter_mut().zip(&pivot[col..]) {
                    *x = &*x - &factor * pv;
                }
            }
        }
        pivot_cols.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    if rows[r..].iter().any(|row| !row[ncols].is_zero()) {
        return None;
    }
    let mut x = vec![Q::zero(); ncols];
    for (i, &col) in pivot_cols.iter().enumerate() {
        x[col] = rows[i][ncols].clone();
    }
    Some(x)
}

/// Tries the exact fit with numerator degree `m` and denominator degree `k`.
fn try_fit(a: &TruncSeries<Q>, m: usize, k: usize) -> Option<RationalFn> {
    let order = a.order();
    let coeff = |i: isize| -> Q {
        if i < 0 {
            Q::zero()
        } else {
            a.coeff(i as usize).clone()
        }
    };
    // Unknowns q_1..q_k; for n in m+1..=order: Σ_j q_j a_{n-j} = -a_n.
    let rows: Vec<Vec<Q>> = (m + 1..=order)
        .map(|n| {
            let mut row: Vec<Q> = (1..=k).map(|j| coeff(n as isize - j as isize)).collect();
            row.push(-coeff(n as isize));
            row
        })
        .collect();
    let q = if rows.is_empty() {
        vec![Q::zero(); k]
    } else {
        solve_linear(rows, k)?
    };
    let mut den = vec![Q::one()];
    den.extend(q);
    let den_series = TruncSeries::from_prefix(&den, order);
    let num = a.trunc_mul(&den_series).coeffs()[..=m.min(order)].to_vec();
    let f = RationalFn::new(num, den).ok()?;
    (f.expand(order) == *a).then_some(f)
}

/// Finds the minimal-degree rational function reproducing `a` through its
/// full order, with numerator degree ≤ `deg_num` and denominator degree
/// ≤ `deg_den`. Candidates are tried by increasing total degree, smaller
/// denominators first.
pub fn pade_reconstruct(a: &TruncSeries<Q>, deg_num: usize, deg_den: usize) -> Result<RationalFn> {
    if a.order() < deg_num + deg_den + 1 {
        return Err(Error::InsufficientOrder {
            order: a.order(),
            deg_num,
            deg_den,
        });
    }
    for total in 0..=deg_num + deg_den {
        for k in 0..=total.min(deg_den) {
            let m = total - k;
            if m > deg_num {
                continue;
            }
            if let Some(f) = try_fit(a, m, k) {
                return Ok(f);
            }
        }
    }
    Err(Error::NoRationalMatch { deg_num, deg_den })
}

/// Converts an integer series for reconstruction.
pub fn to_rational_series(a: &TruncSeries<BigInt>) -> TruncSeries<Q> {
    a.map(|c| Q::from_integer(c.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Q {
        Q::from_integer(BigInt::from(n))
    }

    fn series(v: &[i64]) -> TruncSeries<Q> {
        TruncSeries::from_coeffs(v.iter().map(|&x| q(x)).collect())
    }

    fn geometric(ratio: i64, order: usize) -> TruncSeries<Q> {
        series(&(0..=order).map(|n| ratio.pow(n as u32)).collect::<Vec<_>>())
    }

    #[test]
    fn geometric_series() {
        let f = pade_reconstruct(&geometric(2, 12), 5, 5).unwrap();
        assert_eq!(f.numerator(), &[q(1)]);
        assert_eq!(f.denominator(), &[q(1), q(-2)]);
    }

    #[test]
    fn two_term_recurrence() {
        let mut a = vec![1i64, 2];
        for n in 2..=14 {
            a.push(2 * a[n - 1] + 4 * a[n - 2]);
        }
        let f = pade_reconstruct(&series(&a), 5, 5).unwrap();
        assert_eq!(f.numerator(), &[q(1)]);
        assert_eq!(f.denominator(), &[q(1), q(-2), q(-4)]);
    }

    #[test]
    fn degree_one_over_one() {
        // (1-2t)/(1-4t) = 1 + 2t + 8t^2 + 32t^3 + ...
        let mut a = vec![1i64];
        for n in 1..=12 {
            a.push(2 * 4i64.pow(n - 1));
        }
        let f = pade_reconstruct(&series(&a), 4, 4).unwrap();
        assert_eq!((f.deg_num(), f.deg_den()), (1, 1));
        assert_eq!(f.numerator(), &[q(1), q(-2)]);
        assert_eq!(f.denominator(), &[q(1), q(-4)]);
    }

    #[test]
    fn constant_series() {
        let f = pade_reconstruct(&series(&[1, 0, 0, 0, 0, 0]), 2, 2).unwrap();
        assert_eq!((f.deg_num(), f.deg_den()), (0, 0));
    }

    #[test]
    fn insufficient_order() {
        assert!(matches!(
            pade_reconstruct(&geometric(2, 4), 2, 2),
            Err(Error::InsufficientOrder { .. })
        ));
    }

    #[test]
    fn no_match_reported() {
        // Catalan numbers are algebraic, not rational.
        let a = series(&[1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796]);
        assert_eq!(
            pade_reconstruct(&a, 3, 3),
            Err(Error::NoRationalMatch { deg_num: 3, deg_den: 3 })
        );
    }

    #[test]
    fn normalization_cancels_common_factor() {
        // (1-t)(1+t) / ((1-t)(1-2t))
        let f = RationalFn::new(vec![q(1), q(0), q(-1)], vec![q(1), q(-3), q(2)]).unwrap();
        assert_eq!(f.numerator(), &[q(1), q(1)]);
        assert_eq!(f.denominator(), &[q(1), q(-2)]);
    }
}
