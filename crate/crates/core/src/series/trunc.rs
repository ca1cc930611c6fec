//! Truncated power series in `t`.

use std::ops::{Add, Mul, Neg, Sub};

use super::ring::CoeffRing;
use crate::error::{Error, Result};

/// A power series known through `t^order`.
///
/// Always holds exactly `order + 1` coefficients. Binary operations
/// truncate to the smaller of the two operand orders; nothing silently
/// extends precision.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncSeries<R> {
    coeffs: Vec<R>,
}

impl<R: CoeffRing> TruncSeries<R> {
    /// Builds a series from explicit coefficients; the order is `len - 1`.
    ///
    /// # Panics
    /// If `coeffs` is empty.
    pub fn from_coeffs(coeffs: Vec<R>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least one coefficient");
        Self { coeffs }
    }

    /// Pads with zeros (or truncates) so the result has the given order.
    pub fn from_prefix(prefix: &[R], order: usize) -> Self {
        let coeffs = (0..=order)
            .map(|n| prefix.get(n).cloned().unwrap_or_else(R::zero))
            .collect();
        Self { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![R::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(R::one(), order)
    }

    pub fn constant(c: R, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// `c·t^k`, truncated to `order`.
    pub fn monomial(c: R, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// The generating variable `t` itself.
    pub fn t(order: usize) -> Self {
        Self::monomial(R::one(), 1, order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &R {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::from_prefix(&self.coeffs, order.min(self.order()))
    }

    /// Cauchy product truncated to the smaller order.
    pub fn trunc_mul(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        let coeffs = (0..=order)
            .map(|n| {
                (0..=n).fold(R::zero(), |acc, i| {
                    let (a, b) = (&self.coeffs[i], &rhs.coeffs[n - i]);
                    if a.is_zero() || b.is_zero() {
                        acc
                    } else {
                        acc.add_ref(&a.mul_ref(b))
                    }
                })
            })
            .collect();
        Self { coeffs }
    }

    /// Multiplicative inverse to the same order.
    ///
    /// Requires the constant term to be a unit of `R`; for the integer and
    /// bivariate rings that means a constant ±1.
    pub fn trunc_inv(&self) -> Result<Self> {
        let c0_inv = self.coeffs[0]
            .unit_inverse()
            .ok_or(Error::NonUnitConstant)?;
        let order = self.order();
        let mut inv: Vec<R> = Vec::with_capacity(order + 1);
        inv.push(c0_inv.clone());
        for n in 1..=order {
            let acc = (1..=n).fold(R::zero(), |acc, i| {
                let a = &self.coeffs[i];
                if a.is_zero() {
                    acc
                } else {
                    acc.add_ref(&a.mul_ref(&inv[n - i]))
                }
            });
            inv.push(-(acc.mul_ref(&c0_inv)));
        }
        Ok(Self { coeffs: inv })
    }

    /// `self / rhs`, via the inverse of `rhs`.
    pub fn trunc_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.trunc_mul(&rhs.trunc_inv()?))
    }

    /// Substitutes `t -> c·t`: the n-th coefficient is scaled by `c^n`.
    pub fn scale_substitute(&self, c: &R) -> Self {
        let mut power = R::one();
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| {
                let out = a.mul_ref(&power);
                power = power.mul_ref(c);
                out
            })
            .collect();
        Self { coeffs }
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &R) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|a| a.mul_ref(c)).collect(),
        }
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.order());
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.trunc_mul(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.trunc_mul(&base);
            }
        }
        acc
    }

    /// Multiplies by `t^k`, keeping the order.
    pub fn shift_up(&self, k: usize) -> Self {
        let order = self.order();
        let coeffs = (0..=order)
            .map(|n| {
                if n >= k {
                    self.coeffs[n - k].clone()
                } else {
                    R::zero()
                }
            })
            .collect();
        Self { coeffs }
    }

    /// Divides by `t^k`. The order drops by `k`, and the first `k`
    /// coefficients must vanish.
    pub fn shift_down(&self, k: usize) -> Result<Self> {
        if k > self.order() {
            return Err(Error::Precondition(format!(
                "cannot divide an order-{} series by t^{k}",
                self.order()
            )));
        }
        if let Some(i) = self.coeffs[..k].iter().position(|c| !c.is_zero()) {
            return Err(Error::NonzeroLowOrder(i + 1));
        }
        Ok(Self {
            coeffs: self.coeffs[k..].to_vec(),
        })
    }

    pub fn map<S: CoeffRing>(&self, f: impl Fn(&R) -> S) -> TruncSeries<S> {
        TruncSeries {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    /// Index of the first coefficient where the two series differ, compared
    /// through the smaller order.
    pub fn first_mismatch(&self, rhs: &Self) -> Option<usize> {
        let order = self.order().min(rhs.order());
        (0..=order).find(|&n| self.coeffs[n] != rhs.coeffs[n])
    }

    fn zip_with(&self, rhs: &Self, f: impl Fn(&R, &R) -> R) -> Self {
        let order = self.order().min(rhs.order());
        Self {
            coeffs: (0..=order)
                .map(|n| f(&self.coeffs[n], &rhs.coeffs[n]))
                .collect(),
        }
    }
}

impl<R: CoeffRing> Add for &TruncSeries<R> {
    type Output = TruncSeries<R>;
    fn add(self, rhs: Self) -> TruncSeries<R> {
        self.zip_with(rhs, |a, b| a.add_ref(b))
    }
}

impl<R: CoeffRing> Sub for &TruncSeries<R> {
    type Output = TruncSeries<R>;
    fn sub(self, rhs: Self) -> TruncSeries<R> {
        self.zip_with(rhs, |a, b| a.sub_ref(b))
    }
}

impl<R: CoeffRing> Mul for &TruncSeries<R> {
    type Output = TruncSeries<R>;
    fn mul(self, rhs: Self) -> TruncSeries<R> {
        self.trunc_mul(rhs)
    }
}

impl<R: CoeffRing> Neg for &TruncSeries<R> {
    type Output = TruncSeries<R>;
    fn neg(self) -> TruncSeries<R> {
        self.map(|a| -a.clone())
    }
}

impl<R: CoeffRing> Add for TruncSeries<R> {
    type Output = TruncSeries<R>;
    fn add(self, rhs: Self) -> TruncSeries<R> {
        &self + &rhs
    }
}

impl<R: CoeffRing> Sub for TruncSeries<R> {
    type Output = TruncSeries<R>;
    fn sub(self, rhs: Self) -> TruncSeries<R> {
        &self - &rhs
    }
}

impl<R: CoeffRing> Mul for TruncSeries<R> {
    type Output = TruncSeries<R>;
    fn mul(self, rhs: Self) -> TruncSeries<R> {
        self.trunc_mul(&rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn ints(v: &[i64]) -> TruncSeries<BigInt> {
        TruncSeries::from_coeffs(v.iter().map(|&x| BigInt::from(x)).collect())
    }

    #[test]
    fn mul_examples() {
        assert_eq!(ints(&[1, 1, 0]).trunc_mul(&ints(&[1, -1, 0])), ints(&[1, 0, -1]));
        let a = ints(&[3, -1, 4, 1]);
        assert_eq!(TruncSeries::one(3).trunc_mul(&a), a);
        let sq = ints(&[1, 1, 1]);
        assert_eq!(sq.trunc_mul(&sq), ints(&[1, 2, 3]));
    }

    #[test]
    fn mul_takes_min_order() {
        let a = ints(&[1, 1, 1, 1, 1]);
        let b = ints(&[1, 1]);
        assert_eq!(a.trunc_mul(&b).order(), 1);
        assert_eq!((&a + &b).order(), 1);
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(ints(&[1, -1, 0, 0]).trunc_inv().unwrap(), ints(&[1, 1, 1, 1]));
        assert_eq!(ints(&[1]).trunc_inv().unwrap(), ints(&[1]));
        assert_eq!(
            ints(&[1, -2, -4, 0]).trunc_inv().unwrap(),
            ints(&[1, 2, 8, 24])
        );
    }

    #[test]
    fn inverse_rejects_non_units() {
        assert_eq!(ints(&[2, 1]).trunc_inv(), Err(Error::NonUnitConstant));
        assert_eq!(ints(&[0, 1]).trunc_inv(), Err(Error::NonUnitConstant));
    }

    #[test]
    fn scale_substitute_examples() {
        let a = ints(&[1, 1, 2, 5]);
        assert_eq!(a.scale_substitute(&BigInt::from(2)), ints(&[1, 2, 8, 40]));
        assert_eq!(a.scale_substitute(&BigInt::from(0)), ints(&[1, 0, 0, 0]));
    }

    #[test]
    fn shifts() {
        let a = ints(&[0, 0, 3, 4]);
        assert_eq!(a.shift_down(2).unwrap(), ints(&[3, 4]));
        assert_eq!(a.shift_down(3), Err(Error::NonzeroLowOrder(3)));
        assert_eq!(ints(&[1, 2, 3]).shift_up(1), ints(&[0, 1, 2]));
    }

    #[test]
    fn power() {
        let a = ints(&[1, 1, 0, 0, 0]);
        assert_eq!(a.pow(4), ints(&[1, 4, 6, 4, 1]));
        assert_eq!(a.pow(0), ints(&[1, 0, 0, 0, 0]));
    }
}
