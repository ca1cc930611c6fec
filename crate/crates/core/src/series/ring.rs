//! Coefficient rings for truncated series.
//!
//! Everything in this crate is exact. The ring contract is built on top of
//! `num_traits::{Zero, One}` and the standard operator traits; the extra
//! methods cover by-reference arithmetic (to avoid cloning big integers in
//! inner loops) and inversion of units.

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A commutative ring with exact arithmetic.
pub trait CoeffRing:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn from_i64(n: i64) -> Self;

    /// Multiplicative inverse, if `self` is a unit of the ring.
    fn unit_inverse(&self) -> Option<Self>;

    fn mul_ref(&self, rhs: &Self) -> Self {
        self.clone() * rhs.clone()
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        self.clone() + rhs.clone()
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        self.clone() - rhs.clone()
    }

    fn pow_u32(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul_ref(&base);
            }
        }
        acc
    }
}

impl CoeffRing for BigInt {
    fn from_i64(n: i64) -> Self {
        BigInt::from(n)
    }

    fn unit_inverse(&self) -> Option<Self> {
        if self.abs().is_one() {
            Some(self.clone())
        } else {
            None
        }
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
}

impl CoeffRing for BigRational {
    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn unit_inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integer_units() {
        assert_eq!(BigInt::from(-1).unit_inverse(), Some(BigInt::from(-1)));
        assert_eq!(BigInt::from(2).unit_inverse(), None);
        assert_eq!(BigInt::zero().unit_inverse(), None);
    }

    #[test]
    fn rational_inverse() {
        let q = BigRational::new(BigInt::from(3), BigInt::from(7));
        assert_eq!(q.unit_inverse().unwrap() * q, BigRational::one());
        assert!(BigRational::zero().unit_inverse().is_none());
    }

    #[test]
    fn pow_by_squaring() {
        assert_eq!(BigInt::from(3).pow_u32(0), BigInt::one());
        assert_eq!(BigInt::from(3).pow_u32(5), BigInt::from(243));
        assert_eq!(BigInt::from(-2).pow_u32(7), BigInt::from(-128));
    }
}
