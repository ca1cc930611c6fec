//! Polynomials in the two step weights α and β.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::ring::CoeffRing;

/// A polynomial in the formal weights α, β.
///
/// Terms are keyed by `(exponent of α, exponent of β)`; zero coefficients
/// are never stored, so structural equality is polynomial equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BivarPoly<C = BigInt> {
    terms: BTreeMap<(u32, u32), C>,
}

impl<C: CoeffRing> BivarPoly<C> {
    pub fn constant(c: C) -> Self {
        Self::monomial(0, 0, c)
    }

    pub fn monomial(alpha_exp: u32, beta_exp: u32, c: C) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((alpha_exp, beta_exp), c);
        }
        Self { terms }
    }

    pub fn alpha() -> Self {
        Self::monomial(1, 0, C::one())
    }

    pub fn beta() -> Self {
        Self::monomial(0, 1, C::one())
    }

    /// α + β, the only combination the triangle formulas depend on.
    pub fn weight_sum() -> Self {
        Self::alpha() + Self::beta()
    }

    pub fn coeff(&self, alpha_exp: u32, beta_exp: u32) -> C {
        self.terms
            .get(&(alpha_exp, beta_exp))
            .cloned()
            .unwrap_or_else(C::zero)
    }

    /// Terms in ascending `(α-exponent, β-exponent)` order.
    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), &C)> {
        self.terms.iter().map(|(k, v)| (*k, v))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Total degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|(a, b)| a + b).max()
    }

    pub fn add_term(&mut self, alpha_exp: u32, beta_exp: u32, c: &C) {
        if c.is_zero() {
            return;
        }
        let key = (alpha_exp, beta_exp);
        let sum = match self.terms.get(&key) {
            Some(old) => old.add_ref(c),
            None => c.clone(),
        };
        if sum.is_zero() {
            self.terms.remove(&key);
        } else {
            self.terms.insert(key, sum);
        }
    }

    /// Exchanges the roles of α and β.
    pub fn swap_weights(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), c)| ((b, a), c.clone()))
                .collect(),
        }
    }

    /// Substitutes numeric values for α and β.
    pub fn eval(&self, alpha: &C, beta: &C) -> C {
        self.terms.iter().fold(C::zero(), |acc, (&(a, b), c)| {
            acc + c.mul_ref(&alpha.pow_u32(a)).mul_ref(&beta.pow_u32(b))
        })
    }

    pub fn map_coeffs<D: CoeffRing>(&self, f: impl Fn(&C) -> D) -> BivarPoly<D> {
        let mut out = BivarPoly::<D>::zero();
        for (&(a, b), c) in &self.terms {
            out.add_term(a, b, &f(c));
        }
        out
    }

    fn mul_poly(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &rhs.terms {
                out.add_term(a1 + a2, b1 + b2, &c1.mul_ref(c2));
            }
        }
        out
    }

    fn add_poly(&self, rhs: &Self, negate_rhs: bool) -> Self {
        let mut out = self.clone();
        for (&(a, b), c) in &rhs.terms {
            if negate_rhs {
                out.add_term(a, b, &-c.clone());
            } else {
                out.add_term(a, b, c);
            }
        }
        out
    }
}

impl<C: CoeffRing> Zero for BivarPoly<C> {
    fn zero() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<C: CoeffRing> One for BivarPoly<C> {
    fn one() -> Self {
        Self::constant(C::one())
    }
}

impl<C: CoeffRing> Add for BivarPoly<C> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.add_poly(&rhs, false)
    }
}

impl<C: CoeffRing> Sub for BivarPoly<C> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.add_poly(&rhs, true)
    }
}

impl<C: CoeffRing> Mul for BivarPoly<C> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.mul_poly(&rhs)
    }
}

impl<C: CoeffRing> Neg for BivarPoly<C> {
    type Output = Self;
    fn neg(self) -> Self {
        Self {
            terms: self.terms.into_iter().map(|(k, c)| (k, -c)).collect(),
        }
    }
}

impl<C: CoeffRing> CoeffRing for BivarPoly<C> {
    fn from_i64(n: i64) -> Self {
        Self::constant(C::from_i64(n))
    }

    fn unit_inverse(&self) -> Option<Self> {
        match self.terms.len() {
            1 => {
                let (&key, c) = self.terms.iter().next()?;
                if key != (0, 0) {
                    return None;
                }
                c.unit_inverse().map(Self::constant)
            }
            _ => None,
        }
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        self.mul_poly(rhs)
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        self.add_poly(rhs, false)
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        self.add_poly(rhs, true)
    }
}

impl<C: CoeffRing + fmt::Display> fmt::Display for BivarPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (&(a, b), c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}")?;
            match a {
                0 => {}
                1 => write!(f, "*a")?,
                _ => write!(f, "*a^{a}")?,
            }
            match b {
                0 => {}
                1 => write!(f, "*b")?,
                _ => write!(f, "*b^{b}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = BivarPoly<BigInt>;

    #[test]
    fn binomial_square() {
        let s = P::weight_sum();
        let sq = s.mul_ref(&s);
        assert_eq!(sq.coeff(2, 0), BigInt::from(1));
        assert_eq!(sq.coeff(1, 1), BigInt::from(2));
        assert_eq!(sq.coeff(0, 2), BigInt::from(1));
        assert_eq!(sq.num_terms(), 3);
    }

    #[test]
    fn cancellation_removes_terms() {
        let d = P::alpha() - P::alpha();
        assert!(d.is_zero());
        assert_eq!(d.degree(), None);
    }

    #[test]
    fn units_are_constant_units() {
        assert_eq!(P::one().unit_inverse(), Some(P::one()));
        assert_eq!(P::from_i64(-1).unit_inverse(), Some(P::from_i64(-1)));
        assert!(P::from_i64(2).unit_inverse().is_none());
        assert!(P::alpha().unit_inverse().is_none());
        assert!((P::one() + P::alpha()).unit_inverse().is_none());
    }

    #[test]
    fn eval_and_swap() {
        let p = P::monomial(2, 1, BigInt::from(3)) + P::beta();
        let v = p.eval(&BigInt::from(2), &BigInt::from(5));
        assert_eq!(v, BigInt::from(3 * 4 * 5 + 5));
        let q = p.swap_weights();
        assert_eq!(q.coeff(1, 2), BigInt::from(3));
        assert_eq!(q.coeff(1, 0), BigInt::from(1));
    }
}
