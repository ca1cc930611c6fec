//! Multivariate Laurent polynomials, used for the endpoint marks x, y, z.

use std::collections::BTreeMap;

use super::ring::CoeffRing;

#[derive(Clone, Debug, PartialEq)]
pub struct LaurentPoly<R> {
    nvars: usize,
    terms: BTreeMap<Vec<i32>, R>,
}

impl<R: CoeffRing> LaurentPoly<R> {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(exps: Vec<i32>, c: R) -> Self {
        let mut p = Self::zero(exps.len());
        p.add_term(exps, &c);
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[i32], &R)> {
        self.terms.iter().map(|(k, v)| (k.as_slice(), v))
    }

    pub fn coeff(&self, exps: &[i32]) -> R {
        self.terms.get(exps).cloned().unwrap_or_else(R::zero)
    }

    pub fn add_term(&mut self, exps: Vec<i32>, c: &R) {
        assert_eq!(exps.len(), self.nvars, "exponent vector has wrong arity");
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.get(&exps) {
            Some(old) => old.add_ref(c),
            None => c.clone(),
        };
        if sum.is_zero() {
            self.terms.remove(&exps);
        } else {
            self.terms.insert(exps, sum);
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(k.clone(), c);
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(k.clone(), &-c.clone());
        }
        out
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero(self.nvars);
        for (k1, c1) in &self.terms {
            for (k2, c2) in &rhs.terms {
                let k: Vec<i32> = k1.iter().zip(k2).map(|(a, b)| a + b).collect();
                out.add_term(k, &c1.mul_ref(c2));
            }
        }
        out
    }

    /// Terms whose exponent in variable `var` is zero: the polynomial
    /// evaluated at that variable = 0 (for genuine polynomials).
    pub fn section(&self, var: usize) -> Self {
        Self {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| k[var] == 0)
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    /// Applies `f` to every exponent vector (a monomial substitution such
    /// as a permutation or inversion of the variables).
    pub fn map_exponents(&self, f: impl Fn(&[i32]) -> Vec<i32>) -> Self {
        let mut out = Self::zero(self.nvars);
        for (k, c) in &self.terms {
            out.add_term(f(k), c);
        }
        out
    }

    /// Substitutes a unit value for every variable.
    pub fn eval(&self, point: &[R]) -> Option<R> {
        assert_eq!(point.len(), self.nvars);
        let mut acc = R::zero();
        for (k, c) in &self.terms {
            let mut term = c.clone();
            for (v, &e) in point.iter().zip(k) {
                let base = if e < 0 { v.unit_inverse()? } else { v.clone() };
                term = term.mul_ref(&base.pow_u32(e.unsigned_abs()));
            }
            acc = acc.add_ref(&term);
        }
        Some(acc)
    }

    pub fn first_term(&self) -> Option<(&[i32], &R)> {
        self.terms.iter().next().map(|(k, v)| (k.as_slice(), v))
    }
}
