//! Truncated q-series q^h·(c₀ + c₁q + …) with exact coefficients.
//!
//! A series stores how many coefficients are known; sums and products keep
//! only what both operands determine, so truncation is never silently
//! extended.

use crate::cyclotomic::Cyclotomic;
use crate::field::Rational;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::fmt::Debug;

/// Ring operations needed for series coefficients.
pub trait Coefficient: Clone + PartialEq + Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn is_zero(&self) -> bool;
}

macro_rules! num_coefficient {
    ($t:ty) => {
        impl Coefficient for $t {
            fn zero() -> Self {
                Zero::zero()
            }
            fn one() -> Self {
                One::one()
            }
            fn add(&self, o: &Self) -> Self {
                self + o
            }
            fn sub(&self, o: &Self) -> Self {
                self - o
            }
            fn mul(&self, o: &Self) -> Self {
                self * o
            }
            fn is_zero(&self) -> bool {
                Zero::is_zero(self)
            }
        }
    };
}
num_coefficient!(BigInt);
num_coefficient!(Rational);
num_coefficient!(i64);

impl Coefficient for Cyclotomic {
    fn zero() -> Self {
        Cyclotomic::zero()
    }
    fn one() -> Self {
        Cyclotomic::one()
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn is_zero(&self) -> bool {
        Cyclotomic::is_zero(self)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct QSeries<C> {
    /// Exponent of the first stored coefficient.
    pub leading_exponent: Rational,
    /// Coefficients of q^{leading+m} for m = 0..coefficients.len().
    pub coefficients: Vec<C>,
}

impl<C: Coefficient> QSeries<C> {
    pub fn new(leading_exponent: Rational, coefficients: Vec<C>) -> Self {
        QSeries { leading_exponent, coefficients }
    }

    /// Number of known coefficients: the series is exact below
    /// q^{leading + truncation_order}.
    pub fn truncation_order(&self) -> usize {
        self.coefficients.len()
    }

    pub fn monomial(exponent: Rational, coefficient: C, order: usize) -> Self {
        let mut coefficients = vec![C::zero(); order.max(1)];
        coefficients[0] = coefficient;
        QSeries { leading_exponent: exponent, coefficients }
    }

    /// Exponent of the first nonzero coefficient, if any is known.
    pub fn valuation(&self) -> Option<Rational> {
        self.coefficients
            .iter()
            .position(|c| !c.is_zero())
            .map(|m| &self.leading_exponent + Rational::from_integer(m.into()))
    }

    pub fn coefficient_at(&self, exponent: &Rational) -> Option<C> {
        let m = exponent - &self.leading_exponent;
        let negative = m < num_traits::zero::<Rational>();
        if !m.is_integer() || negative {
            return (negative && m.is_integer()).then(C::zero);
        }
        let idx: usize = m.to_integer().try_into().ok()?;
        self.coefficients.get(idx).cloned()
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.iter().all(C::is_zero)
    }

    pub fn map<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> QSeries<D> {
        QSeries { leading_exponent: self.leading_exponent.clone(), coefficients: self.coefficients.iter().map(f).collect() }
    }

    /// Sum; panics if the exponents are not congruent mod 1.
    pub fn add(&self, other: &Self) -> Self {
        self.combine(other, |a, b| a.add(b))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.combine(other, |a, b| a.sub(b))
    }

    fn combine(&self, other: &Self, op: impl Fn(&C, &C) -> C) -> Self {
        let diff = &other.leading_exponent - &self.leading_exponent;
        assert!(diff.is_integer(), "q-series exponents differ by a non-integer");
        let lead = self.leading_exponent.clone().min(other.leading_exponent.clone());
        let offset = |s: &Self| -> i64 {
            (&s.leading_exponent - &lead).to_integer().try_into().expect("small exponent offset")
        };
        let (oa, ob) = (offset(self), offset(other));
        let end = (oa + self.coefficients.len() as i64).min(ob + other.coefficients.len() as i64);
        let get = |s: &Self, o: i64, m: i64| -> C {
            if m < o {
                C::zero()
            } else {
                s.coefficients[(m - o) as usize].clone()
            }
        };
        let coefficients = (0..end.max(0)).map(|m| op(&get(self, oa, m), &get(other, ob, m))).collect();
        QSeries { leading_exponent: lead, coefficients }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let order = self.coefficients.len().min(other.coefficients.len());
        let mut coefficients = vec![C::zero(); order];
        for (i, a) in self.coefficients.iter().enumerate().take(order) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coefficients.iter().enumerate().take(order - i) {
                coefficients[i + j] = coefficients[i + j].add(&a.mul(b));
            }
        }
        QSeries { leading_exponent: &self.leading_exponent + &other.leading_exponent, coefficients }
    }

    pub fn scale(&self, c: &C) -> Self {
        self.map(|a| a.mul(c))
    }

    /// Drops known coefficients beyond `order`.
    pub fn truncate(&self, order: usize) -> Self {
        let mut s = self.clone();
        s.coefficients.truncate(order);
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::q;

    fn series(lead: Rational, c: &[i64]) -> QSeries<i64> {
        QSeries::new(lead, c.to_vec())
    }

    #[test]
    fn product_truncates_to_minimum() {
        let a = series(q(1, 2), &[1, 1, 1, 1]);
        let b = series(q(-1, 24), &[1, -1]);
        let p = a.mul(&b);
        assert_eq!(p.truncation_order(), 2);
        assert_eq!(p.leading_exponent, q(11, 24));
        assert_eq!(p.coefficients, vec![1, 0]);
    }

    #[test]
    fn sum_aligns_exponents() {
        let a = series(q(0, 1), &[1, 2, 3]);
        let b = series(q(1, 1), &[5, 5, 5, 5]);
        let s = a.add(&b);
        assert_eq!(s.leading_exponent, q(0, 1));
        assert_eq!(s.coefficients, vec![1, 7, 8]);
        assert_eq!(s.valuation(), Some(q(0, 1)));
        assert_eq!(s.coefficient_at(&q(2, 1)), Some(8));
    }

    #[test]
    #[should_panic]
    fn incongruent_exponents_panic() {
        series(q(0, 1), &[1]).add(&series(q(1, 2), &[1]));
    }
}
