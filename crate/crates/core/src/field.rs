//! Scalar fields used by the exact linear algebra.
//!
//! Everything user-facing runs over [`Rational`]. The heavy Gram-matrix work of
//! the twining oracle may instead run over [`Fp`], a prime field whose results
//! are only trusted after certification against rational invariants (see
//! `twining`).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

/// Exact rational number.
pub type Rational = BigRational;

/// Shorthand for the rational `n/d`.
pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Shorthand for the integer `n` as a rational.
pub fn qi(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Converts an integral rational to `i64`.
pub fn to_i64(x: &Rational) -> Option<i64> {
    if x.is_integer() {
        x.to_integer().to_i64()
    } else {
        None
    }
}

/// Fractional part in `[0, 1)`.
pub fn frac(x: &Rational) -> Rational {
    x - x.floor()
}

/// A commutative field with the operations the elimination routines need.
pub trait Field:
    Clone
    + Debug
    + PartialEq
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    /// Image of a rational; `None` when the denominator is not invertible.
    fn from_rational(v: &Rational) -> Option<Self>;
    fn is_zero(&self) -> bool;
    fn inv(&self) -> Option<Self>;
    /// Symmetric integer lift (the exact value for rationals that are integers).
    fn to_integer(&self) -> Option<BigInt>;
}

impl Field for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(v: i64) -> Self {
        qi(v)
    }
    fn from_rational(v: &Rational) -> Option<Self> {
        Some(v.clone())
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn to_integer(&self) -> Option<BigInt> {
        self.is_integer().then(|| self.to_integer())
    }
}

/// The Mersenne prime 2^61 − 1.
pub const MODULUS: u64 = (1 << 61) - 1;

/// Element of the prime field of order [`MODULUS`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fp(u64);

impl Fp {
    pub fn new(v: u64) -> Self {
        Fp(v % MODULUS)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    fn reduce(x: u128) -> u64 {
        let p = MODULUS as u128;
        let folded = (x & p) + (x >> 61);
        let folded = (folded & p) + (folded >> 61);
        let r = folded as u64;
        if r >= MODULUS {
            r - MODULUS
        } else {
            r
        }
    }

    pub fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Fp(1);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }
}

impl Add for Fp {
    type Output = Fp;
    fn add(self, o: Fp) -> Fp {
        let s = self.0 + o.0;
        Fp(if s >= MODULUS { s - MODULUS } else { s })
    }
}

impl Sub for Fp {
    type Output = Fp;
    fn sub(self, o: Fp) -> Fp {
        Fp(if self.0 >= o.0 { self.0 - o.0 } else { self.0 + MODULUS - o.0 })
    }
}

impl Mul for Fp {
    type Output = Fp;
    fn mul(self, o: Fp) -> Fp {
        Fp(Fp::reduce(self.0 as u128 * o.0 as u128))
    }
}

impl Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        Fp(if self.0 == 0 { 0 } else { MODULUS - self.0 })
    }
}

impl Field for Fp {
    fn zero() -> Self {
        Fp(0)
    }
    fn one() -> Self {
        Fp(1)
    }
    fn from_i64(v: i64) -> Self {
        let m = MODULUS as i128;
        Fp((((v as i128) % m + m) % m) as u64)
    }
    fn from_rational(v: &Rational) -> Option<Self> {
        let m = BigInt::from(MODULUS);
        let reduce = |x: &BigInt| -> Fp {
            let r = ((x % &m) + &m) % &m;
            Fp(r.to_u64().expect("reduced residue fits in u64"))
        };
        let den = reduce(v.denom());
        den.inv().map(|d| reduce(v.numer()) * d)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn inv(&self) -> Option<Self> {
        (self.0 != 0).then(|| self.pow(MODULUS - 2))
    }
    fn to_integer(&self) -> Option<BigInt> {
        let half = MODULUS / 2;
        Some(if self.0 > half {
            -BigInt::from(MODULUS - self.0)
        } else {
            BigInt::from(self.0)
        })
    }
}

/// Absolute value helper used by majorization checks.
pub fn abs(x: &Rational) -> Rational {
    x.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fp_inverse_and_lift() {
        let a = Fp::from_i64(-7);
        assert_eq!(a.to_integer().unwrap(), BigInt::from(-7));
        let inv = a.inv().unwrap();
        assert_eq!(a * inv, Fp::one());
        assert_eq!(Fp::from_rational(&q(3, 4)).unwrap() * Fp::from_i64(4), Fp::from_i64(3));
    }

    #[test]
    fn frac_is_in_unit_interval() {
        assert_eq!(frac(&q(-1, 3)), q(2, 3));
        assert_eq!(frac(&q(7, 2)), q(1, 2));
    }
}
