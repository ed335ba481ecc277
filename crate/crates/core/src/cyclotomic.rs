//! Exact arithmetic in cyclotomic fields ℚ(ζ_n).
//!
//! An element is a polynomial in ζ = exp(2πi/n) reduced modulo the n-th
//! cyclotomic polynomial, so the coefficient vector (length φ(n)) is a
//! canonical form. Elements of different conductors meet in ℚ(ζ_lcm).

use crate::field::{q, qi, Rational};
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Mutex, OnceLock};

/// Integer coefficients of Φ_n, lowest degree first (monic).
pub fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Vec<i64>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().expect("cache poisoned").get(&n) {
        return p.clone();
    }
    assert!(n >= 1, "conductor must be positive");
    // x^n − 1 divided by Φ_d for every proper divisor d.
    let mut poly = vec![0i64; n as usize + 1];
    poly[0] = -1;
    poly[n as usize] = 1;
    for d in (1..n).filter(|d| n % d == 0) {
        poly = divide_exact(&poly, &cyclotomic_polynomial(d));
    }
    cache.lock().expect("cache poisoned").insert(n, poly.clone());
    poly
}

fn divide_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut quo = vec![0i64; rem.len() - dd];
    for k in (0..quo.len()).rev() {
        let c = rem[k + dd];
        quo[k] = c;
        for (j, &dc) in den.iter().enumerate() {
            rem[k + j] -= c * dc;
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0), "inexact polynomial division");
    quo
}

/// Euler's totient, the degree of Φ_n.
pub fn totient(n: u32) -> usize {
    cyclotomic_polynomial(n).len() - 1
}

#[derive(Clone)]
pub struct Cyclotomic {
    conductor: u32,
    coeffs: Vec<Rational>,
}

impl Cyclotomic {
    /// Reduces an arbitrary polynomial in ζ_n.
    pub fn from_poly(conductor: u32, poly: Vec<Rational>) -> Self {
        let phi = cyclotomic_polynomial(conductor);
        let deg = phi.len() - 1;
        let mut c = poly;
        while c.len() > deg {
            let top = c.pop().expect("non-empty");
            if top.is_zero() {
                continue;
            }
            let shift = c.len() - deg;
            for (j, &p) in phi[..deg].iter().enumerate() {
                c[shift + j] -= &top * qi(p);
            }
        }
        c.resize(deg, Rational::zero());
        Cyclotomic { conductor, coeffs: c }
    }

    pub fn from_rational(r: Rational) -> Self {
        Cyclotomic { conductor: 1, coeffs: vec![r] }
    }

    pub fn from_int(v: i64) -> Self {
        Self::from_rational(qi(v))
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    /// ζ_n^k.
    pub fn zeta_pow(n: u32, k: i64) -> Self {
        let e = k.rem_euclid(n as i64) as usize;
        let mut poly = vec![Rational::zero(); e + 1];
        poly[e] = qi(1);
        Self::from_poly(n, poly)
    }

    /// exp(2πi·x) for rational x.
    pub fn exp_2pi_i(x: &Rational) -> Self {
        let den = x.denom().to_u32().expect("phase denominator fits in u32");
        let num = (x.numer() % x.denom()).to_i64().expect("phase numerator fits in i64");
        Self::zeta_pow(den, num)
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Re-expresses the element in ℚ(ζ_m) for a multiple m of the conductor.
    pub fn embed(&self, m: u32) -> Self {
        assert!(m % self.conductor == 0, "embedding needs a multiple of the conductor");
        if m == self.conductor {
            return self.clone();
        }
        let step = (m / self.conductor) as usize;
        let mut poly = vec![Rational::zero(); (self.coeffs.len().max(1) - 1) * step + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            poly[k * step] = c.clone();
        }
        Self::from_poly(m, poly)
    }

    fn common(&self, other: &Self) -> (Self, Self) {
        let l = self.conductor.lcm(&other.conductor);
        (self.embed(l), other.embed(l))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs.iter().skip(1).all(Zero::is_zero)
    }

    pub fn to_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| self.coeffs.first().cloned().unwrap_or_else(Rational::zero))
    }

    /// Complex conjugate (ζ ↦ ζ⁻¹).
    pub fn conj(&self) -> Self {
        let n = self.conductor as usize;
        let mut poly = vec![Rational::zero(); n.max(1)];
        for (k, c) in self.coeffs.iter().enumerate() {
            poly[(n - k) % n.max(1)] += c;
        }
        Self::from_poly(self.conductor, poly)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Cyclotomic { conductor: self.conductor, coeffs: self.coeffs.iter().map(|c| c * r).collect() }
    }

    pub fn to_complex(&self) -> Complex64 {
        let n = self.conductor as f64;
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| {
                let v = c.to_f64().unwrap_or(f64::NAN);
                Complex64::from_polar(v, 2.0 * std::f64::consts::PI * k as f64 / n)
            })
            .sum()
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = self.common(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for Cyclotomic {}

impl Add for &Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, o: &Cyclotomic) -> Cyclotomic {
        let (a, b) = self.common(o);
        Cyclotomic {
            conductor: a.conductor,
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect(),
        }
    }
}

impl Sub for &Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, o: &Cyclotomic) -> Cyclotomic {
        self + &(-o)
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic { conductor: self.conductor, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, o: &Cyclotomic) -> Cyclotomic {
        let (a, b) = self.common(o);
        let mut poly = vec![Rational::zero(); a.coeffs.len() + b.coeffs.len()];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                poly[i + j] += x * y;
            }
        }
        Cyclotomic::from_poly(a.conductor, poly)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, o: Cyclotomic) -> Cyclotomic {
                (&self).$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => c.to_string(),
                _ => format!("({c})*z{}^{k}", self.conductor),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

/// Mean of ζ^{-km}·x_m over m = 0..n−1: projection onto the k-th
/// eigen-character of a cyclic group of order n.
pub fn character_projection(values: &[Cyclotomic], k: i64) -> Cyclotomic {
    let n = values.len() as u32;
    let sum = values
        .iter()
        .enumerate()
        .fold(Cyclotomic::zero(), |acc, (m, v)| &acc + &(&Cyclotomic::zeta_pow(n, -k * m as i64) * v));
    sum.scale(&q(1, n as i64))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(2), vec![1, 1]);
        assert_eq!(cyclotomic_polynomial(3), vec![1, 1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(totient(12), 4);
    }

    #[test]
    fn zeta_has_order_n() {
        for n in 1..13 {
            let z = Cyclotomic::zeta_pow(n, 1);
            assert_eq!(z.pow(n), Cyclotomic::one(), "n = {n}");
            // 1 + ζ + ... + ζ^{n-1} = 0 for n > 1
            let s = (0..n as i64).fold(Cyclotomic::zero(), |a, k| &a + &Cyclotomic::zeta_pow(n, k));
            assert_eq!(s.is_zero(), n > 1);
        }
    }

    #[test]
    fn equality_across_conductors() {
        assert_eq!(Cyclotomic::zeta_pow(4, 2), Cyclotomic::from_int(-1));
        assert_eq!(Cyclotomic::zeta_pow(6, 2), Cyclotomic::zeta_pow(3, 1));
        let i = Cyclotomic::zeta_pow(4, 1);
        assert_eq!(&i * &i.conj(), Cyclotomic::one());
        let w = Cyclotomic::exp_2pi_i(&q(-1, 3));
        assert_eq!(w, Cyclotomic::zeta_pow(3, 2));
    }

    #[test]
    fn projection_recovers_eigen_dimensions() {
        // Traces of a permutation with eigenvalues {1, 1, -1}: powers 0, 1.
        let traces = [Cyclotomic::from_int(3), Cyclotomic::from_int(1)];
        assert_eq!(character_projection(&traces, 0), Cyclotomic::from_int(2));
        assert_eq!(character_projection(&traces, 1), Cyclotomic::from_int(1));
    }

    #[test]
    fn complex_value() {
        let z = Cyclotomic::zeta_pow(8, 1).to_complex();
        assert!((z - Complex64::from_polar(1.0, std::f64::consts::FRAC_PI_4)).norm() < 1e-12);
    }
}
