//! Weyl groups as words in fundamental reflections, and the embedded
//! reflections ŵ_{[i]} attached to a folding.
//!
//! Words are read in application order: `letters[0]` acts first.

use crate::cartan::{CartanMatrix, WeightCoords};
use crate::error::{Error, Result};
use crate::field::qi;
use crate::fold::FoldResult;
use num_traits::{Signed, Zero};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WeylWord {
    letters: Vec<usize>,
    /// The same element as a word in the ŵ_{[i]} alphabet, when known.
    hat_letters: Option<Vec<usize>>,
}

impl WeylWord {
    pub fn new(letters: Vec<usize>) -> Self {
        WeylWord { letters, hat_letters: None }
    }

    /// Expands a word in the ŵ alphabet (orbit indices) into fundamental
    /// reflections of the source algebra.
    pub fn from_hat(fold: &FoldResult, orbits: &[usize]) -> Result<Self> {
        let mut letters = Vec::new();
        for &o in orbits {
            letters.extend(hat_letters(fold, o)?);
        }
        Ok(WeylWord { letters, hat_letters: Some(orbits.to_vec()) })
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// ε(w) = (−1)^{length}.
    pub fn sign(&self) -> i32 {
        if self.letters.len() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// ε̂(w) = (−1)^{number of ŵ letters}.
    pub fn hat_sign(&self) -> Option<i32> {
        self.hat_letters.as_ref().map(|h| if h.len() % 2 == 0 { 1 } else { -1 })
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Self) -> Self {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        let hat_letters = match (&self.hat_letters, &other.hat_letters) {
            (Some(a), Some(b)) => Some(a.iter().chain(b).copied().collect()),
            _ => None,
        };
        WeylWord { letters, hat_letters }
    }

    pub fn apply(&self, cm: &CartanMatrix, l: &WeightCoords) -> Result<WeightCoords> {
        self.letters.iter().try_fold(l.clone(), |acc, &i| reflect(cm, &acc, i))
    }
}

/// wᵢ(λ) = λ − λⁱ·αⁱ.
pub fn reflect(cm: &CartanMatrix, l: &WeightCoords, i: usize) -> Result<WeightCoords> {
    let n = cm.rank();
    if i >= n {
        return Err(Error::InvalidIndex { index: i, rank: n });
    }
    if l.rank() != n {
        return Err(Error::DimensionMismatch { expected: n, got: l.rank() });
    }
    let c = l.labels[i].clone();
    if c.is_zero() {
        return Ok(l.clone());
    }
    Ok(l.sub(&cm.simple_root(i).scale(&c)))
}

fn hat_letters(fold: &FoldResult, orbit: usize) -> Result<Vec<usize>> {
    let od = &fold.orbit_data;
    let o = od.orbits.get(orbit).ok_or(Error::InvalidIndex { index: orbit, rank: od.len() })?;
    match od.s[orbit] {
        1 => Ok(o.clone()),
        2 => {
            let i = o[0];
            Ok(vec![i, fold.automorphism.apply(i), i])
        }
        s => Err(Error::LinkingConditionViolated { orbit, s }),
    }
}

/// ŵ_{[i]}(λ) built from fundamental reflections.
pub fn hat_reflection(fold: &FoldResult, l: &WeightCoords, orbit: usize) -> Result<WeightCoords> {
    WeylWord::new(hat_letters(fold, orbit)?).apply(&fold.source, l)
}

/// ŵ_{[i]}(λ) = λ − s_i·Σ_l λ^{ω̇ˡi}·α^{ω̇ˡi}, the closed form.
pub fn hat_reflection_formula(fold: &FoldResult, l: &WeightCoords, orbit: usize) -> Result<WeightCoords> {
    let od = &fold.orbit_data;
    hat_letters(fold, orbit)?;
    let s = qi(od.s[orbit]);
    Ok(od.orbits[orbit].iter().fold(l.clone(), |acc, &j| {
        acc.sub(&fold.source.simple_root(j).scale(&(&s * &l.labels[j])))
    }))
}

/// Default step budget for [`to_dominant`].
pub fn default_budget(rank: usize, depth: usize) -> usize {
    10 * (depth + 1) * rank
}

/// Reflects at negative labels until the weight is dominant. The returned
/// word maps the input to the dominant weight.
pub fn to_dominant(cm: &CartanMatrix, l: &WeightCoords, budget: usize) -> Result<(WeightCoords, WeylWord)> {
    let mut w = l.clone();
    let mut letters = Vec::new();
    while let Some(i) = w.labels.iter().position(|v| v.is_negative()) {
        if letters.len() >= budget {
            return Err(Error::StepBudgetExceeded { budget });
        }
        w = reflect(cm, &w, i)?;
        letters.push(i);
    }
    Ok((w, WeylWord::new(letters)))
}

/// Coxeter exponent for Ă_ij·Ă_ji; `None` for infinite order.
pub fn coxeter_exponent(product: i64) -> Option<usize> {
    match product {
        0 => Some(2),
        1 => Some(3),
        2 => Some(4),
        3 => Some(6),
        _ => None,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoxeterPair {
    pub i: usize,
    pub j: usize,
    /// Folded exponent m̆_ij; `None` flags infinite order (relation skipped).
    pub exponent: Option<usize>,
    /// Sample weights on which (ŵ_iŵ_j)^m ≠ id.
    pub violations: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoxeterReport {
    pub pairs: Vec<CoxeterPair>,
}

impl CoxeterReport {
    pub fn ok(&self) -> bool {
        self.pairs.iter().all(|p| p.violations == 0)
    }
}

/// Checks (ŵ_{[i]}ŵ_{[j]})^{m̆_ij} = id on the sample weights.
pub fn coxeter_relation_check(fold: &FoldResult, samples: &[WeightCoords]) -> Result<CoxeterReport> {
    let a = &fold.folded;
    let m = a.rank();
    let mut pairs = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            let exponent = coxeter_exponent(a.entry(i, j) * a.entry(j, i));
            let mut violations = 0;
            if let Some(e) = exponent {
                let word: Vec<usize> = std::iter::repeat([j, i]).take(e).flatten().collect();
                let w = WeylWord::from_hat(fold, &word)?;
                for s in samples {
                    if &w.apply(&fold.source, s)? != s {
                        violations += 1;
                    }
                }
            }
            pairs.push(CoxeterPair { i, j, exponent, violations });
        }
    }
    Ok(CoxeterReport { pairs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::preset;
    use crate::fold::{fold, validate_automorphism};

    #[test]
    fn simple_reflections() {
        let a2 = preset("A2").unwrap();
        let r = reflect(&a2, &WeightCoords::from_ints(&[1, 1]), 0).unwrap();
        assert_eq!(r, WeightCoords::from_ints(&[-1, 2]));
        let a1 = preset("A1").unwrap();
        assert_eq!(reflect(&a1, &WeightCoords::from_ints(&[2]), 0).unwrap(), WeightCoords::from_ints(&[-2]));
        let rho = a2.rho();
        assert_eq!(reflect(&a2, &rho, 1).unwrap(), rho.sub(&a2.simple_root(1)));
    }

    #[test]
    fn dominant_walk() {
        let a1 = preset("A1").unwrap();
        let (d, w) = to_dominant(&a1, &WeightCoords::from_ints(&[-2]), 10).unwrap();
        assert_eq!((d, w.sign()), (WeightCoords::from_ints(&[2]), -1));
        let a2 = preset("A2").unwrap();
        let (d, w) = to_dominant(&a2, &WeightCoords::from_ints(&[-1, 2]), 10).unwrap();
        assert_eq!((d, w.letters().to_vec()), (WeightCoords::from_ints(&[1, 1]), vec![0]));
        let (d, w) = to_dominant(&a2, &WeightCoords::from_ints(&[1, 1]), 10).unwrap();
        assert_eq!((d, w.len()), (WeightCoords::from_ints(&[1, 1]), 0));
        let a1aff = preset("A1aff").unwrap();
        let level0 = WeightCoords::from_ints(&[-1, 1]);
        assert!(matches!(to_dominant(&a1aff, &level0, 20), Err(Error::StepBudgetExceeded { budget: 20 })));
    }

    #[test]
    fn hat_reflection_a2_flip() {
        let a2 = preset("A2").unwrap();
        let f = fold(&a2, &validate_automorphism(&a2, &[1, 0]).unwrap()).unwrap();
        let l = WeightCoords::from_ints(&[1, 1]);
        let r = hat_reflection(&f, &l, 0).unwrap();
        assert_eq!(r, WeightCoords::from_ints(&[-1, -1]));
        assert_eq!(hat_reflection_formula(&f, &l, 0).unwrap(), r);
        let w = WeylWord::from_hat(&f, &[0]).unwrap();
        assert_eq!((w.sign(), w.hat_sign()), (-1, Some(-1)));
    }

    #[test]
    fn hat_sign_differs_for_even_orbits() {
        let a3 = preset("A3").unwrap();
        let f = fold(&a3, &validate_automorphism(&a3, &[2, 1, 0]).unwrap()).unwrap();
        let w = WeylWord::from_hat(&f, &[0]).unwrap();
        assert_eq!((w.sign(), w.hat_sign()), (1, Some(-1)));
        let report = coxeter_relation_check(&f, &[WeightCoords::from_ints(&[3, -1, 2])]).unwrap();
        assert_eq!(report.pairs[0].exponent, Some(4));
        assert!(report.ok());
    }
}
