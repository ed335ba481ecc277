//! Weight multiplicities of highest-weight modules.
//!
//! Weights are addressed by root-lattice vectors `n`: the weight is
//! `Λ − Σ nᵢαⁱ`. Only the symmetrized form and `(Λ|αⁱ) = εᵢΛⁱ` enter, so
//! the same code serves finite, affine (twisted or not) and indefinite
//! matrices.
//!
//! * root multiplicities: Peterson's recursion
//!   `(β|β−2ρ)·c_β = Σ_{β'+β''=β} (β'|β'')·c_β'·c_β''`, `c_β = Σ_k mult(β/k)/k`;
//! * irreducible modules: Freudenthal's recursion;
//! * Verma modules: expansion of `Π_{α>0}(1 − e^{−α})^{−mult α}`.

use crate::cartan::{CartanMatrix, WeightCoords};
use crate::error::{Error, Result};
use crate::field::{qi, to_i64, Rational};
use crate::qseries::QSeries;
use num_traits::{Signed, Zero};
use std::collections::{BTreeMap, HashMap, HashSet};

/// Root-lattice vector Σ nᵢαⁱ.
pub type RootVec = Vec<i64>;

/// Region `Σ wᵢnᵢ ≤ bound` of root-lattice vectors (weights `wᵢ ≥ 0`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Truncation {
    pub weights: Vec<i64>,
    pub bound: i64,
}

impl Truncation {
    /// Total height Σ nᵢ ≤ depth.
    pub fn height(rank: usize, depth: usize) -> Self {
        Truncation { weights: vec![1; rank], bound: depth as i64 }
    }

    /// Grade n_z/a_z ≤ m for an affine matrix.
    pub fn grade(cm: &CartanMatrix, m: usize) -> Result<Self> {
        let aff = cm.affine().ok_or(Error::NotAffine)?;
        let mut weights = vec![0; cm.rank()];
        weights[aff.node] = 1;
        Ok(Truncation { weights, bound: m as i64 * aff.kac[aff.node] })
    }

    pub fn contains(&self, n: &[i64]) -> bool {
        n.iter().zip(&self.weights).map(|(a, w)| a * w).sum::<i64>() <= self.bound
    }

    pub fn is_bounded(&self) -> bool {
        self.weights.iter().all(|&w| w > 0)
    }

    /// Highest grade this truncation fully determines, for affine `cm`.
    pub fn complete_grade(&self, cm: &CartanMatrix) -> Option<i64> {
        let aff = cm.affine()?;
        let z = aff.node;
        let only_z = self.weights.iter().enumerate().all(|(i, &w)| (i == z) == (w > 0));
        only_z.then(|| self.bound / self.weights[z] / aff.kac[z])
    }
}

/// Positive roots with multiplicities on a down-closed region.
#[derive(Clone, Debug, Default)]
pub struct RootTable {
    pub mults: BTreeMap<RootVec, i64>,
}

fn height(n: &[i64]) -> i64 {
    n.iter().sum()
}

/// Closes a set of nonnegative vectors downward (all `n' ≤ n`, `n' ≠ 0`).
fn down_closure(seeds: impl IntoIterator<Item = RootVec>) -> Vec<RootVec> {
    let mut seen: HashSet<RootVec> = HashSet::new();
    let mut stack: Vec<RootVec> = seeds.into_iter().filter(|n| n.iter().any(|&v| v > 0)).collect();
    for s in &stack {
        seen.insert(s.clone());
    }
    while let Some(n) = stack.pop() {
        for i in 0..n.len() {
            if n[i] > 0 {
                let mut m = n.clone();
                m[i] -= 1;
                if m.iter().any(|&v| v > 0) && seen.insert(m.clone()) {
                    stack.push(m);
                }
            }
        }
    }
    let mut out: Vec<RootVec> = seen.into_iter().collect();
    out.sort_by(|a, b| height(a).cmp(&height(b)).then_with(|| a.cmp(b)));
    out
}

/// Is the positive vector `b` a real root? Walks down by reflections.
fn is_real_root(cm: &CartanMatrix, b: &[i64]) -> bool {
    let n = cm.rank();
    let mut v = b.to_vec();
    loop {
        if height(&v) == 1 && v.iter().all(|&x| x >= 0) {
            return true;
        }
        let step = (0..n).find_map(|i| {
            let p: i64 = (0..n).map(|j| v[j] * cm.entry(j, i)).sum();
            (p > 0).then_some((i, p))
        });
        match step {
            Some((i, p)) => {
                v[i] -= p;
                if v.iter().any(|&x| x < 0) {
                    return false;
                }
            }
            None => return false,
        }
    }
}

impl RootTable {
    /// Multiplicities of all positive roots inside the down-closure of
    /// `region`.
    pub fn over(cm: &CartanMatrix, region: impl IntoIterator<Item = RootVec>) -> Result<Self> {
        let candidates = down_closure(region);
        let two = qi(2);
        let mut c: HashMap<RootVec, Rational> = HashMap::new();
        let mut nonzero: Vec<(RootVec, Rational)> = Vec::new();
        let mut mults = BTreeMap::new();
        for beta in &candidates {
            let norm = cm.root_pairing(beta, beta);
            let rho_b: Rational = beta.iter().enumerate().map(|(i, &v)| qi(v) * &cm.half_norms()[i]).sum();
            let coeff = &norm - &two * &rho_b;
            let c_beta = if height(beta) == 1 {
                qi(1)
            } else if !coeff.is_zero() {
                let mut acc = Rational::zero();
                for (b1, c1) in &nonzero {
                    if b1.iter().zip(beta).any(|(x, y)| x > y) {
                        continue;
                    }
                    let b2: RootVec = beta.iter().zip(b1).map(|(x, y)| x - y).collect();
                    if let Some(c2) = c.get(&b2) {
                        acc += cm.root_pairing(b1, &b2) * c1 * c2;
                    }
                }
                acc / coeff
            } else {
                // (β|β) = 2(ρ|β) > 0: only real roots and their multiples.
                divisor_sum(beta, |d| if is_real_root(cm, d) { qi(1) } else { Rational::zero() })
            };
            // mult(β) = c_β − Σ_{k≥2} mult(β/k)/k
            let lower = divisor_sum_proper(beta, |d| mults.get(d).map_or(Rational::zero(), |&m: &i64| qi(m)));
            let m = &c_beta - &lower;
            let mi = to_i64(&m)
                .filter(|v| *v >= 0)
                .ok_or_else(|| Error::Inconsistent(format!("root multiplicity {m} at {beta:?}")))?;
            if mi > 0 {
                mults.insert(beta.clone(), mi);
            }
            if !c_beta.is_zero() {
                c.insert(beta.clone(), c_beta.clone());
                nonzero.push((beta.clone(), c_beta));
            }
        }
        Ok(RootTable { mults })
    }
}

/// Σ_{k≥1, k | β} f(β/k)/k.
fn divisor_sum(beta: &[i64], f: impl Fn(&[i64]) -> Rational) -> Rational {
    let g = beta.iter().fold(0i64, |acc, &v| num_integer::gcd(acc, v));
    (1..=g).filter(|k| g % k == 0).map(|k| {
        let d: RootVec = beta.iter().map(|v| v / k).collect();
        f(&d) / qi(k)
    }).sum()
}

/// Σ_{k≥2, k | β} f(β/k)/k.
fn divisor_sum_proper(beta: &[i64], f: impl Fn(&[i64]) -> Rational) -> Rational {
    let g = beta.iter().fold(0i64, |acc, &v| num_integer::gcd(acc, v));
    (2..=g).filter(|k| g % k == 0).map(|k| {
        let d: RootVec = beta.iter().map(|v| v / k).collect();
        f(&d) / qi(k)
    }).sum()
}

/// Positive roots of height ≤ depth with their multiplicities.
pub fn root_multiplicities(cm: &CartanMatrix, depth: usize) -> Result<BTreeMap<RootVec, i64>> {
    let n = cm.rank();
    let mut region = Vec::new();
    enumerate_box(&Truncation::height(n, depth), &mut vec![0; n], 0, &mut region);
    Ok(RootTable::over(cm, region)?.mults)
}

/// All vectors inside a bounded truncation.
fn enumerate_box(t: &Truncation, cur: &mut RootVec, i: usize, out: &mut Vec<RootVec>) {
    if i == cur.len() {
        out.push(cur.clone());
        return;
    }
    loop {
        if !t.contains(cur) {
            break;
        }
        enumerate_box(t, cur, i + 1, out);
        cur[i] += 1;
    }
    cur[i] = 0;
}

#[derive(Clone, Debug, PartialEq)]
pub struct MultiplicityTable {
    pub highest_weight: WeightCoords,
    pub truncation: Truncation,
    /// Nonzero multiplicities keyed by `n` (weight `Λ − Σ nᵢαⁱ`).
    pub entries: BTreeMap<RootVec, i64>,
}

impl MultiplicityTable {
    pub fn get(&self, n: &[i64]) -> i64 {
        self.entries.get(n).copied().unwrap_or(0)
    }

    pub fn total(&self) -> i64 {
        self.entries.values().sum()
    }

    pub fn weight(&self, cm: &CartanMatrix, n: &[i64]) -> WeightCoords {
        cm.lower(&self.highest_weight, n)
    }
}

fn check_weight(cm: &CartanMatrix, l: &WeightCoords) -> Result<()> {
    if l.rank() != cm.rank() {
        return Err(Error::DimensionMismatch { expected: cm.rank(), got: l.rank() });
    }
    Ok(())
}

/// Freudenthal multiplicities of L(Λ) for all weights of height ≤ depth.
pub fn irreducible_multiplicities(cm: &CartanMatrix, hw: &WeightCoords, depth: usize) -> Result<MultiplicityTable> {
    irreducible_multiplicities_truncated(cm, hw, &Truncation::height(cm.rank(), depth))
}

pub fn irreducible_multiplicities_truncated(
    cm: &CartanMatrix,
    hw: &WeightCoords,
    trunc: &Truncation,
) -> Result<MultiplicityTable> {
    check_weight(cm, hw)?;
    if !hw.is_dominant_integral() {
        return Err(Error::NotDominantIntegral);
    }
    let n = cm.rank();
    let eps = cm.half_norms();
    let lam_rho: Vec<Rational> = hw.labels.iter().map(|l| l + qi(1)).collect();
    // 2(Λ+ρ|β) − (β|β)
    let denominator = |b: &[i64]| qi(2) * cm.weight_root_pairing(&lam_rho, b) - cm.root_pairing(b, b);

    // Candidate region: breadth-first by height through positive denominators.
    let mut region: Vec<RootVec> = vec![vec![0; n]];
    let mut frontier = vec![vec![0; n]];
    let mut seen: HashSet<RootVec> = frontier.iter().cloned().collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for v in &frontier {
            for i in 0..n {
                let mut w = v.clone();
                w[i] += 1;
                if trunc.contains(&w) && !seen.contains(&w) && denominator(&w).is_positive() {
                    seen.insert(w.clone());
                    next.push(w);
                }
            }
        }
        next.sort();
        region.extend(next.iter().cloned());
        frontier = next;
    }
    let roots = RootTable::over(cm, region.iter().cloned())?;
    let form = cm.root_form();
    // Per root: (vector, multiplicity, (Λ|α), (α|α), Bα).
    let root_data: Vec<(RootVec, i64, Rational, Rational, Vec<Rational>)> = roots
        .mults
        .iter()
        .map(|(a, &m)| {
            let ba: Vec<Rational> = (0..n).map(|i| (0..n).map(|j| qi(a[j]) * &form[(i, j)]).sum()).collect();
            let lam_a: Rational = (0..n).map(|i| qi(a[i]) * &eps[i] * &hw.labels[i]).sum();
            let aa: Rational = (0..n).map(|i| qi(a[i]) * &ba[i]).sum();
            (a.clone(), m, lam_a, aa, ba)
        })
        .collect();

    let mut entries: BTreeMap<RootVec, i64> = BTreeMap::new();
    entries.insert(vec![0; n], 1);
    for beta in region.iter().skip(1) {
        let mut num = Rational::zero();
        for (a, mult, lam_a, aa, ba) in &root_data {
            if a.iter().zip(beta).any(|(x, y)| x > y) {
                continue;
            }
            let beta_a: Rational = (0..n).map(|i| qi(beta[i]) * &ba[i]).sum();
            let mut k = 1i64;
            loop {
                let shifted: RootVec = beta.iter().zip(a).map(|(b, x)| b - k * x).collect();
                if shifted.iter().any(|&v| v < 0) {
                    break;
                }
                if let Some(&m) = entries.get(&shifted) {
                    num += qi(*mult * m) * (lam_a - &beta_a + qi(k) * aa);
                }
                k += 1;
            }
        }
        num *= qi(2);
        let den = denominator(beta);
        if den.is_zero() {
            if !num.is_zero() {
                return Err(Error::Inconsistent(format!("zero Freudenthal denominator at {beta:?}")));
            }
            continue;
        }
        let m = num / den;
        let mi = to_i64(&m)
            .filter(|v| *v >= 0)
            .ok_or_else(|| Error::Inconsistent(format!("Freudenthal multiplicity {m} at {beta:?}")))?;
        if mi > 0 {
            entries.insert(beta.clone(), mi);
        }
    }
    Ok(MultiplicityTable { highest_weight: hw.clone(), truncation: trunc.clone(), entries })
}

/// Verma-module multiplicities (Kostant partition counts) to height `depth`.
pub fn verma_multiplicities(cm: &CartanMatrix, hw: &WeightCoords, depth: usize) -> Result<MultiplicityTable> {
    verma_multiplicities_truncated(cm, hw, &Truncation::height(cm.rank(), depth))
}

pub fn verma_multiplicities_truncated(
    cm: &CartanMatrix,
    hw: &WeightCoords,
    trunc: &Truncation,
) -> Result<MultiplicityTable> {
    check_weight(cm, hw)?;
    if !trunc.is_bounded() {
        return Err(Error::UnboundedTruncation);
    }
    let n = cm.rank();
    let mut region = Vec::new();
    enumerate_box(trunc, &mut vec![0; n], 0, &mut region);
    region.sort_by(|a, b| height(a).cmp(&height(b)).then_with(|| a.cmp(b)));
    let roots = RootTable::over(cm, region.iter().cloned())?;
    let index: HashMap<RootVec, usize> = region.iter().cloned().enumerate().map(|(i, v)| (v, i)).collect();
    let mut coeff = vec![0i64; region.len()];
    coeff[index[&vec![0; n]]] = 1;
    for (alpha, &mult) in &roots.mults {
        for _ in 0..mult {
            // multiply by 1/(1 − x^α) in place, ascending height
            for (pos, v) in region.iter().enumerate() {
                let prev: RootVec = v.iter().zip(alpha).map(|(a, b)| a - b).collect();
                if prev.iter().all(|&x| x >= 0) {
                    let p = coeff[index[&prev]];
                    coeff[pos] = coeff[pos]
                        .checked_add(p)
                        .ok_or_else(|| Error::Inconsistent("Kostant count overflow".into()))?;
                }
            }
        }
    }
    let entries = region.into_iter().zip(coeff).filter(|(_, c)| *c != 0).collect();
    Ok(MultiplicityTable { highest_weight: hw.clone(), truncation: trunc.clone(), entries })
}

/// Weyl dimension formula Π_{α>0} (Λ+ρ|α)/(ρ|α) for finite types.
pub fn weyl_dimension(cm: &CartanMatrix, hw: &WeightCoords) -> Result<Rational> {
    let lam_rho: Vec<Rational> = hw.labels.iter().map(|l| l + qi(1)).collect();
    let rho = cm.rho().labels;
    let mut acc = qi(1);
    for a in cm.finite_positive_roots()? {
        acc *= cm.weight_root_pairing(&lam_rho, &a) / cm.weight_root_pairing(&rho, &a);
    }
    Ok(acc)
}

/// Graded dimensions Σ_{grade(n)=m} mult(n), as a q-series with leading
/// exponent `Δ − c/24`, for grades `0..order`.
pub fn virasoro_specialize(
    cm: &CartanMatrix,
    table: &MultiplicityTable,
    delta: &Rational,
    c: &Rational,
    order: usize,
) -> Result<QSeries<i64>> {
    if !cm.is_affine() {
        return Err(Error::NotAffine);
    }
    let complete = table.truncation.complete_grade(cm).unwrap_or(-1);
    if order == 0 || complete < order as i64 - 1 {
        return Err(Error::DepthInsufficient { grade: order.saturating_sub(1) });
    }
    let mut coeffs = vec![0i64; order];
    for (n, &m) in &table.entries {
        let g = cm.grade_of(n);
        if !g.is_integer() {
            return Err(Error::UnsupportedAlgebra("fractional grades in specialization".into()));
        }
        let g = to_i64(&g).expect("integral grade") as usize;
        if g < order {
            coeffs[g] += m;
        }
    }
    Ok(QSeries::new(delta - c / qi(24), coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::preset;

    #[test]
    fn a2_roots_have_multiplicity_one() {
        let roots = root_multiplicities(&preset("A2").unwrap(), 5).unwrap();
        let expect: BTreeMap<RootVec, i64> = [(vec![1, 0], 1), (vec![0, 1], 1), (vec![1, 1], 1)].into_iter().collect();
        assert_eq!(roots, expect);
    }

    #[test]
    fn affine_imaginary_roots() {
        let a1aff = root_multiplicities(&preset("A1aff").unwrap(), 6).unwrap();
        assert_eq!(a1aff[&vec![1, 1]], 1);
        assert_eq!(a1aff[&vec![2, 2]], 1);
        assert_eq!(a1aff[&vec![2, 1]], 1);
        assert!(!a1aff.contains_key(&vec![2, 0]));
        let a2aff = root_multiplicities(&preset("A2aff").unwrap(), 6).unwrap();
        assert_eq!(a2aff[&vec![1, 1, 1]], 2);
        assert_eq!(a2aff[&vec![2, 2, 2]], 2);
    }

    #[test]
    fn sl2_and_adjoint_of_sl3() {
        let a1 = preset("A1").unwrap();
        let t = irreducible_multiplicities(&a1, &WeightCoords::from_ints(&[2]), 5).unwrap();
        assert_eq!(t.entries, [(vec![0], 1), (vec![1], 1), (vec![2], 1)].into_iter().collect());
        let a2 = preset("A2").unwrap();
        let t = irreducible_multiplicities(&a2, &WeightCoords::from_ints(&[1, 1]), 10).unwrap();
        assert_eq!(t.get(&[1, 1]), 2);
        assert_eq!(t.total(), 8);
        let triv = irreducible_multiplicities(&a2, &WeightCoords::from_ints(&[0, 0]), 4).unwrap();
        assert_eq!(triv.entries.len(), 1);
    }

    #[test]
    fn verma_counts() {
        let a2 = preset("A2").unwrap();
        let v = verma_multiplicities(&a2, &WeightCoords::from_ints(&[0, 0]), 2).unwrap();
        assert_eq!(v.get(&[1, 1]), 2);
        assert_eq!(v.get(&[2, 0]), 1);
        let v0 = verma_multiplicities(&a2, &WeightCoords::from_ints(&[3, 1]), 0).unwrap();
        assert_eq!(v0.entries.len(), 1);
    }

    #[test]
    fn level_one_a1_grade_dimensions() {
        // L(Λ₀) of A₁^{(1)}: 1, 3, 4, 7, 13, 19, ...
        let cm = preset("A1aff").unwrap();
        let hw = WeightCoords::from_ints(&[1, 0]);
        let t = irreducible_multiplicities_truncated(&cm, &hw, &Truncation::grade(&cm, 5).unwrap()).unwrap();
        let s = virasoro_specialize(&cm, &t, &qi(0), &qi(0), 6).unwrap();
        assert_eq!(s.coefficients, vec![1, 3, 4, 7, 13, 19]);
        assert!(matches!(virasoro_specialize(&cm, &t, &qi(0), &qi(0), 7), Err(Error::DepthInsufficient { .. })));
    }
}
