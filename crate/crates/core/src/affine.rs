//! Affine data: integrable weights at a level, conformal weights, modular
//! anomalies, Kac–Peterson S/T matrices, simple currents, monodromy
//! charges and the conformal-weight relation under folding.
//!
//! All inner products use the algebra's own form; every formula here is
//! invariant under rescaling it, so folded (possibly twisted) algebras with
//! the induced normalization are handled by the same code.

use crate::cartan::{weight_inner_product, CartanMatrix, WeightCoords};
use crate::error::{Error, Result};
use crate::field::{frac, qi, to_i64, Rational};
use crate::fold::{validate_automorphism, DiagramAutomorphism, FoldResult};
use crate::weyl::{reflect, to_dominant};
use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};
use std::collections::{HashMap, VecDeque};
use std::f64::consts::PI;

/// All dominant integral weights of an affine algebra at dual level `k`.
#[derive(Clone, Debug)]
pub struct AffineWeightSet {
    pub algebra: CartanMatrix,
    pub level: i64,
    /// Lexicographic in the horizontal labels; grades are zero.
    pub weights: Vec<WeightCoords>,
    pub g_dual: Rational,
    /// Γ₀₀ of an attached automorphism.
    pub gamma00: Option<Rational>,
}

impl AffineWeightSet {
    pub fn new(cm: &CartanMatrix, level: i64) -> Result<Self> {
        let aff = cm.affine().ok_or(Error::NotAffine)?;
        if level < 0 {
            return Err(Error::WeightNotAtLevel { level });
        }
        let n = cm.rank();
        let mut out = Vec::new();
        let mut cur = vec![0i64; n];
        enumerate_level(&aff.dual_kac, level, 0, &mut cur, &mut out);
        // horizontal labels first, so the vacuum leads
        out.sort_by_key(|l| {
            let mut key: Vec<i64> = (0..n).filter(|&i| i != aff.node).map(|i| l[i]).collect();
            key.push(l[aff.node]);
            key
        });
        let weights = out.iter().map(|l| WeightCoords::from_ints(l)).collect();
        Ok(AffineWeightSet { algebra: cm.clone(), level, weights, g_dual: cm.dual_coxeter()?, gamma00: None })
    }

    pub fn with_fold(mut self, fold: &FoldResult) -> Self {
        self.gamma00 = fold.gamma00.clone();
        self
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn index_of(&self, l: &WeightCoords) -> Option<usize> {
        self.weights.iter().position(|w| w.labels == l.labels)
    }

    fn require(&self, l: &WeightCoords) -> Result<()> {
        self.index_of(l).map(|_| ()).ok_or(Error::WeightNotAtLevel { level: self.level })
    }

    pub fn conformal_weight(&self, l: &WeightCoords) -> Result<Rational> {
        self.require(l)?;
        conformal_weight(&self.algebra, l)
    }

    pub fn modular_anomaly(&self, l: &WeightCoords) -> Result<Rational> {
        self.require(l)?;
        Ok(conformal_weight(&self.algebra, l)? - central_charge(&self.algebra, &qi(self.level))? / qi(24))
    }

    pub fn central_charge(&self) -> Result<Rational> {
        central_charge(&self.algebra, &qi(self.level))
    }
}

fn enumerate_level(dual_kac: &[i64], left: i64, i: usize, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
    if i == cur.len() {
        if left == 0 {
            out.push(cur.clone());
        }
        return;
    }
    let mut v = 0;
    while v * dual_kac[i] <= left {
        cur[i] = v;
        enumerate_level(dual_kac, left - v * dual_kac[i], i + 1, cur, out);
        v += 1;
    }
    cur[i] = 0;
}

/// Δ_Λ = (Λ|Λ+2ρ) / (2(δ|Λ+ρ)), evaluated on the grade-zero part of Λ.
pub fn conformal_weight(cm: &CartanMatrix, l: &WeightCoords) -> Result<Rational> {
    let l0 = WeightCoords::new(l.labels.clone(), qi(0));
    let rho = cm.rho();
    let num = weight_inner_product(cm, &l0, &l0.add(&rho.scale(&qi(2))))?;
    let den = qi(2) * cm.level(&l0.add(&rho))?;
    if den.is_zero() {
        return Err(Error::WeightNotAtLevel { level: 0 });
    }
    Ok(num / den)
}

/// (k/g) with level and dual Coxeter number measured by the same form.
fn level_ratio(cm: &CartanMatrix, dual_level: &Rational) -> Result<(Rational, Rational)> {
    let aff = cm.affine().ok_or(Error::NotAffine)?;
    // a form-level unit: the level of the weight with dual label 1 at the affine node
    let mut unit = WeightCoords::zero(cm.rank());
    unit.labels[aff.node] = Rational::new(1.into(), aff.dual_kac[aff.node].into());
    let k = dual_level * cm.level(&unit)?;
    Ok((k, cm.dual_coxeter()?))
}

/// Dimension of the horizontal subalgebra.
pub fn horizontal_dimension(cm: &CartanMatrix) -> Result<usize> {
    cm.horizontal()?.0.finite_dimension()
}

/// c = k·D/(k+g) for dual level `k`.
pub fn central_charge(cm: &CartanMatrix, dual_level: &Rational) -> Result<Rational> {
    let (k, g) = level_ratio(cm, dual_level)?;
    let d = qi(horizontal_dimension(cm)? as i64);
    Ok(&k * d / (&k + g))
}

/// s_Λ = Δ_Λ − c/24.
pub fn modular_anomaly(cm: &CartanMatrix, l: &WeightCoords) -> Result<Rational> {
    let k = cm.dual_level(l)?;
    Ok(conformal_weight(cm, l)? - central_charge(cm, &k)? / qi(24))
}

/// Folded anomaly for a rotation of A_{N−1}^{(1)}: the orbit algebra is
/// trivial, so ŝ_Λ = s_Λ − (k/24g)·D.
pub fn rotation_anomaly(cm: &CartanMatrix, l: &WeightCoords) -> Result<Rational> {
    let (k, g) = level_ratio(cm, &cm.dual_level(l)?)?;
    let d = qi(horizontal_dimension(cm)? as i64);
    Ok(modular_anomaly(cm, l)? - k / (qi(24) * g) * d)
}

#[derive(Clone, Debug)]
pub struct ModularData {
    pub labels: Vec<WeightCoords>,
    pub s: Vec<Vec<Complex64>>,
    pub t: Vec<Complex64>,
    pub central_charge: Rational,
    pub conformal_weights: Vec<Rational>,
}

/// Residuals of the SL(2,ℤ) relations.
#[derive(Clone, Debug, PartialEq)]
pub struct ModularResiduals {
    pub symmetry: f64,
    pub unitarity: f64,
    /// Distance of S² from the nearest permutation matrix.
    pub conjugation: f64,
    pub st_cubed: f64,
    /// Charge conjugation read off S².
    pub conjugation_perm: Vec<usize>,
}

impl ModularResiduals {
    pub fn max(&self) -> f64 {
        self.symmetry.max(self.unitarity).max(self.conjugation).max(self.st_cubed)
    }
}

pub type CMatrix = Vec<Vec<Complex64>>;

pub fn cmul(a: &CMatrix, b: &CMatrix) -> CMatrix {
    let n = a.len();
    let m = b.first().map_or(0, |r| r.len());
    (0..n)
        .map(|i| (0..m).map(|j| (0..b.len()).map(|k| a[i][k] * b[k][j]).sum()).collect())
        .collect()
}

fn max_dist(a: &CMatrix, b: &CMatrix) -> f64 {
    a.iter()
        .zip(b)
        .flat_map(|(r, s)| r.iter().zip(s).map(|(x, y)| (x - y).norm()))
        .fold(0.0, f64::max)
}

/// Symmetry, unitarity, S² = C and (ST)³ = S² residuals of an (S, T) pair.
pub fn modular_residuals(s: &CMatrix, t: &[Complex64]) -> ModularResiduals {
    let n = s.len();
    let st: CMatrix = (0..n).map(|i| (0..n).map(|j| s[j][i]).collect()).collect();
    let sdag: CMatrix = (0..n).map(|i| (0..n).map(|j| s[j][i].conj()).collect()).collect();
    let id: CMatrix = (0..n)
        .map(|i| (0..n).map(|j| if i == j { Complex64::new(1.0, 0.0) } else { Complex64::new(0.0, 0.0) }).collect())
        .collect();
    let s2 = cmul(s, s);
    let conjugation_perm: Vec<usize> = s2
        .iter()
        .map(|row| row.iter().enumerate().max_by(|a, b| a.1.norm().total_cmp(&b.1.norm())).map_or(0, |x| x.0))
        .collect();
    let perm: CMatrix = (0..n)
        .map(|i| (0..n).map(|j| Complex64::new(if conjugation_perm[i] == j { 1.0 } else { 0.0 }, 0.0)).collect())
        .collect();
    let stm: CMatrix = (0..n).map(|i| (0..n).map(|j| s[i][j] * t[j]).collect()).collect();
    let st3 = cmul(&cmul(&stm, &stm), &stm);
    ModularResiduals {
        symmetry: max_dist(s, &st),
        unitarity: max_dist(&cmul(s, &sdag), &id),
        conjugation: max_dist(&s2, &perm),
        st_cubed: max_dist(&st3, &s2),
        conjugation_perm,
    }
}

impl ModularData {
    pub fn residuals(&self) -> ModularResiduals {
        modular_residuals(&self.s, &self.t)
    }
}

/// Elements of a finite Weyl group as (sign, matrix on Dynkin labels),
/// found by exploring the orbit of ρ.
fn weyl_group(h: &CartanMatrix) -> Result<Vec<(i32, Vec<Vec<i64>>)>> {
    let n = h.rank();
    let ident: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
    let rho: Vec<i64> = vec![1; n];
    let apply = |m: &Vec<Vec<i64>>, v: &[i64]| -> Vec<i64> { (0..n).map(|i| (0..n).map(|j| m[i][j] * v[j]).sum()).collect() };
    let mut seen: HashMap<Vec<i64>, usize> = HashMap::new();
    let mut out = vec![(1, ident)];
    seen.insert(rho.clone(), 0);
    let mut queue = VecDeque::from([0usize]);
    while let Some(idx) = queue.pop_front() {
        for i in 0..n {
            // r_i ∘ w on label vectors: v ↦ v − vⁱ·(row i of A)
            let (sign, w) = &out[idx];
            let mut m = w.clone();
            for c in 0..n {
                let vi = w[i][c];
                for r in 0..n {
                    m[r][c] -= vi * h.entry(i, r);
                }
            }
            let img = apply(&m, &rho);
            if !seen.contains_key(&img) {
                seen.insert(img, out.len());
                out.push((-sign, m));
                queue.push_back(out.len() - 1);
            }
        }
    }
    Ok(out)
}

fn phase(x: &Rational) -> Complex64 {
    let f = frac(x).to_f64().expect("finite fraction");
    Complex64::from_polar(1.0, 2.0 * PI * f)
}

/// Kac–Peterson S and T at the set's level.
pub fn kac_peterson(set: &AffineWeightSet) -> Result<ModularData> {
    let cm = &set.algebra;
    let (h, nodes) = cm.horizontal()?;
    let r = h.rank();
    let w = weyl_group(&h)?;
    let positive = h.finite_positive_roots()?.len();
    let kg = cm.level(&set.weights[0].add(&cm.rho()))?; // (δ|Λ+ρ) = k + g in the form's units
    let bar = |l: &WeightCoords| -> Vec<i64> { nodes.iter().map(|&i| to_i64(&l.labels[i]).expect("integral") + 1).collect() };
    // |P/Q^∨| = det Ā / Π ε̄
    let amat = crate::linalg::int_matrix(h.entries());
    let vol = amat.determinant() / h.half_norms().iter().fold(qi(1), |acc, e| acc * e);
    let norm = vol.to_f64().expect("finite") * kg.to_f64().expect("finite").powi(r as i32);
    let prefactor = Complex64::i().powi(positive as i32) / norm.sqrt();
    let shifted: Vec<Vec<i64>> = set.weights.iter().map(bar).collect();
    let as_weight = |v: &[i64]| WeightCoords::from_ints(v);
    let n = set.len();
    let mut s = vec![vec![Complex64::new(0.0, 0.0); n]; n];
    for a in 0..n {
        let images: Vec<(i32, WeightCoords)> = w
            .iter()
            .map(|(sign, m)| {
                let v: Vec<i64> = (0..r).map(|i| (0..r).map(|j| m[i][j] * shifted[a][j]).sum()).collect();
                (*sign, as_weight(&v))
            })
            .collect();
        for b in a..n {
            let mb = as_weight(&shifted[b]);
            let mut acc = Complex64::new(0.0, 0.0);
            for (sign, img) in &images {
                let x = -weight_inner_product(&h, img, &mb)? / &kg;
                acc += phase(&x) * f64::from(*sign);
            }
            s[a][b] = prefactor * acc;
            s[b][a] = s[a][b];
        }
    }
    let c = set.central_charge()?;
    let deltas: Vec<Rational> = set.weights.iter().map(|l| conformal_weight(cm, l)).collect::<Result<_>>()?;
    let t = deltas.iter().map(|d| phase(&(d - &c / qi(24)))).collect();
    Ok(ModularData { labels: set.weights.clone(), s, t, central_charge: c, conformal_weights: deltas })
}

#[derive(Clone, Debug, PartialEq)]
pub struct SimpleCurrent {
    pub automorphism: DiagramAutomorphism,
    /// J = J⋆0 at the set's level.
    pub weight: WeightCoords,
}

impl SimpleCurrent {
    /// J⋆Λ, realized as the diagram automorphism's action on labels.
    pub fn act(&self, l: &WeightCoords) -> WeightCoords {
        self.automorphism.act_on_weight(l)
    }
}

/// All diagram automorphisms of `cm`, by backtracking.
pub fn diagram_automorphisms(cm: &CartanMatrix) -> Vec<DiagramAutomorphism> {
    fn extend(cm: &CartanMatrix, perm: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        let n = cm.rank();
        let i = perm.len();
        if i == n {
            out.push(perm.clone());
            return;
        }
        for c in 0..n {
            if used[c] || cm.entry(c, c) != cm.entry(i, i) {
                continue;
            }
            if (0..i).all(|j| cm.entry(perm[j], c) == cm.entry(j, i) && cm.entry(c, perm[j]) == cm.entry(i, j)) {
                used[c] = true;
                perm.push(c);
                extend(cm, perm, used, out);
                perm.pop();
                used[c] = false;
            }
        }
    }
    let mut out = Vec::new();
    extend(cm, &mut Vec::new(), &mut vec![false; cm.rank()], &mut out);
    out.into_iter().filter_map(|p| validate_automorphism(cm, &p).ok()).collect()
}

/// Simple currents: diagram automorphisms whose action on horizontal
/// weights is a finite Weyl group element followed by a translation.
pub fn simple_currents(set: &AffineWeightSet) -> Result<Vec<SimpleCurrent>> {
    let cm = &set.algebra;
    let aff = cm.affine().ok_or(Error::NotAffine)?;
    let z = aff.node;
    let (h, nodes) = cm.horizontal()?;
    let r = h.rank();
    let mut out = Vec::new();
    for aut in diagram_automorphisms(cm) {
        // Linear part on horizontal labels, from level-zero weights.
        let columns: Vec<Vec<Rational>> = (0..r)
            .map(|c| {
                let mut labels = vec![qi(0); cm.rank()];
                labels[nodes[c]] = qi(1);
                labels[z] = -Rational::new(aff.dual_kac[nodes[c]].into(), aff.dual_kac[z].into());
                let img = aut.act_on_labels(&labels);
                nodes.iter().map(|&i| img[i].clone()).collect()
            })
            .collect();
        let lin = |v: &[Rational]| -> WeightCoords {
            let labels = (0..r).map(|i| (0..r).map(|c| &columns[c][i] * &v[c]).sum()).collect();
            WeightCoords::new(labels, qi(0))
        };
        let (dom, word) = match to_dominant(&h, &lin(&h.rho().labels), 64 * r * r + 64) {
            Ok(x) => x,
            Err(_) => continue,
        };
        if dom != h.rho() {
            continue;
        }
        let inner = (0..r).all(|c| {
            let mut e = vec![qi(0); r];
            e[c] = qi(1);
            let mut img = lin(&e);
            for &i in word.letters() {
                img = reflect(&h, &img, i).expect("valid reflection");
            }
            img.labels == e
        });
        if inner {
            let mut labels = vec![qi(0); cm.rank()];
            labels[aut.apply(z)] = Rational::new(set.level.into(), aff.dual_kac[aut.apply(z)].into());
            out.push(SimpleCurrent { automorphism: aut, weight: WeightCoords::new(labels, qi(0)) });
        }
    }
    if out.is_empty() {
        return Err(Error::UnsupportedAlgebra("no simple currents found".into()));
    }
    out.sort_by_key(|c| (!c.automorphism.is_identity(), c.automorphism.perm().to_vec()));
    Ok(out)
}

/// Q_J(Λ) = Δ_Λ + Δ_J − Δ_{J⋆Λ} mod 1.
pub fn monodromy_charge(set: &AffineWeightSet, j: &SimpleCurrent, l: &WeightCoords) -> Result<Rational> {
    let cm = &set.algebra;
    let q = conformal_weight(cm, l)? + conformal_weight(cm, &j.weight)? - conformal_weight(cm, &j.act(l))?;
    Ok(frac(&q))
}

/// Both sides of the conformal-weight relation under folding.
#[derive(Clone, Debug, PartialEq)]
pub struct Cd2Report {
    pub lhs: Rational,
    pub rhs: Rational,
    /// The same right-hand side through central charges and dimensions.
    pub rhs_cd: Rational,
    pub gamma00: Rational,
    /// Δ_Λ − Δ̆_Λ̆.
    pub constant: Rational,
}

impl Cd2Report {
    pub fn equal(&self) -> bool {
        self.lhs == self.rhs && self.lhs == self.rhs_cd
    }
}

/// Checks Δ_Λ = Δ̆_Λ̆ + Γ₀₀·k(1 + g/(k+g))/(2N²) and its (c, D) form
/// Δ_Λ = Δ̆_Λ̆ + [(k/g)(D − D̆) + c − c̆]/24.
pub fn check_cd2(fold: &FoldResult, l: &WeightCoords) -> Result<Cd2Report> {
    let cm = &fold.source;
    let folded = &fold.folded;
    let lb = fold.project_weight(&WeightCoords::new(l.labels.clone(), qi(0)))?;
    let delta = conformal_weight(cm, l)?;
    let delta_f = conformal_weight(folded, &lb)?;
    let gamma00 = fold.gamma00.clone().unwrap_or_else(Rational::zero);
    let dual_k = cm.dual_level(l)?;
    let (k, g) = level_ratio(cm, &dual_k)?;
    let n = qi(fold.order() as i64);
    let rhs = &delta_f + &gamma00 * &k * (qi(1) + &g / (&k + &g)) / (qi(2) * &n * &n);
    let c = central_charge(cm, &dual_k)?;
    let cf = central_charge(folded, &folded.dual_level(&lb)?)?;
    let d = qi(horizontal_dimension(cm)? as i64);
    let df = qi(horizontal_dimension(folded)? as i64);
    let rhs_cd = &delta_f + (&k / &g * (d - df) + c - cf) / qi(24);
    Ok(Cd2Report { constant: &delta - &delta_f, lhs: delta, rhs, rhs_cd, gamma00 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::preset;
    use crate::field::q;
    use crate::fold::fold;

    #[test]
    fn weight_counts() {
        let a1 = preset("A1aff").unwrap();
        assert_eq!(AffineWeightSet::new(&a1, 4).unwrap().len(), 5);
        let a2 = preset("A2aff").unwrap();
        assert_eq!(AffineWeightSet::new(&a2, 2).unwrap().len(), 6);
        let b3 = preset("B3aff").unwrap();
        // dual labels (1,1,2,1): weights at level 1 are Λ₀, Λ₁, Λ₃
        assert_eq!(AffineWeightSet::new(&b3, 1).unwrap().len(), 3);
    }

    #[test]
    fn conformal_weights_and_anomalies() {
        let a1 = preset("A1aff").unwrap();
        let w = |a, b| WeightCoords::from_ints(&[a, b]);
        assert_eq!(conformal_weight(&a1, &w(1, 1)).unwrap(), q(3, 16));
        assert_eq!(conformal_weight(&a1, &w(2, 2)).unwrap(), q(1, 3));
        assert_eq!(conformal_weight(&a1, &w(0, 2)).unwrap(), q(1, 2));
        assert_eq!(central_charge(&a1, &qi(1)).unwrap(), qi(1));
        assert_eq!(modular_anomaly(&a1, &w(1, 0)).unwrap(), q(-1, 24));
        assert_eq!(modular_anomaly(&a1, &w(1, 1)).unwrap(), q(1, 8));
        assert_eq!(rotation_anomaly(&a1, &w(1, 1)).unwrap(), qi(0));
        let set = AffineWeightSet::new(&a1, 2).unwrap();
        assert!(matches!(set.conformal_weight(&w(1, 0)), Err(Error::WeightNotAtLevel { level: 2 })));
    }

    #[test]
    fn a1_level_one_s_matrix() {
        let set = AffineWeightSet::new(&preset("A1aff").unwrap(), 1).unwrap();
        let md = kac_peterson(&set).unwrap();
        let r = 0.5f64.sqrt();
        let expect = [[r, r], [r, -r]];
        for i in 0..2 {
            for j in 0..2 {
                assert!((md.s[i][j] - Complex64::new(expect[i][j], 0.0)).norm() < 1e-12);
            }
        }
        assert!(md.residuals().max() < 1e-9);
    }

    #[test]
    fn modular_relations_across_catalog() {
        for (name, k) in [("A1aff", 2), ("A2aff", 2), ("C2aff", 2), ("B3aff", 1), ("D4aff", 1), ("G2aff", 2)] {
            let set = AffineWeightSet::new(&preset(name).unwrap(), k).unwrap();
            let md = kac_peterson(&set).unwrap();
            assert!(md.residuals().max() < 1e-9, "{name} {:?}", md.residuals());
        }
    }

    #[test]
    fn currents_and_charges() {
        let a1 = preset("A1aff").unwrap();
        let set = AffineWeightSet::new(&a1, 2).unwrap();
        let cur = simple_currents(&set).unwrap();
        assert_eq!(cur.len(), 2);
        let j = &cur[1];
        assert_eq!(j.weight, WeightCoords::from_ints(&[0, 2]));
        assert_eq!(conformal_weight(&a1, &j.weight).unwrap(), q(1, 2));
        let l = WeightCoords::from_ints(&[1, 1]);
        assert_eq!(monodromy_charge(&set, j, &l).unwrap(), q(1, 2));
        assert_eq!(monodromy_charge(&set, j, &WeightCoords::from_ints(&[2, 0])).unwrap(), qi(0));
        let a2 = AffineWeightSet::new(&preset("A2aff").unwrap(), 1).unwrap();
        assert_eq!(simple_currents(&a2).unwrap().len(), 3);
        let d4 = AffineWeightSet::new(&preset("D4aff").unwrap(), 1).unwrap();
        assert_eq!(simple_currents(&d4).unwrap().len(), 4);
    }

    #[test]
    fn conformal_weight_relation_under_half_rotation() {
        let cm = preset("A3aff").unwrap();
        let f = fold(&cm, &validate_automorphism(&cm, &[2, 3, 0, 1]).unwrap()).unwrap();
        let mut constants = Vec::new();
        for labels in [[1, 0, 1, 0], [0, 1, 0, 1]] {
            let r = check_cd2(&f, &WeightCoords::from_ints(&labels)).unwrap();
            assert!(r.equal(), "{r:?}");
            constants.push(r.constant);
        }
        assert_eq!(constants, vec![q(5, 12), q(5, 12)]);
    }
}
