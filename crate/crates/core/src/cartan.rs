//! Generalized Cartan matrices and the invariant bilinear form.
//!
//! Conventions: `entries[i][j] = αⁱ(Hʲ)`, so row `i` lists the Dynkin labels of
//! the simple root `αⁱ`. The form is fixed by the half-norms `εᵢ = (αⁱ|αⁱ)/2`,
//! giving `(αⁱ|αʲ) = A_ij·εⱼ` and `(αⁱ|λ) = εᵢ·λⁱ`.
//!
//! Weights are stored as Dynkin labels plus a δ-coefficient ("grade"). For
//! affine matrices the fundamental weight of the affine node carries no
//! horizontal part, `(δ|Λₖ) = aₖεₖ` and `(δ|δ) = 0`; the simple roots are
//! `αⁱ = Σⱼ A_ij Λⱼ + (δ_{iz}/a_z)·δ` with `z` the affine node.

use crate::error::{Error, Result};
use crate::field::{qi, Rational};
use crate::linalg::{inertia, int_matrix, Matrix};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::collections::{BTreeSet, VecDeque};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    Finite,
    Affine,
    Indefinite { hyperbolic: bool },
}

/// Kernel data of an affine matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineData {
    /// Index of the affine node z.
    pub node: usize,
    /// Kac labels: δ = Σ aᵢαⁱ (left kernel, coprime positive integers).
    pub kac: Vec<i64>,
    /// Dual Kac labels: A·a^∨ = 0 (right kernel, coprime positive integers).
    pub dual_kac: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CartanMatrix {
    entries: Vec<Vec<i64>>,
    symmetrizer: Vec<i64>,
    kind: Kind,
    half_norms: Vec<Rational>,
    affine: Option<AffineData>,
    /// Gram matrix of the fundamental weights at grade 0, when the weight
    /// space carries a nondegenerate realization.
    weight_gram: Option<Matrix<Rational>>,
    name: Option<String>,
}

/// A weight in Dynkin labels plus a δ-coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightCoords {
    pub labels: Vec<Rational>,
    pub grade: Rational,
}

impl WeightCoords {
    pub fn new(labels: Vec<Rational>, grade: Rational) -> Self {
        WeightCoords { labels, grade }
    }

    pub fn from_ints(labels: &[i64]) -> Self {
        WeightCoords { labels: labels.iter().map(|&v| qi(v)).collect(), grade: Rational::zero() }
    }

    pub fn zero(n: usize) -> Self {
        WeightCoords { labels: vec![Rational::zero(); n], grade: Rational::zero() }
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn add(&self, o: &Self) -> Self {
        WeightCoords {
            labels: self.labels.iter().zip(&o.labels).map(|(a, b)| a + b).collect(),
            grade: &self.grade + &o.grade,
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&-Rational::one()))
    }

    pub fn scale(&self, s: &Rational) -> Self {
        WeightCoords { labels: self.labels.iter().map(|a| a * s).collect(), grade: &self.grade * s }
    }

    /// Integer labels, if all labels are integral.
    pub fn int_labels(&self) -> Option<Vec<i64>> {
        self.labels.iter().map(crate::field::to_i64).collect()
    }

    pub fn is_dominant_integral(&self) -> bool {
        self.int_labels().is_some_and(|l| l.iter().all(|&v| v >= 0))
    }
}

/// Validates an integer matrix as a connected symmetrizable GCM.
pub fn validate_cartan(rows: &[Vec<i64>]) -> Result<CartanMatrix> {
    CartanMatrix::new(rows.to_vec())
}

/// Type of a validated matrix.
pub fn classify(cm: &CartanMatrix) -> Kind {
    cm.kind
}

/// `(λ|μ)` for two weights of the same algebra.
pub fn weight_inner_product(cm: &CartanMatrix, l: &WeightCoords, m: &WeightCoords) -> Result<Rational> {
    cm.inner(l, m)
}

impl CartanMatrix {
    pub fn new(entries: Vec<Vec<i64>>) -> Result<Self> {
        let n = entries.len();
        if n == 0 {
            return Err(Error::NotGcm("empty matrix".into()));
        }
        if entries.iter().any(|r| r.len() != n) {
            return Err(Error::NotGcm("matrix is not square".into()));
        }
        for i in 0..n {
            if entries[i][i] != 2 {
                return Err(Error::NotGcm(format!("diagonal entry {i} is not 2")));
            }
            for j in 0..n {
                if i != j && entries[i][j] > 0 {
                    return Err(Error::NotGcm(format!("positive off-diagonal entry at ({i}, {j})")));
                }
                if (entries[i][j] == 0) != (entries[j][i] == 0) {
                    return Err(Error::NotGcm(format!("asymmetric zero pattern at ({i}, {j})")));
                }
            }
        }
        let nodes: Vec<usize> = (0..n).collect();
        if components(&entries, &nodes).len() != 1 {
            return Err(Error::Disconnected);
        }
        let symmetrizer = symmetrizer(&entries)?;
        let kind = kind_of(&entries, &symmetrizer);
        let mut cm = CartanMatrix {
            entries,
            symmetrizer,
            kind,
            half_norms: Vec::new(),
            affine: None,
            weight_gram: None,
            name: None,
        };
        if kind == Kind::Affine {
            let a = int_matrix(&cm.entries);
            let kac = primitive_positive(&a.transpose().kernel()[0]);
            let dual_kac = primitive_positive(&a.kernel()[0]);
            let node = (0..n)
                .find(|&i| kac[i] == 1 && dual_kac[i] == 1)
                .or_else(|| (0..n).find(|&i| dual_kac[i] == 1))
                .unwrap_or(0);
            cm.affine = Some(AffineData { node, kac, dual_kac });
            let norms = (0..n)
                .map(|i| {
                    let aff = cm.affine.as_ref().expect("just set");
                    Rational::new(aff.dual_kac[i].into(), aff.kac[i].into())
                })
                .collect();
            cm.set_half_norms(norms)?;
        } else {
            let dmin = *cm.symmetrizer.iter().min().expect("n >= 1");
            let norms = cm.symmetrizer.iter().map(|&d| Rational::new(dmin.into(), d.into())).collect();
            cm.set_half_norms(norms)?;
        }
        Ok(cm)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    /// Chooses the affine node (rebuilding the weight realization).
    pub fn with_affine_node(mut self, node: usize) -> Result<Self> {
        let n = self.rank();
        let aff = self.affine.as_mut().ok_or(Error::NotAffine)?;
        if node >= n {
            return Err(Error::InvalidIndex { index: node, rank: n });
        }
        aff.node = node;
        let norms = self.half_norms.clone();
        self.set_half_norms(norms)?;
        Ok(self)
    }

    /// Replaces the normalization of the invariant form. The new half-norms
    /// must be proportional to the inverse symmetrizer.
    pub fn with_half_norms(mut self, norms: Vec<Rational>) -> Result<Self> {
        self.set_half_norms(norms)?;
        Ok(self)
    }

    fn set_half_norms(&mut self, norms: Vec<Rational>) -> Result<()> {
        let n = self.rank();
        if norms.len() != n {
            return Err(Error::DimensionMismatch { expected: n, got: norms.len() });
        }
        let c = &norms[0] * qi(self.symmetrizer[0]);
        if norms.iter().any(|e| !e.is_positive())
            || (0..n).any(|i| &norms[i] * qi(self.symmetrizer[i]) != c)
        {
            return Err(Error::DegenerateForm("half-norms not proportional to the inverse symmetrizer".into()));
        }
        self.half_norms = norms;
        self.weight_gram = self.build_weight_gram();
        Ok(())
    }

    fn build_weight_gram(&self) -> Option<Matrix<Rational>> {
        let n = self.rank();
        let eps = &self.half_norms;
        match &self.affine {
            None => {
                let inv = int_matrix(&self.entries).inverse()?;
                Some(Matrix::from_fn(n, n, |r, c| inv[(r, c)].clone() * eps[c].clone()))
            }
            Some(aff) => {
                let z = aff.node;
                let hor: Vec<usize> = (0..n).filter(|&i| i != z).collect();
                let sub = int_matrix(&self.entries).select(&hor, &hor);
                let inv = sub.inverse()?;
                let mut g = Matrix::zeros(n, n);
                for (a, &i) in hor.iter().enumerate() {
                    for (b, &j) in hor.iter().enumerate() {
                        g[(i, j)] = inv[(a, b)].clone() * eps[j].clone();
                    }
                }
                Some(g)
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    pub fn symmetrizer(&self) -> &[i64] {
        &self.symmetrizer
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn is_affine(&self) -> bool {
        self.kind == Kind::Affine
    }

    pub fn affine(&self) -> Option<&AffineData> {
        self.affine.as_ref()
    }

    pub fn affine_node(&self) -> Option<usize> {
        self.affine.as_ref().map(|a| a.node)
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    /// εᵢ = (αⁱ|αⁱ)/2.
    pub fn half_norms(&self) -> &[Rational] {
        &self.half_norms
    }

    /// Symmetric matrix (αⁱ|αʲ) = A_ij εⱼ.
    pub fn root_form(&self) -> Matrix<Rational> {
        let n = self.rank();
        Matrix::from_fn(n, n, |i, j| qi(self.entries[i][j]) * self.half_norms[j].clone())
    }

    /// (β|γ) for root-lattice vectors β = Σ bᵢαⁱ, γ = Σ cᵢαⁱ.
    pub fn root_pairing(&self, b: &[i64], c: &[i64]) -> Rational {
        let mut acc = Rational::zero();
        for (i, &bi) in b.iter().enumerate() {
            if bi == 0 {
                continue;
            }
            for (j, &cj) in c.iter().enumerate() {
                if cj != 0 && self.entries[i][j] != 0 {
                    acc += qi(bi * cj * self.entries[i][j]) * &self.half_norms[j];
                }
            }
        }
        acc
    }

    /// (λ|β) for a weight given by labels and a root-lattice vector β.
    pub fn weight_root_pairing(&self, labels: &[Rational], b: &[i64]) -> Rational {
        b.iter()
            .enumerate()
            .filter(|(_, &v)| v != 0)
            .map(|(i, &v)| qi(v) * &labels[i] * &self.half_norms[i])
            .sum()
    }

    /// δ-coefficient of the simple root αⁱ.
    pub fn root_grade(&self, i: usize) -> Rational {
        match &self.affine {
            Some(aff) if aff.node == i => Rational::new(BigInt::one(), aff.kac[i].into()),
            _ => Rational::zero(),
        }
    }

    pub fn simple_root(&self, i: usize) -> WeightCoords {
        WeightCoords {
            labels: self.entries[i].iter().map(|&v| qi(v)).collect(),
            grade: self.root_grade(i),
        }
    }

    pub fn fundamental_weight(&self, i: usize) -> WeightCoords {
        let mut w = WeightCoords::zero(self.rank());
        w.labels[i] = qi(1);
        w
    }

    /// The Weyl vector: all labels 1, grade 0.
    pub fn rho(&self) -> WeightCoords {
        WeightCoords { labels: vec![qi(1); self.rank()], grade: Rational::zero() }
    }

    /// δ as a weight (affine only).
    pub fn delta(&self) -> Result<WeightCoords> {
        self.affine.as_ref().ok_or(Error::NotAffine)?;
        Ok(WeightCoords { labels: vec![Rational::zero(); self.rank()], grade: qi(1) })
    }

    /// Λ − Σ nᵢαⁱ.
    pub fn lower(&self, top: &WeightCoords, n: &[i64]) -> WeightCoords {
        let mut w = top.clone();
        for (i, &ni) in n.iter().enumerate() {
            if ni == 0 {
                continue;
            }
            for j in 0..self.rank() {
                w.labels[j] -= qi(ni * self.entries[i][j]);
            }
            w.grade -= qi(ni) * self.root_grade(i);
        }
        w
    }

    /// Grade (δ-coefficient) of Σ nᵢαⁱ.
    pub fn grade_of(&self, n: &[i64]) -> Rational {
        match &self.affine {
            Some(aff) => Rational::new(n[aff.node].into(), aff.kac[aff.node].into()),
            None => Rational::zero(),
        }
    }

    /// (δ|λ) with respect to the current form.
    pub fn level(&self, l: &WeightCoords) -> Result<Rational> {
        let aff = self.affine.as_ref().ok_or(Error::NotAffine)?;
        Ok((0..self.rank()).map(|k| qi(aff.kac[k]) * &self.half_norms[k] * &l.labels[k]).sum())
    }

    /// Σ aᵢ^∨ λⁱ with the coprime dual Kac labels.
    pub fn dual_level(&self, l: &WeightCoords) -> Result<Rational> {
        let aff = self.affine.as_ref().ok_or(Error::NotAffine)?;
        Ok((0..self.rank()).map(|k| qi(aff.dual_kac[k]) * &l.labels[k]).sum())
    }

    /// (δ|ρ) with respect to the current form (the dual Coxeter number for
    /// the standard normalization).
    pub fn dual_coxeter(&self) -> Result<Rational> {
        self.level(&self.rho())
    }

    fn inner(&self, l: &WeightCoords, m: &WeightCoords) -> Result<Rational> {
        let n = self.rank();
        for w in [l, m] {
            if w.rank() != n {
                return Err(Error::DimensionMismatch { expected: n, got: w.rank() });
            }
        }
        let g = self
            .weight_gram
            .as_ref()
            .ok_or_else(|| Error::DegenerateForm("weight space realization is singular".into()))?;
        let mut acc = Rational::zero();
        for i in 0..n {
            if l.labels[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if !m.labels[j].is_zero() && !g[(i, j)].is_zero() {
                    acc += &l.labels[i] * &m.labels[j] * &g[(i, j)];
                }
            }
        }
        if self.affine.is_some() {
            acc += &l.grade * self.level(m)? + &m.grade * self.level(l)?;
        }
        Ok(acc)
    }

    /// Principal submatrix on the given nodes (validated; must stay connected).
    pub fn submatrix(&self, nodes: &[usize]) -> Result<CartanMatrix> {
        let rows = nodes.iter().map(|&i| nodes.iter().map(|&j| self.entries[i][j]).collect()).collect();
        CartanMatrix::new(rows)
    }

    /// Horizontal (finite) subalgebra obtained by deleting the affine node,
    /// with the restricted form, and the list of retained node indices.
    pub fn horizontal(&self) -> Result<(CartanMatrix, Vec<usize>)> {
        let z = self.affine_node().ok_or(Error::NotAffine)?;
        let nodes: Vec<usize> = (0..self.rank()).filter(|&i| i != z).collect();
        let rows = nodes.iter().map(|&i| nodes.iter().map(|&j| self.entries[i][j]).collect()).collect();
        let sub = CartanMatrix::new(rows)?;
        let norms = nodes.iter().map(|&i| self.half_norms[i].clone()).collect();
        Ok((sub.with_half_norms(norms)?, nodes))
    }

    /// Positive roots of a finite-type matrix as root-lattice vectors,
    /// ordered by height.
    pub fn finite_positive_roots(&self) -> Result<Vec<Vec<i64>>> {
        if self.kind != Kind::Finite {
            return Err(Error::UnsupportedAlgebra("finite root system requested for non-finite type".into()));
        }
        let n = self.rank();
        let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut queue = VecDeque::new();
        for i in 0..n {
            let mut e = vec![0; n];
            e[i] = 1;
            seen.insert(e.clone());
            queue.push_back(e);
        }
        while let Some(b) = queue.pop_front() {
            for i in 0..n {
                let pairing: i64 = (0..n).map(|j| b[j] * self.entries[j][i]).sum();
                let mut r = b.clone();
                r[i] -= pairing;
                if r.iter().all(|&v| v >= 0) && r.iter().any(|&v| v > 0) && seen.insert(r.clone()) {
                    queue.push_back(r);
                }
            }
        }
        let mut roots: Vec<Vec<i64>> = seen.into_iter().collect();
        roots.sort_by_key(|r| (r.iter().sum::<i64>(), r.clone()));
        Ok(roots)
    }

    /// Dimension of a finite-type algebra.
    pub fn finite_dimension(&self) -> Result<usize> {
        Ok(self.rank() + 2 * self.finite_positive_roots()?.len())
    }
}

/// Connected components of the Dynkin diagram restricted to `nodes`.
pub fn components(entries: &[Vec<i64>], nodes: &[usize]) -> Vec<Vec<usize>> {
    let mut left: BTreeSet<usize> = nodes.iter().copied().collect();
    let mut out = Vec::new();
    while let Some(&start) = left.iter().next() {
        left.remove(&start);
        let mut comp = vec![start];
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            let next: Vec<usize> = left.iter().copied().filter(|&j| entries[i][j] != 0).collect();
            for j in next {
                left.remove(&j);
                comp.push(j);
                stack.push(j);
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

fn symmetrizer(entries: &[Vec<i64>]) -> Result<Vec<i64>> {
    let n = entries.len();
    let mut d: Vec<Option<Rational>> = vec![None; n];
    d[0] = Some(qi(1));
    let mut stack = vec![0];
    while let Some(i) = stack.pop() {
        for j in 0..n {
            if i != j && entries[i][j] != 0 && d[j].is_none() {
                let di = d[i].clone().expect("visited");
                d[j] = Some(di * qi(entries[i][j]) / qi(entries[j][i]));
                stack.push(j);
            }
        }
    }
    let d: Vec<Rational> = d.into_iter().map(|v| v.expect("connected")).collect();
    for i in 0..n {
        for j in 0..n {
            if &d[i] * qi(entries[i][j]) != &d[j] * qi(entries[j][i]) {
                return Err(Error::NotSymmetrizable);
            }
        }
    }
    let lcm = d.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    let ints: Vec<BigInt> = d.iter().map(|v| (v * Rational::from_integer(lcm.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    Ok(ints.iter().map(|v| (v / &g).to_i64().expect("symmetrizer fits in i64")).collect())
}

fn kind_of(entries: &[Vec<i64>], d: &[i64]) -> Kind {
    let n = entries.len();
    let b = Matrix::from_fn(n, n, |i, j| qi(d[i] * entries[i][j]));
    match inertia(&b) {
        (p, 0, 0) if p == n => Kind::Finite,
        (p, 0, 1) if p + 1 == n => Kind::Affine,
        _ => {
            let hyperbolic = (0..n).all(|del| {
                let rest: Vec<usize> = (0..n).filter(|&i| i != del).collect();
                components(entries, &rest).iter().all(|comp| {
                    let rows: Vec<Vec<i64>> =
                        comp.iter().map(|&i| comp.iter().map(|&j| entries[i][j]).collect()).collect();
                    let ds: Vec<i64> = comp.iter().map(|&i| d[i]).collect();
                    matches!(kind_of(&rows, &ds), Kind::Finite | Kind::Affine)
                })
            });
            Kind::Indefinite { hyperbolic }
        }
    }
}

/// Scales a rational kernel vector to coprime positive integers.
fn primitive_positive(v: &[Rational]) -> Vec<i64> {
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * Rational::from_integer(lcm.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    let sign = if ints.iter().any(|x| x.is_negative()) { -BigInt::one() } else { BigInt::one() };
    ints.iter().map(|x| (x * &sign / &g).to_i64().expect("Kac label fits in i64")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::q;

    #[test]
    fn a2_is_finite_with_unit_symmetrizer() {
        let cm = validate_cartan(&[vec![2, -1], vec![-1, 2]]).unwrap();
        assert_eq!(cm.symmetrizer(), &[1, 1]);
        assert_eq!(classify(&cm), Kind::Finite);
    }

    #[test]
    fn rejects_non_gcm() {
        assert!(matches!(validate_cartan(&[vec![2, -1], vec![0, 2]]), Err(Error::NotGcm(_))));
        assert!(matches!(validate_cartan(&[vec![2, 1], vec![1, 2]]), Err(Error::NotGcm(_))));
        assert!(matches!(validate_cartan(&[vec![3]]), Err(Error::NotGcm(_))));
        assert_eq!(validate_cartan(&[vec![2, 0], vec![0, 2]]), Err(Error::Disconnected));
        let cyclic = [vec![2, -1, -1], vec![-2, 2, -1], vec![-1, -1, 2]];
        assert_eq!(validate_cartan(&cyclic), Err(Error::NotSymmetrizable));
    }

    #[test]
    fn affine_and_hyperbolic_rank_two() {
        let a = validate_cartan(&[vec![2, -2], vec![-2, 2]]).unwrap();
        assert_eq!(a.symmetrizer(), &[1, 1]);
        assert_eq!(a.kind(), Kind::Affine);
        let h = validate_cartan(&[vec![2, -3], vec![-3, 2]]).unwrap();
        assert_eq!(h.kind(), Kind::Indefinite { hyperbolic: true });
    }

    #[test]
    fn non_simply_laced_symmetrizer() {
        let b2 = validate_cartan(&[vec![2, -2], vec![-1, 2]]).unwrap();
        // d₀·A₀₁ = d₁·A₁₀ → d₀·(−2) = d₁·(−1)
        assert_eq!(b2.symmetrizer(), &[1, 2]);
        assert_eq!(b2.half_norms(), &[q(1, 1), q(1, 2)]);
        assert!(b2.root_form().is_symmetric());
    }

    #[test]
    fn fundamental_weight_norm_a2() {
        let cm = validate_cartan(&[vec![2, -1], vec![-1, 2]]).unwrap();
        let l1 = cm.fundamental_weight(0);
        assert_eq!(weight_inner_product(&cm, &l1, &l1).unwrap(), q(2, 3));
        let a1 = validate_cartan(&[vec![2]]).unwrap();
        let alpha = a1.simple_root(0);
        assert_eq!(alpha.labels, vec![qi(2)]);
        assert_eq!(weight_inner_product(&a1, &alpha, &alpha).unwrap(), qi(2));
    }

    #[test]
    fn affine_realization_pairs_roots_correctly() {
        let c2aff = validate_cartan(&[vec![2, -2, 0], vec![-1, 2, -1], vec![0, -2, 2]]).unwrap();
        let aff = c2aff.affine().unwrap();
        assert_eq!(aff.kac, vec![1, 2, 1]);
        assert_eq!(aff.dual_kac, vec![1, 1, 1]);
        let n = c2aff.rank();
        for i in 0..n {
            for k in 0..n {
                let v = weight_inner_product(&c2aff, &c2aff.simple_root(i), &c2aff.fundamental_weight(k)).unwrap();
                let expect = if i == k { c2aff.half_norms()[i].clone() } else { qi(0) };
                assert_eq!(v, expect, "(α{i}|Λ{k})");
            }
        }
        let delta = c2aff.delta().unwrap();
        assert_eq!(weight_inner_product(&c2aff, &delta, &delta).unwrap(), qi(0));
        assert_eq!(c2aff.dual_coxeter().unwrap(), qi(3));
    }

    #[test]
    fn finite_roots_of_b2() {
        let b2 = validate_cartan(&[vec![2, -2], vec![-1, 2]]).unwrap();
        let roots = b2.finite_positive_roots().unwrap();
        assert_eq!(roots.len(), 4);
        assert_eq!(b2.finite_dimension().unwrap(), 10);
    }
}
