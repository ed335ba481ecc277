//! Diagram automorphisms, orbit data and the orbit Lie algebra.
//!
//! Folding sums the rows of an orbit, weighted by the orbit weight
//! `s_i = 1 − Σ_{l=1}^{N_i−1} A_{ω̇ˡi, i}`:
//! `Ă_{[i][j]} = s_i·Σ_{l<N_i} A_{ω̇ˡi, j}`. The folded matrix is revalidated from
//! scratch; the induced form `ε̆_{[i]} = s_i N_i εᵢ / N` is then imposed, which
//! only succeeds when it is proportional to the independently computed folded
//! symmetrizer.

use crate::cartan::{validate_cartan, CartanMatrix, WeightCoords};
use crate::error::{Error, Result};
use crate::field::{qi, Rational};
use num_integer::Integer;
use num_traits::Zero;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramAutomorphism {
    perm: Vec<usize>,
    order: usize,
}

impl DiagramAutomorphism {
    pub fn identity(n: usize) -> Self {
        DiagramAutomorphism { perm: (0..n).collect(), order: 1 }
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn apply(&self, i: usize) -> usize {
        self.perm[i]
    }

    /// ω̇ˡ(i).
    pub fn power(&self, l: usize, i: usize) -> usize {
        (0..l % self.order).fold(i, |acc, _| self.perm[acc])
    }

    pub fn is_identity(&self) -> bool {
        self.order == 1
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        let perm: Vec<usize> = other.perm.iter().map(|&i| self.perm[i]).collect();
        let order = perm_order(&perm);
        DiagramAutomorphism { perm, order }
    }

    pub fn inverse(&self) -> Self {
        let mut perm = vec![0; self.perm.len()];
        for (i, &p) in self.perm.iter().enumerate() {
            perm[p] = i;
        }
        DiagramAutomorphism { perm, order: self.order }
    }

    pub fn commutes_with(&self, other: &Self) -> bool {
        self.compose(other) == other.compose(self)
    }

    /// Action ω* on Dynkin labels: (ω*λ)^{ω̇i} = λⁱ.
    pub fn act_on_labels<T: Clone>(&self, labels: &[T]) -> Vec<T> {
        let mut out = labels.to_vec();
        for (i, l) in labels.iter().enumerate() {
            out[self.perm[i]] = l.clone();
        }
        out
    }

    /// Label permutation with the grade kept; see [`omega_star`] for the
    /// form-preserving action on affine weights.
    pub fn act_on_weight(&self, w: &WeightCoords) -> WeightCoords {
        WeightCoords { labels: self.act_on_labels(&w.labels), grade: w.grade.clone() }
    }

    pub fn is_symmetric<T: PartialEq + Clone>(&self, labels: &[T]) -> bool {
        self.act_on_labels(labels) == labels
    }
}

fn perm_order(perm: &[usize]) -> usize {
    let mut seen = vec![false; perm.len()];
    let mut order = 1usize;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = perm[i];
            len += 1;
        }
        order = order.lcm(&len);
    }
    order
}

/// Checks that `perm` is a bijection preserving the Cartan matrix.
pub fn validate_automorphism(cm: &CartanMatrix, perm: &[usize]) -> Result<DiagramAutomorphism> {
    let n = cm.rank();
    if perm.len() != n {
        return Err(Error::DimensionMismatch { expected: n, got: perm.len() });
    }
    let mut hit = vec![false; n];
    for &p in perm {
        if p >= n || hit[p] {
            return Err(Error::NotBijection);
        }
        hit[p] = true;
    }
    for i in 0..n {
        for j in 0..n {
            if cm.entry(perm[i], perm[j]) != cm.entry(i, j) {
                return Err(Error::NotAutomorphism { i, j });
            }
        }
    }
    Ok(DiagramAutomorphism { perm: perm.to_vec(), order: perm_order(perm) })
}

/// Pairwise commutation check for generators of an identification group.
pub fn check_commuting(auts: &[DiagramAutomorphism]) -> Result<()> {
    for (a, x) in auts.iter().enumerate() {
        for y in &auts[a + 1..] {
            if !x.commutes_with(y) {
                return Err(Error::NotCommuting);
            }
        }
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitData {
    /// Orbits sorted internally, ordered by smallest element.
    pub orbits: Vec<Vec<usize>>,
    /// Orbit lengths N_i.
    pub lengths: Vec<usize>,
    /// Orbit weights s_i.
    pub s: Vec<i64>,
    pub linking_ok: bool,
    /// Orbit index of every node.
    pub node_orbit: Vec<usize>,
    /// Order N of the automorphism.
    pub order: usize,
}

impl OrbitData {
    pub fn representative(&self, orbit: usize) -> usize {
        self.orbits[orbit][0]
    }

    pub fn len(&self) -> usize {
        self.orbits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orbits.is_empty()
    }
}

pub fn orbit_data(cm: &CartanMatrix, aut: &DiagramAutomorphism) -> OrbitData {
    let n = cm.rank();
    let mut node_orbit = vec![usize::MAX; n];
    let mut orbits = Vec::new();
    for start in 0..n {
        if node_orbit[start] != usize::MAX {
            continue;
        }
        let mut orbit = vec![start];
        let mut i = aut.apply(start);
        while i != start {
            orbit.push(i);
            i = aut.apply(i);
        }
        for &m in &orbit {
            node_orbit[m] = orbits.len();
        }
        orbit.sort_unstable();
        orbits.push(orbit);
    }
    let lengths: Vec<usize> = orbits.iter().map(Vec::len).collect();
    let s: Vec<i64> = orbits
        .iter()
        .map(|o| {
            let i = o[0];
            1 - (1..o.len()).map(|l| cm.entry(aut.power(l, i), i)).sum::<i64>()
        })
        .collect();
    let linking_ok = s.iter().all(|&v| v == 1 || v == 2);
    OrbitData { orbits, lengths, s, linking_ok, node_orbit, order: aut.order() }
}

/// Folded matrix using the given representative of every orbit.
pub fn fold_matrix(cm: &CartanMatrix, aut: &DiagramAutomorphism, od: &OrbitData, reps: &[usize]) -> Vec<Vec<i64>> {
    let m = od.len();
    (0..m)
        .map(|a| {
            let i = reps[a];
            (0..m)
                .map(|b| {
                    let j = reps[b];
                    od.s[a] * (0..od.lengths[a]).map(|l| cm.entry(aut.power(l, i), j)).sum::<i64>()
                })
                .collect()
        })
        .collect()
}

/// Is `aut` a rotation generating a single orbit of an A-type affine diagram
/// (the family that violates the linking condition)?
pub fn is_rotation(cm: &CartanMatrix, aut: &DiagramAutomorphism) -> bool {
    let n = cm.rank();
    if !cm.is_affine() || aut.order() != n || n < 2 {
        return false;
    }
    let cycle = (0..n).all(|i| {
        let neighbours: Vec<i64> = (0..n).filter(|&j| j != i).map(|j| cm.entry(i, j)).filter(|&v| v != 0).collect();
        if n == 2 {
            neighbours == [-2]
        } else {
            neighbours == [-1, -1]
        }
    });
    cycle && cm.affine().is_some_and(|a| a.kac.iter().all(|&v| v == 1))
}

#[derive(Clone, Debug, PartialEq)]
pub struct FoldResult {
    pub folded: CartanMatrix,
    pub orbit_data: OrbitData,
    pub source: CartanMatrix,
    pub automorphism: DiagramAutomorphism,
    /// Γ₀₀ = Σ_{l,l'=1}^{N−1} (Λ̄_{ω̇ˡz}|Λ̄_{ω̇^{l'}z}) for affine sources.
    pub gamma00: Option<Rational>,
}

pub fn fold(cm: &CartanMatrix, aut: &DiagramAutomorphism) -> Result<FoldResult> {
    let od = orbit_data(cm, aut);
    if let Some(orbit) = od.s.iter().position(|&s| s != 1 && s != 2) {
        return Err(Error::LinkingConditionViolated { orbit, s: od.s[orbit] });
    }
    let reps: Vec<usize> = od.orbits.iter().map(|o| o[0]).collect();
    let mut folded = validate_cartan(&fold_matrix(cm, aut, &od, &reps))?;
    if folded.kind() != cm.kind() {
        return Err(Error::KindMismatch);
    }
    let n_big = qi(od.order as i64);
    let induced: Vec<Rational> = (0..od.len())
        .map(|a| qi(od.s[a] * od.lengths[a] as i64) * &cm.half_norms()[reps[a]] / &n_big)
        .collect();
    let mut gamma00 = None;
    if let Some(aff) = cm.affine() {
        let z = aff.node;
        folded = folded.with_affine_node(od.node_orbit[z])?;
        let mut g = Rational::zero();
        for l in 1..od.order {
            for lp in 1..od.order {
                let a = cm.fundamental_weight(aut.power(l, z));
                let b = cm.fundamental_weight(aut.power(lp, z));
                g += crate::cartan::weight_inner_product(cm, &a, &b)?;
            }
        }
        gamma00 = Some(g);
    }
    let folded = folded
        .with_half_norms(induced)
        .map_err(|_| Error::Inconsistent("induced form disagrees with the folded symmetrizer".into()))?;
    if let (Some(src), Some(fa)) = (cm.affine(), folded.affine()) {
        // P*(δ̆) = δ requires ă_{[i]}·s_i = a_i.
        for (a, &r) in reps.iter().enumerate() {
            if fa.kac[a] * od.s[a] != src.kac[r] {
                return Err(Error::Inconsistent("folded null root does not pull back to δ".into()));
            }
        }
    }
    Ok(FoldResult { folded, orbit_data: od, source: cm.clone(), automorphism: aut.clone(), gamma00 })
}

/// P_ω on an invariant Cartan element: coefficient of H̆^{[i]} is N_i·vᵢ.
pub fn project_cartan_element(od: &OrbitData, v: &[Rational]) -> Result<Vec<Rational>> {
    if v.len() != od.node_orbit.len() {
        return Err(Error::DimensionMismatch { expected: od.node_orbit.len(), got: v.len() });
    }
    for o in &od.orbits {
        if o.iter().any(|&i| v[i] != v[o[0]]) {
            return Err(Error::NotInvariant);
        }
    }
    Ok(od.orbits.iter().map(|o| qi(o.len() as i64) * &v[o[0]]).collect())
}

/// (h|h') for Cartan elements given in the coroot basis.
pub fn cartan_inner(cm: &CartanMatrix, v: &[Rational], w: &[Rational]) -> Rational {
    let n = cm.rank();
    let mut acc = Rational::zero();
    for i in 0..n {
        for j in 0..n {
            if cm.entry(i, j) != 0 {
                acc += &v[i] * &w[j] * qi(cm.entry(i, j)) / &cm.half_norms()[i];
            }
        }
    }
    acc
}

impl FoldResult {
    pub fn order(&self) -> usize {
        self.orbit_data.order
    }

    /// Grade shift of P*: the lifted weight has grade
    /// `ğ + x·k̆` with `x = −Γ₀₀/(2N)`.
    fn lift_shift(&self) -> Rational {
        match &self.gamma00 {
            Some(g) => -g / qi(2 * self.order() as i64),
            None => Rational::zero(),
        }
    }

    /// Inverse of P*_ω on a symmetric weight.
    pub fn project_weight(&self, l: &WeightCoords) -> Result<WeightCoords> {
        let od = &self.orbit_data;
        if l.rank() != self.source.rank() {
            return Err(Error::DimensionMismatch { expected: self.source.rank(), got: l.rank() });
        }
        if !self.automorphism.is_symmetric(&l.labels) {
            return Err(Error::NotSymmetricWeight);
        }
        let labels: Vec<Rational> = od.orbits.iter().map(|o| l.labels[o[0]].clone()).collect();
        let mut out = WeightCoords::new(labels, l.grade.clone());
        if self.source.is_affine() {
            let kf = self.folded.level(&out)?;
            out.grade = &l.grade - self.lift_shift() * kf;
        }
        Ok(out)
    }

    /// P*_ω: ğ-weight to symmetric g-weight.
    pub fn lift_weight(&self, l: &WeightCoords) -> Result<WeightCoords> {
        let od = &self.orbit_data;
        if l.rank() != od.len() {
            return Err(Error::DimensionMismatch { expected: od.len(), got: l.rank() });
        }
        let labels: Vec<Rational> = od.node_orbit.iter().map(|&o| l.labels[o].clone()).collect();
        let mut grade = l.grade.clone();
        if self.source.is_affine() {
            grade += self.lift_shift() * self.folded.level(l)?;
        }
        Ok(WeightCoords::new(labels, grade))
    }

    /// Root-lattice vector of P*(Σ n̆ ᾰ): n_j = s_{[j]}·n̆_{[j]}.
    pub fn lift_root_vector(&self, n: &[i64]) -> Vec<i64> {
        let od = &self.orbit_data;
        od.node_orbit.iter().map(|&o| od.s[o] * n[o]).collect()
    }

    /// (P_ω h₁ | P_ω h₂) = N·(h₁|h₂).
    pub fn check_norm_relation(&self, h1: &[Rational], h2: &[Rational]) -> Result<bool> {
        let p1 = project_cartan_element(&self.orbit_data, h1)?;
        let p2 = project_cartan_element(&self.orbit_data, h2)?;
        let lhs = cartan_inner(&self.folded, &p1, &p2);
        let rhs = qi(self.order() as i64) * cartan_inner(&self.source, h1, h2);
        Ok(lhs == rhs)
    }
}

/// ω* on a weight. For affine matrices ω*Λ_(i) = Λ_(ω̇i) + c_i·δ, with c_i
/// fixed by invariance of the form; c vanishes on symmetric weights.
pub fn omega_star(cm: &CartanMatrix, aut: &DiagramAutomorphism, l: &WeightCoords) -> Result<WeightCoords> {
    let n = cm.rank();
    if l.rank() != n || aut.perm().len() != n {
        return Err(Error::DimensionMismatch { expected: n, got: l.rank() });
    }
    let mut out = aut.act_on_weight(l);
    if cm.is_affine() {
        for i in 0..n {
            if l.labels[i].is_zero() {
                continue;
            }
            let (a, b) = (cm.fundamental_weight(i), cm.fundamental_weight(aut.apply(i)));
            let norm = |w: &WeightCoords| crate::cartan::weight_inner_product(cm, w, w);
            let c = (norm(&a)? - norm(&b)?) / (qi(2) * cm.level(&b)?);
            out.grade += &l.labels[i] * c;
        }
    }
    Ok(out)
}
