//! Twining characters: traces of the induced automorphism τ_ω on weight
//! spaces of highest-weight modules.
//!
//! Three routes:
//! * a brute-force oracle that realizes the module from the contravariant
//!   form and lets τ_ω act by relabeling lowering operators;
//! * the orbit-algebra route: ordinary multiplicities of the folded algebra,
//!   lifted back along P*_ω;
//! * the rotation special case, where only the highest weight contributes.
//!
//! The oracle builds the irreducible quotient one weight space at a time.
//! A basis of `L_β` is chosen among the vectors `f_i·u` with `u` a basis
//! vector of `L_{β−αⁱ}`; the Gram block of these candidates is obtained from
//! `e_k f_i = f_i e_k + δ_ki h_i` and the already known lower spaces. The
//! quotient by the radical is the column space of that block.

use crate::cartan::{CartanMatrix, WeightCoords};
use crate::characters::{
    irreducible_multiplicities_truncated, verma_multiplicities_truncated, MultiplicityTable, RootVec, Truncation,
};
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::field::{q, qi, to_i64, Field, Fp, Rational};
use crate::fold::{is_rotation, DiagramAutomorphism, FoldResult};
use crate::linalg::Matrix;
use crate::qseries::QSeries;
use num_bigint::BigInt;
use num_traits::Signed;
use rayon::prelude::*;
use std::collections::{BTreeMap, HashMap, HashSet};

/// Upper bound on Σ dim L_β held by one oracle module.
pub const ORACLE_DIMENSION_BUDGET: usize = 400_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModuleKind {
    Irreducible,
    Verma,
}

/// Arithmetic used by the oracle. `Modular` works over 𝔽_p (p = 2⁶¹−1) and
/// certifies every rank against the exact multiplicity, which pins the
/// rational computation; `Exact` uses rationals throughout.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Arithmetic {
    Modular,
    Exact,
}

#[derive(Clone, Debug, PartialEq)]
pub struct TwiningTable {
    pub highest_weight: WeightCoords,
    pub truncation: Truncation,
    pub kind: ModuleKind,
    /// Order N of the automorphism; entries live in ℚ(ζ_N).
    pub order: usize,
    /// Nonzero traces keyed by `n` (weight `Λ − Σ nᵢαⁱ`).
    pub entries: BTreeMap<RootVec, Cyclotomic>,
}

impl TwiningTable {
    pub fn get(&self, n: &[i64]) -> Cyclotomic {
        self.entries.get(n).cloned().unwrap_or_else(Cyclotomic::zero)
    }

    /// Keys on which the two tables disagree, with both values.
    pub fn diff(&self, other: &TwiningTable) -> Vec<(RootVec, Cyclotomic, Cyclotomic)> {
        let keys: std::collections::BTreeSet<&RootVec> = self.entries.keys().chain(other.entries.keys()).collect();
        keys.into_iter()
            .filter_map(|k| {
                let (a, b) = (self.get(k), other.get(k));
                (a != b).then(|| (k.clone(), a, b))
            })
            .collect()
    }

    /// Nonzero entries sit only at ω*-symmetric weights (symmetric `n`).
    pub fn support_is_symmetric(&self, aut: &DiagramAutomorphism) -> bool {
        self.entries.keys().all(|n| aut.is_symmetric(n))
    }

    /// |m^{[ω]}_λ| ≤ m_λ for every weight.
    pub fn is_majorized_by(&self, table: &MultiplicityTable) -> bool {
        self.entries.iter().all(|(n, v)| v.to_complex().norm() <= table.get(n) as f64 + 1e-9)
    }

    /// Number of weights whose entry differs from the entry at some
    /// ŵ_{[i]}-image inside the truncation.
    pub fn hat_orbit_violations(&self, fold: &FoldResult) -> Result<usize> {
        let cm = &fold.source;
        let od = &fold.orbit_data;
        let n = cm.rank();
        let hw: Vec<Rational> = self.highest_weight.labels.clone();
        let mut violations = 0;
        for (key, value) in &self.entries {
            for (a, orbit) in od.orbits.iter().enumerate() {
                // ŵ_{[a]}(λ) = λ − s_a Σ_{j∈[a]} λʲ αʲ
                let mut image = key.clone();
                for &j in orbit {
                    let label = &hw[j] - qi((0..n).map(|m| key[m] * cm.entry(m, j)).sum());
                    let label = to_i64(&label).ok_or(Error::NotDominantIntegral)?;
                    image[j] += od.s[a] * label;
                }
                if image.iter().all(|&v| v >= 0) && self.truncation.contains(&image) && &self.get(&image) != value {
                    violations += 1;
                }
            }
        }
        Ok(violations)
    }

    /// Graded traces `Σ_{grade(n)=m} m^{[ω]}_n` for `m < order` on an affine
    /// algebra, as a series with leading exponent `exponent`.
    pub fn specialize(&self, cm: &CartanMatrix, exponent: &Rational, order: usize) -> Result<QSeries<Cyclotomic>> {
        let complete = self.truncation.complete_grade(cm).ok_or(Error::NotAffine)?;
        if order == 0 || complete < order as i64 - 1 {
            return Err(Error::DepthInsufficient { grade: order.saturating_sub(1) });
        }
        let mut coeffs = vec![Cyclotomic::zero(); order];
        for (n, v) in &self.entries {
            let g = cm.grade_of(n);
            let g = to_i64(&g).ok_or_else(|| Error::UnsupportedAlgebra("fractional grades".into()))?;
            if (g as usize) < order {
                coeffs[g as usize] = &coeffs[g as usize] + v;
            }
        }
        Ok(QSeries::new(exponent.clone(), coeffs))
    }
}

/// One weight space of the oracle module.
#[derive(Clone)]
pub struct WeightSpace<F> {
    /// Basis vectors as lowering monomials in application order.
    pub monomials: Vec<Vec<usize>>,
    /// Gram matrix of the contravariant form on the basis.
    pub gram: Matrix<F>,
    /// Dimension of the irreducible quotient (Verma: of the Verma space).
    pub quotient_rank: usize,
    /// τ_ω: L_β → L_{ω·β} in the chosen bases.
    pub tau: Matrix<F>,
}

#[derive(Clone)]
pub struct OracleModule<F> {
    pub highest_weight: WeightCoords,
    pub automorphism: DiagramAutomorphism,
    pub kind: ModuleKind,
    pub truncation: Truncation,
    pub order: usize,
    pub spaces: BTreeMap<RootVec, WeightSpace<F>>,
}

struct Node<F> {
    /// (i, b): the vector f_i·u_b with u_b ∈ L_{β−αⁱ}.
    basis: Vec<(usize, usize)>,
    monomials: Vec<Vec<usize>>,
    gram: Matrix<F>,
    /// E_k: L_β → L_{β−α_k}.
    e: Vec<Option<Matrix<F>>>,
    /// F_i: L_{β−αⁱ} → L_β.
    f: Vec<Option<Matrix<F>>>,
}

impl<F: Field> Node<F> {
    fn rank(&self) -> usize {
        self.basis.len()
    }
}

fn minus(beta: &[i64], i: usize) -> Option<RootVec> {
    (beta[i] > 0).then(|| {
        let mut v = beta.to_vec();
        v[i] -= 1;
        v
    })
}

/// (ω·β)_{ω j} = β_j.
fn rotate(aut: &DiagramAutomorphism, beta: &[i64]) -> RootVec {
    let mut out = vec![0; beta.len()];
    for (j, &v) in beta.iter().enumerate() {
        out[aut.apply(j)] = v;
    }
    out
}

/// Highest weight used to realize a Verma module: a generic symmetric
/// rational weight, so that the contravariant form is nondegenerate. The
/// trace of the relabeling map on U(n₋) does not depend on it.
fn generic_symmetric_weight(aut: &DiagramAutomorphism, rank: usize) -> WeightCoords {
    let mut labels = vec![qi(0); rank];
    let mut seen = vec![false; rank];
    let mut orbit = 0;
    for start in 0..rank {
        if seen[start] {
            continue;
        }
        let mut j = start;
        while !seen[j] {
            seen[j] = true;
            labels[j] = -q(1009 + 173 * orbit, 7);
            j = aut.apply(j);
        }
        orbit += 1;
    }
    WeightCoords::new(labels, qi(0))
}

fn certify_err(beta: &[i64], got: usize, want: i64) -> Error {
    Error::Inconsistent(format!("oracle rank {got} differs from multiplicity {want} at {beta:?}"))
}

/// Builds the oracle module of L(Λ) (or M(Λ)) over the down-closure of the
/// symmetric weights inside `trunc`.
pub fn build_oracle_module<F: Field>(
    cm: &CartanMatrix,
    aut: &DiagramAutomorphism,
    hw: &WeightCoords,
    trunc: &Truncation,
    kind: ModuleKind,
) -> Result<OracleModule<F>> {
    let n = cm.rank();
    if hw.rank() != n || aut.perm().len() != n {
        return Err(Error::DimensionMismatch { expected: n, got: hw.rank() });
    }
    if !aut.is_symmetric(&hw.labels) {
        return Err(Error::NotSymmetricWeight);
    }
    let (reference, form_weight) = match kind {
        ModuleKind::Irreducible => (irreducible_multiplicities_truncated(cm, hw, trunc)?, hw.clone()),
        ModuleKind::Verma => (verma_multiplicities_truncated(cm, hw, trunc)?, generic_symmetric_weight(aut, n)),
    };
    let region = oracle_region(aut, &reference);
    let total: i64 = region.iter().map(|v| reference.get(v)).sum();
    if total as usize > ORACLE_DIMENSION_BUDGET {
        return Err(Error::DepthBudgetExceeded(format!(
            "oracle needs {total} basis vectors (budget {ORACLE_DIMENSION_BUDGET})"
        )));
    }
    let labels: Vec<F> = form_weight
        .labels
        .iter()
        .map(|l| F::from_rational(l).ok_or_else(|| Error::Inconsistent("weight not representable".into())))
        .collect::<Result<_>>()?;

    let mut levels: BTreeMap<i64, Vec<RootVec>> = BTreeMap::new();
    for v in region {
        levels.entry(v.iter().sum()).or_default().push(v);
    }
    let mut nodes: HashMap<RootVec, Node<F>> = HashMap::new();
    let mut taus: HashMap<RootVec, Matrix<F>> = HashMap::new();
    for (h, level) in levels {
        if h == 0 {
            let zero = vec![0; n];
            nodes.insert(
                zero.clone(),
                Node {
                    basis: vec![(usize::MAX, 0)],
                    monomials: vec![vec![]],
                    gram: Matrix::identity(1),
                    e: vec![None; n],
                    f: vec![None; n],
                },
            );
            taus.insert(zero, Matrix::identity(1));
            continue;
        }
        let built: Vec<(RootVec, Option<Node<F>>)> = level
            .par_iter()
            .map(|beta| {
                let node = gram_node(cm, &labels, &nodes, beta)?;
                let got = node.as_ref().map_or(0, |x| x.rank());
                let want = reference.get(beta);
                if got as i64 != want {
                    return Err(certify_err(beta, got, want));
                }
                Ok((beta.clone(), node))
            })
            .collect::<Result<_>>()?;
        for (beta, node) in built {
            if let Some(node) = node {
                nodes.insert(beta, node);
            }
        }
        let tau_level: Vec<(RootVec, Matrix<F>)> = level
            .par_iter()
            .filter(|beta| nodes.contains_key(*beta))
            .map(|beta| Ok((beta.clone(), tau_node(aut, &nodes, &taus, beta)?)))
            .collect::<Result<_>>()?;
        taus.extend(tau_level);
    }
    check_twining_property(aut, &nodes, &taus)?;

    let order = aut.order();
    let mut spaces = BTreeMap::new();
    for (beta, node) in nodes {
        let tau = taus.remove(&beta).expect("tau for every node");
        if aut.is_symmetric(&beta) {
            let mut power = Matrix::identity(node.rank());
            for _ in 0..order {
                power = tau.mul(&power);
            }
            if power != Matrix::identity(node.rank()) {
                return Err(Error::Inconsistent(format!("τ^N ≠ 1 at {beta:?}")));
            }
        }
        let rank = node.rank();
        spaces.insert(beta, WeightSpace { monomials: node.monomials, gram: node.gram, quotient_rank: rank, tau });
    }
    Ok(OracleModule { highest_weight: hw.clone(), automorphism: aut.clone(), kind, truncation: trunc.clone(), order, spaces })
}

/// Support vectors that lie below some symmetric support vector.
fn oracle_region(aut: &DiagramAutomorphism, reference: &MultiplicityTable) -> Vec<RootVec> {
    let support: HashSet<&RootVec> = reference.entries.keys().collect();
    let mut seen: HashSet<RootVec> = HashSet::new();
    let mut stack: Vec<RootVec> = reference.entries.keys().filter(|k| aut.is_symmetric(k)).cloned().collect();
    for s in &stack {
        seen.insert(s.clone());
    }
    while let Some(v) = stack.pop() {
        for i in 0..v.len() {
            if let Some(w) = minus(&v, i) {
                if support.contains(&w) && seen.insert(w.clone()) {
                    stack.push(w);
                }
            }
        }
    }
    let mut out: Vec<RootVec> = seen.into_iter().collect();
    out.sort();
    out
}

fn gram_node<F: Field>(
    cm: &CartanMatrix,
    labels: &[F],
    nodes: &HashMap<RootVec, Node<F>>,
    beta: &RootVec,
) -> Result<Option<Node<F>>> {
    let n = cm.rank();
    let below: Vec<Option<&Node<F>>> = (0..n).map(|i| minus(beta, i).and_then(|p| nodes.get(&p))).collect();
    let mut cands: Vec<(usize, usize)> = Vec::new();
    let mut offset = vec![0; n];
    for i in 0..n {
        offset[i] = cands.len();
        if let Some(node) = below[i] {
            cands.extend((0..node.rank()).map(|b| (i, b)));
        }
    }
    if cands.is_empty() {
        return Ok(None);
    }
    // e_k(f_i u_b) = f_i(e_k u_b) + δ_ki μ(h_i) u_b, as vectors of L_{β−α_k}.
    let mut ecand: Vec<Option<Matrix<F>>> = vec![None; n];
    for k in 0..n {
        let Some(target) = below[k] else { continue };
        let mut m = Matrix::zeros(target.rank(), cands.len());
        for i in 0..n {
            let Some(src) = below[i] else { continue };
            if let (Some(ek), Some(fi)) = (&src.e[k], &target.f[i]) {
                let block = fi.mul(ek);
                for b in 0..src.rank() {
                    for r in 0..target.rank() {
                        m[(r, offset[i] + b)] = block[(r, b)].clone();
                    }
                }
            }
            if i == k {
                // μ = Λ − (β − αⁱ), μ(H^i) = Λ^i − Σ_m n_m A_{mi}
                let shift: i64 = (0..n).map(|mm| (beta[mm] - i64::from(mm == i)) * cm.entry(mm, i)).sum();
                let mu = labels[i].clone() - F::from_i64(shift);
                for b in 0..src.rank() {
                    let c = offset[i] + b;
                    m[(b, c)] = m[(b, c)].clone() + mu.clone();
                }
            }
        }
        ecand[k] = Some(m);
    }
    // ⟨f_i u_b, x⟩ = ⟨u_b, e_i x⟩
    let mut gram_rows: Vec<Vec<F>> = Vec::with_capacity(cands.len());
    for i in 0..n {
        let Some(src) = below[i] else { continue };
        let block = src.gram.mul(ecand[i].as_ref().expect("candidate source has e-block"));
        for b in 0..src.rank() {
            gram_rows.push(block.row(b).to_vec());
        }
    }
    let full = Matrix::from_rows(gram_rows);
    let chosen = full.independent_columns();
    if chosen.is_empty() {
        return Ok(None);
    }
    let gram = full.select(&chosen, &chosen);
    let ginv = gram.inverse().ok_or_else(|| Error::Inconsistent(format!("singular Gram block at {beta:?}")))?;
    let all_rows = |m: &Matrix<F>| (0..m.rows()).collect::<Vec<_>>();
    let e: Vec<Option<Matrix<F>>> = ecand.iter().map(|m| m.as_ref().map(|m| m.select(&all_rows(m), &chosen))).collect();
    // F_i = G_β⁻¹ E_iᵀ G_{β−αⁱ}
    let f: Vec<Option<Matrix<F>>> = (0..n)
        .map(|i| match (&e[i], below[i]) {
            (Some(ei), Some(src)) => Some(ginv.mul(&ei.transpose()).mul(&src.gram)),
            _ => None,
        })
        .collect();
    let basis: Vec<(usize, usize)> = chosen.iter().map(|&c| cands[c]).collect();
    let monomials = basis
        .iter()
        .map(|&(i, b)| {
            let mut w = below[i].expect("source node").monomials[b].clone();
            w.push(i);
            w
        })
        .collect();
    Ok(Some(Node { basis, monomials, gram, e, f }))
}

/// τ(f_i u_b) = f_{ωi} τ(u_b).
fn tau_node<F: Field>(
    aut: &DiagramAutomorphism,
    nodes: &HashMap<RootVec, Node<F>>,
    taus: &HashMap<RootVec, Matrix<F>>,
    beta: &RootVec,
) -> Result<Matrix<F>> {
    let node = &nodes[beta];
    let wb = rotate(aut, beta);
    let target = nodes.get(&wb).ok_or_else(|| Error::Inconsistent(format!("ω·β missing for {beta:?}")))?;
    let mut t = Matrix::zeros(target.rank(), node.rank());
    for (c, &(i, b)) in node.basis.iter().enumerate() {
        let prev = &taus[&minus(beta, i).expect("basis source")];
        let f = target.f[aut.apply(i)].as_ref().expect("lowering into ω·β");
        let col = f.mul_vec(&prev.column(b));
        for (r, v) in col.into_iter().enumerate() {
            t[(r, c)] = v;
        }
    }
    Ok(t)
}

/// E_{ωi}·τ = τ·E_i on every computed space.
fn check_twining_property<F: Field>(
    aut: &DiagramAutomorphism,
    nodes: &HashMap<RootVec, Node<F>>,
    taus: &HashMap<RootVec, Matrix<F>>,
) -> Result<()> {
    nodes.par_iter().try_for_each(|(beta, node)| {
        let wb = rotate(aut, beta);
        for i in 0..beta.len() {
            let (Some(ei), Some(low)) = (&node.e[i], minus(beta, i)) else { continue };
            let Some(t_low) = taus.get(&low) else { continue };
            let lhs = nodes[&wb].e[aut.apply(i)].as_ref().expect("mirrored e-block").mul(&taus[beta]);
            if lhs != t_low.mul(ei) {
                return Err(Error::Inconsistent(format!("twining property fails at {beta:?}, node {i}")));
            }
        }
        Ok(())
    })
}

/// Traces of τ_ω at the symmetric weights of the module.
pub fn twining_character_oracle<F: Field>(module: &OracleModule<F>) -> Result<TwiningTable> {
    let mut entries = BTreeMap::new();
    for (beta, space) in &module.spaces {
        if module.automorphism.is_symmetric(beta) {
            let t = space.tau.trace();
            let lifted: BigInt = t.to_integer().ok_or_else(|| Error::Inconsistent("trace not integral".into()))?;
            if lifted.abs() > BigInt::from(space.quotient_rank) {
                return Err(Error::Inconsistent(format!("trace {lifted} exceeds dimension at {beta:?}")));
            }
            let v: i64 = lifted.try_into().expect("bounded by dimension");
            if v != 0 {
                entries.insert(beta.clone(), Cyclotomic::from_int(v));
            }
        }
    }
    Ok(TwiningTable {
        highest_weight: module.highest_weight.clone(),
        truncation: module.truncation.clone(),
        kind: module.kind,
        order: module.order,
        entries,
    })
}

/// Oracle table in one call.
pub fn oracle_twining_table(
    cm: &CartanMatrix,
    aut: &DiagramAutomorphism,
    hw: &WeightCoords,
    trunc: &Truncation,
    kind: ModuleKind,
    arithmetic: Arithmetic,
) -> Result<TwiningTable> {
    match arithmetic {
        Arithmetic::Modular => twining_character_oracle(&build_oracle_module::<Fp>(cm, aut, hw, trunc, kind)?),
        Arithmetic::Exact => twining_character_oracle(&build_oracle_module::<Rational>(cm, aut, hw, trunc, kind)?),
    }
}

/// Truncation of the folded algebra matching `trunc` under P*_ω.
pub fn folded_truncation(fold: &FoldResult, trunc: &Truncation) -> Truncation {
    let od = &fold.orbit_data;
    let weights = od
        .orbits
        .iter()
        .enumerate()
        .map(|(a, o)| od.s[a] * o.iter().map(|&j| trunc.weights[j]).sum::<i64>())
        .collect();
    Truncation { weights, bound: trunc.bound }
}

/// Twining table from the ordinary table of the orbit Lie algebra.
pub fn twining_character_via_orbit(
    fold: &FoldResult,
    hw: &WeightCoords,
    trunc: &Truncation,
    kind: ModuleKind,
) -> Result<TwiningTable> {
    if !fold.orbit_data.linking_ok {
        let (orbit, s) = fold.orbit_data.s.iter().copied().enumerate().find(|(_, s)| *s > 2).unwrap_or((0, 0));
        return Err(Error::LinkingConditionViolated { orbit, s });
    }
    let folded_hw = fold.project_weight(hw)?;
    let ft = folded_truncation(fold, trunc);
    let table = match kind {
        ModuleKind::Irreducible => irreducible_multiplicities_truncated(&fold.folded, &folded_hw, &ft)?,
        ModuleKind::Verma => verma_multiplicities_truncated(&fold.folded, &folded_hw, &ft)?,
    };
    let entries = table
        .entries
        .iter()
        .map(|(nb, &m)| (fold.lift_root_vector(nb), Cyclotomic::from_int(m)))
        .collect();
    Ok(TwiningTable { highest_weight: hw.clone(), truncation: trunc.clone(), kind, order: fold.order(), entries })
}

/// Twining character for a rotation ω̇ of A_{N−1}^{(1)}: the single term
/// `e^{2πi t k}·q^{x}` with `x = Δ_Λ`, or the folded anomaly ŝ_Λ when
/// `modified` is set.
pub fn twining_rotation_special_case(
    cm: &CartanMatrix,
    aut: &DiagramAutomorphism,
    hw: &WeightCoords,
    t: &Rational,
    order: usize,
    modified: bool,
) -> Result<QSeries<Cyclotomic>> {
    if !is_rotation(cm, aut) {
        return Err(Error::NotRotation);
    }
    if !aut.is_symmetric(&hw.labels) {
        return Err(Error::NotSymmetricWeight);
    }
    if !hw.is_dominant_integral() {
        return Err(Error::NotDominantIntegral);
    }
    let k = cm.dual_level(hw)?;
    let delta = crate::affine::conformal_weight(cm, hw)?;
    let exponent = if modified { crate::affine::rotation_anomaly(cm, hw)? } else { delta };
    let lead = Cyclotomic::exp_2pi_i(&(t * &k));
    Ok(QSeries::monomial(exponent, lead, order))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::preset;
    use crate::fold::{fold, validate_automorphism};

    fn setup(name: &str, perm: &[usize]) -> (CartanMatrix, DiagramAutomorphism) {
        let cm = preset(name).unwrap();
        let aut = validate_automorphism(&cm, perm).unwrap();
        (cm, aut)
    }

    #[test]
    fn a2_flip_adjoint_oracle() {
        let (cm, aut) = setup("A2", &[1, 0]);
        let hw = WeightCoords::from_ints(&[1, 1]);
        let t = Truncation::height(2, 6);
        let module = build_oracle_module::<Rational>(&cm, &aut, &hw, &t, ModuleKind::Irreducible).unwrap();
        let dims: usize = module.spaces.values().map(|s| s.quotient_rank).sum();
        assert_eq!(dims, 8);
        assert_eq!(module.spaces[&vec![1, 1]].quotient_rank, 2);
        let table = oracle_twining_table(&cm, &aut, &hw, &t, ModuleKind::Irreducible, Arithmetic::Exact).unwrap();
        let expect: BTreeMap<RootVec, Cyclotomic> =
            [(vec![0, 0], Cyclotomic::one()), (vec![2, 2], Cyclotomic::one())].into_iter().collect();
        assert_eq!(table.entries, expect);
        let modular = oracle_twining_table(&cm, &aut, &hw, &t, ModuleKind::Irreducible, Arithmetic::Modular).unwrap();
        assert_eq!(modular, table);
        let f = fold(&cm, &aut).unwrap();
        let via = twining_character_via_orbit(&f, &hw, &t, ModuleKind::Irreducible).unwrap();
        assert!(via.diff(&table).is_empty());
    }

    #[test]
    fn identity_automorphism_gives_ordinary_table() {
        let cm = preset("A2").unwrap();
        let aut = DiagramAutomorphism::identity(2);
        let hw = WeightCoords::from_ints(&[2, 1]);
        let t = Truncation::height(2, 8);
        let table = oracle_twining_table(&cm, &aut, &hw, &t, ModuleKind::Irreducible, Arithmetic::Modular).unwrap();
        let ordinary = irreducible_multiplicities_truncated(&cm, &hw, &t).unwrap();
        assert_eq!(table.entries.len(), ordinary.entries.len());
        for (k, &m) in &ordinary.entries {
            assert_eq!(table.get(k), Cyclotomic::from_int(m));
        }
    }

    #[test]
    fn verma_twining_matches_folded_kostant() {
        let (cm, aut) = setup("A3", &[2, 1, 0]);
        let hw = WeightCoords::from_ints(&[1, 0, 1]);
        let t = Truncation::height(3, 6);
        let table = oracle_twining_table(&cm, &aut, &hw, &t, ModuleKind::Verma, Arithmetic::Modular).unwrap();
        let f = fold(&cm, &aut).unwrap();
        let via = twining_character_via_orbit(&f, &hw, &t, ModuleKind::Verma).unwrap();
        assert!(table.diff(&via).is_empty(), "{:?}", table.diff(&via));
    }

    #[test]
    fn rejects_asymmetric_weight() {
        let (cm, aut) = setup("A2", &[1, 0]);
        let r = oracle_twining_table(
            &cm,
            &aut,
            &WeightCoords::from_ints(&[1, 0]),
            &Truncation::height(2, 3),
            ModuleKind::Irreducible,
            Arithmetic::Modular,
        );
        assert!(matches!(r, Err(Error::NotSymmetricWeight)));
    }
}
