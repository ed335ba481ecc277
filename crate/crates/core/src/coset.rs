//! Diagonal cosets (ĝ_{k₁} ⊕ ĝ_{k₂}) / ĝ_{k₁+k₂}: branching functions,
//! field identification, fixed points and their resolution.
//!
//! Triples (Λ₁, Λ₂; Λ′) are index triples into the three level sets, which
//! are ordered by horizontal labels, so index order is the lexicographic
//! order of horizontal labels and the vacuum comes first.

use crate::affine::{
    central_charge, conformal_weight, kac_peterson, modular_residuals, monodromy_charge, simple_currents,
    AffineWeightSet, CMatrix, ModularData, ModularResiduals, SimpleCurrent,
};
use crate::cartan::{weight_inner_product, CartanMatrix, Kind, WeightCoords};
use crate::catalog::affinize;
use crate::characters::{irreducible_multiplicities_truncated, Truncation};
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::field::{frac, qi, to_i64, Rational};
use crate::fold::{fold, is_rotation, DiagramAutomorphism, FoldResult};
use crate::qseries::QSeries;
use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use std::collections::{BTreeMap, HashMap};

/// Index triple into the level sets of the two numerator factors and the
/// denominator.
pub type Triple = [usize; 3];

#[derive(Clone, Debug)]
pub struct CosetSpec {
    pub h: CartanMatrix,
    pub affine: CartanMatrix,
    pub levels: (i64, i64),
    pub level_sum: i64,
    /// Level sets for k₁, k₂ and k₁+k₂.
    pub sets: [AffineWeightSet; 3],
    /// ċ = c₁ + c₂ − c′.
    pub central_charge: Rational,
}

impl CosetSpec {
    pub fn weights(&self, t: &Triple) -> [&WeightCoords; 3] {
        [&self.sets[0].weights[t[0]], &self.sets[1].weights[t[1]], &self.sets[2].weights[t[2]]]
    }

    /// Δ₁ + Δ₂ − Δ′.
    pub fn delta_combination(&self, t: &Triple) -> Result<Rational> {
        let [a, b, c] = self.weights(t);
        Ok(conformal_weight(&self.affine, a)? + conformal_weight(&self.affine, b)?
            - conformal_weight(&self.affine, c)?)
    }

    /// Leading exponent frame Δ₁ + Δ₂ − Δ′ − ċ/24 of a branching function.
    pub fn exponent_frame(&self, t: &Triple) -> Result<Rational> {
        Ok(self.delta_combination(t)? - &self.central_charge / qi(24))
    }

    pub fn triples(&self) -> Vec<Triple> {
        let mut out = Vec::new();
        for a in 0..self.sets[0].len() {
            for b in 0..self.sets[1].len() {
                for c in 0..self.sets[2].len() {
                    out.push([a, b, c]);
                }
            }
        }
        out
    }

    /// Horizontal labels of the three weights, for display.
    pub fn labels(&self, t: &Triple) -> [Vec<i64>; 3] {
        let z = self.affine.affine_node().expect("affine");
        self.weights(t).map(|w| {
            w.int_labels().expect("integral").into_iter().enumerate().filter(|(i, _)| *i != z).map(|(_, v)| v).collect()
        })
    }
}

pub fn build_coset(h: &CartanMatrix, k1: i64, k2: i64) -> Result<CosetSpec> {
    if h.kind() != Kind::Finite {
        return Err(Error::UnsupportedAlgebra("coset base must be finite simple".into()));
    }
    if k1 < 1 || k2 < 1 {
        return Err(Error::UnsupportedAlgebra("coset levels must be positive".into()));
    }
    let affine = affinize(h)?;
    let sets = [
        AffineWeightSet::new(&affine, k1)?,
        AffineWeightSet::new(&affine, k2)?,
        AffineWeightSet::new(&affine, k1 + k2)?,
    ];
    let c = central_charge(&affine, &qi(k1))? + central_charge(&affine, &qi(k2))?
        - central_charge(&affine, &qi(k1 + k2))?;
    Ok(CosetSpec { h: h.clone(), affine, levels: (k1, k2), level_sum: k1 + k2, sets, central_charge: c })
}

/// Characters keyed by (horizontal labels, grade).
type GradedTable = HashMap<(Vec<i64>, i64), i64>;

fn graded_table(cm: &CartanMatrix, hw: &WeightCoords, max_grade: usize) -> Result<GradedTable> {
    let z = cm.affine_node().ok_or(Error::NotAffine)?;
    let t = irreducible_multiplicities_truncated(cm, hw, &Truncation::grade(cm, max_grade)?)?;
    let mut out = GradedTable::new();
    for (n, &m) in &t.entries {
        let w = t.weight(cm, n);
        let g = to_i64(&cm.grade_of(n)).ok_or_else(|| Error::UnsupportedAlgebra("fractional grades".into()))?;
        let labels: Vec<i64> = w.int_labels().expect("integral weight").into_iter().enumerate().filter(|(i, _)| *i != z).map(|(_, v)| v).collect();
        *out.entry((labels, g)).or_insert(0) += m;
    }
    Ok(out)
}

/// Branching coefficients of L(Λ₁)⊗L(Λ₂) into L(Λ′) for every Λ′ of
/// `targets`, for relative grades `0..order`, by stripping highest weights.
fn branch_pair(
    cm: &CartanMatrix,
    t1: &GradedTable,
    t2: &GradedTable,
    targets: &[WeightCoords],
    target_tables: &[GradedTable],
    order: usize,
) -> Result<Vec<Vec<i64>>> {
    let z = cm.affine_node().ok_or(Error::NotAffine)?;
    let (h, _) = cm.horizontal()?;
    let rho = h.rho();
    let mut product: HashMap<(Vec<i64>, i64), i64> = HashMap::new();
    for ((l1, g1), m1) in t1 {
        for ((l2, g2), m2) in t2 {
            let g = g1 + g2;
            if g < order as i64 {
                let l: Vec<i64> = l1.iter().zip(l2).map(|(a, b)| a + b).collect();
                *product.entry((l, g)).or_insert(0) += m1 * m2;
            }
        }
    }
    product.retain(|_, v| *v != 0);
    let index: HashMap<Vec<i64>, usize> = targets
        .iter()
        .enumerate()
        .map(|(i, w)| {
            let l = w.int_labels().expect("integral");
            ((0..l.len()).filter(|&j| j != z).map(|j| l[j]).collect(), i)
        })
        .collect();
    let height = |l: &[i64]| weight_inner_product(&h, &WeightCoords::from_ints(l), &rho).expect("finite form");
    let mut coeffs = vec![vec![0i64; order]; targets.len()];
    while let Some(g) = product.keys().map(|k| k.1).min() {
        let top = product
            .keys()
            .filter(|k| k.1 == g)
            .max_by(|a, b| height(&a.0).cmp(&height(&b.0)).then_with(|| a.0.cmp(&b.0)))
            .expect("nonempty grade")
            .clone();
        let m = product[&top];
        if m < 0 {
            return Err(Error::NegativeMultiplicity(format!("{:?} at grade {g}", top.0)));
        }
        let &t = index
            .get(&top.0)
            .ok_or_else(|| Error::Inconsistent(format!("stripped weight {:?} is not integrable", top.0)))?;
        coeffs[t][g as usize] += m;
        for ((l, gg), mult) in &target_tables[t] {
            let shifted = gg + g;
            if shifted < order as i64 {
                let key = (l.clone(), shifted);
                let e = product.entry(key.clone()).or_insert(0);
                *e -= m * mult;
                if *e == 0 {
                    product.remove(&key);
                }
            }
        }
    }
    Ok(coeffs)
}

/// All branching functions of the coset in the modified convention, for
/// relative grades `0..order`.
pub fn branching_functions(spec: &CosetSpec, order: usize) -> Result<BTreeMap<Triple, QSeries<i64>>> {
    branching_over(&spec.affine, [&spec.sets[0].weights, &spec.sets[1].weights, &spec.sets[2].weights], order)?
        .into_iter()
        .map(|(t, coeffs)| Ok((t, QSeries::new(spec.exponent_frame(&t)?, coeffs))))
        .collect()
}

fn branching_over(
    cm: &CartanMatrix,
    sets: [&[WeightCoords]; 3],
    order: usize,
) -> Result<BTreeMap<Triple, Vec<i64>>> {
    if order == 0 {
        return Err(Error::DepthInsufficient { grade: 0 });
    }
    let max = order - 1;
    let tables: Vec<Vec<GradedTable>> = sets
        .iter()
        .map(|s| s.par_iter().map(|w| graded_table(cm, w, max)).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;
    let pairs: Vec<(usize, usize)> =
        (0..sets[0].len()).flat_map(|a| (0..sets[1].len()).map(move |b| (a, b))).collect();
    let rows: Vec<((usize, usize), Vec<Vec<i64>>)> = pairs
        .par_iter()
        .map(|&(a, b)| Ok(((a, b), branch_pair(cm, &tables[0][a], &tables[1][b], sets[2], &tables[2], order)?)))
        .collect::<Result<_>>()?;
    let mut out = BTreeMap::new();
    for ((a, b), coeffs) in rows {
        for (c, row) in coeffs.into_iter().enumerate() {
            out.insert([a, b, c], row);
        }
    }
    Ok(out)
}

/// The identification group: simple currents of ĝ acting diagonally.
#[derive(Clone, Debug)]
pub struct IdentificationGroup {
    pub elements: Vec<DiagramAutomorphism>,
    /// The currents at levels k₁, k₂, k₁+k₂, aligned with `elements`.
    pub currents: [Vec<SimpleCurrent>; 3],
}

impl IdentificationGroup {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn act(&self, spec: &CosetSpec, g: usize, t: &Triple) -> Triple {
        let mut out = [0; 3];
        for f in 0..3 {
            let img = self.elements[g].act_on_weight(&spec.sets[f].weights[t[f]]);
            out[f] = spec.sets[f].index_of(&img).expect("currents preserve the level");
        }
        out
    }

    /// Q₁(Λ₁) + Q₂(Λ₂) − Q′(Λ′) mod 1 for element `g`.
    pub fn charge(&self, spec: &CosetSpec, g: usize, t: &Triple) -> Result<Rational> {
        let [a, b, c] = spec.weights(t);
        let q = monodromy_charge(&spec.sets[0], &self.currents[0][g], a)?
            + monodromy_charge(&spec.sets[1], &self.currents[1][g], b)?
            - monodromy_charge(&spec.sets[2], &self.currents[2][g], c)?;
        Ok(frac(&q))
    }

    pub fn position(&self, aut: &DiagramAutomorphism) -> Option<usize> {
        self.elements.iter().position(|e| e == aut)
    }
}

pub fn identification_group(spec: &CosetSpec) -> Result<IdentificationGroup> {
    let currents = [
        simple_currents(&spec.sets[0])?,
        simple_currents(&spec.sets[1])?,
        simple_currents(&spec.sets[2])?,
    ];
    let elements: Vec<DiagramAutomorphism> = currents[2].iter().map(|c| c.automorphism.clone()).collect();
    for c in &currents[..2] {
        let auts: Vec<&DiagramAutomorphism> = c.iter().map(|x| &x.automorphism).collect();
        if auts != elements.iter().collect::<Vec<_>>() {
            return Err(Error::Inconsistent("current groups differ between levels".into()));
        }
    }
    Ok(IdentificationGroup { elements, currents })
}

#[derive(Clone, Debug, PartialEq)]
pub struct FieldOrbit {
    pub representative: Triple,
    pub members: Vec<Triple>,
    /// Stabilizer listed as powers g⁰, g¹, … of a generator (group indices).
    pub stabilizer: Vec<usize>,
}

impl FieldOrbit {
    pub fn stabilizer_order(&self) -> usize {
        self.stabilizer.len()
    }

    /// Ψ_k(ω) = ζ_n^{km} for ω = g^m; `None` outside the stabilizer.
    pub fn character(&self, k: usize, element: usize) -> Option<Cyclotomic> {
        let n = self.stabilizer.len();
        let m = self.stabilizer.iter().position(|&e| e == element)?;
        Some(Cyclotomic::zeta_pow(n as u32, (k * m) as i64))
    }
}

/// Applies the selection rule and partitions the survivors into orbits.
pub fn selection_and_orbits(spec: &CosetSpec, group: &IdentificationGroup) -> Result<Vec<FieldOrbit>> {
    let mut survivors = Vec::new();
    for t in spec.triples() {
        let mut ok = true;
        for g in 0..group.len() {
            if !group.charge(spec, g, &t)?.is_zero() {
                ok = false;
                break;
            }
        }
        if ok {
            survivors.push(t);
        }
    }
    let mut assigned: HashMap<Triple, usize> = HashMap::new();
    let mut orbits = Vec::new();
    for t in survivors {
        if assigned.contains_key(&t) {
            continue;
        }
        let mut members: Vec<Triple> = (0..group.len()).map(|g| group.act(spec, g, &t)).collect();
        members.sort();
        members.dedup();
        let fixing: Vec<usize> = (0..group.len()).filter(|&g| group.act(spec, g, &t) == t).collect();
        if members.len() * fixing.len() != group.len() {
            return Err(Error::Inconsistent("orbit-stabilizer count".into()));
        }
        let stabilizer = cyclic_listing(group, &fixing)?;
        for m in &members {
            assigned.insert(*m, orbits.len());
        }
        orbits.push(FieldOrbit { representative: members[0], members, stabilizer });
    }
    Ok(orbits)
}

/// Orders a cyclic subgroup as powers of a generator.
fn cyclic_listing(group: &IdentificationGroup, elements: &[usize]) -> Result<Vec<usize>> {
    let n = elements.len();
    for &g in elements {
        let mut list = vec![];
        let mut cur = DiagramAutomorphism::identity(group.elements[g].perm().len());
        for _ in 0..n {
            list.push(group.position(&cur).expect("closed subgroup"));
            cur = group.elements[g].compose(&cur);
        }
        let mut sorted = list.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() == n {
            return Ok(list);
        }
    }
    Err(Error::UnsupportedAlgebra("non-cyclic stabilizer".into()))
}

/// Twined branching function b^{[ω]} at a fixed point, in the same exponent
/// frame as the ordinary branching function.
pub fn twining_branching(
    spec: &CosetSpec,
    group: &IdentificationGroup,
    t: &Triple,
    element: usize,
    order: usize,
) -> Result<QSeries<Cyclotomic>> {
    let aut = &group.elements[element];
    if group.act(spec, element, t) != *t {
        return Err(Error::NotFixedPoint);
    }
    let frame = spec.exponent_frame(t)?;
    let [a, b, c] = spec.weights(t);
    if aut.is_identity() {
        let one = std::slice::from_ref;
        let b = branching_over(&spec.affine, [one(a), one(b), one(c)], order)?;
        return Ok(QSeries::new(frame, b[&[0, 0, 0]].iter().map(|&v| Cyclotomic::from_int(v)).collect()));
    }
    if is_rotation(&spec.affine, aut) {
        // Each twined factor character is the single term of its highest
        // weight; the unique symmetric Λ′ at level k₁+k₂ carries it.
        let lead = if a.add(b).labels == c.labels { Cyclotomic::one() } else { Cyclotomic::zero() };
        return Ok(QSeries::monomial(frame, lead, order));
    }
    let f = fold(&spec.affine, aut)?;
    let folded = folded_affine(&f)?;
    // Folded integrable weights at the denominator level are exactly the
    // projections of the symmetric ones.
    let targets: Vec<WeightCoords> = spec.sets[2]
        .weights
        .iter()
        .filter(|w| aut.is_symmetric(&w.labels))
        .map(|w| f.project_weight(w))
        .collect::<Result<_>>()?;
    let target = f.project_weight(c)?;
    let at = targets.iter().position(|w| w.labels == target.labels).expect("fixed weight is symmetric");
    let (pa, pb) = (f.project_weight(a)?, f.project_weight(b)?);
    let one = std::slice::from_ref;
    let coeffs = branching_over(&folded, [one(&pa), one(&pb), &targets], order)?;
    Ok(QSeries::new(frame, coeffs[&[0, 0, at]].iter().map(|&v| Cyclotomic::from_int(v)).collect()))
}

fn folded_affine(f: &FoldResult) -> Result<CartanMatrix> {
    if !f.folded.is_affine() {
        return Err(Error::NotAffine);
    }
    Ok(f.folded.clone())
}

#[derive(Clone, Debug)]
pub struct ResolvedField {
    pub orbit: usize,
    /// Stabilizer character index k of Ψ_k.
    pub psi: usize,
    pub character: QSeries<i64>,
    /// Exponent of the first nonzero coefficient.
    pub leading_exponent: Option<Rational>,
    /// Δ̇ = leading exponent + ċ/24.
    pub conformal_weight: Option<Rational>,
}

#[derive(Clone, Debug)]
pub struct ResolvedSpectrum {
    pub orbits: Vec<FieldOrbit>,
    pub fields: Vec<ResolvedField>,
}

/// b^{(Ψ_k)} = (1/n) Σ_m ζ^{−km} b^{[g^m]} for every orbit and character.
pub fn resolve(
    spec: &CosetSpec,
    group: &IdentificationGroup,
    orbits: &[FieldOrbit],
    branchings: &BTreeMap<Triple, QSeries<i64>>,
    order: usize,
) -> Result<ResolvedSpectrum> {
    let mut fields = Vec::new();
    for (o, orbit) in orbits.iter().enumerate() {
        let t = orbit.representative;
        let b = branchings.get(&t).ok_or_else(|| Error::Inconsistent("missing branching function".into()))?;
        let n = orbit.stabilizer_order();
        let twined: Vec<QSeries<Cyclotomic>> = orbit
            .stabilizer
            .iter()
            .map(|&g| {
                if group.elements[g].is_identity() {
                    Ok(b.map(|&v| Cyclotomic::from_int(v)))
                } else {
                    twining_branching(spec, group, &t, g, order)
                }
            })
            .collect::<Result<_>>()?;
        for k in 0..n {
            let mut acc = vec![Cyclotomic::zero(); order];
            for (m, series) in twined.iter().enumerate() {
                let psi_bar = Cyclotomic::zeta_pow(n as u32, -((k * m) as i64));
                for (i, c) in series.coefficients.iter().enumerate().take(order) {
                    acc[i] = &acc[i] + &(&psi_bar * c);
                }
            }
            let inv = Rational::new(1.into(), (n as i64).into());
            let coeffs: Vec<i64> = acc
                .iter()
                .map(|c| {
                    c.scale(&inv)
                        .to_rational()
                        .and_then(|r| to_i64(&r))
                        .filter(|v| *v >= 0)
                        .ok_or(Error::NonIntegralResolution)
                })
                .collect::<Result<_>>()?;
            let character = QSeries::new(b.leading_exponent.clone(), coeffs);
            let leading_exponent = character.valuation();
            let conformal_weight = leading_exponent.as_ref().map(|e| e + &spec.central_charge / qi(24));
            fields.push(ResolvedField { orbit: o, psi: k, character, leading_exponent, conformal_weight });
        }
    }
    Ok(ResolvedSpectrum { orbits: orbits.to_vec(), fields })
}

#[derive(Clone, Debug)]
pub struct ResolvedModular {
    pub s: CMatrix,
    pub t: Vec<Complex64>,
}

impl ResolvedModular {
    pub fn residuals(&self) -> ModularResiduals {
        modular_residuals(&self.s, &self.t)
    }
}

/// Factor S-matrices S₁, S₂ and S′.
pub fn factor_modular(spec: &CosetSpec) -> Result<[ModularData; 3]> {
    Ok([kac_peterson(&spec.sets[0])?, kac_peterson(&spec.sets[1])?, kac_peterson(&spec.sets[2])?])
}

/// S^{[id]} between two triples: S₁·S₂·(S′)*.
pub fn untwined_s(factors: &[ModularData; 3], a: &Triple, b: &Triple) -> Complex64 {
    factors[0].s[a[0]][b[0]] * factors[1].s[a[1]][b[1]] * factors[2].s[a[2]][b[2]].conj()
}

/// Resolved 𝒮 and 𝒯. The twined blocks S^{[ω]} for rotations are one-
/// dimensional per factor and taken as 1.
pub fn resolved_modular(
    spec: &CosetSpec,
    group: &IdentificationGroup,
    spectrum: &ResolvedSpectrum,
) -> Result<ResolvedModular> {
    let factors = factor_modular(spec)?;
    let orbits = &spectrum.orbits;
    for o in orbits {
        for &g in &o.stabilizer {
            let aut = &group.elements[g];
            if !aut.is_identity() && !is_rotation(&spec.affine, aut) {
                return Err(Error::UnsupportedAlgebra("twined S-matrix of a twisted orbit algebra".into()));
            }
        }
    }
    let total = group.len() as f64;
    let fields = &spectrum.fields;
    let n = fields.len();
    let mut s = vec![vec![Complex64::new(0.0, 0.0); n]; n];
    for (i, fa) in fields.iter().enumerate() {
        for (j, fb) in fields.iter().enumerate() {
            let (oa, ob) = (&orbits[fa.orbit], &orbits[fb.orbit]);
            let prefactor = total / (oa.stabilizer_order() * ob.stabilizer_order()) as f64;
            let mut acc = Complex64::new(0.0, 0.0);
            for &g in &oa.stabilizer {
                let Some(psi_b) = ob.character(fb.psi, g) else { continue };
                let psi_a = oa.character(fa.psi, g).expect("element of own stabilizer");
                let block = if group.elements[g].is_identity() {
                    untwined_s(&factors, &oa.representative, &ob.representative)
                } else {
                    Complex64::new(1.0, 0.0)
                };
                acc += psi_a.conj().to_complex() * block * psi_b.to_complex();
            }
            s[i][j] = prefactor * acc;
        }
    }
    let t = fields
        .iter()
        .map(|f| {
            let x = spec.exponent_frame(&orbits[f.orbit].representative)?;
            Ok(Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * frac(&x).to_f64().expect("finite")))
        })
        .collect::<Result<_>>()?;
    Ok(ResolvedModular { s, t })
}

#[derive(Clone, Debug)]
pub struct VerlindeReport {
    /// N_{ij}^k rounded to the nearest integer.
    pub fusion: Vec<Vec<Vec<i64>>>,
    pub max_deviation: f64,
    pub negative: bool,
}

impl VerlindeReport {
    pub fn ok(&self, tolerance: f64) -> bool {
        self.max_deviation <= tolerance && !self.negative
    }
}

/// N_{ij}^k = Σ_m S_im S_jm S*_km / S_0m, with row 0 the vacuum.
pub fn verlinde_check(s: &CMatrix) -> VerlindeReport {
    let n = s.len();
    let mut fusion = vec![vec![vec![0i64; n]; n]; n];
    let mut max_deviation: f64 = 0.0;
    let mut negative = false;
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let v: Complex64 = (0..n).map(|m| s[i][m] * s[j][m] * s[k][m].conj() / s[0][m]).sum();
                let r = v.re.round();
                max_deviation = max_deviation.max((v - Complex64::new(r, 0.0)).norm());
                if r < 0.0 {
                    negative = true;
                }
                fusion[i][j][k] = r as i64;
            }
        }
    }
    VerlindeReport { fusion, max_deviation, negative }
}
