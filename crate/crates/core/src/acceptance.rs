//! End-to-end acceptance suite: named fixture algebras and the nine checks
//! run by `orbitfold check` and the `acceptance` test target.
//!
//! Every check records boolean failures and floating-point measurements
//! separately, so a report can tell whether a failure is caused only by a
//! tolerance tighter than the default.

use crate::affine::{check_cd2, kac_peterson, AffineWeightSet};
use crate::cartan::{CartanMatrix, WeightCoords};
use crate::catalog::preset;
use crate::characters::{irreducible_multiplicities_truncated, verma_multiplicities_truncated, Truncation};
use crate::coset::{
    branching_functions, build_coset, identification_group, resolve, resolved_modular, selection_and_orbits,
    twining_branching, untwined_s, factor_modular, verlinde_check,
};
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::field::{q, qi, Rational};
use crate::fold::{fold, omega_star, validate_automorphism, FoldResult};
use crate::twining::{
    oracle_twining_table, twining_character_via_orbit, twining_rotation_special_case, Arithmetic, ModuleKind,
    TwiningTable,
};
use crate::weyl::{coxeter_relation_check, hat_reflection, hat_reflection_formula, reflect};
use num_complex::Complex64;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

/// Number of criteria in the suite.
pub const CRITERIA: usize = 9;

/// Fixture algebras used by the suite, by name.
pub const FIXTURE_NAMES: &[&str] = &["A1", "A2", "A3", "D4", "A1aff", "A2aff", "A3aff", "C4aff"];

/// Floating-point tolerances of the suite.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tolerances {
    /// S-matrix symmetry, unitarity and SL(2,ℤ) residuals.
    pub unitary: f64,
    /// Distance of Verlinde fusion coefficients from integers.
    pub verlinde: f64,
    /// Entrywise match of S(A₁, k=1) with its closed form.
    pub closed_form: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances { unitary: 1e-9, verlinde: 1e-6, closed_form: 1e-12 }
    }
}

impl Tolerances {
    pub fn uniform(t: f64) -> Self {
        Tolerances { unitary: t, verlinde: t, closed_form: t }
    }
}

/// Named Cartan matrices; entries can be overridden to test error paths.
#[derive(Clone, Debug, PartialEq)]
pub struct Fixtures {
    pub algebras: BTreeMap<String, Vec<Vec<i64>>>,
}

impl Default for Fixtures {
    fn default() -> Self {
        let algebras = FIXTURE_NAMES
            .iter()
            .map(|&n| (n.to_string(), preset(n).expect("catalog fixture").entries().to_vec()))
            .collect();
        Fixtures { algebras }
    }
}

impl Fixtures {
    /// Validated fixture; errors carry the fixture name.
    pub fn algebra(&self, name: &str) -> Result<CartanMatrix> {
        let wrap = |e: Error| Error::Fixture { name: name.to_string(), source: Box::new(e) };
        let rows = self.algebras.get(name).ok_or_else(|| wrap(Error::UnknownPreset(name.to_string())))?;
        let cm = CartanMatrix::new(rows.clone()).map_err(wrap)?;
        // keep the catalog's node convention when the entries are unchanged
        match preset(name) {
            Ok(p) if p.entries() == cm.entries() => Ok(p),
            _ => Ok(cm.with_name(name)),
        }
    }

    fn fold(&self, name: &str, perm: &[usize]) -> Result<FoldResult> {
        let cm = self.algebra(name)?;
        let wrap = |e: Error| Error::Fixture { name: name.to_string(), source: Box::new(e) };
        let aut = validate_automorphism(&cm, perm).map_err(wrap)?;
        fold(&cm, &aut).map_err(wrap)
    }
}

/// A floating-point quantity compared against a tolerance.
#[derive(Clone, Debug, PartialEq)]
pub struct Measurement {
    pub label: String,
    pub value: f64,
    pub tolerance: f64,
    pub default_tolerance: f64,
}

impl Measurement {
    pub fn ok(&self) -> bool {
        self.value <= self.tolerance
    }
}

#[derive(Clone, Debug)]
pub struct CriterionReport {
    pub id: usize,
    pub title: &'static str,
    pub elapsed: Duration,
    pub budget: Duration,
    /// Exact checks that did not hold.
    pub failures: Vec<String>,
    pub measurements: Vec<Measurement>,
    /// Error that aborted the check.
    pub error: Option<Error>,
}

impl CriterionReport {
    pub fn within_budget(&self) -> bool {
        self.elapsed <= self.budget
    }

    pub fn passed(&self) -> bool {
        self.error.is_none() && self.failures.is_empty() && self.measurements.iter().all(Measurement::ok)
            && self.within_budget()
    }

    /// Failed only because a tolerance is tighter than its default.
    pub fn tolerance_induced(&self) -> bool {
        let failing: Vec<&Measurement> = self.measurements.iter().filter(|m| !m.ok()).collect();
        self.error.is_none()
            && self.failures.is_empty()
            && self.within_budget()
            && !failing.is_empty()
            && failing.iter().all(|m| m.value <= m.default_tolerance)
    }

    /// One-line summary.
    pub fn line(&self) -> String {
        let status = if self.passed() {
            "PASS"
        } else if self.tolerance_induced() {
            "FAIL (tolerance-induced)"
        } else {
            "FAIL"
        };
        format!(
            "criterion {} [{}]: {} ({:.2} s, budget {} s)",
            self.id,
            self.title,
            status,
            self.elapsed.as_secs_f64(),
            self.budget.as_secs()
        )
    }
}

struct Ctx<'a> {
    fixtures: &'a Fixtures,
    tol: Tolerances,
    failures: Vec<String>,
    measurements: Vec<Measurement>,
}

impl Ctx<'_> {
    fn require(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(what());
        }
    }

    fn measure(&mut self, label: impl Into<String>, value: f64, tolerance: f64, default_tolerance: f64) {
        self.measurements.push(Measurement { label: label.into(), value, tolerance, default_tolerance });
    }
}

fn title(id: usize) -> &'static str {
    match id {
        1 => "folding fixtures",
        2 => "twining characters = orbit-algebra characters",
        3 => "rotation special case",
        4 => "Weyl group embedding",
        5 => "affine relations",
        6 => "modular data",
        7 => "coset without fixed points",
        8 => "coset with fixed point",
        9 => "twining-table support and bounds",
        _ => "unknown",
    }
}

fn budget(id: usize) -> Duration {
    Duration::from_secs(match id {
        1 => 1,
        2 => 300,
        3 => 120,
        4 => 10,
        5 => 5,
        6 => 5,
        7 => 30,
        8 => 120,
        _ => 300,
    })
}

/// Runs one criterion (1-based).
pub fn run_criterion(id: usize, fixtures: &Fixtures, tol: Tolerances) -> CriterionReport {
    let mut ctx = Ctx { fixtures, tol, failures: Vec::new(), measurements: Vec::new() };
    let start = Instant::now();
    let outcome = match id {
        1 => folding_fixtures(&mut ctx),
        2 => main_theorem(&mut ctx),
        3 => rotation_case(&mut ctx),
        4 => weyl_embedding(&mut ctx),
        5 => affine_relations(&mut ctx),
        6 => modular_data(&mut ctx),
        7 => coset_without_fixed_points(&mut ctx),
        8 => coset_with_fixed_point(&mut ctx),
        9 => table_properties(&mut ctx),
        _ => Err(Error::InvalidIndex { index: id, rank: CRITERIA }),
    };
    CriterionReport {
        id,
        title: title(id),
        elapsed: start.elapsed(),
        budget: budget(id),
        failures: ctx.failures,
        measurements: ctx.measurements,
        error: outcome.err(),
    }
}

/// Runs all criteria in order.
pub fn run_all(fixtures: &Fixtures, tol: Tolerances) -> Vec<CriterionReport> {
    (1..=CRITERIA).map(|id| run_criterion(id, fixtures, tol)).collect()
}

/// Folding fixtures as (algebra, automorphism, expected folded matrix).
pub fn folding_fixtures_table() -> Vec<(&'static str, Vec<usize>, Vec<Vec<i64>>)> {
    vec![
        ("A3", vec![2, 1, 0], vec![vec![2, -2], vec![-1, 2]]),
        ("D4", vec![2, 1, 3, 0], vec![vec![2, -3], vec![-1, 2]]),
        ("A2", vec![1, 0], vec![vec![2]]),
        ("A3aff", vec![2, 3, 0, 1], vec![vec![2, -2], vec![-2, 2]]),
        ("C4aff", vec![4, 3, 2, 1, 0], vec![vec![2, -2, 0], vec![-1, 2, -2], vec![0, -1, 2]]),
    ]
}

fn folding_fixtures(ctx: &mut Ctx) -> Result<()> {
    for (name, perm, expected) in folding_fixtures_table() {
        let f = ctx.fixtures.fold(name, &perm)?;
        ctx.require(f.folded.entries() == expected.as_slice(), || {
            format!("{name} {perm:?}: folded to {:?}, expected {expected:?}", f.folded.entries())
        });
    }
    Ok(())
}

/// A twining fixture: algebra, automorphism, highest weight, truncation.
#[derive(Clone)]
struct TwiningFixture {
    name: &'static str,
    perm: Vec<usize>,
    hw: Vec<i64>,
    truncation: Truncation,
}

fn twining_fixtures(fixtures: &Fixtures) -> Result<Vec<TwiningFixture>> {
    let a3aff = fixtures.algebra("A3aff")?;
    let grade4 = Truncation::grade(&a3aff, 4).map_err(|e| Error::Fixture { name: "A3aff".into(), source: Box::new(e) })?;
    let finite = |name: &'static str, perm: Vec<usize>, hw: Vec<i64>| TwiningFixture {
        name,
        truncation: Truncation::height(hw.len(), 6),
        perm,
        hw,
    };
    Ok(vec![
        finite("A2", vec![1, 0], vec![1, 1]),
        finite("A3", vec![2, 1, 0], vec![1, 0, 1]),
        finite("D4", vec![2, 1, 3, 0], vec![0, 1, 0, 0]),
        TwiningFixture { name: "A3aff", perm: vec![2, 3, 0, 1], hw: vec![1, 0, 1, 0], truncation: grade4.clone() },
        TwiningFixture { name: "A3aff", perm: vec![2, 3, 0, 1], hw: vec![0, 1, 0, 1], truncation: grade4 },
    ])
}

/// Module kinds checked on a fixture: affine Verma modules have infinite
/// weight spaces below any grade, so they are cut by height instead.
fn variants(fx: &TwiningFixture) -> Vec<(ModuleKind, Truncation)> {
    let verma = if fx.truncation.is_bounded() {
        fx.truncation.clone()
    } else {
        Truncation::height(fx.hw.len(), 8)
    };
    vec![(ModuleKind::Irreducible, fx.truncation.clone()), (ModuleKind::Verma, verma)]
}

/// Oracle and orbit-route tables for every fixture and module kind.
fn twining_tables(ctx: &mut Ctx) -> Result<Vec<(TwiningFixture, FoldResult, ModuleKind, TwiningTable, TwiningTable)>> {
    let mut out = Vec::new();
    for fx in twining_fixtures(ctx.fixtures)? {
        let f = ctx.fixtures.fold(fx.name, &fx.perm)?;
        let hw = WeightCoords::from_ints(&fx.hw);
        for (kind, truncation) in variants(&fx) {
            let oracle = oracle_twining_table(&f.source, &f.automorphism, &hw, &truncation, kind, Arithmetic::Modular)?;
            let via = twining_character_via_orbit(&f, &hw, &truncation, kind)?;
            out.push((TwiningFixture { truncation, ..fx.clone() }, f.clone(), kind, oracle, via));
        }
    }
    Ok(out)
}

fn main_theorem(ctx: &mut Ctx) -> Result<()> {
    for (fx, _, kind, oracle, via) in twining_tables(ctx)? {
        let diff = oracle.diff(&via);
        ctx.require(diff.is_empty(), || format!("{} {:?} Λ={:?} {kind:?}: {} entries differ", fx.name, fx.perm, fx.hw, diff.len()));
        ctx.require(!oracle.entries.is_empty(), || format!("{} Λ={:?} {kind:?}: empty table", fx.name, fx.hw));
    }
    Ok(())
}

fn rotation_case(ctx: &mut Ctx) -> Result<()> {
    let cm = ctx.fixtures.algebra("A2aff")?;
    let wrap = |e: Error| Error::Fixture { name: "A2aff".into(), source: Box::new(e) };
    let aut = validate_automorphism(&cm, &[1, 2, 0]).map_err(wrap)?;
    let hw = WeightCoords::from_ints(&[1, 1, 1]);
    let order = 5;
    let trunc = Truncation::grade(&cm, order - 1).map_err(wrap)?;
    let table = oracle_twining_table(&cm, &aut, &hw, &trunc, ModuleKind::Irreducible, Arithmetic::Modular)?;
    let delta = crate::affine::conformal_weight(&cm, &hw)?;
    let series = table.specialize(&cm, &delta, order)?;
    for (g, c) in series.coefficients.iter().enumerate().skip(1) {
        ctx.require(c.is_zero(), || format!("graded trace at grade {g} is {c:?}"));
    }
    let expected = twining_rotation_special_case(&cm, &aut, &hw, &qi(0), order, false)?;
    ctx.require(series == expected, || "oracle series differs from the single-term formula".to_string());
    Ok(())
}

fn random_weight(rng: &mut StdRng, rank: usize, affine: bool) -> WeightCoords {
    let mut r = || q(rng.gen_range(-12..=12), rng.gen_range(1..=6));
    let labels = (0..rank).map(|_| r()).collect();
    let grade = if affine { r() } else { qi(0) };
    WeightCoords::new(labels, grade)
}

fn weyl_embedding(ctx: &mut Ctx) -> Result<()> {
    let mut rng = StdRng::seed_from_u64(0x5eed_f01d);
    for (name, perm, _) in folding_fixtures_table() {
        let f = ctx.fixtures.fold(name, &perm)?;
        let affine = f.source.is_affine();
        let (n, m) = (f.source.rank(), f.folded.rank());
        let mut symmetric = Vec::new();
        for _ in 0..100 {
            let l = random_weight(&mut rng, n, affine);
            let lb = random_weight(&mut rng, m, affine);
            let lifted = f.lift_weight(&lb)?;
            for a in 0..m {
                let w = hat_reflection(&f, &l, a)?;
                ctx.require(hat_reflection(&f, &w, a)? == l, || format!("{name}: ŵ_[{a}]² ≠ id"));
                let on_symmetric = hat_reflection(&f, &lifted, a)?;
                ctx.require(on_symmetric == hat_reflection_formula(&f, &lifted, a)?, || {
                    format!("{name}: ŵ_[{a}] word ≠ closed form")
                });
                let commuted = hat_reflection(&f, &omega_star(&f.source, &f.automorphism, &l)?, a)?;
                ctx.require(omega_star(&f.source, &f.automorphism, &w)? == commuted, || format!("{name}: ω*ŵ_[{a}] ≠ ŵ_[{a}]ω*"));
                let image = f.lift_weight(&reflect(&f.folded, &lb, a)?)?;
                ctx.require(on_symmetric == image, || format!("{name}: ŵ_[{a}]P* ≠ P*w̆_[{a}]"));
            }
            symmetric.push(lifted);
        }
        let mut samples: Vec<WeightCoords> = (0..100).map(|_| random_weight(&mut rng, n, affine)).collect();
        samples.extend(symmetric);
        let report = coxeter_relation_check(&f, &samples)?;
        for p in report.pairs.iter().filter(|p| p.violations > 0) {
            ctx.require(false, || format!("{name}: (ŵ_[{}]ŵ_[{}])^{:?} ≠ id on {} samples", p.i, p.j, p.exponent, p.violations));
        }
    }
    Ok(())
}

fn affine_relations(ctx: &mut Ctx) -> Result<()> {
    let mut rng = StdRng::seed_from_u64(0xaff1_7e);
    for (name, perm, _) in folding_fixtures_table() {
        let f = ctx.fixtures.fold(name, &perm)?;
        if !f.source.is_affine() {
            continue;
        }
        let n = qi(f.order() as i64);
        let (g, gf) = (f.source.dual_coxeter()?, f.folded.dual_coxeter()?);
        ctx.require(&n * &gf == g, || format!("{name}: N·ğ = {} but g = {g}", &n * &gf));
        for _ in 0..100 {
            let lb = random_weight(&mut rng, f.folded.rank(), true);
            let l = f.lift_weight(&lb)?;
            let (k, kf) = (f.source.level(&l)?, f.folded.level(&lb)?);
            ctx.require(&k / &n == kf, || format!("{name}: k̆ = {kf} but k/N = {}", &k / &n));
        }
        for level in 1..=4 {
            let set = AffineWeightSet::new(&f.source, level)?;
            let mut constants = BTreeSet::new();
            for l in set.weights.iter().filter(|w| f.automorphism.is_symmetric(&w.labels)) {
                let r = check_cd2(&f, l)?;
                let labels = l.int_labels().unwrap_or_default();
                ctx.require(r.lhs == r.rhs, || format!("{name} Λ={labels:?}: Δ = {} but Γ₀₀ form gives {}", r.lhs, r.rhs));
                ctx.require(r.lhs == r.rhs_cd, || {
                    format!("{name} Λ={labels:?}: Δ = {} but (c, D) form gives {}", r.lhs, r.rhs_cd)
                });
                constants.insert(r.constant);
            }
            ctx.require(constants.len() <= 1, || format!("{name} level {level}: Δ − Δ̆ takes values {constants:?}"));
        }
    }
    Ok(())
}

fn modular_data(ctx: &mut Ctx) -> Result<()> {
    let default = Tolerances::default();
    for (name, levels) in [("A1aff", 1..=4), ("A2aff", 1..=2)] {
        let cm = ctx.fixtures.algebra(name)?;
        for k in levels {
            let md = kac_peterson(&AffineWeightSet::new(&cm, k)?)?;
            let r = crate::affine::modular_residuals(&md.s, &md.t);
            for (what, v) in [("symmetry", r.symmetry), ("unitarity", r.unitarity), ("S² = C", r.conjugation), ("(ST)³ = S²", r.st_cubed)] {
                ctx.measure(format!("{name} k={k} {what}"), v, ctx.tol.unitary, default.unitary);
            }
        }
    }
    let md = kac_peterson(&AffineWeightSet::new(&ctx.fixtures.algebra("A1aff")?, 1)?)?;
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let expected = [[h, h], [h, -h]];
    let mut dev: f64 = 0.0;
    for (i, row) in expected.iter().enumerate() {
        for (j, &e) in row.iter().enumerate() {
            dev = dev.max((md.s[i][j] - Complex64::new(e, 0.0)).norm());
        }
    }
    ctx.measure("S(A1, k=1) closed form", dev, ctx.tol.closed_form, default.closed_form);
    Ok(())
}

fn coset_without_fixed_points(ctx: &mut Ctx) -> Result<()> {
    let default = Tolerances::default();
    let order = 6;
    let spec = build_coset(&ctx.fixtures.algebra("A1")?, 1, 1)?;
    let group = identification_group(&spec)?;
    let orbits = selection_and_orbits(&spec, &group)?;
    let b = branching_functions(&spec, order)?;
    let res = resolve(&spec, &group, &orbits, &b, order)?;
    let weights: BTreeSet<Rational> = res.fields.iter().filter_map(|f| f.conformal_weight.clone()).collect();
    let expected: BTreeSet<Rational> = [qi(0), q(1, 2), q(1, 16)].into_iter().collect();
    ctx.require(res.fields.len() == 3, || format!("{} resolved fields, expected 3", res.fields.len()));
    ctx.require(weights == expected, || format!("conformal weights {weights:?}"));
    let md = resolved_modular(&spec, &group, &res)?;
    let v = verlinde_check(&md.s);
    ctx.measure("Verlinde integrality", v.max_deviation, ctx.tol.verlinde, default.verlinde);
    ctx.require(!v.negative, || "negative fusion coefficient".to_string());
    let index = |w: Rational| res.fields.iter().position(|f| f.conformal_weight.as_ref() == Some(&w));
    if let (Some(one), Some(eps), Some(sigma)) = (index(qi(0)), index(q(1, 2)), index(q(1, 16))) {
        let mut expected = vec![0; 3];
        expected[one] = 1;
        expected[eps] = 1;
        ctx.require(v.fusion[sigma][sigma] == expected, || format!("σ×σ = {:?}", v.fusion[sigma][sigma]));
    }
    Ok(())
}

fn coset_with_fixed_point(ctx: &mut Ctx) -> Result<()> {
    let default = Tolerances::default();
    let order = 6;
    let spec = build_coset(&ctx.fixtures.algebra("A1")?, 2, 2)?;
    let group = identification_group(&spec)?;
    let orbits = selection_and_orbits(&spec, &group)?;
    let target = [1, 1, 2];
    let Some(fixed) = orbits.iter().position(|o| o.members.contains(&target)) else {
        ctx.require(false, || "triple (1,1;2) was not selected".to_string());
        return Ok(());
    };
    let orbit = &orbits[fixed];
    ctx.require(orbit.stabilizer_order() == 2, || format!("stabilizer of (1,1;2) has order {}", orbit.stabilizer_order()));
    let b = branching_functions(&spec, order)?;
    if orbit.stabilizer_order() == 2 {
        let tw = twining_branching(&spec, &group, &orbit.representative, orbit.stabilizer[1], order)?;
        let terms = tw.coefficients.iter().filter(|c| !c.is_zero()).count();
        ctx.require(terms == 1, || format!("b^[ω] has {terms} terms"));
    }
    let res = resolve(&spec, &group, &orbits, &b, order)?;
    let parts: Vec<_> = res.fields.iter().filter(|f| f.orbit == fixed).collect();
    ctx.require(parts.len() == 2, || format!("{} resolved fields for the fixed point", parts.len()));
    for i in 0..order {
        let sum: i64 = parts.iter().map(|f| f.character.coefficients[i]).sum();
        ctx.require(sum == b[&orbit.representative].coefficients[i], || format!("resolved characters do not sum to b at q^{i}"));
    }
    let md = resolved_modular(&spec, &group, &res)?;
    let r = md.residuals();
    ctx.measure("𝒮 symmetry", r.symmetry, ctx.tol.unitary, default.unitary);
    ctx.measure("𝒮 unitarity", r.unitarity, ctx.tol.unitary, default.unitary);
    // ℤ₂ closed form with S^f = 1
    let factors = factor_modular(&spec)?;
    let total = group.len() as f64;
    let mut dev: f64 = 0.0;
    for (i, fa) in res.fields.iter().enumerate() {
        for (j, fb) in res.fields.iter().enumerate() {
            let (oa, ob) = (&orbits[fa.orbit], &orbits[fb.orbit]);
            let (na, nb) = (oa.stabilizer_order() as f64, ob.stabilizer_order() as f64);
            let s_id = untwined_s(&factors, &oa.representative, &ob.representative);
            let expected = if na == 2.0 && nb == 2.0 {
                s_id * 0.5 + Complex64::new(if fa.psi == fb.psi { 0.5 } else { -0.5 }, 0.0)
            } else {
                s_id * (total / (na * nb))
            };
            dev = dev.max((md.s[i][j] - expected).norm());
        }
    }
    ctx.measure("ℤ₂ fixed-point formula", dev, ctx.tol.unitary, default.unitary);
    let v = verlinde_check(&md.s);
    ctx.measure("Verlinde integrality", v.max_deviation, ctx.tol.verlinde, default.verlinde);
    ctx.require(!v.negative, || "negative fusion coefficient".to_string());
    Ok(())
}

fn table_properties(ctx: &mut Ctx) -> Result<()> {
    for (fx, f, kind, oracle, _) in twining_tables(ctx)? {
        let hw = WeightCoords::from_ints(&fx.hw);
        let tag = format!("{} Λ={:?} {kind:?}", fx.name, fx.hw);
        ctx.require(oracle.support_is_symmetric(&f.automorphism), || format!("{tag}: support not symmetric"));
        let ordinary = match kind {
            ModuleKind::Irreducible => irreducible_multiplicities_truncated(&f.source, &hw, &fx.truncation)?,
            ModuleKind::Verma => verma_multiplicities_truncated(&f.source, &hw, &fx.truncation)?,
        };
        ctx.require(oracle.is_majorized_by(&ordinary), || format!("{tag}: |m^[ω]| exceeds m"));
        // Weyl invariance only holds for integrable modules
        if kind == ModuleKind::Irreducible {
            let v = oracle.hat_orbit_violations(&f)?;
            ctx.require(v == 0, || format!("{tag}: {v} ŵ-orbit violations"));
        }
        ctx.require(oracle.get(&vec![0; f.source.rank()]) == Cyclotomic::one(), || format!("{tag}: top entry ≠ 1"));
    }
    Ok(())
}
