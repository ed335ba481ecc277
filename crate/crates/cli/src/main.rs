//! `orbitfold` command-line front end. Every subcommand writes one JSON
//! document with sorted keys and a `provenance` block.
//!
//! Exit codes: 0 success, 1 invariant failure, 2 usage error.

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;
use orbitfold::acceptance::{run_all, run_criterion, CriterionReport, Fixtures, Tolerances, CRITERIA};
use orbitfold::affine::{
    central_charge, conformal_weight, kac_peterson, modular_residuals, AffineWeightSet, ModularResiduals,
};
use orbitfold::catalog::preset;
use orbitfold::characters::{
    irreducible_multiplicities_truncated, verma_multiplicities_truncated, virasoro_specialize, Truncation,
};
use orbitfold::coset::{
    branching_functions, build_coset, identification_group, resolve, resolved_modular, selection_and_orbits,
    verlinde_check,
};
use orbitfold::fold::{fold, validate_automorphism, DiagramAutomorphism};
use orbitfold::twining::{oracle_twining_table, twining_character_via_orbit, Arithmetic, ModuleKind};
use orbitfold::{classify, CartanMatrix, Cyclotomic, QSeries, Rational, WeightCoords};
use serde_json::{json, Map, Value};
use std::fmt;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "orbitfold", version, about = "Folding of Kac–Moody algebras and coset fixed-point resolution")]
struct Cli {
    /// Write the JSON document to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a Cartan matrix.
    Validate(AlgebraArg),
    /// Classify a Cartan matrix as finite, affine or indefinite.
    Classify(AlgebraArg),
    /// Fold along a diagram automorphism.
    Fold(FoldArgs),
    /// Weight multiplicities of a highest-weight module.
    Char(CharArgs),
    /// Twining character through the orbit Lie algebra.
    Twine(TwineArgs),
    /// Kac–Peterson modular data at a level.
    Smatrix(SmatrixArgs),
    /// Diagonal coset spectrum and fixed-point resolution.
    Coset(CosetArgs),
    /// Run the acceptance suite.
    Check(CheckArgs),
}

#[derive(Args)]
struct AlgebraArg {
    /// Preset name (e.g. A3, C4aff) or a JSON file `{"cartan": [[..]], "name": ..}`.
    #[arg(long)]
    algebra: String,
}

#[derive(Args)]
struct FoldArgs {
    #[command(flatten)]
    algebra: AlgebraArg,
    /// Node images "i0,i1,..." or a JSON file with a `perm` entry.
    #[arg(long)]
    perm: String,
}

#[derive(Args)]
struct CharArgs {
    #[command(flatten)]
    algebra: AlgebraArg,
    /// Highest-weight Dynkin labels "l0,l1,...".
    #[arg(long)]
    hw: String,
    /// Height bound (finite) or grade bound (affine).
    #[arg(long)]
    depth: usize,
    /// Verma module instead of the irreducible module.
    #[arg(long)]
    verma: bool,
    /// Emit graded dimensions as a q-series (affine only).
    #[arg(long)]
    specialize: bool,
}

#[derive(Args)]
struct TwineArgs {
    #[command(flatten)]
    algebra: AlgebraArg,
    #[arg(long)]
    perm: String,
    #[arg(long)]
    hw: String,
    #[arg(long)]
    depth: usize,
    #[arg(long)]
    verma: bool,
    /// Recompute the table from the module itself and report differences.
    #[arg(long)]
    verify_oracle: bool,
}

#[derive(Args)]
struct SmatrixArgs {
    #[command(flatten)]
    algebra: AlgebraArg,
    #[arg(long)]
    level: i64,
}

#[derive(Args)]
struct CosetArgs {
    /// Horizontal algebra of the coset.
    #[arg(long)]
    h: String,
    /// Numerator levels "k1,k2".
    #[arg(long)]
    levels: String,
    #[arg(long, default_value_t = 6)]
    qorder: usize,
    /// Resolve fixed points and compute the resolved modular data.
    #[arg(long)]
    resolve: bool,
    /// Check the Verlinde formula on the resolved S-matrix.
    #[arg(long)]
    verlinde: bool,
    #[arg(long, default_value_t = 1e-9)]
    tol_unitary: f64,
    #[arg(long, default_value_t = 1e-6)]
    tol_verlinde: f64,
}

#[derive(Args)]
struct CheckArgs {
    /// JSON file overriding fixture matrices: `{"A3": [[..]], ..}`.
    #[arg(long)]
    fixtures: Option<PathBuf>,
    /// Comma-separated criterion numbers (default: all).
    #[arg(long)]
    only: Option<String>,
    /// Sets every floating-point tolerance.
    #[arg(long)]
    tolerance: Option<f64>,
    #[arg(long)]
    tol_unitary: Option<f64>,
    #[arg(long)]
    tol_verlinde: Option<f64>,
}

/// Bad command-line input (exit code 2).
#[derive(Debug)]
struct UsageError(String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    UsageError(msg.into()).into()
}

/// A document whose checks failed (exit code 1 after printing).
struct Outcome {
    doc: Value,
    ok: bool,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    if let Err(e) = configure_threads() {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    match run(&cli) {
        Ok(outcome) => match emit(&outcome.doc, cli.out.as_deref()) {
            Ok(()) if outcome.ok => ExitCode::SUCCESS,
            Ok(()) => ExitCode::from(1),
            Err(e) => {
                eprintln!("error: {e:#}");
                ExitCode::from(2)
            }
        },
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.downcast_ref::<UsageError>().is_some() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}

fn configure_threads() -> Result<()> {
    if let Ok(v) = std::env::var("ORBITFOLD_THREADS") {
        let n: usize = v.trim().parse().map_err(|_| usage(format!("ORBITFOLD_THREADS must be a positive integer, got `{v}`")))?;
        if n == 0 {
            return Err(usage("ORBITFOLD_THREADS must be positive"));
        }
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global()?;
    }
    Ok(())
}

fn emit(doc: &Value, out: Option<&Path>) -> Result<()> {
    let mut text = serde_json::to_string_pretty(doc)?;
    text.push('\n');
    match out {
        Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display()))?,
        None => print!("{text}"),
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Validate(a) => validate(a),
        Command::Classify(a) => classify_cmd(a),
        Command::Fold(a) => fold_cmd(a),
        Command::Char(a) => char_cmd(a),
        Command::Twine(a) => twine_cmd(a),
        Command::Smatrix(a) => smatrix_cmd(a),
        Command::Coset(a) => coset_cmd(a),
        Command::Check(a) => check_cmd(a),
    }
}

// ---------------------------------------------------------------- inputs

/// Reads a JSON file that is either an input block or an emitted document,
/// returning the object holding `key`.
fn json_block(path: &str, key: &str) -> Result<Map<String, Value>> {
    let text = std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read `{path}`: {e}")))?;
    let value: Value = serde_json::from_str(&text).map_err(|e| usage(format!("`{path}` is not valid JSON: {e}")))?;
    let candidates = [
        value.clone(),
        value.pointer("/provenance/inputs").cloned().unwrap_or(Value::Null),
        value.pointer("/provenance/inputs/algebra").cloned().unwrap_or(Value::Null),
    ];
    candidates
        .into_iter()
        .filter_map(|v| match v {
            Value::Object(m) if m.contains_key(key) => Some(m),
            _ => None,
        })
        .next()
        .ok_or_else(|| usage(format!("`{path}` has no `{key}` entry")))
}

/// Loads an algebra by preset name or file; returns it with its echo block.
fn load_algebra(spec: &str) -> Result<(CartanMatrix, Value)> {
    let cm = if Path::new(spec).is_file() {
        let block = json_block(spec, "cartan")?;
        let rows: Vec<Vec<i64>> = serde_json::from_value(block["cartan"].clone())
            .map_err(|e| usage(format!("`cartan` must be an integer matrix: {e}")))?;
        let name = block.get("name").and_then(Value::as_str).map(str::to_string);
        let cm = CartanMatrix::new(rows)?;
        match name {
            // keep the catalog's node convention when the entries agree
            Some(n) => match preset(&n) {
                Ok(p) if p.entries() == cm.entries() => p,
                _ => cm.with_name(n),
            },
            None => cm,
        }
    } else {
        preset(spec).map_err(|e| usage(format!("`{spec}` is neither a file nor a preset ({e})")))?
    };
    let mut echo = Map::new();
    echo.insert("cartan".into(), json!(cm.entries()));
    if let Some(n) = cm.name() {
        echo.insert("name".into(), json!(n));
    }
    Ok((cm, Value::Object(echo)))
}

fn parse_list<T: std::str::FromStr>(s: &str, what: &str) -> Result<Vec<T>> {
    s.split(',')
        .map(|p| p.trim().parse::<T>().map_err(|_| usage(format!("invalid {what} `{s}`"))))
        .collect()
}

fn load_perm(cm: &CartanMatrix, spec: &str) -> Result<DiagramAutomorphism> {
    let perm: Vec<usize> = if Path::new(spec).is_file() {
        let block = json_block(spec, "perm")?;
        serde_json::from_value(block["perm"].clone()).map_err(|e| usage(format!("`perm` must be a list of indices: {e}")))?
    } else {
        parse_list(spec, "permutation")?
    };
    if perm.len() != cm.rank() {
        return Err(usage(format!("permutation has {} entries, algebra has rank {}", perm.len(), cm.rank())));
    }
    Ok(validate_automorphism(cm, &perm)?)
}

fn load_weight(cm: &CartanMatrix, spec: &str) -> Result<WeightCoords> {
    let labels: Vec<i64> = parse_list(spec, "highest weight")?;
    if labels.len() != cm.rank() {
        return Err(usage(format!("highest weight has {} labels, algebra has rank {}", labels.len(), cm.rank())));
    }
    Ok(WeightCoords::from_ints(&labels))
}

fn truncation(cm: &CartanMatrix, depth: usize) -> Result<Truncation> {
    Ok(if cm.is_affine() { Truncation::grade(cm, depth)? } else { Truncation::height(cm.rank(), depth) })
}

// ---------------------------------------------------------------- output

fn rat(r: &Rational) -> Value {
    json!(r.to_string())
}

fn cyclotomic(c: &Cyclotomic) -> Value {
    match c.to_rational() {
        Some(r) => rat(&r),
        None => json!({
            "conductor": c.conductor(),
            "zeta_coefficients": c.coefficients().iter().map(rat).collect::<Vec<_>>(),
        }),
    }
}

fn series_i64(s: &QSeries<i64>) -> Value {
    json!({ "exponent": rat(&s.leading_exponent), "coefficients": s.coefficients })
}

fn series_cyc(s: &QSeries<Cyclotomic>) -> Value {
    json!({
        "exponent": rat(&s.leading_exponent),
        "coefficients": s.coefficients.iter().map(cyclotomic).collect::<Vec<_>>(),
    })
}

fn complex(z: &Complex64) -> Value {
    json!([z.re, z.im])
}

fn complex_matrix(m: &[Vec<Complex64>]) -> Value {
    json!(m.iter().map(|row| row.iter().map(complex).collect::<Vec<_>>()).collect::<Vec<_>>())
}

fn residuals(r: &ModularResiduals) -> Value {
    json!({
        "symmetry": r.symmetry,
        "unitarity": r.unitarity,
        "conjugation": r.conjugation,
        "st_cubed": r.st_cubed,
        "conjugation_perm": r.conjugation_perm,
    })
}

fn document(command: &str, inputs: Value, truncation: Value, body: Value) -> Value {
    let mut doc = match body {
        Value::Object(m) => m,
        other => {
            let mut m = Map::new();
            m.insert("result".into(), other);
            m
        }
    };
    doc.insert(
        "provenance".into(),
        json!({
            "command": command,
            "inputs": inputs,
            "tool": "orbitfold",
            "truncation": truncation,
            "version": env!("CARGO_PKG_VERSION"),
        }),
    );
    Value::Object(doc)
}

fn kind_name(cm: &CartanMatrix) -> String {
    format!("{:?}", classify(cm))
}

// ---------------------------------------------------------------- commands

fn validate(a: &AlgebraArg) -> Result<Outcome> {
    let (cm, echo) = load_algebra(&a.algebra)?;
    let mut body = json!({
        "valid": true,
        "rank": cm.rank(),
        "kind": kind_name(&cm),
        "symmetrizer": cm.symmetrizer(),
    });
    if let Some(aff) = cm.affine() {
        body["affine_node"] = json!(aff.node);
        body["kac_labels"] = json!(aff.kac);
        body["dual_kac_labels"] = json!(aff.dual_kac);
    }
    Ok(Outcome { doc: document("validate", json!({ "algebra": echo }), Value::Null, body), ok: true })
}

fn classify_cmd(a: &AlgebraArg) -> Result<Outcome> {
    let (cm, echo) = load_algebra(&a.algebra)?;
    let body = json!({ "kind": kind_name(&cm) });
    Ok(Outcome { doc: document("classify", json!({ "algebra": echo }), Value::Null, body), ok: true })
}

fn fold_cmd(a: &FoldArgs) -> Result<Outcome> {
    let (cm, echo) = load_algebra(&a.algebra.algebra)?;
    let aut = load_perm(&cm, &a.perm)?;
    let f = fold(&cm, &aut)?;
    let od = &f.orbit_data;
    let mut body = json!({
        "orbits": od.orbits,
        "N_i": od.lengths,
        "s_i": od.s,
        "order": od.order,
        "linking_ok": od.linking_ok,
        "folded_cartan": f.folded.entries(),
        "folded_symmetrizer": f.folded.symmetrizer(),
        "folded_kind": kind_name(&f.folded),
    });
    if let Some(g) = &f.gamma00 {
        body["gamma00"] = rat(g);
    }
    let inputs = json!({ "algebra": echo, "perm": aut.perm() });
    Ok(Outcome { doc: document("fold", inputs, Value::Null, body), ok: true })
}

fn char_cmd(a: &CharArgs) -> Result<Outcome> {
    let (cm, echo) = load_algebra(&a.algebra.algebra)?;
    let hw = load_weight(&cm, &a.hw)?;
    let trunc = truncation(&cm, a.depth)?;
    let table = if a.verma {
        verma_multiplicities_truncated(&cm, &hw, &trunc)?
    } else {
        irreducible_multiplicities_truncated(&cm, &hw, &trunc)?
    };
    let entries: Vec<Value> = table
        .entries
        .iter()
        .map(|(n, m)| {
            let w = table.weight(&cm, n);
            json!({ "n": n, "labels": w.labels.iter().map(rat).collect::<Vec<_>>(), "multiplicity": m })
        })
        .collect();
    let mut body = json!({ "entries": entries, "total": table.total() });
    if a.specialize {
        let delta = conformal_weight(&cm, &hw)?;
        let c = central_charge(&cm, &cm.dual_level(&hw)?)?;
        body["specialized"] = series_i64(&virasoro_specialize(&cm, &table, &delta, &c, a.depth + 1)?);
    }
    let inputs = json!({ "algebra": echo, "hw": hw.int_labels(), "verma": a.verma });
    let trunc_echo = json!({ "weights": trunc.weights, "bound": trunc.bound });
    Ok(Outcome { doc: document("char", inputs, trunc_echo, body), ok: true })
}

fn twine_cmd(a: &TwineArgs) -> Result<Outcome> {
    let (cm, echo) = load_algebra(&a.algebra.algebra)?;
    let aut = load_perm(&cm, &a.perm)?;
    let hw = load_weight(&cm, &a.hw)?;
    if !aut.is_symmetric(&hw.labels) {
        return Err(orbitfold::Error::NotSymmetricWeight.into());
    }
    let kind = if a.verma { ModuleKind::Verma } else { ModuleKind::Irreducible };
    let trunc = if a.verma { Truncation::height(cm.rank(), a.depth) } else { truncation(&cm, a.depth)? };
    let f = fold(&cm, &aut)?;
    let table = twining_character_via_orbit(&f, &hw, &trunc, kind)?;
    let entries: Vec<Value> = table.entries.iter().map(|(n, v)| json!({ "n": n, "value": cyclotomic(v) })).collect();
    let mut body = json!({ "entries": entries, "folded_cartan": f.folded.entries() });
    if cm.is_affine() && kind == ModuleKind::Irreducible {
        let delta = conformal_weight(&cm, &hw)?;
        body["specialized"] = series_cyc(&table.specialize(&cm, &delta, a.depth + 1)?);
    }
    let mut ok = true;
    if a.verify_oracle {
        let oracle = oracle_twining_table(&cm, &aut, &hw, &trunc, kind, Arithmetic::Modular)?;
        let diff: Vec<Value> = table
            .diff(&oracle)
            .iter()
            .map(|(n, x, y)| json!({ "n": n, "orbit": cyclotomic(x), "oracle": cyclotomic(y) }))
            .collect();
        ok = diff.is_empty();
        body["diff"] = json!(diff);
    }
    let inputs = json!({ "algebra": echo, "perm": aut.perm(), "hw": hw.int_labels(), "verma": a.verma });
    let trunc_echo = json!({ "weights": trunc.weights, "bound": trunc.bound });
    Ok(Outcome { doc: document("twine", inputs, trunc_echo, body), ok })
}

fn smatrix_cmd(a: &SmatrixArgs) -> Result<Outcome> {
    let (cm, echo) = load_algebra(&a.algebra.algebra)?;
    if a.level < 0 {
        return Err(usage("level must be nonnegative"));
    }
    let set = AffineWeightSet::new(&cm, a.level)?;
    let md = kac_peterson(&set)?;
    let r = modular_residuals(&md.s, &md.t);
    let phases: Vec<Value> = md.t.iter().map(complex).collect();
    let anomalies: Vec<Value> = set.weights.iter().map(|w| set.modular_anomaly(w).map(|x| rat(&x))).collect::<orbitfold::Result<_>>()?;
    let body = json!({
        "labels": md.labels.iter().map(|w| w.int_labels()).collect::<Vec<_>>(),
        "S": complex_matrix(&md.s),
        "T": phases,
        "modular_anomalies": anomalies,
        "central_charge": rat(&md.central_charge),
        "conformal_weights": md.conformal_weights.iter().map(rat).collect::<Vec<_>>(),
        "residuals": residuals(&r),
    });
    let inputs = json!({ "algebra": echo, "level": a.level });
    Ok(Outcome { doc: document("smatrix", inputs, Value::Null, body), ok: true })
}

fn coset_cmd(a: &CosetArgs) -> Result<Outcome> {
    let (h, echo) = load_algebra(&a.h)?;
    let levels: Vec<i64> = parse_list(&a.levels, "levels")?;
    let [k1, k2] = levels[..] else {
        return Err(usage("--levels takes two values k1,k2"));
    };
    if a.qorder == 0 {
        return Err(usage("--qorder must be positive"));
    }
    let spec = build_coset(&h, k1, k2)?;
    let group = identification_group(&spec)?;
    let orbits = selection_and_orbits(&spec, &group)?;
    let b = branching_functions(&spec, a.qorder)?;
    let labels = |t: &[usize; 3]| json!(spec.labels(t));
    let orbit_docs: Vec<Value> = orbits
        .iter()
        .map(|o| {
            json!({
                "representative": labels(&o.representative),
                "members": o.members.iter().map(labels).collect::<Vec<_>>(),
                "stabilizer_order": o.stabilizer_order(),
                "branching": series_i64(&b[&o.representative]),
            })
        })
        .collect();
    let mut body = json!({
        "central_charge": rat(&spec.central_charge),
        "identification_group_order": group.len(),
        "orbits": orbit_docs,
    });
    let mut ok = true;
    let mut checks = Map::new();
    if a.resolve || a.verlinde {
        let res = resolve(&spec, &group, &orbits, &b, a.qorder)?;
        let fields: Vec<Value> = res
            .fields
            .iter()
            .map(|f| {
                json!({
                    "orbit": f.orbit,
                    "psi": f.psi,
                    "character": series_i64(&f.character),
                    "conformal_weight": f.conformal_weight.as_ref().map(rat),
                })
            })
            .collect();
        body["fields"] = json!(fields);
        match resolved_modular(&spec, &group, &res) {
            Ok(md) => {
                let r = md.residuals();
                let unitary = r.symmetry <= a.tol_unitary && r.unitarity <= a.tol_unitary;
                ok &= unitary;
                body["S"] = complex_matrix(&md.s);
                body["T"] = json!(md.t.iter().map(complex).collect::<Vec<_>>());
                checks.insert("modular".into(), json!({ "residuals": residuals(&r), "ok": unitary, "tolerance": a.tol_unitary }));
                if a.verlinde {
                    let v = verlinde_check(&md.s);
                    let vok = v.ok(a.tol_verlinde);
                    ok &= vok;
                    checks.insert(
                        "verlinde".into(),
                        json!({
                            "fusion": v.fusion,
                            "max_deviation": v.max_deviation,
                            "negative": v.negative,
                            "ok": vok,
                            "tolerance": a.tol_verlinde,
                        }),
                    );
                }
            }
            Err(orbitfold::Error::UnsupportedAlgebra(why)) => {
                checks.insert("modular".into(), json!({ "unsupported": why }));
            }
            Err(e) => return Err(e.into()),
        }
    }
    if !checks.is_empty() {
        body["checks"] = Value::Object(checks);
    }
    let inputs = json!({ "h": echo, "levels": [k1, k2], "resolve": a.resolve, "verlinde": a.verlinde });
    Ok(Outcome { doc: document("coset", inputs, json!({ "q_order": a.qorder }), body), ok })
}

fn report_doc(r: &CriterionReport) -> Value {
    json!({
        "id": r.id,
        "title": r.title,
        "passed": r.passed(),
        "tolerance_induced": r.tolerance_induced(),
        "elapsed_seconds": r.elapsed.as_secs_f64(),
        "budget_seconds": r.budget.as_secs(),
        "failures": r.failures,
        "error": r.error.as_ref().map(|e| e.to_string()),
        "measurements": r.measurements.iter().map(|m| json!({
            "label": m.label,
            "value": m.value,
            "tolerance": m.tolerance,
            "default_tolerance": m.default_tolerance,
            "ok": m.ok(),
        })).collect::<Vec<_>>(),
    })
}

fn check_cmd(a: &CheckArgs) -> Result<Outcome> {
    let mut fixtures = Fixtures::default();
    if let Some(path) = &a.fixtures {
        let text = std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
        let overrides: std::collections::BTreeMap<String, Vec<Vec<i64>>> =
            serde_json::from_str(&text).map_err(|e| usage(format!("fixture file must map names to matrices: {e}")))?;
        for (name, rows) in overrides {
            if !fixtures.algebras.contains_key(&name) {
                return Err(usage(format!("unknown fixture `{name}`")));
            }
            fixtures.algebras.insert(name, rows);
        }
    }
    let mut tol = a.tolerance.map(Tolerances::uniform).unwrap_or_default();
    if let Some(t) = a.tol_unitary {
        tol.unitary = t;
    }
    if let Some(t) = a.tol_verlinde {
        tol.verlinde = t;
    }
    let reports = match &a.only {
        None => run_all(&fixtures, tol),
        Some(list) => {
            let ids: Vec<usize> = parse_list(list, "criterion list")?;
            if let Some(bad) = ids.iter().find(|&&i| i == 0 || i > CRITERIA) {
                return Err(usage(format!("no criterion {bad}")));
            }
            ids.into_iter().map(|i| run_criterion(i, &fixtures, tol)).collect()
        }
    };
    for r in &reports {
        eprintln!("{}", r.line());
        if let Some(e) = &r.error {
            eprintln!("  error: {e}");
        }
    }
    let ok = reports.iter().all(CriterionReport::passed);
    let body = json!({
        "criteria": reports.iter().map(report_doc).collect::<Vec<_>>(),
        "passed": ok,
    });
    let inputs = json!({
        "fixtures": fixtures.algebras,
        "tolerances": { "unitary": tol.unitary, "verlinde": tol.verlinde, "closed_form": tol.closed_form },
    });
    Ok(Outcome { doc: document("check", inputs, Value::Null, body), ok })
}
