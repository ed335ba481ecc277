//! The nine acceptance criteria, one test each. Every test prints a single
//! PASS/FAIL line; run with `--nocapture` to see them.

use orbitfold::acceptance::{run_criterion, CriterionReport, Fixtures, Tolerances};
use orbitfold::Error;

fn criterion(id: usize) {
    let report = run_criterion(id, &Fixtures::default(), Tolerances::default());
    println!("{}", report.line());
    explain(&report);
    assert!(report.passed(), "criterion {id} failed");
}

fn explain(report: &CriterionReport) {
    if let Some(e) = &report.error {
        println!("  error: {e}");
    }
    for f in &report.failures {
        println!("  {f}");
    }
    for m in report.measurements.iter().filter(|m| !m.ok()) {
        println!("  {}: {:e} > {:e}", m.label, m.value, m.tolerance);
    }
}

#[test]
fn criterion_1_folding_fixtures() {
    criterion(1);
}

#[test]
fn criterion_2_main_theorem() {
    criterion(2);
}

#[test]
fn criterion_3_rotation_special_case() {
    criterion(3);
}

#[test]
fn criterion_4_weyl_embedding() {
    criterion(4);
}

#[test]
fn criterion_5_affine_relations() {
    criterion(5);
}

#[test]
fn criterion_6_modular_data() {
    criterion(6);
}

#[test]
fn criterion_7_coset_without_fixed_points() {
    criterion(7);
}

#[test]
fn criterion_8_coset_with_fixed_point() {
    criterion(8);
}

#[test]
fn criterion_9_twining_table_properties() {
    criterion(9);
}

#[test]
fn corrupted_fixture_is_reported_by_name() {
    let mut fixtures = Fixtures::default();
    fixtures.algebras.insert("A3".into(), vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, 1, 2]]);
    let report = run_criterion(1, &fixtures, Tolerances::default());
    assert!(!report.passed());
    match report.error {
        Some(Error::Fixture { ref name, ref source }) => {
            assert_eq!(name, "A3");
            assert!(matches!(**source, Error::NotGcm(_)));
        }
        ref other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn tight_tolerance_failures_are_flagged() {
    let report = run_criterion(6, &Fixtures::default(), Tolerances::uniform(1e-15));
    assert!(!report.passed());
    assert!(report.tolerance_induced(), "{report:?}");
}
