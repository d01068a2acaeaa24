//! Acceptance gate: one test per criterion, each printing a pass/fail line.
//! Every check is exact (zero tolerance) and runs well inside its time
//! budget; run with `cargo test -p screen-cli --test acceptance`.

use screen_cli::verify::{run_check, VerifyOptions};
use screen_cli::CheckStatus;

fn run(criterion: &str, id: &str) {
    let opts = VerifyOptions { jobs: 1, budget: None, modular_prepass: true };
    let record = run_check(id, &opts).unwrap_or_else(|| panic!("unknown check {id}"));
    let verdict = match record.status {
        CheckStatus::Pass => "PASS",
        CheckStatus::Fail => "FAIL",
        CheckStatus::Skip => "SKIP",
    };
    println!(
        "criterion {criterion}: {verdict} [{} ms] {} -- expected: {}; actual: {}",
        record.millis, record.id, record.expected, record.actual
    );
    assert_eq!(record.status, CheckStatus::Pass, "{}: {}", record.id, record.actual);
}

#[test]
fn criterion_01_consistency_suite() {
    run("1", "01-consistency");
}

#[test]
fn criterion_02_oracle_equivalence() {
    run("2", "02-oracle-equivalence");
    run("2 (kac screen oracle)", "02b-kac-screen-oracle");
}

#[test]
fn criterion_03_h2_trivial_coefficients() {
    run("3", "03-h2-trivial-coefficients");
}

#[test]
fn criterion_04_invariant_triple_and_relation() {
    run("4", "04-invariant-triple-relation");
}

#[test]
fn criterion_05_h2_realization_modules() {
    run("5", "05-h2-realization");
}

#[test]
fn criterion_06_grading_eigenvalue_laws() {
    run("6", "06-grading-eigenvalue-laws");
}

#[test]
fn criterion_07_realization_cross_check() {
    run("7", "07-realization-cross-check");
}

#[test]
fn criterion_08_sl32_structural_counts() {
    run("8", "08-sl32-structural-counts");
}

#[test]
fn criterion_09_sl32_screening() {
    run("9", "09-sl32-screening");
}

#[test]
fn criterion_10_sl32_h2_values() {
    run("10", "10-sl32-h2-values");
}

#[test]
fn criterion_11_s2_structure_and_cohomology() {
    run("11", "11-s2-structure-and-cohomology");
}

#[test]
fn criterion_12_negative_control() {
    run("12", "12-negative-control");
}
