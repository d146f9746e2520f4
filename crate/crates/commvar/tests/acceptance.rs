//! End-to-end acceptance gate: each test runs one verification family
//! end to end and prints a single PASS/FAIL line.

use std::process::Command;

use commvar::groebner::GroebnerConfig;
use commvar::pointcount::CountConfig;
use commvar::report::Cache;
use commvar::verify::{self, CheckOutcome};

fn gate(label: &str, outcome: &CheckOutcome) {
    println!(
        "{label}: {}",
        if outcome.pass { "PASS" } else { "FAIL" }
    );
    if !outcome.pass {
        for rec in &outcome.records {
            if rec.get("status") == Some("mismatch") {
                eprintln!("  {}", rec.to_line().unwrap());
            }
        }
    }
    assert!(outcome.pass, "{label} failed");
}

#[test]
fn acceptance_01_generic_rank_loci() {
    let outcome = verify::check_detvar_grid(&GroebnerConfig::default()).unwrap();
    gate("generic rank loci vs closed form", &outcome);
}

#[test]
fn acceptance_02_staircase_grid() {
    let outcome = verify::check_staircase_grid(&GroebnerConfig::default()).unwrap();
    gate("three-band staircase grid vs rank bound", &outcome);
}

#[test]
fn acceptance_03_staircase_general() {
    let outcome = verify::check_staircase_general(&GroebnerConfig::default()).unwrap();
    assert!(outcome.records.len() >= 10);
    assert!(outcome
        .records
        .iter()
        .all(|r| r.get("printed_formula").is_some()));
    gate("general staircase component maxima", &outcome);
}

#[test]
fn acceptance_04_centralizer_branches() {
    let outcome = verify::check_zsub_branches(&GroebnerConfig::default()).unwrap();
    assert!(outcome
        .records
        .iter()
        .any(|r| r.get("track") == Some("product-structure")));
    gate("centralizer family, both characteristic branches", &outcome);
}

#[test]
fn acceptance_05_intersections() {
    let outcome = verify::check_intersections().unwrap();
    gate("symbolic intersection identities", &outcome);
}

#[test]
fn acceptance_06_sliced_recursion() {
    let outcome = verify::check_sliced(&GroebnerConfig::default()).unwrap();
    gate("sliced recursion step", &outcome);
}

#[test]
fn acceptance_07_point_count_slopes() {
    let dir = tempfile::tempdir().unwrap();
    let cache = Cache::new(dir.path());
    let outcome = verify::check_pointcount(&CountConfig::default(), Some(&cache)).unwrap();
    let cached_files = std::fs::read_dir(dir.path()).unwrap().count();
    assert_eq!(cached_files, 9, "one cache entry per (family, q)");
    gate("point-count slopes", &outcome);
}

#[test]
fn acceptance_08_formula_seams() {
    let outcome = verify::check_formulas().unwrap();
    gate("closed-form seams and inequality", &outcome);
}

#[test]
fn acceptance_09_support_handoff() {
    let outcome = verify::check_support().unwrap();
    gate("support-variety digit handoff", &outcome);
}

#[test]
fn acceptance_10_determinism() {
    let run = || {
        let output = Command::new(env!("CARGO_BIN_EXE_commvar"))
            .arg("verify")
            .output()
            .unwrap();
        assert!(output.status.success());
        output.stdout
    };
    let first = run();
    let second = run();
    let pass = first == second;
    println!("verify output determinism: {}", if pass { "PASS" } else { "FAIL" });
    assert!(pass, "verify runs differed");
}
