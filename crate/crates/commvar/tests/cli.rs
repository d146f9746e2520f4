//! Black-box tests of the binary: flag parsing, output formats, the
//! ideal file format, and the exit-status contract.

use std::process::Command;

fn commvar(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_commvar"))
        .args(args)
        .output()
        .unwrap()
}

#[test]
fn dim_formula_track() {
    let out = commvar(&["dim", "--cijm", "0,2,0"]);
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("dim 8"), "{stdout}");
    assert!(stdout.contains("irreducible true"), "{stdout}");
}

#[test]
fn dim_groebner_track_agrees() {
    let out = commvar(&["dim", "--cijm", "2,0,0", "--groebner", "--format", "records"]);
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("dim=6"), "{stdout}");
    assert!(stdout.contains("groebner_dim=6"), "{stdout}");
}

#[test]
fn dim_zsub_branches() {
    let out = commvar(&["dim", "--zsub", "--n", "3", "--r", "2", "--char", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout).unwrap().contains("dim 7"));

    let out = commvar(&["dim", "--zsub", "--n", "3", "--r", "2", "--char", "7"]);
    assert!(String::from_utf8(out.stdout).unwrap().contains("dim 6"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(commvar(&["nonsense"]).status.code(), Some(2));
    assert_eq!(commvar(&["dim"]).status.code(), Some(2));
    assert_eq!(commvar(&["dim", "--cijm", "1,2"]).status.code(), Some(2));
    assert_eq!(
        commvar(&["support", "--lambda", "0,0", "--p", "5", "--r", "1"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn budget_refusal_exits_3() {
    // three ambient factors at q = 5 blow past the enumeration estimate
    let out = commvar(&["dim", "--cijm", "0,0,3", "--pointcount"]);
    assert_eq!(out.status.code(), Some(3), "{:?}", out);
    assert!(String::from_utf8(out.stderr).unwrap().contains("budget"));
}

#[test]
fn ideal_file_round_trips() {
    use commvar::ring::{CoefficientField, MonomialOrder, Ring};
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("pair.ideal");
    let out = commvar(&[
        "ideal",
        "--spec",
        "zsub+zsub",
        "--n",
        "3",
        "--char",
        "7",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    let mut lines = text.lines();
    let vars: Vec<&str> = lines.next().unwrap().split(' ').collect();
    assert_eq!(vars, ["x1", "y1", "z1", "t1", "x2", "y2", "z2", "t2"]);
    let ring = Ring::new(
        vars,
        MonomialOrder::Grevlex,
        CoefficientField::prime(7).unwrap(),
    )
    .unwrap();
    let gens: Vec<String> = lines.map(str::to_string).collect();
    assert_eq!(gens.len(), 3);
    for g in &gens {
        assert_eq!(ring.parse(g).unwrap().to_string(), *g);
    }
}

#[test]
fn ideal_single_factor_is_header_only() {
    let out = commvar(&["ideal", "--spec", "sl", "--n", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert_eq!(stdout.lines().count(), 1);
}

#[test]
fn dichotomy_witness_in_plane_pair() {
    let out = commvar(&["ideal", "--spec", "v1+v2", "--n", "3"]);
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("z1*t2"), "{stdout}");
}

#[test]
fn support_batch_preserves_order() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("rows.txt");
    std::fs::write(&path, "0 0 7 2\n6,0,7,1\n6 0 7 3\n").unwrap();
    let out = commvar(&[
        "support",
        "--batch",
        path.to_str().unwrap(),
        "--format",
        "records",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8(out.stdout).unwrap();
    let dims: Vec<&str> = stdout
        .lines()
        .map(|l| {
            commvar_dim_field(l)
        })
        .collect();
    assert_eq!(dims, ["8", "4", "9"]);
}

fn commvar_dim_field(line: &str) -> &str {
    line.split(' ')
        .find_map(|f| f.strip_prefix("dim="))
        .unwrap()
}

#[test]
fn record_output_round_trips() {
    use commvar::report::Record;
    let out = commvar(&["support", "--lambda", "6,0", "--p", "7", "--r", "2", "--format", "records"]);
    let stdout = String::from_utf8(out.stdout).unwrap();
    let line = stdout.lines().next().unwrap();
    let parsed = Record::parse_line(line).unwrap();
    assert_eq!(parsed.to_line().unwrap(), line);
}
