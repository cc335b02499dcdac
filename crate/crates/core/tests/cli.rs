use std::process::{Command, Output};

use tripent::scenario::{ChiReport, Snapshot, WalkRow};

fn tripent(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tripent")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn chi_reports_both_measures() {
    let csv = stdout(&tripent(&["chi"]));
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("eps_G,eps_T"));
    let values: Vec<f64> = lines.next().unwrap().split(',').map(|v| v.parse().unwrap()).collect();
    assert!((values[0] - (33f64.sqrt() / 3.0 - 1.0)).abs() < 1e-11);
    assert_eq!(values[1], 0.0);

    let json = stdout(&tripent(&["chi", "--format", "json"]));
    let report: ChiReport = serde_json::from_str(&json).unwrap();
    assert!((report.eps_g - values[0]).abs() < 1e-11);

    let permuted = stdout(&tripent(&["chi", "--partition", "3|1|2"]));
    assert_eq!(permuted, csv);
}

#[test]
fn walk_csv_shape_and_first_row() {
    let csv = stdout(&tripent(&["walk", "--steps", "40", "--tau-max", "2"]));
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "tau,P_111,N_A-BC,N_B-AC,N_C-AB,TPN,eps_T");
    assert_eq!(lines.len(), 42);
    assert_eq!(lines[1], "0,0,0,0,0,0,0");
    assert!(lines[41].starts_with("2,"));
}

#[test]
fn walk_json_round_trips() {
    let json = stdout(&tripent(&["walk", "--steps", "4", "--stats", "bosons", "--partition", "1,4|2,5|3,6", "--format", "json"]));
    let rows: Vec<WalkRow> = serde_json::from_str(&json).unwrap();
    assert_eq!(rows.len(), 5);
    for r in &rows {
        assert!(r.eps_t >= 0.0 && r.eps_t <= r.p111 + 1e-12);
    }
}

#[test]
fn phi_scan_grid() {
    let csv = stdout(&tripent(&["phi-scan", "--alpha-steps", "5", "--beta-steps", "5"]));
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "alpha,beta,eps_T,eps_G");
    assert_eq!(lines.len(), 26);
    for line in &lines[1..] {
        let v: Vec<f64> = line.split(',').map(|x| x.parse().unwrap()).collect();
        assert!(v[3] >= v[2] - 1e-9);
    }
}

#[test]
fn snapshot_outputs() {
    let json = stdout(&tripent(&["snapshot", "--tau", "0", "--format", "json"]));
    let snap: Snapshot = serde_json::from_str(&json).unwrap();
    assert_eq!(snap.g, vec![0.0, 2.0, 1.0, 0.0, 0.0, 0.0]);
    assert_eq!(snap.rho, vec![1.0, 1.0, 1.0, 0.0, 0.0, 0.0]);

    let csv = stdout(&tripent(&["snapshot"]));
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "quantity,r,s,value");
    assert_eq!(lines.len(), 1 + 6 + 36 + 6);
    assert!(lines[1].starts_with("rho,1,,"));
}

#[test]
fn output_is_deterministic_and_file_backed() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    for path in [&a, &b] {
        let out = tripent(&["walk", "--steps", "50", "--partition", "1,4|2,5|3,6", "--out", path.to_str().unwrap()]);
        assert!(out.status.success());
        assert!(out.stdout.is_empty());
    }
    let a = std::fs::read(a).unwrap();
    assert_eq!(a, std::fs::read(b).unwrap());
    assert_eq!(a, tripent(&["walk", "--steps", "50", "--partition", "1,4|2,5|3,6"]).stdout);
}

#[test]
fn bad_configurations_exit_with_two() {
    for args in [
        &["walk", "--partition", "1,2|3,4"][..],
        &["walk", "--partition", "1,2|2,3|4,5,6"],
        &["chi", "--partition", "1,2|3|4"],
        &["phi-scan", "--partition", "1|2|3,4,5,6"],
        &["walk", "--particles", "2"],
        &["snapshot", "--stats", "fermions", "--particles", "7"],
    ] {
        let out = tripent(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));
    }
    let out = tripent(&["walk", "--stats", "anyons"]);
    assert!(!out.status.success());
}
