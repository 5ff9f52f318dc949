use std::fs;

use assert_cmd::Command;
use tempfile::tempdir;

fn bin() -> Command {
    Command::cargo_bin("bicyclic").unwrap()
}

fn stdout(cmd: &mut Command) -> String {
    let out = cmd.assert().success().get_output().stdout.clone();
    String::from_utf8(out).unwrap()
}

#[test]
fn construct_and_inspect() {
    let dir = tempdir().unwrap();
    let g6 = stdout(bin().args(["construct", "--family", "M", "--n", "12", "--alpha", "6", "--out", "g6"]));
    assert_eq!(g6.lines().count(), 1);
    let file = dir.path().join("m.g6");
    fs::write(&file, &g6).unwrap();
    let path = file.to_str().unwrap();

    let inv = stdout(bin().args(["invariants", "--in", path, "--csv"]));
    let mut lines = inv.lines();
    assert_eq!(lines.next(), Some("n,m,alpha,alphaPrime,beta,betaPrime,pendants,vPrime"));
    assert!(lines.next().unwrap().starts_with("12,13,6,"));

    let poly = stdout(bin().args(["poly", "--in", path, "--format", "coeffs"]));
    let coeffs: Vec<i64> = poly.split_whitespace().map(|c| c.parse().unwrap()).collect();
    assert_eq!(coeffs.len(), 13);
    assert_eq!(coeffs[12], 1);

    let rho = stdout(bin().args(["rho", "--in", path, "--tol", "1e-9", "--csv"]));
    let row: Vec<&str> = rho.lines().nth(1).unwrap().split(',').collect();
    let (lo, hi): (f64, f64) = (row[2].parse().unwrap(), row[3].parse().unwrap());
    assert_eq!(&row[..2], ["12", "13"]);
    assert!(lo <= 3.18695157621 && 3.1869515762 <= hi && hi - lo <= 1e-9);
}

#[test]
fn enumerate_to_file() {
    let dir = tempdir().unwrap();
    let out = dir.path().join("g.g6");
    let assert = bin().args(["enumerate", "--n", "7", "--out", out.to_str().unwrap()]).assert().success();
    let err = String::from_utf8(assert.get_output().stderr.clone()).unwrap();
    assert!(err.contains("67 graphs total"));
    assert_eq!(fs::read_to_string(&out).unwrap().lines().count(), 67);
    let brute = stdout(bin().args(["enumerate", "--n", "7", "--alpha", "3", "--mode", "bruteforce"]));
    let structured = stdout(bin().args(["enumerate", "--n", "7", "--alpha", "3"]));
    assert_eq!(brute.lines().count(), structured.lines().count());
}

#[test]
fn verify_small_n_is_report_only() {
    let out = stdout(bin().args(["verify", "--n", "8"]));
    assert!(out.starts_with("n,alpha,class_size,c1,c2,c3,max_g6,rho_lo,rho_hi,unique,matches_family"));
    assert!(!out.contains("\nFAIL"));
}

#[test]
fn verify_ten_passes() {
    let out = stdout(bin().args(["verify", "--n", "10"]));
    assert!(out.contains("PASS n=10 alpha=4 maximizer is F(10)"));
    assert!(out.contains("PASS n=10 alpha=5 maximizer is M(10,5)"));
}

#[test]
fn sweep_writes_reports() {
    let dir = tempdir().unwrap();
    let cfg = dir.path().join("sweep.cfg");
    let out_dir = dir.path().join("out");
    fs::write(&cfg, format!("n_min = 6\nn_max = 9\nthreads = 1\nout_dir = {}\n", out_dir.display())).unwrap();
    bin().args(["sweep", cfg.to_str().unwrap()]).assert().success();
    let csv = fs::read_to_string(out_dir.join("sweep.csv")).unwrap();
    assert!(csv.starts_with("n,alpha,class_size"));
    assert!(fs::read_to_string(out_dir.join("summary.md")).unwrap().contains("below theorem range"));
}

#[test]
fn malformed_config_is_usage_error() {
    let dir = tempdir().unwrap();
    let cfg = dir.path().join("bad.cfg");
    fs::write(&cfg, "n_min = 10\nmax_n = 12\n").unwrap();
    let assert = bin().args(["sweep", cfg.to_str().unwrap()]).assert().code(2);
    assert!(String::from_utf8_lossy(&assert.get_output().stderr).contains("max_n"));
}

#[test]
fn usage_errors_exit_two() {
    bin().args(["enumerate"]).assert().code(2);
    bin().args(["enumerate", "--n", "3"]).assert().code(2);
    bin().args(["construct", "--family", "Q", "--n", "10"]).assert().code(2);
    bin().args(["construct", "--family", "M", "--n", "10", "--alpha", "9"]).assert().code(2);
    bin().args(["rho", "--in", "/nonexistent/file.g6"]).assert().code(2);
}

#[test]
fn identities_pass() {
    let out = stdout(bin().args(["identities", "--n-min", "10", "--n-max", "11"]));
    assert!(out.contains("PASS rho(F'(10)) < rho(F(10))"));
    assert!(out.contains("REPORT-FAIL identity relation-1 as printed"));
}
