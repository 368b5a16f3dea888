use std::io::Write;
use std::path::Path;

use fock_spectra::RealSetUnion;
use fockspec_cli::{run, Outcome, EXIT_MISMATCH, EXIT_OK, EXIT_USAGE};
use tempfile::{NamedTempFile, TempDir};

fn spec_file(contents: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    f
}

fn fockspec(args: &[&str]) -> Outcome {
    run(std::iter::once("fockspec").chain(args.iter().copied()))
}

fn path(f: &NamedTempFile) -> &str {
    f.path().to_str().unwrap()
}

#[test]
fn point_sum_of_two_levels() {
    let f = spec_file("point 1 1\npoint 2 2\n");
    let out = fockspec(&["point-sum", "--spec", path(&f), "--n", "2"]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    assert_eq!(out.stdout, "3\n4\n");
}

#[test]
fn point_prod_inserts_zero() {
    let f = spec_file("point 0 1\npoint 1 1\npoint 2 1\n");
    let out = fockspec(&["point-prod", "--spec", path(&f), "--n", "2"]);
    assert_eq!(out.stdout, "0\n2\n");
}

#[test]
fn rationals_render_reduced() {
    let f = spec_file("point 1/2 1\npoint 0.75 1\n");
    let out = fockspec(&["point-sum", "--spec", path(&f), "--n", "2"]);
    assert_eq!(out.stdout, "5/4\n");
    let out = fockspec(&["point-prod", "--spec", path(&f), "--n", "2"]);
    assert_eq!(out.stdout, "3/8\n");
}

#[test]
fn vacuum_only() {
    let f = spec_file("point 1 1\npoint 2 2\n");
    let out = fockspec(&["dgamma", "--spec", path(&f), "--nmax", "0"]);
    assert_eq!(out.code, EXIT_OK);
    assert_eq!(out.stdout, "0\n");
    assert!(out.stderr.starts_with("complete: no"), "{}", out.stderr);
}

#[test]
fn dgamma_window_reports_completeness() {
    let f = spec_file("point 1 inf\n");
    let out = fockspec(&["dgamma", "--spec", path(&f), "--nmax", "3", "--window", "0:3"]);
    assert_eq!(out.stdout, "0\n1\n2\n3\n");
    assert_eq!(out.stderr, "complete: yes, required nmax: 3, spectral gap: 1\n");

    let out = fockspec(&["dgamma", "--spec", path(&f), "--nmax", "2", "--window", "0:3"]);
    assert!(out.stderr.starts_with("complete: no"));
}

#[test]
fn dgamma_point_flag() {
    let f = spec_file("point 1 1\npoint 2 2\ninterval 5 6\n");
    let out = fockspec(&["dgamma", "--spec", path(&f), "--nmax", "3", "--point"]);
    assert_eq!(out.stdout, "0\n1\n2\n3\n4\n5\n");
    let out = fockspec(&["dgamma", "--spec", path(&f), "--nmax", "3", "--point", "--window", "2:4"]);
    assert_eq!(out.stdout, "2\n3\n4\n");
}

#[test]
fn gamma_rejects_window() {
    let f = spec_file("point 2 1\n");
    let out = fockspec(&["gamma", "--spec", path(&f), "--nmax", "1", "--window", "0:1"]);
    assert_eq!(out.code, EXIT_USAGE);
    let out = fockspec(&["gamma", "--spec", path(&f), "--nmax", "1"]);
    assert_eq!(out.stdout, "1\n2\n");
}

#[test]
fn spectrum_sum_with_intervals() {
    let f = spec_file("point 0 inf\ninterval 1 2\n");
    let out = fockspec(&["spectrum-sum", "--spec", path(&f), "--n", "2"]);
    assert_eq!(out.stdout, "0\n[1, 4]\n");
    let rendered: RealSetUnion = out.stdout.parse().unwrap();
    assert_eq!(rendered.to_string() + "\n", out.stdout);

    let out = fockspec(&["spectrum-sum", "--spec", path(&f), "--n", "2", "--format", "csv"]);
    assert_eq!(out.stdout, "0\n1,4\n");
}

#[test]
fn spectrum_prod_essential_zero() {
    let f = spec_file("point 2 1\nepoint 0\ninterval 1 3\n");
    let out = fockspec(&["spectrum-prod", "--spec", path(&f), "--n", "2"]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    assert_eq!(out.stdout, "0\n[1, 9]\n");
}

#[test]
fn tensor_products() {
    let a = spec_file("point 1 1\npoint 2 1\n");
    let b = spec_file("point 0 1\npoint 3 1\n");
    let out = fockspec(&["tensor-sum", "--spec", path(&a), "--spec", path(&b)]);
    assert_eq!(out.stdout, "1\n2\n4\n5\n");
    let out = fockspec(&["tensor-prod", "--spec", path(&a), "--spec", path(&b)]);
    assert_eq!(out.stdout, "0\n3\n6\n");
}

#[test]
fn verify_fifty_trials() {
    let out = fockspec(&["verify", "--dim", "5", "--n", "2", "--trials", "50", "--seed", "1", "--mode", "sum"]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    assert_eq!(out.stdout, "50/50 matched\n");
}

#[test]
fn verify_csv_rows() {
    let out = fockspec(&["verify", "--dim", "4", "--n", "3", "--trials", "4", "--mode", "product", "--format", "csv"]);
    assert_eq!(out.code, EXIT_OK);
    let lines: Vec<_> = out.stdout.lines().collect();
    assert_eq!(lines[0], "trial,matched,max_deviation");
    assert_eq!(lines.len(), 5);
    assert!(lines[1..].iter().all(|l| l.split(',').nth(1) == Some("true")));
}

#[test]
fn verify_mismatch_exit_code() {
    // A negative tolerance is rejected; an absurdly tight one forces mismatches
    // once floating-point noise exceeds it.
    let out = fockspec(&["verify", "--dim", "8", "--n", "4", "--trials", "5", "--tol", "1e-300"]);
    assert_eq!(out.code, EXIT_MISMATCH, "{}", out.stdout);
    assert!(out.stderr.contains("trial"));
    let out = fockspec(&["verify", "--dim", "3", "--n", "1", "--tol", "-1"]);
    assert_eq!(out.code, EXIT_USAGE);
}

#[test]
fn verify_rejects_large_dimension() {
    let out = fockspec(&["verify", "--dim", "13", "--n", "2"]);
    assert_eq!(out.code, EXIT_USAGE);
    let out = fockspec(&["verify", "--dim", "3", "--n", "4"]);
    assert_eq!(out.code, EXIT_USAGE);
}

#[test]
fn dirac_modes() {
    assert_eq!(fockspec(&["dirac", "--r3", "3"]).stdout, "8\n");
    assert_eq!(fockspec(&["dirac", "--r3", "7"]).stdout, "0\n");

    let out = fockspec(&["dirac", "--nmax", "2"]);
    assert_eq!(out.stdout, "0 0 4\n1 1 24\n2 1.41421356237 48\n");
    let out = fockspec(&["dirac", "--nmax", "1", "--format", "csv"]);
    assert_eq!(out.stdout, "n,energy,multiplicity\n0,0,4\n1,1,24\n");

    assert_eq!(fockspec(&["dirac", "--n", "5"]).stdout, "1\n");
    assert_eq!(fockspec(&["dirac", "--n", "28"]).stdout, "24\n");
    assert_eq!(fockspec(&["dirac", "--M", "1", "--cutoff", "0.5"]).stdout, "0\n");
    assert_eq!(fockspec(&["dirac", "--cutoff", "1.5"]).stdout, "0\n1\n1.41421356237\n");
}

#[test]
fn dirac_invalid_params() {
    assert_eq!(fockspec(&["dirac", "--L", "0", "--n", "1"]).code, EXIT_USAGE);
    assert_eq!(fockspec(&["dirac", "--M", "-1", "--n", "1"]).code, EXIT_USAGE);
    assert_eq!(fockspec(&["dirac"]).code, EXIT_USAGE);
}

#[test]
fn usage_errors() {
    let out = fockspec(&["frobnicate"]);
    assert_eq!(out.code, EXIT_USAGE);
    assert!(out.stderr.contains("Usage"));
    assert!(out.stdout.is_empty());

    let out = fockspec(&["point-sum", "--n", "2"]);
    assert_eq!(out.code, EXIT_USAGE);
    let out = fockspec(&["point-sum", "--spec", "x", "--n", "2", "--bogus"]);
    assert_eq!(out.code, EXIT_USAGE);
    let out = fockspec(&["dgamma", "--spec", "x", "--nmax", "1", "--window", "3:1"]);
    assert_eq!(out.code, EXIT_USAGE);
}

#[test]
fn help_goes_to_stdout() {
    let out = fockspec(&["--help"]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.contains("point-sum"));
}

#[test]
fn file_errors() {
    let dir = TempDir::new().unwrap();
    let missing = dir.path().join("missing.txt");
    let out = fockspec(&["point-sum", "--spec", missing.to_str().unwrap(), "--n", "1"]);
    assert_eq!(out.code, EXIT_USAGE);
    assert!(out.stderr.contains("cannot read"));

    let bad = spec_file("point 1 1\nbanana 2\n");
    let out = fockspec(&["point-sum", "--spec", path(&bad), "--n", "1"]);
    assert_eq!(out.code, EXIT_USAGE);
    assert!(out.stderr.contains("line 2"), "{}", out.stderr);

    let dup = spec_file("point 1 1\npoint 1 2\n");
    let out = fockspec(&["point-sum", "--spec", path(&dup), "--n", "1"]);
    assert_eq!(out.code, EXIT_USAGE);
    assert!(out.stderr.contains("line 2"), "{}", out.stderr);
}

#[test]
fn deterministic_output() {
    let f = spec_file("point -1 2\npoint 1/3 1\npoint 4 inf\ninterval 6 7\n");
    let argv = ["spectrum-sum", "--spec", path(&f), "--n", "3"];
    let first = fockspec(&argv);
    assert_eq!(first.code, EXIT_OK);
    for _ in 0..3 {
        assert_eq!(fockspec(&argv), first);
    }
    let v = ["verify", "--dim", "6", "--n", "3", "--trials", "5", "--seed", "9", "--format", "csv"];
    assert_eq!(fockspec(&v), fockspec(&v));
}

#[test]
fn binary_runs() {
    let exe = Path::new(env!("CARGO_BIN_EXE_fockspec"));
    let f = spec_file("point 1 1\npoint 2 2\n");
    let out = std::process::Command::new(exe)
        .args(["point-sum", "--spec", path(&f), "--n", "2"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "3\n4\n");

    let out = std::process::Command::new(exe).arg("nope").output().unwrap();
    assert_eq!(out.status.code(), Some(1));
}
