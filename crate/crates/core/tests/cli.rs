use std::process::{Command, Output};

use ces_orlicz::{parse_phi, parse_witness, verify_witness};

fn fixture(name: &str) -> String {
    format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ces-orlicz")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn parse_interval(line: &str) -> (f64, f64) {
    let inner = line.split('[').nth(1).unwrap().trim_end().trim_end_matches(']');
    let (lo, hi) = inner.split_once(", ").unwrap();
    (lo.parse().unwrap(), hi.parse().unwrap())
}

#[test]
fn phi_check_reports_structure() {
    let o = run(&["phi-check", &fixture("phi_rot.txt")]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("a_phi: 0\n"));
    assert!(out.contains("sai: [0.1, 0.3]"));
    assert!(out.contains("property: DELTA2_AT_ZERO\nverdict: HOLDS"));
    assert!(out.contains("property: LOWER_INDEX\nverdict: HOLDS"));
}

#[test]
fn norm_of_first_unit_vector() {
    let o = run(&["norm", &fixture("phi_p2.txt"), &fixture("e1.txt"), "--tol", "1e-6"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("norm: ["));
    let (lo, hi) = parse_interval(&out);
    let expected = std::f64::consts::PI / 6f64.sqrt();
    assert!(lo <= expected && expected <= hi && hi - lo <= 1.1e-6, "{out}");
}

#[test]
fn modular_and_alpha() {
    let o = run(&["modular", &fixture("phi_p2.txt"), &fixture("e1.txt")]);
    assert_eq!(o.status.code(), Some(0));
    let (lo, hi) = parse_interval(&stdout(&o));
    let z2 = std::f64::consts::PI.powi(2) / 6.0;
    assert!((lo - z2).abs() < 1e-7 && (hi - z2).abs() < 1e-7);
    let o = run(&["alpha", &fixture("phi_p2.txt"), "--tol", "1e-6"]);
    assert_eq!(o.status.code(), Some(0));
    let (lo, hi) = parse_interval(&stdout(&o));
    let expected = 1.0 / (4.0 * z2 - 3.0).sqrt();
    assert!(lo - 1e-8 <= expected && expected <= hi + 1e-8);
}

#[test]
fn certify_trivial_space() {
    let o = run(&["certify", &fixture("phi_abs.txt")]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("property: NONTRIVIAL\nverdict: FAILS\n"));
    assert_eq!(out.matches("error: TRIVIAL_SPACE").count(), 4);
}

#[test]
fn certify_rotundity_failure() {
    let o = run(&["certify", &fixture("phi_rot.txt")]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("property: ROTUND\nverdict: FAILS"));
    assert!(out.contains("witness: ROTUNDITY_FAILURE"));
    let o = run(&["certify", &fixture("phi_shifted.txt")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("property: ROTUND\nerror: DELTA2_REQUIRED"));
}

#[test]
fn witness_output_reverifies() {
    let o = run(&["witness", &fixture("phi_rot.txt"), "--kind", "rotund", "--tol", "1e-8"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let w = parse_witness(&stdout(&o)).unwrap();
    let phi = parse_phi(&std::fs::read_to_string(fixture("phi_rot.txt")).unwrap()).unwrap();
    assert!(verify_witness(&phi, &w, 1e-8).passed());

    let o = run(&["witness", &fixture("phi_shifted.txt"), "--kind", "sm"]);
    assert_eq!(o.status.code(), Some(0));
    let w = parse_witness(&stdout(&o)).unwrap();
    assert_eq!(w.x.head(), &[2.0]);
    assert_eq!(w.y.head(), &[2.0, 0.0, 1.0]);
}

#[test]
fn witness_unavailable_is_a_certification_failure() {
    for (f, kind) in [("phi_p2.txt", "rotund"), ("phi_p2.txt", "sm"), ("phi_shifted.txt", "rotund")] {
        let o = run(&["witness", &fixture(f), "--kind", kind]);
        assert_eq!(o.status.code(), Some(1), "{f} {kind}");
        assert_eq!(stderr(&o).lines().count(), 1);
    }
}

#[test]
fn suite_runs_and_is_deterministic() {
    let args = ["suite", &fixture("phi_p2.txt"), "--seed", "3", "--trials", "3", "--tol", "1e-6"];
    let a = run(&args);
    assert_eq!(a.status.code(), Some(0), "{}", stdout(&a));
    assert!(stdout(&a).contains("total_failures=0"));
    assert_eq!(stdout(&a), stdout(&run(&args)));
    let o = run(&["suite", &fixture("phi_abs.txt"), "--trials", "2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("check=precondition_nontrivial"));
}

#[test]
fn input_errors_exit_two_with_one_line() {
    let cases: Vec<Vec<String>> = vec![
        vec!["phi-check".into(), fixture("phi_bad.txt")],
        vec!["phi-check".into(), fixture("missing.txt")],
        vec!["norm".into(), fixture("phi_p2.txt"), fixture("e1.txt"), "--bogus".into()],
        vec!["norm".into(), fixture("phi_p2.txt"), fixture("e1.txt"), "--tol".into(), "-1".into()],
        vec!["norm".into(), fixture("phi_p2.txt"), fixture("phi_p2.txt")],
        vec!["witness".into(), fixture("phi_rot.txt"), "--kind".into(), "other".into()],
        vec!["frobnicate".into()],
        vec![],
    ];
    for args in cases {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let o = run(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert_eq!(stderr(&o).lines().count(), 1, "{args:?}: {}", stderr(&o));
        assert!(stdout(&o).is_empty());
    }
    let o = run(&["phi-check", &fixture("phi_bad.txt")]);
    assert_eq!(stderr(&o).trim(), "error: INVALID_PHI: convexity violated at piece 2");
}

#[test]
fn output_flag_writes_file() {
    let path = std::env::temp_dir().join(format!("ces-orlicz-cli-{}.txt", std::process::id()));
    let o = run(&["alpha", &fixture("phi_p2.txt"), "-o", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).is_empty());
    assert!(std::fs::read_to_string(&path).unwrap().starts_with("alpha: ["));
    std::fs::remove_file(path).unwrap();
}
