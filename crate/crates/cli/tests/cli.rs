//! End-to-end checks of the command-line surface: exit codes, JSON shapes,
//! certificate round-trips, and seed reproducibility.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_bergecov"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("spawn bergecov")
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, text).unwrap();
    path.to_string_lossy().into_owned()
}

fn stdout_json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "bad json ({e}): {}\nstderr: {}",
            String::from_utf8_lossy(&out.stdout),
            String::from_utf8_lossy(&out.stderr)
        )
    })
}

const K35: &str = "n 5\ne 1 2 3\ne 1 2 4\ne 1 2 5\ne 1 3 4\ne 1 3 5\ne 1 4 5\ne 2 3 4\ne 2 3 5\ne 2 4 5\ne 3 4 5\n";
const FOUR_TRIPLES: &str = "n 5\ne 1 2 3\ne 1 4 5\ne 2 4 5\ne 3 4 5\n";

#[test]
fn validate_reports_and_rejects() {
    let dir = tempfile::tempdir().unwrap();
    let good = write(dir.path(), "good.hg", FOUR_TRIPLES);
    let out = run(&["validate", &good]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["n"], 5);
    assert_eq!(v["m"], 4);
    assert_eq!(v["covering"], true);

    // duplicate edge: exit code 2 and a message naming the duplicate
    let bad = write(dir.path(), "bad.hg", "n 3\ne 1 2 3\ne 3 2 1\n");
    let out = run(&["validate", &bad]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("duplicate"), "stderr: {err}");

    // JSON mirror input works too
    let js = write(dir.path(), "mini.json", r#"{"n": 4, "edges": [[1,2],[1,2,3]]}"#);
    let out = run(&["validate", &js]);
    assert!(out.status.success());
}

#[test]
fn find_path_round_trips_through_verify() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "h.hg", FOUR_TRIPLES);
    let out = run(&["find-path", &file]);
    assert!(out.status.success());
    let cert = write(
        dir.path(),
        "cert.json",
        &String::from_utf8_lossy(&out.stdout),
    );
    let out = run(&["verify", &file, "--certificate", &cert]);
    assert!(out.status.success());
    assert_eq!(stdout_json(&out)["valid"], true);

    // tampering with the base breaks verification (exit 2)
    let broken = write(dir.path(), "broken.json", r#"{"base":[1,2,3,4,4],"edges":[0,1,2,3]}"#);
    let out = run(&["verify", &file, "--certificate", &broken]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn find_cycle_all_emits_every_length() {
    let dir = tempfile::tempdir().unwrap();
    let gen = run(&["gen", "-n", "6", "--seed", "7"]);
    assert!(gen.status.success());
    let file = write(dir.path(), "g6.hg", &String::from_utf8_lossy(&gen.stdout));
    let out = run(&["find-cycle", &file, "--all"]);
    assert!(out.status.success());
    let arr = stdout_json(&out);
    let arr = arr.as_array().unwrap();
    assert_eq!(arr.len(), 4); // lengths 3..=6
    for (i, cert) in arr.iter().enumerate() {
        assert_eq!(cert["base"].as_array().unwrap().len(), i + 3);
        let path = write(dir.path(), &format!("c{i}.json"), &cert.to_string());
        let check = run(&["verify", &file, "--certificate", &path, "--kind", "cycle"]);
        assert!(check.status.success());
    }
}

#[test]
fn precondition_failures_use_exit_code_2() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "small.hg", FOUR_TRIPLES);
    // n = 5 is below the cycle finder threshold
    let out = run(&["find-cycle", &file, "-s", "5"]);
    assert_eq!(out.status.code(), Some(2));

    let not_covering = write(dir.path(), "nc.hg", "n 4\ne 1 2 3\n");
    let out = run(&["find-path", &not_covering]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("covering"));
}

#[test]
fn oracle_agrees_with_pigeonhole() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "four.hg", FOUR_TRIPLES);
    let out = run(&["oracle", "cycle", &file, "-s", "5"]);
    assert!(out.status.success());
    assert_eq!(stdout_json(&out)["exists"], false);

    let out = run(&["oracle", "cycle", &file, "-s", "3"]);
    assert_eq!(stdout_json(&out)["exists"], true);

    let out = run(&["oracle", "path", &file, "-t", "5"]);
    assert_eq!(stdout_json(&out)["exists"], true);
}

#[test]
fn lagrangian_hits_the_closed_form() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "k35.hg", K35);
    let out = run(&["lagrangian", &file, "--restarts", "16"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    let value = v["value"].as_f64().unwrap();
    assert!((value - 0.08).abs() < 1e-6, "value {value}");
    assert_eq!(v["support"].as_array().unwrap().len(), 5);
}

#[test]
fn verify_bound_modes() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "k35.hg", K35);
    let out = run(&[
        "verify-bound", &file, "-t", "6", "--mode", "cycle", "--restarts", "16",
    ]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["holds"], true);
    assert_eq!(v["bound"]["numer"], 2);
    assert_eq!(v["bound"]["denom"], 25);

    // a complete 3-graph on 6 vertices contains the forbidden cycle
    let mut k36 = String::from("n 6\n");
    for a in 1..=6u32 {
        for b in a + 1..=6 {
            for c in b + 1..=6 {
                k36.push_str(&format!("e {a} {b} {c}\n"));
            }
        }
    }
    let file = write(dir.path(), "k36.hg", &k36);
    let out = run(&[
        "verify-bound", &file, "-t", "6", "--mode", "cycle", "--restarts", "8",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn rainbow_export_is_bounded() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "four.hg", FOUR_TRIPLES);
    let out = run(&["rainbow-export", &file]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["pairs"].as_array().unwrap().len(), 10);
    assert!(v["boundedness"].as_u64().unwrap() <= 3);
}

#[test]
fn gen_is_bit_reproducible() {
    let a = run(&["gen", "-n", "9", "--seed", "123", "--extra", "3", "--pairs"]);
    let b = run(&["gen", "-n", "9", "--seed", "123", "--extra", "3", "--pairs"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let c = run(&["gen", "-n", "9", "--seed", "124", "--extra", "3", "--pairs"]);
    assert_ne!(a.stdout, c.stdout);

    // the JSON mirror round-trips through validate
    let dir = tempfile::tempdir().unwrap();
    let j = run(&["gen", "-n", "7", "--seed", "5", "--json"]);
    assert!(j.status.success());
    let file = write(dir.path(), "gen.json", &String::from_utf8_lossy(&j.stdout));
    let out = run(&["validate", &file]);
    assert!(out.status.success());
    assert_eq!(stdout_json(&out)["covering"], true);
}

#[test]
fn remark5_census_at_reduced_scope() {
    // nmax 4 keeps this test quick; the full census runs in the acceptance
    // suite of the core crate
    let out = bin().args(["remark5", "--nmax", "4", "--jobs", "2"]).output().unwrap();
    assert!(out.status.success());
    let v = stdout_json(&out);
    let failures = v["failures"].as_array().unwrap();
    assert_eq!(failures.len(), 1);
    assert_eq!(failures[0]["n"], 4);
    assert_eq!(failures[0]["missing_lengths"].as_array().unwrap().len(), 1);
}

#[test]
fn conjecture_probe() {
    let out = run(&["conjecture", "-k", "4", "-n", "5", "--mode", "exhaustive"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["checked"], 16);
    assert_eq!(v["counterexamples"].as_array().unwrap().len(), 0);
}

#[test]
fn shadow_and_covering_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "one.hg", "n 4\ne 1 2 3\n");
    let out = run(&["shadow", &file]);
    let v = stdout_json(&out);
    assert_eq!(v["pairs"].as_array().unwrap().len(), 3);

    let out = run(&["covering", &file]);
    let v = stdout_json(&out);
    assert_eq!(v["covering"], false);
    assert_eq!(v["min_codegree"], 0);
    assert_eq!(v["first_uncovered_pair"], serde_json::json!([1, 4]));
}
