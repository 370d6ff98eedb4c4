//! End-to-end tests of the command-line interface and its exit codes:
//! 0 = verified, 1 = a verification step failed, 2 = usage/config/IO error.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_bigmcg"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn temp_dir(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("bigmcg-cli-{tag}-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn verify_single_lemma_passes() {
    let out = run(&["verify", "--ends", "7", "--lemma", "main-n7"]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("PASS"));
}

#[test]
fn verify_rejects_inapplicable_script() {
    let out = run(&["verify", "--ends", "3", "--lemma", "lem5"]);
    assert_eq!(code(&out), 2);
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("not applicable"), "stderr: {err}");
}

#[test]
fn verify_range_all_emits_one_report_per_applicable_pair() {
    let out = run(&["verify", "--ends", "3..8", "--all", "--json", "--jobs", "4"]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let reports: serde_json::Value =
        serde_json::from_slice(&out.stdout).expect("json report array");
    let arr = reports.as_array().expect("array");
    // lem33/lem44/lemthm/lem6/main-n3 at 6 values of n, lem4/main-n7 at 2,
    // lem5/main-n6 at 1 each.
    assert_eq!(arr.len(), 5 * 6 + 2 * 2 + 2);
    for r in arr {
        assert_eq!(r["passed"], serde_json::Value::Bool(true));
    }
}

#[test]
fn verify_unknown_lemma_is_usage_error() {
    let out = run(&["verify", "--ends", "4", "--lemma", "nope"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn eval_prints_curve_image() {
    let out = run(&["eval", "h[1]", "--on", "c0[1]", "--ends", "5"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8_lossy(&out.stdout);
    assert_eq!(text.trim(), "a[2,1] + a[2,2]");
}

#[test]
fn eval_empty_word_is_identity() {
    let out = run(&["eval", "", "--ends", "3", "--depth", "5"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("ends: (1)(2)(3)"));
    // Identity matrix: first row starts 1 0 ...
    assert!(text.starts_with("1 0"));
}

#[test]
fn eval_perm_prints_the_cycle() {
    let out = run(&["eval", "rho1*rho2", "--perm", "--ends", "5"]);
    assert_eq!(code(&out), 0);
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "(1 2 3 4 5)");
}

#[test]
fn eval_parse_error_is_usage_error() {
    let out = run(&["eval", "A[1,1]*?", "--ends", "3"]);
    assert_eq!(code(&out), 2);
    let out = run(&["eval", "h[1]", "--on", "a[2,6]", "--ends", "3"]);
    assert_eq!(code(&out), 2, "out-of-window evaluation is a usage error");
}

#[test]
fn init_writes_a_valid_model_and_respects_bounds() {
    let dir = temp_dir("init");
    let out = run(&["init", "--ends", "6", "--depth", "6", "--out", dir.to_str().unwrap()]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let atlas_path = dir.join("atlas-n6-g6.json");
    assert!(atlas_path.exists());
    // Every applicable script lands next to it.
    for id in ["lem33", "lem44", "lemthm", "lem5", "lem6", "main-n6", "main-n3"] {
        assert!(dir.join(format!("{id}-n6.json")).exists(), "{id}");
    }
    assert!(!dir.join("lem4-n6.json").exists());

    // The written atlas loads back and verifies.
    let out = run(&[
        "verify",
        "--ends",
        "6",
        "--lemma",
        "lem5",
        "--atlas",
        atlas_path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    std::fs::remove_dir_all(&dir).ok();

    let out = run(&["init", "--ends", "1", "--out", "/tmp/unused-bigmcg"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn init_slot_count_matches_enumeration() {
    // depth-5 window on 8 arms: 8*5 handle slots per family in the lattice.
    let dir = temp_dir("slots");
    let out = run(&["init", "--ends", "8", "--depth", "5", "--out", dir.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let text = std::fs::read_to_string(dir.join("atlas-n8-g5.json")).unwrap();
    let file: serde_json::Value = serde_json::from_str(&text).unwrap();
    let curves = file["curves"].as_array().unwrap();
    let count = |fam: &str, primed: bool| {
        curves
            .iter()
            .filter(|c| {
                c["family"] == fam
                    && c.get("primed").and_then(|p| p.as_bool()).unwrap_or(false) == primed
            })
            .count()
    };
    assert_eq!(count("a", false), 40);
    assert_eq!(count("a", true), 40);
    assert_eq!(count("b", false), 40);
    assert_eq!(count("c", false), 8 * 4);
    assert_eq!(count("c0", false), 8);
    assert_eq!(count("d", false), 2);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn report_rerenders_saved_json() {
    let dir = temp_dir("report");
    let json = bin()
        .args(["verify", "--ends", "6", "--lemma", "main-n6", "--json"])
        .output()
        .unwrap();
    assert_eq!(code(&json), 0);
    let path = dir.join("run.json");
    std::fs::write(&path, &json.stdout).unwrap();
    let out = run(&["report", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("script main-n6"));
    assert!(text.contains("PASS"));
    std::fs::remove_dir_all(&dir).ok();

    let out = run(&["report", "/nonexistent/nope.json"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn model_dir_env_is_honoured() {
    let dir = temp_dir("envdir");
    let out = run(&["init", "--ends", "4", "--depth", "6", "--out", dir.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let out = bin()
        .env("BIGMCG_MODEL_DIR", &dir)
        .args(["verify", "--ends", "4", "--lemma", "lem33"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));

    // A corrupt model directory surfaces as a usage error.
    std::fs::write(dir.join("atlas-n4-g6.json"), "{ bad json").unwrap();
    let out = bin()
        .env("BIGMCG_MODEL_DIR", &dir)
        .args(["verify", "--ends", "4", "--lemma", "lem33"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn mismatched_atlas_is_rejected() {
    let dir = temp_dir("mismatch");
    let out = run(&["init", "--ends", "5", "--depth", "6", "--out", dir.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let atlas = dir.join("atlas-n5-g6.json");
    let out = run(&[
        "verify",
        "--ends",
        "6",
        "--lemma",
        "lem33",
        "--atlas",
        atlas.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 2);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn determinism_across_runs_and_jobs() {
    let a = run(&["verify", "--ends", "3..5", "--all", "--json"]);
    let b = run(&["verify", "--ends", "3..5", "--all", "--json", "--jobs", "8"]);
    assert_eq!(code(&a), 0);
    assert_eq!(code(&b), 0);
    assert_eq!(a.stdout, b.stdout, "reports must not depend on scheduling");
}
