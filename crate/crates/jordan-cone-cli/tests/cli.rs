//! End-to-end tests against the compiled binary: JSON payloads, stderr
//! summaries, determinism, and the exit-code contract.

use std::path::PathBuf;
use std::process::{Command, Output};
use std::sync::atomic::{AtomicU32, Ordering};

static COUNTER: AtomicU32 = AtomicU32::new(0);

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_jordan-cone"))
}

fn scratch(content: &str) -> PathBuf {
    let n = COUNTER.fetch_add(1, Ordering::Relaxed);
    let path = std::env::temp_dir().join(format!("jordan-cone-cli-{}-{n}.json", std::process::id()));
    std::fs::write(&path, content).expect("writable temp dir");
    path
}

fn stdout_json(out: &Output) -> serde_json::Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn algebra_info_reports_dimensions() {
    let alg = scratch(r#"{"variant":"sym","n":3}"#);
    let out = bin().args(["algebra", "info"]).arg(&alg).output().unwrap();
    let v = stdout_json(&out);
    assert_eq!(v["dim"], 6);
    assert_eq!(v["rank"], 3);
    assert_eq!(v["summands"], 1);
}

#[test]
fn metric_hilbert_matches_the_diagonal_closed_form() {
    let x = scratch(r#"{"algebra":{"variant":"diagonal","n":3},"coords":[1.0,2.0,3.0]}"#);
    let e = scratch(r#"{"algebra":{"variant":"diagonal","n":3},"coords":[1.0,1.0,1.0]}"#);
    let out = bin().args(["metric", "hilbert"]).arg(&x).arg(&e).output().unwrap();
    let v = stdout_json(&out);
    let d = v["distance"].as_f64().unwrap();
    assert!((d - 3f64.ln()).abs() < 1e-12);
}

#[test]
fn metric_variation_reports_both_norms() {
    let x = scratch(r#"{"algebra":{"variant":"diagonal","n":3},"coords":[1.0,2.0,4.0]}"#);
    let out = bin().args(["metric", "variation"]).arg(&x).output().unwrap();
    let v = stdout_json(&out);
    assert!((v["variation_seminorm"].as_f64().unwrap() - 3.0).abs() < 1e-12);
    assert!((v["quotient_norm"].as_f64().unwrap() - 1.5).abs() < 1e-12);
}

#[test]
fn dual_decompose_splits_positive_and_negative_mass() {
    let phi =
        scratch(r#"{"representer":{"algebra":{"variant":"diagonal","n":3},"coords":[2.0,-1.0,0.5]}}"#);
    let out = bin().args(["dual", "decompose"]).arg(&phi).output().unwrap();
    let v = stdout_json(&out);
    assert!((v["plus_norm"].as_f64().unwrap() - 2.5).abs() < 1e-12);
    assert!((v["minus_norm"].as_f64().unwrap() - 1.0).abs() < 1e-12);
}

#[test]
fn dual_support_and_extreme() {
    let phi =
        scratch(r#"{"representer":{"algebra":{"variant":"diagonal","n":3},"coords":[2.0,0.0,0.5]}}"#);
    let out = bin().args(["dual", "support"]).arg(&phi).output().unwrap();
    assert_eq!(stdout_json(&out)["rank"], 2);

    let vertex =
        scratch(r#"{"representer":{"algebra":{"variant":"diagonal","n":3},"coords":[1.0,-1.0,0.0]}}"#);
    let out = bin().args(["dual", "extreme"]).arg(&vertex).output().unwrap();
    assert_eq!(stdout_json(&out)["extreme"], true);

    let mid =
        scratch(r#"{"representer":{"algebra":{"variant":"diagonal","n":3},"coords":[1.0,-0.5,-0.5]}}"#);
    let out = bin().args(["dual", "extreme"]).arg(&mid).output().unwrap();
    assert_eq!(stdout_json(&out)["extreme"], false);
}

#[test]
fn group_classify_covers_both_branches() {
    let spin = scratch(r#"{"variant":"spin","n":3}"#);
    let out = bin().args(["group", "classify"]).arg(&spin).output().unwrap();
    assert_eq!(stdout_json(&out)["group"], "projectivities_only");

    let sym = scratch(r#"{"variant":"sym","n":3}"#);
    let out = bin().args(["group", "classify"]).arg(&sym).output().unwrap();
    assert_eq!(stdout_json(&out)["group"], "semidirect_with_c2");
}

#[test]
fn iso_make_verify_factor_pipeline() {
    let alg = scratch(r#"{"variant":"sym","n":2}"#);
    let made = bin()
        .args(["iso", "make", "--kind", "hilbert", "--seed", "11", "--json"])
        .arg(&alg)
        .output()
        .unwrap();
    let iso_json = stdout_json(&made);
    let iso = scratch(&iso_json.to_string());

    let verified = bin()
        .args(["iso", "verify", "--seed", "3", "--samples", "50"])
        .arg(&iso)
        .output()
        .unwrap();
    let v = stdout_json(&verified);
    assert_eq!(v["pass"], true);
    assert!(v["residual"].as_f64().unwrap() < 1e-8);

    let factored = bin()
        .args(["iso", "factor", "--seed", "5", "--samples", "30"])
        .arg(&iso)
        .output()
        .unwrap();
    let f = stdout_json(&factored);
    assert!(f.get("y").is_some(), "factored form carries a base point");
    assert!(f.get("J").is_some(), "factored form carries an algebra isomorphism");
}

#[test]
fn iso_apply_moves_the_unit() {
    let alg = scratch(r#"{"variant":"diagonal","n":2}"#);
    let made = bin()
        .args(["iso", "make", "--kind", "hilbert", "--seed", "4", "--json"])
        .arg(&alg)
        .output()
        .unwrap();
    let iso = scratch(&stdout_json(&made).to_string());
    let e = scratch(r#"{"algebra":{"variant":"diagonal","n":2},"coords":[1.0,1.0]}"#);
    let out = bin().args(["iso", "apply"]).arg(&iso).arg(&e).output().unwrap();
    let v = stdout_json(&out);
    let coords = v["image"]["coords"].as_array().unwrap();
    assert_eq!(coords.len(), 2);
    for c in coords {
        assert!(c.as_f64().unwrap() > 0.0);
    }
}

#[test]
fn verify_reports_are_deterministic_apart_from_wall_time() {
    let run = || {
        let out = bin()
            .args(["verify", "sampling", "--seed", "123", "--samples", "60", "--json"])
            .output()
            .unwrap();
        let mut v = stdout_json(&out);
        v["wall_time_ms"] = serde_json::json!(0);
        v
    };
    assert_eq!(run(), run());
}

#[test]
fn env_var_supplies_the_default_seed() {
    let alg = scratch(r#"{"variant":"spin","n":2}"#);
    let run = || {
        let out = bin()
            .args(["iso", "make", "--kind", "variation", "--json"])
            .arg(&alg)
            .env("JORDAN_CONE_SEED", "99")
            .output()
            .unwrap();
        stdout_json(&out)
    };
    assert_eq!(run(), run());
    // An explicit flag overrides the environment.
    let flagged = bin()
        .args(["iso", "make", "--kind", "variation", "--seed", "100", "--json"])
        .arg(&alg)
        .env("JORDAN_CONE_SEED", "99")
        .output()
        .unwrap();
    assert_ne!(stdout_json(&flagged), run());
}

#[test]
fn exit_codes_follow_the_contract() {
    // 2: unknown suite.
    let out = bin().args(["verify", "nonsense", "--json"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown suite"));

    // 2: unreadable input file.
    let out = bin()
        .args(["metric", "variation", "/nonexistent/x.json"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));

    // 2: malformed JSON.
    let bad = scratch(r#"{"algebra":{"variant":"diagonal","n":3},"coords":[1.0]}"#);
    let out = bin().args(["metric", "variation"]).arg(&bad).output().unwrap();
    assert_eq!(out.status.code(), Some(2));

    // 1: property failure under a crushed tolerance.
    let out = bin()
        .args([
            "verify",
            "cone",
            "--seed",
            "7",
            "--samples",
            "30",
            "--tol-scale",
            "0.0000000001",
            "--json",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));

    // 0: all-pass.
    let out = bin()
        .args(["verify", "sampling", "--seed", "7", "--samples", "60", "--json"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}
