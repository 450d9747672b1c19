use assert_cmd::Command;
use serde_json::Value;

fn qfrac(args: &[&str]) -> (Option<i32>, String) {
    let out = Command::cargo_bin("qfrac")
        .unwrap()
        .args(args)
        .output()
        .unwrap();
    (out.status.code(), String::from_utf8(out.stdout).unwrap())
}

fn json(args: &[&str]) -> Value {
    let (code, out) = qfrac(args);
    assert_eq!(code, Some(0), "{args:?}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn compute_touchard_coefficient() {
    let v = json(&["compute", "--family", "touchard", "--n", "2"]);
    assert_eq!(v["text"], "2 + q");
    let (_, text) = qfrac(&[
        "--format", "text", "compute", "--family", "touchard", "--n", "2",
    ]);
    assert_eq!(text.trim(), "2 + q");
}

#[test]
fn closed_form_matches_fraction() {
    for fam in ["touchard", "qsecant", "jtp", "genocchi"] {
        for n in 0..5 {
            let n = n.to_string();
            let a = json(&["compute", "--family", fam, "--n", &n]);
            let b = json(&["compute", "--family", fam, "--n", &n, "--via", "closed"]);
            assert_eq!(a["value"], b["value"], "{fam} n={n}");
        }
    }
}

#[test]
fn y_substitution() {
    let v = json(&["compute", "--family", "jtp", "--n", "1", "--y-spec", "-1"]);
    assert_eq!(v["text"], "1 - 2*q + q^2");
}

#[test]
fn enumerate_small_staircase() {
    let v = json(&["enumerate", "--objects", "delta-plus", "--k", "1"]);
    assert_eq!(v["count"], 3);
    let v = json(&["enumerate", "--objects", "dyck", "--k", "4", "--list"]);
    assert_eq!(v["count"], 14);
    assert_eq!(v["items"].as_array().unwrap().len(), 14);
}

#[test]
fn verify_genocchi_suite() {
    let v = json(&["verify", "--suite", "genocchi", "--max-n", "6"]);
    assert_eq!(v["pass"], true);
    let cases = v["cases"].as_array().unwrap();
    assert_eq!(cases.len(), 6);
    assert!(cases.iter().all(|c| c["pass"] == true));
    assert!(v.get("elapsed_ms").is_none());
}

#[test]
fn output_is_reproducible() {
    let args = [
        "verify",
        "--suite",
        "transform",
        "--max-n",
        "4",
        "--seed",
        "7",
    ];
    assert_eq!(qfrac(&args).1, qfrac(&args).1);
}

#[test]
fn bijection_round_trip() {
    let input = "k=3 lambda=[] arrows=[h2 h3 v1]";
    let fwd = json(&["bijection", "--map", "psi", "--input", input]);
    let image = fwd["output"]["text"].as_str().unwrap().to_string();
    let back = json(&["bijection", "--map", "phi", "--input", &image]);
    assert_eq!(back["output"]["text"], input);
    let traced = json(&["bijection", "--map", "psi", "--input", input, "--trace"]);
    assert_eq!(traced["trace"].as_array().unwrap().len(), 5);
}

#[test]
fn funeq_residual_vanishes() {
    for id in ["H", "T_JTP", "F_GEN", "G_GEN"] {
        let v = json(&["funeq", "--id", id, "--order", "8"]);
        assert_eq!(v["zero"], true, "{id}");
    }
}

#[test]
fn matrix_recurrence_holds() {
    let v = json(&["matrix", "--which", "lambda", "--n", "3"]);
    assert_eq!(v["recurrence"]["proportional"], true);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(
        qfrac(&["compute", "--family", "nope", "--n", "1"]).0,
        Some(2)
    );
    assert_eq!(qfrac(&["compute"]).0, Some(2));
    assert_eq!(qfrac(&["verify", "--suite", "nope"]).0, Some(2));
}
