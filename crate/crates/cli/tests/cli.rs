use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn scatseq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_scatseq"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = scatseq(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn verify_base_example() {
    let v = json(&["verify"]);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["p_polynomial"], "X^3 + X + 1");
    assert_eq!(v["root_free"]["exhaustive"], true);
    assert_eq!(v["root_free"]["companion"], true);
    assert_eq!(v["scattered"]["scattered"], true);
    assert_eq!(v["evasive"]["max_dim"], 3);
    assert_eq!(
        v["indecomposable"]["criterion"]["verdict"],
        "Indecomposable"
    );
    assert_eq!(v["contradictions"], Value::Array(vec![]));
}

#[test]
fn verify_rooted_at_n8() {
    // P(1) = 1 + γ + αβ = 0 with γ = X, β = 1 + X
    let v = json(&["verify", "--n", "8", "--beta", "3", "--gamma", "2"]);
    assert_eq!(v["root_free"]["exhaustive"], false);
    assert_eq!(v["scattered"]["scattered"], false);
    assert_eq!(v["scattered"]["converse_applies"], true);
    assert!(v["scattered"]["witness"].is_object());
    // plane scans at n = 8 exceed the default budget
    assert!(v["evasive"]["skipped"].is_string());
}

#[test]
fn budget_exit_code() {
    let out = scatseq(&["verify", "--budget", "10"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("budget"));
}

#[test]
fn bad_input_exit_code() {
    assert_eq!(scatseq(&["verify", "--q", "6"]).status.code(), Some(1));
    assert_eq!(
        scatseq(&["verify", "--I", "2", "--J", "2"]).status.code(),
        Some(1)
    );
    assert_eq!(scatseq(&["verify", "--alpha", "0"]).status.code(), Some(1));
}

#[test]
fn search_writes_csv_and_matches_companion() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("exhaustive.csv");
    let b = dir.path().join("companion.csv");
    let run = |path: &std::path::Path, criterion: &str| {
        let out = scatseq(&[
            "search",
            "--format",
            "csv",
            "--criterion",
            criterion,
            "--pairs",
            "0..40",
            "--out",
            path.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0));
    };
    run(&a, "exhaustive");
    run(&b, "companion");
    let ta = fs::read_to_string(&a).unwrap();
    let tb = fs::read_to_string(&b).unwrap();
    let lines: Vec<&str> = ta.lines().collect();
    assert_eq!(lines[0], "c,gamma,root_free,scattered,d,d2,d3");
    assert_eq!(lines.len(), 41);
    assert_eq!(lines[1], "1,1,true,true,3,5,7");
    assert_eq!(ta, tb);
    // scattered exactly when root-free here, and then MRD (d = 3)
    for l in &lines[1..] {
        let f: Vec<&str> = l.split(',').collect();
        assert_eq!(f[2], f[3]);
        assert_eq!(f[2] == "true", f[4] == "3");
    }
}

#[test]
fn search_summary_and_empty_range() {
    let v = json(&["search", "--n", "3"]);
    assert_eq!(v["rows"].as_array().unwrap().len(), 49);
    assert_eq!(v["summary"]["lower_bound"], Value::Null);
    assert_eq!(v["summary"]["exact"], 147);
    let out = scatseq(&["search", "--pairs", "5..5", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout).lines().count(), 1);
    assert_eq!(
        scatseq(&["search", "--pairs", "9..3"]).status.code(),
        Some(1)
    );
}

#[test]
fn count_command() {
    let v = json(&["count"]);
    assert_eq!(v["count"]["exact"], 1125);
    assert_eq!(v["count"]["lower_bound"], 15);
    let v = json(&["count", "--n", "3"]);
    assert_eq!(v["count"]["lower_bound"], Value::Null);
}

#[test]
fn dual_command() {
    let v = json(&["dual"]);
    let d = &v["dual_params"];
    assert_eq!((d["I"].as_u64(), d["J"].as_u64()), (Some(3), Some(2)));
    assert_eq!(
        (&d["alpha"], &d["beta"], &d["gamma"]),
        (&Value::from("1"), &Value::from("1"), &Value::from("1"))
    );
    assert_eq!(v["exact_dual"]["dim"], 8);
}

#[test]
fn equiv_command() {
    let v = json(&[
        "equiv", "--n", "5", "--alpha", "g3", "--beta", "g7", "--gamma", "g11",
    ]);
    assert_eq!(v["verdict"]["tag"], "EquivalentByCorollary");
    assert!(v["verdict"]["witness"].is_object());
    let v = json(&["equiv", "--n", "5", "--I2", "2", "--J2", "1"]);
    assert_eq!(v["verdict"]["tag"], "InequivalentByIndexPair");
    assert_eq!(v["system"], Value::Null);
}

#[test]
fn weights_command() {
    let v = json(&["weights"]);
    let r = &v["code"]["report"];
    assert_eq!(r["weights"], serde_json::json!([3, 5, 7, 8]));
    assert_eq!(r["antichain"], 4369);
    assert_eq!(r["is_mrd"], true);
    assert_eq!(v["d2_plane"]["max_dim"], 3);
}

#[test]
fn oracle_command() {
    let v = json(&["oracle"]);
    assert_eq!(v["companion_vs_exhaustive"]["disagreements"], 0);
    assert_eq!(v["companion_vs_exhaustive"]["pairs"], 225);
    let v = json(&["oracle", "--I", "1", "--J", "3"]);
    assert!(v["companion_vs_exhaustive"]["skipped"].is_string());
}

#[test]
fn output_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let paths: Vec<_> = (0..2)
        .map(|t| dir.path().join(format!("run{t}.json")))
        .collect();
    for (t, p) in paths.iter().enumerate() {
        let threads = if t == 0 { "1" } else { "3" };
        let out = scatseq(&[
            "verify",
            "--n",
            "5",
            "--ell",
            "1",
            "--threads",
            threads,
            "--out",
            p.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0));
    }
    assert_eq!(fs::read(&paths[0]).unwrap(), fs::read(&paths[1]).unwrap());
}

#[test]
fn timings_are_opt_in() {
    assert!(json(&["verify"]).get("timings_ms").is_none());
    assert!(json(&["verify", "--timings"])["timings_ms"]["scattered"].is_u64());
}

#[test]
fn csv_key_value_view() {
    let out = scatseq(&["dual", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("key,value\n"));
    assert!(text.contains("dual_params.I,3\n"));
    assert!(text.contains("equivalence.0.1,1\n"));
}

#[test]
fn explicit_modulus() {
    let v = json(&["verify", "--modulus", "19"]);
    assert_eq!(v["field"], "2^1^4:19");
    assert_eq!(v["scattered"]["scattered"], true);
    assert_eq!(
        scatseq(&["verify", "--modulus", "15"]).status.code(),
        Some(1)
    );
}
