use std::process::{Command, Output};

fn defect(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_defect"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn analyze_s5_from_generators() {
    let out = defect(&["analyze", "gens:(1 2 3 4 5),(1 2)@5"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("order: 120"));
    assert!(text.contains("verdict: OutsideD0D1(3)"));
}

#[test]
fn analyze_json_schema() {
    let out = defect(&["analyze", "mersenne:3", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let entry = &json["entries"][0];
    assert_eq!(entry["order"], 56);
    assert_eq!(entry["defect"], 1);
    assert_eq!(entry["verdict"], "MersenneFrobenius(3,7)");
    assert_eq!(entry["checks"]["prop_A2"], "pass");
    for key in ["artifact_version", "command", "entries", "violations", "runtime_ms"] {
        assert!(json.get(key).is_some(), "{key}");
    }
    assert!(json["runtime_ms"].is_null());
}

#[test]
fn analyze_trivial_group() {
    let out = defect(&["analyze", "cyclic:1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("verdict: Trivial"));
}

#[test]
fn input_errors_exit_2() {
    let out = defect(&["analyze", "gens:(1 2)(3 x)@4"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("position 13"));
    assert_eq!(defect(&["analyze", "frobenius:5,3"]).status.code(), Some(2));
    assert_eq!(defect(&["sweep", "6"]).status.code(), Some(2));
    assert_eq!(defect(&["sweep", "7", "--include-s6"]).status.code(), Some(2));
    assert_eq!(defect(&["bogus"]).status.code(), Some(2));
}

#[test]
fn cap_exceeded_exits_3() {
    let out = defect(&["analyze", "alt:5", "--max-order", "50"]);
    assert_eq!(out.status.code(), Some(3));
    let out = defect(&["analyze", "gens:(1 2 3 4 5 6 7),(1 2)@7", "--max-order", "1000"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn sweep_4_text() {
    let out = defect(&["sweep", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("subgroups: 30"));
    assert!(text.contains("violations: 0"));
}

#[test]
fn family_listing_and_generators() {
    let out = defect(&["family"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("psl2:q"));
    let out = defect(&["family", "psl2:7", "--format", "json"]);
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["order"], 168);
    assert_eq!(json["degree"], 8);
}

#[test]
fn verify_corpus_passes() {
    let out = defect(&["verify-corpus"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("mismatches: 0"));
}
