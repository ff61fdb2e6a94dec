use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_littleweyl")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn write_space(dir: &tempfile::TempDir, name: &str, body: &str) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, body).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn analyze_so2_json() {
    let v = json(&["analyze", "A1_so2", "--json"]);
    assert_eq!(v["weyl"]["order"], 2);
    assert_eq!(v["weyl"]["coxeter_type"], "A1");
    assert_eq!(v["adapted"], true);
    let checks = v["verification"].as_array().unwrap();
    assert!(!checks.is_empty());
    assert!(checks.iter().all(|c| c["passed"] == true));
}

#[test]
fn analyze_horospherical_text() {
    let out = run(&["analyze", "A1_nbar"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("compression cone: all of a"), "{text}");
    assert!(text.contains("little Weyl group: trivial"), "{text}");
    assert!(text.contains("spherical roots: ∅"), "{text}");
}

#[test]
fn split_cartan_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_space(
        &dir,
        "a.json",
        r#"{"schema_version":1,"name":"sl2_a","lie_algebra":{"schema_version":1,"cartan_type":"A1","center_dim":0},"subalgebra":[["0","1","0"]],"base_point_word":[]}"#,
    );
    let out = run(&["analyze", &path]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("no open P-orbit"));
    let out = run(&["analyze", &path, "--json"]);
    assert_eq!(out.status.code(), Some(2));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["adapted"], false);
    assert_eq!(v["message"], "no open P-orbit");
}

#[test]
fn limits_and_cosets() {
    let v = json(&["limit", "A1_nbar", "--direction", "1", "--json"]);
    assert_eq!(v["limit"], serde_json::json!([["1", "0", "0"]]));
    assert_eq!(v["cosets"], serde_json::json!(["e"]));

    let v = json(&["limit", "A1_so2", "--direction", "1", "--json"]);
    assert_eq!(v["limit"], serde_json::json!([["0", "0", "1"]]));
    assert_eq!(v["cosets"], serde_json::json!(["s1"]));

    let v = json(&["limit", "A1_so2", "--direction", "-1/2", "--json"]);
    assert_eq!(v["limit"], serde_json::json!([["1", "0", "0"]]));
    assert_eq!(v["cosets"], serde_json::json!(["e"]));

    // X = 0 leaves h_z alone.
    let v = json(&["limit", "A1_so2", "--direction", "0", "--json"]);
    assert_eq!(v["limit"], serde_json::json!([["1", "0", "-1"]]));
    assert_eq!(v["cosets"], serde_json::json!([]));
    let text = stdout(&run(&["limit", "A1_so2", "--direction", "0"]));
    assert!(text.contains("coset: none"), "{text}");
}

#[test]
fn malformed_direction_exits_one() {
    for dir in ["x", "1,2", "1/0", ""] {
        let out = run(&["limit", "A1_so2", "--direction", dir]);
        assert_eq!(out.status.code(), Some(1), "{dir:?}");
    }
    assert_eq!(run(&["analyze", "no_such_space"]).status.code(), Some(1));
}

#[test]
fn degenerations_of_compact_a2() {
    let faces = json(&["degenerate", "A2_so3", "--json"]);
    assert_eq!(faces.as_array().unwrap().len(), 4);
    let v = json(&["degenerate", "A2_so3", "--face", "3", "--json"]);
    assert_eq!(v["monoid_generators"], serde_json::json!([]));
    assert_eq!(run(&["degenerate", "A2_so3", "--face", "9"]).status.code(), Some(1));
}

#[test]
fn admissible_search_on_the_twisted_torus() {
    let v = json(&["admissible", "A1T1_torus_twist", "--json"]);
    assert_eq!(v["report"]["admissible"], true);
    assert!(v["attempts"].as_u64().unwrap() <= 10);
}

#[test]
fn verify_all_passes() {
    let out = run(&["verify", "--all", "--instances", "40"]);
    assert!(out.status.success(), "{}", stdout(&out));
    assert!(!stdout(&out).contains("FAIL"));
}

#[test]
fn tampered_claims_fail_verification() {
    let dir = tempfile::tempdir().unwrap();
    let exported = stdout(&run(&["catalog", "A1_so2", "--export"]));
    let tampered = exported.replace("\"w_order\": 2", "\"w_order\": 3");
    assert_ne!(exported, tampered);
    let path = write_space(&dir, "t.json", &tampered);
    let out = run(&["verify", &path]);
    assert_eq!(out.status.code(), Some(4));
    assert!(stdout(&out).contains("w_order: claimed 3, computed 2"), "{}", stdout(&out));
    assert!(run(&["verify", &write_space(&dir, "ok.json", &exported)]).status.success());
}

#[test]
fn output_is_deterministic() {
    for args in [["analyze", "B2_k", "--json"], ["admissible", "A1T1_torus_twist", "--json"]] {
        let a = run(&args);
        let b = run(&args);
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn report_round_trips() {
    let out = run(&["analyze", "G2_k", "--json"]);
    let report: littleweyl::Report = serde_json::from_slice(&out.stdout).unwrap();
    let again = serde_json::to_vec_pretty(&report).unwrap();
    assert_eq!(String::from_utf8(again).unwrap().trim_end(), stdout(&out).trim_end());
}

#[test]
fn catalog_listing() {
    let v = json(&["catalog", "--json"]);
    let names: Vec<&str> = v.as_array().unwrap().iter().map(|e| e["name"].as_str().unwrap()).collect();
    assert_eq!(names, littleweyl::catalog::names());
}
