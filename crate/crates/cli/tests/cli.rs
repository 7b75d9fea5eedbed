use std::io::Write;
use std::process::{Command, Output, Stdio};

fn upm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_upm"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = upm(args);
    assert!(
        out.status.success(),
        "upm {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    serde_json::from_str(&stdout(args)).expect("valid JSON")
}

#[test]
fn classify_k2() {
    let v = json(&["classify", "A_", "--format", "json"]);
    assert_eq!(v["payload"]["verdict"], "bipartite-both");
    assert_eq!(v["payload"]["det"], -1);
    assert_eq!(v["version"], "1");
}

#[test]
fn classify_fulvene() {
    let v = json(&["classify", "EhcO", "--format", "json"]);
    let p = &v["payload"];
    assert_eq!(p["verdict"], "negative-only");
    assert_eq!(
        p["negative_signing"],
        serde_json::json!([1, 1, -1, -1, -1, 1])
    );
    assert!(p["positive_signing"].is_null());
}

#[test]
fn classify_determinant_three() {
    let v = json(&["classify", "EJaW", "--format", "json"]);
    assert_eq!(v["payload"]["verdict"], "non-integral");
    assert_eq!(v["payload"]["det"].as_i64().unwrap().abs(), 3);
}

#[test]
fn edge_list_from_stdin() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_upm"))
        .args(["classify", "--input", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(b"# fulvene\n1 2\n1 5\n2 3\n3 4\n4 5\n4 6\n")
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    assert!(String::from_utf8(out.stdout)
        .unwrap()
        .contains("negative-only"));
}

#[test]
fn invert_fulvene_dot() {
    let dot = stdout(&["invert", "EhcO"]);
    assert!(dot.starts_with("graph {"));
    let edges: Vec<&str> = dot.lines().filter(|l| l.contains("--")).collect();
    assert_eq!(edges.len(), 10);
    assert_eq!(edges.iter().filter(|l| l.trim() == "6 -- 6;").count(), 2);
}

#[test]
fn invert_fulvene_json() {
    let v = json(&["invert", "EhcO", "--format", "json"]);
    assert_eq!(v["payload"]["sign"], -1);
    assert_eq!(v["payload"]["adjacency"][5][5], 2);
}

#[test]
fn invert_noninvertible_fails() {
    let out = upm(&["invert", "E@Vw"]);
    assert!(!out.status.success());
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("integral-neither"));
}

#[test]
fn enumerate_counts() {
    for (n, count) in [("2", 1), ("4", 2), ("6", 20)] {
        assert_eq!(stdout(&["enumerate", "--n", n]).lines().count(), count);
    }
    let v = json(&["enumerate", "--n", "6", "--format", "json"]);
    assert_eq!(v["payload"]["count"], 20);
}

#[test]
fn table_counts() {
    let v = json(&["table", "--n", "6", "--format", "json"]);
    let counts = &v["payload"]["counts"];
    assert_eq!(counts["bipartite-both"], 3);
    assert_eq!(counts["positive-only"], 12);
    assert_eq!(counts["negative-only"], 3);
    assert_eq!(counts["integral-neither"], 1);
    assert_eq!(counts["non-integral"], 1);
    assert_eq!(v["payload"]["rows"].as_array().unwrap().len(), 20);
    assert!(stdout(&["table", "--n", "6"]).contains("total: 20"));
}

#[test]
fn relations_report() {
    let v = json(&["relations", "--n", "6", "--format", "json"]);
    let p = &v["payload"];
    assert_eq!(p["isospectral_pairs"].as_array().unwrap().len(), 1);
    let positive = p["by_verdict"]
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["verdict"] == "positive-only")
        .unwrap();
    assert_eq!(
        positive["maximal_self_contained"].as_array().unwrap().len(),
        4
    );
    assert_eq!(
        positive["maximal_mutual_pairs"].as_array().unwrap().len(),
        2
    );
    assert!(positive["selfinvertible"].as_array().unwrap().is_empty());
}

#[test]
fn json_output_is_byte_stable() {
    for args in [
        &["relations", "--n", "6", "--format", "json"][..],
        &["table", "--n", "6", "--format", "json"][..],
        &["classify", "EhcO", "--format", "json"][..],
    ] {
        assert_eq!(stdout(args), stdout(args));
    }
}

#[test]
fn bad_input_is_rejected() {
    for args in [
        &["classify", "zzz"][..],
        &["classify", "A`"][..],
        &["classify"][..],
        &["table", "--n", "5"][..],
        &["enumerate", "--n", "8"][..],
        &["classify", "A_", "--format", "dot"][..],
    ] {
        let out = upm(args);
        assert!(!out.status.success(), "{args:?} succeeded");
        assert!(String::from_utf8_lossy(&out.stderr).starts_with("error"));
    }
}
