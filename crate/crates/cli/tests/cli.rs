use std::process::{Command, Output};

use serde_json::Value;

fn mwsplit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mwsplit")).args(args).output().expect("binary runs")
}

fn report(args: &[&str]) -> Value {
    let out = mwsplit(args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("json report")
}

fn shape(v: &Value) -> Vec<u64> {
    v.as_array().unwrap().iter().map(|x| x.as_u64().unwrap()).collect()
}

#[test]
fn report_envelope() {
    let r = report(&["tableaux", "-k", "2", "-n", "4"]);
    assert_eq!(r["command"], "tableaux");
    assert_eq!(r["params"]["k"], 2);
    assert_eq!(r["version"], env!("CARGO_PKG_VERSION"));
    assert_eq!(r["result"]["count"], 6);
    let even: Vec<Vec<u64>> = r["result"]["even"].as_array().unwrap().iter().map(shape).collect();
    assert_eq!(even, vec![vec![], vec![2, 2]]);
}

#[test]
fn tableaux_edge_cases() {
    let r = report(&["tableaux", "-k", "3", "-n", "6", "--twist"]);
    assert!(r["result"]["even"].as_array().unwrap().is_empty());
    let r = report(&["tableaux", "-k", "0", "-n", "0", "--sq2-matrices"]);
    assert_eq!(r["result"]["count"], 1);
    assert!(r["result"]["sq2_matrices"].as_array().unwrap().is_empty());
}

#[test]
fn decompose_gr24_and_flag3() {
    let r = report(&["decompose", "-k", "2", "-n", "4"]);
    let summands: Vec<(String, u64)> = r["result"]["motive"]["summands"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| (s["kind"].as_str().unwrap().to_string(), s["weight"].as_u64().unwrap()))
        .collect();
    assert_eq!(summands.len(), 4);
    for s in [("unit", 0), ("unit", 4), ("eta_cone", 1), ("eta_cone", 2)] {
        assert!(summands.contains(&(s.0.to_string(), s.1)), "{s:?}");
    }
    let r = report(&["decompose", "--flag", "3"]);
    assert_eq!(r["result"]["motive"]["witt_weights"], serde_json::json!([0, 3]));
    assert_eq!(r["result"]["motive"]["counts"]["t"], serde_json::json!([0, 2, 0, 0]));
    let r = report(&["decompose", "-k", "1", "-n", "3"]);
    assert_eq!(r["result"]["motive"]["witt_weights"], serde_json::json!([0]));
}

#[test]
fn chow_witt_table() {
    let r = report(&["chow-witt", "-k", "2", "-n", "4", "--twist"]);
    let degrees = r["result"]["degrees"].as_array().unwrap();
    assert_eq!(degrees.len(), 5);
    let gw: Vec<Vec<u64>> = degrees[2]["gw"].as_array().unwrap().iter().map(shape).collect();
    assert_eq!(gw, vec![vec![1, 1], vec![2]]);
    assert_eq!(degrees[0]["z"][0]["tag"]["kind"], "z_h");
    assert_eq!(degrees[1]["z"][0]["tag"]["kind"], "z_partial");
}

#[test]
fn e_cohomology_and_flag() {
    let r = report(&["e-cohomology", "--flag", "4"]);
    assert_eq!(r["result"]["e_dims"], serde_json::json!([1, 0, 0, 2, 0, 0, 1]));
    let r = report(&["e-cohomology", "-k", "3", "-n", "6"]);
    let e: Vec<u64> = r["result"]["degrees"].as_array().unwrap().iter().map(|d| d["e_dim"].as_u64().unwrap()).collect();
    assert_eq!(e.iter().sum::<u64>(), 4);
    let r = report(&["flag", "-n", "4"]);
    assert_eq!(r["result"]["exterior"], true);
    assert_eq!(r["result"]["generators"][1]["class"], "x1^3");
}

#[test]
fn verify_flag_scope() {
    let r = report(&["verify", "--scope", "flag", "--max-n", "6"]);
    assert_eq!(r["result"]["passed"], true);
}

#[test]
fn output_is_deterministic() {
    let a = mwsplit(&["chow-witt", "-k", "3", "-n", "6"]);
    let b = mwsplit(&["chow-witt", "-k", "3", "-n", "6"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn markdown_format() {
    let out = mwsplit(&["chow-witt", "-k", "2", "-n", "4", "--format", "markdown"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("| d | GW(k) | Z |"));
    assert!(text.contains("σ(2,2)"));
}

#[test]
fn usage_errors_exit_2() {
    let out = mwsplit(&["tableaux", "-k", "5", "-n", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
    assert_eq!(mwsplit(&["verify", "--scope", "nope"]).status.code(), Some(2));
    assert_eq!(mwsplit(&["decompose"]).status.code(), Some(2));
}
