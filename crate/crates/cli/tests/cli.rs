use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_diagquartic"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.push("--json");
    let out = run(&full);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn field_report() {
    let v = json(&["field", "--p", "13"]);
    assert_eq!(v["q"], 13);
    assert_eq!(v["g"], 2);
    assert_eq!(v["s"], -3);
    assert_eq!(v["t"], -1);
    assert_eq!(v["f_parity"], "odd");

    let v = json(&["field", "--p", "3", "--m", "2"]);
    assert_eq!(v["q"], 9);
    assert_eq!(v["s"], -3);
    assert_eq!(v["t"], 0);

    let v = json(&["field", "--p", "7"]);
    assert!(v.get("s").is_none());
}

#[test]
fn field_overrides() {
    let v = json(&["field", "--p", "13", "--generator", "6"]);
    assert_eq!(v["g"], 6);
    let v = json(&["field", "--p", "3", "--m", "2", "--modulus", "2,2,1"]);
    assert_eq!(v["modulus"], serde_json::json!([2, 2, 1]));
    assert_eq!(run(&["field", "--p", "13", "--generator", "3"]).status.code(), Some(2));
    assert_eq!(run(&["field", "--p", "3", "--m", "2", "--modulus", "2,0,1"]).status.code(), Some(2));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["field", "--p", "4"]).status.code(), Some(2));
    assert_eq!(run(&["field"]).status.code(), Some(2));
    assert_eq!(run(&["count", "--p", "5", "--c", "7", "--n", "2"]).status.code(), Some(2));
    assert_eq!(run(&["count", "--p", "5", "--n", "2"]).status.code(), Some(2));
    assert_eq!(run(&["count", "--p", "5", "--y", "1", "--n", "2"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn count_all_methods_agree() {
    let v = json(&["count", "--p", "5", "--c", "1", "--n", "3", "--all-methods"]);
    assert_eq!(v["agree"], true);
    assert_eq!(v["count"], "12");
    let methods: Vec<&str> = v["results"].as_array().unwrap().iter().map(|r| r["method"].as_str().unwrap()).collect();
    assert_eq!(methods, ["oracle", "closed", "cyclotomy", "series", "expsum"]);
    for r in v["results"].as_array().unwrap() {
        assert_eq!(r["count"], "12");
    }
}

#[test]
fn count_single_method() {
    let v = json(&["count", "--p", "7", "--c", "1", "--n", "2"]);
    assert_eq!(v["q"], 7);
    assert_eq!(v["c"], 1);
    assert_eq!(v["n"], 2);
    assert_eq!(v["method"], "auto");
    assert_eq!(v["count"], "8");

    assert_eq!(json(&["count", "--p", "5", "--y", "2", "--n", "2"])["count"], "1");
    assert_eq!(json(&["count", "--p", "7", "--y", "3", "--n", "2"])["count"], "13");
    assert_eq!(json(&["count", "--p", "13", "--c", "1", "--n", "2", "--method", "cyclotomy"])["count"], "8");
    assert_eq!(json(&["count", "--p", "5", "--c", "0", "--n", "5", "--method", "series"])["count"], "1025");
    // closed forms stop at n = 4
    assert_eq!(run(&["count", "--p", "13", "--c", "1", "--n", "5", "--method", "closed"]).status.code(), Some(2));
}

#[test]
fn series_schema_round_trips() {
    let v = json(&["series", "--p", "13", "--c", "1", "--terms", "6"]);
    assert_eq!(v["q"], 13);
    assert_eq!(v["c_or_y"], 1);
    let parts = v["parts"].as_array().unwrap();
    assert_eq!(parts.len(), 2);
    assert_eq!(parts[1]["num"], serde_json::json!(["0", "3", "-5", "-15", "81"]));
    assert_eq!(parts[1]["den"], serde_json::json!(["1", "0", "26", "-312", "1053"]));
    let coeffs = v["coefficients"].as_array().unwrap();
    assert_eq!(coeffs.len(), 6);
    for (i, c) in coeffs.iter().enumerate() {
        let n = (i + 1).to_string();
        let count = json(&["count", "--p", "13", "--c", "1", "--n", &n, "--method", "oracle"]);
        assert_eq!(c, &count["count"]);
    }

    let v = json(&["series", "--p", "5", "--y", "2", "--terms", "2"]);
    assert_eq!(v["form"], "M");
    assert_eq!(v["coefficients"], serde_json::json!(["1", "1"]));
}

#[test]
fn cyclotomic_table() {
    let v = json(&["cyclotomic", "--p", "13"]);
    assert_eq!(v["s"], -3);
    let entries = v["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 16);
    for e in entries {
        assert_eq!(e["closed"], e["enumerated"]);
    }
    assert_eq!(entries[0]["closed"], 0);

    let v = json(&["cyclotomic", "--p", "13", "--k", "3"]);
    assert!(v["entries"].as_array().unwrap().iter().all(|e| e["closed"].is_null()));
}

#[test]
fn csv_output() {
    let out = run(&["cyclotomic", "--p", "5", "--format", "csv"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("i,j,closed,enumerated"));
    assert_eq!(lines.count(), 16);
}

#[test]
fn verify_passes_and_catches_wrong_t() {
    let out = run(&["verify", "--p", "13", "--nmax", "8"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));

    let v = json(&["verify", "--p", "5", "--expsums"]);
    assert_eq!(v["pass"], true);
    let detail = &v["expsums"][0];
    assert_eq!(detail["t"].as_array().unwrap().len(), 4);
    assert_eq!(detail["polynomial"], serde_json::json!([205, 40, 10, 0, 1]));

    let out = run(&["verify", "--p", "13", "--perturb-t", "1", "--json"]);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let closed = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["name"] == "cyclotomic-closed")
        .unwrap();
    assert_eq!(closed["status"], "fail");
    assert!(closed["detail"].as_str().unwrap().contains("not divisible"));
}

#[test]
fn bench_reports_counts() {
    let v = json(&["bench", "--fields", "5", "--nmax", "1"]);
    assert_eq!(v["consistent"], true);
    let rows = v["rows"].as_array().unwrap();
    assert!(rows.len() >= 4);
    assert!(rows.iter().all(|r| r["count"] == "4" && r["micros"].as_f64().unwrap() < 1000.0));
}
