//! End-to-end tests of the binary: output shapes, canonical encodings,
//! byte stability, and the exit-code contract.

use std::process::{Command, Output};

fn qhooks(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qhooks"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

#[test]
fn stats_reports_the_running_example() {
    let out = qhooks(&["stats", "--lambda", "5,4,3,3,2,2,1"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("json");
    assert_eq!(v["n"], 20);
    assert_eq!(v["lambda"], serde_json::json!([5, 4, 3, 3, 2, 2, 1]));
    assert_eq!(v["gamma-geq"], serde_json::json!([[1, 5], [2, 2]]));
    assert_eq!(
        v["nu"],
        serde_json::json!([[1, 1], [2, 2], [3, 2], [4, 1], [5, 1]])
    );
    // the hook multiset of the running example, straight off its diagram
    assert_eq!(
        v["hooks"],
        serde_json::json!([
            [1, 5],
            [2, 2],
            [3, 2],
            [4, 3],
            [5, 1],
            [6, 2],
            [7, 2],
            [9, 2],
            [11, 1]
        ])
    );
}

#[test]
fn stats_csv_is_exact() {
    let out = qhooks(&["stats", "--lambda", "2,2", "--format", "csv"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "stat,key,value\n\
         nu,2,2\n\
         gamma,2,1\n\
         gamma-geq,1,1\n\
         gamma-geq,2,1\n\
         hooks,1,1\n\
         hooks,2,2\n\
         hooks,3,1\n"
    );
}

#[test]
fn empty_partition_is_accepted() {
    let out = qhooks(&["stats", "--lambda", ""]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("json");
    assert_eq!(v["n"], 0);
    assert_eq!(v["nu"], serde_json::json!([]));
}

#[test]
fn hook_table_doubles_the_part_table() {
    // hooks of length 2 are twice the parts of size 2, n by n
    let hooks = qhooks(&["table", "--stat", "H", "--n-max", "6", "--i", "2"]);
    let parts = qhooks(&["table", "--stat", "nu", "--n-max", "6", "--i", "2"]);
    let h: serde_json::Value = serde_json::from_str(&stdout(&hooks)).expect("json");
    let p: serde_json::Value = serde_json::from_str(&stdout(&parts)).expect("json");
    let h = h["values"].as_array().unwrap();
    let p = p["values"].as_array().unwrap();
    assert_eq!(h.len(), 7);
    for (a, b) in h.iter().zip(p.iter()) {
        assert_eq!(a.as_u64().unwrap(), 2 * b.as_u64().unwrap());
    }
}

#[test]
fn partition_count_table_csv() {
    let out = qhooks(&["table", "--stat", "p", "--n-max", "5", "--format", "csv"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "n,value\n0,1\n1,1\n2,2\n3,3\n4,5\n5,7\n");
}

#[test]
fn h1h2_series_matches_the_pinned_expansion() {
    let out = qhooks(&["series", "--which", "h1h2", "--n-max", "6"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out).trim_end(),
        r#"["0","0","2","2","8","14","26"]"#
    );
}

#[test]
fn default_order_is_twenty() {
    let out = qhooks(&["series", "--which", "euler"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("json");
    let coeffs = v.as_array().unwrap();
    assert_eq!(coeffs.len(), 21);
    assert_eq!(coeffs[20], "627");
}

#[test]
fn truncated_series_csv_pads_missing_degrees() {
    let out = qhooks(&[
        "series", "--which", "cprime", "--n-max", "2", "--j", "2", "--format", "csv",
    ]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "n,b0,b1,b2\n0,1,0,0\n1,1,-1,0\n2,2,-5/2,1/2\n"
    );
}

#[test]
fn depth_one_series_agree_through_the_binary() {
    let hno = qhooks(&["series", "--which", "hno", "--n-max", "12", "--j", "1"]);
    let cp = qhooks(&["series", "--which", "cprime", "--n-max", "12", "--j", "1"]);
    assert!(hno.status.success() && cp.status.success());
    assert_eq!(stdout(&hno), stdout(&cp));
}

#[test]
fn marked_series_json_is_canonical() {
    let out = qhooks(&["series", "--which", "fk", "--n-max", "2", "--k", "1"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out).trim_end(),
        r#"[[{"coeff":"1","exp":[0]}],[{"coeff":"1","exp":[0]},{"coeff":"1","exp":[1]}],[{"coeff":"2","exp":[0]},{"coeff":"2","exp":[1]}]]"#
    );
}

#[test]
fn verify_single_reports_pass() {
    let out = qhooks(&[
        "verify",
        "--theorem",
        "quadratic-equivalence",
        "--n-max",
        "10",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("json");
    assert_eq!(v["theorem"], "quadratic-equivalence");
    assert_eq!(v["status"], "pass");
    assert_eq!(v["first_failure"], serde_json::Value::Null);
    assert_eq!(v["params"]["n-max"], 10);
}

#[test]
fn verify_all_passes_with_thirteen_reports() {
    let out = qhooks(&["verify", "--theorem", "all", "--n-max", "6"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("json");
    let reports = v.as_array().unwrap();
    assert_eq!(reports.len(), 13);
    assert_eq!(reports[0]["theorem"], "parts-vs-repeats");
    assert_eq!(reports[12]["theorem"], "truncation-limit");
    assert!(reports.iter().all(|r| r["status"] == "pass"));
}

#[test]
fn verify_csv_has_one_row_per_theorem() {
    let out = qhooks(&[
        "verify",
        "--theorem",
        "all",
        "--n-max",
        "4",
        "--format",
        "csv",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 14);
    assert_eq!(lines[0], "theorem,params,status,n,lhs,rhs,elapsed_ms");
    assert!(lines[1].starts_with("parts-vs-repeats,k=4;n-max=4,pass,"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["verify", "--theorem", "nonsense", "--n-max", "5"][..],
        &["stats", "--lambda", "3,4,1"],
        &["stats", "--lambda", "2,0"],
        &["stats", "--lambda", "2,x"],
        &["table", "--stat", "p", "--i", "3", "--n-max", "5"],
        &["table", "--stat", "gamma-geq", "--i", "3", "--n-max", "5"],
        &["series", "--which", "euler", "--j", "2"],
        &["series", "--which", "multiplicity", "--thresholds", "2,1"],
        &[
            "series",
            "--which",
            "multiplicity",
            "--thresholds",
            "1,2",
            "--caps",
            "1",
        ],
        &["series", "--which", "hno", "--j", "0"],
        &["verify", "--theorem", "all", "--n-max", "5", "--k", "2"],
        &["no-such-subcommand"],
        &["table", "--stat", "p", "--n-max", "5", "--unknown-flag"],
    ] {
        let out = qhooks(args);
        assert_eq!(out.status.code(), Some(2), "args {args:?} must exit 2");
    }
}

#[test]
fn output_is_byte_stable() {
    for args in [
        &["stats", "--lambda", "5,4,3,3,2,2,1"][..],
        &["table", "--stat", "gamma-geq", "--n-max", "8", "--k", "2"],
        &["series", "--which", "hno", "--n-max", "6", "--j", "2"],
        &[
            "series",
            "--which",
            "multiplicity",
            "--n-max",
            "5",
            "--format",
            "csv",
        ],
    ] {
        let first = qhooks(args);
        let second = qhooks(args);
        assert_eq!(first.stdout, second.stdout, "args {args:?} must be stable");
    }
}
