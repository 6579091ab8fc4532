use std::process::{Command, Output};

fn triscroll(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_triscroll"))
        .args(args)
        .env_remove("TRISCROLL_FORMAT")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn table1_csv() {
    let o = triscroll(&["table1", "--format", "csv"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "case,s,b,c");
    assert_eq!(lines.len(), 13);
    assert_eq!(lines[4], "4,13,10,21");
    assert_eq!(lines[12], "12,1,26,201");
    assert!(!text.contains('\r'));
}

#[test]
fn invariants_from_branch_data() {
    let o = triscroll(&["invariants", "--b", "10", "--c", "21", "--format", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let r = &v["result"];
    assert_eq!((r["g"].as_i64(), r["pg"].as_i64(), r["ksq"].as_i64(), r["euler"].as_i64()), (Some(3), Some(0), Some(-4), Some(16)));
    assert_eq!(v["schema_version"], 1);
}

#[test]
fn invariants_other_parameterizations() {
    let a = stdout(&triscroll(&["invariants", "--b1", "-2", "--b2", "1"]));
    let b = stdout(&triscroll(&["invariants", "--m", "1", "--n", "1"]));
    assert_eq!(a, b);
    assert!(a.contains("ksq = 8"));
}

#[test]
fn invariants_usage_errors() {
    assert_eq!(triscroll(&["invariants", "--b", "10"]).status.code(), Some(2));
    assert_eq!(triscroll(&["invariants", "--b", "9", "--c", "21"]).status.code(), Some(2));
    assert_eq!(triscroll(&["invariants", "--b", "10", "--c", "21", "--m", "1", "--n", "1"]).status.code(), Some(2));
}

#[test]
fn verify_schwarzenberger() {
    let o = triscroll(&["verify", "schwarzenberger"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("candidate_parity: computed false expected false"));
}

#[test]
fn unknown_verifier_lists_ids() {
    let o = triscroll(&["verify", "nope"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("cusp-bounds") && err.contains("double-solid"));
}

#[test]
fn window_must_be_positive() {
    assert_eq!(triscroll(&["verify", "reider", "--window", "0"]).status.code(), Some(2));
    assert_eq!(triscroll(&["verify", "reider", "--window", "3"]).status.code(), Some(0));
}

#[test]
fn verify_all_csv_has_no_stray_commas() {
    let o = triscroll(&["verify", "all", "--format", "csv"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("theorem,step,computed,expected,pass"));
    for l in lines {
        assert_eq!(l.split(',').count(), 5, "{l}");
    }
}

#[test]
fn bounds_keep_exact_rationals() {
    let o = triscroll(&["bounds", "--b", "10", "--s", "13", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["result"]["lower_strict"], "50/3");
    assert_eq!(v["result"]["upper"], "21/1");
    let refined = triscroll(&["bounds", "--b", "10", "--s", "13", "--rational-non-p2", "--format", "csv"]);
    assert!(stdout(&refined).contains("102/5"));
}

#[test]
fn env_sets_default_format() {
    let o = Command::new(env!("CARGO_BIN_EXE_triscroll"))
        .args(["table1"])
        .env("TRISCROLL_FORMAT", "csv")
        .output()
        .unwrap();
    assert!(stdout(&o).starts_with("case,s,b,c\n"));
}

#[test]
fn output_file_and_report() {
    let dir = std::env::temp_dir().join(format!("triscroll-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.md");
    let o = triscroll(&["report", "--format", "md", "--output", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let body = std::fs::read_to_string(&path).unwrap();
    assert!(body.starts_with("# Verification report"));
    assert!(body.contains("## cusp-bounds (PASS)"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn report_json_round_trips() {
    let o = triscroll(&["report", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let mut again = serde_json::to_string_pretty(&v).unwrap();
    again.push('\n');
    assert_eq!(again.as_bytes(), o.stdout.as_slice());
    assert_eq!(v["overall"], true);
}
