use std::path::PathBuf;
use std::process::{Command, Output};

fn ppg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ppg")).args(args).output().unwrap()
}

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join(format!("data/groups/{name}.json"))
        .to_string_lossy()
        .into_owned()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn verify_s4_passes() {
    let s4 = data("s4");
    let o = ppg(&["verify", "--group", &s4, "--prime", "2", "--oracle-slow"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let out = stdout(&o);
    assert!(!out.contains("FAIL"));
    assert!(out.contains("PASS matrix_relation") && out.contains("PASS slow_oracle"));
}

#[test]
fn s5_principal_dot_has_fourteen_nodes() {
    let s5 = data("s5");
    let o = ppg(&["multiposet", "--group", &s5, "--prime", "2", "--block", "principal", "--format", "dot"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let labels = out.matches("[label=").count();
    let edges = out.matches(" -> ").count();
    assert_eq!(labels - edges, 14);
}

#[test]
fn s5_principal_pieces_table_has_nine_rows() {
    let s5 = data("s5");
    let o = ppg(&["pieces", "--group", &s5, "--prime", "2", "--block", "principal"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 1 + 9);
}

#[test]
fn json_commands_parse() {
    for cmd in ["pieces", "generalized", "points", "multiposet", "verify"] {
        let o = ppg(&[cmd, "--group", "builtin:s4", "--prime", "2", "--format", "json"]);
        assert_eq!(o.status.code(), Some(0), "{cmd}");
        let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
        assert_eq!(v["schema"], "ppg/1");
        assert_eq!(v["prime"], 2);
        assert_eq!(v["seed"], 0);
    }
}

#[test]
fn outputs_are_byte_identical_across_runs() {
    for fmt in ["json", "dot", "table"] {
        let args = ["multiposet", "--group", "builtin:s5", "--prime", "2", "--block", "all", "--format", fmt, "--seed", "0"];
        assert_eq!(ppg(&args).stdout, ppg(&args).stdout, "{fmt}");
    }
}

#[test]
fn exit_codes() {
    let tmp = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let bad = tmp.join("bad_group.json");
    std::fs::write(&bad, "{\"degree\": 3, \"generators\": [[1, 2]]}").unwrap();
    let bad = bad.to_string_lossy().into_owned();
    let code = |args: &[&str]| ppg(args).status.code();
    assert_eq!(code(&["pieces", "--group", &bad, "--prime", "2"]), Some(2));
    assert_eq!(code(&["pieces", "--group", "/nonexistent/g.json", "--prime", "2"]), Some(2));
    assert_eq!(code(&["pieces", "--group", "builtin:s4", "--prime", "4"]), Some(2));
    assert_eq!(code(&["pieces", "--group", "builtin:s4", "--prime", "2", "--block", "x"]), Some(2));
    assert_eq!(code(&["pieces", "--group", "builtin:s4", "--prime", "2", "--block", "5"]), Some(2));
    assert_eq!(code(&["pieces", "--group", "builtin:s4"]), Some(2));
    assert_eq!(code(&["points", "--group", "builtin:s4", "--prime", "2", "--format", "dot"]), Some(2));
    assert_eq!(code(&["pieces", "--group", "builtin:s5", "--prime", "2", "--max-order", "100"]), Some(3));
}
