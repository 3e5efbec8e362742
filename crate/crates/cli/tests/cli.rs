use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tetraposet"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().unwrap()
}

fn convert(from: &str, to: &str, input: &str, extra: &[&str]) -> Output {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("input.json");
    fs::write(&path, input).unwrap();
    let mut args = vec!["convert", "--from", from, "--to", to, "--input", path.to_str().unwrap()];
    args.extend_from_slice(extra);
    run(&args)
}

fn converted(from: &str, to: &str, input: &str, extra: &[&str]) -> Value {
    let out = convert(from, to, input, extra);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn counts() {
    assert_eq!(stdout(&["count", "--n", "4", "--colors", "gybo"]), "42\n");
    assert_eq!(stdout(&["count", "--n", "5", "--colors", "rgy"]), "2498\n");
    assert_eq!(
        stdout(&["count", "--n", "4", "--colors", "gybo", "--method", "formula"]),
        "42\n"
    );
    assert_eq!(
        stdout(&["count", "--n", "3", "--colors", "g", "--method", "enum"]),
        "12\n"
    );
    assert_eq!(
        stdout(&["count", "--n", "3", "--colors", "brg", "--q"]),
        "8\n1 + 2*q + 2*q^2 + 2*q^3 + q^4\n"
    );
}

#[test]
fn count_json_and_dual() {
    let v: Value = serde_json::from_str(&stdout(&[
        "count", "--n", "3", "--colors", "ry", "--q", "--dual", "--json",
    ]))
    .unwrap();
    assert_eq!(v["count"], "10");
    let formula: Value = serde_json::from_str(&stdout(&[
        "count", "--n", "3", "--colors", "ry", "--q", "--dual", "--json", "--method", "formula",
    ]))
    .unwrap();
    assert_eq!(v["rank_gf"], formula["rank_gf"]);
    assert_eq!(v["colors"], serde_json::json!(["r", "y"]));
}

#[test]
fn count_errors() {
    assert_eq!(code(&["count", "--n", "4", "--colors", "rb"]), 2);
    assert_eq!(code(&["count", "--n", "4", "--colors", "rbx"]), 2);
    assert_eq!(code(&["count", "--n", "1", "--colors", "g"]), 2);
    assert_eq!(
        code(&["count", "--n", "4", "--colors", "rbgoy", "--method", "formula"]),
        3
    );
    assert_eq!(
        code(&["count", "--n", "4", "--colors", "rgy", "--method", "formula"]),
        3
    );
    assert_eq!(
        code(&["count", "--n", "4", "--colors", "gybo", "--method", "formula", "--q"]),
        3
    );
    let err = String::from_utf8(run(&["count", "--n", "4", "--colors", "rb"]).stderr).unwrap();
    assert!(err.contains("{r,b} in S requires g"), "{err}");
}

#[test]
fn budget_env_is_honored() {
    let out = Command::new(env!("CARGO_BIN_EXE_tetraposet"))
        .args(["count", "--n", "5", "--colors", "", "--method", "enum"])
        .env("TETRAPOSET_BUDGET", "1000")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("budget"));
}

#[test]
fn worked_examples_convert() {
    let asm = "[[0,1,0,0],[1,-1,0,1],[0,0,1,0],[0,1,0,0]]";
    assert_eq!(
        converted("asm", "mt", asm, &[]),
        serde_json::json!([[2], [1, 4], [1, 3, 4], [1, 2, 3, 4]])
    );
    assert_eq!(
        converted("asm", "array", asm, &[]),
        serde_json::json!([[1, 1, 1, 2], [2, 3, 4], [3, 4], [4]])
    );
    let tsscpp = "[[8,8,8,8,6,6,4,4],[8,8,8,8,6,5,4,4],[8,8,7,6,5,4,3,2],[8,8,6,5,4,3,2,2],\
                  [6,6,5,4,3,2,0,0],[6,5,4,3,2,1,0,0],[4,4,3,2,0,0,0,0],[4,4,2,2,0,0,0,0]]";
    let arr = converted("tsscpp", "array", tsscpp, &[]);
    assert_eq!(arr, serde_json::json!([[1, 1, 2, 4], [2, 2, 4], [3, 3], [4]]));
    let back = converted("array", "tsscpp", &arr.to_string(), &[]);
    assert_eq!(back, serde_json::from_str::<Value>(tsscpp).unwrap());
}

#[test]
fn family_mismatch_exits_4() {
    let asm = "[[0,1,0,0],[1,-1,0,1],[0,0,1,0],[0,1,0,0]]";
    assert_eq!(convert("asm", "tournament", asm, &[]).status.code(), Some(4));
    // The identity ASM maps to the minimal array, which is the transitive tournament.
    let t = converted("asm", "tournament", "[[1,0,0],[0,1,0],[0,0,1]]", &[]);
    assert_eq!(t, serde_json::json!([[1, 2, 1], [1, 3, 1], [2, 3, 2]]));
}

#[test]
fn invalid_objects_exit_2() {
    assert_eq!(convert("asm", "mt", "[[1,1],[0,0]]", &[]).status.code(), Some(2));
    assert_eq!(convert("asm", "mt", "not json", &[]).status.code(), Some(2));
    assert_eq!(convert("tournament", "array", "[[1,2,3]]", &[]).status.code(), Some(2));
    assert_eq!(
        convert("ideal", "array", "[[0,1,0]]", &["--n", "3", "--colors", "g"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(convert("ideal", "array", "[]", &["--n", "3"]).status.code(), Some(2));
}

#[test]
fn ideal_round_trip() {
    let arr = converted("ideal", "array", "[[0,0,0],[0,1,0]]", &["--n", "3", "--colors", "g"]);
    assert_eq!(arr, serde_json::json!([[1, 1, 3], [2, 2], [3]]));
    let ideal = converted("array", "ideal", &arr.to_string(), &["--colors", "g"]);
    assert_eq!(ideal, serde_json::json!([[0, 0, 0], [0, 1, 0]]));
    let tournament = converted("tournament", "ideal", "[[1,2,2],[1,3,1],[2,3,2]]", &["--colors", "rbg"]);
    assert_eq!(tournament.as_array().unwrap().len(), 1);
}

#[test]
fn missing_input_file_exits_1() {
    assert_eq!(
        code(&[
            "convert",
            "--from",
            "asm",
            "--to",
            "mt",
            "--input",
            "/nonexistent/x.json"
        ]),
        1
    );
}

#[test]
fn verify_reports() {
    let out = stdout(&["verify", "--identity", "tsscpp-count", "--n", "4", "--no-timing"]);
    assert_eq!(
        out,
        "{\"identity\":\"tsscpp-count\",\"n\":4,\"status\":\"equal\",\"first_diff_monomial\":null,\"elapsed_ms\":0}\n"
    );
    let rr: Value = serde_json::from_str(&stdout(&["verify", "--identity", "rr", "--n", "2"])).unwrap();
    assert_eq!(rr["status"], "equal");
    assert!(rr["elapsed_ms"].is_u64());
    let rows = stdout(&["verify", "--identity", "formulas", "--n", "5", "--no-timing"]);
    let rows: Vec<Value> = rows.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(rows.len(), 35);
    assert!(rows.iter().all(|r| r["status"] == "equal"));
    assert!(rows.iter().any(|r| r["identity"] == "formulas/empty"));
    assert_eq!(code(&["verify", "--identity", "nope", "--n", "2"]), 2);
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["verify", "--identity", "asm", "--n", "4", "--no-timing"][..],
        &["export-dot", "--n", "4", "--colors", "rbgoys"],
        &["export-json", "--n", "4", "--colors", "gybo"],
        &["enumerate", "--kind", "tsscpp", "--n", "3"],
        &["count", "--n", "5", "--colors", "bgs", "--q", "--json"],
    ] {
        assert_eq!(stdout(args), stdout(args), "{args:?}");
    }
}

#[test]
fn dot_export() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.dot");
    stdout(&[
        "export-dot",
        "--n",
        "2",
        "--colors",
        "rbgoys",
        "--output",
        path.to_str().unwrap(),
    ]);
    let dot = fs::read_to_string(&path).unwrap();
    assert_eq!(dot.matches("[label=").count(), 1);
    assert!(!dot.contains("->"));
    let dot = stdout(&["export-dot", "--n", "4", "--colors", "rbgoys"]);
    assert_eq!(dot.matches("[label=").count(), 10);
    let colors: std::collections::BTreeSet<&str> = dot
        .lines()
        .filter_map(|l| l.split("[color=").nth(1))
        .map(|c| c.trim_end_matches("];"))
        .collect();
    assert_eq!(
        colors,
        ["blue", "green", "orange", "red", "silver", "yellow"]
            .into_iter()
            .collect()
    );
    assert_eq!(code(&["export-dot", "--n", "3", "--colors", "rb"]), 2);
    assert_eq!(
        code(&[
            "export-dot",
            "--n",
            "3",
            "--colors",
            "g",
            "--output",
            "/nonexistent/dir/t.dot"
        ]),
        1
    );
}

#[test]
fn json_export() {
    let v: Value = serde_json::from_str(&stdout(&["export-json", "--n", "3", "--colors", "gybo"])).unwrap();
    assert_eq!(v["n"], 3);
    assert_eq!(v["colors"], serde_json::json!(["b", "g", "o", "y"]));
    assert_eq!(v["vertices"].as_array().unwrap().len(), 4);
}

#[test]
fn enumeration_streams() {
    let count_lines = |args: &[&str]| stdout(args).lines().count();
    assert_eq!(count_lines(&["enumerate", "--kind", "asm", "--n", "4"]), 42);
    assert_eq!(count_lines(&["seed-list", "--kind", "tsscpp", "--n", "4"]), 42);
    assert_eq!(count_lines(&["--seed-list", "--kind", "asm", "--n", "3"]), 7);
    assert_eq!(count_lines(&["enumerate", "--kind", "tournament", "--n", "4"]), 64);
    assert_eq!(count_lines(&["enumerate", "--kind", "mt", "--n", "3"]), 7);
    assert_eq!(
        count_lines(&["enumerate", "--kind", "array", "--n", "3", "--colors", "rbg"]),
        8
    );
    assert_eq!(
        count_lines(&["enumerate", "--kind", "ideal", "--n", "3", "--colors", "g"]),
        12
    );
    assert_eq!(code(&["enumerate", "--kind", "array", "--n", "3"]), 2);
    let first: Value = serde_json::from_str(
        stdout(&["enumerate", "--kind", "ideal", "--n", "3", "--colors", ""])
            .lines()
            .next()
            .unwrap(),
    )
    .unwrap();
    assert_eq!(first, serde_json::json!([]));
}
