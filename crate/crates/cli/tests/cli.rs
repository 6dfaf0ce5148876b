use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mfcat"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json on stdout")
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let p = dir.join(name);
    fs::write(&p, contents).unwrap();
    p
}

#[test]
fn shipped_examples_verify() {
    for entry in fs::read_dir(data("")).unwrap() {
        let p = entry.unwrap().path();
        let out = run(&["verify", path(&p)]);
        assert_eq!(out.status.code(), Some(0), "{}", p.display());
        let v = json(&out);
        assert_eq!(v["schema"], 1);
        assert_eq!(v["maurer_cartan"], true);
    }
}

#[test]
fn hom_between_examples() {
    let (m2, m1) = (data("m_2_0_h4.json"), data("m_1_0_h4.json"));
    let v = json(&run(&["hom", path(&m2), path(&m1), "--degree", "0"]));
    assert_eq!(v["dim"], 0);
    let v = json(&run(&["hom", path(&m1), path(&m2)]));
    assert_eq!(v["dim"], 1);
    assert_eq!(v["representatives"].as_array().unwrap().len(), 1);
    let v = json(&run(&["hom", path(&m1), path(&m1), "--table", "--window", "3"]));
    let dims: Vec<u64> = v["table"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["dim"].as_u64().unwrap())
        .collect();
    assert_eq!(dims, vec![0, 0, 0, 1, 0, 0, 0]);
}

#[test]
fn decompose_and_hn() {
    let s = data("sum_h4.json");
    let v = json(&run(&["decompose", path(&s)]));
    assert_eq!(v["labels"], serde_json::json!([[1, 0], [3, 0]]));
    assert_eq!(v["certificate_ok"], true);
    assert!(v.get("certificate").is_none());
    let v = json(&run(&["decompose", path(&s), "--certificate"]));
    assert!(v["certificate"]["r"].is_array());
    let v = json(&run(&["stability", "hn", path(&s)]));
    let phases: Vec<&str> = v["filtration"]
        .as_array()
        .unwrap()
        .iter()
        .map(|st| st["phase"].as_str().unwrap())
        .collect();
    assert_eq!(phases, vec!["1/4", "-1/4"]);
}

#[test]
fn euler_matches() {
    let out = run(&["euler", "--h", "4", "--source", "both"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["verdict"], "match");
    assert_eq!(v["mf"]["intersection"], v["cartan"]);
}

#[test]
fn checks_pass() {
    for args in [
        vec!["ar", "--h", "4", "--window", "1"],
        vec!["serre", "--h", "3", "--range", "1"],
        vec!["stability", "check", "--h", "3", "--window", "1", "--corpus", "10"],
        vec!["quiver", "compare", "--h", "4"],
        vec!["weights", "check", "--a", "1", "--b", "1", "--c", "1", "--h", "3"],
        vec!["selftest", "--max-h", "3"],
    ] {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(0), "{args:?}");
        assert_eq!(json(&out)["ok"], true);
    }
    let v = json(&run(&["weights", "check", "--a", "1", "--b", "1", "--c", "1", "--h", "3"]));
    assert_eq!(v["milnor_number"], "8/1");
}

#[test]
fn report_writes_file() {
    let out_path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("report_h3.json");
    let out = run(&["report", "--h", "3", "-o", path(&out_path)]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&fs::read_to_string(&out_path).unwrap()).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["ok"], true);
    assert!(v["euler"]["mf"]["a"].is_array());
}

#[test]
fn output_is_deterministic() {
    let a = run(&["selftest", "--max-h", "3", "--seed", "5"]);
    let b = run(&["selftest", "--max-h", "3", "--seed", "5"]);
    assert_eq!(a.stdout, b.stdout);
    let s = data("sum_h4.json");
    assert_eq!(
        run(&["decompose", path(&s), "--certificate"]).stdout,
        run(&["decompose", path(&s), "--certificate"]).stdout
    );
}

#[test]
fn failing_check_exits_one() {
    let bad = scratch(
        "bad_mc.json",
        r#"{"weights": {"a": [1], "h": 4}, "f": [{"c": "1/1", "e": [4]}],
            "even": [0], "odd": [1],
            "q_pm": [[[{"c": "1/1", "e": [1]}]]], "q_mp": [[[{"c": "1/1", "e": [1]}]]]}"#,
    );
    let out = run(&["verify", path(&bad)]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["maurer_cartan"], false);
}

#[test]
fn usage_and_parse_errors_exit_two() {
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["euler", "--h", "4", "--bogus"]).status.code(), Some(2));
    let broken = scratch("broken.json", "{\"weights\": {\"a\": [1],\n \"h\": }");
    let out = run(&["verify", path(&broken)]);
    assert_eq!(out.status.code(), Some(2));
    let msg = String::from_utf8_lossy(&out.stderr);
    assert!(msg.contains("line 2"), "{msg}");
    let multi = scratch(
        "two_vars.json",
        r#"{"weights": {"a": [1, 1], "h": 2}, "f": [{"c": "1/1", "e": [1, 1]}],
            "even": [0], "odd": [1],
            "q_pm": [[[{"c": "1/1", "e": [1, 0]}]]], "q_mp": [[[{"c": "1/1", "e": [0, 1]}]]]}"#,
    );
    assert_eq!(run(&["verify", path(&multi)]).status.code(), Some(0));
    let out = run(&["decompose", path(&multi)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("one-variable"));
}
