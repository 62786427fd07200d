use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::{json, Value};
use tempfile::TempDir;
use wsapprox::instances::json::canonicalize;

const THREE_POINTS: &str = r#"{"direction":"min","p":2,"kind":"explicit","solutions":[
    {"id":"x0","f":["1","8"]},{"id":"x1","f":["2","2"]},{"id":"x2","f":["8","1"]}]}"#;

fn wsapprox(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_wsapprox")).args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    fs::write(&path, text).unwrap();
    path
}

fn json_of(text: &str) -> Value {
    serde_json::from_str(text).unwrap()
}

fn tightness(dir: &TempDir) -> PathBuf {
    let path = dir.path().join("tight.json");
    assert_eq!(wsapprox(&["generate", "--out", p(&path), "tightness", "--p", "2", "--m", "4"]).0, 0);
    path
}

#[test]
fn grid_and_bisect_reports_on_three_points() {
    let dir = TempDir::new().unwrap();
    let inst = write(&dir, "three.json", THREE_POINTS);
    let (code, out) = wsapprox(&["approximate", "--algorithm", "grid", "--instance", p(&inst), "--epsilon", "2", "--sigma", "1"]);
    assert_eq!(code, 0);
    let grid = json_of(&out);
    assert_eq!(grid["ws_calls"], 7);
    assert_eq!(grid["schema_version"], 1);
    assert_eq!(grid["inputs"]["epsilon"], "2");
    assert_eq!(grid["u"], json!([3, 3]));
    assert_eq!(grid["weights_issued"].as_array().unwrap().len(), 7);
    assert_eq!(grid["weights_issued"][1]["weight"], json!(["1", "1/2"]));
    assert!(grid.get("cells").is_none());

    let (code, out) = wsapprox(&["approximate", "--algorithm", "bisect", "--instance", p(&inst), "--epsilon", "2"]);
    assert_eq!(code, 0);
    let bis = json_of(&out);
    assert_eq!(bis["ws_calls"], 3);
    assert_eq!(bis["result"], json!([{"id": "x0", "f": ["1", "8"]}, {"id": "x2", "f": ["8", "1"]}]));
    assert_eq!(bis["instrumentation"]["tree_nodes"], 1);
    assert_eq!(bis["guarantee"]["variant"], "disjunctive-biobjective");
}

#[test]
fn flag_and_input_errors_have_distinct_codes() {
    let dir = TempDir::new().unwrap();
    let inst = write(&dir, "three.json", THREE_POINTS);
    let i = p(&inst);
    assert_eq!(wsapprox(&["approximate", "--algorithm", "ptas", "--instance", i, "--epsilon", "1", "--tau", "1/2"]).0, 2);
    assert_eq!(wsapprox(&["approximate", "--algorithm", "ptas", "--instance", i, "--epsilon", "1"]).0, 2);
    assert_eq!(wsapprox(&["approximate", "--algorithm", "bisect", "--instance", i, "--epsilon", "1", "--sigma", "2"]).0, 2);
    assert_eq!(wsapprox(&["approximate", "--algorithm", "grid", "--instance", i, "--epsilon", "0.5"]).0, 2);
    assert_eq!(wsapprox(&["approximate", "--algorithm", "fast", "--instance", i, "--epsilon", "1"]).0, 2);

    let typo = write(&dir, "typo.json", r#"{"direction":"min","p":2,"kind":"explicit","solutions":[],"sollutions":[]}"#);
    assert_eq!(wsapprox(&["approximate", "--algorithm", "grid", "--instance", p(&typo), "--epsilon", "1"]).0, 3);
    assert_eq!(wsapprox(&["approximate", "--algorithm", "grid", "--instance", "/nonexistent.json", "--epsilon", "1"]).0, 3);

    let max = dir.path().join("max.json");
    wsapprox(&["generate", "--out", p(&max), "max-counterexample", "--p", "3", "--m", "7"]);
    assert_eq!(wsapprox(&["approximate", "--algorithm", "grid", "--instance", p(&max), "--epsilon", "1"]).0, 4);
}

#[test]
fn ptas_report_carries_its_guarantee() {
    let dir = TempDir::new().unwrap();
    let inst = write(&dir, "three.json", THREE_POINTS);
    let (code, out) = wsapprox(&[
        "approximate", "--algorithm", "ptas", "--solver", "adversarial", "--instance", p(&inst),
        "--epsilon", "1", "--tau", "1/4",
    ]);
    assert_eq!(code, 0);
    let rep = json_of(&out);
    assert_eq!(rep["inputs"]["sigma"], "5/4");
    assert_eq!(rep["eps_prime"], "1/5");
    assert_eq!(rep["guarantee"]["bound"], "3");
}

#[test]
fn verify_exit_codes_follow_the_verdict() {
    let dir = TempDir::new().unwrap();
    let inst = tightness(&dir);
    let (code, out) = wsapprox(&["oracle", "--instance", p(&inst), "--what", "supported"]);
    assert_eq!(code, 0);
    let ids = json_of(&out)["ids"].clone();
    assert_eq!(ids, json!(["y1", "y2"]));
    let sup = write(&dir, "sup.json", &ids.to_string());

    let (code, out) = wsapprox(&[
        "verify", "--instance", p(&inst), "--solutions", p(&sup), "--family", "multifactor", "--sum-bound", "3/2",
    ]);
    assert_eq!(code, 1);
    let rep = json_of(&out);
    assert_eq!(rep["ok"], false);
    assert_eq!(rep["violations"][0]["target"], "ytilde");

    let report = dir.path().join("grid.json");
    let args = ["approximate", "--algorithm", "grid", "--instance", p(&inst), "--epsilon", "1/2", "--out", p(&report)];
    assert_eq!(wsapprox(&args).0, 0);
    let verify = ["verify", "--instance", p(&inst), "--from-report", p(&report), "--family", "multifactor"];
    assert_eq!(wsapprox(&[&verify[..], &["--epsilon", "1/2", "--sigma", "1"]].concat()).0, 0);

    let everything = write(&dir, "all.json", r#"{"ids":["y1","y2","ytilde"]}"#);
    for family in ["multifactor", "uniform"] {
        let args = ["verify", "--instance", p(&inst), "--solutions", p(&everything), "--family", family, "--sum-bound", "2"];
        assert_eq!(wsapprox(&args).0, 0, "{family}");
    }
    let args = ["verify", "--instance", p(&inst), "--solutions", p(&everything), "--family", "disjunctive", "--epsilon", "1/8"];
    assert_eq!(wsapprox(&args).0, 0);

    let unknown = write(&dir, "bad.json", r#"["y9"]"#);
    let args = ["verify", "--instance", p(&inst), "--solutions", p(&unknown), "--family", "uniform", "--epsilon", "1"];
    assert_eq!(wsapprox(&args).0, 3);
    let args = ["verify", "--instance", p(&inst), "--solutions", p(&sup), "--family", "uniform"];
    assert_eq!(wsapprox(&args).0, 2);
    let args = ["verify", "--instance", p(&inst), "--family", "uniform", "--epsilon", "1"];
    assert_eq!(wsapprox(&args).0, 2);
}

#[test]
fn oracle_outputs() {
    let dir = TempDir::new().unwrap();
    let two = write(&dir, "two.json", r#"{"direction":"min","p":2,"kind":"explicit","solutions":[
        {"id":"a","f":["1","1"]},{"id":"b","f":["2","2"]}]}"#);
    let (code, out) = wsapprox(&["oracle", "--instance", p(&two), "--what", "pareto"]);
    assert_eq!(code, 0);
    assert_eq!(json_of(&out)["ids"], json!(["a"]));

    let max = dir.path().join("max.json");
    wsapprox(&["generate", "--out", p(&max), "max-counterexample", "--p", "2", "--m", "100"]);
    let (code, out) = wsapprox(&["oracle", "--instance", p(&max), "--what", "max-impossibility"]);
    assert_eq!(code, 0);
    assert_eq!(json_of(&out)["holds"], true);

    // a generic max instance is not the construction
    let not_max = write(&dir, "plain.json", r#"{"direction":"max","p":2,"kind":"explicit","solutions":[
        {"id":"a","f":["1","1"]}]}"#);
    assert_eq!(wsapprox(&["oracle", "--instance", p(&not_max), "--what", "max-impossibility"]).0, 3);
}

#[test]
fn graph_instances_run_and_guard_enumeration() {
    let dir = TempDir::new().unwrap();
    let g = dir.path().join("graph.json");
    let gen = ["generate", "--out", p(&g), "random-graph", "--kind", "spanning-tree", "--nodes", "5", "--arcs", "8", "--seed", "3"];
    assert_eq!(wsapprox(&gen).0, 0);
    let report = dir.path().join("rep.json");
    let args = ["approximate", "--algorithm", "grid", "--instance", p(&g), "--epsilon", "1/2", "--out", p(&report)];
    assert_eq!(wsapprox(&args).0, 0);
    let verify = ["verify", "--instance", p(&g), "--from-report", p(&report), "--family", "multifactor", "--epsilon", "1/2"];
    assert_eq!(wsapprox(&verify).0, 0);
    assert_eq!(wsapprox(&[&verify[..], &["--enumeration-limit", "2"]].concat()).0, 5);
    assert_eq!(wsapprox(&["oracle", "--instance", p(&g), "--what", "pareto", "--enumeration-limit", "2"]).0, 5);
    let adv = ["approximate", "--algorithm", "grid", "--solver", "adversarial", "--instance", p(&g), "--epsilon", "1"];
    assert_eq!(wsapprox(&adv).0, 2);
}

#[test]
fn plot_export_of_the_grid_run() {
    let dir = TempDir::new().unwrap();
    let inst = write(&dir, "three.json", THREE_POINTS);
    let report = dir.path().join("rep.json");
    let args = ["approximate", "--algorithm", "grid", "--instance", p(&inst), "--epsilon", "2", "--out", p(&report)];
    assert_eq!(wsapprox(&args).0, 0);
    let out = dir.path().join("plot");
    assert_eq!(wsapprox(&["export-plot", "--from-report", p(&report), "--out-dir", p(&out)]).0, 0);

    let weights = fs::read_to_string(out.join("weights.csv")).unwrap();
    assert_eq!(weights.lines().count(), 1 + 7);
    assert!(weights.lines().any(|l| l == "6,1/8,1,3,0,x2"));
    let cells = fs::read_to_string(out.join("cells.csv")).unwrap();
    assert_eq!(cells.lines().count(), 1 + 16);
    assert!(cells.lines().any(|l| l == "0,3,8,8,16,16,x1"));
    let points = fs::read_to_string(out.join("points.csv")).unwrap();
    assert!(points.contains("x1,2,2,pareto+supported+output"));

    // cells embedded by --cells are used as they are
    let with_cells = dir.path().join("cells.json");
    wsapprox(&[&args[..7], &["--cells", "--out", p(&with_cells)]].concat());
    let out2 = dir.path().join("plot2");
    assert_eq!(wsapprox(&["export-plot", "--from-report", p(&with_cells), "--out-dir", p(&out2)]).0, 0);
    assert_eq!(fs::read_to_string(out2.join("cells.csv")).unwrap(), cells);
}

#[test]
fn plot_export_edge_cases() {
    let dir = TempDir::new().unwrap();
    let empty = write(&dir, "empty.json", "{}");
    let out = dir.path().join("empty");
    assert_eq!(wsapprox(&["export-plot", "--from-report", p(&empty), "--out-dir", p(&out)]).0, 0);
    for f in ["points.csv", "weights.csv", "cells.csv"] {
        assert_eq!(fs::read_to_string(out.join(f)).unwrap().lines().count(), 1, "{f}");
    }

    let inst = tightness(&dir);
    let report = dir.path().join("rep.json");
    let args = ["approximate", "--algorithm", "bisect", "--instance", p(&inst), "--epsilon", "1", "--out", p(&report)];
    assert_eq!(wsapprox(&args).0, 0);
    let out = dir.path().join("tight");
    assert_eq!(wsapprox(&["export-plot", "--from-report", p(&report), "--out-dir", p(&out)]).0, 0);
    let points = fs::read_to_string(out.join("points.csv")).unwrap();
    assert!(points.lines().any(|l| l == "ytilde,5/2,5/2,pareto"), "{points}");

    let three = dir.path().join("three.json");
    wsapprox(&["generate", "--out", p(&three), "random-explicit", "--p", "3", "--n", "5"]);
    let report = dir.path().join("rep3.json");
    wsapprox(&["approximate", "--algorithm", "grid", "--instance", p(&three), "--epsilon", "1", "--out", p(&report)]);
    assert_eq!(wsapprox(&["export-plot", "--from-report", p(&report), "--out-dir", p(&out)]).0, 2);
}

#[test]
fn generated_instances_are_canonical() {
    for args in [
        vec!["generate", "tightness", "--p", "3", "--m", "6"],
        vec!["generate", "max-counterexample", "--p", "2", "--m", "1000000"],
        vec!["generate", "random-explicit", "--p", "2", "--n", "6", "--seed", "9", "--high", "7/2"],
        vec!["generate", "random-graph", "--kind", "shortest-path", "--nodes", "4", "--arcs", "6"],
    ] {
        let (code, out) = wsapprox(&args);
        assert_eq!(code, 0, "{args:?}");
        assert_eq!(canonicalize(&out).unwrap(), out, "{args:?}");
    }
    let (a, b) = (wsapprox(&["generate", "random-explicit", "--p", "2", "--n", "4", "--seed", "1"]), wsapprox(&["generate", "random-explicit", "--p", "2", "--n", "4", "--seed", "1"]));
    assert_eq!(a, b);
}

#[test]
fn thread_count_does_not_change_reports() {
    let dir = TempDir::new().unwrap();
    let inst = dir.path().join("inst.json");
    wsapprox(&["generate", "--out", p(&inst), "random-explicit", "--p", "3", "--n", "20", "--seed", "4"]);
    let run = |threads: &str| {
        wsapprox(&["--threads", threads, "approximate", "--algorithm", "grid", "--instance", p(&inst), "--epsilon", "1", "--sigma", "3/2", "--solver", "adversarial"])
    };
    let one = run("1");
    assert_eq!(one.0, 0);
    assert_eq!(one, run("3"));
    assert_eq!(wsapprox(&["--threads", "0", "generate", "tightness", "--p", "2", "--m", "4"]).0, 2);
}
