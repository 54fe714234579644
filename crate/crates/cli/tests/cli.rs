use std::process::{Command, Output};

use serde_json::Value;

fn plcomb(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_plcomb")).args(args).output().expect("binary runs")
}

fn plcomb_threads(args: &[&str], threads: usize) -> Output {
    Command::new(env!("CARGO_BIN_EXE_plcomb"))
        .args(args)
        .env("PLCOMB_THREADS", threads.to_string())
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = plcomb(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn strings(v: &Value) -> Vec<String> {
    v.as_array().unwrap().iter().map(|x| x.as_str().unwrap().to_string()).collect()
}

#[test]
fn class_count() {
    assert_eq!(json(&["words", "classes", "--rank", "4", "--count"]), Value::from(62));
    assert_eq!(json(&["words", "enumerate", "--rank", "3", "--count"]), Value::from(16));
}

#[test]
fn standard_words() {
    let v = json(&["words", "standard", "--rank", "4"]);
    assert_eq!(v["j"], "1324132413");
    assert_eq!(v["j_prime"], "2413241324");
}

#[test]
fn golden_chamber_sets() {
    let v = json(&["chambers", "--word", "2343121324"]);
    let mut sets: Vec<Vec<u64>> = v["chambers"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["members"].as_array().unwrap().iter().map(|m| m.as_u64().unwrap()).collect())
        .collect();
    sets.sort();
    assert_eq!(sets, vec![vec![1, 2, 4], vec![1, 2, 4, 5], vec![2], vec![2, 4], vec![2, 4, 5], vec![2, 5]]);
}

#[test]
fn lusztig_inequalities() {
    let v = json(&["cone", "lusztig", "--word", "132132"]);
    let mut got = strings(&v["inequalities"]);
    got.sort();
    assert_eq!(got, vec!["c >= a+d", "c >= b+e", "d+e >= c+f"]);
}

#[test]
fn quivers_one_per_line() {
    let out = plcomb(&["quivers", "--word", "1324132413", "--text"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 6);
    assert!(text.lines().all(|l| l.len() == 3 && l.chars().all(|c| "-LR".contains(c))));
}

#[test]
fn rectangle_roots() {
    let v = json(&["rectangles", "--quiver", "-LLRRRLRR"]);
    assert_eq!(v["rank"], 10);
    assert_eq!(v["phi_plus"].as_array().unwrap().len(), 12);
}

#[test]
fn rank_two_histogram() {
    let v = json(&["regions", "--rank", "2", "--histogram"]);
    assert_eq!(v["histogram"], serde_json::json!({ "1": 2 }));
    assert_eq!(v["regions"], 2);
}

#[test]
fn rank_three_matching() {
    let v = json(&["regions", "--rank", "3", "--histogram", "--match-classes", "--graph"]);
    assert_eq!(v["histogram"], serde_json::json!({ "3": 8, "4": 2 }));
    assert_eq!(v["matching"]["bijection"], true);
    assert_eq!(v["matching"]["matched"], 8);
    assert_eq!(v["graph"]["isomorphic"], true);
}

#[test]
fn renderers() {
    let svg = plcomb(&["render", "--format", "svg", "--word", "121"]);
    assert!(svg.status.success());
    assert!(String::from_utf8(svg.stdout).unwrap().starts_with("<svg"));
    let ascii = plcomb(&["render", "--format", "ascii", "--quiver", "-LLRRRLRR"]);
    assert!(ascii.status.success());
    assert!(String::from_utf8(ascii.stdout).unwrap().contains('+'));
    let wiring = plcomb(&["chambers", "--word", "121", "--render", "ascii"]);
    assert!(wiring.status.success());
}

#[test]
fn verify_a2_passes() {
    let out = plcomb(&["verify", "a2"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["passed"], true);
    assert!(String::from_utf8(out.stderr).unwrap().lines().all(|l| l.starts_with("PASS")));
}

#[test]
fn domain_errors_exit_one() {
    let bad = plcomb(&["chambers", "--word", "13x2"]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(String::from_utf8(bad.stderr).unwrap().contains("position 3"));
    assert!(bad.stdout.is_empty());

    let not_reduced = plcomb(&["chambers", "--word", "112"]);
    assert_eq!(not_reduced.status.code(), Some(1));

    let quiver = plcomb(&["rectangles", "--quiver", "-LX"]);
    assert_eq!(quiver.status.code(), Some(1));
    assert!(String::from_utf8(quiver.stderr).unwrap().contains("position 3"));

    assert_eq!(plcomb(&["regions", "--rank", "5"]).status.code(), Some(1));
    assert_eq!(plcomb(&["words", "classes", "--rank", "6"]).status.code(), Some(1));
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(plcomb(&["words", "classes", "--rank", "4", "--bogus"]).status.code(), Some(1));
    assert_eq!(plcomb(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(plcomb(&["quivers"]).status.code(), Some(1));
    assert_eq!(plcomb_threads(&["words", "standard", "--rank", "2"], 0).status.code(), Some(1));
    assert_eq!(plcomb(&["--help"]).status.code(), Some(0));
}

#[test]
fn output_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("atlas.json");
    let out = plcomb(&["regions", "--rank", "2", "--atlas", "--json", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["atlas"].as_array().unwrap().len(), 2);
}

#[test]
fn deterministic_across_threads() {
    let args = ["regions", "--rank", "3", "--histogram", "--match-classes", "--orthant", "--atlas"];
    let one = plcomb_threads(&args, 1);
    let four = plcomb_threads(&args, 4);
    assert!(one.status.success());
    assert_eq!(one.stdout, four.stdout);
    assert_eq!(one.stdout, plcomb_threads(&args, 4).stdout);
}
