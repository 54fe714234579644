//! Every JSON shape the binary prints validates against its schema file.

use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

fn schema(name: &str) -> Value {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("schemas").join(format!("{name}.json"));
    serde_json::from_str(&std::fs::read_to_string(&path).expect("schema file exists")).expect("schema is JSON")
}

fn run(args: &[&str]) -> Value {
    let out = Command::new(env!("CARGO_BIN_EXE_plcomb")).args(args).output().expect("binary runs");
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn assert_valid(name: &str, args: &[&str]) {
    let schema = schema(name);
    let validator = jsonschema::validator_for(&schema).expect("schema compiles");
    let instance = run(args);
    let errors: Vec<String> = validator.iter_errors(&instance).map(|e| format!("{} at {}", e, e.instance_path)).collect();
    assert!(errors.is_empty(), "{args:?} against {name}: {errors:#?}");
}

#[test]
fn schemas_are_valid_documents() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("schemas");
    let mut count = 0;
    for entry in std::fs::read_dir(dir).unwrap() {
        let path = entry.unwrap().path();
        let doc: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
        jsonschema::validator_for(&doc).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        count += 1;
    }
    assert_eq!(count, 13);
}

#[test]
fn words_outputs() {
    assert_valid("words-count", &["words", "classes", "--rank", "4", "--count"]);
    assert_valid("words-count", &["words", "enumerate", "--rank", "3", "--count"]);
    assert_valid("words-enumerate", &["words", "enumerate", "--rank", "3"]);
    assert_valid("words-classes", &["words", "classes", "--rank", "3"]);
    assert_valid("words-graph", &["words", "graph", "--rank", "3"]);
    assert_valid("words-standard", &["words", "standard", "--rank", "10"]);
    assert_valid("words-check", &["words", "check", "--word", "1213"]);
    assert_valid("words-check", &["words", "check", "--word", "132132"]);
    for method in ["recursive", "shortest", "detour"] {
        assert_valid("words-path", &["words", "path", "--from", "132132", "--to", "212321", "--method", method]);
    }
}

#[test]
fn word_outputs() {
    assert_valid("chambers", &["chambers", "--word", "2343121324"]);
    assert_valid("quivers", &["quivers", "--word", "2343121324"]);
    assert_valid("quivers", &["quivers", "--word", "2343121324", "--with-chamber-sets"]);
    assert_valid("quivers", &["quivers", "--rank", "5", "--with-chamber-sets"]);
    assert_valid("cone", &["cone", "lusztig", "--word", "132132"]);
    assert_valid("cone", &["cone", "lusztig", "--word", "1324132413", "--rays"]);
}

#[test]
fn configuration_outputs() {
    assert_valid("rectangles", &["rectangles", "--quiver", "-LLRRRLRR"]);
    assert_valid("rectangles", &["rectangles", "--quiver", "--L"]);
    assert_valid("rectangles", &["rectangles", "--quiver", "RLRLRLRLRLR"]);
}

#[test]
fn region_outputs() {
    assert_valid("regions", &["regions", "--rank", "2", "--histogram", "--atlas"]);
    assert_valid(
        "regions",
        &["regions", "--rank", "3", "--histogram", "--match-classes", "--orthant", "--graph", "--atlas"],
    );
    assert_valid("regions", &["regions", "--rank", "3", "--from", "123121", "--to", "321323"]);
}

#[test]
fn verify_output() {
    assert_valid("verify", &["verify", "a2"]);
}

#[test]
fn schemas_reject_malformed_output() {
    let validator = jsonschema::validator_for(&schema("words-standard")).unwrap();
    let mut v = run(&["words", "standard", "--rank", "3"]);
    assert!(validator.is_valid(&v));
    v["j"] = Value::from("12a");
    assert!(!validator.is_valid(&v));
    v["j"] = Value::from("121");
    v["extra"] = Value::from(1);
    assert!(!validator.is_valid(&v));

    let rect = jsonschema::validator_for(&schema("rectangles")).unwrap();
    let mut r = run(&["rectangles", "--quiver", "-LR"]);
    assert!(rect.is_valid(&r));
    r["configuration"]["centre"]["x"] = Value::from(1.5);
    assert!(!rect.is_valid(&r));
}
