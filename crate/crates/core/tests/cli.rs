use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::{json, Value};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_coring-lab"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name).display().to_string()
}

fn scratch(name: &str, doc: &Value) -> String {
    let dir = std::env::temp_dir().join(format!("coring-lab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, serde_json::to_string(doc).unwrap()).unwrap();
    path.display().to_string()
}

fn sample() -> Value {
    serde_json::from_str(&std::fs::read_to_string(data("quaternion_setting.json")).unwrap()).unwrap()
}

#[test]
fn demo_trig_passes() {
    let out = run(&["demo", "trig"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["schema"], "coring-lab/1");
    assert_eq!(v["command"], "demo");
    assert_eq!(v["passed"], true);
}

#[test]
fn demo_output_is_byte_deterministic() {
    let a = run(&["demo", "all", "--jobs", "1"]);
    let b = run(&["demo", "all", "--jobs", "4"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn text_format_ends_with_result_line() {
    let out = run(&["demo", "sweedler", "--format", "text"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.trim_end().ends_with("result: PASS"), "{text}");
}

#[test]
fn t2_is_not_galois() {
    let v = json_of(&run(&["demo", "t2-counterexample"]));
    let inst = &v["instances"][0];
    assert_eq!(v["passed"], true);
    assert_eq!(inst["facts"]["galois"], false);
}

#[test]
fn rationals_are_strings() {
    let v = json_of(&run(&["demo", "aomega", "--alpha", "-1"]));
    assert_eq!(v["instances"][0]["parameters"]["alpha"], json!(["-1"]));
}

#[test]
fn classify_counts() {
    for (n, count) in [("1", 2), ("2", 4), ("3", 3)] {
        let out = run(&["classify", "--n", n]);
        assert_eq!(out.status.code(), Some(0), "n = {n}");
        let v = json_of(&out);
        assert_eq!(v["instances"][0]["classes"].as_array().unwrap().len(), count);
    }
}

#[test]
fn usage_errors_exit_one() {
    for args in [
        vec!["demo", "nope"],
        vec!["demo", "appendix-H", "--n", "3"],
        vec!["demo", "trig", "--alpha", "2"],
        vec!["demo", "aomega", "--field", "GF7"],
        vec!["classify", "--n", "4"],
        vec!["frobnicate"],
    ] {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
    }
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn error_report_shape() {
    let v = json_of(&run(&["demo", "nope"]));
    assert_eq!(v["schema"], "coring-lab/1");
    assert_eq!(v["passed"], false);
    assert_eq!(v["error"]["kind"], "UnknownInstance");
}

#[test]
fn check_reports_the_offending_generator() {
    let out = run(&["check", &data("quaternion_setting.json")]);
    assert_eq!(out.status.code(), Some(2));
    let v = json_of(&out);
    let coideals = v["instances"][0]["coideals"].as_array().unwrap();
    assert_eq!(coideals[0]["passed"], true);
    assert_eq!(coideals[0]["J_dim"], 8);
    assert_eq!(coideals[1]["error"]["kind"], "NotACoideal");
    assert_eq!(coideals[1]["error"]["index"], 0);
    assert_eq!(coideals[1]["error"]["condition"], "sub-bimodule");
}

#[test]
fn check_passes_without_the_bad_coideal() {
    let mut doc = sample();
    doc["coideals"].as_array_mut().unwrap().truncate(1);
    let out = run(&["check", &scratch("good.json", &doc)]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
}

fn schema_pointer(doc: &Value, file: &str) -> String {
    let out = run(&["check", &scratch(file, doc)]);
    assert_eq!(out.status.code(), Some(1));
    let v = json_of(&out);
    assert_eq!(v["error"]["kind"], "Schema");
    v["error"]["pointer"].as_str().unwrap().to_string()
}

#[test]
fn schema_errors_carry_pointers() {
    let mut doc = sample();
    doc["schema"] = json!("coring-lab/0");
    assert_eq!(schema_pointer(&doc, "schema.json"), "/schema");

    let mut doc = sample();
    doc["extensions"][0]["generators"][0][1][1] = json!("x/y");
    assert_eq!(schema_pointer(&doc, "entry.json"), "/extensions/0/generators/0/1/1");

    let mut doc = sample();
    doc["rank"] = json!("two");
    assert_eq!(schema_pointer(&doc, "rank.json"), "/rank");

    assert_eq!(schema_pointer(&json!([1, 2]), "array.json"), "");
}

#[test]
fn invalid_json_and_missing_file() {
    let dir = std::env::temp_dir().join(format!("coring-lab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("broken.json");
    std::fs::write(&path, "{ not json").unwrap();
    let v = json_of(&run(&["check", path.to_str().unwrap()]));
    assert_eq!(v["error"]["pointer"], "");
    let out = run(&["check", "/nonexistent/input.json"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json_of(&out)["error"]["kind"], "Io");
}

#[test]
fn output_flag_writes_the_report() {
    let dir = std::env::temp_dir().join(format!("coring-lab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let out = run(&["demo", "trig", "-o", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["passed"], true);
}
