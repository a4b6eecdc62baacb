use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn j2coh(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_j2coh")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut a = args.to_vec();
    a.extend(["--format", "json"]);
    let o = j2coh(&a);
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{args:?}: {e}"))
}

fn schema() -> jsonschema::Validator {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("schemas/report.schema.json");
    let schema: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    jsonschema::validator_for(&schema).unwrap()
}

fn scratch_dir(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("j2coh-{tag}-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn e6_corner_ascii() {
    let o = j2coh(&["table", "e6-corner"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("m increases downward"));
    assert!(out.lines().any(|l| l == "  0 |  1  2  2  3  3  4  4"), "{out}");
    assert!(out.contains("(2,3) dim 1: u*t*y1*y2"));
}

#[test]
fn invariant_tables_json() {
    let corner = json(&["table", "invariants-corner"]);
    assert_eq!(corner["dims"].as_array().unwrap().len(), 12);
    assert_eq!(corner["dims"][0].as_array().unwrap().len(), 9);
    assert_eq!(corner["dims"][1][3], 2);
    let full = json(&["table", "invariants-21"]);
    assert_eq!(full["dims"].as_array().unwrap().len(), 22);
    assert!(full["dims"].as_array().unwrap().iter().all(|r| r.as_array().unwrap().len() == 22));
}

#[test]
fn verify_suites_and_exit_codes() {
    let all = j2coh(&["verify", "all", "--format", "json"]);
    assert_eq!(all.status.code(), Some(0));
    let r: Value = serde_json::from_slice(&all.stdout).unwrap();
    assert!(r["summary"]["passed"].as_u64().unwrap() >= 12);
    assert_eq!(r["summary"]["failed"], 0);

    assert_eq!(j2coh(&["verify", "ss", "--k-d5", "2"]).status.code(), Some(0));
    assert_eq!(j2coh(&["verify", "rings", "--max-total-degree", "8"]).status.code(), Some(2));
    assert_eq!(j2coh(&["verify", "ss", "--k-d5", "0"]).status.code(), Some(2));
    assert_eq!(j2coh(&["verify", "nonsense"]).status.code(), Some(2));
    assert_eq!(j2coh(&["poincare", "25"]).status.code(), Some(2));
}

#[test]
fn poincare_rows() {
    let p = json(&["poincare", "12"]);
    let want: Vec<Value> = [1, 0, 0, 1, 2, 1, 0, 1, 2, 2, 1, 2, 3].into_iter().map(Value::from).collect();
    for row in ["closed_form", "e6_invariants", "leary_invariants", "presentation"] {
        assert_eq!(p[row].as_array().unwrap(), &want, "{row}");
    }
    assert_eq!(p["agree"], true);
    let zero = json(&["poincare", "0"]);
    assert_eq!(zero["presentation"], serde_json::json!([1]));
    assert!(stdout(&j2coh(&["poincare"])).ends_with("agree\n"));
}

#[test]
fn json_documents_match_schema() {
    let v = schema();
    for args in [
        &["report"][..],
        &["verify", "ss"],
        &["verify", "invariants", "--k-d5", "2"],
        &["table", "e6-corner"],
        &["table", "invariants-21"],
        &["poincare", "20"],
    ] {
        let doc = json(args);
        let errors: Vec<String> = v.iter_errors(&doc).map(|e| e.to_string()).collect();
        assert!(errors.is_empty(), "{args:?}: {errors:?}");
    }
}

#[test]
fn output_is_deterministic_and_can_go_to_a_file() {
    let a = j2coh(&["verify", "all"]);
    let b = j2coh(&["verify", "all"]);
    assert_eq!(a.stdout, b.stdout);
    let dir = scratch_dir("out");
    let path = dir.join("corner.txt");
    let o = j2coh(&["table", "e6-corner", "--out", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    assert_eq!(std::fs::read(&path).unwrap(), j2coh(&["table", "e6-corner"]).stdout);
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn fixture_directory_override() {
    let shipped = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/fixtures");
    let ok = j2coh(&["verify", "rings", "--fixtures", shipped.to_str().unwrap()]);
    assert_eq!(ok.status.code(), Some(0));

    // drop the last relation of the J2 ring: its Hilbert series grows
    let dir = scratch_dir("fixtures");
    std::fs::copy(shipped.join("leary.pres"), dir.join("leary.pres")).unwrap();
    let j2 = std::fs::read_to_string(shipped.join("j2.pres")).unwrap();
    let cut: Vec<&str> = j2.lines().filter(|l| !l.starts_with("rel f*g")).collect();
    std::fs::write(dir.join("j2.pres"), cut.join("\n")).unwrap();
    let bad = j2coh(&["verify", "rings", "--fixtures", dir.to_str().unwrap()]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(stdout(&bad).contains("FAIL j2_presentation_isomorphism"));

    let missing = j2coh(&["verify", "rings", "--fixtures", "/nonexistent/j2coh"]);
    assert_eq!(missing.status.code(), Some(1));
    std::fs::remove_dir_all(dir).ok();
}
