use std::path::PathBuf;
use std::process::Command;

use noether_cli::{dispatch, Dispatch, EXIT_ERROR, EXIT_FAILED, EXIT_OK};
use serde_json::Value;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name).display().to_string()
}

fn run(args: &[&str]) -> Dispatch {
    dispatch(std::iter::once("noether-el").chain(args.iter().copied()))
}

fn report(d: &Dispatch) -> Value {
    serde_json::from_str(&d.stdout).expect("stdout is JSON")
}

#[test]
fn depth_of_x_squared() {
    let d = run(&["depth", "compute", "--ideal", &data("ex_xsq.json")]);
    assert_eq!(d.code, EXIT_OK, "{}", d.stderr);
    let r = report(&d);
    assert_eq!(r["schema"], 1);
    assert_eq!(r["depth"], "(x^2)");
    assert_eq!(r["status"], "Certified");
}

#[test]
fn depth_of_4x_and_x_squared_is_x() {
    let r = report(&run(&["depth", "compute", "--ideal", &data("ex_4x_xsq.json")]));
    assert_eq!(r["depth"], "(x)");
    assert_eq!(r["witnesses"].as_array().unwrap().len(), 2);
}

#[test]
fn selftest_depth_examples() {
    let d = run(&["selftest", "--suite", "depth-examples"]);
    assert_eq!(d.code, EXIT_OK);
    assert_eq!(report(&d)["suites"][0]["passed"], true);
}

#[test]
fn classify_mod_4() {
    let r = report(&run(&["measures", "classify", "--mod", "4", "--d", "2"]));
    let mut sizes: Vec<u64> =
        r["ergodic_measures"].as_array().unwrap().iter().map(|m| m["support"].as_u64().unwrap()).collect();
    sizes.sort_unstable();
    assert_eq!(sizes, [1, 3, 12]);
    assert_eq!(r["bijection"], true);
}

#[test]
fn center_word_mod_7() {
    let r = report(&run(&["mat", "center-word", "--mod", "7", "--d", "3", "--unit", "2"]));
    assert_eq!(r["exact"], true);
    assert_eq!(r["word"].as_array().unwrap().len(), r["letters"].as_u64().unwrap() as usize);
    let d = run(&["mat", "center-word", "--mod", "7", "--d", "3", "--unit", "3"]);
    assert_eq!(d.code, EXIT_ERROR);
}

#[test]
fn shorten_row() {
    let r = report(&run(&["mat", "shorten", "--row", "6,10,15"]));
    assert_eq!(r["shortened"], serde_json::json!(["0", "1"]));
}

#[test]
fn generated_group_orders() {
    let r = report(&run(&["group", "generate", "--mod", "2", "--d", "3", "--gens", "elementary"]));
    assert_eq!(r["order"], 168);
    let r = report(&run(&["group", "generate", "--mod", "4", "--d", "3", "--gens", "level:2"]));
    // The E_ij(2t) commute modulo 4, so F_3((2)) is (Z/2)^6, a proper
    // subgroup of the order-256 congruence subgroup.
    assert_eq!(r["order"], 64);
    assert_eq!(r["inside_congruence_subgroup"], true);
}

#[test]
fn shipped_triple_validates_and_induces() {
    let v = run(&["char", "validate", "--triple", &data("triple_sl3_f2_deg7.json")]);
    assert_eq!(v.code, EXIT_OK, "{}", v.stdout);
    let args = ["char", "induce", "--triple", &data("triple_sl3_f2_deg7.json"), "--ball", "3", "--sample", "20"];
    let a = run(&args);
    assert_eq!(a.code, EXIT_OK);
    assert_eq!(a.stdout, run(&args).stdout);
}

#[test]
fn regenerated_triple_matches_shipped_file() {
    let d = run(&["char", "triple", "--mod", "2", "--d", "3", "--degree", "7"]);
    assert_eq!(d.code, EXIT_OK);
    let shipped: Value = serde_json::from_str(&std::fs::read_to_string(data("triple_sl3_f2_deg7.json")).unwrap()).unwrap();
    assert_eq!(report(&d), shipped);
}

#[test]
fn failed_validation_still_reports() {
    let dir = std::env::temp_dir().join(format!("noether-el-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let mut t: Value = serde_json::from_str(&std::fs::read_to_string(data("triple_sl3_f2_deg7.json")).unwrap()).unwrap();
    t["level"] = serde_json::json!(["2"]);
    let path = dir.join("bad_level.json");
    std::fs::write(&path, t.to_string()).unwrap();
    let d = run(&["char", "validate", "--triple", path.to_str().unwrap()]);
    assert_eq!(d.code, EXIT_FAILED);
    let r = report(&d);
    assert_eq!(r["passed"], false);
    assert_eq!(r["level_matches"], false);
}

#[test]
fn bad_input_exits_1() {
    let d = run(&["depth", "compute", "--ideal", &data("ex_xsq.json"), "--frobnicate"]);
    assert_eq!(d.code, EXIT_ERROR);
    assert!(d.stderr.contains("Usage"));
    assert!(run(&["nonsense"]).code == EXIT_ERROR);
    assert_eq!(run(&["depth", "compute", "--ideal", "/nonexistent.json"]).code, EXIT_ERROR);
    assert_eq!(run(&["selftest", "--suite", "nope"]).code, EXIT_ERROR);
    assert_eq!(run(&["depth", "compute", "--ideal", &data("ex_xsq.json"), "--bound", "0"]).code, EXIT_ERROR);
}

#[test]
fn text_format_and_out_file() {
    let d = run(&["depth", "compute", "--ideal", &data("ex_xsq.json"), "--format", "text"]);
    assert!(d.stdout.contains("depth: (x^2)\n"));
    let path = std::env::temp_dir().join(format!("noether-el-out-{}.json", std::process::id()));
    let d = run(&["ideal", "gb", "--ideal", &data("ex_4x_xsq.json"), "--out", path.to_str().unwrap()]);
    assert_eq!(d.code, EXIT_OK);
    assert!(d.stdout.is_empty());
    let r: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(r["basis"], serde_json::json!(["4*x", "x^2"]));
}

#[test]
fn caps_file_from_environment() {
    let caps = std::env::temp_dir().join(format!("noether-el-caps-{}.json", std::process::id()));
    std::fs::write(&caps, r#"{"max_elements": 10}"#).unwrap();
    let bin = env!("CARGO_BIN_EXE_noether-el");
    let out = Command::new(bin)
        .args(["group", "classes", "--mod", "2", "--d", "3"])
        .env("NOETHER_EL_CAPS", &caps)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(EXIT_ERROR));
    assert!(String::from_utf8_lossy(&out.stderr).contains("resource limit"));
    let out = Command::new(bin)
        .args(["group", "classes", "--mod", "2", "--d", "3", "--max-elements", "1000"])
        .env("NOETHER_EL_CAPS", &caps)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(EXIT_OK));
    let r: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(r["classes"], 6);
}
