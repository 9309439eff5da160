use std::process::{Command, Output};

use serde_json::Value;

fn htsasm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_htsasm")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

fn write_tmp(name: &str, body: &str) -> String {
    let path = std::env::temp_dir().join(format!("htsasm-cli-{}-{name}", std::process::id()));
    std::fs::write(&path, body).unwrap();
    path.to_string_lossy().into_owned()
}

const FIRST_PATHS: &str = "1 1 2' 2 0 0 0 -3' / 3 0' 0 -3 -3 -2' / -2 -2 -1'";
const MEETING_PATHS: &str = "1 1 2' 2 0 0 0 -3' / 3 0' 0 0 -3 -2' / -2 -2 -1'";
const EVEN_STAIRCASE: &str = r#"{"kind":"B","n":3,"lambda":[3,2,1],"entries":[[1,0,0],[-1,0,1],[0,0,0],[1,0,0],[0,1,0],[0,0,0]]}"#;

#[test]
fn enumerate_smallest_odd_shape() {
    let o = htsasm(&["enumerate", "--kind", "Bprime", "--n", "1", "--lambda", "1"]);
    assert!(o.status.success());
    let lines: Vec<Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 2);
    assert!(lines.iter().all(|v| v["kind"] == "Bprime"));
}

#[test]
fn enumerate_contains_known_matrix() {
    let o = htsasm(&["enumerate", "--kind", "B", "--n", "3", "--lambda", "3,2,1"]);
    assert!(o.status.success());
    let want: Value = serde_json::from_str(EVEN_STAIRCASE).unwrap();
    assert!(stdout(&o).lines().any(|l| serde_json::from_str::<Value>(l).unwrap() == want));
}

#[test]
fn enumerate_is_deterministic() {
    let args = ["enumerate", "--kind", "Bprime", "--mu", "1", "--n", "2"];
    assert_eq!(htsasm(&args).stdout, htsasm(&args).stdout);
}

#[test]
fn bad_flags_exit_2() {
    assert_eq!(htsasm(&["enumerate", "--kind", "B", "--lambda", "1,2"]).status.code(), Some(2));
    assert_eq!(htsasm(&["enumerate", "--kind", "C", "--n", "1"]).status.code(), Some(2));
    assert_eq!(htsasm(&["verify", "--scheme", "okada", "--kind", "Bprime"]).status.code(), Some(2));
    assert_eq!(htsasm(&["verify", "--scheme", "generic", "--perturb", "upper/XX"]).status.code(), Some(2));
}

#[test]
fn size_limit_exits_3() {
    let o = htsasm(&["enumerate", "--kind", "Bprime", "--n", "9"]);
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(htsasm(&["lemma", "--lemma", "deth", "--n", "5"]).status.code(), Some(3));
}

#[test]
fn convert_matrix_to_tableau_and_back() {
    let input = write_tmp("even.json", EVEN_STAIRCASE);
    let o = htsasm(&["convert", "--input", &input]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let v = json(&o);
    assert_eq!(v["round_trip"], true);
    assert_eq!(v["cpm_round_trip"], true);
    assert_eq!(v["cpm"].as_array().unwrap().len(), 6);
}

#[test]
fn convert_tableau_to_paths_ends_in_its_row_lengths() {
    let o = htsasm(&["convert", "--tableau", FIRST_PATHS, "--to", "paths"]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["non_intersecting"], true);
    let ends: Vec<i64> = v["paths"]["paths"]
        .as_array()
        .unwrap()
        .iter()
        .map(|p| p["edges"].as_array().unwrap().last().unwrap()["to"]["col"].as_i64().unwrap())
        .collect();
    assert_eq!(ends, vec![8, 6, 3]);
}

#[test]
fn invalid_matrix_exits_4_with_violations() {
    let input = write_tmp("bad.json", r#"{"kind":"B","n":1,"lambda":[1],"entries":[[1],[1]]}"#);
    let o = htsasm(&["convert", "--input", &input]);
    assert_eq!(o.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&o.stderr).contains("condition"));
    let junk = write_tmp("junk.json", "not json");
    assert_eq!(htsasm(&["render", "--input", &junk]).status.code(), Some(4));
}

#[test]
fn verify_campaigns() {
    let o = htsasm(&["verify", "--scheme", "generic", "--kind", "Bprime", "--n-max", "2", "--mu-max", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["ok"], true);
    assert_eq!(v["checks"].as_array().unwrap().len(), 10);
    assert_eq!(htsasm(&["verify", "--scheme", "okada", "--kind", "B", "--n-max", "2"]).status.code(), Some(0));
}

#[test]
fn perturbed_table_exits_1() {
    let o = htsasm(&["verify", "--scheme", "generic", "--n-max", "2", "--mu-max", "1", "--perturb", "central/NS"]);
    assert_eq!(o.status.code(), Some(1));
    let v = json(&o);
    assert_eq!(v["ok"], false);
    let bad = v["checks"].as_array().unwrap().iter().find(|c| c["equal"] == false).unwrap();
    assert!(bad["counterexample_diff"].is_string());
}

#[test]
fn weigh_one_matrix_and_a_shape() {
    let input = write_tmp("weigh.json", EVEN_STAIRCASE);
    let o = htsasm(&["weigh", "--scheme", "bn", "--input", &input]);
    assert!(o.status.success());
    assert!(json(&o)["weight"].is_string());
    let o = htsasm(&["weigh", "--scheme", "generic", "--n", "1"]);
    assert!(o.status.success());
    assert!(!json(&o)["sum"].as_str().unwrap().is_empty());
}

#[test]
fn render_paths_and_ice() {
    let out = write_tmp("first.svg", "");
    let o = htsasm(&["render", "--tableau", FIRST_PATHS, "--out", &out]);
    assert!(o.status.success());
    let svg = std::fs::read_to_string(&out).unwrap();
    assert_eq!(svg.matches("<path").count(), 3);
    assert!(!svg.contains(r#"class="meet""#));

    let o = htsasm(&["render", "--tableau", MEETING_PATHS]);
    assert!(stdout(&o).contains(r#"class="meet""#));

    let o = htsasm(&["render", "--tableau", "1"]);
    assert_eq!(stdout(&o).matches("<path").count(), 1);

    let input = write_tmp("ice.json", EVEN_STAIRCASE);
    let a = htsasm(&["render", "--input", &input]);
    assert!(a.status.success());
    assert_eq!(stdout(&a).matches("<circle").count(), 18);
    assert_eq!(a.stdout, htsasm(&["render", "--input", &input]).stdout);
}

#[test]
fn lemma_reports() {
    let o = htsasm(&["lemma", "--lemma", "detm", "--n", "4", "--mode", "random", "--seed", "5", "--trials", "20"]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["seed"], 5);
    assert_eq!(v["trials"], 20);
    assert_eq!(v["failures"].as_array().unwrap().len(), 0);
    let o = htsasm(&["lemma", "--lemma", "hr", "--r", "3", "--n", "2"]);
    assert_eq!(json(&o)["lemma"], "hr:3");
    assert_eq!(htsasm(&["lemma", "--lemma", "nope", "--n", "1"]).status.code(), Some(2));
}
