//! End-to-end tests of the `digraph-ideals` binary: subcommand output,
//! JSON shapes, exit codes, and byte determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(format!("{}/tests/fixtures/{name}", env!("CARGO_MANIFEST_DIR")))
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_digraph-ideals"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "command {:?} failed: {}",
        args,
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf8 output")
}

fn exit_code(args: &[&str]) -> i32 {
    run(args).status.code().expect("no signal")
}

#[test]
fn ideal_of_d2_renders_with_explicit_stars() {
    let d2 = fixture("d2.json");
    let out = stdout_of(&["ideal", d2.to_str().expect("utf8 path")]);
    assert_eq!(out, "e1*e2 - e3\n");
}

#[test]
fn cycles_of_d1_under_the_custom_lex_order() {
    let d1 = fixture("d1.json");
    let out = stdout_of(&[
        "cycles",
        d1.to_str().expect("utf8 path"),
        "--order",
        "lex",
        "--vars",
        "e3,e1,e4,e2,e5,e6",
        "--format",
        "json",
    ]);
    let doc: serde_json::Value = serde_json::from_str(&out).expect("valid json");
    let cycles = doc["cycles"].as_array().expect("cycles array");
    assert_eq!(cycles.len(), 3);
    let edge_sets: Vec<Vec<&str>> = cycles
        .iter()
        .map(|c| {
            c["edges"].as_array().expect("edges").iter().map(|e| e.as_str().expect("id")).collect()
        })
        .collect();
    assert_eq!(
        edge_sets,
        [vec!["e1", "e2", "e3"], vec!["e1", "e2", "e4", "e5"], vec!["e3", "e4", "e5"]]
    );
    assert_eq!(cycles[0]["class"], "directed");
    assert_eq!(cycles[1]["class"], "undirected");
    assert_eq!(cycles[2]["class"], "undirected");
}

#[test]
fn is_dag_json_shape() {
    let d2 = fixture("d2.json");
    let out = stdout_of(&["is-dag", d2.to_str().expect("utf8 path"), "--format", "json"]);
    assert_eq!(out, "{\"dag\":true}\n");

    let d1 = fixture("d1.json");
    let out = stdout_of(&["is-dag", d1.to_str().expect("utf8 path"), "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&out).expect("valid json");
    assert_eq!(doc["dag"], false);
    assert!(doc["witness"].as_array().expect("witness").len() >= 3);
}

#[test]
fn covers_of_d4_report_sources_and_sinks() {
    let d4 = fixture("d4.json");
    let out = stdout_of(&["covers", d4.to_str().expect("utf8 path")]);
    assert!(out.contains("source cover: v1, v3"), "unexpected output: {out}");
    assert!(out.contains("sink cover: v2, v4, v5"), "unexpected output: {out}");
}

#[test]
fn bipartite_verdicts_match_the_fixtures() {
    let d4 = fixture("d4.json");
    let out = stdout_of(&["bipartite", d4.to_str().expect("utf8 path"), "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&out).expect("valid json");
    assert_eq!(doc["directly_bipartite"], true);
    assert_eq!(doc["witness"], "v2*v4*v5 - z1*z3");

    let d1 = fixture("d1.json");
    let out = stdout_of(&["bipartite", d1.to_str().expect("utf8 path"), "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&out).expect("valid json");
    assert_eq!(doc["directly_bipartite"], false);
}

#[test]
fn is_upd_and_cycle_basis_run_on_fixtures() {
    let d4 = fixture("d4.json");
    let out = stdout_of(&["is-upd", d4.to_str().expect("utf8 path"), "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&out).expect("valid json");
    assert_eq!(doc["upd"], false);

    let d1 = fixture("d1.json");
    let out = stdout_of(&["cycle-basis", d1.to_str().expect("utf8 path"), "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&out).expect("valid json");
    assert_eq!(doc["dimension"], 2);
    assert_eq!(doc["basis"].as_array().expect("basis").len(), 2);
}

#[test]
fn undirected_input_takes_a_seed_and_finds_the_five_cycle() {
    let c5 = fixture("c5.dot");
    let out = stdout_of(&[
        "cycles",
        c5.to_str().expect("utf8 path"),
        "--seed",
        "5",
        "--format",
        "json",
    ]);
    let doc: serde_json::Value = serde_json::from_str(&out).expect("valid json");
    let cycles = doc["cycles"].as_array().expect("cycles");
    assert_eq!(cycles.len(), 1);
    assert_eq!(cycles[0]["length"], 5);
}

#[test]
fn hgraph_exports_parseable_dot() {
    let d2 = fixture("d2.json");
    let out = stdout_of(&["hgraph", d2.to_str().expect("utf8 path"), "--kind", "k"]);
    assert!(out.starts_with("graph {"), "unexpected output: {out}");
    assert!(out.contains("z1 -- v2"), "unexpected output: {out}");
    assert!(!out.contains("f1"), "matching edges must be absent: {out}");
}

#[test]
fn analyze_emits_identical_bytes_for_identical_requests() {
    let d1 = fixture("d1.json");
    let args =
        ["analyze", d1.to_str().expect("utf8 path"), "--format", "json"];
    let first = stdout_of(&args);
    let second = stdout_of(&args);
    assert_eq!(first, second);
    for key in ["\"ideal\":", "\"cycles\":", "\"dag\":", "\"upd\":", "\"directly_bipartite\":", "\"covers\":"]
    {
        assert!(first.contains(key), "missing {key} in {first}");
    }
}

#[test]
fn exit_codes_follow_the_documented_contract() {
    let d1 = fixture("d1.json");
    let d1_path = d1.to_str().expect("utf8 path");
    let c5 = fixture("c5.dot");

    // 0: success.
    assert_eq!(exit_code(&["is-dag", d1_path]), 0);
    assert_eq!(exit_code(&["--help"]), 0);

    // 1: usage problems, from clap or from request validation.
    assert_eq!(exit_code(&["nonsense"]), 1);
    assert_eq!(exit_code(&["ideal", d1_path, "--vars", "e1,e2"]), 1);
    assert_eq!(exit_code(&["cycles", c5.to_str().expect("utf8 path")]), 1);

    // 2: unreadable, malformed, or invalid graph input.
    assert_eq!(exit_code(&["ideal", "no-such-file.json"]), 2);
    let bad = std::env::temp_dir().join(format!("digraph-ideals-bad-{}.json", std::process::id()));
    std::fs::write(&bad, "{\"vertices\":[\"a\"],\"edges\":[{\"id\":\"e1\",\"from\":\"a\",\"to\":\"b\"}]}")
        .expect("temp file writes");
    assert_eq!(exit_code(&["ideal", bad.to_str().expect("utf8 path")]), 2);

    // 3: an enumeration cap was exceeded.
    assert_eq!(
        exit_code(&["cycles", d1_path, "--method", "linear", "--max-cycles", "1"]),
        3
    );
    assert_eq!(exit_code(&["covers", d1_path, "--max-covers", "1"]), 3);
}
