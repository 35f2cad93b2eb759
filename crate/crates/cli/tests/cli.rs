//! End-to-end tests of the `fodepth` binary and the scenario runner.

use fodepth_cli::config::{Config, DEFAULT_CONFIG};
use fodepth_cli::scenarios::{run_scenario, ScenarioError};
use serde_json::Value;
use std::process::{Command, Output};

fn fodepth(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fodepth")).args(args).output().expect("the binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("JSON output")
}

#[test]
fn convert_round_trips() {
    let out = fodepth(&["--format", "text", "convert", "--from", "graph6", "--to", "edge-list", "Bw"]);
    assert!(out.status.success());
    let edges = stdout(&out);
    assert_eq!(edges.trim(), "# order 3\n0 1\n0 2\n1 2");
    let back = fodepth(&["--format", "text", "convert", "--from", "edge-list", "--to", "graph6", &edges]);
    assert_eq!(stdout(&back).trim(), "Bw");
    let p3 = fodepth(&["--format", "text", "convert", "--from", "edge-list", "--to", "graph6", "0 1\n1 2"]);
    assert_eq!(stdout(&p3).trim(), "Bg");
}

#[test]
fn malformed_input_is_a_usage_error_with_a_position() {
    let out = fodepth(&["convert", "--from", "graph6", "--to", "edge-list", "B\u{7f}"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("byte 1"));
}

#[test]
fn exit_codes() {
    assert_eq!(fodepth(&["run-scenario", "unknown"]).status.code(), Some(2));
    assert_eq!(fodepth(&["gen", "gnp", "5", "0.5"]).status.code(), Some(2), "stochastic without --seed");
    assert_eq!(fodepth(&["gen", "asym-tree", "5"]).status.code(), Some(3), "resource refusal");
    assert_eq!(fodepth(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(fodepth(&["run-scenario", "clique-depth"]).status.code(), Some(0));
}

#[test]
fn failing_assertions_exit_with_one() {
    let dir = std::env::temp_dir().join(format!("fodepth-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("strict.toml");
    // Demand a maximum below the true value so the scenario must fail.
    let strict = DEFAULT_CONFIG.replace("max_observed_at_max_order = 4", "max_observed_at_max_order = 2");
    std::fs::write(&path, strict).unwrap();
    let out = fodepth(&["--config", path.to_str().unwrap(), "run-scenario", "pvv-bound-n5"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["passed"], Value::Bool(false));
}

#[test]
fn games_and_generators() {
    let k3 = json(&fodepth(&["gen", "complete", "3"]))["graph6"].as_str().unwrap().to_string();
    let k4 = json(&fodepth(&["gen", "complete", "4"]))["graph6"].as_str().unwrap().to_string();
    assert_eq!(json(&fodepth(&["game", "depth", &k3, &k4]))["value"], 4);
    assert_eq!(json(&fodepth(&["game", "pebble", &k3, &k4, "--pebbles", "3"]))["value"], "inf");
    assert_eq!(json(&fodepth(&["game", "width", &k3, &k4]))["value"], 4);
    let pad = json(&fodepth(&["gen", "pad", "@"]));
    assert_eq!(pad["order"], 3);
    assert_eq!(pad["provenance"]["construction"]["family"], "pad");
    let a = json(&fodepth(&["--seed", "7", "gen", "gnp", "9", "0.5"]));
    let b = json(&fodepth(&["--seed", "7", "gen", "gnp", "9", "0.5"]));
    assert_eq!(a, b);
}

#[test]
fn define_and_check() {
    let out = json(&fodepth(&["define", "delta", "8", "--style", "three-var"]));
    assert_eq!(out["metrics"]["depth"], 3);
    assert_eq!(out["metrics"]["width"], 3);
    let checked = json(&fodepth(&["check", "--formula", "Ax.Ey.(x~y)", "Bw", "Bg", "B?"]));
    let holds: Vec<bool> =
        checked["results"].as_array().unwrap().iter().map(|r| r["holds"].as_bool().unwrap()).collect();
    assert_eq!(holds, vec![true, true, false]);
}

#[test]
fn analyze_and_spectrum() {
    let out = json(&fodepth(&["analyze", "Bg", "--identification", "depth"]));
    assert_eq!(out["has_twins"], true);
    assert!(out["identification"]["value"].is_number());
    let spectrum = json(&fodepth(&["spectrum", "Ex.Ay.(y=x)", "--max-order", "4"]));
    assert_eq!(spectrum["orders"][0], serde_json::json!([1, true]));
    assert_eq!(spectrum["orders"][1], serde_json::json!([2, false]));
}

fn without_runtime(mut report: Value) -> Value {
    report.as_object_mut().unwrap().remove("runtime_ms");
    report
}

#[test]
fn scenarios_are_reproducible() {
    let config = Config::builtin();
    for name in ["diag-chain", "bs-small-model"] {
        let first = serde_json::to_string(&without_runtime(
            serde_json::to_value(run_scenario(name, &config, None).unwrap()).unwrap(),
        ))
        .unwrap();
        let second = serde_json::to_string(&without_runtime(
            serde_json::to_value(run_scenario(name, &config, None).unwrap()).unwrap(),
        ))
        .unwrap();
        assert_eq!(first, second, "{name}");
    }
    let other_seed = run_scenario("diag-chain", &config, Some(99)).unwrap();
    assert_eq!(other_seed.seed, Some(99));
    assert_eq!(other_seed.config_hash.len(), 64);
    assert!(matches!(run_scenario("unknown", &config, None), Err(ScenarioError::Unknown(_))));
}

#[test]
fn worker_count_does_not_change_reports() {
    let one = fodepth(&["--jobs", "1", "run-scenario", "tree-refinement-n8"]);
    let four = fodepth(&["--jobs", "4", "run-scenario", "tree-refinement-n8"]);
    assert_eq!(without_runtime(json(&one)), without_runtime(json(&four)));
}
