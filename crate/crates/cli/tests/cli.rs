use std::process::{Command, Output};

use dombound::Partition;
use serde_json::Value;

fn dombound(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dombound"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = dombound(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    serde_json::from_str(&stdout(args)).unwrap()
}

fn status(args: &[&str]) -> i32 {
    dombound(args).status.code().unwrap()
}

#[test]
fn hasse_par6() {
    let v = json(&["hasse", "--n", "6", "--format", "json"]);
    assert_eq!(v["nodes"].as_array().unwrap().len(), 11);
    let edges: Vec<(String, String)> = v["edges"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| (e[0].as_str().unwrap().into(), e[1].as_str().unwrap().into()))
        .collect();
    assert_eq!(edges.len(), 12);
    assert!(edges.contains(&("4,2".into(), "3,3".into())));
    assert!(edges.contains(&("3,2,1".into(), "2,2,2".into())));
    assert_eq!(v["longest_from_top"]["1,1,1,1,1,1"], 8);

    let dot = stdout(&["hasse", "--n", "6", "--format", "dot"]);
    assert_eq!(dot.matches(" -> ").count(), 12);
    assert_eq!(dot.matches("[label=").count(), 11);
}

#[test]
fn hasse_small_cases() {
    let v = json(&["hasse", "--n", "1", "--format", "json"]);
    assert_eq!(v["nodes"], serde_json::json!(["1"]));
    assert_eq!(v["edges"].as_array().unwrap().len(), 0);

    let v = json(&["hasse", "--n", "7", "--rank", "2", "--format", "json"]);
    assert_eq!(
        v["nodes"],
        serde_json::json!(["2,2,2,1", "2,2,1,1,1", "2,1,1,1,1,1", "1,1,1,1,1,1,1"])
    );
    assert_eq!(v["edges"].as_array().unwrap().len(), 3);
}

#[test]
fn chains_examples() {
    let v = json(&["chains", "--from", "421", "--to", "2221", "--format", "json"]);
    let lengths: Vec<u64> = v["chains"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["length"].as_u64().unwrap())
        .collect();
    assert_eq!(lengths, vec![3, 4]);

    let v = json(&["chains", "--from", "7", "--to", "4111", "--longest-only", "--format", "json"]);
    let chains = v["chains"].as_array().unwrap();
    assert_eq!(chains.len(), 2);
    assert!(chains.iter().all(|c| c["length"] == 5));

    let text = stdout(&["chains", "--from", "3,2", "--to", "3,2"]);
    assert!(text.starts_with("1 chains"));
    assert!(text.contains("[0] 3,2"));
}

#[test]
fn bound_examples() {
    let v = json(&["bound", "4,1,1,1", "--format", "json"]);
    assert_eq!(v["bound_b"], 11);
    assert_eq!(v["floor_bound"], 8);
    assert_eq!(
        v["best_chain"]["elements"],
        serde_json::json!(["7", "6,1", "5,2", "5,1,1", "4,2,1", "4,1,1,1"])
    );
    assert_eq!(v["per_step"], serde_json::json!([4, 2, 2, 1, 1]));

    assert_eq!(json(&["bound", "7", "--format", "json"])["bound_b"], 1);
    // Par(3) is the chain 3 > 21 > 111, so B(111) = 1 + 2^0 + 2^1.
    let v = json(&["bound", "1,1,1", "--format", "json"]);
    assert_eq!(v["bound_b"], 4);
    assert_eq!(v["floor_bound"], 4);
}

#[test]
fn expand_examples() {
    let text = stdout(&["expand", "2,1", "--rank", "3"]);
    assert_eq!(text, "c(2,1) = S(3) + S(2,1)\nW = 2\n");
    assert_eq!(json(&["expand", "5", "--format", "json"])["weight"], 1);
    assert_eq!(json(&["expand", "1111", "-r", "4", "--format", "json"])["weight"], 10);
    assert_eq!(status(&["expand", "4", "--rank", "3"]), 2);
}

#[test]
fn verify_examples_and_exit_codes() {
    let v = json(&["verify", "weight-bound", "--n", "7", "--r", "7", "--format", "json"]);
    assert_eq!(v["records"].as_array().unwrap().len(), 15);
    assert_eq!(v["all_pass"], true);
    assert_eq!(v["elapsed_ms"], Value::Null);

    let v = json(&["verify", "dominance", "--k", "5", "--rank", "5", "--format", "json"]);
    assert_eq!(v["records"].as_array().unwrap().len(), 21);
    assert_eq!(v["all_pass"], true);

    let v = json(&["verify", "cover-steps", "--n", "6", "--format", "json", "--sequential"]);
    assert_eq!(v["records"].as_array().unwrap().len(), 12);
    assert_eq!(v["all_pass"], true);

    assert_eq!(status(&["verify", "weight-bound", "--n", "7", "--r", "3"]), 2);
    assert_eq!(status(&["verify", "weight-bound"]), 2);
    assert_eq!(status(&["chains", "--from", "3111", "--to", "222"]), 1);
    assert_eq!(status(&["chains", "--from", "7", "--to", "1111111", "--limit", "2"]), 3);
    assert_eq!(status(&["bound", "1,2"]), 2);
    assert_eq!(status(&["bound", "4111", "--format", "dot"]), 2);
    assert_eq!(status(&["frobnicate"]), 2);

    let timed = json(&["verify", "weight-bound", "--n", "4", "--format", "json", "--timing"]);
    assert!(timed["elapsed_ms"].is_u64());
}

#[test]
fn json_output_is_deterministic() {
    for args in [
        &["hasse", "--n", "7", "--format", "json"][..],
        &["verify", "dominance", "--k", "6", "--format", "json"][..],
        &["expand", "2,2,1,1", "--format", "json"][..],
    ] {
        assert_eq!(stdout(args), stdout(args));
    }
}

#[test]
fn printed_partitions_reparse() {
    let v = json(&["hasse", "--n", "8", "--rank", "5", "--format", "json"]);
    for node in v["nodes"].as_array().unwrap() {
        let s = node.as_str().unwrap();
        let p: Partition = s.parse().unwrap();
        assert_eq!(p.to_string(), s);
    }
    let big = json(&["bound", "12,", "--format", "json"]);
    assert_eq!(big["lambda"], "12");
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("dombound-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("par5.dot");
    let out = dombound(&["hasse", "--n", "5", "--format", "dot", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let dot = std::fs::read_to_string(&path).unwrap();
    assert_eq!(dot.matches(" -> ").count(), 6);
    std::fs::remove_dir_all(&dir).unwrap();
}
