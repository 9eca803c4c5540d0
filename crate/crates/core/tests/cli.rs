use std::process::{Command, Output};

use serde_json::Value;

fn mixprod(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mixprod"))
        .args(args)
        .output()
        .expect("run mixprod")
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.push("--json");
    let out = mixprod(&all);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn classify_verdicts() {
    let v = json(&["classify", "--n", "2", "--m", "2", "--pairs", "1:2,2:1"]);
    assert_eq!(v["verdicts"]["cohen_macaulay"], true);
    assert_eq!(v["verdicts"]["sequentially_cm"], true);
    assert_eq!(v["verdicts"]["unmixed"], true);

    let v = json(&["classify", "--n", "2", "--m", "2", "--pairs", "1:1"]);
    assert_eq!(v["verdicts"]["cohen_macaulay"], false);
    assert_eq!(v["verdicts"]["sequentially_cm"], false);
    assert_eq!(v["verdicts"]["unmixed"], true);
    assert_eq!(v["profile"]["q_bar"], serde_json::json!([0, 2]));
}

#[test]
fn classify_with_oracle_agrees() {
    let v = json(&[
        "classify", "--n", "1", "--m", "3", "--pairs", "1:1", "--oracle",
    ]);
    assert_eq!(v["verdicts"]["sequentially_cm"], true);
    assert_eq!(v["oracle"]["duval_scm"], true);
    assert_eq!(v["oracle"]["reisner_cm"], false);
    let text = mixprod(&[
        "classify", "--n", "1", "--m", "3", "--pairs", "1:1", "--oracle",
    ]);
    assert!(text.status.success());
    assert!(String::from_utf8_lossy(&text.stdout).contains("mismatches: 0"));
}

#[test]
fn json_output_is_byte_stable() {
    let args = [
        "classify", "--n", "3", "--m", "2", "--pairs", "2:1,1:2", "--oracle", "full", "--json",
    ];
    assert_eq!(mixprod(&args).stdout, mixprod(&args).stdout);
}

#[test]
fn dual_and_its_dual() {
    let v = json(&["dual", "--n", "3", "--m", "2", "--pairs", "2:1"]);
    assert_eq!(v["pairs"], serde_json::json!([[0, 2], [2, 0]]));

    let once = json(&["dual", "--n", "3", "--m", "3", "--pairs", "1:3,2:1"]);
    let pairs: Vec<String> = once["pairs"]
        .as_array()
        .unwrap()
        .iter()
        .map(|p| format!("{}:{}", p[0], p[1]))
        .collect();
    let twice = json(&["dual", "--n", "3", "--m", "3", "--pairs", &pairs.join(",")]);
    assert_eq!(twice["pairs"], serde_json::json!([[1, 3], [2, 1]]));

    let v = json(&["dual", "--n", "1", "--m", "1", "--pairs", "1:1", "--expand"]);
    assert_eq!(v["generators"], serde_json::json!(["x1", "y1"]));
}

#[test]
fn decompose_blocks() {
    let out = mixprod(&["decompose", "--n", "2", "--m", "2", "--pairs", "1:1"]);
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(
        text.contains("P_x (size 2, 1 components): {x1,x2}"),
        "{text}"
    );
    assert!(
        text.contains("P_y (size 2, 1 components): {y1,y2}"),
        "{text}"
    );
    assert!(text.contains("h=2"));

    let v = json(&["decompose", "--n", "2", "--m", "2", "--pairs", "1:2,2:1"]);
    assert_eq!(v["count"], 6);
    assert_eq!(v["height"], 2);
}

#[test]
fn facets_command() {
    let v = json(&["facets", "--n", "2", "--m", "2", "--pairs", "1:2,2:1"]);
    let sizes: Vec<usize> = v["blocks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|b| b["facets"].as_array().unwrap().len())
        .collect();
    assert_eq!(sizes, [1, 4, 1]);
}

#[test]
fn invalid_inputs_exit_1() {
    for args in [
        vec!["decompose", "--n", "2", "--m", "2", "--pairs", "0:0"],
        vec!["decompose", "--n", "2", "--m", "2", "--pairs", "3:3"],
        vec!["classify", "--n", "2", "--m", "2", "--pairs", "a:b"],
        vec!["classify", "--n", "2", "--pairs", "1:1"],
    ] {
        assert_eq!(mixprod(&args).status.code(), Some(1), "{args:?}");
    }
}

#[test]
fn oracle_command_exit_codes() {
    let ok = mixprod(&["oracle", "--n", "2", "--m", "3", "--pairs", "1:2,2:1"]);
    assert_eq!(ok.status.code(), Some(0));
    let caught = mixprod(&[
        "oracle",
        "--n",
        "1",
        "--m",
        "3",
        "--pairs",
        "1:1",
        "--perturb",
    ]);
    assert_eq!(caught.status.code(), Some(2));
}

#[test]
fn small_profile_only_sweep_is_fast() {
    let start = std::time::Instant::now();
    let v = json(&[
        "sweep", "--max-n", "2", "--max-m", "2", "--max-s", "2", "--oracle", "none",
    ]);
    assert_eq!(v["mismatches"], 0);
    assert!(start.elapsed() < std::time::Duration::from_secs(1));
}

#[test]
fn sweep_writes_json_lines() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sweep.jsonl");
    let out = mixprod(&[
        "sweep",
        "--max-n",
        "2",
        "--max-m",
        "2",
        "--max-s",
        "2",
        "--oracle",
        "fast",
        "--workers",
        "2",
        "--report",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let body = std::fs::read_to_string(&path).unwrap();
    let lines: Vec<Value> = body
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert!(!lines.is_empty());
    assert!(lines.iter().all(|l| l["status"] == "ok"));
    let indices: Vec<u64> = lines.iter().map(|l| l["index"].as_u64().unwrap()).collect();
    assert!(indices.windows(2).all(|w| w[0] < w[1]));
}
