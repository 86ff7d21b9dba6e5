//! End-to-end tests of the `pidom` binary: subcommand behavior, report
//! schema stability and the documented exit codes.

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn pidom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pidom"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "stdout is not JSON ({e}): {}",
            String::from_utf8_lossy(&out.stdout)
        )
    })
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("pidom-test-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).expect("temp file writes");
    path
}

#[test]
fn solve_cycle_nine_is_five() {
    let out = pidom(&["solve", "--param", "pid", "--family", "cycle:9"]);
    assert!(out.status.success());
    let json = stdout_json(&out);
    assert_eq!(json["results"][0]["value"], 5);
    assert_eq!(json["results"][0]["status"], "optimal");
}

#[test]
fn solve_witness_revalidates_through_verify() {
    for family in ["cycle:9", "wheel:6", "kpartite:3,3"] {
        let out = pidom(&["solve", "--param", "pid", "--family", family]);
        assert!(out.status.success());
        let json = stdout_json(&out);
        let witness = json["results"][0]["witness"]["data"].as_str().unwrap();
        let verify = pidom(&[
            "verify",
            "--labeling",
            witness,
            "--check",
            "pid",
            "--family",
            family,
        ]);
        assert!(verify.status.success(), "witness for {family} must verify");
        assert_eq!(stdout_json(&verify)["results"][0]["status"], "ok");
    }
}

#[test]
fn solve_all_parameters_on_small_graph() {
    for (param, expected) in [
        ("pid", 3),
        ("gamma", 2),
        ("roman", 4),
        ("roman2", 3),
        ("fd2", 3),
        ("im", 2),
    ] {
        let out = pidom(&["solve", "--param", param, "--family", "cycle:6"]);
        assert!(out.status.success(), "{param}");
        assert_eq!(stdout_json(&out)["results"][0]["value"], expected, "{param}");
    }
}

#[test]
fn verify_detects_violations() {
    let ok = pidom(&[
        "verify",
        "--labeling",
        "1,0,1",
        "--check",
        "pid",
        "--family",
        "path:3",
    ]);
    assert!(ok.status.success());

    let bad = pidom(&[
        "verify",
        "--labeling",
        "2,0,0",
        "--check",
        "pid",
        "--family",
        "path:3",
    ]);
    assert_eq!(bad.status.code(), Some(1));
    let json = stdout_json(&bad);
    assert_eq!(json["results"][0]["status"], "violated");
    assert_eq!(json["results"][0]["violations"][0]["vertex"], 2);
}

#[test]
fn generate_round_trips_through_solve() {
    let out = pidom(&["generate", "--family", "jewel:2"]);
    assert!(out.status.success());
    let graph6 = String::from_utf8(out.stdout).unwrap().trim().to_string();
    let solve = pidom(&["solve", "--param", "pid", "--graph6", &graph6]);
    let json = stdout_json(&solve);
    assert_eq!(json["results"][0]["value"], 12);

    // closed form agrees
    let characterize = pidom(&["characterize", "--family", "jewel:2"]);
    let json = stdout_json(&characterize);
    assert_eq!(json["results"][0]["status"], "pid-equals");
    assert_eq!(json["results"][0]["value"], 12);
}

#[test]
fn generate_edge_list_output() {
    let out = pidom(&["generate", "--family", "path:3", "--out", "edges"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text, "3 2\n0 1\n1 2\n");
}

#[test]
fn edge_list_files_are_accepted() {
    let edges = temp_file("c6.edges", "# six-cycle\n6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n0 5\n");
    let out = pidom(&[
        "solve",
        "--param",
        "pid",
        "--edges",
        edges.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert_eq!(stdout_json(&out)["results"][0]["value"], 3);
    std::fs::remove_file(edges).ok();
}

#[test]
fn characterize_reports_bounds() {
    let out = pidom(&["characterize", "--family", "cycle:7"]);
    assert!(out.status.success());
    let json = stdout_json(&out);
    let results = json["results"].as_array().unwrap();
    assert_eq!(results[0]["value"], 4); // ceil(7/2)
    assert!(results
        .iter()
        .any(|r| r["parameter"] == "pid-lower-bound" && r["value"] == 4)); // ceil(14/4)
}

#[test]
fn reduce_emits_graph_and_roles() {
    let x3c = temp_file("yes.x3c", "1 1\n1 2 3\n");
    let out = pidom(&["reduce", "--x3c", x3c.to_str().unwrap()]);
    assert!(out.status.success());
    let json = stdout_json(&out);
    assert_eq!(json["k"], 8);
    assert_eq!(json["order"], 57);
    assert_eq!(json["roles"][0], "element-anchor:1");
    assert_eq!(json["roles"].as_array().unwrap().len(), 57);

    // the roman2 target requires an explicit weight
    let missing = pidom(&["reduce", "--x3c", x3c.to_str().unwrap(), "--target", "roman2"]);
    assert_eq!(missing.status.code(), Some(2));
    let ok = pidom(&[
        "reduce",
        "--x3c",
        x3c.to_str().unwrap(),
        "--target",
        "roman2",
        "--target-weight",
        "9",
    ]);
    assert!(ok.status.success());
    let json = stdout_json(&ok);
    assert_eq!(json["order"], 11);
    assert_eq!(json["k"], 9);
    std::fs::remove_file(x3c).ok();
}

#[test]
fn corpus_asserts_pid_equals_n() {
    // appendix rows of order at most 12
    let corpus = temp_file(
        "table1-small.g6",
        "G}qzp{\nKvyCJlmF_{kN\nK~~LnNwFy^e~\n",
    );
    let out = pidom(&[
        "corpus",
        "--file",
        corpus.to_str().unwrap(),
        "--assert-pid-equals-n",
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let json = stdout_json(&out);
    assert_eq!(json["results"].as_array().unwrap().len(), 3);
    for entry in json["results"].as_array().unwrap() {
        assert_eq!(entry["status"], "optimal");
        assert_eq!(entry["value"], entry["n"]);
    }
    std::fs::remove_file(corpus).ok();
}

#[test]
fn corpus_reports_all_failures_without_stopping() {
    // P_4 has pid 3 != 4 and C_6 has pid 3 != 6; both lines must be reported
    let corpus = temp_file("failing.g6", "Ch\nEhEG\n");
    let out = pidom(&[
        "corpus",
        "--file",
        corpus.to_str().unwrap(),
        "--assert-pid-equals-n",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let json = stdout_json(&out);
    let failed: Vec<bool> = json["results"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["status"] == "failed")
        .collect();
    assert_eq!(failed, vec![true, true]);
    std::fs::remove_file(corpus).ok();
}

#[test]
fn corpus_cubic_bounds_pass_on_cubic_rows() {
    // Q_3 and K_{3,3} in graph6 form
    let corpus = temp_file("cubic.g6", "Gr`HOk\nEFz_\n");
    let out = pidom(&[
        "corpus",
        "--file",
        corpus.to_str().unwrap(),
        "--assert-cubic-bounds",
    ]);
    assert!(
        out.status.success(),
        "stdout: {} stderr: {}",
        String::from_utf8_lossy(&out.stdout),
        String::from_utf8_lossy(&out.stderr)
    );
    std::fs::remove_file(corpus).ok();
}

#[test]
fn budget_exhaustion_exits_three() {
    let out = pidom(&[
        "solve",
        "--param",
        "pid",
        "--family",
        "jewel:5",
        "--node-limit",
        "3",
    ]);
    assert_eq!(out.status.code(), Some(3));
    let json = stdout_json(&out);
    assert_eq!(json["results"][0]["status"], "timeout");
    assert_eq!(json["results"][0]["value"], Value::Null);
}

#[test]
fn usage_errors_exit_two() {
    let none = pidom(&["solve", "--param", "pid"]);
    assert_eq!(none.status.code(), Some(2));
    let unknown = pidom(&["solve", "--param", "pid", "--family", "mystery:3"]);
    assert_eq!(unknown.status.code(), Some(2));
    let bnb_for_gamma = pidom(&[
        "solve",
        "--param",
        "gamma",
        "--family",
        "path:4",
        "--method",
        "bnb",
    ]);
    assert_eq!(bnb_for_gamma.status.code(), Some(2));
    let above_cap = pidom(&["solve", "--param", "gamma", "--family", "path:20"]);
    assert_eq!(above_cap.status.code(), Some(2));
    let budget_without_bnb = pidom(&[
        "solve",
        "--param",
        "gamma",
        "--family",
        "path:4",
        "--node-limit",
        "10",
    ]);
    assert_eq!(budget_without_bnb.status.code(), Some(2));
}

#[test]
fn cap_is_overridable_by_flag_and_env() {
    let flag = pidom(&[
        "solve",
        "--param",
        "gamma",
        "--family",
        "path:16",
        "--cap",
        "16",
    ]);
    assert!(flag.status.success());
    let env = Command::new(env!("CARGO_BIN_EXE_pidom"))
        .args(["solve", "--param", "gamma", "--family", "path:16"])
        .env("PIDOM_BRUTE_CAP", "16")
        .output()
        .unwrap();
    assert!(env.status.success());
}

#[test]
fn reports_are_stable_modulo_timing() {
    // only the timing field varies between runs; the branch-and-bound node
    // count is deterministic
    let mask = |mut v: Value| {
        for entry in v["results"].as_array_mut().unwrap() {
            entry["millis"] = Value::Null;
        }
        v
    };
    let a = mask(stdout_json(&pidom(&[
        "solve", "--param", "pid", "--family", "cycle:9",
    ])));
    let b = mask(stdout_json(&pidom(&[
        "solve", "--param", "pid", "--family", "cycle:9",
    ])));
    assert_eq!(a, b);
}
