//! End-to-end runs of the `degsim` binary.

use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Stdio};

use serde_json::Value;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

impl Run {
    fn json(&self) -> Value {
        serde_json::from_str(self.stdout.trim())
            .unwrap_or_else(|e| panic!("{e}: {:?}", self.stdout))
    }
}

fn degsim_with_stdin(args: &[&str], stdin: &str) -> Run {
    let mut child = Command::new(env!("CARGO_BIN_EXE_degsim"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    Run {
        code: out.status.code().unwrap(),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn degsim(args: &[&str]) -> Run {
    degsim_with_stdin(args, "")
}

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
        .display()
        .to_string()
}

fn temp_file(name: &str, contents: &str) -> String {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, contents).unwrap();
    path.display().to_string()
}

const C4_K1: &str = r#"{"n":5,"edges":[[0,1],[1,2],[2,3],[3,0]]}"#;
const STAR4: &str = r#"{"n":5,"edges":[[0,1],[0,2],[0,3],[0,4]]}"#;

#[test]
fn psi_outputs() {
    let r = degsim(&["psi", "A_"]);
    assert_eq!(
        (r.code, r.stdout.trim()),
        (0, r#"[["-1","0","1"],["0","2"],["1"]]"#)
    );
    let r = degsim(&["psi", "--at-mu", "0", "A_"]);
    assert_eq!(r.stdout.trim(), r#"["-1","0","1"]"#);
    let r = degsim(&["psi", "--at-mu", "-1", "A_"]);
    assert_eq!(r.stdout.trim(), r#"["0","-2","1"]"#);
    let r = degsim_with_stdin(&["psi"], "A_\n");
    assert_eq!(r.stdout.trim(), r#"[["-1","0","1"],["0","2"],["1"]]"#);
}

#[test]
fn parse_errors_exit_2() {
    assert_eq!(degsim_with_stdin(&["psi"], "").code, 2);
    assert_eq!(degsim(&["psi", "A"]).code, 2);
    assert_eq!(degsim(&["psi", "--at-mu", "x/y", "A_"]).code, 2);
    assert_eq!(degsim(&["snf", r#"{"n": 2, "edges": [[0, 2]]}"#]).code, 4);
    assert_eq!(
        degsim(&["check-pair", "A_", "A_", "--certificate", "{"]).code,
        2
    );
}

#[test]
fn snf_and_zeta_outputs() {
    let r = degsim(&["snf", "A_"]);
    let v = r.json();
    assert_eq!(v[0], serde_json::json!([{"num": ["1"], "den": ["1"]}]));
    assert_eq!(
        v[1][0],
        serde_json::json!({"num": ["-1", "0", "1"], "den": ["1"]})
    );
    let r = degsim(&["zeta", "Bw"]);
    assert_eq!(r.stdout.trim(), r#"{"det":[1,0,0,-2,0,0,1],"exponent":0}"#);
    let r = degsim(&["zeta", "A?"]);
    assert_eq!(r.code, 4, "{}", r.stderr);
}

#[test]
fn report_tolerates_isolated_vertices() {
    let r = degsim(&["report", "@"]);
    assert_eq!(r.code, 0);
    let v = r.json();
    assert!(v["zeta"].is_null());
    assert!(r.stderr.contains("warning"));
    assert!(!v["warnings"].as_array().unwrap().is_empty());
    let v = degsim(&["report", "Bw"]).json();
    for key in [
        "psi",
        "adjCharpoly",
        "lapCharpoly",
        "signlessCharpoly",
        "degScaledCharpoly",
        "snf",
    ] {
        assert!(!v[key].is_null(), "{key}");
    }
    assert_eq!(v["degreeMultiset"], serde_json::json!([2, 2, 2]));
    assert_eq!(v["zeta"]["exponent"], 0);
}

#[test]
fn negative_control_is_refuted_by_psi() {
    let r = degsim(&["check-pair", C4_K1, STAR4]);
    assert_eq!(r.code, 1);
    let v = r.json();
    assert_eq!(v["status"], "refuted");
    assert_eq!(v["evidence"]["condition"], "psiEqual");
    assert!(!v["evidence"]["witness"]["psiDifference"]
        .as_array()
        .unwrap()
        .is_empty());
}

#[test]
fn coalesced_trees_need_the_trees_flag() {
    let built = degsim(&["construct", "coalesce-T1T2", "A_", "0"]).json();
    assert_eq!(built["report"]["psiEqual"], true);
    assert_eq!(built["report"]["isomorphic"], false);
    let (g, h) = (
        built["first"].as_str().unwrap(),
        built["second"].as_str().unwrap(),
    );
    let r = degsim(&["check-pair", g, h]);
    assert_eq!((r.code, r.json()["status"].clone()), (0, "unknown".into()));
    let r = degsim(&["check-pair", g, h, "--trees"]);
    assert_eq!(
        (r.code, r.json()["evidence"]["condition"].clone()),
        (1, "treesIsomorphic".into())
    );
}

#[test]
fn certificates_decide_check_pair() {
    let id = temp_file(
        "id3.json",
        r#"{"matrix": [["1","0","0"],["0","1","0"],["0","0","1"]]}"#,
    );
    let r = degsim(&["check-pair", "Bg", "Bg", "--certificate", &id]);
    assert_eq!(
        (r.code, r.json()["status"].clone()),
        (0, "certified".into())
    );
    let r = degsim(&["check-pair", "Bg", "Bw", "--certificate", &id]);
    assert_eq!((r.code, r.json()["status"].clone()), (1, "invalid".into()));
    let r = degsim(&["check-pair", "A_", "Bw"]);
    assert_eq!(r.code, 3);
    let r = degsim(&[
        "check-pair",
        "Bg",
        "Bg",
        "--certificate",
        r#"{"matrix": [["1"]]}"#,
    ]);
    assert_eq!(r.code, 3);
}

fn assert_round_trip(out: &Run, name: &str) {
    assert_eq!(out.code, 0, "{name}: {}", out.stderr);
    let v = out.json();
    assert_eq!(v["verified"], true, "{name}");
    let file = temp_file(&format!("{name}.json"), &out.stdout);
    let (g, h) = (v["first"].as_str().unwrap(), v["second"].as_str().unwrap());
    let r = degsim(&["check-pair", g, h, "--certificate", &file]);
    assert_eq!(
        (r.code, r.json()["status"].clone()),
        (0, "certified".into()),
        "{name}"
    );
}

#[test]
fn explicit_constructions_round_trip() {
    let six = data("switch6.json");
    let switched = degsim(&["construct", "switch", &six]);
    assert_round_trip(&switched, "switch");
    let blocks = &switched.json()["certificate"]["blocks"];
    assert_eq!(blocks[0]["kind"], "switchBlock");
    let pair = temp_file("six_pair.json", &switched.stdout);

    let runs = [
        ("complement", vec!["construct", "complement", &pair]),
        ("union", vec!["construct", "union", &pair, "A_"]),
        (
            "class-join",
            vec!["construct", "class-join", &six, "Bg", "--cells", "0,1"],
        ),
        (
            "product",
            vec!["construct", "product", "cartesian", &pair, &pair],
        ),
        (
            "lexicographic",
            vec!["construct", "product", "lexicographic", &pair, "Bw"],
        ),
        ("pendants", vec!["construct", "pendants", &pair, "1=1,3=2"]),
        ("addjoin", vec!["construct", "addjoin", &pair, "1,3"]),
        (
            "ksum",
            vec![
                "construct",
                "ksum",
                "Bg",
                "A_",
                "--first",
                "1",
                "--second",
                "1",
                "--attach",
                "0",
            ],
        ),
        (
            "rooted",
            vec![
                "construct",
                "rooted",
                "Bg",
                "--first",
                "1",
                "--second",
                "1",
                "--attach",
                "Bg@0",
            ],
        ),
        ("join", vec!["construct", "join", "Bw", "A_"]),
    ];
    for (name, args) in runs {
        assert_round_trip(&degsim(&args), name);
    }
}

#[test]
fn vertex_deletion_of_a_dominating_vertex() {
    let six = data("switch6.json");
    // Joining K1 to every cell and the rest adds a dominating vertex 6.
    let joined = degsim(&["construct", "class-join", &six, "@", "--cells", "0,1"]);
    let joined_file = temp_file("six_dominated.json", &joined.stdout);
    let r = degsim(&["construct", "delete-vertex", &joined_file, "6", "6"]);
    assert_round_trip(&r, "delete-vertex");
    let r = degsim(&["construct", "delete-vertex", &joined_file, "0", "0"]);
    assert_eq!(r.code, 4, "{}", r.stdout);
    assert!(r.stderr.contains("condition (1)"), "{}", r.stderr);
}

#[test]
fn precondition_failures_exit_4() {
    let six = data("switch6.json");
    let switched = degsim(&["construct", "switch", &six]);
    let pair = temp_file("six_precondition.json", &switched.stdout);
    for args in [
        vec!["construct", "join", &pair, "A_"],
        vec!["construct", "class-join", &six, "A_", "--cells", "7"],
        vec!["construct", "complement", r#"{"n": 3, "edges": [[0, 1]]}"#],
        vec!["construct", "coalesce-T1T2", "A_", "5"],
    ] {
        let r = degsim(&args);
        assert_eq!(r.code, 4, "{args:?}: {}", r.stderr);
    }
    let bad = temp_file(
        "bad_switch.json",
        r#"{"graph": "Bw", "cells": [[0, 1]], "rest": [2]}"#,
    );
    assert_eq!(degsim(&["construct", "switch", &bad]).code, 4);
}

#[test]
fn random_constructions_are_certified_and_reproducible() {
    let kinds = [
        "switch",
        "complement",
        "union",
        "join",
        "class-join",
        "product",
        "ksum",
        "rooted",
        "pendants",
        "addjoin",
        "delete-vertex",
    ];
    for kind in kinds {
        for seed in ["1", "2"] {
            let r = degsim(&["construct", "random", kind, "--seed", seed]);
            assert_round_trip(&r, &format!("random-{kind}-{seed}"));
        }
        let a = degsim(&["construct", "random", kind, "--seed", "7"]).stdout;
        let b = degsim(&["--seed", "7", "construct", "random", kind]).stdout;
        assert_eq!(a, b, "{kind}");
    }
    assert_eq!(degsim(&["construct", "random", "nope"]).code, 2);
}

#[test]
fn batch_preserves_input_order() {
    let lines = ["Bw", "A_", "@", "C~", "Bg"];
    let input = format!(">>graph6<<\n{}\n", lines.join("\n"));
    let r = degsim_with_stdin(&["psi", "--batch"], &input);
    assert_eq!(r.code, 0);
    let out: Vec<&str> = r.stdout.lines().collect();
    assert_eq!(out.len(), lines.len());
    for (line, got) in lines.iter().zip(&out) {
        assert_eq!(*got, degsim(&["psi", line]).stdout.trim());
    }
    let r = degsim_with_stdin(&["zeta", "--batch"], "Bw\nA?\n!!\nA_\n");
    let out: Vec<Value> = r
        .stdout
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(out.len(), 4);
    assert_eq!(out[1]["index"], 1);
    assert_eq!(out[1]["error"]["kind"], "precondition");
    assert_eq!(out[2]["error"]["kind"], "parse");
    assert_eq!(out[3]["exponent"], -1);
    assert_eq!(r.code, 4);
    let file = temp_file("batch.g6", "A_\nBw\n");
    let r = degsim(&["snf", "--batch", &file]);
    assert_eq!(r.stdout.lines().count(), 2);
}
