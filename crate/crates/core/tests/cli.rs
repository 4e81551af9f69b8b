//! The `ore` command line: coverage of the command table, exit codes and
//! byte-identical reports.

use std::path::PathBuf;
use std::process::Command;

use ore::cli::{run, COMMANDS};

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name).display().to_string()
}

fn tmp(name: &str) -> String {
    std::env::temp_dir().join(format!("ore-cli-{}-{name}", std::process::id())).display().to_string()
}

fn ore(args: &[&str]) -> ore::cli::Outcome {
    run(std::iter::once("ore").chain(args.iter().copied()))
}

fn json(args: &[&str]) -> serde_json::Value {
    let out = ore(args);
    assert_eq!(out.code, 0, "{args:?}: {}", out.stderr);
    serde_json::from_str(&out.stdout).unwrap()
}

/// One invocation per (subcommand, operation).
fn invocation(sub: &str, op: &str, elem: &str, bv: &str, tree: &str) -> Vec<String> {
    let v: Vec<&str> = match (sub, op) {
        ("group", "identity" | "random") => vec!["--family", "V"],
        ("group", "project") => vec!["--family", "BV", "--in", bv],
        ("group", "eq") => vec!["--family", "V", "--in", elem, elem],
        ("group", _) => vec!["--family", "V", "--in", elem],
        ("forest", "normal-form" | "confluence") => vec!["3,2,1", "--n", "3"],
        ("forest", "compose") => vec!["F(1;1)", "F(2;2)"],
        ("forest", "lcm" | "gcd") => vec!["F(1;1,1)", "F(1;1,2)"],
        ("forest", "left-quotient") => vec!["F(1;1)", "F(1;1,2)"],
        ("forest", "right-quotient") => vec!["F(1;1,2)", "F(2;2)"],
        ("forest", "head" | "factor") => vec!["--in", tree],
        ("forest", "delta" | "elementary") => vec!["--n", "4"],
        ("forest", "components") => vec!["--n", "6", "--arity", "3"],
        ("forest", "act") => vec!["T", r#"{"n":3,"shift":1}"#, "F(3;3)"],
        ("braid", "eq") => vec!["1,2,1", "2,1,2"],
        ("braid", "mul") => vec!["1", "-2"],
        ("braid", "delta") => vec!["--n", "4"],
        ("braid", _) => vec!["1,-2,1"],
        ("complex", "matching") => vec!["--graph", "C", "--n", "6"],
        ("complex", "e") => vec!["--family", "V", "--n", "4"],
        ("complex", "descending-link") => vec!["--in", tree],
        ("complex", "sublevel") => vec!["--n", "4"],
        ("homology", _) => vec!["--graph", "K", "--n", "6", "--max-dim", "1"],
        ("grounded", _) => vec!["--graph", "L", "--n", "8", "--max-dim", "2"],
        ("verify", "ip-axioms") => vec!["--family", "T", "--bound", "3"],
        ("verify", "connectivity" | "e-complexes" | "lattice") => vec!["--n", "6", "--bound", "4"],
        ("verify", "descending-links") => vec!["--n", "5", "--bound", "4"],
        ("verify", "normal-form") => vec!["--n", "6"],
        ("verify", "group") => vec!["--bound", "20"],
        ("verify", _) => vec![],
        ("rewrite", "apply") => vec!["--graph", "basilica", "--edge", "lx"],
        ("rewrite", "check") => vec!["--graph", "basilica", "--bound", "4"],
        ("rewrite", _) => vec!["--graph", "bad1"],
        _ => unreachable!("{sub} {op}"),
    };
    let mut args = vec![sub.to_string()];
    match (sub, op) {
        ("homology" | "grounded", _) => {}
        _ => args.push(op.to_string()),
    }
    args.extend(v.into_iter().map(String::from));
    args
}

#[test]
fn every_operation_runs() {
    let elem = tmp("elem.json");
    assert_eq!(ore(&["group", "random", "--family", "V", "--seed", "4", "--out", &elem]).code, 0);
    let bv = tmp("bv.json");
    assert_eq!(ore(&["group", "random", "--family", "BV", "--seed", "4", "--out", &bv]).code, 0);
    let tree = tmp("tree.json");
    assert_eq!(ore(&["forest", "normal-form", "1,1,2,4", "--out", &tree]).code, 0);
    for (sub, ops) in COMMANDS {
        let ops: Vec<&str> = if ops.is_empty() { vec![""] } else { ops.to_vec() };
        for op in ops {
            let args = invocation(sub, op, &elem, &bv, &tree);
            let refs: Vec<&str> = args.iter().map(String::as_str).collect();
            let out = ore(&refs);
            assert_eq!(out.code, 0, "{refs:?}: {}{}", out.stderr, out.stdout);
        }
    }
}

#[test]
fn documented_invocations() {
    let r = json(&["verify", "ip-axioms", "--family", "V", "--bound", "4"]);
    assert_eq!(r["summary"]["failed"], 0);
    let elem = tmp("x.json");
    assert_eq!(ore(&["group", "random", "--family", "F", "--out", &elem]).code, 0);
    let r = json(&["group", "eq", "--family", "F", "--in", &elem, &elem]);
    assert_eq!(r["result"]["eq"], true);
    let r = json(&["rewrite", "eh", "--rule", "basilica", "--graph", &data("badgraph1.json")]);
    assert_eq!(r["result"]["betti"][1], 1);
}

#[test]
fn reports_are_byte_identical() {
    for args in [
        vec!["verify", "group", "--bound", "30", "--seed", "7"],
        vec!["group", "random", "--family", "BV", "--seed", "7"],
        vec!["rewrite", "eh", "--graph", "bad2"],
        vec!["complex", "e", "--family", "V", "--n", "5"],
    ] {
        assert_eq!(ore(&args), ore(&args), "{args:?}");
    }
    let a = ore(&["group", "random", "--family", "V", "--seed", "1"]);
    let b = ore(&["group", "random", "--family", "V", "--seed", "2"]);
    assert_ne!(a.stdout, b.stdout);
}

#[test]
fn records_are_sorted() {
    let r = json(&["verify", "braid-kernel", "--n", "4"]);
    let keys: Vec<(String, String)> = r["records"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| (x["name"].as_str().unwrap().into(), x["instance"].as_str().unwrap().into()))
        .collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
    assert_eq!(r["summary"]["total"].as_u64().unwrap() as usize, keys.len());
}

#[test]
fn malformed_input_exits_two() {
    let bad = tmp("bad.json");
    std::fs::write(&bad, "{ not json").unwrap();
    let out = ore(&["group", "inv", "--family", "F", "--in", &bad]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("parse error"));
    assert_eq!(ore(&["homology", "--in", &bad]).code, 2);
    assert_eq!(ore(&["rewrite", "eh", "--graph", &bad]).code, 2);
    assert_eq!(ore(&["braid", "eq", "1,x"]).code, 2);
    assert_eq!(ore(&["verify"]).code, 2);
}

#[test]
fn failed_checks_exit_one() {
    let out = ore(&["verify", "ip-axioms", "--family", "corrupted-V", "--bound", "3"]);
    assert_eq!(out.code, 1);
    let r: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert!(r["summary"]["failed"].as_u64().unwrap() > 0);
}

#[test]
fn binary_matches_library() {
    let out = Command::new(env!("CARGO_BIN_EXE_ore")).args(["verify", "rotation-action"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), ore(&["verify", "rotation-action"]).stdout);
    let out = Command::new(env!("CARGO_BIN_EXE_ore")).args(["nonsense"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}
