//! The `pminor` binary: outputs and exit codes.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pminor")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn gen_family_prints_graph6() {
    let o = run(&["gen-family", "wheel", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let g = pminor::graph6::decode(stdout(&o).trim()).unwrap();
    assert_eq!((g.order(), g.size()), (6, 10));
}

#[test]
fn gen_family_labels() {
    let o = run(&["gen-family", "fan", "3", "--labels"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().count() >= 5);
}

#[test]
fn check_pminor_exit_codes() {
    let c5 = pminor::graph6::encode(&pminor::SimpleGraph::cycle(5));
    let k3 = pminor::graph6::encode(&pminor::SimpleGraph::complete(3));
    let p3 = pminor::graph6::encode(&pminor::SimpleGraph::path(3));
    assert_eq!(run(&["check-pminor", &c5, &k3]).status.code(), Some(0));
    assert_eq!(run(&["check-pminor", &c5, &p3]).status.code(), Some(1));
    assert_eq!(run(&["check-minor", &c5, &p3]).status.code(), Some(0));
}

#[test]
fn connectivity_report() {
    let p = pminor::graph6::encode(&pminor::SimpleGraph::petersen());
    let o = run(&["connectivity", &p]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["vertex_connectivity"], 3);
    assert_eq!(v["three_connected"], true);
}

#[test]
fn extract_prints_certificate() {
    let g = pminor::graph6::encode(&pminor::SimpleGraph::cycle(15));
    let o = run(&["extract", &g, "--c", "2", "--k", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["family"], "cycle");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["gen-family", "no-such-family", "4"]).status.code(), Some(2));
    assert_eq!(run(&["extract", "C~", "--c", "7", "--k", "3"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    let path = pminor::graph6::encode(&pminor::SimpleGraph::path(5));
    assert_eq!(run(&["extract", &path, "--c", "2", "--k", "3"]).status.code(), Some(2));
}

#[test]
fn threshold_needs_attestation() {
    let file = concat!(env!("CARGO_MANIFEST_DIR"), "/corpus/graphs4.g6");
    assert_eq!(run(&["threshold", file, "--c", "1", "--k", "3"]).status.code(), Some(2));
    let o = run(&["threshold", file, "--c", "1", "--k", "3", "--exhaustive-attest", "--jobs", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("\"threshold\":4"));
}

#[test]
fn ramsey_finds_a_set() {
    let p = pminor::graph6::encode(&pminor::SimpleGraph::petersen());
    let o = run(&["ramsey", &p, "--k", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("independent"));
}
