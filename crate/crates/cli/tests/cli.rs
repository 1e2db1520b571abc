//! End-to-end checks of the binary: exit codes, output stability, and the
//! documented subcommand surface.

use std::io::Write;
use std::process::{Command, Output, Stdio};

const BIN: &str = env!("CARGO_BIN_EXE_transversal");

const C5: &str = "p edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n";

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(BIN)
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn solve_reports_known_optimum() {
    let out = run(&["solve", "--kind", "oct"], C5);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("minimum oct: size 1"));
    assert!(text.contains("certificate: bipartition"));
}

#[test]
fn json_solve_is_stable_across_runs() {
    let args = [
        "solve",
        "--kind",
        "vc",
        "--connected",
        "--pad-budget",
        "AUTO",
        "--format",
        "json",
    ];
    let a = run(&args, C5);
    let b = run(&args, C5);
    assert_eq!(a.status.code(), Some(0));
    let line = stdout(&a);
    assert_eq!(line, stdout(&b));
    let json: serde_json::Value = serde_json::from_str(line.trim()).unwrap();
    assert_eq!(json["kind"], "vc");
    assert_eq!(json["connected"], true);
    assert_eq!(json["size"], 4);
    assert_eq!(json["solution"], serde_json::json!([1, 2, 3, 4]));
    assert_eq!(json["certificate"], "edgeless");
}

#[test]
fn enumerate_lists_all_minimal_sets() {
    let out = run(&["enumerate", "--kind", "fvs"], C5);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    // Every single vertex is a minimal FVS of a cycle.
    assert_eq!(text.lines().count(), 5);
    let summary = String::from_utf8(out.stderr.clone()).unwrap();
    assert!(summary.contains("5 sets"));
}

#[test]
fn usage_errors_exit_1() {
    let out = run(&["solve", "--kind", "nope"], "");
    assert_eq!(out.status.code(), Some(1));

    let out = run(&["solve", "--kind", "vc"], "this is not a graph");
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn rejected_preconditions_exit_2() {
    // C3 has girth 3; the construction demands girth >= 5.
    let c3 = "p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n";
    let out = run(&["gadget", "--name", "coct-girth", "--p", "5"], c3);
    assert_eq!(out.status.code(), Some(2));

    // AUTO budget requires the graph to be sP2-free for the given s.
    let p5 = "p edge 5 4\ne 1 2\ne 2 3\ne 3 4\ne 4 5\n";
    let out = run(
        &[
            "solve",
            "--kind",
            "vc",
            "--connected",
            "--pad-budget",
            "AUTO",
            "--s",
            "2",
        ],
        p5,
    );
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn gadget_emits_dimacs_with_budget_header() {
    let out = run(&["gadget", "--name", "coct-line"], C5);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("c gadget coct-line budget_k 5"));
    assert!(text.contains("p edge 14 "));
}

#[test]
fn verify_decides_equivalences() {
    let out = run(&["verify", "--gadget", "oct-line"], C5);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("equivalence holds"));
}

#[test]
fn gen_and_check_round_trip() {
    let out = run(&["gen", "--family", "cycle", "--n", "4"], "");
    assert_eq!(out.status.code(), Some(0));
    let graph_text = stdout(&out);

    let out = run(&["check", "--property", "sp2free", "--s", "2"], &graph_text);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("2P2-free: yes"));

    let out = run(&["check", "--property", "girth"], &graph_text);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("girth: 4"));
}
