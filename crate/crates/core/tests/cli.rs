use std::process::{Command, Output};

use projrep::report::{AnalyzeReport, DecomposeReport, IdentityReport};
use projrep::irreducibility::Verdict;
use projrep::linalg::{display_rational, int};
use projrep::selfcheck::SelfCheckSummary;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_projrep"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn analyze_trivial_module() {
    let out = run(&["analyze", "-n", "2", "-a", "0", "-b", "0", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let report: AnalyzeReport = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report.criterion.verdict, Verdict::Reducible);
    let jh = report.jordan_holder.as_ref().unwrap();
    assert_eq!(jh.finite_dimension, Some(1));
    let again = serde_json::to_string(&report).unwrap();
    assert_eq!(serde_json::from_str::<AnalyzeReport>(&again).unwrap(), report);
}

#[test]
fn table_and_json_carry_the_same_values() {
    let json = run(&["analyze", "-n", "2", "-a", "1", "-b", "1/2", "--degree-cap", "2", "--json"]);
    let table = run(&["analyze", "-n", "2", "-a", "1", "-b", "1/2", "--degree-cap", "2"]);
    assert_eq!(json.status.code(), Some(0));
    let report: AnalyzeReport = serde_json::from_str(&stdout(&json)).unwrap();
    let text = stdout(&table);
    assert!(text.contains("irreducible"));
    for row in &report.q_table {
        assert!(text.contains(&display_rational(&row.q)));
    }
}

#[test]
fn analyze_with_empty_labels() {
    let out = run(&["analyze", "-n", "1", "-a", "-b", "0"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("dim V       1"));
}

#[test]
fn decompose_vector_representation() {
    let out = run(&["decompose", "-n", "2", "-a", "1", "-b", "1", "-k", "1", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let report: DecomposeReport = serde_json::from_str(&stdout(&out)).unwrap();
    let summary: Vec<(u128, _)> = report.rows.iter().map(|r| (r.dim, r.q.clone())).collect();
    assert_eq!(summary, vec![(3, int(2)), (1, int(0))]);
}

#[test]
fn verify_identity_negative_central() {
    let out = run(&["verify-identity", "-n", "3", "-a", "1,1", "-b", "-3/2", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let report: IdentityReport = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(report.holds());
}

#[test]
fn usage_errors_exit_with_one() {
    for args in [
        vec!["analyze", "-n", "2", "-a", "1,1", "-b", "0"],
        vec!["analyze", "-n", "2", "-b", "x/y"],
        vec!["analyze", "-n", "0"],
        vec!["frobnicate"],
        vec!["decompose", "-n", "2", "-a", "1", "--dim-cap", "1"],
    ] {
        assert_eq!(run(&args).status.code(), Some(1), "{args:?}");
    }
}

#[test]
fn help_exits_cleanly() {
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn selfcheck_is_deterministic() {
    let a = run(&["selfcheck", "-n", "1", "--degree-cap", "2", "--seed", "3", "--json"]);
    let b = run(&["selfcheck", "-n", "1", "--degree-cap", "2", "--seed", "11", "--json"]);
    assert_eq!(a.status.code(), Some(0));
    let a: SelfCheckSummary = serde_json::from_str(&stdout(&a)).unwrap();
    let b: SelfCheckSummary = serde_json::from_str(&stdout(&b)).unwrap();
    assert!(a.passed());
    assert_eq!(a.counts, b.counts);
}
