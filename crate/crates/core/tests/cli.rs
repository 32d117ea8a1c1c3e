//! End-to-end runs of the `unilink` binary.

use std::process::{Command, Output};

use unilink::braid::{BraidWord, LinkData};
use unilink::oracles::jones_reference;
use unilink::ring::LaurentPoly;
use unilink::verma::a_gamma;

fn unilink(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_unilink")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn compute_unknot() {
    let o = unilink(&["compute", "--mode", "a_gamma", "--level", "2", "--braid", "", "--strands", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "y\n");
}

#[test]
fn compute_hopf_jones_matches_oracle() {
    let o = unilink(&["compute", "--mode", "jones", "--colours", "2", "--braid", "1 1"]);
    assert_eq!(o.status.code(), Some(0));
    let hopf = BraidWord::parse("1 1", None).unwrap();
    assert_eq!(stdout(&o).trim(), jones_reference(&hopf).to_string());
}

#[test]
fn compute_json_round_trips_and_is_deterministic() {
    let args = ["--format", "json", "--jobs", "2", "compute", "--mode", "a_gamma", "--level", "3", "--braid", "1 -2 1 -2"];
    let (a, b) = (unilink(&args), unilink(&args));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    let p: LaurentPoly = serde_json::from_value(v["result"].clone()).unwrap();
    let fig8 = BraidWord::parse("1 -2 1 -2", None).unwrap();
    assert_eq!(p, a_gamma(&fig8, 3, &LinkData::from_braid(&fig8)).unwrap());
}

#[test]
fn framings_override_blackboard() {
    let o = unilink(&["compute", "--mode", "a_gamma", "--level", "3", "--braid", "", "--strands", "1", "--framings", "-2"]);
    assert_eq!(stdout(&o), "y * u1^-2\n");
}

#[test]
fn oracle_values() {
    let o = unilink(&["oracle", "--braid", "1 -2 1 -2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("alexander(t) = 1 - 3 * t + t^2\n"));
}

#[test]
fn verify_suites_pass() {
    for args in [
        vec!["verify", "oracles", "--level", "2"],
        vec!["verify", "markov", "--level", "2"],
        vec!["verify", "unification", "--max-level", "3"],
    ] {
        let o = unilink(&args);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stdout(&o));
    }
}

#[test]
fn limit_reports_coherence() {
    let o = unilink(&["--format", "json", "limit", "--braid", "1 1 1", "--max-level", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["levels"].as_array().unwrap().len(), 2);
    assert_eq!(v["coherence"][0]["quotient_equal"], true);
    assert_eq!(v["coherence"][0]["habiro_divisible"], true);
}

#[test]
fn usage_errors_exit_with_2() {
    for args in [
        vec!["compute", "--mode", "a_gamma", "--level", "1", "--braid", "1"],
        vec!["compute", "--mode", "a_gamma", "--braid", "1"],
        vec!["compute", "--mode", "ado", "--level", "2", "--braid", "1 q"],
        vec!["compute", "--mode", "j_gamma", "--colours", "2,2,2", "--braid", "1 1"],
        vec!["compute", "--mode", "a_gamma", "--level", "2", "--braid", "2", "--strands", "2"],
        vec!["verify", "everything"],
        vec!["bogus"],
    ] {
        assert_eq!(unilink(&args).status.code(), Some(2), "{args:?}");
    }
}
