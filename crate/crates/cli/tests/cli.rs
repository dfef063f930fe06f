use std::process::{Command, Output};

use serde_json::Value;

fn braidsig(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_braidsig"))
        .args(args)
        .env("RUST_LOG", "warn")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = braidsig(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn invariants_of_figure_word() {
    let v = json(&["invariants", "-b", "4", "a1 a2 a1 a3 a2 a2 a1 a3"]);
    assert_eq!(v["b1"], 5);
    assert_eq!(v["c"], 1);
    assert_eq!(v["sigma"], -5);
}

#[test]
fn torus_anchor() {
    assert_eq!(json(&["torus", "4", "8"]), -15);
    assert_eq!(json(&["sigma", "-b", "4", "a1 a2 a3 a1 a2 a3 a1 a2 a3 a1 a2 a3"]), -7);
}

#[test]
fn verify_exit_codes() {
    let ok = braidsig(&["verify", "-b", "4", "-l", "10", "--bound", "1/2", "--strict"]);
    assert_eq!(ok.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&ok.stdout).unwrap();
    assert_eq!(v["counterexamples"].as_array().unwrap().len(), 0);
    assert_eq!(v["bound"], "1/2");

    let bad = braidsig(&["verify", "-b", "3", "-l", "5", "--bound", "2", "--csv"]);
    assert_eq!(bad.status.code(), Some(1));
    let text = String::from_utf8(bad.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("word,l,b1,sigma,ratio"));
    assert!(lines.next().is_some());
}

#[test]
fn jobs_do_not_change_output() {
    let one = braidsig(&["verify", "-b", "4", "-l", "8", "--bound", "1", "--jobs", "1"]);
    let many = braidsig(&["verify", "-b", "4", "-l", "8", "--bound", "1", "--jobs", "4"]);
    assert_eq!(one.status.code(), Some(1));
    assert_eq!(one.stdout, many.stdout);
}

#[test]
fn usage_and_domain_errors_exit_2() {
    assert_eq!(braidsig(&["sigma", "-b", "2", "a5"]).status.code(), Some(2));
    assert_eq!(braidsig(&["torus", "5", "3"]).status.code(), Some(2));
    assert_eq!(braidsig(&["nonsense"]).status.code(), Some(2));
    assert_eq!(braidsig(&["verify", "-b", "4", "-l", "3", "--bound", "x"]).status.code(), Some(2));
    assert_eq!(braidsig(&["certificate", "a1 a2 a3", "-n", "3"]).status.code(), Some(2));
}

#[test]
fn word_operations() {
    assert_eq!(json(&["equal", "-b", "3", "a1 a2 a1", "a2 a1 a2"]), true);
    assert_eq!(json(&["equal", "-b", "3", "a1 a2", "a2 a1"]), false);
    assert_eq!(json(&["rotate", "-b", "4", "a1 a1 a2"]), "a2 a3 a3");
    let nf = json(&["normal-form", "-b", "3", "a1 a2"]);
    assert_eq!(nf["canonical"], "Δ^0 | 312");
    let betti = json(&["betti", "-b", "4", "a1 a1 a3"]);
    assert_eq!(betti["b1"], betti["fence_b1"]);
    assert_eq!(betti["c"], 2);
}

#[test]
fn bounds_lab_commands() {
    let c = json(&["certificate", "a1 a2 a3 a1", "-n", "4"]);
    assert_eq!(c["holds"], true);
    assert_eq!(c["power_holds"], true);
    assert_eq!(c["power_bound"], "14/3");

    let b = json(&["complete-block", "a1 a1 a1 a1"]);
    assert_eq!(b["complete"], true);
    let b = json(&["complete-block", "a2 a1 a1 a2"]);
    assert_eq!(b["complete"], false);
    assert_eq!(b["target"], Value::Null);

    let a = json(&["asymptotic", "-b", "2", "a1", "-n", "4"]);
    assert_eq!(a["estimate"], "-3/4");
    assert_eq!(a["lower"], "-1");

    let r = json(&["reduce", "-b", "6", "a1 a2 a3 a4 a5 a1 a2 a3 a4 a5", "-t", "3"]);
    assert_eq!(r["bound_holds"], true);
    assert!(r["components"].as_array().unwrap().iter().all(|c| c["strands"].as_u64().unwrap() <= 3));
}

#[test]
fn csv_output() {
    let out = braidsig(&["invariants", "-b", "3", "a1 a2 a1 a2", "--csv"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "word,b1,c,sigma,nullity\na1 a2 a1 a2,2,1,-2,0\n");
    let out = braidsig(&["seifert", "-b", "2", "a1 a1 a1", "--csv"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "-1,1\n0,-1\n");
}
