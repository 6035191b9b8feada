// SPDX-License-Identifier: Apache-2.0

use std::process::{Command, Output};

use hilb2::query::CountQuery;
use hilb2::report::{format_height, read_points_csv};
use serde_json::Value;

fn hilb2(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hilb2"))
        .args(args)
        .env_remove("HILB2_THREADS")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = hilb2(args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn count_summary() {
    let v = json(&["count", "--s", "2", "--t", "1", "--B", "20", "--format", "json"]);
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["N"], 47461);
    assert_eq!(v["query"]["B"], "20");
    let lo = v["c_bracket"][0].as_f64().unwrap();
    let hi = v["c_bracket"][1].as_f64().unwrap();
    assert!(lo <= hi && (lo - 5.94).abs() < 0.01);
    assert!(v["rel_dev"].as_f64().unwrap().abs() < 0.01);
}

#[test]
fn inspect_example() {
    let v = json(&["inspect", "--ell", "0,0,1", "--q", "1,0,0,-2,0,0"]);
    assert_eq!(v["class"], "nonsplit");
    assert_eq!(v["disc"], "8");
    assert_eq!(v["covol2_I2"], "5");
    assert_eq!(v["H_Le"], "3");
    assert_eq!(v["H1"].as_f64(), Some(1.0));
    assert!((v["H2"].as_f64().unwrap() - 5f64.sqrt()).abs() < 1e-15);
}

#[test]
fn constant_and_le_count() {
    let v = json(&["constant", "--ratio", "2", "--M-max", "1"]);
    assert!((v["partial"].as_f64().unwrap() - 5.9101).abs() < 1e-4);
    let v = json(&["le-count", "--B", "1"]);
    assert_eq!((v["split"].as_u64(), v["nonsplit"].as_u64()), (Some(3), Some(0)));
}

#[test]
fn emitted_points_round_trip() {
    let out = hilb2(&["count", "--s", "3", "--t", "2", "--B", "10", "--emit-points"]);
    assert!(out.status.success());
    let recs = read_points_csv(out.stdout.as_slice()).unwrap();
    assert_eq!(recs.len(), 213);
    let q = CountQuery::parse("3", "2", "10").unwrap();
    for r in &recs {
        assert_eq!(r.height, format_height(&q, &r.point));
    }
}

#[test]
fn exit_codes() {
    assert_eq!(hilb2(&["count", "--s", "2"]).status.code(), Some(1));
    assert_eq!(hilb2(&["count", "--s", "0", "--t", "1", "--B", "3"]).status.code(), Some(1));
    assert_eq!(hilb2(&["inspect", "--ell", "1,0", "--q", "1,0,0,0,0,0"]).status.code(), Some(1));
    assert_eq!(hilb2(&["inspect", "--ell", "1,0,0", "--q", "0,0,0,2,0,0"]).status.code(), Some(1));
    assert_eq!(hilb2(&["verify", "--suite", "nope"]).status.code(), Some(1));
    assert_eq!(hilb2(&["--help"]).status.code(), Some(0));
}

#[test]
fn minima_suite_dispatch() {
    let v = json(&["verify", "--suite", "minima", "--seed", "0"]);
    assert_eq!(v["suite"], "minima");
    assert_eq!(v["failure_count"], 0);
}

#[test]
fn reports_do_not_depend_on_threads() {
    let run = |threads: &str| hilb2(&["verify", "--suite", "all", "--threads", threads]);
    let (one, four) = (run("1"), run("4"));
    assert!(one.status.success() && four.status.success());
    assert_eq!(one.stdout, four.stdout);
    let env = Command::new(env!("CARGO_BIN_EXE_hilb2"))
        .args(["count", "--s", "2", "--t", "1", "--B", "10,20", "--format", "csv"])
        .env("HILB2_THREADS", "4")
        .output()
        .unwrap();
    let flag = hilb2(&["count", "--s", "2", "--t", "1", "--B", "10,20", "--format", "csv", "--threads", "1"]);
    assert_eq!(env.stdout, flag.stdout);
}
