//! End-to-end tests: run the built binary on catalog and file inputs and
//! check the JSON report plus the exit-code contract (0 success, 1
//! structural failure, 2 parse/usage error).

use serde_json::Value;
use std::path::PathBuf;
use std::process::{Command, Output};

fn colorbound(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_colorbound"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is one JSON report")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

fn temp_path(tag: &str) -> PathBuf {
    let unique = format!("colorbound-test-{}-{tag}", std::process::id());
    std::env::temp_dir().join(unique)
}

#[test]
fn oracle_reports_the_chromatic_number() {
    let out = colorbound(&["oracle", "--name", "grotzsch"]);
    assert_eq!(code(&out), 0);
    let r = report(&out);
    assert_eq!(r["command"], "oracle");
    assert_eq!(r["input"]["n"], 11);
    assert_eq!(r["input"]["m"], 20);
    assert_eq!(r["result"]["chi"], 4);
    assert_eq!(r["result"]["assignment"].as_array().unwrap().len(), 11);
}

#[test]
fn oracle_refuses_oversized_inputs() {
    let out = colorbound(&["oracle", "--name", "k22"]);
    assert_eq!(code(&out), 2);
    let msg = String::from_utf8_lossy(&out.stderr);
    assert!(msg.contains("exceeds the exact-solver guard"), "{msg}");
}

#[test]
fn color_with_verify_passes_on_catalog_graphs() {
    let out = colorbound(&[
        "color", "--class", "diamond", "--name", "grotzsch", "--verify",
    ]);
    assert_eq!(code(&out), 0);
    let r = &report(&out)["result"];
    assert_eq!(r["class"], "diamond-free");
    assert_eq!(r["omega"], 2);
    assert_eq!(r["verify"]["proper"], true);
    assert_eq!(r["verify"]["chi"], 4);
    assert!(r["colors_used"].as_u64() <= r["bound"].as_u64());
}

#[test]
fn strict_mode_refuses_out_of_class_input_with_a_witness() {
    let out = colorbound(&["color", "--class", "gem", "--name", "gem", "--strict"]);
    assert_eq!(code(&out), 1);
    let r = &report(&out)["result"];
    assert_eq!(r["strict"]["member"], false);
    assert_eq!(r["strict"]["witness"]["pattern"], "gem");
    assert_eq!(
        r["strict"]["witness"]["embedding"]
            .as_array()
            .unwrap()
            .len(),
        5
    );
}

#[test]
fn check_separates_members_from_witnessed_non_members() {
    let out = colorbound(&["check", "--name", "petersen", "--forbid", "p2p4,diamond"]);
    assert_eq!(code(&out), 0);
    assert_eq!(report(&out)["result"]["member"], true);

    let out = colorbound(&["check", "--name", "petersen", "--forbid", "c5"]);
    assert_eq!(code(&out), 1);
    let r = &report(&out)["result"];
    assert_eq!(r["member"], false);
    assert_eq!(r["checks"][0]["witness"]["pattern"], "C5");
}

#[test]
fn partition_reports_roles_and_structure() {
    let out = colorbound(&["partition", "--name", "two-k5", "--class", "diamond"]);
    assert_eq!(code(&out), 0);
    let r = &report(&out)["result"];
    assert_eq!(r["omega"], 5);
    assert_eq!(r["anchor"].as_array().unwrap().len(), 5);
    assert_eq!(r["structure"]["all_hold"], true);
}

#[test]
fn certify_perfect_issues_and_withholds_certificates() {
    let out = colorbound(&["certify-perfect", "--name", "two-k5"]);
    assert_eq!(code(&out), 0);
    let r = &report(&out)["result"];
    assert_eq!(r["conclusion"]["verdict"], "perfect");
    assert_eq!(r["conclusion"]["chi"], 5);
    assert_eq!(r["omega"], 5);

    // Below the clique-number threshold: no verdict on perfection, exit 0.
    let out = colorbound(&["certify-perfect", "--name", "k3"]);
    assert_eq!(code(&out), 0);
    let r = &report(&out)["result"];
    assert_eq!(r["conclusion"]["verdict"], "not-applicable");
    assert_eq!(r["conclusion"]["reason"], "clique-number");

    // A five-cycle is outside the class and carries its own witness.
    let out = colorbound(&["certify-perfect", "--name", "c5"]);
    assert_eq!(code(&out), 1);
    let r = &report(&out)["result"];
    assert_eq!(r["conclusion"]["reason"], "out-of-class");
    assert_eq!(r["conclusion"]["witness"]["pattern"], "C5");
}

#[test]
fn gen_writes_a_member_graph_and_is_seed_deterministic() {
    let path = temp_path("gen.col");
    let path_s = path.to_str().unwrap();
    let args = [
        "gen",
        "--class",
        "butterfly",
        "--n",
        "14",
        "--seed",
        "11",
        "--out",
        path_s,
    ];
    let out = colorbound(&args);
    assert_eq!(code(&out), 0);
    let first = std::fs::read_to_string(&path).expect("file written");

    let out = colorbound(&args);
    assert_eq!(code(&out), 0);
    assert_eq!(std::fs::read_to_string(&path).unwrap(), first);

    let out = colorbound(&["check", "--input", path_s, "--forbid", "p2p4,butterfly"]);
    assert_eq!(code(&out), 0);
    assert_eq!(report(&out)["result"]["member"], true);
    std::fs::remove_file(&path).ok();
}

#[test]
fn gen_round_trips_through_the_json_format() {
    let path = temp_path("gen.json");
    let path_s = path.to_str().unwrap();
    let out = colorbound(&[
        "gen", "--class", "gem", "--n", "10", "--seed", "3", "--out", path_s, "--format", "json",
    ]);
    assert_eq!(code(&out), 0);
    let digest = report(&out)["input"].clone();

    let out = colorbound(&["oracle", "--input", path_s, "--format", "json"]);
    assert_eq!(code(&out), 0);
    assert_eq!(report(&out)["input"], digest);
    std::fs::remove_file(&path).ok();
}

#[test]
fn gen_reports_exhaustion_without_writing() {
    let path = temp_path("never.col");
    let out = colorbound(&[
        "gen",
        "--class",
        "diamond",
        "--n",
        "24",
        "--p",
        "0.5",
        "--seed",
        "1",
        "--tries",
        "3",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 1);
    let r = &report(&out)["result"];
    assert!(r["exhausted"].as_str().unwrap().contains("3 draws"));
    assert!(!path.exists());
}

#[test]
fn parse_errors_exit_two_with_a_line_number() {
    let path = temp_path("bad.col");
    std::fs::write(&path, "p edge 3 1\ne 1 5\n").unwrap();
    let out = colorbound(&["oracle", "--input", path.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    let msg = String::from_utf8_lossy(&out.stderr);
    assert!(msg.contains("line 2"), "{msg}");
    assert!(msg.contains("outside 1..=3"), "{msg}");
    std::fs::remove_file(&path).ok();
}

#[test]
fn usage_errors_exit_two() {
    // No input source at all.
    let out = colorbound(&["oracle"]);
    assert_eq!(code(&out), 2);

    // Mutually exclusive input sources.
    let out = colorbound(&["oracle", "--input", "x.col", "--name", "k3"]);
    assert_eq!(code(&out), 2);

    // Unknown catalog name.
    let out = colorbound(&["oracle", "--name", "no-such-graph"]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown catalog graph"));

    // Unknown pattern name in --forbid.
    let out = colorbound(&["check", "--name", "k3", "--forbid", "hexagon"]);
    assert_eq!(code(&out), 2);
}
