//! End-to-end tests of the command-line surface: output formats, JSON
//! schema stability and the exit-code contract (0 ok, 1 verification
//! failure, 2 usage/input error).

use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output};

use essspec_core::extremal::{theorem1_extremal, theorem3_extremal};
use essspec_core::formats::{parse_digraph6, parse_graph6};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_essspec"))
}

fn write_temp(name: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("essspec_cli_{}_{name}", std::process::id()));
    let mut f = std::fs::File::create(&path).unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    path
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn spectrum_path_graph() {
    let p3 = write_temp("p3.el", "3 2\n0 1\n1 2\n");
    let out = bin()
        .args(["spectrum", "--file"])
        .arg(&p3)
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(stdout(&out).contains("2.732050807"), "{}", stdout(&out));

    let out = bin()
        .args(["spectrum", "--json", "--file"])
        .arg(&p3)
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["n"], 3);
    assert_eq!(v["symmetric"], true);
    let lambda = v["lambda1"].as_f64().unwrap();
    assert!((lambda - (1.0 + 3.0f64.sqrt())).abs() < 1e-9);
    assert_eq!(v["perron"].as_array().unwrap().len(), 3);
}

#[test]
fn spectrum_directed_input() {
    let c3 = write_temp("c3.el", "3 3 directed\n0 1\n1 2\n2 0\n");
    let out = bin()
        .args(["spectrum", "--json", "--file"])
        .arg(&c3)
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["symmetric"], false);
    // Circulant distance matrix with constant row sum 1 + 2 = 3, so the
    // Perron vector is uniform and the spectral radius is exactly 3.
    let lambda = v["lambda1"].as_f64().unwrap();
    assert!((lambda - 3.0).abs() < 1e-9, "{lambda}");
}

#[test]
fn essconn_outputs() {
    // K_2 v (K_2 u K_3) has essential connectivity 2 with the join as cut.
    let g = write_temp(
        "joined.el",
        "7 15\n0 1\n0 2\n0 3\n0 4\n0 5\n0 6\n1 2\n1 3\n1 4\n1 5\n1 6\n2 3\n4 5\n4 6\n5 6\n",
    );
    let out = bin().args(["essconn", "--file"]).arg(&g).output().unwrap();
    assert!(out.status.success());
    assert!(stdout(&out).contains("essential connectivity: 2"));

    let out = bin()
        .args(["essconn", "--json", "--file"])
        .arg(&g)
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["essential_connectivity"], 2);
    assert_eq!(v["cut"], serde_json::json!([0, 1]));

    // Complete graphs have no essential cut: defined = false, exit 0.
    let k4 = write_temp("k4.el", "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    let out = bin()
        .args(["essconn", "--json", "--file"])
        .arg(&k4)
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["defined"], false);
    assert!(v["essential_connectivity"].is_null());
}

#[test]
fn essconn_directed_input() {
    // Complete digraph on 2 vertices joined both ways to two complete
    // digraphs on 2: removing the join pair leaves two non-trivial
    // strongly connected components.
    let d = write_temp(
        "dig.el",
        "6 22 directed\n0 1\n1 0\n2 3\n3 2\n4 5\n5 4\n0 2\n2 0\n0 3\n3 0\n0 4\n4 0\n0 5\n5 0\n1 2\n2 1\n1 3\n3 1\n1 4\n4 1\n1 5\n5 1\n",
    );
    let out = bin()
        .args(["essconn", "--json", "--file"])
        .arg(&d)
        .output()
        .unwrap();
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["essential_connectivity"], 2);
    assert_eq!(v["cut"], serde_json::json!([0, 1]));

    // Not strongly connected: input error.
    let bad = write_temp("dag.el", "2 1 directed\n0 1\n");
    let out = bin()
        .args(["essconn", "--file"])
        .arg(&bad)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn vconn_cycle() {
    let c6 = write_temp("c6.el", "6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n");
    let out = bin()
        .args(["vconn", "--json", "--file"])
        .arg(&c6)
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["vertex_connectivity"], 2);
}

#[test]
fn construct_round_trips_through_graph6() {
    let out = bin()
        .args([
            "construct",
            "thm1",
            "--n",
            "7",
            "--kappa",
            "2",
            "--out",
            "g6",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let g = parse_graph6(stdout(&out).trim()).unwrap();
    assert_eq!(g, theorem1_extremal(7, 2).unwrap());

    let out = bin()
        .args([
            "construct",
            "thm3",
            "--n",
            "6",
            "--k",
            "1",
            "--n1",
            "2",
            "--out",
            "d6",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let d = parse_digraph6(stdout(&out).trim()).unwrap();
    assert_eq!(d, theorem3_extremal(6, 1, 2).unwrap());

    // Directed construction refuses an undirected output format.
    let out = bin()
        .args([
            "construct",
            "thm3",
            "--n",
            "6",
            "--k",
            "1",
            "--n1",
            "2",
            "--out",
            "g6",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn convert_between_formats() {
    let p4 = write_temp("p4.el", "4 3\n0 1\n1 2\n2 3\n");
    let out = bin()
        .args(["convert", "--to", "g6", "--file"])
        .arg(&p4)
        .output()
        .unwrap();
    assert!(out.status.success());
    let g6 = stdout(&out).trim().to_string();

    let g6file = write_temp("p4.g6", &g6);
    let out = bin()
        .args(["convert", "--format", "g6", "--to", "el", "--file"])
        .arg(&g6file)
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(stdout(&out), "4 3\n0 1\n1 2\n2 3\n");

    // Kind mismatch is a usage error.
    let out = bin()
        .args(["convert", "--format", "g6", "--to", "d6", "--file"])
        .arg(&g6file)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_report_schema_and_exit_codes() {
    let out = bin()
        .args([
            "verify",
            "thm1",
            "--n",
            "5",
            "--kappa",
            "1",
            "--json",
            "--threads",
            "1",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = stdout(&out);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    let mut keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    keys.sort_unstable();
    assert_eq!(
        keys,
        vec![
            "candidates_examined",
            "claim",
            "construction_canonical",
            "extremal_matches",
            "min_lambda1",
            "minimizer_canonical",
            "notes",
            "parameters",
            "runtime_ms",
            "sampling",
            "seed",
            "uniqueness",
        ]
    );
    // Emission order is fixed by the report struct, claim first.
    assert!(text.trim_start().starts_with("{\n  \"claim\""), "{text}");
    assert_eq!(v["claim"], "THM1");
    assert_eq!(v["extremal_matches"], true);

    // A minimality check that does not match exits 1: the delta = 1
    // boundary is such a case.
    let out = bin()
        .args([
            "verify",
            "thm2",
            "--n",
            "7",
            "--kappa",
            "2",
            "--delta",
            "1",
            "--threads",
            "1",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn lemma_subcommands_run() {
    for args in [
        vec!["verify", "lemma-edge", "--trials", "20"],
        vec!["verify", "lemma-arc", "--trials", "20"],
        vec!["verify", "lemma-balance", "--max-order", "9"],
        vec!["verify", "lemma-f", "--nk-hi", "10"],
    ] {
        let out = bin().args(&args).output().unwrap();
        assert!(out.status.success(), "{args:?}: {}", stdout(&out));
    }
}

#[test]
fn usage_and_parse_errors_exit_2() {
    let out = bin().args(["no-such-command"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));

    let out = bin()
        .args(["verify", "thm1", "--n", "5"]) // missing --kappa
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));

    let bad = write_temp("bad.el", "2 1\n0 0\n");
    let out = bin()
        .args(["spectrum", "--file"])
        .arg(&bad)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));

    let missing = std::env::temp_dir().join("essspec_cli_does_not_exist.el");
    let out = bin()
        .args(["spectrum", "--file"])
        .arg(&missing)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));

    // Enumeration guard refuses big n unless overridden.
    let out = bin()
        .args(["verify", "thm1", "--n", "9", "--kappa", "1"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn threads_env_var_is_honored() {
    let out = bin()
        .args(["verify", "thm1", "--n", "5", "--kappa", "1"])
        .env("ESSSPEC_THREADS", "1")
        .output()
        .unwrap();
    assert!(out.status.success());
}
