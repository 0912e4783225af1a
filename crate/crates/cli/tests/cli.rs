use std::process::Command;

use riordan_cli::{run, Outcome, EXIT_INVALID, EXIT_OK};
use serde_json::Value;

fn riordan(args: &[&str]) -> Outcome {
    run(std::iter::once("riordan").chain(args.iter().copied()))
}

fn json(out: &Outcome) -> Value {
    assert_eq!(out.code, EXIT_OK, "stderr: {}", out.stderr);
    serde_json::from_str(&out.stdout).unwrap()
}

#[test]
fn pascal_twelve_has_98_independent_sets() {
    let v = json(&riordan(&[
        "count",
        "--spec",
        "pascal:n=12",
        "--what",
        "is",
    ]));
    assert_eq!(v["value"].to_string(), "98");
    assert_eq!(v["what"], "is");
}

fn brute_alpha(n: usize, distances: &[usize]) -> u32 {
    (0u32..1 << n)
        .filter(|&m| {
            (0..n).all(|i| {
                (i + 1..n)
                    .all(|j| m >> i & 1 == 0 || m >> j & 1 == 0 || !distances.contains(&(j - i)))
            })
        })
        .map(u32::count_ones)
        .max()
        .unwrap()
}

#[test]
fn toeplitz_alpha() {
    assert_eq!(brute_alpha(5, &[1, 3]), 3);
    let out = riordan(&[
        "count",
        "--spec",
        "toeplitz:n=5;d=1,3",
        "--what",
        "alpha",
        "--format",
        "table",
    ]);
    assert_eq!(out.code, EXIT_OK);
    assert_eq!(out.stdout.trim(), "3");
}

#[test]
fn engines_agree_on_counts() {
    for spec in ["toeplitz:n=18;d=2,5", "motzkin:n=15", "catalan:n=11"] {
        let mut values = Vec::new();
        for engine in ["auto", "brute", "branch", "banded"] {
            let out = riordan(&["count", "--spec", spec, "--engine", engine]);
            values.push(json(&out)["value"].to_string());
        }
        assert!(
            values.windows(2).all(|w| w[0] == w[1]),
            "{spec}: {values:?}"
        );
    }
}

#[test]
fn auto_engine_choice() {
    let v = json(&riordan(&["count", "--spec", "toeplitz:n=30;d=1,7"]));
    assert_eq!(v["engine"], "banded");
    let v = json(&riordan(&["count", "--spec", "pascal:n=30"]));
    assert_eq!(v["engine"], "branch");
}

#[test]
fn clique_and_maximum_set_counts() {
    let v = json(&riordan(&[
        "count",
        "--spec",
        "toeplitz:n=7;d=2",
        "--what",
        "cliques",
    ]));
    // two paths on 4 and 3 vertices: empty set, 7 vertices, 5 edges
    assert_eq!(v["value"].to_string(), "13");
    let v = json(&riordan(&[
        "count",
        "--spec",
        "toeplitz:n=5;d=1",
        "--what",
        "max-is",
    ]));
    assert_eq!(v["value"]["size"], 3);
    assert_eq!(v["value"]["count"].to_string(), "1");
    let v = json(&riordan(&[
        "count",
        "--spec",
        "toeplitz:n=4;d=1",
        "--what",
        "maximal",
    ]));
    assert_eq!(v["value"]["count"], 3);
}

#[test]
fn table1_reproduces() {
    let out = riordan(&["verify", "table1"]);
    let v = json(&out);
    assert_eq!(v["passed"], 36);
    assert_eq!(v["failed"], 0);
    let out = riordan(&["verify", "table1", "--max-n", "13"]);
    assert_eq!(out.code, EXIT_INVALID);
}

#[test]
fn bounds_report_json() {
    let v = json(&riordan(&["bounds", "--spec", "toeplitz:n=14;d=2,4,6"]));
    assert_eq!(v["exact"].to_string(), "196");
    let entries = v["entries"].as_array().unwrap();
    assert!(entries.iter().all(|e| e["holds"] == true));
    assert!(entries.iter().any(|e| e["name"] == "chordal_toeplitz_is"));
}

#[test]
fn sweep_csv_and_determinism() {
    let args = [
        "verify",
        "sweep",
        "--family",
        "pascal:n={n}",
        "--range",
        "5..9",
        "--format",
        "csv",
    ];
    let a = riordan(&args);
    assert_eq!(a.code, EXIT_OK, "{}", a.stderr);
    assert!(a
        .stdout
        .starts_with("spec,n,exact,bound,value,relation,holds,tight\n"));
    assert_eq!(a, riordan(&args));

    let random = [
        "verify",
        "sweep",
        "--family",
        "random-riordan",
        "--range",
        "2..14",
        "--seed",
        "7",
    ];
    let r = riordan(&random);
    assert_eq!(r.code, EXIT_OK, "{}", r.stderr);
    assert_eq!(r, riordan(&random));
    let v: Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(v["seed"], 7);
    assert!(!v["reports"].as_array().unwrap().is_empty());
}

#[test]
fn decomposition_check() {
    let v = json(&riordan(&[
        "verify",
        "decomposition",
        "--spec",
        "pascal:n=20",
    ]));
    assert_eq!(v["passed"], true);
    assert_eq!(v["bell_form"], true);
    let out = riordan(&["verify", "decomposition", "--spec", "delta:n=5"]);
    assert_eq!(out.code, EXIT_INVALID);
}

#[test]
fn series_eval() {
    let v = json(&riordan(&[
        "series",
        "eval",
        "--expr",
        "1/(1-z)^2",
        "--order",
        "6",
    ]));
    let bits: Vec<u64> = v["coefficients"]
        .as_array()
        .unwrap()
        .iter()
        .map(|b| b.as_u64().unwrap())
        .collect();
    assert_eq!(bits, [1, 0, 1, 0, 1, 0]);
}

#[test]
fn graph_export() {
    let out = riordan(&[
        "graph",
        "build",
        "--spec",
        "toeplitz:n=3;d=1",
        "--format",
        "dot",
    ]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.contains("1 -- 2"));
    assert!(!out.stdout.contains("1 -- 3"));
}

#[test]
fn invalid_input_gives_exit_two_and_one_line() {
    for args in [
        vec!["count", "--spec", "nonsense"],
        vec!["count", "--spec", "pascal:n=41"],
        vec!["count", "--spec", "pascal:n=30", "--engine", "brute"],
        vec![
            "count",
            "--spec",
            "pascal:n=8",
            "--what",
            "maximal",
            "--engine",
            "brute",
        ],
        vec!["series", "eval", "--expr", "1/z", "--order", "4"],
        vec![
            "verify",
            "sweep",
            "--family",
            "pascal:n=4",
            "--range",
            "4..5",
        ],
        vec![
            "verify",
            "sweep",
            "--family",
            "pascal:n={n}",
            "--range",
            "9..5",
        ],
        vec!["count", "--spec", "pascal:n=8", "--format", "csv"],
    ] {
        let out = riordan(&args);
        assert_eq!(out.code, EXIT_INVALID, "{args:?}");
        assert!(out.stdout.is_empty());
        assert_eq!(out.stderr.lines().count(), 1, "{args:?}: {}", out.stderr);
    }
    assert_eq!(riordan(&["count"]).code, EXIT_INVALID);
}

#[test]
fn guard_can_be_lifted() {
    let v = json(&riordan(&["count", "--spec", "pascal:n=41", "--force"]));
    assert!(v["value"].is_number());
    let v = json(&riordan(&[
        "count",
        "--spec",
        "pascal:n=41",
        "--max-n",
        "41",
    ]));
    assert!(v["value"].is_number());
}

#[test]
fn binary_exit_codes_and_env_guard() {
    let bin = env!("CARGO_BIN_EXE_riordan");
    let out = Command::new(bin)
        .args(["count", "--spec", "pascal:n=45", "--format", "table"])
        .env("RIORDAN_MAX_N", "50")
        .output()
        .unwrap();
    assert!(out.status.success());
    let out = Command::new(bin)
        .args(["count", "--spec", "pascal:n=45"])
        .env_remove("RIORDAN_MAX_N")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(EXIT_INVALID));
    assert!(String::from_utf8(out.stderr).unwrap().starts_with("error:"));
    let out = Command::new(bin)
        .args(["verify", "table1"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(EXIT_OK));
}
