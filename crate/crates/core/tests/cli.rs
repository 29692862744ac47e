use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn hypercert(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hypercert"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is json")
}

fn construct(dir: &Path, family: &str, k: &str, n: &str) -> String {
    let path = dir.join(format!("{family}_{k}_{n}.json"));
    let path = path.to_str().unwrap().to_owned();
    let out = hypercert(&[
        "construct",
        "--family",
        family,
        "--k",
        k,
        "--n",
        n,
        "--out",
        &path,
    ]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    path
}

#[test]
fn construct_then_alpha() {
    let dir = tempfile::tempdir().unwrap();
    let file = construct(dir.path(), "h2", "2", "3");
    let out = hypercert(&["alpha", "--in", &file]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["optimum"], 5);
    let out = hypercert(&["alpha", "--in", &file, "--exact-ceiling", "8"]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("ceiling"));
}

#[test]
fn construct_validate_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    for (family, k, n) in [
        ("h2", "2", "3"),
        ("hk", "3", "2"),
        ("jk", "2", "3"),
        ("sudakov", "3", "3"),
        ("hf", "3", "3"),
    ] {
        let file = construct(dir.path(), family, k, n);
        let out = hypercert(&["validate", "--in", &file]);
        assert_eq!(code(&out), 0, "{family}");
        assert_eq!(json(&out)["ok"], true);
        let stdout = hypercert(&["construct", "--family", family, "--k", k, "--n", n]).stdout;
        assert_eq!(std::fs::read(&file).unwrap(), stdout);
    }
}

#[test]
fn verify_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let file = construct(dir.path(), "h2", "2", "3");
    assert_eq!(
        code(&hypercert(&[
            "verify",
            "--in",
            &file,
            "--pattern",
            "k4minus"
        ])),
        0
    );
    let found = hypercert(&["verify", "--in", &file, "--pattern", "path:3"]);
    assert_eq!(code(&found), 3);
    assert_eq!(json(&found)["outcome"], "found");
    assert_eq!(
        code(&hypercert(&[
            "verify",
            "--in",
            &file,
            "--pattern",
            "k4minus",
            "--budget",
            "0"
        ])),
        4
    );
    assert_eq!(
        code(&hypercert(&[
            "verify",
            "--in",
            &file,
            "--pattern",
            "sunflower"
        ])),
        0
    );
    assert_eq!(
        code(&hypercert(&["verify", "--in", &file, "--pattern", "bogus"])),
        2
    );
}

#[test]
fn report_passes_and_is_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    let csv = dir.path().join("a.csv");
    for path in [&a, &b] {
        let out = hypercert(&[
            "report",
            "--family",
            "h2",
            "--n",
            "3",
            "--no-timing",
            "--out",
            path.to_str().unwrap(),
            "--csv",
            csv.to_str().unwrap(),
        ]);
        assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    }
    let (a, b) = (std::fs::read(a).unwrap(), std::fs::read(b).unwrap());
    assert_eq!(a, b);
    assert!(!String::from_utf8_lossy(&a).contains("elapsed_ms"));
    let rows = std::fs::read_to_string(csv).unwrap().lines().count();
    let claims = serde_json::from_slice::<Value>(&a).unwrap()["claims"]
        .as_array()
        .unwrap()
        .len();
    assert_eq!(rows, claims + 1);
}

#[test]
fn injected_edge_fails_report() {
    let out = hypercert(&[
        "report",
        "--family",
        "jk",
        "--k",
        "2",
        "--n",
        "3",
        "--inject-edge",
        "--seed",
        "3",
        "--no-timing",
    ]);
    assert_eq!(code(&out), 1);
    let v = json(&out);
    assert!(v["parameters"]["injected_edge"].is_array());
    assert!(v["claims"]
        .as_array()
        .unwrap()
        .iter()
        .any(|c| c["verdict"] == "fail"));
}

#[test]
fn sparsity_modes() {
    let dir = tempfile::tempdir().unwrap();
    let file = construct(dir.path(), "h2", "2", "3");
    let out = hypercert(&[
        "sparsity",
        "--in",
        &file,
        "--c",
        "1",
        "--r",
        "2",
        "--mode",
        "exhaustive",
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["pass"], true);
    let out = hypercert(&[
        "sparsity",
        "--in",
        &file,
        "--c",
        "1/10",
        "--r",
        "1",
        "--mode",
        "exhaustive",
    ]);
    assert_eq!(code(&out), 1);
    let file = construct(dir.path(), "hf", "3", "3");
    let out = hypercert(&[
        "sparsity",
        "--in",
        &file,
        "--c",
        "27/6",
        "--r",
        "3",
        "--mode",
        "charging",
        "--charger",
        "covering-triple",
    ]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let sampled = [
        "sparsity",
        "--in",
        &file,
        "--c",
        "27/6",
        "--r",
        "3",
        "--mode",
        "sampled",
        "--samples",
        "50",
        "--seed",
        "7",
        "--no-timing",
    ];
    assert_eq!(hypercert(&sampled).stdout, hypercert(&sampled).stdout);
}

#[test]
fn usage_errors() {
    let dir = tempfile::tempdir().unwrap();
    let file = construct(dir.path(), "h2", "2", "3");
    for args in [
        vec![
            "sparsity",
            "--in",
            &file,
            "--c",
            "1",
            "--r",
            "1",
            "--mode",
            "exhaustive",
            "--samples",
            "5",
        ],
        vec![
            "sparsity", "--in", &file, "--c", "1", "--r", "1", "--mode", "charging",
        ],
        vec![
            "sparsity",
            "--in",
            &file,
            "--c",
            "1/0",
            "--r",
            "1",
            "--mode",
            "exhaustive",
        ],
        vec!["construct", "--family", "h2"],
        vec!["alpha", "--in", "/nonexistent/file.json"],
        vec!["frobnicate"],
    ] {
        let out = hypercert(&args);
        assert_eq!(code(&out), 2, "{args:?}");
        assert!(!out.stderr.is_empty());
    }
    let help = hypercert(&["--help"]);
    assert_eq!(code(&help), 0);
    assert!(String::from_utf8_lossy(&help.stdout).contains("HYPERCERT_THREADS"));
}

#[test]
fn zarankiewicz_and_ramsey() {
    let out = hypercert(&[
        "zarankiewicz",
        "--k",
        "3",
        "--n",
        "2",
        "--pattern",
        "f",
        "--no-timing",
    ]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    assert!(json(&out)["optimum"].as_u64().is_some());
    let out = hypercert(&["ramsey", "--n", "3"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["conclusion"], "r(P_4, 6) > 9");
}

#[test]
fn thread_count_from_environment() {
    let run = |threads: &str| {
        Command::new(env!("CARGO_BIN_EXE_hypercert"))
            .args(["report", "--family", "h2", "--n", "2", "--no-timing"])
            .env("HYPERCERT_THREADS", threads)
            .output()
            .unwrap()
    };
    let (one, four) = (run("1"), run("4"));
    assert_eq!(code(&one), 0);
    assert_eq!(one.stdout, four.stdout);
    assert_eq!(code(&run("zero")), 2);
}
