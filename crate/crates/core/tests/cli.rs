use std::path::Path;

use edcds::cli::dispatch;
use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("edcds").chain(args.iter().copied());
    let code = dispatch(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn gen_ds_cds_pipeline() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("g.json");
    let (code, _, err) = run(&[
        "gen",
        "--n",
        "40",
        "--r",
        "25",
        "--seed",
        "11",
        "--out",
        s(&graph),
    ]);
    assert_eq!(code, 0, "{err}");

    for algo in ["edc-ds", "edc-ds-improved", "greedy-ds"] {
        let (code, out, err) = run(&["ds", "--algo", algo, "--in", s(&graph)]);
        assert_eq!(code, 0, "{err}");
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["algorithm"], algo);
        assert_eq!(v["valid"], true);
        assert!(!v["dominators"].as_array().unwrap().is_empty());
    }

    let result = dir.path().join("cds.json");
    for algo in ["edc-cds", "wu-li", "greedy-cds"] {
        let (code, _, err) = run(&["cds", "--algo", algo, "--in", s(&graph), "--out", s(&result)]);
        assert_eq!(code, 0, "{err}");
        let v: Value = serde_json::from_str(&std::fs::read_to_string(&result).unwrap()).unwrap();
        assert_eq!(v["algorithm"], algo);
        assert_eq!(v["valid"], true);
        assert_eq!(
            v["roots"].as_array().unwrap().len() as u64,
            v["components"].as_u64().unwrap()
        );
    }
}

#[test]
fn gen_is_deterministic() {
    let a = run(&["gen", "--n", "15", "--r", "30", "--seed", "5"]).1;
    let b = run(&["gen", "--n", "15", "--r", "30", "--seed", "5"]).1;
    assert_eq!(a, b);
    let v: Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["n"], 15);
    assert_eq!(v["positions"].as_array().unwrap().len(), 15);
}

#[test]
fn usage_errors_exit_1() {
    assert_eq!(run(&["ds", "--algo", "nosuch", "--in", "x.json"]).0, 1);
    assert_eq!(run(&["frobnicate"]).0, 1);
    assert_eq!(run(&["gen", "--n", "5", "--r", "-2"]).0, 1);
    let (code, _, err) = run(&["verify", "--n", "25"]);
    assert_eq!(code, 1);
    assert!(err.contains("24"), "{err}");
    assert_eq!(
        run(&[
            "bench",
            "--trials",
            "0",
            "--out",
            "/dev/null",
            "--summary",
            "/dev/null"
        ])
        .0,
        1
    );
}

#[test]
fn help_and_version_exit_0() {
    assert_eq!(run(&["--help"]).0, 0);
    assert_eq!(run(&["--version"]).0, 0);
}

#[test]
fn bad_input_files_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{ not json").unwrap();
    let (code, _, err) = run(&["ds", "--algo", "edc-ds", "--in", s(&bad)]);
    assert_eq!(code, 2);
    assert!(err.starts_with("error:"), "{err}");

    std::fs::write(&bad, r#"{"n": 2, "edges": [[0, 0]]}"#).unwrap();
    assert_eq!(run(&["cds", "--in", s(&bad)]).0, 2);

    let missing = dir.path().join("missing.json");
    assert_eq!(run(&["ds", "--algo", "edc-ds", "--in", s(&missing)]).0, 2);

    let config = dir.path().join("bench.toml");
    std::fs::write(&config, "no_such_key = 3\n").unwrap();
    assert_eq!(run(&["bench", "--config", s(&config)]).0, 2);
}

#[test]
fn verify_file_and_guard() {
    let dir = tempfile::tempdir().unwrap();
    let small = dir.path().join("small.json");
    std::fs::write(&small, r#"{"n": 5, "edges": [[0,1],[1,2],[2,3],[3,4]]}"#).unwrap();
    let (code, out, _) = run(&["verify", "--in", s(&small)]);
    assert_eq!(code, 0);
    let lines: Vec<Value> = out.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 3);
    assert_eq!(lines[0]["algo"], "edc-ds");
    assert_eq!(lines[0]["opt_size"], 2);
    assert_eq!(lines[2]["algo"], "edc-cds");
    assert_eq!(lines[2]["algo_size"], 3);
    assert_eq!(lines[2]["opt_size"], 3);
    assert_eq!(lines[2]["applicable"], false);
    assert!(lines[2]["holds"].is_null());

    let big = dir.path().join("big.json");
    run(&["gen", "--n", "30", "--r", "25", "--out", s(&big)]);
    assert_eq!(run(&["verify", "--in", s(&big)]).0, 2);
}

#[test]
fn verify_samples() {
    let (code, out, err) = run(&["verify", "--n", "9", "--trials", "4", "--seed", "2"]);
    assert_eq!(code, 0, "{err}");
    assert_eq!(out.lines().count(), 12);
    for line in out.lines() {
        let v: Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["n"], 9);
        assert!(v["seed"].is_u64());
    }
}

#[test]
fn bench_writes_csvs() {
    let dir = tempfile::tempdir().unwrap();
    let (trials, summary, comparison) = (
        dir.path().join("t.csv"),
        dir.path().join("s.csv"),
        dir.path().join("c.csv"),
    );
    let args = [
        "bench",
        "--n-values",
        "10,20",
        "--radii",
        "25,50",
        "--trials",
        "3",
        "--seed",
        "9",
        "--out",
        s(&trials),
        "--summary",
        s(&summary),
        "--comparison",
        s(&comparison),
    ];
    let (code, _, err) = run(&args);
    assert_eq!(code, 0, "{err}");
    let t = std::fs::read_to_string(&trials).unwrap();
    assert!(t.starts_with("n,r,trial,seed,algo,size,valid,connected,components,iterations,runtime_us\n"));
    assert_eq!(t.lines().count(), 1 + 2 * 2 * 3 * 6);
    assert!(t.lines().skip(1).all(|l| l.ends_with(",0")));
    let sm = std::fs::read_to_string(&summary).unwrap();
    assert_eq!(sm.lines().count(), 1 + 2 * 2 * 6);
    let c = std::fs::read_to_string(&comparison).unwrap();
    assert!(c.starts_with("r,n,algo,baseline,mean_diff,wins,ties,losses\n"));

    let again = dir.path().join("t2.csv");
    let mut args2 = args;
    args2[10] = s(&again);
    assert_eq!(run(&args2).0, 0);
    assert_eq!(t, std::fs::read_to_string(&again).unwrap());
}

#[test]
fn bench_config_file() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("bench.toml");
    std::fs::write(
        &config,
        "n_values = [12]\nradii = [40.0]\ntrials = 2\nalgorithms = [\"edc-cds\", \"wu-li\"]\n",
    )
    .unwrap();
    let trials = dir.path().join("t.csv");
    let summary = dir.path().join("s.csv");
    let (code, _, err) = run(&[
        "bench",
        "--config",
        s(&config),
        "--out",
        s(&trials),
        "--summary",
        s(&summary),
    ]);
    assert_eq!(code, 0, "{err}");
    let t = std::fs::read_to_string(&trials).unwrap();
    assert_eq!(t.lines().count(), 1 + 2 * 2);
    assert!(t.lines().skip(1).all(|l| l.starts_with("12,40,")));
}

#[test]
fn unknown_algorithm_lists_choices() {
    let (code, _, err) = run(&["ds", "--algo", "nosuch", "--in", "g.json"]);
    assert_eq!(code, 1);
    assert!(err.contains("edc-ds, edc-ds-improved, greedy-ds"), "{err}");
}

#[test]
fn bench_trial_replays_through_gen() {
    let dir = tempfile::tempdir().unwrap();
    let (trials, summary) = (dir.path().join("t.csv"), dir.path().join("s.csv"));
    let args = ["bench", "--n-values", "30", "--radii", "25", "--trials", "2", "--algos", "edc-ds-improved"];
    let (code, _, err) = run(&[&args[..], &["--out", s(&trials), "--summary", s(&summary)]].concat());
    assert_eq!(code, 0, "{err}");
    let csv = std::fs::read_to_string(&trials).unwrap();
    for line in csv.lines().skip(1) {
        let fields: Vec<&str> = line.split(',').collect();
        let (seed, size) = (fields[3], fields[5]);
        let graph = dir.path().join(format!("{seed}.json"));
        assert_eq!(run(&["gen", "--n", "30", "--r", "25", "--seed", seed, "--out", s(&graph)]).0, 0);
        let out = run(&["ds", "--algo", "edc-ds-improved", "--in", s(&graph)]).1;
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["dominators"].as_array().unwrap().len().to_string(), size);
    }
}
