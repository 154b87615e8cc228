use std::fs;
use std::process::{Command, Output};

fn polyslice(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polyslice"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn passing_run_exits_zero() {
    let out = polyslice(&["thm1", "--n", "2", "--epsilon", "1/2", "--trials", "100"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["verdict"], true);
    assert_eq!(report["config"]["epsilon"], "1/2");
}

#[test]
fn failing_assertion_exits_one() {
    // N = 1 has no kernel direction, so the certificate row fails.
    let out = polyslice(&["prop2", "--n", "1", "--r", "1/10", "--trials", "10"]);
    assert_eq!(out.status.code(), Some(1));
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["notes"]["outcome"], "dimension_too_small");
}

#[test]
fn bad_parameters_exit_two() {
    assert_eq!(polyslice(&["thm1", "--epsilon", "0"]).status.code(), Some(2));
    assert_eq!(polyslice(&["thm1", "--epsilon", "-1/2"]).status.code(), Some(2));
    assert_eq!(polyslice(&["prop2", "--r", "1"]).status.code(), Some(2));
    assert_eq!(polyslice(&["thm1", "--epsilon", "x"]).status.code(), Some(2));
    assert_eq!(polyslice(&[]).status.code(), Some(2));
}

#[test]
fn csv_output() {
    let out = polyslice(&["prop3", "--n", "3", "--epsilons", "1/10,1/20", "--trials", "50", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let header = text.lines().next().unwrap();
    assert_eq!(header, "experiment,N,epsilon,quantity,relation,exact_value,decimal_value,bound,pass");
    assert!(text.lines().skip(1).all(|l| l.starts_with("prop3,3,") && l.ends_with(",true")));
    assert!(text.contains("diameter,<=,3/5,0.600000000,3/5,true"));
}

#[test]
fn config_file_with_flag_override() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("cfg.json");
    fs::write(&cfg, r#"{"experiment": "sandwich", "N": 3, "r": "1/10", "trials": 50, "seed": 7}"#).unwrap();
    let out = polyslice(&["--config", cfg.to_str().unwrap(), "--n", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["config"]["N"], 2);
    assert_eq!(report["config"]["seed"], 7);
    assert_eq!(report["rows"][0]["exact_value"], "52/1");

    fs::write(&cfg, r#"{"experiment": "sandwich", "bogus": 1}"#).unwrap();
    assert_eq!(polyslice(&["--config", cfg.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn output_file_is_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let mut runs = Vec::new();
    for _ in 0..2 {
        let out = polyslice(&["sandwich", "--n", "2", "--r", "1/4", "--seed", "3", "--trials", "200", "--output", path.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0));
        assert!(out.stdout.is_empty());
        runs.push(fs::read_to_string(&path).unwrap());
    }
    assert_eq!(runs[0], runs[1]);
}

#[test]
fn sweep_rows_follow_config_order() {
    let out = polyslice(&["verify-ext", "--sweep", "3,1,2", "--r", "1/10", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let ns: Vec<String> = stdout(&out)
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(1).unwrap().to_string())
        .collect();
    let mut dedup = ns.clone();
    dedup.dedup();
    assert_eq!(dedup, ["3", "1", "2"]);
}

#[test]
fn inspect_space_files() {
    let dir = tempfile::tempdir().unwrap();
    let named = dir.path().join("ii.json");
    fs::write(&named, r#"{"kind": "II", "N": 2, "r": "1/10"}"#).unwrap();
    let out = polyslice(&["inspect", "--space", named.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["dim"], 3);
    assert_eq!(v["dual_ball_vertices"].as_array().unwrap().len(), 10);
    assert_eq!(v["unit_ball_vertices"].as_array().unwrap().len(), 12);

    let custom = dir.path().join("square.json");
    fs::write(&custom, r#"{"kind": "custom", "generators": [["1/1","0/1"],["-1/1","0/1"],["0/1","1/1"],["0/1","-1/1"]]}"#).unwrap();
    let out = polyslice(&["inspect", "--space", custom.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["unit_ball_vertices"].as_array().unwrap().len(), 4);

    fs::write(&custom, r#"{"kind": "custom", "generators": [["1/1","0/1"]]}"#).unwrap();
    assert_eq!(polyslice(&["inspect", "--space", custom.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(polyslice(&["inspect"]).status.code(), Some(2));
}
