use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

const TIE_PROFILE: &str = r#"{"n":3,"shape":[1,1,1],"ballots":[
  {"ranking":[[1],[2],[3]],"count":2},
  {"ranking":[[3],[1],[2]],"count":2},
  {"ranking":[[2],[3],[1]],"count":1}]}"#;

// coordinates (3,2,4,2,0,3) over ABC, ACB, BAC, BCA, CAB, CBA
const EXAMPLE_PROFILE: &str = "1>2>3,3\n1>3>2,2\n2>1>3,4\n2>3>1,2\n3>2>1,3\n";

const GLOVE: &str = r#"{"n":3,"v":{"3":"1","5":"1","7":"1"}}"#;

fn write(dir: &TempDir, name: &str, contents: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tabloids"))
        .args(args)
        .output()
        .unwrap()
}

fn json(output: &Output) -> Value {
    assert!(
        output.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&output.stderr)
    );
    serde_json::from_slice(&output.stdout).unwrap()
}

fn arg(path: &Path) -> &str {
    path.to_str().unwrap()
}

fn strings(value: &Value) -> Vec<String> {
    value
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().map_or_else(|| v.to_string(), str::to_string))
        .collect()
}

#[test]
fn borda_tally_on_example_profile() {
    let dir = TempDir::new().unwrap();
    let ballots = write(&dir, "example.csv", EXAMPLE_PROFILE);
    let report = json(&run(&["tally", arg(&ballots)]));
    let scores: Vec<&str> = report["scores"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s["score"].as_str().unwrap())
        .collect();
    assert_eq!(scores, ["14", "18", "10"]);
    assert_eq!(report["winners"], serde_json::json!([2]));
    assert_eq!(report["voter_total"], "14");
    assert_eq!(report["n"], 3);
}

#[test]
fn empty_ballots_tie_everyone() {
    let dir = TempDir::new().unwrap();
    let ballots = write(
        &dir,
        "empty.json",
        r#"{"n":3,"shape":[1,1,1],"ballots":[]}"#,
    );
    let report = json(&run(&["tally", arg(&ballots)]));
    assert_eq!(report["winners"], serde_json::json!([1, 2, 3]));
    assert_eq!(report["voter_total"], "0");
}

#[test]
fn plurality_on_tie_profile() {
    let dir = TempDir::new().unwrap();
    let ballots = write(&dir, "tie.json", TIE_PROFILE);
    let report = json(&run(&[
        "tally",
        arg(&ballots),
        "--weights-preset",
        "plurality",
    ]));
    assert_eq!(report["winners"], serde_json::json!([1, 3]));
    let weights = write(&dir, "w.json", r#"{"weights":["1","0","0"]}"#);
    let from_file = json(&run(&["tally", arg(&ballots), "--weights", arg(&weights)]));
    assert_eq!(from_file, report);
}

#[test]
fn kemeny_tie_and_family_identity() {
    let dir = TempDir::new().unwrap();
    let ballots = write(&dir, "tie.json", TIE_PROFILE);
    let kemeny = run(&["kemeny", arg(&ballots)]);
    let report = json(&kemeny);
    assert_eq!(strings(&report["winners"]), ["1>2>3", "3>1>2"]);
    let scores: Vec<&str> = report["rankings"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["score"].as_str().unwrap())
        .collect();
    assert_eq!(scores, ["9", "8", "6", "7", "9", "6"]);

    let family = run(&[
        "family",
        arg(&ballots),
        "--gamma0",
        "9",
        "--gamma1",
        "4",
        "--gamma2",
        "1",
    ]);
    assert_eq!(family.stdout, kemeny.stdout);

    let flat = json(&run(&[
        "family",
        arg(&ballots),
        "--gamma0",
        "0",
        "--gamma1",
        "0",
        "--gamma2",
        "0",
    ]));
    assert_eq!(flat["winners"].as_array().unwrap().len(), 6);
}

#[test]
fn decompose_constant_profile() {
    let dir = TempDir::new().unwrap();
    let csv: String = ["1>2>3", "1>3>2", "2>1>3", "2>3>1", "3>1>2", "3>2>1"]
        .iter()
        .map(|r| format!("{r},2\n"))
        .collect();
    let ballots = write(&dir, "flat.csv", &csv);
    let report = json(&run(&["decompose", arg(&ballots)]));
    let components = report["components"].as_array().unwrap();
    assert_eq!(components[0]["name"], "W0");
    assert_eq!(components[0]["norm_squared"], "24");
    for c in &components[1..] {
        assert_eq!(c["norm_squared"], "0", "{}", c["name"]);
        assert!(c["vector"]["values"].as_object().unwrap().is_empty());
    }
}

#[test]
fn decompose_components_round_trip() {
    let dir = TempDir::new().unwrap();
    let ballots = write(&dir, "tie.json", TIE_PROFILE);
    let report = json(&run(&["decompose", arg(&ballots)]));
    let mut total = vec![num_rational::BigRational::default(); 6];
    for c in report["components"].as_array().unwrap() {
        let v = tabloids::io::vector_from_json(&c["vector"]).unwrap();
        for (t, x) in total.iter_mut().zip(v.to_values()) {
            *t += x;
        }
    }
    let expected: Vec<i64> = vec![2, 0, 0, 1, 2, 0];
    assert_eq!(
        total,
        expected
            .into_iter()
            .map(tabloids::rational::int)
            .collect::<Vec<_>>()
    );
}

#[test]
fn game_solve_and_analyze() {
    let dir = TempDir::new().unwrap();
    let game = write(&dir, "glove.json", GLOVE);
    let report = json(&run(&["game-solve", arg(&game), "--concept", "shapley"]));
    let payoffs: Vec<&str> = report["payoffs"]
        .as_array()
        .unwrap()
        .iter()
        .map(|p| p["payoff"].as_str().unwrap())
        .collect();
    assert_eq!(payoffs, ["2/3", "1/6", "1/6"]);
    assert_eq!(report["grand_value"], "1");

    let marginal = write(&dir, "m.json", r#"{"m":["1/3","1/6","1/3"]}"#);
    let via_marginal = json(&run(&[
        "game-solve",
        arg(&game),
        "--marginal",
        arg(&marginal),
    ]));
    assert_eq!(via_marginal["payoffs"], report["payoffs"]);

    let coeffs = write(&dir, "c.json", r#"{"c0":["0","0","1"],"c1":["1/2","1/2"]}"#);
    let analysis = json(&run(&["game-analyze", "--coeffs", arg(&coeffs)]));
    assert_eq!(analysis["efficiency"]["efficient"], true);
    assert_eq!(analysis["marginal"]["exact"], true);
    assert_eq!(
        strings(&analysis["marginal"]["best_fit_m"]),
        ["1/3", "1/6", "1/3"]
    );
    assert_eq!(analysis["self_dual"], true);

    let plain = write(&dir, "p.json", r#"{"c0":["1","0","0"],"c1":["0","0"]}"#);
    let other = json(&run(&["game-analyze", "--coeffs", arg(&plain)]));
    assert_eq!(other["efficiency"]["efficient"], false);
    assert_eq!(other["marginal"]["exact"], false);
}

#[test]
fn game_decompose_reassembles() {
    let dir = TempDir::new().unwrap();
    let game = write(
        &dir,
        "g.json",
        r#"{"n":3,"v":{"1":"1","2":"3","4":"5","7":"6"}}"#,
    );
    let report = json(&run(&["game-decompose", arg(&game)]));
    assert_eq!(report["grand_value"], "6");
    let level1 = &report["levels"][0];
    let u1 = tabloids::io::vector_from_json(&level1["u1_part"]).unwrap();
    assert_eq!(
        u1.to_values(),
        vec![
            tabloids::rational::int(-2),
            tabloids::rational::int(0),
            tabloids::rational::int(2)
        ]
    );
}

#[test]
fn construct_profile_is_reproducible() {
    let args = [
        "construct-profile",
        "--preset",
        "borda",
        "--preset",
        "plurality",
        "--candidates",
        "4",
        "--seed",
        "3",
        "--as-integer-profile",
    ];
    let first = run(&args);
    let second = run(&args);
    assert_eq!(first.stdout, second.stdout);
    let report = json(&first);
    assert_eq!(report["verified"], true);
    assert_eq!(report["targets_source"], "seed 3");

    let mut bounded = args.to_vec();
    bounded.extend(["--max-shift", "0"]);
    let out = run(&bounded);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn construct_profile_from_target_files() {
    let dir = TempDir::new().unwrap();
    let t1 = write(
        &dir,
        "t1.json",
        r#"{"shape":[1,2],"values":{"0":"1","1":"-1"}}"#,
    );
    let t2 = write(
        &dir,
        "t2.json",
        r#"{"shape":[1,2],"values":{"1":"2","2":"-2"}}"#,
    );
    let report = json(&run(&[
        "construct-profile",
        "--preset",
        "borda",
        "--preset",
        "plurality",
        "--candidates",
        "3",
        "--targets",
        arg(&t1),
        "--targets",
        arg(&t2),
    ]));
    assert_eq!(report["verified"], true);
    assert_eq!(report["targets_source"], "files");
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    let broken = write(&dir, "broken.json", r#"{"n":3,"shape":[1,1,1],"ballots":["#);
    let out = run(&["tally", arg(&broken)]);
    assert_eq!(out.status.code(), Some(2));

    let mismatch = write(
        &dir,
        "mismatch.json",
        r#"{"n":4,"shape":[1,1,1],"ballots":[]}"#,
    );
    let out = run(&["tally", arg(&mismatch)]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("n = 4"));

    let tie = write(&dir, "tie.json", TIE_PROFILE);
    let weights = write(&dir, "w.json", r#"{"weights":["1","0"]}"#);
    assert_eq!(
        run(&["tally", arg(&tie), "--weights", arg(&weights)])
            .status
            .code(),
        Some(3)
    );

    let bad_field = write(
        &dir,
        "bad.json",
        r#"{"n":3,"shape":[1,1,1],"ballots":[{"ranking":[[1],[2],["x"]]}]}"#,
    );
    let out = run(&["tally", arg(&bad_field)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("ballots[0].ranking"));

    let big = write(&dir, "big.json", r#"{"n":17,"v":{}}"#);
    assert_eq!(
        run(&["game-solve", arg(&big), "--concept", "shapley"])
            .status
            .code(),
        Some(5)
    );

    assert_eq!(
        run(&["kemeny", arg(&tie), "--no-such-flag"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&[
            "family",
            arg(&tie),
            "--gamma0",
            "1/0",
            "--gamma1",
            "0",
            "--gamma2",
            "0"
        ])
        .status
        .code(),
        Some(2)
    );
}

#[test]
fn formats_and_output_file() {
    let dir = TempDir::new().unwrap();
    let ballots = write(&dir, "example.csv", EXAMPLE_PROFILE);
    let csv = run(&["--format", "csv", "tally", arg(&ballots)]);
    assert_eq!(
        String::from_utf8(csv.stdout).unwrap(),
        "candidate,score,tier\n1,14,2\n2,18,1\n3,10,3\n"
    );
    let pretty =
        String::from_utf8(run(&["--format", "pretty", "tally", arg(&ballots)]).stdout).unwrap();
    assert!(pretty.contains("voter_total: 14"));

    let target = dir.path().join("report.json");
    let out = run(&["tally", arg(&ballots), "--output", arg(&target)]);
    assert!(out.status.success() && out.stdout.is_empty());
    let written: Value = serde_json::from_str(&std::fs::read_to_string(&target).unwrap()).unwrap();
    assert_eq!(written["voter_total"], "14");

    let approx = json(&run(&[
        "--approx",
        "game-solve",
        arg(&write(&dir, "g.json", GLOVE)),
        "--concept",
        "shapley",
    ]));
    assert_eq!(approx["payoffs"][0]["payoff"]["exact"], "2/3");
    assert_eq!(approx["payoffs"][0]["payoff"]["approx"], "6.66666666667e-1");
}
