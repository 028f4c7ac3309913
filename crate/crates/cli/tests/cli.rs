use std::process::{Command, Output};

use serde_json::Value;

fn bwbcalc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bwbcalc"))
        .args(args)
        .env_remove("BWBCALC_FORMAT")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let out = bwbcalc(&full);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn bwb_text_lines() {
    let cases = [
        (
            vec!["bwb", "--n", "4", "--lambda", "3", "--m", "5"],
            "H^2 = Σ^(3,3,1,1) C^4",
        ),
        (
            vec!["bwb", "--n", "4", "--lambda", "2,1", "--m", "5"],
            "VANISHES (repetition in rho-shift)",
        ),
        (
            vec!["bwb", "--n", "3", "--lambda", "", "--m", "0"],
            "H^0 = trivial, dim 1",
        ),
        (
            vec!["bwb", "--n", "2", "--m", "3"],
            "H^1 = Σ^(2,1) C^2  (dim 2)",
        ),
    ];
    for (args, expected) in cases {
        let out = bwbcalc(&args);
        assert!(out.status.success());
        assert!(
            stdout(&out).contains(expected),
            "{args:?}: {}",
            stdout(&out)
        );
    }
}

#[test]
fn bad_input_exits_with_two() {
    let cases: [&[&str]; 6] = [
        &["bwb", "--n", "3", "--lambda", "1,1,1"],
        &["bwb", "--n", "3", "--lambda", "1,2"],
        &["bwb", "--n", "1"],
        &["rationality", "--n", "5", "--k", "4", "--l", "3"],
        &["decompose", "--n", "3", "sym 2 (sym 2 Q)"],
        &["decompose", "--n", "3", "tensor Q Q@4"],
    ];
    for args in cases {
        let out = bwbcalc(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(
            String::from_utf8_lossy(&out.stderr).contains("error"),
            "{args:?}"
        );
    }
    let out = bwbcalc(&["bwb", "--n", "3", "--lambda", "1,1,1"]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("has 3 parts"));
}

#[test]
fn decompose_golden_case() {
    let v = json(&["decompose", "--n", "4", "tensor Q (sym 2 Q) L^5"]);
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["rank"], 18);
    assert_eq!(v["summands"].as_array().unwrap().len(), 2);
    let coh = v["cohomology"].as_array().unwrap();
    assert_eq!(coh.len(), 1);
    assert_eq!(coh[0]["degree"], 2);
    assert_eq!(coh[0]["reps"][0]["weight"], serde_json::json!([3, 3, 1, 1]));
    assert_eq!(coh[0]["dim"], 20);
}

#[test]
fn rationality_reports_witness() {
    let v = json(&["rationality", "--n", "5", "--k", "7", "--l", "7"]);
    let verdict = &v["verdict"];
    assert_eq!(verdict["kind"], "non_vanishing");
    assert_eq!(verdict["degree"], 1);
    assert_eq!(verdict["witness"]["column"], 3);
    assert_eq!(verdict["witness"]["row"], 4);
    assert_eq!(
        verdict["witness"]["entry"]["sources"][0]["lambda"],
        "1,1,1,1"
    );
    assert_eq!(verdict["witness"]["entry"]["sources"][0]["m"], 6);
    assert_eq!(v["page"]["entries"].as_array().unwrap().len(), 2);
}

#[test]
fn sweep_carries_a_horizon_disclaimer() {
    let v = json(&["rationality", "--n", "3", "--k", "3", "--sweep", "6"]);
    assert_eq!(v["rows"].as_array().unwrap().len(), 7);
    assert_eq!(v["aggregate"]["kind"], "no_obstruction_found");
    assert!(v["disclaimer"].as_str().unwrap().contains("l <= 6"));
    let text = stdout(&bwbcalc(&[
        "rationality",
        "--n",
        "3",
        "--k",
        "3",
        "--sweep",
        "6",
    ]));
    assert!(text.contains("NO OBSTRUCTION FOUND up to l = 6"));
    assert!(text.contains("finite horizon"));
}

#[test]
fn normality_text_has_grid_and_verdict() {
    let out = bwbcalc(&["normality", "--n", "3", "--k", "4", "--l", "4"]);
    let text = stdout(&out);
    assert!(text.contains("q |   p=2   p=1   p=0 | F"), "{text}");
    assert!(text.contains("2 |     1     .     . |"), "{text}");
    assert!(text.contains("NOT NORMAL"));
    assert!(text.contains("d_3"));
}

#[test]
fn every_reproduction_passes() {
    for case in [
        "example2.2",
        "thm3.1",
        "thm3.2",
        "remark-normality",
        "non-rational",
    ] {
        let out = bwbcalc(&["reproduce", case]);
        assert_eq!(out.status.code(), Some(0), "{case}: {}", stdout(&out));
        assert!(stdout(&out).ends_with("REPRODUCED\n"));
        let v = json(&["reproduce", case]);
        assert_eq!(v["passed"], true);
    }
    assert_eq!(bwbcalc(&["reproduce", "nonsense"]).status.code(), Some(2));
}

#[test]
fn json_output_is_byte_identical_across_runs() {
    let args = [
        "--json", "resolve", "--n", "4", "--k", "6", "--l", "7", "--page",
    ];
    assert_eq!(bwbcalc(&args).stdout, bwbcalc(&args).stdout);
    let args = [
        "--json",
        "rationality",
        "--n",
        "4",
        "--k",
        "5",
        "--sweep",
        "8",
    ];
    assert_eq!(bwbcalc(&args).stdout, bwbcalc(&args).stdout);
}

#[test]
fn text_is_derived_from_the_json_report() {
    let v = json(&["resolve", "--n", "5", "--k", "7", "--l", "7"]);
    let text = stdout(&bwbcalc(&["resolve", "--n", "5", "--k", "7", "--l", "7"]));
    for t in v["terms"].as_array().unwrap() {
        let line = format!(
            "T_{} = {}  (rank {})",
            t["index"],
            t["expr"].as_str().unwrap(),
            t["rank"]
        );
        assert!(text.contains(&line), "missing {line}");
    }
    assert_eq!(v["terms"].as_array().unwrap().len(), 4);
}

#[test]
fn fiber_stage_checks_its_pushforward() {
    let v = json(&[
        "resolve", "--n", "3", "--k", "5", "--l", "6", "--stage", "1",
    ]);
    assert_eq!(v["stage"], "fiber");
    assert_eq!(v["pushforward_matches"], true);
}

#[test]
fn format_from_environment_and_output_file() {
    let out = Command::new(env!("CARGO_BIN_EXE_bwbcalc"))
        .args(["bwb", "--n", "4", "--lambda", "3", "--m", "5"])
        .env("BWBCALC_FORMAT", "json")
        .output()
        .unwrap();
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["result"]["degree"], 2);

    let path = std::env::temp_dir().join(format!("bwbcalc-report-{}.json", std::process::id()));
    let out = bwbcalc(&[
        "bwb",
        "--n",
        "4",
        "--lambda",
        "3",
        "--m",
        "5",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert!(stdout(&out).starts_with("H^2"));
    let written: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).ok();
    assert_eq!(written["result"]["dim"], 20);
}
