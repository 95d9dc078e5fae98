//! End-to-end checks of the `gcf` binary: argument handling, CSV input,
//! table and JSON output, config files, and the simulate subcommand. Each
//! test spawns the compiled binary in its own process, so thread-pool and
//! working-directory state never leaks between cases.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use gcf::simulation::{generate_dataset, SimulationDesign};

fn gcf_bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_gcf"))
}

fn run(args: &[&str]) -> Output {
    gcf_bin().args(args).output().expect("binary ran")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("stdout is UTF-8")
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("stderr is UTF-8")
}

/// Writes a three-arm dataset drawn from the adequate-overlap design to
/// `dir/data.csv` and returns its path.
fn write_dataset_csv(dir: &Path, n: usize, seed: u64) -> PathBuf {
    let mut design = SimulationDesign::adequate_overlap();
    design.n = n;
    let (d, _, _) = generate_dataset(&design, seed).expect("dataset");
    let mut text = String::from("x1,x2,x3,x4,x5,x6,z,y\n");
    for i in 0..d.n() {
        for c in 0..6 {
            text.push_str(&format!("{},", d.covariates[(i, c)]));
        }
        text.push_str(&format!("{},{}\n", d.treatments[i], d.outcomes[i]));
    }
    let path = dir.join("data.csv");
    std::fs::write(&path, text).expect("wrote csv");
    path
}

#[test]
fn estimate_prints_one_row_per_pair() {
    let dir = tempfile::tempdir().unwrap();
    let csv = write_dataset_csv(dir.path(), 240, 11);
    let out = run(&[
        "estimate",
        "--input",
        csv.to_str().unwrap(),
        "--treatment",
        "z",
        "--outcome",
        "y",
    ]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("n=240 arms=3"), "header missing: {text}");
    assert!(text.contains("positivity:"), "positivity line missing");
    for pair in ["1 vs 2", "1 vs 3", "2 vs 3"] {
        assert!(text.contains(pair), "missing pair row {pair}: {text}");
    }
    assert_eq!(text.matches("GCF").count(), 3, "expected 3 GCF rows");
}

#[test]
fn estimate_runs_multiple_estimators() {
    let dir = tempfile::tempdir().unwrap();
    let csv = write_dataset_csv(dir.path(), 240, 12);
    let out = run(&[
        "estimate",
        "--input",
        csv.to_str().unwrap(),
        "--treatment",
        "z",
        "--outcome",
        "y",
        "--estimators",
        "dif,gcf",
    ]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert_eq!(text.matches("DIF").count(), 3);
    assert_eq!(text.matches("GCF").count(), 3);
}

#[test]
fn estimate_writes_json_document_deterministically() {
    let dir = tempfile::tempdir().unwrap();
    let csv = write_dataset_csv(dir.path(), 240, 13);
    let first = dir.path().join("first.json");
    let second = dir.path().join("second.json");
    for path in [&first, &second] {
        let out = run(&[
            "estimate",
            "--input",
            csv.to_str().unwrap(),
            "--treatment",
            "z",
            "--outcome",
            "y",
            "--output",
            path.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    }
    let bytes = std::fs::read(&first).unwrap();
    assert_eq!(bytes, std::fs::read(&second).unwrap(), "reruns must match");

    let doc: serde_json::Value = serde_json::from_slice(&bytes).unwrap();
    assert_eq!(doc["schema_version"], "1");
    assert_eq!(doc["config"]["treatment"], "z");
    assert_eq!(doc["estimates"][0]["method"], "GCF");
    assert_eq!(doc["estimates"][0]["n_arms"], 3);
    assert_eq!(
        doc["estimates"][0]["estimates"].as_array().unwrap().len(),
        3,
        "effect matrix has one row per arm"
    );
    assert!(doc["positivity"]["per_arm_min"].is_array());
}

#[test]
fn estimate_missing_outcome_flag_is_a_config_error() {
    let dir = tempfile::tempdir().unwrap();
    let csv = write_dataset_csv(dir.path(), 240, 14);
    let out = run(&[
        "estimate",
        "--input",
        csv.to_str().unwrap(),
        "--treatment",
        "z",
    ]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("--outcome is required"));
}

#[test]
fn unknown_flag_is_a_usage_error() {
    let out = run(&["estimate", "--nope"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn estimate_unknown_column_lists_available_ones() {
    let dir = tempfile::tempdir().unwrap();
    let csv = write_dataset_csv(dir.path(), 240, 15);
    let out = run(&[
        "estimate",
        "--input",
        csv.to_str().unwrap(),
        "--treatment",
        "arm",
        "--outcome",
        "y",
    ]);
    assert_eq!(out.status.code(), Some(3));
    let err = stderr(&out);
    assert!(err.contains("column 'arm' not found"), "got: {err}");
    assert!(err.contains("x1"), "available columns not listed: {err}");
}

#[test]
fn estimate_reports_line_of_bad_cell() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.csv");
    std::fs::write(
        &path,
        "x1,z,y\n0.1,1,2.0\n0.2,2,3.0\n0.3,1,oops\n0.4,2,4.0\n",
    )
    .unwrap();
    let out = run(&[
        "estimate",
        "--input",
        path.to_str().unwrap(),
        "--treatment",
        "z",
        "--outcome",
        "y",
    ]);
    assert_eq!(out.status.code(), Some(3));
    let err = stderr(&out);
    assert!(err.contains("line 4"), "line number missing: {err}");
    assert!(err.contains("non-numeric value 'oops'"), "got: {err}");
}

#[test]
fn estimate_rejects_the_oracle() {
    let dir = tempfile::tempdir().unwrap();
    let csv = write_dataset_csv(dir.path(), 240, 16);
    let out = run(&[
        "estimate",
        "--input",
        csv.to_str().unwrap(),
        "--treatment",
        "z",
        "--outcome",
        "y",
        "--estimators",
        "oracle",
    ]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("only available in simulation"));
}

#[test]
fn simulate_builtin_writes_metric_rows() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("metrics.csv");
    let out = run(&[
        "simulate",
        "design1-adequate",
        "--n",
        "300",
        "--reps",
        "8",
        "--estimators",
        "gcf",
        "--seed",
        "5",
        "--output",
        csv.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    assert!(stdout(&out).contains("replications: 8 requested, 8 used"));

    let text = std::fs::read_to_string(&csv).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("method,j,j_prime,true_ate,bias,rmse,coverage,mean_ci_width,mean_variance")
    );
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 3, "one row per pair: {text}");
    assert!(rows.iter().all(|r| r.starts_with("GCF,")));
}

#[test]
fn simulate_is_deterministic_for_a_seed() {
    let dir = tempfile::tempdir().unwrap();
    let first = dir.path().join("first.csv");
    let second = dir.path().join("second.csv");
    for path in [&first, &second] {
        let out = run(&[
            "simulate",
            "design1-adequate",
            "--n",
            "300",
            "--reps",
            "6",
            "--estimators",
            "dif,gcf",
            "--seed",
            "9",
            "--output",
            path.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    }
    assert_eq!(
        std::fs::read(&first).unwrap(),
        std::fs::read(&second).unwrap(),
        "metric rows must be identical across reruns"
    );
}

#[test]
fn simulate_six_arm_design_covers_fifteen_pairs() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("metrics.csv");
    let out = run(&[
        "simulate",
        "design3-j6",
        "--n",
        "1500",
        "--reps",
        "4",
        "--estimators",
        "gcf",
        "--output",
        csv.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let text = std::fs::read_to_string(&csv).unwrap();
    assert_eq!(text.lines().count(), 16, "header plus 15 pair rows");
}

#[test]
fn simulate_unknown_design_lists_builtins() {
    let out = run(&["simulate", "design9"]);
    assert_eq!(out.status.code(), Some(3));
    let err = stderr(&out);
    assert!(err.contains("unknown design 'design9'"));
    for name in ["design1-adequate", "design2-lack", "design3-j6"] {
        assert!(err.contains(name), "missing {name} in: {err}");
    }
}

#[test]
fn simulate_accepts_a_design_file() {
    let dir = tempfile::tempdir().unwrap();
    let design = dir.path().join("two_arm.toml");
    std::fs::write(
        &design,
        r#"
name = "two-arm-smoke"
n_arms = 2
n = 200
alphas = [
  [0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0],
  [1.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0],
]
betas = [
  [0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
  [0.2, 0.1, 0.0, 0.0, 0.0, 0.0, 0.0],
]
noise_sd = 1.0
replications = 5
k = 3
estimators = ["dif", "gcf"]
base_seed = 3
xi = 0.001
alpha = 0.05
"#,
    )
    .unwrap();
    let out = run(&["simulate", "--design-file", design.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("two-arm-smoke"), "design name echoed: {text}");
    assert!(text.contains("replications: 5 requested"));
}

#[test]
fn simulate_rejects_name_plus_design_file() {
    let dir = tempfile::tempdir().unwrap();
    let design = dir.path().join("d.toml");
    std::fs::write(&design, "name = \"x\"\n").unwrap();
    let out = run(&[
        "simulate",
        "design1-adequate",
        "--design-file",
        design.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("not both"));
}

#[test]
fn simulate_rejects_malformed_design_file() {
    let dir = tempfile::tempdir().unwrap();
    let design = dir.path().join("d.toml");
    std::fs::write(&design, "name = \"x\"\nn_arms = \"three\"\n").unwrap();
    let out = run(&["simulate", "--design-file", design.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("d.toml"));
}

#[test]
fn config_file_supplies_defaults_and_flags_win() {
    let dir = tempfile::tempdir().unwrap();
    let csv = write_dataset_csv(dir.path(), 240, 17);
    let config = dir.path().join("run.toml");
    std::fs::write(
        &config,
        format!(
            "[estimate]\ninput = {:?}\ntreatment = \"z\"\noutcome = \"y\"\nk = 4\n",
            csv.to_str().unwrap()
        ),
    )
    .unwrap();

    let from_file = run(&["--config", config.to_str().unwrap(), "estimate"]);
    assert_eq!(
        from_file.status.code(),
        Some(0),
        "stderr: {}",
        stderr(&from_file)
    );
    assert!(stdout(&from_file).contains("k=4"), "config k not applied");

    let overridden = run(&["--config", config.to_str().unwrap(), "estimate", "--k", "2"]);
    assert_eq!(overridden.status.code(), Some(0));
    assert!(stdout(&overridden).contains("k=2"), "flag must beat config");
}

#[test]
fn config_file_rejects_unknown_keys() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("run.toml");
    std::fs::write(&config, "[estimate]\ninputt = \"x.csv\"\n").unwrap();
    let out = run(&["--config", config.to_str().unwrap(), "estimate"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("inputt"), "got: {}", stderr(&out));
}

#[test]
fn thread_cap_is_accepted() {
    let out = run(&[
        "--threads",
        "1",
        "simulate",
        "design1-adequate",
        "--n",
        "300",
        "--reps",
        "4",
        "--estimators",
        "gcf",
    ]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
}
