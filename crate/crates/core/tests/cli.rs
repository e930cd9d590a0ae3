//! Exit codes and file outputs of the `async-kw` binary.

use std::path::Path;
use std::process::{Command, Output};

use async_kw::cli::{ExperimentConfig, ExperimentSettings, Thresholds};
use async_kw::engine::SimConfig;
use async_kw::objectives::{NoiseModel, ObjectiveSpec};
use async_kw::schedules::PowerLawSchedule;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_async-kw"))
}

fn sample_config(dir: &Path, n_cycles: u64) -> ExperimentConfig {
    ExperimentConfig {
        sim: SimConfig {
            k: 2,
            tau: 2,
            phases: vec![0, 1],
            schedule: PowerLawSchedule::new(0.75, 0.2).unwrap(),
            objective: ObjectiveSpec::PseudoHuber {
                x_star: vec![1.0, -1.0],
            },
            noise: NoiseModel::Uniform { bound: 0.1 },
            x0: vec![0.0, 0.0],
            n_cycles,
            seed: 42,
        },
        experiment: ExperimentSettings {
            replications: 1,
            delta: 0.5,
            output_dir: dir.to_path_buf(),
            emit_event_log: false,
            thresholds: Thresholds::default(),
        },
    }
}

fn write_config(dir: &Path, config: &ExperimentConfig) -> std::path::PathBuf {
    let path = dir.join("experiment.toml");
    std::fs::write(&path, config.to_toml()).unwrap();
    path
}

fn code(output: &Output) -> i32 {
    output.status.code().expect("exit code")
}

#[test]
fn run_zero_cycles_writes_single_row_csv() {
    let dir = tempfile::tempdir().unwrap();
    let config = sample_config(dir.path(), 0);
    let path = write_config(dir.path(), &config);
    let out = bin().arg("run").arg(&path).output().unwrap();
    assert_eq!(
        code(&out),
        0,
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let csv = std::fs::read_to_string(dir.path().join("trajectory_0.csv")).unwrap();
    assert_eq!(csv.lines().count(), 2);
    assert!(csv.starts_with("cycle,tick,u,f_z,"));
}

#[test]
fn reruns_produce_identical_bytes() {
    let dir_a = tempfile::tempdir().unwrap();
    let dir_b = tempfile::tempdir().unwrap();
    let config_a = sample_config(dir_a.path(), 300);
    let path_a = write_config(dir_a.path(), &config_a);
    assert_eq!(code(&bin().arg("run").arg(&path_a).output().unwrap()), 0);
    // same sim, different output dir via env override
    let out = bin()
        .arg("run")
        .arg(&path_a)
        .env("ASYNC_KW_OUT", dir_b.path())
        .output()
        .unwrap();
    assert_eq!(code(&out), 0);
    for name in ["trajectory_0.csv", "descent_0.csv"] {
        let a = std::fs::read(dir_a.path().join(name)).unwrap();
        let b = std::fs::read(dir_b.path().join(name)).unwrap();
        assert_eq!(a, b, "{name}");
    }
    assert!(dir_b.path().join("summary.json").exists());
}

#[test]
fn malformed_config_exits_1() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.toml");
    std::fs::write(&path, "this is not toml = [").unwrap();
    let out = bin().arg("run").arg(&path).output().unwrap();
    assert_eq!(code(&out), 1);

    // structurally valid TOML, inconsistent dimensions
    let mut config = sample_config(dir.path(), 10);
    config.sim.phases = vec![0];
    let path = dir.path().join("inconsistent.toml");
    std::fs::write(&path, config.to_toml()).unwrap();
    let out = bin().arg("run").arg(&path).output().unwrap();
    assert_eq!(code(&out), 1);
}

#[test]
fn invalid_schedule_requires_flag() {
    let dir = tempfile::tempdir().unwrap();
    let mut config = sample_config(dir.path(), 10);
    config.sim.schedule = PowerLawSchedule::new(0.5, 0.2).unwrap();
    let path = write_config(dir.path(), &config);
    let out = bin().arg("run").arg(&path).output().unwrap();
    assert_eq!(code(&out), 1);
    let out = bin()
        .arg("run")
        .arg(&path)
        .arg("--allow-unvalidated")
        .output()
        .unwrap();
    assert_eq!(
        code(&out),
        0,
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
}

#[test]
fn escaped_ball_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let mut config = sample_config(dir.path(), 10);
    config.sim.objective = ObjectiveSpec::Quadratic {
        x_star: vec![0.0, 0.0],
        matrix: vec![vec![1.0, 0.0], vec![0.0, 1.0]],
        ball_radius: 1e-4,
    };
    let path = write_config(dir.path(), &config);
    let out = bin().arg("run").arg(&path).output().unwrap();
    assert_eq!(
        code(&out),
        3,
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
}

#[test]
fn validate_schedule_reports_json_and_exits_0() {
    let out = bin()
        .args([
            "validate-schedule",
            "--gamma-exp",
            "0.75",
            "--eps-exp",
            "0.2",
        ])
        .output()
        .unwrap();
    assert_eq!(code(&out), 0);
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["valid"], serde_json::Value::Bool(true));

    for (g, e) in [("0.5", "0.2"), ("1.0", "0.5")] {
        let out = bin()
            .args(["validate-schedule", "--gamma-exp", g, "--eps-exp", e])
            .output()
            .unwrap();
        assert_eq!(code(&out), 0, "runs fine, validity goes in the JSON");
        let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
        assert_eq!(json["valid"], serde_json::Value::Bool(false));
    }
}

#[test]
fn validate_schedule_rejects_non_numeric_input() {
    let out = bin()
        .args([
            "validate-schedule",
            "--gamma-exp",
            "abc",
            "--eps-exp",
            "0.2",
        ])
        .output()
        .unwrap();
    assert_eq!(code(&out), 1);
}

#[test]
fn regress_exit_codes() {
    let out = bin()
        .args([
            "regress", "--mode", "kw1", "--seed", "42", "--cycles", "200",
        ])
        .output()
        .unwrap();
    assert_eq!(
        code(&out),
        0,
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );

    let out = bin()
        .args([
            "regress", "--mode", "spsa", "--seed", "7", "--cycles", "200",
        ])
        .output()
        .unwrap();
    assert_eq!(code(&out), 0);

    let out = bin()
        .args([
            "regress",
            "--mode",
            "spsa",
            "--seed",
            "7",
            "--cycles",
            "200",
            "--inject-fault",
        ])
        .output()
        .unwrap();
    assert_eq!(code(&out), 2);
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(
        stderr.contains("cycle 1"),
        "divergence cycle reported: {stderr}"
    );

    let out = bin().args(["regress", "--mode", "nope"]).output().unwrap();
    assert_eq!(code(&out), 1);
}

#[test]
fn event_log_emission_is_optional() {
    let dir = tempfile::tempdir().unwrap();
    let mut config = sample_config(dir.path(), 5);
    config.experiment.emit_event_log = true;
    let path = write_config(dir.path(), &config);
    assert_eq!(code(&bin().arg("run").arg(&path).output().unwrap()), 0);
    let events = std::fs::read_to_string(dir.path().join("events_0.csv")).unwrap();
    assert!(events.starts_with("tick,agent,cycle,action,"));
    // 2 agents x 2 events x 5 cycles, minus the phase-1 agent's inactive
    // cycle 0, plus its cycle-5 experiment landing on the final tick
    assert_eq!(events.lines().count() - 1, 2 * 5 * 2 - 2 + 1);
}

#[test]
fn summary_schema_is_documented_shape() {
    let dir = tempfile::tempdir().unwrap();
    let mut config = sample_config(dir.path(), 250);
    config.experiment.replications = 2;
    let path = write_config(dir.path(), &config);
    assert_eq!(code(&bin().arg("run").arg(&path).output().unwrap()), 0);
    let json: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("summary.json")).unwrap())
            .unwrap();
    assert_eq!(json["schema_version"], 1);
    for key in ["delta", "beta", "replications", "aggregate"] {
        assert!(json.get(key).is_some(), "missing key {key}");
    }
    let rep = &json["replications"][0];
    for key in [
        "replication",
        "seed",
        "final_u",
        "min_u",
        "max_drift_ratio",
        "median_drift_ratio",
        "gradient_bound_exceedances",
        "martingale",
        "c_decay",
    ] {
        assert!(rep.get(key).is_some(), "missing replication key {key}");
    }
    let agg = &json["aggregate"];
    for key in [
        "median_final_u",
        "martingale_consistent_count",
        "c_decay_decaying_count",
        "replication_count",
        "pass_fraction_required",
        "wall_time_secs",
    ] {
        assert!(agg.get(key).is_some(), "missing aggregate key {key}");
    }
}
