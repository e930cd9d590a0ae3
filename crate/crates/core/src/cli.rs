//! Experiment runner: config files, seeded replications, file outputs.
//!
//! A TOML config describes one experiment (a [`SimConfig`] plus
//! replication settings). Running it produces, per replication `r`,
//! `trajectory_<r>.csv` and `descent_<r>.csv` (plus `events_<r>.csv` when
//! the event log is enabled), and one aggregate `summary.json`. Floats in
//! the CSVs carry 17 significant digits so that reruns can be compared
//! byte for byte.

use std::path::{Path, PathBuf};
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::diagnostics::{
    descent_report, martingale_sums, small_ball_report, BiasReport, DiagnosticsError,
};
use crate::engine::{self, EngineError, Event, EventKind, RunOptions, SimConfig, Trajectory};
use crate::objectives::{beta_lower_bound, pseudo_huber, NoiseModel, ObjectiveError};
use crate::reference::{kw1_reference, spsa_reference};
use crate::rng::replication_seed;
use crate::schedules::{PowerLawSchedule, ScheduleError};

/// Environment variable that overrides the configured output directory.
pub const OUTPUT_DIR_ENV: &str = "ASYNC_KW_OUT";

/// Schema version stamped into `summary.json`.
pub const SUMMARY_SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read config {path}: {source}")]
    ReadConfig {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("malformed config: {0}")]
    ParseConfig(#[from] toml::de::Error),
    #[error("invalid config: {0}")]
    InvalidConfig(String),
    #[error("schedule fails the validity conditions; rerun with --allow-unvalidated to override")]
    InvalidSchedule,
    #[error(transparent)]
    Engine(EngineError),
    #[error(transparent)]
    Objective(#[from] ObjectiveError),
    #[error(transparent)]
    Schedule(#[from] ScheduleError),
    #[error(transparent)]
    Diagnostics(#[from] DiagnosticsError),
    #[error("io error on {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("trajectories diverge from the {mode} reference at cycle {cycle}")]
    RegressionMismatch { mode: String, cycle: u64 },
}

impl From<EngineError> for CliError {
    fn from(e: EngineError) -> Self {
        match e {
            EngineError::InvalidSchedule => CliError::InvalidSchedule,
            other => CliError::Engine(other),
        }
    }
}

impl CliError {
    /// Process exit code: 1 config problems, 2 invariant breaches
    /// (including regression mismatches), 3 escaped-ball aborts, 4 I/O.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::ReadConfig { .. }
            | CliError::ParseConfig(_)
            | CliError::InvalidConfig(_)
            | CliError::InvalidSchedule
            | CliError::Objective(_)
            | CliError::Schedule(_)
            | CliError::Diagnostics(_) => 1,
            CliError::Engine(EngineError::EscapedBall { .. }) => 3,
            CliError::Engine(_) => 2,
            CliError::RegressionMismatch { .. } => 2,
            CliError::Io { .. } => 4,
        }
    }
}

/// Verdict thresholds; fixed up front in the config, never tuned per run.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct Thresholds {
    /// Max allowed oscillation of the residual sums over the last half of
    /// a run, as a fraction of their total range.
    pub martingale_oscillation_frac: f64,
    /// Fraction of replications that must pass each statistical verdict.
    pub pass_fraction: f64,
    /// Quantile compared between the first and last quarter of small-ball
    /// increments.
    pub c_decay_quantile: f64,
}

impl Default for Thresholds {
    fn default() -> Self {
        Self {
            martingale_oscillation_frac: 0.1,
            pass_fraction: 0.9,
            c_decay_quantile: 0.9,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentSettings {
    pub replications: u32,
    pub delta: f64,
    pub output_dir: PathBuf,
    #[serde(default)]
    pub emit_event_log: bool,
    #[serde(default)]
    pub thresholds: Thresholds,
}

/// One experiment: a simulation config plus replication settings.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentConfig {
    pub sim: SimConfig,
    pub experiment: ExperimentSettings,
}

impl ExperimentConfig {
    pub fn from_toml(text: &str) -> Result<Self, CliError> {
        let config: ExperimentConfig = toml::from_str(text)?;
        config.validate()?;
        Ok(config)
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::ReadConfig {
            path: path.to_path_buf(),
            source,
        })?;
        Self::from_toml(&text)
    }

    pub fn to_toml(&self) -> String {
        toml::to_string_pretty(self).expect("config serializes")
    }

    pub fn validate(&self) -> Result<(), CliError> {
        self.sim
            .validate()
            .map_err(|e| CliError::InvalidConfig(e.to_string()))?;
        let s = &self.experiment;
        if s.replications == 0 {
            return Err(CliError::InvalidConfig("replications must be >= 1".into()));
        }
        if !(s.delta.is_finite() && s.delta > 0.0) {
            return Err(CliError::InvalidConfig("delta must be positive".into()));
        }
        let t = s.thresholds;
        for (name, v) in [
            ("martingale_oscillation_frac", t.martingale_oscillation_frac),
            ("pass_fraction", t.pass_fraction),
            ("c_decay_quantile", t.c_decay_quantile),
        ] {
            if !(v > 0.0 && v < 1.0) {
                return Err(CliError::InvalidConfig(format!(
                    "threshold {name} must lie in (0, 1), got {v}"
                )));
            }
        }
        Ok(())
    }

    /// The effective output directory: [`OUTPUT_DIR_ENV`] wins over the
    /// config value.
    pub fn resolve_output_dir(&self) -> PathBuf {
        match std::env::var_os(OUTPUT_DIR_ENV) {
            Some(dir) if !dir.is_empty() => PathBuf::from(dir),
            _ => self.experiment.output_dir.clone(),
        }
    }
}

/// Per-replication results recorded in `summary.json`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ReplicationSummary {
    pub replication: u32,
    pub seed: u64,
    pub final_u: f64,
    pub min_u: f64,
    /// Max of `||w(n)|| eps(n)/gamma(n)` over cycles `n >= 10`.
    pub max_drift_ratio: f64,
    /// Median of the same sequence.
    pub median_drift_ratio: f64,
    /// Updates whose estimate exceeded the single-agent range
    /// `L + G/eps(n)`.
    pub gradient_bound_exceedances: u64,
    /// "consistent" | "inconsistent" | "insufficient_data".
    pub martingale: String,
    /// "decaying" | "non_decaying" | "insufficient_data".
    pub c_decay: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AggregateSummary {
    pub median_final_u: f64,
    pub martingale_consistent_count: u32,
    pub c_decay_decaying_count: u32,
    pub replication_count: u32,
    pub pass_fraction_required: f64,
    pub wall_time_secs: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RunSummary {
    pub schema_version: u32,
    pub delta: f64,
    pub beta: f64,
    pub replications: Vec<ReplicationSummary>,
    pub aggregate: AggregateSummary,
}

/// Run every replication (in parallel up to `jobs` threads; 0 means the
/// rayon default), write per-replication CSVs and the aggregate summary
/// into the resolved output directory, and return the summary.
pub fn run_experiment(
    config: &ExperimentConfig,
    jobs: usize,
    allow_unvalidated: bool,
) -> Result<RunSummary, CliError> {
    config.validate()?;
    if !allow_unvalidated && !config.sim.schedule.report().valid {
        return Err(CliError::InvalidSchedule);
    }
    let out_dir = config.resolve_output_dir();
    std::fs::create_dir_all(&out_dir).map_err(|source| CliError::Io {
        path: out_dir.clone(),
        source,
    })?;

    let objective = config.sim.objective.build()?;
    let delta = config.experiment.delta;
    let beta = beta_lower_bound(objective.as_ref(), delta, (10.0 * delta).max(10.0))?;
    let start = Instant::now();

    let run_one = |r: u32| -> Result<ReplicationSummary, CliError> {
        let mut sim = config.sim.clone();
        sim.seed = replication_seed(config.sim.seed, r as u64);
        let options = RunOptions {
            record_events: config.experiment.emit_event_log,
            allow_unvalidated,
        };
        let traj = engine::run(&sim, &options)?;
        let obj = sim.objective.build()?;

        write_trajectory_csv(&out_dir.join(format!("trajectory_{r}.csv")), &traj)?;
        let descent = descent_report(&traj, obj.as_ref(), &sim.schedule, delta, beta)?;
        write_descent_csv(&out_dir.join(format!("descent_{r}.csv")), &descent.rows)?;
        if let Some(events) = &traj.events {
            write_events_csv(&out_dir.join(format!("events_{r}.csv")), events)?;
        }

        let thresholds = config.experiment.thresholds;
        let martingale = match BiasReport::from_trajectory(&traj, obj.as_ref(), &sim.schedule)
            .map(|bias| martingale_sums(&bias, thresholds.martingale_oscillation_frac))
        {
            Ok(Ok(v)) if v.consistent => "consistent".to_string(),
            Ok(Ok(_)) => "inconsistent".to_string(),
            Ok(Err(DiagnosticsError::InsufficientData { .. })) => "insufficient_data".to_string(),
            Ok(Err(e)) => return Err(e.into()),
            Err(e) => return Err(e.into()),
        };
        let c_decay = match small_ball_report(&traj, delta, thresholds.c_decay_quantile) {
            Ok(v) if v.decaying => "decaying".to_string(),
            Ok(_) => "non_decaying".to_string(),
            Err(DiagnosticsError::InsufficientData { .. }) => "insufficient_data".to_string(),
            Err(e) => return Err(e.into()),
        };

        let ratios: Vec<f64> = traj
            .records
            .iter()
            .filter(|rec| rec.cycle >= 10)
            .filter_map(|rec| rec.drift_ratio)
            .collect();
        Ok(ReplicationSummary {
            replication: r,
            seed: sim.seed,
            final_u: traj.final_u(),
            min_u: traj.min_u(),
            max_drift_ratio: ratios.iter().copied().fold(f64::NAN, f64::max),
            median_drift_ratio: median(&ratios),
            gradient_bound_exceedances: traj.gradient_bound_exceedances,
            martingale,
            c_decay,
        })
    };

    let indices: Vec<u32> = (0..config.experiment.replications).collect();
    let results: Vec<Result<ReplicationSummary, CliError>> = if jobs == 1 {
        indices.iter().map(|&r| run_one(r)).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .expect("thread pool");
        pool.install(|| indices.par_iter().map(|&r| run_one(r)).collect())
    };
    let mut replications = Vec::with_capacity(results.len());
    for r in results {
        replications.push(r?);
    }

    let finals: Vec<f64> = replications.iter().map(|r| r.final_u).collect();
    let aggregate = AggregateSummary {
        median_final_u: median(&finals),
        martingale_consistent_count: replications
            .iter()
            .filter(|r| r.martingale == "consistent")
            .count() as u32,
        c_decay_decaying_count: replications
            .iter()
            .filter(|r| r.c_decay == "decaying")
            .count() as u32,
        replication_count: replications.len() as u32,
        pass_fraction_required: config.experiment.thresholds.pass_fraction,
        wall_time_secs: start.elapsed().as_secs_f64(),
    };
    let summary = RunSummary {
        schema_version: SUMMARY_SCHEMA_VERSION,
        delta,
        beta,
        replications,
        aggregate,
    };
    let path = out_dir.join("summary.json");
    let mut json = serde_json::to_string_pretty(&summary).expect("summary serializes");
    json.push('\n');
    std::fs::write(&path, json).map_err(|source| CliError::Io { path, source })?;
    Ok(summary)
}

fn median(values: &[f64]) -> f64 {
    if values.is_empty() {
        return f64::NAN;
    }
    let mut sorted = values.to_vec();
    sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let m = sorted.len();
    if m % 2 == 1 {
        sorted[m / 2]
    } else {
        0.5 * (sorted[m / 2 - 1] + sorted[m / 2])
    }
}

/// 17 significant digits: enough to reconstruct the exact f64, so equal
/// bytes mean equal values and vice versa.
pub fn fmt_float(v: f64) -> String {
    if v.is_nan() {
        String::new()
    } else {
        format!("{v:.16e}")
    }
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    std::fs::write(path, contents).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Columns: `cycle, tick, u, f_z, z_1..z_K, g_1..g_K, drift_ratio`.
pub fn write_trajectory_csv(path: &Path, traj: &Trajectory) -> Result<(), CliError> {
    let mut out = String::new();
    out.push_str("cycle,tick,u,f_z");
    for i in 1..=traj.k {
        out.push_str(&format!(",z_{i}"));
    }
    for i in 1..=traj.k {
        out.push_str(&format!(",g_{i}"));
    }
    out.push_str(",drift_ratio\n");
    for rec in &traj.records {
        out.push_str(&format!("{},{}", rec.cycle, rec.tick));
        out.push(',');
        out.push_str(&fmt_float(rec.u));
        out.push(',');
        out.push_str(&fmt_float(rec.f_z));
        for z in &rec.z {
            out.push(',');
            out.push_str(&fmt_float(*z));
        }
        for g in &rec.g {
            out.push(',');
            out.push_str(&fmt_float(*g));
        }
        out.push(',');
        out.push_str(&fmt_float(rec.drift_ratio.unwrap_or(f64::NAN)));
        out.push('\n');
    }
    write_file(path, &out)
}

/// Columns: `cycle, u, above_delta, alpha_hat, slack, c_hat`.
pub fn write_descent_csv(
    path: &Path,
    rows: &[crate::diagnostics::DescentRow],
) -> Result<(), CliError> {
    let mut out = String::from("cycle,u,above_delta,alpha_hat,slack,c_hat\n");
    for row in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            row.cycle,
            fmt_float(row.u),
            row.above_delta,
            fmt_float(row.alpha_hat),
            fmt_float(row.slack.unwrap_or(f64::NAN)),
            fmt_float(row.c_hat.unwrap_or(f64::NAN)),
        ));
    }
    write_file(path, &out)
}

/// Columns: `tick, agent, cycle, action, sign, epsilon, f_before,
/// gradient_estimate, gamma, new_value`.
pub fn write_events_csv(path: &Path, events: &[Event]) -> Result<(), CliError> {
    let mut out = String::from(
        "tick,agent,cycle,action,sign,epsilon,f_before,gradient_estimate,gamma,new_value\n",
    );
    for ev in events {
        match ev.kind {
            EventKind::Experiment {
                sign,
                epsilon,
                f_before,
                new_value,
            } => out.push_str(&format!(
                "{},{},{},experiment,{},{},{},,,{}\n",
                ev.tick,
                ev.agent,
                ev.cycle,
                fmt_float(sign),
                fmt_float(epsilon),
                fmt_float(f_before),
                fmt_float(new_value),
            )),
            EventKind::Update {
                gradient_estimate,
                gamma,
                new_value,
            } => out.push_str(&format!(
                "{},{},{},update,,,,{},{},{}\n",
                ev.tick,
                ev.agent,
                ev.cycle,
                fmt_float(gradient_estimate),
                fmt_float(gamma),
                fmt_float(new_value),
            )),
        }
    }
    write_file(path, &out)
}

/// JSON payload for `validate-schedule`.
#[derive(Debug, Serialize)]
pub struct ScheduleVerdict {
    pub gamma_exponent: f64,
    pub epsilon_exponent: f64,
    pub index_shift: u64,
    #[serde(flatten)]
    pub report: crate::schedules::ScheduleReport,
}

/// Build the validate-schedule verdict; errors only on invalid exponents.
pub fn validate_schedule(
    gamma_exponent: f64,
    epsilon_exponent: f64,
    index_shift: u64,
) -> Result<ScheduleVerdict, CliError> {
    let schedule = PowerLawSchedule::with_shift(gamma_exponent, epsilon_exponent, index_shift)?;
    Ok(ScheduleVerdict {
        gamma_exponent,
        epsilon_exponent,
        index_shift,
        report: schedule.report(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RegressMode {
    Kw1,
    Spsa,
}

impl RegressMode {
    pub fn as_str(&self) -> &'static str {
        match self {
            RegressMode::Kw1 => "kw1",
            RegressMode::Spsa => "spsa",
        }
    }
}

/// Run the engine in a degenerate configuration next to the standalone
/// reference on the same RNG streams and demand a bit-exact match.
/// `inject_fault` shifts the reference's cycle index by one, which must be
/// reported as a mismatch at cycle 1.
pub fn regress(
    mode: RegressMode,
    seed: u64,
    cycles: u64,
    inject_fault: bool,
) -> Result<(), CliError> {
    let schedule = PowerLawSchedule::new(0.75, 0.2).expect("reference schedule");
    let noise = NoiseModel::Uniform { bound: 0.1 };
    let (config, reference): (SimConfig, Vec<Vec<f64>>) = match mode {
        RegressMode::Kw1 => {
            let x_star = vec![1.0];
            let obj = pseudo_huber(x_star.clone()).unwrap();
            let reference = kw1_reference(&obj, &schedule, &noise, 0.0, cycles, seed, inject_fault)
                .into_iter()
                .map(|x| vec![x])
                .collect();
            (
                SimConfig {
                    k: 1,
                    tau: 2,
                    phases: vec![0],
                    schedule,
                    objective: crate::objectives::ObjectiveSpec::PseudoHuber { x_star },
                    noise,
                    x0: vec![0.0],
                    n_cycles: cycles,
                    seed,
                },
                reference,
            )
        }
        RegressMode::Spsa => {
            let x_star = vec![1.0, -0.5, 2.0];
            let obj = pseudo_huber(x_star.clone()).unwrap();
            let x0 = vec![0.0; 3];
            let reference =
                spsa_reference(&obj, &schedule, &noise, &x0, cycles, seed, inject_fault);
            (
                SimConfig {
                    k: 3,
                    tau: 2,
                    phases: vec![0, 0, 0],
                    schedule,
                    objective: crate::objectives::ObjectiveSpec::PseudoHuber { x_star },
                    noise,
                    x0,
                    n_cycles: cycles,
                    seed,
                },
                reference,
            )
        }
    };
    let traj = engine::run(&config, &RunOptions::default())?;
    for (n, want) in reference.iter().enumerate() {
        let got = &traj.records[n].z;
        let matches = got
            .iter()
            .zip(want)
            .all(|(a, b)| a.to_bits() == b.to_bits());
        if !matches {
            return Err(CliError::RegressionMismatch {
                mode: mode.as_str().to_string(),
                cycle: n as u64,
            });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::objectives::ObjectiveSpec;

    fn sample_config(dir: &Path) -> ExperimentConfig {
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
                n_cycles: 50,
                seed: 42,
            },
            experiment: ExperimentSettings {
                replications: 2,
                delta: 0.5,
                output_dir: dir.to_path_buf(),
                emit_event_log: false,
                thresholds: Thresholds::default(),
            },
        }
    }

    #[test]
    fn config_round_trip_is_idempotent() {
        let dir = tempfile::tempdir().unwrap();
        let config = sample_config(dir.path());
        let text = config.to_toml();
        let parsed = ExperimentConfig::from_toml(&text).unwrap();
        assert_eq!(parsed, config);
        assert_eq!(parsed.to_toml(), text);
    }

    #[test]
    fn config_validation_rejects_bad_thresholds() {
        let dir = tempfile::tempdir().unwrap();
        let mut config = sample_config(dir.path());
        config.experiment.thresholds.pass_fraction = 1.5;
        assert!(matches!(config.validate(), Err(CliError::InvalidConfig(_))));
        let mut config = sample_config(dir.path());
        config.experiment.replications = 0;
        assert!(config.validate().is_err());
    }

    #[test]
    fn run_experiment_writes_expected_files() {
        let dir = tempfile::tempdir().unwrap();
        let config = sample_config(dir.path());
        let summary = run_experiment(&config, 1, false).unwrap();
        assert_eq!(summary.replications.len(), 2);
        assert!(dir.path().join("trajectory_0.csv").exists());
        assert!(dir.path().join("trajectory_1.csv").exists());
        assert!(dir.path().join("descent_0.csv").exists());
        assert!(dir.path().join("summary.json").exists());
        // aggregate is a pure function of the per-replication records
        let finals: Vec<f64> = summary.replications.iter().map(|r| r.final_u).collect();
        assert_eq!(summary.aggregate.median_final_u, median(&finals));
    }

    #[test]
    fn trajectory_csv_schema_is_stable() {
        let dir = tempfile::tempdir().unwrap();
        let config = sample_config(dir.path());
        run_experiment(&config, 1, false).unwrap();
        let text = std::fs::read_to_string(dir.path().join("trajectory_0.csv")).unwrap();
        let header = text.lines().next().unwrap();
        assert_eq!(header, "cycle,tick,u,f_z,z_1,z_2,g_1,g_2,drift_ratio");
        assert_eq!(text.lines().count(), 1 + 51); // header + N+1 records
    }

    #[test]
    fn reruns_are_byte_identical() {
        let dir_a = tempfile::tempdir().unwrap();
        let dir_b = tempfile::tempdir().unwrap();
        let mut config = sample_config(dir_a.path());
        run_experiment(&config, 1, false).unwrap();
        config.experiment.output_dir = dir_b.path().to_path_buf();
        run_experiment(&config, 2, false).unwrap();
        for name in [
            "trajectory_0.csv",
            "trajectory_1.csv",
            "descent_0.csv",
            "descent_1.csv",
        ] {
            let a = std::fs::read(dir_a.path().join(name)).unwrap();
            let b = std::fs::read(dir_b.path().join(name)).unwrap();
            assert_eq!(a, b, "{name} differs between reruns");
        }
    }

    #[test]
    fn zero_cycle_run_has_single_row() {
        let dir = tempfile::tempdir().unwrap();
        let mut config = sample_config(dir.path());
        config.sim.n_cycles = 0;
        config.experiment.replications = 1;
        run_experiment(&config, 1, false).unwrap();
        let text = std::fs::read_to_string(dir.path().join("trajectory_0.csv")).unwrap();
        assert_eq!(text.lines().count(), 2); // header + cycle 0
    }

    #[test]
    fn invalid_schedule_is_refused_without_flag() {
        let dir = tempfile::tempdir().unwrap();
        let mut config = sample_config(dir.path());
        config.sim.schedule = PowerLawSchedule::new(0.5, 0.2).unwrap();
        assert!(matches!(
            run_experiment(&config, 1, false),
            Err(CliError::InvalidSchedule)
        ));
        assert!(run_experiment(&config, 1, true).is_ok());
    }

    #[test]
    fn regress_passes_clean_and_catches_injected_fault() {
        regress(RegressMode::Kw1, 42, 100, false).unwrap();
        regress(RegressMode::Spsa, 7, 100, false).unwrap();
        match regress(RegressMode::Spsa, 7, 100, true) {
            Err(CliError::RegressionMismatch { cycle, .. }) => assert_eq!(cycle, 1),
            other => panic!("expected mismatch, got {other:?}"),
        }
    }

    #[test]
    fn schedule_verdict_serializes_flat() {
        let v = validate_schedule(0.75, 0.2, 1).unwrap();
        let json = serde_json::to_value(&v).unwrap();
        assert_eq!(json["valid"], serde_json::Value::Bool(true));
        assert_eq!(json["gamma_exponent"], 0.75);
        assert!(validate_schedule(-1.0, 0.2, 1).is_err());
    }

    #[test]
    fn float_format_round_trips_exactly() {
        for v in [0.125, -3.5e-7, 1.0 / 3.0, 2.0f64.sqrt(), 1e300] {
            let s = fmt_float(v);
            let back: f64 = s.parse().unwrap();
            assert_eq!(back.to_bits(), v.to_bits(), "{s}");
        }
        assert_eq!(fmt_float(f64::NAN), "");
    }
}
