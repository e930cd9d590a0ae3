//! A seeded replication study through the experiment runner: per-seed
//! trajectories and descent reports as CSV, aggregate verdicts as JSON.
//!
//! ```bash
//! cargo run --release -p async-kw --example replication_study
//! # outputs land in ./out/replication_study (override with ASYNC_KW_OUT)
//! ```

use async_kw::cli::{run_experiment, ExperimentConfig, ExperimentSettings, Thresholds};
use async_kw::engine::SimConfig;
use async_kw::objectives::{NoiseModel, ObjectiveSpec};
use async_kw::schedules::PowerLawSchedule;

fn main() {
    let config = ExperimentConfig {
        sim: SimConfig {
            k: 4,
            tau: 4,
            phases: vec![0, 1, 2, 3],
            schedule: PowerLawSchedule::new(0.75, 0.2).unwrap(),
            objective: ObjectiveSpec::PseudoHuber {
                x_star: vec![1.0, -2.0, 0.5, 3.0],
            },
            noise: NoiseModel::Uniform { bound: 0.1 },
            x0: vec![0.0; 4],
            n_cycles: 20_000,
            seed: 42,
        },
        experiment: ExperimentSettings {
            replications: 8,
            delta: 0.5,
            output_dir: "out/replication_study".into(),
            emit_event_log: false,
            thresholds: Thresholds::default(),
        },
    };

    let summary = run_experiment(&config, 0, false).expect("experiment");
    println!(
        "{} replications in {:.2}s",
        summary.aggregate.replication_count, summary.aggregate.wall_time_secs
    );
    println!("rep  seed                  final u    martingale    c decay");
    for r in &summary.replications {
        println!(
            "{:>3}  {:>20}  {:>9.5}  {:<12}  {}",
            r.replication, r.seed, r.final_u, r.martingale, r.c_decay
        );
    }
    println!(
        "median final u = {:.5}; outputs in {}",
        summary.aggregate.median_final_u,
        config.resolve_output_dir().display()
    );
}
