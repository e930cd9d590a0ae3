//! Driving the engine tick by tick with a user-supplied gain sequence.
//! Custom sequences carry no validity report, so the run must opt in.
//!
//! ```bash
//! cargo run -p async-kw --example custom_schedule
//! ```

use std::sync::Arc;

use async_kw::engine::{run_engine, Engine, RunOptions};
use async_kw::objectives::{pseudo_huber, NoiseModel};
use async_kw::schedules::{ExplicitSchedule, GainSchedule};

fn main() {
    // geometric-ish gains instead of the power-law family
    let schedule = Arc::new(ExplicitSchedule::from_fns(
        |n| 0.5 * 0.999f64.powi(n as i32),
        |n| (0.3 * 0.9995f64.powi(n as i32)).max(0.01),
    ));
    println!(
        "validated: {} (custom sequences carry no report)",
        schedule.validation().is_some()
    );

    let objective = Arc::new(pseudo_huber(vec![1.0, -1.0, 0.5]).unwrap());
    let mut engine = Engine::from_parts(
        objective,
        schedule,
        3,
        &[0, 1, 2],
        NoiseModel::Uniform { bound: 0.05 },
        vec![0.0; 3],
        2024,
    )
    .unwrap();

    // manual stepping exposes the in-flight state
    let mut events = Vec::new();
    for _ in 0..6 {
        engine.step(&mut events).unwrap();
        let pending: Vec<Option<u64>> = (0..3).map(|k| engine.pending_cycle(k)).collect();
        println!(
            "tick {}: x = {:?}, z = {:?}, pending cycles = {:?}",
            engine.tick(),
            engine.x(),
            engine.derive_z(),
            pending
        );
    }

    // or hand the rest to the driver (opting in to the unvalidated gains)
    let options = RunOptions {
        allow_unvalidated: true,
        ..Default::default()
    };
    let already = engine.tick() / 3;
    let traj = run_engine(&mut engine, 3000 - already, &options).unwrap();
    println!(
        "\nafter {} more cycles: u = {:.4}",
        traj.records.len() - 1,
        traj.final_u()
    );
}
