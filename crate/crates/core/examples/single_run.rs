//! One seeded run of the asynchronous algorithm, watching the distance to
//! the maximizer shrink.
//!
//! ```bash
//! cargo run --release -p async-kw --example single_run
//! ```

use async_kw::engine::{run, RunOptions, SimConfig};
use async_kw::objectives::{NoiseModel, ObjectiveSpec};
use async_kw::schedules::PowerLawSchedule;

fn main() {
    let config = SimConfig {
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
    };
    let traj = run(&config, &RunOptions::default()).expect("run");

    println!("cycle      u(n)        f(z(n))     drift ratio");
    for &n in &[0usize, 1, 3, 10, 30, 100, 300, 1000, 3000, 10_000, 20_000] {
        let rec = &traj.records[n];
        println!(
            "{:>6}  {:>10.6}  {:>10.6}  {}",
            rec.cycle,
            rec.u,
            rec.f_z,
            rec.drift_ratio
                .map(|d| format!("{d:>10.6}"))
                .unwrap_or_else(|| "         -".into()),
        );
    }
    println!();
    println!("final z = {:?}", traj.records.last().unwrap().z);
    println!(
        "estimate-range exceedances over the run: {}",
        traj.gradient_bound_exceedances
    );
}
