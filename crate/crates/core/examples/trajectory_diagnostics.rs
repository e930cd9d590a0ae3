//! Descent, martingale, and small-ball diagnostics over one run.
//!
//! ```bash
//! cargo run --release -p async-kw --example trajectory_diagnostics
//! ```

use async_kw::diagnostics::{descent_report, martingale_sums, small_ball_report, BiasReport};
use async_kw::engine::{run, RunOptions, SimConfig};
use async_kw::objectives::{beta_lower_bound, NoiseModel, ObjectiveSpec};
use async_kw::schedules::PowerLawSchedule;

fn main() {
    let delta = 0.5;
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
        n_cycles: 50_000,
        seed: 42,
    };
    let obj = config.objective.build().unwrap();
    let traj = run(&config, &RunOptions::default()).expect("run");
    let beta = beta_lower_bound(obj.as_ref(), delta, 10.0).unwrap();

    let descent = descent_report(&traj, obj.as_ref(), &config.schedule, delta, beta).unwrap();
    println!(
        "descent: {} cycles above delta = {delta}, {} below (beta = {beta:.5})",
        descent.above_count(),
        descent.below_count()
    );
    let worst_slack = descent
        .rows
        .iter()
        .filter_map(|r| r.slack)
        .fold(f64::INFINITY, f64::min);
    println!("  worst descent slack among above-delta cycles: {worst_slack:.6}");

    let bias = BiasReport::from_trajectory(&traj, obj.as_ref(), &config.schedule).unwrap();
    let martingale = martingale_sums(&bias, 0.1).unwrap();
    println!(
        "martingale sums: {} (last-half oscillation {:.4}, total range {:.4}, sum kappa tail {:.4})",
        if martingale.consistent { "consistent" } else { "inconsistent" },
        martingale.oscillation_last_half,
        martingale.total_range,
        martingale.kappa_tail
    );

    match small_ball_report(&traj, delta, 0.9) {
        Ok(ball) => println!(
            "small ball: {} ({} qualifying cycles; q90 first quarter {:.2e}, last quarter {:.2e}, ceiling {:.2})",
            if ball.decaying { "decaying" } else { "non-decaying" },
            ball.entries.len(),
            ball.quantile_first,
            ball.quantile_last,
            ball.ceiling
        ),
        Err(e) => println!("small ball: {e}"),
    }
}
