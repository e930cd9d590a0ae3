//! Measure the bias of the gradient estimates with the exhaustive sign
//! oracle: with updates frozen the bias shrinks like eps^2, and the
//! Monte-Carlo oracle agrees with the exact enumeration.
//!
//! ```bash
//! cargo run -p async-kw --example bias_oracle
//! ```

use async_kw::diagnostics::{bias_expectation_oracle, log_log_slope, SignMode, UpdateHandling};
use async_kw::engine::SimConfig;
use async_kw::objectives::{NoiseModel, ObjectiveSpec};
use async_kw::schedules::{GainSchedule, PowerLawSchedule};

fn config_with_shift(shift: u64) -> SimConfig {
    SimConfig {
        k: 2,
        tau: 3,
        phases: vec![0, 1],
        // shifting the power law dials in the epsilon used at cycle 0
        schedule: PowerLawSchedule::with_shift(3.0, 1.0, shift).unwrap(),
        objective: ObjectiveSpec::PseudoHuber {
            x_star: vec![0.0, 0.0],
        },
        noise: NoiseModel::Zero,
        x0: vec![1.0, 1.0],
        n_cycles: 1,
        seed: 0,
    }
}

fn main() {
    let z = [1.0, 1.0];
    let mut eps_values = Vec::new();
    let mut biases = Vec::new();

    println!("frozen updates, exhaustive signs, z = (1, 1):");
    println!("eps      E[g_1]        true grad_1   |bias|");
    for shift in [5u64, 10, 20, 40] {
        let config = config_with_shift(shift);
        let obj = config.objective.build().unwrap();
        let est = bias_expectation_oracle(
            obj.as_ref(),
            &z,
            &config,
            0,
            SignMode::Exhaustive,
            UpdateHandling::Frozen,
        )
        .unwrap();
        let grad = obj.gradient(&z);
        let eps = config.schedule.epsilon(0);
        let bias = (est.mean[0] - grad[0]).abs();
        println!(
            "{:<7.4}  {:<12.8}  {:<12.8}  {:.3e}",
            eps, est.mean[0], grad[0], bias
        );
        eps_values.push(eps);
        biases.push(bias);
    }
    println!(
        "log-log slope of |bias| vs eps: {:.4} (expect ~2)",
        log_log_slope(&eps_values, &biases)
    );

    let config = config_with_shift(5);
    let obj = config.objective.build().unwrap();
    let exact = bias_expectation_oracle(
        obj.as_ref(),
        &z,
        &config,
        0,
        SignMode::Exhaustive,
        UpdateHandling::Live,
    )
    .unwrap();
    let mc = bias_expectation_oracle(
        obj.as_ref(),
        &z,
        &config,
        0,
        SignMode::MonteCarlo {
            samples: 50_000,
            seed: 9,
        },
        UpdateHandling::Live,
    )
    .unwrap();
    println!("\nlive updates, eps = 0.2:");
    for k in 0..2 {
        println!(
            "agent {k}: exhaustive {:.8}, monte-carlo {:.8} +- {:.1e}",
            exact.mean[k], mc.mean[k], mc.std_error[k]
        );
    }
}
