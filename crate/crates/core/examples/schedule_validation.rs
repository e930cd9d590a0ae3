//! Check gain/perturbation exponent pairs against the validity conditions.
//!
//! ```bash
//! cargo run -p async-kw --example schedule_validation
//! ```

use async_kw::schedules::{GainSchedule, PowerLawSchedule};

fn main() {
    println!("g      e      sum g^2/e^2  sum g*e^2  g/e^2 bdd  sum g inf  valid");
    for &g in &[0.5, 0.75, 1.0, 1.2] {
        for &e in &[0.1, 0.2, 0.5] {
            let schedule = PowerLawSchedule::new(g, e).unwrap();
            let r = schedule.report();
            println!(
                "{:<5}  {:<5}  {:<11}  {:<9}  {:<9}  {:<9}  {}",
                g,
                e,
                r.sum_gamma2_over_eps2_finite,
                r.sum_gamma_eps2_finite,
                r.gamma_over_eps2_bounded,
                r.sum_gamma_infinite,
                if r.valid { "VALID" } else { "-" },
            );
        }
    }

    let reference = PowerLawSchedule::new(0.75, 0.2).unwrap();
    println!("\nreference pair (0.75, 0.2):");
    println!(
        "  gamma(0..5)   = {:?}",
        (0..6).map(|n| reference.gamma(n)).collect::<Vec<_>>()
    );
    println!(
        "  epsilon(0..5) = {:?}",
        (0..6).map(|n| reference.epsilon(n)).collect::<Vec<_>>()
    );
    println!(
        "  rho(10) = {:.6}, kappa(10) = {:.6}",
        reference.rho(10),
        reference.kappa(10)
    );
}
