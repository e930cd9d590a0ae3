//! The built-in objectives and their oracles: values, gradients, the
//! sampling self-check, and the strict-concavity margin beta(delta).
//!
//! ```bash
//! cargo run -p async-kw --example objective_oracles
//! ```

use async_kw::objectives::{
    beta_lower_bound, pseudo_huber, quadratic, self_check, NoiseModel, Objective,
};
use async_kw::rng::agent_stream;

fn main() {
    let ph = pseudo_huber(vec![1.0, -2.0]).unwrap();
    println!("pseudo-Huber, maximizer (1, -2):");
    println!("  f(x*)       = {}", ph.value(ph.maximizer()));
    println!("  f(0, 0)     = {:.6}", ph.value(&[0.0, 0.0]));
    println!("  grad(0, 0)  = {:?}", ph.gradient(&[0.0, 0.0]));
    println!("  Lipschitz L = {:.6}", ph.lipschitz());

    let q = quadratic(vec![0.0, 0.0], vec![vec![2.0, 1.0], vec![1.0, 2.0]], 10.0).unwrap();
    println!("\ncoupled quadratic on a radius-10 ball:");
    println!("  f(1, 0)    = {}", q.value(&[1.0, 0.0]));
    println!("  grad(1, 1) = {:?}", q.gradient(&[1.0, 1.0]));
    println!("  ball       = {:?}", q.domain_radius());

    for (name, obj) in [("pseudo-Huber", &ph as &dyn Objective), ("quadratic", &q)] {
        match self_check(obj, 8.0, 500, 1) {
            Ok(()) => println!("\n{name}: self-check passed (concavity, gradient, Lipschitz)"),
            Err(e) => println!("\n{name}: self-check FAILED: {e}"),
        }
    }

    println!("\nstrict-concavity margins:");
    for delta in [0.25, 0.5, 1.0, 2.0] {
        let beta = beta_lower_bound(&ph, delta, 10.0 * delta).unwrap();
        println!("  beta({delta}) = {beta:.6}");
    }

    println!("\nnoise models (first draws from agent stream 0, seed 7):");
    for model in [
        NoiseModel::Zero,
        NoiseModel::Uniform { bound: 0.1 },
        NoiseModel::Rademacher { bound: 0.1 },
    ] {
        let mut rng = agent_stream(7, 0);
        let draws: Vec<f64> = (0..4).map(|_| model.sample(&mut rng)).collect();
        println!("  {model:?}: {draws:?}");
    }
}
