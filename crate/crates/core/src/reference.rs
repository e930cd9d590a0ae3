//! Standalone reference implementations of the two degenerate cases.
//!
//! With one agent the per-cycle recursion is the classic two-observation
//! finite-difference iteration; with all phases equal it is the
//! synchronous simultaneous-perturbation iteration. Both are rewritten
//! here from the recursion directly — no tick clock, no pending records —
//! sharing only the objective oracle and the per-agent RNG streams with
//! the engine. A correct engine must reproduce them bit for bit.

use rand_chacha::ChaCha8Rng;

use crate::objectives::{rademacher_sign, NoiseModel, Objective};
use crate::rng::agent_stream;
use crate::schedules::GainSchedule;

/// Single-agent iteration: perturb, observe twice, step. Returns the
/// iterate sequence `x_0, x_1, .., x_cycles`.
///
/// `shift_index_fault` deliberately evaluates the gains at `n + 1`
/// instead of `n`; it exists so regression harnesses can prove they
/// catch a divergence.
pub fn kw1_reference(
    obj: &dyn Objective,
    schedule: &dyn GainSchedule,
    noise: &NoiseModel,
    x0: f64,
    cycles: u64,
    seed: u64,
    shift_index_fault: bool,
) -> Vec<f64> {
    assert_eq!(obj.dimension(), 1, "kw1 reference is one-dimensional");
    let mut rng = agent_stream(seed, 0);
    let mut x = x0;
    let mut out = Vec::with_capacity(cycles as usize + 1);
    out.push(x);
    for n in 0..cycles {
        let idx = if shift_index_fault { n + 1 } else { n };
        let eps = schedule.epsilon(idx);
        let gamma = schedule.gamma(idx);
        let sign = rademacher_sign(&mut rng);
        let eta = noise.sample(&mut rng);
        let f_before = obj.value(&[x]);
        let perturbed = x + sign * eps;
        let f_after = obj.value(&[perturbed]);
        let g = (f_after - f_before + eta) / (sign * eps);
        x += g * gamma;
        out.push(x);
    }
    out
}

/// Synchronous simultaneous-perturbation iteration: every coordinate is
/// perturbed at once with independent signs, both observations are shared,
/// and every coordinate steps from its pre-perturbation value. Returns the
/// iterate sequence.
pub fn spsa_reference(
    obj: &dyn Objective,
    schedule: &dyn GainSchedule,
    noise: &NoiseModel,
    x0: &[f64],
    cycles: u64,
    seed: u64,
    shift_index_fault: bool,
) -> Vec<Vec<f64>> {
    let k = x0.len();
    assert_eq!(obj.dimension(), k);
    let mut rngs: Vec<ChaCha8Rng> = (0..k).map(|a| agent_stream(seed, a)).collect();
    let mut x = x0.to_vec();
    let mut out = Vec::with_capacity(cycles as usize + 1);
    out.push(x.clone());
    let mut signs = vec![0.0; k];
    let mut etas = vec![0.0; k];
    for n in 0..cycles {
        let idx = if shift_index_fault { n + 1 } else { n };
        let eps = schedule.epsilon(idx);
        let gamma = schedule.gamma(idx);
        for a in 0..k {
            signs[a] = rademacher_sign(&mut rngs[a]);
            etas[a] = noise.sample(&mut rngs[a]);
        }
        let f_before = obj.value(&x);
        let perturbed: Vec<f64> = x.iter().zip(&signs).map(|(xi, a)| xi + a * eps).collect();
        let f_after = obj.value(&perturbed);
        for i in 0..k {
            let g = (f_after - f_before + etas[i]) / (signs[i] * eps);
            x[i] += g * gamma;
        }
        out.push(x.clone());
    }
    out
}
