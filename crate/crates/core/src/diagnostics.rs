//! Measurable convergence diagnostics over recorded trajectories.
//!
//! The convergence argument rests on a handful of quantitative claims:
//! outside a `delta`-ball the iterate descends at rate `gamma(n)*beta`
//! minus a summable residual; inside the ball the squared distance grows
//! by at most a vanishing `c(n)`; the residual partial sums behave like a
//! convergent martingale; and per-cycle estimates stay within explicit
//! bounds. None of these are provable from one finite path, but all are
//! measurable — this module turns each claim into a statistic with a
//! pre-registered verdict rule.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::engine::{SimConfig, Trajectory};
use crate::objectives::{rademacher_sign, NoiseModel, Objective};
use crate::schedules::{AgentTiming, GainSchedule};

#[derive(Debug, Error, PartialEq)]
pub enum DiagnosticsError {
    #[error("need at least {needed} qualifying cycles, got {got}")]
    InsufficientData { needed: usize, got: usize },
    #[error("exhaustive sign enumeration requires the zero noise model")]
    ExhaustiveNeedsZeroNoise,
    #[error("exhaustive sign enumeration supports at most {max} agents, got {k}")]
    TooManyAgents { k: usize, max: usize },
    #[error("agent {agent} is inactive in cycle {cycle}; its estimate is undefined")]
    InactiveCycle { agent: usize, cycle: u64 },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
}

/// Threshold below which a direction vector is treated as undefined.
const U_FLOOR: f64 = 1e-9;

/// Per-cycle residual decomposition of the gradient estimates.
///
/// `r_k(n) = epsilon(n) * (g_k(n) - grad_k f(z(n*tau)))` is the observable
/// stand-in for the zero-mean corruption term (it also absorbs the
/// deterministic `O(gamma)` and `O(eps^3)` remainders, whose weighted sums
/// are absolutely convergent for valid schedules). `S(m)` accumulates the
/// weighted projections onto the direction vector `h(n)`; if the zero-mean
/// claim holds, `S` settles like a convergent martingale.
#[derive(Debug, Clone)]
pub struct BiasReport {
    /// `r_k(n)`; NaN where the agent was inactive.
    pub residuals: Vec<Vec<f64>>,
    /// Direction cosines `h_k(n) = (z_k - x*_k)/u(n)`; zero vector when
    /// `u(n)` is numerically zero.
    pub directions: Vec<Vec<f64>>,
    /// `(gamma(n)/epsilon(n)) * sum_k h_k(n) r_k(n)`.
    pub increments: Vec<f64>,
    /// Running sums `S(m)` of the increments.
    pub running_sums: Vec<f64>,
    /// `kappa(n)` for the same cycles.
    pub kappa: Vec<f64>,
}

impl BiasReport {
    /// Residuals for every cycle with recorded estimates (all but the
    /// final boundary record).
    pub fn from_trajectory(
        traj: &Trajectory,
        obj: &dyn Objective,
        schedule: &dyn GainSchedule,
    ) -> Result<Self, DiagnosticsError> {
        if obj.dimension() != traj.k {
            return Err(DiagnosticsError::DimensionMismatch(format!(
                "objective dimension {} vs trajectory k {}",
                obj.dimension(),
                traj.k
            )));
        }
        let x_star = obj.maximizer();
        let cycles = traj.records.len().saturating_sub(1);
        let mut residuals = Vec::with_capacity(cycles);
        let mut directions = Vec::with_capacity(cycles);
        let mut increments = Vec::with_capacity(cycles);
        let mut running_sums = Vec::with_capacity(cycles);
        let mut kappa = Vec::with_capacity(cycles);
        let mut s = 0.0;
        for rec in &traj.records[..cycles] {
            let n = rec.cycle;
            let eps = schedule.epsilon(n);
            let gamma = schedule.gamma(n);
            let grad = obj.gradient(&rec.z);
            let h: Vec<f64> = if rec.u > U_FLOOR {
                rec.z
                    .iter()
                    .zip(x_star)
                    .map(|(z, xs)| (z - xs) / rec.u)
                    .collect()
            } else {
                vec![0.0; traj.k]
            };
            let r: Vec<f64> = rec
                .g
                .iter()
                .zip(&grad)
                .map(|(g, fk)| eps * (g - fk))
                .collect();
            let inc: f64 = (gamma / eps)
                * h.iter()
                    .zip(&r)
                    .filter(|(_, rk)| rk.is_finite())
                    .map(|(hk, rk)| hk * rk)
                    .sum::<f64>();
            s += inc;
            residuals.push(r);
            directions.push(h);
            increments.push(inc);
            running_sums.push(s);
            kappa.push(schedule.kappa(n));
        }
        Ok(Self {
            residuals,
            directions,
            increments,
            running_sums,
            kappa,
        })
    }
}

/// Verdict on the martingale-sum behavior of the residual projections.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MartingaleReport {
    pub consistent: bool,
    /// `max - min` of `S` over the last half of the run.
    pub oscillation_last_half: f64,
    /// `max - min` of `S` over the whole run.
    pub total_range: f64,
    /// Sum of `kappa(n)` over the whole run.
    pub kappa_total: f64,
    /// Sum of `kappa(n)` over the last half.
    pub kappa_tail: f64,
}

/// Cauchy-style convergence check on the running sums: consistent iff the
/// oscillation of `S` over the last half of the run is at most
/// `oscillation_frac` of its total range. Needs at least 200 cycles.
pub fn martingale_sums(
    report: &BiasReport,
    oscillation_frac: f64,
) -> Result<MartingaleReport, DiagnosticsError> {
    let m = report.running_sums.len();
    if m < 200 {
        return Err(DiagnosticsError::InsufficientData {
            needed: 200,
            got: m,
        });
    }
    let range = |vals: &[f64]| -> f64 {
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for &v in vals {
            lo = lo.min(v);
            hi = hi.max(v);
        }
        hi - lo
    };
    let total_range = range(&report.running_sums);
    let oscillation_last_half = range(&report.running_sums[m / 2..]);
    let kappa_total: f64 = report.kappa.iter().sum();
    let kappa_tail: f64 = report.kappa[m / 2..].iter().sum();
    Ok(MartingaleReport {
        consistent: oscillation_last_half <= oscillation_frac * total_range,
        oscillation_last_half,
        total_range,
        kappa_total,
        kappa_tail,
    })
}

/// Per-cycle descent bookkeeping split at the `delta`-threshold.
#[derive(Debug, Clone)]
pub struct DescentReport {
    pub delta: f64,
    pub beta: f64,
    pub rows: Vec<DescentRow>,
}

#[derive(Debug, Clone, Copy)]
pub struct DescentRow {
    pub cycle: u64,
    pub u: f64,
    /// `u(n) > delta`.
    pub above_delta: bool,
    /// Empirical residual `alpha_hat(n) = (gamma/eps) sum_k h_k r_k`.
    pub alpha_hat: f64,
    /// Margin by which the descent inequality holds for `u(n) > delta`:
    /// `u(n) - u(n+1) - gamma(n)*beta + alpha_hat(n)`, nonnegative when
    /// the claimed descent is achieved.
    pub slack: Option<f64>,
    /// `u^2(n+1) - u^2(n)` for `u(n) <= delta`.
    pub c_hat: Option<f64>,
}

impl DescentReport {
    pub fn above_count(&self) -> usize {
        self.rows.iter().filter(|r| r.above_delta).count()
    }

    pub fn below_count(&self) -> usize {
        self.rows.len() - self.above_count()
    }
}

/// Classify every cycle by the `delta`-threshold and measure the
/// corresponding inequality. `beta` should come from
/// [`crate::objectives::beta_lower_bound`] at the same `delta`.
pub fn descent_report(
    traj: &Trajectory,
    obj: &dyn Objective,
    schedule: &dyn GainSchedule,
    delta: f64,
    beta: f64,
) -> Result<DescentReport, DiagnosticsError> {
    let bias = BiasReport::from_trajectory(traj, obj, schedule)?;
    let mut rows = Vec::with_capacity(bias.increments.len());
    for (i, rec) in traj.records[..bias.increments.len()].iter().enumerate() {
        let u = rec.u;
        let u_next = traj.records[i + 1].u;
        let alpha_hat = bias.increments[i];
        let above = u > delta;
        let (slack, c_hat) = if above {
            let gamma = schedule.gamma(rec.cycle);
            (Some(u - u_next - gamma * beta + alpha_hat), None)
        } else {
            (None, Some(u_next * u_next - u * u))
        };
        rows.push(DescentRow {
            cycle: rec.cycle,
            u,
            above_delta: above,
            alpha_hat,
            slack,
            c_hat,
        });
    }
    Ok(DescentReport { delta, beta, rows })
}

/// The small-ball increments `c_hat(n)` and their decay verdict.
#[derive(Debug, Clone)]
pub struct SmallBallReport {
    /// `(cycle, c_hat)` for cycles with `u(n) <= delta`.
    pub entries: Vec<(u64, f64)>,
    pub decaying: bool,
    /// Chosen quantile of `|c_hat|` over the first quarter of entries.
    pub quantile_first: f64,
    /// Same quantile over the last quarter.
    pub quantile_last: f64,
    pub max_last: f64,
    /// The absolute ceiling `3 * delta^2` the last quarter must respect.
    pub ceiling: f64,
}

/// Decay check for the small-ball increments: the `quantile`-quantile of
/// `|c_hat|` over the last quarter of qualifying cycles must not exceed
/// that of the first quarter, and the last-quarter maximum must stay below
/// `3 * delta^2`. Needs at least 20 qualifying cycles.
pub fn small_ball_report(
    traj: &Trajectory,
    delta: f64,
    quantile: f64,
) -> Result<SmallBallReport, DiagnosticsError> {
    let cycles = traj.records.len().saturating_sub(1);
    let mut entries = Vec::new();
    for i in 0..cycles {
        let u = traj.records[i].u;
        if u <= delta {
            let u_next = traj.records[i + 1].u;
            entries.push((traj.records[i].cycle, u_next * u_next - u * u));
        }
    }
    if entries.len() < 20 {
        return Err(DiagnosticsError::InsufficientData {
            needed: 20,
            got: entries.len(),
        });
    }
    let quarter = entries.len().div_ceil(4);
    let abs_of =
        |slice: &[(u64, f64)]| -> Vec<f64> { slice.iter().map(|(_, c)| c.abs()).collect() };
    let first = abs_of(&entries[..quarter]);
    let last = abs_of(&entries[entries.len() - quarter..]);
    let quantile_first = nearest_rank(&first, quantile);
    let quantile_last = nearest_rank(&last, quantile);
    let max_last = last.iter().copied().fold(0.0, f64::max);
    let ceiling = 3.0 * delta * delta;
    Ok(SmallBallReport {
        decaying: quantile_last <= quantile_first && max_last <= ceiling,
        entries,
        quantile_first,
        quantile_last,
        max_last,
        ceiling,
    })
}

fn nearest_rank(values: &[f64], q: f64) -> f64 {
    let mut sorted = values.to_vec();
    sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let m = sorted.len();
    let idx = ((q * m as f64).ceil() as usize).clamp(1, m) - 1;
    sorted[idx]
}

/// A pointwise inequality violation at a recorded iterate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PointViolation {
    pub cycle: u64,
    pub lhs: f64,
    pub rhs: f64,
}

/// Check the first-order concavity gap
/// `(z - x*)' grad f(z) <= f(z) - f(x*) + tol` at every recorded iterate.
pub fn first_order_gap_violations(
    traj: &Trajectory,
    obj: &dyn Objective,
    tol: f64,
) -> Vec<PointViolation> {
    let x_star = obj.maximizer();
    let f_star = obj.value(x_star);
    let mut out = Vec::new();
    for rec in &traj.records {
        let grad = obj.gradient(&rec.z);
        let lhs: f64 = rec
            .z
            .iter()
            .zip(x_star)
            .zip(&grad)
            .map(|((z, xs), g)| (z - xs) * g)
            .sum();
        let rhs = rec.f_z - f_star + tol;
        if lhs > rhs {
            out.push(PointViolation {
                cycle: rec.cycle,
                lhs,
                rhs,
            });
        }
    }
    out
}

/// Check the strict-concavity margin
/// `f(z) <= f(x*) - beta * u(n) + tol` at every recorded iterate with
/// `u(n) >= delta`.
pub fn margin_violations(
    traj: &Trajectory,
    obj: &dyn Objective,
    delta: f64,
    beta: f64,
    tol: f64,
) -> Vec<PointViolation> {
    let f_star = obj.value(obj.maximizer());
    let mut out = Vec::new();
    for rec in &traj.records {
        if rec.u >= delta {
            let rhs = f_star - beta * rec.u + tol;
            if rec.f_z > rhs {
                out.push(PointViolation {
                    cycle: rec.cycle,
                    lhs: rec.f_z,
                    rhs,
                });
            }
        }
    }
    out
}

/// How the sign assignments for the bias oracle are generated.
#[derive(Debug, Clone, Copy)]
pub enum SignMode {
    /// Enumerate all `2^K` sign vectors with equal weight. Requires the
    /// zero noise model and at most [`EXHAUSTIVE_MAX_AGENTS`] agents.
    Exhaustive,
    /// Average over `samples` i.i.d. draws of signs (and noise, if any)
    /// from a dedicated stream seeded with `seed`.
    MonteCarlo { samples: usize, seed: u64 },
}

/// Whether updates inside the oracle block move the state.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UpdateHandling {
    /// Updates write back the pre-experiment value (the gain is treated
    /// as zero), isolating experiment-induced corruption.
    Frozen,
    /// Updates apply `gamma(n) * g` as in a live run.
    Live,
}

pub const EXHAUSTIVE_MAX_AGENTS: usize = 12;

/// Estimated expectation of the cycle-`n` gradient estimates when the
/// cycle starts cleanly from `z`.
#[derive(Debug, Clone)]
pub struct BiasEstimate {
    /// `E[g_k(n)]` per agent.
    pub mean: Vec<f64>,
    /// Standard error of each mean; zero in exhaustive mode.
    pub std_error: Vec<f64>,
}

/// Expectation of the gradient estimates `g_k(n)` over the sign (and
/// noise) draws of one cycle, holding the starting point `z` fixed.
///
/// The block is simulated in isolation: every agent runs its cycle-`n`
/// experiment and update, nothing carries over from neighboring cycles.
pub fn bias_expectation_oracle(
    obj: &dyn Objective,
    z: &[f64],
    config: &SimConfig,
    cycle: u64,
    mode: SignMode,
    updates: UpdateHandling,
) -> Result<BiasEstimate, DiagnosticsError> {
    let k = config.k;
    if z.len() != k || obj.dimension() != k {
        return Err(DiagnosticsError::DimensionMismatch(format!(
            "z has length {}, config k = {}, objective dimension {}",
            z.len(),
            k,
            obj.dimension()
        )));
    }
    let timings: Vec<AgentTiming> = config
        .phases
        .iter()
        .map(|&p| AgentTiming::new(config.tau, p).expect("validated config"))
        .collect();
    for (agent, t) in timings.iter().enumerate() {
        if !t.is_active(cycle) {
            return Err(DiagnosticsError::InactiveCycle { agent, cycle });
        }
    }

    match mode {
        SignMode::Exhaustive => {
            if k > EXHAUSTIVE_MAX_AGENTS {
                return Err(DiagnosticsError::TooManyAgents {
                    k,
                    max: EXHAUSTIVE_MAX_AGENTS,
                });
            }
            if config.noise != NoiseModel::Zero {
                return Err(DiagnosticsError::ExhaustiveNeedsZeroNoise);
            }
            let zeros = vec![0.0; k];
            let mut mean = vec![0.0; k];
            let patterns = 1usize << k;
            let mut signs = vec![0.0; k];
            for bits in 0..patterns {
                for (i, s) in signs.iter_mut().enumerate() {
                    *s = if bits >> i & 1 == 1 { 1.0 } else { -1.0 };
                }
                let g = simulate_block(
                    obj,
                    &config.schedule,
                    &timings,
                    config.tau,
                    z,
                    cycle,
                    &signs,
                    &zeros,
                    updates,
                );
                for (m, gi) in mean.iter_mut().zip(&g) {
                    *m += gi / patterns as f64;
                }
            }
            Ok(BiasEstimate {
                std_error: vec![0.0; k],
                mean,
            })
        }
        SignMode::MonteCarlo { samples, seed } => {
            if samples == 0 {
                return Err(DiagnosticsError::InsufficientData { needed: 1, got: 0 });
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut sum = vec![0.0; k];
            let mut sum_sq = vec![0.0; k];
            let mut signs = vec![0.0; k];
            let mut noises = vec![0.0; k];
            for _ in 0..samples {
                for i in 0..k {
                    signs[i] = rademacher_sign(&mut rng);
                    noises[i] = config.noise.sample(&mut rng);
                }
                let g = simulate_block(
                    obj,
                    &config.schedule,
                    &timings,
                    config.tau,
                    z,
                    cycle,
                    &signs,
                    &noises,
                    updates,
                );
                for i in 0..k {
                    sum[i] += g[i];
                    sum_sq[i] += g[i] * g[i];
                }
            }
            let m = samples as f64;
            let mean: Vec<f64> = sum.iter().map(|s| s / m).collect();
            let std_error = sum_sq
                .iter()
                .zip(&mean)
                .map(|(sq, mu)| {
                    let var = (sq / m - mu * mu).max(0.0);
                    (var / m).sqrt()
                })
                .collect();
            Ok(BiasEstimate { mean, std_error })
        }
    }
}

/// One isolated cycle with scripted signs and noise: ticks
/// `n*tau ..= (n+1)*tau`, processing only cycle-`n` events, starting from
/// a clean state `z` with nothing pending. Same tick semantics as the
/// engine: observations read the pre-write state, writes land after.
#[allow(clippy::too_many_arguments)]
fn simulate_block(
    obj: &dyn Objective,
    schedule: &dyn GainSchedule,
    timings: &[AgentTiming],
    tau: u64,
    z: &[f64],
    cycle: u64,
    signs: &[f64],
    noises: &[f64],
    updates: UpdateHandling,
) -> Vec<f64> {
    struct BlockPending {
        base: f64,
        f_before: f64,
    }
    let k = timings.len();
    let eps = schedule.epsilon(cycle);
    let gamma = schedule.gamma(cycle);
    let mut x = z.to_vec();
    let mut pending: Vec<Option<BlockPending>> = (0..k).map(|_| None).collect();
    let mut g_out = vec![f64::NAN; k];
    let mut writes: Vec<(usize, f64)> = Vec::with_capacity(k);

    for rel in 0..=tau {
        let t = cycle * tau + rel;
        writes.clear();
        let exp_agents: Vec<usize> = (0..k)
            .filter(|&a| timings[a].experiment_cycle_at(t) == Some(cycle))
            .collect();
        let upd_agents: Vec<usize> = (0..k)
            .filter(|&a| timings[a].update_cycle_at(t) == Some(cycle))
            .collect();
        if exp_agents.is_empty() && upd_agents.is_empty() {
            continue;
        }
        let f_snap = obj.value(&x);
        for &a in &upd_agents {
            let p = pending[a].take().expect("experiment precedes update");
            let g = (f_snap - p.f_before + noises[a]) / (signs[a] * eps);
            g_out[a] = g;
            let new_value = match updates {
                UpdateHandling::Live => p.base + g * gamma,
                UpdateHandling::Frozen => p.base,
            };
            writes.push((a, new_value));
        }
        for &a in &exp_agents {
            let base = x[a];
            pending[a] = Some(BlockPending {
                base,
                f_before: f_snap,
            });
            writes.push((a, base + signs[a] * eps));
        }
        for &(a, v) in &writes {
            x[a] = v;
        }
    }
    debug_assert!(g_out.iter().all(|g| g.is_finite() || g.is_nan()));
    g_out
}

/// Least-squares slope of `ln y` against `ln x`.
pub fn log_log_slope(xs: &[f64], ys: &[f64]) -> f64 {
    assert_eq!(xs.len(), ys.len());
    let n = xs.len() as f64;
    let lx: Vec<f64> = xs.iter().map(|v| v.ln()).collect();
    let ly: Vec<f64> = ys.iter().map(|v| v.ln()).collect();
    let mx = lx.iter().sum::<f64>() / n;
    let my = ly.iter().sum::<f64>() / n;
    let cov: f64 = lx.iter().zip(&ly).map(|(a, b)| (a - mx) * (b - my)).sum();
    let var: f64 = lx.iter().map(|a| (a - mx) * (a - mx)).sum();
    cov / var
}
