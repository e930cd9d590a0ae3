//! The asynchronous tick-clock simulation engine.
//!
//! `K` agents each own one coordinate of the variable vector `x`. On its
//! own phase within every cycle of `tau` ticks, agent `k` first
//! *experiments* (perturbs its coordinate by `a_k(n) * epsilon(n)` with a
//! Rademacher sign and observes the function before the write), then one
//! tick later *updates*: it observes the function again, forms the divided
//! difference
//!
//! ```text
//! g_k(n) = (f_after - f_before + eta_k(n)) / (a_k(n) * epsilon(n))
//! ```
//!
//! and moves its coordinate by `gamma(n) * g_k(n)` from the pre-experiment
//! value. Agents never communicate; each estimate is corrupted by whatever
//! the other agents did between the two observations.
//!
//! Within a tick, all function observations read the previous tick's state
//! and all writes go to distinct coordinates, so a run is deterministic
//! given the seed.

use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::objectives::{
    euclidean_norm, rademacher_sign, NoiseModel, Objective, ObjectiveError, ObjectiveSpec,
};
use crate::rng::agent_stream;
use crate::schedules::{AgentTiming, GainSchedule, PowerLawSchedule, ScheduleError};

#[derive(Debug, Error)]
pub enum EngineError {
    #[error("invalid config: {0}")]
    Config(String),
    #[error(transparent)]
    Objective(#[from] ObjectiveError),
    #[error(transparent)]
    Schedule(#[from] ScheduleError),
    #[error(
        "schedule fails the validity conditions (or is unvalidated); opt in with allow_unvalidated"
    )]
    InvalidSchedule,
    #[error("agent {agent} hit update tick {tick} with no pending experiment")]
    StalePending { agent: usize, tick: u64 },
    #[error(
        "gradient estimate out of range for agent {agent}, cycle {cycle}: |g| = {g} > {bound}"
    )]
    GradientBound {
        agent: usize,
        cycle: u64,
        g: f64,
        bound: f64,
    },
    #[error("state escaped the declared ball at tick {tick}: distance {dist} > radius {radius}")]
    EscapedBall { tick: u64, dist: f64, radius: f64 },
}

/// Complete description of one run. Serializable; the objective and
/// schedule are recipes, not live objects.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SimConfig {
    /// Number of agents; equals the objective dimension.
    pub k: usize,
    /// Ticks per cycle, at least 2.
    pub tau: u64,
    /// Per-agent phase in `{0, .., tau-1}`. Phases may be shared.
    pub phases: Vec<u64>,
    pub schedule: PowerLawSchedule,
    pub objective: ObjectiveSpec,
    pub noise: NoiseModel,
    /// Initial variable vector.
    pub x0: Vec<f64>,
    /// Cycle budget `N`; the run executes ticks `0..=N*tau`.
    pub n_cycles: u64,
    pub seed: u64,
}

impl SimConfig {
    pub fn validate(&self) -> Result<(), EngineError> {
        if self.k == 0 {
            return Err(EngineError::Config("k must be at least 1".into()));
        }
        if self.tau < 2 {
            return Err(EngineError::Config(format!(
                "tau must be at least 2, got {}",
                self.tau
            )));
        }
        if self.phases.len() != self.k {
            return Err(EngineError::Config(format!(
                "phases has length {}, expected k = {}",
                self.phases.len(),
                self.k
            )));
        }
        if let Some(p) = self.phases.iter().find(|&&p| p >= self.tau) {
            return Err(EngineError::Config(format!(
                "phase {} out of range for tau {}",
                p, self.tau
            )));
        }
        if self.x0.len() != self.k {
            return Err(EngineError::Config(format!(
                "x0 has length {}, expected k = {}",
                self.x0.len(),
                self.k
            )));
        }
        if self.x0.iter().any(|v| !v.is_finite()) {
            return Err(EngineError::Config("x0 must be finite".into()));
        }
        if self.objective.dimension() != self.k {
            return Err(EngineError::Config(format!(
                "objective dimension {} does not match k = {}",
                self.objective.dimension(),
                self.k
            )));
        }
        self.noise.validate()?;
        Ok(())
    }
}

/// What happened on one tick, for the event log.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Event {
    pub tick: u64,
    pub agent: usize,
    pub cycle: u64,
    pub kind: EventKind,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum EventKind {
    Experiment {
        sign: f64,
        epsilon: f64,
        f_before: f64,
        new_value: f64,
    },
    Update {
        gradient_estimate: f64,
        gamma: f64,
        new_value: f64,
    },
}

/// In-flight experiment of one agent, carried from its experiment tick to
/// its update tick.
#[derive(Debug, Clone, Copy)]
struct Pending {
    cycle: u64,
    sign: f64,
    noise: f64,
    /// Pre-experiment coordinate value; the update is applied to this.
    base: f64,
    f_before: f64,
    /// `||x(m+1) - x(m)||` over the experiment tick, for the estimate
    /// range check.
    window_dist: f64,
}

/// Per-cycle snapshot taken at the tick boundaries `n * tau`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CycleRecord {
    pub cycle: u64,
    pub tick: u64,
    /// Clean iterate `z(n*tau)`: latest updated values, in-flight
    /// perturbations stripped.
    pub z: Vec<f64>,
    /// `u(n) = ||z(n*tau) - x*||`.
    pub u: f64,
    pub f_z: f64,
    /// Gradient estimates `g_k(n)`; NaN where the agent was inactive or
    /// the run stopped before the update.
    pub g: Vec<f64>,
    /// Per-cycle displacement `w(n) = z((n+1)*tau) - z(n*tau)`.
    pub w: Option<Vec<f64>>,
    /// `||w(n)|| * epsilon(n) / gamma(n)`.
    pub drift_ratio: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Trajectory {
    pub k: usize,
    pub tau: u64,
    pub records: Vec<CycleRecord>,
    /// Full event log, when requested.
    pub events: Option<Vec<Event>>,
    /// Updates where `|g_k(n)|` exceeded the single-agent bound
    /// `L + G/epsilon(n)`. Concurrent moves by other agents can push an
    /// estimate slightly past that bound at early cycles, so exceedances
    /// are reported rather than fatal; the fatal check is the Lipschitz
    /// bound over the actually observed displacement.
    pub gradient_bound_exceedances: u64,
    /// Max over all updates of `|g_k(n)| - (L + G/epsilon(n))`; negative
    /// when the bound held everywhere.
    pub max_gradient_bound_excess: f64,
}

impl Trajectory {
    pub fn final_u(&self) -> f64 {
        self.records.last().map(|r| r.u).unwrap_or(f64::NAN)
    }

    pub fn min_u(&self) -> f64 {
        self.records
            .iter()
            .map(|r| r.u)
            .fold(f64::INFINITY, f64::min)
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct RunOptions {
    /// Keep the per-tick event log in the trajectory.
    pub record_events: bool,
    /// Run even if the schedule's validity report fails (or the schedule
    /// is outside the analyzed family).
    pub allow_unvalidated: bool,
}

/// The live simulation state; step it manually or drive it with [`run`].
pub struct Engine {
    tau: u64,
    timings: Vec<AgentTiming>,
    schedule: Arc<dyn GainSchedule>,
    objective: Arc<dyn Objective>,
    noise: NoiseModel,
    noise_bound: f64,
    lipschitz: f64,
    tick: u64,
    x: Vec<f64>,
    pending: Vec<Option<Pending>>,
    rngs: Vec<rand_chacha::ChaCha8Rng>,
    // scratch buffers reused across ticks
    exp_now: Vec<(usize, u64)>,
    upd_now: Vec<(usize, u64)>,
    writes: Vec<(usize, f64)>,
}

impl Engine {
    pub fn new(config: &SimConfig) -> Result<Self, EngineError> {
        config.validate()?;
        let objective: Arc<dyn Objective> = Arc::from(config.objective.build()?);
        Self::from_parts(
            objective,
            Arc::new(config.schedule),
            config.tau,
            &config.phases,
            config.noise,
            config.x0.clone(),
            config.seed,
        )
    }

    /// Low-level constructor for custom objectives or schedules outside
    /// the serializable config surface.
    pub fn from_parts(
        objective: Arc<dyn Objective>,
        schedule: Arc<dyn GainSchedule>,
        tau: u64,
        phases: &[u64],
        noise: NoiseModel,
        x0: Vec<f64>,
        seed: u64,
    ) -> Result<Self, EngineError> {
        let k = objective.dimension();
        if phases.len() != k || x0.len() != k {
            return Err(EngineError::Config(
                "phases/x0 length must match the objective dimension".into(),
            ));
        }
        let timings = phases
            .iter()
            .map(|&p| AgentTiming::new(tau, p))
            .collect::<Result<Vec<_>, _>>()?;
        noise.validate()?;
        let rngs = (0..k).map(|a| agent_stream(seed, a)).collect();
        let noise_bound = noise.bound();
        let lipschitz = objective.lipschitz();
        Ok(Self {
            tau,
            timings,
            schedule,
            objective,
            noise,
            noise_bound,
            lipschitz,
            tick: 0,
            x: x0,
            pending: vec![None; k],
            rngs,
            exp_now: Vec::with_capacity(k),
            upd_now: Vec::with_capacity(k),
            writes: Vec::with_capacity(k),
        })
    }

    pub fn tick(&self) -> u64 {
        self.tick
    }

    pub fn x(&self) -> &[f64] {
        &self.x
    }

    pub fn objective(&self) -> &dyn Objective {
        self.objective.as_ref()
    }

    pub fn schedule(&self) -> &dyn GainSchedule {
        self.schedule.as_ref()
    }

    /// Cycle index of agent `k`'s in-flight experiment, if any.
    pub fn pending_cycle(&self, agent: usize) -> Option<u64> {
        self.pending[agent].map(|p| p.cycle)
    }

    /// The clean iterate `z`: equal to `x` except on coordinates with a
    /// pending experiment, where the perturbation is stripped.
    pub fn derive_z(&self) -> Vec<f64> {
        let mut z = self.x.clone();
        for (k, p) in self.pending.iter().enumerate() {
            if let Some(p) = p {
                z[k] = p.base;
            }
        }
        z
    }

    /// Advance one tick, appending any events to `events`.
    pub fn step(&mut self, events: &mut Vec<Event>) -> Result<(), EngineError> {
        let t = self.tick + 1;
        self.exp_now.clear();
        self.upd_now.clear();
        self.writes.clear();

        for (k, timing) in self.timings.iter().enumerate() {
            if let Some(n) = timing.experiment_cycle_at(t) {
                self.exp_now.push((k, n));
            }
            if let Some(n) = timing.update_cycle_at(t) {
                self.upd_now.push((k, n));
            }
        }
        if self.exp_now.is_empty() && self.upd_now.is_empty() {
            self.tick = t;
            return Ok(());
        }

        // All observations on this tick read the pre-write state.
        let f_snap = self.objective.value(&self.x);

        for &(k, n) in &self.upd_now {
            let p = self.pending[k]
                .take()
                .filter(|p| p.cycle == n)
                .ok_or(EngineError::StalePending { agent: k, tick: t })?;
            let eps = self.schedule.epsilon(n);
            let gamma = self.schedule.gamma(n);
            let g = (f_snap - p.f_before + p.noise) / (p.sign * eps);
            // Range check from the Lipschitz property over the observed
            // displacement; a breach means the arithmetic is wrong.
            let bound = (self.lipschitz * p.window_dist + self.noise_bound) / eps + 1e-9;
            if g.abs() > bound {
                return Err(EngineError::GradientBound {
                    agent: k,
                    cycle: n,
                    g,
                    bound,
                });
            }
            let new_value = p.base + g * gamma;
            self.writes.push((k, new_value));
            events.push(Event {
                tick: t,
                agent: k,
                cycle: n,
                kind: EventKind::Update {
                    gradient_estimate: g,
                    gamma,
                    new_value,
                },
            });
        }

        for &(k, n) in &self.exp_now {
            let sign = rademacher_sign(&mut self.rngs[k]);
            let noise = self.noise.sample(&mut self.rngs[k]);
            let eps = self.schedule.epsilon(n);
            let base = self.x[k];
            let new_value = base + sign * eps;
            self.pending[k] = Some(Pending {
                cycle: n,
                sign,
                noise,
                base,
                f_before: f_snap,
                window_dist: 0.0,
            });
            self.writes.push((k, new_value));
            events.push(Event {
                tick: t,
                agent: k,
                cycle: n,
                kind: EventKind::Experiment {
                    sign,
                    epsilon: eps,
                    f_before: f_snap,
                    new_value,
                },
            });
        }

        let mut dist2 = 0.0;
        for &(k, v) in &self.writes {
            let d = v - self.x[k];
            dist2 += d * d;
        }
        let tick_dist = dist2.sqrt();
        for &(k, v) in &self.writes {
            self.x[k] = v;
        }
        // Experiments opened on this tick see this tick's full write set
        // as their observation window start.
        for &(k, _) in &self.exp_now {
            if let Some(p) = self.pending[k].as_mut() {
                p.window_dist = tick_dist;
            }
        }

        if let Some(radius) = self.objective.domain_radius() {
            let diff: Vec<f64> = self
                .x
                .iter()
                .zip(self.objective.maximizer())
                .map(|(a, b)| a - b)
                .collect();
            let dist = euclidean_norm(&diff);
            if dist > radius {
                return Err(EngineError::EscapedBall {
                    tick: t,
                    dist,
                    radius,
                });
            }
        }

        self.tick = t;
        Ok(())
    }
}

/// Execute `n_cycles` further cycles, recording a [`CycleRecord`] at every
/// boundary. The engine must sit on a cycle boundary (a fresh engine, or
/// one stepped manually in whole cycles). Deterministic: the same engine
/// state and cycle budget always produce the identical trajectory.
pub fn run_engine(
    engine: &mut Engine,
    n_cycles: u64,
    options: &RunOptions,
) -> Result<Trajectory, EngineError> {
    if engine.tick % engine.tau != 0 {
        return Err(EngineError::Config(format!(
            "run_engine needs a cycle boundary, engine is at tick {} with tau {}",
            engine.tick, engine.tau
        )));
    }
    let start_cycle = engine.tick / engine.tau;
    if !options.allow_unvalidated {
        match engine.schedule.validation() {
            Some(report) if report.valid => {}
            _ => return Err(EngineError::InvalidSchedule),
        }
    }
    if let Some(radius) = engine.objective.domain_radius() {
        let diff: Vec<f64> = engine
            .x
            .iter()
            .zip(engine.objective.maximizer())
            .map(|(a, b)| a - b)
            .collect();
        let dist = euclidean_norm(&diff);
        if dist > radius {
            return Err(EngineError::EscapedBall {
                tick: engine.tick,
                dist,
                radius,
            });
        }
    }

    let k = engine.x.len();
    let x_star = engine.objective.maximizer().to_vec();
    let mut records: Vec<CycleRecord> = Vec::with_capacity(n_cycles as usize + 1);
    let mut log: Vec<Event> = Vec::new();
    let mut tick_events: Vec<Event> = Vec::new();
    let mut exceedances = 0u64;
    let mut max_excess = f64::NEG_INFINITY;

    let push_boundary = |engine: &Engine, records: &mut Vec<CycleRecord>, cycle: u64| {
        let z = engine.derive_z();
        let diff: Vec<f64> = z.iter().zip(&x_star).map(|(a, b)| a - b).collect();
        let u = euclidean_norm(&diff);
        let f_z = engine.objective.value(&z);
        if let Some(prev) = records.last_mut() {
            let w: Vec<f64> = z.iter().zip(&prev.z).map(|(a, b)| a - b).collect();
            let n = prev.cycle;
            let ratio = euclidean_norm(&w) * engine.schedule.epsilon(n) / engine.schedule.gamma(n);
            prev.w = Some(w);
            prev.drift_ratio = Some(ratio);
        }
        records.push(CycleRecord {
            cycle,
            tick: engine.tick,
            z,
            u,
            f_z,
            g: vec![f64::NAN; k],
            w: None,
            drift_ratio: None,
        });
    };

    push_boundary(engine, &mut records, start_cycle);

    let last_tick = (start_cycle + n_cycles) * engine.tau;
    for t in engine.tick + 1..=last_tick {
        tick_events.clear();
        engine.step(&mut tick_events)?;
        for ev in &tick_events {
            if let EventKind::Update {
                gradient_estimate, ..
            } = ev.kind
            {
                records[(ev.cycle - start_cycle) as usize].g[ev.agent] = gradient_estimate;
                let nominal =
                    engine.lipschitz + engine.noise_bound / engine.schedule.epsilon(ev.cycle);
                let excess = gradient_estimate.abs() - nominal;
                if excess > 1e-9 {
                    exceedances += 1;
                }
                max_excess = max_excess.max(excess);
            }
        }
        if options.record_events {
            log.extend_from_slice(&tick_events);
        }
        if t % engine.tau == 0 {
            push_boundary(engine, &mut records, t / engine.tau);
        }
    }

    Ok(Trajectory {
        k,
        tau: engine.tau,
        records,
        events: options.record_events.then_some(log),
        gradient_bound_exceedances: exceedances,
        max_gradient_bound_excess: if max_excess == f64::NEG_INFINITY {
            f64::NAN
        } else {
            max_excess
        },
    })
}

/// Build an engine from the config and run it for `config.n_cycles` cycles.
pub fn run(config: &SimConfig, options: &RunOptions) -> Result<Trajectory, EngineError> {
    let mut engine = Engine::new(config)?;
    run_engine(&mut engine, config.n_cycles, options)
}
