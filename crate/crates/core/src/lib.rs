//! Asynchronous multi-agent derivative-free maximization, on a simulated
//! tick clock, with the diagnostics to interrogate its convergence.
//!
//! `K` agents share a concave objective but not their variables: each
//! owns one coordinate, observes only noisy function values, and runs its
//! own experiment/update pair once per cycle of `tau` ticks, offset by a
//! per-agent phase. Estimates are corrupted by whatever the other agents
//! do in between — the interesting regime this crate exists to study.
//! Runs are deterministic given a seed; every random draw comes from a
//! named per-agent stream.
//!
//! # Modules
//!
//! - [`schedules`] — gain/perturbation pairs `gamma(n), epsilon(n)`,
//!   their validity conditions, agent event timing.
//! - [`objectives`] — concave test functions with exact oracles, noise
//!   models, the strict-concavity margin `beta(delta)`.
//! - [`engine`] — the tick-clock simulator and trajectory recorder.
//! - [`diagnostics`] — descent/martingale/small-ball statistics and the
//!   exhaustive sign oracle for estimate bias.
//! - [`mod@reference`] — standalone implementations of the degenerate
//!   cases, for bit-exact regression.
//! - [`cli`] — config files, seeded replication studies, CSV/JSON output
//!   (the `async-kw` binary is a thin wrapper over this module).
//! - [`rng`] — deterministic stream derivation.
//!
//! # Examples
//!
//! Each major capability has a runnable example:
//!
//! ```text
//! examples/
//! ├── single_run.rs             # one seeded run, distance-to-maximizer table
//! ├── replication_study.rs      # multi-seed study with CSV/JSON outputs
//! ├── schedule_validation.rs    # exponent grid against the validity conditions
//! ├── objective_oracles.rs      # built-in objectives, self-check, beta(delta)
//! ├── bias_oracle.rs            # exhaustive sign oracle, eps^2 bias decay
//! ├── trajectory_diagnostics.rs # descent / martingale / small-ball verdicts
//! ├── special_cases.rs          # bit-exact degenerate-case regressions
//! └── custom_schedule.rs        # manual stepping with user-supplied gains
//! ```
//!
//! ```bash
//! cargo run --release -p async-kw --example single_run
//! cargo run --release -p async-kw --example replication_study
//! cargo run -p async-kw --example schedule_validation
//! cargo run -p async-kw --example objective_oracles
//! cargo run -p async-kw --example bias_oracle
//! cargo run --release -p async-kw --example trajectory_diagnostics
//! cargo run -p async-kw --example special_cases
//! cargo run -p async-kw --example custom_schedule
//! ```
//!
//! # Quick start
//!
//! ```
//! use async_kw::engine::{run, RunOptions, SimConfig};
//! use async_kw::objectives::{NoiseModel, ObjectiveSpec};
//! use async_kw::schedules::PowerLawSchedule;
//!
//! let config = SimConfig {
//!     k: 2,
//!     tau: 2,
//!     phases: vec![0, 1],
//!     schedule: PowerLawSchedule::new(0.75, 0.2).unwrap(),
//!     objective: ObjectiveSpec::PseudoHuber { x_star: vec![1.0, -1.0] },
//!     noise: NoiseModel::Uniform { bound: 0.1 },
//!     x0: vec![0.0, 0.0],
//!     n_cycles: 5_000,
//!     seed: 42,
//! };
//! let trajectory = run(&config, &RunOptions::default()).unwrap();
//! assert!(trajectory.final_u() < 0.2);
//! ```

pub mod cli;
pub mod diagnostics;
pub mod engine;
pub mod objectives;
pub mod reference;
pub mod rng;
pub mod schedules;
