//! Gain and perturbation schedules, and agent event timing.
//!
//! An experiment run is driven by two diminishing sequences: the update
//! gain `gamma(n)` and the perturbation size `epsilon(n)`. Convergence
//! requires a joint summability condition on the pair; [`PowerLawSchedule`]
//! checks it analytically for the power-law family. [`AgentTiming`] maps a
//! cycle index to the global tick at which an agent acts.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum ScheduleError {
    #[error("exponent must be positive and finite, got {0}")]
    BadExponent(f64),
    #[error("index shift must be at least 1")]
    ZeroShift,
    #[error("tau must be at least 2, got {0}")]
    BadTau(u64),
    #[error("phase {phase} out of range for tau {tau}")]
    BadPhase { tau: u64, phase: u64 },
}

/// The power-law pair `gamma(n) = (n+s)^(-g)`, `epsilon(n) = (n+s)^(-e)`.
///
/// The shift `s >= 1` keeps the sequences defined and in `(0, 1]` at
/// `n = 0`; it does not change any asymptotics. The reference instance is
/// `(g, e) = (0.75, 0.2)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawSchedule", into = "RawSchedule")]
pub struct PowerLawSchedule {
    gamma_exponent: f64,
    epsilon_exponent: f64,
    index_shift: u64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct RawSchedule {
    gamma_exponent: f64,
    epsilon_exponent: f64,
    #[serde(default = "default_shift")]
    index_shift: u64,
}

fn default_shift() -> u64 {
    1
}

impl TryFrom<RawSchedule> for PowerLawSchedule {
    type Error = ScheduleError;
    fn try_from(raw: RawSchedule) -> Result<Self, Self::Error> {
        PowerLawSchedule::with_shift(raw.gamma_exponent, raw.epsilon_exponent, raw.index_shift)
    }
}

impl From<PowerLawSchedule> for RawSchedule {
    fn from(s: PowerLawSchedule) -> Self {
        RawSchedule {
            gamma_exponent: s.gamma_exponent,
            epsilon_exponent: s.epsilon_exponent,
            index_shift: s.index_shift,
        }
    }
}

impl PowerLawSchedule {
    /// Schedule with the default shift `s = 1`.
    pub fn new(gamma_exponent: f64, epsilon_exponent: f64) -> Result<Self, ScheduleError> {
        Self::with_shift(gamma_exponent, epsilon_exponent, 1)
    }

    pub fn with_shift(
        gamma_exponent: f64,
        epsilon_exponent: f64,
        index_shift: u64,
    ) -> Result<Self, ScheduleError> {
        for &x in &[gamma_exponent, epsilon_exponent] {
            if !(x.is_finite() && x > 0.0) {
                return Err(ScheduleError::BadExponent(x));
            }
        }
        if index_shift == 0 {
            return Err(ScheduleError::ZeroShift);
        }
        Ok(Self {
            gamma_exponent,
            epsilon_exponent,
            index_shift,
        })
    }

    pub fn gamma_exponent(&self) -> f64 {
        self.gamma_exponent
    }

    pub fn epsilon_exponent(&self) -> f64 {
        self.epsilon_exponent
    }

    pub fn index_shift(&self) -> u64 {
        self.index_shift
    }

    /// Analytic validity report via p-series comparison on the exponents.
    pub fn report(&self) -> ScheduleReport {
        let g = self.gamma_exponent;
        let e = self.epsilon_exponent;
        let sum_gamma2_over_eps2_finite = 2.0 * (g - e) > 1.0;
        let sum_gamma_eps2_finite = g + 2.0 * e > 1.0;
        let gamma_over_eps2_bounded = g >= 2.0 * e;
        let sum_gamma_infinite = g <= 1.0;
        ScheduleReport {
            sum_gamma2_over_eps2_finite,
            sum_gamma_eps2_finite,
            gamma_over_eps2_bounded,
            sum_gamma_infinite,
            valid: sum_gamma2_over_eps2_finite
                && sum_gamma_eps2_finite
                && gamma_over_eps2_bounded
                && sum_gamma_infinite,
        }
    }
}

/// Anything that can supply the gain pair for a run.
///
/// [`PowerLawSchedule`] is the validated family; arbitrary user sequences
/// can be plugged in through [`ExplicitSchedule`] but carry no validity
/// report and must be explicitly allowed when running.
pub trait GainSchedule: Send + Sync {
    /// Update gain at cycle `n`, in `(0, 1]`.
    fn gamma(&self, n: u64) -> f64;
    /// Perturbation size at cycle `n`, in `(0, 1]`.
    fn epsilon(&self, n: u64) -> f64;
    /// `None` means the schedule is outside the analyzed family.
    fn validation(&self) -> Option<ScheduleReport> {
        None
    }

    /// `rho(n) = max(gamma^2/eps, gamma*eps^2)`, the per-cycle remainder scale.
    fn rho(&self, n: u64) -> f64 {
        let g = self.gamma(n);
        let e = self.epsilon(n);
        (g * g / e).max(g * e * e)
    }

    /// `kappa(n) = max(gamma^2/eps^2, gamma*eps^2)`, the summable residual scale.
    fn kappa(&self, n: u64) -> f64 {
        let g = self.gamma(n);
        let e = self.epsilon(n);
        (g * g / (e * e)).max(g * e * e)
    }
}

impl GainSchedule for PowerLawSchedule {
    fn gamma(&self, n: u64) -> f64 {
        ((n + self.index_shift) as f64).powf(-self.gamma_exponent)
    }

    fn epsilon(&self, n: u64) -> f64 {
        ((n + self.index_shift) as f64).powf(-self.epsilon_exponent)
    }

    fn validation(&self) -> Option<ScheduleReport> {
        Some(self.report())
    }
}

/// User-supplied gain pair; accepted by the engine but never validated.
pub struct ExplicitSchedule {
    gamma: Box<dyn Fn(u64) -> f64 + Send + Sync>,
    epsilon: Box<dyn Fn(u64) -> f64 + Send + Sync>,
}

impl ExplicitSchedule {
    pub fn from_fns<G, E>(gamma: G, epsilon: E) -> Self
    where
        G: Fn(u64) -> f64 + Send + Sync + 'static,
        E: Fn(u64) -> f64 + Send + Sync + 'static,
    {
        Self {
            gamma: Box::new(gamma),
            epsilon: Box::new(epsilon),
        }
    }
}

impl GainSchedule for ExplicitSchedule {
    fn gamma(&self, n: u64) -> f64 {
        (self.gamma)(n)
    }

    fn epsilon(&self, n: u64) -> f64 {
        (self.epsilon)(n)
    }
}

/// The four summability/boundedness conditions the gain pair must satisfy,
/// decided analytically from the exponents.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScheduleReport {
    /// `sum gamma^2(n)/eps^2(n) < inf`, i.e. `2(g - e) > 1`.
    pub sum_gamma2_over_eps2_finite: bool,
    /// `sum gamma(n) eps^2(n) < inf`, i.e. `g + 2e > 1`.
    pub sum_gamma_eps2_finite: bool,
    /// `gamma(n)/eps^2(n)` bounded, i.e. `g >= 2e`.
    pub gamma_over_eps2_bounded: bool,
    /// `sum gamma(n) = inf`, i.e. `g <= 1`.
    pub sum_gamma_infinite: bool,
    /// Conjunction of the four flags.
    pub valid: bool,
}

/// When agent `k` acts: one experiment and one update per cycle of `tau`
/// ticks, offset by the agent's phase.
///
/// The event time is `T_k(n) = n*tau + p_k - tau * [p_k == tau-1]`; the
/// experiment lands on tick `T_k(n) + 1` and the update on `T_k(n) + 2`,
/// both inside (or on the closing boundary of) cycle `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct AgentTiming {
    tau: u64,
    phase: u64,
}

impl AgentTiming {
    pub fn new(tau: u64, phase: u64) -> Result<Self, ScheduleError> {
        if tau < 2 {
            return Err(ScheduleError::BadTau(tau));
        }
        if phase >= tau {
            return Err(ScheduleError::BadPhase { tau, phase });
        }
        Ok(Self { tau, phase })
    }

    pub fn tau(&self) -> u64 {
        self.tau
    }

    pub fn phase(&self) -> u64 {
        self.phase
    }

    /// `T_k(n)`, or `None` for the inactive cycle.
    ///
    /// An agent with `p_k = tau - 1` would get `T_k(0) = -1`, placing its
    /// experiment at tick 0 where no prior state exists; such agents skip
    /// cycle 0 and first act in cycle 1.
    pub fn event_time(&self, n: u64) -> Option<u64> {
        if self.phase == self.tau - 1 {
            if n == 0 {
                None
            } else {
                Some(n * self.tau + self.phase - self.tau)
            }
        } else {
            Some(n * self.tau + self.phase)
        }
    }

    /// Tick of the cycle-`n` experiment, `T_k(n) + 1`.
    pub fn experiment_tick(&self, n: u64) -> Option<u64> {
        self.event_time(n).map(|t| t + 1)
    }

    /// Tick of the cycle-`n` update, `T_k(n) + 2`.
    pub fn update_tick(&self, n: u64) -> Option<u64> {
        self.event_time(n).map(|t| t + 2)
    }

    pub fn is_active(&self, n: u64) -> bool {
        self.event_time(n).is_some()
    }

    /// Offset of the experiment tick within a cycle: `T_k(n) + 1 = n*tau + c`.
    fn experiment_offset(&self) -> u64 {
        if self.phase == self.tau - 1 {
            0
        } else {
            self.phase + 1
        }
    }

    /// The cycle whose experiment lands on `tick`, if any.
    pub fn experiment_cycle_at(&self, tick: u64) -> Option<u64> {
        let c = self.experiment_offset();
        if tick % self.tau != c {
            return None;
        }
        let n = (tick - c) / self.tau;
        if self.phase == self.tau - 1 && n == 0 {
            return None; // inactive cycle
        }
        Some(n)
    }

    /// The cycle whose update lands on `tick`, if any.
    pub fn update_cycle_at(&self, tick: u64) -> Option<u64> {
        let u = self.experiment_offset() + 1;
        if u == self.tau {
            // update falls on the next cycle boundary
            if tick % self.tau == 0 && tick >= self.tau {
                Some(tick / self.tau - 1)
            } else {
                None
            }
        } else {
            if tick % self.tau != u {
                return None;
            }
            let n = (tick - u) / self.tau;
            if self.phase == self.tau - 1 && n == 0 {
                return None;
            }
            Some(n)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn gamma_examples() {
        let s = PowerLawSchedule::new(0.75, 0.2).unwrap();
        assert_eq!(s.gamma(0), 1.0);
        assert_relative_eq!(s.gamma(15), 0.125, max_relative = 1e-15);
        let s = PowerLawSchedule::new(1.0, 0.2).unwrap();
        assert_relative_eq!(s.gamma(9), 0.1, max_relative = 1e-15);
    }

    #[test]
    fn epsilon_examples() {
        let s = PowerLawSchedule::new(0.75, 0.2).unwrap();
        assert_eq!(s.epsilon(0), 1.0);
        assert_relative_eq!(s.epsilon(31), 0.5, max_relative = 1e-15);
        let s = PowerLawSchedule::new(0.75, 0.5).unwrap();
        assert_relative_eq!(s.epsilon(3), 0.5, max_relative = 1e-15);
    }

    #[test]
    fn reference_pair_is_valid() {
        let r = PowerLawSchedule::new(0.75, 0.2).unwrap().report();
        assert!(r.sum_gamma2_over_eps2_finite);
        assert!(r.sum_gamma_eps2_finite);
        assert!(r.gamma_over_eps2_bounded);
        assert!(r.sum_gamma_infinite);
        assert!(r.valid);
    }

    #[test]
    fn slow_gamma_fails_summability() {
        let r = PowerLawSchedule::new(0.5, 0.2).unwrap().report();
        assert!(!r.sum_gamma2_over_eps2_finite);
        assert!(!r.valid);
    }

    #[test]
    fn boundary_pair_bounded_but_not_summable() {
        let r = PowerLawSchedule::new(1.0, 0.5).unwrap().report();
        assert!(r.gamma_over_eps2_bounded);
        assert!(!r.sum_gamma2_over_eps2_finite);
        assert!(!r.valid);
    }

    #[test]
    fn fast_gamma_loses_divergence() {
        let r = PowerLawSchedule::new(1.2, 0.2).unwrap().report();
        assert!(!r.sum_gamma_infinite);
        assert!(!r.valid);
    }

    #[test]
    fn construction_rejects_bad_inputs() {
        assert!(PowerLawSchedule::new(0.0, 0.2).is_err());
        assert!(PowerLawSchedule::new(0.75, -0.1).is_err());
        assert!(PowerLawSchedule::new(f64::NAN, 0.2).is_err());
        assert!(PowerLawSchedule::with_shift(0.75, 0.2, 0).is_err());
    }

    #[test]
    fn event_time_examples() {
        let t = AgentTiming::new(2, 0).unwrap();
        assert_eq!(t.event_time(3), Some(6));
        assert_eq!(t.experiment_tick(3), Some(7));
        assert_eq!(t.update_tick(3), Some(8));

        // indicator fires for the last phase
        let t = AgentTiming::new(4, 3).unwrap();
        assert_eq!(t.event_time(2), Some(7));
        assert_eq!(t.experiment_tick(2), Some(8));
        assert_eq!(t.update_tick(2), Some(9));

        // inactive cycle 0
        let t = AgentTiming::new(2, 1).unwrap();
        assert_eq!(t.event_time(0), None);
        assert!(!t.is_active(0));
        assert_eq!(t.event_time(1), Some(1));
    }

    #[test]
    fn timing_rejects_bad_inputs() {
        assert!(AgentTiming::new(1, 0).is_err());
        assert!(AgentTiming::new(4, 4).is_err());
    }

    #[test]
    fn events_stay_inside_their_cycle() {
        for tau in 2..7 {
            for phase in 0..tau {
                let t = AgentTiming::new(tau, phase).unwrap();
                for n in 0..50 {
                    if let Some(ev) = t.event_time(n) {
                        let exp = ev + 1;
                        let upd = ev + 2;
                        assert!(n * tau <= exp && exp <= n * tau + tau - 1);
                        assert!(upd <= (n + 1) * tau);
                    } else {
                        assert_eq!((n, phase), (0, tau - 1));
                    }
                }
            }
        }
    }

    #[test]
    fn tick_inversion_matches_event_times() {
        for tau in 2..7 {
            for phase in 0..tau {
                let t = AgentTiming::new(tau, phase).unwrap();
                for n in 0..40 {
                    if let Some(ev) = t.event_time(n) {
                        assert_eq!(t.experiment_cycle_at(ev + 1), Some(n));
                        assert_eq!(t.update_cycle_at(ev + 2), Some(n));
                    }
                }
                // no spurious hits
                for tick in 0..40 * tau {
                    if let Some(n) = t.experiment_cycle_at(tick) {
                        assert_eq!(t.experiment_tick(n), Some(tick));
                    }
                    if let Some(n) = t.update_cycle_at(tick) {
                        assert_eq!(t.update_tick(n), Some(tick));
                    }
                }
            }
        }
    }

    #[test]
    fn rho_and_kappa_decrease_for_valid_schedules() {
        let s = PowerLawSchedule::new(0.75, 0.2).unwrap();
        for n in 1..2000 {
            assert!(s.rho(n) < s.rho(n - 1));
            assert!(s.kappa(n) < s.kappa(n - 1));
        }
        // spot value: rho(0) with shift 1 is max(1, 1) = 1
        assert_eq!(s.rho(0), 1.0);
    }

    #[test]
    fn explicit_schedule_is_unvalidated() {
        let s = ExplicitSchedule::from_fns(|n| 1.0 / (n + 1) as f64, |_| 0.5);
        assert!(s.validation().is_none());
        assert_eq!(s.gamma(1), 0.5);
        assert_eq!(s.epsilon(7), 0.5);
    }
}
