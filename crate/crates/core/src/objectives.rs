//! Concave test objectives with exact oracles.
//!
//! Every built-in objective knows its maximizer, its Lipschitz constant,
//! and exact gradients, so simulation output can be checked against closed
//! forms. [`beta_lower_bound`] computes the strict-concavity margin
//! `beta(delta)`: the guaranteed per-unit-distance value gap outside the
//! `delta`-ball around the maximizer.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ObjectiveError {
    #[error("dimension must be at least 1")]
    ZeroDimension,
    #[error("maximizer length {got} does not match dimension {dim}")]
    DimensionMismatch { dim: usize, got: usize },
    #[error("matrix is not symmetric at ({i},{j})")]
    NotSymmetric { i: usize, j: usize },
    #[error("matrix is not positive definite (pivot {pivot} at row {row})")]
    NotPositiveDefinite { row: usize, pivot: f64 },
    #[error("ball radius must be positive and finite")]
    BadBallRadius,
    #[error("noise bound must be nonnegative and finite, got {0}")]
    BadNoiseBound(f64),
    #[error("margin search needs 0 < delta < search radius, got delta={delta}, radius={radius}")]
    BadMarginRange { delta: f64, radius: f64 },
    #[error("margin is non-strict: beta = {0} <= 0")]
    NonStrictMargin(f64),
    #[error("margin ratio decreases outward at radius {radius} (direction sample {dir})")]
    NonMonotoneMargin { radius: f64, dir: usize },
}

/// A concave function with known maximizer and exact oracles.
///
/// `value` must be concave and Lipschitz (globally, or on the declared
/// ball returned by `domain_radius`), with the gradient vanishing at the
/// maximizer.
pub trait Objective: Send + Sync {
    fn dimension(&self) -> usize;
    fn maximizer(&self) -> &[f64];
    /// Lipschitz constant of `value` (on the declared ball, if any).
    fn lipschitz(&self) -> f64;
    fn value(&self, x: &[f64]) -> f64;
    fn gradient(&self, x: &[f64]) -> Vec<f64>;
    /// Row-major Hessian, when available in closed form.
    fn hessian(&self, _x: &[f64]) -> Option<Vec<Vec<f64>>> {
        None
    }
    /// Radius of the ball around the maximizer on which the declared
    /// constants hold. `None` means all of R^K. Runs abort when the state
    /// leaves this ball.
    fn domain_radius(&self) -> Option<f64> {
        None
    }
}

pub fn euclidean_norm(v: &[f64]) -> f64 {
    v.iter().map(|x| x * x).sum::<f64>().sqrt()
}

/// `f(x) = -sum_i (sqrt(1 + (x_i - x*_i)^2) - 1)`.
///
/// Globally Lipschitz with constant `sqrt(K)`, bounded second and third
/// derivatives, strictly concave near the maximizer, and `f(x*) = 0`.
/// This is the headline objective for convergence runs.
#[derive(Debug, Clone)]
pub struct PseudoHuber {
    x_star: Vec<f64>,
}

pub fn pseudo_huber(x_star: Vec<f64>) -> Result<PseudoHuber, ObjectiveError> {
    if x_star.is_empty() {
        return Err(ObjectiveError::ZeroDimension);
    }
    Ok(PseudoHuber { x_star })
}

impl Objective for PseudoHuber {
    fn dimension(&self) -> usize {
        self.x_star.len()
    }

    fn maximizer(&self) -> &[f64] {
        &self.x_star
    }

    fn lipschitz(&self) -> f64 {
        (self.x_star.len() as f64).sqrt()
    }

    fn value(&self, x: &[f64]) -> f64 {
        debug_assert_eq!(x.len(), self.x_star.len());
        let mut total = 0.0;
        for (xi, si) in x.iter().zip(&self.x_star) {
            let d = xi - si;
            total -= (1.0 + d * d).sqrt() - 1.0;
        }
        total
    }

    fn gradient(&self, x: &[f64]) -> Vec<f64> {
        x.iter()
            .zip(&self.x_star)
            .map(|(xi, si)| {
                let d = xi - si;
                -d / (1.0 + d * d).sqrt()
            })
            .collect()
    }

    fn hessian(&self, x: &[f64]) -> Option<Vec<Vec<f64>>> {
        let k = self.dimension();
        let mut h = vec![vec![0.0; k]; k];
        for i in 0..k {
            let d = x[i] - self.x_star[i];
            h[i][i] = -(1.0 + d * d).powf(-1.5);
        }
        Some(h)
    }
}

/// `f(x) = -(x - x*)' A (x - x*)` with `A` symmetric positive definite.
///
/// Exact algebra makes it the oracle of choice for bias tests, but it is
/// only Lipschitz on a bounded set, so every run declares a ball around
/// the maximizer and aborts if the state escapes it.
#[derive(Debug, Clone)]
pub struct Quadratic {
    x_star: Vec<f64>,
    matrix: Vec<Vec<f64>>,
    ball_radius: f64,
    lipschitz: f64,
}

pub fn quadratic(
    x_star: Vec<f64>,
    matrix: Vec<Vec<f64>>,
    ball_radius: f64,
) -> Result<Quadratic, ObjectiveError> {
    let k = x_star.len();
    if k == 0 {
        return Err(ObjectiveError::ZeroDimension);
    }
    if matrix.len() != k || matrix.iter().any(|row| row.len() != k) {
        return Err(ObjectiveError::DimensionMismatch {
            dim: k,
            got: matrix.len(),
        });
    }
    if !(ball_radius.is_finite() && ball_radius > 0.0) {
        return Err(ObjectiveError::BadBallRadius);
    }
    for i in 0..k {
        for j in (i + 1)..k {
            let scale = 1.0f64.max(matrix[i][j].abs());
            if (matrix[i][j] - matrix[j][i]).abs() > 1e-12 * scale {
                return Err(ObjectiveError::NotSymmetric { i, j });
            }
        }
    }
    cholesky_check(&matrix)?;
    // Gershgorin bound on the largest eigenvalue; conservative is fine here.
    let lambda_max = matrix
        .iter()
        .map(|row| row.iter().map(|a| a.abs()).sum::<f64>())
        .fold(0.0, f64::max);
    let lipschitz = 2.0 * lambda_max * ball_radius;
    Ok(Quadratic {
        x_star,
        matrix,
        ball_radius,
        lipschitz,
    })
}

/// Fails iff the (symmetric) matrix is not positive definite.
fn cholesky_check(a: &[Vec<f64>]) -> Result<(), ObjectiveError> {
    let k = a.len();
    let mut l = vec![vec![0.0f64; k]; k];
    for i in 0..k {
        for j in 0..=i {
            let mut s = a[i][j];
            for m in 0..j {
                s -= l[i][m] * l[j][m];
            }
            if i == j {
                if s <= 0.0 {
                    return Err(ObjectiveError::NotPositiveDefinite { row: i, pivot: s });
                }
                l[i][j] = s.sqrt();
            } else {
                l[i][j] = s / l[j][j];
            }
        }
    }
    Ok(())
}

impl Quadratic {
    pub fn ball_radius(&self) -> f64 {
        self.ball_radius
    }
}

impl Objective for Quadratic {
    fn dimension(&self) -> usize {
        self.x_star.len()
    }

    fn maximizer(&self) -> &[f64] {
        &self.x_star
    }

    fn lipschitz(&self) -> f64 {
        self.lipschitz
    }

    fn value(&self, x: &[f64]) -> f64 {
        let k = self.dimension();
        let mut total = 0.0;
        for i in 0..k {
            let di = x[i] - self.x_star[i];
            for j in 0..k {
                let dj = x[j] - self.x_star[j];
                total -= di * self.matrix[i][j] * dj;
            }
        }
        total
    }

    fn gradient(&self, x: &[f64]) -> Vec<f64> {
        let k = self.dimension();
        (0..k)
            .map(|i| {
                let mut gi = 0.0;
                for j in 0..k {
                    gi -= 2.0 * self.matrix[i][j] * (x[j] - self.x_star[j]);
                }
                gi
            })
            .collect()
    }

    fn hessian(&self, _x: &[f64]) -> Option<Vec<Vec<f64>>> {
        Some(
            self.matrix
                .iter()
                .map(|row| row.iter().map(|a| -2.0 * a).collect())
                .collect(),
        )
    }

    fn domain_radius(&self) -> Option<f64> {
        Some(self.ball_radius)
    }
}

/// Serializable recipe for a built-in objective.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ObjectiveSpec {
    PseudoHuber {
        x_star: Vec<f64>,
    },
    Quadratic {
        x_star: Vec<f64>,
        matrix: Vec<Vec<f64>>,
        ball_radius: f64,
    },
}

impl ObjectiveSpec {
    pub fn dimension(&self) -> usize {
        match self {
            ObjectiveSpec::PseudoHuber { x_star } => x_star.len(),
            ObjectiveSpec::Quadratic { x_star, .. } => x_star.len(),
        }
    }

    pub fn build(&self) -> Result<Box<dyn Objective>, ObjectiveError> {
        match self {
            ObjectiveSpec::PseudoHuber { x_star } => Ok(Box::new(pseudo_huber(x_star.clone())?)),
            ObjectiveSpec::Quadratic {
                x_star,
                matrix,
                ball_radius,
            } => Ok(Box::new(quadratic(
                x_star.clone(),
                matrix.clone(),
                *ball_radius,
            )?)),
        }
    }
}

/// Bounded, zero-mean observation noise added to each function difference.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum NoiseModel {
    /// No noise; draws nothing from the stream.
    Zero,
    /// Uniform on `[-bound, bound]`.
    Uniform { bound: f64 },
    /// `+bound` or `-bound` with equal probability.
    Rademacher { bound: f64 },
}

impl NoiseModel {
    pub fn validate(&self) -> Result<(), ObjectiveError> {
        let b = self.bound();
        if !(b.is_finite() && b >= 0.0) {
            return Err(ObjectiveError::BadNoiseBound(b));
        }
        Ok(())
    }

    /// The almost-sure bound `G` on a sample's magnitude.
    pub fn bound(&self) -> f64 {
        match self {
            NoiseModel::Zero => 0.0,
            NoiseModel::Uniform { bound } | NoiseModel::Rademacher { bound } => *bound,
        }
    }

    pub fn sample<R: Rng>(&self, rng: &mut R) -> f64 {
        match self {
            NoiseModel::Zero => 0.0,
            NoiseModel::Uniform { bound } => rng.random_range(-bound..=*bound),
            NoiseModel::Rademacher { bound } => {
                if rng.random::<bool>() {
                    *bound
                } else {
                    -*bound
                }
            }
        }
    }
}

/// Draw a uniform `+1/-1` perturbation sign.
pub fn rademacher_sign<R: Rng>(rng: &mut R) -> f64 {
    if rng.random::<bool>() {
        1.0
    } else {
        -1.0
    }
}

const MARGIN_RANDOM_DIRECTIONS: usize = 512;
const MARGIN_SEARCH_SEED: u64 = 0x5EED_0BEE;

/// Strict-concavity margin `beta(delta)`: a lower bound on
/// `(f(x*) - f(z)) / ||z - x*||` over all `z` with `||z - x*|| >= delta`.
///
/// For concave `f` the ratio is nondecreasing in the radius along every
/// ray, so the shell minimum sits at radius exactly `delta`; the search
/// samples directions there (all coordinate axes plus random unit vectors)
/// and verifies the outward monotonicity on a radial grid up to
/// `10 * search_radius`.
pub fn beta_lower_bound(
    obj: &dyn Objective,
    delta: f64,
    search_radius: f64,
) -> Result<f64, ObjectiveError> {
    if !(delta > 0.0 && search_radius > delta) {
        return Err(ObjectiveError::BadMarginRange {
            delta,
            radius: search_radius,
        });
    }
    let k = obj.dimension();
    let x_star = obj.maximizer().to_vec();
    let f_star = obj.value(&x_star);

    let mut dirs: Vec<Vec<f64>> = Vec::new();
    for i in 0..k {
        for sign in [1.0, -1.0] {
            let mut d = vec![0.0; k];
            d[i] = sign;
            dirs.push(d);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(MARGIN_SEARCH_SEED);
    for _ in 0..MARGIN_RANDOM_DIRECTIONS {
        dirs.push(random_unit_vector(k, &mut rng));
    }

    let ratio_at = |dir: &[f64], r: f64| -> f64 {
        let z: Vec<f64> = x_star.iter().zip(dir).map(|(s, d)| s + r * d).collect();
        (f_star - obj.value(&z)) / r
    };

    let mut beta = f64::INFINITY;
    for d in &dirs {
        beta = beta.min(ratio_at(d, delta));
    }
    if !(beta > 0.0) {
        return Err(ObjectiveError::NonStrictMargin(beta));
    }

    // Outward monotonicity probe on a subsample of directions.
    let outer = 10.0 * search_radius;
    let steps = 16;
    for (di, d) in dirs.iter().enumerate().filter(|(i, _)| i % 8 == 0) {
        let mut prev = ratio_at(d, delta);
        for j in 1..=steps {
            let r = delta * (outer / delta).powf(j as f64 / steps as f64);
            let cur = ratio_at(d, r);
            if cur < prev - 1e-9 {
                return Err(ObjectiveError::NonMonotoneMargin { radius: r, dir: di });
            }
            prev = cur;
        }
    }
    Ok(beta)
}

fn random_unit_vector(k: usize, rng: &mut ChaCha8Rng) -> Vec<f64> {
    loop {
        // Box-Muller normals, then normalize.
        let mut v = Vec::with_capacity(k);
        while v.len() < k {
            let u1: f64 = rng.random_range(f64::MIN_POSITIVE..1.0);
            let u2: f64 = rng.random_range(0.0..1.0);
            let r = (-2.0 * u1.ln()).sqrt();
            v.push(r * (2.0 * std::f64::consts::PI * u2).cos());
            if v.len() < k {
                v.push(r * (2.0 * std::f64::consts::PI * u2).sin());
            }
        }
        let norm = euclidean_norm(&v);
        if norm > 1e-12 {
            for x in &mut v {
                *x /= norm;
            }
            return v;
        }
    }
}

/// One failed objective invariant, with enough context to locate it.
#[derive(Debug, Error)]
pub enum SelfCheckError {
    #[error("concavity violated at interpolation lambda={lambda}: lhs {lhs} < rhs {rhs}")]
    NotConcave { lambda: f64, lhs: f64, rhs: f64 },
    #[error("gradient at maximizer has |component {i}| = {value} > 1e-9")]
    GradientAtMaximizer { i: usize, value: f64 },
    #[error("Lipschitz bound violated: |df| = {df} > L * dist = {bound}")]
    LipschitzExceeded { df: f64, bound: f64 },
    #[error("gradient component {i} disagrees with central difference: {analytic} vs {numeric}")]
    GradientMismatch {
        i: usize,
        analytic: f64,
        numeric: f64,
    },
}

/// Sampling-based verification of the objective contract: concavity,
/// vanishing gradient at the maximizer, the Lipschitz bound, and agreement
/// of the gradient oracle with central finite differences (step `1e-5`,
/// relative tolerance `1e-6`).
pub fn self_check(
    obj: &dyn Objective,
    radius: f64,
    samples: usize,
    seed: u64,
) -> Result<(), SelfCheckError> {
    let k = obj.dimension();
    let x_star = obj.maximizer().to_vec();
    let lipschitz = obj.lipschitz();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sample_point = |rng: &mut ChaCha8Rng| -> Vec<f64> {
        let dir = random_unit_vector(k, rng);
        let r = radius * rng.random_range(0.0..1.0f64);
        x_star.iter().zip(&dir).map(|(s, d)| s + r * d).collect()
    };

    let grad_star = obj.gradient(&x_star);
    for (i, gi) in grad_star.iter().enumerate() {
        if gi.abs() > 1e-9 {
            return Err(SelfCheckError::GradientAtMaximizer { i, value: *gi });
        }
    }

    for _ in 0..samples {
        let x = sample_point(&mut rng);
        let y = sample_point(&mut rng);
        let lambda: f64 = rng.random_range(0.0..=1.0);
        let mix: Vec<f64> = x
            .iter()
            .zip(&y)
            .map(|(a, b)| lambda * a + (1.0 - lambda) * b)
            .collect();
        let fx = obj.value(&x);
        let fy = obj.value(&y);
        let fmix = obj.value(&mix);
        let slack = 1e-9 * (1.0 + fx.abs() + fy.abs());
        if fmix < lambda * fx + (1.0 - lambda) * fy - slack {
            return Err(SelfCheckError::NotConcave {
                lambda,
                lhs: fmix,
                rhs: lambda * fx + (1.0 - lambda) * fy,
            });
        }

        let dist = euclidean_norm(&x.iter().zip(&y).map(|(a, b)| a - b).collect::<Vec<f64>>());
        let df = (fx - fy).abs();
        let bound = lipschitz * dist;
        if df > bound * (1.0 + 1e-12) + 1e-12 {
            return Err(SelfCheckError::LipschitzExceeded { df, bound });
        }

        let grad = obj.gradient(&x);
        let step = 1e-5;
        let mut xp = x.clone();
        for i in 0..k {
            xp[i] = x[i] + step;
            let fp = obj.value(&xp);
            xp[i] = x[i] - step;
            let fm = obj.value(&xp);
            xp[i] = x[i];
            let numeric = (fp - fm) / (2.0 * step);
            let tol = 1e-6 * grad[i].abs().max(numeric.abs()).max(1.0);
            if (grad[i] - numeric).abs() > tol {
                return Err(SelfCheckError::GradientMismatch {
                    i,
                    analytic: grad[i],
                    numeric,
                });
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn pseudo_huber_examples() {
        let f = pseudo_huber(vec![0.0, 0.0]).unwrap();
        assert_eq!(f.value(&[0.0, 0.0]), 0.0);
        let expected = -(10.0f64.sqrt() - 1.0) - (17.0f64.sqrt() - 1.0);
        assert_relative_eq!(f.value(&[3.0, 4.0]), expected, max_relative = 1e-15);

        let f1 = pseudo_huber(vec![0.0]).unwrap();
        assert_relative_eq!(
            f1.gradient(&[1.0])[0],
            -1.0 / 2.0f64.sqrt(),
            max_relative = 1e-15
        );
    }

    #[test]
    fn quadratic_examples() {
        let identity = vec![vec![1.0, 0.0], vec![0.0, 1.0]];
        let f = quadratic(vec![0.0, 0.0], identity, 10.0).unwrap();
        assert_eq!(f.value(&[1.0, 1.0]), -2.0);
        assert_eq!(f.gradient(&[1.0, 1.0]), vec![-2.0, -2.0]);

        let coupled = vec![vec![2.0, 1.0], vec![1.0, 2.0]];
        let f = quadratic(vec![0.0, 0.0], coupled, 10.0).unwrap();
        assert_eq!(f.value(&[1.0, 0.0]), -2.0);
    }

    #[test]
    fn quadratic_rejects_bad_matrices() {
        let asym = vec![vec![1.0, 0.5], vec![0.0, 1.0]];
        assert!(matches!(
            quadratic(vec![0.0, 0.0], asym, 1.0),
            Err(ObjectiveError::NotSymmetric { .. })
        ));
        let indefinite = vec![vec![1.0, 2.0], vec![2.0, 1.0]];
        assert!(matches!(
            quadratic(vec![0.0, 0.0], indefinite, 1.0),
            Err(ObjectiveError::NotPositiveDefinite { .. })
        ));
    }

    #[test]
    fn beta_pseudo_huber_1d() {
        let f = pseudo_huber(vec![0.0]).unwrap();
        let beta = beta_lower_bound(&f, 1.0, 10.0).unwrap();
        assert_relative_eq!(beta, 2.0f64.sqrt() - 1.0, max_relative = 1e-12);
    }

    #[test]
    fn beta_quadratic_1d() {
        let f = quadratic(vec![0.0], vec![vec![1.0]], 100.0).unwrap();
        let beta = beta_lower_bound(&f, 1.0, 10.0).unwrap();
        assert_relative_eq!(beta, 1.0, max_relative = 1e-12);
    }

    #[test]
    fn beta_pseudo_huber_2d_positive() {
        let f = pseudo_huber(vec![0.0, 0.0]).unwrap();
        let beta = beta_lower_bound(&f, 0.5, 10.0).unwrap();
        assert!(beta > 0.0);
        // the axis directions minimize the ratio for this objective
        let axis_ratio = ((1.0f64 + 0.25).sqrt() - 1.0) / 0.5;
        assert_relative_eq!(beta, axis_ratio, max_relative = 1e-12);
    }

    #[test]
    fn beta_detects_non_strict_margins() {
        // concave but flat on the unit ball: no positive margin at delta < 1
        struct Plateau;
        impl Objective for Plateau {
            fn dimension(&self) -> usize {
                1
            }
            fn maximizer(&self) -> &[f64] {
                &[0.0]
            }
            fn lipschitz(&self) -> f64 {
                1.0
            }
            fn value(&self, x: &[f64]) -> f64 {
                -(x[0].abs() - 1.0).max(0.0)
            }
            fn gradient(&self, x: &[f64]) -> Vec<f64> {
                vec![if x[0] > 1.0 {
                    -1.0
                } else if x[0] < -1.0 {
                    1.0
                } else {
                    0.0
                }]
            }
        }
        assert!(matches!(
            beta_lower_bound(&Plateau, 0.5, 5.0),
            Err(ObjectiveError::NonStrictMargin(_))
        ));
    }

    #[test]
    fn beta_rejects_bad_range() {
        let f = pseudo_huber(vec![0.0]).unwrap();
        assert!(beta_lower_bound(&f, 0.0, 1.0).is_err());
        assert!(beta_lower_bound(&f, 2.0, 1.0).is_err());
    }

    #[test]
    fn noise_support() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        assert_eq!(NoiseModel::Zero.sample(&mut rng), 0.0);
        for _ in 0..1000 {
            let v = NoiseModel::Rademacher { bound: 0.1 }.sample(&mut rng);
            assert!(v == 0.1 || v == -0.1);
            let u = NoiseModel::Uniform { bound: 0.1 }.sample(&mut rng);
            assert!((-0.1..=0.1).contains(&u));
        }
    }

    #[test]
    fn noise_is_zero_mean() {
        // empirical mean over 1e6 samples within 4G/1e3 of zero
        let n = 1_000_000;
        for model in [
            NoiseModel::Uniform { bound: 0.1 },
            NoiseModel::Rademacher { bound: 0.1 },
        ] {
            let mut rng = ChaCha8Rng::seed_from_u64(99);
            let mean: f64 = (0..n).map(|_| model.sample(&mut rng)).sum::<f64>() / n as f64;
            assert!(
                mean.abs() < 4.0 * model.bound() / 1e3,
                "mean {mean} too far from zero for {model:?}"
            );
        }
    }

    #[test]
    fn noise_rejects_bad_bound() {
        assert!(NoiseModel::Uniform { bound: -0.1 }.validate().is_err());
        assert!(NoiseModel::Uniform { bound: f64::NAN }.validate().is_err());
        assert!(NoiseModel::Zero.validate().is_ok());
    }

    #[test]
    fn builtins_pass_self_check() {
        let ph = pseudo_huber(vec![1.0, -2.0, 0.5, 3.0]).unwrap();
        self_check(&ph, 10.0, 200, 7).unwrap();

        let q = quadratic(vec![0.5, -0.5], vec![vec![2.0, 1.0], vec![1.0, 2.0]], 10.0).unwrap();
        self_check(&q, 10.0, 200, 7).unwrap();
    }

    #[test]
    fn objective_spec_builds() {
        let spec = ObjectiveSpec::PseudoHuber {
            x_star: vec![1.0, 2.0],
        };
        let obj = spec.build().unwrap();
        assert_eq!(obj.dimension(), 2);
        assert_eq!(obj.value(&[1.0, 2.0]), 0.0);
        assert_eq!(obj.domain_radius(), None);

        let spec = ObjectiveSpec::Quadratic {
            x_star: vec![0.0],
            matrix: vec![vec![1.0]],
            ball_radius: 5.0,
        };
        let obj = spec.build().unwrap();
        assert_eq!(obj.domain_radius(), Some(5.0));
    }
}
