//! Shared test oracles, independent of the library's analytic code paths.

/// Numeric convergence probe for a positive, monotone term sequence:
/// compare consecutive decade block sums. For power-law tails the ratio
/// `D(10^5..10^6) / D(10^4..10^5)` approaches `10^(1-p)`, so convergent
/// series (p > 1) fall well below 1 while divergent ones (p <= 1) sit at
/// or above it. The 0.9 cut separates the two by a wide margin for every
/// exponent this suite feeds it.
pub fn series_converges_numerically(term: impl Fn(u64) -> f64) -> bool {
    let d4: f64 = (10_000u64..100_000).map(&term).sum();
    let d5: f64 = (100_000u64..1_000_000).map(&term).sum();
    d5 / d4 <= 0.9
}

/// Numeric boundedness probe: a monotone power-law sequence is bounded
/// iff it does not grow between widely separated indices.
pub fn sequence_bounded_numerically(term: impl Fn(u64) -> f64) -> bool {
    term(1_000_000) <= term(1_000) * (1.0 + 1e-6)
}
