//! Deterministic RNG stream derivation.
//!
//! Every random draw in a simulation comes from a named ChaCha8 stream so
//! that runs are reproducible and composable: agent `k` always sees the
//! same sign/noise sequence for a given seed, regardless of how many other
//! agents exist or which phases they use.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// SplitMix64 finalizer, used to decorrelate composed seeds.
pub fn mix64(mut x: u64) -> u64 {
    x = (x ^ (x >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    x ^ (x >> 31)
}

/// Seed for replication `r` of an experiment with master seed `seed`.
pub fn replication_seed(seed: u64, replication: u64) -> u64 {
    mix64(seed ^ mix64(replication.wrapping_add(0x9E37_79B9_7F4A_7C15)))
}

/// The stream agent `k` draws its perturbation signs and observation noise
/// from. Streams for distinct agents never overlap (ChaCha streams), so
/// adding agents does not disturb existing ones.
pub fn agent_stream(seed: u64, agent: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(agent as u64);
    rng
}
