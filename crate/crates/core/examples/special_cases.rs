//! The engine collapses to the classical iterations in the degenerate
//! cases: one agent, or all agents sharing a phase. Both are checked
//! bit-for-bit against standalone reference implementations.
//!
//! ```bash
//! cargo run -p async-kw --example special_cases
//! ```

use async_kw::cli::{regress, RegressMode};

fn main() {
    for (mode, label) in [
        (RegressMode::Kw1, "single agent (two-observation iteration)"),
        (
            RegressMode::Spsa,
            "synchronous agents (simultaneous perturbation)",
        ),
    ] {
        for seed in [42u64, 7, 1234] {
            match regress(mode, seed, 1000, false) {
                Ok(()) => println!("{label}: seed {seed} matches for 1000 cycles"),
                Err(e) => println!("{label}: seed {seed} FAILED: {e}"),
            }
        }
    }
    println!();
    match regress(RegressMode::Spsa, 7, 1000, true) {
        Err(e) => println!("fault injection caught as expected: {e}"),
        Ok(()) => println!("fault injection NOT caught - harness is broken"),
    }
}
