//! Thin command-line front end; all logic lives in the library.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use async_kw::cli::{self, ExperimentConfig, RegressMode};

#[derive(Parser)]
#[command(
    name = "async-kw",
    version,
    about = "Asynchronous derivative-free maximization experiments"
)]
struct Args {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the replications described by a TOML config file.
    Run {
        /// Path to the experiment config.
        config: PathBuf,
        /// Max concurrent replications (0 = all cores).
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Run even if the schedule fails the validity conditions.
        #[arg(long)]
        allow_unvalidated: bool,
    },
    /// Print the analytic validity report for a gain-exponent pair.
    ValidateSchedule {
        /// Gain exponent g in gamma(n) = (n+s)^(-g).
        #[arg(long = "gamma-exp")]
        gamma_exp: String,
        /// Perturbation exponent e in epsilon(n) = (n+s)^(-e).
        #[arg(long = "eps-exp")]
        eps_exp: String,
        /// Index shift s.
        #[arg(long, default_value_t = 1)]
        shift: u64,
    },
    /// Check the engine bit-for-bit against a standalone reference
    /// implementation of a degenerate case.
    Regress {
        /// kw1 (single agent) or spsa (all agents in phase).
        #[arg(long)]
        mode: String,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        cycles: u64,
        /// Shift the reference's cycle index by one; the mismatch must be
        /// caught (self-test of the harness).
        #[arg(long)]
        inject_fault: bool,
    },
}

fn main() -> ExitCode {
    let args = Args::parse();
    match dispatch(args) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}

fn dispatch(args: Args) -> Result<(), cli::CliError> {
    match args.command {
        Command::Run {
            config,
            jobs,
            allow_unvalidated,
        } => {
            let config = ExperimentConfig::load(&config)?;
            let summary = cli::run_experiment(&config, jobs, allow_unvalidated)?;
            println!(
                "{} replications done in {:.2}s: median final u = {:.6}, martingale consistent {}/{}, c decaying {}/{}",
                summary.aggregate.replication_count,
                summary.aggregate.wall_time_secs,
                summary.aggregate.median_final_u,
                summary.aggregate.martingale_consistent_count,
                summary.aggregate.replication_count,
                summary.aggregate.c_decay_decaying_count,
                summary.aggregate.replication_count,
            );
            println!("outputs in {}", config.resolve_output_dir().display());
            Ok(())
        }
        Command::ValidateSchedule {
            gamma_exp,
            eps_exp,
            shift,
        } => {
            let g: f64 = gamma_exp.parse().map_err(|_| {
                cli::CliError::InvalidConfig(format!("non-numeric --gamma-exp {gamma_exp}"))
            })?;
            let e: f64 = eps_exp.parse().map_err(|_| {
                cli::CliError::InvalidConfig(format!("non-numeric --eps-exp {eps_exp}"))
            })?;
            let verdict = cli::validate_schedule(g, e, shift)?;
            println!("{}", serde_json::to_string_pretty(&verdict).unwrap());
            Ok(())
        }
        Command::Regress {
            mode,
            seed,
            cycles,
            inject_fault,
        } => {
            let mode = match mode.as_str() {
                "kw1" => RegressMode::Kw1,
                "spsa" => RegressMode::Spsa,
                other => {
                    return Err(cli::CliError::InvalidConfig(format!(
                        "unknown regression mode {other}; use kw1 or spsa"
                    )))
                }
            };
            cli::regress(mode, seed, cycles, inject_fault)?;
            println!(
                "{} trajectories match the reference bit-for-bit over {cycles} cycles (seed {seed})",
                mode.as_str()
            );
            Ok(())
        }
    }
}
