//! Experiment driver: ε sweeps over fixture families, minimal-iteration
//! search, power-law fitting and the `qlint` command line.

pub mod cli;
mod config;
mod fit;
mod seeds;
mod stats;
mod sweep;

pub use config::{Algorithm, ExperimentConfig, Fixture, PolicySelector, DEFAULT_MAX_T, DEFAULT_TRIALS};
pub use fit::{fit_exponent, read_sweep_csv, ExponentFit, FitPoint};
pub use stats::wilson_interval;
pub use sweep::{
    default_epsilons, run_sweep, run_sweep_with_threads, thread_count_from_env, SweepRecord,
    SweepResult, SPEC_GRID,
};
