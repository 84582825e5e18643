//! `qlint` subcommands. [`cli_main`] returns the process exit code:
//! 0 on success, 1 on usage or input errors, 2 on infeasible configurations.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::boolean::{truth_table_to_anf, walsh_transform, TruthTable};
use crate::testers::{blr_test, dj_repetition_test, grover_test, IterationPolicy, DEFAULT_TARGET};
use crate::{Error, Result};

use super::config::{Algorithm, ExperimentConfig};
use super::fit::{fit_exponent, read_sweep_csv};
use super::sweep::{run_sweep_with_threads, thread_count_from_env};

#[derive(Parser, Debug)]
#[command(name = "qlint", version, about = "Affinity testing of Boolean functions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Walsh spectrum, nonlinearity and distance to the affine class.
    Analyze {
        table: PathBuf,
        /// Write the spectrum CSV here instead of printing it.
        #[arg(long)]
        spectrum: Option<PathBuf>,
    },
    /// Run one tester and print its report as JSON.
    Test {
        #[arg(long, value_enum)]
        alg: Algorithm,
        #[arg(long)]
        eps: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Repetitions (blr, dj) or Grover iterations; derived from ε if omitted.
        #[arg(long)]
        t: Option<u64>,
        /// Grover iteration rule; `fixed` uses `--t`.
        #[arg(long, value_enum)]
        policy: Option<PolicyArg>,
        #[arg(long, default_value_t = DEFAULT_TARGET)]
        target: f64,
        table: PathBuf,
    },
    /// Run an ε sweep and write sweep.csv and sweep.json.
    Sweep {
        #[arg(long)]
        config: PathBuf,
        #[arg(long, default_value = ".")]
        out_dir: PathBuf,
        /// Worker threads (default: QLINT_THREADS or core count).
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Fit `t* ∝ ε^{-a}` to a sweep CSV.
    Fit { csv: PathBuf },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum PolicyArg {
    Fixed,
    ExactTheta,
    PaperEpsilon,
}

impl ValueEnum for Algorithm {
    fn value_variants<'a>() -> &'a [Self] {
        &[Self::Blr, Self::Dj, Self::Grover]
    }

    fn to_possible_value(&self) -> Option<clap::builder::PossibleValue> {
        Some(clap::builder::PossibleValue::new(match self {
            Self::Blr => "blr",
            Self::Dj => "dj",
            Self::Grover => "grover",
        }))
    }
}

pub fn cli_main<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match run(cli.command, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "qlint: {e}");
            exit_code(&e)
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Infeasible(_)
        | Error::EpsilonOutOfRange(_)
        | Error::OddVariableCount(_)
        | Error::PlantedDistanceTooLarge { .. } => 2,
        _ => 1,
    }
}

fn run(command: Command, out: &mut dyn Write) -> Result<()> {
    match command {
        Command::Analyze { table, spectrum } => analyze(&TruthTable::read_file(table)?, spectrum, out),
        Command::Test {
            alg,
            eps,
            seed,
            t,
            policy,
            target,
            table,
        } => {
            let f = TruthTable::read_file(table)?;
            if !(eps > 0.0 && eps < 0.5) {
                return Err(Error::EpsilonOutOfRange(eps));
            }
            if !(target > 0.0 && target < 1.0) {
                return Err(Error::InvalidArgument(format!("target {target} outside (0, 1)")));
            }
            let report = match alg {
                Algorithm::Blr => blr_test(&f, t.unwrap_or_else(|| repetitions(1.0 - eps, target)), seed),
                Algorithm::Dj => dj_repetition_test(&f, t.unwrap_or_else(|| repetitions(1.0 - 2.0 * eps, target)), seed),
                Algorithm::Grover => {
                    let policy = match (policy, t) {
                        (Some(PolicyArg::ExactTheta), _) => IterationPolicy::ExactTheta,
                        (Some(PolicyArg::PaperEpsilon), _) | (None, None) => IterationPolicy::paper_epsilon(eps)?,
                        (Some(PolicyArg::Fixed) | None, Some(t)) => IterationPolicy::Fixed(t),
                        (Some(PolicyArg::Fixed), None) => {
                            return Err(Error::InvalidArgument("--policy fixed needs --t".into()))
                        }
                    };
                    grover_test(&f, policy, seed)?
                }
            };
            writeln!(out, "{}", report.to_json())?;
            Ok(())
        }
        Command::Sweep {
            config,
            out_dir,
            threads,
        } => {
            let cfg = ExperimentConfig::read_file(config)?;
            let result = run_sweep_with_threads(&cfg, threads.unwrap_or_else(thread_count_from_env))?;
            result.write_files(&out_dir)?;
            for w in &result.warnings {
                writeln!(out, "warning: {w}")?;
            }
            match result.fitted_exponent {
                Some(a) => writeln!(out, "fitted exponent {a:.4}")?,
                None => writeln!(out, "fitted exponent unavailable")?,
            }
            writeln!(out, "wrote {}", out_dir.join("sweep.csv").display())?;
            Ok(())
        }
        Command::Fit { csv } => {
            let points = read_sweep_csv(std::fs::File::open(csv)?)?;
            writeln!(out, "{}", fit_exponent(&points)?.to_json())?;
            Ok(())
        }
    }
}

/// Smallest `t` with `miss^t <= 1 - target`, where `miss` bounds the
/// per-round probability of not catching an ε-far function.
fn repetitions(miss: f64, target: f64) -> u64 {
    ((1.0 - target).ln() / miss.ln()).ceil().max(1.0) as u64
}

fn analyze(f: &TruthTable, spectrum_path: Option<PathBuf>, out: &mut dyn Write) -> Result<()> {
    let spectrum = walsh_transform(f);
    let peak = spectrum.peak();
    let nl = spectrum.nonlinearity();
    writeln!(out, "n={}", f.n())?;
    writeln!(out, "weight={}", f.weight())?;
    writeln!(out, "nonlinearity={nl}")?;
    writeln!(out, "peak_omega={peak}")?;
    writeln!(out, "peak_walsh={}", spectrum.get(peak))?;
    writeln!(out, "epsilon_distance={}", nl as f64 / f.len() as f64)?;
    writeln!(out, "anf_degree={}", truth_table_to_anf(f).degree())?;
    match spectrum_path {
        Some(path) => spectrum.write_csv(std::fs::File::create(path)?)?,
        None => {
            writeln!(out)?;
            spectrum.write_csv(&mut *out)?;
        }
    }
    Ok(())
}
