use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::boolean::{
    make_affine, make_bent, nonlinearity, plant_distance, random_function, walsh_transform,
    TruthTable,
};
use crate::testers::exact::{algorithm2_error_from_spectrum, policy_success_from_spectrum};
use crate::testers::{blr_test, dj_repetition_test, grover_test};
use crate::{Error, Result};

use super::config::{Algorithm, ExperimentConfig, Fixture};
use super::fit::fit_exponent;
use super::seeds::trial_seed;
use super::stats::wilson_interval;

/// Geometric grid from the original experiment plan, kept for comparison runs.
pub const SPEC_GRID: [f64; 9] = [0.25, 0.177, 0.125, 0.088, 0.0625, 0.044, 0.031, 0.022, 0.0156];

const RANDOM_FAR_ATTEMPTS: usize = 10_000;

/// Default ε grid: `2^{-5}` down to `2^{-9}` in steps of `√2`.
///
/// Larger ε leaves the amplified tester with `t = 0` iterations, where
/// `log t` is undefined; this range keeps every point at `t >= 1` for
/// `n = 12` while staying below the planted-distance limit.
pub fn default_epsilons() -> Vec<f64> {
    (0..9).map(|i| 2f64.powf(-5.0 - 0.5 * i as f64)).collect()
}

/// Worker count from `QLINT_THREADS`, else the number of available cores.
pub fn thread_count_from_env() -> usize {
    std::env::var("QLINT_THREADS")
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&t| t > 0)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ProbeSummary {
    pub t: u64,
    pub success_rate: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepRecord {
    pub epsilon: f64,
    /// Hamming distance planted into each fixture.
    pub distance: usize,
    /// Minimal `t` whose success rate reached the target; for policy-driven
    /// Grover runs, the median iteration count the policy chose.
    pub t_star: Option<u64>,
    pub success_rate: f64,
    pub mean_queries: f64,
    pub mean_iterations: f64,
    pub wilson_low: f64,
    pub wilson_high: f64,
    /// Closed-form success probability averaged over the same fixtures.
    pub exact_success: Option<f64>,
    pub trials: u64,
    pub probes: Vec<ProbeSummary>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepResult {
    pub config: ExperimentConfig,
    pub records: Vec<SweepRecord>,
    pub fitted_exponent: Option<f64>,
    pub fit_residual: Option<f64>,
    pub warnings: Vec<String>,
}

impl SweepResult {
    /// `epsilon,t_star,success_rate,mean_queries,wilson_low,wilson_high`.
    pub fn to_csv(&self) -> Result<String> {
        let mut writer = csv::Writer::from_writer(Vec::new());
        writer.write_record([
            "epsilon",
            "t_star",
            "success_rate",
            "mean_queries",
            "wilson_low",
            "wilson_high",
        ])?;
        for r in &self.records {
            writer.write_record([
                format!("{}", r.epsilon),
                r.t_star.map(|t| t.to_string()).unwrap_or_default(),
                format!("{:.6}", r.success_rate),
                format!("{:.4}", r.mean_queries),
                format!("{:.6}", r.wilson_low),
                format!("{:.6}", r.wilson_high),
            ])?;
        }
        let bytes = writer.into_inner().map_err(|e| Error::Io(e.into_error()))?;
        Ok(String::from_utf8(bytes).expect("ascii csv"))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("sweep result serializes")
    }

    /// Writes `sweep.csv` and `sweep.json` into `dir`.
    pub fn write_files(&self, dir: impl AsRef<Path>) -> Result<()> {
        let dir = dir.as_ref();
        std::fs::create_dir_all(dir)?;
        std::fs::write(dir.join("sweep.csv"), self.to_csv()?)?;
        std::fs::write(dir.join("sweep.json"), self.to_json() + "\n")?;
        Ok(())
    }

    /// `(ε, t_star)` pairs usable for exponent fitting.
    pub fn fit_points(&self) -> Vec<(f64, f64)> {
        self.records
            .iter()
            .filter_map(|r| r.t_star.filter(|&t| t > 0).map(|t| (r.epsilon, t as f64)))
            .collect()
    }
}

struct Trial {
    rejected: bool,
    queries: u64,
    iterations: u64,
    exact: Option<f64>,
}

#[derive(Clone, Debug)]
struct ProbeStats {
    t: u64,
    successes: u64,
    trials: u64,
    mean_queries: f64,
    mean_iterations: f64,
    median_iterations: u64,
    exact_success: Option<f64>,
}

impl ProbeStats {
    fn rate(&self) -> f64 {
        self.successes as f64 / self.trials as f64
    }
}

struct Point<'a> {
    config: &'a ExperimentConfig,
    index: usize,
    epsilon: f64,
    distance: usize,
}

impl Point<'_> {
    fn fixture(&self, rng: &mut ChaCha8Rng) -> Result<TruthTable> {
        let cfg = self.config;
        let size = 1usize << cfg.n;
        match cfg.fixture {
            Fixture::Planted { omega, a0 } => {
                let omega = omega.unwrap_or_else(|| rng.random_range(0..size));
                let a0 = a0.unwrap_or_else(|| rng.random());
                plant_distance(cfg.n, omega, a0, self.distance, rng)
            }
            Fixture::Bent => make_bent(cfg.n),
            Fixture::RandomFar => {
                for _ in 0..RANDOM_FAR_ATTEMPTS {
                    let f = random_function(cfg.n, rng)?;
                    if nonlinearity(&f) >= self.distance {
                        return Ok(f);
                    }
                }
                Err(Error::Infeasible(format!(
                    "no random function with nonlinearity >= {} in {RANDOM_FAR_ATTEMPTS} draws",
                    self.distance
                )))
            }
            Fixture::Affine => {
                let omega = rng.random_range(0..size);
                make_affine(cfg.n, omega, rng.random())
            }
        }
    }

    fn trial(&self, probe: u64, trial: u64) -> Result<Trial> {
        let cfg = self.config;
        let mut rng = ChaCha8Rng::seed_from_u64(trial_seed(cfg.seed, self.index, probe, trial));
        let f = self.fixture(&mut rng)?;
        let seed = rng.random();
        let (report, exact) = match cfg.algorithm {
            Algorithm::Blr => (blr_test(&f, probe, seed), None),
            Algorithm::Dj => {
                let exact = 1.0 - algorithm2_error_from_spectrum(&walsh_transform(&f), probe);
                (dj_repetition_test(&f, probe, seed), Some(exact))
            }
            Algorithm::Grover => {
                let policy = cfg.policy.policy(self.epsilon, probe);
                let exact = policy_success_from_spectrum(&walsh_transform(&f), policy);
                (grover_test(&f, policy, seed)?, Some(exact))
            }
        };
        Ok(Trial {
            rejected: report.rejected(),
            queries: report.queries,
            iterations: report.iterations,
            exact,
        })
    }

    fn evaluate(&self, probe: u64, pool: &rayon::ThreadPool) -> Result<ProbeStats> {
        let trials = self.config.trials;
        // collect in trial order so float sums do not depend on scheduling
        let outcomes: Vec<Trial> = pool.install(|| {
            (0..trials)
                .into_par_iter()
                .map(|i| self.trial(probe, i))
                .collect::<Result<Vec<_>>>()
        })?;
        let count = outcomes.len() as f64;
        let mut iterations: Vec<u64> = outcomes.iter().map(|o| o.iterations).collect();
        iterations.sort_unstable();
        let exact_success = outcomes
            .iter()
            .map(|o| o.exact)
            .sum::<Option<f64>>()
            .map(|s| s / count);
        Ok(ProbeStats {
            t: probe,
            successes: outcomes.iter().filter(|o| o.rejected).count() as u64,
            trials,
            mean_queries: outcomes.iter().map(|o| o.queries as f64).sum::<f64>() / count,
            mean_iterations: iterations.iter().map(|&t| t as f64).sum::<f64>() / count,
            median_iterations: iterations[(iterations.len() - 1) / 2],
            exact_success,
        })
    }

    /// Doubling from the smallest admissible `t` until the target is met,
    /// then bisection down to the first passing `t`.
    fn search(&self, pool: &rayon::ThreadPool) -> Result<(Option<u64>, ProbeStats, Vec<ProbeStats>)> {
        let cfg = self.config;
        let mut memo: BTreeMap<u64, ProbeStats> = BTreeMap::new();
        let mut probe = |t: u64| -> Result<bool> {
            if let Entry::Vacant(slot) = memo.entry(t) {
                slot.insert(self.evaluate(t, pool)?);
            }
            Ok(memo[&t].rate() >= cfg.target)
        };

        let mut t = if cfg.algorithm == Algorithm::Grover { 0 } else { 1 }.min(cfg.max_t);
        let mut failing: Option<u64> = None;
        let mut passing: Option<u64> = None;
        loop {
            if probe(t)? {
                passing = Some(t);
                break;
            }
            failing = Some(t);
            if t >= cfg.max_t {
                break;
            }
            t = if t == 0 { 1 } else { (2 * t).min(cfg.max_t) };
        }
        if let (Some(mut lo), Some(mut hi)) = (failing, passing) {
            while hi - lo > 1 {
                let mid = lo + (hi - lo) / 2;
                if probe(mid)? {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            passing = Some(hi);
        }
        let reported = passing.or(failing).expect("at least one probe");
        let stats = memo[&reported].clone();
        Ok((passing, stats, memo.into_values().collect()))
    }
}

fn record(point: &Point<'_>, t_star: Option<u64>, stats: &ProbeStats, probes: &[ProbeStats]) -> SweepRecord {
    let (wilson_low, wilson_high) = wilson_interval(stats.successes, stats.trials);
    SweepRecord {
        epsilon: point.epsilon,
        distance: point.distance,
        t_star,
        success_rate: stats.rate(),
        mean_queries: stats.mean_queries,
        mean_iterations: stats.mean_iterations,
        wilson_low,
        wilson_high,
        exact_success: stats.exact_success,
        trials: stats.trials,
        probes: probes
            .iter()
            .map(|p| ProbeSummary {
                t: p.t,
                success_rate: p.rate(),
            })
            .collect(),
    }
}

/// Runs the sweep with [`thread_count_from_env`] workers.
pub fn run_sweep(config: &ExperimentConfig) -> Result<SweepResult> {
    run_sweep_with_threads(config, thread_count_from_env())
}

/// Runs the sweep on `threads` workers. The result does not depend on
/// `threads`: every trial seed is derived from its (point, probe, trial)
/// coordinates.
pub fn run_sweep_with_threads(config: &ExperimentConfig, threads: usize) -> Result<SweepResult> {
    config.validate()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads.max(1))
        .build()
        .map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))?;

    let mut records = Vec::with_capacity(config.epsilons.len());
    let mut warnings = Vec::new();
    for (index, &epsilon) in config.epsilons.iter().enumerate() {
        let point = Point {
            config,
            index,
            epsilon,
            distance: config.distance_for(epsilon)?,
        };
        if config.searches_iterations() {
            let (t_star, stats, probes) = point.search(&pool)?;
            if t_star.is_none() {
                warnings.push(format!(
                    "epsilon {epsilon}: target {:.4} not reached by t = {}",
                    config.target, config.max_t
                ));
            }
            records.push(record(&point, t_star, &stats, &probes));
        } else {
            let stats = point.evaluate(0, &pool)?;
            if stats.rate() < config.target {
                warnings.push(format!(
                    "epsilon {epsilon}: policy success {:.4} below target {:.4}",
                    stats.rate(),
                    config.target
                ));
            }
            let probes = [stats.clone()];
            records.push(record(&point, Some(stats.median_iterations), &stats, &probes));
        }
    }

    let mut by_eps: Vec<&SweepRecord> = records.iter().collect();
    by_eps.sort_by(|a, b| a.epsilon.total_cmp(&b.epsilon));
    for pair in by_eps.windows(2) {
        if let (Some(small), Some(large)) = (pair[0].t_star, pair[1].t_star) {
            if large > small {
                warnings.push(format!(
                    "t_star rises from {small} at epsilon {} to {large} at epsilon {}",
                    pair[0].epsilon, pair[1].epsilon
                ));
            }
        }
    }

    let mut result = SweepResult {
        config: config.clone(),
        records,
        fitted_exponent: None,
        fit_residual: None,
        warnings,
    };
    match fit_exponent(&result.fit_points()) {
        Ok(fit) => {
            result.fitted_exponent = Some(fit.slope);
            result.fit_residual = Some(fit.residual);
        }
        Err(e) => result.warnings.push(format!("no exponent fit: {e}")),
    }
    Ok(result)
}
