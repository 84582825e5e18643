use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::boolean::{make_bent, min_distance_for_epsilon, nonlinearity};
use crate::testers::{IterationPolicy, DEFAULT_TARGET};
use crate::{Error, Result};

use super::sweep::default_epsilons;

pub const DEFAULT_TRIALS: u64 = 2000;
pub const DEFAULT_MAX_T: u64 = 1 << 14;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Algorithm {
    Blr,
    Dj,
    Grover,
}

/// Iteration rule for the Grover tester in a sweep. `Fixed` searches over `t`;
/// the other two let the policy choose `t` per trial.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PolicySelector {
    #[default]
    Fixed,
    ExactTheta,
    PaperEpsilon,
}

impl PolicySelector {
    pub fn policy(self, epsilon: f64, t: u64) -> IterationPolicy {
        match self {
            Self::Fixed => IterationPolicy::Fixed(t),
            Self::ExactTheta => IterationPolicy::ExactTheta,
            Self::PaperEpsilon => IterationPolicy::PaperEpsilon(epsilon),
        }
    }
}

/// Functions a sweep point is evaluated on.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Fixture {
    /// Affine function with `⌈ε·2^n⌉` planted flips. Unset fields are drawn
    /// per trial.
    Planted {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        omega: Option<usize>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        a0: Option<bool>,
    },
    /// The inner-product bent function.
    Bent,
    /// Uniform random functions conditioned on `nl >= ⌈ε·2^n⌉`.
    RandomFar,
    /// Affine control (no flips): every rejection would be a false one.
    Affine,
}

impl Default for Fixture {
    fn default() -> Self {
        Self::Planted {
            omega: None,
            a0: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub n: usize,
    #[serde(default = "default_epsilons")]
    pub epsilons: Vec<f64>,
    #[serde(default = "default_trials")]
    pub trials: u64,
    #[serde(default = "default_target")]
    pub target: f64,
    pub algorithm: Algorithm,
    #[serde(default)]
    pub policy: PolicySelector,
    #[serde(default)]
    pub seed: u64,
    #[serde(default)]
    pub fixture: Fixture,
    /// Upper end of the `t` search.
    #[serde(default = "default_max_t")]
    pub max_t: u64,
}

fn default_trials() -> u64 {
    DEFAULT_TRIALS
}

fn default_target() -> f64 {
    DEFAULT_TARGET
}

fn default_max_t() -> u64 {
    DEFAULT_MAX_T
}

impl ExperimentConfig {
    /// Config with every optional field at its default.
    pub fn new(n: usize, algorithm: Algorithm) -> Self {
        Self {
            n,
            epsilons: default_epsilons(),
            trials: DEFAULT_TRIALS,
            target: DEFAULT_TARGET,
            algorithm,
            policy: PolicySelector::default(),
            seed: 0,
            fixture: Fixture::default(),
            max_t: DEFAULT_MAX_T,
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn read_file(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    /// Whether `t` is searched (true) or chosen by the policy per trial.
    pub fn searches_iterations(&self) -> bool {
        self.algorithm != Algorithm::Grover || self.policy == PolicySelector::Fixed
    }

    /// Planted Hamming distance for a grid point; 0 for affine controls.
    pub fn distance_for(&self, epsilon: f64) -> Result<usize> {
        match self.fixture {
            Fixture::Affine => Ok(0),
            _ => min_distance_for_epsilon(self.n, epsilon),
        }
    }

    pub fn validate(&self) -> Result<()> {
        crate::boolean::check_variable_count(self.n)?;
        if self.trials == 0 {
            return Err(Error::Infeasible("trials must be positive".into()));
        }
        if self.epsilons.is_empty() {
            return Err(Error::Infeasible("empty epsilon grid".into()));
        }
        if !(self.target > 0.0 && self.target < 1.0) {
            return Err(Error::Infeasible(format!("target {} outside (0, 1)", self.target)));
        }
        if self.max_t == 0 {
            return Err(Error::Infeasible("max_t must be positive".into()));
        }
        let size = 1usize << self.n;
        let bent_nl = match self.fixture {
            Fixture::Bent => {
                if self.n % 2 == 1 {
                    return Err(Error::Infeasible(format!("no bent function on {} variables", self.n)));
                }
                Some(nonlinearity(&make_bent(self.n)?))
            }
            _ => None,
        };
        if let Fixture::Planted { omega: Some(omega), .. } = self.fixture {
            if omega >= size {
                return Err(Error::Infeasible(format!("omega {omega} out of range for n = {}", self.n)));
            }
        }
        for &eps in &self.epsilons {
            let k = min_distance_for_epsilon(self.n, eps)
                .map_err(|_| Error::Infeasible(format!("epsilon {eps} outside (0, 1/2)")))?;
            match self.fixture {
                Fixture::Planted { .. } if k >= size / 4 => {
                    return Err(Error::Infeasible(format!(
                        "epsilon {eps}: planted distance {k} must stay below 2^(n-2) = {}",
                        size / 4
                    )))
                }
                Fixture::Bent if Some(k) > bent_nl => {
                    return Err(Error::Infeasible(format!(
                        "epsilon {eps}: bent function has nonlinearity {} < {k}",
                        bent_nl.unwrap_or(0)
                    )))
                }
                Fixture::RandomFar => {
                    let half = self.n / 2;
                    let max_nl = (size / 2).saturating_sub(1 << half.saturating_sub(1));
                    if k > max_nl {
                        return Err(Error::Infeasible(format!(
                            "epsilon {eps}: distance {k} exceeds the covering bound {max_nl}"
                        )));
                    }
                }
                _ => {}
            }
        }
        Ok(())
    }
}
