//! Decision procedures for "affine or ε-far from affine".
//!
//! All three testers have one-sided error: an affine input is always
//! accepted. [`exact`] gives the closed-form acceptance/rejection
//! probabilities of the two quantum testers, used to validate Monte Carlo
//! runs.

mod blr;
mod dj;
pub mod exact;
mod grover;

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::quantum::AngleSplit;
use crate::{Error, Result};

pub use blr::blr_test;
pub use dj::{dj_repetition_test, DjRepetitionTester};
pub use exact::{exact_algorithm2_error, exact_algorithm3_success};
pub use grover::{grover_test, GroverTester};

/// Default acceptance threshold for "high probability".
pub const DEFAULT_TARGET: f64 = 2.0 / 3.0;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    Affine,
    NotAffine,
}

/// Outcome of one tester run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TestReport {
    pub verdict: Verdict,
    /// Oracle calls consumed (`U_f` applications or classical evaluations).
    pub queries: u64,
    /// Iteration parameter `t` the run used.
    pub iterations: u64,
    pub seed: u64,
    /// Measured patterns (quantum testers) or sampled `x, y` pairs (BLR).
    pub transcript: Vec<u64>,
}

impl TestReport {
    pub fn rejected(&self) -> bool {
        self.verdict == Verdict::NotAffine
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

/// How the Grover tester picks its iteration count.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum IterationPolicy {
    /// Aim `(2t+1)θ_min` at `π/2` with `θ_min = arcsin(√(2ε))`.
    PaperEpsilon(f64),
    /// Same rule with the true angle of the measured pattern (simulation only).
    ExactTheta,
    Fixed(u64),
}

impl IterationPolicy {
    pub fn paper_epsilon(epsilon: f64) -> Result<Self> {
        let policy = Self::PaperEpsilon(epsilon);
        policy.validate()?;
        Ok(policy)
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            Self::PaperEpsilon(eps) if !(eps > 0.0 && eps < 0.5) => Err(Error::EpsilonOutOfRange(eps)),
            _ => Ok(()),
        }
    }

    /// Iteration count for a run whose measured pattern splits as `split`.
    pub fn iterations(&self, split: &AngleSplit) -> u64 {
        match *self {
            Self::PaperEpsilon(eps) => iterations_for_angle((2.0 * eps).sqrt().asin()),
            Self::ExactTheta => iterations_for_angle(split.folded_theta()),
            Self::Fixed(t) => t,
        }
    }
}

/// Non-affine functions on at most 24 variables have `θ >= 2^{-11}`.
pub const ZERO_ANGLE: f64 = 1e-9;

/// `max(0, round(π/(4θ) − ½))`, the integer `t` putting `(2t+1)θ` closest to
/// `π/2`. Angles below [`ZERO_ANGLE`] have nothing to amplify and yield 0.
pub fn iterations_for_angle(theta: f64) -> u64 {
    if theta.is_nan() || theta <= ZERO_ANGLE {
        return 0;
    }
    (PI / (4.0 * theta) - 0.5).round().max(0.0) as u64
}
