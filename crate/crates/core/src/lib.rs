//! Exact linearity testing of Boolean functions.
//!
//! The crate is split into four layers:
//!
//! - [`boolean`]: truth tables, Walsh spectra, ANF, nonlinearity and fixture
//!   generators.
//! - [`quantum`]: a real-amplitude state-vector simulator for the
//!   Deutsch-Jozsa operator, the marked-phase oracle and the reflection about
//!   the prepared state, with oracle-query accounting.
//! - [`testers`]: the classical BLR test, the repeated Deutsch-Jozsa test and
//!   the Grover-amplified test, plus closed-form error probabilities.
//! - [`harness`]: ε sweeps, minimal-iteration search, exponent fitting and the
//!   `qlint` command line.

pub mod boolean;
mod error;
pub mod harness;
pub mod quantum;
pub mod testers;

pub use error::{Error, Result};

/// Largest supported variable count.
pub const MAX_VARIABLES: usize = 24;
