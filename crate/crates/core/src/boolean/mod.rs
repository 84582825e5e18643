//! Boolean functions on `n` variables and their spectral invariants.
//!
//! Index convention: entry `i` of a truth table holds `f(x)` where bit `j` of
//! `i` is the value of variable `x_{j+1}`, so `x_1` varies fastest. The same
//! convention indexes Walsh coefficients `ω` and ANF monomial masks.

mod anf;
mod fixtures;
mod io;
mod truth_table;
mod walsh;

pub use anf::{anf_to_truth_table, truth_table_to_anf, AnfPolynomial};
pub use fixtures::{make_affine, make_bent, make_linear, plant_distance, random_function};
pub use truth_table::{hamming_distance, inner_product, TruthTable};
pub use walsh::{
    epsilon_far_from_affine, fwht_in_place, min_distance_for_epsilon, nonlinearity,
    normalized_walsh, walsh_transform, WalshSpectrum,
};

use crate::{Error, Result, MAX_VARIABLES};

pub(crate) fn check_variable_count(n: usize) -> Result<()> {
    if (1..=MAX_VARIABLES).contains(&n) {
        Ok(())
    } else {
        Err(Error::UnsupportedVariableCount(n))
    }
}
