use crate::{Error, Result};

use super::{check_variable_count, TruthTable};

/// Algebraic normal form: `coefficients[m]` is the coefficient of the monomial
/// `∏_{j ∈ m} x_{j+1}`; mask 0 is the constant term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnfPolynomial {
    n: usize,
    coefficients: Vec<bool>,
}

impl AnfPolynomial {
    pub fn from_coefficients(n: usize, coefficients: Vec<bool>) -> Result<Self> {
        check_variable_count(n)?;
        let expected = 1usize << n;
        if coefficients.len() != expected {
            return Err(Error::LengthMismatch {
                expected,
                actual: coefficients.len(),
            });
        }
        Ok(Self { n, coefficients })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coefficients(&self) -> &[bool] {
        &self.coefficients
    }

    pub fn coefficient(&self, mask: usize) -> bool {
        self.coefficients[mask]
    }

    /// Largest monomial size with a nonzero coefficient; 0 for constants.
    pub fn degree(&self) -> usize {
        self.coefficients
            .iter()
            .enumerate()
            .filter(|(_, &c)| c)
            .map(|(m, _)| m.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    pub fn is_affine(&self) -> bool {
        self.degree() <= 1
    }
}

// The binary Moebius transform is its own inverse.
fn moebius_in_place(values: &mut [bool]) {
    let mut half = 1;
    while half < values.len() {
        for block in values.chunks_exact_mut(2 * half) {
            let (lo, hi) = block.split_at_mut(half);
            for (a, b) in lo.iter().zip(hi.iter_mut()) {
                *b ^= *a;
            }
        }
        half *= 2;
    }
}

pub fn truth_table_to_anf(f: &TruthTable) -> AnfPolynomial {
    let mut coefficients = f.bits().to_vec();
    moebius_in_place(&mut coefficients);
    AnfPolynomial {
        n: f.n(),
        coefficients,
    }
}

pub fn anf_to_truth_table(p: &AnfPolynomial) -> TruthTable {
    let mut bits = p.coefficients.clone();
    moebius_in_place(&mut bits);
    TruthTable::from_bits(p.n, bits).expect("length preserved")
}
