use std::io::Write;

use crate::{Error, Result};

use super::TruthTable;

/// In-place Walsh-Hadamard butterfly over a length-`2^n` integer vector.
///
/// Applying it twice multiplies the input by `2^n`.
pub fn fwht_in_place(values: &mut [i64]) {
    let len = values.len();
    debug_assert!(len.is_power_of_two());
    let mut half = 1;
    while half < len {
        for block in values.chunks_exact_mut(2 * half) {
            let (lo, hi) = block.split_at_mut(half);
            for (a, b) in lo.iter_mut().zip(hi.iter_mut()) {
                let (x, y) = (*a, *b);
                *a = x + y;
                *b = x - y;
            }
        }
        half *= 2;
    }
}

/// Walsh spectrum `W_f(ω) = Σ_x (-1)^{f(x) ⊕ ω·x}`, stored as exact integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WalshSpectrum {
    n: usize,
    values: Vec<i64>,
}

impl WalshSpectrum {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn get(&self, omega: usize) -> i64 {
        self.values[omega]
    }

    /// `W_f(ω) / 2^n`.
    pub fn normalized(&self, omega: usize) -> Result<f64> {
        let w = *self.values.get(omega).ok_or(Error::IndexOutOfRange {
            index: omega,
            n: self.n,
        })?;
        Ok(w as f64 / self.values.len() as f64)
    }

    /// All normalized coefficients, i.e. the Deutsch-Jozsa amplitudes.
    pub fn normalized_values(&self) -> Vec<f64> {
        let scale = self.values.len() as f64;
        self.values.iter().map(|&w| w as f64 / scale).collect()
    }

    pub fn max_abs(&self) -> u64 {
        self.values.iter().map(|w| w.unsigned_abs()).max().unwrap_or(0)
    }

    /// Index of the coefficient with the largest magnitude (lowest index on ties).
    pub fn peak(&self) -> usize {
        let max = self.max_abs();
        self.values.iter().position(|w| w.unsigned_abs() == max).unwrap_or(0)
    }

    /// `Σ_ω W_f(ω)^2`; equals `2^{2n}` for every function.
    pub fn energy(&self) -> u128 {
        self.values.iter().map(|&w| (w as i128 * w as i128) as u128).sum()
    }

    /// Nonlinearity `2^{n-1} - max|W|/2`.
    pub fn nonlinearity(&self) -> usize {
        (self.values.len() / 2) - (self.max_abs() / 2) as usize
    }

    /// Writes `omega,walsh,normalized` rows.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut writer = csv::Writer::from_writer(out);
        writer.write_record(["omega", "walsh", "normalized"])?;
        let scale = self.values.len() as f64;
        for (omega, &w) in self.values.iter().enumerate() {
            writer.write_record([
                omega.to_string(),
                w.to_string(),
                format!("{}", w as f64 / scale),
            ])?;
        }
        writer.flush()?;
        Ok(())
    }
}

/// Fast Walsh transform, `O(n 2^n)` integer operations.
pub fn walsh_transform(f: &TruthTable) -> WalshSpectrum {
    let mut values = f.signs();
    fwht_in_place(&mut values);
    WalshSpectrum { n: f.n(), values }
}

pub fn normalized_walsh(f: &TruthTable, omega: usize) -> Result<f64> {
    if omega >= f.len() {
        return Err(Error::IndexOutOfRange {
            index: omega,
            n: f.n(),
        });
    }
    Ok(walsh_transform(f).normalized(omega).expect("index checked"))
}

/// Distance from `f` to the nearest affine function.
pub fn nonlinearity(f: &TruthTable) -> usize {
    walsh_transform(f).nonlinearity()
}

/// `⌈ε·2^n⌉`, the Hamming distance that makes a function ε-far.
pub fn min_distance_for_epsilon(n: usize, epsilon: f64) -> Result<usize> {
    if !(epsilon > 0.0 && epsilon < 0.5) {
        return Err(Error::EpsilonOutOfRange(epsilon));
    }
    Ok((epsilon * (1u64 << n) as f64).ceil() as usize)
}

/// True iff `nl(f) >= ⌈ε·2^n⌉`.
pub fn epsilon_far_from_affine(f: &TruthTable, epsilon: f64) -> Result<bool> {
    let needed = min_distance_for_epsilon(f.n(), epsilon)?;
    Ok(nonlinearity(f) >= needed)
}
