use std::io::Write;

use crate::{Error, Result};

/// Norm drift accepted by operations that require a unit vector.
pub const NORM_TOLERANCE: f64 = 1e-9;

/// `2^n` real amplitudes indexed by computational basis state.
#[derive(Clone, Debug, PartialEq)]
pub struct StateVector {
    n: usize,
    amps: Vec<f64>,
}

impl StateVector {
    /// Basis state `|z⟩`.
    pub fn basis(n: usize, z: usize) -> Result<Self> {
        crate::boolean::check_variable_count(n)?;
        if z >= 1 << n {
            return Err(Error::IndexOutOfRange { index: z, n });
        }
        let mut amps = vec![0.0; 1 << n];
        amps[z] = 1.0;
        Ok(Self { n, amps })
    }

    /// `H^{⊗n}|0⟩`.
    pub fn uniform(n: usize) -> Result<Self> {
        crate::boolean::check_variable_count(n)?;
        let a = 1.0 / ((1u64 << n) as f64).sqrt();
        Ok(Self {
            n,
            amps: vec![a; 1 << n],
        })
    }

    /// Wraps amplitudes that already have unit norm (within [`NORM_TOLERANCE`]).
    pub fn from_amplitudes(n: usize, amps: Vec<f64>) -> Result<Self> {
        crate::boolean::check_variable_count(n)?;
        if amps.len() != 1 << n {
            return Err(Error::LengthMismatch {
                expected: 1 << n,
                actual: amps.len(),
            });
        }
        let state = Self { n, amps };
        state.check_normalized()?;
        Ok(state)
    }

    /// Rescales arbitrary nonzero amplitudes to unit norm.
    pub fn normalized(n: usize, mut amps: Vec<f64>) -> Result<Self> {
        let norm = amps.iter().map(|a| a * a).sum::<f64>().sqrt();
        if !(norm > 0.0 && norm.is_finite()) {
            return Err(Error::NotNormalized(norm));
        }
        amps.iter_mut().for_each(|a| *a /= norm);
        Self::from_amplitudes(n, amps)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn amplitudes(&self) -> &[f64] {
        &self.amps
    }

    pub fn amplitude(&self, z: usize) -> f64 {
        self.amps[z]
    }

    pub fn norm_squared(&self) -> f64 {
        self.amps.iter().map(|a| a * a).sum()
    }

    pub fn inner(&self, other: &Self) -> Result<f64> {
        self.check_same_dimension(other)?;
        Ok(self.amps.iter().zip(&other.amps).map(|(a, b)| a * b).sum())
    }

    /// `sqrt(Σ_{z ≠ a0} amps[z]^2)`: the amplitude carried outside `|a0⟩`.
    pub fn outside_mass(&self, a0: usize) -> f64 {
        self.amps
            .iter()
            .enumerate()
            .filter(|&(z, _)| z != a0)
            .map(|(_, a)| a * a)
            .sum::<f64>()
            .sqrt()
    }

    pub fn probabilities(&self) -> Vec<f64> {
        self.amps.iter().map(|a| a * a).collect()
    }

    /// Writes `index,amplitude` rows.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut writer = csv::Writer::from_writer(out);
        writer.write_record(["index", "amplitude"])?;
        for (z, a) in self.amps.iter().enumerate() {
            writer.write_record([z.to_string(), format!("{a:e}")])?;
        }
        writer.flush()?;
        Ok(())
    }

    pub(crate) fn check_normalized(&self) -> Result<()> {
        let norm = self.norm_squared();
        if (norm - 1.0).abs() > NORM_TOLERANCE {
            return Err(Error::NotNormalized(norm.sqrt()));
        }
        Ok(())
    }

    pub(crate) fn check_same_dimension(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch(self.n, other.n));
        }
        Ok(())
    }

    pub(crate) fn amps_mut(&mut self) -> &mut [f64] {
        &mut self.amps
    }

    pub(crate) fn from_raw(n: usize, amps: Vec<f64>) -> Self {
        debug_assert_eq!(amps.len(), 1 << n);
        Self { n, amps }
    }
}

/// Applies `H^{⊗n}` to a real amplitude vector.
pub fn hadamard_layer_in_place(amps: &mut [f64]) {
    let len = amps.len();
    debug_assert!(len.is_power_of_two());
    let mut half = 1;
    while half < len {
        for block in amps.chunks_exact_mut(2 * half) {
            let (lo, hi) = block.split_at_mut(half);
            for (a, b) in lo.iter_mut().zip(hi.iter_mut()) {
                let (x, y) = (*a, *b);
                *a = x + y;
                *b = x - y;
            }
        }
        half *= 2;
    }
    let scale = 1.0 / (len as f64).sqrt();
    amps.iter_mut().for_each(|a| *a *= scale);
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hadamard_layer_is_involution() {
        let mut amps = vec![0.5, -0.1, 0.3, 0.2, 0.0, 0.7, -0.2, 0.25];
        let original = amps.clone();
        hadamard_layer_in_place(&mut amps);
        hadamard_layer_in_place(&mut amps);
        for (a, b) in amps.iter().zip(&original) {
            assert!((a - b).abs() < 1e-15);
        }
    }

    #[test]
    fn uniform_is_hadamard_of_zero() {
        let mut zero = StateVector::basis(5, 0).unwrap();
        hadamard_layer_in_place(zero.amps_mut());
        let uniform = StateVector::uniform(5).unwrap();
        for (a, b) in zero.amplitudes().iter().zip(uniform.amplitudes()) {
            assert!((a - b).abs() < 1e-15);
        }
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(matches!(StateVector::basis(2, 4), Err(Error::IndexOutOfRange { .. })));
        assert!(matches!(
            StateVector::from_amplitudes(1, vec![1.0, 1.0]),
            Err(Error::NotNormalized(_))
        ));
        assert!(matches!(
            StateVector::from_amplitudes(1, vec![1.0]),
            Err(Error::LengthMismatch { .. })
        ));
        assert!(StateVector::normalized(1, vec![0.0, 0.0]).is_err());
    }

    #[test]
    fn csv_export() {
        let mut buf = Vec::new();
        StateVector::basis(1, 1).unwrap().write_csv(&mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "index,amplitude\n0,0e0\n1,1e0\n");
    }
}
