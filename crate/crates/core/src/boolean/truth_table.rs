use crate::{Error, Result};

use super::check_variable_count;

/// `a·x` over GF(2).
#[inline]
pub fn inner_product(a: usize, x: usize) -> bool {
    (a & x).count_ones() & 1 == 1
}

/// Truth table of an `n`-variable Boolean function.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruthTable {
    n: usize,
    bits: Vec<bool>,
}

impl TruthTable {
    pub fn from_bits(n: usize, bits: Vec<bool>) -> Result<Self> {
        check_variable_count(n)?;
        let expected = 1usize << n;
        if bits.len() != expected {
            return Err(Error::LengthMismatch {
                expected,
                actual: bits.len(),
            });
        }
        Ok(Self { n, bits })
    }

    /// Builds the table by evaluating `f` on every input index.
    pub fn from_fn(n: usize, f: impl Fn(usize) -> bool) -> Result<Self> {
        check_variable_count(n)?;
        Ok(Self {
            n,
            bits: (0..1usize << n).map(f).collect(),
        })
    }

    pub fn constant(n: usize, value: bool) -> Result<Self> {
        Self::from_fn(n, |_| value)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of entries, `2^n`.
    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    #[inline]
    pub fn get(&self, x: usize) -> bool {
        self.bits[x]
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    /// Hamming weight of the table.
    pub fn weight(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    pub fn is_balanced(&self) -> bool {
        self.weight() == self.len() / 2
    }

    pub fn complement(&self) -> Self {
        Self {
            n: self.n,
            bits: self.bits.iter().map(|b| !b).collect(),
        }
    }

    /// Pointwise XOR with another table on the same variable count.
    pub fn xor(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch(self.n, other.n));
        }
        Ok(Self {
            n: self.n,
            bits: self.bits.iter().zip(&other.bits).map(|(a, b)| a ^ b).collect(),
        })
    }

    pub(crate) fn flip(&mut self, x: usize) {
        self.bits[x] = !self.bits[x];
    }

    /// `(-1)^f(x)` as a signed integer vector, the input of the Walsh butterfly.
    pub fn signs(&self) -> Vec<i64> {
        self.bits.iter().map(|&b| if b { -1 } else { 1 }).collect()
    }
}

/// Number of inputs on which `f` and `g` disagree.
pub fn hamming_distance(f: &TruthTable, g: &TruthTable) -> Result<usize> {
    if f.n != g.n {
        return Err(Error::DimensionMismatch(f.n, g.n));
    }
    Ok(f.bits.iter().zip(&g.bits).filter(|(a, b)| a != b).count())
}
