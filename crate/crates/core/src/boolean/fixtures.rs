use rand::Rng;

use crate::{Error, Result};

use super::{check_variable_count, inner_product, TruthTable};

fn check_mask(n: usize, omega: usize) -> Result<()> {
    check_variable_count(n)?;
    if omega >= 1usize << n {
        return Err(Error::IndexOutOfRange { index: omega, n });
    }
    Ok(())
}

/// `l_ω(x) = ω·x`.
pub fn make_linear(n: usize, omega: usize) -> Result<TruthTable> {
    make_affine(n, omega, false)
}

/// `a₀ ⊕ ω·x`.
pub fn make_affine(n: usize, omega: usize, a0: bool) -> Result<TruthTable> {
    check_mask(n, omega)?;
    TruthTable::from_fn(n, |x| a0 ^ inner_product(omega, x))
}

/// Inner-product bent function `x₁x₂ ⊕ x₃x₄ ⊕ … ⊕ x_{n-1}x_n`.
pub fn make_bent(n: usize) -> Result<TruthTable> {
    check_variable_count(n)?;
    if n % 2 == 1 {
        return Err(Error::OddVariableCount(n));
    }
    // pair (x_{2i+1}, x_{2i+2}) sits at bits (2i, 2i+1)
    let odd_bits = (0..n / 2).fold(0usize, |m, i| m | 1 << (2 * i));
    TruthTable::from_fn(n, |x| (x & (x >> 1) & odd_bits).count_ones() & 1 == 1)
}

/// Flips `k` distinct uniformly chosen entries of `a₀ ⊕ ω·x`.
///
/// With `k < 2^{n-2}` every other affine function stays at distance
/// `>= 2^{n-1} - k > k`, so the result has nonlinearity exactly `k`.
pub fn plant_distance<R: Rng + ?Sized>(
    n: usize,
    omega: usize,
    a0: bool,
    k: usize,
    rng: &mut R,
) -> Result<TruthTable> {
    let mut f = make_affine(n, omega, a0)?;
    let limit = if n >= 2 { 1usize << (n - 2) } else { 0 };
    if k >= limit && k != 0 {
        return Err(Error::PlantedDistanceTooLarge { k, limit });
    }
    for x in rand::seq::index::sample(rng, f.len(), k) {
        f.flip(x);
    }
    Ok(f)
}

/// Uniformly random function: every entry an independent fair bit.
pub fn random_function<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<TruthTable> {
    check_variable_count(n)?;
    let mut bits = Vec::with_capacity(1 << n);
    let mut remaining = 1usize << n;
    while remaining > 0 {
        let word: u64 = rng.random();
        let take = remaining.min(64);
        bits.extend((0..take).map(|j| word >> j & 1 == 1));
        remaining -= take;
    }
    TruthTable::from_bits(n, bits)
}
