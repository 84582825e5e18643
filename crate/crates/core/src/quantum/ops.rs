use std::f64::consts::PI;

use rand::Rng;

use crate::boolean::TruthTable;
use crate::{Error, Result};

use super::state::{hadamard_layer_in_place, StateVector};

/// Number of `U_f` applications consumed during one logical run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct QueryCounter {
    count: u64,
}

impl QueryCounter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn count(&self) -> u64 {
        self.count
    }

    fn charge(&mut self, queries: u64) {
        self.count += queries;
    }
}

/// Phase oracle `O_g` for `g(x) = [x ≠ a0]`: flips the sign of every basis
/// state except `|a0⟩`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MarkedOracle {
    n: usize,
    a0: usize,
}

impl MarkedOracle {
    pub fn new(n: usize, a0: usize) -> Result<Self> {
        crate::boolean::check_variable_count(n)?;
        if a0 >= 1 << n {
            return Err(Error::IndexOutOfRange { index: a0, n });
        }
        Ok(Self { n, a0 })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The excluded pattern `a⁽⁰⁾`.
    pub fn excluded(&self) -> usize {
        self.a0
    }

    /// The opposite convention: flip only `|a0⟩`. Equal to [`apply_marked_oracle`]
    /// up to a global sign.
    pub fn apply_excluded_flip(&self, psi: &StateVector) -> Result<StateVector> {
        self.check(psi)?;
        let mut out = psi.clone();
        out.amps_mut()[self.a0] *= -1.0;
        Ok(out)
    }

    fn check(&self, psi: &StateVector) -> Result<()> {
        if psi.n() != self.n {
            return Err(Error::DimensionMismatch(psi.n(), self.n));
        }
        Ok(())
    }

    fn apply_in_place(&self, amps: &mut [f64]) {
        let keep = amps[self.a0];
        amps.iter_mut().for_each(|a| *a = -*a);
        amps[self.a0] = keep;
    }
}

/// The circuit `D_f = H^{⊗n} U_f H^{⊗n}` bound to one function.
///
/// The output state is simulated once; each call to [`prepare`](Self::prepare)
/// stands for a fresh run of the circuit and costs one query.
#[derive(Clone, Debug)]
pub struct DeutschJozsaCircuit {
    state: StateVector,
}

impl DeutschJozsaCircuit {
    pub fn new(f: &TruthTable) -> Self {
        let n = f.n();
        let mut amps = StateVector::uniform(n).expect("valid n").amplitudes().to_vec();
        for (x, a) in amps.iter_mut().enumerate() {
            if f.get(x) {
                *a = -*a;
            }
        }
        hadamard_layer_in_place(&mut amps);
        Self {
            state: StateVector::from_raw(n, amps),
        }
    }

    pub fn prepare(&self, counter: &mut QueryCounter) -> &StateVector {
        counter.charge(1);
        &self.state
    }

    pub fn n(&self) -> usize {
        self.state.n()
    }
}

/// `D_f|0…0⟩`, whose amplitudes are the normalized Walsh coefficients.
pub fn deutsch_jozsa_state(f: &TruthTable, counter: &mut QueryCounter) -> StateVector {
    DeutschJozsaCircuit::new(f).prepare(counter).clone()
}

pub fn apply_marked_oracle(psi: &StateVector, g: &MarkedOracle) -> Result<StateVector> {
    g.check(psi)?;
    let mut out = psi.clone();
    g.apply_in_place(out.amps_mut());
    Ok(out)
}

/// `(2|Ψ⟩⟨Ψ| − I)ψ`.
pub fn reflect_about(
    psi: &StateVector,
    reference: &StateVector,
    counter: &mut QueryCounter,
) -> Result<StateVector> {
    psi.check_same_dimension(reference)?;
    reference.check_normalized()?;
    let mut out = psi.clone();
    reflect_in_place(out.amps_mut(), reference.amplitudes());
    counter.charge(2);
    Ok(out)
}

fn reflect_in_place(amps: &mut [f64], reference: &[f64]) {
    let overlap = 2.0 * amps.iter().zip(reference).map(|(a, b)| a * b).sum::<f64>();
    for (a, r) in amps.iter_mut().zip(reference) {
        *a = overlap * r - *a;
    }
}

/// One amplification step `(2|Ψ⟩⟨Ψ| − I) O_g`, two queries.
pub fn grover_iterate(
    psi: &StateVector,
    reference: &StateVector,
    g: &MarkedOracle,
    counter: &mut QueryCounter,
) -> Result<StateVector> {
    let marked = apply_marked_oracle(psi, g)?;
    reflect_about(&marked, reference, counter)
}

/// `t` amplification steps applied to `reference` itself, in place.
pub(crate) fn amplify(
    reference: &StateVector,
    g: &MarkedOracle,
    t: u64,
    counter: &mut QueryCounter,
) -> StateVector {
    let mut state = reference.clone();
    for _ in 0..t {
        g.apply_in_place(state.amps_mut());
        reflect_in_place(state.amps_mut(), reference.amplitudes());
        counter.charge(2);
    }
    state
}

/// Samples a basis index with probability `amps[z]^2`. The state is left as is.
pub fn measure<R: Rng + ?Sized>(psi: &StateVector, rng: &mut R) -> Result<usize> {
    psi.check_normalized()?;
    let total = psi.norm_squared();
    let r = rng.random::<f64>() * total;
    let mut acc = 0.0;
    let mut last_nonzero = 0;
    for (z, a) in psi.amplitudes().iter().enumerate() {
        let p = a * a;
        if p > 0.0 {
            last_nonzero = z;
            acc += p;
            if r < acc {
                return Ok(z);
            }
        }
    }
    Ok(last_nonzero)
}

/// Cumulative table for repeated measurement of one state.
#[derive(Clone, Debug)]
pub struct BasisSampler {
    cumulative: Vec<f64>,
}

impl BasisSampler {
    pub fn new(psi: &StateVector) -> Result<Self> {
        psi.check_normalized()?;
        let mut acc = 0.0;
        let cumulative = psi
            .amplitudes()
            .iter()
            .map(|a| {
                acc += a * a;
                acc
            })
            .collect();
        Ok(Self { cumulative })
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> usize {
        let total = *self.cumulative.last().expect("nonempty");
        let r = rng.random::<f64>() * total;
        let idx = self.cumulative.partition_point(|&c| c <= r);
        idx.min(self.cumulative.len() - 1)
    }
}

/// Decomposition `Ψ = u|X⟩ + v|a0⟩` with `u = sin θ ≥ 0`, `v = cos θ`,
/// `θ ∈ [0, π]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AngleSplit {
    pub u: f64,
    pub v: f64,
    pub theta: f64,
}

impl AngleSplit {
    /// Split for an amplitude `v = ⟨a0|Ψ⟩` of a unit vector.
    pub fn from_amplitude(v: f64) -> Self {
        let v = v.clamp(-1.0, 1.0);
        let u = (1.0 - v * v).max(0.0).sqrt();
        Self {
            u,
            v,
            theta: u.atan2(v),
        }
    }

    /// `min(θ, π − θ)`; `sin^2((2t+1)θ)` is unchanged by the fold for integer `t`.
    pub fn folded_theta(&self) -> f64 {
        self.theta.min(PI - self.theta)
    }

    /// Probability of leaving `|a0⟩` after `t` amplification steps.
    pub fn escape_probability(&self, t: u64) -> f64 {
        let s = ((2 * t + 1) as f64 * self.theta).sin();
        s * s
    }
}

pub fn angle_split(psi: &StateVector, a0: usize) -> Result<AngleSplit> {
    if a0 >= psi.amplitudes().len() {
        return Err(Error::IndexOutOfRange { index: a0, n: psi.n() });
    }
    // u from the mass outside a0: √(1 − v²) turns rounding in v into an
    // O(1e-8) angle for states sitting on |a0⟩.
    let v = psi.amplitude(a0);
    let u = psi.outside_mass(a0);
    let norm = u.hypot(v);
    let (u, v) = (u / norm, v / norm);
    Ok(AngleSplit {
        u,
        v,
        theta: u.atan2(v),
    })
}
