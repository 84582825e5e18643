//! Real-amplitude state-vector simulation of the Deutsch-Jozsa operator
//! `D_f = H^{⊗n} U_f H^{⊗n}` and the amplitude-amplification iterate built on
//! it.
//!
//! Every operator involved is real-orthogonal, so amplitudes are `f64`. The
//! auxiliary `|−⟩` qubit of the phase oracle is not represented: `U_f` acts as
//! the diagonal sign map `|x⟩ ↦ (−1)^{f(x)}|x⟩`.
//!
//! Oracle cost model, tracked by [`QueryCounter`]:
//!
//! | operation                 | `U_f` queries |
//! |---------------------------|---------------|
//! | preparing `D_f|0⟩`        | 1             |
//! | [`reflect_about`]         | 2             |
//! | [`grover_iterate`]        | 2             |
//! | [`apply_marked_oracle`]   | 0             |
//! | [`measure`]               | 0             |
//!
//! The reflection is billed 2 because `2|Ψ⟩⟨Ψ| − I = D_f (2|0⟩⟨0| − I) D_f^{-1}`
//! with `Ψ = D_f|0⟩`.

mod ops;
pub(crate) use ops::amplify;
mod state;

pub use ops::{
    angle_split, apply_marked_oracle, deutsch_jozsa_state, grover_iterate, measure,
    reflect_about, AngleSplit, BasisSampler, DeutschJozsaCircuit, MarkedOracle, QueryCounter,
};
pub use state::{hadamard_layer_in_place, StateVector, NORM_TOLERANCE};
