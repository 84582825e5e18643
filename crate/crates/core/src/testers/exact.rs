//! Closed-form outcome probabilities of the quantum testers.

use crate::boolean::{walsh_transform, TruthTable, WalshSpectrum};
use crate::quantum::AngleSplit;

use super::IterationPolicy;

/// Probability that the repeated Deutsch-Jozsa test accepts:
/// `Σ_z NW_f(z)^{2(t+1)}` (the first pattern repeats `t` more times).
pub fn algorithm2_error_from_spectrum(spec: &WalshSpectrum, t: u64) -> f64 {
    let exponent = i32::try_from(2 * (t + 1)).unwrap_or(i32::MAX);
    spec.normalized_values()
        .into_iter()
        .map(|nw| (nw * nw).powi(exponent / 2))
        .sum()
}

pub fn exact_algorithm2_error(f: &TruthTable, t: u64) -> f64 {
    algorithm2_error_from_spectrum(&walsh_transform(f), t)
}

/// Probability that the amplified test rejects with a fixed `t`, averaged
/// over the first measurement: `Σ_{a0} NW_f(a0)^2 · sin^2((2t+1)θ_{a0})`.
pub fn algorithm3_success_from_spectrum(spec: &WalshSpectrum, t: u64) -> f64 {
    policy_success_from_spectrum(spec, IterationPolicy::Fixed(t))
}

/// Rejection probability when `t` is chosen per measured pattern by `policy`.
pub fn policy_success_from_spectrum(spec: &WalshSpectrum, policy: IterationPolicy) -> f64 {
    spec.normalized_values()
        .into_iter()
        .filter(|nw| *nw != 0.0)
        .map(|nw| {
            let split = AngleSplit::from_amplitude(nw);
            nw * nw * split.escape_probability(policy.iterations(&split))
        })
        .sum()
}

pub fn exact_algorithm3_success(f: &TruthTable, t: u64) -> f64 {
    algorithm3_success_from_spectrum(&walsh_transform(f), t)
}

/// Iteration count the policy would use, weighted by first-measurement
/// probability.
pub fn policy_mean_iterations(spec: &WalshSpectrum, policy: IterationPolicy) -> f64 {
    spec.normalized_values()
        .into_iter()
        .map(|nw| nw * nw * policy.iterations(&AngleSplit::from_amplitude(nw)) as f64)
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boolean::{make_affine, make_bent, nonlinearity, plant_distance, random_function};
    use crate::quantum::{amplify, deutsch_jozsa_state, MarkedOracle, QueryCounter};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    // P(all t+1 patterns equal), summed over every measurement sequence
    fn enumerate_acceptance(f: &TruthTable, t: u32) -> f64 {
        let probs: Vec<f64> = deutsch_jozsa_state(f, &mut QueryCounter::new()).probabilities();
        let size = probs.len();
        let mut total = 0.0;
        for code in 0..size.pow(t + 1) {
            let mut rest = code;
            let first = rest % size;
            let mut p = 1.0;
            let mut same = true;
            for _ in 0..=t {
                let z = rest % size;
                rest /= size;
                p *= probs[z];
                same &= z == first;
            }
            if same {
                total += p;
            }
        }
        total
    }

    #[test]
    fn algorithm2_matches_sequence_enumeration() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for n in 1..=4 {
            for _ in 0..3 {
                let f = random_function(n, &mut rng).unwrap();
                for t in 0..=3 {
                    let exact = exact_algorithm2_error(&f, t as u64);
                    assert!((exact - enumerate_acceptance(&f, t)).abs() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn algorithm2_examples() {
        let f = make_affine(5, 9, true).unwrap();
        for t in 0..10 {
            assert_eq!(exact_algorithm2_error(&f, t), 1.0);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let g = random_function(6, &mut rng).unwrap();
        assert!((exact_algorithm2_error(&g, 0) - 1.0).abs() < 1e-12);
        // flat spectrum: NW^2 = 1/16 at all 16 points
        assert!((exact_algorithm2_error(&make_bent(4).unwrap(), 1) - 1.0 / 16.0).abs() < 1e-15);
    }

    #[test]
    fn algorithm2_bound_and_monotone() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for n in 2..=6 {
            for _ in 0..20 {
                let f = random_function(n, &mut rng).unwrap();
                let eps = nonlinearity(&f) as f64 / (1u64 << n) as f64;
                let mut prev = f64::INFINITY;
                for t in 0..=10 {
                    let err = exact_algorithm2_error(&f, t);
                    assert!(err <= (1.0 - 2.0 * eps).powi(t as i32) + 1e-12);
                    assert!(err <= prev + 1e-15);
                    prev = err;
                }
            }
        }
    }

    #[test]
    fn algorithm3_examples() {
        let f = make_affine(6, 33, false).unwrap();
        for t in 0..10 {
            assert_eq!(exact_algorithm3_success(&f, t), 0.0);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let g = random_function(6, &mut rng).unwrap();
        let spec = walsh_transform(&g);
        let t0: f64 = spec
            .normalized_values()
            .iter()
            .map(|nw| nw * nw * (1.0 - nw * nw))
            .sum();
        assert!((exact_algorithm3_success(&g, 0) - t0).abs() < 1e-12);
    }

    #[test]
    fn algorithm3_matches_state_vector_simulation() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for n in 1..=6 {
            for _ in 0..3 {
                let f = random_function(n, &mut rng).unwrap();
                let psi = deutsch_jozsa_state(&f, &mut QueryCounter::new());
                for t in 0..=20 {
                    let simulated: f64 = (0..1 << n)
                        .map(|a0| {
                            let g = MarkedOracle::new(n, a0).unwrap();
                            let out = amplify(&psi, &g, t, &mut QueryCounter::new());
                            psi.amplitude(a0).powi(2) * (1.0 - out.amplitude(a0).powi(2))
                        })
                        .sum();
                    assert!((simulated - exact_algorithm3_success(&f, t)).abs() < 1e-9);
                }
            }
        }
    }

    #[test]
    fn exact_theta_clears_two_thirds_on_planted_fixtures() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for n in 4..=10 {
            for k in 1..(1usize << (n - 2)) {
                let f = plant_distance(n, rng.random_range(0..1 << n), rng.random(), k, &mut rng).unwrap();
                let spec = walsh_transform(&f);
                let p = policy_success_from_spectrum(&spec, IterationPolicy::ExactTheta);
                assert!(p >= 2.0 / 3.0, "n={n} k={k}: {p}");
            }
        }
    }

    #[test]
    fn exact_theta_per_pattern_bound() {
        // folded θ at most arccos(√(2/3)) keeps (2t+1)θ within θ of π/2
        for i in 1..2000 {
            let v = i as f64 / 2000.0;
            let split = AngleSplit::from_amplitude(v);
            let theta = split.folded_theta();
            let t = IterationPolicy::ExactTheta.iterations(&split);
            if theta <= (2.0f64 / 3.0).sqrt().acos() || theta >= (2.0f64 / 3.0).sqrt().asin() {
                assert!(split.escape_probability(t) >= 2.0 / 3.0 - 1e-12, "v = {v}");
            }
            let neg = AngleSplit::from_amplitude(-v);
            let tn = IterationPolicy::ExactTheta.iterations(&neg);
            assert!((neg.escape_probability(tn) - split.escape_probability(t)).abs() < 1e-12);
        }
    }

    #[test]
    fn policy_mean_iterations_of_affine_is_zero() {
        let spec = walsh_transform(&make_affine(5, 3, false).unwrap());
        assert_eq!(policy_mean_iterations(&spec, IterationPolicy::ExactTheta), 0.0);
        assert_eq!(policy_mean_iterations(&spec, IterationPolicy::Fixed(4)), 4.0);
    }
}
