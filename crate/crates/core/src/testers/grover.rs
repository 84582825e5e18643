use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::boolean::TruthTable;
use crate::quantum::{amplify, angle_split, measure, DeutschJozsaCircuit, MarkedOracle, QueryCounter};
use crate::Result;

use super::{IterationPolicy, TestReport, Verdict};

/// Amplitude-amplified linearity test bound to one function.
#[derive(Clone, Debug)]
pub struct GroverTester {
    circuit: DeutschJozsaCircuit,
}

impl GroverTester {
    pub fn new(f: &TruthTable) -> Self {
        Self {
            circuit: DeutschJozsaCircuit::new(f),
        }
    }

    /// Measure `D_f|0⟩` for `a⁽⁰⁾`, re-prepare `Ψ`, apply `t` steps of
    /// `(2|Ψ⟩⟨Ψ| − I) O_g` and measure again. Rejects iff the second pattern
    /// differs. Costs `2 + 2t` queries.
    pub fn run(&self, policy: IterationPolicy, seed: u64) -> Result<TestReport> {
        policy.validate()?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut counter = QueryCounter::new();
        let first = measure(self.circuit.prepare(&mut counter), &mut rng)?;
        let oracle = MarkedOracle::new(self.circuit.n(), first)?;
        let reference = self.circuit.prepare(&mut counter);
        let t = policy.iterations(&angle_split(reference, first)?);
        let amplified = amplify(reference, &oracle, t, &mut counter);
        let second = measure(&amplified, &mut rng)?;
        Ok(TestReport {
            verdict: if second == first {
                Verdict::Affine
            } else {
                Verdict::NotAffine
            },
            queries: counter.count(),
            iterations: t,
            seed,
            transcript: vec![first as u64, second as u64],
        })
    }
}

pub fn grover_test(f: &TruthTable, policy: IterationPolicy, seed: u64) -> Result<TestReport> {
    GroverTester::new(f).run(policy, seed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boolean::{make_affine, make_bent, plant_distance, walsh_transform};
    use crate::testers::exact::{algorithm3_success_from_spectrum, policy_success_from_spectrum};
    use crate::Error;
    use rand::Rng;

    #[test]
    fn affine_always_accepted() {
        for omega in 0..32 {
            for a0 in [false, true] {
                let tester = GroverTester::new(&make_affine(5, omega, a0).unwrap());
                for (seed, policy) in [
                    IterationPolicy::ExactTheta,
                    IterationPolicy::Fixed(9),
                    IterationPolicy::PaperEpsilon(0.05),
                ]
                .into_iter()
                .enumerate()
                {
                    let report = tester.run(policy, seed as u64).unwrap();
                    assert_eq!(report.verdict, Verdict::Affine);
                    assert_eq!(report.queries, 2 + 2 * report.iterations);
                }
            }
        }
    }

    #[test]
    fn rejects_invalid_policy() {
        let f = make_bent(4).unwrap();
        assert!(matches!(
            grover_test(&f, IterationPolicy::PaperEpsilon(0.7), 0),
            Err(Error::EpsilonOutOfRange(_))
        ));
    }

    #[test]
    fn near_bent_needs_no_iterations() {
        // nl = 120 on 8 variables: ε = 0.46875, PaperEpsilon picks t = 0
        let f = make_bent(8).unwrap();
        let eps = 120.0 / 256.0;
        let policy = IterationPolicy::paper_epsilon(eps).unwrap();
        let spec = walsh_transform(&f);
        let success = policy_success_from_spectrum(&spec, policy);
        assert!((success - algorithm3_success_from_spectrum(&spec, 0)).abs() < 1e-15);
        assert!((success - (1.0 - 1.0 / 256.0)).abs() < 1e-12);
        assert!((1.0 - 2.0 * eps).powi(2) <= 1.0 / 3.0);
        let tester = GroverTester::new(&f);
        for seed in 0..20 {
            let report = tester.run(policy, seed).unwrap();
            assert_eq!((report.iterations, report.queries), (0, 2));
        }
    }

    #[test]
    fn single_shot_threshold() {
        // (1 - 2ε)^2 <= 1/3 exactly when ε >= (1 - 1/√3)/2 ≈ 0.2113
        let boundary = (1.0 - 1.0 / 3f64.sqrt()) / 2.0;
        assert!((boundary - 0.2113).abs() < 1e-4);
    }

    #[test]
    fn monte_carlo_tracks_exact_rejection() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let f = plant_distance(7, rng.random_range(0..128), true, 6, &mut rng).unwrap();
        let tester = GroverTester::new(&f);
        let spec = walsh_transform(&f);
        for t in [0, 1, 3] {
            let exact = algorithm3_success_from_spectrum(&spec, t);
            let trials = 3000;
            let rejected = (0..trials)
                .filter(|&s| tester.run(IterationPolicy::Fixed(t), s).unwrap().rejected())
                .count() as f64;
            let sigma = (exact * (1.0 - exact) / trials as f64).sqrt();
            assert!((rejected / trials as f64 - exact).abs() <= 4.0 * sigma, "t = {t}");
        }
    }
}
