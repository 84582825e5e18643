use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::boolean::TruthTable;

use super::{TestReport, Verdict};

/// Classical BLR affinity test.
///
/// Reads `a₀ = f(0)`, then for up to `t` rounds draws distinct `x, y` and
/// checks `f(x ⊕ y) = a₀ ⊕ f(x) ⊕ f(y)`. Costs `1 + 3·rounds` evaluations.
pub fn blr_test(f: &TruthTable, t: u64, seed: u64) -> TestReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let size = f.len();
    let a0 = f.get(0);
    let mut queries = 1;
    let mut transcript = Vec::with_capacity(2 * t.min(1 << 16) as usize);
    let mut verdict = Verdict::Affine;
    for _ in 0..t {
        let x = rng.random_range(0..size);
        let y = loop {
            let y = rng.random_range(0..size);
            if y != x {
                break y;
            }
        };
        transcript.extend([x as u64, y as u64]);
        queries += 3;
        if f.get(x ^ y) != a0 ^ f.get(x) ^ f.get(y) {
            verdict = Verdict::NotAffine;
            break;
        }
    }
    TestReport {
        verdict,
        queries,
        iterations: t,
        seed,
        transcript,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boolean::{make_affine, make_bent, plant_distance};

    #[test]
    fn accepts_affine_and_complements() {
        for omega in 0..32 {
            for a0 in [false, true] {
                let f = make_affine(5, omega, a0).unwrap();
                for seed in 0..5 {
                    let report = blr_test(&f, 20, seed);
                    assert_eq!(report.verdict, Verdict::Affine);
                    assert_eq!(report.queries, 1 + 3 * 20);
                    assert_eq!(report.transcript.len(), 40);
                }
            }
        }
    }

    #[test]
    fn every_one_variable_function_is_affine() {
        for code in 0..4u32 {
            let f = TruthTable::from_fn(1, |x| code >> x & 1 == 1).unwrap();
            for seed in 0..20 {
                assert_eq!(blr_test(&f, 10, seed).verdict, Verdict::Affine);
            }
        }
    }

    #[test]
    fn sampled_pairs_are_distinct() {
        let report = blr_test(&make_affine(2, 1, false).unwrap(), 200, 3);
        for pair in report.transcript.chunks(2) {
            assert_ne!(pair[0], pair[1]);
        }
    }

    #[test]
    fn rejection_stops_early_and_counts_queries() {
        let f = make_bent(6).unwrap();
        let report = blr_test(&f, 1000, 1);
        assert_eq!(report.verdict, Verdict::NotAffine);
        let rounds = report.transcript.len() as u64 / 2;
        assert!(rounds < 1000);
        assert_eq!(report.queries, 1 + 3 * rounds);
    }

    #[test]
    fn far_functions_rejected_with_linear_budget() {
        // ε = 1/16 with t = ⌈1/ε⌉
        let mut rng = ChaCha8Rng::seed_from_u64(77);
        let trials = 1000;
        let mut rejected = 0;
        for seed in 0..trials {
            let f = plant_distance(8, rng.random_range(0..256), rng.random(), 16, &mut rng).unwrap();
            rejected += blr_test(&f, 16, seed).rejected() as usize;
        }
        assert!(rejected as f64 / trials as f64 >= 2.0 / 3.0, "rejection rate {rejected}/{trials}");
    }
}
