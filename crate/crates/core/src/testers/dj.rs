use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::boolean::TruthTable;
use crate::quantum::{BasisSampler, DeutschJozsaCircuit, QueryCounter};

use super::{TestReport, Verdict};

/// Repeated Deutsch-Jozsa sampling bound to one function.
#[derive(Clone, Debug)]
pub struct DjRepetitionTester {
    circuit: DeutschJozsaCircuit,
    sampler: BasisSampler,
}

impl DjRepetitionTester {
    pub fn new(f: &TruthTable) -> Self {
        let circuit = DeutschJozsaCircuit::new(f);
        let sampler = BasisSampler::new(circuit.prepare(&mut QueryCounter::new()))
            .expect("D_f|0> is normalized");
        Self { circuit, sampler }
    }

    /// Measures `D_f|0⟩` once for `a⁽⁰⁾`, then up to `t` more times, rejecting
    /// on the first pattern that differs.
    pub fn run(&self, t: u64, seed: u64) -> TestReport {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut counter = QueryCounter::new();
        self.circuit.prepare(&mut counter);
        let first = self.sampler.sample(&mut rng);
        let mut transcript = vec![first as u64];
        let mut verdict = Verdict::Affine;
        for _ in 0..t {
            self.circuit.prepare(&mut counter);
            let next = self.sampler.sample(&mut rng);
            transcript.push(next as u64);
            if next != first {
                verdict = Verdict::NotAffine;
                break;
            }
        }
        TestReport {
            verdict,
            queries: counter.count(),
            iterations: t,
            seed,
            transcript,
        }
    }
}

pub fn dj_repetition_test(f: &TruthTable, t: u64, seed: u64) -> TestReport {
    DjRepetitionTester::new(f).run(t, seed)
}
