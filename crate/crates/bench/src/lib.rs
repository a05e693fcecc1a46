//! Shared inputs for the criterion benchmarks.

use pfactor::generate::{generate, Model, Probability};
use pfactor::{Graph, ParitySpec};

/// Seeded G(n, p) instances at the orders used by the randomized
/// validation, paired with the uniform spec `(a, b)`.
pub fn gnp_instances(n: usize, p: Probability, a: usize, b: usize, count: u64) -> Vec<(Graph, ParitySpec)> {
    (0..count)
        .map(|seed| {
            let g = generate(Model::Gnp { n, p }, seed).expect("valid gnp parameters");
            let spec = ParitySpec::uniform(n, a, b).expect("valid parity pair");
            (g, spec)
        })
        .collect()
}
