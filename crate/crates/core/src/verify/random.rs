//! Seeded generators for the random parts of the corpus.

use rand::seq::index::sample;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::graphs::{BitGraph, GraphSpec};
use crate::series::parse;

/// `count` Toeplitz specs with `n` in `4..=n_max` and one to four
/// distances drawn from `1..n`.
pub fn random_toeplitz_specs(seed: u64, count: usize, n_max: usize) -> Vec<GraphSpec> {
    assert!(n_max >= 4);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(4..=n_max);
            let size = rng.gen_range(1..=4.min(n - 1));
            let mut distances: Vec<usize> = sample(&mut rng, n - 1, size)
                .into_iter()
                .map(|d| d + 1)
                .collect();
            distances.sort_unstable();
            GraphSpec::Toeplitz { n, distances }
        })
        .collect()
}

fn random_polynomial(rng: &mut ChaCha8Rng, first: usize, last: usize) -> String {
    (first..=last)
        .filter(|_| rng.gen_bool(0.5))
        .map(|e| format!("z^{e}"))
        .collect::<Vec<_>>()
        .join("+")
}

/// `count` proper Riordan specs with polynomial `g = 1 + ...` (degree
/// at most 5) and `f = z + ...` (degree at most 4), `n` in `2..=n_max`.
pub fn random_polynomial_specs(seed: u64, count: usize, n_max: usize) -> Vec<GraphSpec> {
    assert!(n_max >= 2);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(2..=n_max);
            let g_tail = random_polynomial(&mut rng, 1, 5);
            let f_tail = random_polynomial(&mut rng, 2, 4);
            let g = if g_tail.is_empty() {
                "1".to_string()
            } else {
                format!("1+{g_tail}")
            };
            let f = if f_tail.is_empty() {
                "z".to_string()
            } else {
                format!("z+{f_tail}")
            };
            GraphSpec::Riordan {
                g: parse(&g).expect("generated expression"),
                f: parse(&f).expect("generated expression"),
                n,
            }
        })
        .collect()
}

/// Erdős–Rényi graph on `n` vertices with edge probability `p`.
pub fn random_graph(seed: u64, n: usize, p: f64) -> BitGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = BitGraph::empty(n);
    for i in 1..=n {
        for j in i + 1..=n {
            if rng.gen_bool(p) {
                g.add_edge(i, j);
            }
        }
    }
    g
}
