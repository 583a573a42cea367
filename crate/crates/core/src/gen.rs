//! Seeded random instances. The same seed always yields the same instance.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::relation::{Digraph, HomogeneousRelation, TwoStructure};

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Undirected `G(n, p)`.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Digraph {
    let mut r = rng(seed);
    let mut g = Digraph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if r.gen_bool(p) {
                g.add_edge(u, v).expect("in range");
            }
        }
    }
    g
}

/// Each ordered pair is an arc with probability `p`.
pub fn random_digraph(n: usize, p: f64, seed: u64) -> Digraph {
    let mut r = rng(seed);
    let mut g = Digraph::new(n);
    for u in 0..n {
        for v in 0..n {
            if u != v && r.gen_bool(p) {
                g.add_arc(u, v).expect("in range");
            }
        }
    }
    g
}

pub fn random_tournament(n: usize, seed: u64) -> Digraph {
    let mut r = rng(seed);
    let mut g = Digraph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            let (a, b) = if r.gen_bool(0.5) { (u, v) } else { (v, u) };
            g.add_arc(a, b).expect("in range");
        }
    }
    g
}

pub fn random_two_structure(n: usize, colors: u32, seed: u64) -> TwoStructure {
    let mut r = rng(seed);
    TwoStructure::from_fn(n, |_, _| r.gen_range(0..colors.max(1)))
}

/// Every slice gets an independent random partition into at most `classes`
/// classes. Usually not good.
pub fn random_relation(n: usize, classes: u32, seed: u64) -> HomogeneousRelation {
    let mut r = rng(seed);
    let raw: Vec<u32> = (0..n * n).map(|_| r.gen_range(1..=classes.max(1))).collect();
    HomogeneousRelation::from_matrix(n, &raw).expect("nonzero classes")
}
