//! Shared fixtures for the benchmark targets.

use bergecov_core::hypergraph::Hypergraph;

pub fn complete3(n: u32) -> Hypergraph {
    let mut edges = Vec::new();
    for a in 1..=n {
        for b in a + 1..=n {
            for c in b + 1..=n {
                edges.push(vec![a, b, c]);
            }
        }
    }
    Hypergraph::from_edges(n, &edges).unwrap()
}
