//! Covering hypergraphs as bounded edge colorings of the complete graph.
//!
//! A covering hypergraph colors every pair of K_n by one hyperedge
//! containing it (lowest index when several apply, for reproducibility).
//! No color class exceeds C(k,2) pairs for maximum edge size k, and any
//! rainbow subgraph of the coloring converts back into a Berge subgraph:
//! distinct colors mean distinct hyperedges.

use serde::Serialize;

use crate::berge::{verify_cycle, BergeCycle};
use crate::error::{Error, Result};
use crate::hypergraph::{ordered_pair, Hypergraph};

/// Complete graph on n vertices with one color (hyperedge index) per pair.
#[derive(Debug, Clone, Serialize)]
pub struct EdgeColoredClique {
    pub n: u32,
    /// pair (u,v), u < v, mapped to its color
    pub colors: Vec<ColoredPair>,
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct ColoredPair {
    pub u: u32,
    pub v: u32,
    pub color: usize,
}

impl EdgeColoredClique {
    pub fn color_of(&self, u: u32, v: u32) -> Option<usize> {
        let (a, b) = ordered_pair(u, v);
        self.colors
            .iter()
            .find(|p| p.u == a && p.v == b)
            .map(|p| p.color)
    }
}

/// Colors each pair by the lowest-indexed hyperedge containing it.
/// Requires a covering hypergraph on n >= 2 vertices.
pub fn to_coloring(h: &Hypergraph) -> Result<EdgeColoredClique> {
    if let Some((u, v)) = h.first_uncovered_pair() {
        return Err(Error::NotCovering { u, v });
    }
    let mut colors = Vec::new();
    for u in 1..=h.n() {
        for v in u + 1..=h.n() {
            let color = h
                .edges()
                .iter()
                .position(|e| e.binary_search(&u).is_ok() && e.binary_search(&v).is_ok())
                .expect("covering hypergraph covers every pair");
            colors.push(ColoredPair { u, v, color });
        }
    }
    Ok(EdgeColoredClique { n: h.n(), colors })
}

/// Largest color class size; the coloring of a covering k-graph is always
/// C(k,2)-bounded.
pub fn boundedness(g: &EdgeColoredClique) -> usize {
    let mut counts = std::collections::BTreeMap::new();
    for p in &g.colors {
        *counts.entry(p.color).or_insert(0usize) += 1;
    }
    counts.values().copied().max().unwrap_or(0)
}

/// Converts a rainbow cycle of the coloring into a Berge cycle: the pair
/// {v_i, v_{i+1}} embeds into the hyperedge carrying its color. Distinct
/// colors guarantee distinct hyperedges, so the result always verifies.
pub fn rainbow_to_berge(
    g: &EdgeColoredClique,
    h: &Hypergraph,
    cycle: &[u32],
) -> Result<BergeCycle> {
    if cycle.len() < 3 {
        return Err(Error::InvalidCertificate(format!(
            "cycle needs at least 3 vertices, got {}",
            cycle.len()
        )));
    }
    let mut seen = std::collections::BTreeSet::new();
    let mut edges = Vec::with_capacity(cycle.len());
    for i in 0..cycle.len() {
        let u = cycle[i];
        let v = cycle[(i + 1) % cycle.len()];
        let color = g
            .color_of(u, v)
            .ok_or(Error::ColoringMismatch { u, v })?;
        if color >= h.num_edges() || !h.edge_contains_pair(color, u, v) {
            return Err(Error::ColoringMismatch { u, v });
        }
        if !seen.insert(color) {
            return Err(Error::NotRainbow { u, v });
        }
        edges.push(color);
    }
    let cert = BergeCycle::new(cycle.to_vec(), edges)?;
    if !verify_cycle(h, &cert)? {
        return Err(Error::InternalInvariantViolation(format!(
            "rainbow conversion produced a non-verifying cycle: {cert:?}"
        )));
    }
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn hg(n: u32, edges: &[&[u32]]) -> Hypergraph {
        let raw: Vec<Vec<u32>> = edges.iter().map(|e| e.to_vec()).collect();
        Hypergraph::from_edges(n, &raw).unwrap()
    }

    fn complete3(n: u32) -> Hypergraph {
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

    #[test]
    fn coloring_of_four_triples() {
        let h = hg(5, &[&[1, 2, 3], &[1, 4, 5], &[2, 4, 5], &[3, 4, 5]]);
        let g = to_coloring(&h).unwrap();
        assert_eq!(g.colors.len(), 10);
        // C(3,2)-bounded
        assert!(boundedness(&g) <= 3);
        // lowest index wins: {4,5} sits in edges 1,2,3; color is 1
        assert_eq!(g.color_of(4, 5), Some(1));
    }

    #[test]
    fn coloring_requires_covering() {
        let h = hg(4, &[&[1, 2, 3]]);
        assert!(matches!(to_coloring(&h), Err(Error::NotCovering { .. })));
    }

    #[test]
    fn boundedness_extremes() {
        // all colors distinct: rainbow, boundedness 1
        let g = EdgeColoredClique {
            n: 3,
            colors: vec![
                ColoredPair { u: 1, v: 2, color: 0 },
                ColoredPair { u: 1, v: 3, color: 1 },
                ColoredPair { u: 2, v: 3, color: 2 },
            ],
        };
        assert_eq!(boundedness(&g), 1);
        // monochromatic triangle
        let g = EdgeColoredClique {
            n: 3,
            colors: vec![
                ColoredPair { u: 1, v: 2, color: 7 },
                ColoredPair { u: 1, v: 3, color: 7 },
                ColoredPair { u: 2, v: 3, color: 7 },
            ],
        };
        assert_eq!(boundedness(&g), 3);

        let h = complete3(4);
        assert!(boundedness(&to_coloring(&h).unwrap()) <= 3);
    }

    #[test]
    fn rainbow_triangle_converts() {
        let h = complete3(6);
        let g = to_coloring(&h).unwrap();
        // find any rainbow triangle straight from the coloring
        'outer: for a in 1..=6u32 {
            for b in a + 1..=6 {
                for c in b + 1..=6 {
                    let x = g.color_of(a, b).unwrap();
                    let y = g.color_of(b, c).unwrap();
                    let z = g.color_of(c, a).unwrap();
                    if x != y && y != z && x != z {
                        let cert = rainbow_to_berge(&g, &h, &[a, b, c]).unwrap();
                        assert!(verify_cycle(&h, &cert).unwrap());
                        break 'outer;
                    }
                }
            }
        }
    }

    #[test]
    fn non_rainbow_is_rejected() {
        // one triple covers the whole triangle: every pair has color 0
        let h = hg(4, &[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4], &[2, 3, 4]]);
        let g = to_coloring(&h).unwrap();
        assert!(matches!(
            rainbow_to_berge(&g, &h, &[1, 2, 3]),
            Err(Error::NotRainbow { .. })
        ));
    }

    #[test]
    fn certificates_with_lowest_index_embeddings_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        let mut round_trips = 0;
        for _ in 0..80 {
            let n = rng.gen_range(6..10u32);
            let extra = rng.gen_range(0..4);
            let h = crate::generate::random_covering3(n, &mut rng, extra, true).unwrap();
            let g = to_coloring(&h).unwrap();
            let c = crate::cyclefinder::find_hamiltonian_cycle(&h).unwrap();
            // re-embed with the lowest containing edge wherever that keeps
            // the assignment injective; such certificates round-trip
            let lowest: Vec<usize> = (0..c.len())
                .map(|i| {
                    g.color_of(c.base[i], c.base[(i + 1) % c.len()]).unwrap()
                })
                .collect();
            let mut sorted = lowest.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() != lowest.len() {
                continue; // not rainbow under lowest-index colors
            }
            let cert = rainbow_to_berge(&g, &h, &c.base).unwrap();
            assert_eq!(cert.base, c.base);
            assert_eq!(cert.edges, lowest);
            assert!(verify_cycle(&h, &cert).unwrap());
            round_trips += 1;
        }
        assert!(round_trips > 10, "only {round_trips} rainbow round trips");
    }
}
