//! Seeded random covering hypergraph generators.
//!
//! `random_covering3` starts from a Hamiltonian-path-shaped chain of
//! triples, adds triples until every pair is covered, then optional extra
//! edges. Covering holds by construction; the sampling is not uniform over
//! covering hypergraphs and does not pretend to be.

use rand::seq::SliceRandom;
use rand::Rng;
use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

pub fn random_covering3<R: Rng>(
    n: u32,
    rng: &mut R,
    extra: usize,
    allow_pairs: bool,
) -> Result<Hypergraph> {
    if n < 4 {
        return Err(Error::TooFewVertices { needed: 4, got: n as usize });
    }
    let mut order: Vec<u32> = (1..=n).collect();
    order.shuffle(rng);
    let mut seen: BTreeSet<Vec<u32>> = BTreeSet::new();
    let mut edges: Vec<Vec<u32>> = Vec::new();
    let push = |e: Vec<u32>, seen: &mut BTreeSet<Vec<u32>>, edges: &mut Vec<Vec<u32>>| {
        if seen.insert(e.clone()) {
            edges.push(e);
        }
    };
    for w in order.windows(3) {
        let mut e = w.to_vec();
        e.sort_unstable();
        push(e, &mut seen, &mut edges);
    }
    // complete the covering: each uncovered pair gets a fresh triple
    loop {
        let h = Hypergraph::from_edges(n, &edges)?;
        let Some((a, b)) = h.first_uncovered_pair() else { break };
        let offset = rng.gen_range(0..n);
        let mut placed = false;
        for step in 0..n {
            let c = (offset + step) % n + 1;
            if c == a || c == b {
                continue;
            }
            let mut e = vec![a, b, c];
            e.sort_unstable();
            if !seen.contains(&e) {
                push(e, &mut seen, &mut edges);
                placed = true;
                break;
            }
        }
        if !placed {
            // all triples through {a,b} present means the pair was covered
            return Err(Error::InternalInvariantViolation(format!(
                "pair {{{a},{b}}} uncovered yet saturated"
            )));
        }
    }
    for _ in 0..extra {
        for _attempt in 0..16 {
            let size = if allow_pairs && rng.gen_bool(0.4) { 2 } else { 3 };
            let mut e: Vec<u32> = Vec::new();
            while e.len() < size {
                let v = rng.gen_range(1..=n);
                if !e.contains(&v) {
                    e.push(v);
                }
            }
            e.sort_unstable();
            if !seen.contains(&e) {
                push(e, &mut seen, &mut edges);
                break;
            }
        }
    }
    Hypergraph::from_edges(n, &edges)
}

/// Random covering k-uniform hypergraph: greedy pair-cover completion from
/// a random seed edge, then random additions.
pub fn random_covering_k<R: Rng>(
    n: u32,
    k: usize,
    rng: &mut R,
    extra: usize,
) -> Result<Hypergraph> {
    if (n as usize) < k || k < 2 {
        return Err(Error::InvalidParameters(format!(
            "need n >= k >= 2, got n={n}, k={k}"
        )));
    }
    let mut seen: BTreeSet<Vec<u32>> = BTreeSet::new();
    let mut edges: Vec<Vec<u32>> = Vec::new();
    let add_random_containing = |a: u32, b: u32, rng: &mut R, seen: &mut BTreeSet<Vec<u32>>, edges: &mut Vec<Vec<u32>>| {
        for _attempt in 0..64 {
            let mut e = vec![a, b];
            while e.len() < k {
                let v = rng.gen_range(1..=n);
                if !e.contains(&v) {
                    e.push(v);
                }
            }
            e.sort_unstable();
            if seen.insert(e.clone()) {
                edges.push(e);
                return true;
            }
        }
        false
    };
    loop {
        let h = Hypergraph::from_edges(n, &edges)?;
        let Some((a, b)) = h.first_uncovered_pair() else { break };
        if !add_random_containing(a, b, rng, &mut seen, &mut edges) {
            // fall back to a deterministic completion
            let mut e = vec![a, b];
            for v in 1..=n {
                if e.len() == k {
                    break;
                }
                if !e.contains(&v) {
                    e.push(v);
                }
            }
            e.sort_unstable();
            if seen.insert(e.clone()) {
                edges.push(e);
            } else {
                return Err(Error::InternalInvariantViolation(
                    "could not complete covering".into(),
                ));
            }
        }
    }
    for _ in 0..extra {
        for _attempt in 0..16 {
            let mut e: Vec<u32> = Vec::new();
            while e.len() < k {
                let v = rng.gen_range(1..=n);
                if !e.contains(&v) {
                    e.push(v);
                }
            }
            e.sort_unstable();
            if seen.insert(e.clone()) {
                edges.push(e);
                break;
            }
        }
    }
    Hypergraph::from_edges(n, &edges)
}
