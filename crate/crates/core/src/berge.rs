//! Berge path/cycle certificates, their validators, and trace lifting.
//!
//! A certificate stores base vertices plus the indices of the hyperedges
//! embedding consecutive base pairs. Carrying indices (not edge copies)
//! pins a certificate to a specific host hypergraph and makes the
//! distinctness check a linear scan.

use serde::{Deserialize, Serialize};
use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, TraceResult};

/// Berge path: base vertices `v1..vt` and `t-1` distinct hyperedges with
/// `{v_i, v_{i+1}}` contained in the i-th one. A single-vertex path with no
/// edges is allowed (it seeds the incremental path builder).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BergePath {
    pub base: Vec<u32>,
    pub edges: Vec<usize>,
}

/// Berge cycle: `t >= 3` base vertices and `t` distinct hyperedges, with
/// the wraparound pair included.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BergeCycle {
    pub base: Vec<u32>,
    pub edges: Vec<usize>,
}

impl BergePath {
    pub fn new(base: Vec<u32>, edges: Vec<usize>) -> Result<Self> {
        if base.is_empty() || edges.len() + 1 != base.len() {
            return Err(Error::InvalidCertificate(format!(
                "path needs t base vertices and t-1 edges, got {} and {}",
                base.len(),
                edges.len()
            )));
        }
        Ok(BergePath { base, edges })
    }

    pub fn len(&self) -> usize {
        self.base.len()
    }

    pub fn is_empty(&self) -> bool {
        self.base.is_empty()
    }
}

impl BergeCycle {
    pub fn new(base: Vec<u32>, edges: Vec<usize>) -> Result<Self> {
        if base.len() < 3 || edges.len() != base.len() {
            return Err(Error::InvalidCertificate(format!(
                "cycle needs t >= 3 base vertices and t edges, got {} and {}",
                base.len(),
                edges.len()
            )));
        }
        Ok(BergeCycle { base, edges })
    }

    pub fn len(&self) -> usize {
        self.base.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

fn check_assignment(
    h: &Hypergraph,
    base: &[u32],
    edges: &[usize],
    cyclic: bool,
) -> Result<bool> {
    for &idx in edges {
        // out-of-range indices are an error, not just "invalid"
        h.edge(idx)?;
    }
    let mut vs: HashSet<u32> = HashSet::with_capacity(base.len());
    for &v in base {
        if v == 0 || v > h.n() || !vs.insert(v) {
            return Ok(false);
        }
    }
    let mut es: HashSet<usize> = HashSet::with_capacity(edges.len());
    for &e in edges {
        if !es.insert(e) {
            return Ok(false);
        }
    }
    let pairs = if cyclic { base.len() } else { base.len() - 1 };
    for i in 0..pairs {
        let u = base[i];
        let v = base[(i + 1) % base.len()];
        if !h.edge_contains_pair(edges[i], u, v) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Checks every Berge path invariant against the host. Returns `false` for
/// a well-formed but wrong certificate, and an error only for edge indices
/// outside the host.
pub fn verify_path(h: &Hypergraph, p: &BergePath) -> Result<bool> {
    if p.base.is_empty() || p.edges.len() + 1 != p.base.len() {
        return Ok(false);
    }
    if p.base.len() == 1 {
        let v = p.base[0];
        return Ok(v >= 1 && v <= h.n());
    }
    check_assignment(h, &p.base, &p.edges, false)
}

pub fn verify_cycle(h: &Hypergraph, c: &BergeCycle) -> Result<bool> {
    if c.base.len() < 3 || c.edges.len() != c.base.len() {
        return Ok(false);
    }
    check_assignment(h, &c.base, &c.edges, true)
}

/// Lifts a cycle found in a trace back to the original hypergraph: base
/// vertices map through the relabeling and every trace edge is replaced by
/// its recorded origin. Injectivity of `origin` keeps the lifted edges
/// distinct, so the lift has the same base sequence and the same length.
pub fn lift_cycle(h: &Hypergraph, t: &TraceResult, c: &BergeCycle) -> Result<BergeCycle> {
    if !verify_cycle(&t.trace, c)? {
        return Err(Error::InvalidCertificate(
            "cycle does not verify against the trace".into(),
        ));
    }
    let base = c
        .base
        .iter()
        .map(|&v| t.relabel[v as usize - 1])
        .collect::<Vec<u32>>();
    let edges = c.edges.iter().map(|&e| t.origin[e]).collect::<Vec<usize>>();
    let lifted = BergeCycle::new(base, edges)?;
    if !verify_cycle(h, &lifted)? {
        return Err(Error::InternalInvariantViolation(format!(
            "lifted cycle fails verification: {lifted:?}"
        )));
    }
    Ok(lifted)
}

pub fn lift_path(h: &Hypergraph, t: &TraceResult, p: &BergePath) -> Result<BergePath> {
    if !verify_path(&t.trace, p)? {
        return Err(Error::InvalidCertificate(
            "path does not verify against the trace".into(),
        ));
    }
    let base = p
        .base
        .iter()
        .map(|&v| t.relabel[v as usize - 1])
        .collect::<Vec<u32>>();
    let edges = p.edges.iter().map(|&e| t.origin[e]).collect::<Vec<usize>>();
    let lifted = BergePath::new(base, edges)?;
    if !verify_path(h, &lifted)? {
        return Err(Error::InternalInvariantViolation(format!(
            "lifted path fails verification: {lifted:?}"
        )));
    }
    Ok(lifted)
}
