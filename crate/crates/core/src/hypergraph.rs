//! Core hypergraph representation: validation, shadow, covering test,
//! codegree, and the trace construction with origin tracking.

use std::collections::BTreeSet;

use crate::error::{Error, Result};

/// A simple hypergraph on vertices `1..=n` whose edge sizes all lie in a
/// fixed set `sizes` (the uniformity set R). Edges are stored strictly
/// sorted, and no two edges are equal as sets. Isolated vertices are fine.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    n: u32,
    edges: Vec<Vec<u32>>,
    sizes: BTreeSet<usize>,
}

/// The 2-shadow: all vertex pairs contained in some hyperedge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Shadow {
    pub n: u32,
    pub pairs: BTreeSet<(u32, u32)>,
}

/// Trace of a hypergraph on a vertex subset S, with the subset relabeled
/// `1..=|S|`. `origin[i]` is the index of one original hyperedge F with
/// F ∩ S equal to trace edge i (distinct trace edges get distinct origins,
/// which is what makes certificate lifting work).
#[derive(Debug, Clone)]
pub struct TraceResult {
    pub trace: Hypergraph,
    pub origin: Vec<usize>,
    /// `relabel[i]` is the original vertex behind trace vertex `i+1`.
    pub relabel: Vec<u32>,
}

pub fn ordered_pair(u: u32, v: u32) -> (u32, u32) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

impl Hypergraph {
    /// Validates raw input and builds a hypergraph. Edges are sorted
    /// internally; a repeated edge (as a set) is an error, not a silent
    /// dedup. Sizes 0 and 1 are always rejected.
    pub fn validate(n: u32, raw_edges: &[Vec<u32>], sizes: &BTreeSet<usize>) -> Result<Self> {
        let mut edges: Vec<Vec<u32>> = Vec::with_capacity(raw_edges.len());
        let mut seen: BTreeSet<Vec<u32>> = BTreeSet::new();
        for (index, raw) in raw_edges.iter().enumerate() {
            if raw.len() < 2 || !sizes.contains(&raw.len()) {
                return Err(Error::EdgeSizeOutOfRange {
                    index,
                    size: raw.len(),
                });
            }
            let mut edge = raw.clone();
            edge.sort_unstable();
            for w in edge.windows(2) {
                if w[0] == w[1] {
                    return Err(Error::RepeatedVertexInEdge {
                        index,
                        vertex: w[0],
                    });
                }
            }
            for &v in &edge {
                if v == 0 || v > n {
                    return Err(Error::VertexOutOfRange {
                        index,
                        vertex: v,
                        n,
                    });
                }
            }
            if !seen.insert(edge.clone()) {
                return Err(Error::DuplicateEdge { index });
            }
            edges.push(edge);
        }
        Ok(Hypergraph {
            n,
            edges,
            sizes: sizes.clone(),
        })
    }

    /// Builds a hypergraph inferring the uniformity set from the edge sizes
    /// actually present (`{2,3}` when there are no edges).
    pub fn from_edges(n: u32, raw_edges: &[Vec<u32>]) -> Result<Self> {
        let mut sizes: BTreeSet<usize> = raw_edges.iter().map(|e| e.len()).collect();
        if sizes.is_empty() {
            sizes.insert(2);
            sizes.insert(3);
        }
        Self::validate(n, raw_edges, &sizes)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn edges(&self) -> &[Vec<u32>] {
        &self.edges
    }

    pub fn edge(&self, index: usize) -> Result<&[u32]> {
        self.edges
            .get(index)
            .map(|e| e.as_slice())
            .ok_or(Error::IndexOutOfRange {
                index,
                len: self.edges.len(),
            })
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn sizes(&self) -> &BTreeSet<usize> {
        &self.sizes
    }

    pub fn max_edge_size(&self) -> usize {
        self.edges.iter().map(|e| e.len()).max().unwrap_or(0)
    }

    pub fn edge_contains_pair(&self, index: usize, u: u32, v: u32) -> bool {
        let e = &self.edges[index];
        e.binary_search(&u).is_ok() && e.binary_search(&v).is_ok()
    }

    pub fn shadow(&self) -> Shadow {
        let mut pairs = BTreeSet::new();
        for e in &self.edges {
            for i in 0..e.len() {
                for j in i + 1..e.len() {
                    pairs.insert((e[i], e[j]));
                }
            }
        }
        Shadow { n: self.n, pairs }
    }

    /// True iff every vertex pair lies in some hyperedge, i.e. the shadow
    /// is complete. Equivalent to `min_codegree() >= 1`.
    pub fn is_covering(&self) -> bool {
        if self.n < 2 {
            return true;
        }
        let total = (self.n as usize) * (self.n as usize - 1) / 2;
        self.shadow().pairs.len() == total
    }

    /// Returns the lexicographically first uncovered pair, if any.
    pub fn first_uncovered_pair(&self) -> Option<(u32, u32)> {
        let shadow = self.shadow();
        for u in 1..=self.n {
            for v in u + 1..=self.n {
                if !shadow.pairs.contains(&(u, v)) {
                    return Some((u, v));
                }
            }
        }
        None
    }

    /// Minimum 2-degree: the minimum over all pairs of the number of
    /// hyperedges containing the pair.
    pub fn min_codegree(&self) -> usize {
        let mut best = usize::MAX;
        for u in 1..=self.n {
            for v in u + 1..=self.n {
                let deg = self
                    .edges
                    .iter()
                    .filter(|e| e.binary_search(&u).is_ok() && e.binary_search(&v).is_ok())
                    .count();
                best = best.min(deg);
            }
        }
        if best == usize::MAX {
            0
        } else {
            best
        }
    }

    /// Trace on S: edge set {F ∩ S}, keeping only intersections of size >= 2
    /// and deduplicating. When several originals share one intersection the
    /// origin records the lowest original index, so lifts are reproducible.
    pub fn trace(&self, subset: &BTreeSet<u32>) -> Result<TraceResult> {
        if subset.len() < 2 {
            return Err(Error::EmptySubset);
        }
        for &v in subset {
            if v == 0 || v > self.n {
                return Err(Error::VertexOutOfRange {
                    index: 0,
                    vertex: v,
                    n: self.n,
                });
            }
        }
        let relabel: Vec<u32> = subset.iter().copied().collect();
        let mut new_label = vec![0u32; self.n as usize + 1];
        for (i, &v) in relabel.iter().enumerate() {
            new_label[v as usize] = i as u32 + 1;
        }
        let mut seen: BTreeSet<Vec<u32>> = BTreeSet::new();
        let mut trace_edges: Vec<Vec<u32>> = Vec::new();
        let mut origin: Vec<usize> = Vec::new();
        for (idx, e) in self.edges.iter().enumerate() {
            let mut inter: Vec<u32> = e
                .iter()
                .filter(|v| subset.contains(v))
                .map(|&v| new_label[v as usize])
                .collect();
            if inter.len() < 2 {
                continue;
            }
            inter.sort_unstable();
            if seen.insert(inter.clone()) {
                trace_edges.push(inter);
                origin.push(idx);
            }
        }
        let max_size = *self.sizes.iter().max().unwrap_or(&3);
        let sizes: BTreeSet<usize> = (2..=max_size.max(2)).collect();
        let trace = Hypergraph::validate(subset.len() as u32, &trace_edges, &sizes)?;
        Ok(TraceResult {
            trace,
            origin,
            relabel,
        })
    }
}

/// Edge indices grouped by the vertex pairs they contain. Finders and
/// oracles hit "which hyperedges contain {u,v}" constantly, so build it once.
#[derive(Debug, Clone)]
pub struct PairIndex {
    n: u32,
    by_pair: Vec<Vec<usize>>,
}

impl PairIndex {
    pub fn new(h: &Hypergraph) -> Self {
        let n = h.n();
        let total = (n as usize) * (n as usize).saturating_sub(1) / 2;
        let mut by_pair = vec![Vec::new(); total];
        for (idx, e) in h.edges().iter().enumerate() {
            for i in 0..e.len() {
                for j in i + 1..e.len() {
                    by_pair[pair_slot(n, e[i], e[j])].push(idx);
                }
            }
        }
        PairIndex { n, by_pair }
    }

    /// Edge indices containing both u and v, in increasing index order.
    pub fn containing(&self, u: u32, v: u32) -> &[usize] {
        &self.by_pair[pair_slot(self.n, u, v)]
    }

    pub fn pair_covered(&self, u: u32, v: u32) -> bool {
        !self.containing(u, v).is_empty()
    }
}

fn pair_slot(_n: u32, u: u32, v: u32) -> usize {
    let (a, b) = ordered_pair(u, v);
    let (a, b) = (a as usize, b as usize);
    // pairs ordered by larger endpoint: (1,2),(1,3),(2,3),(1,4),...
    (b - 1) * (b - 2) / 2 + (a - 1)
}
