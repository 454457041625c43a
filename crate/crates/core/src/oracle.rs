//! Ground-truth brute force: exhaustive Berge path/cycle existence with
//! certificates, exhaustive enumeration of small covering hypergraphs with
//! canonical forms, and the small-counterexample / higher-uniformity
//! experiments.
//!
//! Existence checks enumerate base sequences up to rotation and reflection
//! and decide edge-assignability per sequence as a bipartite matching
//! between consecutive pairs and the hyperedges containing them (a system
//! of distinct representatives). A naive backtracking assigner is kept as
//! an independent cross-check.

use serde::Serialize;
use std::collections::BTreeSet;

use crate::berge::{verify_cycle, verify_path, BergeCycle, BergePath};
use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, PairIndex};

// ---------------------------------------------------------------------------
// assignment search: matching and backtracking
// ---------------------------------------------------------------------------

/// Kuhn's augmenting-path matching from pair slots to hyperedges.
/// `candidates[i]` lists the edge indices usable for slot i, ascending.
/// Returns one edge per slot, all distinct, or None.
pub fn assign_by_matching(candidates: &[Vec<usize>]) -> Option<Vec<usize>> {
    if candidates.iter().any(|c| c.is_empty()) {
        return None;
    }
    // compact the right side
    let mut right_ids: Vec<usize> = candidates.iter().flatten().copied().collect();
    right_ids.sort_unstable();
    right_ids.dedup();
    if right_ids.len() < candidates.len() {
        return None;
    }
    let right_of = |edge: usize| right_ids.binary_search(&edge).unwrap();
    let mut matched_left: Vec<Option<usize>> = vec![None; right_ids.len()];

    fn try_augment(
        slot: usize,
        candidates: &[Vec<usize>],
        right_of: &dyn Fn(usize) -> usize,
        matched_left: &mut Vec<Option<usize>>,
        visited: &mut Vec<bool>,
    ) -> bool {
        for &edge in &candidates[slot] {
            let r = right_of(edge);
            if visited[r] {
                continue;
            }
            visited[r] = true;
            if matched_left[r].is_none()
                || try_augment(matched_left[r].unwrap(), candidates, right_of, matched_left, visited)
            {
                matched_left[r] = Some(slot);
                return true;
            }
        }
        false
    }

    for slot in 0..candidates.len() {
        let mut visited = vec![false; right_ids.len()];
        if !try_augment(slot, candidates, &right_of, &mut matched_left, &mut visited) {
            return None;
        }
    }
    let mut assignment = vec![usize::MAX; candidates.len()];
    for (r, &slot) in matched_left.iter().enumerate() {
        if let Some(slot) = slot {
            assignment[slot] = right_ids[r];
        }
    }
    Some(assignment)
}

/// Independent oracle for the same problem: assign slots one at a time,
/// backtracking over candidates.
pub fn assign_by_backtracking(candidates: &[Vec<usize>]) -> Option<Vec<usize>> {
    fn go(
        slot: usize,
        candidates: &[Vec<usize>],
        used: &mut BTreeSet<usize>,
        out: &mut Vec<usize>,
    ) -> bool {
        if slot == candidates.len() {
            return true;
        }
        for &edge in &candidates[slot] {
            if used.insert(edge) {
                out.push(edge);
                if go(slot + 1, candidates, used, out) {
                    return true;
                }
                out.pop();
                used.remove(&edge);
            }
        }
        false
    }
    let mut out = Vec::with_capacity(candidates.len());
    let mut used = BTreeSet::new();
    if go(0, candidates, &mut used, &mut out) {
        Some(out)
    } else {
        None
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
pub enum Assigner {
    Matching,
    Backtracking,
}

fn candidates_for(pi: &PairIndex, seq: &[u32], cyclic: bool) -> Vec<Vec<usize>> {
    let count = if cyclic { seq.len() } else { seq.len() - 1 };
    (0..count)
        .map(|i| pi.containing(seq[i], seq[(i + 1) % seq.len()]).to_vec())
        .collect()
}

// ---------------------------------------------------------------------------
// existence
// ---------------------------------------------------------------------------

/// Searches for any Berge cycle of length `s`, returning a verifying
/// certificate if one exists. Base sequences are enumerated with the
/// smallest base vertex first and `seq[1] < seq[s-1]`, which kills
/// rotations and reflections.
pub fn exists_cycle(h: &Hypergraph, s: usize) -> Result<Option<BergeCycle>> {
    exists_cycle_with(h, s, Assigner::Matching)
}

pub fn exists_cycle_with(
    h: &Hypergraph,
    s: usize,
    assigner: Assigner,
) -> Result<Option<BergeCycle>> {
    let n = h.n() as usize;
    if s < 3 || s > n {
        return Err(Error::LengthOutOfRange {
            length: s,
            min: 3,
            max: n,
        });
    }
    if h.num_edges() < s {
        return Ok(None);
    }
    let pi = PairIndex::new(h);

    fn dfs(
        h: &Hypergraph,
        pi: &PairIndex,
        s: usize,
        n: usize,
        seq: &mut Vec<u32>,
        used: &mut Vec<bool>,
        assigner: Assigner,
    ) -> Option<BergeCycle> {
        if seq.len() == s {
            if seq[1] > seq[s - 1] {
                return None;
            }
            if !pi.pair_covered(seq[s - 1], seq[0]) {
                return None;
            }
            let cand = candidates_for(pi, seq, true);
            let assignment = match assigner {
                Assigner::Matching => assign_by_matching(&cand),
                Assigner::Backtracking => assign_by_backtracking(&cand),
            }?;
            let cycle = BergeCycle::new(seq.clone(), assignment).ok()?;
            debug_assert!(verify_cycle(h, &cycle).unwrap());
            return Some(cycle);
        }
        let last = *seq.last().unwrap();
        let lo = seq[0] + 1;
        for v in lo..=n as u32 {
            if used[v as usize] || !pi.pair_covered(last, v) {
                continue;
            }
            used[v as usize] = true;
            seq.push(v);
            if let Some(found) = dfs(h, pi, s, n, seq, used, assigner) {
                return Some(found);
            }
            seq.pop();
            used[v as usize] = false;
        }
        None
    }

    let mut used = vec![false; n + 1];
    for v1 in 1..=(n - s + 1) as u32 {
        let mut seq = vec![v1];
        used[v1 as usize] = true;
        if let Some(found) = dfs(h, &pi, s, n, &mut seq, &mut used, assigner) {
            return Ok(Some(found));
        }
        used[v1 as usize] = false;
    }
    Ok(None)
}

/// Searches for any Berge path on `t` base vertices (length t-1).
/// Sequences are enumerated with `seq[0] < seq[t-1]` to kill reflections.
pub fn exists_path(h: &Hypergraph, t: usize) -> Result<Option<BergePath>> {
    exists_path_with(h, t, Assigner::Matching)
}

pub fn exists_path_with(h: &Hypergraph, t: usize, assigner: Assigner) -> Result<Option<BergePath>> {
    let n = h.n() as usize;
    if t < 2 || t > n {
        return Err(Error::LengthOutOfRange {
            length: t,
            min: 2,
            max: n,
        });
    }
    if h.num_edges() < t - 1 {
        return Ok(None);
    }
    let pi = PairIndex::new(h);

    fn dfs(
        h: &Hypergraph,
        pi: &PairIndex,
        t: usize,
        n: usize,
        seq: &mut Vec<u32>,
        used: &mut Vec<bool>,
        assigner: Assigner,
    ) -> Option<BergePath> {
        if seq.len() == t {
            if seq[0] > seq[t - 1] {
                return None;
            }
            let cand = candidates_for(pi, seq, false);
            let assignment = match assigner {
                Assigner::Matching => assign_by_matching(&cand),
                Assigner::Backtracking => assign_by_backtracking(&cand),
            }?;
            let path = BergePath::new(seq.clone(), assignment).ok()?;
            debug_assert!(verify_path(h, &path).unwrap());
            return Some(path);
        }
        let last = *seq.last().unwrap();
        for v in 1..=n as u32 {
            if used[v as usize] || !pi.pair_covered(last, v) {
                continue;
            }
            used[v as usize] = true;
            seq.push(v);
            if let Some(found) = dfs(h, pi, t, n, seq, used, assigner) {
                return Some(found);
            }
            seq.pop();
            used[v as usize] = false;
        }
        None
    }

    let mut used = vec![false; n + 1];
    for v1 in 1..=n as u32 {
        let mut seq = vec![v1];
        used[v1 as usize] = true;
        if let Some(found) = dfs(h, &pi, t, n, &mut seq, &mut used, assigner) {
            return Ok(Some(found));
        }
        used[v1 as usize] = false;
    }
    Ok(None)
}

// ---------------------------------------------------------------------------
// canonical forms
// ---------------------------------------------------------------------------

pub fn all_permutations(n: usize) -> Vec<Vec<u8>> {
    fn go(n: usize, cur: &mut Vec<u8>, used: &mut Vec<bool>, out: &mut Vec<Vec<u8>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for v in 0..n as u8 {
            if !used[v as usize] {
                used[v as usize] = true;
                cur.push(v);
                go(n, cur, used, out);
                cur.pop();
                used[v as usize] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(n, &mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Minimum-image canonical labeling over all n! vertex permutations.
/// Only sensible for n <= 8; anything larger is a hard error.
pub struct Canonicalizer {
    n: usize,
    perms: Vec<Vec<u8>>,
    /// per-permutation remap table for every vertex mask, built when n <= 7
    tables: Vec<Vec<u32>>,
}

impl Canonicalizer {
    pub fn new(n: u32) -> Result<Self> {
        if n > 8 {
            return Err(Error::CapExceeded(format!(
                "canonical labeling caps at 8 vertices, got {n}"
            )));
        }
        let n = n as usize;
        let perms = all_permutations(n);
        let tables = if n <= 7 {
            perms
                .iter()
                .map(|p| {
                    (0u32..(1 << n))
                        .map(|mask| {
                            let mut out = 0u32;
                            for (v, &pv) in p.iter().enumerate() {
                                if mask & (1 << v) != 0 {
                                    out |= 1 << pv;
                                }
                            }
                            out
                        })
                        .collect()
                })
                .collect()
        } else {
            Vec::new()
        };
        Ok(Canonicalizer { n, perms, tables })
    }

    /// Canonical encoding of an edge set given as vertex masks.
    pub fn canonical_masks(&self, edge_masks: &[u32]) -> Vec<u32> {
        let mut best: Option<Vec<u32>> = None;
        let mut scratch = vec![0u32; edge_masks.len()];
        for (pi, perm) in self.perms.iter().enumerate() {
            if self.tables.is_empty() {
                for (i, &m) in edge_masks.iter().enumerate() {
                    let mut out = 0u32;
                    for (v, &pv) in perm.iter().enumerate() {
                        if m & (1 << v) != 0 {
                            out |= 1 << pv;
                        }
                    }
                    scratch[i] = out;
                }
            } else {
                let table = &self.tables[pi];
                for (i, &m) in edge_masks.iter().enumerate() {
                    scratch[i] = table[m as usize];
                }
            }
            scratch.sort_unstable();
            match &best {
                Some(b) if scratch >= *b => {}
                _ => best = Some(scratch.clone()),
            }
        }
        best.unwrap_or_default()
    }

    pub fn n(&self) -> usize {
        self.n
    }
}

pub fn edge_masks(h: &Hypergraph) -> Vec<u32> {
    h.edges()
        .iter()
        .map(|e| e.iter().fold(0u32, |m, &v| m | 1 << (v - 1)))
        .collect()
}

pub fn decode_masks(n: u32, masks: &[u32]) -> Result<Hypergraph> {
    let edges: Vec<Vec<u32>> = masks
        .iter()
        .map(|&m| (0..n).filter(|v| m & (1 << v) != 0).map(|v| v + 1).collect())
        .collect();
    Hypergraph::from_edges(n, &edges)
}

/// Canonical form of a whole hypergraph (n <= 8).
pub fn canonical_form(h: &Hypergraph) -> Result<Vec<u32>> {
    let canon = Canonicalizer::new(h.n())?;
    Ok(canon.canonical_masks(&edge_masks(h)))
}

// ---------------------------------------------------------------------------
// enumeration of covering hypergraphs
// ---------------------------------------------------------------------------

/// The pool of all allowed hyperedges on n vertices: subset enumeration
/// works over bitmasks into this pool. Pools above 35 bits are refused
/// (2^35 subsets is already the practical ceiling), which comes out to
/// n <= 6 for {2,3}-graphs and n <= 7 for 3-uniform ones.
pub struct EdgePool {
    n: u32,
    edges: Vec<Vec<u32>>,
    vert_masks: Vec<u32>,
    pair_masks: Vec<u64>,
    full_pairs: u64,
    sizes: BTreeSet<usize>,
}

const POOL_BITS_CAP: usize = 35;

impl EdgePool {
    pub fn new(n: u32, sizes: &BTreeSet<usize>) -> Result<Self> {
        let mut edges: Vec<Vec<u32>> = Vec::new();
        for &k in sizes {
            if k < 2 || k > n as usize {
                continue;
            }
            let mut combo: Vec<u32> = (1..=k as u32).collect();
            loop {
                edges.push(combo.clone());
                // next k-combination of 1..=n in lexicographic order
                let mut i = k;
                loop {
                    if i == 0 {
                        break;
                    }
                    i -= 1;
                    if combo[i] < n - (k - 1 - i) as u32 {
                        combo[i] += 1;
                        for j in i + 1..k {
                            combo[j] = combo[j - 1] + 1;
                        }
                        break;
                    }
                    if i == 0 {
                        combo.clear();
                        break;
                    }
                }
                if combo.is_empty() {
                    break;
                }
            }
        }
        if edges.len() > POOL_BITS_CAP {
            return Err(Error::CapExceeded(format!(
                "edge pool has {} members, cap is {POOL_BITS_CAP} (n={n}, sizes={sizes:?})",
                edges.len()
            )));
        }
        let vert_masks: Vec<u32> = edges
            .iter()
            .map(|e| e.iter().fold(0u32, |m, &v| m | 1 << (v - 1)))
            .collect();
        let pair_masks: Vec<u64> = edges
            .iter()
            .map(|e| {
                let mut m = 0u64;
                for i in 0..e.len() {
                    for j in i + 1..e.len() {
                        m |= 1 << pair_bit(e[i], e[j]);
                    }
                }
                m
            })
            .collect();
        let total_pairs = (n as usize) * (n as usize - 1) / 2;
        let full_pairs = if total_pairs == 64 {
            u64::MAX
        } else {
            (1u64 << total_pairs) - 1
        };
        Ok(EdgePool {
            n,
            edges,
            vert_masks,
            pair_masks,
            full_pairs,
            sizes: sizes.clone(),
        })
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn subset_count(&self) -> u64 {
        1u64 << self.edges.len()
    }

    pub fn subset_covering(&self, subset: u64) -> bool {
        let mut covered = 0u64;
        let mut rest = subset;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            covered |= self.pair_masks[i];
            rest &= rest - 1;
        }
        covered == self.full_pairs
    }

    pub fn subset_edge_masks(&self, subset: u64) -> Vec<u32> {
        let mut out = Vec::with_capacity(subset.count_ones() as usize);
        let mut rest = subset;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            out.push(self.vert_masks[i]);
            rest &= rest - 1;
        }
        out
    }

    pub fn realize(&self, subset: u64) -> Hypergraph {
        let mut raw = Vec::with_capacity(subset.count_ones() as usize);
        let mut rest = subset;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            raw.push(self.edges[i].clone());
            rest &= rest - 1;
        }
        Hypergraph::validate(self.n, &raw, &self.sizes)
            .expect("pool subsets are valid by construction")
    }
}

fn pair_bit(u: u32, v: u32) -> u32 {
    let (a, b) = crate::hypergraph::ordered_pair(u, v);
    (b - 1) * (b - 2) / 2 + (a - 1)
}

/// All bitmasks over `len` bits with exactly `m` ones, ascending
/// (Gosper's hack). Lets callers sweep the sparse end of a pool that is
/// too large to enumerate in full.
pub struct SameSizeSubsets {
    next: Option<u64>,
    limit: u64,
}

pub fn subsets_of_size(len: usize, m: usize) -> SameSizeSubsets {
    assert!(len < 64);
    if m == 0 || m > len {
        return SameSizeSubsets {
            next: if m == 0 { Some(0) } else { None },
            limit: 1u64 << len,
        };
    }
    SameSizeSubsets {
        next: Some((1u64 << m) - 1),
        limit: 1u64 << len,
    }
}

impl Iterator for SameSizeSubsets {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        let v = self.next?;
        if v >= self.limit {
            self.next = None;
            return None;
        }
        self.next = if v == 0 {
            None
        } else {
            let t = v | (v - 1);
            let w = (t + 1) | (((!t & (t + 1)) - 1) >> (v.trailing_zeros() + 1));
            Some(w)
        };
        Some(v)
    }
}

/// Streams all covering hypergraphs on n vertices with edge sizes in
/// `sizes` and edge count in `m_min..=m_max`. With `canonical`, one
/// representative per isomorphism class is produced instead (requires
/// n <= 8), in canonical-encoding order.
pub fn enumerate_covering(
    n: u32,
    sizes: &BTreeSet<usize>,
    m_min: usize,
    m_max: usize,
    canonical: bool,
) -> Result<Vec<Hypergraph>> {
    let pool = EdgePool::new(n, sizes)?;
    if canonical {
        let canon = Canonicalizer::new(n)?;
        let mut forms: BTreeSet<Vec<u32>> = BTreeSet::new();
        for subset in 0..pool.subset_count() {
            let m = subset.count_ones() as usize;
            if m < m_min || m > m_max || !pool.subset_covering(subset) {
                continue;
            }
            forms.insert(canon.canonical_masks(&pool.subset_edge_masks(subset)));
        }
        forms.into_iter().map(|f| decode_masks(n, &f)).collect()
    } else {
        let mut out = Vec::new();
        for subset in 0..pool.subset_count() {
            let m = subset.count_ones() as usize;
            if m < m_min || m > m_max || !pool.subset_covering(subset) {
                continue;
            }
            out.push(pool.realize(subset));
        }
        Ok(out)
    }
}

// ---------------------------------------------------------------------------
// experiments
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Serialize)]
pub struct MissingCycles {
    pub n: u32,
    pub m: usize,
    pub edges: Vec<Vec<u32>>,
    pub missing_lengths: Vec<usize>,
}

#[derive(Debug, Serialize)]
pub struct Remark5Report {
    pub checked_classes: usize,
    pub failures: Vec<MissingCycles>,
}

fn missing_cycle_lengths(h: &Hypergraph, s_max: usize) -> Result<Vec<usize>> {
    let mut missing = Vec::new();
    for s in 3..=s_max {
        if exists_cycle(h, s)?.is_none() {
            missing.push(s);
        }
    }
    Ok(missing)
}

/// Checks every covering {2,3}-graph on 3..=5 vertices with at least 3
/// hyperedges (one representative per isomorphism class) for Berge cycles
/// of every length 3..=min(m,n), and reports the classes that miss one.
pub fn remark5_experiment(parallel: bool) -> Result<Remark5Report> {
    remark5_range(3, 5, parallel)
}

/// Same census over a custom vertex range (n_hi <= 5).
pub fn remark5_range(n_lo: u32, n_hi: u32, parallel: bool) -> Result<Remark5Report> {
    if n_hi > 5 {
        return Err(Error::CapExceeded(
            "the small-counterexample census runs on at most 5 vertices".into(),
        ));
    }
    let sizes: BTreeSet<usize> = [2, 3].into_iter().collect();
    let mut checked = 0usize;
    let mut failures: Vec<MissingCycles> = Vec::new();
    for n in n_lo.max(3)..=n_hi {
        let classes = enumerate_covering_classes(n, &sizes, 3, usize::MAX, parallel)?;
        for form in &classes {
            let h = decode_masks(n, form)?;
            checked += 1;
            let m = h.num_edges();
            let missing = missing_cycle_lengths(&h, m.min(n as usize))?;
            if !missing.is_empty() {
                failures.push(MissingCycles {
                    n,
                    m,
                    edges: h.edges().to_vec(),
                    missing_lengths: missing,
                });
            }
        }
    }
    failures.sort_by(|a, b| (a.n, &a.edges).cmp(&(b.n, &b.edges)));
    Ok(Remark5Report {
        checked_classes: checked,
        failures,
    })
}

/// Canonical forms of all covering hypergraphs in the given size/edge-count
/// window, optionally sharded across threads. Deterministic: the result is
/// a sorted set of canonical encodings.
pub fn enumerate_covering_classes(
    n: u32,
    sizes: &BTreeSet<usize>,
    m_min: usize,
    m_max: usize,
    parallel: bool,
) -> Result<Vec<Vec<u32>>> {
    let pool = EdgePool::new(n, sizes)?;
    let canon = Canonicalizer::new(n)?;
    let total = pool.subset_count();
    let collect_range = |lo: u64, hi: u64| -> BTreeSet<Vec<u32>> {
        let mut forms = BTreeSet::new();
        for subset in lo..hi {
            let m = subset.count_ones() as usize;
            if m < m_min || m > m_max || !pool.subset_covering(subset) {
                continue;
            }
            forms.insert(canon.canonical_masks(&pool.subset_edge_masks(subset)));
        }
        forms
    };
    let merged: BTreeSet<Vec<u32>> = if parallel && total > 1 << 12 {
        use rayon::prelude::*;
        let shards = (rayon::current_num_threads() * 4).max(1) as u64;
        let step = total.div_ceil(shards);
        (0..shards)
            .into_par_iter()
            .map(|i| collect_range(i * step, ((i + 1) * step).min(total)))
            .reduce(BTreeSet::new, |mut a, b| {
                a.extend(b);
                a
            })
    } else {
        collect_range(0, total)
    };
    Ok(merged.into_iter().collect())
}

#[derive(Debug, Serialize)]
pub struct ConjectureReport {
    pub k: usize,
    pub n: u32,
    pub mode: String,
    pub checked: usize,
    pub counterexamples: Vec<MissingCycles>,
}

pub enum SearchMode {
    Exhaustive,
    Random { budget: usize, seed: u64 },
}

/// Probes whether covering k-graphs (k >= 4) with m >= 3 edges contain
/// Berge cycles of every length 3..=min(m,n). Exhaustive mode is capped at
/// k=4, n <= 6; random mode samples seeded covering k-graphs.
pub fn conjecture_search(k: usize, n: u32, mode: SearchMode) -> Result<ConjectureReport> {
    if k < 4 {
        return Err(Error::InvalidParameters(format!(
            "conjecture probe needs k >= 4, got {k}"
        )));
    }
    let mut checked = 0usize;
    let mut counterexamples = Vec::new();
    let mode_name;
    match mode {
        SearchMode::Exhaustive => {
            mode_name = "exhaustive".to_string();
            if !(k == 4 && n <= 6) {
                return Err(Error::CapExceeded(format!(
                    "exhaustive mode is limited to k=4, n <= 6 (got k={k}, n={n})"
                )));
            }
            let sizes: BTreeSet<usize> = [k].into_iter().collect();
            let pool = EdgePool::new(n, &sizes)?;
            for subset in 0..pool.subset_count() {
                let m = subset.count_ones() as usize;
                if m < 3 || !pool.subset_covering(subset) {
                    continue;
                }
                let h = pool.realize(subset);
                checked += 1;
                let missing = missing_cycle_lengths(&h, m.min(n as usize))?;
                if !missing.is_empty() {
                    counterexamples.push(MissingCycles {
                        n,
                        m,
                        edges: h.edges().to_vec(),
                        missing_lengths: missing,
                    });
                }
            }
        }
        SearchMode::Random { budget, seed } => {
            use rand::SeedableRng;
            mode_name = format!("random(budget={budget},seed={seed})");
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..budget {
                use rand::Rng;
                let extra = rng.gen_range(0..4);
                let h = crate::generate::random_covering_k(n, k, &mut rng, extra)?;
                let m = h.num_edges();
                if m < 3 {
                    continue;
                }
                checked += 1;
                let missing = missing_cycle_lengths(&h, m.min(n as usize))?;
                if !missing.is_empty() {
                    counterexamples.push(MissingCycles {
                        n,
                        m,
                        edges: h.edges().to_vec(),
                        missing_lengths: missing,
                    });
                }
            }
        }
    }
    Ok(ConjectureReport {
        k,
        n,
        mode: mode_name,
        checked,
        counterexamples,
    })
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
    fn star_plus_triple_has_no_hamiltonian_cycle() {
        // pairs inside {2,3,4} all compete for the single triple
        let h = hg(4, &[&[1, 2], &[1, 3], &[1, 4], &[2, 3, 4]]);
        assert!(h.is_covering());
        assert!(exists_cycle(&h, 4).unwrap().is_none());
        assert!(exists_cycle_with(&h, 4, Assigner::Backtracking).unwrap().is_none());
        // but a triangle exists
        let c = exists_cycle(&h, 3).unwrap().unwrap();
        assert!(verify_cycle(&h, &c).unwrap());
    }

    #[test]
    fn four_triples_pigeonhole() {
        let h = hg(5, &[&[1, 2, 3], &[1, 4, 5], &[2, 4, 5], &[3, 4, 5]]);
        assert!(exists_cycle(&h, 5).unwrap().is_none());
    }

    #[test]
    fn complete_3graph_has_all_cycles() {
        let h = complete3(6);
        for s in 3..=6 {
            let c = exists_cycle(&h, s).unwrap().unwrap();
            assert_eq!(c.len(), s);
            assert!(verify_cycle(&h, &c).unwrap());
        }
    }

    #[test]
    fn path_existence_examples() {
        let h = hg(3, &[&[1, 2, 3]]);
        assert!(exists_path(&h, 3).unwrap().is_none()); // needs 2 distinct edges

        let h = hg(4, &[&[1, 2, 3], &[1, 2, 4]]);
        let p = exists_path(&h, 3).unwrap().unwrap();
        assert!(verify_path(&h, &p).unwrap());
    }

    #[test]
    fn length_bounds_are_checked() {
        let h = complete3(4);
        assert!(matches!(
            exists_cycle(&h, 2),
            Err(Error::LengthOutOfRange { .. })
        ));
        assert!(matches!(
            exists_cycle(&h, 5),
            Err(Error::LengthOutOfRange { .. })
        ));
        assert!(matches!(
            exists_path(&h, 1),
            Err(Error::LengthOutOfRange { .. })
        ));
    }

    #[test]
    fn matching_agrees_with_backtracking() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..300 {
            let n = rng.gen_range(4..7u32);
            let extra = rng.gen_range(0..3);
            let h = crate::generate::random_covering3(n, &mut rng, extra, true).unwrap();
            let s = rng.gen_range(3..=n as usize);
            let a = exists_cycle_with(&h, s, Assigner::Matching).unwrap();
            let b = exists_cycle_with(&h, s, Assigner::Backtracking).unwrap();
            assert_eq!(a.is_some(), b.is_some(), "disagreement on {h:?} s={s}");
            if let Some(c) = a {
                assert!(verify_cycle(&h, &c).unwrap());
            }
            if let Some(c) = b {
                assert!(verify_cycle(&h, &c).unwrap());
            }
        }
    }

    #[test]
    fn canonical_form_is_permutation_invariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..40 {
            let n = rng.gen_range(4..8u32);
            let h = crate::generate::random_covering3(n, &mut rng, 2, true).unwrap();
            let base = canonical_form(&h).unwrap();
            // apply a random permutation and re-canonicalize
            let mut perm: Vec<u32> = (1..=n).collect();
            use rand::seq::SliceRandom;
            perm.shuffle(&mut rng);
            let edges: Vec<Vec<u32>> = h
                .edges()
                .iter()
                .map(|e| {
                    let mut e2: Vec<u32> =
                        e.iter().map(|&v| perm[v as usize - 1]).collect();
                    e2.sort_unstable();
                    e2
                })
                .collect();
            let h2 = Hypergraph::from_edges(n, &edges).unwrap();
            assert_eq!(base, canonical_form(&h2).unwrap());
        }
    }

    #[test]
    fn enumeration_count_cross_checked() {
        // independent direct enumeration of covering 3-uniform graphs on 4
        // vertices: subsets of the four triples, covering iff >= 3 of them
        let triples = [vec![1u32, 2, 3], vec![1, 2, 4], vec![1, 3, 4], vec![2, 3, 4]];
        let mut direct = 0usize;
        for mask in 0u32..16 {
            let chosen: Vec<Vec<u32>> = (0..4)
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| triples[i].clone())
                .collect();
            let h = Hypergraph::from_edges(4, &chosen).unwrap();
            if h.is_covering() {
                direct += 1;
            }
        }
        assert_eq!(direct, 5); // the four 3-subsets plus the full set

        let sizes: BTreeSet<usize> = [3].into_iter().collect();
        let all = enumerate_covering(4, &sizes, 0, usize::MAX, false).unwrap();
        assert_eq!(all.len(), direct);
        let classes = enumerate_covering(4, &sizes, 0, usize::MAX, true).unwrap();
        assert_eq!(classes.len(), 2); // m=3 and m=4
    }

    #[test]
    fn enumeration_includes_triangle_supersets() {
        let sizes: BTreeSet<usize> = [2, 3].into_iter().collect();
        let all = enumerate_covering(3, &sizes, 3, usize::MAX, false).unwrap();
        let triangle = hg(3, &[&[1, 2], &[1, 3], &[2, 3]]);
        assert!(all.iter().any(|h| h.edges() == triangle.edges()));
        // every member covers all three pairs and has >= 3 edges
        assert!(all.iter().all(|h| h.is_covering() && h.num_edges() >= 3));
    }

    #[test]
    fn pool_cap_is_enforced() {
        let sizes: BTreeSet<usize> = [2, 3].into_iter().collect();
        assert!(matches!(
            EdgePool::new(7, &sizes),
            Err(Error::CapExceeded(_))
        ));
        let sizes3: BTreeSet<usize> = [3].into_iter().collect();
        assert!(EdgePool::new(7, &sizes3).is_ok());
        assert!(matches!(
            EdgePool::new(8, &sizes3),
            Err(Error::CapExceeded(_))
        ));
    }

    #[test]
    fn conjecture_exhaustive_k4_n5() {
        let report = conjecture_search(4, 5, SearchMode::Exhaustive).unwrap();
        // covering 4-uniform graphs on 5 vertices are exactly the subsets
        // with >= 3 of the five 4-sets: C(5,3)+C(5,4)+C(5,5) = 16
        assert_eq!(report.checked, 16);
        assert!(report.counterexamples.is_empty());
    }

    #[test]
    fn same_size_subsets_enumerate_combinations() {
        let all: Vec<u64> = subsets_of_size(5, 2).collect();
        assert_eq!(all.len(), 10);
        assert!(all.iter().all(|s| s.count_ones() == 2 && *s < 32));
        let mut sorted = all.clone();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(sorted.len(), 10);
        assert_eq!(subsets_of_size(6, 0).collect::<Vec<_>>(), vec![0]);
        assert_eq!(subsets_of_size(4, 5).count(), 0);
    }

    #[test]
    fn conjecture_rejects_small_k() {
        assert!(matches!(
            conjecture_search(3, 5, SearchMode::Exhaustive),
            Err(Error::InvalidParameters(_))
        ));
        assert!(matches!(
            conjecture_search(4, 7, SearchMode::Exhaustive),
            Err(Error::CapExceeded(_))
        ));
    }
}
