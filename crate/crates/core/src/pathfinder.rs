//! Constructive Hamiltonian Berge paths in covering [3]-graphs.
//!
//! The path grows one vertex per round. For an outside vertex u, any free
//! hyperedge through {u, v1} or {u, vt} extends an end directly. When both
//! ends are blocked, the blocking edges are forced to be the two end
//! assignments (a used edge containing u and an endpoint can only embed the
//! endpoint's single incident pair), which frees the pair {v1, vt} for a
//! rotation that appends u:
//!
//! ```text
//! v1 v2 .. vt   becomes   v2 .. vt v1 u
//! ```
//!
//! with {vt,v1} on a fresh edge and {v1,u} on the edge that used to embed
//! {v1,v2}. Each forced step is asserted at runtime; a violated assertion
//! means the input was corrupted or there is a bug, never a silent wrong
//! answer.

use crate::berge::{verify_path, BergePath};
use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, PairIndex};

pub(crate) fn check_3graph_preconditions(h: &Hypergraph, min_n: usize) -> Result<()> {
    if (h.n() as usize) < min_n {
        return Err(Error::TooFewVertices {
            needed: min_n,
            got: h.n() as usize,
        });
    }
    if h.max_edge_size() > 3 {
        return Err(Error::PreconditionFailed(format!(
            "edge sizes must lie in {{2,3}}, found one of size {}",
            h.max_edge_size()
        )));
    }
    if let Some((u, v)) = h.first_uncovered_pair() {
        return Err(Error::NotCovering { u, v });
    }
    Ok(())
}

fn lowest_free(pi: &PairIndex, used: &[bool], u: u32, v: u32) -> Option<usize> {
    pi.containing(u, v).iter().copied().find(|&e| !used[e])
}

/// Finds a Hamiltonian Berge path in a covering [3]-graph on n >= 4
/// vertices. The returned certificate always verifies.
pub fn find_hamiltonian_path(h: &Hypergraph) -> Result<BergePath> {
    check_3graph_preconditions(h, 4)?;
    let n = h.n();
    let pi = PairIndex::new(h);

    // seed with the lowest-indexed hyperedge, two lowest vertices
    let seed = h.edges()[0].clone();
    let mut base: Vec<u32> = vec![seed[0], seed[1]];
    let mut assign: Vec<usize> = vec![0];
    let mut used = vec![false; h.num_edges()];
    used[0] = true;
    let mut on_path = vec![false; n as usize + 1];
    on_path[seed[0] as usize] = true;
    on_path[seed[1] as usize] = true;

    while base.len() < n as usize {
        let t = base.len();
        let before = t;
        if t == 2 {
            // with one assigned edge at most one outside vertex (its third
            // vertex) can be blocked on both ends, so scan for another
            let mut extended = false;
            for u in 1..=n {
                if on_path[u as usize] {
                    continue;
                }
                if let Some(e) = lowest_free(&pi, &used, u, base[0]) {
                    base.insert(0, u);
                    assign.insert(0, e);
                    used[e] = true;
                    on_path[u as usize] = true;
                    extended = true;
                    break;
                }
                if let Some(e) = lowest_free(&pi, &used, u, base[1]) {
                    base.push(u);
                    assign.push(e);
                    used[e] = true;
                    on_path[u as usize] = true;
                    extended = true;
                    break;
                }
            }
            if !extended {
                return Err(Error::InternalInvariantViolation(format!(
                    "no outside vertex extends the seed path {base:?}"
                )));
            }
        } else {
            let u = (1..=n)
                .find(|&v| !on_path[v as usize])
                .expect("t < n leaves an outside vertex");
            let head = base[0];
            let tail = *base.last().unwrap();
            if let Some(e) = lowest_free(&pi, &used, u, head) {
                base.insert(0, u);
                assign.insert(0, e);
                used[e] = true;
                on_path[u as usize] = true;
            } else if let Some(e) = lowest_free(&pi, &used, u, tail) {
                base.push(u);
                assign.push(e);
                used[e] = true;
                on_path[u as usize] = true;
            } else {
                // both ends blocked: the blockers must be the end
                // assignments {u,v1,v2} and {u,v_{t-1},v_t}
                let first = assign[0];
                let last = assign[t - 2];
                if !h.edge_contains_pair(first, u, head) {
                    return Err(Error::InternalInvariantViolation(format!(
                        "blocked head: edge {:?} embedding {{{},{}}} does not contain u={u}",
                        h.edges()[first],
                        head,
                        base[1]
                    )));
                }
                if !h.edge_contains_pair(last, u, tail) {
                    return Err(Error::InternalInvariantViolation(format!(
                        "blocked tail: edge {:?} embedding the last pair does not contain u={u}",
                        h.edges()[last]
                    )));
                }
                // every edge through {v1, vt} is free: a used one would have
                // to embed {v1,v2} or {v_{t-1},v_t}, both taken by edges
                // containing u
                let closing = pi.containing(head, tail);
                if closing.is_empty() {
                    return Err(Error::InternalInvariantViolation(format!(
                        "pair {{{head},{tail}}} uncovered in a covering hypergraph"
                    )));
                }
                for &e in closing {
                    if used[e] {
                        return Err(Error::InternalInvariantViolation(format!(
                            "edge {:?} through the endpoints is used at t={t}",
                            h.edges()[e]
                        )));
                    }
                }
                let fresh = closing[0];
                // rotate: v2 .. vt v1 u
                base.remove(0);
                base.push(head);
                base.push(u);
                assign.remove(0);
                assign.push(fresh);
                assign.push(first);
                used[fresh] = true;
                on_path[u as usize] = true;
            }
        }
        debug_assert!(base.len() == before + 1, "progress: one vertex per round");
    }

    let path = BergePath::new(base, assign)?;
    if !verify_path(h, &path)? {
        return Err(Error::InternalInvariantViolation(format!(
            "constructed Hamiltonian path fails verification: {path:?}"
        )));
    }
    Ok(path)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use std::collections::BTreeSet;

    fn hg(n: u32, edges: &[&[u32]]) -> Hypergraph {
        let raw: Vec<Vec<u32>> = edges.iter().map(|e| e.to_vec()).collect();
        Hypergraph::from_edges(n, &raw).unwrap()
    }

    #[test]
    fn complete_3graph_on_4() {
        let h = hg(4, &[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4], &[2, 3, 4]]);
        let p = find_hamiltonian_path(&h).unwrap();
        assert_eq!(p.len(), 4);
        assert!(verify_path(&h, &p).unwrap());
    }

    #[test]
    fn four_triples_on_5() {
        let h = hg(5, &[&[1, 2, 3], &[1, 4, 5], &[2, 4, 5], &[3, 4, 5]]);
        // the oracle is the ground truth for existence
        assert!(oracle::exists_path(&h, 5).unwrap().is_some());
        let p = find_hamiltonian_path(&h).unwrap();
        assert_eq!(p.len(), 5);
        assert!(verify_path(&h, &p).unwrap());
    }

    #[test]
    fn seed_blocked_on_both_ends() {
        // seed path 1-2 embeds in {1,2,3}; u=3 is blocked on both ends and
        // must be skipped in favor of u=4
        let h = hg(4, &[&[1, 2, 3], &[1, 4], &[2, 4], &[3, 4]]);
        let p = find_hamiltonian_path(&h).unwrap();
        assert_eq!(p.len(), 4);
        assert!(verify_path(&h, &p).unwrap());
    }

    #[test]
    fn preconditions() {
        let h = hg(4, &[&[1, 2, 3]]);
        assert!(matches!(
            find_hamiltonian_path(&h),
            Err(Error::NotCovering { .. })
        ));

        let h = hg(3, &[&[1, 2, 3]]);
        assert!(matches!(
            find_hamiltonian_path(&h),
            Err(Error::TooFewVertices { .. })
        ));

        let raw = vec![vec![1u32, 2, 3, 4], vec![1, 2], vec![3, 4]];
        let sizes: BTreeSet<usize> = [2, 3, 4].into_iter().collect();
        let h = Hypergraph::validate(4, &raw, &sizes).unwrap();
        assert!(matches!(
            find_hamiltonian_path(&h),
            Err(Error::PreconditionFailed(_))
        ));
    }

    #[test]
    fn exhaustive_covering_on_4_vertices() {
        let sizes: BTreeSet<usize> = [2, 3].into_iter().collect();
        let all = oracle::enumerate_covering(4, &sizes, 0, usize::MAX, false).unwrap();
        assert!(!all.is_empty());
        for h in &all {
            let p = find_hamiltonian_path(h).unwrap();
            assert_eq!(p.len(), 4);
            assert!(verify_path(h, &p).unwrap());
        }
    }

    #[test]
    fn random_covering_instances() {
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        for _ in 0..200 {
            let n = rng.gen_range(4..11u32);
            let extra = rng.gen_range(0..4);
            let h = crate::generate::random_covering3(n, &mut rng, extra, true).unwrap();
            let p = find_hamiltonian_path(&h).unwrap();
            assert_eq!(p.len(), n as usize);
            assert!(verify_path(&h, &p).unwrap());
        }
    }
}
