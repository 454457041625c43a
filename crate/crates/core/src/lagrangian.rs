//! Hypergraph Lagrangian machinery: the edge-monomial polynomial and its
//! gradient, projected-gradient ascent over the simplex with restarts, the
//! Motzkin-Straus closed form for 2-graphs, minimal-support reduction, and
//! the bound checks for cycle-free and path-free hypergraphs.
//!
//! Ascent produces a certified LOWER bound on the Lagrangian (the witness
//! evaluates to the reported value). Bound checks can therefore expose
//! violations but never falsely confirm a bound; closed forms and the
//! Motzkin-Straus route provide the exact cross-checks at desk scale.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::oracle;

pub const SUPPORT_EPS: f64 = 1e-8;
pub const DEFAULT_RESTARTS: usize = 64;
pub const DEFAULT_TOL: f64 = 1e-9;

/// A point of the probability simplex: nonnegative entries summing to 1.
#[derive(Debug, Clone, PartialEq)]
pub struct Weighting(Vec<f64>);

impl Weighting {
    pub fn new(raw: Vec<f64>) -> Result<Self> {
        if raw.iter().any(|&v| v < 0.0 || !v.is_finite()) {
            return Err(Error::InvalidParameters(
                "weighting entries must be finite and nonnegative".into(),
            ));
        }
        let sum: f64 = raw.iter().sum();
        if sum <= 0.0 {
            return Err(Error::InvalidParameters(
                "weighting must have positive mass".into(),
            ));
        }
        let mut x = raw;
        for v in &mut x {
            *v /= sum;
        }
        Ok(Weighting(x))
    }

    pub fn uniform(n: usize) -> Self {
        Weighting(vec![1.0 / n as f64; n])
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct LagrangianResult {
    pub value: f64,
    pub witness: Vec<f64>,
    /// 1-based vertices with weight above `SUPPORT_EPS`
    pub support: Vec<u32>,
    pub method: String,
    /// set by `minimal_support`: whether the induced subhypergraph on the
    /// support is covering
    pub support_covering: Option<bool>,
}

/// Exact nonnegative rational, reduced. Big enough for every closed form
/// this crate evaluates; overflow is a parameter error, not a wrap.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Rational {
    pub numer: u128,
    pub denom: u128,
}

impl Rational {
    pub fn new(numer: u128, denom: u128) -> Self {
        assert!(denom != 0);
        let g = gcd(numer, denom);
        Rational {
            numer: numer / g,
            denom: denom / g,
        }
    }

    pub fn to_f64(self) -> f64 {
        self.numer as f64 / self.denom as f64
    }
}

fn gcd(a: u128, b: u128) -> u128 {
    if b == 0 {
        a.max(1)
    } else {
        gcd(b, a % b)
    }
}

fn binomial(n: u128, k: u128) -> Result<u128> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut res: u128 = 1;
    for i in 1..=k {
        res = res
            .checked_mul(n - k + i)
            .ok_or_else(|| Error::InvalidParameters("binomial overflow".into()))?
            / i;
    }
    Ok(res)
}

/// Lagrangian of the complete k-graph on t vertices: C(t,k) / t^k, exact.
pub fn lambda_complete(k: usize, t: usize) -> Result<Rational> {
    if k < 2 || t < k {
        return Err(Error::InvalidParameters(format!(
            "need t >= k >= 2, got k={k}, t={t}"
        )));
    }
    let numer = binomial(t as u128, k as u128)?;
    let mut denom: u128 = 1;
    for _ in 0..k {
        denom = denom
            .checked_mul(t as u128)
            .ok_or_else(|| Error::InvalidParameters("power overflow".into()))?;
    }
    Ok(Rational::new(numer, denom))
}

fn uniform_edge_size(h: &Hypergraph) -> Result<Option<usize>> {
    let mut it = h.edges().iter().map(|e| e.len());
    let Some(first) = it.next() else {
        return Ok(None);
    };
    if it.all(|s| s == first) {
        Ok(Some(first))
    } else {
        Err(Error::NotUniform)
    }
}

fn check_dims(h: &Hypergraph, x: &[f64]) -> Result<()> {
    if x.len() != h.n() as usize {
        return Err(Error::DimensionMismatch {
            expected: h.n() as usize,
            got: x.len(),
        });
    }
    Ok(())
}

/// The edge-monomial polynomial: sum over hyperedges of the product of the
/// incident weights. Requires a single edge size (or no edges at all).
pub fn polynomial_form(h: &Hypergraph, x: &[f64]) -> Result<f64> {
    check_dims(h, x)?;
    uniform_edge_size(h)?;
    Ok(eval_poly(h, x))
}

fn eval_poly(h: &Hypergraph, x: &[f64]) -> f64 {
    h.edges()
        .iter()
        .map(|e| e.iter().map(|&v| x[v as usize - 1]).product::<f64>())
        .sum()
}

/// Partial derivatives: component i sums, over edges containing i, the
/// product of the other weights.
pub fn gradient(h: &Hypergraph, x: &[f64]) -> Result<Vec<f64>> {
    check_dims(h, x)?;
    uniform_edge_size(h)?;
    Ok(eval_gradient(h, x))
}

fn eval_gradient(h: &Hypergraph, x: &[f64]) -> Vec<f64> {
    let mut g = vec![0.0; x.len()];
    for e in h.edges() {
        for &v in e {
            let prod: f64 = e
                .iter()
                .filter(|&&u| u != v)
                .map(|&u| x[u as usize - 1])
                .product();
            g[v as usize - 1] += prod;
        }
    }
    g
}

/// Midpoint averaging of two coordinates (1-based). On complete graphs
/// this never decreases the polynomial.
pub fn symmetrize_step(x: &[f64], s: u32, t: u32) -> Result<Vec<f64>> {
    let n = x.len();
    for &v in &[s, t] {
        if v == 0 || v as usize > n {
            return Err(Error::IndexOutOfRange {
                index: v as usize,
                len: n,
            });
        }
    }
    let mut out = x.to_vec();
    let avg = 0.5 * (x[s as usize - 1] + x[t as usize - 1]);
    out[s as usize - 1] = avg;
    out[t as usize - 1] = avg;
    Ok(out)
}

/// Euclidean projection onto the probability simplex, restricted to the
/// coordinates in `mask` (everything else is forced to zero).
fn project_simplex_masked(x: &mut [f64], mask: &[bool]) {
    let mut u: Vec<f64> = x
        .iter()
        .zip(mask)
        .filter(|&(_, &m)| m)
        .map(|(&v, _)| v)
        .collect();
    if u.is_empty() {
        return;
    }
    u.sort_by(|a, b| b.partial_cmp(a).unwrap());
    let mut cumsum = 0.0;
    let mut theta = 0.0;
    for (i, &ui) in u.iter().enumerate() {
        cumsum += ui;
        let t = (cumsum - 1.0) / (i + 1) as f64;
        if ui - t > 0.0 {
            theta = t;
        }
    }
    for (i, v) in x.iter_mut().enumerate() {
        *v = if mask[i] { (*v - theta).max(0.0) } else { 0.0 };
    }
}

/// One projected-gradient ascent run from a fixed start. The step starts
/// at 1/(k*n) and halves on every non-improving move.
fn ascend_masked(h: &Hypergraph, k: usize, start: Vec<f64>, mask: &[bool], tol: f64) -> (f64, Vec<f64>) {
    let n = h.n() as usize;
    let mut x = start;
    project_simplex_masked(&mut x, mask);
    let mut val = eval_poly(h, &x);
    let mut eta = 1.0 / (k * n) as f64;
    let mut iters = 0usize;
    while eta > tol.min(1e-12) * 1e-4 && iters < 50_000 {
        iters += 1;
        let g = eval_gradient(h, &x);
        let mut y: Vec<f64> = x.iter().zip(&g).map(|(&xi, &gi)| xi + eta * gi).collect();
        project_simplex_masked(&mut y, mask);
        let v2 = eval_poly(h, &y);
        if v2 > val {
            x = y;
            val = v2;
        } else {
            eta *= 0.5;
        }
    }
    (val, x)
}

fn dirichlet_start(n: usize, seed: u64) -> Vec<f64> {
    use rand::Rng;
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut x: Vec<f64> = (0..n)
        .map(|_| -f64::ln(1.0 - rng.gen::<f64>()))
        .collect();
    let sum: f64 = x.iter().sum();
    for v in &mut x {
        *v /= sum;
    }
    x
}

fn support_of(x: &[f64]) -> Vec<u32> {
    x.iter()
        .enumerate()
        .filter(|&(_, &v)| v > SUPPORT_EPS)
        .map(|(i, _)| i as u32 + 1)
        .collect()
}

/// Best local maximum over `restarts` ascents (uniform start plus seeded
/// Dirichlet starts), polished by clipping below-threshold coordinates.
/// The result is a certified lower bound on the Lagrangian.
pub fn ascent_only(h: &Hypergraph, restarts: usize, tol: f64) -> Result<LagrangianResult> {
    let n = h.n() as usize;
    if n == 0 {
        return Err(Error::InvalidParameters("empty vertex set".into()));
    }
    let size = uniform_edge_size(h)?;
    let Some(k) = size else {
        return Ok(LagrangianResult {
            value: 0.0,
            witness: Weighting::uniform(n).0,
            support: Vec::new(),
            method: "ascent".into(),
            support_covering: None,
        });
    };
    let mask = vec![true; n];
    let run = |idx: usize| -> (f64, Vec<f64>) {
        let start = if idx == 0 {
            Weighting::uniform(n).0
        } else {
            dirichlet_start(n, idx as u64)
        };
        ascend_masked(h, k, start, &mask, tol)
    };
    let restarts = restarts.max(1);
    let best = {
        use rayon::prelude::*;
        (0..restarts)
            .into_par_iter()
            .map(|i| (i, run(i)))
            .reduce_with(|a, b| {
                // strictly better value wins; ties go to the lower index
                if b.1 .0 > a.1 .0 || (b.1 .0 == a.1 .0 && b.0 < a.0) {
                    b
                } else {
                    a
                }
            })
            .expect("at least one restart")
            .1
    };
    let (mut value, mut witness) = best;
    // clip stray mass below the support threshold and re-ascend
    let clipped: Vec<f64> = witness
        .iter()
        .map(|&v| if v > SUPPORT_EPS { v } else { 0.0 })
        .collect();
    if clipped.iter().sum::<f64>() > 0.0 {
        let (v2, w2) = ascend_masked(h, k, clipped, &mask, tol);
        if v2 >= value {
            value = v2;
            witness = w2;
        }
    }
    let mut result = LagrangianResult {
        value,
        witness,
        support: Vec::new(),
        method: "ascent".into(),
        support_covering: None,
    };
    result.support = support_of(&result.witness);
    Ok(result)
}

/// `ascent_only`, cross-checked against the exact Motzkin-Straus value for
/// 2-graphs on at most 20 vertices (the better of the two is returned).
pub fn maximize(h: &Hypergraph, restarts: usize, tol: f64) -> Result<LagrangianResult> {
    let mut result = ascent_only(h, restarts, tol)?;
    let two_uniform = !h.edges().is_empty() && h.edges().iter().all(|e| e.len() == 2);
    if two_uniform && h.n() <= 20 {
        let ms = motzkin_straus(h)?;
        if ms.value > result.value {
            result = ms;
        }
    }
    Ok(result)
}

/// Exact Lagrangian of a 2-graph via the clique number: (1 - 1/w)/2, with
/// the uniform weighting on a maximum clique as witness.
pub fn motzkin_straus(h: &Hypergraph) -> Result<LagrangianResult> {
    let n = h.n() as usize;
    if n == 0 || n > 20 {
        return Err(Error::CapExceeded(format!(
            "Motzkin-Straus clique search caps at 20 vertices, got {n}"
        )));
    }
    if h.edges().iter().any(|e| e.len() != 2) {
        return Err(Error::NotUniform);
    }
    let mut adj = vec![0u32; n];
    for e in h.edges() {
        let (a, b) = (e[0] as usize - 1, e[1] as usize - 1);
        adj[a] |= 1 << b;
        adj[b] |= 1 << a;
    }
    let mut best: Vec<usize> = vec![0];
    let mut current: Vec<usize> = Vec::new();
    fn expand(cand: u32, adj: &[u32], current: &mut Vec<usize>, best: &mut Vec<usize>) {
        if current.len() + cand.count_ones() as usize <= best.len() {
            return;
        }
        if cand == 0 {
            if current.len() > best.len() {
                *best = current.clone();
            }
            return;
        }
        let mut rest = cand;
        while rest != 0 {
            if current.len() + rest.count_ones() as usize <= best.len() {
                return;
            }
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            current.push(v);
            expand(rest & adj[v], adj, current, best);
            current.pop();
        }
    }
    let all = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    expand(all, &adj, &mut current, &mut best);
    let omega = best.len().max(1);
    let mut witness = vec![0.0; n];
    for &v in &best {
        witness[v] = 1.0 / omega as f64;
    }
    if omega == 1 {
        // no edges at all: any weighting evaluates to zero
        witness = Weighting::uniform(n).0;
    }
    let value = 0.5 * (1.0 - 1.0 / omega as f64);
    Ok(LagrangianResult {
        value,
        witness: witness.clone(),
        support: support_of(&witness),
        method: "closed-form".into(),
        support_covering: None,
    })
}

/// Repeatedly zeroes a support coordinate and re-ascends on the reduced
/// support, keeping any reduction that preserves the value within `tol`.
/// The induced subhypergraph on the final support should be covering at a
/// true optimum; the flag reports whether it is, never hides a failure.
pub fn minimal_support(h: &Hypergraph, result: &LagrangianResult, tol: f64) -> Result<LagrangianResult> {
    let n = h.n() as usize;
    let Some(k) = uniform_edge_size(h)? else {
        let mut out = result.clone();
        out.support_covering = Some(false);
        return Ok(out);
    };
    let mut value = result.value;
    let mut witness = result.witness.clone();
    loop {
        let support = support_of(&witness);
        let mut reduced = false;
        for &v in &support {
            if support.len() <= k {
                break;
            }
            let mut start = witness.clone();
            start[v as usize - 1] = 0.0;
            let mass: f64 = start.iter().sum();
            if mass <= 0.0 {
                continue;
            }
            let mut mask = vec![false; n];
            for &u in &support {
                mask[u as usize - 1] = u != v;
            }
            let (v2, w2) = ascend_masked(h, k, start, &mask, tol);
            if v2 >= value - tol {
                value = v2.max(value - tol);
                witness = w2;
                reduced = true;
                break;
            }
        }
        if !reduced {
            break;
        }
    }
    let support = support_of(&witness);
    let covering = induced_is_covering(h, &support);
    Ok(LagrangianResult {
        value: eval_poly(h, &witness),
        witness,
        support,
        method: format!("{}+minimal-support", result.method),
        support_covering: Some(covering),
    })
}

/// Covering test for the subhypergraph induced by a vertex set: every pair
/// inside the set must lie in a hyperedge fully contained in the set.
pub fn induced_is_covering(h: &Hypergraph, support: &[u32]) -> bool {
    let inside = |v: u32| support.binary_search(&v).is_ok();
    for (i, &u) in support.iter().enumerate() {
        for &v in &support[i + 1..] {
            let covered = h.edges().iter().any(|e| {
                e.binary_search(&u).is_ok()
                    && e.binary_search(&v).is_ok()
                    && e.iter().all(|&w| inside(w))
            });
            if !covered {
                return false;
            }
        }
    }
    true
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum BoundMode {
    Cycle,
    Path,
}

#[derive(Debug, Serialize)]
pub struct BoundReport {
    pub mode: BoundMode,
    pub forbidden_length: usize,
    pub bound: Rational,
    pub bound_value: f64,
    /// lower bound on the Lagrangian from ascent; the check can expose a
    /// violated bound but cannot confirm one beyond this evidence
    pub value: f64,
    pub margin: f64,
    pub holds: bool,
}

/// Verifies (within ascent evidence) that a Berge-cycle-free or
/// Berge-path-free k-graph satisfies the Lagrangian bound lambda(K^k_{t-1}).
/// Freeness itself is established by the exhaustive oracle first; inputs
/// too large for that are refused rather than guessed.
pub fn verify_bound(
    h: &Hypergraph,
    t: usize,
    mode: BoundMode,
    restarts: usize,
    tol: f64,
) -> Result<BoundReport> {
    let Some(k) = uniform_edge_size(h)? else {
        return Err(Error::PreconditionFailed("hypergraph has no edges".into()));
    };
    let n = h.n() as usize;
    if t < 2 || (mode == BoundMode::Cycle && t < 3) {
        return Err(Error::LengthOutOfRange {
            length: t,
            min: 3,
            max: n.max(3),
        });
    }
    if n > 12 {
        return Err(Error::PreconditionNotChecked(format!(
            "oracle freeness verification caps at 12 vertices, got {n}"
        )));
    }
    if t <= n {
        let witness = match mode {
            BoundMode::Cycle => oracle::exists_cycle(h, t)?.map(|c| format!("{c:?}")),
            BoundMode::Path => oracle::exists_path(h, t)?.map(|p| format!("{p:?}")),
        };
        if let Some(w) = witness {
            return Err(Error::PreconditionFailed(format!(
                "hypergraph contains a forbidden structure of length {t}: {w}"
            )));
        }
    }
    let bound = lambda_complete(k, t - 1)?;
    let result = maximize(h, restarts, tol)?;
    let bound_value = bound.to_f64();
    let margin = bound_value - result.value;
    Ok(BoundReport {
        mode,
        forbidden_length: t,
        bound,
        bound_value,
        value: result.value,
        margin,
        holds: result.value <= bound_value + 1e-6,
    })
}
