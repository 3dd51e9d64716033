//! Random and deterministic graph generators.
//!
//! Every seeded generator draws from per-unit RNG substreams (keyed by row,
//! block pair, or node), so the same seed yields the identical graph no
//! matter how many workers run; an undirected edge is always drawn by its
//! lower-id endpoint's unit.

pub mod hyperbolic;

pub use hyperbolic::{
    gen_hyperbolic, gen_hyperbolic_from_points, hyperbolic_distance, radius_for_expected_degree,
    sample_hyperbolic_points, HyperbolicParams, PolarPoint, PolarQuadtree,
};

use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId};
use crate::partition::Partition;
use crate::rng::substream;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use std::collections::HashSet;

fn check_probability(p: f64, what: &str) -> Result<()> {
    if !(0.0..=1.0).contains(&p) || !p.is_finite() {
        return Err(Error::bad_param(format!("{what} must lie in [0, 1]")));
    }
    Ok(())
}

/// Visit each index in `0..total` kept by an independent coin with bias
/// `p`, jumping between hits with geometric skips.
fn sample_indices(total: u64, p: f64, rng: &mut ChaCha8Rng, mut emit: impl FnMut(u64)) {
    if total == 0 || p <= 0.0 {
        return;
    }
    if p >= 1.0 {
        for i in 0..total {
            emit(i);
        }
        return;
    }
    let log_q = (-p).ln_1p();
    let mut idx = 0u64;
    while idx < total {
        let u = 1.0 - rng.gen::<f64>();
        let skip = (u.ln() / log_q).floor();
        if !(skip < (total - idx) as f64) {
            break;
        }
        idx += skip as u64;
        emit(idx);
        idx += 1;
    }
}

/// G(n, p): every node pair is an edge independently with probability `p`.
/// Row v draws its lower-id partners from substream v.
pub fn gen_erdos_renyi(n: u64, p: f64, seed: u64) -> Result<Graph> {
    check_probability(p, "p")?;
    let rows: Vec<Vec<(NodeId, NodeId)>> = (1..n)
        .into_par_iter()
        .map(|v| {
            let mut rng = substream(seed, v);
            let mut row = Vec::new();
            sample_indices(v, p, &mut rng, |u| row.push((u, v)));
            row
        })
        .collect();
    let edges: Vec<(NodeId, NodeId)> = rows.into_iter().flatten().collect();
    Graph::from_edges(n, &edges)
}

/// Planted partition: `blocks` groups of `block_size` nodes; pairs inside a
/// group are edges with probability `p_in`, pairs across groups with
/// `p_out`. Returns the graph and the ground-truth grouping.
pub fn gen_planted_partition(
    blocks: u64,
    block_size: u64,
    p_in: f64,
    p_out: f64,
    seed: u64,
) -> Result<(Graph, Partition)> {
    check_probability(p_in, "p_in")?;
    check_probability(p_out, "p_out")?;
    if blocks == 0 || block_size == 0 {
        return Err(Error::bad_param("blocks and block_size must be >= 1"));
    }
    let n = blocks
        .checked_mul(block_size)
        .ok_or_else(|| Error::bad_param("blocks * block_size overflows"))?;

    let intra: Vec<Vec<(NodeId, NodeId)>> = (0..n)
        .into_par_iter()
        .map(|v| {
            let start = v / block_size * block_size;
            let mut rng = substream(seed, v);
            let mut row = Vec::new();
            sample_indices(v - start, p_in, &mut rng, |i| row.push((start + i, v)));
            row
        })
        .collect();
    let pairs: Vec<(u64, u64)> = (0..blocks)
        .flat_map(|bi| ((bi + 1)..blocks).map(move |bj| (bi, bj)))
        .collect();
    let inter: Vec<Vec<(NodeId, NodeId)>> = pairs
        .par_iter()
        .map(|&(bi, bj)| {
            let mut rng = substream(seed, n + bi * blocks + bj);
            let mut out = Vec::new();
            sample_indices(block_size * block_size, p_out, &mut rng, |t| {
                let u = bi * block_size + t / block_size;
                let v = bj * block_size + t % block_size;
                out.push((u, v));
            });
            out
        })
        .collect();

    let mut edges: Vec<(NodeId, NodeId)> = intra.into_iter().flatten().collect();
    edges.extend(inter.into_iter().flatten());
    let subset: Vec<u64> = (0..n).map(|v| v / block_size).collect();
    Ok((
        Graph::from_edges(n, &edges)?,
        Partition::from_subset_ids(subset),
    ))
}

/// Preferential attachment: a k-clique seed, then each new node attaches
/// to `k` distinct existing nodes drawn proportionally to degree (by
/// sampling the endpoint list of existing edges, redrawing repeats). Total
/// edges: C(k, 2) + (n - k)·k. Sequential by construction.
pub fn gen_barabasi_albert(n: u64, k: u64, seed: u64) -> Result<Graph> {
    if k == 0 {
        return Err(Error::bad_param("k must be >= 1"));
    }
    if n <= k {
        return Err(Error::bad_param("need n > k"));
    }
    let mut rng = substream(seed, 0);
    let mut edges: Vec<(NodeId, NodeId)> = Vec::with_capacity(
        (k * (k - 1) / 2 + (n - k) * k) as usize,
    );
    let mut endpoints: Vec<NodeId> = Vec::new();
    for u in 0..k {
        for v in (u + 1)..k {
            edges.push((u, v));
            endpoints.push(u);
            endpoints.push(v);
        }
    }
    let mut chosen: Vec<NodeId> = Vec::with_capacity(k as usize);
    for v in k..n {
        chosen.clear();
        while (chosen.len() as u64) < k {
            let t = if endpoints.is_empty() {
                rng.gen_range(0..v)
            } else {
                endpoints[rng.gen_range(0..endpoints.len())]
            };
            if !chosen.contains(&t) {
                chosen.push(t);
            }
        }
        for &t in &chosen {
            edges.push((t, v));
            endpoints.push(t);
            endpoints.push(v);
        }
    }
    Graph::from_edges(n, &edges)
}

/// What happened to the requested edge draws of a deduplicating generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RmatReport {
    pub requested: u64,
    pub generated: u64,
    /// Draws abandoned after the per-edge retry budget ran out (self-loops
    /// and duplicates force redraws).
    pub dropped: u64,
}

const RMAT_RETRIES: u32 = 64;

/// Recursive-matrix generator: `edge_factor * 2^scale` edge draws, each
/// picking one of the four quadrants per bit level with probabilities
/// (a, b, c, d). Self-loops and already-present edges are redrawn up to a
/// fixed budget, then dropped (reported). Undirected, simple.
pub fn gen_rmat(
    scale: u32,
    edge_factor: u64,
    a: f64,
    b: f64,
    c: f64,
    d: f64,
    seed: u64,
) -> Result<(Graph, RmatReport)> {
    if scale > 31 {
        return Err(Error::bad_param("scale must be <= 31"));
    }
    for (q, name) in [(a, "a"), (b, "b"), (c, "c"), (d, "d")] {
        if !(q >= 0.0) || !q.is_finite() {
            return Err(Error::bad_param(format!("{name} must be >= 0")));
        }
    }
    let sum = a + b + c + d;
    if (sum - 1.0).abs() > 1e-9 {
        return Err(Error::SimplexViolation { sum });
    }
    let n = 1u64 << scale;
    let requested = edge_factor
        .checked_mul(n)
        .ok_or_else(|| Error::bad_param("edge_factor * n overflows"))?;
    let (ca, cb, cc) = (a / sum, (a + b) / sum, (a + b + c) / sum);

    let mut rng = substream(seed, 0);
    let mut seen: HashSet<u64> = HashSet::with_capacity(requested as usize);
    let mut edges: Vec<(NodeId, NodeId)> = Vec::with_capacity(requested as usize);
    let mut dropped = 0u64;
    for _ in 0..requested {
        let mut placed = false;
        for _ in 0..RMAT_RETRIES {
            let (mut u, mut v) = (0u64, 0u64);
            for _ in 0..scale {
                let r = rng.gen::<f64>();
                let (qu, qv) = if r < ca {
                    (0, 0)
                } else if r < cb {
                    (0, 1)
                } else if r < cc {
                    (1, 0)
                } else {
                    (1, 1)
                };
                u = (u << 1) | qu;
                v = (v << 1) | qv;
            }
            if u == v {
                continue;
            }
            let key = (u.min(v) << 32) | u.max(v);
            if seen.insert(key) {
                edges.push((u, v));
                placed = true;
                break;
            }
        }
        if !placed {
            dropped += 1;
        }
    }
    let generated = edges.len() as u64;
    Ok((
        Graph::from_edges(n, &edges)?,
        RmatReport {
            requested,
            generated,
            dropped,
        },
    ))
}

/// How many pair probabilities the Chung-Lu model clipped at 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ChungLuReport {
    pub clipped_pairs: u64,
}

const CHUNG_LU_SKIP_THRESHOLD: usize = 5_000;

/// Chung-Lu model: pair (i, j) is an edge with probability
/// `min(1, w_i·w_j / Σw)`. Small inputs probe every pair; larger ones run
/// a skipping scan over weight-sorted rows whose expected work is linear
/// in the output. Both modes draw from per-row substreams.
pub fn gen_chung_lu(weights: &[f64], seed: u64) -> Result<(Graph, ChungLuReport)> {
    for &w in weights {
        if !(w >= 0.0) || !w.is_finite() {
            return Err(Error::bad_param("weights must be finite and >= 0"));
        }
    }
    let n = weights.len();
    let total: f64 = weights.iter().sum();
    if total <= 0.0 {
        return Ok((
            Graph::from_edges(n as u64, &[])?,
            ChungLuReport { clipped_pairs: 0 },
        ));
    }

    // Pairs with w_i·w_j > Σw sit in a prefix rectangle of the sorted
    // weights, so the clip count needs no enumeration.
    let mut sorted: Vec<(f64, usize)> = weights
        .iter()
        .copied()
        .enumerate()
        .map(|(i, w)| (w, i))
        .collect();
    sorted.sort_by(|a, b| b.0.total_cmp(&a.0).then(a.1.cmp(&b.1)));
    let mut clipped_pairs = 0u64;
    for i in 0..n {
        if sorted[i].0 <= 0.0 {
            break;
        }
        let bound = total / sorted[i].0;
        let run = sorted[i + 1..].partition_point(|&(w, _)| w > bound);
        clipped_pairs += run as u64;
    }

    let edges: Vec<(NodeId, NodeId)> = if n < CHUNG_LU_SKIP_THRESHOLD {
        let rows: Vec<Vec<(NodeId, NodeId)>> = (0..n)
            .into_par_iter()
            .map(|i| {
                let mut rng = substream(seed, i as u64);
                let mut row = Vec::new();
                for j in (i + 1)..n {
                    let p = (weights[i] * weights[j] / total).min(1.0);
                    if rng.gen::<f64>() < p {
                        row.push((i as NodeId, j as NodeId));
                    }
                }
                row
            })
            .collect();
        rows.into_iter().flatten().collect()
    } else {
        let rows: Vec<Vec<(NodeId, NodeId)>> = (0..n)
            .into_par_iter()
            .map(|si| {
                let mut rng = substream(seed, si as u64);
                let mut row = Vec::new();
                let wi = sorted[si].0;
                let mut j = si + 1;
                if j >= n || wi <= 0.0 {
                    return row;
                }
                let mut p = (wi * sorted[j].0 / total).min(1.0);
                while j < n && p > 0.0 {
                    if p < 1.0 {
                        let u = 1.0 - rng.gen::<f64>();
                        let skip = (u.ln() / (-p).ln_1p()).floor();
                        if !(skip < (n - j) as f64) {
                            break;
                        }
                        j += skip as u64 as usize;
                    }
                    let q = (wi * sorted[j].0 / total).min(1.0);
                    if rng.gen::<f64>() < q / p {
                        let a = sorted[si].1 as NodeId;
                        let b = sorted[j].1 as NodeId;
                        row.push((a.min(b), a.max(b)));
                    }
                    p = q;
                    j += 1;
                }
                row
            })
            .collect();
        rows.into_iter().flatten().collect()
    };
    Ok((
        Graph::from_edges(n as u64, &edges)?,
        ChungLuReport { clipped_pairs },
    ))
}

/// Deterministic realization of a degree sequence by repeatedly wiring the
/// highest-residual node to the next-highest ones; fails with
/// [`Error::NonGraphical`] when the sequence admits no simple graph.
pub fn gen_havel_hakimi(degrees: &[u64]) -> Result<Graph> {
    let n = degrees.len() as u64;
    let sum: u64 = degrees.iter().sum();
    if sum % 2 == 1 {
        return Err(Error::NonGraphical {
            reason: "degree sum is odd".into(),
        });
    }
    if let Some(&d) = degrees.iter().max() {
        if d >= n {
            return Err(Error::NonGraphical {
                reason: "a degree exceeds n - 1".into(),
            });
        }
    }
    let mut residual: Vec<(u64, NodeId)> = degrees
        .iter()
        .enumerate()
        .map(|(v, &d)| (d, v as NodeId))
        .collect();
    let mut edges: Vec<(NodeId, NodeId)> = Vec::with_capacity((sum / 2) as usize);
    loop {
        residual.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        let (d, v) = residual[0];
        if d == 0 {
            break;
        }
        if d as usize >= residual.len() {
            return Err(Error::NonGraphical {
                reason: "not enough partners left".into(),
            });
        }
        residual[0].0 = 0;
        for slot in residual[1..=d as usize].iter_mut() {
            if slot.0 == 0 {
                return Err(Error::NonGraphical {
                    reason: "not enough partners left".into(),
                });
            }
            slot.0 -= 1;
            edges.push((v.min(slot.1), v.max(slot.1)));
        }
    }
    Graph::from_edges(n, &edges)
}
