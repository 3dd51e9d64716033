//! Closeness centrality, exact and pivot-sampled.

use super::ApproxParams;
use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId, UNREACHED};
use crate::rng::substream;
use crate::scores::ScoreVector;
use crate::traversal::{bfs, dijkstra};
use rand::Rng;
use rayon::prelude::*;

const PIVOT_CHUNK: usize = 16;

/// Distance sum and reached count from one source.
fn distance_sum(g: &Graph, v: NodeId) -> (f64, u64) {
    if g.is_weighted() {
        let dist = dijkstra(g, v).expect("validated weighted graph");
        let mut sum = 0.0;
        let mut reached = 0u64;
        for &d in &dist {
            if d.is_finite() {
                sum += d;
                reached += 1;
            }
        }
        (sum, reached)
    } else {
        let dist = bfs(g, v).expect("validated node id");
        let mut sum = 0u64;
        let mut reached = 0u64;
        for &d in &dist {
            if d != UNREACHED {
                sum += d;
                reached += 1;
            }
        }
        (sum as f64, reached)
    }
}

/// Exact closeness, restricted to each node's reachable set:
/// `c(v) = (r(v) - 1) / Σ_u d(v, u)` over the r(v) nodes v reaches.
/// Isolated nodes (and nodes reaching nothing else) score 0. Directed
/// graphs use outgoing distances; weighted graphs use shortest weighted
/// distances.
pub fn closeness_exact(g: &Graph) -> Result<ScoreVector> {
    let values: Vec<f64> = (0..g.n())
        .into_par_iter()
        .map(|v| {
            let (sum, reached) = distance_sum(g, v);
            if reached <= 1 || sum <= 0.0 {
                0.0
            } else {
                (reached - 1) as f64 / sum
            }
        })
        .collect();
    Ok(ScoreVector::new("closeness", false, values))
}

/// Closeness estimated from `params.samples` uniform pivots: each pivot's
/// single-source distances contribute to every node's estimated distance
/// sum, `ĉ(v) = 1 / ((n / (s (n-1))) · Σ_i d(pivot_i, v))`. Requires a
/// connected undirected graph. A node whose sampled distance sum is zero
/// (every pivot equals the node itself) scores 0 since the sample carries
/// no information about it. Deterministic for a fixed seed regardless of
/// worker count.
pub fn closeness_sampled(g: &Graph, params: &ApproxParams) -> Result<ScoreVector> {
    if g.is_directed() {
        return Err(Error::DirectedInputRejected {
            op: "closeness_sampled",
        });
    }
    let n = g.n();
    let s = params.samples;
    if n < 2 {
        return Err(Error::bad_param("need at least 2 nodes"));
    }
    if s == 0 {
        return Err(Error::bad_param("sample count must be >= 1"));
    }
    if !crate::decomposition::is_connected(g)? {
        return Err(Error::Disconnected {
            op: "closeness_sampled",
        });
    }

    let pivots: Vec<NodeId> = {
        let mut rng = substream(params.seed, 0);
        (0..s).map(|_| rng.gen_range(0..n)).collect()
    };
    let chunk_sums: Vec<Vec<f64>> = pivots
        .par_chunks(PIVOT_CHUNK)
        .map(|chunk| {
            let mut sums = vec![0.0f64; n as usize];
            for &p in chunk {
                if g.is_weighted() {
                    let dist = dijkstra(g, p).expect("validated weighted graph");
                    for (acc, d) in sums.iter_mut().zip(dist) {
                        *acc += d;
                    }
                } else {
                    let dist = bfs(g, p).expect("validated node id");
                    for (acc, d) in sums.iter_mut().zip(dist) {
                        *acc += d as f64;
                    }
                }
            }
            sums
        })
        .collect();
    let mut sums = vec![0.0f64; n as usize];
    for part in chunk_sums {
        for (x, y) in sums.iter_mut().zip(part) {
            *x += y;
        }
    }

    let factor = n as f64 / (s as f64 * (n as f64 - 1.0));
    let values: Vec<f64> = sums
        .into_iter()
        .map(|sum| if sum > 0.0 { 1.0 / (factor * sum) } else { 0.0 })
        .collect();
    Ok(ScoreVector::new("closeness", false, values))
}
