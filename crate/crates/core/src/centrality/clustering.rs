//! Local clustering coefficients and a wedge-sampling estimate of the
//! graph average.

use super::ApproxParams;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rng::substream;
use crate::scores::ScoreVector;
use rand::Rng;
use rayon::prelude::*;

fn check_simple_undirected(g: &Graph, op: &'static str) -> Result<()> {
    if g.is_directed() {
        return Err(Error::DirectedInputRejected { op });
    }
    if g.self_loop_count() > 0 {
        return Err(Error::SelfLoopsRejected { op });
    }
    Ok(())
}

/// Fraction of a node's neighbor pairs that are themselves adjacent:
/// `cc(v) = 2 · links(N(v)) / (deg(v) · (deg(v) - 1))`, 0 for degree < 2.
pub fn local_clustering(g: &Graph) -> Result<ScoreVector> {
    check_simple_undirected(g, "local_clustering")?;
    let values: Vec<f64> = (0..g.n())
        .into_par_iter()
        .map(|v| {
            let nv = g.neighbors(v);
            let deg = nv.len();
            if deg < 2 {
                return 0.0;
            }
            // Both neighbor lists are sorted, so each u in N(v) contributes
            // |N(u) ∩ N(v)| by a linear merge; summing over u counts every
            // triangle edge twice, matching the ordered-pair denominator.
            let mut links2 = 0u64;
            for &u in nv {
                let nu = g.neighbors(u);
                let (mut i, mut j) = (0, 0);
                while i < nu.len() && j < nv.len() {
                    match nu[i].cmp(&nv[j]) {
                        std::cmp::Ordering::Less => i += 1,
                        std::cmp::Ordering::Greater => j += 1,
                        std::cmp::Ordering::Equal => {
                            links2 += 1;
                            i += 1;
                            j += 1;
                        }
                    }
                }
            }
            links2 as f64 / (deg as f64 * (deg as f64 - 1.0))
        })
        .collect();
    Ok(ScoreVector::new("clustering", false, values))
}

/// Average clustering coefficient estimated by wedge sampling: draw a node
/// with degree ≥ 2, then a uniform neighbor pair, and test whether the
/// wedge closes. The hit rate times the eligible-node fraction estimates
/// the average over all n nodes (degree < 2 nodes contribute 0). Returns
/// 0 when no node has degree ≥ 2.
pub fn avg_clustering_sampled(g: &Graph, params: &ApproxParams) -> Result<f64> {
    check_simple_undirected(g, "avg_clustering_sampled")?;
    if params.samples == 0 {
        return Err(Error::bad_param("sample count must be >= 1"));
    }
    let eligible: Vec<u64> = (0..g.n()).filter(|&v| g.degree(v) >= 2).collect();
    if eligible.is_empty() {
        return Ok(0.0);
    }
    let mut rng = substream(params.seed, 0);
    let mut hits = 0u64;
    for _ in 0..params.samples {
        let v = eligible[rng.gen_range(0..eligible.len())];
        let nv = g.neighbors(v);
        let i = rng.gen_range(0..nv.len());
        let mut j = rng.gen_range(0..nv.len() - 1);
        if j >= i {
            j += 1;
        }
        if g.has_edge(nv[i], nv[j]) {
            hits += 1;
        }
    }
    let wedge_rate = hits as f64 / params.samples as f64;
    Ok(eligible.len() as f64 / g.n() as f64 * wedge_rate)
}
