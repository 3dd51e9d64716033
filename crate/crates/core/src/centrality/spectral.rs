//! Fixed-point centralities: PageRank, eigenvector centrality, and Katz
//! centrality, all by damped/shifted power iteration.
//!
//! Matrix-vector products fan rows out to workers; every row sums its
//! in-neighbor contributions in a fixed order and the scalar reductions
//! (residuals, norms, dangling mass) run sequentially, so results are
//! identical for any worker count.

use super::IterationParams;
use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId};
use crate::scores::ScoreVector;
use rayon::prelude::*;

fn in_weights(g: &Graph, v: NodeId) -> impl Iterator<Item = (NodeId, f64)> + '_ {
    let nbrs = g.in_neighbors(v);
    let ws = g.in_neighbor_weights(v);
    nbrs.iter()
        .enumerate()
        .map(move |(i, &u)| (u, ws.map_or(1.0, |ws| ws[i])))
}

/// PageRank with uniform teleport and dangling-mass redistribution:
/// `x(v) = (1-d)/n + d·(Σ_{u→v} x(u)·w(u,v)/out(u) + D/n)` where `out(u)`
/// is u's total outgoing weight and D the mass sitting on outdegree-0
/// nodes. Stops when the L1 change drops below `params.tolerance`;
/// the scores always sum to 1.
pub fn pagerank(g: &Graph, damping: f64, params: &IterationParams) -> Result<ScoreVector> {
    if !(0.0..1.0).contains(&damping) {
        return Err(Error::bad_param("damping must lie in [0, 1)"));
    }
    let n = g.n() as usize;
    if n == 0 {
        return Ok(ScoreVector::new("pagerank", true, Vec::new()));
    }
    let nf = n as f64;
    let out_weight: Vec<f64> = (0..g.n()).map(|v| g.weighted_degree(v)).collect();
    let dangling: Vec<usize> = (0..n).filter(|&v| out_weight[v] == 0.0).collect();

    let mut x = vec![1.0 / nf; n];
    let mut next = vec![0.0f64; n];
    for _ in 0..params.max_iterations {
        let dangling_mass: f64 = dangling.iter().map(|&v| x[v]).sum();
        let base = (1.0 - damping) / nf + damping * dangling_mass / nf;
        next.par_iter_mut().enumerate().for_each(|(v, slot)| {
            let mut acc = 0.0;
            for (u, w) in in_weights(g, v as NodeId) {
                acc += x[u as usize] * w / out_weight[u as usize];
            }
            *slot = base + damping * acc;
        });
        let residual: f64 = x.iter().zip(&next).map(|(a, b)| (a - b).abs()).sum();
        std::mem::swap(&mut x, &mut next);
        if residual < params.tolerance {
            return Ok(ScoreVector::new("pagerank", true, x));
        }
    }
    let residual: f64 = x.iter().zip(&next).map(|(a, b)| (a - b).abs()).sum();
    Err(Error::NotConverged {
        op: "pagerank",
        iterations: params.max_iterations,
        residual,
    })
}

/// Dominant-eigenvector centrality of a connected undirected graph,
/// computed by power iteration on A + I (the shift keeps bipartite graphs
/// from oscillating); scores are L2-normalized and nonnegative.
pub fn eigenvector_centrality(g: &Graph, params: &IterationParams) -> Result<ScoreVector> {
    if g.is_directed() {
        return Err(Error::DirectedInputRejected {
            op: "eigenvector_centrality",
        });
    }
    if !crate::decomposition::is_connected(g)? {
        return Err(Error::Disconnected {
            op: "eigenvector_centrality",
        });
    }
    let n = g.n() as usize;
    let nf = n as f64;
    let mut x = vec![1.0 / nf.sqrt(); n];
    let mut next = vec![0.0f64; n];
    for _ in 0..params.max_iterations {
        next.par_iter_mut().enumerate().for_each(|(v, slot)| {
            let mut acc = x[v];
            for (u, w) in in_weights(g, v as NodeId) {
                acc += w * x[u as usize];
            }
            *slot = acc;
        });
        let norm: f64 = next.iter().map(|a| a * a).sum::<f64>().sqrt();
        for a in next.iter_mut() {
            *a /= norm;
        }
        let residual: f64 = x.iter().zip(&next).map(|(a, b)| (a - b).abs()).sum();
        std::mem::swap(&mut x, &mut next);
        if residual < params.tolerance {
            return Ok(ScoreVector::new("eigenvector", true, x));
        }
    }
    let residual: f64 = x.iter().zip(&next).map(|(a, b)| (a - b).abs()).sum();
    Err(Error::NotConverged {
        op: "eigenvector_centrality",
        iterations: params.max_iterations,
        residual,
    })
}

/// Estimate of the spectral radius of the (weighted) adjacency matrix by a
/// fixed number of power-iteration steps on A + I. Used to validate the
/// attenuation factor for [`katz_centrality`]; an estimate, not a bound.
pub fn spectral_radius_estimate(g: &Graph, steps: u64) -> f64 {
    let n = g.n() as usize;
    if n == 0 {
        return 0.0;
    }
    let nf = n as f64;
    let mut x = vec![1.0 / nf.sqrt(); n];
    let mut next = vec![0.0f64; n];
    let mut rayleigh = 0.0f64;
    for _ in 0..steps {
        next.par_iter_mut().enumerate().for_each(|(v, slot)| {
            let mut acc = x[v];
            for (u, w) in in_weights(g, v as NodeId) {
                acc += w * x[u as usize];
            }
            *slot = acc;
        });
        rayleigh = x.iter().zip(&next).map(|(a, b)| a * b).sum::<f64>()
            / x.iter().map(|a| a * a).sum::<f64>();
        let norm: f64 = next.iter().map(|a| a * a).sum::<f64>().sqrt();
        if norm == 0.0 {
            return 0.0;
        }
        for a in next.iter_mut() {
            *a /= norm;
        }
        std::mem::swap(&mut x, &mut next);
    }
    (rayleigh - 1.0).max(0.0)
}

/// Katz centrality: `x(v) = Σ_{k≥1} α^k · (number of length-k walks ending
/// at v)`, the fixed point of `x ← α·A'·(x + 1)` with A' the in-neighbor
/// adjacency. Demands `α < 1/λ_max` (checked against a power-iteration
/// estimate of the spectral radius) so the walk series converges.
pub fn katz_centrality(g: &Graph, alpha: f64, params: &IterationParams) -> Result<ScoreVector> {
    if !(alpha > 0.0) || !alpha.is_finite() {
        return Err(Error::bad_param("alpha must be positive and finite"));
    }
    let lambda = spectral_radius_estimate(g, 100);
    if lambda > 0.0 && alpha >= 1.0 / lambda {
        return Err(Error::AlphaTooLarge {
            alpha,
            lambda_max: lambda,
        });
    }
    let n = g.n() as usize;
    let mut x = vec![0.0f64; n];
    let mut next = vec![0.0f64; n];
    for _ in 0..params.max_iterations {
        next.par_iter_mut().enumerate().for_each(|(v, slot)| {
            let mut acc = 0.0;
            for (u, w) in in_weights(g, v as NodeId) {
                acc += w * (x[u as usize] + 1.0);
            }
            *slot = alpha * acc;
        });
        let residual: f64 = x.iter().zip(&next).map(|(a, b)| (a - b).abs()).sum();
        std::mem::swap(&mut x, &mut next);
        if residual < params.tolerance {
            return Ok(ScoreVector::new("katz", false, x));
        }
    }
    let residual: f64 = x.iter().zip(&next).map(|(a, b)| (a - b).abs()).sum();
    Err(Error::NotConverged {
        op: "katz_centrality",
        iterations: params.max_iterations,
        residual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::GraphBuilder;

    fn params() -> IterationParams {
        IterationParams::default()
    }

    #[test]
    fn pagerank_sums_to_one_and_ranks_hub_highest() {
        let g = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2)]).unwrap();
        let pr = pagerank(&g, 0.85, &params()).unwrap();
        let total: f64 = pr.values.iter().sum();
        assert!((total - 1.0).abs() < 1e-9);
        assert_eq!(pr.argmax(), Some(0));
    }

    #[test]
    fn pagerank_uniform_on_cycle() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let pr = pagerank(&g, 0.85, &params()).unwrap();
        for &v in &pr.values {
            assert!((v - 0.25).abs() < 1e-9);
        }
    }

    #[test]
    fn pagerank_handles_dangling_nodes() {
        let mut b = GraphBuilder::new(3).directed(true);
        b.add_edge(0, 1).unwrap();
        b.add_edge(1, 2).unwrap();
        let g = b.build().unwrap();
        let pr = pagerank(&g, 0.85, &params()).unwrap();
        let total: f64 = pr.values.iter().sum();
        assert!((total - 1.0).abs() < 1e-9);
        assert!(pr.values[2] > pr.values[0]);
    }

    #[test]
    fn pagerank_rejects_bad_damping() {
        let g = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert!(pagerank(&g, 1.0, &params()).is_err());
        assert!(pagerank(&g, -0.1, &params()).is_err());
    }

    #[test]
    fn pagerank_not_converged_reports_residual() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let tight = IterationParams {
            tolerance: 0.0,
            max_iterations: 3,
        };
        match pagerank(&g, 0.85, &tight) {
            Err(Error::NotConverged { residual, .. }) => assert!(residual >= 0.0),
            other => panic!("expected NotConverged, got {other:?}"),
        }
    }

    #[test]
    fn eigenvector_star_ratio() {
        let g = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let e = eigenvector_centrality(&g, &params()).unwrap();
        let inv_sqrt2 = 1.0 / 2.0f64.sqrt();
        assert!((e.values[0] - inv_sqrt2).abs() < 1e-6, "{:?}", e.values);
        for v in 1..5 {
            assert!((e.values[v] - inv_sqrt2 / 2.0).abs() < 1e-6);
        }
    }

    #[test]
    fn eigenvector_requires_connected_undirected() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(
            eigenvector_centrality(&g, &params()),
            Err(Error::Disconnected { .. })
        ));
        let mut b = GraphBuilder::new(2).directed(true);
        b.add_edge(0, 1).unwrap();
        assert!(eigenvector_centrality(&b.build().unwrap(), &params()).is_err());
    }

    #[test]
    fn eigenvector_unit_norm() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let e = eigenvector_centrality(&g, &params()).unwrap();
        let norm: f64 = e.values.iter().map(|a| a * a).sum();
        assert!((norm - 1.0).abs() < 1e-9);
    }

    #[test]
    fn katz_single_edge_alpha_half() {
        let g = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let k = katz_centrality(&g, 0.5, &params()).unwrap();
        assert!((k.values[0] - 1.0).abs() < 1e-6, "{:?}", k.values);
        assert!((k.values[1] - 1.0).abs() < 1e-6);
    }

    #[test]
    fn katz_path_three_walk_series() {
        // P3 with alpha = 1/4: ends get 3/7, middle 5/7.
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let k = katz_centrality(&g, 0.25, &params()).unwrap();
        assert!((k.values[0] - 3.0 / 7.0).abs() < 1e-6, "{:?}", k.values);
        assert!((k.values[1] - 5.0 / 7.0).abs() < 1e-6);
        assert!((k.values[2] - 3.0 / 7.0).abs() < 1e-6);
    }

    #[test]
    fn katz_isolated_node_scores_zero() {
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        let k = katz_centrality(&g, 0.3, &params()).unwrap();
        assert_eq!(k.values[2], 0.0);
    }

    #[test]
    fn katz_rejects_alpha_beyond_spectral_radius() {
        let mut edges = Vec::new();
        for u in 0..5 {
            for v in (u + 1)..5 {
                edges.push((u, v));
            }
        }
        let g = Graph::from_edges(5, &edges).unwrap();
        assert!(matches!(
            katz_centrality(&g, 0.3, &params()),
            Err(Error::AlphaTooLarge { .. })
        ));
    }

    #[test]
    fn katz_directed_counts_incoming_walks() {
        let mut b = GraphBuilder::new(3).directed(true);
        b.add_edge(0, 1).unwrap();
        b.add_edge(1, 2).unwrap();
        let g = b.build().unwrap();
        let k = katz_centrality(&g, 0.5, &params()).unwrap();
        assert_eq!(k.values[0], 0.0);
        assert!((k.values[1] - 0.5).abs() < 1e-9);
        assert!((k.values[2] - 0.75).abs() < 1e-9);
    }

    #[test]
    fn spectral_radius_of_complete_graph() {
        let mut edges = Vec::new();
        for u in 0..4 {
            for v in (u + 1)..4 {
                edges.push((u, v));
            }
        }
        let g = Graph::from_edges(4, &edges).unwrap();
        let lambda = spectral_radius_estimate(&g, 200);
        assert!((lambda - 3.0).abs() < 1e-6, "lambda = {lambda}");
    }
}
