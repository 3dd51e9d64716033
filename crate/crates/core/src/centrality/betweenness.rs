//! Betweenness centrality over ordered node pairs.
//!
//! `b(v) = Σ_{s≠v≠t} σ_st(v) / σ_st` where σ_st counts shortest s-t paths
//! and σ_st(v) those passing through v. Both orientations of a pair count,
//! so values on undirected graphs are twice the unordered-pair convention.

use super::ApproxParams;
use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId, UNREACHED};
use crate::rng::substream;
use crate::scores::ScoreVector;
use rand::Rng;
use rayon::prelude::*;

/// Scores plus bookkeeping from the sampling estimators.
#[derive(Clone, Debug)]
pub struct Betweenness {
    pub scores: ScoreVector,
    /// Sample count actually used; `None` for exact results.
    pub samples: Option<u64>,
    /// Upper bound on shortest-path node count used to size the sample,
    /// when one was estimated.
    pub vd_estimate: Option<u64>,
}

const SAMPLE_CHUNK: usize = 16;

struct Workspace {
    dist: Vec<u64>,
    fdist: Vec<f64>,
    sigma: Vec<f64>,
    delta: Vec<f64>,
    order: Vec<NodeId>,
    preds: Vec<Vec<NodeId>>,
    total: Vec<f64>,
}

impl Workspace {
    fn new(n: usize) -> Self {
        Workspace {
            dist: vec![0; n],
            fdist: vec![0.0; n],
            sigma: vec![0.0; n],
            delta: vec![0.0; n],
            order: Vec::with_capacity(n),
            preds: vec![Vec::new(); n],
            total: vec![0.0; n],
        }
    }
}

/// BFS from `s` filling distances, path counts, and the visit order.
fn shortest_paths_unweighted(g: &Graph, s: NodeId, ws: &mut Workspace) {
    let n = g.n() as usize;
    ws.dist[..n].fill(u64::MAX);
    ws.sigma[..n].fill(0.0);
    ws.order.clear();
    ws.dist[s as usize] = 0;
    ws.sigma[s as usize] = 1.0;
    ws.order.push(s);
    let mut head = 0;
    while head < ws.order.len() {
        let u = ws.order[head];
        head += 1;
        let du = ws.dist[u as usize];
        for &v in g.neighbors(u) {
            let dv = ws.dist[v as usize];
            if dv == u64::MAX {
                ws.dist[v as usize] = du + 1;
                ws.sigma[v as usize] = ws.sigma[u as usize];
                ws.order.push(v);
            } else if dv == du + 1 {
                ws.sigma[v as usize] += ws.sigma[u as usize];
            }
        }
    }
}

/// Dijkstra from `s` with path counts and explicit predecessor lists; ties
/// are recognized up to exact floating-point equality of path lengths.
fn shortest_paths_weighted(g: &Graph, s: NodeId, ws: &mut Workspace) {
    use std::cmp::Ordering;
    use std::collections::BinaryHeap;

    #[derive(PartialEq)]
    struct Entry(f64, NodeId);
    impl Eq for Entry {}
    impl PartialOrd for Entry {
        fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
            Some(self.cmp(other))
        }
    }
    impl Ord for Entry {
        fn cmp(&self, other: &Self) -> Ordering {
            other.0.total_cmp(&self.0).then_with(|| other.1.cmp(&self.1))
        }
    }

    let n = g.n() as usize;
    ws.fdist[..n].fill(f64::INFINITY);
    ws.sigma[..n].fill(0.0);
    ws.order.clear();
    for p in ws.preds[..n].iter_mut() {
        p.clear();
    }
    let mut settled = vec![false; n];
    ws.fdist[s as usize] = 0.0;
    ws.sigma[s as usize] = 1.0;
    let mut heap = BinaryHeap::new();
    heap.push(Entry(0.0, s));
    while let Some(Entry(d, u)) = heap.pop() {
        if settled[u as usize] {
            continue;
        }
        settled[u as usize] = true;
        ws.order.push(u);
        let nbrs = g.neighbors(u);
        let wts = g.neighbor_weights(u).expect("weighted graph");
        for (&v, &w) in nbrs.iter().zip(wts) {
            let cand = d + w;
            let cur = ws.fdist[v as usize];
            if cand < cur {
                ws.fdist[v as usize] = cand;
                ws.sigma[v as usize] = ws.sigma[u as usize];
                ws.preds[v as usize].clear();
                ws.preds[v as usize].push(u);
                heap.push(Entry(cand, v));
            } else if cand == cur && !settled[v as usize] {
                ws.sigma[v as usize] += ws.sigma[u as usize];
                ws.preds[v as usize].push(u);
            }
        }
    }
}

/// One source's dependency accumulation into `ws.total`.
fn accumulate_source(g: &Graph, s: NodeId, ws: &mut Workspace) {
    if g.is_weighted() {
        shortest_paths_weighted(g, s, ws);
        for i in (0..ws.order.len()).rev() {
            let w = ws.order[i];
            ws.delta[w as usize] = 0.0;
        }
        for i in (0..ws.order.len()).rev() {
            let w = ws.order[i];
            let coeff = (1.0 + ws.delta[w as usize]) / ws.sigma[w as usize];
            for pi in 0..ws.preds[w as usize].len() {
                let v = ws.preds[w as usize][pi];
                ws.delta[v as usize] += ws.sigma[v as usize] * coeff;
            }
            if w != s {
                ws.total[w as usize] += ws.delta[w as usize];
            }
        }
    } else {
        shortest_paths_unweighted(g, s, ws);
        for &w in &ws.order {
            ws.delta[w as usize] = 0.0;
        }
        for i in (0..ws.order.len()).rev() {
            let w = ws.order[i];
            let dw = ws.dist[w as usize];
            let coeff = (1.0 + ws.delta[w as usize]) / ws.sigma[w as usize];
            let preds = if g.is_directed() {
                g.in_neighbors(w)
            } else {
                g.neighbors(w)
            };
            for &v in preds {
                let dv = ws.dist[v as usize];
                if dv != UNREACHED && dv + 1 == dw {
                    ws.delta[v as usize] += ws.sigma[v as usize] * coeff;
                }
            }
            if w != s {
                ws.total[w as usize] += ws.delta[w as usize];
            }
        }
    }
}

fn normalize_pair_count(values: &mut [f64]) {
    let n = values.len() as f64;
    if n >= 3.0 {
        let denom = (n - 1.0) * (n - 2.0);
        for v in values.iter_mut() {
            *v /= denom;
        }
    }
}

/// Exact betweenness via one dependency accumulation per source, sources
/// fanned out to workers in fixed-size chunks whose partial sums merge in
/// chunk order, so the result is bitwise identical for any worker count.
/// Disconnected input is fine (pairs that cannot reach each other
/// contribute nothing); weighted graphs take the Dijkstra-based path
/// counts.
pub fn betweenness_exact(g: &Graph, normalized: bool) -> Result<Betweenness> {
    let n = g.n() as usize;
    let sources: Vec<NodeId> = (0..n as u64).collect();
    let chunk_totals: Vec<Vec<f64>> = sources
        .par_chunks(SAMPLE_CHUNK)
        .map(|chunk| {
            let mut ws = Workspace::new(n);
            for &s in chunk {
                accumulate_source(g, s, &mut ws);
            }
            ws.total
        })
        .collect();
    let mut total = vec![0.0; n];
    for part in chunk_totals {
        for (x, y) in total.iter_mut().zip(part) {
            *x += y;
        }
    }
    if normalized {
        normalize_pair_count(&mut total);
    }
    Ok(Betweenness {
        scores: ScoreVector::new("betweenness", normalized, total),
        samples: None,
        vd_estimate: None,
    })
}

/// Pick `k` distinct node ids with a seeded partial shuffle.
fn sample_sources(n: u64, k: u64, seed: u64) -> Vec<NodeId> {
    let mut rng = substream(seed, 0);
    let mut pool: Vec<NodeId> = (0..n).collect();
    let mut out = Vec::with_capacity(k as usize);
    for i in 0..k as usize {
        let j = rng.gen_range(i..pool.len());
        pool.swap(i, j);
        out.push(pool[i]);
    }
    out
}

/// Betweenness estimated from `params.samples` source pivots drawn without
/// replacement; per-source dependencies are scaled by n/s. With s = n the
/// estimate coincides with the exact scores. Results depend only on the
/// seed, not on the worker count.
pub fn betweenness_sampled(g: &Graph, params: &ApproxParams, normalized: bool) -> Result<Betweenness> {
    let n = g.n();
    let s = params.samples;
    if s == 0 || s > n {
        return Err(Error::bad_param("sample count must be in 1..=n"));
    }
    let sources = sample_sources(n, s, params.seed);
    let chunk_totals: Vec<Vec<f64>> = sources
        .par_chunks(SAMPLE_CHUNK)
        .map(|chunk| {
            let mut ws = Workspace::new(n as usize);
            for &src in chunk {
                accumulate_source(g, src, &mut ws);
            }
            ws.total
        })
        .collect();
    let mut total = vec![0.0; n as usize];
    for part in chunk_totals {
        for (x, y) in total.iter_mut().zip(part) {
            *x += y;
        }
    }
    let scale = n as f64 / s as f64;
    for v in total.iter_mut() {
        *v *= scale;
    }
    if normalized {
        normalize_pair_count(&mut total);
    }
    Ok(Betweenness {
        scores: ScoreVector::new("betweenness", normalized, total),
        samples: Some(s),
        vd_estimate: None,
    })
}

/// Betweenness scaled to [0, 1] (division by the n(n-1) ordered pairs) with
/// an absolute-error guarantee: every score is within `params.epsilon` of
/// the truth with probability at least `1 - params.delta`.
///
/// Each sample draws a uniform node pair and one uniform shortest path
/// between them (backwards, predecessors weighted by path counts); interior
/// nodes of the path are credited 1/r. The sample count r grows with
/// log₂(vd - 2) where vd bounds the node count of any shortest path,
/// estimated here from diameter bounds. Requires a connected undirected
/// unweighted graph; if vd < 3 every score is 0 or the graph is complete,
/// and the exact kernel answers instead (samples = `None`).
pub fn betweenness_epsilon(g: &Graph, params: &ApproxParams) -> Result<Betweenness> {
    use crate::distance::{diameter_ifub, DiameterMode};

    if g.is_directed() {
        return Err(Error::DirectedInputRejected {
            op: "betweenness_epsilon",
        });
    }
    if g.is_weighted() {
        return Err(Error::bad_param(
            "guarantee-driven betweenness needs an unweighted graph",
        ));
    }
    if !(params.epsilon > 0.0) || !(params.delta > 0.0 && params.delta < 1.0) {
        return Err(Error::bad_param("need epsilon > 0 and 0 < delta < 1"));
    }
    let n = g.n();
    if n < 2 {
        return Err(Error::bad_param("need at least 2 nodes"));
    }
    // Errors as Disconnected when any pair is unreachable.
    let bounds = diameter_ifub(g, DiameterMode::Bounds { error_factor: 0.5 })?;
    let vd = bounds.upper + 1;

    let pair_norm = (n as f64) * (n as f64 - 1.0);
    if vd < 3 {
        let exact = betweenness_exact(g, false)?;
        let values = exact.scores.values.iter().map(|b| b / pair_norm).collect();
        return Ok(Betweenness {
            scores: ScoreVector::new("betweenness", true, values),
            samples: None,
            vd_estimate: Some(vd),
        });
    }

    let log_term = ((vd - 2) as f64).log2().floor() + 1.0;
    let r = ((params.c / (params.epsilon * params.epsilon))
        * (log_term + (1.0 / params.delta).ln()))
    .ceil() as u64;

    let chunks: u64 = r.div_ceil(SAMPLE_CHUNK as u64);
    let chunk_hits: Vec<Vec<u64>> = (0..chunks)
        .into_par_iter()
        .map(|ci| {
            let mut hits = vec![0u64; n as usize];
            let mut ws = Workspace::new(n as usize);
            let lo = ci * SAMPLE_CHUNK as u64;
            let hi = (lo + SAMPLE_CHUNK as u64).min(r);
            for sample in lo..hi {
                let mut rng = substream(params.seed, sample + 1);
                let s = rng.gen_range(0..n);
                let mut t = rng.gen_range(0..n - 1);
                if t >= s {
                    t += 1;
                }
                shortest_paths_unweighted(g, s, &mut ws);
                let mut cur = t;
                while cur != s {
                    // Choose a predecessor proportionally to its path count.
                    let dc = ws.dist[cur as usize];
                    let draw = rng.gen::<f64>() * ws.sigma[cur as usize];
                    let mut acc = 0.0;
                    let mut chosen = s;
                    for &p in g.neighbors(cur) {
                        if ws.dist[p as usize] + 1 == dc {
                            acc += ws.sigma[p as usize];
                            if draw < acc {
                                chosen = p;
                                break;
                            }
                        }
                    }
                    if chosen != s && chosen != t {
                        hits[chosen as usize] += 1;
                    }
                    cur = chosen;
                }
            }
            hits
        })
        .collect();

    let mut hits = vec![0u64; n as usize];
    for part in chunk_hits {
        for (x, y) in hits.iter_mut().zip(part) {
            *x += y;
        }
    }
    let values: Vec<f64> = hits.into_iter().map(|h| h as f64 / r as f64).collect();
    Ok(Betweenness {
        scores: ScoreVector::new("betweenness", true, values),
        samples: Some(r),
        vd_estimate: Some(vd),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::GraphBuilder;

    fn path(n: u64) -> Graph {
        let edges: Vec<(u64, u64)> = (0..n - 1).map(|v| (v, v + 1)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn path_middle_counts_both_orientations() {
        let b = betweenness_exact(&path(3), false).unwrap();
        assert_eq!(b.scores.values, vec![0.0, 2.0, 0.0]);
    }

    #[test]
    fn star_center() {
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let b = betweenness_exact(&g, false).unwrap();
        assert_eq!(b.scores.values[0], 6.0);
        let b = betweenness_exact(&g, true).unwrap();
        assert!((b.scores.values[0] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn cycle_four_splits_paths() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let b = betweenness_exact(&g, false).unwrap();
        for v in 0..4 {
            assert!((b.scores.values[v] - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn directed_path_counts_one_direction() {
        let mut bld = GraphBuilder::new(3).directed(true);
        bld.add_edge(0, 1).unwrap();
        bld.add_edge(1, 2).unwrap();
        let g = bld.build().unwrap();
        let b = betweenness_exact(&g, false).unwrap();
        assert_eq!(b.scores.values, vec![0.0, 1.0, 0.0]);
    }

    #[test]
    fn weighted_detour_routes_through_middle() {
        let mut bld = GraphBuilder::new(3).weighted(true);
        bld.add_weighted_edge(0, 1, 1.0).unwrap();
        bld.add_weighted_edge(1, 2, 1.0).unwrap();
        bld.add_weighted_edge(0, 2, 3.0).unwrap();
        let g = bld.build().unwrap();
        let b = betweenness_exact(&g, false).unwrap();
        assert_eq!(b.scores.values, vec![0.0, 2.0, 0.0]);
    }

    #[test]
    fn weighted_tie_splits_credit() {
        let mut bld = GraphBuilder::new(4).weighted(true);
        bld.add_weighted_edge(0, 1, 1.0).unwrap();
        bld.add_weighted_edge(1, 3, 1.0).unwrap();
        bld.add_weighted_edge(0, 2, 1.0).unwrap();
        bld.add_weighted_edge(2, 3, 1.0).unwrap();
        let g = bld.build().unwrap();
        let b = betweenness_exact(&g, false).unwrap();
        assert!((b.scores.values[1] - 1.0).abs() < 1e-12);
        assert!((b.scores.values[2] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn disconnected_components_are_independent() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (3, 4), (4, 5)]).unwrap();
        let b = betweenness_exact(&g, false).unwrap();
        assert_eq!(b.scores.values, vec![0.0, 2.0, 0.0, 0.0, 2.0, 0.0]);
    }

    #[test]
    fn full_sampling_matches_exact() {
        let g = path(9);
        let exact = betweenness_exact(&g, false).unwrap();
        let sampled =
            betweenness_sampled(&g, &ApproxParams::with_samples(9, 7), false).unwrap();
        for v in 0..9 {
            assert!((exact.scores.values[v] - sampled.scores.values[v]).abs() < 1e-9);
        }
        assert_eq!(sampled.samples, Some(9));
    }

    #[test]
    fn sampling_is_seed_deterministic() {
        let g = path(30);
        let a = betweenness_sampled(&g, &ApproxParams::with_samples(5, 3), false).unwrap();
        let b = betweenness_sampled(&g, &ApproxParams::with_samples(5, 3), false).unwrap();
        assert_eq!(a.scores.values, b.scores.values);
    }

    #[test]
    fn sample_count_validated() {
        let g = path(4);
        assert!(betweenness_sampled(&g, &ApproxParams::with_samples(0, 1), false).is_err());
        assert!(betweenness_sampled(&g, &ApproxParams::with_samples(5, 1), false).is_err());
    }

    #[test]
    fn epsilon_estimator_tracks_exact_scores() {
        let g = path(5);
        let est = betweenness_epsilon(&g, &ApproxParams::with_guarantee(0.1, 0.1, 11)).unwrap();
        let exact = betweenness_exact(&g, false).unwrap();
        let norm = 5.0 * 4.0;
        for v in 0..5 {
            let truth = exact.scores.values[v] / norm;
            assert!(
                (est.scores.values[v] - truth).abs() <= 0.1,
                "node {v}: {} vs {}",
                est.scores.values[v],
                truth
            );
        }
        assert!(est.samples.unwrap() > 0);
        assert!(est.vd_estimate.unwrap() >= 5);
    }

    #[test]
    fn epsilon_complete_graph_falls_back_to_exact() {
        let mut edges = Vec::new();
        for u in 0..4 {
            for v in (u + 1)..4 {
                edges.push((u, v));
            }
        }
        let g = Graph::from_edges(4, &edges).unwrap();
        let est = betweenness_epsilon(&g, &ApproxParams::with_guarantee(0.1, 0.1, 1)).unwrap();
        assert_eq!(est.samples, None);
        assert_eq!(est.scores.values, vec![0.0; 4]);
    }

    #[test]
    fn epsilon_rejects_disconnected() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(
            betweenness_epsilon(&g, &ApproxParams::with_guarantee(0.1, 0.1, 1)),
            Err(Error::Disconnected { .. })
        ));
    }
}
