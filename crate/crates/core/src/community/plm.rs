//! Multi-level modularity maximization: greedy local moving, coarsening
//! onto community graphs, recursion, and prolongation, with an optional
//! refinement pass on the finest level.

use crate::community::modularity;
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder, NodeId};
use crate::partition::Partition;
use crate::rng::substream;
use rand::seq::SliceRandom;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;

#[derive(Clone, Copy, Debug)]
pub struct PlmConfig {
    /// Resolution: larger values favor more, smaller communities.
    pub gamma: f64,
    /// Run one extra local-moving pass on the finest graph at the end.
    pub refine: bool,
    /// Cap on coarsening levels.
    pub max_passes: u64,
    pub seed: u64,
    /// Record modularity after every accepted move (costs O(m) per move;
    /// meant for small graphs). The recorded value is the plain
    /// modularity of the current level graph, so the sequence is
    /// monotone when `gamma` is 1.
    pub trace: bool,
}

impl Default for PlmConfig {
    fn default() -> Self {
        PlmConfig {
            gamma: 1.0,
            refine: false,
            max_passes: 32,
            seed: 0,
            trace: false,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PlmTracePoint {
    /// Coarsening level the move happened on (0 = input graph).
    pub level: u64,
    pub modularity: f64,
}

#[derive(Clone, Debug)]
pub struct PlmResult {
    pub partition: Partition,
    pub modularity: f64,
    /// Number of graphs local moving ran on (1 = no coarsening happened).
    pub levels: u64,
    pub trace: Vec<PlmTracePoint>,
}

/// Safety valve; local moving converges long before this in practice.
const MAX_SWEEPS: u64 = 1_000;

struct LocalMoving<'a> {
    g: &'a Graph,
    gamma: f64,
    total_weight: f64,
    /// Weighted degree with self-loops counted twice.
    volume: Vec<f64>,
    community_volume: Vec<f64>,
    labels: Vec<u64>,
}

impl<'a> LocalMoving<'a> {
    fn new(g: &'a Graph, gamma: f64, labels: Vec<u64>) -> Self {
        let n = g.n() as usize;
        let volume: Vec<f64> = (0..g.n())
            .map(|v| g.weighted_degree(v) + g.edge_weight(v, v).unwrap_or(0.0))
            .collect();
        let mut community_volume = vec![0.0; n];
        for v in 0..n {
            community_volume[labels[v] as usize] += volume[v];
        }
        LocalMoving {
            g,
            gamma,
            total_weight: g.total_edge_weight(),
            volume,
            community_volume,
            labels,
        }
    }

    /// Sweep nodes in a seeded shuffle until a sweep makes no move;
    /// returns whether anything moved at all.
    fn run(
        &mut self,
        rng: &mut ChaCha8Rng,
        mut on_move: impl FnMut(&[u64]),
    ) -> bool {
        let n = self.g.n() as usize;
        let mut order: Vec<NodeId> = (0..n as NodeId).collect();
        order.shuffle(rng);
        let w = self.total_weight;
        let mut moved_any = false;
        let mut weight_to: BTreeMap<u64, f64> = BTreeMap::new();
        for _ in 0..MAX_SWEEPS {
            let mut moved = 0u64;
            for &v in &order {
                let cur = self.labels[v as usize];
                weight_to.clear();
                let nbrs = self.g.neighbors(v);
                let wts = self.g.neighbor_weights(v);
                for (i, &u) in nbrs.iter().enumerate() {
                    if u == v {
                        continue;
                    }
                    let ew = wts.map_or(1.0, |ws| ws[i]);
                    *weight_to.entry(self.labels[u as usize]).or_insert(0.0) += ew;
                }
                self.community_volume[cur as usize] -= self.volume[v as usize];
                let gain = |c: u64, w_to: f64| {
                    w_to / w
                        - self.gamma * self.community_volume[c as usize]
                            * self.volume[v as usize]
                            / (2.0 * w * w)
                };
                let mut best_comm = cur;
                let mut best_gain = gain(cur, weight_to.get(&cur).copied().unwrap_or(0.0));
                for (&c, &w_to) in &weight_to {
                    if c == cur {
                        continue;
                    }
                    let gc = gain(c, w_to);
                    if gc > best_gain {
                        best_gain = gc;
                        best_comm = c;
                    }
                }
                self.community_volume[best_comm as usize] += self.volume[v as usize];
                if best_comm != cur {
                    self.labels[v as usize] = best_comm;
                    moved += 1;
                    moved_any = true;
                    on_move(&self.labels);
                }
            }
            if moved == 0 {
                break;
            }
        }
        moved_any
    }
}

/// Collapse each community to a node. Edges between communities merge into
/// one weighted edge; intra-community weight (plus carried self-loops)
/// becomes a self-loop. Returns the community graph and the map from input
/// node to community-graph node (communities numbered by first appearance
/// in node order). Modularity of any refinement-compatible partition is
/// preserved.
pub fn coarsen(g: &Graph, p: &Partition) -> Result<(Graph, Vec<u64>)> {
    if p.n() != g.n() {
        return Err(Error::bad_param("partition length != node count"));
    }
    let compacted = p.compacted();
    let map: Vec<u64> = (0..g.n()).map(|v| compacted.subset_of(v)).collect();
    let k = compacted.subset_count();
    let mut agg: BTreeMap<(u64, u64), f64> = BTreeMap::new();
    for (u, v, w) in g.edges() {
        let (mut cu, mut cv) = (map[u as usize], map[v as usize]);
        if cu > cv {
            std::mem::swap(&mut cu, &mut cv);
        }
        *agg.entry((cu, cv)).or_insert(0.0) += w;
    }
    let mut b = GraphBuilder::new(k).weighted(true).allow_self_loops(true);
    for ((cu, cv), w) in agg {
        b.add_weighted_edge(cu, cv, w)?;
    }
    Ok((b.build()?, map))
}

/// Multi-level modularity maximization.
///
/// Each level runs greedy local moving (a move happens only when it
/// strictly increases modularity; equal-gain ties resolve to the lowest
/// community id), then collapses communities and recurses on the community
/// graph until no move helps or `max_passes` levels were built. The
/// coarsest assignment is prolonged back to the input nodes; with
/// `refine` set, local moving runs once more at full resolution.
pub fn plm(g: &Graph, cfg: &PlmConfig) -> Result<PlmResult> {
    if g.is_directed() {
        return Err(Error::DirectedInputRejected { op: "plm" });
    }
    if g.m() == 0 {
        return Err(Error::NoEdges);
    }
    if !(cfg.gamma > 0.0) || !cfg.gamma.is_finite() {
        return Err(Error::bad_param("gamma must be positive and finite"));
    }
    let n = g.n();
    let mut trace = Vec::new();
    let mut rng = substream(cfg.seed, 0);

    // mapping[v] = community of v expressed as a node of the current level.
    let mut mapping: Vec<u64> = (0..n).collect();
    let mut levels = 0u64;
    let mut current: Option<Graph> = None;

    loop {
        let level_graph = current.as_ref().unwrap_or(g);
        let singletons: Vec<u64> = (0..level_graph.n()).collect();
        let mut lm = LocalMoving::new(level_graph, cfg.gamma, singletons);
        let level_no = levels;
        let moved = if cfg.trace {
            lm.run(&mut rng, |labels| {
                let p = Partition::from_subset_ids(labels.to_vec());
                let q = modularity(level_graph, &p).expect("level graph has edges");
                trace.push(PlmTracePoint {
                    level: level_no,
                    modularity: q,
                });
            })
        } else {
            lm.run(&mut rng, |_| {})
        };
        levels += 1;
        if !moved {
            break;
        }
        let p = Partition::from_subset_ids(lm.labels);
        let (coarse, map) = coarsen(level_graph, &p)?;
        for slot in mapping.iter_mut() {
            *slot = map[*slot as usize];
        }
        if levels >= cfg.max_passes || coarse.n() == level_graph.n() {
            break;
        }
        current = Some(coarse);
    }

    if cfg.refine {
        let mut lm = LocalMoving::new(g, cfg.gamma, mapping);
        let level_no = levels;
        if cfg.trace {
            lm.run(&mut rng, |labels| {
                let p = Partition::from_subset_ids(labels.to_vec());
                let q = modularity(g, &p).expect("graph has edges");
                trace.push(PlmTracePoint {
                    level: level_no,
                    modularity: q,
                });
            });
        } else {
            lm.run(&mut rng, |_| {});
        }
        mapping = lm.labels;
    }

    let partition = Partition::from_subset_ids(mapping).compacted();
    let q = modularity(g, &partition)?;
    Ok(PlmResult {
        partition,
        modularity: q,
        levels,
        trace,
    })
}
