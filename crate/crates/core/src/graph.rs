//! Adjacency-array graph: per-node contiguous neighbor lists, consecutive
//! 64-bit node ids, optional weights and edge ids. Memory is linear in n + m.
//!
//! Graphs are immutable during analysis; every kernel takes `&Graph` and may
//! be called concurrently from many threads. Mutation (`add_edge`,
//! `remove_edge`, `index_edges`) requires exclusive access.

use crate::error::{Error, Result};

pub type NodeId = u64;
pub type EdgeId = u64;

/// Hop-distance sentinel for nodes a traversal did not reach.
///
/// Distinct from every valid distance (a path has at most n − 1 < `UNREACHED`
/// hops). Weighted traversals use `f64::INFINITY` instead.
pub const UNREACHED: u64 = u64::MAX;

/// What `GraphBuilder::build` does with duplicate edges.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DuplicatePolicy {
    /// Fail with [`Error::DuplicateEdge`] (default).
    Reject,
    /// Merge duplicates into one edge, summing weights.
    MergeSum,
}

/// Edge-list accumulator for [`Graph`].
///
/// ```
/// use granite_core::graph::GraphBuilder;
/// let mut b = GraphBuilder::new(3);
/// b.add_edge(0, 1).unwrap();
/// b.add_edge(1, 2).unwrap();
/// let g = b.build().unwrap();
/// assert_eq!((g.n(), g.m()), (3, 2));
/// assert_eq!(g.degree(1), 2);
/// ```
#[derive(Clone, Debug)]
pub struct GraphBuilder {
    n: u64,
    directed: bool,
    weighted: bool,
    allow_self_loops: bool,
    duplicates: DuplicatePolicy,
    edges: Vec<(NodeId, NodeId, f64)>,
}

impl GraphBuilder {
    /// Undirected, unweighted builder over nodes `0..n`.
    pub fn new(n: u64) -> Self {
        GraphBuilder {
            n,
            directed: false,
            weighted: false,
            allow_self_loops: false,
            duplicates: DuplicatePolicy::Reject,
            edges: Vec::new(),
        }
    }

    pub fn directed(mut self, yes: bool) -> Self {
        self.directed = yes;
        self
    }

    pub fn weighted(mut self, yes: bool) -> Self {
        self.weighted = yes;
        self
    }

    /// Self-loops are rejected by default; the analytics kernels assume
    /// simple graphs. Community coarsening enables this internally.
    pub fn allow_self_loops(mut self, yes: bool) -> Self {
        self.allow_self_loops = yes;
        self
    }

    pub fn duplicates(mut self, policy: DuplicatePolicy) -> Self {
        self.duplicates = policy;
        self
    }

    fn check_endpoints(&self, u: NodeId, v: NodeId) -> Result<()> {
        for node in [u, v] {
            if node >= self.n {
                return Err(Error::InvalidNode { node, n: self.n });
            }
        }
        if u == v && !self.allow_self_loops {
            return Err(Error::SelfLoop { node: u });
        }
        Ok(())
    }

    pub fn add_edge(&mut self, u: NodeId, v: NodeId) -> Result<()> {
        if self.weighted {
            return Err(Error::MissingWeight { u, v });
        }
        self.check_endpoints(u, v)?;
        self.edges.push((u, v, 1.0));
        Ok(())
    }

    pub fn add_weighted_edge(&mut self, u: NodeId, v: NodeId, w: f64) -> Result<()> {
        if !self.weighted {
            return Err(Error::UnexpectedWeight { u, v });
        }
        if !(w.is_finite() && w > 0.0) {
            return Err(Error::BadWeight { weight: w });
        }
        self.check_endpoints(u, v)?;
        self.edges.push((u, v, w));
        Ok(())
    }

    pub fn build(self) -> Result<Graph> {
        let GraphBuilder {
            n,
            directed,
            weighted,
            allow_self_loops,
            duplicates,
            mut edges,
        } = self;

        // Canonical key per edge: directed edges keep their orientation,
        // undirected ones are keyed on (min, max).
        let key = |u: NodeId, v: NodeId| -> (NodeId, NodeId) {
            if directed || u <= v {
                (u, v)
            } else {
                (v, u)
            }
        };
        edges.sort_unstable_by_key(|&(u, v, _)| key(u, v));
        let mut merged: Vec<(NodeId, NodeId, f64)> = Vec::with_capacity(edges.len());
        for (u, v, w) in edges {
            let k = key(u, v);
            match merged.last_mut() {
                Some(&mut (pu, pv, ref mut pw)) if key(pu, pv) == k => match duplicates {
                    DuplicatePolicy::Reject => return Err(Error::DuplicateEdge { u, v }),
                    DuplicatePolicy::MergeSum => *pw += w,
                },
                _ => merged.push((u, v, w)),
            }
        }

        let mut g = Graph {
            directed,
            weighted,
            has_self_loops: allow_self_loops,
            m: merged.len() as u64,
            self_loop_count: 0,
            adj: vec![Vec::new(); n as usize],
            weights: if weighted {
                Some(vec![Vec::new(); n as usize])
            } else {
                None
            },
            in_adj: if directed {
                Some(vec![Vec::new(); n as usize])
            } else {
                None
            },
            in_weights: if directed && weighted {
                Some(vec![Vec::new(); n as usize])
            } else {
                None
            },
            edge_ids: None,
        };
        for &(u, v, w) in &merged {
            if u == v {
                g.self_loop_count += 1;
            }
            g.push_adjacency(u, v, w);
        }
        g.sort_adjacency();
        Ok(g)
    }
}

/// Directed or undirected simple graph with optional positive edge weights.
///
/// Node ids form the consecutive range `[0, n)`. An undirected edge `{u, v}`
/// appears in the adjacency of both endpoints exactly once each; a self-loop
/// (when enabled) appears once and contributes one to `degree`.
#[derive(Clone, Debug)]
pub struct Graph {
    directed: bool,
    weighted: bool,
    has_self_loops: bool,
    m: u64,
    self_loop_count: u64,
    adj: Vec<Vec<NodeId>>,
    weights: Option<Vec<Vec<f64>>>,
    in_adj: Option<Vec<Vec<NodeId>>>,
    in_weights: Option<Vec<Vec<f64>>>,
    /// Aligned with `adj`; present after `index_edges`.
    edge_ids: Option<Vec<Vec<EdgeId>>>,
}

impl Graph {
    /// Convenience constructor for an undirected, unweighted graph.
    pub fn from_edges(n: u64, edges: &[(NodeId, NodeId)]) -> Result<Graph> {
        let mut b = GraphBuilder::new(n);
        for &(u, v) in edges {
            b.add_edge(u, v)?;
        }
        b.build()
    }

    /// Convenience constructor for an undirected, weighted graph.
    pub fn from_weighted_edges(n: u64, edges: &[(NodeId, NodeId, f64)]) -> Result<Graph> {
        let mut b = GraphBuilder::new(n).weighted(true);
        for &(u, v, w) in edges {
            b.add_weighted_edge(u, v, w)?;
        }
        b.build()
    }

    fn push_adjacency(&mut self, u: NodeId, v: NodeId, w: f64) {
        self.adj[u as usize].push(v);
        if let Some(ws) = &mut self.weights {
            ws[u as usize].push(w);
        }
        if self.directed {
            self.in_adj.as_mut().unwrap()[v as usize].push(u);
            if let Some(ws) = &mut self.in_weights {
                ws[v as usize].push(w);
            }
        } else if u != v {
            self.adj[v as usize].push(u);
            if let Some(ws) = &mut self.weights {
                ws[v as usize].push(w);
            }
        }
    }

    /// Sort every adjacency list ascending, keeping weights aligned.
    fn sort_adjacency(&mut self) {
        fn sort_pairs(adj: &mut [Vec<NodeId>], weights: &mut Option<Vec<Vec<f64>>>) {
            for v in 0..adj.len() {
                match weights {
                    Some(ws) => {
                        let mut order: Vec<(NodeId, f64)> = adj[v]
                            .iter()
                            .copied()
                            .zip(ws[v].iter().copied())
                            .collect();
                        order.sort_unstable_by_key(|&(id, _)| id);
                        adj[v].clear();
                        ws[v].clear();
                        for (id, w) in order {
                            adj[v].push(id);
                            ws[v].push(w);
                        }
                    }
                    None => adj[v].sort_unstable(),
                }
            }
        }
        sort_pairs(&mut self.adj, &mut self.weights);
        if let Some(in_adj) = &mut self.in_adj {
            sort_pairs(in_adj, &mut self.in_weights);
        }
    }

    pub fn n(&self) -> u64 {
        self.adj.len() as u64
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    pub fn is_weighted(&self) -> bool {
        self.weighted
    }

    pub fn self_loop_count(&self) -> u64 {
        self.self_loop_count
    }

    pub fn nodes(&self) -> std::ops::Range<NodeId> {
        0..self.n()
    }

    pub(crate) fn check_node(&self, v: NodeId) -> Result<()> {
        if v >= self.n() {
            return Err(Error::InvalidNode {
                node: v,
                n: self.n(),
            });
        }
        Ok(())
    }

    /// Out-neighbors (all neighbors for undirected graphs), sorted ascending.
    pub fn neighbors(&self, v: NodeId) -> &[NodeId] {
        &self.adj[v as usize]
    }

    /// In-neighbors; equals `neighbors` for undirected graphs.
    pub fn in_neighbors(&self, v: NodeId) -> &[NodeId] {
        match &self.in_adj {
            Some(in_adj) => &in_adj[v as usize],
            None => &self.adj[v as usize],
        }
    }

    /// Weights aligned with `neighbors(v)`; `None` for unweighted graphs.
    pub fn neighbor_weights(&self, v: NodeId) -> Option<&[f64]> {
        self.weights.as_ref().map(|ws| &ws[v as usize][..])
    }

    /// Weights aligned with `in_neighbors(v)`; `None` for unweighted graphs.
    pub fn in_neighbor_weights(&self, v: NodeId) -> Option<&[f64]> {
        match (&self.in_weights, &self.weights) {
            (Some(ws), _) => Some(&ws[v as usize][..]),
            (None, Some(ws)) if !self.directed => Some(&ws[v as usize][..]),
            _ => None,
        }
    }

    /// Out-degree for directed graphs; a self-loop counts once.
    pub fn degree(&self, v: NodeId) -> u64 {
        self.adj[v as usize].len() as u64
    }

    pub fn in_degree(&self, v: NodeId) -> u64 {
        self.in_neighbors(v).len() as u64
    }

    /// Sum of incident edge weights (out-edges for directed graphs);
    /// unweighted graphs count 1 per edge. A self-loop contributes once.
    pub fn weighted_degree(&self, v: NodeId) -> f64 {
        match &self.weights {
            Some(ws) => ws[v as usize].iter().sum(),
            None => self.degree(v) as f64,
        }
    }

    /// Total edge weight; m for unweighted graphs. Self-loops count once.
    pub fn total_edge_weight(&self) -> f64 {
        match &self.weights {
            Some(_) => self.edges().map(|(_, _, w)| w).sum(),
            None => self.m as f64,
        }
    }

    pub fn has_edge(&self, u: NodeId, v: NodeId) -> bool {
        self.adj[u as usize].binary_search(&v).is_ok()
    }

    /// Weight of edge (u, v) if present; 1.0 entries for unweighted graphs.
    pub fn edge_weight(&self, u: NodeId, v: NodeId) -> Option<f64> {
        let pos = self.adj[u as usize].binary_search(&v).ok()?;
        Some(match &self.weights {
            Some(ws) => ws[u as usize][pos],
            None => 1.0,
        })
    }

    /// Every edge once: directed edges as stored, undirected as (u, v) with
    /// u ≤ v. Unweighted graphs yield weight 1.0.
    pub fn edges(&self) -> impl Iterator<Item = (NodeId, NodeId, f64)> + '_ {
        self.adj.iter().enumerate().flat_map(move |(u, nbrs)| {
            let u = u as NodeId;
            nbrs.iter().enumerate().filter_map(move |(pos, &v)| {
                if self.directed || u <= v {
                    let w = match &self.weights {
                        Some(ws) => ws[u as usize][pos],
                        None => 1.0,
                    };
                    Some((u, v, w))
                } else {
                    None
                }
            })
        })
    }

    /// Add one edge; ids previously assigned by `index_edges` are kept and
    /// the new edge receives the next consecutive id.
    pub fn add_edge(&mut self, u: NodeId, v: NodeId, w: Option<f64>) -> Result<()> {
        self.check_node(u)?;
        self.check_node(v)?;
        if u == v && !self.has_self_loops {
            return Err(Error::SelfLoop { node: u });
        }
        match (self.weighted, w) {
            (true, None) => return Err(Error::MissingWeight { u, v }),
            (false, Some(_)) => return Err(Error::UnexpectedWeight { u, v }),
            (true, Some(w)) if !(w.is_finite() && w > 0.0) => {
                return Err(Error::BadWeight { weight: w })
            }
            _ => {}
        }
        if self.has_edge(u, v) {
            return Err(Error::DuplicateEdge { u, v });
        }
        let w = w.unwrap_or(1.0);
        let id = self.m;
        self.insert_half_edge(u, v, w, id);
        if self.directed {
            self.insert_in_edge(u, v, w);
        } else if u != v {
            self.insert_half_edge(v, u, w, id);
        }
        if u == v {
            self.self_loop_count += 1;
        }
        self.m += 1;
        Ok(())
    }

    /// Remove one edge. Any edge-id assignment is dropped (ids would no
    /// longer be consecutive); call `index_edges` again if ids are needed.
    pub fn remove_edge(&mut self, u: NodeId, v: NodeId) -> Result<()> {
        self.check_node(u)?;
        self.check_node(v)?;
        if !self.has_edge(u, v) {
            return Err(Error::MissingEdge { u, v });
        }
        self.edge_ids = None;
        self.remove_half_edge(u, v);
        if self.directed {
            let in_adj = self.in_adj.as_mut().unwrap();
            let pos = in_adj[v as usize].binary_search(&u).unwrap();
            in_adj[v as usize].remove(pos);
            if let Some(ws) = &mut self.in_weights {
                ws[v as usize].remove(pos);
            }
        } else if u != v {
            self.remove_half_edge(v, u);
        }
        if u == v {
            self.self_loop_count -= 1;
        }
        self.m -= 1;
        Ok(())
    }

    fn insert_half_edge(&mut self, u: NodeId, v: NodeId, w: f64, id: EdgeId) {
        let pos = match self.adj[u as usize].binary_search(&v) {
            Ok(p) | Err(p) => p,
        };
        self.adj[u as usize].insert(pos, v);
        if let Some(ws) = &mut self.weights {
            ws[u as usize].insert(pos, w);
        }
        if let Some(ids) = &mut self.edge_ids {
            ids[u as usize].insert(pos, id);
        }
    }

    fn insert_in_edge(&mut self, u: NodeId, v: NodeId, w: f64) {
        let in_adj = self.in_adj.as_mut().unwrap();
        let pos = match in_adj[v as usize].binary_search(&u) {
            Ok(p) | Err(p) => p,
        };
        in_adj[v as usize].insert(pos, u);
        if let Some(ws) = &mut self.in_weights {
            ws[v as usize].insert(pos, w);
        }
    }

    fn remove_half_edge(&mut self, u: NodeId, v: NodeId) {
        let pos = self.adj[u as usize].binary_search(&v).unwrap();
        self.adj[u as usize].remove(pos);
        if let Some(ws) = &mut self.weights {
            ws[u as usize].remove(pos);
        }
        if let Some(ids) = &mut self.edge_ids {
            ids[u as usize].remove(pos);
        }
    }

    /// Assign consecutive edge ids in `[0, m)`. Idempotent; both directions
    /// of an undirected edge share one id.
    pub fn index_edges(&mut self) {
        if self.edge_ids.is_some() {
            return;
        }
        let n = self.adj.len();
        let mut ids: Vec<Vec<EdgeId>> = self
            .adj
            .iter()
            .map(|nbrs| vec![0; nbrs.len()])
            .collect();
        let mut next: EdgeId = 0;
        for u in 0..n {
            for pos in 0..self.adj[u].len() {
                let v = self.adj[u][pos];
                if self.directed || u as NodeId <= v {
                    ids[u][pos] = next;
                    if !self.directed && (u as NodeId) < v {
                        let back = self.adj[v as usize].binary_search(&(u as NodeId)).unwrap();
                        ids[v as usize][back] = next;
                    }
                    next += 1;
                }
            }
        }
        debug_assert_eq!(next, self.m);
        self.edge_ids = Some(ids);
    }

    pub fn edge_ids_assigned(&self) -> bool {
        self.edge_ids.is_some()
    }

    /// Id of edge (u, v) after `index_edges`.
    pub fn edge_id(&self, u: NodeId, v: NodeId) -> Option<EdgeId> {
        let ids = self.edge_ids.as_ref()?;
        let pos = self.adj[u as usize].binary_search(&v).ok()?;
        Some(ids[u as usize][pos])
    }
}
