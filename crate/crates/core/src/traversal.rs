//! Single-source traversal primitives shared by the analytics kernels.

use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId, UNREACHED};
use std::cmp::Ordering;
use std::collections::BinaryHeap;

/// Hop distances from `source`; unreachable nodes carry [`UNREACHED`].
///
/// Directed graphs are traversed along out-edges.
///
/// ```
/// use granite_core::graph::Graph;
/// use granite_core::traversal::bfs;
/// let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
/// assert_eq!(bfs(&g, 0).unwrap(), vec![0, 1, 2]);
/// ```
pub fn bfs(g: &Graph, source: NodeId) -> Result<Vec<u64>> {
    g.check_node(source)?;
    let mut dist = vec![UNREACHED; g.n() as usize];
    dist[source as usize] = 0;
    let mut queue = Vec::with_capacity(64);
    queue.push(source);
    let mut head = 0;
    while head < queue.len() {
        let u = queue[head];
        head += 1;
        let du = dist[u as usize];
        for &v in g.neighbors(u) {
            if dist[v as usize] == UNREACHED {
                dist[v as usize] = du + 1;
                queue.push(v);
            }
        }
    }
    Ok(dist)
}

#[derive(PartialEq)]
struct HeapEntry {
    dist: f64,
    node: NodeId,
}

impl Eq for HeapEntry {}

impl Ord for HeapEntry {
    fn cmp(&self, other: &Self) -> Ordering {
        // Min-heap on distance via reversed comparison; ties on node id keep
        // the ordering total.
        other
            .dist
            .total_cmp(&self.dist)
            .then_with(|| other.node.cmp(&self.node))
    }
}

impl PartialOrd for HeapEntry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Weighted shortest-path distances from `source`; unreachable nodes carry
/// `f64::INFINITY`. Requires a weighted graph with positive weights.
pub fn dijkstra(g: &Graph, source: NodeId) -> Result<Vec<f64>> {
    g.check_node(source)?;
    if !g.is_weighted() {
        return Err(Error::WeightedInputRequired { op: "dijkstra" });
    }
    let mut dist = vec![f64::INFINITY; g.n() as usize];
    dist[source as usize] = 0.0;
    let mut heap = BinaryHeap::new();
    heap.push(HeapEntry {
        dist: 0.0,
        node: source,
    });
    while let Some(HeapEntry { dist: du, node: u }) = heap.pop() {
        if du > dist[u as usize] {
            continue;
        }
        let weights = g.neighbor_weights(u).expect("weighted graph");
        for (&v, &w) in g.neighbors(u).iter().zip(weights) {
            if !(w > 0.0) {
                return Err(Error::BadWeight { weight: w });
            }
            let dv = du + w;
            if dv < dist[v as usize] {
                dist[v as usize] = dv;
                heap.push(HeapEntry { dist: dv, node: v });
            }
        }
    }
    Ok(dist)
}
