//! Core decomposition (sequential bucket peeling and a level-synchronous
//! parallel variant) and connected components.

use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId, UNREACHED};
use crate::partition::Partition;
use crate::traversal::bfs;
use rayon::prelude::*;
use std::sync::atomic::{AtomicU64, Ordering};

/// Per-node core numbers: `core_number[v]` is the largest k such that v
/// belongs to an induced subgraph with minimum degree ≥ k.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoreDecomposition {
    pub core_number: Vec<u64>,
    pub max_core: u64,
}

impl CoreDecomposition {
    /// k-shell partition: subset id = core number.
    pub fn shells(&self) -> Partition {
        Partition::from_subset_ids(self.core_number.clone())
    }
}

fn check_simple_undirected(g: &Graph, op: &'static str) -> Result<()> {
    if g.is_directed() {
        return Err(Error::DirectedInputRejected { op });
    }
    if g.self_loop_count() > 0 {
        return Err(Error::SelfLoopsRejected { op });
    }
    Ok(())
}

/// Exact core numbers by iterative minimum-degree peeling with a bucket
/// queue; O(n + m) time.
pub fn core_decomposition_seq(g: &Graph) -> Result<CoreDecomposition> {
    check_simple_undirected(g, "core_decomposition_seq")?;
    let n = g.n() as usize;
    if n == 0 {
        return Ok(CoreDecomposition {
            core_number: Vec::new(),
            max_core: 0,
        });
    }
    let mut deg: Vec<u64> = (0..n).map(|v| g.degree(v as NodeId)).collect();
    let max_deg = deg.iter().copied().max().unwrap_or(0) as usize;

    // Bucket layout: `vert` holds nodes sorted by current degree, `bin[d]`
    // is the start of degree-d nodes, `pos[v]` the position of v in `vert`.
    let mut bin = vec![0usize; max_deg + 2];
    for &d in &deg {
        bin[d as usize + 1] += 1;
    }
    for d in 1..bin.len() {
        bin[d] += bin[d - 1];
    }
    let mut vert = vec![0 as NodeId; n];
    let mut pos = vec![0usize; n];
    let mut fill = bin.clone();
    for v in 0..n {
        let d = deg[v] as usize;
        vert[fill[d]] = v as NodeId;
        pos[v] = fill[d];
        fill[d] += 1;
    }

    let mut core = vec![0u64; n];
    for i in 0..n {
        let v = vert[i];
        core[v as usize] = deg[v as usize];
        for &u in g.neighbors(v) {
            let u = u as usize;
            if deg[u] > deg[v as usize] {
                // Swap u with the first node of its bucket, then shrink the
                // bucket boundary by one; amortized O(1).
                let du = deg[u] as usize;
                let pu = pos[u];
                let pw = bin[du];
                let w = vert[pw];
                if u as NodeId != w {
                    vert[pu] = w;
                    pos[w as usize] = pu;
                    vert[pw] = u as NodeId;
                    pos[u] = pw;
                }
                bin[du] += 1;
                deg[u] -= 1;
            }
        }
    }
    let max_core = core.iter().copied().max().unwrap_or(0);
    Ok(CoreDecomposition {
        core_number: core,
        max_core,
    })
}

/// Core numbers by level-synchronous parallel peeling.
///
/// Residual degrees live in a shared atomic array; at level k every node
/// whose residual degree first drops to k joins the next frontier, found by
/// the one worker whose decrement crossed the boundary. Worker-local
/// buffers are merged per round. Output is identical to
/// [`core_decomposition_seq`] for any worker count.
pub fn core_decomposition_park(g: &Graph, threads: usize) -> Result<CoreDecomposition> {
    check_simple_undirected(g, "core_decomposition_park")?;
    if threads == 0 {
        return Err(Error::bad_param("thread count must be >= 1"));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::bad_param(format!("thread pool: {e}")))?;
    Ok(pool.install(|| park_levels(g)))
}

fn park_levels(g: &Graph) -> CoreDecomposition {
    let n = g.n() as usize;
    let residual: Vec<AtomicU64> = (0..n)
        .map(|v| AtomicU64::new(g.degree(v as NodeId)))
        .collect();
    let core: Vec<AtomicU64> = (0..n).map(|_| AtomicU64::new(0)).collect();
    let mut active: Vec<NodeId> = (0..n as NodeId).collect();
    let mut max_core = 0u64;

    while !active.is_empty() {
        let level = active
            .iter()
            .map(|&v| residual[v as usize].load(Ordering::Relaxed))
            .min()
            .unwrap();
        max_core = level;
        let mut frontier: Vec<NodeId> = active
            .iter()
            .copied()
            .filter(|&v| residual[v as usize].load(Ordering::Relaxed) <= level)
            .collect();
        while !frontier.is_empty() {
            for &v in &frontier {
                core[v as usize].store(level, Ordering::Relaxed);
            }
            frontier = frontier
                .par_iter()
                .fold(Vec::new, |mut next, &v| {
                    for &u in g.neighbors(v) {
                        let cell = &residual[u as usize];
                        let mut r = cell.load(Ordering::Relaxed);
                        while r > level {
                            match cell.compare_exchange_weak(
                                r,
                                r - 1,
                                Ordering::Relaxed,
                                Ordering::Relaxed,
                            ) {
                                Ok(_) => {
                                    if r - 1 == level {
                                        next.push(u);
                                    }
                                    break;
                                }
                                Err(seen) => r = seen,
                            }
                        }
                    }
                    next
                })
                .reduce(Vec::new, |mut a, mut b| {
                    a.append(&mut b);
                    a
                });
        }
        active.retain(|&v| residual[v as usize].load(Ordering::Relaxed) > level);
    }

    let core_number: Vec<u64> = core.into_iter().map(AtomicU64::into_inner).collect();
    CoreDecomposition {
        core_number,
        max_core,
    }
}

/// Connected components by repeated BFS; subset ids are assigned in
/// ascending order of each component's lowest node id, so the result does
/// not depend on edge order.
pub fn connected_components(g: &Graph) -> Result<Partition> {
    if g.is_directed() {
        return Err(Error::DirectedInputRejected {
            op: "connected_components",
        });
    }
    let n = g.n() as usize;
    let mut subset = vec![UNREACHED; n];
    let mut next_id = 0u64;
    let mut queue: Vec<NodeId> = Vec::new();
    for start in 0..n {
        if subset[start] != UNREACHED {
            continue;
        }
        let id = next_id;
        next_id += 1;
        subset[start] = id;
        queue.clear();
        queue.push(start as NodeId);
        let mut head = 0;
        while head < queue.len() {
            let u = queue[head];
            head += 1;
            for &v in g.neighbors(u) {
                if subset[v as usize] == UNREACHED {
                    subset[v as usize] = id;
                    queue.push(v);
                }
            }
        }
    }
    Ok(Partition::from_subset_ids(subset))
}

/// True when every node can reach every other node; false for n = 0.
pub fn is_connected(g: &Graph) -> Result<bool> {
    if g.is_directed() {
        return Err(Error::DirectedInputRejected { op: "is_connected" });
    }
    if g.n() == 0 {
        return Ok(false);
    }
    let dist = bfs(g, 0)?;
    Ok(dist.iter().all(|&d| d != UNREACHED))
}
