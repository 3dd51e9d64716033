//! Eccentricity and diameter on unweighted undirected graphs.
//!
//! The diameter routine mixes a 4-sweep lower bound with fringe-driven
//! refinement: starting from the BFS levels of a high-degree root, it
//! processes fringe nodes level by level, tightening the lower bound with
//! each eccentricity it computes, and stops as soon as the remaining
//! unprocessed levels cannot contain a pair farther apart than the bound.

use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId, UNREACHED};
use crate::traversal::bfs;

/// How far to push the diameter search.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum DiameterMode {
    /// Run until lower and upper bound meet.
    Exact,
    /// Stop once `(upper - lower) <= error_factor * lower`; a factor of 0
    /// behaves like [`DiameterMode::Exact`].
    Bounds { error_factor: f64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct DiameterResult {
    pub lower: u64,
    pub upper: u64,
    /// True when the bounds met and `lower` is the exact diameter.
    pub exact: bool,
    /// Number of full BFS runs spent.
    pub bfs_count: u64,
}

fn require_undirected(g: &Graph, op: &'static str) -> Result<()> {
    if g.is_directed() {
        return Err(Error::DirectedInputRejected { op });
    }
    Ok(())
}

fn connected_distances(g: &Graph, v: NodeId, op: &'static str) -> Result<Vec<u64>> {
    let dist = bfs(g, v)?;
    if dist.iter().any(|&d| d == UNREACHED) {
        return Err(Error::Disconnected { op });
    }
    Ok(dist)
}

/// Greatest BFS distance from `v` to any node. Requires a connected
/// undirected graph.
pub fn eccentricity(g: &Graph, v: NodeId) -> Result<u64> {
    require_undirected(g, "eccentricity")?;
    let dist = connected_distances(g, v, "eccentricity")?;
    Ok(dist.into_iter().max().unwrap_or(0))
}

/// Index of the maximum distance, ties broken toward the lowest node id.
fn farthest(dist: &[u64]) -> (NodeId, u64) {
    let mut best = 0usize;
    for (i, &d) in dist.iter().enumerate() {
        if d > dist[best] {
            best = i;
        }
    }
    (best as NodeId, dist[best])
}

/// Diameter of a connected undirected graph via fringe refinement.
///
/// Returns matching bounds (`exact = true`) in [`DiameterMode::Exact`], or
/// as soon as the relative gap closes under the requested factor in
/// [`DiameterMode::Bounds`]. `bfs_count` reports the BFS budget spent; on
/// graphs with a pronounced core-periphery structure it stays far below n.
pub fn diameter_ifub(g: &Graph, mode: DiameterMode) -> Result<DiameterResult> {
    require_undirected(g, "diameter")?;
    if g.n() == 0 {
        return Err(Error::bad_param("diameter of an empty graph"));
    }
    if let DiameterMode::Bounds { error_factor } = mode {
        if !(error_factor >= 0.0) || !error_factor.is_finite() {
            return Err(Error::bad_param("error_factor must be finite and >= 0"));
        }
    }

    let root = (0..g.n()).max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v))).unwrap();
    let root_dist = connected_distances(g, root, "diameter")?;
    let mut bfs_count = 1u64;
    let (mut far_node, ecc_root) = farthest(&root_dist);
    let mut lower = ecc_root;

    // Three more sweeps: hop to the farthest node repeatedly, keeping the
    // best eccentricity seen as the lower bound.
    if g.n() > 1 {
        for _ in 0..3 {
            let dist = connected_distances(g, far_node, "diameter")?;
            bfs_count += 1;
            let (next, ecc) = farthest(&dist);
            lower = lower.max(ecc);
            far_node = next;
        }
    }

    // Group nodes by BFS level around the root.
    let mut levels: Vec<Vec<NodeId>> = vec![Vec::new(); ecc_root as usize + 1];
    for (v, &d) in root_dist.iter().enumerate() {
        levels[d as usize].push(v as NodeId);
    }

    let close_enough = |lower: u64, upper: u64| -> bool {
        if upper <= lower {
            return true;
        }
        match mode {
            DiameterMode::Exact => false,
            DiameterMode::Bounds { error_factor } => {
                (upper - lower) as f64 <= error_factor * lower as f64
            }
        }
    };

    let mut i = ecc_root;
    loop {
        let upper = 2 * i;
        if lower >= upper {
            return Ok(DiameterResult {
                lower,
                upper: lower,
                exact: true,
                bfs_count,
            });
        }
        if close_enough(lower, upper) {
            return Ok(DiameterResult {
                lower,
                upper,
                exact: false,
                bfs_count,
            });
        }
        for &v in &levels[i as usize] {
            let dist = bfs(g, v)?;
            bfs_count += 1;
            let (_, ecc) = farthest(&dist);
            lower = lower.max(ecc);
            if lower >= upper || close_enough(lower, upper) {
                break;
            }
        }
        // A mid-level break must settle against this level's bound: deeper
        // levels are only guaranteed processed below i once the loop ran dry.
        if lower >= upper {
            return Ok(DiameterResult {
                lower,
                upper: lower,
                exact: true,
                bfs_count,
            });
        }
        if close_enough(lower, upper) {
            return Ok(DiameterResult {
                lower,
                upper,
                exact: false,
                bfs_count,
            });
        }
        if i == 0 {
            return Ok(DiameterResult {
                lower,
                upper: lower,
                exact: true,
                bfs_count,
            });
        }
        i -= 1;
    }
}
