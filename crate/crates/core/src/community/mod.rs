//! Community detection: modularity scoring, label propagation, and
//! multi-level modularity maximization.

pub mod plm;
pub mod plp;

pub use plm::{coarsen, plm, PlmConfig, PlmResult, PlmTracePoint};
pub use plp::{plp, PlpResult};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::partition::Partition;
use std::collections::BTreeMap;

/// Modularity of a partition:
/// `q = Σ_c ( w_c / W  -  (S_c / 2W)² )` where `w_c` is the weight inside
/// community c, `S_c` the total weighted degree of its nodes (a self-loop
/// adds twice its weight), and W the total edge weight.
pub fn modularity(g: &Graph, p: &Partition) -> Result<f64> {
    if g.is_directed() {
        return Err(Error::DirectedInputRejected { op: "modularity" });
    }
    if p.n() != g.n() {
        return Err(Error::bad_param("partition length != node count"));
    }
    let total = g.total_edge_weight();
    if g.m() == 0 || total <= 0.0 {
        return Err(Error::NoEdges);
    }
    // Ordered map: the final sum must not depend on hash state, or equal
    // partitions could score different bits from run to run.
    let mut intra: BTreeMap<u64, f64> = BTreeMap::new();
    let mut strength: BTreeMap<u64, f64> = BTreeMap::new();
    for (u, v, w) in g.edges() {
        let cu = p.subset_of(u);
        let cv = p.subset_of(v);
        if u == v {
            *strength.entry(cu).or_insert(0.0) += 2.0 * w;
            *intra.entry(cu).or_insert(0.0) += w;
        } else {
            *strength.entry(cu).or_insert(0.0) += w;
            *strength.entry(cv).or_insert(0.0) += w;
            if cu == cv {
                *intra.entry(cu).or_insert(0.0) += w;
            }
        }
    }
    let mut q = 0.0;
    for (c, s) in &strength {
        let w_c = intra.get(c).copied().unwrap_or(0.0);
        let frac = s / (2.0 * total);
        q += w_c / total - frac * frac;
    }
    Ok(q)
}
