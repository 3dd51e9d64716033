//! Community detection by label propagation.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::partition::Partition;
use crate::rng::substream;
use rand::seq::SliceRandom;
use rand::Rng;
use std::collections::BTreeMap;

/// Safety cap on sweeps; propagation settles far earlier in practice.
pub const MAX_SWEEPS: u64 = 100;

#[derive(Clone, Debug)]
pub struct PlpResult {
    pub partition: Partition,
    pub sweeps: u64,
    /// Distinct label count after each sweep; never increases.
    pub label_counts: Vec<u64>,
}

/// Label propagation: every node starts with its own label and repeatedly
/// adopts the label carrying the greatest (weighted) mass among its
/// neighbors. A node already holding one of the top labels keeps it;
/// otherwise it picks uniformly among the top labels. Nodes are visited in
/// a fresh seeded shuffle each sweep, and the run stops once fewer than
/// `theta` nodes changed (default: `max(1, ceil(n / 1e5))`).
///
/// Runs single-threaded; the seeded order makes the result reproducible.
pub fn plp(g: &Graph, seed: u64, theta: Option<u64>) -> Result<PlpResult> {
    if g.is_directed() {
        return Err(Error::DirectedInputRejected { op: "plp" });
    }
    let n = g.n();
    let theta = theta.unwrap_or_else(|| 1.max(n.div_ceil(100_000)));
    let mut rng = substream(seed, 0);
    let mut labels: Vec<u64> = (0..n).collect();
    let mut order: Vec<u64> = (0..n).collect();
    let mut sweeps = 0u64;
    let mut label_counts = Vec::new();
    let mut candidates: Vec<u64> = Vec::new();

    while sweeps < MAX_SWEEPS {
        order.shuffle(&mut rng);
        let mut changed = 0u64;
        for &v in &order {
            let nbrs = g.neighbors(v);
            if nbrs.is_empty() {
                continue;
            }
            let weights = g.neighbor_weights(v);
            let mut mass: BTreeMap<u64, f64> = BTreeMap::new();
            for (i, &u) in nbrs.iter().enumerate() {
                let w = weights.map_or(1.0, |ws| ws[i]);
                *mass.entry(labels[u as usize]).or_insert(0.0) += w;
            }
            let top = mass.values().fold(f64::NEG_INFINITY, |a, &b| a.max(b));
            candidates.clear();
            candidates.extend(
                mass.iter()
                    .filter(|&(_, &w)| w == top)
                    .map(|(&label, _)| label),
            );
            let cur = labels[v as usize];
            if candidates.contains(&cur) {
                continue;
            }
            let pick = candidates[rng.gen_range(0..candidates.len())];
            labels[v as usize] = pick;
            changed += 1;
        }
        sweeps += 1;
        let distinct = {
            let mut sorted = labels.clone();
            sorted.sort_unstable();
            sorted.dedup();
            sorted.len() as u64
        };
        label_counts.push(distinct);
        if changed < theta {
            break;
        }
    }

    Ok(PlpResult {
        partition: Partition::from_subset_ids(labels),
        sweeps,
        label_counts,
    })
}
