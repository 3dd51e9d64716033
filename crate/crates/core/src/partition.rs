//! Node partition: one subset id per node, with subset-size bookkeeping.
//! Used for connected components, communities, k-shells and generator
//! ground truths.

use crate::graph::NodeId;
use std::collections::BTreeMap;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    subset: Vec<u64>,
}

impl Partition {
    /// Every node in its own subset: id = node id.
    pub fn singletons(n: u64) -> Partition {
        Partition {
            subset: (0..n).collect(),
        }
    }

    /// Every node in subset 0.
    pub fn all_in_one(n: u64) -> Partition {
        Partition {
            subset: vec![0; n as usize],
        }
    }

    pub fn from_subset_ids(subset: Vec<u64>) -> Partition {
        Partition { subset }
    }

    pub fn n(&self) -> u64 {
        self.subset.len() as u64
    }

    pub fn subset_of(&self, v: NodeId) -> u64 {
        self.subset[v as usize]
    }

    pub fn set_subset(&mut self, v: NodeId, id: u64) {
        self.subset[v as usize] = id;
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.subset
    }

    /// Number of distinct subset ids in use.
    pub fn subset_count(&self) -> u64 {
        self.sizes().len() as u64
    }

    /// Subset id → member count; sums to n over all subsets.
    pub fn sizes(&self) -> BTreeMap<u64, u64> {
        let mut sizes = BTreeMap::new();
        for &s in &self.subset {
            *sizes.entry(s).or_insert(0) += 1;
        }
        sizes
    }

    /// Relabel subsets as 0..k in order of first appearance by node id.
    pub fn compacted(&self) -> Partition {
        let mut remap: BTreeMap<u64, u64> = BTreeMap::new();
        let mut next = 0;
        let subset = self
            .subset
            .iter()
            .map(|&s| {
                *remap.entry(s).or_insert_with(|| {
                    let id = next;
                    next += 1;
                    id
                })
            })
            .collect();
        Partition { subset }
    }

    /// True when both partitions induce the same grouping, ignoring the
    /// particular subset ids.
    pub fn same_blocks(&self, other: &Partition) -> bool {
        self.compacted().subset == other.compacted().subset
    }
}
