//! Per-node real-valued result of a centrality measure.

use crate::graph::NodeId;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScoreVector {
    pub measure: String,
    pub normalized: bool,
    pub values: Vec<f64>,
}

impl ScoreVector {
    pub fn new(measure: impl Into<String>, normalized: bool, values: Vec<f64>) -> ScoreVector {
        ScoreVector {
            measure: measure.into(),
            normalized,
            values,
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Node with the largest score; ties resolve to the lowest id.
    pub fn argmax(&self) -> Option<NodeId> {
        let mut best: Option<(NodeId, f64)> = None;
        for (v, &x) in self.values.iter().enumerate() {
            if best.is_none() || x > best.unwrap().1 {
                best = Some((v as NodeId, x));
            }
        }
        best.map(|(v, _)| v)
    }

    /// The k highest-scoring nodes, descending; ties by ascending id.
    pub fn top_k(&self, k: usize) -> Vec<(NodeId, f64)> {
        let mut ranked: Vec<(NodeId, f64)> = self
            .values
            .iter()
            .enumerate()
            .map(|(v, &x)| (v as NodeId, x))
            .collect();
        ranked.sort_by(|a, b| b.1.total_cmp(&a.1).then(a.0.cmp(&b.0)));
        ranked.truncate(k);
        ranked
    }
}
