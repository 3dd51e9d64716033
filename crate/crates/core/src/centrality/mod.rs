//! Node centrality measures: degree, betweenness (exact, sampled, and with
//! an absolute-error guarantee), closeness (exact and pivot-sampled),
//! PageRank, eigenvector, Katz, and local clustering coefficients, plus
//! whole-graph summaries (centralization, assortativity).

pub mod betweenness;
pub mod closeness;
pub mod clustering;
pub mod spectral;

pub use betweenness::{betweenness_epsilon, betweenness_exact, betweenness_sampled, Betweenness};
pub use closeness::{closeness_exact, closeness_sampled};
pub use clustering::{avg_clustering_sampled, local_clustering};
pub use spectral::{eigenvector_centrality, katz_centrality, pagerank, spectral_radius_estimate};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::scores::ScoreVector;

/// Knobs for the sampling estimators.
#[derive(Clone, Copy, Debug)]
pub struct ApproxParams {
    /// Sample count for the fixed-budget estimators.
    pub samples: u64,
    pub seed: u64,
    /// Absolute error bound for the guarantee-driven estimator.
    pub epsilon: f64,
    /// Probability that the guarantee fails.
    pub delta: f64,
    /// Leading constant in the guarantee-driven sample-size formula.
    pub c: f64,
}

impl ApproxParams {
    /// Fixed sample budget; epsilon/delta keep defaults and are ignored by
    /// the fixed-budget estimators.
    pub fn with_samples(samples: u64, seed: u64) -> Self {
        ApproxParams {
            samples,
            seed,
            epsilon: 0.1,
            delta: 0.1,
            c: 0.5,
        }
    }

    /// Error guarantee; the estimator derives its own sample count.
    pub fn with_guarantee(epsilon: f64, delta: f64, seed: u64) -> Self {
        ApproxParams {
            samples: 0,
            seed,
            epsilon,
            delta,
            c: 0.5,
        }
    }
}

/// Knobs for the fixed-point iterations (PageRank, eigenvector, Katz).
#[derive(Clone, Copy, Debug)]
pub struct IterationParams {
    pub tolerance: f64,
    pub max_iterations: u64,
}

impl Default for IterationParams {
    fn default() -> Self {
        IterationParams {
            tolerance: 1e-9,
            max_iterations: 10_000,
        }
    }
}

/// Degree of every node as a score vector; out-degree on directed graphs.
pub fn degree_centrality(g: &Graph) -> ScoreVector {
    let values = (0..g.n()).map(|v| g.degree(v) as f64).collect();
    ScoreVector::new("degree", false, values)
}

/// How strongly a score concentrates on one node: the sum of gaps to the
/// maximum, normalized against the star graph for undirected degree (where
/// the star scores 1), left as a raw sum otherwise.
#[derive(Clone, Copy, Debug, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct Centralization {
    pub value: f64,
    pub normalized: bool,
}

pub fn centralization(scores: &ScoreVector, g: &Graph) -> Result<Centralization> {
    let n = g.n();
    if scores.values.len() as u64 != n {
        return Err(Error::bad_param("score vector length != node count"));
    }
    if n < 3 {
        return Err(Error::bad_param("centralization needs at least 3 nodes"));
    }
    let c_max = scores
        .values
        .iter()
        .copied()
        .fold(f64::NEG_INFINITY, f64::max);
    let sum: f64 = scores.values.iter().map(|&c| c_max - c).sum();
    if scores.measure == "degree" && !g.is_directed() {
        let nf = n as f64;
        Ok(Centralization {
            value: sum / ((nf - 1.0) * (nf - 2.0)),
            normalized: true,
        })
    } else {
        Ok(Centralization {
            value: sum,
            normalized: false,
        })
    }
}

/// Pearson correlation of a score across the endpoints of every edge, with
/// both orientations of each edge contributing a sample pair.
pub fn assortativity(scores: &ScoreVector, g: &Graph) -> Result<f64> {
    if scores.values.len() as u64 != g.n() {
        return Err(Error::bad_param("score vector length != node count"));
    }
    if g.m() == 0 {
        return Err(Error::NoEdges);
    }
    let x = &scores.values;
    let mut count = 0.0f64;
    let mut sum = 0.0f64;
    for (u, v, _) in g.edges() {
        sum += x[u as usize] + x[v as usize];
        count += 2.0;
    }
    let mean = sum / count;
    let mut var = 0.0f64;
    let mut cov = 0.0f64;
    for (u, v, _) in g.edges() {
        let a = x[u as usize] - mean;
        let b = x[v as usize] - mean;
        var += a * a + b * b;
        cov += 2.0 * a * b;
    }
    let scale = mean.abs().max(1.0);
    if var / count <= 1e-24 * scale * scale {
        return Err(Error::ZeroVariance {
            what: "endpoint scores",
        });
    }
    Ok(cov / var)
}
