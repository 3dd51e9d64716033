//! One-call graph profiling: runs a configurable set of centrality and
//! structure kernels over a graph and collects everything into a single
//! serializable report. Individual analyses that cannot run (directed
//! input for an undirected-only kernel, disconnected graph for the
//! diameter, and so on) fail as sections inside the report instead of
//! aborting the whole profile.

pub mod bench;
pub mod render;
pub mod stats;

pub use bench::{
    run_benchmark, write_bench_csv, BenchFailure, BenchKernel, BenchRecord, GraphSource,
};
pub use render::{parse_json, render_html, render_json};
pub use stats::{
    spearman, spearman_matrix, summarize, DistributionSummary, Histogram, SpearmanMatrix,
};

use crate::centrality::{
    assortativity, betweenness_exact, betweenness_sampled, centralization, closeness_exact,
    closeness_sampled, degree_centrality, eigenvector_centrality, katz_centrality,
    local_clustering, pagerank, spectral_radius_estimate, ApproxParams, Centralization,
    IterationParams,
};
use crate::community::{plm, PlmConfig};
use crate::decomposition::{connected_components, core_decomposition_seq};
use crate::distance::{diameter_ifub, DiameterMode, DiameterResult};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rng::substream;
use crate::scores::ScoreVector;
use rand::Rng;
use serde::{Deserialize, Serialize};
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DetailLevel {
    /// Degree only.
    Minimal,
    /// Degree, betweenness, closeness, pagerank, clustering, cores.
    Default,
    /// Everything in `Default` plus eigenvector and Katz.
    Full,
}

impl FromStr for DetailLevel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "minimal" => Ok(DetailLevel::Minimal),
            "default" => Ok(DetailLevel::Default),
            "full" => Ok(DetailLevel::Full),
            other => Err(Error::bad_param(format!("unknown detail level '{other}'"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MeasureKind {
    Degree,
    Betweenness,
    Closeness,
    Pagerank,
    Clustering,
    Core,
    Eigenvector,
    Katz,
}

impl MeasureKind {
    pub fn name(self) -> &'static str {
        match self {
            MeasureKind::Degree => "degree",
            MeasureKind::Betweenness => "betweenness",
            MeasureKind::Closeness => "closeness",
            MeasureKind::Pagerank => "pagerank",
            MeasureKind::Clustering => "clustering",
            MeasureKind::Core => "core",
            MeasureKind::Eigenvector => "eigenvector",
            MeasureKind::Katz => "katz",
        }
    }

    pub fn for_detail(detail: DetailLevel) -> Vec<MeasureKind> {
        use MeasureKind::*;
        match detail {
            DetailLevel::Minimal => vec![Degree],
            DetailLevel::Default => {
                vec![Degree, Betweenness, Closeness, Pagerank, Clustering, Core]
            }
            DetailLevel::Full => vec![
                Degree,
                Betweenness,
                Closeness,
                Pagerank,
                Clustering,
                Core,
                Eigenvector,
                Katz,
            ],
        }
    }
}

impl FromStr for MeasureKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "degree" => Ok(MeasureKind::Degree),
            "betweenness" => Ok(MeasureKind::Betweenness),
            "closeness" => Ok(MeasureKind::Closeness),
            "pagerank" => Ok(MeasureKind::Pagerank),
            "clustering" => Ok(MeasureKind::Clustering),
            "core" => Ok(MeasureKind::Core),
            "eigenvector" => Ok(MeasureKind::Eigenvector),
            "katz" => Ok(MeasureKind::Katz),
            other => Err(Error::bad_param(format!("unknown measure '{other}'"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct ProfileConfig {
    pub detail: DetailLevel,
    pub seed: u64,
    /// Explicit measure list; `None` derives one from `detail`.
    pub measures: Option<Vec<MeasureKind>>,
    /// Above this edge count, betweenness and closeness switch to their
    /// sampling estimators.
    pub approx_threshold_edges: u64,
    pub betweenness_samples: u64,
    pub closeness_pivots: u64,
    pub diameter_error_factor: f64,
    /// Size of the node sample that backs the scatter data.
    pub scatter_points: u64,
    pub top_k: usize,
}

impl Default for ProfileConfig {
    fn default() -> Self {
        ProfileConfig {
            detail: DetailLevel::Default,
            seed: 1,
            measures: None,
            approx_threshold_edges: 100_000,
            betweenness_samples: 42,
            closeness_pivots: 100,
            diameter_error_factor: 0.1,
            scatter_points: 2000,
            top_k: 10,
        }
    }
}

/// A report part that either produced data or failed with a message.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Section<T> {
    Ok { data: T },
    Failed { error: String },
}

impl<T> Section<T> {
    pub fn from_result(r: Result<T>) -> Self {
        match r {
            Ok(data) => Section::Ok { data },
            Err(e) => Section::Failed {
                error: e.to_string(),
            },
        }
    }

    pub fn ok(&self) -> Option<&T> {
        match self {
            Section::Ok { data } => Some(data),
            Section::Failed { .. } => None,
        }
    }

    pub fn is_failed(&self) -> bool {
        matches!(self, Section::Failed { .. })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NamedSection<T> {
    pub name: String,
    #[serde(flatten)]
    pub body: Section<T>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GlobalStats {
    pub nodes: u64,
    pub edges: u64,
    pub directed: bool,
    pub weighted: bool,
    pub self_loops: u64,
    /// Edge count over possible edge count; 0 for graphs with fewer than
    /// two nodes.
    pub density: f64,
    pub diameter: Section<DiameterResult>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TopEntry {
    pub node: u64,
    pub score: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MeasureReport {
    pub estimator: String,
    pub normalized: bool,
    pub summary: Option<DistributionSummary>,
    pub centralization: Section<Centralization>,
    pub assortativity: Section<f64>,
    pub top: Vec<TopEntry>,
    /// Values at `ProfileReport::scatter_nodes`, in the same order.
    pub scatter: Vec<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ComponentsInfo {
    pub count: u64,
    pub largest: u64,
    pub size_summary: Option<DistributionSummary>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CommunityInfo {
    pub count: u64,
    pub modularity: f64,
    pub size_summary: Option<DistributionSummary>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CoreInfo {
    pub max_core: u64,
    pub shell_count: u64,
    pub size_summary: Option<DistributionSummary>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PartitionsReport {
    pub components: Section<ComponentsInfo>,
    pub communities: Section<CommunityInfo>,
    pub cores: Section<CoreInfo>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ProfileReport {
    pub tool: String,
    pub version: String,
    pub detail: DetailLevel,
    pub seed: u64,
    pub global: GlobalStats,
    /// Node sample shared by every measure's scatter data.
    pub scatter_nodes: Vec<u64>,
    pub measures: Vec<NamedSection<MeasureReport>>,
    pub correlations: Section<SpearmanMatrix>,
    pub partitions: PartitionsReport,
}

impl ProfileReport {
    pub fn has_failures(&self) -> bool {
        self.global.diameter.is_failed()
            || self.measures.iter().any(|m| m.body.is_failed())
            || self.correlations.is_failed()
            || self.partitions.components.is_failed()
            || self.partitions.communities.is_failed()
            || self.partitions.cores.is_failed()
    }
}

fn density(g: &Graph) -> f64 {
    let n = g.n();
    if n < 2 {
        return 0.0;
    }
    let pairs = n as f64 * (n - 1) as f64;
    if g.is_directed() {
        g.m() as f64 / pairs
    } else {
        2.0 * g.m() as f64 / pairs
    }
}

fn compute_measure(g: &Graph, kind: MeasureKind, cfg: &ProfileConfig) -> Result<(ScoreVector, String)> {
    let sampled = g.m() > cfg.approx_threshold_edges;
    match kind {
        MeasureKind::Degree => Ok((degree_centrality(g), "exact".into())),
        MeasureKind::Betweenness => {
            if sampled {
                let s = cfg.betweenness_samples.min(g.n());
                let params = ApproxParams::with_samples(s, cfg.seed);
                let b = betweenness_sampled(g, &params, true)?;
                Ok((b.scores, format!("sampled ({s} sources)")))
            } else {
                let b = betweenness_exact(g, true)?;
                Ok((b.scores, "exact".into()))
            }
        }
        MeasureKind::Closeness => {
            if sampled {
                let s = cfg.closeness_pivots.min(g.n());
                let params = ApproxParams::with_samples(s, cfg.seed);
                Ok((closeness_sampled(g, &params)?, format!("sampled ({s} pivots)")))
            } else {
                Ok((closeness_exact(g)?, "exact".into()))
            }
        }
        MeasureKind::Pagerank => Ok((
            pagerank(g, 0.85, &IterationParams::default())?,
            "power iteration (d = 0.85)".into(),
        )),
        MeasureKind::Clustering => Ok((local_clustering(g)?, "exact".into())),
        MeasureKind::Core => {
            let d = core_decomposition_seq(g)?;
            let values = d.core_number.iter().map(|&c| c as f64).collect();
            Ok((ScoreVector::new("core", false, values), "exact".into()))
        }
        MeasureKind::Eigenvector => Ok((
            eigenvector_centrality(g, &IterationParams::default())?,
            "power iteration".into(),
        )),
        MeasureKind::Katz => {
            let lambda = spectral_radius_estimate(g, 100);
            if !(lambda > 0.0) {
                return Err(Error::bad_param("spectral radius estimate is zero"));
            }
            let alpha = 0.5 / lambda;
            Ok((
                katz_centrality(g, alpha, &IterationParams::default())?,
                format!("alpha = {alpha:.6}"),
            ))
        }
    }
}

fn sample_scatter_nodes(n: u64, want: u64, seed: u64) -> Vec<u64> {
    let take = want.min(n) as usize;
    let mut ids: Vec<u64> = (0..n).collect();
    let mut rng = substream(seed, 0xD15C);
    for i in 0..take {
        let j = i + rng.gen_range(0..ids.len() - i);
        ids.swap(i, j);
    }
    let mut sample = ids[..take].to_vec();
    sample.sort_unstable();
    sample
}

fn size_summary(sizes: impl Iterator<Item = u64>) -> Option<DistributionSummary> {
    let values: Vec<f64> = sizes.map(|s| s as f64).collect();
    summarize(&values)
}

fn components_info(g: &Graph) -> Result<ComponentsInfo> {
    let p = connected_components(g)?;
    let sizes = p.sizes();
    Ok(ComponentsInfo {
        count: sizes.len() as u64,
        largest: sizes.values().copied().max().unwrap_or(0),
        size_summary: size_summary(sizes.values().copied()),
    })
}

fn communities_info(g: &Graph, seed: u64) -> Result<CommunityInfo> {
    let cfg = PlmConfig {
        seed,
        ..PlmConfig::default()
    };
    let r = plm(g, &cfg)?;
    let sizes = r.partition.sizes();
    Ok(CommunityInfo {
        count: sizes.len() as u64,
        modularity: r.modularity,
        size_summary: size_summary(sizes.values().copied()),
    })
}

fn cores_info(g: &Graph) -> Result<CoreInfo> {
    let d = core_decomposition_seq(g)?;
    let shells = d.shells();
    let sizes = shells.sizes();
    Ok(CoreInfo {
        max_core: d.max_core,
        shell_count: sizes.len() as u64,
        size_summary: size_summary(sizes.values().copied()),
    })
}

/// Profile a graph. Always returns a report; parts that cannot be
/// computed come back as failed sections with the error message.
pub fn build_profile(g: &Graph, cfg: &ProfileConfig) -> ProfileReport {
    let diameter = Section::from_result(diameter_ifub(
        g,
        DiameterMode::Bounds {
            error_factor: cfg.diameter_error_factor,
        },
    ));
    let global = GlobalStats {
        nodes: g.n(),
        edges: g.m(),
        directed: g.is_directed(),
        weighted: g.is_weighted(),
        self_loops: g.self_loop_count(),
        density: density(g),
        diameter,
    };

    let scatter_nodes = sample_scatter_nodes(g.n(), cfg.scatter_points, cfg.seed);
    let kinds = cfg
        .measures
        .clone()
        .unwrap_or_else(|| MeasureKind::for_detail(cfg.detail));

    let mut measures = Vec::with_capacity(kinds.len());
    let mut correlate: Vec<(String, Vec<f64>)> = Vec::new();
    for kind in kinds {
        let body = match compute_measure(g, kind, cfg) {
            Ok((scores, estimator)) => {
                correlate.push((kind.name().to_string(), scores.values.clone()));
                let scatter = scatter_nodes
                    .iter()
                    .map(|&v| scores.values[v as usize])
                    .collect();
                let top = scores
                    .top_k(cfg.top_k)
                    .into_iter()
                    .map(|(node, score)| TopEntry { node, score })
                    .collect();
                Section::Ok {
                    data: MeasureReport {
                        estimator,
                        normalized: scores.normalized,
                        summary: summarize(&scores.values),
                        centralization: Section::from_result(centralization(&scores, g)),
                        assortativity: Section::from_result(assortativity(&scores, g)),
                        top,
                        scatter,
                    },
                }
            }
            Err(e) => Section::Failed {
                error: e.to_string(),
            },
        };
        measures.push(NamedSection {
            name: kind.name().to_string(),
            body,
        });
    }

    // With fewer than two scored measures there is nothing to correlate;
    // that is a property of the configuration, not a failure.
    let correlations = if correlate.len() < 2 {
        Section::Ok {
            data: SpearmanMatrix::default(),
        }
    } else {
        Section::from_result(spearman_matrix(&correlate))
    };

    let partitions = PartitionsReport {
        components: Section::from_result(components_info(g)),
        communities: Section::from_result(communities_info(g, cfg.seed)),
        cores: Section::from_result(cores_info(g)),
    };

    ProfileReport {
        tool: "granite".into(),
        version: env!("CARGO_PKG_VERSION").into(),
        detail: cfg.detail,
        seed: cfg.seed,
        global,
        scatter_nodes,
        measures,
        correlations,
        partitions,
    }
}
