//! Kernel timing harness: run selected kernels over selected graphs,
//! record the median wall time of a few repetitions, and emit CSV rows.
//! A kernel that fails on a graph produces a failure entry, never a CSV
//! row.

use crate::centrality::{
    betweenness_sampled, local_clustering, pagerank, ApproxParams, IterationParams,
};
use crate::community::{plm, plp, PlmConfig};
use crate::decomposition::{connected_components, core_decomposition_park};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::traversal::bfs;
use serde::Serialize;
use std::io::Write;
use std::str::FromStr;
use std::time::Instant;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BenchKernel {
    Bfs,
    Components,
    Cores,
    Pagerank,
    Clustering,
    Betweenness,
    Plm,
    Plp,
}

impl BenchKernel {
    pub const ALL: [BenchKernel; 8] = [
        BenchKernel::Bfs,
        BenchKernel::Components,
        BenchKernel::Cores,
        BenchKernel::Pagerank,
        BenchKernel::Clustering,
        BenchKernel::Betweenness,
        BenchKernel::Plm,
        BenchKernel::Plp,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BenchKernel::Bfs => "bfs",
            BenchKernel::Components => "components",
            BenchKernel::Cores => "cores",
            BenchKernel::Pagerank => "pagerank",
            BenchKernel::Clustering => "clustering",
            BenchKernel::Betweenness => "betweenness",
            BenchKernel::Plm => "plm",
            BenchKernel::Plp => "plp",
        }
    }
}

impl FromStr for BenchKernel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BenchKernel::ALL
            .iter()
            .copied()
            .find(|k| k.name() == s.to_ascii_lowercase())
            .ok_or_else(|| Error::bad_param(format!("unknown kernel '{s}'")))
    }
}

/// A graph under benchmark, with the label used in the CSV.
pub struct GraphSource {
    pub name: String,
    pub graph: Graph,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BenchRecord {
    pub kernel: String,
    pub graph: String,
    pub n: u64,
    pub m: u64,
    pub threads: usize,
    pub seconds: f64,
    pub edges_per_second: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchFailure {
    pub kernel: String,
    pub graph: String,
    pub error: String,
}

fn run_kernel(kernel: BenchKernel, g: &Graph, threads: usize, seed: u64) -> Result<()> {
    match kernel {
        BenchKernel::Bfs => {
            bfs(g, 0)?;
        }
        BenchKernel::Components => {
            connected_components(g)?;
        }
        BenchKernel::Cores => {
            core_decomposition_park(g, threads)?;
        }
        BenchKernel::Pagerank => {
            pagerank(g, 0.85, &IterationParams::default())?;
        }
        BenchKernel::Clustering => {
            local_clustering(g)?;
        }
        BenchKernel::Betweenness => {
            let params = ApproxParams::with_samples(16.min(g.n()), seed);
            betweenness_sampled(g, &params, true)?;
        }
        BenchKernel::Plm => {
            plm(g, &PlmConfig { seed, ..PlmConfig::default() })?;
        }
        BenchKernel::Plp => {
            plp(g, seed, None)?;
        }
    }
    Ok(())
}

fn median(mut xs: Vec<f64>) -> f64 {
    xs.sort_unstable_by(|a, b| a.total_cmp(b));
    let n = xs.len();
    if n % 2 == 1 {
        xs[n / 2]
    } else {
        0.5 * (xs[n / 2 - 1] + xs[n / 2])
    }
}

/// Time every kernel on every graph inside a pool of `threads` workers
/// (0 keeps the ambient pool). Each timing is the median over `reps`
/// runs.
pub fn run_benchmark(
    sources: &[GraphSource],
    kernels: &[BenchKernel],
    threads: usize,
    reps: u64,
    seed: u64,
) -> (Vec<BenchRecord>, Vec<BenchFailure>) {
    let reps = reps.max(1);
    let effective = if threads == 0 {
        rayon::current_num_threads()
    } else {
        threads
    };
    let work = || {
        let mut records = Vec::new();
        let mut failures = Vec::new();
        for src in sources {
            for &kernel in kernels {
                let mut times = Vec::with_capacity(reps as usize);
                let mut failed = None;
                for _ in 0..reps {
                    let start = Instant::now();
                    match run_kernel(kernel, &src.graph, effective, seed) {
                        Ok(()) => times.push(start.elapsed().as_secs_f64()),
                        Err(e) => {
                            failed = Some(e.to_string());
                            break;
                        }
                    }
                }
                match failed {
                    Some(error) => failures.push(BenchFailure {
                        kernel: kernel.name().into(),
                        graph: src.name.clone(),
                        error,
                    }),
                    None => {
                        let seconds = median(times).max(1e-12);
                        records.push(BenchRecord {
                            kernel: kernel.name().into(),
                            graph: src.name.clone(),
                            n: src.graph.n(),
                            m: src.graph.m(),
                            threads: effective,
                            seconds,
                            edges_per_second: src.graph.m() as f64 / seconds,
                        });
                    }
                }
            }
        }
        (records, failures)
    };
    if threads == 0 {
        work()
    } else {
        match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
            Ok(pool) => pool.install(work),
            Err(_) => work(),
        }
    }
}

/// Write records as CSV with the header
/// `kernel,graph,n,m,threads,seconds,edges_per_second`.
pub fn write_bench_csv<W: Write>(records: &[BenchRecord], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in records {
        w.serialize(r).map_err(io_like)?;
    }
    w.flush()?;
    Ok(())
}

fn io_like(e: csv::Error) -> Error {
    Error::Io(std::io::Error::new(std::io::ErrorKind::Other, e))
}
