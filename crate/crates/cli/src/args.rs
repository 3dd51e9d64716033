//! Command-line surface.

use clap::{Args, Parser, Subcommand};
use granite_core::io::GraphFileFormat;
use granite_core::profile::{BenchKernel, DetailLevel, MeasureKind};
use std::path::PathBuf;
use std::str::FromStr;

#[derive(Parser)]
#[command(
    name = "granite",
    version,
    about = "Profile, benchmark, and generate large sparse networks"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Build a statistical profile of a graph as HTML and JSON
    Profile(ProfileArgs),
    /// Time analytics kernels and report edges per second as CSV
    Bench(BenchArgs),
    /// Generate a random graph and write it to a file
    Generate(GenerateArgs),
}

#[derive(Args)]
pub struct ProfileArgs {
    /// Input graph file
    pub input: PathBuf,

    /// Input format; inferred from the file extension when omitted
    #[arg(long, value_parser = GraphFileFormat::from_str)]
    pub format: Option<GraphFileFormat>,

    /// Directory receiving profile.json and profile.html
    #[arg(long, default_value = ".")]
    pub out: PathBuf,

    /// How many measures to run
    #[arg(long, default_value = "default", value_parser = DetailLevel::from_str)]
    pub detail: DetailLevel,

    /// Seed for every sampled or randomized kernel
    #[arg(long, default_value_t = 1)]
    pub seed: u64,

    /// Worker threads (0 = all available cores)
    #[arg(long, default_value_t = 0)]
    pub threads: usize,

    /// Comma-separated measure list overriding --detail
    /// (degree, betweenness, closeness, pagerank, clustering, core,
    /// eigenvector, katz)
    #[arg(long, value_delimiter = ',', value_parser = MeasureKind::from_str)]
    pub measures: Option<Vec<MeasureKind>>,
}

#[derive(Args)]
pub struct BenchArgs {
    /// Comma-separated kernels to time (default: all)
    #[arg(long, value_delimiter = ',', value_parser = BenchKernel::from_str)]
    pub kernels: Option<Vec<BenchKernel>>,

    /// Comma-separated graph files to load
    #[arg(long, value_delimiter = ',')]
    pub graphs: Vec<PathBuf>,

    /// Generated graph spec `model:key=val,key=val`; repeatable
    #[arg(long)]
    pub generate: Vec<String>,

    /// Worker threads per run (0 = all available cores)
    #[arg(long, default_value_t = 0)]
    pub threads: usize,

    /// Repetitions per kernel/graph pair; the median time is kept
    #[arg(long, default_value_t = 3)]
    pub reps: u64,

    /// Write CSV here instead of stdout
    #[arg(long)]
    pub csv: Option<PathBuf>,

    /// Seed for generated graphs and sampled kernels
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
}

#[derive(Args)]
pub struct GenerateArgs {
    /// Model: erdos-renyi, planted-partition, barabasi-albert, rmat,
    /// hyperbolic
    pub model: String,

    /// Model parameters as key=val (e.g. n=1000 p=0.01)
    pub params: Vec<String>,

    /// Seed
    #[arg(long, default_value_t = 1)]
    pub seed: u64,

    /// Output file (.gml or .el/.edgelist/.txt); omit to print GML to
    /// stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
}
