//! Implementations behind the three subcommands.

use crate::args::{BenchArgs, GenerateArgs, ProfileArgs};
use crate::spec;
use granite_core::error::{Error, Result};
use granite_core::io::gml::write_gml;
use granite_core::io::{infer_format, read_graph, write_graph, GraphFileFormat};
use granite_core::profile::{
    build_profile, render_html, render_json, run_benchmark, write_bench_csv, BenchFailure,
    BenchKernel, GraphSource, ProfileConfig, ProfileReport, Section,
};
use std::fs;
use std::path::Path;

/// What a finished subcommand reports back to the exit-code mapping.
pub enum Outcome {
    Clean,
    /// Some sections or benchmark rows failed but output was produced.
    Partial,
}

fn format_for(path: &Path, explicit: Option<GraphFileFormat>) -> Result<GraphFileFormat> {
    match explicit.or_else(|| infer_format(path)) {
        Some(f) => Ok(f),
        None => Err(Error::bad_param(format!(
            "cannot infer a graph format from '{}'; pass --format gml|edgelist",
            path.display()
        ))),
    }
}

fn pin_global_pool(threads: usize) -> Result<()> {
    if threads == 0 {
        return Ok(());
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| Error::bad_param(format!("thread pool: {e}")))
}

fn section_error<T>(s: &Section<T>) -> Option<&str> {
    match s {
        Section::Ok { .. } => None,
        Section::Failed { error } => Some(error),
    }
}

fn failed_sections(report: &ProfileReport) -> Vec<(String, String)> {
    let mut out = Vec::new();
    let mut push = |name: &str, err: Option<&str>| {
        if let Some(e) = err {
            out.push((name.to_string(), e.to_string()));
        }
    };
    push("diameter", section_error(&report.global.diameter));
    for m in &report.measures {
        push(&m.name, section_error(&m.body));
    }
    push("correlations", section_error(&report.correlations));
    push("components", section_error(&report.partitions.components));
    push("communities", section_error(&report.partitions.communities));
    push("cores", section_error(&report.partitions.cores));
    out
}

pub fn run_profile(args: &ProfileArgs) -> Result<Outcome> {
    pin_global_pool(args.threads)?;
    let format = format_for(&args.input, args.format)?;
    let g = read_graph(&args.input, format)?;
    let cfg = ProfileConfig {
        detail: args.detail,
        seed: args.seed,
        measures: args.measures.clone(),
        ..ProfileConfig::default()
    };
    let report = build_profile(&g, &cfg);

    fs::create_dir_all(&args.out)?;
    let json_path = args.out.join("profile.json");
    let html_path = args.out.join("profile.html");
    fs::write(&json_path, render_json(&report))?;
    fs::write(&html_path, render_html(&report))?;
    println!(
        "profiled {} ({} nodes, {} edges) -> {}, {}",
        args.input.display(),
        g.n(),
        g.m(),
        json_path.display(),
        html_path.display()
    );

    let failed = failed_sections(&report);
    for (name, err) in &failed {
        eprintln!("granite: section '{name}' failed: {err}");
    }
    Ok(if failed.is_empty() {
        Outcome::Clean
    } else {
        Outcome::Partial
    })
}

pub fn run_bench(args: &BenchArgs) -> Result<Outcome> {
    let kernels: Vec<BenchKernel> = match &args.kernels {
        Some(list) => list.clone(),
        None => BenchKernel::ALL.to_vec(),
    };

    let mut sources = Vec::new();
    let mut failures: Vec<BenchFailure> = Vec::new();
    for path in &args.graphs {
        let name = path.display().to_string();
        match format_for(path, None).and_then(|f| read_graph(path, f)) {
            Ok(graph) => sources.push(GraphSource { name, graph }),
            Err(e) => failures.push(BenchFailure {
                kernel: "load".into(),
                graph: name,
                error: e.to_string(),
            }),
        }
    }
    for raw in &args.generate {
        let (model, pairs) = spec::parse_spec(raw)?;
        let graph = spec::build(&model, &pairs, args.seed)?;
        sources.push(GraphSource {
            name: raw.clone(),
            graph,
        });
    }
    if sources.is_empty() && failures.is_empty() {
        return Err(Error::bad_param(
            "nothing to benchmark: pass --graphs or --generate",
        ));
    }

    let (records, mut run_failures) =
        run_benchmark(&sources, &kernels, args.threads, args.reps, args.seed);
    failures.append(&mut run_failures);

    match &args.csv {
        Some(path) => {
            let file = fs::File::create(path)?;
            write_bench_csv(&records, file)?;
            println!(
                "benchmarked {} kernel/graph pairs -> {}",
                records.len(),
                path.display()
            );
        }
        None => write_bench_csv(&records, std::io::stdout().lock())?,
    }
    for f in &failures {
        eprintln!("granite: bench {} on {}: {}", f.kernel, f.graph, f.error);
    }
    if records.is_empty() {
        return Err(Error::bad_param("every benchmark run failed"));
    }
    Ok(if failures.is_empty() {
        Outcome::Clean
    } else {
        Outcome::Partial
    })
}

pub fn run_generate(args: &GenerateArgs) -> Result<Outcome> {
    let mut pairs = Vec::with_capacity(args.params.len());
    for token in &args.params {
        pairs.push(spec::parse_pair(token)?);
    }
    let g = spec::build(&args.model, &pairs, args.seed)?;
    match &args.out {
        Some(path) => {
            let format = format_for(path, None)?;
            write_graph(&g, path, format)?;
            println!(
                "wrote {} nodes, {} edges to {}",
                g.n(),
                g.m(),
                path.display()
            );
        }
        None => write_gml(&g, std::io::stdout().lock())?,
    }
    Ok(Outcome::Clean)
}
