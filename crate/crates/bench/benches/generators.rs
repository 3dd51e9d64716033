//! Micro-benchmarks for the graph generators and the file formats.

use criterion::{criterion_group, criterion_main, Criterion};
use granite_core::generators::{
    gen_barabasi_albert, gen_chung_lu, gen_erdos_renyi, gen_hyperbolic, gen_rmat,
    HyperbolicParams,
};
use granite_core::io::{parse_gml, read_edge_list, write_edge_list, write_gml};

fn bench_generators(c: &mut Criterion) {
    c.bench_function("erdos_renyi_4k", |b| {
        b.iter(|| gen_erdos_renyi(4_000, 0.002, 1).unwrap())
    });
    c.bench_function("barabasi_albert_4k", |b| {
        b.iter(|| gen_barabasi_albert(4_000, 4, 1).unwrap())
    });
    c.bench_function("rmat_12_8", |b| {
        b.iter(|| gen_rmat(12, 8, 0.57, 0.19, 0.19, 0.05, 1).unwrap())
    });
    let weights: Vec<f64> = (1..=4_000u64).map(|i| 1.0 + (i % 50) as f64).collect();
    c.bench_function("chung_lu_4k", |b| b.iter(|| gen_chung_lu(&weights, 1).unwrap()));
    let params = HyperbolicParams {
        n: 2_000,
        radius: 11.0,
        alpha: 0.75,
        seed: 1,
    };
    c.bench_function("hyperbolic_2k", |b| b.iter(|| gen_hyperbolic(&params).unwrap()));
}

fn bench_io(c: &mut Criterion) {
    let g = gen_erdos_renyi(2_000, 0.005, 7).unwrap();

    let mut gml = Vec::new();
    write_gml(&g, &mut gml).unwrap();
    let gml = String::from_utf8(gml).unwrap();
    c.bench_function("gml_write", |b| {
        b.iter(|| {
            let mut buf = Vec::new();
            write_gml(&g, &mut buf).unwrap();
            buf
        })
    });
    c.bench_function("gml_parse", |b| b.iter(|| parse_gml(&gml).unwrap()));

    let el_path = std::env::temp_dir().join("granite-bench-io.edges");
    let mut el = Vec::new();
    write_edge_list(&g, &mut el, false).unwrap();
    std::fs::write(&el_path, &el).unwrap();
    c.bench_function("edge_list_parse", |b| {
        b.iter(|| read_edge_list(&el_path, &Default::default()).unwrap())
    });
    let _ = std::fs::remove_file(&el_path);
}

criterion_group!(benches, bench_generators, bench_io);
criterion_main!(benches);
