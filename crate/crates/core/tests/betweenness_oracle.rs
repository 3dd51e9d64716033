//! Betweenness against brute force: exhaustive simple-path enumeration on
//! every small graph, closed-form values on trees, and estimator
//! guarantees against the exact kernel.

mod common;

use common::*;
use granite_core::centrality::{
    betweenness_epsilon, betweenness_exact, betweenness_sampled, ApproxParams,
};
use granite_core::{Graph, GraphBuilder};

fn assert_close(actual: &[f64], expected: &[f64], tol: f64, ctx: &str) {
    assert_eq!(actual.len(), expected.len(), "{ctx}");
    for (v, (a, e)) in actual.iter().zip(expected).enumerate() {
        assert!(
            (a - e).abs() <= tol,
            "{ctx}: node {v}: got {a}, oracle {e}"
        );
    }
}

#[test]
fn matches_enumeration_on_every_five_node_graph() {
    let pairs: Vec<(u64, u64)> = (0..5u64)
        .flat_map(|v| (0..v).map(move |u| (u, v)))
        .collect();
    assert_eq!(pairs.len(), 10);
    for mask in 0u32..1024 {
        let edges: Vec<(u64, u64)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::from_edges(5, &edges).unwrap();
        let weighted: Vec<(u64, u64, f64)> =
            edges.iter().map(|&(u, v)| (u, v, 1.0)).collect();
        let oracle = betweenness_by_enumeration(5, &weighted, false);
        let b = betweenness_exact(&g, false).unwrap();
        assert_close(&b.scores.values, &oracle, 1e-9, &format!("mask {mask}"));
    }
}

#[test]
fn matches_enumeration_on_weighted_graphs() {
    for seed in 0..30 {
        let (g, edges) = random_weighted_connected(7, 0.3, 1000 + seed);
        let oracle = betweenness_by_enumeration(7, &edges, false);
        let b = betweenness_exact(&g, false).unwrap();
        assert_close(&b.scores.values, &oracle, 1e-9, &format!("seed {seed}"));
    }
}

#[test]
fn matches_enumeration_on_directed_graphs() {
    for seed in 0..30 {
        let mut r = rng(7000 + seed);
        let mut arcs: Vec<(u64, u64, f64)> = Vec::new();
        for u in 0..6u64 {
            for v in 0..6u64 {
                if u != v && rand::Rng::gen::<f64>(&mut r) < 0.3 {
                    arcs.push((u, v, 1.0));
                }
            }
        }
        let mut b = GraphBuilder::new(6).directed(true);
        for &(u, v, _) in &arcs {
            b.add_edge(u, v).unwrap();
        }
        let g = b.build().unwrap();
        let oracle = betweenness_by_enumeration(6, &arcs, true);
        let got = betweenness_exact(&g, false).unwrap();
        assert_close(&got.scores.values, &oracle, 1e-9, &format!("seed {seed}"));
    }
}

#[test]
fn tree_values_follow_component_split_formula() {
    // On a tree, removing v leaves components of sizes C_1..C_k, and the
    // ordered pairs routed through v number (n-1)^2 - sum C_i^2.
    let mut r = rng(42);
    for case in 0..10 {
        let n: usize = 200;
        let seq: Vec<u64> = (0..n - 2)
            .map(|_| rand::Rng::gen_range(&mut r, 0..n as u64))
            .collect();
        let edges = prufer_tree(&seq);
        let g = Graph::from_edges(n as u64, &edges).unwrap();
        let b = betweenness_exact(&g, false).unwrap();
        for v in 0..n as u64 {
            let mut uf = UnionFind::new(n);
            for &(x, y) in &edges {
                if x != v && y != v {
                    uf.union(x as usize, y as usize);
                }
            }
            let mut sizes = std::collections::HashMap::new();
            for u in 0..n {
                if u as u64 != v {
                    *sizes.entry(uf.find(u)).or_insert(0u64) += 1;
                }
            }
            let expect = ((n - 1) * (n - 1)) as f64
                - sizes.values().map(|&c| (c * c) as f64).sum::<f64>();
            assert!(
                (b.scores.values[v as usize] - expect).abs() < 1e-6,
                "case {case} node {v}: got {}, formula {expect}",
                b.scores.values[v as usize]
            );
        }
    }
}

#[test]
fn full_sample_count_reproduces_exact_scores() {
    for seed in 0..5 {
        let g = random_connected(30, 0.1, 300 + seed);
        let exact = betweenness_exact(&g, true).unwrap();
        let sampled =
            betweenness_sampled(&g, &ApproxParams::with_samples(30, seed), true).unwrap();
        assert_close(
            &sampled.scores.values,
            &exact.scores.values,
            1e-9,
            &format!("seed {seed}"),
        );
    }
}

#[test]
fn sampled_estimator_tracks_exact_on_average() {
    let g = random_connected(120, 0.05, 11);
    let exact = betweenness_exact(&g, true).unwrap();
    let sampled = betweenness_sampled(&g, &ApproxParams::with_samples(60, 5), true).unwrap();
    let top_exact = exact.scores.argmax().unwrap();
    // The strongest hub should stay in the sampled top ranks.
    let top10: Vec<u64> = sampled.scores.top_k(10).iter().map(|&(v, _)| v).collect();
    assert!(
        top10.contains(&top_exact),
        "exact argmax {top_exact} missing from sampled top-10 {top10:?}"
    );
}

#[test]
fn epsilon_guarantee_holds_against_exact() {
    let g = random_connected(60, 0.08, 21);
    let n = 60.0f64;
    let exact = betweenness_exact(&g, false).unwrap();
    let truth: Vec<f64> = exact
        .scores
        .values
        .iter()
        .map(|b| b / (n * (n - 1.0)))
        .collect();
    let eps = 0.05;
    let approx = betweenness_epsilon(&g, &ApproxParams::with_guarantee(eps, 0.1, 3)).unwrap();
    assert!(approx.samples.unwrap() > 0);
    assert!(approx.vd_estimate.is_some());
    let worst = approx
        .scores
        .values
        .iter()
        .zip(&truth)
        .map(|(a, t)| (a - t).abs())
        .fold(0.0f64, f64::max);
    assert!(worst <= eps, "worst deviation {worst} exceeds epsilon {eps}");
}

#[test]
fn scores_commute_with_relabeling() {
    for seed in 0..10 {
        let g = random_connected(25, 0.15, 500 + seed);
        let perm = random_permutation(25, 600 + seed);
        let h = relabel(&g, &perm);
        let bg = betweenness_exact(&g, true).unwrap();
        let bh = betweenness_exact(&h, true).unwrap();
        for v in 0..25usize {
            let mapped = perm[v] as usize;
            assert!(
                (bg.scores.values[v] - bh.scores.values[mapped]).abs() < 1e-9,
                "seed {seed}: node {v} -> {mapped}"
            );
        }
    }
}
