//! Core decomposition against naive peeling, components against
//! union-find, and the parallel peeler against the sequential one.

mod common;

use common::*;
use granite_core::decomposition::{
    connected_components, core_decomposition_park, core_decomposition_seq, is_connected,
};

#[test]
fn sequential_cores_match_naive_peeling() {
    for seed in 0..40 {
        let edges = random_edges(50, 0.08, 900 + seed);
        let g = graph_from(50, &edges);
        let oracle = naive_cores(50, &edges);
        let d = core_decomposition_seq(&g).unwrap();
        assert_eq!(d.core_number, oracle, "seed {seed}");
        assert_eq!(d.max_core, oracle.iter().copied().max().unwrap(), "seed {seed}");
    }
}

#[test]
fn parallel_cores_match_naive_peeling_across_worker_counts() {
    for seed in 0..15 {
        let edges = random_edges(60, 0.1, 950 + seed);
        let g = graph_from(60, &edges);
        let oracle = naive_cores(60, &edges);
        for threads in [1, 2, 4] {
            let d = core_decomposition_park(&g, threads).unwrap();
            assert_eq!(d.core_number, oracle, "seed {seed} threads {threads}");
        }
    }
}

#[test]
fn cores_are_invariant_under_relabeling() {
    for seed in 0..10 {
        let g = random_connected(40, 0.1, 980 + seed);
        let perm = random_permutation(40, 990 + seed);
        let h = relabel(&g, &perm);
        let dg = core_decomposition_seq(&g).unwrap();
        let dh = core_decomposition_seq(&h).unwrap();
        for v in 0..40usize {
            assert_eq!(
                dg.core_number[v],
                dh.core_number[perm[v] as usize],
                "seed {seed} node {v}"
            );
        }
    }
}

#[test]
fn components_match_union_find() {
    for seed in 0..40 {
        let edges = random_edges(45, 0.05, 1100 + seed);
        let g = graph_from(45, &edges);
        let p = connected_components(&g).unwrap();
        let mut uf = UnionFind::new(45);
        for &(u, v) in &edges {
            uf.union(u as usize, v as usize);
        }
        // Same blocks: two nodes share a component id iff union-find
        // agrees.
        for a in 0..45usize {
            for b in 0..45usize {
                let lib_same = p.subset_of(a as u64) == p.subset_of(b as u64);
                let uf_same = uf.find(a) == uf.find(b);
                assert_eq!(lib_same, uf_same, "seed {seed} pair ({a}, {b})");
            }
        }
        let roots: std::collections::HashSet<usize> = (0..45).map(|v| uf.find(v)).collect();
        assert_eq!(p.subset_count() as usize, roots.len(), "seed {seed}");
        assert_eq!(is_connected(&g).unwrap(), roots.len() == 1, "seed {seed}");
    }
}

#[test]
fn component_ids_do_not_depend_on_edge_order() {
    for seed in 0..10 {
        let edges = random_edges(30, 0.07, 1200 + seed);
        let mut reversed = edges.clone();
        reversed.reverse();
        let a = connected_components(&graph_from(30, &edges)).unwrap();
        let b = connected_components(&graph_from(30, &reversed)).unwrap();
        assert_eq!(a.as_slice(), b.as_slice(), "seed {seed}");
    }
}

#[test]
fn shells_partition_matches_core_numbers() {
    let edges = random_edges(80, 0.06, 77);
    let g = graph_from(80, &edges);
    let d = core_decomposition_seq(&g).unwrap();
    let shells = d.shells();
    for v in 0..80u64 {
        assert_eq!(shells.subset_of(v), d.core_number[v as usize]);
    }
}
