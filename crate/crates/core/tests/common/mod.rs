//! Oracle implementations shared by the integration tests. Everything in
//! here is written independently of the library internals: brute-force
//! enumeration, Floyd-Warshall, naive peeling, union-find, and friends.

#![allow(dead_code)]

use granite_core::{Graph, GraphBuilder};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub const ORACLE_INF: f64 = 1e18;

/// All-pairs shortest path lengths by Floyd-Warshall over edge weights
/// (1.0 for unweighted edges). `ORACLE_INF` marks unreachable pairs.
pub fn floyd_warshall(n: usize, edges: &[(u64, u64, f64)], directed: bool) -> Vec<Vec<f64>> {
    let mut d = vec![vec![ORACLE_INF; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = 0.0;
    }
    for &(u, v, w) in edges {
        let (u, v) = (u as usize, v as usize);
        if w < d[u][v] {
            d[u][v] = w;
        }
        if !directed && w < d[v][u] {
            d[v][u] = w;
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = d[i][k] + d[k][j];
                if via < d[i][j] {
                    d[i][j] = via;
                }
            }
        }
    }
    d
}

/// Betweenness by exhaustive simple-path enumeration: for every ordered
/// pair (s, t), find all minimum-weight paths and count, per interior
/// node, the fraction of them passing through it. Only sane for n <= 8.
pub fn betweenness_by_enumeration(
    n: usize,
    edges: &[(u64, u64, f64)],
    directed: bool,
) -> Vec<f64> {
    let mut adj = vec![Vec::new(); n];
    for &(u, v, w) in edges {
        adj[u as usize].push((v as usize, w));
        if !directed {
            adj[v as usize].push((u as usize, w));
        }
    }

    struct Dfs<'a> {
        adj: &'a [Vec<(usize, f64)>],
        target: usize,
        visited: Vec<bool>,
        path: Vec<usize>,
        best: f64,
        // (interior visit counts, path count) at the current best length
        through: Vec<f64>,
        count: f64,
    }

    impl Dfs<'_> {
        fn explore(&mut self, v: usize, len: f64) {
            if len > self.best + 1e-9 {
                return;
            }
            if v == self.target {
                if len < self.best - 1e-9 {
                    self.best = len;
                    self.count = 0.0;
                    self.through.iter_mut().for_each(|x| *x = 0.0);
                }
                if (len - self.best).abs() <= 1e-9 {
                    self.count += 1.0;
                    for &w in &self.path[1..] {
                        self.through[w] += 1.0;
                    }
                }
                return;
            }
            for i in 0..self.adj[v].len() {
                let (u, w) = self.adj[v][i];
                if !self.visited[u] {
                    self.visited[u] = true;
                    self.path.push(u);
                    self.explore(u, len + w);
                    self.path.pop();
                    self.visited[u] = false;
                }
            }
        }
    }

    let mut scores = vec![0.0; n];
    for s in 0..n {
        for t in 0..n {
            if s == t {
                continue;
            }
            let mut dfs = Dfs {
                adj: &adj,
                target: t,
                visited: vec![false; n],
                path: vec![s],
                best: ORACLE_INF,
                through: vec![0.0; n],
                count: 0.0,
            };
            dfs.visited[s] = true;
            dfs.explore(s, 0.0);
            if dfs.count > 0.0 {
                for v in 0..n {
                    if v != s && v != t {
                        scores[v] += dfs.through[v] / dfs.count;
                    }
                }
            }
        }
    }
    scores
}

pub struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub fn find(&mut self, v: usize) -> usize {
        if self.parent[v] != v {
            let root = self.find(self.parent[v]);
            self.parent[v] = root;
        }
        self.parent[v]
    }

    pub fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}

/// Core numbers by the textbook definition: repeatedly strip minimum
/// degree vertices, never decreasing the peel level.
pub fn naive_cores(n: usize, edges: &[(u64, u64)]) -> Vec<u64> {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u as usize].push(v as usize);
        adj[v as usize].push(u as usize);
    }
    let mut deg: Vec<usize> = adj.iter().map(|a| a.len()).collect();
    let mut alive = vec![true; n];
    let mut core = vec![0u64; n];
    let mut remaining = n;
    let mut level = 0u64;
    while remaining > 0 {
        loop {
            let next = (0..n).find(|&v| alive[v] && deg[v] as u64 <= level);
            match next {
                Some(v) => {
                    alive[v] = false;
                    core[v] = level;
                    remaining -= 1;
                    for &u in &adj[v] {
                        if alive[u] {
                            deg[u] -= 1;
                        }
                    }
                }
                None => break,
            }
        }
        level += 1;
    }
    core
}

/// Labeled tree from a Prüfer sequence over nodes `0..seq.len() + 2`.
pub fn prufer_tree(seq: &[u64]) -> Vec<(u64, u64)> {
    let n = seq.len() + 2;
    let mut degree = vec![1u64; n];
    for &v in seq {
        degree[v as usize] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut used = vec![false; n];
    for &v in seq {
        let leaf = (0..n).find(|&u| degree[u] == 1 && !used[u]).unwrap();
        edges.push((leaf as u64, v));
        used[leaf] = true;
        degree[v as usize] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&u| !used[u] && degree[u] == 1).collect();
    assert_eq!(rest.len(), 2);
    edges.push((rest[0] as u64, rest[1] as u64));
    edges
}

/// Erdős–Gallai test: `d` (any order) is the degree sequence of some
/// simple graph iff the sum is even and every prefix bound holds.
pub fn erdos_gallai(d: &[u64]) -> bool {
    let mut d: Vec<u64> = d.to_vec();
    d.sort_unstable_by(|a, b| b.cmp(a));
    let sum: u64 = d.iter().sum();
    if sum % 2 != 0 {
        return false;
    }
    let n = d.len();
    for k in 1..=n {
        let lhs: u64 = d[..k].iter().sum();
        let rhs: u64 = (k * (k - 1)) as u64
            + d[k..]
                .iter()
                .map(|&x| x.min(k as u64))
                .sum::<u64>();
        if lhs > rhs {
            return false;
        }
    }
    true
}

/// Seeded simple undirected G(n, p) edge list (oracle-side sampler,
/// unrelated to the library generators).
pub fn random_edges(n: u64, p: f64, seed: u64) -> Vec<(u64, u64)> {
    let mut r = rng(seed);
    let mut edges = Vec::new();
    for v in 1..n {
        for u in 0..v {
            if r.gen::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    edges
}

pub fn graph_from(n: u64, edges: &[(u64, u64)]) -> Graph {
    Graph::from_edges(n, edges).unwrap()
}

/// Random connected undirected graph: a random spanning tree plus extra
/// G(n, p) edges.
pub fn random_connected(n: u64, extra_p: f64, seed: u64) -> Graph {
    let mut r = rng(seed);
    let mut edges: Vec<(u64, u64)> = Vec::new();
    for v in 1..n {
        let u = r.gen_range(0..v);
        edges.push((u, v));
    }
    for v in 1..n {
        for u in 0..v {
            if r.gen::<f64>() < extra_p && !edges.contains(&(u, v)) {
                edges.push((u, v));
            }
        }
    }
    graph_from(n, &edges)
}

/// Random weighted connected graph with small integer weights (exact in
/// f64, so shortest-path ties are honest ties).
pub fn random_weighted_connected(n: u64, extra_p: f64, seed: u64) -> (Graph, Vec<(u64, u64, f64)>) {
    let mut r = rng(seed);
    let mut edges: Vec<(u64, u64, f64)> = Vec::new();
    for v in 1..n {
        let u = r.gen_range(0..v);
        edges.push((u, v, r.gen_range(1..=4) as f64));
    }
    for v in 1..n {
        for u in 0..v {
            if r.gen::<f64>() < extra_p && !edges.iter().any(|&(a, b, _)| (a, b) == (u, v)) {
                edges.push((u, v, r.gen_range(1..=4) as f64));
            }
        }
    }
    let g = Graph::from_weighted_edges(n, &edges).unwrap();
    (g, edges)
}

/// Relabel an undirected graph by a permutation (new id of v is perm[v]).
pub fn relabel(g: &Graph, perm: &[u64]) -> Graph {
    let mut b = GraphBuilder::new(g.n()).weighted(g.is_weighted());
    for (u, v, w) in g.edges() {
        if g.is_weighted() {
            b.add_weighted_edge(perm[u as usize], perm[v as usize], w).unwrap();
        } else {
            b.add_edge(perm[u as usize], perm[v as usize]).unwrap();
        }
    }
    b.build().unwrap()
}

pub fn random_permutation(n: u64, seed: u64) -> Vec<u64> {
    let mut r = rng(seed);
    let mut perm: Vec<u64> = (0..n).collect();
    for i in (1..n as usize).rev() {
        let j = r.gen_range(0..=i);
        perm.swap(i, j);
    }
    perm
}
