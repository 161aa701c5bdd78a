//! Generators and brute-force references shared by the integration tests.
#![allow(dead_code)]

use std::collections::HashSet;

use connfactor_core::{DegreeSpec, Graph, Weight};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// G(n, p) with shuffled edge order.
pub fn gnp(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    edges.shuffle(rng);
    Graph::new(n, edges).unwrap()
}

pub fn connected_gnp(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    loop {
        let g = gnp(rng, n, p);
        if g.is_connected() {
            return g;
        }
    }
}

pub fn with_random_weights(rng: &mut impl Rng, g: Graph, lo: Weight, hi: Weight) -> Graph {
    let w = (0..g.edge_count()).map(|_| rng.gen_range(lo..=hi)).collect();
    g.with_weights(w).unwrap()
}

/// Uniform `f(v)` in `lo(v)..=d(v)`, redrawn until the sum is even.
pub fn random_f(rng: &mut impl Rng, g: &Graph, lo: impl Fn(usize) -> usize) -> Option<DegreeSpec> {
    let n = g.vertex_count();
    if (0..n).any(|v| lo(v) > g.degree(v)) {
        return None;
    }
    loop {
        let f: Vec<usize> = (0..n).map(|v| rng.gen_range(lo(v)..=g.degree(v))).collect();
        if f.iter().sum::<usize>() % 2 == 0 {
            return Some(DegreeSpec::new(f));
        }
    }
}

fn adjacency(g: &Graph) -> Vec<u32> {
    let mut adj = vec![0u32; g.vertex_count()];
    for &(u, v) in g.edges() {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    adj
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: u32, n: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for v in 0..n {
            if used >> v & 1 == 0 {
                prefix.push(v);
                go(prefix, used | 1 << v, n, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), 0, n, &mut out);
    out
}

fn canonical(adj: &[u32], perms: &[Vec<usize>]) -> u64 {
    let n = adj.len();
    perms
        .iter()
        .map(|p| {
            let mut code = 0u64;
            for i in 0..n {
                for j in i + 1..n {
                    code = code << 1 | u64::from(adj[p[i]] >> p[j] & 1);
                }
            }
            code
        })
        .max()
        .unwrap_or(0)
}

fn from_adjacency(adj: &[u32]) -> Graph {
    let n = adj.len();
    let edges = (0..n).flat_map(|u| (u + 1..n).filter(move |&v| adj[u] >> v & 1 == 1).map(move |v| (u, v)));
    Graph::new(n, edges).unwrap()
}

/// One representative per isomorphism class of connected graphs on
/// `1..=max_n` vertices, grouped by order.
///
/// Every connected graph has a vertex whose removal keeps it connected, so
/// class `n` is reached by attaching a new vertex to a class-`n - 1` graph.
pub fn connected_graphs_up_to(max_n: usize) -> Vec<Vec<Graph>> {
    let mut levels: Vec<Vec<Vec<u32>>> = vec![vec![vec![0]]];
    for n in 2..=max_n {
        let perms = permutations(n);
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for base in &levels[n - 2] {
            for nbrs in 1u32..1 << (n - 1) {
                let mut adj = base.clone();
                adj.push(nbrs);
                for (u, row) in adj.iter_mut().enumerate().take(n - 1) {
                    if nbrs >> u & 1 == 1 {
                        *row |= 1 << (n - 1);
                    }
                }
                if seen.insert(canonical(&adj, &perms)) {
                    next.push(adj);
                }
            }
        }
        levels.push(next);
    }
    levels.iter().map(|level| level.iter().map(|a| from_adjacency(a)).collect()).collect()
}

/// Degree vectors of all connected spanning subgraphs with every degree at
/// least `min_degree`.
pub fn connected_degree_profiles(g: &Graph, min_degree: usize) -> HashSet<Vec<u8>> {
    let n = g.vertex_count();
    let m = g.edge_count();
    assert!(n <= 16 && m < 32);
    let edges = g.edges();
    let mut adj = vec![0u32; n];
    let mut deg = vec![0u8; n];
    let mut out = HashSet::new();
    // Gray code: step i toggles edge trailing_zeros(i).
    for i in 0u64..1 << m {
        if i > 0 {
            let e = i.trailing_zeros() as usize;
            let (u, v) = edges[e];
            adj[u] ^= 1 << v;
            adj[v] ^= 1 << u;
            if adj[u] >> v & 1 == 1 {
                deg[u] += 1;
                deg[v] += 1;
            } else {
                deg[u] -= 1;
                deg[v] -= 1;
            }
        }
        if deg.iter().all(|&d| d as usize >= min_degree) && mask_connected(&adj) {
            out.insert(deg.clone());
        }
    }
    out
}

fn mask_connected(adj: &[u32]) -> bool {
    let n = adj.len();
    if n == 0 {
        return true;
    }
    let full = (1u32 << n) - 1;
    let mut seen = 1u32;
    let mut frontier = 1u32;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let new = adj[v] & !seen;
        seen |= new;
        frontier |= new;
    }
    seen == full
}

/// Maximum matching size by subset dynamic programming.
pub fn brute_matching_size(g: &Graph) -> usize {
    let n = g.vertex_count();
    assert!(n <= 20);
    let adj = adjacency(g);
    let mut best = vec![0u8; 1 << n];
    for mask in 1usize..1 << n {
        let v = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << v);
        let mut b = best[rest];
        let mut nbrs = adj[v] as usize & rest;
        while nbrs != 0 {
            let u = nbrs.trailing_zeros() as usize;
            nbrs &= nbrs - 1;
            b = b.max(1 + best[rest & !(1 << u)]);
        }
        best[mask] = b;
    }
    best[(1 << n) - 1] as usize
}

/// Minimum weight of a perfect matching, if any.
pub fn brute_min_perfect_weight(g: &Graph) -> Option<Weight> {
    let n = g.vertex_count();
    assert!(n <= 20);
    let mut best: Vec<Option<Weight>> = vec![None; 1 << n];
    best[0] = Some(0);
    for mask in 1usize..1 << n {
        if mask.count_ones() % 2 == 1 {
            continue;
        }
        let v = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << v);
        let mut b: Option<Weight> = None;
        for &(u, e) in g.incident(v) {
            if rest >> u & 1 == 1 {
                if let Some(w) = best[rest & !(1 << u)] {
                    let w = w + g.weight(e).unwrap();
                    b = Some(b.map_or(w, |x| x.min(w)));
                }
            }
        }
        best[mask] = b;
    }
    best[(1 << n) - 1]
}
