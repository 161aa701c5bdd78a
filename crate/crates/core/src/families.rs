//! Small named graphs used by tests, benchmarks and the CLI.

use crate::graph::{Graph, Vertex};

fn build(n: usize, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Graph {
    Graph::new(n, edges).expect("family constructions are simple graphs")
}

/// The cycle `0-1-...-(n-1)-0`. Edge `i` joins `i` and `i+1 mod n`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "a cycle needs at least three vertices");
    build(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn path(n: usize) -> Graph {
    build(n, (1..n).map(|i| (i - 1, i)))
}

/// Complete graph, edges in lexicographic order of `(u, v)`.
pub fn complete(n: usize) -> Graph {
    build(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// `K_{a,b}` with sides `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    build(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
}

/// The star `K_{1,leaves}` centred at vertex 0.
pub fn star(leaves: usize) -> Graph {
    build(leaves + 1, (1..=leaves).map(|v| (0, v)))
}

/// Triangular prism: triangles `{0,1,2}` (edges 0..3) and `{3,4,5}`
/// (edges 3..6) joined by the matching `0-3, 1-4, 2-5` (edges 6..9).
pub fn prism() -> Graph {
    build(
        6,
        [
            (0, 1),
            (1, 2),
            (0, 2),
            (3, 4),
            (4, 5),
            (3, 5),
            (0, 3),
            (1, 4),
            (2, 5),
        ],
    )
}

/// The prism with triangle edges weighing `triangle` and matching edges
/// weighing `matching`.
pub fn weighted_prism(triangle: i64, matching: i64) -> Graph {
    let weights = (0..9).map(|e| if e < 6 { triangle } else { matching }).collect();
    prism().with_weights(weights).expect("non-negative weights")
}

/// Two vertex-disjoint triangles `{0,1,2}` and `{3,4,5}`.
pub fn two_triangles() -> Graph {
    build(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
}

/// The Petersen graph: outer 5-cycle `0..5`, spokes `i-(i+5)`, inner
/// pentagram on `5..10`.
pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    build(10, outer.chain(spokes).chain(inner))
}

/// Circulant graph on `n` vertices joining `i` and `i + s mod n` for every
/// offset `s`. Offsets must lie in `1..=n/2`; the offset `n/2` (even `n`)
/// contributes a perfect matching.
pub fn circulant(n: usize, offsets: &[usize]) -> Graph {
    let mut edges = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for &s in offsets {
        assert!(s >= 1 && s <= n / 2, "offset {s} out of range for n = {n}");
        for i in 0..n {
            let j = (i + s) % n;
            let key = (i.min(j), i.max(j));
            if seen.insert(key) {
                edges.push(key);
            }
        }
    }
    build(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        assert_eq!(prism().edge_count(), 9);
        assert_eq!(petersen().edge_count(), 15);
        assert!(petersen().degrees().iter().all(|&d| d == 3));
        assert_eq!(complete(5).edge_count(), 10);
        assert_eq!(complete_bipartite(3, 3).edge_count(), 9);
        assert_eq!(circulant(8, &[1, 2, 4]).edge_count(), 8 + 8 + 4);
        assert!(circulant(9, &[1, 3]).degrees().iter().all(|&d| d == 4));
    }
}
