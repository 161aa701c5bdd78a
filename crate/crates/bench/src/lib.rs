//! Deterministic inputs for the benchmarks.

use connfactor_core::families::circulant;
use connfactor_core::{DegreeSpec, Graph};

/// `C_n(1, 2, .., k)`, a connected `2k`-regular graph.
pub fn ring(n: usize, k: usize) -> Graph {
    let offsets: Vec<usize> = (1..=k).collect();
    circulant(n, &offsets)
}

/// `ring(n, k)` with weights `1 + (7e mod 31)` on edge `e`.
pub fn weighted_ring(n: usize, k: usize) -> Graph {
    let g = ring(n, k);
    let w = (0..g.edge_count()).map(|e| 1 + (7 * e as i64) % 31).collect();
    g.with_weights(w).expect("one weight per edge")
}

pub fn uniform(g: &Graph, d: usize) -> DegreeSpec {
    DegreeSpec::uniform(g.vertex_count(), d)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures() {
        let g = ring(10, 2);
        assert!(g.is_connected());
        assert!((0..10).all(|v| g.degree(v) == 4));
        let w = weighted_ring(10, 2);
        assert!(w.is_weighted() && w.edge_count() == 20);
    }
}
