//! Exhaustive ground truth for small instances.

use crate::graph::{DegreeSpec, FactorSubgraph, Graph, Weight};

/// Edge count above which enumeration is likely to be slow.
pub const ENUMERATION_SOFT_LIMIT: usize = 24;

/// Vertex count above which the Hamiltonian-cycle search is likely slow.
pub const HAMILTONIAN_SOFT_LIMIT: usize = 12;

/// Summary of all connected f-factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub exists: bool,
    /// The lightest connected f-factor (the first one found, weight 0, on
    /// unweighted graphs).
    pub best: Option<(FactorSubgraph, Weight)>,
    pub count: usize,
}

/// Streams every f-factor of `graph` (only connected ones if asked), each
/// exactly once.
///
/// Edges are decided in id order. An edge is taken only while both
/// endpoints still need degree, and skipped only while both endpoints keep
/// enough undecided edges to meet their remaining need.
pub fn enumerate_f_factors<'g>(graph: &'g Graph, f: &DegreeSpec, connected_only: bool) -> FFactors<'g> {
    let m = graph.edge_count();
    if m > ENUMERATION_SOFT_LIMIT {
        log::warn!("enumerating f-factors over {m} edges");
    }
    let n = graph.vertex_count();
    let need: Vec<usize> = (0..n).map(|v| f.values().get(v).copied().unwrap_or(0)).collect();
    let rem = graph.degrees();
    let feasible = f.len() == n && f.has_even_total() && (0..n).all(|v| need[v] <= rem[v]);
    FFactors {
        graph,
        connected_only,
        need,
        rem,
        taken: vec![false; m],
        stack: Vec::with_capacity(m),
        descending: true,
        done: !feasible,
    }
}

/// Iterator returned by [`enumerate_f_factors`].
#[derive(Debug, Clone)]
pub struct FFactors<'g> {
    graph: &'g Graph,
    connected_only: bool,
    need: Vec<usize>,
    rem: Vec<usize>,
    taken: Vec<bool>,
    /// Decision per decided edge: `true` = taken.
    stack: Vec<bool>,
    descending: bool,
    done: bool,
}

impl FFactors<'_> {
    fn can_take(&self, e: usize) -> bool {
        let (u, v) = self.graph.endpoints(e);
        self.need[u] > 0 && self.need[v] > 0
    }

    fn can_skip(&self, e: usize) -> bool {
        let (u, v) = self.graph.endpoints(e);
        self.rem[u] > self.need[u] && self.rem[v] > self.need[v]
    }

    fn decide(&mut self, e: usize, take: bool) {
        let (u, v) = self.graph.endpoints(e);
        for x in [u, v] {
            self.rem[x] -= 1;
            if take {
                self.need[x] -= 1;
            }
        }
        self.taken[e] = take;
        self.stack.push(take);
    }

    fn undo(&mut self) -> Option<(usize, bool)> {
        let take = self.stack.pop()?;
        let e = self.stack.len();
        let (u, v) = self.graph.endpoints(e);
        for x in [u, v] {
            self.rem[x] += 1;
            if take {
                self.need[x] += 1;
            }
        }
        self.taken[e] = false;
        Some((e, take))
    }

    /// Moves to the next complete assignment; false when exhausted.
    fn advance(&mut self) -> bool {
        let m = self.graph.edge_count();
        loop {
            if self.descending {
                let e = self.stack.len();
                if e == m {
                    self.descending = false;
                    return true;
                }
                if self.can_take(e) {
                    self.decide(e, true);
                } else if self.can_skip(e) {
                    self.decide(e, false);
                } else {
                    self.descending = false;
                }
            } else {
                match self.undo() {
                    None => return false,
                    Some((e, true)) if self.can_skip(e) => {
                        self.decide(e, false);
                        self.descending = true;
                    }
                    Some(_) => {}
                }
            }
        }
    }
}

impl Iterator for FFactors<'_> {
    type Item = FactorSubgraph;

    fn next(&mut self) -> Option<FactorSubgraph> {
        while !self.done {
            if !self.advance() {
                self.done = true;
                break;
            }
            let ids = (0..self.taken.len()).filter(|&e| self.taken[e]);
            let h = FactorSubgraph::from_edges(self.graph, ids).expect("edge ids of the host");
            if !self.connected_only || h.is_connected(self.graph) {
                return Some(h);
            }
        }
        None
    }
}

/// Folds over all connected f-factors, minimizing weight on weighted graphs.
pub fn brute_force_connected_f_factor(graph: &Graph, f: &DegreeSpec) -> OracleResult {
    let mut best: Option<(FactorSubgraph, Weight)> = None;
    let mut count = 0;
    for h in enumerate_f_factors(graph, f, true) {
        count += 1;
        let w = if graph.is_weighted() {
            h.weight(graph).expect("weighted host")
        } else {
            0
        };
        if best.as_ref().map_or(true, |(_, b)| w < *b) {
            best = Some((h, w));
        }
    }
    OracleResult {
        exists: count > 0,
        best,
        count,
    }
}

/// True iff `graph` has a cycle through all vertices. Subset dynamic
/// programming over paths that start at vertex 0.
pub fn has_hamiltonian_cycle(graph: &Graph) -> bool {
    let n = graph.vertex_count();
    if n < 3 {
        return false;
    }
    assert!(n <= 30, "Hamiltonian search on {n} vertices");
    if n > HAMILTONIAN_SOFT_LIMIT {
        log::warn!("Hamiltonian-cycle search on {n} vertices");
    }
    let adj: Vec<u32> = (0..n)
        .map(|v| graph.incident(v).iter().fold(0u32, |acc, &(u, _)| acc | 1 << u))
        .collect();
    // reach[mask]: endpoints of paths from 0 covering exactly `mask`.
    let full = (1usize << n) - 1;
    let mut reach = vec![0u32; 1 << n];
    reach[1] = 1;
    for mask in 1..=full {
        if mask & 1 == 0 || reach[mask] == 0 {
            continue;
        }
        let mut ends = reach[mask];
        while ends != 0 {
            let v = ends.trailing_zeros() as usize;
            ends &= ends - 1;
            let mut next = adj[v] & !(mask as u32);
            while next != 0 {
                let u = next.trailing_zeros() as usize;
                next &= next - 1;
                reach[mask | 1 << u] |= 1 << u;
            }
        }
    }
    reach[full] & adj[0] != 0
}
