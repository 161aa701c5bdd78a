//! f-factors through Tutte's gadget reduction to perfect matching.
//!
//! Each vertex `v` of `G` becomes `d(v)` *external* gadget vertices, one per
//! incident edge, plus `d(v) - f(v)` *internal* vertices joined to every
//! external vertex of `v`. Every edge `{u, v}` of `G` becomes one gadget edge
//! between the externals of `u` and `v` that stand for it. In a perfect
//! matching exactly `d(v) - f(v)` externals of `v` are absorbed by internals,
//! so the matched external-external edges are an f-factor, and every f-factor
//! arises this way.

use crate::error::{Error, Result};
use crate::graph::{DegreeSpec, EdgeId, FactorSubgraph, Graph, Vertex, Weight};
use crate::matching::{max_cardinality_matching, min_weight_perfect_matching, Matching};

/// The gadget graph of `(G, f)` and its map back to `G`.
///
/// Gadget edge `e < |E(G)|` is the external-external edge standing for edge
/// `e` of `G`; every later gadget edge is internal-external.
#[derive(Debug, Clone)]
pub struct TutteGadget {
    graph: Graph,
    original_edges: usize,
    externals: Vec<Vec<Vertex>>,
    internals: Vec<Vec<Vertex>>,
}

impl TutteGadget {
    /// Builds the gadget. In the weighted case external-external edges carry
    /// the weight of their original edge and internal-external edges weigh 0.
    pub fn build(graph: &Graph, f: &DegreeSpec, weighted: bool) -> Result<Self> {
        f.validate(graph)?;
        if weighted && !graph.is_weighted() {
            return Err(Error::MissingWeights);
        }
        let n = graph.vertex_count();
        let mut externals = Vec::with_capacity(n);
        let mut internals = Vec::with_capacity(n);
        let mut next = 0;
        for v in 0..n {
            let d = graph.degree(v);
            externals.push((next..next + d).collect::<Vec<_>>());
            next += d;
            internals.push((next..next + d - f.get(v)).collect::<Vec<_>>());
            next += d - f.get(v);
        }
        // Position of each edge in its endpoints' incidence lists.
        let mut slot = vec![[0usize; 2]; graph.edge_count()];
        for v in 0..n {
            for (i, &(_, e)) in graph.incident(v).iter().enumerate() {
                let side = usize::from(graph.endpoints(e).0 != v);
                slot[e][side] = i;
            }
        }
        let mut edges = Vec::new();
        let mut weights = Vec::new();
        for (e, &(u, v)) in graph.edges().iter().enumerate() {
            edges.push((externals[u][slot[e][0]], externals[v][slot[e][1]]));
            weights.push(graph.weight(e).unwrap_or(0));
        }
        for v in 0..n {
            for &x in &internals[v] {
                for &y in &externals[v] {
                    edges.push((x, y));
                    weights.push(0);
                }
            }
        }
        let mut gadget = Graph::new(next, edges)?;
        if weighted {
            gadget = gadget.with_weights(weights)?;
        }
        Ok(TutteGadget {
            graph: gadget,
            original_edges: graph.edge_count(),
            externals,
            internals,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// External gadget vertices of original vertex `v`, in the order of
    /// `v`'s incidence list.
    pub fn externals(&self, v: Vertex) -> &[Vertex] {
        &self.externals[v]
    }

    pub fn internals(&self, v: Vertex) -> &[Vertex] {
        &self.internals[v]
    }

    /// The original edge behind a gadget edge, `None` for internal edges.
    pub fn edge_of(&self, gadget_edge: EdgeId) -> Option<EdgeId> {
        (gadget_edge < self.original_edges).then_some(gadget_edge)
    }

    /// Reads the f-factor off a perfect matching of the gadget.
    pub fn factor_from(&self, original: &Graph, matching: &Matching) -> FactorSubgraph {
        let mut h = FactorSubgraph::empty(original);
        for &e in matching.edges() {
            if let Some(orig) = self.edge_of(e) {
                h.insert(original, orig);
            }
        }
        h
    }
}

/// Shared entry: `None` when `f` is trivially infeasible, the full graph when
/// `f` equals the degree sequence, otherwise a gadget matching.
fn solve(graph: &Graph, f: &DegreeSpec, weighted: bool) -> Result<Option<FactorSubgraph>> {
    f.check_length(graph)?;
    if weighted && !graph.is_weighted() {
        return Err(Error::MissingWeights);
    }
    if f.first_excess(graph).is_some() || !f.has_even_total() {
        return Ok(None);
    }
    if (0..graph.vertex_count()).all(|v| f.get(v) == graph.degree(v)) {
        return Ok(Some(FactorSubgraph::full(graph)));
    }
    let gadget = TutteGadget::build(graph, f, weighted)?;
    let matching = if weighted {
        min_weight_perfect_matching(gadget.graph())?
    } else {
        Some(max_cardinality_matching(gadget.graph())).filter(Matching::is_perfect)
    };
    Ok(matching.map(|m| gadget.factor_from(graph, &m)))
}

/// Some f-factor of `graph`, or `None` if there is none.
pub fn f_factor(graph: &Graph, f: &DegreeSpec) -> Result<Option<FactorSubgraph>> {
    solve(graph, f, false)
}

/// A minimum-weight f-factor of a weighted graph.
pub fn min_weight_f_factor(graph: &Graph, f: &DegreeSpec) -> Result<Option<FactorSubgraph>> {
    solve(graph, f, true)
}

/// Deletes the forced edges, solves for the residual degrees on what is left
/// and adds the forced edges back.
fn solve_forced(
    graph: &Graph,
    f: &DegreeSpec,
    forced: &[EdgeId],
    weighted: bool,
) -> Result<Option<FactorSubgraph>> {
    f.check_length(graph)?;
    let mut is_forced = vec![false; graph.edge_count()];
    for &e in forced {
        graph.check_edge(e)?;
        is_forced[e] = true;
    }
    let mut residual = f.values().to_vec();
    for e in (0..graph.edge_count()).filter(|&e| is_forced[e]) {
        let (u, v) = graph.endpoints(e);
        for x in [u, v] {
            match residual[x].checked_sub(1) {
                Some(r) => residual[x] = r,
                None => return Ok(None),
            }
        }
    }
    let (rest, map) = graph.filter_edges(|e| !is_forced[e]);
    let Some(partial) = solve(&rest, &DegreeSpec::new(residual), weighted)? else {
        return Ok(None);
    };
    let mut h = FactorSubgraph::empty(graph);
    for e in partial.edges() {
        h.insert(graph, map[e]);
    }
    for e in (0..graph.edge_count()).filter(|&e| is_forced[e]) {
        h.insert(graph, e);
    }
    Ok(Some(h))
}

/// An f-factor containing every edge of `forced`, if one exists.
pub fn f_factor_with_forced(
    graph: &Graph,
    f: &DegreeSpec,
    forced: &[EdgeId],
) -> Result<Option<FactorSubgraph>> {
    solve_forced(graph, f, forced, false)
}

/// A minimum-weight f-factor among those containing `forced`. The weight
/// of the forced edges counts toward the total.
pub fn min_weight_f_factor_with_forced(
    graph: &Graph,
    f: &DegreeSpec,
    forced: &[EdgeId],
) -> Result<Option<FactorSubgraph>> {
    solve_forced(graph, f, forced, true)
}

/// True iff `h` has degree `f(v)` at every vertex.
pub fn is_f_factor(graph: &Graph, f: &DegreeSpec, h: &FactorSubgraph) -> bool {
    h.check_host(graph).is_ok()
        && f.len() == graph.vertex_count()
        && (0..graph.vertex_count()).all(|v| h.degree(v) == f.get(v))
}

/// Total weight of `h` as a plain helper for weighted callers.
pub fn factor_weight(graph: &Graph, h: &FactorSubgraph) -> Result<Weight> {
    h.weight(graph)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn two() -> DegreeSpec {
        DegreeSpec::uniform(6, 2)
    }

    #[test]
    fn triangle_gadget_has_no_internals() {
        let g = families::cycle(3);
        let gadget = TutteGadget::build(&g, &DegreeSpec::uniform(3, 2), false).unwrap();
        assert_eq!(gadget.graph().vertex_count(), 6);
        assert_eq!(gadget.graph().edge_count(), 3);
        let m = max_cardinality_matching(gadget.graph());
        assert!(m.is_perfect());
        assert_eq!(gadget.factor_from(&g, &m).edge_ids(), vec![0, 1, 2]);
    }

    #[test]
    fn gadget_internals_are_completely_joined() {
        // Vertex 0 of K4 has degree 3; f(0) = 2 leaves one internal vertex.
        let g = families::complete(4);
        let f = DegreeSpec::new(vec![2, 3, 3, 2]);
        let gadget = TutteGadget::build(&g, &f, false).unwrap();
        assert_eq!(gadget.externals(0).len(), 3);
        assert_eq!(gadget.internals(0).len(), 1);
        let x = gadget.internals(0)[0];
        let mut nbrs: Vec<_> = gadget.graph().incident(x).iter().map(|&(u, _)| u).collect();
        nbrs.sort_unstable();
        assert_eq!(nbrs, gadget.externals(0));

        // f = 0 on a degree-2 vertex: K_{2,2} between internals and externals.
        let c4 = families::cycle(4);
        let gadget = TutteGadget::build(&c4, &DegreeSpec::new(vec![0, 1, 2, 1]), false).unwrap();
        assert_eq!(gadget.internals(0).len(), 2);
        for &x in gadget.internals(0) {
            assert_eq!(gadget.graph().degree(x), 2);
        }
    }

    #[test]
    fn gadget_rejects_excess() {
        let g = families::path(3);
        assert!(matches!(
            TutteGadget::build(&g, &DegreeSpec::new(vec![2, 1, 1]), false),
            Err(Error::DegreeExceeded { vertex: 0, .. })
        ));
    }

    #[test]
    fn basic_factors() {
        let c4 = families::cycle(4);
        let h = f_factor(&c4, &DegreeSpec::uniform(4, 2)).unwrap().unwrap();
        assert_eq!(h.len(), 4);

        let tt = families::two_triangles();
        let h = f_factor(&tt, &two()).unwrap().unwrap();
        assert_eq!(h.len(), 6);
        assert!(!h.is_connected(&tt));

        let k4 = families::complete(4);
        let h = f_factor(&k4, &DegreeSpec::uniform(4, 1)).unwrap().unwrap();
        assert!(is_f_factor(&k4, &DegreeSpec::uniform(4, 1), &h));
        assert_eq!(h.len(), 2);
    }

    #[test]
    fn parity_and_excess_short_circuit() {
        let k4 = families::complete(4);
        assert_eq!(f_factor(&k4, &DegreeSpec::new(vec![1, 1, 1, 2])).unwrap(), None);
        assert_eq!(f_factor(&k4, &DegreeSpec::new(vec![4, 1, 1, 2])).unwrap(), None);
        assert!(f_factor(&k4, &DegreeSpec::uniform(3, 1)).is_err());
    }

    #[test]
    fn forced_edge_on_the_prism_gives_a_hamiltonian_cycle() {
        let g = families::prism();
        let h = f_factor_with_forced(&g, &two(), &[6]).unwrap().unwrap();
        assert!(h.contains(6));
        assert!(is_f_factor(&g, &two(), &h));
        assert!(h.is_connected(&g));
    }

    #[test]
    fn forced_degenerate_cases() {
        let tt = families::two_triangles();
        assert_eq!(f_factor_with_forced(&tt, &two(), &[]).unwrap().unwrap().len(), 6);
        let c4 = families::cycle(4);
        let h = f_factor_with_forced(&c4, &DegreeSpec::uniform(4, 2), &[0, 1, 2, 3]).unwrap();
        assert_eq!(h.unwrap().len(), 4);
        // Two forced edges at vertex 1 with f(1) = 1.
        let p = families::path(3);
        assert_eq!(
            f_factor_with_forced(&p, &DegreeSpec::new(vec![1, 1, 1]), &[0, 1]).unwrap(),
            None
        );
    }

    #[test]
    fn weighted_prism() {
        let g = families::weighted_prism(1, 10);
        let h = min_weight_f_factor(&g, &two()).unwrap().unwrap();
        assert_eq!(h.edge_ids(), vec![0, 1, 2, 3, 4, 5]);
        assert_eq!(h.weight(&g).unwrap(), 6);

        let h = min_weight_f_factor_with_forced(&g, &two(), &[6]).unwrap().unwrap();
        assert_eq!(h.weight(&g).unwrap(), 24);
        assert!(h.contains(6));

        let same = min_weight_f_factor_with_forced(&g, &two(), &[]).unwrap();
        assert_eq!(same.unwrap().weight(&g).unwrap(), 6);

        let p = Graph::weighted(3, [(0, 1, 1), (1, 2, 1)]).unwrap();
        assert_eq!(
            min_weight_f_factor_with_forced(&p, &DegreeSpec::new(vec![1, 1, 1]), &[0, 1]).unwrap(),
            None
        );
    }

    #[test]
    fn weighted_four_cycle_is_its_own_factor() {
        let g = Graph::weighted(4, [(0, 1, 1), (1, 2, 2), (2, 3, 3), (3, 0, 4)]).unwrap();
        let h = min_weight_f_factor(&g, &DegreeSpec::uniform(4, 2)).unwrap().unwrap();
        assert_eq!(h.weight(&g).unwrap(), 10);
        assert!(min_weight_f_factor(&families::cycle(4), &DegreeSpec::uniform(4, 2)).is_err());
    }

    #[test]
    fn all_ones_weights_agree_with_unweighted_decision() {
        let g = families::petersen();
        let w = g.clone().with_weights(vec![1; 15]).unwrap();
        for k in 0..=3 {
            let f = DegreeSpec::uniform(10, k);
            assert_eq!(
                f_factor(&g, &f).unwrap().is_some(),
                min_weight_f_factor(&w, &f).unwrap().is_some()
            );
        }
    }

    #[test]
    fn is_f_factor_checks() {
        let c4 = families::cycle(4);
        let f = DegreeSpec::uniform(4, 2);
        assert!(is_f_factor(&c4, &f, &FactorSubgraph::full(&c4)));
        assert!(!is_f_factor(&c4, &f, &FactorSubgraph::from_edges(&c4, [0, 1, 2]).unwrap()));
        assert!(is_f_factor(&c4, &DegreeSpec::uniform(4, 0), &FactorSubgraph::empty(&c4)));
    }
}
