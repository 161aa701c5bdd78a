//! Matchings in general graphs: maximum cardinality (Edmonds' blossom
//! shrinking) and minimum-weight perfect (primal-dual blossom).

mod cardinality;
mod weighted;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, Vertex, Weight};

use cardinality::CardinalityMatcher;
use weighted::WeightedMatcher;

/// A set of vertex-disjoint edges of a host graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    mate: Vec<Option<Vertex>>,
    edges: Vec<EdgeId>,
}

impl Matching {
    fn from_mate(graph: &Graph, mate: Vec<Option<Vertex>>) -> Self {
        let mut edges: Vec<EdgeId> = mate
            .iter()
            .enumerate()
            .filter_map(|(v, m)| match *m {
                Some(u) if v < u => Some(graph.edge_id(v, u).expect("matched pair is an edge")),
                _ => None,
            })
            .collect();
        edges.sort_unstable();
        Matching { mate, edges }
    }

    /// Builds a matching from edge ids, rejecting shared endpoints.
    pub fn from_edges(graph: &Graph, edges: impl IntoIterator<Item = EdgeId>) -> Result<Self> {
        let mut mate = vec![None; graph.vertex_count()];
        let mut ids = Vec::new();
        for e in edges {
            graph.check_edge(e)?;
            let (u, v) = graph.endpoints(e);
            if mate[u].is_some() || mate[v].is_some() {
                return Err(Error::Precondition(format!(
                    "edge {e} shares an endpoint with another matched edge"
                )));
            }
            mate[u] = Some(v);
            mate[v] = Some(u);
            ids.push(e);
        }
        ids.sort_unstable();
        Ok(Matching { mate, edges: ids })
    }

    /// Number of matched edges.
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Matched edge ids, ascending.
    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn mate(&self, v: Vertex) -> Option<Vertex> {
        self.mate[v]
    }

    pub fn is_perfect(&self) -> bool {
        self.mate.iter().all(Option::is_some)
    }

    pub fn weight(&self, graph: &Graph) -> Result<Weight> {
        graph.weight_of(self.edges.iter().copied())
    }
}

/// A maximum-cardinality matching of `graph`. Deterministic for a given
/// edge order.
pub fn max_cardinality_matching(graph: &Graph) -> Matching {
    let mate = CardinalityMatcher::new(graph).solve();
    Matching::from_mate(graph, mate)
}

/// A maximum-weight matching; with `max_cardinality` set, the heaviest among
/// the maximum-cardinality matchings.
pub fn max_weight_matching(graph: &Graph, max_cardinality: bool) -> Result<Matching> {
    let weights = graph.weights().ok_or(Error::MissingWeights)?;
    let edges = graph
        .edges()
        .iter()
        .zip(weights)
        .map(|(&(u, v), &w)| (u, v, w))
        .collect();
    let mate = WeightedMatcher::new(graph.vertex_count(), edges, max_cardinality).solve();
    Ok(Matching::from_mate(graph, mate))
}

/// A perfect matching of minimum total weight, or `None` when the graph has
/// no perfect matching.
pub fn min_weight_perfect_matching(graph: &Graph) -> Result<Option<Matching>> {
    let weights = graph.weights().ok_or(Error::MissingWeights)?;
    let n = graph.vertex_count();
    if n % 2 == 1 {
        return Ok(None);
    }
    if n == 0 {
        return Ok(Some(Matching::from_mate(graph, Vec::new())));
    }
    // Among maximum-cardinality matchings, maximising sum(C - w) minimises
    // sum(w) because every perfect matching has exactly n/2 edges.
    let ceiling = weights.iter().copied().max().unwrap_or(0) + 1;
    let edges = graph
        .edges()
        .iter()
        .zip(weights)
        .map(|(&(u, v), &w)| (u, v, ceiling - w))
        .collect();
    let mate = WeightedMatcher::new(n, edges, true).solve();
    let matching = Matching::from_mate(graph, mate);
    Ok(matching.is_perfect().then_some(matching))
}
