//! Simple undirected graphs, degree specifications and factor subgraphs.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::union_find::UnionFind;

pub type Vertex = usize;
/// Index of an edge in its host [`Graph`], in insertion order.
pub type EdgeId = usize;
/// Exact edge weight. All weight arithmetic in the crate is integral.
pub type Weight = i64;

/// An undirected simple graph on vertices `0..n` with optional non-negative
/// integer edge weights.
///
/// Edges keep the order in which they were supplied; that order is the edge
/// id and drives every deterministic tie-break in the crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    weights: Option<Vec<Weight>>,
    adjacency: Vec<Vec<(Vertex, EdgeId)>>,
    index: HashMap<(Vertex, Vertex), EdgeId>,
}

impl Graph {
    /// Builds an unweighted graph, rejecting loops, parallel edges and
    /// out-of-range endpoints.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self> {
        let mut graph = Graph {
            n,
            edges: Vec::new(),
            weights: None,
            adjacency: vec![Vec::new(); n],
            index: HashMap::new(),
        };
        for (u, v) in edges {
            graph.push_edge(u, v)?;
        }
        Ok(graph)
    }

    /// Builds a weighted graph from `(u, v, w)` triples.
    pub fn weighted(
        n: usize,
        edges: impl IntoIterator<Item = (Vertex, Vertex, Weight)>,
    ) -> Result<Self> {
        let (pairs, weights): (Vec<_>, Vec<_>) =
            edges.into_iter().map(|(u, v, w)| ((u, v), w)).unzip();
        Graph::new(n, pairs)?.with_weights(weights)
    }

    /// Attaches one weight per edge, in edge-id order.
    pub fn with_weights(mut self, weights: Vec<Weight>) -> Result<Self> {
        if weights.len() != self.edges.len() {
            return Err(Error::WeightCount {
                expected: self.edges.len(),
                got: weights.len(),
            });
        }
        if let Some((edge, &weight)) = weights.iter().enumerate().find(|(_, &w)| w < 0) {
            return Err(Error::NegativeWeight { edge, weight });
        }
        self.weights = Some(weights);
        Ok(self)
    }

    /// Drops the weights, if any.
    pub fn unweighted(mut self) -> Self {
        self.weights = None;
        self
    }

    fn push_edge(&mut self, u: Vertex, v: Vertex) -> Result<EdgeId> {
        for x in [u, v] {
            if x >= self.n {
                return Err(Error::VertexOutOfRange { vertex: x, n: self.n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        let key = (u.min(v), u.max(v));
        if self.index.contains_key(&key) {
            return Err(Error::DuplicateEdge(key.0, key.1));
        }
        let id = self.edges.len();
        self.edges.push(key);
        self.index.insert(key, id);
        self.adjacency[u].push((v, id));
        self.adjacency[v].push((u, id));
        Ok(id)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Endpoints of `e` with the smaller vertex first.
    pub fn endpoints(&self, e: EdgeId) -> (Vertex, Vertex) {
        self.edges[e]
    }

    /// The endpoint of `e` that is not `v`.
    pub fn opposite(&self, e: EdgeId, v: Vertex) -> Vertex {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            debug_assert_eq!(b, v);
            a
        }
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    /// Neighbours of `v` with the connecting edge ids, in edge-id order.
    pub fn incident(&self, v: Vertex) -> &[(Vertex, EdgeId)] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn edge_id(&self, u: Vertex, v: Vertex) -> Option<EdgeId> {
        self.index.get(&(u.min(v), u.max(v))).copied()
    }

    pub fn is_weighted(&self) -> bool {
        self.weights.is_some()
    }

    pub fn weights(&self) -> Option<&[Weight]> {
        self.weights.as_deref()
    }

    pub fn weight(&self, e: EdgeId) -> Option<Weight> {
        self.weights.as_ref().map(|w| w[e])
    }

    /// Total weight of an edge set; fails on an unweighted graph.
    pub fn weight_of(&self, edges: impl IntoIterator<Item = EdgeId>) -> Result<Weight> {
        let weights = self.weights.as_ref().ok_or(Error::MissingWeights)?;
        Ok(edges.into_iter().map(|e| weights[e]).sum())
    }

    pub fn check_edge(&self, e: EdgeId) -> Result<()> {
        if e < self.edges.len() {
            Ok(())
        } else {
            Err(Error::UnknownEdge(e))
        }
    }

    /// The spanning subgraph keeping exactly the edges for which `keep` is
    /// true, together with the map from new edge ids to ids in `self`.
    /// Weights are carried over.
    pub fn filter_edges(&self, mut keep: impl FnMut(EdgeId) -> bool) -> (Graph, Vec<EdgeId>) {
        let mapping: Vec<EdgeId> = (0..self.edges.len()).filter(|&e| keep(e)).collect();
        let mut sub = Graph::new(self.n, mapping.iter().map(|&e| self.edges[e]))
            .expect("a subgraph of a simple graph is simple");
        if let Some(weights) = &self.weights {
            sub.weights = Some(mapping.iter().map(|&e| weights[e]).collect());
        }
        (sub, mapping)
    }

    pub fn is_connected(&self) -> bool {
        is_connected(self.n, self.edges.iter().copied())
    }
}

/// Connected components of the spanning subgraph on `0..n` formed by `edges`.
///
/// Components are listed by their smallest vertex, vertices ascending inside
/// each component; isolated vertices are singleton components.
pub fn components(n: usize, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Vec<Vec<Vertex>> {
    let mut uf = UnionFind::new(n);
    for (u, v) in edges {
        uf.union(u, v);
    }
    uf.groups()
}

/// True iff the spanning subgraph has a single component. The empty vertex
/// set and a lone vertex both count as connected.
pub fn is_connected(n: usize, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> bool {
    if n <= 1 {
        return true;
    }
    let mut uf = UnionFind::new(n);
    let mut merges = 0;
    for (u, v) in edges {
        if uf.union(u, v) {
            merges += 1;
        }
    }
    merges == n - 1
}

/// The target degree `f(v)` of every vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct DegreeSpec(Vec<usize>);

impl DegreeSpec {
    pub fn new(values: Vec<usize>) -> Self {
        DegreeSpec(values)
    }

    pub fn uniform(n: usize, value: usize) -> Self {
        DegreeSpec(vec![value; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, v: Vertex) -> usize {
        self.0[v]
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// An odd total rules out every f-factor.
    pub fn has_even_total(&self) -> bool {
        self.total() % 2 == 0
    }

    pub fn min_value(&self) -> Option<usize> {
        self.0.iter().copied().min()
    }

    /// Checks that the spec has one value per vertex of `graph`.
    pub fn check_length(&self, graph: &Graph) -> Result<()> {
        if self.0.len() != graph.vertex_count() {
            return Err(Error::DegreeSpecLength {
                expected: graph.vertex_count(),
                got: self.0.len(),
            });
        }
        Ok(())
    }

    /// First vertex whose target exceeds its degree. Such a spec is
    /// admissible but admits no factor.
    pub fn first_excess(&self, graph: &Graph) -> Option<(Vertex, usize, usize)> {
        (0..self.0.len().min(graph.vertex_count()))
            .find(|&v| self.0[v] > graph.degree(v))
            .map(|v| (v, self.0[v], graph.degree(v)))
    }

    /// Length check plus `f(v) <= d(v)` everywhere.
    pub fn validate(&self, graph: &Graph) -> Result<()> {
        self.check_length(graph)?;
        match self.first_excess(graph) {
            Some((vertex, value, degree)) => Err(Error::DegreeExceeded {
                vertex,
                value,
                degree,
            }),
            None => Ok(()),
        }
    }
}

impl From<Vec<usize>> for DegreeSpec {
    fn from(values: Vec<usize>) -> Self {
        DegreeSpec(values)
    }
}

/// A spanning subgraph of a host graph, stored as an edge-membership mask
/// with a maintained degree array.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FactorSubgraph {
    member: Vec<bool>,
    degree: Vec<usize>,
    len: usize,
}

impl FactorSubgraph {
    pub fn empty(graph: &Graph) -> Self {
        FactorSubgraph {
            member: vec![false; graph.edge_count()],
            degree: vec![0; graph.vertex_count()],
            len: 0,
        }
    }

    /// All edges of the host.
    pub fn full(graph: &Graph) -> Self {
        FactorSubgraph {
            member: vec![true; graph.edge_count()],
            degree: graph.degrees(),
            len: graph.edge_count(),
        }
    }

    /// Builds a subgraph from edge ids; duplicates collapse.
    pub fn from_edges(graph: &Graph, edges: impl IntoIterator<Item = EdgeId>) -> Result<Self> {
        let mut h = FactorSubgraph::empty(graph);
        for e in edges {
            graph.check_edge(e)?;
            h.insert(graph, e);
        }
        Ok(h)
    }

    /// Builds a subgraph from vertex pairs, each of which must be an edge.
    pub fn from_pairs(
        graph: &Graph,
        pairs: impl IntoIterator<Item = (Vertex, Vertex)>,
    ) -> Result<Self> {
        let mut h = FactorSubgraph::empty(graph);
        for (u, v) in pairs {
            let e = graph.edge_id(u, v).ok_or_else(|| {
                Error::Precondition(format!("{{{u}, {v}}} is not an edge of the host"))
            })?;
            h.insert(graph, e);
        }
        Ok(h)
    }

    /// Fails unless this subgraph was sized for `graph`.
    pub fn check_host(&self, graph: &Graph) -> Result<()> {
        if self.member.len() != graph.edge_count() || self.degree.len() != graph.vertex_count() {
            return Err(Error::HostMismatch {
                expected: graph.edge_count(),
                got: self.member.len(),
            });
        }
        Ok(())
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.member.get(e).copied().unwrap_or(false)
    }

    /// Adds `e`; returns false if it was already present.
    pub fn insert(&mut self, graph: &Graph, e: EdgeId) -> bool {
        if self.member[e] {
            return false;
        }
        let (u, v) = graph.endpoints(e);
        self.member[e] = true;
        self.degree[u] += 1;
        self.degree[v] += 1;
        self.len += 1;
        true
    }

    /// Removes `e`; returns false if it was absent.
    pub fn remove(&mut self, graph: &Graph, e: EdgeId) -> bool {
        if !self.member[e] {
            return false;
        }
        let (u, v) = graph.endpoints(e);
        self.member[e] = false;
        self.degree[u] -= 1;
        self.degree[v] -= 1;
        self.len -= 1;
        true
    }

    /// Edge ids in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.member
            .iter()
            .enumerate()
            .filter_map(|(e, &m)| m.then_some(e))
    }

    pub fn edge_ids(&self) -> Vec<EdgeId> {
        self.edges().collect()
    }

    /// Endpoint pairs of the member edges, ascending by edge id.
    pub fn pairs<'g>(&'g self, graph: &'g Graph) -> impl Iterator<Item = (Vertex, Vertex)> + 'g {
        self.edges().map(|e| graph.endpoints(e))
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.degree[v]
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degree
    }

    /// Neighbours of `v` inside this subgraph, ascending.
    pub fn neighbors(&self, graph: &Graph, v: Vertex) -> Vec<Vertex> {
        let mut out: Vec<Vertex> = graph
            .incident(v)
            .iter()
            .filter(|&&(_, e)| self.member[e])
            .map(|&(u, _)| u)
            .collect();
        out.sort_unstable();
        out
    }

    pub fn is_connected(&self, graph: &Graph) -> bool {
        is_connected(graph.vertex_count(), self.pairs(graph))
    }

    pub fn components(&self, graph: &Graph) -> Vec<Vec<Vertex>> {
        components(graph.vertex_count(), self.pairs(graph))
    }

    pub fn weight(&self, graph: &Graph) -> Result<Weight> {
        graph.weight_of(self.edges())
    }
}
