//! Vertex partitions, quotient multigraphs, refinement by factor components
//! and spanning-tree enumeration over quotients.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, FactorSubgraph, Graph, Vertex};
use crate::union_find::{RollbackUnionFind, UnionFind};

/// A partition of `0..n` into non-empty parts.
///
/// Parts are kept in canonical form (ascending inside, ordered by smallest
/// member), so two partitions of the same vertex set compare equal iff they
/// have the same parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Partition {
    parts: Vec<Vec<Vertex>>,
    #[serde(skip)]
    part_of: Vec<usize>,
}

impl Partition {
    /// The single part `{0, .., n-1}`.
    pub fn whole(n: usize) -> Self {
        Self::canonical(n, if n == 0 { vec![] } else { vec![(0..n).collect()] })
    }

    pub fn singletons(n: usize) -> Self {
        Self::canonical(n, (0..n).map(|v| vec![v]).collect())
    }

    /// Validates that `parts` are non-empty, disjoint and cover `0..n`.
    pub fn from_parts(n: usize, parts: Vec<Vec<Vertex>>) -> Result<Self> {
        let mut seen = vec![false; n];
        for part in &parts {
            if part.is_empty() {
                return Err(Error::InvalidPartition("empty part".into()));
            }
            for &v in part {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
                if std::mem::replace(&mut seen[v], true) {
                    return Err(Error::InvalidPartition(format!(
                        "vertex {v} appears in two parts"
                    )));
                }
            }
        }
        if let Some(v) = seen.iter().position(|&s| !s) {
            return Err(Error::InvalidPartition(format!("vertex {v} is not covered")));
        }
        Ok(Self::canonical(n, parts))
    }

    fn canonical(n: usize, mut parts: Vec<Vec<Vertex>>) -> Self {
        for part in &mut parts {
            part.sort_unstable();
        }
        parts.sort_unstable_by_key(|p| p[0]);
        let mut part_of = vec![0; n];
        for (i, part) in parts.iter().enumerate() {
            for &v in part {
                part_of[v] = i;
            }
        }
        Partition { parts, part_of }
    }

    pub fn vertex_count(&self) -> usize {
        self.part_of.len()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn parts(&self) -> &[Vec<Vertex>] {
        &self.parts
    }

    pub fn part(&self, i: usize) -> &[Vertex] {
        &self.parts[i]
    }

    pub fn part_of(&self, v: Vertex) -> usize {
        self.part_of[v]
    }

    /// True iff every part of `self` lies inside a part of `coarser`.
    pub fn is_refinement_of(&self, coarser: &Partition) -> bool {
        self.vertex_count() == coarser.vertex_count()
            && self.parts.iter().all(|part| {
                let home = coarser.part_of(part[0]);
                part.iter().all(|&v| coarser.part_of(v) == home)
            })
    }

    /// True iff `edges` connect the parts, i.e. the quotient of the spanning
    /// subgraph they form is connected.
    pub fn is_connected_by(&self, graph: &Graph, edges: impl IntoIterator<Item = EdgeId>) -> bool {
        let mut uf = UnionFind::new(self.len());
        let mut merges = 0;
        for e in edges {
            let (u, v) = graph.endpoints(e);
            if uf.union(self.part_of(u), self.part_of(v)) {
                merges += 1;
            }
        }
        merges + 1 >= self.len()
    }

    /// True iff `h / self` is connected.
    pub fn is_connected_by_factor(&self, graph: &Graph, h: &FactorSubgraph) -> bool {
        self.is_connected_by(graph, h.edges())
    }
}

impl fmt::Display for Partition {
    /// Renders as `{0,1,2} | {3,4,5}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, part) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(" | ")?;
            }
            f.write_str("{")?;
            for (j, v) in part.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{v}")?;
            }
            f.write_str("}")?;
        }
        Ok(())
    }
}

/// An edge of `G/Q`: parts `a < b` and the edge of `G` behind it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct QuotientEdge {
    pub a: usize,
    pub b: usize,
    pub edge: EdgeId,
}

/// The multigraph `G/Q`: one vertex per part and one edge per edge of `G`
/// whose endpoints lie in different parts. Parallel edges are kept.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientGraph {
    pub partition: Partition,
    pub edges: Vec<QuotientEdge>,
}

impl QuotientGraph {
    pub fn part_count(&self) -> usize {
        self.partition.len()
    }

    pub fn is_connected(&self) -> bool {
        crate::graph::is_connected(self.part_count(), self.edges.iter().map(|q| (q.a, q.b)))
    }
}

/// Builds `G/Q`, quotient edges ascending by the id of the backing edge.
pub fn quotient(graph: &Graph, partition: &Partition) -> QuotientGraph {
    let edges = graph
        .edges()
        .iter()
        .enumerate()
        .filter_map(|(edge, &(u, v))| {
            let (pu, pv) = (partition.part_of(u), partition.part_of(v));
            (pu != pv).then(|| QuotientEdge {
                a: pu.min(pv),
                b: pu.max(pv),
                edge,
            })
        })
        .collect();
    QuotientGraph {
        partition: partition.clone(),
        edges,
    }
}

/// Splits every part `X` of `partition` into the vertex sets of the
/// components of `h[X]`.
///
/// The result refines `partition` and equals it iff `h[X]` is connected for
/// every part.
pub fn refine_partition(graph: &Graph, h: &FactorSubgraph, partition: &Partition) -> Partition {
    let n = graph.vertex_count();
    let mut uf = UnionFind::new(n);
    for (u, v) in h.pairs(graph) {
        if partition.part_of(u) == partition.part_of(v) {
            uf.union(u, v);
        }
    }
    Partition::canonical(n, uf.groups())
}

/// Streams every edge set `T` of `graph` whose quotient edges form a spanning
/// tree of `G/Q`.
///
/// Trees come out in lexicographic order of their ascending edge-id lists.
/// Each tree is produced exactly once; parallel quotient edges give distinct
/// trees. A disconnected quotient yields nothing.
pub fn spanning_trees<'g>(graph: &'g Graph, partition: &Partition) -> Result<SpanningTrees<'g>> {
    if partition.len() < 2 {
        return Err(Error::Precondition(format!(
            "spanning trees need at least two parts, got {}",
            partition.len()
        )));
    }
    let q = quotient(graph, partition);
    let connected = q.is_connected();
    Ok(SpanningTrees {
        graph,
        parts: q.part_count(),
        edges: q.edges,
        dsu: RollbackUnionFind::new(partition.len()),
        chosen: Vec::new(),
        cursor: vec![0],
        done: !connected,
    })
}

/// Iterator returned by [`spanning_trees`].
///
/// Backtracks over quotient edges in id order: an edge is taken when it joins
/// two different components of the partial forest, and a branch is abandoned
/// as soon as the forest plus every remaining edge can no longer span.
#[derive(Debug, Clone)]
pub struct SpanningTrees<'g> {
    graph: &'g Graph,
    parts: usize,
    edges: Vec<QuotientEdge>,
    dsu: RollbackUnionFind,
    chosen: Vec<usize>,
    /// `cursor[d]` is the next candidate index for tree position `d`.
    cursor: Vec<usize>,
    done: bool,
}

impl SpanningTrees<'_> {
    pub fn graph(&self) -> &Graph {
        self.graph
    }

    pub fn quotient_edges(&self) -> &[QuotientEdge] {
        &self.edges
    }

    /// Whether the current forest together with `edges[from..]` connects
    /// every part.
    fn can_span_from(&self, from: usize) -> bool {
        let mut scratch = UnionFind::new(self.parts);
        let mut sets = self.parts;
        for p in 0..self.parts {
            if scratch.union(p, self.dsu.find(p)) {
                sets -= 1;
            }
        }
        for q in &self.edges[from..] {
            if sets == 1 {
                break;
            }
            if scratch.union(self.dsu.find(q.a), self.dsu.find(q.b)) {
                sets -= 1;
            }
        }
        sets == 1
    }

    fn backtrack(&mut self) {
        if self.chosen.pop().is_some() {
            self.cursor.pop();
            self.dsu.rollback();
        } else {
            self.done = true;
        }
    }
}

impl Iterator for SpanningTrees<'_> {
    type Item = Vec<EdgeId>;

    fn next(&mut self) -> Option<Self::Item> {
        while !self.done {
            let depth = self.chosen.len();
            if depth + 1 == self.parts {
                let tree = self.chosen.iter().map(|&i| self.edges[i].edge).collect();
                self.backtrack();
                return Some(tree);
            }
            let mut i = self.cursor[depth];
            while i < self.edges.len()
                && self.dsu.find(self.edges[i].a) == self.dsu.find(self.edges[i].b)
            {
                i += 1;
            }
            if i == self.edges.len() || !self.can_span_from(i) {
                self.backtrack();
                continue;
            }
            self.cursor[depth] = i + 1;
            self.dsu.union(self.edges[i].a, self.edges[i].b);
            self.chosen.push(i);
            self.cursor.push(i + 1);
        }
        None
    }
}
