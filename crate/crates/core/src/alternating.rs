//! Red/blue colored edge sets, alternating Euler tours, minimal alternating
//! circuits and switching.
//!
//! The symmetric difference of two f-factors `H1`, `H2`, with `H1`-edges red
//! and `H2`-edges blue, has `d_R(v) = d_B(v)` everywhere, so each of its
//! components has an Euler tour whose consecutive edges alternate in color.
//! Such a component is an alternating circuit; it is *minimal* when no vertex
//! sees more than two edges of either color. Switching `H1` along a circuit
//! drops its red edges and adds its blue ones without changing any degree.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::ops::Deref;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, FactorSubgraph, Graph, Vertex, Weight};
use crate::union_find::UnionFind;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    Red,
    Blue,
}

impl Color {
    pub fn other(self) -> Color {
        match self {
            Color::Red => Color::Blue,
            Color::Blue => Color::Red,
        }
    }
}

/// One edge of a colored subgraph, with its endpoints (`u < v`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ColoredEdge {
    pub id: EdgeId,
    pub u: Vertex,
    pub v: Vertex,
    pub color: Color,
}

/// Red and blue edges of a host graph on `n` vertices, with per-vertex
/// color degrees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredSubgraph {
    n: usize,
    edges: BTreeMap<EdgeId, ColoredEdge>,
    red_degree: Vec<usize>,
    blue_degree: Vec<usize>,
}

impl ColoredSubgraph {
    pub fn empty(n: usize) -> Self {
        ColoredSubgraph {
            n,
            edges: BTreeMap::new(),
            red_degree: vec![0; n],
            blue_degree: vec![0; n],
        }
    }

    /// Colors the given edges of `graph`. An edge listed in both sets is an
    /// error; repeats within one set are ignored.
    pub fn new(
        graph: &Graph,
        red: impl IntoIterator<Item = EdgeId>,
        blue: impl IntoIterator<Item = EdgeId>,
    ) -> Result<Self> {
        let mut c = ColoredSubgraph::empty(graph.vertex_count());
        for (color, ids) in [
            (Color::Red, red.into_iter().collect::<Vec<_>>()),
            (Color::Blue, blue.into_iter().collect()),
        ] {
            for e in ids {
                graph.check_edge(e)?;
                match c.color_of(e) {
                    Some(existing) if existing != color => return Err(Error::DoubleColored(e)),
                    Some(_) => {}
                    None => {
                        let (u, v) = graph.endpoints(e);
                        c.push(ColoredEdge { id: e, u, v, color });
                    }
                }
            }
        }
        Ok(c)
    }

    fn from_edges(n: usize, edges: impl IntoIterator<Item = ColoredEdge>) -> Self {
        let mut c = ColoredSubgraph::empty(n);
        for e in edges {
            c.push(e);
        }
        c
    }

    fn push(&mut self, e: ColoredEdge) {
        let deg = match e.color {
            Color::Red => &mut self.red_degree,
            Color::Blue => &mut self.blue_degree,
        };
        deg[e.u] += 1;
        deg[e.v] += 1;
        self.edges.insert(e.id, e);
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Number of colored edges.
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.edges.contains_key(&e)
    }

    pub fn color_of(&self, e: EdgeId) -> Option<Color> {
        self.edges.get(&e).map(|c| c.color)
    }

    /// Edges in ascending id order.
    pub fn edges(&self) -> impl Iterator<Item = &ColoredEdge> + '_ {
        self.edges.values()
    }

    pub fn edge_ids(&self) -> Vec<EdgeId> {
        self.edges.keys().copied().collect()
    }

    pub fn red(&self) -> Vec<EdgeId> {
        self.with_color(Color::Red)
    }

    pub fn blue(&self) -> Vec<EdgeId> {
        self.with_color(Color::Blue)
    }

    fn with_color(&self, color: Color) -> Vec<EdgeId> {
        self.edges.values().filter(|e| e.color == color).map(|e| e.id).collect()
    }

    pub fn red_degree(&self, v: Vertex) -> usize {
        self.red_degree[v]
    }

    pub fn blue_degree(&self, v: Vertex) -> usize {
        self.blue_degree[v]
    }

    /// First vertex with `d_R(v) != d_B(v)`, as `(v, d_R, d_B)`.
    pub fn first_imbalance(&self) -> Option<(Vertex, usize, usize)> {
        (0..self.n)
            .find(|&v| self.red_degree[v] != self.blue_degree[v])
            .map(|v| (v, self.red_degree[v], self.blue_degree[v]))
    }

    pub fn is_balanced(&self) -> bool {
        self.first_imbalance().is_none()
    }

    fn check_balanced(&self) -> Result<()> {
        match self.first_imbalance() {
            Some((vertex, red, blue)) => Err(Error::ColorImbalance { vertex, red, blue }),
            None => Ok(()),
        }
    }

    /// At most two red and two blue edges at every vertex.
    pub fn is_minimal(&self) -> bool {
        (0..self.n).all(|v| self.red_degree[v] <= 2 && self.blue_degree[v] <= 2)
    }

    /// True iff the edges form one connected piece. Isolated vertices of the
    /// host are ignored; an empty edge set is not connected.
    pub fn is_connected(&self) -> bool {
        !self.is_empty() && self.components().len() == 1
    }

    /// Edge-connected pieces, ordered by smallest edge id.
    pub fn components(&self) -> Vec<ColoredSubgraph> {
        let mut uf = UnionFind::new(self.n);
        for e in self.edges.values() {
            uf.union(e.u, e.v);
        }
        let mut slot: BTreeMap<usize, usize> = BTreeMap::new();
        let mut out: Vec<ColoredSubgraph> = Vec::new();
        for e in self.edges.values() {
            let root = uf.find(e.u);
            let i = *slot.entry(root).or_insert_with(|| {
                out.push(ColoredSubgraph::empty(self.n));
                out.len() - 1
            });
            out[i].push(*e);
        }
        out
    }

    /// The same edges with red and blue exchanged.
    pub fn flipped(&self) -> ColoredSubgraph {
        ColoredSubgraph::from_edges(
            self.n,
            self.edges.values().map(|e| ColoredEdge {
                color: e.color.other(),
                ..*e
            }),
        )
    }

    /// Edges of `self` not present in `other`.
    pub fn without(&self, other: &ColoredSubgraph) -> ColoredSubgraph {
        ColoredSubgraph::from_edges(
            self.n,
            self.edges.values().filter(|e| !other.contains(e.id)).copied(),
        )
    }

    /// Checks that red edges lie in `h` and blue edges avoid it.
    pub fn check_switch_on(&self, h: &FactorSubgraph) -> Result<()> {
        for e in self.edges.values() {
            match (e.color, h.contains(e.id)) {
                (Color::Red, false) => {
                    return Err(Error::NotASwitch(format!("red edge {} is not in H", e.id)))
                }
                (Color::Blue, true) => {
                    return Err(Error::NotASwitch(format!("blue edge {} is already in H", e.id)))
                }
                _ => {}
            }
        }
        Ok(())
    }
}

impl AsRef<ColoredSubgraph> for ColoredSubgraph {
    fn as_ref(&self) -> &ColoredSubgraph {
        self
    }
}

/// A connected colored subgraph with `d_R(v) = d_B(v)` at every vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlternatingCircuit(ColoredSubgraph);

impl AlternatingCircuit {
    pub fn new(c: ColoredSubgraph) -> Result<Self> {
        c.check_balanced()?;
        if c.is_empty() {
            return Err(Error::NotAlternatingCircuit("no edges".into()));
        }
        if !c.is_connected() {
            return Err(Error::NotAlternatingCircuit("edges are not connected".into()));
        }
        Ok(AlternatingCircuit(c))
    }

    pub fn into_inner(self) -> ColoredSubgraph {
        self.0
    }
}

impl Deref for AlternatingCircuit {
    type Target = ColoredSubgraph;

    fn deref(&self) -> &ColoredSubgraph {
        &self.0
    }
}

impl AsRef<ColoredSubgraph> for AlternatingCircuit {
    fn as_ref(&self) -> &ColoredSubgraph {
        &self.0
    }
}

/// Red = `E(h1) \ E(h2)`, blue = `E(h2) \ E(h1)`. Fails with a color
/// imbalance unless both have the same degree at every vertex.
pub fn color_difference(
    graph: &Graph,
    h1: &FactorSubgraph,
    h2: &FactorSubgraph,
) -> Result<ColoredSubgraph> {
    h1.check_host(graph)?;
    h2.check_host(graph)?;
    let c = ColoredSubgraph::new(
        graph,
        h1.edges().filter(|&e| !h2.contains(e)),
        h2.edges().filter(|&e| !h1.contains(e)),
    )?;
    c.check_balanced()?;
    Ok(c)
}

pub fn is_alternating_circuit(c: &ColoredSubgraph) -> bool {
    c.is_balanced() && c.is_connected()
}

/// One traversal step of a tour.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TourStep {
    pub edge: EdgeId,
    pub from: Vertex,
    pub to: Vertex,
    pub color: Color,
}

/// An alternating Euler tour of every component, in component order.
///
/// At each vertex the i-th red edge is paired with the i-th blue edge
/// (ascending ids). Following the pairs splits the edges into closed
/// alternating trails; trails meeting at a vertex are then spliced by
/// exchanging partners, which leaves one trail per component.
pub fn alternating_euler_tours(c: &ColoredSubgraph) -> Result<Vec<Vec<TourStep>>> {
    c.check_balanced()?;
    let edges: Vec<ColoredEdge> = c.edges().copied().collect();
    // End 2i of local edge i sits at edges[i].u, end 2i + 1 at edges[i].v.
    let mut red_ends: BTreeMap<Vertex, Vec<usize>> = BTreeMap::new();
    let mut blue_ends: BTreeMap<Vertex, Vec<usize>> = BTreeMap::new();
    for (i, e) in edges.iter().enumerate() {
        let ends = match e.color {
            Color::Red => &mut red_ends,
            Color::Blue => &mut blue_ends,
        };
        ends.entry(e.u).or_default().push(2 * i);
        ends.entry(e.v).or_default().push(2 * i + 1);
    }
    let mut partner = vec![usize::MAX; 2 * edges.len()];
    for (v, reds) in &red_ends {
        for (&r, &b) in reds.iter().zip(&blue_ends[v]) {
            partner[r] = b;
            partner[b] = r;
        }
    }

    let mut trail = vec![usize::MAX; edges.len()];
    let mut trails = 0;
    for start in 0..edges.len() {
        if trail[start] != usize::MAX {
            continue;
        }
        let mut end = 2 * start;
        loop {
            trail[end / 2] = trails;
            end = partner[end ^ 1];
            if end == 2 * start {
                break;
            }
        }
        trails += 1;
    }

    let mut uf = UnionFind::new(trails);
    for reds in red_ends.values() {
        let r0 = reds[0];
        for &r in &reds[1..] {
            if uf.union(trail[r0 / 2], trail[r / 2]) {
                let (b0, b) = (partner[r0], partner[r]);
                partner[r0] = b;
                partner[b] = r0;
                partner[r] = b0;
                partner[b0] = r;
            }
        }
    }

    let mut done = vec![false; edges.len()];
    let mut tours = Vec::new();
    for start in 0..edges.len() {
        if done[start] {
            continue;
        }
        let mut tour = Vec::new();
        let mut end = 2 * start;
        loop {
            let e = &edges[end / 2];
            done[end / 2] = true;
            let (from, to) = if end & 1 == 0 { (e.u, e.v) } else { (e.v, e.u) };
            tour.push(TourStep {
                edge: e.id,
                from,
                to,
                color: e.color,
            });
            end = partner[end ^ 1];
            if end == 2 * start {
                break;
            }
        }
        tours.push(tour);
    }
    Ok(tours)
}

/// The alternating Euler tour of a single alternating circuit.
pub fn alternating_euler_tour(c: &ColoredSubgraph) -> Result<Vec<TourStep>> {
    let mut tours = alternating_euler_tours(c)?;
    match tours.len() {
        1 => Ok(tours.pop().unwrap()),
        0 => Err(Error::NotAlternatingCircuit("no edges".into())),
        _ => Err(Error::NotAlternatingCircuit("edges are not connected".into())),
    }
}

fn circuit_from_steps(n: usize, source: &ColoredSubgraph, steps: &[TourStep]) -> ColoredSubgraph {
    ColoredSubgraph::from_edges(n, steps.iter().map(|s| source.edges[&s.edge]))
}

/// Rotates `tour` to leave `v` first; returns the step indices of the first
/// and second returns to `v`.
fn visits(tour: &mut [TourStep], v: Vertex) -> (usize, Option<usize>) {
    let start = tour.iter().position(|s| s.from == v).expect("vertex on tour");
    tour.rotate_left(start);
    let mut returns = tour.iter().enumerate().filter(|(_, s)| s.to == v).map(|(i, _)| i);
    let first = returns.next().expect("tour returns to its start");
    (first, returns.next())
}

/// A minimal alternating circuit using only edges of `u`.
///
/// While some vertex has more than two red edges, the smallest such `v` is
/// picked and the tour is cut at `v` into a shorter closed alternating trail.
/// Once the degree caps hold, a vertex of red degree two whose first return
/// closes a properly smaller alternating trail is cut the same way, so two
/// circuits glued at one vertex come apart.
pub fn find_min_ac(u: &AlternatingCircuit) -> AlternatingCircuit {
    let n = u.vertex_count();
    let mut current = u.0.clone();
    loop {
        let mut tour = alternating_euler_tour(&current).expect("alternating circuit has a tour");
        let heavy = (0..n).find(|&v| current.red_degree(v) > 2);
        let piece = if let Some(v) = heavy {
            let (first, second) = visits(&mut tour, v);
            let second = second.expect("red degree above two gives three visits");
            let (e1, e2, e3, e4) = (tour[0], tour[first], tour[first + 1], tour[second]);
            Some(if e1.color != e2.color {
                circuit_from_steps(n, &current, &tour[..=first])
            } else if e3.color != e4.color {
                circuit_from_steps(n, &current, &tour[first + 1..=second])
            } else {
                circuit_from_steps(n, &current, &tour[..=second])
            })
        } else {
            (0..n)
                .filter(|&v| current.red_degree(v) == 2)
                .find_map(|v| {
                    let (first, _) = visits(&mut tour, v);
                    (tour[0].color != tour[first].color)
                        .then(|| circuit_from_steps(n, &current, &tour[..=first]))
                })
        };
        match piece {
            Some(next) => current = next,
            None => return AlternatingCircuit(current),
        }
    }
}

/// Edge-disjoint minimal alternating circuits inside `u`, each containing an
/// edge of `s`, whose union covers `s`.
///
/// `u` must be balanced at every vertex; it may have several components,
/// each handled on its own. Circuits are carved off one at a time; those
/// without an edge of `s` are dropped, and leftover pieces that no longer
/// contain edges of `s` are not explored.
pub fn min_ac_set(u: &ColoredSubgraph, s: &[EdgeId]) -> Result<Vec<AlternatingCircuit>> {
    u.check_balanced()?;
    let wanted: BTreeSet<EdgeId> = s.iter().copied().collect();
    if let Some(e) = wanted.iter().find(|&&e| !u.contains(e)) {
        return Err(Error::Precondition(format!(
            "edge {e} is not in the alternating circuit"
        )));
    }
    let hits = |c: &ColoredSubgraph| c.edges().any(|e| wanted.contains(&e.id));
    let mut queue: VecDeque<ColoredSubgraph> = u.components().into_iter().filter(hits).collect();
    let mut out = Vec::new();
    while let Some(piece) = queue.pop_front() {
        let c = find_min_ac(&AlternatingCircuit(piece.clone()));
        let rest = piece.without(&c);
        if hits(&c) {
            out.push(c);
        }
        queue.extend(rest.components().into_iter().filter(hits));
    }
    Ok(out)
}

/// Splits a balanced colored subgraph entirely into minimal alternating
/// circuits.
pub fn decompose(u: &ColoredSubgraph) -> Result<Vec<AlternatingCircuit>> {
    min_ac_set(u, &u.edge_ids())
}

/// Applies edge-disjoint switches to `h`: drops their red edges and adds
/// their blue edges.
pub fn switching<I>(graph: &Graph, h: &FactorSubgraph, circuits: I) -> Result<FactorSubgraph>
where
    I: IntoIterator,
    I::Item: AsRef<ColoredSubgraph>,
{
    h.check_host(graph)?;
    let mut used = BTreeSet::new();
    let mut out = h.clone();
    for c in circuits {
        let c = c.as_ref();
        c.check_balanced()?;
        c.check_switch_on(h)?;
        for e in c.edges() {
            graph.check_edge(e.id)?;
            if graph.endpoints(e.id) != (e.u, e.v) {
                return Err(Error::UnknownEdge(e.id));
            }
            if !used.insert(e.id) {
                return Err(Error::Precondition(format!(
                    "edge {} appears in two switches",
                    e.id
                )));
            }
            match e.color {
                Color::Red => out.remove(graph, e.id),
                Color::Blue => out.insert(graph, e.id),
            };
        }
    }
    Ok(out)
}

/// `w(blue) - w(red)`: the change in weight caused by switching along `c`.
pub fn circuit_weight(c: &ColoredSubgraph, graph: &Graph) -> Result<Weight> {
    if !graph.is_weighted() {
        return Err(Error::MissingWeights);
    }
    let mut total = 0;
    for e in c.edges() {
        graph.check_edge(e.id)?;
        let w = graph.weight(e.id).unwrap_or(0);
        total += match e.color {
            Color::Blue => w,
            Color::Red => -w,
        };
    }
    Ok(total)
}

/// Number of edges at `v` present in both `h1` and `h2`. In a simple graph
/// this is `|N_h1(v) ∩ N_h2(v)|`.
pub fn retained_neighbors(graph: &Graph, h1: &FactorSubgraph, h2: &FactorSubgraph, v: Vertex) -> usize {
    graph
        .incident(v)
        .iter()
        .filter(|&&(_, e)| h1.contains(e) && h2.contains(e))
        .count()
}
