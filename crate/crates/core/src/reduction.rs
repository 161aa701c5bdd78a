//! Instances of the connected f-factor problem built from Hamiltonian-cycle
//! instances.
//!
//! For a graph `G` on `N >= 4` vertices, `G'` consists of `N - 2` disjoint
//! cliques. One vertex of each clique forms the set `A`. Non-`A` vertices ask
//! for their full clique degree, `A` vertices for two more. For every path
//! `u0 u1 u2 u3` of `G` through the fixed pivot `u1 = 0`, `G - {u1, u2}` is
//! copied onto `A` and the copies of `u0`, `u3` ask for only one extra edge.
//! A connected f-factor then has to thread a Hamiltonian path from `u0` to
//! `u3` through `A`, which closes into a Hamiltonian cycle of `G` through
//! `u1` and `u2`.
//!
//! At the original scale `G'` has `2^(N^(1/(1+eps)))` vertices; the desk
//! mode builds cliques of a fixed size instead.

use crate::error::{Error, Result};
use crate::graph::{DegreeSpec, Graph, Vertex};
use crate::oracle::{enumerate_f_factors, has_hamiltonian_cycle, HAMILTONIAN_SOFT_LIMIT};
use crate::partition::Partition;

/// Largest `G'` materialized without a part-size override.
pub const MAX_MATERIALIZED_VERTICES: usize = 4096;

/// Largest `G'` (in edges) that [`verify_reduction`] hands to the oracle.
pub const MAX_VERIFIED_EDGES: usize = 64;

/// The pivot `u1`.
pub const PIVOT: Vertex = 0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReductionParams {
    pub epsilon: f64,
    /// Clique size; replaces the original size formula when set.
    pub part_size_override: Option<usize>,
    /// Stop after this many instances.
    pub max_output: Option<usize>,
}

impl ReductionParams {
    pub fn desk(part_size: usize) -> Self {
        ReductionParams {
            epsilon: 1.0,
            part_size_override: Some(part_size),
            max_output: None,
        }
    }

    fn validate(&self) -> Result<()> {
        if !(self.epsilon > 0.0) || !self.epsilon.is_finite() {
            return Err(Error::Precondition(format!(
                "epsilon must be positive, got {}",
                self.epsilon
            )));
        }
        if let Some(s) = self.part_size_override {
            if s < 3 {
                return Err(Error::Precondition(format!("part size must be at least 3, got {s}")));
            }
        }
        Ok(())
    }
}

/// Sizes prescribed by the original construction for `N` input vertices.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FullScale {
    /// `ceil(2^(N^(1/(1+eps))))`, possibly infinite in floating point.
    pub n: f64,
    /// `ceil(n / log2(n)^(1+eps)) + 1`.
    pub min_part_size: f64,
    pub parts: usize,
}

pub fn full_scale(input_vertices: usize, epsilon: f64) -> FullScale {
    let big_n = input_vertices as f64;
    let n = 2f64.powf(big_n.powf(1.0 / (1.0 + epsilon))).ceil();
    let min_part_size = (n / n.log2().powf(1.0 + epsilon)).ceil() + 1.0;
    FullScale {
        n,
        min_part_size,
        parts: input_vertices.saturating_sub(2),
    }
}

/// Checks `floor(m / (ceil(m/k) + 1)) >= k - 2`, which holds whenever
/// `1 <= k < sqrt(m)`.
pub fn parts_floor_bound(m: u64, k: u64) -> Result<bool> {
    if k == 0 || (k as u128) * (k as u128) >= m as u128 {
        return Err(Error::Precondition(format!("need 1 <= k < sqrt(m), got m = {m}, k = {k}")));
    }
    let parts = m / (m.div_ceil(k) + 1);
    Ok(parts as i128 >= k as i128 - 2)
}

/// One emitted `(G', f)` pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionInstance {
    pub graph: Graph,
    pub f: DegreeSpec,
    /// `(u0, u1, u2, u3)` in `G`.
    pub path: [Vertex; 4],
    /// `sigma[v]` is the `A`-vertex standing for `v`, `None` for `u1`, `u2`.
    pub sigma: Vec<Option<Vertex>>,
    /// The cliques of `G'`.
    pub parts: Partition,
}

impl ReductionInstance {
    /// `A`, one vertex per clique, in part order.
    pub fn a_vertices(&self) -> Vec<Vertex> {
        self.parts.parts().iter().map(|p| p[0]).collect()
    }
}

/// Clique layout shared by every instance of a family.
#[derive(Debug, Clone)]
struct Layout {
    n: usize,
    parts: Partition,
    clique_edges: Vec<(Vertex, Vertex)>,
}

impl Layout {
    fn new(input_vertices: usize, params: &ReductionParams) -> Result<Self> {
        let count = input_vertices - 2;
        let sizes: Vec<usize> = match params.part_size_override {
            Some(s) => vec![s; count],
            None => {
                let scale = full_scale(input_vertices, params.epsilon);
                if !scale.n.is_finite() || scale.n > MAX_MATERIALIZED_VERTICES as f64 {
                    return Err(Error::SizeLimit(format!(
                        "the original construction needs n = {} vertices for N = {input_vertices}; \
                         pass a part-size override to build a smaller family",
                        scale.n
                    )));
                }
                let n = scale.n as usize;
                let min = scale.min_part_size as usize;
                if min * count > n {
                    return Err(Error::SizeLimit(format!(
                        "{count} parts of at least {min} vertices do not fit in n = {n}; \
                         pass a part-size override"
                    )));
                }
                (0..count).map(|i| n / count + usize::from(i < n % count)).collect()
            }
        };
        let mut parts = Vec::with_capacity(count);
        let mut clique_edges = Vec::new();
        let mut next = 0;
        for size in sizes {
            let part: Vec<Vertex> = (next..next + size).collect();
            for (i, &u) in part.iter().enumerate() {
                for &v in &part[i + 1..] {
                    clique_edges.push((u, v));
                }
            }
            next += size;
            parts.push(part);
        }
        Ok(Layout {
            n: next,
            parts: Partition::from_parts(next, parts)?,
            clique_edges,
        })
    }

    fn instance(&self, g: &Graph, path: [Vertex; 4]) -> Result<ReductionInstance> {
        let [u0, u1, u2, u3] = path;
        let a: Vec<Vertex> = self.parts.parts().iter().map(|p| p[0]).collect();
        let mut sigma = vec![None; g.vertex_count()];
        let kept = (0..g.vertex_count()).filter(|&v| v != u1 && v != u2);
        for (v, &x) in kept.zip(&a) {
            sigma[v] = Some(x);
        }
        let mut edges = self.clique_edges.clone();
        for &(u, v) in g.edges() {
            if let (Some(x), Some(y)) = (sigma[u], sigma[v]) {
                edges.push((x.min(y), x.max(y)));
            }
        }
        let graph = Graph::new(self.n, edges)?;
        let mut f: Vec<usize> = (0..self.n).map(|v| self.parts.part(self.parts.part_of(v)).len() - 1).collect();
        for &x in &a {
            f[x] += 2;
        }
        for end in [u0, u3] {
            f[sigma[end].expect("path ends are kept")] -= 1;
        }
        Ok(ReductionInstance {
            graph,
            f: DegreeSpec::new(f),
            path,
            sigma,
            parts: self.parts.clone(),
        })
    }
}

/// Every simple path `u0 u1 u2 u3` of `g` with `u1` the pivot, in
/// lexicographic order of `(u0, u2, u3)`.
pub fn pivot_paths(g: &Graph) -> Vec<[Vertex; 4]> {
    if g.vertex_count() == 0 {
        return Vec::new();
    }
    let u1 = PIVOT;
    let sorted = |v: Vertex| {
        let mut nb: Vec<Vertex> = g.incident(v).iter().map(|&(u, _)| u).collect();
        nb.sort_unstable();
        nb
    };
    let around = sorted(u1);
    let mut out = Vec::new();
    for &u0 in &around {
        for &u2 in &around {
            if u2 == u0 {
                continue;
            }
            for u3 in sorted(u2) {
                if u3 != u0 && u3 != u1 {
                    out.push([u0, u1, u2, u3]);
                }
            }
        }
    }
    out
}

/// Streams the family for `g`, one instance per pivot path.
pub fn generate_family<'g>(g: &'g Graph, params: &ReductionParams) -> Result<Family<'g>> {
    params.validate()?;
    if g.vertex_count() < 4 {
        return Err(Error::Precondition(format!(
            "the reduction needs at least 4 vertices, got {}",
            g.vertex_count()
        )));
    }
    let layout = Layout::new(g.vertex_count(), params)?;
    let mut paths = pivot_paths(g);
    if let Some(cap) = params.max_output {
        paths.truncate(cap);
    }
    Ok(Family {
        g,
        layout,
        paths: paths.into_iter(),
    })
}

/// The instance for one path, built from scratch.
pub fn instance_for_path(g: &Graph, params: &ReductionParams, path: [Vertex; 4]) -> Result<ReductionInstance> {
    params.validate()?;
    if g.vertex_count() < 4 {
        return Err(Error::Precondition("the reduction needs at least 4 vertices".into()));
    }
    Layout::new(g.vertex_count(), params)?.instance(g, path)
}

/// Iterator returned by [`generate_family`].
#[derive(Debug, Clone)]
pub struct Family<'g> {
    g: &'g Graph,
    layout: Layout,
    paths: std::vec::IntoIter<[Vertex; 4]>,
}

impl Family<'_> {
    /// Vertex count of every `G'` in the family.
    pub fn instance_vertices(&self) -> usize {
        self.layout.n
    }
}

impl Iterator for Family<'_> {
    type Item = ReductionInstance;

    fn next(&mut self) -> Option<ReductionInstance> {
        let path = self.paths.next()?;
        Some(self.layout.instance(self.g, path).expect("family layout builds valid graphs"))
    }
}

/// Whether `g` is Hamiltonian exactly when some instance of its family has a
/// connected f-factor, both sides decided by exhaustive search.
pub fn verify_reduction(g: &Graph, params: &ReductionParams) -> Result<bool> {
    if g.vertex_count() > HAMILTONIAN_SOFT_LIMIT {
        return Err(Error::SizeLimit(format!(
            "{} input vertices exceed the oracle limit of {HAMILTONIAN_SOFT_LIMIT}",
            g.vertex_count()
        )));
    }
    let hamiltonian = has_hamiltonian_cycle(g);
    let mut solvable = false;
    for inst in generate_family(g, params)? {
        if inst.graph.edge_count() > MAX_VERIFIED_EDGES {
            return Err(Error::SizeLimit(format!(
                "instance with {} edges exceeds the oracle limit of {MAX_VERIFIED_EDGES}",
                inst.graph.edge_count()
            )));
        }
        if enumerate_f_factors(&inst.graph, &inst.f, true).next().is_some() {
            solvable = true;
            break;
        }
    }
    Ok(hamiltonian == solvable)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn solvable(inst: &ReductionInstance) -> bool {
        enumerate_f_factors(&inst.graph, &inst.f, true).next().is_some()
    }

    #[test]
    fn four_cycle_family() {
        let g = families::cycle(4);
        let family = generate_family(&g, &ReductionParams::desk(3)).unwrap();
        assert_eq!(family.instance_vertices(), 6);
        let all: Vec<_> = family.collect();
        // u0, u2 in {1, 3}, u3 = 2.
        assert_eq!(all.iter().map(|i| i.path).collect::<Vec<_>>(), vec![[1, 0, 3, 2], [3, 0, 1, 2]]);
        for inst in &all {
            assert_eq!(inst.parts.len(), 2);
            assert_eq!(inst.a_vertices(), vec![0, 3]);
        }
        assert!(all.iter().any(solvable));
    }

    #[test]
    fn relabeled_four_cycle_has_the_same_shape() {
        let k4 = families::complete(4);
        let c4 = Graph::new(4, k4.edges().iter().copied().filter(|&e| e != (0, 1) && e != (2, 3))).unwrap();
        let family: Vec<_> = generate_family(&c4, &ReductionParams::desk(3)).unwrap().collect();
        assert_eq!(family.len(), 2);
        assert!(family.iter().all(|i| i.graph.vertex_count() == 6 && i.parts.len() == 2));
    }

    #[test]
    fn star_family_is_unsolvable() {
        let g = families::star(3);
        assert!(generate_family(&g, &ReductionParams::desk(3)).unwrap().all(|i| !solvable(&i)));
    }

    #[test]
    fn degrees_and_offsets() {
        let g = families::complete(5);
        for inst in generate_family(&g, &ReductionParams::desk(4)).unwrap() {
            let [u0, _, _, u3] = inst.path;
            let a = inst.a_vertices();
            for v in 0..inst.graph.vertex_count() {
                let clique = 3;
                let want = if v == inst.sigma[u0].unwrap() || v == inst.sigma[u3].unwrap() {
                    clique + 1
                } else if a.contains(&v) {
                    clique + 2
                } else {
                    clique
                };
                assert_eq!(inst.f.get(v), want);
                assert!(inst.f.get(v) <= inst.graph.degree(v));
            }
        }
    }

    #[test]
    fn regenerating_matches_the_stream() {
        let g = families::prism();
        let params = ReductionParams::desk(3);
        for inst in generate_family(&g, &params).unwrap() {
            assert_eq!(instance_for_path(&g, &params, inst.path).unwrap(), inst);
        }
    }

    #[test]
    fn verify_small_graphs() {
        let p = ReductionParams::desk(3);
        assert!(verify_reduction(&families::cycle(4), &p).unwrap());
        assert!(verify_reduction(&families::star(3), &p).unwrap());
        assert!(verify_reduction(&families::cycle(5), &p).unwrap());
    }

    #[test]
    fn floor_bound() {
        assert!(parts_floor_bound(100, 9).unwrap());
        assert!(parts_floor_bound(16, 3).unwrap());
        assert!(parts_floor_bound(9, 3).is_err());
    }

    #[test]
    fn full_size_mode_needs_an_override_beyond_tiny_sizes() {
        let g = families::complete(12);
        let params = ReductionParams {
            epsilon: 0.5,
            part_size_override: None,
            max_output: None,
        };
        assert!(matches!(generate_family(&g, &params), Err(Error::SizeLimit(_))));
        let scale = full_scale(12, 0.5);
        assert_eq!(scale.parts, 10);
        assert!(scale.n >= 2f64.powf(12f64.powf(1.0 / 1.5)));
    }

    #[test]
    fn rejects_bad_parameters() {
        let g = families::cycle(4);
        assert!(generate_family(&g, &ReductionParams::desk(2)).is_err());
        assert!(generate_family(&families::cycle(3), &ReductionParams::desk(3)).is_err());
        let mut p = ReductionParams::desk(3);
        p.epsilon = 0.0;
        assert!(generate_family(&g, &p).is_err());
        p = ReductionParams::desk(3);
        p.max_output = Some(1);
        assert_eq!(generate_family(&g, &p).unwrap().count(), 1);
    }
}
