//! Connected f-factors by partition refinement.
//!
//! Starting from any f-factor `H_0` and the one-part partition `Q_0 = {V}`,
//! each level refines `Q_i` into `Q_{i+1}`, the components `H_i` induces
//! inside each part. If nothing splits, `H_i` is connected. Otherwise some
//! f-factor `H'` must connect `Q_{i+1}`; one is found by forcing the edges of
//! a spanning tree of `G/Q_{i+1}`, trying trees in order. `H_{i+1}` is then
//! obtained from `H_i` by switching along minimal alternating circuits of
//! `H_i △ H'` that cover the new tree edges, which keeps most of `H_i`'s
//! neighborhoods intact. When no tree admits a factor, `Q_{i+1}` certifies
//! that no connected f-factor exists.
//!
//! The weighted variant starts from a minimum-weight f-factor and picks `H'`
//! of minimum weight over all trees, so the final factor is a minimum-weight
//! connected f-factor.

use rayon::prelude::*;
use serde::Serialize;

use crate::alternating::{color_difference, min_ac_set, retained_neighbors, switching, AlternatingCircuit};
use crate::error::{Error, Result};
use crate::factor::{
    f_factor, f_factor_with_forced, is_f_factor, min_weight_f_factor,
    min_weight_f_factor_with_forced,
};
use crate::graph::{DegreeSpec, EdgeId, FactorSubgraph, Graph, Weight};
use crate::partition::{refine_partition, spanning_trees, Partition};

/// Trees handed to the worker pool per batch.
const TREE_BATCH: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverOptions {
    /// Worker threads for trying spanning trees; 1 keeps everything on the
    /// calling thread. Results do not depend on this.
    pub threads: usize,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions { threads: 1 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Found(FactorSubgraph),
    /// `G` has no f-factor at all.
    NoFFactor,
    /// No f-factor connects this partition, so none is connected.
    PartitionUnconnectable(Partition),
}

/// Diagnostics for one refinement level.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LevelRecord {
    pub level: usize,
    /// `|Q_i|` on entry.
    pub parts: usize,
    /// `|Q_{i+1}|` after refining by the current factor.
    pub refined_parts: usize,
    pub trees_examined: usize,
    pub fallback_used: bool,
    /// Minimal circuits switched at this level.
    pub circuits: usize,
    /// Whether every vertex kept at least `f(v) - 2(|Q_{i+1}| - 1)` of its
    /// neighbors; `None` when no switching happened.
    pub retention_holds: Option<bool>,
    pub weight: Option<Weight>,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct SolveTrace {
    pub levels: Vec<LevelRecord>,
    pub fallback_used: bool,
    /// `n / min f(v)`, absent when some `f(v) = 0`.
    pub g: Option<f64>,
    /// Whether `n >= 2 g^4` holds.
    pub size_premise_holds: bool,
}

impl SolveTrace {
    fn new(graph: &Graph, f: &DegreeSpec) -> Self {
        let n = graph.vertex_count();
        let min_f = f.min_value().unwrap_or(0);
        let g = (min_f > 0).then(|| n as f64 / min_f as f64);
        // n >= 2 (n / m)^4  <=>  m^4 >= 2 n^3
        let premise = min_f > 0 && (min_f as u128).pow(4) >= 2 * (n as u128).pow(3);
        SolveTrace {
            levels: Vec::new(),
            fallback_used: false,
            g,
            size_premise_holds: premise,
        }
    }

    /// Calls made after the first one, i.e. levels beyond level 0.
    pub fn recursive_calls(&self) -> usize {
        self.levels.len().saturating_sub(1)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Solution {
    pub outcome: Outcome,
    pub trace: SolveTrace,
}

impl Solution {
    pub fn factor(&self) -> Option<&FactorSubgraph> {
        match &self.outcome {
            Outcome::Found(h) => Some(h),
            _ => None,
        }
    }

    pub fn witness(&self) -> Option<&Partition> {
        match &self.outcome {
            Outcome::PartitionUnconnectable(q) => Some(q),
            _ => None,
        }
    }

    pub fn is_found(&self) -> bool {
        self.factor().is_some()
    }
}

/// A connected f-factor of `graph`, or the reason there is none.
pub fn connected_f_factor(graph: &Graph, f: &DegreeSpec, options: &SolverOptions) -> Result<Solution> {
    solve(graph, f, false, options)
}

/// A connected f-factor of minimum total weight.
pub fn min_connected_f_factor(
    graph: &Graph,
    f: &DegreeSpec,
    options: &SolverOptions,
) -> Result<Solution> {
    if !graph.is_weighted() {
        return Err(Error::MissingWeights);
    }
    solve(graph, f, true, options)
}

fn solve(graph: &Graph, f: &DegreeSpec, weighted: bool, options: &SolverOptions) -> Result<Solution> {
    f.check_length(graph)?;
    let start = if weighted {
        min_weight_f_factor(graph, f)?
    } else {
        f_factor(graph, f)?
    };
    match start {
        Some(h) => {
            restricted_f_factor(graph, f, h, Partition::whole(graph.vertex_count()), weighted, options)
        }
        None => Ok(Solution {
            outcome: Outcome::NoFFactor,
            trace: SolveTrace::new(graph, f),
        }),
    }
}

/// Refines `q` by `h` until the partition is stable (then `h` is
/// connected) or some refinement cannot be connected.
///
/// `h` must be an f-factor with `h/q` connected.
pub fn restricted_f_factor(
    graph: &Graph,
    f: &DegreeSpec,
    mut h: FactorSubgraph,
    mut q: Partition,
    weighted: bool,
    options: &SolverOptions,
) -> Result<Solution> {
    h.check_host(graph)?;
    if q.vertex_count() != graph.vertex_count() {
        return Err(Error::InvalidPartition(format!(
            "partition covers {} vertices, graph has {}",
            q.vertex_count(),
            graph.vertex_count()
        )));
    }
    let pool = worker_pool(options)?;
    let mut trace = SolveTrace::new(graph, f);
    for level in 0.. {
        if !is_f_factor(graph, f, &h) {
            return Err(Error::Internal(format!("level {level}: current subgraph is not an f-factor")));
        }
        if !q.is_connected_by_factor(graph, &h) {
            return Err(Error::Internal(format!("level {level}: current factor does not connect the partition")));
        }
        let next = refine_partition(graph, &h, &q);
        let mut record = LevelRecord {
            level,
            parts: q.len(),
            refined_parts: next.len(),
            trees_examined: 0,
            fallback_used: false,
            circuits: 0,
            retention_holds: None,
            weight: if weighted { Some(h.weight(graph)?) } else { None },
        };
        log::debug!("level {level}: {} parts refine to {}", q.len(), next.len());
        if next.len() == q.len() {
            trace.levels.push(record);
            if !h.is_connected(graph) {
                return Err(Error::Internal("stable partition but disconnected factor".into()));
            }
            return Ok(Solution {
                outcome: Outcome::Found(h),
                trace,
            });
        }

        let (connector, examined) = partition_connector_in(graph, f, &next, &h, weighted, pool.as_ref())?;
        let Some(connector) = connector else {
            record.trees_examined = examined;
            trace.levels.push(record);
            return Ok(Solution {
                outcome: Outcome::PartitionUnconnectable(next),
                trace,
            });
        };
        record.trees_examined = connector.trees_examined;

        let step = next_factor(graph, &h, &connector.factor, &next, &connector.tree, weighted)?;
        record.fallback_used = step.fallback_used;
        record.circuits = step.circuits.len();
        if !step.fallback_used {
            let slack = 2 * (next.len() - 1);
            let holds = (0..graph.vertex_count())
                .all(|v| retained_neighbors(graph, &h, &step.factor, v) + slack >= f.get(v));
            record.retention_holds = Some(holds);
        }
        trace.fallback_used |= step.fallback_used;
        trace.levels.push(record);
        h = step.factor;
        q = next;
    }
    unreachable!("the partition refines strictly at every level")
}

/// Result of [`partition_connector`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Connector {
    /// An f-factor containing every edge of `tree`.
    pub factor: FactorSubgraph,
    /// Edge set of a spanning tree of `G/Q`.
    pub tree: Vec<EdgeId>,
    /// Trees tried, in enumeration order, up to and including the one used
    /// (all of them in weighted mode).
    pub trees_examined: usize,
}

/// An f-factor connecting `q` through a spanning tree of `G/q`.
///
/// Unweighted: the first tree (in enumeration order) admitting an f-factor
/// that contains it. Weighted: the lightest such factor over all trees, ties
/// going to the earlier tree. Forcing the whole tree (not only the edges new
/// relative to `h_prev`) guarantees the result connects `q`.
pub fn partition_connector(
    graph: &Graph,
    f: &DegreeSpec,
    q: &Partition,
    h_prev: &FactorSubgraph,
    weighted: bool,
    options: &SolverOptions,
) -> Result<Option<Connector>> {
    let pool = worker_pool(options)?;
    Ok(partition_connector_in(graph, f, q, h_prev, weighted, pool.as_ref())?.0)
}

fn worker_pool(options: &SolverOptions) -> Result<Option<rayon::ThreadPool>> {
    if options.threads <= 1 {
        return Ok(None);
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(options.threads)
        .build()
        .map(Some)
        .map_err(|e| Error::Internal(format!("thread pool: {e}")))
}

type Attempt = Option<(Weight, FactorSubgraph)>;

fn try_tree(graph: &Graph, f: &DegreeSpec, tree: &[EdgeId], weighted: bool) -> Result<Attempt> {
    let h = if weighted {
        min_weight_f_factor_with_forced(graph, f, tree)?
    } else {
        f_factor_with_forced(graph, f, tree)?
    };
    match h {
        Some(h) => {
            let w = if weighted { h.weight(graph)? } else { 0 };
            Ok(Some((w, h)))
        }
        None => Ok(None),
    }
}

fn partition_connector_in(
    graph: &Graph,
    f: &DegreeSpec,
    q: &Partition,
    h_prev: &FactorSubgraph,
    weighted: bool,
    pool: Option<&rayon::ThreadPool>,
) -> Result<(Option<Connector>, usize)> {
    h_prev.check_host(graph)?;
    let mut trees = spanning_trees(graph, q)?;
    let mut best: Option<(Weight, usize, Vec<EdgeId>, FactorSubgraph)> = None;
    let mut examined = 0;
    loop {
        let batch: Vec<Vec<EdgeId>> = match pool {
            Some(_) => trees.by_ref().take(TREE_BATCH).collect(),
            None => trees.next().into_iter().collect(),
        };
        if batch.is_empty() {
            break;
        }
        let attempts: Vec<Result<Attempt>> = match pool {
            Some(pool) => pool.install(|| {
                batch
                    .par_iter()
                    .map(|t| try_tree(graph, f, t, weighted))
                    .collect()
            }),
            None => batch.iter().map(|t| try_tree(graph, f, t, weighted)).collect(),
        };
        for (tree, attempt) in batch.into_iter().zip(attempts) {
            let index = examined;
            examined += 1;
            let Some((w, h)) = attempt? else { continue };
            if !weighted {
                let found = Connector {
                    factor: h,
                    tree,
                    trees_examined: examined,
                };
                return Ok((Some(found), examined));
            }
            if best.as_ref().map_or(true, |b| (w, index) < (b.0, b.1)) {
                best = Some((w, index, tree, h));
            }
        }
    }
    let best = best.map(|(_, _, tree, factor)| Connector {
        factor,
        tree,
        trees_examined: examined,
    });
    Ok((best, examined))
}

/// Result of [`next_factor`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NextFactor {
    pub factor: FactorSubgraph,
    /// Circuits switched on `h_prev` (empty when the fallback was taken).
    pub circuits: Vec<AlternatingCircuit>,
    pub fallback_used: bool,
}

/// Moves from `h_prev` toward `h_new` by switching only the minimal
/// alternating circuits of `h_prev △ h_new` that carry tree edges missing
/// from `h_prev`.
///
/// Falls back to `h_new` itself if the switched factor does not connect `q`,
/// or, in weighted mode, if it is heavier than `h_new`.
pub fn next_factor(
    graph: &Graph,
    h_prev: &FactorSubgraph,
    h_new: &FactorSubgraph,
    q: &Partition,
    tree: &[EdgeId],
    weighted: bool,
) -> Result<NextFactor> {
    for &e in tree {
        graph.check_edge(e)?;
        if !h_new.contains(e) {
            return Err(Error::Precondition(format!(
                "tree edge {e} is not in the connecting factor"
            )));
        }
    }
    let difference = color_difference(graph, h_prev, h_new)?;
    let forced: Vec<EdgeId> = tree.iter().copied().filter(|&e| !h_prev.contains(e)).collect();
    let circuits = min_ac_set(&difference, &forced)?;
    let switched = switching(graph, h_prev, &circuits)?;
    let mut keep = q.is_connected_by_factor(graph, &switched);
    if keep && weighted {
        keep = switched.weight(graph)? == h_new.weight(graph)?;
    }
    if keep {
        Ok(NextFactor {
            factor: switched,
            circuits,
            fallback_used: false,
        })
    } else {
        log::debug!("switching did not reproduce the connecting factor, using it directly");
        Ok(NextFactor {
            factor: h_new.clone(),
            circuits: Vec::new(),
            fallback_used: true,
        })
    }
}
