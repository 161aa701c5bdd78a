//! Connected f-factors of undirected graphs.
//!
//! An f-factor of `G` is a spanning subgraph in which every vertex `v` has
//! degree exactly `f(v)`. This crate decides whether a *connected* f-factor
//! exists and builds one (or a minimum-weight one) by refining vertex
//! partitions: start from any f-factor, split every part into the components
//! the current factor induces on it, find an f-factor that connects the finer
//! partition through a spanning tree of the quotient graph, and move toward it
//! by switching along minimal alternating circuits. When a partition cannot be
//! connected by any f-factor it is reported as a certificate of
//! non-existence.
//!
//! Supporting pieces:
//!
//! * [`matching`]: Edmonds blossom matching (cardinality and min-weight perfect),
//! * [`factor`]: f-factors through the Tutte gadget, with forced edges and weights,
//! * [`alternating`]: colored symmetric differences, alternating Euler tours,
//!   minimal alternating circuits and switching,
//! * [`oracle`]: brute-force enumeration used as ground truth,
//! * [`reduction`]: the Hamiltonian-cycle to connected-f-factor instance family.

pub mod alternating;
pub mod error;
pub mod factor;
pub mod families;
pub mod graph;
pub mod matching;
pub mod oracle;
pub mod partition;
pub mod reduction;
pub mod solver;
mod union_find;

pub use alternating::{AlternatingCircuit, Color, ColoredSubgraph};
pub use error::{Error, Result};
pub use graph::{DegreeSpec, EdgeId, FactorSubgraph, Graph, Vertex, Weight};
pub use matching::Matching;
pub use partition::{Partition, QuotientEdge, QuotientGraph};
pub use solver::{Outcome, Solution, SolveTrace, SolverOptions};

