//! Directed intersection representations of DAGs.
//!
//! A representation assigns every vertex a nonempty color set so that `(u, v)`
//! is an arc exactly when the two sets intersect and `u`'s set is strictly
//! smaller. The directed intersection number (DIN) is the fewest colors any
//! representation needs; only acyclic digraphs have representations.
//!
//! * [`graph`] and [`families`]: the digraph model and generators.
//! * [`representation`]: color sets, the verifier and the JSON format.
//! * [`construct`]: constructive upper-bound algorithms and closed forms.
//! * [`bounds`]: integer bound formulas.
//! * [`solver`]: exact DIN by complete search.

pub mod bounds;
pub mod construct;
mod error;
pub mod families;
pub mod graph;
pub mod representation;
pub mod solver;

pub use error::{Error, Result};
pub use families::{gen_family, Family};
pub use graph::{Digraph, LevelDecomposition, VertexOrder};
pub use representation::{verify, Representation, ValidityReport, Violation, ViolationKind};
pub use solver::{exact_din, feasible_with_palette, Feasibility, SolveBudget, SolveOptions, SolveResult, SolveStatus};
