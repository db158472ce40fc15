//! Permutation groups, graph families and star/edge-star transitivity.

pub mod autgroup;
pub mod cosetgraph;
pub mod families;
pub mod graph;
pub mod group;
pub mod limits;
pub mod localsym;
pub mod par;
pub mod perm;
pub mod suites;

pub use group::{PermGroup, TransporterChain};
pub use limits::Limits;
pub use localsym::{analyze, CheckConfig, SymmetryReport};
pub use par::Execution;
pub use perm::Perm;
