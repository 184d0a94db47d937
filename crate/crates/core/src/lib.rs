//! Equitable colorings of sparse planar graphs: exact and constructive
//! solvers, lower bounds for the sizes at which the constructive argument
//! applies, family-restricted graph generation and a verification harness.

pub mod bounds;
pub mod coloring;
pub mod constructive;
pub mod cycles;
pub mod error;
pub mod exact;
pub mod family;
pub mod gen;
pub mod graph;
pub mod harness;
pub mod io;
pub mod planarity;

pub use coloring::{verify_equitable_k_coloring, ColoringViolation, EquitableColoring, Partition};
pub use error::{Error, Result};
pub use exact::{decide_equitable, decide_proper, SolveBudget, SolveOutcome, Verdict};
pub use family::{matches_family, FamilySpec};
pub use graph::{Graph, Vertex};
