//! Graph generation: canonical forms, exhaustive enumeration, seeded random
//! family members and exception detection.

pub mod canon;
pub mod enumerate;
pub mod exception;
pub mod random;

pub use canon::{are_isomorphic, canonical_code, canonical_form, CanonCode};
pub use enumerate::{enumerate_family, enumerate_levels, GenConfig, GenMode, EXHAUSTIVE_CAP};
pub use exception::{is_exception, ExceptionKind};
pub use random::{gnp, random_family_graph, random_family_graphs};

use crate::error::Result;
use crate::graph::Graph;

/// Runs either mode of `c`.
pub fn generate(c: &GenConfig) -> Result<Vec<Graph>> {
    match c.mode {
        GenMode::Exhaustive => enumerate_family(c),
        GenMode::Random { .. } => random_family_graphs(c),
    }
}
