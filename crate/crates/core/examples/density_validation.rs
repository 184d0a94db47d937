//! Checks the density bound over every C4-free planar graph up to order 8
//! and shows the extremal sizes.

use equicolor::harness::{run_bound_validation, CorpusSpec};
use equicolor::FamilySpec;

fn main() -> equicolor::Result<()> {
    let corpus = CorpusSpec::Exhaustive { n_min: 1, n_max: 8, connected: false, max_edges: None };
    let report = run_bound_validation(&FamilySpec::c4_free_planar(), &corpus)?;
    for o in &report.orders {
        println!(
            "n={} graphs={:<4} max e={:<2} bound={:?} attained={} max δ={} δ cap={:?}",
            o.n, o.graphs, o.max_edges, o.bound, o.attained, o.max_min_degree, o.delta_cap
        );
    }
    println!("violations: {}", report.critical.len());
    Ok(())
}
