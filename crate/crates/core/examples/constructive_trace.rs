//! The constructive solver on a triangle-free planar graph, printing which
//! mechanism closed each level.

use equicolor::constructive::solve_equitable;
use equicolor::gen::random_family_graph;
use equicolor::{FamilySpec, SolveBudget};

fn main() -> equicolor::Result<()> {
    let family = FamilySpec::triangle_free_planar();
    let g = random_family_graph(15, &family.clone().with_max_degree(5), 11, None);
    let m = g.max_degree();
    println!("n={} e={} m={m}", g.order(), g.size());
    let out = solve_equitable(&g, m, &family, SolveBudget::default())?;
    for l in &out.trace.levels {
        let edge = l.edge.map(|(x, y)| format!("{x}-{y}")).unwrap_or_default();
        println!(
            "depth {} n={:<2} e={:<2} {:<16} {edge:<6} r={:?} chain={:?}",
            l.depth, l.n, l.edges, l.mechanism.label(), l.r, l.chain_length
        );
    }
    println!("{}: {:?}", out.outcome.verdict.label(), out.outcome.coloring().map(|p| p.classes().to_vec()));
    Ok(())
}
