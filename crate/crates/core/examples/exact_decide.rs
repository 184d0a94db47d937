//! Exact equitable and proper coloring decisions, including a budget that
//! runs out.

use equicolor::graph::named::*;
use equicolor::{decide_equitable, decide_proper, SolveBudget};

fn main() -> equicolor::Result<()> {
    let cases = [
        ("C5", cycle(5), 2),
        ("C5", cycle(5), 3),
        ("K3,3", complete_bipartite(3, 3), 3),
        ("K4,4", complete_bipartite(4, 4), 4),
        ("star K1,5", star(5), 3),
        ("petersen", petersen(), 3),
    ];
    for (name, g, k) in cases {
        let out = decide_equitable(&g, k, SolveBudget::default())?;
        let sizes = out.coloring().map(|p| p.sizes());
        println!("{name:<10} k={k}: {:<9} nodes={:<4} sizes={sizes:?}", out.verdict.label(), out.stats.nodes);
    }
    // A star has chromatic number 2 but no equitable 2-coloring.
    let g = star(5);
    let proper = decide_proper(&g, 2, SolveBudget::default())?.verdict.label();
    let equitable = decide_equitable(&g, 2, SolveBudget::default())?.verdict.label();
    println!("K1,5 with 2 colors: proper {proper}, equitable {equitable}");

    let tight = decide_equitable(&petersen(), 2, SolveBudget::nodes(3))?;
    println!("petersen k=2 with 3 nodes: {}", tight.verdict.label());
    Ok(())
}
