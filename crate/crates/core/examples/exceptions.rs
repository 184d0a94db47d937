//! The graphs excluded from the conjecture, and what the exact solver says.

use equicolor::gen::is_exception;
use equicolor::graph::named::*;
use equicolor::{decide_equitable, SolveBudget};

fn main() -> equicolor::Result<()> {
    for (name, g) in [
        ("K5", complete(5)),
        ("C7", cycle(7)),
        ("C8", cycle(8)),
        ("K3,3", complete_bipartite(3, 3)),
        ("K4,4", complete_bipartite(4, 4)),
        ("petersen", petersen()),
    ] {
        let m = g.max_degree();
        let kind = is_exception(&g, m);
        let verdict = decide_equitable(&g, m, SolveBudget::default())?.verdict;
        println!("{name:<9} m={m} exception={:<28} colorable={}", format!("{kind:?}"), verdict.label());
    }
    Ok(())
}
