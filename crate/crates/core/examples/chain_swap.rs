//! Growing R and absorbing x along a two-step escape chain.

use equicolor::constructive::{build_r, chain_swap_place, SolverState};
use equicolor::{verify_equitable_k_coloring, Graph, Partition};

fn main() -> equicolor::Result<()> {
    // x = 0 shares its class with y = 1. Vertex 4 can escape V_2 into V_1 and
    // vertex 8 can escape V_3 into V_2, but x only sees V_1 and V_2.
    let edges = [(0, 1), (0, 3), (3, 2), (5, 1), (1, 6), (2, 7), (2, 8), (6, 3), (7, 4)];
    let g = Graph::from_edges(9, &edges)?;
    let before = Partition::new(9, vec![vec![0, 1, 2], vec![3, 4, 5], vec![6, 7, 8]], None)?;

    let mut s = SolverState::new(&g, 3, 0, 1, &before)?;
    let r = build_r(&mut s);
    println!("R = {r:?}");
    for (j, p) in s.parent.iter().enumerate() {
        if let Some((u, i)) = p {
            println!("  V_{} joins through {u}, which has no neighbor in V_{}", j + 1, i + 1);
        }
    }
    let cs = chain_swap_place(&s).expect("a class of R has no neighbor of x");
    for mv in &cs.chain {
        println!("  move {mv:?}");
    }
    println!("after: {:?}", cs.partition.classes());
    verify_equitable_k_coloring(&g, &cs.partition, 3).expect("valid");
    Ok(())
}
