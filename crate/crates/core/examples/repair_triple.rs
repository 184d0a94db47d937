//! Finding an (α, β, γ) triple when R cannot absorb x, and the split it allows.

use equicolor::constructive::{build_r, chain_swap_place, find_repair_triple, SolverState};
use equicolor::{Graph, Partition};

fn main() -> equicolor::Result<()> {
    // V_1 = {x=0, y=1, 2}, V_2 = {3, 4, 5}; every vertex of V_2 sees V_1, so
    // R = {V_1} and no chain exists.
    let g = Graph::from_edges(6, &[(0, 1), (3, 2), (4, 2), (5, 1)])?;
    let coloring = Partition::new(6, vec![vec![0, 1, 2], vec![3, 4, 5]], None)?;
    let mut s = SolverState::new(&g, 2, 0, 1, &coloring)?;
    println!("R = {:?}, chain: {:?}", build_r(&mut s), chain_swap_place(&s).map(|c| c.chain));
    println!("A = {:?}, B = {:?}", s.a(), s.b());
    let tr = find_repair_triple(&s).expect("triple");
    println!("alpha={} beta={} gamma={}", tr.alpha, tr.beta, tr.gamma);
    let mut first: Vec<usize> = s.partition.class(0).iter().copied().filter(|&v| v != tr.gamma).collect();
    first.extend([tr.alpha, tr.beta]);
    println!("new V_1 = {first:?}; the rest {:?} is colored with m - r colors",
        s.b().into_iter().filter(|v| *v != tr.alpha && *v != tr.beta).chain([tr.gamma]).collect::<Vec<_>>());
    Ok(())
}
