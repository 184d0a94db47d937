//! Canonical labeling: relabeled copies get the same code.

use equicolor::gen::{are_isomorphic, canonical_code, canonical_form};
use equicolor::graph::named::{cube, cycle, petersen};

fn main() -> equicolor::Result<()> {
    let g = petersen();
    let h = g.relabel(&[3, 9, 0, 7, 1, 8, 2, 6, 4, 5])?;
    println!("codes equal: {}", canonical_code(&g)? == canonical_code(&h)?);
    println!("canonical petersen edges: {:?}", canonical_form(&g)?.edge_vec());
    let two_c4 = cycle(4).disjoint_union(&cycle(4));
    println!("cube ~ 2C4: {}", are_isomorphic(&cube(), &two_c4)?);
    Ok(())
}
