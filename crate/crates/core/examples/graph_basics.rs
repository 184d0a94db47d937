//! Building graphs, checking family membership and reading edge lists.

use equicolor::cycles::{find_cycle_of_length, girth};
use equicolor::graph::named::{cube, petersen};
use equicolor::io::{parse_edge_list, write_edge_list};
use equicolor::planarity::is_planar;
use equicolor::{matches_family, FamilySpec, Graph};

fn main() -> equicolor::Result<()> {
    let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)])?;
    println!("n={} e={} Δ={} girth={:?}", g.order(), g.size(), g.max_degree(), girth(&g));
    println!("a triangle: {:?}", find_cycle_of_length(&g, 3)?);

    for (name, h) in [("cube", cube()), ("petersen", petersen())] {
        let report = matches_family(&h, &FamilySpec::triangle_free_planar());
        println!("{name}: planar={} triangle-free planar={} {:?}", is_planar(&h), report.matches, report.violation);
    }

    let f: FamilySpec = "planar,girth=5,maxdeg=3".parse()?;
    println!("parsed family: {f}");

    let text = write_edge_list(&cube());
    let back = parse_edge_list(&text)?;
    assert_eq!(back, cube());
    print!("{text}");
    Ok(())
}
