//! Seeded random family members and their density against the bound.

use equicolor::bounds::density_bound;
use equicolor::gen::random_family_graph;
use equicolor::FamilySpec;

fn main() -> equicolor::Result<()> {
    for (name, f) in [
        ("triangle-free planar", FamilySpec::triangle_free_planar()),
        ("C4-free planar", FamilySpec::c4_free_planar()),
        ("girth >= 6 planar", FamilySpec::planar_with_girth(6)),
    ] {
        for n in [20, 40, 80] {
            let g = random_family_graph(n, &f, 2024, None);
            assert!(f.check(&g).is_ok());
            println!("{name:<22} n={n:<3} e={:<4} bound={:?} Δ={}", g.size(), density_bound(&f, n)?, g.max_degree());
        }
    }
    Ok(())
}
