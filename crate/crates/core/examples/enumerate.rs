//! Isomorph-free enumeration: counts per order for a few families.

use equicolor::gen::enumerate_levels;
use equicolor::FamilySpec;

fn main() -> equicolor::Result<()> {
    let runs = [
        ("connected graphs", FamilySpec::unrestricted(), 7, true),
        ("planar graphs", FamilySpec::planar(), 7, false),
        ("triangle-free planar", FamilySpec::triangle_free_planar(), 9, false),
        ("C4-free planar", FamilySpec::c4_free_planar(), 8, false),
        ("girth >= 6 planar", FamilySpec::planar_with_girth(6), 10, false),
    ];
    for (name, f, n, connected) in runs {
        let levels = enumerate_levels(&f, n, connected, None)?;
        let counts: Vec<usize> = levels.iter().skip(1).map(Vec::len).collect();
        println!("{name:<22} {counts:?}");
    }
    Ok(())
}
