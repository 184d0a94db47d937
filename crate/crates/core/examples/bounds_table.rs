//! Size lower bounds for non-colorable members, with per-row provenance.

use equicolor::bounds::{density_bound, q_lower_bound, r1_t_threshold, FamilyKind};
use equicolor::FamilySpec;

fn main() -> equicolor::Result<()> {
    for (kind, m, delta) in [(FamilyKind::TriangleFree, 4, 6), (FamilyKind::TriangleFree, 5, 7), (FamilyKind::C4Free, 6, 8)] {
        for t in [3, 6, 9] {
            let q = q_lower_bound(kind, m, delta, t)?;
            let rows: Vec<String> = q.provenance.rows.iter().map(|r| format!("r{}={}", r.r, r.value)).collect();
            println!(
                "{kind} m={m} Δ={delta} t={t}: Q={} (winner r={:?}, cap {}) rows [{}]",
                q.value, q.provenance.winner, q.provenance.cap, rows.join(" ")
            );
        }
    }
    println!("r=1 row needs t >= {:?} for m=6, Δ=7", r1_t_threshold(6, 7)?);
    for n in [8, 12, 20] {
        println!(
            "n={n}: triangle-free planar e <= {:?}, C4-free planar e <= {:?}",
            density_bound(&FamilySpec::triangle_free_planar(), n)?,
            density_bound(&FamilySpec::c4_free_planar(), n)?
        );
    }
    Ok(())
}
