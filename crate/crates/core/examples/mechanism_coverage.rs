//! Runs the constructive solver over every connected triangle-free planar
//! graph with maximum degree 2..=6 on at most `N` vertices (default 10), with
//! m equal to the maximum degree, and prints how often each mechanism closed
//! a level. Exception graphs are skipped.

use std::collections::BTreeMap;

use equicolor::constructive::{solve_equitable, Mechanism};
use equicolor::gen::{enumerate_levels, is_exception};
use equicolor::{FamilySpec, SolveBudget};

fn main() -> equicolor::Result<()> {
    let n_max: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(10);
    let family = FamilySpec::triangle_free_planar().with_max_degree(6);
    let connected = !std::env::args().any(|a| a == "--all");
    let levels = enumerate_levels(&family, n_max, connected, None)?;
    for delta in 2..=6 {
        let mut counts: BTreeMap<Mechanism, usize> = BTreeMap::new();
        let (mut graphs, mut yes) = (0, 0);
        for g in levels.iter().flatten().filter(|g| g.max_degree() == delta) {
            if is_exception(g, delta).is_some() {
                continue;
            }
            let out = solve_equitable(g, delta, &family, SolveBudget::default())?;
            graphs += 1;
            yes += usize::from(out.outcome.verdict.is_yes());
            for (k, v) in out.trace.counts {
                *counts.entry(k).or_default() += v;
            }
        }
        println!("max degree {delta}: {graphs} graphs, {yes} colored");
        for m in Mechanism::ALL {
            println!("{:>18} {}", m.label(), counts.get(&m).copied().unwrap_or(0));
        }
    }
    Ok(())
}
