//! The graphs excluded from the equitable Δ-coloring conjecture.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExceptionKind {
    Complete,
    OddCycle,
    BalancedBicliqueOddDegree,
}

impl fmt::Display for ExceptionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ExceptionKind::Complete => "complete",
            ExceptionKind::OddCycle => "odd-cycle",
            ExceptionKind::BalancedBicliqueOddDegree => "balanced-biclique-odd-delta",
        })
    }
}

/// Is `g` (connected, with `m = Δ(g)`) a complete graph, an odd cycle with
/// `m = 2`, or `K_{m,m}` with `m` odd?
pub fn is_exception(g: &Graph, m: usize) -> Option<ExceptionKind> {
    let n = g.order();
    if n == 0 || g.max_degree() != m || !g.is_connected() {
        return None;
    }
    let regular = g.min_degree() == m;
    if regular && n == m + 1 {
        return Some(ExceptionKind::Complete);
    }
    if m == 2 && regular && n % 2 == 1 {
        return Some(ExceptionKind::OddCycle);
    }
    if m % 2 == 1 && regular && n == 2 * m && is_bipartite(g) {
        return Some(ExceptionKind::BalancedBicliqueOddDegree);
    }
    None
}

fn is_bipartite(g: &Graph) -> bool {
    let mut side = vec![u8::MAX; g.order()];
    for s in 0..g.order() {
        if side[s] != u8::MAX {
            continue;
        }
        side[s] = 0;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for &w in g.neighbors(v) {
                if side[w] == u8::MAX {
                    side[w] = 1 - side[v];
                    stack.push(w);
                } else if side[w] == side[v] {
                    return false;
                }
            }
        }
    }
    true
}
