//! Exact backtracking decision procedures for equitable and proper colorings.
//!
//! Vertices are colored in a static order (descending degree, ties broken by
//! later position in the degeneracy order). Class capacities are counters: an
//! equitable `k`-coloring of `n` vertices has `n mod k` classes of size
//! `ceil(n/k)` and the rest of size `floor(n/k)`, so a class may only grow past
//! the floor while fewer than `n mod k` classes have done so. Classes are
//! interchangeable, so a vertex may open at most one new class. Forward
//! checking rejects a branch as soon as some uncolored vertex has no class left.

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::coloring::{is_proper, verify_equitable_k_coloring, Partition};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Limits on a single solve. Running out is reported as
/// [`Verdict::Exhausted`], never as `No`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveBudget {
    pub node_limit: u64,
    pub time_limit: Duration,
}

impl Default for SolveBudget {
    fn default() -> Self {
        SolveBudget { node_limit: 10_000_000, time_limit: Duration::from_secs(60) }
    }
}

impl SolveBudget {
    pub fn new(node_limit: u64, time_limit: Duration) -> Result<Self> {
        if node_limit == 0 || time_limit.is_zero() {
            return Err(Error::OutOfRange {
                what: "budget",
                detail: "node and time limits must be positive".into(),
            });
        }
        Ok(SolveBudget { node_limit, time_limit })
    }

    pub fn nodes(node_limit: u64) -> Self {
        SolveBudget { node_limit, ..Default::default() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// A coloring with the requested number of classes.
    Yes(Partition),
    No,
    Exhausted,
}

impl Verdict {
    pub fn is_yes(&self) -> bool {
        matches!(self, Verdict::Yes(_))
    }

    pub fn is_no(&self) -> bool {
        matches!(self, Verdict::No)
    }

    pub fn is_exhausted(&self) -> bool {
        matches!(self, Verdict::Exhausted)
    }

    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Yes(_) => "yes",
            Verdict::No => "no",
            Verdict::Exhausted => "exhausted",
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveStats {
    pub nodes: u64,
    pub max_depth: usize,
    pub duration: Duration,
}

impl SolveStats {
    pub fn absorb(&mut self, other: &SolveStats) {
        self.nodes += other.nodes;
        self.max_depth = self.max_depth.max(other.max_depth);
        self.duration += other.duration;
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveOutcome {
    pub verdict: Verdict,
    pub stats: SolveStats,
}

impl SolveOutcome {
    pub fn coloring(&self) -> Option<&Partition> {
        match &self.verdict {
            Verdict::Yes(p) => Some(p),
            _ => None,
        }
    }
}

/// Does `g` have an equitable `k`-coloring?
///
/// A `Yes` payload always passes [`verify_equitable_k_coloring`].
pub fn decide_equitable(g: &Graph, k: usize, budget: SolveBudget) -> Result<SolveOutcome> {
    if k == 0 {
        return Err(Error::ZeroColors);
    }
    let outcome = Search::new(g, k, true, budget).run();
    if let Verdict::Yes(p) = &outcome.verdict {
        assert_eq!(verify_equitable_k_coloring(g, p, k), Ok(()), "exact solver returned a bad coloring");
    }
    Ok(outcome)
}

/// Does `g` have a proper coloring with at most `m` colors? The `Yes` payload
/// has exactly `m` classes, some possibly empty.
pub fn decide_proper(g: &Graph, m: usize, budget: SolveBudget) -> Result<SolveOutcome> {
    if m == 0 {
        return Err(Error::ZeroColors);
    }
    let outcome = Search::new(g, m, false, budget).run();
    if let Verdict::Yes(p) = &outcome.verdict {
        assert!(is_proper(g, p).unwrap_or(false) && p.num_classes() == m);
    }
    Ok(outcome)
}

/// Coloring order: descending degree, ties broken toward vertices removed
/// later in the degeneracy order, then by id.
pub fn search_order(g: &Graph) -> Vec<Vertex> {
    let degen = g.degeneracy_order();
    let mut position = vec![0; g.order()];
    for (i, &v) in degen.iter().enumerate() {
        position[v] = i;
    }
    let mut order: Vec<Vertex> = (0..g.order()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), std::cmp::Reverse(position[v]), v));
    order
}

enum Step {
    Found,
    Dead,
    OutOfBudget,
}

struct Search<'a> {
    g: &'a Graph,
    k: usize,
    order: Vec<Vertex>,
    color: Vec<usize>,
    size: Vec<usize>,
    // forbidden[v * k + c]: colored neighbors of v in class c
    forbidden: Vec<u32>,
    floor: usize,
    rem: usize,
    big: usize,
    equitable: bool,
    budget: SolveBudget,
    start: Instant,
    stats: SolveStats,
}

const UNCOLORED: usize = usize::MAX;

impl<'a> Search<'a> {
    fn new(g: &'a Graph, k: usize, equitable: bool, budget: SolveBudget) -> Self {
        let n = g.order();
        let (floor, rem) = if equitable { (n / k, n % k) } else { (n, 0) };
        Search {
            g,
            k,
            order: search_order(g),
            color: vec![UNCOLORED; n],
            size: vec![0; k],
            forbidden: vec![0; n * k],
            floor,
            rem,
            big: 0,
            equitable,
            budget,
            start: Instant::now(),
            stats: SolveStats::default(),
        }
    }

    fn run(mut self) -> SolveOutcome {
        let verdict = match self.extend(0, 0) {
            Step::Found => {
                let p = Partition::from_colors(&self.color, self.k).expect("complete coloring");
                Verdict::Yes(p)
            }
            Step::Dead => Verdict::No,
            Step::OutOfBudget => Verdict::Exhausted,
        };
        self.stats.duration = self.start.elapsed();
        SolveOutcome { verdict, stats: self.stats }
    }

    fn has_room(&self, c: usize) -> bool {
        let s = self.size[c];
        if !self.equitable {
            return true;
        }
        s < self.floor || (s == self.floor && self.big < self.rem)
    }

    fn allowed(&self, v: Vertex, c: usize) -> bool {
        self.forbidden[v * self.k + c] == 0 && self.has_room(c)
    }

    fn some_class_left(&self, v: Vertex) -> bool {
        (0..self.k).any(|c| self.allowed(v, c))
    }

    fn assign(&mut self, v: Vertex, c: usize) {
        self.color[v] = c;
        if self.equitable && self.size[c] == self.floor {
            self.big += 1;
        }
        self.size[c] += 1;
        for &w in self.g.neighbors(v) {
            self.forbidden[w * self.k + c] += 1;
        }
    }

    fn unassign(&mut self, v: Vertex, c: usize) {
        for &w in self.g.neighbors(v) {
            self.forbidden[w * self.k + c] -= 1;
        }
        self.size[c] -= 1;
        if self.equitable && self.size[c] == self.floor {
            self.big -= 1;
        }
        self.color[v] = UNCOLORED;
    }

    fn consistent_after(&self, v: Vertex, c: usize, depth: usize) -> bool {
        let full = self.equitable && !self.has_room(c);
        if full {
            self.order[depth + 1..].iter().all(|&w| self.some_class_left(w))
        } else {
            self.g
                .neighbors(v)
                .iter()
                .filter(|&&w| self.color[w] == UNCOLORED)
                .all(|&w| self.some_class_left(w))
        }
    }

    fn extend(&mut self, depth: usize, opened: usize) -> Step {
        if depth == self.order.len() {
            return Step::Found;
        }
        self.stats.nodes += 1;
        self.stats.max_depth = self.stats.max_depth.max(depth);
        if self.stats.nodes > self.budget.node_limit {
            return Step::OutOfBudget;
        }
        if self.stats.nodes.is_multiple_of(4096) && self.start.elapsed() > self.budget.time_limit {
            return Step::OutOfBudget;
        }
        let v = self.order[depth];
        let top = (opened + 1).min(self.k);
        for c in 0..top {
            if !self.allowed(v, c) {
                continue;
            }
            self.assign(v, c);
            if self.consistent_after(v, c, depth) {
                match self.extend(depth + 1, opened.max(c + 1)) {
                    Step::Found => return Step::Found,
                    Step::OutOfBudget => {
                        self.unassign(v, c);
                        return Step::OutOfBudget;
                    }
                    Step::Dead => {}
                }
            }
            self.unassign(v, c);
        }
        Step::Dead
    }
}
