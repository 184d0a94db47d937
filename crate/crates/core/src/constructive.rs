//! Constructive equitable coloring by edge-minimality.
//!
//! For `|G| = mt` the edges are removed one at a time (always at a vertex
//! `x` of minimum nonzero degree, toward its lowest neighbor `y`) down to the
//! edgeless graph, which is colored directly. The edges are then restored in
//! reverse order. When restoring `xy` leaves the coloring proper nothing
//! happens. Otherwise `x` is uncolored, its old class becomes `V_1` and:
//!
//! 1. `R` is grown from `V_1`: a class joins when one of its vertices has no
//!    neighbor in a class already in `R`. If some class of `R` holds no
//!    neighbor of `x`, the escape vertices are shifted one class toward `V_1`
//!    along the witness chain and `x` takes the freed slot.
//! 2. Otherwise look for nonadjacent `α, β` outside `R` whose only neighbor
//!    in `V_1` is the same `γ`; swap `γ` out for `α, β` and color the rest
//!    (which contains `x`) with `m - r` colors recursively.
//! 3. Otherwise solve the current graph exactly.
//!
//! Orders not divisible by `m` are reduced first: add `K_1` or `K_2` when one
//! or two vertices are missing, else remove a minimum-degree vertex, solve,
//! and put it back into a smaller class.
//!
//! `No` is only ever reported from an exact solve of a spanning subgraph (or
//! of a padded graph, which is colorable exactly when the original is).

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::coloring::{apply_chain, verify_equitable_k_coloring, Move, Partition, Slot};
use crate::error::{Error, Result};
use crate::exact::{decide_equitable, SolveBudget, SolveOutcome, SolveStats, Verdict};
use crate::family::FamilySpec;
use crate::graph::{named, Graph, Vertex};

/// How many repair triples to try before falling back.
const REPAIR_ATTEMPTS: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mechanism {
    /// Edgeless graph or at most `m` vertices: colored directly.
    Base,
    TrivialMerge,
    ChainSwap,
    RepairSplit,
    Pad,
    SmallCaseExact,
    FallbackExact,
}

impl Mechanism {
    pub const ALL: [Mechanism; 7] = [
        Mechanism::Base,
        Mechanism::TrivialMerge,
        Mechanism::ChainSwap,
        Mechanism::RepairSplit,
        Mechanism::Pad,
        Mechanism::SmallCaseExact,
        Mechanism::FallbackExact,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Mechanism::Base => "base",
            Mechanism::TrivialMerge => "trivial-merge",
            Mechanism::ChainSwap => "chain-swap",
            Mechanism::RepairSplit => "repair-split",
            Mechanism::Pad => "pad",
            Mechanism::SmallCaseExact => "small-case-exact",
            Mechanism::FallbackExact => "fallback-exact",
        }
    }
}

impl fmt::Display for Mechanism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// What to solve directly instead of recursing.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BaseCase {
    /// Recurse all the way down to the edgeless graph.
    #[default]
    Edgeless,
    /// Solve exactly when `n <= max(3m, 18)` or `Δ >= n/2`.
    SmallOrDense,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructiveConfig {
    pub budget: SolveBudget,
    pub base: BaseCase,
}

/// One closed step of the recursion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelRecord {
    /// Nesting depth: 0 for the top graph, +1 inside a repair split or pad.
    pub depth: usize,
    pub n: usize,
    pub m: usize,
    pub edges: usize,
    pub mechanism: Mechanism,
    /// Restored edge, when the level is an edge level.
    pub edge: Option<(Vertex, Vertex)>,
    pub delta: Option<usize>,
    pub r: Option<usize>,
    pub chain_length: Option<usize>,
    pub fallbacks: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Trace {
    pub levels: Vec<LevelRecord>,
    pub counts: BTreeMap<Mechanism, usize>,
    pub fallback_count: usize,
    /// Pad steps where the removed vertex had no admissible class.
    pub pad_placement_failures: usize,
}

impl Trace {
    fn push(&mut self, rec: LevelRecord) {
        *self.counts.entry(rec.mechanism).or_default() += 1;
        if rec.mechanism == Mechanism::FallbackExact {
            self.fallback_count += 1;
        }
        self.levels.push(rec);
    }

    pub fn count(&self, m: Mechanism) -> usize {
        self.counts.get(&m).copied().unwrap_or(0)
    }

    pub fn merge_counts(&mut self, other: &Trace) {
        for (&k, &v) in &other.counts {
            *self.counts.entry(k).or_default() += v;
        }
        self.fallback_count += other.fallback_count;
        self.pad_placement_failures += other.pad_placement_failures;
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstructiveOutcome {
    pub outcome: SolveOutcome,
    pub trace: Trace,
}

/// Solves with the default configuration. `g` must belong to `family`.
pub fn solve_equitable(g: &Graph, m: usize, family: &FamilySpec, budget: SolveBudget) -> Result<ConstructiveOutcome> {
    if let Err(v) = family.check(g) {
        return Err(Error::Config(format!("graph is not in family {family}: {v}")));
    }
    solve_equitable_with(g, m, &ConstructiveConfig { budget, ..Default::default() })
}

/// Solves without a family check.
pub fn solve_equitable_with(g: &Graph, m: usize, cfg: &ConstructiveConfig) -> Result<ConstructiveOutcome> {
    if m == 0 {
        return Err(Error::ZeroColors);
    }
    let start = std::time::Instant::now();
    let mut ctx = Ctx { cfg: *cfg, trace: Trace::default(), stats: SolveStats::default() };
    let step = ctx.solve(g, m, 0)?;
    let verdict = match step {
        Step::Yes(p) => {
            assert_eq!(verify_equitable_k_coloring(g, &p, m), Ok(()), "constructive solver returned a bad coloring");
            Verdict::Yes(p)
        }
        Step::No => Verdict::No,
        Step::Exhausted => Verdict::Exhausted,
    };
    ctx.stats.duration = start.elapsed();
    Ok(ConstructiveOutcome { outcome: SolveOutcome { verdict, stats: ctx.stats }, trace: ctx.trace })
}

enum Step {
    Yes(Partition),
    No,
    Exhausted,
}

/// Reduction used when `m` does not divide `|G|`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "plan", rename_all = "kebab-case")]
pub enum PadPlan {
    /// `m` divides the order (or the order is at most `m`).
    None,
    /// Add a disjoint `K_size` (size 1 or 2), solve, then drop it.
    UnionComplete { size: usize },
    /// Remove `vertex`, solve, then re-insert it into a smaller class.
    RemoveVertex { vertex: Vertex },
}

/// Plan for `|g| = mt + r`.
pub fn pad_order(g: &Graph, m: usize) -> PadPlan {
    let n = g.order();
    let r = n % m;
    if r == 0 || n <= m {
        return PadPlan::None;
    }
    if r + 2 >= m {
        return PadPlan::UnionComplete { size: m - r };
    }
    let v = (0..n).min_by_key(|&v| (g.degree(v), v)).expect("n > m >= 1");
    PadPlan::RemoveVertex { vertex: v }
}

/// The state after restoring `xy` with `x`, `y` in one class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolverState {
    pub g: Graph,
    pub m: usize,
    pub t: usize,
    pub x: Vertex,
    pub y: Vertex,
    /// Classes `V_1..V_m` (0-based here) with `x` uncolored; `y ∈ V_1`.
    pub partition: Partition,
    pub delta: usize,
    /// Class indices in `R`, in admission order, starting with 0.
    pub r_set: Vec<usize>,
    /// For every admitted class but the first: an escape vertex of that
    /// class and the earlier class of `R` it has no neighbor in.
    pub parent: Vec<Option<(Vertex, usize)>>,
}

impl SolverState {
    /// Builds the state from an equitable coloring of `g - xy` in which `x`
    /// and `y` share a class. Classes are reordered: the shared class first,
    /// then classes holding neighbors of `x`, then the rest, each group by
    /// lowest original index.
    pub fn new(g: &Graph, m: usize, x: Vertex, y: Vertex, coloring: &Partition) -> Result<Self> {
        if !g.has_edge(x, y) {
            return Err(Error::MissingEdge(x, y));
        }
        let cx = coloring.class_of(x).ok_or(Error::Uncovered(x))?;
        if coloring.class_of(y) != Some(cx) {
            return Err(Error::Config("x and y must share a class".into()));
        }
        let colors = coloring.color_map();
        let touches: BTreeSet<usize> = g.neighbors(x).iter().filter_map(|&w| colors[w]).collect();
        let mut order = vec![cx];
        order.extend(touches.iter().copied().filter(|&c| c != cx));
        order.extend((0..coloring.num_classes()).filter(|c| *c != cx && !touches.contains(c)));
        let reordered = coloring.reordered(&order)?;
        let partition = apply_chain(&reordered, &[Move::new(x, Slot::Class(0), Slot::Uncolored)])?;
        let k = partition.num_classes();
        Ok(SolverState {
            g: g.clone(),
            m,
            t: g.order() / m,
            x,
            y,
            partition,
            delta: g.degree(x),
            r_set: vec![],
            parent: vec![None; k],
        })
    }

    pub fn r(&self) -> usize {
        self.r_set.len()
    }

    /// Vertices of the classes in `R`.
    pub fn a(&self) -> Vec<Vertex> {
        let mut out: Vec<Vertex> = self.r_set.iter().flat_map(|&i| self.partition.class(i).iter().copied()).collect();
        out.sort_unstable();
        out
    }

    /// Everything outside `A`, including `x`.
    pub fn b(&self) -> Vec<Vertex> {
        let in_a: BTreeSet<Vertex> = self.a().into_iter().collect();
        (0..self.g.order()).filter(|v| !in_a.contains(v)).collect()
    }

    fn class_has_no_neighbor(&self, u: Vertex, class: usize) -> bool {
        self.partition.class(class).iter().all(|&w| !self.g.has_edge(u, w))
    }
}

/// Grows `R` to its fixpoint, recording one witness per admitted class.
pub fn build_r(s: &mut SolverState) -> Vec<usize> {
    let k = s.partition.num_classes();
    let mut in_r = vec![false; k];
    s.r_set = vec![0];
    s.parent = vec![None; k];
    in_r[0] = true;
    loop {
        let mut grown = false;
        for j in 0..k {
            if in_r[j] {
                continue;
            }
            let witness = s.partition.class(j).iter().find_map(|&u| {
                s.r_set.iter().find(|&&i| s.class_has_no_neighbor(u, i)).map(|&i| (u, i))
            });
            if let Some(w) = witness {
                in_r[j] = true;
                s.r_set.push(j);
                s.parent[j] = Some(w);
                grown = true;
            }
        }
        if !grown {
            break;
        }
    }
    s.r_set.clone()
}

/// Result of a chain swap.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainSwap {
    pub partition: Partition,
    pub chain: Vec<Move>,
    pub target: usize,
}

/// Absorbs `x` by shifting escape vertices toward `V_1`, if some class of
/// `R` has no neighbor of `x`. Needs [`build_r`] first.
pub fn chain_swap_place(s: &SolverState) -> Option<ChainSwap> {
    let x = s.x;
    let target = s.r_set.iter().copied().find(|&k| k != 0 && s.class_has_no_neighbor(x, k))?;
    let mut chain = Vec::new();
    let mut k = target;
    while let Some((u, i)) = s.parent[k] {
        chain.push(Move::new(u, Slot::Class(k), Slot::Class(i)));
        k = i;
    }
    chain.push(Move::new(x, Slot::Uncolored, Slot::Class(target)));
    let partition = apply_chain(&s.partition, &chain).expect("witness chain is consistent");
    Some(ChainSwap { partition, chain, target })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepairTriple {
    pub alpha: Vertex,
    pub beta: Vertex,
    pub gamma: Vertex,
}

/// Every repair triple, ordered by `(γ, α, β)`.
pub fn repair_triples(s: &SolverState) -> Vec<RepairTriple> {
    triples_between(&s.g, s.partition.class(0), &s.b())
}

/// Nonadjacent `α, β ∈ u` whose only neighbor in `v1` is the same `γ`.
pub fn triples_between(g: &Graph, v1: &[Vertex], u: &[Vertex]) -> Vec<RepairTriple> {
    let mut by_gamma: BTreeMap<Vertex, Vec<Vertex>> = BTreeMap::new();
    for &w in u {
        let mut hits = v1.iter().filter(|&&z| g.has_edge(w, z));
        if let (Some(&gamma), None) = (hits.next(), hits.next()) {
            by_gamma.entry(gamma).or_default().push(w);
        }
    }
    let mut out = Vec::new();
    for (gamma, us) in by_gamma {
        for (i, &alpha) in us.iter().enumerate() {
            for &beta in &us[i + 1..] {
                if !g.has_edge(alpha, beta) {
                    out.push(RepairTriple { alpha, beta, gamma });
                }
            }
        }
    }
    out
}

pub fn find_repair_triple(s: &SolverState) -> Option<RepairTriple> {
    repair_triples(s).into_iter().next()
}

/// Checks the triple conditions against the state.
pub fn is_repair_triple(s: &SolverState, tr: &RepairTriple) -> bool {
    let b: BTreeSet<Vertex> = s.b().into_iter().collect();
    let v1 = s.partition.class(0);
    let only_gamma = |u: Vertex| v1.iter().filter(|&&w| s.g.has_edge(u, w)).eq([tr.gamma].iter());
    tr.alpha != tr.beta
        && b.contains(&tr.alpha)
        && b.contains(&tr.beta)
        && v1.contains(&tr.gamma)
        && !s.g.has_edge(tr.alpha, tr.beta)
        && only_gamma(tr.alpha)
        && only_gamma(tr.beta)
}

impl Ctx {
    fn solve(&mut self, g: &Graph, m: usize, depth: usize) -> Result<Step> {
        let n = g.order();
        if n <= m {
            let classes = (0..m).map(|i| if i < n { vec![i] } else { vec![] }).collect();
            self.record(depth, g, m, Mechanism::Base);
            return Ok(Step::Yes(Partition::new(n, classes, None)?));
        }
        if self.cfg.base == BaseCase::SmallOrDense && (n <= (3 * m).max(18) || 2 * g.max_degree() >= n) {
            return self.exact(g, m, depth, Mechanism::SmallCaseExact);
        }
        match pad_order(g, m) {
            PadPlan::None => self.solve_divisible(g, m, depth),
            PadPlan::UnionComplete { size } => {
                let padded = g.disjoint_union(&named::complete(size));
                let step = self.solve(&padded, m, depth + 1)?;
                self.record(depth, g, m, Mechanism::Pad);
                Ok(match step {
                    Step::Yes(p) => {
                        let classes = p.classes().iter().map(|c| c.iter().copied().filter(|&v| v < n).collect()).collect();
                        Step::Yes(Partition::new(n, classes, None)?)
                    }
                    other => other,
                })
            }
            PadPlan::RemoveVertex { vertex } => {
                let rest: Vec<Vertex> = (0..n).filter(|&v| v != vertex).collect();
                let sub = g.induced(&rest);
                match self.solve(&sub, m, depth + 1)? {
                    Step::Yes(p) => {
                        let mut classes: Vec<Vec<Vertex>> =
                            p.classes().iter().map(|c| c.iter().map(|&v| rest[v]).collect()).collect();
                        let small = classes.iter().map(Vec::len).min().unwrap_or(0);
                        let slot = (0..m).find(|&i| {
                            classes[i].len() == small && classes[i].iter().all(|&w| !g.has_edge(vertex, w))
                        });
                        if let Some(i) = slot {
                            classes[i].push(vertex);
                            self.record(depth, g, m, Mechanism::Pad);
                            return Ok(Step::Yes(Partition::new(n, classes, None)?));
                        }
                        self.trace.pad_placement_failures += 1;
                        self.exact(g, m, depth, Mechanism::FallbackExact)
                    }
                    // Colorability of G - v says nothing either way about G.
                    Step::No => self.exact(g, m, depth, Mechanism::FallbackExact),
                    Step::Exhausted => Ok(Step::Exhausted),
                }
            }
        }
    }

    /// `m` divides `|g|`: edge recursion, run bottom-up.
    fn solve_divisible(&mut self, g: &Graph, m: usize, depth: usize) -> Result<Step> {
        let n = g.order();
        let removal = removal_sequence(g);
        let t = n / m;
        let classes: Vec<Vec<Vertex>> = (0..m).map(|i| (i * t..(i + 1) * t).collect()).collect();
        let mut coloring = Partition::new(n, classes, None)?;
        let edgeless = Graph::empty(n);
        self.record(depth, &edgeless, m, Mechanism::Base);
        for i in (0..removal.len()).rev() {
            let (x, y) = removal[i];
            let gi = Graph::from_edges(n, &removal[i..])?;
            let colors = coloring.color_map();
            if colors[x] != colors[y] {
                self.record_edge(depth, &gi, m, Mechanism::TrivialMerge, (x, y), None, None, 0);
                continue;
            }
            match self.restore_edge(&gi, m, x, y, &coloring, depth)? {
                Step::Yes(p) => coloring = p,
                other => return Ok(other),
            }
        }
        Ok(Step::Yes(coloring))
    }

    fn restore_edge(&mut self, gi: &Graph, m: usize, x: Vertex, y: Vertex, coloring: &Partition, depth: usize) -> Result<Step> {
        let mut s = SolverState::new(gi, m, x, y, coloring)?;
        build_r(&mut s);
        let r = s.r();
        let delta = s.delta;
        if let Some(cs) = chain_swap_place(&s) {
            self.record_edge(depth, gi, m, Mechanism::ChainSwap, (x, y), Some(delta), Some(r), 0);
            let chain_length = cs.chain.len() - 1;
            self.trace.levels.last_mut().unwrap().chain_length = Some(chain_length);
            return Ok(Step::Yes(cs.partition));
        }
        if r < m {
            for tr in repair_triples(&s).into_iter().take(REPAIR_ATTEMPTS) {
                match self.repair_split(&s, &tr, depth)? {
                    Step::Yes(p) => {
                        self.record_edge(depth, gi, m, Mechanism::RepairSplit, (x, y), Some(delta), Some(r), 0);
                        return Ok(Step::Yes(p));
                    }
                    Step::Exhausted => return Ok(Step::Exhausted),
                    Step::No => {}
                }
            }
        }
        let step = self.exact_quiet(gi, m)?;
        self.record_edge(depth, gi, m, Mechanism::FallbackExact, (x, y), Some(delta), Some(r), 1);
        Ok(step)
    }

    fn repair_split(&mut self, s: &SolverState, tr: &RepairTriple, depth: usize) -> Result<Step> {
        let mut b1: Vec<Vertex> = s.b().into_iter().filter(|&v| v != tr.alpha && v != tr.beta).collect();
        b1.push(tr.gamma);
        b1.sort_unstable();
        let sub = s.g.induced(&b1);
        let step = self.solve(&sub, s.m - s.r(), depth + 1)?;
        let Step::Yes(p) = step else { return Ok(step) };
        let mut classes = Vec::with_capacity(s.m);
        for &i in &s.r_set {
            let mut c: Vec<Vertex> = s.partition.class(i).to_vec();
            if i == 0 {
                c.retain(|&v| v != tr.gamma);
                c.extend([tr.alpha, tr.beta]);
            }
            classes.push(c);
        }
        classes.extend(p.classes().iter().map(|c| c.iter().map(|&v| b1[v]).collect::<Vec<_>>()));
        Ok(Step::Yes(Partition::new(s.g.order(), classes, None)?))
    }

    fn exact_quiet(&mut self, g: &Graph, m: usize) -> Result<Step> {
        let out = decide_equitable(g, m, self.cfg.budget)?;
        self.stats.absorb(&out.stats);
        Ok(match out.verdict {
            Verdict::Yes(p) => Step::Yes(p),
            Verdict::No => Step::No,
            Verdict::Exhausted => Step::Exhausted,
        })
    }

    fn exact(&mut self, g: &Graph, m: usize, depth: usize, mech: Mechanism) -> Result<Step> {
        let step = self.exact_quiet(g, m)?;
        self.record(depth, g, m, mech);
        Ok(step)
    }

    fn record(&mut self, depth: usize, g: &Graph, m: usize, mechanism: Mechanism) {
        let fallbacks = usize::from(mechanism == Mechanism::FallbackExact);
        self.trace.push(LevelRecord {
            depth,
            n: g.order(),
            m,
            edges: g.size(),
            mechanism,
            edge: None,
            delta: None,
            r: None,
            chain_length: None,
            fallbacks,
        });
    }

    #[allow(clippy::too_many_arguments)]
    fn record_edge(
        &mut self,
        depth: usize,
        g: &Graph,
        m: usize,
        mechanism: Mechanism,
        edge: (Vertex, Vertex),
        delta: Option<usize>,
        r: Option<usize>,
        fallbacks: usize,
    ) {
        self.trace.push(LevelRecord {
            depth,
            n: g.order(),
            m,
            edges: g.size(),
            mechanism,
            edge: Some(edge),
            delta: delta.or(Some(g.degree(edge.0))),
            r,
            chain_length: None,
            fallbacks,
        });
    }
}

struct Ctx {
    cfg: ConstructiveConfig,
    trace: Trace,
    stats: SolveStats,
}

/// Edges in removal order: each step takes the lowest vertex of minimum
/// nonzero degree and its lowest neighbor in the remaining graph.
pub fn removal_sequence(g: &Graph) -> Vec<(Vertex, Vertex)> {
    let n = g.order();
    let mut adj: Vec<BTreeSet<Vertex>> = (0..n).map(|v| g.neighbors(v).iter().copied().collect()).collect();
    let mut out = Vec::with_capacity(g.size());
    for _ in 0..g.size() {
        let x = (0..n).filter(|&v| !adj[v].is_empty()).min_by_key(|&v| (adj[v].len(), v)).expect("edges remain");
        let y = *adj[x].iter().next().expect("x has a neighbor");
        adj[x].remove(&y);
        adj[y].remove(&x);
        out.push((x, y));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::is_proper;
    use crate::graph::named::*;

    /// x = 0 with V_1 = {1, 2}, V_2 = {3, 4, 5}, V_3 = {6, 7, 8}. Vertex 4 is
    /// the only escape from V_2 into V_1, and 8 the only escape from V_3
    /// (into V_2); x has neighbors in V_1 and V_2 only.
    fn nine_vertex_state() -> SolverState {
        let edges = [(0, 1), (0, 3), (3, 2), (5, 1), (1, 6), (2, 7), (2, 8), (6, 3), (7, 4)];
        let g = Graph::from_edges(9, &edges).unwrap();
        let coloring = Partition::new(9, vec![vec![0, 1, 2], vec![3, 4, 5], vec![6, 7, 8]], None).unwrap();
        SolverState::new(&g, 3, 0, 1, &coloring).unwrap()
    }

    #[test]
    fn build_r_follows_escapes() {
        let mut s = nine_vertex_state();
        assert_eq!(s.partition.class(0), &[1, 2]);
        assert_eq!(build_r(&mut s), vec![0, 1, 2]);
        assert_eq!(s.parent[1], Some((4, 0)));
        assert_eq!(s.parent[2], Some((8, 1)));
        assert_eq!(build_r(&mut s), vec![0, 1, 2]);
        // Every witness re-verifies.
        for j in 1..3 {
            let (u, i) = s.parent[j].unwrap();
            assert!(s.partition.class(j).contains(&u));
            assert!(s.partition.class(i).iter().all(|&w| !s.g.has_edge(u, w)));
        }
    }

    #[test]
    fn two_step_chain() {
        let mut s = nine_vertex_state();
        build_r(&mut s);
        let cs = chain_swap_place(&s).unwrap();
        assert_eq!(cs.target, 2);
        assert_eq!(cs.chain.len(), 3);
        assert_eq!(cs.partition.classes(), &[vec![1, 2, 4], vec![3, 5, 8], vec![0, 6, 7]]);
        assert_eq!(cs.partition.sizes(), vec![3, 3, 3]);
        assert_eq!(verify_equitable_k_coloring(&s.g, &cs.partition, 3), Ok(()));
    }

    #[test]
    fn no_escape_means_r_is_v1() {
        // Both vertices of V_2 see y, the only vertex left in V_1.
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (1, 3), (0, 3)]).unwrap();
        let coloring = Partition::new(4, vec![vec![0, 1], vec![2, 3]], None).unwrap();
        let mut s = SolverState::new(&g, 2, 0, 1, &coloring).unwrap();
        assert_eq!(build_r(&mut s), vec![0]);
        assert!(chain_swap_place(&s).is_none());
    }

    /// V_1 = {0 = x, 1 = y, 2}, V_2 = {3, 4, 5}; every vertex of V_2 sees V_1.
    fn split_state(extra: &[(Vertex, Vertex)]) -> SolverState {
        let mut edges = vec![(0, 1), (3, 2), (4, 2), (5, 1)];
        edges.extend_from_slice(extra);
        let g = Graph::from_edges(6, &edges).unwrap();
        let coloring = Partition::new(6, vec![vec![0, 1, 2], vec![3, 4, 5]], None).unwrap();
        let mut s = SolverState::new(&g, 2, 0, 1, &coloring).unwrap();
        build_r(&mut s);
        s
    }

    #[test]
    fn repair_triple_examples() {
        let s = split_state(&[]);
        assert_eq!(s.r(), 1);
        let all = repair_triples(&s);
        assert_eq!(
            all,
            vec![RepairTriple { alpha: 0, beta: 5, gamma: 1 }, RepairTriple { alpha: 3, beta: 4, gamma: 2 }]
        );
        assert!(all.iter().all(|tr| is_repair_triple(&s, tr)));
        assert!(!is_repair_triple(&s, &RepairTriple { alpha: 3, beta: 5, gamma: 2 }));

        // 3 and 4 now see both 1 and 2, and 0, 5 are adjacent.
        let s = split_state(&[(3, 1), (4, 1), (0, 5)]);
        assert_eq!(s.r(), 1);
        assert!(find_repair_triple(&s).is_none());
    }

    #[test]
    fn repair_split_in_two_classes() {
        let s = split_state(&[]);
        let g = s.g.clone();
        let mut ctx = Ctx { cfg: ConstructiveConfig::default(), trace: Trace::default(), stats: SolveStats::default() };
        for tr in repair_triples(&s) {
            let Step::Yes(p) = ctx.repair_split(&s, &tr, 0).unwrap() else { panic!("split failed") };
            assert_eq!(verify_equitable_k_coloring(&g, &p, 2), Ok(()));
            let c = p.class_of(tr.alpha).unwrap();
            assert_eq!(p.class_of(tr.beta), Some(c));
            assert_ne!(p.class_of(tr.gamma), Some(c));
        }
    }

    #[test]
    fn pad_plans() {
        assert_eq!(pad_order(&path(17), 6), PadPlan::UnionComplete { size: 1 });
        assert_eq!(pad_order(&path(16), 6), PadPlan::UnionComplete { size: 2 });
        let g = path(12).disjoint_union(&Graph::empty(1));
        assert_eq!(pad_order(&g, 6), PadPlan::RemoveVertex { vertex: 12 });
        assert_eq!(pad_order(&path(12), 6), PadPlan::None);
    }

    fn solve(g: &Graph, m: usize) -> ConstructiveOutcome {
        solve_equitable_with(g, m, &ConstructiveConfig::default()).unwrap()
    }

    #[test]
    fn small_examples() {
        let out = solve(&cycle(6), 3);
        let p = out.outcome.coloring().unwrap();
        assert_eq!(p.sizes(), vec![2, 2, 2]);
        assert!(solve(&cube(), 6).outcome.verdict.is_yes());
        assert!(solve(&complete_bipartite(3, 3), 3).outcome.verdict.is_no());
        assert!(solve(&cycle(5), 2).outcome.verdict.is_no());
        assert!(solve(&star(5), 4).outcome.verdict.is_yes());
        assert!(solve(&complete(4), 3).outcome.verdict.is_no());
        assert!(solve(&path(2), 1).outcome.verdict.is_no());
        assert!(solve(&Graph::empty(0), 2).outcome.verdict.is_yes());
        let odd = solve(&petersen().disjoint_union(&path(3)), 3);
        assert!(is_proper(&petersen().disjoint_union(&path(3)), odd.outcome.coloring().unwrap()).unwrap());
    }

    #[test]
    fn family_is_checked() {
        let f = FamilySpec::triangle_free_planar();
        assert!(solve_equitable(&complete(3), 3, &f, SolveBudget::default()).is_err());
        assert!(solve_equitable(&cube(), 4, &f, SolveBudget::default()).unwrap().outcome.verdict.is_yes());
    }

    #[test]
    fn small_or_dense_base() {
        let cfg = ConstructiveConfig { base: BaseCase::SmallOrDense, ..Default::default() };
        let out = solve_equitable_with(&cube(), 4, &cfg).unwrap();
        assert!(out.outcome.verdict.is_yes());
        assert_eq!(out.trace.count(Mechanism::SmallCaseExact), 1);
    }

    #[test]
    fn removal_order() {
        assert_eq!(removal_sequence(&path(4)), vec![(0, 1), (1, 2), (2, 3)]);
        assert_eq!(removal_sequence(&star(3)), vec![(1, 0), (2, 0), (0, 3)]);
    }
}
