//! Isomorph-free exhaustive enumeration by vertex extension.
//!
//! Every constraint a [`FamilySpec`] can express is closed under taking
//! induced subgraphs, and so is an edge cap, so each member on `n` vertices
//! arises from a member on `n - 1` vertices plus one new vertex. For
//! connected output the smaller graph is connected too (drop a non-cut
//! vertex). Each level is deduplicated by canonical code and sorted by
//! `(size, code)`, which makes the output order deterministic.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::canon::{canonical_code, canonical_form, CanonCode};
use crate::cycles::has_path_of_length;
use crate::error::{Error, Result};
use crate::family::FamilySpec;
use crate::graph::{Graph, Vertex};
use crate::planarity::is_planar;

/// Hard cap on the order for unrestricted exhaustive runs.
pub const EXHAUSTIVE_CAP: usize = 11;
/// Larger orders are allowed when the edge count is capped this low.
pub const EDGE_CAPPED_ORDER_CAP: usize = 16;
pub const EDGE_CAPPED_MAX_EDGES: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum GenMode {
    Exhaustive,
    Random {
        count: usize,
        seed: u64,
        /// Stop inserting edges once this many are present.
        #[serde(default)]
        target_edges: Option<usize>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenConfig {
    pub n: usize,
    pub family: FamilySpec,
    pub mode: GenMode,
    #[serde(default)]
    pub connected: bool,
    /// Exhaustive mode only: skip graphs with more edges.
    #[serde(default)]
    pub max_edges: Option<usize>,
}

impl GenConfig {
    pub fn exhaustive(n: usize, family: FamilySpec) -> Self {
        GenConfig { n, family: family.normalized(), mode: GenMode::Exhaustive, connected: false, max_edges: None }
    }

    pub fn random(n: usize, family: FamilySpec, count: usize, seed: u64) -> Self {
        GenConfig {
            n,
            family: family.normalized(),
            mode: GenMode::Random { count, seed, target_edges: None },
            connected: false,
            max_edges: None,
        }
    }

    pub fn connected(mut self, yes: bool) -> Self {
        self.connected = yes;
        self
    }

    pub fn with_max_edges(mut self, e: usize) -> Self {
        self.max_edges = Some(e);
        self
    }
}

fn check_cap(n: usize, max_edges: Option<usize>) -> Result<()> {
    let capped = max_edges.is_some_and(|e| e <= EDGE_CAPPED_MAX_EDGES);
    let cap = if capped { EDGE_CAPPED_ORDER_CAP } else { EXHAUSTIVE_CAP };
    if n > cap {
        return Err(Error::EnumerationCap { n, cap });
    }
    Ok(())
}

/// All graphs of order `c.n` in the family, one per isomorphism class.
pub fn enumerate_family(c: &GenConfig) -> Result<Vec<Graph>> {
    if c.mode != GenMode::Exhaustive {
        return Err(Error::Config("enumerate_family needs exhaustive mode".into()));
    }
    let mut levels = enumerate_levels(&c.family, c.n, c.connected, c.max_edges)?;
    Ok(levels.pop().unwrap_or_default())
}

/// Levels `0..=n_max`: `levels[n]` holds the family members of order `n`.
pub fn enumerate_levels(
    family: &FamilySpec,
    n_max: usize,
    connected: bool,
    max_edges: Option<usize>,
) -> Result<Vec<Vec<Graph>>> {
    check_cap(n_max, max_edges)?;
    let family = family.clone().normalized();
    let mut levels = vec![vec![Graph::empty(0)]];
    if n_max == 0 {
        return Ok(levels);
    }
    let k1 = Graph::empty(1);
    levels.push(if family.check(&k1).is_ok() { vec![k1] } else { vec![] });
    for n in 2..=n_max {
        let next = extend_level(&levels[n - 1], &family, connected, max_edges)?;
        levels.push(next);
    }
    Ok(levels)
}

fn extend_level(prev: &[Graph], family: &FamilySpec, connected: bool, max_edges: Option<usize>) -> Result<Vec<Graph>> {
    let mut seen: HashMap<CanonCode, Graph> = HashMap::new();
    for h in prev {
        let budget = max_edges.map_or(usize::MAX, |e| e.saturating_sub(h.size()));
        let ext = Extender::new(h, family, budget);
        let mut chosen = Vec::new();
        let mut found = Vec::new();
        ext.subsets(0, &mut chosen, &mut found);
        for s in found {
            if connected && s.is_empty() {
                continue;
            }
            let g = attach(h, &s);
            let code = canonical_code(&g)?;
            if let std::collections::hash_map::Entry::Vacant(e) = seen.entry(code) {
                e.insert(canonical_form(&g)?);
            }
        }
    }
    let mut out: Vec<(usize, CanonCode, Graph)> = seen.into_iter().map(|(c, g)| (g.size(), c, g)).collect();
    out.sort_by_key(|a| (a.0, a.1));
    Ok(out.into_iter().map(|(_, _, g)| g).collect())
}

fn attach(h: &Graph, s: &[Vertex]) -> Graph {
    let n = h.order();
    let mut edges = h.edge_vec();
    edges.extend(s.iter().map(|&u| (u, n)));
    Graph::from_edges(n + 1, &edges).expect("new vertex adds fresh edges")
}

/// Neighbor sets for a new vertex that keep `h + v` in the family.
struct Extender<'a> {
    h: &'a Graph,
    family: &'a FamilySpec,
    budget: usize,
    /// `clash[a]`: vertices b such that joining the new vertex to both a and
    /// b closes a forbidden cycle.
    clash: Vec<Vec<bool>>,
    open: Vec<bool>,
}

impl<'a> Extender<'a> {
    fn new(h: &'a Graph, family: &'a FamilySpec, budget: usize) -> Self {
        let n = h.order();
        let mut clash = vec![vec![false; n]; n];
        for a in 0..n {
            for b in a + 1..n {
                let bad = family.forbidden_cycle_lengths.iter().any(|&k| has_path_of_length(h, a, b, k - 2));
                clash[a][b] = bad;
                clash[b][a] = bad;
            }
        }
        let open = (0..n).map(|a| family.max_degree_cap.is_none_or(|cap| h.degree(a) < cap)).collect();
        Extender { h, family, budget, clash, open }
    }

    fn subsets(&self, from: usize, chosen: &mut Vec<Vertex>, out: &mut Vec<Vec<Vertex>>) {
        out.push(chosen.clone());
        if chosen.len() >= self.budget || self.family.max_degree_cap.is_some_and(|c| chosen.len() >= c) {
            return;
        }
        for a in from..self.h.order() {
            if !self.open[a] || chosen.iter().any(|&b| self.clash[a][b]) {
                continue;
            }
            chosen.push(a);
            // Planarity is monotone, so a non-planar set has no planar superset.
            if !self.family.require_planar || chosen.len() < 2 || is_planar(&attach(self.h, chosen)) {
                self.subsets(a + 1, chosen, out);
            }
            chosen.pop();
        }
    }
}
