//! Seeded random family members by constrained edge insertion.
//!
//! Vertex pairs are visited in a random order and each edge is kept when the
//! graph stays in the family. The result is a maximal (or target-sized)
//! member; the distribution is not uniform over the family.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::enumerate::{GenConfig, GenMode};
use crate::error::{Error, Result};
use crate::family::FamilySpec;
use crate::graph::{Graph, Vertex};

/// Pair lists larger than this are sampled instead of shuffled in full.
const FULL_SHUFFLE_PAIRS: usize = 200_000;

/// A single member of order `n`. The same `seed` always gives the same graph.
pub fn random_family_graph(n: usize, family: &FamilySpec, seed: u64, target_edges: Option<usize>) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    insert_edges(n, family, &mut rng, target_edges)
}

fn insert_edges(n: usize, family: &FamilySpec, rng: &mut ChaCha8Rng, target: Option<usize>) -> Graph {
    let family = family.clone().normalized();
    let target = target.unwrap_or(usize::MAX);
    let mut g = Graph::empty(n);
    let total = n * n.saturating_sub(1) / 2;
    let try_pair = |g: &mut Graph, u: Vertex, v: Vertex| {
        if family.admits_edge(g, u, v) {
            *g = g.with_edge(u, v).expect("admitted edge is new");
        }
    };
    if total <= FULL_SHUFFLE_PAIRS {
        let mut pairs: Vec<(Vertex, Vertex)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        pairs.shuffle(rng);
        for (u, v) in pairs {
            if g.size() >= target {
                break;
            }
            try_pair(&mut g, u, v);
        }
    } else {
        for _ in 0..20 * n {
            if g.size() >= target {
                break;
            }
            let u = rng.gen_range(0..n);
            let v = rng.gen_range(0..n);
            try_pair(&mut g, u, v);
        }
    }
    g
}

/// `count` members from one seeded stream. With `connected` set,
/// disconnected draws are dropped, so fewer graphs may come back.
pub fn random_family_graphs(c: &GenConfig) -> Result<Vec<Graph>> {
    let GenMode::Random { count, seed, target_edges } = c.mode else {
        return Err(Error::Config("random_family_graphs needs random mode".into()));
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let g = insert_edges(c.n, &c.family, &mut rng, target_edges);
        if !c.connected || g.is_connected() {
            out.push(g);
        }
    }
    Ok(out)
}

/// Erdős–Rényi `G(n, p)` from a seed.
pub fn gnp(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("pairs are distinct")
}
