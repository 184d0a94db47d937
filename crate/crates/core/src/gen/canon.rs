//! Canonical labeling for small graphs (at most 16 vertices).
//!
//! Individualization-refinement: the vertex set is refined to an equitable
//! ordered partition, then a vertex of the first non-singleton cell is
//! individualized and the partition refined again, until every cell is a
//! singleton. Each leaf orders the vertices; its key is the sequence of
//! quotient-matrix hashes along the path followed by the upper-triangle
//! adjacency bits in that order. The largest key over the tree is the
//! canonical form. Subtrees whose hash prefix is already smaller than the
//! best are cut, and of two twins in a cell only one is tried.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

pub const CANON_MAX_ORDER: usize = 16;

/// Isomorphism-invariant code: equal iff the graphs are isomorphic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonCode {
    pub n: u8,
    pub bits: u128,
}

struct Canon {
    n: usize,
    adj: Vec<u32>,
    best_path: Vec<u64>,
    best_code: Option<u128>,
    best_order: Vec<Vertex>,
}

type Cells = Vec<Vec<Vertex>>;

impl Canon {
    fn new(g: &Graph) -> Self {
        let n = g.order();
        let adj = (0..n)
            .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | (1 << w)))
            .collect();
        Canon { n, adj, best_path: Vec::new(), best_code: None, best_order: Vec::new() }
    }

    fn count_in(&self, v: Vertex, cell: &[Vertex]) -> u32 {
        let mask = cell.iter().fold(0u32, |m, &w| m | (1 << w));
        (self.adj[v] & mask).count_ones()
    }

    /// Refines to the coarsest equitable partition below `cells`.
    fn refine(&self, cells: &mut Cells) {
        loop {
            let mut changed = false;
            let mut i = 0;
            while i < cells.len() {
                let splitter = cells[i].clone();
                let mut next = Vec::with_capacity(cells.len());
                for cell in cells.drain(..) {
                    if cell.len() == 1 {
                        next.push(cell);
                        continue;
                    }
                    let mut keyed: Vec<(u32, Vertex)> =
                        cell.iter().map(|&v| (self.count_in(v, &splitter), v)).collect();
                    keyed.sort_unstable();
                    let mut start = 0;
                    for j in 1..=keyed.len() {
                        if j == keyed.len() || keyed[j].0 != keyed[start].0 {
                            next.push(keyed[start..j].iter().map(|&(_, v)| v).collect());
                            start = j;
                        }
                    }
                    changed |= keyed[0].0 != keyed[keyed.len() - 1].0;
                }
                *cells = next;
                i += 1;
            }
            if !changed {
                break;
            }
        }
    }

    fn quotient_hash(&self, cells: &Cells) -> u64 {
        let mut h = DefaultHasher::new();
        for cell in cells {
            cell.len().hash(&mut h);
            for other in cells {
                self.count_in(cell[0], other).hash(&mut h);
            }
        }
        h.finish()
    }

    fn leaf_code(&self, order: &[Vertex]) -> u128 {
        let mut code = 0u128;
        let mut bit = 0;
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.adj[order[i]] & (1 << order[j]) != 0 {
                    code |= 1u128 << bit;
                }
                bit += 1;
            }
        }
        code
    }

    fn twins(&self, a: Vertex, b: Vertex) -> bool {
        let (na, nb) = (self.adj[a], self.adj[b]);
        na & !(1 << b) == nb & !(1 << a)
    }

    fn search(&mut self, cells: Cells, path: &mut Vec<u64>) {
        path.push(self.quotient_hash(&cells));
        if self.best_code.is_some() {
            let k = path.len().min(self.best_path.len());
            if path[..k] < self.best_path[..k] {
                path.pop();
                return;
            }
        }
        match cells.iter().position(|c| c.len() > 1) {
            None => {
                let order: Vec<Vertex> = cells.iter().map(|c| c[0]).collect();
                let code = self.leaf_code(&order);
                let wins = match self.best_code {
                    None => true,
                    Some(b) => (&path[..], code) > (&self.best_path[..], b),
                };
                if wins {
                    self.best_code = Some(code);
                    self.best_path = path.clone();
                    self.best_order = order;
                }
            }
            Some(target) => {
                let cell = cells[target].clone();
                let mut tried: Vec<Vertex> = Vec::new();
                for &v in &cell {
                    // Swapping two twins is an automorphism fixing everything
                    // individualized so far, so one of them suffices.
                    if tried.iter().any(|&u| self.twins(u, v)) {
                        continue;
                    }
                    tried.push(v);
                    let mut child = Vec::with_capacity(cells.len() + 1);
                    child.extend(cells[..target].iter().cloned());
                    child.push(vec![v]);
                    child.push(cell.iter().copied().filter(|&w| w != v).collect());
                    child.extend(cells[target + 1..].iter().cloned());
                    self.refine(&mut child);
                    self.search(child, path);
                }
            }
        }
        path.pop();
    }
}

fn check_order(g: &Graph) -> Result<()> {
    if g.order() > CANON_MAX_ORDER {
        return Err(Error::OutOfRange {
            what: "order",
            detail: format!("canonical form supports at most {CANON_MAX_ORDER} vertices, got {}", g.order()),
        });
    }
    Ok(())
}

fn run(g: &Graph) -> Canon {
    let mut c = Canon::new(g);
    let mut cells: Cells = if c.n == 0 { vec![] } else { vec![(0..c.n).collect()] };
    c.refine(&mut cells);
    c.search(cells, &mut Vec::new());
    c
}

/// Canonical code of `g`.
pub fn canonical_code(g: &Graph) -> Result<CanonCode> {
    check_order(g)?;
    let c = run(g);
    Ok(CanonCode { n: g.order() as u8, bits: c.best_code.unwrap_or(0) })
}

/// `order[i]` is the vertex placed at canonical position `i`.
pub fn canonical_order(g: &Graph) -> Result<Vec<Vertex>> {
    check_order(g)?;
    Ok(run(g).best_order)
}

/// The canonical relabeling of `g`; isomorphic graphs give equal results.
pub fn canonical_form(g: &Graph) -> Result<Graph> {
    let order = canonical_order(g)?;
    let mut perm = vec![0; g.order()];
    for (i, &v) in order.iter().enumerate() {
        perm[v] = i;
    }
    g.relabel(&perm)
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    if a.order() != b.order() || a.size() != b.size() {
        return Ok(false);
    }
    Ok(canonical_code(a)? == canonical_code(b)?)
}
