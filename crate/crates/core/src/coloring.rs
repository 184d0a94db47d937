//! Color-class partitions, equitability checks and class moves.
//!
//! Class indices are 0-based in the API; violation reports and the text
//! formats use 1-based class numbers.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Ordered list of disjoint classes over `0..n`, with at most one vertex left
/// uncolored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition {
    n: usize,
    classes: Vec<Vec<Vertex>>,
    uncolored: Option<Vertex>,
}

impl Partition {
    /// Validates disjointness and that the classes plus `uncolored` cover `0..n`.
    pub fn new(n: usize, mut classes: Vec<Vec<Vertex>>, uncolored: Option<Vertex>) -> Result<Self> {
        let mut seen = vec![false; n];
        let mark = |v: Vertex, seen: &mut Vec<bool>| -> Result<()> {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if seen[v] {
                return Err(Error::DuplicateVertex(v));
            }
            seen[v] = true;
            Ok(())
        };
        for class in &mut classes {
            class.sort_unstable();
            for &v in class.iter() {
                mark(v, &mut seen)?;
            }
        }
        if let Some(x) = uncolored {
            mark(x, &mut seen)?;
        }
        if let Some(v) = seen.iter().position(|&s| !s) {
            return Err(Error::Uncovered(v));
        }
        Ok(Partition { n, classes, uncolored })
    }

    /// Partition from a color per vertex, with `k` classes.
    pub fn from_colors(colors: &[usize], k: usize) -> Result<Self> {
        let mut classes = vec![Vec::new(); k];
        for (v, &c) in colors.iter().enumerate() {
            if c >= k {
                return Err(Error::ClassOutOfRange(c));
            }
            classes[c].push(v);
        }
        Partition::new(colors.len(), classes, None)
    }

    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn classes(&self) -> &[Vec<Vertex>] {
        &self.classes
    }

    pub fn into_classes(self) -> Vec<Vec<Vertex>> {
        self.classes
    }

    pub fn class(&self, i: usize) -> &[Vertex] {
        &self.classes[i]
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn uncolored(&self) -> Option<Vertex> {
        self.uncolored
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }

    /// Class index of every vertex; `None` for the uncolored vertex.
    pub fn color_map(&self) -> Vec<Option<usize>> {
        let mut out = vec![None; self.n];
        for (i, class) in self.classes.iter().enumerate() {
            for &v in class {
                out[v] = Some(i);
            }
        }
        out
    }

    pub fn class_of(&self, v: Vertex) -> Option<usize> {
        self.classes.iter().position(|c| c.binary_search(&v).is_ok())
    }

    /// Same classes in a new order: class `i` of the result is `order[i]` of `self`.
    pub fn reordered(&self, order: &[usize]) -> Result<Self> {
        let mut used = vec![false; self.classes.len()];
        if order.len() != self.classes.len() {
            return Err(Error::InvalidPermutation);
        }
        for &i in order {
            if i >= used.len() || used[i] {
                return Err(Error::InvalidPermutation);
            }
            used[i] = true;
        }
        let classes = order.iter().map(|&i| self.classes[i].clone()).collect();
        Ok(Partition { n: self.n, classes, uncolored: self.uncolored })
    }
}

/// A class slot for [`Move`]: a class index or the uncolored position.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Slot {
    Class(usize),
    Uncolored,
}

/// Moves `vertex` from one slot to another.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Move {
    pub vertex: Vertex,
    pub from: Slot,
    pub to: Slot,
}

impl Move {
    pub fn new(vertex: Vertex, from: Slot, to: Slot) -> Self {
        Move { vertex, from, to }
    }
}

/// Applies the moves in order. Each vertex must sit in its `from` slot at the
/// time it is moved; classes not touched by the chain are returned unchanged.
pub fn apply_chain(p: &Partition, chain: &[Move]) -> Result<Partition> {
    let mut out = p.clone();
    for (index, mv) in chain.iter().enumerate() {
        let bad = || Error::InconsistentMove {
            index,
            vertex: mv.vertex,
            from: match mv.from {
                Slot::Class(i) => i + 1,
                Slot::Uncolored => 0,
            },
        };
        match mv.from {
            Slot::Uncolored => {
                if out.uncolored != Some(mv.vertex) {
                    return Err(bad());
                }
                out.uncolored = None;
            }
            Slot::Class(i) => {
                let class = out.classes.get_mut(i).ok_or(Error::ClassOutOfRange(i))?;
                let pos = class.binary_search(&mv.vertex).map_err(|_| bad())?;
                class.remove(pos);
            }
        }
        match mv.to {
            Slot::Uncolored => {
                if out.uncolored.is_some() {
                    return Err(bad());
                }
                out.uncolored = Some(mv.vertex);
            }
            Slot::Class(j) => {
                let class = out.classes.get_mut(j).ok_or(Error::ClassOutOfRange(j))?;
                let pos = class.binary_search(&mv.vertex).unwrap_err();
                class.insert(pos, mv.vertex);
            }
        }
    }
    Ok(out)
}

/// Why a partition is not an equitable `k`-coloring. Class numbers are 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "reason", rename_all = "kebab-case")]
pub enum ColoringViolation {
    OrderMismatch { graph: usize, partition: usize },
    ClassCount { expected: usize, found: usize },
    Uncolored { vertex: Vertex },
    MonochromaticEdge { u: Vertex, v: Vertex, class: usize },
    Unbalanced { small_class: usize, small_size: usize, large_class: usize, large_size: usize },
}

impl fmt::Display for ColoringViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use ColoringViolation::*;
        match self {
            OrderMismatch { graph, partition } => {
                write!(f, "partition covers {partition} vertices, graph has {graph}")
            }
            ClassCount { expected, found } => write!(f, "expected {expected} classes, found {found}"),
            Uncolored { vertex } => write!(f, "vertex {} is uncolored", vertex + 1),
            MonochromaticEdge { u, v, class } => {
                write!(f, "edge {}-{} inside class {class}", u + 1, v + 1)
            }
            Unbalanced { small_class, small_size, large_class, large_size } => write!(
                f,
                "class {small_class} has {small_size} vertices, class {large_class} has {large_size}"
            ),
        }
    }
}

/// True iff no edge has both ends in one class.
pub fn is_proper(g: &Graph, p: &Partition) -> Result<bool> {
    if let Some(x) = p.uncolored() {
        return Err(Error::Uncovered(x));
    }
    if p.universe() != g.order() {
        return Err(Error::OutOfRange {
            what: "partition universe",
            detail: format!("{} vs graph order {}", p.universe(), g.order()),
        });
    }
    Ok(first_monochromatic_edge(g, p).is_none())
}

fn first_monochromatic_edge(g: &Graph, p: &Partition) -> Option<(Vertex, Vertex, usize)> {
    let colors = p.color_map();
    g.edges().find_map(|(u, v)| match (colors[u], colors[v]) {
        (Some(a), Some(b)) if a == b => Some((u, v, a)),
        _ => None,
    })
}

/// True iff class sizes pairwise differ by at most one.
pub fn is_equitable(p: &Partition) -> bool {
    sizes_equitable(&p.sizes())
}

pub fn sizes_equitable(sizes: &[usize]) -> bool {
    match (sizes.iter().min(), sizes.iter().max()) {
        (Some(lo), Some(hi)) => hi - lo <= 1,
        _ => true,
    }
}

/// Checks that `p` is a proper, equitable coloring of `g` with exactly `k` classes.
pub fn verify_equitable_k_coloring(
    g: &Graph,
    p: &Partition,
    k: usize,
) -> std::result::Result<(), ColoringViolation> {
    if p.universe() != g.order() {
        return Err(ColoringViolation::OrderMismatch { graph: g.order(), partition: p.universe() });
    }
    if p.num_classes() != k {
        return Err(ColoringViolation::ClassCount { expected: k, found: p.num_classes() });
    }
    if let Some(x) = p.uncolored() {
        return Err(ColoringViolation::Uncolored { vertex: x });
    }
    if let Some((u, v, class)) = first_monochromatic_edge(g, p) {
        return Err(ColoringViolation::MonochromaticEdge { u, v, class: class + 1 });
    }
    let sizes = p.sizes();
    if !sizes_equitable(&sizes) {
        let (small_class, &small_size) =
            sizes.iter().enumerate().min_by_key(|&(i, s)| (*s, i)).unwrap();
        let (large_class, &large_size) =
            sizes.iter().enumerate().max_by_key(|&(i, s)| (*s, std::cmp::Reverse(i))).unwrap();
        return Err(ColoringViolation::Unbalanced {
            small_class: small_class + 1,
            small_size,
            large_class: large_class + 1,
            large_size,
        });
    }
    Ok(())
}

/// A partition that has passed [`verify_equitable_k_coloring`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquitableColoring {
    partition: Partition,
}

impl EquitableColoring {
    pub fn new(g: &Graph, partition: Partition, k: usize) -> std::result::Result<Self, ColoringViolation> {
        verify_equitable_k_coloring(g, &partition, k)?;
        Ok(EquitableColoring { partition })
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn into_partition(self) -> Partition {
        self.partition
    }

    pub fn k(&self) -> usize {
        self.partition.num_classes()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    fn part(n: usize, classes: &[&[Vertex]]) -> Partition {
        Partition::new(n, classes.iter().map(|c| c.to_vec()).collect(), None).unwrap()
    }

    #[test]
    fn partition_validation() {
        assert!(matches!(
            Partition::new(3, vec![vec![0, 1], vec![1]], Some(2)),
            Err(Error::DuplicateVertex(1))
        ));
        assert!(matches!(Partition::new(3, vec![vec![0]], Some(1)), Err(Error::Uncovered(2))));
        assert!(Partition::new(3, vec![vec![0], vec![2]], Some(1)).is_ok());
    }

    #[test]
    fn properness_examples() {
        assert!(is_proper(&cycle(4), &part(4, &[&[0, 2], &[1, 3]])).unwrap());
        assert!(!is_proper(&path(2), &part(2, &[&[0, 1]])).unwrap());
        assert!(is_proper(&cycle(5), &part(5, &[&[0, 2], &[1, 3], &[4]])).unwrap());
        let partial = Partition::new(2, vec![vec![0]], Some(1)).unwrap();
        assert!(matches!(is_proper(&path(2), &partial), Err(Error::Uncovered(1))));
    }

    #[test]
    fn equitability_examples() {
        assert!(sizes_equitable(&[2, 2, 2]));
        assert!(!sizes_equitable(&[3, 1]));
        assert!(sizes_equitable(&[2, 1, 1]));
        assert!(sizes_equitable(&[]));
    }

    #[test]
    fn verification_examples() {
        assert_eq!(verify_equitable_k_coloring(&path(4), &part(4, &[&[0, 2], &[1, 3]]), 2), Ok(()));
        assert_eq!(
            verify_equitable_k_coloring(&cycle(5), &part(5, &[&[0, 2], &[1, 3], &[4]]), 3),
            Ok(())
        );
        // K3,3 with sides {0,1,2} and {3,4,5}: any three classes of size two.
        let k33 = complete_bipartite(3, 3);
        for p in [
            part(6, &[&[0, 1], &[2, 3], &[4, 5]]),
            part(6, &[&[0, 3], &[1, 4], &[2, 5]]),
            part(6, &[&[0, 2], &[1, 5], &[3, 4]]),
        ] {
            assert!(matches!(
                verify_equitable_k_coloring(&k33, &p, 3),
                Err(ColoringViolation::MonochromaticEdge { .. })
            ));
        }
        assert_eq!(
            verify_equitable_k_coloring(&path(4), &part(4, &[&[0, 2], &[1, 3]]), 3),
            Err(ColoringViolation::ClassCount { expected: 3, found: 2 })
        );
        assert_eq!(
            verify_equitable_k_coloring(&path(4), &part(4, &[&[0, 2, 3], &[1]]), 2),
            Err(ColoringViolation::MonochromaticEdge { u: 2, v: 3, class: 1 })
        );
        assert_eq!(
            verify_equitable_k_coloring(&Graph::empty(4), &part(4, &[&[0, 2, 3], &[1]]), 2),
            Err(ColoringViolation::Unbalanced {
                small_class: 2,
                small_size: 1,
                large_class: 1,
                large_size: 3
            })
        );
    }

    #[test]
    fn chain_moves() {
        let p = part(6, &[&[0, 1], &[2, 3], &[4, 5]]);
        assert_eq!(apply_chain(&p, &[]).unwrap(), p);
        let q = apply_chain(&p, &[Move::new(2, Slot::Class(1), Slot::Class(0))]).unwrap();
        assert_eq!(q.sizes(), vec![3, 1, 2]);
        assert_eq!(q.class(2), p.class(2));
        let err = apply_chain(&p, &[Move::new(2, Slot::Class(0), Slot::Class(1))]);
        assert!(matches!(err, Err(Error::InconsistentMove { index: 0, vertex: 2, from: 1 })));
        let with_x = Partition::new(3, vec![vec![0], vec![1]], Some(2)).unwrap();
        let placed = apply_chain(&with_x, &[Move::new(2, Slot::Uncolored, Slot::Class(0))]).unwrap();
        assert_eq!(placed.uncolored(), None);
        assert_eq!(placed.class(0), &[0, 2]);
    }

    #[test]
    fn reordering_is_a_permutation() {
        let p = part(4, &[&[0], &[1, 2], &[3]]);
        let q = p.reordered(&[2, 0, 1]).unwrap();
        assert_eq!(q.classes(), &[vec![3], vec![0], vec![1, 2]]);
        assert!(p.reordered(&[0, 0, 1]).is_err());
    }
}
