//! Girth and fixed-length cycle detection.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Length of a shortest cycle, or `None` for forests.
///
/// One breadth-first search per root; a non-tree edge `uw` closes a closed
/// walk of length `dist(u) + dist(w) + 1`, and the minimum over all roots is
/// the girth.
pub fn girth(g: &Graph) -> Option<usize> {
    let n = g.order();
    let mut best: Option<usize> = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for root in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[root] = 0;
        parent[root] = usize::MAX;
        queue.clear();
        queue.push_back(root);
        'bfs: while let Some(u) = queue.pop_front() {
            if let Some(b) = best {
                // Any cycle found from here on is at least 2 * dist(u) + 1 long.
                if 2 * dist[u] + 1 >= b {
                    break 'bfs;
                }
            }
            for &w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    let len = dist[u] + dist[w] + 1;
                    if best.is_none_or(|b| len < b) {
                        best = Some(len);
                    }
                }
            }
        }
    }
    best
}

/// True iff the graph contains a cycle on exactly `k` vertices.
pub fn has_cycle_of_length(g: &Graph, k: usize) -> Result<bool> {
    Ok(find_cycle_of_length(g, k)?.is_some())
}

/// A cycle on exactly `k` vertices, listed in traversal order, if one exists.
pub fn find_cycle_of_length(g: &Graph, k: usize) -> Result<Option<Vec<Vertex>>> {
    if k < 3 {
        return Err(Error::CycleLengthTooSmall(k));
    }
    if k > g.order() {
        return Ok(None);
    }
    let mut path = Vec::with_capacity(k);
    let mut on_path = vec![false; g.order()];
    for start in 0..g.order() {
        // The start is the smallest vertex on the cycle.
        path.clear();
        path.push(start);
        on_path[start] = true;
        let found = extend_cycle(g, start, k, &mut path, &mut on_path);
        on_path[start] = false;
        if found {
            return Ok(Some(path));
        }
    }
    Ok(None)
}

fn extend_cycle(
    g: &Graph,
    start: Vertex,
    k: usize,
    path: &mut Vec<Vertex>,
    on_path: &mut [bool],
) -> bool {
    let last = *path.last().unwrap();
    if path.len() == k {
        return g.has_edge(last, start);
    }
    for &w in g.neighbors(last) {
        if w <= start || on_path[w] {
            continue;
        }
        // Fix the orientation: the second vertex is smaller than the last.
        if path.len() == k - 1 && w < path[1] {
            continue;
        }
        path.push(w);
        on_path[w] = true;
        if extend_cycle(g, start, k, path, on_path) {
            return true;
        }
        on_path[w] = false;
        path.pop();
    }
    false
}

/// True iff `g` has a simple path with exactly `len` edges from `from` to `to`,
/// i.e. adding the edge `from`-`to` would close a cycle on `len + 1` vertices.
pub fn has_path_of_length(g: &Graph, from: Vertex, to: Vertex, len: usize) -> bool {
    if from == to || len == 0 {
        return false;
    }
    let mut on_path = vec![false; g.order()];
    on_path[from] = true;
    path_search(g, from, to, len, &mut on_path)
}

fn path_search(g: &Graph, at: Vertex, to: Vertex, remaining: usize, on_path: &mut [bool]) -> bool {
    if remaining == 1 {
        return g.has_edge(at, to);
    }
    for &w in g.neighbors(at) {
        if on_path[w] || w == to {
            continue;
        }
        on_path[w] = true;
        let found = path_search(g, w, to, remaining - 1, on_path);
        on_path[w] = false;
        if found {
            return true;
        }
    }
    false
}

/// Breadth-first distance between two vertices.
pub fn distance(g: &Graph, from: Vertex, to: Vertex) -> Option<usize> {
    let mut dist = vec![usize::MAX; g.order()];
    let mut queue = VecDeque::from([from]);
    dist[from] = 0;
    while let Some(u) = queue.pop_front() {
        if u == to {
            return Some(dist[u]);
        }
        for &w in g.neighbors(u) {
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn girth_examples() {
        assert_eq!(girth(&cycle(5)), Some(5));
        assert_eq!(girth(&complete_bipartite(3, 3)), Some(4));
        assert_eq!(girth(&path(4)), None);
        assert_eq!(girth(&petersen()), Some(5));
        assert_eq!(girth(&cube()), Some(4));
        assert_eq!(girth(&complete(4)), Some(3));
        assert_eq!(girth(&cycle(40)), Some(40));
    }

    #[test]
    fn cycle_length_examples() {
        assert!(has_cycle_of_length(&complete(4), 3).unwrap());
        assert!(!has_cycle_of_length(&cycle(6), 4).unwrap());
        assert!(has_cycle_of_length(&cycle(6), 6).unwrap());
        assert!(has_cycle_of_length(&petersen(), 5).unwrap());
        assert!(matches!(has_cycle_of_length(&cycle(4), 2), Err(Error::CycleLengthTooSmall(2))));
    }

    #[test]
    fn witness_is_a_cycle() {
        let g = petersen();
        for k in 5..=9 {
            if let Some(c) = find_cycle_of_length(&g, k).unwrap() {
                assert_eq!(c.len(), k);
                for i in 0..k {
                    assert!(g.has_edge(c[i], c[(i + 1) % k]));
                }
                let mut sorted = c.clone();
                sorted.sort_unstable();
                sorted.dedup();
                assert_eq!(sorted.len(), k);
            }
        }
    }

    #[test]
    fn petersen_cycle_spectrum() {
        let g = petersen();
        let lengths: Vec<usize> =
            (3..=10).filter(|&k| has_cycle_of_length(&g, k).unwrap()).collect();
        assert_eq!(lengths, vec![5, 6, 8, 9]);
    }

    #[test]
    fn path_lengths() {
        let c6 = cycle(6);
        assert!(has_path_of_length(&c6, 0, 3, 3));
        assert!(!has_path_of_length(&c6, 0, 3, 2));
        assert!(has_path_of_length(&c6, 0, 1, 5));
        assert_eq!(distance(&c6, 0, 3), Some(3));
        assert_eq!(distance(&path(3).disjoint_union(&path(2)), 0, 4), None);
    }
}
