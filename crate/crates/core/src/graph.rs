//! Immutable simple undirected graphs on dense vertex ids `0..n`.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// A vertex id. Vertices of a graph of order `n` are `0..n`.
pub type Vertex = usize;

/// Simple undirected graph with sorted adjacency lists and a bitset
/// adjacency matrix for constant-time edge queries.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    adj: Vec<Vec<Vertex>>,
    bits: Vec<u64>,
    edge_count: usize,
}

impl Graph {
    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        Graph {
            n,
            words,
            adj: vec![Vec::new(); n],
            bits: vec![0; n * words],
            edge_count: 0,
        }
    }

    /// Builds a graph from an edge list, rejecting loops, out-of-range
    /// endpoints and repeated edges.
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange { vertex: u.max(v), n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if g.has_edge(u, v) {
                return Err(Error::ParallelEdge(u.min(v), u.max(v)));
            }
            g.insert(u, v);
        }
        g.sort_lists();
        Ok(g)
    }

    /// Like [`Graph::from_edges`] but silently ignores repeated edges.
    pub fn from_edges_dedup(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        let set: BTreeSet<(Vertex, Vertex)> =
            edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
        let list: Vec<_> = set.into_iter().collect();
        Graph::from_edges(n, &list)
    }

    fn insert(&mut self, u: Vertex, v: Vertex) {
        self.adj[u].push(v);
        self.adj[v].push(u);
        self.bits[u * self.words + v / 64] |= 1 << (v % 64);
        self.bits[v * self.words + u / 64] |= 1 << (u % 64);
        self.edge_count += 1;
    }

    fn sort_lists(&mut self) {
        for list in &mut self.adj {
            list.sort_unstable();
        }
    }

    /// Order `|G|`.
    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Size `e(G)`.
    #[inline]
    pub fn size(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n && v < self.n && self.bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    /// Sorted neighbor list of `v`.
    #[inline]
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    /// Bitset row of `v`, one bit per vertex, `ceil(n / 64)` words.
    pub fn adjacency_row(&self, v: Vertex) -> &[u64] {
        &self.bits[v * self.words..(v + 1) * self.words]
    }

    /// Neighborhood as a single mask. Only valid for graphs with `n <= 64`.
    pub fn neighbor_mask(&self, v: Vertex) -> u64 {
        debug_assert!(self.n <= 64);
        self.bits[v * self.words]
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// Smallest degree among non-isolated vertices.
    pub fn min_nonzero_degree(&self) -> Option<usize> {
        self.adj.iter().map(Vec::len).filter(|&d| d > 0).min()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn edge_vec(&self) -> Vec<(Vertex, Vertex)> {
        self.edges().collect()
    }

    /// Copy of the graph without edge `uv`.
    pub fn without_edge(&self, u: Vertex, v: Vertex) -> Result<Self> {
        if !self.has_edge(u, v) {
            return Err(Error::MissingEdge(u, v));
        }
        let (a, b) = (u.min(v), u.max(v));
        let edges: Vec<_> = self.edges().filter(|&e| e != (a, b)).collect();
        Graph::from_edges(self.n, &edges)
    }

    /// Copy of the graph with the extra edge `uv`.
    pub fn with_edge(&self, u: Vertex, v: Vertex) -> Result<Self> {
        let mut edges = self.edge_vec();
        edges.push((u, v));
        Graph::from_edges(self.n, &edges)
    }

    /// Subgraph induced by `vertices`; vertex `vertices[i]` becomes `i`.
    pub fn induced(&self, vertices: &[Vertex]) -> Self {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Graph::empty(vertices.len());
        for (i, &v) in vertices.iter().enumerate() {
            for &w in &self.adj[v] {
                let j = index[w];
                if j != usize::MAX && i < j {
                    g.insert(i, j);
                }
            }
        }
        g.sort_lists();
        g
    }

    /// Disjoint union; vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Self {
        let shift = self.n;
        let mut edges = self.edge_vec();
        edges.extend(other.edges().map(|(u, v)| (u + shift, v + shift)));
        Graph::from_edges(self.n + other.n, &edges).expect("union of simple graphs is simple")
    }

    /// Copy with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[Vertex]) -> Result<Self> {
        let mut seen = vec![false; self.n];
        if perm.len() != self.n {
            return Err(Error::InvalidPermutation);
        }
        for &p in perm {
            if p >= self.n || seen[p] {
                return Err(Error::InvalidPermutation);
            }
            seen[p] = true;
        }
        let edges: Vec<_> = self.edges().map(|(u, v)| (perm[u], perm[v])).collect();
        Graph::from_edges(self.n, &edges)
    }

    /// Number of edges with one end in `left` and the other in `right`.
    ///
    /// The two sets must be disjoint.
    pub fn edges_between(&self, left: &[Vertex], right: &[Vertex]) -> Result<usize> {
        let mut in_right = vec![false; self.n];
        for &w in right {
            if w >= self.n {
                return Err(Error::VertexOutOfRange { vertex: w, n: self.n });
            }
            in_right[w] = true;
        }
        let mut count = 0;
        for &u in left {
            if u >= self.n {
                return Err(Error::VertexOutOfRange { vertex: u, n: self.n });
            }
            if in_right[u] {
                return Err(Error::OverlappingSets(u));
            }
            count += self.adj[u].iter().filter(|&&w| in_right[w]).count();
        }
        Ok(count)
    }

    /// Number of neighbors of `v` inside `set`.
    pub fn neighbors_in(&self, v: Vertex, set: &[Vertex]) -> usize {
        set.iter().filter(|&&w| self.has_edge(v, w)).count()
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        self.component_of(0).len() == self.n
    }

    /// Vertices reachable from `start`, in BFS order.
    pub fn component_of(&self, start: Vertex) -> Vec<Vertex> {
        let mut seen = vec![false; self.n];
        let mut queue = std::collections::VecDeque::new();
        let mut out = Vec::new();
        seen[start] = true;
        queue.push_back(start);
        while let Some(v) = queue.pop_front() {
            out.push(v);
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        out
    }

    /// Degeneracy ordering (repeatedly remove a minimum-degree vertex),
    /// together with each vertex's removal position.
    pub fn degeneracy_order(&self) -> Vec<Vertex> {
        let mut deg = self.degrees();
        let mut removed = vec![false; self.n];
        let mut order = Vec::with_capacity(self.n);
        for _ in 0..self.n {
            let v = (0..self.n)
                .filter(|&v| !removed[v])
                .min_by_key(|&v| (deg[v], v))
                .expect("vertices remain");
            removed[v] = true;
            order.push(v);
            for &w in &self.adj[v] {
                if !removed[w] {
                    deg[w] -= 1;
                }
            }
        }
        order
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edge_vec())
    }
}

/// Constructors for the named graphs used throughout the tests and examples.
pub mod named {
    use super::{Graph, Vertex};

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycles need at least 3 vertices");
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((n - 1, 0));
        Graph::from_edges(n, &edges).unwrap()
    }

    pub fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::from_edges(n, &edges).unwrap()
    }

    /// `K_{a,b}` with sides `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..a {
            for v in a..a + b {
                edges.push((u, v));
            }
        }
        Graph::from_edges(a + b, &edges).unwrap()
    }

    /// `K_{1,m}` with center 0.
    pub fn star(m: usize) -> Graph {
        complete_bipartite(1, m)
    }

    pub fn petersen() -> Graph {
        let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edges(10, &edges).unwrap()
    }

    /// The 3-cube `Q3`: vertices are 3-bit strings, adjacent when they differ in one bit.
    pub fn cube() -> Graph {
        let mut edges = Vec::new();
        for u in 0..8usize {
            for bit in 0..3 {
                let v = u ^ (1 << bit);
                if u < v {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(8, &edges).unwrap()
    }
}
