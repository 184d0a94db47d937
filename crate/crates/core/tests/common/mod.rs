//! Brute-force oracles shared by the integration tests. None of them call
//! into the solvers they check.

#![allow(dead_code)]

use std::collections::{HashMap, HashSet};

use equicolor::gen::canonical_code;
use equicolor::Graph;

/// Equitable k-colorability by walking every set partition into at most `k`
/// blocks (restricted growth strings).
pub fn naive_equitable(g: &Graph, k: usize) -> bool {
    let n = g.order();
    if k == 0 {
        return n == 0;
    }
    let mut block = vec![0usize; n];
    fn go(g: &Graph, k: usize, v: usize, used: usize, block: &mut Vec<usize>) -> bool {
        let n = g.order();
        if v == n {
            let mut sizes = vec![0usize; k];
            for &b in block.iter() {
                sizes[b] += 1;
            }
            let (lo, hi) = (sizes.iter().min().unwrap(), sizes.iter().max().unwrap());
            return hi - lo <= 1;
        }
        for b in 0..(used + 1).min(k) {
            if (0..v).any(|u| block[u] == b && g.has_edge(u, v)) {
                continue;
            }
            block[v] = b;
            if go(g, k, v + 1, used.max(b + 1), block) {
                return true;
            }
        }
        false
    }
    go(g, k, 0, 0, &mut block)
}

/// Proper k-colorability by brute force over color assignments.
pub fn naive_proper(g: &Graph, k: usize) -> bool {
    let n = g.order();
    let mut color = vec![0usize; n];
    fn go(g: &Graph, k: usize, v: usize, color: &mut Vec<usize>) -> bool {
        if v == g.order() {
            return true;
        }
        for c in 0..k {
            if (0..v).all(|u| !(color[u] == c && g.has_edge(u, v))) {
                color[v] = c;
                if go(g, k, v + 1, color) {
                    return true;
                }
            }
        }
        false
    }
    n == 0 || (k > 0 && go(g, k, 0, &mut color))
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Edge bitmask over `pairs(n)`.
fn mask_of(n: usize, edges: &[(usize, usize)]) -> u64 {
    let index: HashMap<(usize, usize), usize> = pairs(n).into_iter().enumerate().map(|(i, p)| (p, i)).collect();
    edges.iter().fold(0, |m, &(u, v)| m | 1 << index[&(u.min(v), u.max(v))])
}

/// Every labeled graph on `n <= 6` vertices passing `keep`, one per
/// isomorphism class (smallest relabeled mask), returned as sorted masks.
pub fn naive_classes(n: usize, keep: impl Fn(&Graph) -> bool) -> Vec<u64> {
    assert!(n <= 6);
    let ps = pairs(n);
    let perms = permutations(n);
    let mut seen: HashSet<u64> = HashSet::new();
    let mut reps = Vec::new();
    for mask in 0u64..1 << ps.len() {
        if seen.contains(&mask) {
            continue;
        }
        let edges: Vec<(usize, usize)> = ps.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &p)| p).collect();
        let mut orbit_min = mask;
        for p in &perms {
            let moved: Vec<(usize, usize)> = edges.iter().map(|&(u, v)| (p[u], p[v])).collect();
            let m2 = mask_of(n, &moved);
            seen.insert(m2);
            orbit_min = orbit_min.min(m2);
        }
        let g = Graph::from_edges(n, &edges).unwrap();
        if keep(&g) {
            reps.push(orbit_min);
        }
    }
    reps.sort_unstable();
    reps
}

/// Smallest relabeled edge mask; an isomorphism invariant for `n <= 6`.
pub fn naive_class_of(g: &Graph) -> u64 {
    let n = g.order();
    let edges = g.edge_vec();
    permutations(n)
        .iter()
        .map(|p| mask_of(n, &edges.iter().map(|&(u, v)| (p[u], p[v])).collect::<Vec<_>>()))
        .min()
        .unwrap()
}

/// Cycle of length `k` anywhere in the graph, by DFS over simple paths.
pub fn naive_has_cycle(g: &Graph, k: usize) -> bool {
    fn extend(g: &Graph, path: &mut Vec<usize>, k: usize) -> bool {
        let last = *path.last().unwrap();
        if path.len() == k {
            return g.has_edge(last, path[0]);
        }
        for &w in g.neighbors(last) {
            if w > path[0] && !path.contains(&w) {
                path.push(w);
                if extend(g, path, k) {
                    return true;
                }
                path.pop();
            }
        }
        false
    }
    (0..g.order()).any(|s| extend(g, &mut vec![s], k))
}

fn contract(g: &Graph, a: usize, b: usize) -> Graph {
    // Merge b into a and drop b.
    let map = |v: usize| {
        let v = if v == b { a } else { v };
        if v > b {
            v - 1
        } else {
            v
        }
    };
    let edges: Vec<(usize, usize)> =
        g.edges().filter(|&e| e != (a.min(b), a.max(b))).map(|(u, v)| (map(u), map(v))).filter(|(u, v)| u != v).collect();
    Graph::from_edges_dedup(g.order() - 1, &edges).unwrap()
}

/// Planarity by Wagner's theorem: a graph is planar iff neither K5 nor
/// K3,3 is a minor. Minors are explored one deletion or contraction at a
/// time, memoized by isomorphism class.
pub struct WagnerOracle {
    memo: HashMap<(u8, u128), bool>,
}

impl WagnerOracle {
    pub fn new() -> Self {
        WagnerOracle { memo: HashMap::new() }
    }

    pub fn is_planar(&mut self, g: &Graph) -> bool {
        !self.has_kuratowski_minor(g)
    }

    fn has_kuratowski_minor(&mut self, g: &Graph) -> bool {
        let n = g.order();
        let e = g.size();
        // Too small to hold K5 (5 vertices, 10 edges) or K3,3 (6, 9).
        if n < 5 || e < 9 {
            return false;
        }
        let code = canonical_code(g).unwrap();
        let key = (code.n, code.bits);
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let is_k5 = n == 5 && e == 10;
        let is_k33 = n == 6 && e == 9 && {
            let k33 = Graph::from_edges(6, &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)]).unwrap();
            canonical_code(&k33).unwrap() == code
        };
        let mut found = is_k5 || is_k33;
        if !found {
            // Isolated vertices never help.
            if let Some(v) = (0..n).find(|&v| g.degree(v) == 0) {
                let rest: Vec<usize> = (0..n).filter(|&u| u != v).collect();
                found = self.has_kuratowski_minor(&g.induced(&rest));
            } else {
                for (a, b) in g.edge_vec() {
                    if self.has_kuratowski_minor(&g.without_edge(a, b).unwrap())
                        || self.has_kuratowski_minor(&contract(g, a, b))
                    {
                        found = true;
                        break;
                    }
                }
            }
        }
        self.memo.insert(key, found);
        found
    }
}
