//! Left-right planarity test.
//!
//! Iterative implementation of the Brandes left-right criterion: one DFS
//! orients the graph and computes lowpoints, a second DFS over the
//! nesting-ordered adjacency checks the conflict-pair constraints. Only the
//! yes/no answer is produced; no embedding is built.

use crate::graph::Graph;

type EdgeId = usize;

#[derive(Clone, Copy, Default, Debug)]
struct Interval {
    low: Option<EdgeId>,
    high: Option<EdgeId>,
}

impl Interval {
    fn new(low: EdgeId, high: EdgeId) -> Self {
        Interval { low: Some(low), high: Some(high) }
    }

    fn is_empty(&self) -> bool {
        self.low.is_none() && self.high.is_none()
    }
}

#[derive(Clone, Copy, Debug)]
struct ConflictPair {
    id: usize,
    left: Interval,
    right: Interval,
}

impl ConflictPair {
    fn swap(&mut self) {
        std::mem::swap(&mut self.left, &mut self.right);
    }
}

struct State<'a> {
    g: &'a Graph,
    // (neighbor, edge id) per vertex, undirected.
    adjs: Vec<Vec<(usize, EdgeId)>>,
    source: Vec<usize>,
    target: Vec<usize>,
    oriented: Vec<bool>,
    height: Vec<Option<usize>>,
    parent_edge: Vec<Option<EdgeId>>,
    lowpt: Vec<usize>,
    lowpt2: Vec<usize>,
    nesting_depth: Vec<usize>,
    out_edges: Vec<Vec<EdgeId>>,
    refs: Vec<Option<EdgeId>>,
    lowpt_edge: Vec<Option<EdgeId>>,
    stack_bottom: Vec<Option<usize>>,
    stack: Vec<ConflictPair>,
    next_pair_id: usize,
}

/// True iff the graph has a crossing-free drawing in the plane.
pub fn is_planar(g: &Graph) -> bool {
    let n = g.order();
    let m = g.size();
    if n < 5 {
        return true;
    }
    if m > 3 * n - 6 {
        return false;
    }
    State::new(g).run()
}

impl<'a> State<'a> {
    fn new(g: &'a Graph) -> Self {
        let n = g.order();
        let m = g.size();
        let mut adjs = vec![Vec::new(); n];
        let mut source = Vec::with_capacity(m);
        let mut target = Vec::with_capacity(m);
        for (id, (u, v)) in g.edges().enumerate() {
            adjs[u].push((v, id));
            adjs[v].push((u, id));
            source.push(u);
            target.push(v);
        }
        State {
            g,
            adjs,
            source,
            target,
            oriented: vec![false; m],
            height: vec![None; n],
            parent_edge: vec![None; n],
            lowpt: vec![0; m],
            lowpt2: vec![0; m],
            nesting_depth: vec![0; m],
            out_edges: vec![Vec::new(); n],
            refs: vec![None; m],
            lowpt_edge: vec![None; m],
            stack_bottom: vec![None; m],
            stack: Vec::new(),
            next_pair_id: 0,
        }
    }

    fn run(mut self) -> bool {
        let n = self.g.order();
        let mut roots = Vec::new();
        for v in 0..n {
            if self.height[v].is_none() {
                self.height[v] = Some(0);
                roots.push(v);
                self.orient(v);
            }
        }
        for v in 0..n {
            let depth = &self.nesting_depth;
            self.out_edges[v].sort_by_key(|&e| depth[e]);
        }
        roots.into_iter().all(|root| self.test(root))
    }

    fn h(&self, v: usize) -> usize {
        self.height[v].expect("visited vertex has a height")
    }

    fn orient(&mut self, root: usize) {
        let mut dfs = vec![root];
        let mut ind = vec![0usize; self.g.order()];
        let mut skip_init = vec![false; self.g.size()];
        while let Some(v) = dfs.pop() {
            let parent = self.parent_edge[v];
            while ind[v] < self.adjs[v].len() {
                let (w, vw) = self.adjs[v][ind[v]];
                if !skip_init[vw] {
                    if self.oriented[vw] {
                        ind[v] += 1;
                        continue;
                    }
                    self.oriented[vw] = true;
                    self.source[vw] = v;
                    self.target[vw] = w;
                    self.out_edges[v].push(vw);
                    let hv = self.h(v);
                    self.lowpt[vw] = hv;
                    self.lowpt2[vw] = hv;
                    match self.height[w] {
                        None => {
                            self.parent_edge[w] = Some(vw);
                            self.height[w] = Some(hv + 1);
                            dfs.push(v);
                            dfs.push(w);
                            skip_init[vw] = true;
                            break;
                        }
                        Some(hw) => self.lowpt[vw] = hw,
                    }
                }
                self.nesting_depth[vw] = 2 * self.lowpt[vw];
                if self.lowpt2[vw] < self.h(v) {
                    self.nesting_depth[vw] += 1;
                }
                if let Some(e) = parent {
                    if self.lowpt[vw] < self.lowpt[e] {
                        self.lowpt2[e] = self.lowpt[e].min(self.lowpt2[vw]);
                        self.lowpt[e] = self.lowpt[vw];
                    } else if self.lowpt[vw] > self.lowpt[e] {
                        self.lowpt2[e] = self.lowpt2[e].min(self.lowpt[vw]);
                    } else {
                        self.lowpt2[e] = self.lowpt2[e].min(self.lowpt2[vw]);
                    }
                }
                ind[v] += 1;
            }
        }
    }

    fn top_id(&self) -> Option<usize> {
        self.stack.last().map(|p| p.id)
    }

    fn push_pair(&mut self, left: Interval, right: Interval) {
        let id = self.next_pair_id;
        self.next_pair_id += 1;
        self.stack.push(ConflictPair { id, left, right });
    }

    fn test(&mut self, root: usize) -> bool {
        let mut dfs = vec![root];
        let mut ind = vec![0usize; self.g.order()];
        let mut skip_init = vec![false; self.g.size()];
        while let Some(v) = dfs.pop() {
            let parent = self.parent_edge[v];
            let mut descended = false;
            while ind[v] < self.out_edges[v].len() {
                let ei = self.out_edges[v][ind[v]];
                let w = self.target[ei];
                if !skip_init[ei] {
                    self.stack_bottom[ei] = self.top_id();
                    if self.parent_edge[w] == Some(ei) {
                        dfs.push(v);
                        dfs.push(w);
                        skip_init[ei] = true;
                        descended = true;
                        break;
                    }
                    self.lowpt_edge[ei] = Some(ei);
                    self.push_pair(Interval::default(), Interval::new(ei, ei));
                }
                if self.lowpt[ei] < self.h(v) {
                    if ind[v] == 0 {
                        let e = parent.expect("return edge below the root");
                        self.lowpt_edge[e] = self.lowpt_edge[ei];
                    } else {
                        let e = parent.expect("return edge below the root");
                        if !self.add_constraints(ei, e) {
                            return false;
                        }
                    }
                }
                ind[v] += 1;
            }
            if !descended {
                if let Some(e) = parent {
                    self.remove_back_edges(e);
                }
            }
        }
        true
    }

    fn conflicting(&self, iv: &Interval, b: EdgeId) -> bool {
        match iv.high {
            Some(high) if !iv.is_empty() => self.lowpt[high] > self.lowpt[b],
            _ => false,
        }
    }

    fn lowest(&self, p: &ConflictPair) -> usize {
        if p.left.is_empty() {
            return self.lowpt[p.right.low.expect("non-empty pair")];
        }
        if p.right.is_empty() {
            return self.lowpt[p.left.low.expect("non-empty pair")];
        }
        self.lowpt[p.left.low.unwrap()].min(self.lowpt[p.right.low.unwrap()])
    }

    fn add_constraints(&mut self, ei: EdgeId, e: EdgeId) -> bool {
        let mut p_left = Interval::default();
        let mut p_right = Interval::default();
        loop {
            let mut q = self.stack.pop().expect("return edges on the stack");
            if !q.left.is_empty() {
                q.swap();
            }
            if !q.left.is_empty() {
                return false;
            }
            let q_low = q.right.low.expect("return edge interval");
            if self.lowpt[q_low] > self.lowpt[e] {
                if p_right.is_empty() {
                    p_right = q.right;
                } else {
                    if let Some(l) = p_right.low {
                        self.refs[l] = q.right.high;
                    }
                    p_right.low = q.right.low;
                }
            } else {
                self.refs[q_low] = self.lowpt_edge[e];
            }
            if self.top_id() == self.stack_bottom[ei] {
                break;
            }
        }
        while let Some(top) = self.stack.last() {
            if !(self.conflicting(&top.left, ei) || self.conflicting(&top.right, ei)) {
                break;
            }
            let mut q = self.stack.pop().unwrap();
            if self.conflicting(&q.right, ei) {
                q.swap();
            }
            if self.conflicting(&q.right, ei) {
                return false;
            }
            if let Some(l) = p_right.low {
                self.refs[l] = q.right.high;
            }
            if q.right.low.is_some() {
                p_right.low = q.right.low;
            }
            if p_left.is_empty() {
                p_left = q.left;
            } else if let Some(l) = p_left.low {
                self.refs[l] = q.left.high;
            }
            p_left.low = q.left.low;
        }
        if !(p_left.is_empty() && p_right.is_empty()) {
            self.push_pair(p_left, p_right);
        }
        true
    }

    fn remove_back_edges(&mut self, e: EdgeId) {
        let u = self.source[e];
        let hu = self.h(u);
        while let Some(top) = self.stack.last() {
            if self.lowest(top) != hu {
                break;
            }
            self.stack.pop();
        }
        if let Some(mut p) = self.stack.pop() {
            while let Some(high) = p.left.high {
                if self.target[high] != u {
                    break;
                }
                p.left.high = self.refs[high];
            }
            if p.left.high.is_none() {
                if let Some(low) = p.left.low {
                    self.refs[low] = p.right.low;
                    p.left.low = None;
                }
            }
            while let Some(high) = p.right.high {
                if self.target[high] != u {
                    break;
                }
                p.right.high = self.refs[high];
            }
            if p.right.high.is_none() {
                if let Some(low) = p.right.low {
                    self.refs[low] = p.left.low;
                    p.right.low = None;
                }
            }
            self.stack.push(p);
        }
        if self.lowpt[e] < hu {
            let top = self.stack.last().expect("return edges on the stack");
            let (hl, hr) = (top.left.high, top.right.high);
            self.refs[e] = match (hl, hr) {
                (Some(l), None) => Some(l),
                (Some(l), Some(r)) if self.lowpt[l] > self.lowpt[r] => Some(l),
                _ => hr,
            };
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn small_named_graphs() {
        assert!(is_planar(&complete(4)));
        assert!(!is_planar(&complete(5)));
        assert!(!is_planar(&complete_bipartite(3, 3)));
        assert!(!is_planar(&petersen()));
        assert!(is_planar(&cube()));
        assert!(is_planar(&complete_bipartite(2, 7)));
        assert!(is_planar(&cycle(9)));
    }

    #[test]
    fn subdivided_k33_is_not_planar() {
        // K3,3 with every edge subdivided once.
        let mut edges = Vec::new();
        let mut next = 6;
        for a in 0..3 {
            for b in 3..6 {
                edges.push((a, next));
                edges.push((next, b));
                next += 1;
            }
        }
        let g = Graph::from_edges(next, &edges).unwrap();
        assert!(!is_planar(&g));
    }

    #[test]
    fn large_grid_is_planar() {
        let side = 200;
        let mut edges = Vec::new();
        for r in 0..side {
            for c in 0..side {
                let v = r * side + c;
                if c + 1 < side {
                    edges.push((v, v + 1));
                }
                if r + 1 < side {
                    edges.push((v, v + side));
                }
                if r + 1 < side && c + 1 < side {
                    edges.push((v, v + side + 1));
                }
            }
        }
        let g = Graph::from_edges(side * side, &edges).unwrap();
        assert!(is_planar(&g));
        assert!(!is_planar(&g.disjoint_union(&complete_bipartite(3, 3))));
        assert!(is_planar(&g.disjoint_union(&complete(4))));
    }
}
