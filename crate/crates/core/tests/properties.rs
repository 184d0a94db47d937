mod common;

use std::collections::BTreeMap;

use proptest::prelude::*;

use common::naive_equitable;
use equicolor::bounds::{q_lower_bound, row_bound, BoundTable, FamilyKind};
use equicolor::coloring::is_proper;
use equicolor::constructive::{
    build_r, chain_swap_place, is_repair_triple, repair_triples, solve_equitable_with, ConstructiveConfig, SolverState,
};
use equicolor::gen::{canonical_code, gnp, random_family_graph};
use equicolor::{decide_equitable, verify_equitable_k_coloring, FamilySpec, Graph, Partition, SolveBudget};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, 0.0f64..1.0, any::<u64>()).prop_map(|(n, p, seed)| gnp(n, p, seed))
}

fn shuffle(n: usize, seed: u64) -> Vec<usize> {
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
    perm
}

/// A graph with a proper equitable `m`-coloring of `g - xy` in which `x`
/// and `y` share a class: draw G(n, p), draw an equitable partition, drop
/// the edges inside classes, then join two vertices of one class.
fn state(max_t: usize) -> impl Strategy<Value = (Graph, Partition, usize, usize, usize)> {
    (2..=5usize, 2..=max_t, 0.1f64..0.9, any::<u64>()).prop_map(|(m, t, p, seed)| {
        let n = m * t;
        let base = gnp(n, p, seed);
        let perm = shuffle(n, seed ^ 0x9e37);
        let classes: Vec<Vec<usize>> = (0..m).map(|i| perm[i * t..(i + 1) * t].to_vec()).collect();
        let mut color = vec![0; n];
        for (i, c) in classes.iter().enumerate() {
            for &v in c {
                color[v] = i;
            }
        }
        let (x, y) = (classes[0][0], classes[0][1]);
        let mut edges: Vec<(usize, usize)> = base.edges().filter(|&(u, v)| color[u] != color[v]).collect();
        edges.push((x.min(y), x.max(y)));
        let g = Graph::from_edges(n, &edges).unwrap();
        (g, Partition::new(n, classes, None).unwrap(), m, x, y)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn exact_matches_naive(g in graph(8), k in 1usize..6) {
        let out = decide_equitable(&g, k, SolveBudget::default()).unwrap();
        prop_assert_eq!(out.verdict.is_yes(), naive_equitable(&g, k));
    }

    #[test]
    fn verdicts_survive_relabeling(g in graph(9), k in 1usize..5, seed in any::<u64>()) {
        let h = g.relabel(&shuffle(g.order(), seed)).unwrap();
        let a = decide_equitable(&g, k, SolveBudget::default()).unwrap().verdict;
        let b = decide_equitable(&h, k, SolveBudget::default()).unwrap().verdict;
        prop_assert_eq!(a.label(), b.label());
        prop_assert_eq!(canonical_code(&g).unwrap(), canonical_code(&h).unwrap());
    }

    #[test]
    fn constructive_is_consistent_with_exact(g in graph(14), m in 1usize..6) {
        let out = solve_equitable_with(&g, m, &ConstructiveConfig::default()).unwrap();
        let exact = decide_equitable(&g, m, SolveBudget::default()).unwrap();
        if let Some(p) = out.outcome.coloring() {
            prop_assert_eq!(verify_equitable_k_coloring(&g, p, m), Ok(()));
            prop_assert!(exact.verdict.is_yes());
        }
        if out.outcome.verdict.is_no() {
            prop_assert!(exact.verdict.is_no());
        }
    }

    #[test]
    fn build_r_is_a_witnessed_fixpoint((g, p, m, x, y) in state(4)) {
        let mut s = SolverState::new(&g, m, x, y, &p).unwrap();
        let first = build_r(&mut s);
        prop_assert_eq!(first[0], 0);
        prop_assert!(s.partition.class(0).contains(&y));
        for &j in &first[1..] {
            let (u, i) = s.parent[j].unwrap();
            prop_assert!(s.partition.class(j).contains(&u));
            prop_assert!(first.contains(&i));
            prop_assert!(s.partition.class(i).iter().all(|&w| !g.has_edge(u, w)));
        }
        // Classes left out have no escape vertex.
        for j in (0..m).filter(|j| !first.contains(j)) {
            for &u in s.partition.class(j) {
                prop_assert!(first.iter().all(|&i| s.partition.class(i).iter().any(|&w| g.has_edge(u, w))));
            }
        }
        prop_assert_eq!(build_r(&mut s), first);
    }

    #[test]
    fn chain_swap_keeps_sizes((g, p, m, x, y) in state(4)) {
        let mut s = SolverState::new(&g, m, x, y, &p).unwrap();
        build_r(&mut s);
        match chain_swap_place(&s) {
            Some(cs) => {
                prop_assert!(cs.partition.sizes().iter().all(|&c| c == s.t));
                prop_assert_eq!(verify_equitable_k_coloring(&g, &cs.partition, m), Ok(()));
            }
            None => {
                // Every class of R holds a neighbor of x.
                for &k in &s.r_set[1..] {
                    prop_assert!(s.partition.class(k).iter().any(|&w| g.has_edge(x, w)));
                }
            }
        }
    }

    #[test]
    fn repair_triples_give_independent_classes((g, p, m, x, y) in state(5)) {
        let mut s = SolverState::new(&g, m, x, y, &p).unwrap();
        build_r(&mut s);
        for tr in repair_triples(&s) {
            prop_assert!(is_repair_triple(&s, &tr));
            let mut class: Vec<usize> = s.partition.class(0).iter().copied().filter(|&v| v != tr.gamma).collect();
            class.extend([tr.alpha, tr.beta]);
            for (i, &a) in class.iter().enumerate() {
                for &b in &class[i + 1..] {
                    prop_assert!(!g.has_edge(a, b));
                }
            }
        }
    }

    #[test]
    fn random_members_are_deterministic(n in 3usize..40, seed in any::<u64>()) {
        let f = FamilySpec::triangle_free_planar();
        let a = random_family_graph(n, &f, seed, None);
        prop_assert_eq!(&a, &random_family_graph(n, &f, seed, None));
        prop_assert!(f.check(&a).is_ok());
        prop_assert!(a.size() <= 2 * n - 4 || n < 4);
    }

    #[test]
    fn row_bound_is_monotone(m in 4usize..9, delta in 5usize..10, t in 3usize..10, a in 0i64..200, b in 0i64..200) {
        let kind = FamilyKind::TriangleFree;
        for r in 1..=3usize.min(m - 1) {
            let with = |qr: i64, qmr: i64| {
                let mut table = BoundTable::empty(kind, delta, t);
                let mut q = BTreeMap::new();
                q.insert(r, qr);
                q.insert(m - r, qmr);
                table.q = q;
                row_bound(m, r, &table).unwrap().value
            };
            let base = with(a, b);
            prop_assert!(with(a + 1, b) >= base);
            prop_assert!(with(a, b + 1) >= base);
        }
    }

    #[test]
    fn q_is_capped_and_deterministic(m in 1usize..9, delta in 5usize..10, t in 3usize..13) {
        for kind in [FamilyKind::TriangleFree, FamilyKind::C4Free] {
            let q = q_lower_bound(kind, m, delta, t).unwrap();
            prop_assert!(q.value <= kind.cap(m, t));
            prop_assert_eq!(q, q_lower_bound(kind, m, delta, t).unwrap());
        }
    }
}

#[test]
fn proper_colorings_from_exact_are_proper() {
    let g = equicolor::graph::named::petersen();
    let out = decide_equitable(&g, 3, SolveBudget::default()).unwrap();
    assert!(is_proper(&g, out.coloring().unwrap()).unwrap());
}
