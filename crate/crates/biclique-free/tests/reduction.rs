use biclique_free::{
    class_bound, compute_core, core_size_bound, psaks_kdd, reduce_core_once, BicliqueError, CoreComputation, Verdict,
};
use framework::{core_partition, lift_solution, AnnotatedInstance, CdsKernelConfig};
use graph_core::generators::{grid_apex, path, random_connected, random_tree, star};
use graph_core::{contains_biclique, Graph, VertexSet};
use oracles::{exact_min_dominator, is_domination_core, DominationQuery, OracleCaps};
use proptest::prelude::*;

const CAPS: OracleCaps = OracleCaps { max_n: 64, max_groups: 14, max_subsets: 1 << 28 };

/// Two adjacent hubs, each with `leaves` pendant vertices. No two vertices
/// share two neighbours, so the graph is `K_{2,2}`-free.
fn double_star(leaves: usize) -> Graph {
    let mut edges = vec![(0, 1)];
    for hub in 0..2 {
        edges.extend((0..leaves).map(|i| (hub, 2 + hub * leaves + i)));
    }
    Graph::from_edges(2 + 2 * leaves, edges).unwrap()
}

/// An apex joined to every vertex of a random tree: `K_{3,3}`-free, since two
/// tree vertices share at most one tree neighbour besides the apex.
fn apex_over_tree(n: usize, seed: u64) -> Graph {
    let tree = random_tree(n - 1, seed);
    let mut edges: Vec<(usize, usize)> = tree.edges().into_iter().map(|(u, v)| (u + 1, v + 1)).collect();
    edges.extend((1..n).map(|v| (0, v)));
    Graph::from_edges(n, edges).unwrap()
}

#[test]
fn star_removal_keeps_a_core() {
    let g = star(12);
    let z = VertexSet::full(13);
    let trace = reduce_core_once(&g, &z, 1, 2).unwrap();
    assert_eq!(trace.chain[0].v, 0);
    let leaf = trace.removed.unwrap();
    assert_ne!(leaf, 0);
    let mut smaller = z.clone();
    smaller.remove(&leaf);
    assert!(is_domination_core(&g, &smaller, 1, 1, &CAPS).unwrap());
}

#[test]
fn double_star_removals_keep_a_core_for_k2() {
    let g = double_star(25);
    assert!(!contains_biclique(&g, 2));
    assert_eq!(core_size_bound(2, 2), 40);
    let mut z = VertexSet::full(g.n());
    while z.len() as u128 > core_size_bound(2, 2) {
        let trace = reduce_core_once(&g, &z, 2, 2).unwrap();
        assert!(trace.chain.len() < 2);
        z.remove(&trace.removed.unwrap());
        assert!(is_domination_core(&g, &z, 2, 1, &CAPS).unwrap());
    }
}

#[test]
fn star_core_reaches_the_size_bound() {
    let CoreComputation::Core { z, removed } = compute_core(&star(20), 1, 2).unwrap() else { panic!("star has ds 1") };
    assert_eq!(z.len(), 5);
    assert_eq!(removed.len(), 16);
    assert!(is_domination_core(&star(20), &z, 1, 1, &CAPS).unwrap());
}

#[test]
fn long_path_keeps_everything() {
    let g = path(50);
    let CoreComputation::Core { z, .. } = compute_core(&g, 3, 2).unwrap() else { panic!("within the bound") };
    assert!(is_domination_core(&g, &z, 3, 1, &CAPS).unwrap());
}

#[test]
fn rejection_means_no_small_dominating_set() {
    let g = path(8);
    assert_eq!(compute_core(&g, 1, 2).unwrap(), CoreComputation::Reject);
    assert!(exact_min_dominator(&DominationQuery::all(&g, 1), &CAPS).unwrap().is_none());

    let out = psaks_kdd(&g, 1, 1.0, 2, &CdsKernelConfig::default()).unwrap();
    assert!(out.trivial_negative);
}

#[test]
fn biclique_is_reported() {
    // K_{2,2} plus pendant vertices so the core is above the bound for d = 2, k = 1.
    let g = Graph::from_edges(7, [(0, 2), (0, 3), (1, 2), (1, 3), (0, 4), (0, 5), (0, 6)]).unwrap();
    let err = psaks_kdd(&g, 1, 1.0, 2, &CdsKernelConfig::default()).unwrap_err();
    assert!(matches!(err, BicliqueError::Framework(_)));
}

#[test]
fn grid_apex_kernel_ratio() {
    let g = grid_apex(2, 4);
    assert!(!contains_biclique(&g, 3));
    let opt = exact_min_dominator(&DominationQuery::all(&g, g.n()).connected(true), &CAPS).unwrap().unwrap().len();
    let out = psaks_kdd(&g, 3, 1.0, 3, &CdsKernelConfig::default()).unwrap();
    let reduced = &out.reduced.graph;
    let d = exact_min_dominator(&DominationQuery::all(reduced, reduced.n()).connected(true), &CAPS).unwrap().unwrap();
    let lifted = lift_solution(&AnnotatedInstance::plain(g.clone(), 3), &out, &d);
    assert!(lifted.valid);
    assert!(lifted.value.unwrap() <= 2 * opt);
}

#[test]
fn tree_kernel_contains_the_core() {
    let g = random_tree(20, 7);
    let opt = exact_min_dominator(&DominationQuery::all(&g, g.n()).connected(true), &CAPS).unwrap().unwrap().len();
    let out = psaks_kdd(&g, opt, 1.0, 2, &CdsKernelConfig::default()).unwrap();
    assert!(!out.trivial_negative);
    assert!(out.reduced.graph.n() > 0);
    let CoreComputation::Core { z, .. } = compute_core(&g, opt, 2).unwrap() else { panic!("feasible") };
    let kept: VertexSet = out.kept_map.iter().copied().collect();
    assert!(z.is_subset(&kept));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn removals_above_the_bound_keep_a_core(n in 8usize..=22, seed in any::<u64>(), d in 2usize..=3) {
        let g = if d == 2 { star(n - 1) } else { apex_over_tree(n, seed) };
        prop_assert!(!contains_biclique(&g, d));
        let mut z = VertexSet::full(n);
        while z.len() as u128 > core_size_bound(d, 1) {
            let trace = reduce_core_once(&g, &z, 1, d).unwrap();
            prop_assert_eq!(trace.verdict, Verdict::CoreReduced);
            prop_assert!(trace.chain.len() < d);
            z.remove(&trace.removed.unwrap());
            prop_assert!(is_domination_core(&g, &z, 1, 1, &CAPS).unwrap());
        }
    }

    #[test]
    fn class_count_within_biclique_bound(n in 2usize..=20, extra in 0usize..20, seed in any::<u64>(), mask in any::<u32>()) {
        let g = random_connected(n, extra, seed);
        let z: VertexSet = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        // With Z empty there is one class and the bound reads 0.
        prop_assume!(!z.is_empty());
        for d in 1..=4 {
            if !contains_biclique(&g, d) {
                prop_assert!(core_partition(&g, &z).index() as u128 <= class_bound(d, z.len()));
            }
        }
    }

    #[test]
    fn rejection_is_sound(n in 6usize..=16, extra in 0usize..10, seed in any::<u64>(), k in 1usize..=2) {
        let g = random_connected(n, extra, seed);
        prop_assume!(!contains_biclique(&g, 3));
        if let Ok(CoreComputation::Reject) = compute_core(&g, k, 3) {
            prop_assert!(exact_min_dominator(&DominationQuery::all(&g, k), &CAPS).unwrap().is_none());
        }
    }
}
