use distance_r_kernel::*;
use framework::{AnnotatedInstance, BruteForceCore, CoreOutcome, CoreProvider, FixedCore, MarkingCaps};
use graph_core::generators::{cycle, grid_apex, path, random_connected, star};
use graph_core::{bfs_avoiding, induced_subgraph, is_connected, Graph, VertexSet};
use oracles::{
    exact_group_steiner_tree, exact_min_dominator, exact_steiner_tree, is_domination_core, DominationQuery, OracleCaps,
};
use proptest::prelude::*;

const CAPS: OracleCaps = OracleCaps { max_n: 64, max_groups: 14, max_subsets: 1 << 28 };
const PLAIN_CORE: BruteForceCore = BruteForceCore { caps: CAPS, connected: false };

fn profile_in(g: &Graph, x: &VertexSet, u: usize, r: usize) -> Vec<(usize, usize)> {
    let inside = x.mask(g.n());
    let d = bfs_avoiding(g, &[u], &inside, Some(r));
    x.iter().filter_map(|&a| d[a].map(|d| (a, d))).collect()
}

/// `G[keep]`, with `x` and a vertex list mapped to reduced ids.
fn restrict(g: &Graph, keep: &VertexSet, x: &VertexSet) -> (Graph, Vec<usize>, VertexSet) {
    let (sub, map) = induced_subgraph(g, keep).unwrap();
    let xs = x.iter().map(|v| map.binary_search(v).unwrap()).collect();
    (sub, map, xs)
}

fn opt_connected(g: &Graph, targets: &VertexSet, r: usize, budget: usize) -> Option<usize> {
    let q = DominationQuery::all(g, budget).radius(r).connected(true).targets(targets.clone());
    exact_min_dominator(&q, &CAPS).unwrap().map(|d| d.len())
}

#[test]
fn connected_core_examples() {
    // ds_2(P_9) = 2: one vertex reaches at most five.
    assert!(connected_core(&path(9), 1, 2, &PLAIN_CORE).unwrap().is_none());
    let g = cycle(10);
    let core = connected_core(&g, 2, 2, &PLAIN_CORE).unwrap().unwrap();
    assert!(is_connected(&g, &core.z));
    assert!(is_domination_core(&g, &core.z, 2, 2, &CAPS).unwrap());
    assert!(core.z.len() <= (2 * 2 + 1) * core.base.len());
}

#[test]
fn bikernel_examples() {
    let g = star(5);
    let out = one_approx_ds_bikernel(&g, 1, 1, &PLAIN_CORE).unwrap();
    // Core {4, 5}, the center's class; the leaves see nothing of the core.
    assert_eq!(out.kept_map, vec![0, 4, 5]);
    let g = cycle(10);
    for k in 1..=3 {
        let out = one_approx_ds_bikernel(&g, k, 2, &PLAIN_CORE).unwrap();
        let before = exact_min_dominator(&DominationQuery::all(&g, k).radius(2), &CAPS).unwrap().is_some();
        let after = !out.trivial_negative
            && exact_min_dominator(
                &DominationQuery::all(&out.reduced.graph, k).radius(2).targets(out.reduced.z.clone()),
                &CAPS,
            )
            .unwrap()
            .is_some();
        assert_eq!(before, after, "k = {k}");
    }
}

#[test]
fn kernel_ratio_examples() {
    let config = RKernelConfig { exact_fallback: true, oracle: CAPS, ..RKernelConfig::default() };
    // Connected optima: 8 on C_12 at r = 2, 4 on the two-row apex grid.
    for (g, r, alpha, k) in [(cycle(12), 2, 3.0, 8), (grid_apex(2, 5), 1, 2.0, 4)] {
        let params = RKernelParams::new(r, alpha).unwrap();
        let out = r_lossy_kernel(&g, k, &params, &BruteForceCore { caps: CAPS, connected: true }, &config).unwrap();
        let opt = opt_connected(&g, &VertexSet::full(g.n()), r, k).unwrap();
        let red = opt_connected(&out.reduced.graph, &out.reduced.z, r, out.reduced.graph.n()).unwrap();
        assert!(red as f64 <= alpha * opt as f64);
    }
}

#[test]
fn infeasible_instances_are_trivial_negatives() {
    let params = RKernelParams::new(1, 2.0).unwrap();
    let out = r_lossy_kernel(&path(8), 2, &params, &BruteForceCore::default(), &RKernelConfig::default()).unwrap();
    assert!(out.trivial_negative);
    let original = AnnotatedInstance::plain(path(8), 2);
    let lifted = r_lift(&original, &out, &VertexSet::from([0]));
    assert!(lifted.valid);
    assert_eq!(lifted.solution, VertexSet::full(8));
    let lifted = r_lift(&original, &out, &VertexSet::new());
    assert_eq!((lifted.valid, lifted.value), (false, None));
}

/// The figure's configuration: three vertices with profile (3, 2, 2, inf) on
/// x1..x4 and a common neighbour h of x2 and x3.
#[test]
fn dot_graph_for_a_shared_profile() {
    let (x1, x2, x3, x4, h, a) = (0, 1, 2, 3, 4, 5);
    let us = [6, 7, 8];
    let mut edges = vec![(h, x2), (h, x3), (h, a), (a, x1), (x1, x4)];
    edges.extend(us.iter().map(|&u| (u, h)));
    let g = Graph::from_edges(9, edges).unwrap();
    let x = VertexSet::from([x1, x2, x3, x4]);
    let r = 3;
    for &u in &us {
        assert_eq!(profile_in(&g, &x, u, r), vec![(x1, 3), (x2, 2), (x3, 2)]);
    }
    let dot = build_dot_graph(&g, &x, &[us.to_vec()], r).unwrap();
    assert_eq!(dot.anchors, vec![x2]);
    assert_eq!(dot.depths, vec![2 * r * 2]);
    // Copies of x2 and h plus 2r - 1 inner vertices on each of the four tree edges.
    assert_eq!(dot.graph.n(), 9 + 2 + 4 * (2 * r - 1));
    let d = bfs_avoiding(&dot.graph, &[dot.roots[0]], &[], None);
    for &u in &us {
        assert_eq!(d[u], Some(12));
    }
    // The copy hangs from its root; its other ends are the three members.
    let ends: Vec<usize> = (9..dot.graph.n()).filter(|&v| dot.graph.degree(v) == 1).collect();
    assert_eq!(ends, dot.roots);
    assert_eq!(us.iter().map(|&u| dot.graph.degree(u)).collect::<Vec<_>>(), vec![2, 2, 2]);
}

fn all_subsets(count: usize, max: usize) -> impl Iterator<Item = Vec<usize>> {
    (1u32..1 << count)
        .filter(move |m| m.count_ones() as usize <= max)
        .map(move |m| (0..count).filter(|&i| m >> i & 1 == 1).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn reduced_graph_keeps_profiles_and_group_trees(
        n in 3usize..12, extra in 0usize..6, seed in any::<u64>(), k in 1usize..3, r in 1usize..3, t in 1usize..3,
    ) {
        let g = random_connected(n, extra, seed);
        let Some(core) = connected_core(&g, k, r, &PLAIN_CORE).unwrap() else { return Ok(()) };
        let z = core.z;
        let red = build_reduced_graph(&g, &z, t, r, &MarkingCaps::default()).unwrap();
        prop_assert!(red.keep.is_superset(&z));
        let (sub, map, zs) = restrict(&g, &red.keep, &z);
        // Terminals keep their profiles.
        for &u in red.terminals.iter() {
            let local = map.binary_search(&u).unwrap();
            let mapped: Vec<(usize, usize)> =
                profile_in(&sub, &zs, local, r).into_iter().map(|(a, d)| (map[a], d)).collect();
            prop_assert_eq!(mapped, profile_in(&g, &z, u, r));
        }
        // Every class keeps a member with its profile.
        for class in &red.classes.classes {
            let found = sub.vertices().filter(|v| !zs.contains(v)).any(|v| {
                profile_in(&sub, &zs, v, r).into_iter().map(|(a, d)| (map[a], d)).collect::<Vec<_>>() == class.profile
            });
            prop_assert!(found, "class {:?} lost", class.profile);
        }
        // Group Steiner trees of at most 2t vertices survive.
        let groups = red.classes.groups();
        prop_assume!(groups.len() <= 12);
        for subset in all_subsets(groups.len(), 2 * t) {
            let in_g: Vec<VertexSet> = subset.iter().map(|&i| groups[i].iter().copied().collect()).collect();
            let full = exact_group_steiner_tree(&g, &in_g, &CAPS).unwrap().size;
            if full.is_some_and(|s| s <= 2 * t) {
                let in_sub: Vec<VertexSet> = in_g
                    .iter()
                    .map(|grp| grp.iter().filter_map(|v| map.binary_search(v).ok()).collect())
                    .collect();
                prop_assert!(in_sub.iter().all(|grp| !grp.is_empty()));
                let kept = exact_group_steiner_tree(&sub, &in_sub, &CAPS).unwrap().size;
                prop_assert_eq!(kept, full, "groups {:?}", subset);
            }
        }
    }

    #[test]
    fn kernel_ratio_with_fallback(n in 3usize..12, extra in 0usize..6, seed in any::<u64>(), k in 1usize..4, r in 1usize..3, alpha in prop::sample::select(vec![2.0, 3.0])) {
        let g = random_connected(n, extra, seed);
        let params = RKernelParams::new(r, alpha).unwrap();
        let config = RKernelConfig { exact_fallback: true, oracle: CAPS, ..RKernelConfig::default() };
        let provider = BruteForceCore { caps: CAPS, connected: true };
        let out = r_lossy_kernel(&g, k, &params, &provider, &config).unwrap();
        let opt = opt_connected(&g, &VertexSet::full(n), r, k);
        prop_assert_eq!(out.trivial_negative, opt.is_none());
        let Some(opt) = opt else { return Ok(()) };
        // The reduced optimum may exceed k; only alpha * OPT bounds it.
        let red_n = out.reduced.graph.n();
        let q = DominationQuery::all(&out.reduced.graph, red_n).radius(r).connected(true).targets(out.reduced.z.clone());
        let best = exact_min_dominator(&q, &CAPS).unwrap().unwrap();
        prop_assert!(best.len() as f64 <= alpha * opt as f64);
        let lifted = r_lift(&AnnotatedInstance::new(g.clone(), VertexSet::full(n), k, r).unwrap(), &out, &best);
        prop_assert!(lifted.valid);
        prop_assert!(lifted.value.unwrap() as f64 <= alpha * opt as f64);
    }

    /// Without the exact fallback the guarantee carries an additive
    /// `2r + 1`: at most `(1 + (2r + 1)/t) OPT + 2r + 1`.
    #[test]
    fn kernel_bound_without_fallback(n in 3usize..11, extra in 0usize..5, seed in any::<u64>(), k in 1usize..4, r in 1usize..3) {
        let g = random_connected(n, extra, seed);
        let params = RKernelParams::new(r, 3.0).unwrap();
        let provider = BruteForceCore { caps: CAPS, connected: true };
        let out = r_lossy_kernel(&g, k, &params, &provider, &RKernelConfig::default()).unwrap();
        let Some(opt) = opt_connected(&g, &VertexSet::full(n), r, k) else { return Ok(()) };
        let red = opt_connected(&out.reduced.graph, &out.reduced.z, r, out.reduced.graph.n()).unwrap();
        let t = params.t as f64;
        prop_assert!(red as f64 <= (1.0 + (2 * r + 1) as f64 / t) * opt as f64 + (2 * r + 1) as f64);
    }

    #[test]
    fn bikernel_preserves_domination(n in 2usize..12, extra in 0usize..6, seed in any::<u64>(), k in 1usize..4, r in 1usize..3) {
        let g = random_connected(n, extra, seed);
        let out = one_approx_ds_bikernel(&g, k, r, &PLAIN_CORE).unwrap();
        let before = exact_min_dominator(&DominationQuery::all(&g, k).radius(r), &CAPS).unwrap().is_some();
        let after = !out.trivial_negative
            && exact_min_dominator(
                &DominationQuery::all(&out.reduced.graph, k).radius(r).targets(out.reduced.z.clone()),
                &CAPS,
            )
            .unwrap()
            .is_some();
        prop_assert_eq!(before, after);
    }

    /// Swapping dominator vertices for vertices of the same profile keeps `X`
    /// dominated.
    #[test]
    fn same_profile_swaps_keep_domination(n in 2usize..14, extra in 0usize..8, seed in any::<u64>(), xbits in any::<u16>(), dbits in any::<u16>(), pick in any::<u64>(), r in 1usize..3) {
        let g = random_connected(n, extra, seed);
        let x: VertexSet = (0..n).filter(|&v| xbits >> v & 1 == 1).collect();
        let d: VertexSet = (0..n).filter(|&v| dbits >> v & 1 == 1).collect();
        prop_assume!(graph_core::r_dominates(&g, &d.to_vec(), x.iter(), r));
        let classes = ProfileClasses::compute(&g, &x, r).unwrap();
        let class_of = classes.class_of(n);
        let swapped: VertexSet = d
            .iter()
            .map(|&u| match class_of[u] {
                Some(c) => {
                    let m = &classes.classes[c].members;
                    m[(pick.wrapping_mul(u as u64 + 1) % m.len() as u64) as usize]
                }
                None => u,
            })
            .collect();
        prop_assert!(graph_core::r_dominates(&g, &swapped.to_vec(), x.iter(), r));
    }

    /// Steiner trees between two or more class roots in the dot graph cost
    /// exactly the group Steiner tree between the classes' terminals plus the
    /// depths. (A single root is a tree on its own.)
    #[test]
    fn dot_graph_translates_steiner_trees(n in 3usize..10, extra in 0usize..5, seed in any::<u64>(), xbits in any::<u16>(), r in 1usize..3) {
        let g = random_connected(n, extra, seed);
        let x: VertexSet = (0..n).filter(|&v| xbits >> v & 1 == 1).take(3).collect();
        prop_assume!(!x.is_empty());
        let red = build_reduced_graph(&g, &x, 1, r, &MarkingCaps::default()).unwrap();
        let (sub, map, xs) = restrict(&g, &red.keep, &x);
        let class_of = red.classes.class_of(n);
        let mut lists: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
        for &u in red.terminals.iter() {
            let c = class_of[u].unwrap();
            if !red.classes.classes[c].profile.is_empty() {
                lists.entry(c).or_default().push(map.binary_search(&u).unwrap());
            }
        }
        let lists: Vec<Vec<usize>> = lists.into_values().take(4).collect();
        prop_assume!(!lists.is_empty());
        let dot = build_dot_graph(&sub, &xs, &lists, r).unwrap();
        for subset in all_subsets(lists.len(), 3).filter(|s| s.len() >= 2) {
            let groups: Vec<VertexSet> = subset.iter().map(|&i| lists[i].iter().copied().collect()).collect();
            let group = exact_group_steiner_tree(&sub, &groups, &CAPS).unwrap().size;
            let roots: VertexSet = subset.iter().map(|&i| dot.roots[i]).collect();
            let plain = exact_steiner_tree(&dot.graph, &roots, &CAPS).unwrap().size;
            let depth: usize = subset.iter().map(|&i| dot.depths[i]).sum();
            prop_assert_eq!(plain, group.map(|s| s + depth), "subset {:?}", subset);
        }
    }
}

#[test]
fn fixed_core_is_passed_through() {
    let g = cycle(6);
    let provider = FixedCore(VertexSet::full(6));
    assert_eq!(provider.provide(&g, 2, 1).unwrap(), CoreOutcome::Core(VertexSet::full(6)));
    let core = connected_core(&g, 2, 1, &provider).unwrap().unwrap();
    assert_eq!(core.z, VertexSet::full(6));
}

/// Found by `kernel_ratio_with_fallback`: the reduced optimum exceeds `k`
/// and is still within `alpha * OPT`.
#[test]
fn reduced_optimum_may_exceed_k() {
    let (n, k, r, alpha) = (11, 3, 2, 2.0);
    let g = random_connected(n, 1, 1906013400611241220);
    let params = RKernelParams::new(r, alpha).unwrap();
    let config = RKernelConfig { exact_fallback: true, oracle: CAPS, ..RKernelConfig::default() };
    let provider = BruteForceCore { caps: CAPS, connected: true };
    let out = r_lossy_kernel(&g, k, &params, &provider, &config).unwrap();
    let opt = opt_connected(&g, &VertexSet::full(n), r, k).unwrap();
    let red = opt_connected(&out.reduced.graph, &out.reduced.z, r, out.reduced.graph.n()).unwrap();
    assert_eq!((opt, red), (3, 4));
    assert!(red as f64 <= alpha * opt as f64);
}
