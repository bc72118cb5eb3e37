use framework::{
    connect_dominator, covering_family, ds_bikernel, lift_solution, lossy_cds_kernel, AnnotatedInstance,
    BruteForceCore, CdsKernelConfig, CoreOutcome, CoreProvider, WholeGraphCore,
};
use graph_core::generators::random_connected;
use graph_core::{bfs_avoiding, components, is_connected, Graph, VertexSet};
use oracles::{exact_min_dominator, DominationQuery, OracleCaps};
use proptest::prelude::*;

/// A connected vertex set grown by BFS from `start`, keeping each reached
/// vertex with the decision from `keep`.
fn connected_subset(g: &Graph, start: usize, keep: &[bool]) -> VertexSet {
    let mut set = VertexSet::from([start]);
    let mut frontier = vec![start];
    while let Some(u) = frontier.pop() {
        for &w in g.neighbors(u) {
            if keep[w] && set.insert(w) {
                frontier.push(w);
            }
        }
    }
    set
}

/// Adds, for every vertex not yet within distance `r`, that vertex itself.
fn complete_to_dominator(g: &Graph, mut d: VertexSet, r: usize) -> VertexSet {
    for v in g.vertices() {
        let near = bfs_avoiding(g, &[v], &[], Some(r));
        if !d.iter().any(|&u| near[u].is_some()) {
            d.insert(v);
        }
    }
    d
}

/// Replaces vertex `i` of `base` by `mult[i]` pairwise non-adjacent copies.
fn blow_up(base: &Graph, mult: &[usize]) -> Graph {
    let mut first = Vec::with_capacity(mult.len());
    let mut n = 0;
    for &m in mult {
        first.push(n);
        n += m;
    }
    let mut edges = Vec::new();
    for (u, v) in base.edges() {
        for a in first[u]..first[u] + mult[u] {
            for b in first[v]..first[v] + mult[v] {
                edges.push((a.min(b), a.max(b)));
            }
        }
    }
    edges.sort_unstable();
    Graph::from_edges(n, edges).unwrap()
}

fn min_cds(g: &Graph) -> usize {
    let q = DominationQuery::all(g, g.n()).connected(true);
    exact_min_dominator(&q, &OracleCaps::default()).unwrap().expect("connected graph").len()
}

fn check_ratio(g: &Graph, slack: usize, eps: f64, whole: bool) -> Result<(), TestCaseError> {
    let opt = min_cds(g);
    let k = opt + slack;
    let provider: &dyn CoreProvider = if whole { &WholeGraphCore } else { &BruteForceCore::default() };
    let out = lossy_cds_kernel(g, k, eps, provider, &CdsKernelConfig::default()).unwrap();
    prop_assert!(!out.trivial_negative);

    if let CoreOutcome::Core(z) = provider.provide(g, k, 1).unwrap() {
        let kept: VertexSet = out.kept_map.iter().copied().collect();
        prop_assert!(z.is_subset(&kept));
    }

    let reduced_opt = exact_min_dominator(
        &DominationQuery::all(&out.reduced.graph, out.reduced.graph.n()).connected(true),
        &OracleCaps::default(),
    )
    .unwrap()
    .expect("reduced graph is connected");
    let original = AnnotatedInstance::plain(g.clone(), k);
    let lifted = lift_solution(&original, &out, &reduced_opt);
    prop_assert!(lifted.valid);
    let value = lifted.value.unwrap() as f64;
    prop_assert!(value <= (1.0 + eps) * opt as f64, "value {} opt {} eps {}", value, opt, eps);
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn covering_family_meets_all_bounds(
        n in 1usize..=60,
        extra in 0usize..40,
        seed in any::<u64>(),
        keep in proptest::collection::vec(any::<bool>(), 60),
        t in 1usize..=5,
    ) {
        let g = random_connected(n, extra, seed);
        let d = connected_subset(&g, 0, &keep);
        let f = covering_family(&g, &d, t).unwrap();
        let mut union = VertexSet::new();
        for p in &f.parts {
            prop_assert!(p.len() <= 2 * t);
            prop_assert!(is_connected(&g, p));
            union.extend(p.iter().copied());
        }
        prop_assert_eq!(&union, &d);
        // |F| <= |D|/t + 1 and sum <= (1 + 1/t)|D| + 1, multiplied through by t.
        prop_assert!(f.parts.len() * t <= d.len() + t);
        prop_assert!(f.total_size() * t <= (t + 1) * d.len() + t);
    }

    #[test]
    fn connector_connects_within_budget(
        n in 2usize..=40,
        extra in 0usize..30,
        seed in any::<u64>(),
        pick in proptest::collection::vec(proptest::bool::weighted(0.15), 40),
        r in 1usize..=2,
    ) {
        let g = random_connected(n, extra, seed);
        let start: VertexSet = (0..n).filter(|&v| pick[v]).collect();
        let d = complete_to_dominator(&g, start, r);
        let p = components(&g, &d.to_vec()).len();
        let c = connect_dominator(&g, &VertexSet::full(n), &d, r).unwrap();
        prop_assert!(is_connected(&g, &d.union(&c.added)));
        prop_assert!(c.added.len() <= 2 * r * p);
        prop_assert_eq!(c.initial_components, p);
        let mut last = p;
        for &after in &c.rounds {
            prop_assert!(after < last);
            last = after;
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn lifted_optimum_is_within_one_plus_eps(
        n in 2usize..=10,
        extra in 0usize..8,
        seed in any::<u64>(),
        slack in 0usize..=1,
        eps_idx in 0usize..3,
        whole in any::<bool>(),
    ) {
        let eps = [0.5, 1.0, 2.0][eps_idx];
        let g = random_connected(n, extra, seed);
        check_ratio(&g, slack, eps, whole)?;
    }

    #[test]
    fn lifted_optimum_on_twin_blowups(
        n in 2usize..=6,
        extra in 0usize..5,
        seed in any::<u64>(),
        mult in proptest::collection::vec(1usize..=3, 6),
        slack in 0usize..=1,
        eps_idx in 0usize..3,
    ) {
        let eps = [0.5, 1.0, 2.0][eps_idx];
        let g = blow_up(&random_connected(n, extra, seed), &mult[..n]);
        check_ratio(&g, slack, eps, false)?;
    }

    #[test]
    fn bikernel_preserves_small_dominating_sets(
        n in 1usize..=9,
        extra in 0usize..8,
        seed in any::<u64>(),
        k in 1usize..=3,
    ) {
        let g = random_connected(n, extra, seed);
        let caps = OracleCaps::default();
        let provider = BruteForceCore { caps, connected: false };
        let z = match provider.provide(&g, k, 1).unwrap() {
            CoreOutcome::Core(z) => z,
            CoreOutcome::Reject => VertexSet::full(n),
        };
        let out = ds_bikernel(&g, &z, k).unwrap();
        let before = exact_min_dominator(&DominationQuery::all(&g, k), &caps).unwrap().is_some();
        let reduced = &out.reduced;
        let q = DominationQuery::all(&reduced.graph, k).targets(reduced.z.clone());
        let after = exact_min_dominator(&q, &caps).unwrap().is_some();
        prop_assert_eq!(before, after);
    }
}
