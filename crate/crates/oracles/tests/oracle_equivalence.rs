use graph_core::generators::{random_connected, random_tree};
use graph_core::{bfs_avoiding, is_connected_slice, Graph, VertexSet};
use oracles::{
    exact_group_steiner_tree, exact_min_dominator, exact_set_cover, exact_steiner_tree, is_domination_core,
    DominationQuery, OracleCaps, SetCoverInstance,
};
use proptest::prelude::*;

fn caps() -> OracleCaps {
    OracleCaps::default()
}

fn subset(n: usize, mask: u32) -> Vec<usize> {
    (0..n).filter(|&v| mask >> v & 1 == 1).collect()
}

/// Brute force: smallest connected vertex set meeting every group, ties by
/// the smallest `sum 2^v`.
fn brute_group_steiner(g: &Graph, groups: &[Vec<usize>]) -> Option<(usize, Vec<usize>)> {
    let n = g.n();
    (1u32..(1 << n))
        .filter(|&m| groups.iter().all(|grp| grp.iter().any(|&v| m >> v & 1 == 1)))
        .filter(|&m| is_connected_slice(g, &subset(n, m)))
        .min_by_key(|&m| (m.count_ones(), m))
        .map(|m| (m.count_ones() as usize, subset(n, m)))
}

fn brute_dominator(g: &Graph, targets: &[usize], r: usize, connected: bool) -> usize {
    let n = g.n();
    (0u32..(1 << n))
        .filter(|&m| {
            let d = subset(n, m);
            let dist = bfs_avoiding(g, &d, &[], Some(r));
            targets.iter().all(|&z| dist[z].is_some()) && (!connected || is_connected_slice(g, &d))
        })
        .map(u32::count_ones)
        .min()
        .unwrap() as usize
}

fn arb_small_connected() -> impl Strategy<Value = Graph> {
    (2usize..=9, 0usize..8, any::<u64>()).prop_map(|(n, extra, seed)| random_connected(n, extra, seed))
}

fn arb_groups(n: usize) -> impl Strategy<Value = Vec<Vec<usize>>> {
    proptest::collection::vec(0..4usize, n).prop_map(|labels| {
        // Label 0 means "in no group"; labels 1..=3 give up to three disjoint groups.
        let mut groups = vec![Vec::new(); 3];
        for (v, &l) in labels.iter().enumerate() {
            if l > 0 {
                groups[l - 1].push(v);
            }
        }
        groups.retain(|g| !g.is_empty());
        groups
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn group_steiner_matches_brute_force((g, groups) in arb_small_connected().prop_flat_map(|g| {
        let n = g.n();
        (Just(g), arb_groups(n))
    })) {
        prop_assume!(!groups.is_empty());
        let sets: Vec<VertexSet> = groups.iter().map(|g| g.as_slice().into()).collect();
        let got = exact_group_steiner_tree(&g, &sets, &caps()).unwrap();
        let want = brute_group_steiner(&g, &groups).unwrap();
        prop_assert_eq!(got.size, Some(want.0));
        prop_assert_eq!(got.vertices.to_vec(), want.1);
    }

    #[test]
    fn singleton_groups_equal_plain_steiner(g in arb_small_connected(), pick in any::<u32>()) {
        let n = g.n();
        let terms: VertexSet = subset(n, pick & ((1 << n) - 1)).into();
        prop_assume!(!terms.is_empty());
        let plain = exact_steiner_tree(&g, &terms, &caps()).unwrap();
        let groups: Vec<VertexSet> = terms.iter().map(|&t| VertexSet::from([t])).collect();
        let grouped = exact_group_steiner_tree(&g, &groups, &caps()).unwrap();
        prop_assert_eq!(plain, grouped.clone());
        // A tree spanning Y contains a path between its two farthest terminals.
        let t = terms.to_vec();
        let far = t.iter().map(|&a| {
            let d = bfs_avoiding(&g, &[a], &[], None);
            t.iter().map(|&b| d[b].unwrap()).max().unwrap()
        }).max().unwrap();
        prop_assert!(grouped.size.unwrap() > far);
    }

    #[test]
    fn dominators_match_brute_force(g in arb_small_connected(), r in 1usize..=2) {
        let n = g.n();
        let all: Vec<usize> = (0..n).collect();
        let q = DominationQuery::all(&g, n).radius(r);
        let free = exact_min_dominator(&q, &caps()).unwrap().unwrap();
        let conn = exact_min_dominator(&q.clone().connected(true), &caps()).unwrap().unwrap();
        prop_assert_eq!(free.len(), brute_dominator(&g, &all, r, false));
        prop_assert_eq!(conn.len(), brute_dominator(&g, &all, r, true));
        prop_assert!(free.len() <= conn.len());
        prop_assert!(conn.len() <= (2 * r + 1) * free.len());
    }

    #[test]
    fn cores_are_upward_closed(g in arb_small_connected(), zmask in any::<u32>(), extra in any::<u32>(), k in 1usize..=3) {
        let n = g.n();
        let z: VertexSet = subset(n, zmask & ((1 << n) - 1)).into();
        let sup: VertexSet = z.union(&subset(n, extra & ((1 << n) - 1)).into());
        if is_domination_core(&g, &z, k, 1, &caps()).unwrap() {
            prop_assert!(is_domination_core(&g, &sup, k, 1, &caps()).unwrap());
        }
    }
}

#[test]
fn steiner_on_trees_is_the_spanned_subtree() {
    for seed in 0..40 {
        let g = random_tree(9, seed);
        // In a tree, the minimal subtree spanning the endpoints of a path is the path.
        let d = bfs_avoiding(&g, &[0], &[], None);
        let far = (0..9).max_by_key(|&v| (d[v].unwrap(), v)).unwrap();
        let s = exact_steiner_tree(&g, &VertexSet::from([0, far]), &caps()).unwrap();
        assert_eq!(s.size, Some(d[far].unwrap() + 1));
    }
}

#[test]
fn c6_connected_domination_by_enumeration() {
    let c6 = graph_core::generators::cycle(6);
    assert_eq!(brute_dominator(&c6, &(0..6).collect::<Vec<_>>(), 1, true), 4);
    let got = exact_min_dominator(&DominationQuery::all(&c6, 6).connected(true), &caps()).unwrap().unwrap();
    assert_eq!(got.len(), 4);
    assert_eq!(brute_group_steiner(&c6, &[vec![0], vec![3]]).unwrap().0, 4);
}

/// Independent oracle: dp over subsets of the universe.
fn set_cover_dp(sc: &SetCoverInstance) -> bool {
    let full = (1usize << sc.universe) - 1;
    let mut best = vec![usize::MAX; full + 1];
    best[0] = 0;
    for mask in 0..=full {
        if best[mask] == usize::MAX {
            continue;
        }
        for f in &sc.families {
            let m = f.iter().fold(mask, |m, &e| m | (1 << e));
            best[m] = best[m].min(best[mask] + 1);
        }
    }
    best[full] <= sc.k
}

proptest! {
    #[test]
    fn set_cover_matches_subset_dp(
        universe in 0usize..=5,
        raw in proptest::collection::vec(1u32..32, 0..5),
        k in 0usize..4,
    ) {
        let families: Vec<Vec<usize>> = raw
            .iter()
            .map(|&m| (0..universe).filter(|&e| m >> e & 1 == 1).collect::<Vec<_>>())
            .filter(|f| !f.is_empty())
            .collect();
        let sc = SetCoverInstance::new(universe, families, k).unwrap();
        prop_assert_eq!(exact_set_cover(&sc, &caps()).unwrap(), set_cover_dp(&sc));
    }
}
