use graph_core::{Graph, VertexSet};

use crate::caps::{OracleCaps, OracleError};

const INF: u32 = u32::MAX;
const BASE: u32 = u32::MAX;
const MERGE: u32 = 1 << 31;

/// Plain Steiner (singleton groups) or group Steiner.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SteinerMode {
    Plain,
    Group,
}

#[derive(Debug, Clone)]
pub struct SteinerQuery {
    pub graph: Graph,
    pub groups: Vec<VertexSet>,
    pub mode: SteinerMode,
}

impl SteinerQuery {
    pub fn solve(&self, caps: &OracleCaps) -> Result<SteinerSolution, OracleError> {
        match self.mode {
            SteinerMode::Group => exact_group_steiner_tree(&self.graph, &self.groups, caps),
            SteinerMode::Plain => {
                let terminals: VertexSet = self.groups.iter().flat_map(|g| g.iter().copied()).collect();
                exact_steiner_tree(&self.graph, &terminals, caps)
            }
        }
    }
}

/// Order and vertex set of a minimum tree; `size == None` means no tree exists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SteinerSolution {
    pub size: Option<usize>,
    pub vertices: VertexSet,
}

impl SteinerSolution {
    fn infeasible() -> Self {
        Self { size: None, vertices: VertexSet::new() }
    }
}

/// Minimum-order subtree containing every terminal.
pub fn exact_steiner_tree(g: &Graph, terminals: &VertexSet, caps: &OracleCaps) -> Result<SteinerSolution, OracleError> {
    let groups: Vec<VertexSet> = terminals.iter().map(|&t| VertexSet::from([t])).collect();
    exact_group_steiner_tree(g, &groups, caps)
}

/// Minimum-order subtree meeting every group. Among minimum trees the
/// colexicographically smallest vertex set is returned.
pub fn exact_group_steiner_tree(
    g: &Graph,
    groups: &[VertexSet],
    caps: &OracleCaps,
) -> Result<SteinerSolution, OracleError> {
    validate(g, groups)?;
    caps.check_groups(groups.len())?;
    let lists: Vec<Vec<usize>> = groups.iter().map(VertexSet::to_vec).collect();
    let full = (1u32 << lists.len()) - 1;
    let mut allowed = vec![true; g.n()];
    let Some(opt) = group_steiner_dp(g, &lists, Some(&allowed)).size(full) else {
        return Ok(SteinerSolution::infeasible());
    };
    // Drop vertices from the top while an optimal tree survives; what is left
    // is contained in every optimal tree of the remaining graph, hence is one.
    for v in (0..g.n()).rev() {
        allowed[v] = false;
        if group_steiner_dp(g, &lists, Some(&allowed)).size(full) != Some(opt) {
            allowed[v] = true;
        }
    }
    let vertices: VertexSet = (0..g.n()).filter(|&v| allowed[v]).collect();
    debug_assert_eq!(vertices.len(), opt);
    Ok(SteinerSolution { size: Some(opt), vertices })
}

fn validate(g: &Graph, groups: &[VertexSet]) -> Result<(), OracleError> {
    if groups.is_empty() {
        return Err(OracleError::NoTerminals);
    }
    let mut owner = vec![usize::MAX; g.n()];
    for (i, grp) in groups.iter().enumerate() {
        if grp.is_empty() {
            return Err(OracleError::EmptyGroup(i));
        }
        for &v in grp.iter() {
            if v >= g.n() {
                return Err(OracleError::VertexOutOfRange { vertex: v, n: g.n() });
            }
            if owner[v] != usize::MAX {
                return Err(OracleError::OverlappingGroups(owner[v], i));
            }
            owner[v] = i;
        }
    }
    Ok(())
}

/// Full table of the terminal-subset dynamic program: for every subset `S` of
/// groups and vertex `v`, the fewest vertices of a tree containing `v` that
/// meets every group in `S`.
#[derive(Debug, Clone)]
pub struct GroupSteinerTable {
    n: usize,
    dp: Vec<u32>,
    choice: Vec<u32>,
}

/// Runs the subset dynamic program. Vertices with `allowed[v] == false` are
/// deleted from the graph. Groups are given as vertex lists and may overlap.
pub fn group_steiner_dp(g: &Graph, groups: &[Vec<usize>], allowed: Option<&[bool]>) -> GroupSteinerTable {
    let n = g.n();
    let k = groups.len();
    assert!(k < 31, "too many groups for the subset dynamic program");
    let ok = |v: usize| allowed.is_none_or(|a| a[v]);
    let masks = 1usize << k;
    let mut gm = vec![0u32; n];
    for (i, grp) in groups.iter().enumerate() {
        for &v in grp {
            gm[v] |= 1 << i;
        }
    }
    let mut dp = vec![INF; masks * n];
    let mut choice = vec![BASE; masks * n];
    let mut buckets: Vec<Vec<usize>> = vec![Vec::new(); n + 2];
    for s in 1..masks as u32 {
        let row = s as usize * n;
        for v in (0..n).filter(|&v| ok(v)) {
            if s & !gm[v] == 0 {
                dp[row + v] = 1;
                choice[row + v] = BASE;
                continue;
            }
            let low = s & s.wrapping_neg();
            let mut s1 = (s - 1) & s;
            while s1 > 0 {
                if s1 & low != 0 {
                    let a = dp[s1 as usize * n + v];
                    let b = dp[(s ^ s1) as usize * n + v];
                    if a != INF && b != INF && a + b - 1 < dp[row + v] {
                        dp[row + v] = a + b - 1;
                        choice[row + v] = MERGE | s1;
                    }
                }
                s1 = (s1 - 1) & s;
            }
        }
        // Unit-weight relaxation along edges, processed by increasing cost.
        for b in buckets.iter_mut() {
            b.clear();
        }
        for v in 0..n {
            let d = dp[row + v];
            if d != INF && (d as usize) <= n {
                buckets[d as usize].push(v);
            }
        }
        for cost in 1..=n {
            let mut i = 0;
            while i < buckets[cost].len() {
                let v = buckets[cost][i];
                i += 1;
                if dp[row + v] as usize != cost {
                    continue;
                }
                for &w in g.neighbors(v) {
                    if ok(w) && dp[row + w] > cost as u32 + 1 {
                        dp[row + w] = cost as u32 + 1;
                        choice[row + w] = v as u32;
                        if cost < n {
                            buckets[cost + 1].push(w);
                        }
                    }
                }
            }
        }
    }
    GroupSteinerTable { n, dp, choice }
}

impl GroupSteinerTable {
    /// Optimum for the group subset `mask` and the smallest root attaining it.
    pub fn best(&self, mask: u32) -> Option<(usize, usize)> {
        let row = mask as usize * self.n;
        (0..self.n).filter(|&v| self.dp[row + v] != INF).map(|v| (self.dp[row + v] as usize, v)).min()
    }

    pub fn size(&self, mask: u32) -> Option<usize> {
        self.best(mask).map(|(s, _)| s)
    }

    /// Cost of a tree through `v` meeting the groups in `mask`.
    pub fn rooted(&self, mask: u32, v: usize) -> Option<usize> {
        let d = self.dp[mask as usize * self.n + v];
        (d != INF).then_some(d as usize)
    }

    /// Canonical optimal tree for `mask`, reconstructed from back-pointers.
    pub fn tree(&self, mask: u32) -> Option<Vec<usize>> {
        let (_, root) = self.best(mask)?;
        let mut out = Vec::new();
        self.collect(mask, root, &mut out);
        out.sort_unstable();
        out.dedup();
        Some(out)
    }

    fn collect(&self, mask: u32, v: usize, out: &mut Vec<usize>) {
        let mut stack = vec![(mask, v)];
        while let Some((s, v)) = stack.pop() {
            out.push(v);
            if s == 0 {
                continue;
            }
            let c = self.choice[s as usize * self.n + v];
            if c == BASE {
                continue;
            } else if c & MERGE != 0 {
                let s1 = c & !MERGE;
                stack.push((s1, v));
                stack.push((s ^ s1, v));
            } else {
                stack.push((s, c as usize));
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use graph_core::generators::{complete, cycle, path};

    fn caps() -> OracleCaps {
        OracleCaps::default()
    }

    #[test]
    fn plain_examples() {
        let s = exact_steiner_tree(&path(3), &VertexSet::from([0, 2]), &caps()).unwrap();
        assert_eq!(s, SteinerSolution { size: Some(3), vertices: VertexSet::from([0, 1, 2]) });
        let s = exact_steiner_tree(&path(3), &VertexSet::from([1]), &caps()).unwrap();
        assert_eq!(s.size, Some(1));
        let s = exact_steiner_tree(&cycle(6), &VertexSet::from([0, 3]), &caps()).unwrap();
        assert_eq!(s.size, Some(4));
        assert_eq!(s.vertices, VertexSet::from([0, 1, 2, 3]));
    }

    #[test]
    fn group_examples() {
        let k3 = complete(3);
        let s = exact_group_steiner_tree(&k3, &[VertexSet::from([0]), VertexSet::from([1])], &caps()).unwrap();
        assert_eq!(s.size, Some(2));
        let s = exact_group_steiner_tree(&k3, &[VertexSet::from([1, 2])], &caps()).unwrap();
        assert_eq!(s, SteinerSolution { size: Some(1), vertices: VertexSet::from([1]) });
        let p4 = path(4);
        let s = exact_group_steiner_tree(&p4, &[VertexSet::from([0, 3]), VertexSet::from([1, 2])], &caps()).unwrap();
        assert_eq!(s, SteinerSolution { size: Some(2), vertices: VertexSet::from([0, 1]) });
    }

    #[test]
    fn infeasible_and_invalid() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        let s = exact_steiner_tree(&g, &VertexSet::from([0, 3]), &caps()).unwrap();
        assert_eq!(s.size, None);
        assert_eq!(exact_group_steiner_tree(&g, &[], &caps()), Err(OracleError::NoTerminals));
        assert_eq!(exact_group_steiner_tree(&g, &[VertexSet::new()], &caps()), Err(OracleError::EmptyGroup(0)));
        let tight = OracleCaps { max_groups: 1, ..caps() };
        assert!(matches!(
            exact_steiner_tree(&g, &VertexSet::from([0, 1]), &tight),
            Err(OracleError::CapExceeded { .. })
        ));
    }

    #[test]
    fn canonical_tree_is_optimal_and_connected() {
        let g = cycle(8);
        let t = group_steiner_dp(&g, &[vec![0], vec![4], vec![2]], None);
        let tree = t.tree(0b111).unwrap();
        assert_eq!(tree.len(), t.size(0b111).unwrap());
        assert!(graph_core::is_connected_slice(&g, &tree));
    }
}
