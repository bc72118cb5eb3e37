use std::collections::VecDeque;

use graph_core::{degeneracy, Graph, VertexSet};
use serde::{Deserialize, Serialize};

use crate::SparseError;

/// A graph with a linear order on its vertices; `order[0]` is the smallest.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderedGraph {
    pub graph: Graph,
    pub order: Vec<usize>,
    /// `pos[v]` is the index of `v` in `order`.
    pub pos: Vec<usize>,
}

impl OrderedGraph {
    pub fn new(graph: Graph, order: Vec<usize>) -> Result<Self, SparseError> {
        let n = graph.n();
        if order.len() != n {
            return Err(SparseError::InvalidInput(format!("order has {} entries for {n} vertices", order.len())));
        }
        let mut pos = vec![usize::MAX; n];
        for (i, &v) in order.iter().enumerate() {
            if v >= n || pos[v] != usize::MAX {
                return Err(SparseError::InvalidInput(format!("order is not a permutation (entry {v})")));
            }
            pos[v] = i;
        }
        Ok(Self { graph, order, pos })
    }

    /// The order `0 < 1 < ... < n-1`.
    pub fn identity(graph: Graph) -> Self {
        let n = graph.n();
        Self { graph, order: (0..n).collect(), pos: (0..n).collect() }
    }

    /// Vertices reachable from `u` within `s` steps using only vertices not
    /// smaller than `u`: exactly the `v` for which `u` is weakly
    /// `s`-reachable from `v`.
    fn reached_from(&self, u: usize, s: usize) -> Vec<usize> {
        let n = self.graph.n();
        let mut dist = vec![usize::MAX; n];
        dist[u] = 0;
        let mut queue = VecDeque::from([u]);
        let mut out = vec![u];
        while let Some(v) = queue.pop_front() {
            if dist[v] == s {
                continue;
            }
            for &w in self.graph.neighbors(v) {
                if dist[w] == usize::MAX && self.pos[w] > self.pos[u] {
                    dist[w] = dist[v] + 1;
                    out.push(w);
                    queue.push_back(w);
                }
            }
        }
        out
    }
}

/// `WReach_s[v]`: every `u` such that some path from `v` to `u` of length at
/// most `s` has `u` as its smallest vertex.
pub fn wreach(og: &OrderedGraph, v: usize, s: usize) -> Result<VertexSet, SparseError> {
    if v >= og.graph.n() {
        return Err(SparseError::InvalidInput(format!("vertex {v} is not in the graph")));
    }
    Ok((0..og.graph.n()).filter(|&u| og.pos[u] <= og.pos[v] && og.reached_from(u, s).contains(&v)).collect())
}

/// `WReach_s[v]` for every vertex at once.
pub fn wreach_all(og: &OrderedGraph, s: usize) -> Vec<VertexSet> {
    let mut out = vec![VertexSet::new(); og.graph.n()];
    for u in og.graph.vertices() {
        for v in og.reached_from(u, s) {
            out[v].insert(u);
        }
    }
    out
}

fn max_wreach(og: &OrderedGraph, s: usize) -> usize {
    wreach_all(og, s).iter().map(|w| w.len()).max().unwrap_or(0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WcolMode {
    /// Minimum over all orders; refuses graphs with more than `max_n` vertices.
    Exact { max_n: usize },
    /// The reversed degeneracy peeling order; an upper bound.
    Greedy,
}

impl Default for WcolMode {
    fn default() -> Self {
        WcolMode::Exact { max_n: 9 }
    }
}

/// The weak `s`-coloring number (or an upper bound in greedy mode) and an
/// order attaining it.
pub fn wcol(g: &Graph, s: usize, mode: WcolMode) -> Result<(usize, Vec<usize>), SparseError> {
    let (degen, mut order) = degeneracy(g);
    order.reverse();
    let greedy = OrderedGraph::new(g.clone(), order)?;
    let value = max_wreach(&greedy, s);
    match mode {
        WcolMode::Greedy => Ok((value, greedy.order)),
        WcolMode::Exact { max_n } => {
            if g.n() > max_n {
                return Err(SparseError::CapExceeded {
                    what: "vertices for exact wcol",
                    value: g.n() as u64,
                    cap: max_n as u64,
                });
            }
            let mut search = OrderSearch {
                g,
                s,
                remaining: vec![true; g.n()],
                counts: vec![0; g.n()],
                prefix: Vec::with_capacity(g.n()),
                best: value,
                best_order: greedy.order,
                // wcol_s >= wcol_1 = degeneracy + 1 for s >= 1.
                lower: if s == 0 { g.n().min(1) } else { degen + 1 },
                twin_of: twin_classes(g),
            };
            if search.best > search.lower {
                search.run(0);
            }
            Ok((search.best, search.best_order))
        }
    }
}

/// Branch and bound over orders, built from the smallest vertex up. Placing
/// `u` next makes it weakly reachable from exactly the vertices within
/// distance `s` of `u` among the vertices not yet placed, and later
/// placements never change that, so partial counts are lower bounds.
struct OrderSearch<'a> {
    g: &'a Graph,
    s: usize,
    remaining: Vec<bool>,
    counts: Vec<usize>,
    prefix: Vec<usize>,
    best: usize,
    best_order: Vec<usize>,
    lower: usize,
    twin_of: Vec<usize>,
}

/// Smallest vertex with the same open or the same closed neighbourhood.
/// Swapping two such twins is an automorphism, so the search may place each
/// class in increasing id order.
fn twin_classes(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let open: Vec<Vec<usize>> = (0..n)
        .map(|v| {
            let mut nb = g.neighbors(v).to_vec();
            nb.sort_unstable();
            nb
        })
        .collect();
    let closed: Vec<Vec<usize>> = (0..n)
        .map(|v| {
            let mut nb = open[v].clone();
            nb.push(v);
            nb.sort_unstable();
            nb
        })
        .collect();
    (0..n).map(|v| (0..=v).find(|&u| open[u] == open[v] || closed[u] == closed[v]).unwrap()).collect()
}

impl OrderSearch<'_> {
    fn run(&mut self, current_max: usize) {
        let n = self.g.n();
        if self.prefix.len() == n {
            if current_max < self.best {
                self.best = current_max;
                self.best_order = self.prefix.clone();
            }
            return;
        }
        for u in 0..n {
            if self.best <= self.lower {
                return;
            }
            // An unplaced twin with a smaller id goes first.
            if !self.remaining[u]
                || (self.twin_of[u]..u).any(|v| self.remaining[v] && self.twin_of[v] == self.twin_of[u])
            {
                continue;
            }
            let ball = self.ball(u);
            let new_max = ball.iter().map(|&v| self.counts[v] + 1).max().unwrap_or(0).max(current_max);
            if new_max >= self.best {
                continue;
            }
            for &v in &ball {
                self.counts[v] += 1;
            }
            self.remaining[u] = false;
            self.prefix.push(u);
            self.run(new_max);
            self.prefix.pop();
            self.remaining[u] = true;
            for &v in &ball {
                self.counts[v] -= 1;
            }
        }
    }

    fn ball(&self, u: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.g.n()];
        dist[u] = 0;
        let mut queue = VecDeque::from([u]);
        let mut out = vec![u];
        while let Some(v) = queue.pop_front() {
            if dist[v] == self.s {
                continue;
            }
            for &w in self.g.neighbors(v) {
                if self.remaining[w] && dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    out.push(w);
                    queue.push_back(w);
                }
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeparatorCheck {
    pub holds: bool,
    /// Paths of length at most `r` between `X` and `y` that were inspected.
    pub paths: u64,
    /// A path (from `y`) missing `WReach_r[X] ∩ WReach_r[y]`, if any.
    pub counterexample: Option<Vec<usize>>,
}

/// Checks on every simple path of length at most `r` between `y` and a vertex
/// of `x` that the path meets `WReach_r[X] ∩ WReach_r[y]`.
pub fn wcol_separator_check(
    og: &OrderedGraph,
    x: &VertexSet,
    y: usize,
    r: usize,
) -> Result<SeparatorCheck, SparseError> {
    let n = og.graph.n();
    if y >= n || x.max_id().is_some_and(|v| v >= n) {
        return Err(SparseError::InvalidInput("vertex out of range".into()));
    }
    let all = wreach_all(og, r);
    let from_x: VertexSet = x.iter().flat_map(|&v| all[v].iter().copied()).collect();
    let common: Vec<bool> = (0..n).map(|v| from_x.contains(&v) && all[y].contains(&v)).collect();
    let mut check = SeparatorCheck { holds: true, paths: 0, counterexample: None };
    let mut path = vec![y];
    let mut on_path = vec![false; n];
    on_path[y] = true;
    walk(og, x, r, &common, &mut path, &mut on_path, &mut check);
    Ok(check)
}

fn walk(
    og: &OrderedGraph,
    x: &VertexSet,
    r: usize,
    common: &[bool],
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    check: &mut SeparatorCheck,
) {
    let last = *path.last().expect("non-empty");
    if x.contains(&last) {
        check.paths += 1;
        if !path.iter().any(|&v| common[v]) && check.counterexample.is_none() {
            check.holds = false;
            check.counterexample = Some(path.clone());
        }
    }
    if path.len() > r {
        return;
    }
    for &w in og.graph.neighbors(last) {
        if !on_path[w] {
            on_path[w] = true;
            path.push(w);
            walk(og, x, r, common, path, on_path, check);
            path.pop();
            on_path[w] = false;
        }
    }
}
