//! Deterministic graph generators. All randomness comes from an explicit seed.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn path(n: usize) -> Graph {
    Graph::from_edges_dedup(n, (1..n).map(|i| (i - 1, i)))
}

/// Cycle on `n >= 3` vertices.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "a simple cycle needs at least 3 vertices");
    Graph::from_edges_dedup(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// Star with center `0` and leaves `1..=leaves`.
pub fn star(leaves: usize) -> Graph {
    Graph::from_edges_dedup(leaves + 1, (1..=leaves).map(|i| (0, i)))
}

pub fn complete(n: usize) -> Graph {
    Graph::from_edges_dedup(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// `K_{a,b}` with sides `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    Graph::from_edges_dedup(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
}

/// `rows x cols` grid; vertex `(i, j)` has id `i * cols + j`.
pub fn grid(rows: usize, cols: usize) -> Graph {
    let id = |i: usize, j: usize| i * cols + j;
    let mut edges = Vec::new();
    for i in 0..rows {
        for j in 0..cols {
            if j + 1 < cols {
                edges.push((id(i, j), id(i, j + 1)));
            }
            if i + 1 < rows {
                edges.push((id(i, j), id(i + 1, j)));
            }
        }
    }
    Graph::from_edges_dedup(rows * cols, edges)
}

/// Id of grid vertex `v_{i+1, j+1}` in [`grid_apex`] (0-based row and column).
pub fn grid_apex_v(m: usize, i: usize, j: usize) -> usize {
    i * m + j
}

/// Id of apex `w_{i+1}` in [`grid_apex`] (0-based row).
pub fn grid_apex_w(k: usize, m: usize, i: usize) -> usize {
    k * m + i
}

/// A `k x m` grid plus one apex per row adjacent to the whole row.
pub fn grid_apex(k: usize, m: usize) -> Graph {
    let mut edges = grid(k, m).edges();
    for i in 0..k {
        for j in 0..m {
            edges.push((grid_apex_v(m, i, j), grid_apex_w(k, m, i)));
        }
    }
    Graph::from_edges_dedup(k * m + k, edges)
}

/// A random `d`-degenerate graph: vertex `i > 0` picks between 1 and
/// `min(i, d)` distinct earlier neighbours. Connected whenever `d >= 1`.
pub fn random_degenerate(n: usize, d: usize, seed: u64) -> Graph {
    let mut rng = rng(seed);
    let mut edges = Vec::new();
    if d > 0 {
        let mut earlier: Vec<usize> = Vec::with_capacity(n);
        for i in 0..n {
            let cap = i.min(d);
            if cap > 0 {
                let count = rng.gen_range(1..=cap);
                for &u in earlier.choose_multiple(&mut rng, count) {
                    edges.push((u, i));
                }
            }
            earlier.push(i);
        }
    }
    Graph::from_edges_dedup(n, edges)
}

/// A uniform random recursive tree.
pub fn random_tree(n: usize, seed: u64) -> Graph {
    random_degenerate(n, 1, seed)
}

/// A random tree plus `extra` random chords (duplicates are dropped).
pub fn random_connected(n: usize, extra: usize, seed: u64) -> Graph {
    let mut rng = rng(seed ^ 0x9e37_79b9_7f4a_7c15);
    let mut edges = random_tree(n, seed).edges();
    if n >= 2 {
        for _ in 0..extra {
            let u = rng.gen_range(0..n);
            let v = rng.gen_range(0..n);
            if u != v {
                edges.push((u.min(v), u.max(v)));
            }
        }
    }
    Graph::from_edges_dedup(n, edges)
}

/// Element-family incidence graph: elements `0..universe`, families
/// `universe..universe+families`, each family a non-empty random subset.
pub fn random_bipartite_incidence(universe: usize, families: usize, seed: u64) -> Graph {
    let mut rng = rng(seed);
    let mut edges = Vec::new();
    if universe > 0 {
        for f in 0..families {
            let size = rng.gen_range(1..=universe);
            let elems: Vec<usize> = (0..universe).collect();
            for &e in elems.choose_multiple(&mut rng, size) {
                edges.push((e, universe + f));
            }
        }
    }
    Graph::from_edges_dedup(universe + families, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::traversal::{degeneracy, is_connected};
    use crate::vertex_set::VertexSet;

    #[test]
    fn grid_apex_small() {
        let g = grid_apex(2, 2);
        assert_eq!(g.n(), 6);
        for (a, b) in [((0, 0), (0, 1)), ((0, 0), (1, 0)), ((0, 1), (1, 1)), ((1, 0), (1, 1))] {
            assert!(g.has_edge(grid_apex_v(2, a.0, a.1), grid_apex_v(2, b.0, b.1)));
        }
        assert!(!g.has_edge(grid_apex_v(2, 0, 0), grid_apex_v(2, 1, 1)));
        assert_eq!(g.m(), 4 + 4);
        let g = grid_apex(1, 1);
        assert_eq!((g.n(), g.m()), (2, 1));
    }

    #[test]
    fn random_degenerate_is_degenerate_and_connected() {
        for seed in 0..20 {
            let g = random_degenerate(10, 2, seed);
            assert!(degeneracy(&g).0 <= 2);
            assert!(is_connected(&g, &VertexSet::full(10)));
        }
    }

    #[test]
    fn generators_are_deterministic() {
        assert_eq!(random_connected(15, 6, 7), random_connected(15, 6, 7));
        assert_eq!(random_bipartite_incidence(4, 3, 1), random_bipartite_incidence(4, 3, 1));
    }

    #[test]
    fn incidence_families_are_nonempty() {
        let g = random_bipartite_incidence(4, 5, 11);
        assert!((4..9).all(|f| g.degree(f) >= 1));
    }
}
