//! u64 bitmask helpers for graphs with at most 64 vertices.

use graph_core::{bfs_avoiding, Graph};

pub(crate) fn mask_of<'a>(vs: impl IntoIterator<Item = &'a usize>) -> u64 {
    vs.into_iter().fold(0, |m, &v| m | (1u64 << v))
}

pub(crate) fn members(mut m: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(m.count_ones() as usize);
    while m != 0 {
        out.push(m.trailing_zeros() as usize);
        m &= m - 1;
    }
    out
}

pub(crate) fn adjacency_masks(g: &Graph) -> Vec<u64> {
    g.vertices().map(|v| mask_of(g.neighbors(v))).collect()
}

/// `ball[v]` = vertices within distance `r` of `v`.
pub(crate) fn ball_masks(g: &Graph, r: usize) -> Vec<u64> {
    g.vertices()
        .map(|v| {
            let d = bfs_avoiding(g, &[v], &[], Some(r));
            d.iter().enumerate().filter(|(_, x)| x.is_some()).fold(0, |m, (w, _)| m | (1u64 << w))
        })
        .collect()
}

pub(crate) fn is_connected_mask(adj: &[u64], set: u64) -> bool {
    if set == 0 {
        return true;
    }
    let mut reach = set & set.wrapping_neg();
    loop {
        let mut next = reach;
        let mut it = reach;
        while it != 0 {
            let v = it.trailing_zeros() as usize;
            it &= it - 1;
            next |= adj[v] & set;
        }
        if next == reach {
            return reach == set;
        }
        reach = next;
    }
}

/// Next subset with the same popcount in increasing numeric order (Gosper).
pub(crate) fn next_combination(x: u64) -> u64 {
    let c = x & x.wrapping_neg();
    let r = x.wrapping_add(c);
    if r == 0 {
        return 0;
    }
    (((r ^ x) >> 2) / c) | r
}

/// Calls `f` on every `s`-subset of `0..n` in increasing numeric order until
/// it returns `false`. Returns how many subsets were visited.
pub(crate) fn for_each_combination(n: usize, s: usize, mut f: impl FnMut(u64) -> bool) -> u64 {
    if s > n {
        return 0;
    }
    if s == 0 {
        f(0);
        return 1;
    }
    let limit: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut x: u64 = if s == 64 { u64::MAX } else { (1u64 << s) - 1 };
    let mut count = 0;
    loop {
        count += 1;
        if !f(x) {
            return count;
        }
        let nx = next_combination(x);
        if nx == 0 || nx > limit || nx <= x {
            return count;
        }
        x = nx;
    }
}

pub(crate) fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc.min(u64::MAX as u128) as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn combinations_in_colex_order() {
        let mut seen = Vec::new();
        for_each_combination(4, 2, |m| {
            seen.push(m);
            true
        });
        assert_eq!(seen, vec![0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100]);
        assert_eq!(binomial(30, 4), 27405);
    }
}
