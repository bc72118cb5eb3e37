//! Bitmask helpers for exhaustive searches on at most 64 vertices.

use graph_core::Graph;

use crate::SparseError;

pub(crate) fn check_n(g: &Graph) -> Result<(), SparseError> {
    if g.n() > 64 {
        return Err(SparseError::CapExceeded { what: "vertices for bitmask search", value: g.n() as u64, cap: 64 });
    }
    Ok(())
}

pub(crate) fn mask_of<'a>(it: impl IntoIterator<Item = &'a usize>) -> u64 {
    it.into_iter().fold(0, |m, &v| m | 1 << v)
}

pub(crate) fn members(mut m: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(m.count_ones() as usize);
    while m != 0 {
        out.push(m.trailing_zeros() as usize);
        m &= m - 1;
    }
    out
}

pub(crate) fn closed_neighborhoods(g: &Graph) -> Vec<u64> {
    g.vertices().map(|v| (1 << v) | mask_of(g.neighbors(v))).collect()
}

pub(crate) fn dominated(closed: &[u64], set: u64) -> u64 {
    members(set).into_iter().fold(0, |m, v| m | closed[v])
}

pub(crate) fn component_count(closed: &[u64], set: u64) -> usize {
    let mut left = set;
    let mut count = 0;
    while left != 0 {
        count += 1;
        let mut comp = left & left.wrapping_neg();
        loop {
            let grown = dominated(closed, comp) & set;
            if grown == comp {
                break;
            }
            comp = grown;
        }
        left &= !comp;
    }
    count
}

/// Calls `f` on every `k`-subset of the bits of `pool`, in increasing order of
/// the subset read as a number over the pool's positions. Stops when `f`
/// returns `false`; the return value says whether it ran to the end.
pub(crate) fn for_each_subset(pool: &[usize], k: usize, mut f: impl FnMut(u64) -> bool) -> bool {
    let n = pool.len();
    if k > n {
        return true;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if !f(idx.iter().fold(0u64, |m, &i| m | 1 << pool[i])) {
            return false;
        }
        // Advance to the next combination in lexicographic order of indices.
        let mut i = k;
        while i > 0 && idx[i - 1] == n - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return true;
        }
        idx[i - 1] += 1;
        for j in i..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subsets_are_lexicographic() {
        let mut seen = Vec::new();
        for_each_subset(&[1, 4, 6, 9], 2, |m| {
            seen.push(members(m));
            true
        });
        assert_eq!(seen, vec![vec![1, 4], vec![1, 6], vec![1, 9], vec![4, 6], vec![4, 9], vec![6, 9]]);
        let mut count = 0;
        for_each_subset(&[0, 1, 2], 0, |m| {
            assert_eq!(m, 0);
            count += 1;
            true
        });
        assert_eq!(count, 1);
    }
}
