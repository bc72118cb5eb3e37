use std::collections::BTreeSet;
use std::ops::{Deref, DerefMut};

use serde::{Deserialize, Serialize};

/// An ordered set of vertex ids.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(BTreeSet<usize>);

impl VertexSet {
    pub fn new() -> Self {
        Self(BTreeSet::new())
    }

    /// All ids `0..n`.
    pub fn full(n: usize) -> Self {
        (0..n).collect()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.0.iter().copied().collect()
    }

    /// Membership vector of length `n`. Ids `>= n` are ignored.
    pub fn mask(&self, n: usize) -> Vec<bool> {
        let mut m = vec![false; n];
        for &v in self.0.iter().filter(|&&v| v < n) {
            m[v] = true;
        }
        m
    }

    pub fn max_id(&self) -> Option<usize> {
        self.0.iter().next_back().copied()
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.0.union(&other.0).copied().collect()
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        self.0.difference(&other.0).copied().collect()
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        self.0.intersection(&other.0).copied().collect()
    }

    /// Translates every id through `map`, e.g. reduced ids back to original ids.
    pub fn map_through(&self, map: &[usize]) -> VertexSet {
        self.0.iter().map(|&v| map[v]).collect()
    }
}

impl Deref for VertexSet {
    type Target = BTreeSet<usize>;
    fn deref(&self) -> &Self::Target {
        &self.0
    }
}

impl DerefMut for VertexSet {
    fn deref_mut(&mut self) -> &mut Self::Target {
        &mut self.0
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Self(iter.into_iter().collect())
    }
}

impl<'a> FromIterator<&'a usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = &'a usize>>(iter: I) -> Self {
        Self(iter.into_iter().copied().collect())
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(v: Vec<usize>) -> Self {
        v.into_iter().collect()
    }
}

impl From<&[usize]> for VertexSet {
    fn from(v: &[usize]) -> Self {
        v.iter().collect()
    }
}

impl<const N: usize> From<[usize; N]> for VertexSet {
    fn from(v: [usize; N]) -> Self {
        v.into_iter().collect()
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = std::collections::btree_set::IntoIter<usize>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.into_iter()
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = &'a usize;
    type IntoIter = std::collections::btree_set::Iter<'a, usize>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}
