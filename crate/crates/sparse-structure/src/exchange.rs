use graph_core::{Graph, VertexSet};
use serde::{Deserialize, Serialize};

use crate::bits::{check_n, closed_neighborhoods, component_count, dominated, for_each_subset, mask_of, members};
use crate::SparseError;

/// One applied exchange: `removed` left the dominator and `added` joined it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Exchange {
    pub removed: VertexSet,
    pub added: VertexSet,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExchangeOutcome {
    pub set: VertexSet,
    pub steps: Vec<Exchange>,
}

struct Search<'a> {
    closed: &'a [u64],
    z: u64,
    c: usize,
    n: usize,
    checks: u64,
    max_checks: u64,
}

impl Search<'_> {
    /// First exchange `(A, B)` with `|B| < |A| <= c`, `A ⊆ x`, `B` outside `x`,
    /// such that the result still dominates `z` and has no more components.
    /// Adding a vertex of `x` back through `B` never helps, so `B` avoids `x`.
    fn find(&mut self, x: u64) -> Result<Option<(u64, u64)>, SparseError> {
        let comps = component_count(self.closed, x);
        let inside = members(x);
        let outside: Vec<usize> = (0..self.n).filter(|&v| x >> v & 1 == 0).collect();
        for a_size in 1..=self.c.min(inside.len()) {
            let mut found = None;
            let mut err = None;
            for_each_subset(&inside, a_size, |a| {
                let rest = x & !a;
                let missing = self.z & !dominated(self.closed, rest);
                for b_size in 0..a_size {
                    let done = !for_each_subset(&outside, b_size, |b| {
                        self.checks += 1;
                        if self.checks > self.max_checks {
                            err = Some(SparseError::CapExceeded {
                                what: "exchange candidates",
                                value: self.checks,
                                cap: self.max_checks,
                            });
                            return false;
                        }
                        let new = rest | b;
                        if missing & !dominated(self.closed, b) == 0 && component_count(self.closed, new) <= comps {
                            found = Some((a, b));
                            return false;
                        }
                        true
                    });
                    if done {
                        return false;
                    }
                }
                true
            });
            if let Some(e) = err {
                return Err(e);
            }
            if found.is_some() {
                return Ok(found);
            }
        }
        Ok(None)
    }
}

const DEFAULT_MAX_CHECKS: u64 = 200_000_000;

/// The first exchange of size at most `c` for the `z`-dominator `x` (see
/// [`exchange_improve`] for the order), if any.
pub fn find_exchange(g: &Graph, z: &VertexSet, x: &VertexSet, c: usize) -> Result<Option<Exchange>, SparseError> {
    check_n(g)?;
    if z.iter().chain(x.iter()).any(|&v| v >= g.n()) {
        return Err(SparseError::InvalidInput("vertex out of range".into()));
    }
    let closed = closed_neighborhoods(g);
    let mut search =
        Search { closed: &closed, z: mask_of(z.iter()), c, n: g.n(), checks: 0, max_checks: DEFAULT_MAX_CHECKS };
    Ok(search
        .find(mask_of(x.iter()))?
        .map(|(a, b)| Exchange { removed: members(a).into_iter().collect(), added: members(b).into_iter().collect() }))
}

/// Applies improving exchanges until none is left.
///
/// Exchanges are searched by increasing `|A|`, then lexicographically in `A`,
/// then by increasing `|B|` and lexicographically in `B`; the first one found
/// is applied. Every step removes at least one vertex and keeps `z` dominated
/// without increasing the number of components.
pub fn exchange_improve(g: &Graph, z: &VertexSet, x: &VertexSet, c: usize) -> Result<ExchangeOutcome, SparseError> {
    check_n(g)?;
    if c == 0 {
        return Err(SparseError::InvalidInput("exchange size c must be at least 1".into()));
    }
    if z.iter().chain(x.iter()).any(|&v| v >= g.n()) {
        return Err(SparseError::InvalidInput("vertex out of range".into()));
    }
    let closed = closed_neighborhoods(g);
    let zm = mask_of(z.iter());
    let mut xm = mask_of(x.iter());
    if zm & !dominated(&closed, xm) != 0 {
        return Err(SparseError::InvalidInput("the start set does not dominate the targets".into()));
    }
    let mut search = Search { closed: &closed, z: zm, c, n: g.n(), checks: 0, max_checks: DEFAULT_MAX_CHECKS };
    let mut steps = Vec::new();
    while let Some((a, b)) = search.find(xm)? {
        xm = (xm & !a) | b;
        steps.push(Exchange { removed: members(a).into_iter().collect(), added: members(b).into_iter().collect() });
    }
    Ok(ExchangeOutcome { set: members(xm).into_iter().collect(), steps })
}

/// A set of at most `k_cap` vertices that dominates `z`, does not dominate the
/// graph, and admits no exchange of size at most `c`, if one exists.
pub fn exchange_core_violation(
    g: &Graph,
    z: &VertexSet,
    c: usize,
    k_cap: usize,
) -> Result<Option<VertexSet>, SparseError> {
    check_n(g)?;
    if z.iter().any(|&v| v >= g.n()) {
        return Err(SparseError::InvalidInput("vertex out of range".into()));
    }
    let n = g.n();
    let closed = closed_neighborhoods(g);
    let zm = mask_of(z.iter());
    let all: u64 = if n == 64 { u64::MAX } else { (1 << n) - 1 };
    let everyone: Vec<usize> = (0..n).collect();
    let mut search = Search { closed: &closed, z: zm, c, n, checks: 0, max_checks: DEFAULT_MAX_CHECKS };
    for size in 0..=k_cap.min(n) {
        let mut witness = None;
        let mut err = None;
        for_each_subset(&everyone, size, |x| {
            let dom = dominated(&closed, x);
            if zm & !dom != 0 || dom == all {
                return true;
            }
            match search.find(x) {
                Ok(Some(_)) => true,
                Ok(None) => {
                    witness = Some(x);
                    false
                }
                Err(e) => {
                    err = Some(e);
                    false
                }
            }
        });
        if let Some(e) = err {
            return Err(e);
        }
        if let Some(x) = witness {
            return Ok(Some(members(x).into_iter().collect()));
        }
    }
    Ok(None)
}

/// Whether every `z`-dominator of at most `k_cap` vertices either dominates
/// the graph or admits an exchange of size at most `c`. The quantifier is
/// truncated at `k_cap`; larger dominators are not examined.
pub fn is_exchange_core(g: &Graph, z: &VertexSet, c: usize, k_cap: usize) -> Result<bool, SparseError> {
    exchange_core_violation(g, z, c, k_cap).map(|w| w.is_none())
}
