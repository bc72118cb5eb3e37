use framework::{connect_dominator, CoreOutcome, CoreProvider, FrameworkError};
use graph_core::{dominated_by, is_connected, Graph, VertexSet};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConnectedCore {
    /// Core returned by the provider.
    pub base: VertexSet,
    /// `base` plus connecting vertices; `G[z]` is connected.
    pub z: VertexSet,
    pub connector_added: usize,
}

/// A `(k, r)`-domination core `Z` with `G[Z]` connected, or `None` when `G`
/// has no distance-`r` dominating set of at most `k` vertices.
///
/// The provider's core `Y` is rejected when some vertex is farther than `2r`
/// from it: a dominator of `Y` inside `N_r[Y]` then cannot reach that vertex.
/// Otherwise `Y` is a distance-`2r` dominating set of the connected graph and
/// [`connect_dominator`] at radius `2r` joins it into `Z`. Supersets of a core
/// are cores.
pub fn connected_core(
    g: &Graph,
    k: usize,
    r: usize,
    provider: &dyn CoreProvider,
) -> Result<Option<ConnectedCore>, FrameworkError> {
    if r == 0 {
        return Err(FrameworkError::InvalidInput("radius must be at least 1".into()));
    }
    if g.n() == 0 || !is_connected(g, &VertexSet::full(g.n())) {
        return Err(FrameworkError::InvalidInput("the input graph must be connected and non-empty".into()));
    }
    let base = match provider.provide(g, k, r)? {
        CoreOutcome::Reject => return Ok(None),
        CoreOutcome::Core(y) => y,
    };
    if dominated_by(g, &base.to_vec(), 2 * r).iter().any(|&d| !d) {
        return Ok(None);
    }
    let connection = connect_dominator(g, &VertexSet::full(g.n()), &base, 2 * r)?;
    let z = base.union(&connection.added);
    Ok(Some(ConnectedCore { base, z, connector_added: connection.added.len() }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use framework::{BruteForceCore, FixedCore};
    use graph_core::generators::{path, star};

    #[test]
    fn star_core_is_joined_through_the_center() {
        // {0} alone is not a core (a single leaf dominates it), but two leaves
        // are: only the center dominates both.
        let core = connected_core(&star(5), 1, 1, &BruteForceCore::default()).unwrap().unwrap();
        assert_eq!(core.base, VertexSet::from([4, 5]));
        assert_eq!(core.z, VertexSet::from([0, 4, 5]));
        assert_eq!(core.connector_added, 1);
    }

    #[test]
    fn far_vertices_reject() {
        // {0} is within 2 of only 0..=2 on P_5 at r = 1.
        let out = connected_core(&path(5), 5, 1, &FixedCore(VertexSet::from([0]))).unwrap();
        assert!(out.is_none());
    }

    #[test]
    fn separated_core_gets_connected() {
        let g = path(9);
        let core = connected_core(&g, 9, 1, &FixedCore(VertexSet::from([1, 4, 7]))).unwrap().unwrap();
        assert!(is_connected(&g, &core.z));
        assert!(core.connector_added <= 2 * 2 * 3);
    }
}
