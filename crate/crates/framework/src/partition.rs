use std::collections::BTreeMap;

use graph_core::{Graph, VertexSet};
use serde::{Deserialize, Serialize};

/// Vertices outside a core `Z`, grouped by their neighbourhood in `Z`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorePartition {
    pub z: VertexSet,
    /// `N(u) ∩ Z` (sorted) mapped to the vertices `u ∉ Z` with that trace.
    pub classes: BTreeMap<Vec<usize>, Vec<usize>>,
}

impl CorePartition {
    /// Number of classes, the neighbourhood complexity of `Z` witnessed here.
    pub fn index(&self) -> usize {
        self.classes.len()
    }

    /// Singletons `{z}` for `z ∈ Z` in increasing order, then one group per
    /// class in signature order. The groups partition `V(G)`.
    pub fn groups(&self) -> Vec<Vec<usize>> {
        self.z.iter().map(|&z| vec![z]).chain(self.classes.values().cloned()).collect()
    }

    /// Smallest member of every class.
    pub fn representatives(&self) -> Vec<usize> {
        self.classes.values().map(|c| c[0]).collect()
    }
}

/// Partitions `V(G) \ Z` by `N(u) ∩ Z`.
pub fn core_partition(g: &Graph, z: &VertexSet) -> CorePartition {
    let in_z = z.mask(g.n());
    let mut classes: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    for u in g.vertices().filter(|&u| !in_z[u]) {
        let sig: Vec<usize> = g.neighbors(u).iter().copied().filter(|&w| in_z[w]).collect();
        classes.entry(sig).or_default().push(u);
    }
    CorePartition { z: z.clone(), classes }
}
