use std::collections::HashMap;

use oracles::{exact_min_dominator, exact_set_cover, DominationQuery, OracleCaps, SetCoverInstance};
use serde::{Deserialize, Serialize};

use crate::gadget::{reduce_to_rds, BUDGET_OFFSET};
use crate::recognize::membership_check_hp;
use crate::ReductionError;

/// Both sides of the reduction on one instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquivalenceRow {
    pub instance: SetCoverInstance,
    pub r: usize,
    pub set_cover: bool,
    pub k_prime: usize,
    /// Smallest `r`-dominating set of the output, when it has at most `k'`
    /// vertices.
    pub rds_min: Option<usize>,
    /// The output passed the exact `r`-subdivision check.
    pub in_class: bool,
}

impl EquivalenceRow {
    pub fn agree(&self) -> bool {
        self.set_cover == self.rds_min.is_some()
    }
}

/// Oracle caps large enough for every output of the tiny sweep.
fn sweep_caps(caps: &OracleCaps) -> OracleCaps {
    OracleCaps { max_n: 64, ..*caps }
}

/// Reduces `sc` and compares `exact_set_cover(sc)` with `r`-DS `<= k'`.
pub fn check_instance(sc: &SetCoverInstance, r: usize, caps: &OracleCaps) -> Result<EquivalenceRow, ReductionError> {
    let red = reduce_to_rds(sc, r)?;
    let q = DominationQuery::all(&red.graph, red.roles.k_prime).radius(r);
    let rds_min = exact_min_dominator(&q, &sweep_caps(caps))?.map(|d| d.len());
    Ok(EquivalenceRow {
        instance: sc.clone(),
        r,
        set_cover: exact_set_cover(sc, caps)?,
        k_prime: red.roles.k_prime,
        rds_min,
        in_class: membership_check_hp(&red.graph, r),
    })
}

/// Every instance with universe size at most `max_universe`, at most
/// `max_families` distinct non-empty families and budget at most `max_k`.
/// Ordered by universe size, family count, families (as bit masks, lexicographically), then `k`.
pub fn all_instances(max_universe: usize, max_families: usize, max_k: usize) -> Vec<SetCoverInstance> {
    let mut out = Vec::new();
    for u in 0..=max_universe {
        let subsets: Vec<u32> = (1..1u32 << u).collect();
        for f in 0..=max_families.min(subsets.len()) {
            let mut pick: Vec<usize> = (0..f).collect();
            loop {
                let families: Vec<Vec<usize>> =
                    pick.iter().map(|&i| (0..u).filter(|&e| subsets[i] >> e & 1 == 1).collect()).collect();
                for k in 0..=max_k {
                    out.push(SetCoverInstance::new(u, families.clone(), k).expect("families are valid"));
                }
                if !next_combination(&mut pick, subsets.len()) {
                    break;
                }
            }
        }
    }
    out
}

fn next_combination(pick: &mut [usize], n: usize) -> bool {
    let f = pick.len();
    let Some(i) = (0..f).rev().find(|&i| pick[i] < n - f + i) else {
        return false;
    };
    pick[i] += 1;
    for j in i + 1..f {
        pick[j] = pick[j - 1] + 1;
    }
    true
}

/// Aggregate of an [`equivalence_sweep`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepSummary {
    pub checked: usize,
    /// Rows whose two sides disagree, in sweep order.
    pub mismatches: Vec<EquivalenceRow>,
    pub outside_class: usize,
    /// `(r, checked, mismatches)` per radius.
    pub per_radius: Vec<(usize, usize, usize)>,
}

/// Runs [`check_instance`] on every instance of [`all_instances`] for every
/// radius in `radii`.
///
/// Outputs without padding do not depend on `k`, so one minimum dominating
/// set search per family list and radius serves every budget.
pub fn equivalence_sweep(
    max_universe: usize,
    max_families: usize,
    max_k: usize,
    radii: &[usize],
    caps: &OracleCaps,
) -> Result<SweepSummary, ReductionError> {
    let instances = all_instances(max_universe, max_families, max_k);
    let big = sweep_caps(caps);
    let mut summary = SweepSummary { checked: 0, mismatches: Vec::new(), outside_class: 0, per_radius: Vec::new() };
    for &r in radii {
        // (universe size, families) -> (set cover optimum, r-DS answer).
        type Key = (usize, Vec<Vec<usize>>);
        let mut cache: HashMap<Key, (Option<usize>, bool)> = HashMap::new();
        let (mut checked, mut bad) = (0, 0);
        for sc in &instances {
            let row = if sc.uncovered().is_empty() {
                let key = (sc.universe, sc.families.clone());
                let (min, in_class) = match cache.get(&key) {
                    Some(&hit) => hit,
                    None => {
                        let red = reduce_to_rds(sc, r)?;
                        let q = DominationQuery::all(&red.graph, max_k + BUDGET_OFFSET).radius(r);
                        let min = exact_min_dominator(&q, &big)?.map(|d| d.len());
                        let hit = (min, membership_check_hp(&red.graph, r));
                        cache.insert(key, hit);
                        hit
                    }
                };
                let k_prime = sc.k + BUDGET_OFFSET;
                EquivalenceRow {
                    instance: sc.clone(),
                    r,
                    set_cover: exact_set_cover(sc, caps)?,
                    k_prime,
                    rds_min: min.filter(|&s| s <= k_prime),
                    in_class,
                }
            } else {
                check_instance(sc, r, caps)?
            };
            checked += 1;
            summary.outside_class += usize::from(!row.in_class);
            if !row.agree() {
                bad += 1;
                summary.mismatches.push(row);
            }
        }
        summary.checked += checked;
        summary.per_radius.push((r, checked, bad));
    }
    Ok(summary)
}
