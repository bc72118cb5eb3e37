use serde::{Deserialize, Serialize};

use crate::bits::{binomial, for_each_combination};
use crate::caps::{OracleCaps, OracleError};

/// Universe `0..universe`, a list of families, and a budget.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SetCoverInstance {
    pub universe: usize,
    pub families: Vec<Vec<usize>>,
    pub k: usize,
}

impl SetCoverInstance {
    /// Sorts each family and checks that families are non-empty, duplicate
    /// free and inside the universe.
    pub fn new(universe: usize, families: Vec<Vec<usize>>, k: usize) -> Result<Self, OracleError> {
        let mut families = families;
        for (i, f) in families.iter_mut().enumerate() {
            f.sort_unstable();
            if f.is_empty() {
                return Err(OracleError::Invalid(format!("family {i} is empty")));
            }
            if f.windows(2).any(|w| w[0] == w[1]) {
                return Err(OracleError::Invalid(format!("family {i} lists an element twice")));
            }
            if let Some(&e) = f.last().filter(|&&e| e >= universe) {
                return Err(OracleError::Invalid(format!("family {i} contains {e}, outside the universe")));
            }
        }
        Ok(Self { universe, families, k })
    }

    /// `|U| |F| k` on the first line, then one line of element ids per family.
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {} {}\n", self.universe, self.families.len(), self.k);
        for f in &self.families {
            let line: Vec<String> = f.iter().map(usize::to_string).collect();
            s.push_str(&line.join(" "));
            s.push('\n');
        }
        s
    }

    /// Elements that no family contains.
    pub fn uncovered(&self) -> Vec<usize> {
        let mut hit = vec![false; self.universe];
        for &e in self.families.iter().flatten() {
            hit[e] = true;
        }
        (0..self.universe).filter(|&e| !hit[e]).collect()
    }
}

/// Parses the Set Cover text format (see [`SetCoverInstance::to_text`]).
/// Blank lines and `#` comments are skipped.
pub fn parse_set_cover(text: &str) -> Result<SetCoverInstance, OracleError> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines.next().ok_or_else(|| OracleError::Invalid("missing header `|U| |F| k`".into()))?;
    let nums = |l: &str| -> Result<Vec<usize>, OracleError> {
        l.split_whitespace()
            .map(|t| t.parse().map_err(|_| OracleError::Invalid(format!("not a non-negative integer: {t:?}"))))
            .collect()
    };
    let h = nums(header)?;
    let [u, f, k] = h[..] else {
        return Err(OracleError::Invalid("header must be `|U| |F| k`".into()));
    };
    let families = lines.map(nums).collect::<Result<Vec<_>, _>>()?;
    if families.len() != f {
        return Err(OracleError::Invalid(format!("header announces {f} families, found {}", families.len())));
    }
    SetCoverInstance::new(u, families, k)
}

/// Whether some subfamily of at most `k` families covers the universe.
pub fn exact_set_cover(sc: &SetCoverInstance, caps: &OracleCaps) -> Result<bool, OracleError> {
    if sc.universe > 64 {
        return Err(OracleError::CapExceeded { what: "elements", value: sc.universe as u64, cap: 64 });
    }
    let nf = sc.families.len();
    caps.check_n(nf)?;
    let full: u64 = if sc.universe == 64 { u64::MAX } else { (1u64 << sc.universe) - 1 };
    let masks: Vec<u64> = sc.families.iter().map(|f| f.iter().fold(0, |m, &e| m | (1u64 << e))).collect();
    let mut visited = 0u64;
    for s in 0..=sc.k.min(nf) {
        visited = visited.saturating_add(binomial(nf, s));
        if visited > caps.max_subsets {
            return Err(OracleError::CapExceeded { what: "subfamilies", value: visited, cap: caps.max_subsets });
        }
        let mut ok = false;
        for_each_combination(nf, s, |set| {
            let mut cover = 0u64;
            let mut it = set;
            while it != 0 {
                cover |= masks[it.trailing_zeros() as usize];
                it &= it - 1;
            }
            ok = cover == full;
            !ok
        });
        if ok {
            return Ok(true);
        }
    }
    Ok(false)
}
