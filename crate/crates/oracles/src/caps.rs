use thiserror::Error;

/// Work limits for the exact solvers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleCaps {
    /// Largest graph accepted by subset enumeration (at most 64).
    pub max_n: usize,
    /// Largest number of groups in one Steiner dynamic program.
    pub max_groups: usize,
    /// Largest number of candidate subsets one call may inspect.
    pub max_subsets: u64,
}

impl Default for OracleCaps {
    fn default() -> Self {
        Self { max_n: 30, max_groups: 14, max_subsets: 1 << 28 }
    }
}

impl OracleCaps {
    pub(crate) fn check_n(&self, n: usize) -> Result<(), OracleError> {
        let cap = self.max_n.min(64);
        if n > cap {
            return Err(OracleError::CapExceeded { what: "vertices", value: n as u64, cap: cap as u64 });
        }
        Ok(())
    }

    pub(crate) fn check_groups(&self, g: usize) -> Result<(), OracleError> {
        if g > self.max_groups {
            return Err(OracleError::CapExceeded { what: "groups", value: g as u64, cap: self.max_groups as u64 });
        }
        Ok(())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("at least one terminal or group is required")]
    NoTerminals,
    #[error("group {0} is empty")]
    EmptyGroup(usize),
    #[error("groups {0} and {1} overlap")]
    OverlappingGroups(usize, usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("oracle cap exceeded: {value} {what} > {cap}")]
    CapExceeded { what: &'static str, value: u64, cap: u64 },
    #[error("invalid instance: {0}")]
    Invalid(String),
}
