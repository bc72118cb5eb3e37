use framework::{KernelParams, KernelStats, Objective};
use reductions::RoleMap;
use serde::{Deserialize, Serialize};

use crate::{CliError, Pipeline};

pub const SCHEMA_VERSION: u32 = 1;

/// An exact optimum, or the fact that none fits the budget.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Opt {
    Value(usize),
    AboveBudget,
}

impl Opt {
    pub fn from_min(min: Option<usize>) -> Self {
        min.map_or(Opt::AboveBudget, Opt::Value)
    }

    pub fn value(self) -> Option<usize> {
        match self {
            Opt::Value(v) => Some(v),
            Opt::AboveBudget => None,
        }
    }

    /// `"3"`, or `">k"` when above the budget.
    pub fn cell(self) -> String {
        match self {
            Opt::Value(v) => v.to_string(),
            Opt::AboveBudget => ">k".into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputStats {
    pub n: usize,
    pub m: usize,
    pub k: usize,
    pub r: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReducedStats {
    pub n: usize,
    pub m: usize,
    /// Size of the target set of the reduced instance.
    pub z: usize,
    pub k: usize,
    pub trivial_negative: bool,
    pub objective: Objective,
}

/// A size bound asserted on every run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundCheck {
    pub name: String,
    pub value: u64,
    pub bound: u64,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Verification {
    pub opt_original: Opt,
    pub opt_reduced: Opt,
    /// Value of the lifted optimal reduced solution, `min(|D|, k + 1)`.
    pub lifted_value: Option<usize>,
    pub lifted_valid: Option<bool>,
    /// `lifted_value / opt_original` when both exist.
    pub realized_ratio: Option<f64>,
    pub ratio_bound: f64,
    pub passed: bool,
    pub failures: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDiagnostics {
    pub degeneracy: usize,
    /// Weak `r`-coloring number; exact for small graphs, otherwise the value
    /// of the reversed degeneracy order.
    pub wcol: usize,
    pub wcol_exact: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SetCoverReport {
    pub universe: usize,
    pub families: usize,
    pub k: usize,
    pub k_prime: usize,
    pub offset: usize,
    pub in_class: bool,
    pub set_cover: Option<bool>,
    pub rds: Option<Opt>,
    pub agree: Option<bool>,
    pub roles: RoleMap,
    pub graph_file: Option<String>,
    pub roles_file: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub schema: u32,
    pub pipeline: Pipeline,
    pub source: String,
    pub seed: u64,
    pub input: InputStats,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub params: Option<KernelParams>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub core_size: Option<usize>,
    pub bounds: Vec<BoundCheck>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub reduced: Option<ReducedStats>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub stats: Option<KernelStats>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub verification: Option<Verification>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub diagnostics: Option<GraphDiagnostics>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub set_cover: Option<SetCoverReport>,
    /// Only present with `--timing`, so that reports stay reproducible.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub wall_time_ms: Option<u64>,
}

impl RunReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    /// The first failed bound or verification check as an error.
    pub fn check(&self) -> Result<(), CliError> {
        if let Some(b) = self.bounds.iter().find(|b| !b.holds) {
            return Err(CliError::Verification(format!("{} = {} exceeds {}", b.name, b.value, b.bound)));
        }
        if let Some(v) = self.verification.as_ref().filter(|v| !v.passed) {
            return Err(CliError::Verification(v.failures.join("; ")));
        }
        if let Some(sc) = &self.set_cover {
            if !sc.in_class {
                return Err(CliError::Verification("the reduced graph is not an exact subdivision".into()));
            }
            if sc.agree == Some(false) {
                return Err(CliError::Verification(format!(
                    "Set Cover answer {:?} differs from the domination answer {:?}",
                    sc.set_cover, sc.rds
                )));
            }
        }
        Ok(())
    }
}
