use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use graph_core::generators as gen;
use graph_core::{parse_edge_list, Graph, DEFAULT_MAX_VERTICES};
use oracles::{parse_set_cover, SetCoverInstance};
use serde::{Deserialize, Serialize};

use crate::CliError;

/// A named generator with its integer arguments, written `name:a,b`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GenSpec {
    pub name: String,
    pub args: Vec<usize>,
}

/// Generator names with their argument lists.
pub const GENERATORS: &[(&str, &str)] = &[
    ("path", "n"),
    ("cycle", "n"),
    ("star", "leaves"),
    ("complete", "n"),
    ("grid", "rows,cols"),
    ("grid_apex", "k,m"),
    ("tree", "n"),
    ("degenerate", "n,d"),
    ("connected", "n,extra"),
    ("setcover", "universe,families"),
];

impl FromStr for GenSpec {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        let (name, rest) = s.split_once(':').unwrap_or((s, ""));
        let Some(&(_, shape)) = GENERATORS.iter().find(|(n, _)| *n == name) else {
            let known: Vec<&str> = GENERATORS.iter().map(|(n, _)| *n).collect();
            return Err(CliError::Invalid(format!("unknown generator {name:?}; known: {}", known.join(", "))));
        };
        let args = rest
            .split(',')
            .filter(|a| !a.is_empty())
            .map(|a| a.trim().parse::<usize>().map_err(|_| CliError::Invalid(format!("bad generator argument {a:?}"))))
            .collect::<Result<Vec<_>, _>>()?;
        let want = shape.split(',').count();
        if args.len() != want {
            return Err(CliError::Invalid(format!("generator {name} takes {want} argument(s): {name}:{shape}")));
        }
        Ok(GenSpec { name: name.to_string(), args })
    }
}

impl fmt::Display for GenSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let args: Vec<String> = self.args.iter().map(usize::to_string).collect();
        write!(f, "{}:{}", self.name, args.join(","))
    }
}

impl GenSpec {
    pub fn graph(&self, seed: u64) -> Result<Graph, CliError> {
        let a = &self.args;
        let g = match self.name.as_str() {
            "path" => gen::path(a[0]),
            "cycle" if a[0] >= 3 => gen::cycle(a[0]),
            "cycle" => return Err(CliError::Invalid("a cycle needs at least 3 vertices".into())),
            "star" => gen::star(a[0]),
            "complete" => gen::complete(a[0]),
            "grid" => gen::grid(a[0], a[1]),
            "grid_apex" => gen::grid_apex(a[0], a[1]),
            "tree" => gen::random_tree(a[0], seed),
            "degenerate" => gen::random_degenerate(a[0], a[1], seed),
            "connected" => gen::random_connected(a[0], a[1], seed),
            "setcover" => return Err(CliError::Invalid("setcover generates Set Cover instances, not graphs".into())),
            _ => unreachable!("validated by from_str"),
        };
        Ok(g)
    }

    /// A random Set Cover instance: every family a non-empty random subset.
    pub fn set_cover(&self, seed: u64, k: usize) -> Result<SetCoverInstance, CliError> {
        if self.name != "setcover" {
            return Err(CliError::Invalid(format!("generator {} does not produce Set Cover instances", self.name)));
        }
        let (u, f) = (self.args[0], self.args[1]);
        let inc = gen::random_bipartite_incidence(u, f, seed);
        let families = (0..f).map(|i| inc.neighbors(u + i).to_vec()).filter(|s| !s.is_empty()).collect();
        Ok(SetCoverInstance::new(u, families, k)?)
    }
}

/// Where the instance comes from.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Source {
    File(PathBuf),
    Gen(GenSpec),
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Source::File(p) => write!(f, "file:{}", p.display()),
            Source::Gen(g) => write!(f, "gen:{g}"),
        }
    }
}

impl Source {
    pub fn graph(&self, seed: u64) -> Result<Graph, CliError> {
        match self {
            Source::File(p) => Ok(parse_edge_list(&std::fs::read_to_string(p)?, DEFAULT_MAX_VERTICES)?),
            Source::Gen(g) => g.graph(seed),
        }
    }

    /// Set Cover input. `k` overrides the file's budget when given and is
    /// required for generated instances.
    pub fn set_cover(&self, seed: u64, k: Option<usize>) -> Result<SetCoverInstance, CliError> {
        match self {
            Source::File(p) => {
                let mut sc = parse_set_cover(&std::fs::read_to_string(p)?)?;
                if let Some(k) = k {
                    sc.k = k;
                }
                Ok(sc)
            }
            Source::Gen(g) => {
                g.set_cover(seed, k.ok_or_else(|| CliError::Invalid("--k is required for generated instances".into()))?)
            }
        }
    }
}
