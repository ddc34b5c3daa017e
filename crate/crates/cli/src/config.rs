//! Run configuration: which pairs to check, with which backend and settings.

use pinhowe::orthogonal::{build_pair, Family};
use pinhowe::pin::{Backend, DEFAULT_STEPS, MAX_STEPS};
use pinhowe::Error;
use serde::{Deserialize, Serialize};
use std::path::Path;

/// Ambient dimension cap for Clifford and Pin computations.
pub const MAX_CLIFFORD_DIM: usize = 16;
/// Ambient dimension cap for Howe checks.
pub const MAX_HOWE_DIM: usize = 12;
/// Random identity-component probes per side in commutator checks.
pub const DEFAULT_PROBES: usize = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Task {
    VerifyCommute,
    ClassifyCover,
    Invariants,
    HoweCheck,
    All,
}

impl Task {
    pub fn commutators(self) -> bool {
        matches!(self, Task::VerifyCommute | Task::All)
    }

    pub fn extension(self) -> bool {
        matches!(self, Task::ClassifyCover | Task::All)
    }

    pub fn invariants(self) -> bool {
        matches!(self, Task::Invariants | Task::All)
    }

    pub fn howe(self) -> bool {
        matches!(self, Task::HoweCheck | Task::All)
    }
}

/// One requested pair; omitted params mean the family's minimal size.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairRequest {
    pub family: String,
    #[serde(default)]
    pub params: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    /// `None` selects every family at its minimal size.
    #[serde(default)]
    pub pairs: Option<Vec<PairRequest>>,
    #[serde(default)]
    pub backend: Backend,
    #[serde(default = "default_steps")]
    pub steps: usize,
    #[serde(default)]
    pub seed: u64,
    #[serde(default = "default_probes")]
    pub probes: usize,
    #[serde(default)]
    pub timing: bool,
}

fn default_steps() -> usize {
    DEFAULT_STEPS
}

fn default_probes() -> usize {
    DEFAULT_PROBES
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            pairs: None,
            backend: Backend::Float,
            steps: DEFAULT_STEPS,
            seed: 0,
            probes: DEFAULT_PROBES,
            timing: false,
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum ConfigError {
    #[error("unknown family '{0}' (known: {1})")]
    UnknownFamily(String, String),
    #[error("{family} takes {expected} parameters, got {got}")]
    ParamCount { family: String, expected: usize, got: usize },
    #[error("cannot parse params '{0}': expected comma-separated non-negative integers")]
    BadParams(String),
    #[error("--params needs exactly one --family")]
    ParamsWithoutFamily,
    #[error("steps must lie in 1..={MAX_STEPS}, got {0}")]
    Steps(usize),
    #[error("{0}: {1}")]
    Cap(String, String),
    #[error("cannot read config {0}: {1}")]
    Read(String, String),
    #[error("invalid config file: {0}")]
    Toml(String),
}

/// A validated request ready to run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResolvedPair {
    pub family: Family,
    pub params: Vec<usize>,
}

impl ResolvedPair {
    pub fn id(&self) -> String {
        let p: Vec<String> = self.params.iter().map(|x| x.to_string()).collect();
        format!("{}[{}]", self.family.tag(), p.join(","))
    }
}

pub fn parse_params(text: &str) -> Result<Vec<usize>, ConfigError> {
    let text = text.trim().trim_start_matches('[').trim_end_matches(']');
    text.split(',').map(|s| s.trim().parse::<usize>().map_err(|_| ConfigError::BadParams(text.to_string()))).collect()
}

pub fn parse_family(tag: &str) -> Result<Family, ConfigError> {
    Family::from_tag(tag).ok_or_else(|| {
        let known: Vec<&str> = Family::ALL.iter().map(|f| f.tag()).collect();
        ConfigError::UnknownFamily(tag.to_string(), known.join(", "))
    })
}

impl RunConfig {
    pub fn from_toml_file(path: &Path) -> Result<Self, ConfigError> {
        let text =
            std::fs::read_to_string(path).map_err(|e| ConfigError::Read(path.display().to_string(), e.to_string()))?;
        toml::from_str(&text).map_err(|e| ConfigError::Toml(e.to_string()))
    }

    /// Checks families, parameter counts and caps. Pairs rejected by the
    /// classification side-conditions are kept; the runner reports them.
    pub fn resolve(&self, task: Task) -> Result<Vec<ResolvedPair>, ConfigError> {
        if self.steps == 0 || self.steps > MAX_STEPS {
            return Err(ConfigError::Steps(self.steps));
        }
        let requests: Vec<(Family, Vec<usize>)> = match &self.pairs {
            None => Family::ALL.iter().map(|f| (*f, f.minimal_params())).collect(),
            Some(list) => list
                .iter()
                .map(|r| {
                    let family = parse_family(&r.family)?;
                    Ok((family, r.params.clone().unwrap_or_else(|| family.minimal_params())))
                })
                .collect::<Result<_, ConfigError>>()?,
        };
        let mut out = Vec::with_capacity(requests.len());
        for (family, params) in requests {
            if params.len() != family.param_count() {
                return Err(ConfigError::ParamCount {
                    family: family.tag().to_string(),
                    expected: family.param_count(),
                    got: params.len(),
                });
            }
            let pair = ResolvedPair { family, params };
            match build_pair(family, &pair.params) {
                Ok(spec) => {
                    let dim = spec.ambient.dim();
                    if dim > MAX_CLIFFORD_DIM {
                        return Err(ConfigError::Cap(
                            pair.id(),
                            format!("ambient dimension {dim} exceeds {MAX_CLIFFORD_DIM}"),
                        ));
                    }
                    // `all` skips oversized Howe checks instead of refusing the run.
                    if task == Task::HoweCheck && dim > MAX_HOWE_DIM {
                        return Err(ConfigError::Cap(
                            pair.id(),
                            format!("ambient dimension {dim} exceeds the Howe cap {MAX_HOWE_DIM}"),
                        ));
                    }
                }
                Err(e @ Error::CapExceeded(_)) => return Err(ConfigError::Cap(pair.id(), e.to_string())),
                Err(_) => {}
            }
            out.push(pair);
        }
        out.sort_by_key(|p| p.id());
        out.dedup();
        Ok(out)
    }
}
