//! Report records and their JSON and text renderings.

use pinhowe::pin::{Backend, CommutatorVerdict, ExtensionClass};
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt::Write as _;

/// Bumped whenever the JSON layout changes.
pub const REPORT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtensionRecord {
    pub loops: BTreeMap<String, i8>,
    pub label: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl From<ExtensionClass> for ExtensionRecord {
    fn from(c: ExtensionClass) -> Self {
        Self { loops: c.loops, label: c.label.to_string(), note: c.note }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantRecord {
    /// `dim Λ^k(E_C)^G` for `k = 0..=dim E`, from the numerical solve.
    pub degrees: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generator_setting: Option<String>,
    /// Per-degree dimensions of the subalgebra spanned by the generators.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generated: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generation_matches: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HoweRecord {
    pub spinor_dim: usize,
    pub dim_commutant: usize,
    pub dim_algebra: usize,
    pub equal: bool,
    pub reverse_equal: bool,
    pub mult_free: bool,
    pub isotypic_count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Match,
    Mismatch,
    Unchecked,
    Error,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairRecord {
    pub family: String,
    pub params: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub signature: Option<[usize; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub commutators: Option<Vec<CommutatorVerdict>>,
    /// Cover pulled back to `G`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub extension: Option<ExtensionRecord>,
    /// Cover pulled back to `G'`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub extension_dual: Option<ExtensionRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub invariants: Option<InvariantRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub howe: Option<HoweRecord>,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub mismatches: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl PairRecord {
    pub fn new(family: &str, params: &[usize]) -> Self {
        Self {
            family: family.to_string(),
            params: params.to_vec(),
            name: None,
            signature: None,
            commutators: None,
            extension: None,
            extension_dual: None,
            invariants: None,
            howe: None,
            verdict: Verdict::Unchecked,
            mismatches: Vec::new(),
            timing_ms: None,
            error: None,
        }
    }

    pub fn id(&self) -> String {
        let p: Vec<String> = self.params.iter().map(|x| x.to_string()).collect();
        format!("{}[{}]", self.family, p.join(","))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub version: u32,
    pub seed: u64,
    pub backend: Backend,
    pub steps: usize,
    pub pairs: Vec<PairRecord>,
}

impl Report {
    /// No mismatches and no per-pair errors.
    pub fn all_match(&self) -> bool {
        self.pairs.iter().all(|p| matches!(p.verdict, Verdict::Match | Verdict::Unchecked))
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// One block per pair, for terminals.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for p in &self.pairs {
            let title = p.name.clone().unwrap_or_default();
            let _ = writeln!(out, "{} {title}: {:?}", p.id(), p.verdict);
            if let Some(sig) = p.signature {
                let _ = writeln!(out, "  signature ({}, {})", sig[0], sig[1]);
            }
            if let Some(c) = &p.commutators {
                let minus = c.iter().filter(|v| v.sign == -1).count();
                let _ = writeln!(out, "  commutators: {} checked, {minus} anticommuting", c.len());
            }
            for (side, e) in [("G", &p.extension), ("G'", &p.extension_dual)] {
                if let Some(e) = e {
                    let loops: Vec<String> = e.loops.iter().map(|(k, v)| format!("{k}:{v:+}")).collect();
                    let _ = writeln!(out, "  cover on {side}: {} [{}]", e.label, loops.join(" "));
                }
            }
            if let Some(i) = &p.invariants {
                let _ = write!(out, "  invariants {:?}", i.degrees);
                if let (Some(s), Some(m)) = (&i.generator_setting, i.generation_matches) {
                    let _ = write!(out, "; generators for {s} match: {m}");
                }
                out.push('\n');
            }
            if let Some(h) = &p.howe {
                let _ = writeln!(
                    out,
                    "  howe: dim S {} comm {} alg {} equal {} reverse {} mult-free {} pieces {}",
                    h.spinor_dim,
                    h.dim_commutant,
                    h.dim_algebra,
                    h.equal,
                    h.reverse_equal,
                    h.mult_free,
                    h.isotypic_count
                );
            }
            for m in &p.mismatches {
                let _ = writeln!(out, "  mismatch: {m}");
            }
            if let Some(e) = &p.error {
                let _ = writeln!(out, "  error: {e}");
            }
            if let Some(t) = p.timing_ms {
                let _ = writeln!(out, "  {t} ms");
            }
        }
        let bad = self.pairs.iter().filter(|p| matches!(p.verdict, Verdict::Mismatch | Verdict::Error)).count();
        let _ = writeln!(out, "{} pairs, {bad} mismatched or failed", self.pairs.len());
        out
    }
}
