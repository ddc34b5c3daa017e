//! The table of predicted outcomes, shipped as data and compiled in.

use crate::report::PairRecord;
use serde::Deserialize;
use std::collections::BTreeMap;

const TABLE: &str = include_str!("../data/expected.toml");

/// Predicted outcome for one `(family, params)`. Absent fields are not
/// checked.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExpectedRow {
    pub family: String,
    pub params: Vec<usize>,
    /// All commutator signs are `+1`; `false` asks for at least one `-1`.
    pub commute: Option<bool>,
    pub label_g: Option<String>,
    pub label_gp: Option<String>,
    /// Invariant dimensions agree with the generated subalgebra.
    pub generation: Option<bool>,
    /// Both commutant equalities hold and the joint commutant is commutative.
    pub howe: Option<bool>,
    /// Plain-language reason for the prediction.
    pub basis: String,
}

impl ExpectedRow {
    pub fn id(&self) -> String {
        let p: Vec<String> = self.params.iter().map(|x| x.to_string()).collect();
        format!("{}[{}]", self.family, p.join(","))
    }
}

#[derive(Debug, Deserialize)]
struct TableFile {
    row: Vec<ExpectedRow>,
}

#[derive(Debug, Clone)]
pub struct ExpectedTable {
    rows: BTreeMap<String, ExpectedRow>,
}

impl ExpectedTable {
    /// The compiled-in table. Panics only if the shipped data is malformed,
    /// which the test suite rules out.
    pub fn builtin() -> Self {
        Self::parse(TABLE).expect("shipped expected table parses")
    }

    pub fn parse(text: &str) -> Result<Self, toml::de::Error> {
        let file: TableFile = toml::from_str(text)?;
        Ok(Self { rows: file.row.into_iter().map(|r| (r.id(), r)).collect() })
    }

    pub fn get(&self, id: &str) -> Option<&ExpectedRow> {
        self.rows.get(id)
    }

    pub fn rows(&self) -> impl Iterator<Item = &ExpectedRow> {
        self.rows.values()
    }

    /// Differences between the computed record and its row; `None` when the
    /// pair has no row.
    pub fn mismatches(&self, record: &PairRecord) -> Option<Vec<String>> {
        let row = self.get(&record.id())?;
        let mut out = Vec::new();
        if let (Some(want), Some(verdicts)) = (row.commute, &record.commutators) {
            let all_plus = verdicts.iter().all(|v| v.sign == 1);
            if all_plus != want {
                out.push(format!("commute: expected {want}, got {all_plus}"));
            }
        }
        for (want, got, side) in [(&row.label_g, &record.extension, "G"), (&row.label_gp, &record.extension_dual, "G'")]
        {
            if let (Some(want), Some(got)) = (want, got) {
                if *want != got.label {
                    out.push(format!("label {side}: expected {want}, got {}", got.label));
                }
            }
        }
        if let (Some(want), Some(inv)) = (row.generation, &record.invariants) {
            if let Some(got) = inv.generation_matches {
                if got != want {
                    out.push(format!("generation: expected {want}, got {got}"));
                }
            }
        }
        if let (Some(want), Some(h)) = (row.howe, &record.howe) {
            let got = h.equal && h.reverse_equal && h.mult_free;
            if got != want {
                out.push(format!("howe: expected {want}, got {got}"));
            }
        }
        Some(out)
    }
}
