//! Batch execution: every pair runs independently and failures stay local.

use crate::config::{ResolvedPair, RunConfig, Task, MAX_HOWE_DIM};
use crate::expected::ExpectedTable;
use crate::report::{HoweRecord, InvariantRecord, PairRecord, Report, Verdict, REPORT_VERSION};
use pinhowe::howe::invariants::MAX_INVARIANT_DIM;
use pinhowe::howe::{howe_check, invariants, verify_generation, GeneratorSetting};
use pinhowe::orthogonal::{build_pair, DualPairSpec, Side};
use pinhowe::pin::{classify_extension, commutator_pairing};
use pinhowe::Result;
use rayon::prelude::*;
use std::time::Instant;

fn invariant_record(spec: &DualPairSpec) -> Result<InvariantRecord> {
    let degrees = invariants(spec, Side::G)?.dims();
    let mut record = InvariantRecord { degrees, generator_setting: None, generated: None, generation_matches: None };
    if let Some(setting) = GeneratorSetting::for_pair(spec) {
        let g = verify_generation(setting)?;
        record.generator_setting = Some(setting.to_string());
        record.generation_matches = Some(g.matches && g.invariant_dims() == record.degrees);
        record.generated = Some(g.degrees.iter().map(|d| d.generated_dim).collect());
    }
    Ok(record)
}

/// `all` runs the invariant and Howe stages only where they are supported;
/// the dedicated subcommands report the refusal instead.
fn fill(record: &mut PairRecord, spec: &DualPairSpec, task: Task, config: &RunConfig) -> Result<()> {
    if task.commutators() {
        record.commutators = Some(commutator_pairing(spec, config.backend, config.probes, config.seed)?);
    }
    if task.extension() {
        record.extension = Some(classify_extension(spec, Side::G, config.steps)?.into());
        record.extension_dual = Some(classify_extension(spec, Side::Gp, config.steps)?.into());
    }
    if task.invariants() && (task == Task::Invariants || spec.ambient.dim() <= MAX_INVARIANT_DIM) {
        record.invariants = Some(invariant_record(spec)?);
    }
    let howe_applies = spec.in_howe_scope() && spec.ambient.dim() <= MAX_HOWE_DIM;
    if task.howe() && (task == Task::HoweCheck || howe_applies) {
        let h = howe_check(spec)?;
        record.howe = Some(HoweRecord {
            spinor_dim: h.spinor_dim,
            dim_commutant: h.dim_commutant,
            dim_algebra: h.dim_algebra,
            equal: h.equal,
            reverse_equal: h.reverse.equal,
            mult_free: h.mult_free,
            isotypic_count: h.isotypic_count,
        });
    }
    Ok(())
}

fn run_pair(pair: &ResolvedPair, task: Task, config: &RunConfig, table: &ExpectedTable) -> PairRecord {
    let start = Instant::now();
    let mut record = PairRecord::new(pair.family.tag(), &pair.params);
    let outcome = build_pair(pair.family, &pair.params).and_then(|spec| {
        record.name = Some(spec.name());
        let (p, q) = spec.signature();
        record.signature = Some([p, q]);
        fill(&mut record, &spec, task, config)
    });
    match outcome {
        Err(e) => {
            record.error = Some(e.to_string());
            record.verdict = Verdict::Error;
        }
        Ok(()) => match table.mismatches(&record) {
            None => record.verdict = Verdict::Unchecked,
            Some(m) if m.is_empty() => record.verdict = Verdict::Match,
            Some(m) => {
                record.mismatches = m;
                record.verdict = Verdict::Mismatch;
            }
        },
    }
    if config.timing {
        record.timing_ms = Some(start.elapsed().as_millis() as u64);
    }
    record
}

/// Runs `task` on every resolved pair in parallel; the report lists pairs in
/// id order.
pub fn run(pairs: &[ResolvedPair], task: Task, config: &RunConfig, table: &ExpectedTable) -> Report {
    let mut records: Vec<PairRecord> = pairs.par_iter().map(|p| run_pair(p, task, config, table)).collect();
    records.sort_by_key(|r| r.id());
    Report { version: REPORT_VERSION, seed: config.seed, backend: config.backend, steps: config.steps, pairs: records }
}
