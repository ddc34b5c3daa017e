//! Invariants of the exterior algebra, generator theorems, transfer into
//! `End(S)` and the double-commutant check.

pub mod algebra;
pub mod check;
pub mod exterior;
pub mod generators;
pub mod invariants;

pub use algebra::{commutant, generated_algebra, same_subspace};
pub use check::{
    howe_check, pair_operators, transfer_check, transfer_invariants, HoweReport, ReverseCheck, TransferReport,
};
pub use generators::{verify_generation, DegreeComparison, GenerationReport, GeneratorSetting, QExterior};
pub use invariants::{exterior_action, invariants, invariants_with, InvariantSpace, RepAction};
