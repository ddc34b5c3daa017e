//! Batch verification of the dual-pair families: configuration, the
//! expected-outcome table, the parallel runner and the report formats.

pub mod config;
pub mod expected;
pub mod report;
pub mod runner;

pub use config::{ConfigError, PairRequest, ResolvedPair, RunConfig, Task};
pub use expected::{ExpectedRow, ExpectedTable};
pub use report::{PairRecord, Report, Verdict};
pub use runner::run;
