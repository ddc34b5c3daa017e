use thiserror::Error;

/// Errors raised by the library. Every variant carries enough context to be
/// reported per pair without aborting a batch.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("quadratic space mismatch: {0}")]
    SpaceMismatch(String),
    #[error("invalid quadratic space: {0}")]
    InvalidSpace(String),
    #[error("element is not parity-homogeneous")]
    NotHomogeneous,
    #[error("not a Pin element: {0}")]
    NotPin(String),
    #[error("not an isometry: defect {0:.3e}")]
    NotIsometry(f64),
    #[error("not in the orthogonal Lie algebra: defect {0:.3e}")]
    NotAntisymmetric(f64),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("lift failed: pivot vector numerically isotropic at basis index {0}")]
    IsotropicPivot(usize),
    #[error("rejected by classification side-condition: {0}")]
    SideCondition(String),
    #[error("path lifting did not resolve at {0} steps")]
    PathLiftUnresolved(usize),
    #[error("dimension cap exceeded: {0}")]
    CapExceeded(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("lifted elements neither commute nor anticommute")]
    NotSignCommuting,
}

pub type Result<T> = std::result::Result<T, Error>;
