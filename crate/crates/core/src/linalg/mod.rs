//! Linear algebra kernels: float SVD-based ranks and nullspaces, and exact
//! rational echelon forms.

mod dense;
mod exact;

pub use dense::{
    column_space, commutes, expm, frobenius_inner, hermitian_eigen, identity, null_space, null_space_scaled, rank,
    same_span, CMat, OrthoSpan, RANK_TOL,
};
pub use exact::{q, Echelon, Q};
