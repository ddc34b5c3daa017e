//! Clifford algebras over real and complex quadratic spaces, the Pin double
//! cover of the orthogonal group, lifts of reductive dual pairs, and numerical
//! checks of Howe duality inside the spinorial representation.
//!
//! The crate is organised bottom-up:
//!
//! * [`clifford`]: blades, sparse multivectors, involutions, exterior algebra,
//!   the Chevalley identification and graded tensor products.
//! * [`orthogonal`]: isometry and Lie-algebra matrices, the classified dual
//!   pair families and their embeddings.
//! * [`pin`]: Pin elements, projection, lifting, commutator pairing, cocycles
//!   and path-lifting classification of extensions.
//! * [`spinor`]: the Fock model of the spin module and the algebra map
//!   `Cliff(E_C) -> End(S)`.
//! * [`howe`]: exterior invariants, the generator theorems, and
//!   double-commutant checks.

pub mod clifford;
pub mod error;
pub mod howe;
pub mod linalg;
pub mod orthogonal;
pub mod pin;
pub mod scalar;
pub mod spinor;

pub use error::{Error, Result};
pub use scalar::{ExactComplex, Scalar, C64};
