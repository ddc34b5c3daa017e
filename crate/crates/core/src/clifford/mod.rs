//! Clifford algebra of a quadratic space with a distinguished orthogonal basis.
//!
//! Generators satisfy `e_i e_i = norms[i]` and `e_i e_j = -e_j e_i` for
//! `i != j`, i.e. `xy + yx = 2 b(x, y)`. Blades are bitmasks over generator
//! indices in ascending canonical order.

mod blade;
mod element;
mod exterior;
mod space;
mod tensor;

pub use blade::{blade_product, reorder_sign, BasisBlade};
pub use element::{CliffordElement, Parity};
pub use exterior::{chevalley_t, chevalley_t_inv, wedge_sign, ExteriorElement};
pub use space::{FieldKind, QuadraticSpace, SpaceRef, MAX_DIM};
pub use tensor::{direct_sum, graded_tensor_mul, tensor_embed, TensorTerm};
