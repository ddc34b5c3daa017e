use super::space::QuadraticSpace;
use serde::{Deserialize, Serialize};

/// Ordered product `e_{i1} ... e_{ik}` with `i1 < ... < ik`, as a bitmask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct BasisBlade(pub u64);

impl BasisBlade {
    pub const SCALAR: BasisBlade = BasisBlade(0);

    pub fn vector(i: usize) -> Self {
        BasisBlade(1 << i)
    }

    pub fn from_indices(indices: &[usize]) -> Self {
        BasisBlade(indices.iter().fold(0, |m, &i| m | (1 << i)))
    }

    pub fn grade(self) -> u32 {
        self.0.count_ones()
    }

    pub fn indices(self) -> impl Iterator<Item = usize> {
        let mut m = self.0;
        std::iter::from_fn(move || {
            if m == 0 {
                None
            } else {
                let i = m.trailing_zeros() as usize;
                m &= m - 1;
                Some(i)
            }
        })
    }
}

/// `(-1)^N` where `N` counts pairs `(i in a, j in b)` with `i > j`: the
/// transpositions needed to sort the concatenation `a b`.
#[inline]
pub fn reorder_sign(a: u64, b: u64) -> i8 {
    let mut a = a >> 1;
    let mut n = 0u32;
    while a != 0 {
        n += (a & b).count_ones();
        a >>= 1;
    }
    if n & 1 == 0 {
        1
    } else {
        -1
    }
}

/// Product of two blades: the blade `a XOR b` times `±1`.
#[inline]
pub fn blade_product(a: BasisBlade, b: BasisBlade, space: &QuadraticSpace) -> (BasisBlade, i8) {
    let metric = if (a.0 & b.0 & space.neg_mask()).count_ones() & 1 == 0 { 1 } else { -1 };
    (BasisBlade(a.0 ^ b.0), reorder_sign(a.0, b.0) * metric)
}
