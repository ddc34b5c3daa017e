//! Scalar backends for multivector coefficients.
//!
//! Two backends implement [`Scalar`]: [`C64`] (double-precision complex, with
//! tolerance-based comparisons) and [`ExactComplex`] (Gaussian rationals with
//! exact comparisons).

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

pub use num_complex::Complex64 as C64;

/// Gaussian rationals `a + b i` with `a, b` arbitrary-precision rationals.
pub type ExactComplex = Complex<BigRational>;

/// Magnitude below which float terms are not stored.
pub const DROP_TOL: f64 = 1e-12;
/// Tolerance for float equality assertions.
pub const EQ_TOL: f64 = 1e-9;

pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    /// True for backends whose arithmetic is exact.
    const EXACT: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn imag_unit() -> Self;
    /// Whether a term with this coefficient should be dropped from storage.
    fn is_negligible(&self) -> bool;
    /// Equality up to the backend's assertion tolerance.
    fn approx_eq(&self, other: &Self) -> bool;
    fn to_c64(&self) -> C64;
    fn magnitude(&self) -> f64 {
        self.to_c64().norm()
    }
}

impl Scalar for C64 {
    const EXACT: bool = false;

    fn zero() -> Self {
        C64::new(0.0, 0.0)
    }
    fn one() -> Self {
        C64::new(1.0, 0.0)
    }
    fn from_i64(v: i64) -> Self {
        C64::new(v as f64, 0.0)
    }
    fn imag_unit() -> Self {
        C64::new(0.0, 1.0)
    }
    fn is_negligible(&self) -> bool {
        self.norm() < DROP_TOL
    }
    fn approx_eq(&self, other: &Self) -> bool {
        (self - other).norm() <= EQ_TOL
    }
    fn to_c64(&self) -> C64 {
        *self
    }
}

impl Scalar for ExactComplex {
    const EXACT: bool = true;

    fn zero() -> Self {
        Complex::new(BigRational::zero(), BigRational::zero())
    }
    fn one() -> Self {
        Complex::new(BigRational::one(), BigRational::zero())
    }
    fn from_i64(v: i64) -> Self {
        Complex::new(BigRational::from_integer(BigInt::from(v)), BigRational::zero())
    }
    fn imag_unit() -> Self {
        Complex::new(BigRational::zero(), BigRational::one())
    }
    fn is_negligible(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn approx_eq(&self, other: &Self) -> bool {
        self == other
    }
    fn to_c64(&self) -> C64 {
        C64::new(rational_to_f64(&self.re), rational_to_f64(&self.im))
    }
}

pub fn rational_to_f64(q: &BigRational) -> f64 {
    q.to_f64().unwrap_or_else(|| if q.is_negative() { f64::NEG_INFINITY } else { f64::INFINITY })
}

/// Exact Gaussian rational from integer real and imaginary parts.
pub fn exact(re: i64, im: i64) -> ExactComplex {
    Complex::new(BigRational::from_integer(BigInt::from(re)), BigRational::from_integer(BigInt::from(im)))
}

/// Exact rational `num / den` as a real Gaussian rational.
pub fn exact_ratio(num: i64, den: i64) -> ExactComplex {
    Complex::new(BigRational::new(BigInt::from(num), BigInt::from(den)), BigRational::zero())
}
