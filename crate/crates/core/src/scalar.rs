//! Coefficient rings for Fock vectors and exact elimination.

use std::fmt::Debug;
use std::ops::Neg;

use num_bigint::BigInt;
use num_traits::{Num, Signed};

/// Anything usable as a coefficient of a Fock vector.
///
/// All operator matrix entries are small integers, so a scalar only needs to
/// be built from an `i64`. Exactness is the caller's choice: `BigRational`
/// and `BigInt` are exact, `i64` is exact until it overflows, floats are not.
pub trait Scalar: Clone + PartialEq + Debug + Num + Neg<Output = Self> + Send + Sync {
    fn from_int(n: i64) -> Self;
}

impl Scalar for num_rational::BigRational {
    fn from_int(n: i64) -> Self {
        num_rational::BigRational::from_integer(BigInt::from(n))
    }
}

impl Scalar for num_rational::Rational64 {
    fn from_int(n: i64) -> Self {
        num_rational::Rational64::from_integer(n)
    }
}

impl Scalar for BigInt {
    fn from_int(n: i64) -> Self {
        BigInt::from(n)
    }
}

impl Scalar for i64 {
    fn from_int(n: i64) -> Self {
        n
    }
}

impl Scalar for f64 {
    fn from_int(n: i64) -> Self {
        n as f64
    }
}

impl Scalar for f32 {
    fn from_int(n: i64) -> Self {
        n as f32
    }
}

/// Scalars for which Bareiss elimination is exact: every division it performs
/// is by a value that divides the dividend.
pub trait ExactDomain: Scalar + Signed {}

impl ExactDomain for num_rational::BigRational {}
impl ExactDomain for num_rational::Rational64 {}
impl ExactDomain for BigInt {}
impl ExactDomain for i64 {}
impl ExactDomain for f64 {}
impl ExactDomain for f32 {}
