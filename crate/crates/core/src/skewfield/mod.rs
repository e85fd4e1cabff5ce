//! Exact skew-field arithmetic.
//!
//! [`SkewField`] is the capability every matrix routine in this crate is
//! generic over. Multiplication is associative but never assumed to commute,
//! so every product in the library keeps its factors in a fixed order.
//!
//! Two implementations ship: [`Quaternion`] (rational quaternions, the
//! reference noncommutative instance) and [`Rational`] (a commutative field,
//! handy as a sanity baseline).

mod parse;
mod quaternion;

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub use parse::parse_rational;
pub use quaternion::Quaternion;

/// Arbitrary-precision rational number, always in lowest terms.
pub type Rational = num_rational::BigRational;

/// A division ring with exact arithmetic.
///
/// Implementors must satisfy the ring axioms and provide an inverse for
/// every nonzero element: `a * a.inv()? == one == a.inv()? * a`.
pub trait SkewField:
    Clone
    + PartialEq
    + Debug
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;

    /// Two-sided multiplicative inverse.
    fn inv(&self) -> Result<Self>;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

impl SkewField for Rational {
    fn zero() -> Self {
        Zero::zero()
    }

    fn one() -> Self {
        One::one()
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn inv(&self) -> Result<Self> {
        if Zero::is_zero(self) {
            Err(Error::DivisionByZero)
        } else {
            Ok(self.recip())
        }
    }
}

/// Integer-valued rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// `n / d` reduced to lowest terms. Panics when `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}
