use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{Rational, SkewField};
use crate::error::{Error, Result};

/// Rational quaternion `w + x i + y j + z k`.
///
/// Multiplication follows Hamilton's rules `i j = k`, `j k = i`, `k i = j`,
/// `i² = j² = k² = -1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Quaternion {
    pub w: Rational,
    pub x: Rational,
    pub y: Rational,
    pub z: Rational,
}

impl Quaternion {
    pub fn new(w: Rational, x: Rational, y: Rational, z: Rational) -> Self {
        Quaternion { w, x, y, z }
    }

    /// Quaternion with integer components.
    pub fn from_ints(w: i64, x: i64, y: i64, z: i64) -> Self {
        Quaternion::new(w.into_rat(), x.into_rat(), y.into_rat(), z.into_rat())
    }

    pub fn real(w: Rational) -> Self {
        Quaternion::new(w, Zero::zero(), Zero::zero(), Zero::zero())
    }

    pub fn i() -> Self {
        Quaternion::from_ints(0, 1, 0, 0)
    }

    pub fn j() -> Self {
        Quaternion::from_ints(0, 0, 1, 0)
    }

    pub fn k() -> Self {
        Quaternion::from_ints(0, 0, 0, 1)
    }

    pub fn conj(&self) -> Self {
        Quaternion::new(self.w.clone(), -&self.x, -&self.y, -&self.z)
    }

    /// `w² + x² + y² + z²`.
    pub fn norm(&self) -> Rational {
        &self.w * &self.w + &self.x * &self.x + &self.y * &self.y + &self.z * &self.z
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Quaternion::new(&self.w * s, &self.x * s, &self.y * s, &self.z * s)
    }

    pub fn components(&self) -> [&Rational; 4] {
        [&self.w, &self.x, &self.y, &self.z]
    }

    pub fn parse(text: &str) -> Result<Self> {
        super::parse::parse_quaternion(text)
    }

    /// Integer numerators over one common denominator.
    fn integer_parts(&self) -> ([BigInt; 4], BigInt) {
        let den = self
            .components()
            .into_iter()
            .fold(BigInt::one(), |acc, r| if r.denom().is_one() { acc } else { acc.lcm(r.denom()) });
        let nums = self.components().map(|r| {
            if r.denom() == &den {
                r.numer().clone()
            } else {
                r.numer() * (&den / r.denom())
            }
        });
        (nums, den)
    }
}

trait IntoRat {
    fn into_rat(self) -> Rational;
}

impl IntoRat for i64 {
    fn into_rat(self) -> Rational {
        Rational::from_integer(self.into())
    }
}

impl From<Rational> for Quaternion {
    fn from(w: Rational) -> Self {
        Quaternion::real(w)
    }
}

impl From<i64> for Quaternion {
    fn from(w: i64) -> Self {
        Quaternion::from_ints(w, 0, 0, 0)
    }
}

impl<'a> Add<&'a Quaternion> for &'a Quaternion {
    type Output = Quaternion;

    fn add(self, rhs: &'a Quaternion) -> Quaternion {
        Quaternion::new(
            &self.w + &rhs.w,
            &self.x + &rhs.x,
            &self.y + &rhs.y,
            &self.z + &rhs.z,
        )
    }
}

impl<'a> Sub<&'a Quaternion> for &'a Quaternion {
    type Output = Quaternion;

    fn sub(self, rhs: &'a Quaternion) -> Quaternion {
        Quaternion::new(
            &self.w - &rhs.w,
            &self.x - &rhs.x,
            &self.y - &rhs.y,
            &self.z - &rhs.z,
        )
    }
}

impl<'a> Mul<&'a Quaternion> for &'a Quaternion {
    type Output = Quaternion;

    fn mul(self, rhs: &'a Quaternion) -> Quaternion {
        // Work over integers so each component is reduced once.
        let ([a1, b1, c1, d1], den1) = self.integer_parts();
        let ([a2, b2, c2, d2], den2) = rhs.integer_parts();
        let den = den1 * den2;
        let reduce = |n: BigInt| Rational::new(n, den.clone());
        Quaternion::new(
            reduce(&a1 * &a2 - &b1 * &b2 - &c1 * &c2 - &d1 * &d2),
            reduce(&a1 * &b2 + &b1 * &a2 + &c1 * &d2 - &d1 * &c2),
            reduce(&a1 * &c2 - &b1 * &d2 + &c1 * &a2 + &d1 * &b2),
            reduce(&a1 * &d2 + &b1 * &c2 - &c1 * &b2 + &d1 * &a2),
        )
    }
}

impl Neg for &Quaternion {
    type Output = Quaternion;

    fn neg(self) -> Quaternion {
        Quaternion::new(-&self.w, -&self.x, -&self.y, -&self.z)
    }
}

macro_rules! forward_by_value {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for Quaternion {
            type Output = Quaternion;

            fn $method(self, rhs: Quaternion) -> Quaternion {
                (&self).$method(&rhs)
            }
        }
    )*};
}

forward_by_value!(Add add, Sub sub, Mul mul);

impl Neg for Quaternion {
    type Output = Quaternion;

    fn neg(self) -> Quaternion {
        -&self
    }
}

impl AddAssign<&Quaternion> for Quaternion {
    fn add_assign(&mut self, rhs: &Quaternion) {
        self.w += &rhs.w;
        self.x += &rhs.x;
        self.y += &rhs.y;
        self.z += &rhs.z;
    }
}

impl SkewField for Quaternion {
    fn zero() -> Self {
        Quaternion::default()
    }

    fn one() -> Self {
        Quaternion::from_ints(1, 0, 0, 0)
    }

    fn is_zero(&self) -> bool {
        self.components().into_iter().all(Zero::is_zero)
    }

    /// Conjugate over norm.
    fn inv(&self) -> Result<Self> {
        let n = self.norm();
        if Zero::is_zero(&n) {
            return Err(Error::DivisionByZero);
        }
        Ok(self.conj().scale(&n.recip()))
    }
}

fn write_rational(f: &mut fmt::Formatter<'_>, r: &Rational) -> fmt::Result {
    if r.is_integer() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (coef, unit) in self.components().into_iter().zip(["", "i", "j", "k"]) {
            if Zero::is_zero(coef) {
                continue;
            }
            if coef.is_negative() {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            let magnitude = coef.abs();
            if unit.is_empty() || !One::is_one(&magnitude) {
                write_rational(f, &magnitude)?;
            }
            f.write_str(unit)?;
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl FromStr for Quaternion {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Quaternion::parse(s)
    }
}

impl Serialize for Quaternion {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Quaternion {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}
