use std::fmt::{Debug, Display};
use std::ops::{Add, Mul, Neg, Sub};

use rug::Rational;

use crate::bigcomplex::BigComplex;

/// Commutative ring with exact equality.
///
/// Owned and by-reference right-hand sides are both required so generic code
/// can write `a.clone() * &b` without cloning twice.
pub trait Ring:
    Clone
    + PartialEq
    + Debug
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_int(n: i64) -> Self;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = base.clone() * &base;
            }
        }
        acc
    }
}

/// A field containing the rationals.
pub trait Field: Ring + Display {
    fn inv(&self) -> Option<Self>;
    fn from_rational(q: &Rational) -> Self;

    fn checked_div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|r| self.clone() * &r)
    }
}

/// Exact fields with a fixed embedding into the complex numbers.
pub trait ComplexEmbedding: Field {
    fn to_complex(&self, prec: u32) -> BigComplex;

    fn to_c64(&self) -> (f64, f64) {
        self.to_complex(64).to_f64_pair()
    }
}

impl Ring for Rational {
    fn zero() -> Self {
        Rational::new()
    }
    fn one() -> Self {
        Rational::from(1)
    }
    fn is_zero(&self) -> bool {
        self.cmp0() == std::cmp::Ordering::Equal
    }
    fn from_int(n: i64) -> Self {
        Rational::from(n)
    }
}

impl Field for Rational {
    fn inv(&self) -> Option<Self> {
        if Ring::is_zero(self) {
            None
        } else {
            Some(self.clone().recip())
        }
    }
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }
}

impl ComplexEmbedding for Rational {
    fn to_complex(&self, prec: u32) -> BigComplex {
        BigComplex::from_rational(self, prec)
    }
}

/// Shorthand for `a/b` as an exact rational.
pub fn q(num: i64, den: i64) -> Rational {
    Rational::from((num, den))
}

/// Parses `"p"` or `"p/q"` into a canonical rational.
pub fn parse_rational(s: &str) -> crate::Result<Rational> {
    Rational::parse(s.trim()).map(Rational::from).map_err(|_| crate::ExactError::ParseScalar(s.to_string()))
}

/// Renders a rational as `p` or `p/q`.
pub fn rational_string(r: &Rational) -> String {
    if *r.denom() == 1 {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
