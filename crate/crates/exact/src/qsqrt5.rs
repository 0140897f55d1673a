//! The tower ℚ ⊂ ℚ(√5) ⊂ ℚ(i, √5).
//!
//! Icosahedral coordinates live in ℚ(√5); null vectors of the complexified
//! quadratic form need `i` on top, so ℚ(i, √5) is built as a quadratic
//! extension of ℚ(√5) rather than as a flat 4-dimensional algebra.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rug::{Float, Rational};

use crate::bigcomplex::BigComplex;
use crate::field::{parse_rational, rational_string, ComplexEmbedding, Field, Ring};

/// `a + b√5` with rational `a`, `b`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QSqrt5 {
    pub a: Rational,
    pub b: Rational,
}

impl QSqrt5 {
    pub fn new(a: Rational, b: Rational) -> Self {
        Self { a, b }
    }

    pub fn rational(a: Rational) -> Self {
        Self { a, b: Rational::new() }
    }

    pub fn sqrt5() -> Self {
        Self::new(Rational::new(), Rational::from(1))
    }

    /// The golden ratio φ = (1+√5)/2.
    pub fn phi() -> Self {
        Self::new(Rational::from((1, 2)), Rational::from((1, 2)))
    }

    /// Galois conjugate `a - b√5`.
    pub fn conj(&self) -> Self {
        Self::new(self.a.clone(), -self.b.clone())
    }

    /// Field norm `a² - 5b²`.
    pub fn norm(&self) -> Rational {
        Rational::from(&self.a * &self.a) - Rational::from(&self.b * &self.b) * Rational::from(5)
    }

    pub fn is_rational(&self) -> bool {
        self.b.cmp0().is_eq()
    }

    pub fn to_f64(&self) -> f64 {
        self.a.to_f64() + self.b.to_f64() * 5f64.sqrt()
    }

    pub fn to_float(&self, prec: u32) -> Float {
        let s5 = Float::with_val(prec, 5).sqrt();
        Float::with_val(prec, &self.a) + s5 * Float::with_val(prec, &self.b)
    }

    /// Encodes as `["a", "b"]` rational strings.
    pub fn to_strings(&self) -> [String; 2] {
        [rational_string(&self.a), rational_string(&self.b)]
    }

    pub fn from_strings(a: &str, b: &str) -> crate::Result<Self> {
        Ok(Self::new(parse_rational(a)?, parse_rational(b)?))
    }
}

impl From<i64> for QSqrt5 {
    fn from(n: i64) -> Self {
        Self::rational(Rational::from(n))
    }
}

impl From<Rational> for QSqrt5 {
    fn from(r: Rational) -> Self {
        Self::rational(r)
    }
}

impl<'a> Add<&'a QSqrt5> for &QSqrt5 {
    type Output = QSqrt5;
    fn add(self, rhs: &'a QSqrt5) -> QSqrt5 {
        QSqrt5::new(Rational::from(&self.a + &rhs.a), Rational::from(&self.b + &rhs.b))
    }
}

impl<'a> Sub<&'a QSqrt5> for &QSqrt5 {
    type Output = QSqrt5;
    fn sub(self, rhs: &'a QSqrt5) -> QSqrt5 {
        QSqrt5::new(Rational::from(&self.a - &rhs.a), Rational::from(&self.b - &rhs.b))
    }
}

impl<'a> Mul<&'a QSqrt5> for &QSqrt5 {
    type Output = QSqrt5;
    fn mul(self, rhs: &'a QSqrt5) -> QSqrt5 {
        let bb = Rational::from(&self.b * &rhs.b) * Rational::from(5);
        let a = Rational::from(&self.a * &rhs.a) + bb;
        let b = Rational::from(&self.a * &rhs.b) + Rational::from(&self.b * &rhs.a);
        QSqrt5::new(a, b)
    }
}

impl Neg for &QSqrt5 {
    type Output = QSqrt5;
    fn neg(self) -> QSqrt5 {
        QSqrt5::new(-self.a.clone(), -self.b.clone())
    }
}

impl fmt::Display for QSqrt5 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.cmp0().is_eq(), self.b.cmp0().is_eq()) {
            (_, true) => write!(f, "{}", rational_string(&self.a)),
            (true, false) => write!(f, "{}*sqrt5", rational_string(&self.b)),
            (false, false) => write!(f, "({} + {}*sqrt5)", rational_string(&self.a), rational_string(&self.b)),
        }
    }
}

impl fmt::Debug for QSqrt5 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `re + i·im` with `re`, `im` in ℚ(√5).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QISqrt5 {
    pub re: QSqrt5,
    pub im: QSqrt5,
}

impl QISqrt5 {
    pub fn new(re: QSqrt5, im: QSqrt5) -> Self {
        Self { re, im }
    }

    pub fn real(re: QSqrt5) -> Self {
        Self { re, im: QSqrt5::default() }
    }

    pub fn i() -> Self {
        Self::new(QSqrt5::default(), QSqrt5::from(1))
    }

    /// Complex conjugation `i ↦ -i`.
    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -&self.im)
    }

    /// Norm down to ℚ(√5): `re² + im²`.
    pub fn norm(&self) -> QSqrt5 {
        &(&self.re * &self.re) + &(&self.im * &self.im)
    }

    pub fn is_real(&self) -> bool {
        Ring::is_zero(&self.im)
    }

    /// The four rational coordinates `[re.a, re.b, im.a, im.b]`.
    pub fn to_strings(&self) -> [String; 4] {
        let [a, b] = self.re.to_strings();
        let [c, d] = self.im.to_strings();
        [a, b, c, d]
    }

    pub fn from_strings(parts: &[&str; 4]) -> crate::Result<Self> {
        Ok(Self::new(QSqrt5::from_strings(parts[0], parts[1])?, QSqrt5::from_strings(parts[2], parts[3])?))
    }
}

impl From<i64> for QISqrt5 {
    fn from(n: i64) -> Self {
        Self::real(QSqrt5::from(n))
    }
}

impl From<Rational> for QISqrt5 {
    fn from(r: Rational) -> Self {
        Self::real(QSqrt5::rational(r))
    }
}

impl From<QSqrt5> for QISqrt5 {
    fn from(x: QSqrt5) -> Self {
        Self::real(x)
    }
}

impl<'a> Add<&'a QISqrt5> for &QISqrt5 {
    type Output = QISqrt5;
    fn add(self, rhs: &'a QISqrt5) -> QISqrt5 {
        QISqrt5::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl<'a> Sub<&'a QISqrt5> for &QISqrt5 {
    type Output = QISqrt5;
    fn sub(self, rhs: &'a QISqrt5) -> QISqrt5 {
        QISqrt5::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl<'a> Mul<&'a QISqrt5> for &QISqrt5 {
    type Output = QISqrt5;
    fn mul(self, rhs: &'a QISqrt5) -> QISqrt5 {
        if self.is_real() && rhs.is_real() {
            return QISqrt5::real(&self.re * &rhs.re);
        }
        let re = &(&self.re * &rhs.re) - &(&self.im * &rhs.im);
        let im = &(&self.re * &rhs.im) + &(&self.im * &rhs.re);
        QISqrt5::new(re, im)
    }
}

impl Neg for &QISqrt5 {
    type Output = QISqrt5;
    fn neg(self) -> QISqrt5 {
        QISqrt5::new(-&self.re, -&self.im)
    }
}

impl fmt::Display for QISqrt5 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_real() {
            write!(f, "{}", self.re)
        } else if Ring::is_zero(&self.re) {
            write!(f, "{}*i", self.im)
        } else {
            write!(f, "({} + {}*i)", self.re, self.im)
        }
    }
}

impl fmt::Debug for QISqrt5 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Derives the owned/mixed operator impls from the `&a op &b` ones.
macro_rules! forward_ops {
    ($t:ty) => {
        impl Add for $t {
            type Output = $t;
            fn add(self, rhs: $t) -> $t {
                &self + &rhs
            }
        }
        impl<'a> Add<&'a $t> for $t {
            type Output = $t;
            fn add(self, rhs: &'a $t) -> $t {
                &self + rhs
            }
        }
        impl Sub for $t {
            type Output = $t;
            fn sub(self, rhs: $t) -> $t {
                &self - &rhs
            }
        }
        impl<'a> Sub<&'a $t> for $t {
            type Output = $t;
            fn sub(self, rhs: &'a $t) -> $t {
                &self - rhs
            }
        }
        impl Mul for $t {
            type Output = $t;
            fn mul(self, rhs: $t) -> $t {
                &self * &rhs
            }
        }
        impl<'a> Mul<&'a $t> for $t {
            type Output = $t;
            fn mul(self, rhs: &'a $t) -> $t {
                &self * rhs
            }
        }
        impl Neg for $t {
            type Output = $t;
            fn neg(self) -> $t {
                -&self
            }
        }
    };
}

forward_ops!(QSqrt5);
forward_ops!(QISqrt5);

impl Ring for QSqrt5 {
    fn zero() -> Self {
        Self::default()
    }
    fn one() -> Self {
        Self::from(1)
    }
    fn is_zero(&self) -> bool {
        self.a.cmp0().is_eq() && self.b.cmp0().is_eq()
    }
    fn from_int(n: i64) -> Self {
        Self::from(n)
    }
}

impl Field for QSqrt5 {
    fn inv(&self) -> Option<Self> {
        // √5 is irrational, so the norm vanishes only at zero.
        let n = self.norm();
        if n.cmp0().is_eq() {
            return None;
        }
        let c = self.conj();
        Some(QSqrt5::new(Rational::from(&c.a / &n), Rational::from(&c.b / &n)))
    }
    fn from_rational(q: &Rational) -> Self {
        Self::rational(q.clone())
    }
}

impl ComplexEmbedding for QSqrt5 {
    fn to_complex(&self, prec: u32) -> BigComplex {
        BigComplex::new(self.to_float(prec), Float::with_val(prec, 0))
    }
}

impl Ring for QISqrt5 {
    fn zero() -> Self {
        Self::default()
    }
    fn one() -> Self {
        Self::from(1)
    }
    fn is_zero(&self) -> bool {
        Ring::is_zero(&self.re) && Ring::is_zero(&self.im)
    }
    fn from_int(n: i64) -> Self {
        Self::from(n)
    }
}

impl Field for QISqrt5 {
    fn inv(&self) -> Option<Self> {
        // -1 is not a square in the real field ℚ(√5), so the norm is nonzero off zero.
        let n_inv = self.norm().inv()?;
        let c = self.conj();
        Some(QISqrt5::new(&c.re * &n_inv, &c.im * &n_inv))
    }
    fn from_rational(q: &Rational) -> Self {
        Self::from(q.clone())
    }
}

impl ComplexEmbedding for QISqrt5 {
    fn to_complex(&self, prec: u32) -> BigComplex {
        BigComplex::new(self.re.to_float(prec), self.im.to_float(prec))
    }
}

/// Lossless embedding into ℚ(i, √5), the largest exact field in use.
pub trait IntoQISqrt5 {
    fn to_qi5(&self) -> QISqrt5;
}

impl IntoQISqrt5 for Rational {
    fn to_qi5(&self) -> QISqrt5 {
        QISqrt5::from(self.clone())
    }
}

impl IntoQISqrt5 for QSqrt5 {
    fn to_qi5(&self) -> QISqrt5 {
        QISqrt5::real(self.clone())
    }
}

impl IntoQISqrt5 for QISqrt5 {
    fn to_qi5(&self) -> QISqrt5 {
        self.clone()
    }
}
