use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use rug::float::Round;
use rug::{Float, Rational};

/// Complex number with MPFR components at a declared precision.
///
/// Binary operations produce a result at the larger operand precision, so a
/// value never silently drops bits it was created with.
#[derive(Clone, PartialEq)]
pub struct BigComplex {
    pub re: Float,
    pub im: Float,
}

impl BigComplex {
    pub fn new(re: Float, im: Float) -> Self {
        let prec = re.prec().max(im.prec());
        let mut re = re;
        let mut im = im;
        re.set_prec(prec);
        im.set_prec(prec);
        Self { re, im }
    }

    pub fn zero(prec: u32) -> Self {
        Self::new(Float::with_val(prec, 0), Float::with_val(prec, 0))
    }

    pub fn one(prec: u32) -> Self {
        Self::from_i64(1, prec)
    }

    pub fn from_i64(n: i64, prec: u32) -> Self {
        Self::new(Float::with_val(prec, n), Float::with_val(prec, 0))
    }

    pub fn from_f64(re: f64, im: f64, prec: u32) -> Self {
        Self::new(Float::with_val(prec, re), Float::with_val(prec, im))
    }

    pub fn from_rational(q: &Rational, prec: u32) -> Self {
        Self::new(Float::with_val(prec, q), Float::with_val(prec, 0))
    }

    /// `exp(iθ)` at the given precision.
    pub fn cis(theta: &Float, prec: u32) -> Self {
        let (s, c) = Float::with_val(prec, theta).sin_cos(Float::new(prec));
        Self::new(c, s)
    }

    pub fn prec(&self) -> u32 {
        self.re.prec()
    }

    pub fn with_prec(&self, prec: u32) -> Self {
        Self::new(Float::with_val(prec, &self.re), Float::with_val(prec, &self.im))
    }

    pub fn i(prec: u32) -> Self {
        Self::new(Float::with_val(prec, 0), Float::with_val(prec, 1))
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -self.im.clone())
    }

    /// `|z|²`.
    pub fn norm_sqr(&self) -> Float {
        let p = self.prec();
        Float::with_val(p, self.re.square_ref()) + Float::with_val(p, self.im.square_ref())
    }

    pub fn abs(&self) -> Float {
        let p = self.prec();
        Float::with_val(p, self.re.hypot_ref(&self.im))
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_finite(&self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }

    pub fn scale(&self, s: &Float) -> Self {
        Self::new(Float::with_val(self.prec(), &self.re * s), Float::with_val(self.prec(), &self.im * s))
    }

    pub fn powu(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.prec());
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Principal square root.
    pub fn sqrt(&self) -> Self {
        let p = self.prec();
        let r = self.abs();
        if r.is_zero() {
            return Self::zero(p);
        }
        // sqrt((r + re)/2) + i sign(im) sqrt((r - re)/2)
        let half = Float::with_val(p, 0.5);
        let a = Float::with_val(p, Float::with_val(p, &r + &self.re) * &half).sqrt();
        let mut b = Float::with_val(p, Float::with_val(p, &r - &self.re) * &half).sqrt();
        if self.im.is_sign_negative() {
            b = -b;
        }
        Self::new(a, b)
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }

    /// Decimal rendering with `digits` significant digits per component.
    pub fn to_decimal_strings(&self, digits: usize) -> [String; 2] {
        [decimal(&self.re, digits), decimal(&self.im, digits)]
    }

    /// Parses two decimal strings at the given precision.
    pub fn parse(re: &str, im: &str, prec: u32) -> crate::Result<Self> {
        let parse = |s: &str| {
            Float::parse(s.trim())
                .map(|p| Float::with_val(prec, p))
                .map_err(|_| crate::ExactError::ParseScalar(s.to_string()))
        };
        Ok(Self::new(parse(re)?, parse(im)?))
    }
}

/// Decimal string with a fixed number of significant digits, rounded to nearest.
pub fn decimal(x: &Float, digits: usize) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    x.to_string_radix_round(10, Some(digits), Round::Nearest)
}

impl<'a> Add<&'a BigComplex> for &BigComplex {
    type Output = BigComplex;
    fn add(self, rhs: &'a BigComplex) -> BigComplex {
        let p = self.prec().max(rhs.prec());
        BigComplex::new(Float::with_val(p, &self.re + &rhs.re), Float::with_val(p, &self.im + &rhs.im))
    }
}

impl<'a> Sub<&'a BigComplex> for &BigComplex {
    type Output = BigComplex;
    fn sub(self, rhs: &'a BigComplex) -> BigComplex {
        let p = self.prec().max(rhs.prec());
        BigComplex::new(Float::with_val(p, &self.re - &rhs.re), Float::with_val(p, &self.im - &rhs.im))
    }
}

impl<'a> Mul<&'a BigComplex> for &BigComplex {
    type Output = BigComplex;
    fn mul(self, rhs: &'a BigComplex) -> BigComplex {
        let p = self.prec().max(rhs.prec());
        let rr = Float::with_val(p, &self.re * &rhs.re);
        let ii = Float::with_val(p, &self.im * &rhs.im);
        let ri = Float::with_val(p, &self.re * &rhs.im);
        let ir = Float::with_val(p, &self.im * &rhs.re);
        BigComplex::new(rr - ii, ri + ir)
    }
}

impl<'a> Div<&'a BigComplex> for &BigComplex {
    type Output = BigComplex;
    fn div(self, rhs: &'a BigComplex) -> BigComplex {
        let p = self.prec().max(rhs.prec());
        let den = rhs.norm_sqr();
        let num = self * &rhs.conj();
        BigComplex::new(Float::with_val(p, &num.re / &den), Float::with_val(p, &num.im / &den))
    }
}

impl Neg for &BigComplex {
    type Output = BigComplex;
    fn neg(self) -> BigComplex {
        BigComplex::new(-self.re.clone(), -self.im.clone())
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for BigComplex {
            type Output = BigComplex;
            fn $m(self, rhs: BigComplex) -> BigComplex {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a BigComplex> for BigComplex {
            type Output = BigComplex;
            fn $m(self, rhs: &'a BigComplex) -> BigComplex {
                (&self).$m(rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl Neg for BigComplex {
    type Output = BigComplex;
    fn neg(self) -> BigComplex {
        -&self
    }
}

impl fmt::Display for BigComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [re, im] = self.to_decimal_strings(20);
        write!(f, "({re}, {im})")
    }
}

impl fmt::Debug for BigComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
