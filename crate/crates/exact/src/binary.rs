//! Homogeneous binary forms in `(z₁, z₂)`.

use crate::field::{Field, Ring};
use crate::matrix::Matrix;
use crate::univariate::UniPoly;
use crate::{ExactError, Result};

/// `Σ uⱼ z₁^(m−j) z₂^j`, stored as `[u₀, …, u_m]`.
#[derive(Clone, Debug, PartialEq)]
pub struct BinaryForm<F> {
    coeffs: Vec<F>,
}

impl<F: Ring> BinaryForm<F> {
    /// Degree is `coeffs.len() - 1`; leading zeros are kept.
    pub fn new(coeffs: Vec<F>) -> Self {
        assert!(!coeffs.is_empty(), "a binary form needs at least one coefficient");
        Self { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Ring::is_zero)
    }

    pub fn scale(&self, c: &F) -> Self {
        Self::new(self.coeffs.iter().map(|u| u.clone() * c).collect())
    }

    pub fn map<G: Ring>(&self, f: impl Fn(&F) -> G) -> BinaryForm<G> {
        BinaryForm::new(self.coeffs.iter().map(f).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = vec![F::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b;
            }
        }
        Self::new(out)
    }

    pub fn eval(&self, z1: &F, z2: &F) -> F {
        let m = self.degree() as u32;
        self.coeffs
            .iter()
            .enumerate()
            .fold(F::zero(), |acc, (j, u)| acc + u.clone() * &z1.pow(m - j as u32) * &z2.pow(j as u32))
    }

    /// `∂/∂z₁`, a form of degree `m − 1`.
    pub fn d_z1(&self) -> Self {
        let m = self.degree();
        if m == 0 {
            return Self::new(vec![F::zero()]);
        }
        Self::new((0..m).map(|j| self.coeffs[j].clone() * &F::from_int((m - j) as i64)).collect())
    }

    /// `∂/∂z₂`, a form of degree `m − 1`.
    pub fn d_z2(&self) -> Self {
        let m = self.degree();
        if m == 0 {
            return Self::new(vec![F::zero()]);
        }
        Self::new((1..=m).map(|j| self.coeffs[j].clone() * &F::from_int(j as i64)).collect())
    }

    /// Number of leading zero coefficients, i.e. the multiplicity of the
    /// root `[1:0]`.
    pub fn order_at_infinity(&self) -> usize {
        self.coeffs.iter().take_while(|u| u.is_zero()).count()
    }
}

impl<F: Field> BinaryForm<F> {
    /// `p(x, 1)` as a univariate polynomial in `x = z₁/z₂`.
    pub fn dehomogenize(&self) -> UniPoly<F> {
        UniPoly::new(self.coeffs.iter().rev().cloned().collect())
    }

    /// Sylvester resultant with respect to the formal degrees.
    pub fn resultant(&self, other: &Self) -> Result<F> {
        if self.is_zero() || other.is_zero() {
            return Err(ExactError::ZeroForm);
        }
        let (m, n) = (self.degree(), other.degree());
        let size = m + n;
        if size == 0 {
            return Ok(F::one());
        }
        let syl = Matrix::from_fn(size, size, |i, j| {
            if i < n {
                j.checked_sub(i).and_then(|k| self.coeffs.get(k)).cloned().unwrap_or_else(F::zero)
            } else {
                j.checked_sub(i - n).and_then(|k| other.coeffs.get(k)).cloned().unwrap_or_else(F::zero)
            }
        });
        syl.det()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rug::Rational;

    fn f(c: &[i64]) -> BinaryForm<Rational> {
        BinaryForm::new(c.iter().map(|&x| Rational::from(x)).collect())
    }

    #[test]
    fn coordinate_forms() {
        assert_eq!(f(&[1, 0]).resultant(&f(&[0, 1])).unwrap(), 1);
        let z1_5 = f(&[1, 0, 0, 0, 0, 0]);
        let z2_5 = f(&[0, 0, 0, 0, 0, 1]);
        assert_eq!(z1_5.resultant(&z2_5).unwrap(), 1);
    }

    #[test]
    fn partials_of_sextic() {
        let p = f(&[1, 0, 0, 0, 0, 0, -1]);
        let r = p.d_z1().resultant(&p.d_z2()).unwrap();
        assert_eq!(r.abs(), Rational::from(6i64.pow(10)));
    }

    #[test]
    fn common_root_iff_zero_resultant() {
        // (z1 - 2 z2)(z1 + z2) and (z1 - 2 z2) z2
        let a = f(&[1, -2]).mul(&f(&[1, 1]));
        let b = f(&[1, -2]).mul(&f(&[0, 1]));
        assert_eq!(a.resultant(&b).unwrap(), 0);
        let c = f(&[1, 3]).mul(&f(&[0, 1]));
        assert_ne!(a.resultant(&c).unwrap(), 0);
        // shared root at infinity
        let d = f(&[0, 1, 1]);
        let e = f(&[0, 2, 5]);
        assert_eq!(d.resultant(&e).unwrap(), 0);
    }

    #[test]
    fn zero_form_is_rejected() {
        assert_eq!(f(&[0, 0]).resultant(&f(&[1, 0])), Err(ExactError::ZeroForm));
    }

    #[test]
    fn dehomogenize_and_infinity_order() {
        let p = f(&[0, 0, 1, -2, 1]);
        assert_eq!(p.order_at_infinity(), 2);
        let u = p.dehomogenize();
        assert_eq!(u.degree(), Some(2));
        assert_eq!(u.eval(&Rational::from(1)), 0);
    }
}
