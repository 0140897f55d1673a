//! Divisor classes on the cubic surface, as the blow-up of the plane in six
//! points: the lattice `ℤH ⊕ ℤE₁ ⊕ … ⊕ ℤE₆` with form `diag(1, −1, …, −1)`.

use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{CoreError, Result};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct PicardClass {
    pub h: i64,
    pub e: [i64; 6],
}

impl PicardClass {
    pub const fn new(h: i64, e: [i64; 6]) -> Self {
        Self { h, e }
    }

    pub const fn hyperplane() -> Self {
        Self::new(1, [0; 6])
    }

    pub fn exceptional(i: usize) -> Self {
        let mut e = [0; 6];
        e[i] = 1;
        Self::new(0, e)
    }

    /// `ΣEᵢ`.
    pub const fn exceptional_sum() -> Self {
        Self::new(0, [1; 6])
    }

    pub fn intersect(&self, other: &Self) -> i64 {
        self.h * other.h - self.e.iter().zip(&other.e).map(|(a, b)| a * b).sum::<i64>()
    }

    pub fn self_intersection(&self) -> i64 {
        self.intersect(self)
    }

    /// Degree in the anticanonical embedding, `D·(−K)`.
    pub fn degree(&self) -> i64 {
        self.intersect(&-canonical())
    }
}

impl Add for PicardClass {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.h + o.h, std::array::from_fn(|i| self.e[i] + o.e[i]))
    }
}

impl Sub for PicardClass {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + -o
    }
}

impl Neg for PicardClass {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.h, self.e.map(|x| -x))
    }
}

impl Mul<PicardClass> for i64 {
    type Output = PicardClass;
    fn mul(self, c: PicardClass) -> PicardClass {
        PicardClass::new(self * c.h, c.e.map(|x| self * x))
    }
}

pub fn picard_intersect(a: &PicardClass, b: &PicardClass) -> i64 {
    a.intersect(b)
}

/// `K_S = −3H + ΣEᵢ`.
pub fn canonical() -> PicardClass {
    PicardClass::exceptional_sum() - 3 * PicardClass::hyperplane()
}

/// The named classes: `H`, `E1..E6`, `K_S`, `H~ = 5H − 2ΣE`,
/// `E~i = 2H − ΣE + Ei`, `R = 2H`, `R~ = 10H − 4ΣE` and `T = −10K_S`.
pub fn known_classes() -> Vec<(String, PicardClass)> {
    let h = PicardClass::hyperplane();
    let sum = PicardClass::exceptional_sum();
    let mut out = vec![("H".to_string(), h)];
    out.extend((0..6).map(|i| (format!("E{}", i + 1), PicardClass::exceptional(i))));
    out.push(("K_S".into(), canonical()));
    out.push(("H~".into(), 5 * h - 2 * sum));
    out.extend((0..6).map(|i| (format!("E~{}", i + 1), 2 * h - sum + PicardClass::exceptional(i))));
    out.push(("R".into(), 2 * h));
    out.push(("R~".into(), 10 * h - 4 * sum));
    out.push(("T".into(), -10 * canonical()));
    out
}

pub fn known_class(name: &str) -> Option<PicardClass> {
    known_classes().into_iter().find(|(n, _)| n == name).map(|(_, c)| c)
}

/// Degree `2g − 2 + 2n` of the tangent developable of a curve of genus `g`
/// and degree `n`.
pub fn developable_degree(g: u32, n: u32) -> Result<i64> {
    if n < 1 {
        return Err(CoreError::Precondition("curve degree must be positive".into()));
    }
    Ok(2 * g as i64 - 2 + 2 * n as i64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn k(name: &str) -> PicardClass {
        known_class(name).unwrap()
    }

    #[test]
    fn conic_classes() {
        let r = k("R");
        let rt = k("R~");
        let minus_k = -k("K_S");
        assert_eq!(r.self_intersection(), 4);
        assert_eq!(r.intersect(&minus_k), 6);
        assert_eq!(rt.self_intersection(), 4);
        assert_eq!(rt.intersect(&minus_k), 6);
        assert_eq!(rt, 2 * k("H~"));
        assert_eq!(r + rt, -4 * k("K_S"));
    }

    #[test]
    fn transformed_basis() {
        let tilde_sum = (1..=6).fold(PicardClass::default(), |acc, i| acc + k(&format!("E~{i}")));
        assert_eq!(3 * k("H~") - tilde_sum, -k("K_S"));
        assert_eq!(k("H~").self_intersection(), 1);
        for i in 1..=6 {
            let ei = k(&format!("E~{i}"));
            assert_eq!(ei.self_intersection(), -1);
            assert_eq!(ei.intersect(&k("H~")), 0);
        }
        assert_eq!(k("T"), PicardClass::new(30, [-10; 6]));
        assert_eq!(canonical().self_intersection(), 3);
    }

    #[test]
    fn developable() {
        assert_eq!(developable_degree(0, 6).unwrap(), 10);
        assert_eq!(developable_degree(1, 3).unwrap(), 6);
        assert_eq!(developable_degree(0, 1).unwrap(), 0);
        assert!(developable_degree(2, 0).is_err());
    }

    fn class() -> impl Strategy<Value = PicardClass> {
        (-20i64..20, prop::array::uniform6(-20i64..20)).prop_map(|(h, e)| PicardClass::new(h, e))
    }

    proptest! {
        #[test]
        fn form_is_symmetric_bilinear(a in class(), b in class(), c in class(), n in -5i64..5) {
            prop_assert_eq!(a.intersect(&b), b.intersect(&a));
            prop_assert_eq!((a + b).intersect(&c), a.intersect(&c) + b.intersect(&c));
            prop_assert_eq!((n * a).intersect(&b), n * a.intersect(&b));
        }
    }
}
