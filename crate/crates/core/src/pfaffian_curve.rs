//! The net of skew forms `ω_x` on `W = f^⊥` and its Pfaffian plane curve.

use std::ops::{Add, Mul, Sub};

use icosa_exact::{pfaffian, Field, Integer, Matrix, MultiPoly, Rational, Ring, SkewMatrix};

use crate::error::{CoreError, Result};
use crate::so3::{bombieri, harmonic_space_basis, lie_action, monomials, vector, HarmonicForm, X};

pub const MAX_NET_DEGREE: u32 = 5;

/// `W = f^⊥` with the restrictions of `ω_{e₁}, ω_{e₂}, ω_{e₃}`.
#[derive(Clone, Debug)]
pub struct SkewFormNet<F: Ring> {
    pub d: u32,
    pub w_basis: Vec<MultiPoly<F>>,
    pub omegas: [SkewMatrix<F>; 3],
}

/// `Pf(x₁ω₁ + x₂ω₂ + x₃ω₃)`.
#[derive(Clone, Debug, PartialEq)]
pub struct PfaffianCurve<F: Ring> {
    pub poly: MultiPoly<F>,
}

pub fn skew_net<F: Field>(f: &HarmonicForm<F>) -> Result<SkewFormNet<F>> {
    let d = f.degree();
    if f.is_zero() {
        return Err(CoreError::ZeroInput);
    }
    if d == 0 || d > MAX_NET_DEGREE {
        return Err(CoreError::DegreeOutOfRange { found: d, min: 1, max: MAX_NET_DEGREE });
    }
    let basis = harmonic_space_basis::<F>(d);
    let row = basis.iter().map(|b| bombieri(f.poly(), b)).collect::<Result<Vec<_>>>()?;
    let kernel = Matrix::from_rows(vec![row])?.kernel_basis();
    let w_basis: Vec<MultiPoly<F>> = kernel
        .iter()
        .map(|c| c.iter().zip(&basis).fold(MultiPoly::zero_in(&X), |acc, (ck, bk)| acc + bk.scale(ck)))
        .collect();
    let omegas = [0, 1, 2].map(|k| {
        let mut e = [0i64; 3];
        e[k] = 1;
        let x = vector::<F>(e);
        let moved: Vec<MultiPoly<F>> = w_basis.iter().map(|w| lie_action(&x, w)).collect();
        SkewMatrix::from_fn(w_basis.len(), |i, j| bombieri(&moved[i], &w_basis[j]).expect("equal degrees"))
    });
    Ok(SkewFormNet { d, w_basis, omegas })
}

pub fn pfaffian_curve<F: Field>(net: &SkewFormNet<F>) -> Result<PfaffianCurve<F>> {
    let xs: Vec<MultiPoly<F>> = (0..3).map(|i| MultiPoly::var(&X, i)).collect();
    let n = net.w_basis.len();
    let symbolic = SkewMatrix::from_fn(n, |i, j| {
        (0..3).fold(MultiPoly::zero_in(&X), |acc, k| acc + xs[k].scale(&net.omegas[k].get(i, j)))
    });
    let poly = pfaffian(&symbolic)?;
    Ok(PfaffianCurve { poly })
}

/// `Pf = λ·f`, with the number of monomials where the ratio differs from λ.
#[derive(Clone, Debug, PartialEq)]
pub struct Proportionality<F> {
    pub lambda: F,
    pub mismatched: usize,
}

impl<F> Proportionality<F> {
    pub fn holds(&self) -> bool {
        self.mismatched == 0
    }
}

pub fn proportionality_check<F: Field>(f: &HarmonicForm<F>) -> Result<Proportionality<F>> {
    if f.degree() > 4 {
        return Err(CoreError::DegreeOutOfRange { found: f.degree(), min: 1, max: 4 });
    }
    let pf = pfaffian_curve(&skew_net(f)?)?.poly;
    if pf.is_zero() {
        return Err(CoreError::PfaffianVanishes);
    }
    let mons = monomials(f.degree());
    let pivot = mons.iter().find(|e| !f.poly().coeff(e).is_zero()).expect("nonzero form");
    let lambda = pf.coeff(pivot).checked_div(&f.poly().coeff(pivot)).expect("nonzero pivot");
    let mismatched = mons.iter().filter(|e| pf.coeff(e) != f.poly().coeff(e) * &lambda).count();
    Ok(Proportionality { lambda, mismatched })
}

/// An element of `Q ⊕ Qx ⊕ Qy ⊕ Q·xy` with `x² = 22y`, `y² = 0`.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct Class {
    pub one: Rational,
    pub x: Rational,
    pub y: Rational,
    pub xy: Rational,
}

impl Class {
    pub fn x() -> Self {
        Self { x: Rational::from(1), ..Self::default() }
    }

    pub fn y() -> Self {
        Self { y: Rational::from(1), ..Self::default() }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self { one: self.one.clone() * c, x: self.x.clone() * c, y: self.y.clone() * c, xy: self.xy.clone() * c }
    }

    /// Top-degree evaluation `xy ↦ 1`.
    pub fn degree(&self) -> Rational {
        self.xy.clone()
    }
}

impl Add for &Class {
    type Output = Class;
    fn add(self, o: &Class) -> Class {
        Class {
            one: self.one.clone() + &o.one,
            x: self.x.clone() + &o.x,
            y: self.y.clone() + &o.y,
            xy: self.xy.clone() + &o.xy,
        }
    }
}

impl Sub for &Class {
    type Output = Class;
    fn sub(self, o: &Class) -> Class {
        self + &o.scale(&Rational::from(-1))
    }
}

impl Mul for &Class {
    type Output = Class;
    fn mul(self, o: &Class) -> Class {
        let r = |a: &Rational, b: &Rational| a.clone() * b;
        Class {
            one: r(&self.one, &o.one),
            x: r(&self.one, &o.x) + r(&self.x, &o.one),
            y: r(&self.one, &o.y) + r(&self.y, &o.one) + r(&self.x, &o.x) * Rational::from(22),
            xy: r(&self.one, &o.xy) + r(&self.xy, &o.one) + r(&self.x, &o.y) + r(&self.y, &o.x),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct MuConstants {
    pub c1_cubed: Rational,
    pub c1_c2: Rational,
    pub c3: Rational,
    pub dual_c2: Class,
    pub dual_c3: Rational,
    pub k_roots: Vec<Integer>,
    pub selected_k: Integer,
}

/// Chern numbers with `c₁ = x`, `c₂ = 24y`, `c₃ = 4xy`, the dual classes
/// `c₂(E*) = c₁² − ½c₂`, `c₃(E*) = (c₃ + 4c₁³ − 3c₁c₂)/10`, and the integer
/// roots of `22 = 2k(k − 10)`.
pub fn mu_cohomology_constants() -> MuConstants {
    let c1 = Class::x();
    let c2 = Class::y().scale(&Rational::from(24));
    let c3 = (&Class::x() * &Class::y()).scale(&Rational::from(4));
    let c1_cubed = (&(&c1 * &c1) * &c1).degree();
    let c1_c2 = (&c1 * &c2).degree();
    let dual_c2 = &(&c1 * &c1) - &c2.scale(&Rational::from((1, 2)));
    let dual_c3 =
        (c3.degree() + c1_cubed.clone() * Rational::from(4) - c1_c2.clone() * Rational::from(3)) / Rational::from(10);
    // 2k² − 20k − 22 = 0
    let (a, b, c) = (Integer::from(2), Integer::from(-20), Integer::from(-22));
    let disc = b.clone() * &b - Integer::from(4) * &a * &c;
    let root = disc.clone().sqrt();
    let mut k_roots = Vec::new();
    if root.clone() * &root == disc {
        for s in [-1, 1] {
            let num: Integer = -b.clone() + root.clone() * s;
            let den = Integer::from(2) * &a;
            if num.is_divisible(&den) {
                k_roots.push(num / den);
            }
        }
    }
    k_roots.sort();
    let selected_k = k_roots.iter().find(|k| **k < 0).cloned().unwrap_or_default();
    MuConstants { c1_cubed, c1_c2, c3: c3.degree(), dual_c2, dual_c3, k_roots, selected_k }
}
