//! The (2d+1)-dimensional representation of SO(3, ℂ) as harmonic ternary
//! forms and as binary forms of degree 2d.

use icosa_exact::{BinaryForm, Field, IntoQISqrt5, Matrix, MultiPoly, QISqrt5, Rational, Ring};
use rand::Rng;

use crate::error::{CoreError, Result};

/// Largest degree accepted by the harmonic-basis operations.
pub const MAX_DEGREE: u32 = 8;

pub const X: [&str; 3] = ["x1", "x2", "x3"];
pub const Z: [&str; 2] = ["z1", "z2"];

/// The largest exact field in use.
pub type K = QISqrt5;

pub type Vector<F> = [F; 3];

pub fn vector<F: Ring>(v: [i64; 3]) -> Vector<F> {
    v.map(F::from_int)
}

pub fn dot<F: Ring>(a: &Vector<F>, b: &Vector<F>) -> F {
    a[0].clone() * &b[0] + a[1].clone() * &b[1] + a[2].clone() * &b[2]
}

pub fn cross<F: Ring>(a: &Vector<F>, b: &Vector<F>) -> Vector<F> {
    [
        a[1].clone() * &b[2] - a[2].clone() * &b[1],
        a[2].clone() * &b[0] - a[0].clone() * &b[2],
        a[0].clone() * &b[1] - a[1].clone() * &b[0],
    ]
}

pub fn lift<F: IntoQISqrt5>(v: &Vector<F>) -> Vector<K> {
    [v[0].to_qi5(), v[1].to_qi5(), v[2].to_qi5()]
}

/// `(x, a)`.
pub fn linear_form<F: Ring>(a: &Vector<F>) -> MultiPoly<F> {
    let mut p = MultiPoly::zero_in(&X);
    for (i, c) in a.iter().enumerate() {
        let mut e = vec![0; 3];
        e[i] = 1;
        p.add_term(e, c.clone());
    }
    p
}

/// `(x, x)`.
pub fn norm_form<F: Ring>() -> MultiPoly<F> {
    linear_form(&vector::<F>([1, 0, 0])).pow(2)
        + linear_form(&vector::<F>([0, 1, 0])).pow(2)
        + linear_form(&vector::<F>([0, 0, 1])).pow(2)
}

pub fn laplacian<F: Ring>(p: &MultiPoly<F>) -> MultiPoly<F> {
    let mut out = MultiPoly::zero_in(&X);
    for i in 0..3 {
        out = out + p.partial(i).partial(i);
    }
    out
}

/// Exponents of degree `d` in `(x₁, x₂, x₃)`, graded lexicographic with `x₁`
/// first: `x₁³, x₁²x₂, x₁²x₃, x₁x₂², …, x₃³` for `d = 3`.
pub fn monomials(d: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for a in (0..=d).rev() {
        for b in (0..=d - a).rev() {
            out.push(vec![a, b, d - a - b]);
        }
    }
    out
}

/// A homogeneous harmonic polynomial in `(x₁, x₂, x₃)`.
#[derive(Clone)]
pub struct HarmonicForm<F> {
    degree: u32,
    poly: MultiPoly<F>,
}

impl<F: Ring> PartialEq for HarmonicForm<F> {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.poly == other.poly
    }
}

impl<F: Ring> std::fmt::Debug for HarmonicForm<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "HarmonicForm(d={}, {:?})", self.degree, self.poly)
    }
}

impl<F: Ring> HarmonicForm<F> {
    pub fn new(degree: u32, poly: MultiPoly<F>) -> Result<Self> {
        let poly = poly.with_vars(&X)?;
        if poly.terms().any(|(e, _)| e.iter().sum::<u32>() != degree) {
            return Err(CoreError::NotHomogeneous(degree));
        }
        if !laplacian(&poly).is_zero() {
            return Err(CoreError::NotHarmonic);
        }
        Ok(Self { degree, poly })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn poly(&self) -> &MultiPoly<F> {
        &self.poly
    }

    pub fn into_poly(self) -> MultiPoly<F> {
        self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn scale(&self, c: &F) -> Self {
        Self { degree: self.degree, poly: self.poly.scale(c) }
    }

    /// Coefficients in the order of [`monomials`].
    pub fn coefficients(&self) -> Vec<F> {
        monomials(self.degree).iter().map(|e| self.poly.coeff(e)).collect()
    }

    pub fn lift(&self) -> HarmonicForm<K>
    where
        F: IntoQISqrt5,
    {
        HarmonicForm { degree: self.degree, poly: self.poly.map_coeffs(IntoQISqrt5::to_qi5) }
    }
}

/// Homogeneous form from coefficients in [`monomials`] order.
pub fn from_coefficients<F: Ring>(d: u32, coeffs: &[F]) -> Result<MultiPoly<F>> {
    let mons = monomials(d);
    if coeffs.len() != mons.len() {
        return Err(icosa_exact::ExactError::ArityMismatch { expected: mons.len(), found: coeffs.len() }.into());
    }
    Ok(MultiPoly::from_terms(&X, mons.into_iter().zip(coeffs.iter().cloned()))?)
}

fn check_degree(d: u32, min: u32) -> Result<()> {
    if d < min || d > MAX_DEGREE {
        return Err(CoreError::DegreeOutOfRange { found: d, min, max: MAX_DEGREE });
    }
    Ok(())
}

/// A basis of degree-`d` harmonics with coefficients in the base field,
/// read off the kernel of the Laplacian on monomials.
pub fn harmonic_space_basis<F: Field>(d: u32) -> Vec<MultiPoly<F>> {
    let cols = monomials(d);
    if d < 2 {
        return cols.into_iter().map(|e| MultiPoly::monomial(&X, e, F::one())).collect();
    }
    let rows = monomials(d - 2);
    let mut lap = Matrix::<F>::zeros(rows.len(), cols.len());
    for (j, e) in cols.iter().enumerate() {
        let image = laplacian(&MultiPoly::monomial(&X, e.clone(), F::one()));
        for (i, r) in rows.iter().enumerate() {
            lap[(i, j)] = image.coeff(r);
        }
    }
    lap.kernel_basis()
        .into_iter()
        .map(|v| MultiPoly::from_terms(&X, cols.iter().cloned().zip(v)).expect("arity"))
        .collect()
}

/// Bombieri pairing `Σ (α!/d!) f_α g_α`, so that `(f, (x, a)^d) = f(a)`.
pub fn bombieri<F: Field>(f: &MultiPoly<F>, g: &MultiPoly<F>) -> Result<F> {
    let df = f.homogeneous_degree();
    let dg = g.homogeneous_degree();
    let d = match (df, dg) {
        (Some(a), Some(b)) if a != b => return Err(CoreError::DegreeMismatch { left: a, right: b }),
        (Some(a), _) | (None, Some(a)) => a,
        (None, None) => return Ok(F::zero()),
    };
    let fact = |n: u32| (1..=n as u64).fold(Rational::from(1), |acc, k| acc * Rational::from(k));
    let d_fact = fact(d);
    let mut acc = F::zero();
    for (e, c) in f.terms() {
        let other = g.coeff(e);
        if other.is_zero() {
            continue;
        }
        let w = e.iter().fold(Rational::from(1), |acc, &k| acc * fact(k)) / d_fact.clone();
        acc = acc + c.clone() * &other * &F::from_rational(&w);
    }
    Ok(acc)
}

/// Infinitesimal rotation `(u·f)(x) = d/dt f(exp(−tu)x)` at `t = 0`, with
/// `u` acting on vectors by the cross product.
pub fn lie_action<F: Ring>(u: &Vector<F>, f: &MultiPoly<F>) -> MultiPoly<F> {
    let x = [0, 1, 2].map(|i| MultiPoly::<F>::var(&X, i));
    // x × u
    let field = [
        x[1].scale(&u[2]) - x[2].scale(&u[1]),
        x[2].scale(&u[0]) - x[0].scale(&u[2]),
        x[0].scale(&u[1]) - x[1].scale(&u[0]),
    ];
    let mut out = MultiPoly::zero_in(&X);
    for (i, v) in field.iter().enumerate() {
        let d = f.partial(i);
        if !d.is_zero() {
            out = out + &d * v;
        }
    }
    out
}

/// `f_a = (x, a)³ − (3/5)(a, a)(x, a)(x, x)`.
pub fn project_fa<F: Field>(a: &Vector<F>) -> HarmonicForm<F> {
    let l = linear_form(a);
    let corr = F::from_rational(&Rational::from((3, 5))) * &dot(a, a);
    let poly = l.pow(3) - (&l * &norm_form()).scale(&corr);
    HarmonicForm { degree: 3, poly }
}

/// `a(z) = (z₁² − z₂², i(z₁² + z₂²), 2z₁z₂)`.
pub fn null_param() -> Vector<MultiPoly<K>> {
    let z1 = MultiPoly::<K>::var(&Z, 0);
    let z2 = MultiPoly::<K>::var(&Z, 1);
    let s1 = z1.pow(2);
    let s2 = z2.pow(2);
    [&s1 - &s2, (&s1 + &s2).scale(&K::i()), (&z1 * &z2).scale(&K::from(2))]
}

/// `p(z) = f(a(z))`, a binary form of degree `2d`.
pub fn to_binary<F: Ring + IntoQISqrt5>(f: &HarmonicForm<F>) -> BinaryForm<K> {
    binary_of_poly(&f.poly.map_coeffs(IntoQISqrt5::to_qi5), f.degree)
}

fn binary_of_poly(p: &MultiPoly<K>, d: u32) -> BinaryForm<K> {
    let sub = p.substitute(&null_param()).expect("three variables");
    let m = 2 * d;
    BinaryForm::new((0..=m).map(|j| sub.coeff(&[m - j, j])).collect())
}

/// Weight basis `v_{−d}, …, v_d` together with the sl₂ operators in it.
#[derive(Clone, Debug)]
pub struct WeightBasis {
    pub d: u32,
    /// `vectors[k]` has weight `k − d`.
    pub vectors: Vec<HarmonicForm<K>>,
    pub h: Matrix<K>,
    pub n_plus: Matrix<K>,
    pub n_minus: Matrix<K>,
    /// `images[k]`: the coefficient of the single monomial of `to_binary(vectors[k])`.
    images: Vec<K>,
}

/// `h = i·L₃`.
pub fn op_h(f: &MultiPoly<K>) -> MultiPoly<K> {
    lie_action(&vector::<K>([0, 0, 1]), f).scale(&K::i())
}

/// `n⁺ = L₁ + i·L₂`.
pub fn op_n_plus(f: &MultiPoly<K>) -> MultiPoly<K> {
    lie_action(&vector::<K>([1, 0, 0]), f) + lie_action(&vector::<K>([0, 1, 0]), f).scale(&K::i())
}

/// `n⁻ = L₁ − i·L₂`.
pub fn op_n_minus(f: &MultiPoly<K>) -> MultiPoly<K> {
    lie_action(&vector::<K>([1, 0, 0]), f) - lie_action(&vector::<K>([0, 1, 0]), f).scale(&K::i())
}

impl WeightBasis {
    pub fn new(d: u32) -> Result<Self> {
        check_degree(d, 1)?;
        let top = linear_form(&[K::one(), K::i(), K::zero()]).pow(d);
        let mut desc = vec![top];
        for _ in 0..2 * d {
            let next = op_n_minus(desc.last().unwrap());
            desc.push(next);
        }
        desc.reverse();
        let n = (2 * d + 1) as usize;
        let mut images = Vec::with_capacity(n);
        for (k, v) in desc.iter().enumerate() {
            let b = binary_of_poly(v, d);
            let j = k;
            debug_assert!(b.coeffs().iter().enumerate().all(|(i, c)| i == j || c.is_zero()));
            images.push(b.coeffs()[j].clone());
        }
        let vectors: Vec<HarmonicForm<K>> = desc.into_iter().map(|p| HarmonicForm { degree: d, poly: p }).collect();
        let mut basis = Self {
            d,
            vectors,
            h: Matrix::zeros(n, n),
            n_plus: Matrix::zeros(n, n),
            n_minus: Matrix::zeros(n, n),
            images,
        };
        for k in 0..n {
            let v = basis.vectors[k].poly.clone();
            for (mat, image) in [(0, op_h(&v)), (1, op_n_plus(&v)), (2, op_n_minus(&v))] {
                let coords = basis.coordinates_of_poly(&image);
                let target = match mat {
                    0 => &mut basis.h,
                    1 => &mut basis.n_plus,
                    _ => &mut basis.n_minus,
                };
                for (i, c) in coords.into_iter().enumerate() {
                    target[(i, k)] = c;
                }
            }
        }
        Ok(basis)
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    /// Weight of `vectors[k]`.
    pub fn weight(&self, k: usize) -> i32 {
        k as i32 - self.d as i32
    }

    fn coordinates_of_poly(&self, p: &MultiPoly<K>) -> Vec<K> {
        let b = binary_of_poly(p, self.d);
        b.coeffs()
            .iter()
            .zip(&self.images)
            .map(|(c, w)| c.clone() * &w.inv().expect("weight vectors map to nonzero monomials"))
            .collect()
    }

    /// Coordinates of a degree-`d` harmonic in the weight basis.
    pub fn coordinates<F: Ring + IntoQISqrt5>(&self, f: &HarmonicForm<F>) -> Result<Vec<K>> {
        if f.degree != self.d {
            return Err(CoreError::DegreeMismatch { left: f.degree, right: self.d });
        }
        Ok(self.coordinates_of_poly(&f.poly.map_coeffs(IntoQISqrt5::to_qi5)))
    }

    pub fn from_coordinates(&self, coords: &[K]) -> HarmonicForm<K> {
        let mut p = MultiPoly::zero_in(&X);
        for (c, v) in coords.iter().zip(&self.vectors) {
            if !c.is_zero() {
                p = p + v.poly.scale(c);
            }
        }
        HarmonicForm { degree: self.d, poly: p }
    }

    /// Inverse of [`to_binary`].
    pub fn from_binary(&self, p: &BinaryForm<K>) -> Result<HarmonicForm<K>> {
        if p.degree() != 2 * self.d as usize {
            return Err(CoreError::DegreeMismatch { left: p.degree() as u32, right: 2 * self.d });
        }
        let coords: Vec<K> =
            p.coeffs().iter().zip(&self.images).map(|(c, w)| c.clone() * &w.inv().expect("nonzero")).collect();
        Ok(self.from_coordinates(&coords))
    }

    /// Weights carrying a nonzero coordinate of `f`.
    pub fn support<F: Ring + IntoQISqrt5>(&self, f: &HarmonicForm<F>) -> Result<Vec<i32>> {
        Ok(self.coordinates(f)?.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, _)| self.weight(k)).collect())
    }
}

/// The weight basis `v_{−d}, …, v_d`: `v_d = (x₁ + i x₂)^d`, `v_{m−1} = n⁻ v_m`.
pub fn harmonic_basis(d: u32) -> Result<Vec<HarmonicForm<K>>> {
    Ok(WeightBasis::new(d)?.vectors)
}

/// Inverse of [`to_binary`] for a form of even degree `2d`.
pub fn from_binary(p: &BinaryForm<K>) -> Result<HarmonicForm<K>> {
    if p.degree() % 2 == 1 {
        return Err(CoreError::Precondition("binary form of odd degree".into()));
    }
    WeightBasis::new(p.degree() as u32 / 2)?.from_binary(p)
}

/// `(g·f)(x) = f(gᵀx)`, so that `g·f_a = f_{ga}` for orthogonal `g`.
pub fn rotate<F: Ring>(g: &Matrix<F>, f: &MultiPoly<F>) -> MultiPoly<F> {
    let subs: Vec<MultiPoly<F>> =
        (0..3).map(|i| linear_form(&[g[(0, i)].clone(), g[(1, i)].clone(), g[(2, i)].clone()])).collect();
    f.substitute(&subs).expect("three variables")
}

pub fn apply<F: Ring>(g: &Matrix<F>, v: &Vector<F>) -> Vector<F> {
    let w = g.mul_vec(v).expect("3×3");
    [w[0].clone(), w[1].clone(), w[2].clone()]
}

/// Skew matrix `S` with `S·v = s × v`.
pub fn skew<F: Ring>(s: &Vector<F>) -> Matrix<F> {
    let z = F::zero();
    Matrix::from_rows(vec![
        vec![z.clone(), -s[2].clone(), s[1].clone()],
        vec![s[2].clone(), z.clone(), -s[0].clone()],
        vec![-s[1].clone(), s[0].clone(), z],
    ])
    .expect("square")
}

/// Exact Cayley rotation `(I + S)(I − S)⁻¹`.
pub fn cayley_rotation<F: Field>(s: &Vector<F>) -> Result<Matrix<F>> {
    let id = Matrix::<F>::identity(3);
    let sm = skew(s);
    let plus = Matrix::from_fn(3, 3, |i, j| id[(i, j)].clone() + &sm[(i, j)]);
    let minus = Matrix::from_fn(3, 3, |i, j| id[(i, j)].clone() - &sm[(i, j)]);
    let inv = minus.inverse().map_err(|_| CoreError::ChartSingularity)?;
    Ok(plus.try_mul(&inv)?)
}

/// A random harmonic form with small integer coordinates in the rational
/// Laplacian-kernel basis.
pub fn random_harmonic<R: Rng>(d: u32, rng: &mut R) -> HarmonicForm<Rational> {
    loop {
        let mut p = MultiPoly::zero_in(&X);
        for b in harmonic_space_basis::<Rational>(d) {
            let c = Rational::from(rng.gen_range(-9i64..=9));
            p = p + b.scale(&c);
        }
        if !p.is_zero() {
            return HarmonicForm { degree: d, poly: p };
        }
    }
}

/// A random rational vector with entries in `-9..=9`, nonzero.
pub fn random_vector<R: Rng>(rng: &mut R) -> Vector<Rational> {
    loop {
        let v = [0; 3].map(|_| Rational::from(rng.gen_range(-9i64..=9)));
        if v.iter().any(|c| !Ring::is_zero(c)) {
            return v;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use icosa_exact::QSqrt5;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn q(n: i64) -> Rational {
        Rational::from(n)
    }

    #[test]
    fn degree_one_basis() {
        let b = harmonic_basis(1).unwrap();
        assert_eq!(b.len(), 3);
        assert_eq!(b[2].poly(), &linear_form(&[K::one(), K::i(), K::zero()]));
        // n⁻(x₁ + i x₂) is a multiple of x₃
        assert_eq!(b[1].poly().terms().count(), 1);
        assert!(!b[1].poly().coeff(&[0, 0, 1]).is_zero());
    }

    #[test]
    fn cubic_basis_is_harmonic_and_weight_zero_is_axial() {
        let b = harmonic_basis(3).unwrap();
        assert_eq!(b.len(), 7);
        for v in &b {
            assert!(laplacian(v.poly()).is_zero());
        }
        let axial = project_fa(&vector::<K>([0, 0, 1]));
        let v0 = b[3].poly();
        let ratio = v0.coeff(&[0, 0, 3]) * &axial.poly().coeff(&[0, 0, 3]).inv().unwrap();
        assert_eq!(v0, &axial.poly().scale(&ratio));
    }

    #[test]
    fn bombieri_examples() {
        let x1c = MultiPoly::<Rational>::monomial(&X, vec![3, 0, 0], q(1));
        let l = linear_form(&vector::<Rational>([1, 2, 3])).pow(3);
        assert_eq!(bombieri(&x1c, &l).unwrap(), 1);
        assert_eq!(bombieri(&x1c, &x1c).unwrap(), 1);
        let quad = norm_form::<Rational>();
        assert!(matches!(bombieri(&x1c, &quad), Err(CoreError::DegreeMismatch { .. })));
    }

    #[test]
    fn lie_action_examples() {
        let e3 = vector::<Rational>([0, 0, 1]);
        assert!(lie_action(&e3, project_fa(&e3).poly()).is_zero());
        let u = vector::<Rational>([2, -1, 5]);
        assert!(lie_action(&u, &norm_form()).is_zero());
        // on linear forms, u acts by c ↦ u × c
        let c = vector::<Rational>([1, 4, -2]);
        assert_eq!(lie_action(&u, &linear_form(&c)), linear_form(&cross(&u, &c)));
    }

    #[test]
    fn fa_for_axis_and_null_vector() {
        let f = project_fa(&vector::<Rational>([0, 0, 1]));
        let x3 = linear_form(&vector::<Rational>([0, 0, 1]));
        let expected = x3.pow(3) - (&x3 * &norm_form()).scale(&Rational::from((3, 5)));
        assert_eq!(f.poly(), &expected);
        let a = [K::one(), K::i(), K::zero()];
        assert_eq!(project_fa(&a).poly(), &linear_form(&a).pow(3));
    }

    #[test]
    fn null_parametrization() {
        let a = null_param();
        assert!(dot(&a, &a).is_zero());
        let at = |z1: i64, z2: i64| {
            let pt = [K::from(z1), K::from(z2)];
            a.clone().map(|c| c.evaluate(&pt).unwrap())
        };
        assert_eq!(at(1, 0), [K::one(), K::i(), K::zero()]);
        assert_eq!(at(1, 1), [K::zero(), K::i() * &K::from(2), K::from(2)]);
    }

    #[test]
    fn axial_cubic_maps_to_z1_cubed_z2_cubed() {
        let p = to_binary(&project_fa(&vector::<Rational>([0, 0, 1])));
        let mut expected = vec![K::zero(); 7];
        expected[3] = K::from(8);
        assert_eq!(p.coeffs(), expected.as_slice());
        let back = from_binary(&p).unwrap();
        assert_eq!(back, project_fa(&vector::<Rational>([0, 0, 1])).lift());
    }

    #[test]
    fn null_cube_maps_to_sixth_power() {
        let b = [K::one(), K::i(), K::zero()];
        let f = HarmonicForm::new(3, linear_form(&b).pow(3)).unwrap();
        let p = to_binary(&f);
        let nonzero: Vec<usize> = (0..7).filter(|&j| !p.coeffs()[j].is_zero()).collect();
        assert_eq!(nonzero.len(), 1);
    }

    #[test]
    fn binary_map_has_full_rank() {
        for d in 1..=MAX_DEGREE {
            let rows: Vec<Vec<K>> = harmonic_space_basis::<Rational>(d)
                .iter()
                .map(|p| to_binary(&HarmonicForm::new(d, p.clone()).unwrap()).coeffs().to_vec())
                .collect();
            assert_eq!(icosa_exact::rank_of(&rows), (2 * d + 1) as usize);
        }
    }

    #[test]
    fn weight_operators_satisfy_sl2_relations() {
        for d in 1..=4 {
            let wb = WeightBasis::new(d).unwrap();
            let comm = |a: &Matrix<K>, b: &Matrix<K>| {
                let ab = a.try_mul(b).unwrap();
                let ba = b.try_mul(a).unwrap();
                Matrix::from_fn(ab.rows(), ab.cols(), |i, j| ab[(i, j)].clone() - &ba[(i, j)])
            };
            assert_eq!(comm(&wb.h, &wb.n_plus), wb.n_plus);
            assert_eq!(comm(&wb.h, &wb.n_minus), wb.n_minus.map(|c| -c.clone()));
            for k in 0..wb.dim() {
                for i in 0..wb.dim() {
                    let expect = if i == k { K::from(wb.weight(k) as i64) } else { K::zero() };
                    assert_eq!(wb.h[(i, k)], expect);
                }
            }
            for k in 0..wb.dim() - 1 {
                assert!(!wb.n_plus[(k + 1, k)].is_zero());
            }
        }
    }

    #[test]
    fn weight_vectors_map_to_monomials() {
        let wb = WeightBasis::new(3).unwrap();
        for (k, v) in wb.vectors.iter().enumerate() {
            let b = to_binary(v);
            for (j, c) in b.coeffs().iter().enumerate() {
                assert_eq!(c.is_zero(), j != k);
            }
            assert_eq!(wb.support(v).unwrap(), vec![wb.weight(k)]);
        }
    }

    #[test]
    fn cayley_examples() {
        let g = cayley_rotation(&vector::<Rational>([0, 0, 0])).unwrap();
        assert_eq!(g, Matrix::identity(3));
        let g = cayley_rotation(&vector::<Rational>([1, 0, 0])).unwrap();
        assert_eq!(g.transpose().try_mul(&g).unwrap(), Matrix::identity(3));
        assert_eq!(g.det().unwrap(), 1);
        assert_eq!(g[(1, 1)], 0);
        let s = [K::i(), K::zero(), K::zero()];
        assert_eq!(cayley_rotation(&s), Err(CoreError::ChartSingularity));
    }

    #[test]
    fn rotation_moves_fa_to_rotated_axis() {
        let g = cayley_rotation(&[QSqrt5::from(1), QSqrt5::phi(), QSqrt5::from(-2)]).unwrap();
        let a = [QSqrt5::from(0), QSqrt5::from(1), QSqrt5::phi()];
        assert_eq!(rotate(&g, project_fa(&a).poly()), *project_fa(&apply(&g, &a)).poly());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn pairing_reproduces_evaluation(seed in any::<u64>()) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let f = random_harmonic(3, &mut rng);
            let a = random_vector(&mut rng);
            prop_assert_eq!(bombieri(f.poly(), project_fa(&a).poly()).unwrap(), f.poly().evaluate(&a).unwrap());
            prop_assert!(laplacian(project_fa(&a).poly()).is_zero());
        }

        #[test]
        fn lie_action_is_skew_adjoint(seed in any::<u64>(), d in 1u32..5) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let f = random_harmonic(d, &mut rng);
            let g = random_harmonic(d, &mut rng);
            let u = random_vector(&mut rng);
            let lhs = bombieri(&lie_action(&u, f.poly()), g.poly()).unwrap();
            let rhs = bombieri(f.poly(), &lie_action(&u, g.poly())).unwrap();
            prop_assert_eq!(lhs, -rhs);
        }

        #[test]
        fn lie_action_on_fa_matches_closed_form(seed in any::<u64>()) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let u = random_vector(&mut rng);
            let a = random_vector(&mut rng);
            let xa = linear_form(&a);
            let bracket = linear_form(&cross(&u, &a));
            let inner = xa.pow(2) - norm_form::<Rational>().scale(&(dot(&a, &a) * Rational::from((1, 5))));
            let expected = (&bracket * &inner).scale(&Rational::from(3));
            prop_assert_eq!(lie_action(&u, project_fa(&a).poly()), expected);
        }

        #[test]
        fn binary_round_trip(seed in any::<u64>(), d in 1u32..7) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let coeffs: Vec<K> = (0..=2 * d)
                .map(|_| K::new(QSqrt5::from(rng.gen_range(-5i64..=5)), QSqrt5::from(rng.gen_range(-5i64..=5))))
                .collect();
            let p = BinaryForm::new(coeffs);
            let f = from_binary(&p).unwrap();
            prop_assert!(laplacian(f.poly()).is_zero());
            prop_assert_eq!(to_binary(&f), p);
        }

        #[test]
        fn binary_map_intertwines_rotations(seed in any::<u64>()) {
            // h, n± act on binary forms by the standard sl₂ derivations.
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let f = random_harmonic(3, &mut rng).lift();
            let wb = WeightBasis::new(3).unwrap();
            let coords = wb.coordinates(&f).unwrap();
            let hf = HarmonicForm::new(3, op_h(f.poly())).unwrap();
            let via_matrix = wb.h.mul_vec(&coords).unwrap();
            prop_assert_eq!(wb.coordinates(&hf).unwrap(), via_matrix);
            let p = to_binary(&f);
            let ph = to_binary(&hf);
            // h acts on z₁^(6−j) z₂^j by the scalar j − 3
            for j in 0..7 {
                prop_assert_eq!(ph.coeffs()[j].clone(), p.coeffs()[j].clone() * &K::from(j as i64 - 3));
            }
        }
    }
}
