//! Invariants of binary sextics and the classification of harmonic cubics
//! by the number of icosahedral sets on them.

use icosa_exact::{
    complex_roots, exact_roots, BigComplex, BinaryForm, Field, Integer, IntoQISqrt5, Rational, Ring, Roots,
};

use crate::error::{CoreError, Result};
use crate::so3::{monomials, to_binary, HarmonicForm, K};

/// A binary form, either exact over `Q(i, √5)` or numeric. Coefficients are
/// `[u₀, …, u_m]` for `Σ uⱼ z₁^(m−j) z₂^j`.
#[derive(Clone, Debug)]
pub enum Sextic {
    Exact(BinaryForm<K>),
    Numeric(Vec<BigComplex>),
}

impl From<BinaryForm<K>> for Sextic {
    fn from(p: BinaryForm<K>) -> Self {
        Sextic::Exact(p)
    }
}

impl Sextic {
    pub fn degree(&self) -> usize {
        match self {
            Sextic::Exact(p) => p.degree(),
            Sextic::Numeric(c) => c.len().saturating_sub(1),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Sextic::Exact(p) => p.is_zero(),
            Sextic::Numeric(c) => c.iter().all(BigComplex::is_zero),
        }
    }

    fn complex_coeffs(&self, prec: u32) -> Vec<BigComplex> {
        match self {
            Sextic::Exact(p) => icosa_exact::roots::embed_coeffs(p.coeffs(), prec),
            Sextic::Numeric(c) => c.iter().map(|z| z.with_prec(prec)).collect(),
        }
    }
}

/// `p(z) = f(a(z))` for a harmonic cubic `f`.
pub fn cubic_to_sextic<F: Ring + IntoQISqrt5>(f: &HarmonicForm<F>) -> Result<BinaryForm<K>> {
    if f.degree() != 3 {
        return Err(CoreError::DegreeMismatch { left: f.degree(), right: 3 });
    }
    Ok(to_binary(f))
}

/// Sextic of a numeric cubic given by its coefficients in the order of
/// `monomials(3)`.
pub fn numeric_cubic_to_sextic(coeffs: &[num_complex::Complex64; 10], prec: u32) -> Vec<BigComplex> {
    let big: Vec<BigComplex> = coeffs.iter().map(|u| BigComplex::from_f64(u.re, u.im, prec)).collect();
    sextic_of_cubic_coeffs(&big, prec)
}

/// [`numeric_cubic_to_sextic`] for coefficients already at precision `prec`.
pub fn sextic_of_cubic_coeffs(coeffs: &[BigComplex], prec: u32) -> Vec<BigComplex> {
    let zero = || BigComplex::zero(prec);
    let c = |re: f64, im: f64| BigComplex::from_f64(re, im, prec);
    let mul = |a: &[BigComplex], b: &[BigComplex]| {
        let mut out = vec![zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] = &out[i + j] + &(x * y);
            }
        }
        out
    };
    // a(z) = (z₁² − z₂², i(z₁² + z₂²), 2z₁z₂)
    let a = [
        vec![c(1.0, 0.0), zero(), c(-1.0, 0.0)],
        vec![c(0.0, 1.0), zero(), c(0.0, 1.0)],
        vec![zero(), c(2.0, 0.0), zero()],
    ];
    let mut out = vec![zero(); 7];
    for (e, u) in monomials(3).iter().zip(coeffs) {
        let mut term = vec![u.with_prec(prec)];
        for (k, &p) in e.iter().enumerate() {
            for _ in 0..p {
                term = mul(&term, &a[k]);
            }
        }
        for (o, t) in out.iter_mut().zip(&term) {
            *o = &*o + t;
        }
    }
    out
}

/// `Res(∂p/∂z₁, ∂p/∂z₂) = (−1)^(n(n−1)/2) n^(n−2) Δ(p)` for a form of degree `n`.
fn resultant_constant(n: usize) -> Rational {
    let sign = if (n * (n - 1) / 2).is_multiple_of(2) { 1 } else { -1 };
    Rational::from(Integer::from(Integer::u_pow_u(n as u32, n as u32 - 2)) * sign)
}

/// Exact discriminant `u₀^(2n−2) ∏(xᵢ − xⱼ)²`, computed as a resultant so that
/// roots at infinity need no special treatment.
pub fn discriminant(p: &BinaryForm<K>) -> Result<K> {
    if p.is_zero() {
        return Err(CoreError::ZeroInput);
    }
    let n = p.degree();
    if n < 2 {
        return Err(CoreError::DegreeOutOfRange { found: n as u32, min: 2, max: u32::MAX });
    }
    let (d1, d2) = (p.d_z1(), p.d_z2());
    if d1.is_zero() || d2.is_zero() {
        // p is a multiple of z₁ⁿ or z₂ⁿ
        return Ok(K::zero());
    }
    let res = d1.resultant(&d2)?;
    let c = K::from_rational(&resultant_constant(n).recip());
    Ok(res * &c)
}

/// Roots `[xᵢ : yᵢ]` listed with multiplicity, with `p = κ ∏(yᵢz₁ − xᵢz₂)`.
#[derive(Clone, Debug)]
pub struct ProjectiveRoots {
    pub points: Vec<(BigComplex, BigComplex)>,
    pub kappa: BigComplex,
    /// Distinct roots with their multiplicities.
    pub groups: Vec<((BigComplex, BigComplex), usize)>,
    pub precision: u32,
}

impl ProjectiveRoots {
    pub fn partition(&self) -> Vec<usize> {
        let mut p: Vec<usize> = self.groups.iter().map(|(_, m)| *m).collect();
        p.sort_by(|a, b| b.cmp(a));
        p
    }

    fn bracket(&self, i: usize, j: usize) -> BigComplex {
        let (xi, yi) = &self.points[i];
        let (xj, yj) = &self.points[j];
        &(xi * yj) - &(xj * yi)
    }
}

fn leading_zero_count(coeffs: &[BigComplex], exact: Option<usize>) -> usize {
    if let Some(k) = exact {
        return k;
    }
    let scale = coeffs.iter().map(|c| c.abs().to_f64()).fold(0.0, f64::max);
    let prec = coeffs.first().map_or(53, BigComplex::prec);
    let tol = scale * 2f64.powi(-(prec as i32) / 2);
    coeffs.iter().take_while(|c| c.abs().to_f64() <= tol).count()
}

pub fn projective_roots(p: &Sextic, prec: u32) -> Result<ProjectiveRoots> {
    if p.is_zero() {
        return Err(CoreError::ZeroInput);
    }
    let coeffs = p.complex_coeffs(prec);
    let k = leading_zero_count(
        &coeffs,
        match p {
            Sextic::Exact(b) => Some(b.order_at_infinity()),
            Sextic::Numeric(_) => None,
        },
    );
    let finite = match p {
        _ if k + 1 == coeffs.len() => {
            Roots { roots: Vec::new(), precision: prec, min_separation: None, log2_residual: 0.0 }
        }
        Sextic::Exact(b) => exact_roots(&b.dehomogenize(), prec)?,
        Sextic::Numeric(_) => {
            let low_to_high: Vec<BigComplex> = coeffs[k..].iter().rev().cloned().collect();
            complex_roots(&low_to_high, prec)?
        }
    };
    let work = finite.precision.max(prec);
    let mut kappa = coeffs[k].with_prec(work);
    if k % 2 == 1 {
        kappa = -kappa;
    }
    let one = BigComplex::one(work);
    let zero = BigComplex::zero(work);
    let mut groups = Vec::new();
    if k > 0 {
        groups.push(((one.clone(), zero.clone()), k));
    }
    for r in &finite.roots {
        groups.push(((r.value.with_prec(work), one.clone()), r.multiplicity));
    }
    let points = groups.iter().flat_map(|(pt, m)| std::iter::repeat_n(pt.clone(), *m)).collect();
    Ok(ProjectiveRoots { points, kappa, groups, precision: work })
}

/// `Δ = κ^(2n−2) ∏_{i<j} (ij)²`.
pub fn discriminant_from_roots(p: &Sextic, prec: u32) -> Result<BigComplex> {
    let r = projective_roots(p, prec)?;
    let n = r.points.len();
    let mut acc = r.kappa.powu(2 * n as u32 - 2);
    for i in 0..n {
        for j in i + 1..n {
            acc = &acc * &r.bracket(i, j).powu(2);
        }
    }
    Ok(acc)
}

/// The 15 perfect matchings of `{0, …, 5}`.
pub fn matchings() -> Vec<[(usize, usize); 3]> {
    let mut out = Vec::new();
    for a in 1..6 {
        let rest: Vec<usize> = (1..6).filter(|&x| x != a).collect();
        for b in 1..4 {
            let others: Vec<usize> = rest[1..].iter().copied().filter(|&x| x != rest[b]).collect();
            out.push([(0, a), (rest[0], rest[b]), (others[0], others[1])]);
        }
    }
    out
}

/// The 10 splittings of `{0, …, 5}` into two unordered triples.
pub fn triple_splits() -> Vec<([usize; 3], [usize; 3])> {
    let mut out = Vec::new();
    for a in 1..6 {
        for b in a + 1..6 {
            let rest: Vec<usize> = (1..6).filter(|&x| x != a && x != b).collect();
            out.push(([0, a, b], [rest[0], rest[1], rest[2]]));
        }
    }
    out
}

const PERMS3: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

#[derive(Clone, Debug)]
pub struct Abc {
    pub a: BigComplex,
    pub b: BigComplex,
    pub c: BigComplex,
}

fn abc_from_roots(r: &ProjectiveRoots) -> Result<Abc> {
    if r.points.len() != 6 {
        return Err(CoreError::DegreeMismatch { left: r.points.len() as u32, right: 6 });
    }
    let prec = r.precision;
    let sq: Vec<Vec<BigComplex>> = (0..6).map(|i| (0..6).map(|j| r.bracket(i, j).powu(2)).collect()).collect();
    let prod = |pairs: &[(usize, usize)]| pairs.iter().fold(BigComplex::one(prec), |acc, &(i, j)| &acc * &sq[i][j]);
    let mut a = BigComplex::zero(prec);
    for m in matchings() {
        a = &a + &prod(&m);
    }
    let mut b = BigComplex::zero(prec);
    let mut c = BigComplex::zero(prec);
    for (s, t) in triple_splits() {
        let tri = |u: [usize; 3]| [(u[0], u[1]), (u[1], u[2]), (u[2], u[0])];
        let base = &prod(&tri(s)) * &prod(&tri(t));
        b = &b + &base;
        for p in PERMS3 {
            let cross = [(s[0], t[p[0]]), (s[1], t[p[1]]), (s[2], t[p[2]])];
            c = &c + &(&base * &prod(&cross));
        }
    }
    let k2 = r.kappa.powu(2);
    Ok(Abc { a: &a * &k2, b: &b * &k2.powu(2), c: &c * &k2.powu(3) })
}

/// `A`, `B`, `C` as sums over 15, 10 and 60 root configurations.
pub fn igusa_abc(p: &Sextic, prec: u32) -> Result<Abc> {
    abc_from_roots(&projective_roots(p, prec)?)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DeltaMethod {
    Resultant,
    RootProduct,
}

#[derive(Clone, Debug)]
pub enum Scalar {
    Exact(K),
    Numeric(BigComplex),
}

impl Scalar {
    pub fn to_complex(&self, prec: u32) -> BigComplex {
        match self {
            Scalar::Exact(k) => icosa_exact::ComplexEmbedding::to_complex(k, prec),
            Scalar::Numeric(z) => z.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Exact(k) => k.is_zero(),
            Scalar::Numeric(z) => z.is_zero(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SexticInvariants {
    pub a: BigComplex,
    pub b: BigComplex,
    pub c: BigComplex,
    pub delta: Scalar,
    pub j6: BigComplex,
    pub j10: Scalar,
    pub method: DeltaMethod,
    pub precision: u32,
}

impl SexticInvariants {
    /// `max(1, |A|³ + |A||B| + |C|)`, the scale against which `J₆` is judged.
    pub fn j6_scale(&self) -> f64 {
        let a = self.a.abs().to_f64();
        (a.powi(3) + a * self.b.abs().to_f64() + self.c.abs().to_f64()).max(1.0)
    }
}

fn j6_of(abc: &Abc) -> BigComplex {
    let prec = abc.a.prec();
    let q = |n: i64, d: i64| BigComplex::from_rational(&Rational::from((n, d)), prec);
    &(&(&abc.a.powu(3) * &q(1, 221_184)) + &(&(&abc.a * &abc.b) * &q(5, 13_824))) - &(&abc.c * &q(1, 576))
}

/// `J₆ = A³/221184 + 5AB/13824 − C/576` and `J₁₀ = 2⁻¹²Δ`.
pub fn j_invariants(p: &Sextic, prec: u32) -> Result<SexticInvariants> {
    if p.is_zero() {
        return Err(CoreError::ZeroInput);
    }
    if p.degree() != 6 {
        return Err(CoreError::DegreeMismatch { left: p.degree() as u32, right: 6 });
    }
    let roots = projective_roots(p, prec)?;
    let abc = abc_from_roots(&roots)?;
    let j6 = j6_of(&abc);
    let (delta, j10, method) = match p {
        Sextic::Exact(b) => {
            let d = discriminant(b)?;
            let j = d.clone() * &K::from_rational(&Rational::from((1, 4096)));
            (Scalar::Exact(d), Scalar::Exact(j), DeltaMethod::Resultant)
        }
        Sextic::Numeric(_) => {
            let d = discriminant_from_roots(p, prec)?;
            let j = &d * &BigComplex::from_rational(&Rational::from((1, 4096)), d.prec());
            (Scalar::Numeric(d), Scalar::Numeric(j), DeltaMethod::RootProduct)
        }
    };
    Ok(SexticInvariants { a: abc.a, b: abc.b, c: abc.c, delta, j6, j10, method, precision: roots.precision })
}

/// `|J₆| < 2^(−prec/3) · max(1, |A|³ + |A||B| + |C|)`, confirmed at doubled
/// precision.
pub fn j6_is_zero(p: &Sextic, prec: u32) -> Result<bool> {
    let below = |prec: u32| -> Result<bool> {
        let inv = j_invariants(p, prec)?;
        let tol = 2f64.powf(-(prec as f64) / 3.0) * inv.j6_scale();
        Ok(inv.j6.abs().to_f64() < tol)
    };
    Ok(below(prec)? && below(2 * prec)?)
}

#[derive(Clone, Debug, PartialEq)]
pub struct RootProfile {
    pub partition: Vec<usize>,
    pub is_square_of_cubic: bool,
    pub has_harmonic_double_pair: bool,
    /// `((d₁s₁)(d₂s₂)) / ((d₁s₂)(d₂s₁))` for partition `[2,2,1,1]`.
    pub cross_ratio: Option<(f64, f64)>,
}

pub fn root_profile(p: &Sextic, prec: u32) -> Result<RootProfile> {
    let r = projective_roots(p, prec)?;
    let partition = r.partition();
    let is_square_of_cubic = partition.iter().all(|m| m % 2 == 0);
    let mut cross_ratio = None;
    let mut harmonic = false;
    if partition == [2, 2, 1, 1] {
        let doubles: Vec<_> = r.groups.iter().filter(|(_, m)| *m == 2).map(|(pt, _)| pt).collect();
        let simples: Vec<_> = r.groups.iter().filter(|(_, m)| *m == 1).map(|(pt, _)| pt).collect();
        let br = |a: &(BigComplex, BigComplex), b: &(BigComplex, BigComplex)| &(&a.0 * &b.1) - &(&b.0 * &a.1);
        let num = &br(doubles[0], simples[0]) * &br(doubles[1], simples[1]);
        let den = &br(doubles[0], simples[1]) * &br(doubles[1], simples[0]);
        let cr = &num / &den;
        let tol = 2f64.powf(-(prec as f64) / 4.0);
        harmonic = (&cr + &BigComplex::one(cr.prec())).abs().to_f64() < tol;
        cross_ratio = Some(cr.to_f64_pair());
    }
    Ok(RootProfile { partition, is_square_of_cubic, has_harmonic_double_pair: harmonic, cross_ratio })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    TwoIcosahedralSets,
    ExactlyOne,
    InfinitelyMany,
    DegenerateOnly,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct Flags {
    pub delta_zero: bool,
    pub j6_zero: bool,
    pub square_of_cubic: bool,
    pub harmonic_double_pair: bool,
    /// All six roots coincide, so `f = (a, x)³` with `a` null.
    pub single_root: bool,
}

impl Flags {
    pub fn verdict(&self) -> Verdict {
        if self.single_root {
            Verdict::DegenerateOnly
        } else if !self.j6_zero {
            Verdict::TwoIcosahedralSets
        } else if self.square_of_cubic || self.harmonic_double_pair {
            Verdict::InfinitelyMany
        } else {
            Verdict::ExactlyOne
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BundleClassification {
    pub verdict: Verdict,
    pub flags: Flags,
    pub partition: Vec<usize>,
}

pub fn classify_sextic(p: &Sextic, prec: u32) -> Result<BundleClassification> {
    if p.is_zero() {
        return Err(CoreError::ZeroInput);
    }
    let profile = root_profile(p, prec)?;
    let delta_zero = match p {
        Sextic::Exact(b) => discriminant(b)?.is_zero(),
        Sextic::Numeric(_) => profile.partition.len() < 6,
    };
    let flags = Flags {
        delta_zero,
        j6_zero: j6_is_zero(p, prec)?,
        square_of_cubic: profile.is_square_of_cubic,
        harmonic_double_pair: profile.has_harmonic_double_pair,
        single_root: profile.partition == [6],
    };
    Ok(BundleClassification { verdict: flags.verdict(), flags, partition: profile.partition })
}

pub fn classify_bundle<F: Ring + IntoQISqrt5>(f: &HarmonicForm<F>, prec: u32) -> Result<BundleClassification> {
    if f.is_zero() {
        return Err(CoreError::ZeroInput);
    }
    classify_sextic(&Sextic::Exact(cubic_to_sextic(f)?), prec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::icosahedron::{cubics_through, standard_icosahedron};
    use crate::so3::{cayley_rotation, random_harmonic, random_vector, rotate};
    use icosa_exact::{ComplexEmbedding, QSqrt5};
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    const PREC: u32 = 128;

    fn exact(c: &[i64]) -> Sextic {
        Sextic::Exact(BinaryForm::new(c.iter().map(|&x| K::from(x)).collect()))
    }

    fn close(a: &BigComplex, b: &BigComplex, rel: f64) -> bool {
        let scale = a.abs().to_f64().max(b.abs().to_f64()).max(1e-300);
        (a - b).abs().to_f64() / scale < rel
    }

    /// `z₁²z₂²(a z₁² + b z₁z₂ + c z₂²)`.
    fn double_at_zero_and_infinity(a: i64, b: i64, c: i64) -> Sextic {
        exact(&[0, 0, a, b, c, 0, 0])
    }

    #[test]
    fn discriminant_fixtures() {
        let Sextic::Exact(p) = exact(&[1, 0, 0, 0, 0, 0, -1]) else { unreachable!() };
        assert_eq!(discriminant(&p).unwrap(), K::from(46656));
        let Sextic::Exact(q) = exact(&[0, 0, 1, 0, 0, 0, 0]) else { unreachable!() };
        assert!(discriminant(&q).unwrap().is_zero());
        let Sextic::Exact(z) = exact(&[0; 7]) else { unreachable!() };
        assert!(discriminant(&z).is_err());
    }

    #[test]
    fn quadratic_discriminant_matches_textbook() {
        // 2z₁² + 3z₁z₂ − 5z₂²: b² − 4ac = 49
        let p = BinaryForm::new(vec![K::from(2), K::from(3), K::from(-5)]);
        assert_eq!(discriminant(&p).unwrap(), K::from(49));
    }

    #[test]
    fn index_sets_have_expected_sizes() {
        assert_eq!(matchings().len(), 15);
        assert_eq!(triple_splits().len(), 10);
        let mut seen = std::collections::HashSet::new();
        for m in matchings() {
            let mut v: Vec<(usize, usize)> = m.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
            v.sort();
            assert!(seen.insert(v));
        }
    }

    #[test]
    fn all_roots_equal_gives_zero_abc() {
        let abc = igusa_abc(&exact(&[1, 0, 0, 0, 0, 0, 0]), PREC).unwrap();
        assert!(abc.a.is_zero() && abc.b.is_zero() && abc.c.is_zero());
    }

    fn brute_force_abc(pts: &[(BigComplex, BigComplex)], kappa: &BigComplex) -> [BigComplex; 3] {
        let prec = kappa.prec();
        let sq = |i: usize, j: usize| (&(&pts[i].0 * &pts[j].1) - &(&pts[j].0 * &pts[i].1)).powu(2);
        let mut sums = [BigComplex::zero(prec), BigComplex::zero(prec), BigComplex::zero(prec)];
        let mut perm = [0usize, 1, 2, 3, 4, 5];
        let mut all = Vec::new();
        permute(&mut perm, 0, &mut all);
        for s in all {
            let t = |pairs: &[(usize, usize)]| {
                pairs.iter().fold(BigComplex::one(prec), |acc, &(i, j)| &acc * &sq(s[i], s[j]))
            };
            sums[0] = &sums[0] + &t(&[(0, 1), (2, 3), (4, 5)]);
            let tri = t(&[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]);
            sums[1] = &sums[1] + &tri;
            sums[2] = &sums[2] + &(&tri * &t(&[(0, 3), (1, 4), (2, 5)]));
        }
        let k2 = kappa.powu(2);
        let inv = |n: i64| BigComplex::from_rational(&Rational::from((1, n)), prec);
        [&(&sums[0] * &inv(48)) * &k2, &(&sums[1] * &inv(72)) * &k2.powu(2), &(&sums[2] * &inv(12)) * &k2.powu(3)]
    }

    fn permute(p: &mut [usize; 6], k: usize, out: &mut Vec<[usize; 6]>) {
        if k == 6 {
            out.push(*p);
            return;
        }
        for i in k..6 {
            p.swap(k, i);
            permute(p, k + 1, out);
            p.swap(k, i);
        }
    }

    #[test]
    fn abc_matches_brute_force_enumeration() {
        for p in [exact(&[1, 0, 0, 0, 0, 0, -1]), exact(&[0, 2, -1, 3, 0, 1, 4])] {
            let r = projective_roots(&p, PREC).unwrap();
            let abc = abc_from_roots(&r).unwrap();
            let [a, b, c] = brute_force_abc(&r.points, &r.kappa);
            assert!(close(&abc.a, &a, 1e-30));
            assert!(close(&abc.b, &b, 1e-30));
            assert!(close(&abc.c, &c, 1e-30));
        }
    }

    #[test]
    fn abc_is_symmetric_in_root_order() {
        let p = exact(&[3, -1, 4, 1, -5, 9, 2]);
        let r = projective_roots(&p, PREC).unwrap();
        let base = abc_from_roots(&r).unwrap();
        let mut shuffled = r.clone();
        shuffled.points.reverse();
        shuffled.points.swap(0, 3);
        let moved = abc_from_roots(&shuffled).unwrap();
        assert!(close(&base.a, &moved.a, 1e-30));
        assert!(close(&base.c, &moved.c, 1e-30));
    }

    #[test]
    fn j6_on_double_roots_at_zero_and_infinity() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..10 {
            let (a, b, c) = (rng.gen_range(-9..=9), rng.gen_range(-9..=9), rng.gen_range(-9..=9));
            if a == 0 || c == 0 || b * b == 4 * a * c {
                continue;
            }
            let inv = j_invariants(&double_at_zero_and_infinity(a, b, c), PREC).unwrap();
            let expected = Rational::from(b * b * (b * b - 4 * a * c).pow(2)) / 1024;
            let err = (&inv.j6 - &BigComplex::from_rational(&expected, PREC)).abs().to_f64();
            assert!(err < 1e-25 * inv.j6_scale(), "{a} {b} {c}");
        }
    }

    #[test]
    fn normal_forms() {
        // z²(z² − 1)
        let harm = double_at_zero_and_infinity(1, 0, -1);
        assert!(j6_is_zero(&harm, PREC).unwrap());
        let prof = root_profile(&harm, PREC).unwrap();
        assert_eq!(prof.partition, vec![2, 2, 1, 1]);
        assert!(prof.has_harmonic_double_pair);
        // z²(z − 1)²
        let tri = double_at_zero_and_infinity(1, -2, 1);
        assert!(j6_is_zero(&tri, PREC).unwrap());
        let prof = root_profile(&tri, PREC).unwrap();
        assert_eq!(prof.partition, vec![2, 2, 2]);
        assert!(prof.is_square_of_cubic);
        assert_eq!(classify_sextic(&tri, PREC).unwrap().verdict, Verdict::InfinitelyMany);
        // z⁶ − 1
        assert_eq!(root_profile(&exact(&[1, 0, 0, 0, 0, 0, -1]), PREC).unwrap().partition, vec![1; 6]);
    }

    #[test]
    fn non_harmonic_double_pair() {
        // z²(z² − 3z + 2): simple roots 1, 2
        let p = double_at_zero_and_infinity(1, -3, 2);
        let prof = root_profile(&p, PREC).unwrap();
        assert_eq!(prof.partition, vec![2, 2, 1, 1]);
        assert!(!prof.has_harmonic_double_pair);
        let (re, _) = prof.cross_ratio.unwrap();
        assert!((re - 2.0).abs() < 1e-12 || (re - 0.5).abs() < 1e-12);
    }

    #[test]
    fn cubic_times_root_at_infinity() {
        // z³(z + 1)
        let p = double_at_zero_and_infinity(1, 1, 0);
        let inv = j_invariants(&p, PREC).unwrap();
        assert!(close(&inv.j6, &BigComplex::from_rational(&Rational::from((1, 1024)), PREC), 1e-25));
        let cls = classify_sextic(&p, PREC).unwrap();
        assert!(cls.flags.delta_zero);
        assert!(!cls.flags.j6_zero);
        assert_eq!(cls.verdict, Verdict::TwoIcosahedralSets);
    }

    #[test]
    fn verdict_table() {
        let f = |j6_zero, square_of_cubic, harmonic_double_pair| Flags {
            j6_zero,
            square_of_cubic,
            harmonic_double_pair,
            ..Flags::default()
        };
        assert_eq!(f(false, true, true).verdict(), Verdict::TwoIcosahedralSets);
        assert_eq!(f(true, true, false).verdict(), Verdict::InfinitelyMany);
        assert_eq!(f(true, false, true).verdict(), Verdict::InfinitelyMany);
        assert_eq!(f(true, false, false).verdict(), Verdict::ExactlyOne);
        assert_eq!(Flags { single_root: true, ..f(true, true, false) }.verdict(), Verdict::DegenerateOnly);
    }

    #[test]
    fn cube_of_null_linear_form_is_degenerate_only() {
        let a = [K::one(), K::i(), K::zero()];
        let f = HarmonicForm::new(3, crate::so3::linear_form(&a).pow(3)).unwrap();
        let cls = classify_bundle(&f, PREC).unwrap();
        assert_eq!(cls.partition, vec![6]);
        assert_eq!(cls.verdict, Verdict::DegenerateOnly);
    }

    #[test]
    fn cubic_through_icosahedron_has_two_sets() {
        let basis = cubics_through(&standard_icosahedron()).unwrap();
        assert_eq!(basis.len(), 4);
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let mut poly = icosa_exact::MultiPoly::zero_in(&crate::so3::X);
        for b in &basis {
            poly = poly + b.poly().scale(&QSqrt5::from(rng.gen_range(-5i64..=5)));
        }
        let f = HarmonicForm::new(3, poly).unwrap();
        assert_eq!(classify_bundle(&f, PREC).unwrap().verdict, Verdict::TwoIcosahedralSets);
    }

    #[test]
    fn resultant_agrees_with_root_product() {
        let mut rng = ChaCha8Rng::seed_from_u64(50);
        for _ in 0..50 {
            let mut c: Vec<i64> = (0..7).map(|_| rng.gen_range(-9..=9)).collect();
            if c[0] == 0 {
                c[0] = 1;
            }
            let p = exact(&c);
            let Sextic::Exact(b) = &p else { unreachable!() };
            let res = discriminant(b).unwrap().to_complex(PREC);
            let roots = discriminant_from_roots(&p, PREC).unwrap();
            if res.is_zero() {
                assert!(roots.abs().to_f64() < 1e-20);
            } else {
                assert!(close(&res, &roots, 1e-25));
            }
        }
    }

    #[test]
    fn numeric_input_matches_exact() {
        let p = exact(&[2, -1, 0, 3, 1, 0, -4]);
        let Sextic::Exact(b) = &p else { unreachable!() };
        let num = Sextic::Numeric(b.coeffs().iter().map(|c| c.to_complex(PREC)).collect());
        let e = j_invariants(&p, PREC).unwrap();
        let n = j_invariants(&num, PREC).unwrap();
        assert!(close(&e.j6, &n.j6, 1e-25));
        assert!(close(&e.delta.to_complex(PREC), &n.delta.to_complex(PREC), 1e-25));
        assert_eq!(n.method, DeltaMethod::RootProduct);
    }

    #[test]
    fn numeric_cubic_sextic_matches_exact() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let f = random_harmonic(3, &mut rng);
        let exact = cubic_to_sextic(&f).unwrap();
        let coeffs: [num_complex::Complex64; 10] = crate::so3::monomials(3)
            .iter()
            .map(|e| num_complex::Complex64::new(f.poly().coeff(e).to_f64(), 0.0))
            .collect::<Vec<_>>()
            .try_into()
            .unwrap();
        for (n, e) in numeric_cubic_to_sextic(&coeffs, PREC).iter().zip(exact.coeffs()) {
            assert!((n - &e.to_complex(PREC)).abs().to_f64() < 1e-9);
        }
    }

    #[test]
    fn rotation_invariance() {
        let mut rng = ChaCha8Rng::seed_from_u64(20);
        for _ in 0..20 {
            let f = random_harmonic(3, &mut rng);
            let Ok(g) = cayley_rotation(&random_vector(&mut rng)) else {
                continue;
            };
            let gf = HarmonicForm::new(3, rotate(&g, f.poly())).unwrap();
            let (p, q) = (cubic_to_sextic(&f).unwrap(), cubic_to_sextic(&gf).unwrap());
            assert_eq!(discriminant(&p).unwrap(), discriminant(&q).unwrap());
            let j = j_invariants(&p.into(), PREC).unwrap().j6;
            let k = j_invariants(&q.into(), PREC).unwrap().j6;
            assert!(close(&j, &k, 1e-20));
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(16))]
        #[test]
        fn scaling_covariance(c in proptest::collection::vec(-6i64..=6, 7), s in 1i64..5) {
            let p = exact(&c);
            prop_assume!(!p.is_zero() && c[..6].iter().any(|&x| x != 0));
            let Sextic::Exact(b) = &p else { unreachable!() };
            let sb = b.scale(&K::from(s));
            prop_assert_eq!(discriminant(&sb).unwrap(), discriminant(b).unwrap() * &K::from(s).pow(10));
            let j = j_invariants(&p, PREC).unwrap().j6;
            let js = j_invariants(&Sextic::Exact(sb), PREC).unwrap().j6;
            let expected = &j * &BigComplex::from_i64(s.pow(6), PREC);
            let tol = 1e-25 * j_invariants(&p, PREC).unwrap().j6_scale() * (s.pow(6) as f64);
            prop_assert!((&js - &expected).abs().to_f64() <= tol);
        }
    }
}
