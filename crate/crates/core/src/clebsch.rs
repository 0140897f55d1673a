//! The five orthogonal triples of the icosahedron, the Clebsch cubic surface
//! they define, and the decagic curve.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use icosa_exact::{exact_roots, BigComplex, Field, Matrix, MultiPoly, QSqrt5, Rational, Ring, UniPoly};

use crate::error::{CoreError, Result};
use crate::icosahedron::{isotropic_span, standard_icosahedron, Icosahedron};
use crate::so3::{apply, cross, dot, linear_form, monomials, norm_form, null_param, HarmonicForm, Vector, K, X};

/// Three mutually orthogonal two-fold axes `aᵢ ± aⱼ`, unnormalized.
#[derive(Clone, Debug, PartialEq)]
pub struct OrthogonalTriple {
    pub vectors: [Vector<QSqrt5>; 3],
    /// `(eᵢ, eᵢ)`.
    pub norms: [QSqrt5; 3],
    /// The axis pairs `(i, j)` whose sum or difference gives each vector.
    pub pairs: [(usize, usize); 3],
}

/// The 15 two-fold axes grouped into 5 orthogonal triples, ordered by their
/// smallest axis pair so that the coordinate triple of the standard
/// icosahedron comes first.
pub fn orthogonal_triples(ico: &Icosahedron<QSqrt5>) -> Result<Vec<OrthogonalTriple>> {
    let mut twofold = Vec::new();
    for i in 0..6 {
        for j in i + 1..6 {
            let (a, b) = (&ico.axes[i], &ico.axes[j]);
            let sign = if dot(a, b).to_f64() > 0.0 { QSqrt5::from(1) } else { QSqrt5::from(-1) };
            let v = [0, 1, 2].map(|k| a[k].clone() + &(b[k].clone() * &sign));
            twofold.push(((i, j), v));
        }
    }
    let mut triples: Vec<OrthogonalTriple> = Vec::new();
    for (n, (p, v)) in twofold.iter().enumerate() {
        let partners: Vec<usize> = (n + 1..twofold.len()).filter(|&m| dot(v, &twofold[m].1).is_zero()).collect();
        if partners.len() == 2 && dot(&twofold[partners[0]].1, &twofold[partners[1]].1).is_zero() {
            let idx = [n, partners[0], partners[1]];
            triples.push(OrthogonalTriple {
                vectors: idx.map(|m| twofold[m].1.clone()),
                norms: idx.map(|m| dot(&twofold[m].1, &twofold[m].1)),
                pairs: [*p, twofold[partners[0]].0, twofold[partners[1]].0],
            });
        }
    }
    if triples.len() != 5 {
        return Err(CoreError::SearchFailed(format!("found {} orthogonal triples", triples.len())));
    }
    Ok(triples)
}

/// `P_k = c_k (e₁,x)(e₂,x)(e₃,x)` with `c₁ = 1` and `Σ P_k ≡ 0`.
#[derive(Clone, Debug)]
pub struct ClebschCubics {
    pub triples: Vec<OrthogonalTriple>,
    pub scales: Vec<QSqrt5>,
    pub cubics: Vec<HarmonicForm<QSqrt5>>,
}

pub fn triple_products_for(ico: &Icosahedron<QSqrt5>) -> Result<ClebschCubics> {
    let triples = orthogonal_triples(ico)?;
    let raw: Vec<MultiPoly<QSqrt5>> = triples
        .iter()
        .map(|t| t.vectors.iter().fold(MultiPoly::constant(QSqrt5::from(1)), |acc, e| acc * linear_form(e)))
        .collect();
    let mons = monomials(3);
    let m = Matrix::from_fn(mons.len(), raw.len(), |r, c| raw[c].coeff(&mons[r]));
    let kernel = m.kernel_basis();
    if kernel.len() != 1 || kernel[0][0].is_zero() {
        return Err(CoreError::SpanDimension(5 - kernel.len()));
    }
    let lead = kernel[0][0].inv().expect("nonzero");
    let scales: Vec<QSqrt5> = kernel[0].iter().map(|c| c.clone() * &lead).collect();
    let cubics = raw.iter().zip(&scales).map(|(p, c)| HarmonicForm::new(3, p.scale(c))).collect::<Result<Vec<_>>>()?;
    Ok(ClebschCubics { triples, scales, cubics })
}

pub fn triple_products() -> Result<ClebschCubics> {
    triple_products_for(&standard_icosahedron())
}

impl ClebschCubics {
    /// `π` with `g·T_k = T_{π(k)}` as sets of lines.
    pub fn triple_permutation(&self, g: &Matrix<QSqrt5>) -> Option<Vec<usize>> {
        let parallel = |u: &Vector<QSqrt5>, v: &Vector<QSqrt5>| cross(u, v).iter().all(Ring::is_zero);
        self.triples
            .iter()
            .map(|t| {
                let moved: Vec<Vector<QSqrt5>> = t.vectors.iter().map(|e| apply(g, e)).collect();
                self.triples.iter().position(|s| moved.iter().all(|m| s.vectors.iter().any(|e| parallel(m, e))))
            })
            .collect()
    }

    /// `ΣP_k ≡ 0` and `ΣP_k³ ≡ 0` as polynomials.
    pub fn identities(&self) -> (bool, bool) {
        let sum = self.cubics.iter().fold(MultiPoly::zero_in(&X), |acc, p| acc + p.poly());
        let cubes = self.cubics.iter().fold(MultiPoly::zero_in(&X), |acc, p| acc + p.poly().pow(3));
        (sum.is_zero(), cubes.is_zero())
    }
}

/// `(y₁, …, y₅)` with `Σ yᵢ = 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct ClebschPoint<F> {
    pub y: [F; 5],
}

/// Elementary symmetric functions `e₀, …, e_n` of the inputs.
pub fn elementary_symmetric<F: Ring>(ys: &[F]) -> Vec<F> {
    let mut e = vec![F::zero(); ys.len() + 1];
    e[0] = F::one();
    for y in ys {
        for k in (1..e.len()).rev() {
            e[k] = e[k].clone() + e[k - 1].clone() * y;
        }
    }
    e
}

impl<F: Ring> ClebschPoint<F> {
    pub fn sigma(&self, k: usize) -> F {
        elementary_symmetric(&self.y)[k].clone()
    }

    pub fn power_sum(&self, k: u32) -> F {
        self.y.iter().fold(F::zero(), |acc, y| acc + y.pow(k))
    }
}

/// `y_k = P_k(b)`, defined even at the blow-up points.
pub fn clebsch_values<F: Field + From<QSqrt5>>(c: &ClebschCubics, b: &Vector<F>) -> ClebschPoint<F> {
    let y: Vec<F> =
        c.cubics.iter().map(|p| p.poly().map_coeffs(|q| F::from(q.clone())).evaluate(b).expect("arity 3")).collect();
    ClebschPoint { y: y.try_into().expect("five cubics") }
}

/// [`clebsch_values`], rejecting `[b] = [aᵢ]` where every `y_k` vanishes.
pub fn clebsch_embedding<F: Field + From<QSqrt5>>(c: &ClebschCubics, b: &Vector<F>) -> Result<ClebschPoint<F>> {
    let pt = clebsch_values(c, b);
    if pt.y.iter().all(Ring::is_zero) {
        return Err(CoreError::Precondition("b lies on an icosahedron axis".into()));
    }
    Ok(pt)
}

pub fn clebsch_embedding_numeric(c: &ClebschCubics, b: &[BigComplex; 3], prec: u32) -> [BigComplex; 5] {
    let y: Vec<BigComplex> = c.cubics.iter().map(|p| p.poly().eval_complex(b, prec).expect("arity 3")).collect();
    y.try_into().expect("five cubics")
}

/// `U₀ = span{f_{a₁}, f_{a₂}, f_{a₃}}` with its inverse Gram matrix.
struct Complement {
    u: Vec<HarmonicForm<QSqrt5>>,
    gram_inv: Matrix<QSqrt5>,
}

fn complement() -> Result<Complement> {
    let u = isotropic_span(&standard_icosahedron())?.basis;
    let gram = Matrix::from_fn(3, 3, |i, j| crate::so3::bombieri(u[i].poly(), u[j].poly()).expect("cubics"));
    Ok(Complement { gram_inv: gram.inverse()?, u })
}

/// `p_b = f_b − Σ μᵢ uᵢ` with `μ = G⁻¹(u₁(b), u₂(b), u₃(b))`, the
/// Bombieri-orthogonal projection of `f_b` onto `U₀^⊥`.
pub fn project_onto_complement<F: Field + From<QSqrt5>>(b: &Vector<F>) -> Result<HarmonicForm<F>> {
    let comp = complement()?;
    let lift = |p: &MultiPoly<QSqrt5>| p.map_coeffs(|q| F::from(q.clone()));
    let r: Vec<F> = comp.u.iter().map(|u| lift(u.poly()).evaluate(b)).collect::<icosa_exact::Result<_>>()?;
    let mut p = crate::so3::project_fa(b).into_poly();
    for i in 0..3 {
        let mu = (0..3).fold(F::zero(), |acc, j| acc + F::from(comp.gram_inv[(i, j)].clone()) * &r[j]);
        p = p - lift(comp.u[i].poly()).scale(&mu);
    }
    HarmonicForm::new(3, p)
}

const B: [&str; 3] = ["b1", "b2", "b3"];

/// Coefficients of `p_b`, in the order of `monomials(3)`, as cubics in
/// `(b₁, b₂, b₃)`.
pub fn projection_family() -> Result<Vec<MultiPoly<QSqrt5>>> {
    const V: [&str; 6] = ["b1", "b2", "b3", "x1", "x2", "x3"];
    let comp = complement()?;
    let bs: Vec<MultiPoly<QSqrt5>> = (0..3).map(|i| MultiPoly::var(&V, i)).collect();
    let xs: Vec<MultiPoly<QSqrt5>> = (3..6).map(|i| MultiPoly::var(&V, i)).collect();
    let bx = (0..3).fold(MultiPoly::zero_in(&V), |acc, i| acc + &bs[i] * &xs[i]);
    let bb = norm_form::<QSqrt5>().substitute(&bs)?;
    let xx = norm_form::<QSqrt5>().substitute(&xs)?;
    let three_fifths = QSqrt5::rational(Rational::from((3, 5)));
    let mut p = bx.pow(3) - (&(&bb * &bx) * &xx).scale(&three_fifths);
    let ub: Vec<MultiPoly<QSqrt5>> =
        comp.u.iter().map(|u| u.poly().substitute(&bs)).collect::<icosa_exact::Result<_>>()?;
    let ux: Vec<MultiPoly<QSqrt5>> =
        comp.u.iter().map(|u| u.poly().substitute(&xs)).collect::<icosa_exact::Result<_>>()?;
    for i in 0..3 {
        let mu = (0..3).fold(MultiPoly::zero_in(&V), |acc, j| acc + ub[j].scale(&comp.gram_inv[(i, j)]));
        p = p - &mu * &ux[i];
    }
    let by_x = p.coefficients_in(&[3, 4, 5]);
    Ok(monomials(3)
        .iter()
        .map(|e| by_x.get(e).cloned().unwrap_or_else(|| MultiPoly::zero_in(&B)).with_vars(&B).expect("arity"))
        .collect())
}

/// `p_b` at a numeric point, coefficients in the order of `monomials(3)`.
pub fn project_numeric(family: &[MultiPoly<QSqrt5>], b: &[BigComplex; 3], prec: u32) -> Vec<BigComplex> {
    family.iter().map(|c| c.eval_complex(b, prec).expect("arity 3")).collect()
}

fn cyclic(a: u32, b: u32) -> MultiPoly<QSqrt5> {
    let mut p = MultiPoly::zero_in(&X);
    for i in 0..3 {
        let mut e = vec![0; 3];
        e[i] += a;
        e[(i + 1) % 3] += b;
        p.add_term(e, QSqrt5::from(1));
    }
    p
}

/// The invariant decagic exactly as printed, which vanishes to order four
/// at the axes of the mirror image of the standard icosahedron.
pub fn decagic_as_printed() -> MultiPoly<QSqrt5> {
    let r = |n: i64| QSqrt5::from(n);
    let s5 = |n: i64| QSqrt5::new(Rational::new(), Rational::from(n));
    let m = MultiPoly::monomial(&X, vec![2, 2, 2], r(1));
    cyclic(10, 0).scale(&r(2))
        + (cyclic(8, 2) + cyclic(2, 8)).scale(&r(35))
        + (cyclic(2, 8) - cyclic(8, 2)).scale(&s5(25))
        - (cyclic(6, 4) + cyclic(4, 6)).scale(&r(30))
        + (cyclic(6, 4) - cyclic(4, 6)).scale(&s5(50))
        - (&m * &cyclic(4, 0)).scale(&r(560))
        + (&m * &cyclic(2, 2)).scale(&r(1060))
}

/// The decagic for the standard icosahedron: the printed polynomial with
/// `x₁` and `x₂` exchanged.
pub fn decagic_polynomial() -> MultiPoly<QSqrt5> {
    let swap = [MultiPoly::var(&X, 1), MultiPoly::var(&X, 0), MultiPoly::var(&X, 2)];
    decagic_as_printed().substitute(&swap).expect("three variables")
}

/// Points of the decagic found by restricting it to seeded random rational
/// lines `p + tq` and solving the degree-10 equation in `t`.
pub fn decagic_points(count: usize, seed: u64, prec: u32) -> Result<Vec<[BigComplex; 3]>> {
    let d = decagic_polynomial();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let p: [i64; 3] = [0; 3].map(|_| rng.gen_range(-5..=5));
        let q: [i64; 3] = [0; 3].map(|_| rng.gen_range(-5..=5));
        let line: Vec<MultiPoly<QSqrt5>> = (0..3)
            .map(|i| {
                MultiPoly::from_terms(&["t"], [(vec![0], QSqrt5::from(p[i])), (vec![1], QSqrt5::from(q[i]))])
                    .expect("one variable")
            })
            .collect();
        let restricted = d.substitute(&line)?;
        let uni = UniPoly::new((0..=10).map(|k| restricted.coeff(&[k])).collect());
        if uni.degree() != Some(10) {
            continue;
        }
        let roots = exact_roots(&uni, prec)?;
        for t in roots.values() {
            let pt = [0, 1, 2]
                .map(|i| &BigComplex::from_i64(p[i], t.prec()) + &(&t * &BigComplex::from_i64(q[i], t.prec())));
            out.push(pt);
            if out.len() == count {
                break;
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq)]
pub struct QuarticReport {
    /// `9σ₂² − 20σ₄` vanishes identically on `y(a(z))`.
    pub holds: bool,
    pub sum_vanishes: bool,
    pub cube_sum_vanishes: bool,
}

/// Exact check that the quartic `9σ₂² − 20σ₄` vanishes on the image of the
/// null conic under the Clebsch embedding.
pub fn quartic_r_check() -> Result<QuarticReport> {
    let c = triple_products()?;
    let a = null_param();
    let ys: Vec<MultiPoly<K>> = c
        .cubics
        .iter()
        .map(|p| p.poly().map_coeffs(|q| K::from(q.clone())).substitute(&a))
        .collect::<icosa_exact::Result<_>>()?;
    let e = elementary_symmetric(&ys);
    let quartic = e[2].pow(2).scale(&K::from(9)) - e[4].scale(&K::from(20));
    let sum = ys.iter().fold(MultiPoly::zero_in(&crate::so3::Z), |acc, y| acc + y);
    let cubes = ys.iter().fold(MultiPoly::zero_in(&crate::so3::Z), |acc, y| acc + y.pow(3));
    Ok(QuarticReport { holds: quartic.is_zero(), sum_vanishes: sum.is_zero(), cube_sum_vanishes: cubes.is_zero() })
}

/// `9σ₂² − 20σ₄` at a point.
pub fn quartic_value(y: &[BigComplex; 5]) -> BigComplex {
    let e = elementary_symmetric_complex(y);
    let prec = y[0].prec();
    &(&e[2].powu(2) * &BigComplex::from_i64(9, prec)) - &(&e[4] * &BigComplex::from_i64(20, prec))
}

fn elementary_symmetric_complex(ys: &[BigComplex]) -> Vec<BigComplex> {
    let prec = ys[0].prec();
    let mut e = vec![BigComplex::zero(prec); ys.len() + 1];
    e[0] = BigComplex::one(prec);
    for y in ys {
        for k in (1..e.len()).rev() {
            e[k] = &e[k] + &(&e[k - 1] * y);
        }
    }
    e
}

/// Sextic of `p_b` at a numeric `b`.
pub fn sextic_at(family: &[MultiPoly<QSqrt5>], b: &[BigComplex; 3], prec: u32) -> crate::invariants::Sextic {
    let coeffs = project_numeric(family, b, prec);
    crate::invariants::Sextic::Numeric(crate::invariants::sextic_of_cubic_coeffs(&coeffs, prec))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::icosahedron::{cubics_through, icosahedral_generators};
    use crate::invariants::{cubic_to_sextic, j6_is_zero, root_profile, Sextic};
    use crate::so3::{bombieri, laplacian, lift, random_vector, rotate, vector};
    use icosa_exact::rank_of;

    const PREC: u32 = 128;

    fn q5(v: &Vector<Rational>) -> Vector<QSqrt5> {
        v.clone().map(QSqrt5::rational)
    }

    #[test]
    fn five_triples_with_coordinate_triple_first() {
        let ico = standard_icosahedron();
        let t = orthogonal_triples(&ico).unwrap();
        assert_eq!(t.len(), 5);
        for tr in &t {
            for i in 0..3 {
                for j in i + 1..3 {
                    assert!(dot(&tr.vectors[i], &tr.vectors[j]).is_zero());
                }
            }
            for a in &ico.axes {
                assert!(tr.vectors.iter().any(|e| dot(e, a).is_zero()));
            }
        }
        let norm = QSqrt5::from(4) + &(QSqrt5::phi() * &QSqrt5::from(4));
        assert!(t.iter().flat_map(|tr| tr.norms.iter()).all(|n| *n == norm));
        assert!(t[0].vectors.iter().all(|v| v.iter().filter(|c| !c.is_zero()).count() == 1));
    }

    #[test]
    fn products_are_harmonic_and_vanish_on_axes() {
        let c = triple_products().unwrap();
        assert_eq!(c.scales[0], QSqrt5::from(1));
        for p in &c.cubics {
            assert!(laplacian(p.poly()).is_zero());
            for a in &standard_icosahedron().axes {
                assert!(p.poly().evaluate(a).unwrap().is_zero());
            }
        }
        let rows: Vec<Vec<QSqrt5>> = c.cubics.iter().map(HarmonicForm::coefficients).collect();
        assert_eq!(rank_of(&rows), 4);
        assert_eq!(c.identities(), (true, true));
    }

    #[test]
    fn products_span_complement_of_icosahedral_span() {
        let c = triple_products().unwrap();
        let u = isotropic_span(&standard_icosahedron()).unwrap();
        for p in &c.cubics {
            for b in &u.basis {
                assert!(bombieri(p.poly(), b.poly()).unwrap().is_zero());
            }
        }
        let through = cubics_through(&standard_icosahedron()).unwrap();
        let mut rows: Vec<Vec<QSqrt5>> = c.cubics.iter().map(HarmonicForm::coefficients).collect();
        rows.extend(through.iter().map(HarmonicForm::coefficients));
        assert_eq!(rank_of(&rows), 4);
    }

    #[test]
    fn generators_permute_triples_as_a5() {
        let c = triple_products().unwrap();
        let (half, five) = icosahedral_generators().unwrap();
        let p2 = c.triple_permutation(&half).unwrap();
        let p5 = c.triple_permutation(&five).unwrap();
        let cycle_type = |p: &[usize]| {
            let mut seen = [false; 5];
            let mut lens = Vec::new();
            for s in 0..5 {
                let (mut k, mut n) = (s, 0);
                while !seen[k] {
                    seen[k] = true;
                    k = p[k];
                    n += 1;
                }
                if n > 0 {
                    lens.push(n);
                }
            }
            lens.sort();
            lens
        };
        assert_eq!(cycle_type(&p2), vec![1, 2, 2]);
        assert_eq!(cycle_type(&p5), vec![5]);
        let cyc = Matrix::from_fn(3, 3, |i, j| QSqrt5::from(((i + 1) % 3 == j) as i64));
        assert_eq!(cycle_type(&c.triple_permutation(&cyc).unwrap()), vec![1, 1, 3]);
    }

    #[test]
    fn embedding_is_equivariant_without_signs() {
        let c = triple_products().unwrap();
        let (half, five) = icosahedral_generators().unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let b = q5(&random_vector(&mut rng));
        let y = clebsch_values(&c, &b);
        for g in [half, five] {
            let pi = c.triple_permutation(&g).unwrap();
            // P_k(g b) = P_{π⁻¹(k)}(b)
            let gy = clebsch_values(&c, &apply(&g, &b));
            for k in 0..5 {
                assert_eq!(gy.y[pi[k]], y.y[k]);
            }
        }
    }

    #[test]
    fn clebsch_point_identities() {
        let c = triple_products().unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..5 {
            let b = q5(&random_vector(&mut rng));
            let y = clebsch_embedding(&c, &b).unwrap();
            assert!(y.sigma(1).is_zero());
            assert!(y.power_sum(3).is_zero());
            assert!(!y.sigma(2).is_zero());
        }
        let a1 = standard_icosahedron().axes[0].clone();
        assert!(clebsch_values(&c, &a1).y.iter().all(Ring::is_zero));
        assert!(clebsch_embedding(&c, &a1).is_err());
    }

    #[test]
    fn projection_properties() {
        let c = triple_products().unwrap();
        let a1 = standard_icosahedron().axes[0].clone();
        assert!(project_onto_complement(&a1).unwrap().is_zero());
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        let b = q5(&random_vector(&mut rng));
        let pb = project_onto_complement(&b).unwrap();
        let mut rows: Vec<Vec<QSqrt5>> = c.cubics.iter().map(HarmonicForm::coefficients).collect();
        rows.push(pb.coefficients());
        assert_eq!(rank_of(&rows), 4);
        for p in &c.cubics {
            assert_eq!(bombieri(pb.poly(), p.poly()).unwrap(), p.poly().evaluate(&b).unwrap());
        }
    }

    #[test]
    fn symbolic_family_matches_pointwise_projection() {
        let fam = projection_family().unwrap();
        let b = vector::<QSqrt5>([2, -1, 3]);
        let pb = project_onto_complement(&b).unwrap();
        for (e, coeff) in monomials(3).iter().zip(&fam) {
            assert_eq!(coeff.evaluate(&b).unwrap(), pb.poly().coeff(e));
        }
    }

    #[test]
    fn projected_cubics_lie_on_j6_zero() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for _ in 0..4 {
            let b = q5(&random_vector(&mut rng));
            let pb = project_onto_complement(&b).unwrap();
            let sextic = Sextic::Exact(cubic_to_sextic(&pb).unwrap());
            assert!(j6_is_zero(&sextic, PREC).unwrap());
        }
    }

    #[test]
    fn decagic_structure() {
        let d = decagic_polynomial();
        assert_eq!(d.homogeneous_degree(), Some(10));
        let (half, five) = icosahedral_generators().unwrap();
        assert_eq!(rotate(&half, &d), d);
        assert_eq!(rotate(&five, &d), d);
        let conj = decagic_as_printed().map_coeffs(QSqrt5::conj);
        assert_eq!(conj, d);
        let a1 = standard_icosahedron().axes[0].clone();
        let mut order4 = false;
        for k in 0..5u32 {
            for e in monomials(k) {
                let v = d.partial_multi(&e).evaluate(&a1).unwrap();
                if k < 4 {
                    assert!(v.is_zero(), "order {k}");
                } else {
                    order4 |= !v.is_zero();
                }
            }
        }
        assert!(order4);
        assert!(!decagic_as_printed().evaluate(&a1).unwrap().is_zero());
    }

    #[test]
    fn decagic_samples_give_three_double_roots() {
        let fam = projection_family().unwrap();
        let c = triple_products().unwrap();
        for b in decagic_points(4, 5, PREC).unwrap() {
            let sextic = sextic_at(&fam, &b, PREC);
            assert_eq!(root_profile(&sextic, PREC).unwrap().partition, vec![2, 2, 2]);
            let y = clebsch_embedding_numeric(&c, &b, PREC);
            let scale = y.iter().map(|v| v.abs().to_f64()).fold(0.0, f64::max).powi(4);
            assert!(quartic_value(&y).abs().to_f64() < 1e-25 * scale);
        }
    }

    #[test]
    fn quartic_vanishes_on_null_conic_image() {
        let r = quartic_r_check().unwrap();
        assert!(r.holds && r.sum_vanishes && r.cube_sum_vanishes);
        let c = triple_products().unwrap();
        let b = lift(&vector::<Rational>([1, 2, 3]));
        let y = clebsch_values(&c, &b);
        assert!(!y.sigma(2).is_zero());
    }
}
