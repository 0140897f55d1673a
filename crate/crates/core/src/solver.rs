//! Icosahedral sets on a harmonic cubic, found by multistart
//! Levenberg–Marquardt iteration on `SO(3, ℂ)`.

use num_complex::Complex64 as C;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;

use icosa_exact::{ComplexEmbedding, IntoQISqrt5, Matrix, MultiPoly, QSqrt5, Ring};

use crate::error::{CoreError, Result};
use crate::icosahedron::{cubics_through, standard_icosahedron, Icosahedron};
use crate::invariants::{classify_bundle, classify_sextic, numeric_cubic_to_sextic, Sextic, Verdict};
use crate::so3::{cayley_rotation, monomials, HarmonicForm, Vector, X};

type M3 = [[C; 3]; 3];
type V3 = [C; 3];

/// `g = (I + S)(I − S)⁻¹` with `S·v = s × v`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GroupParam {
    pub s: V3,
}

#[derive(Clone, Debug)]
pub struct SolveConfig {
    pub starts: usize,
    pub tol: f64,
    pub seed: u64,
    /// Precision in bits for the classifier attached to the report.
    pub precision: u32,
    pub max_newton_iters: usize,
}

impl Default for SolveConfig {
    fn default() -> Self {
        Self { starts: 200, tol: 1e-10, seed: 0, precision: 128, max_newton_iters: 100 }
    }
}

impl SolveConfig {
    pub fn validate(&self) -> Result<()> {
        if self.starts == 0 || !(self.tol > 0.0) || self.max_newton_iters == 0 {
            return Err(CoreError::Precondition("need starts ≥ 1, tol > 0 and max_newton_iters ≥ 1".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct IcosaSolution {
    pub rotation: M3,
    /// Cayley parameter of `rotation`, absent when `g` has eigenvalue −1.
    pub param: Option<GroupParam>,
    pub axes: [V3; 6],
    /// `max |f(g·aᵢ)| / (‖f‖ ‖g·aᵢ‖³)` over all six axes.
    pub residual: f64,
    pub canonical_key: Vec<[f64; 6]>,
}

#[derive(Clone, Debug)]
pub struct SolveReport {
    pub solutions: Vec<IcosaSolution>,
    pub converged_starts: usize,
    pub starts: usize,
    /// More than two classes, the signature of a continuous family.
    pub family_signature: bool,
    pub verdict: Option<Verdict>,
}

/// A harmonic cubic with complex coefficients in the order of
/// [`monomials`]`(3)`.
#[derive(Clone, Debug, PartialEq)]
pub struct NumericCubic {
    pub coeffs: [C; 10],
}

impl NumericCubic {
    pub fn from_form<F: Ring + IntoQISqrt5>(f: &HarmonicForm<F>) -> Self {
        let poly: MultiPoly<_> = f.poly().map_coeffs(IntoQISqrt5::to_qi5);
        let coeffs = monomials(3)
            .iter()
            .map(|e| {
                let (re, im) = poly.coeff(e).to_c64();
                C::new(re, im)
            })
            .collect::<Vec<_>>();
        Self { coeffs: coeffs.try_into().expect("ten monomials") }
    }

    pub fn norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn eval(&self, v: &V3) -> C {
        monomials(3)
            .iter()
            .zip(&self.coeffs)
            .map(|(e, c)| c * v[0].powu(e[0]) * v[1].powu(e[1]) * v[2].powu(e[2]))
            .sum()
    }

    pub fn gradient(&self, v: &V3) -> V3 {
        let mut g = [C::new(0.0, 0.0); 3];
        for (e, c) in monomials(3).iter().zip(&self.coeffs) {
            for k in 0..3 {
                if e[k] == 0 {
                    continue;
                }
                let mut t = c * e[k] as f64;
                for (j, &p) in e.iter().enumerate() {
                    t *= v[j].powu(if j == k { p - 1 } else { p });
                }
                g[k] += t;
            }
        }
        g
    }
}

fn identity() -> M3 {
    let (o, z) = (C::new(1.0, 0.0), C::new(0.0, 0.0));
    [[o, z, z], [z, o, z], [z, z, o]]
}

fn mat_mul(a: &M3, b: &M3) -> M3 {
    let mut out = [[C::new(0.0, 0.0); 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            out[i][j] = (0..3).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    out
}

fn mat_vec(a: &M3, v: &V3) -> V3 {
    [0, 1, 2].map(|i| (0..3).map(|k| a[i][k] * v[k]).sum())
}

fn det(a: &M3) -> C {
    a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
        + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0])
}

fn inverse(a: &M3) -> Option<M3> {
    let d = det(a);
    let scale = a.iter().flatten().map(|c| c.norm()).fold(0.0, f64::max).max(1.0);
    if d.norm() < 1e-12 * scale.powi(3) {
        return None;
    }
    let mut out = [[C::new(0.0, 0.0); 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            let (r0, r1) = ((j + 1) % 3, (j + 2) % 3);
            let (c0, c1) = ((i + 1) % 3, (i + 2) % 3);
            out[i][j] = (a[r0][c0] * a[r1][c1] - a[r0][c1] * a[r1][c0]) / d;
        }
    }
    Some(out)
}

fn skew(s: &V3) -> M3 {
    let z = C::new(0.0, 0.0);
    [[z, -s[2], s[1]], [s[2], z, -s[0]], [-s[1], s[0], z]]
}

fn cross(a: &V3, b: &V3) -> V3 {
    [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

fn hnorm(v: &V3) -> f64 {
    v.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
}

pub fn rotation_from_cayley(p: &GroupParam) -> Result<M3> {
    let id = identity();
    let s = skew(&p.s);
    let plus: M3 = std::array::from_fn(|i| std::array::from_fn(|j| id[i][j] + s[i][j]));
    let minus: M3 = std::array::from_fn(|i| std::array::from_fn(|j| id[i][j] - s[i][j]));
    let inv = inverse(&minus).ok_or(CoreError::ChartSingularity)?;
    Ok(mat_mul(&plus, &inv))
}

/// `S = (g − I)(g + I)⁻¹`.
pub fn cayley_param(g: &M3) -> Option<GroupParam> {
    let id = identity();
    let minus: M3 = std::array::from_fn(|i| std::array::from_fn(|j| g[i][j] - id[i][j]));
    let plus: M3 = std::array::from_fn(|i| std::array::from_fn(|j| g[i][j] + id[i][j]));
    let s = mat_mul(&minus, &inverse(&plus)?);
    Some(GroupParam { s: [s[2][1], s[0][2], s[1][0]] })
}

fn axes_c64(ico: &Icosahedron<QSqrt5>) -> [V3; 6] {
    ico.axes.clone().map(|a| a.map(|c| C::new(c.to_f64(), 0.0)))
}

/// `(f(g·a₁), f(g·a₂), f(g·a₃))·(1 + s·s)³`, the pairings of `f` with
/// `f_{g·a₁}, f_{g·a₂}, f_{g·a₃}` with the chart denominator cleared.
pub fn residual_system<F: Ring + IntoQISqrt5>(f: &HarmonicForm<F>, p: &GroupParam) -> Result<V3> {
    if f.degree() != 3 {
        return Err(CoreError::DegreeMismatch { left: f.degree(), right: 3 });
    }
    let cubic = NumericCubic::from_form(f);
    let g = rotation_from_cayley(p)?;
    let denom = (C::new(1.0, 0.0) + p.s.iter().map(|c| c * c).sum::<C>()).powu(3);
    let axes = axes_c64(&standard_icosahedron());
    Ok([0, 1, 2].map(|i| cubic.eval(&mat_vec(&g, &axes[i])) * denom))
}

fn residual_at(f: &NumericCubic, g: &M3, axes: &[V3; 6]) -> f64 {
    let fnorm = f.norm();
    axes.iter()
        .map(|a| {
            let ga = mat_vec(g, a);
            f.eval(&ga).norm() / (fnorm * hnorm(&ga).powi(3))
        })
        .fold(0.0, f64::max)
}

/// Solves the 3×3 complex system `A x = b`.
fn solve3(a: &M3, b: &V3) -> Option<V3> {
    inverse(a).map(|inv| mat_vec(&inv, b))
}

/// One damped step on the local chart `g ↦ g·C(δ)`, where
/// `∂F_i/∂δ_k = 2 ∇f(g aᵢ) · g(e_k × aᵢ)` at `δ = 0`. Returns the first
/// trial that lowers `‖F‖`.
fn lm_step(f: &NumericCubic, g: &M3, fv: &V3, axes: &[V3; 6], damped: bool) -> Option<(M3, V3)> {
    let scale = f.norm();
    let mut jac = [[C::new(0.0, 0.0); 3]; 3];
    for i in 0..3 {
        let grad = f.gradient(&mat_vec(g, &axes[i]));
        for k in 0..3 {
            let mut e = [C::new(0.0, 0.0); 3];
            e[k] = C::new(1.0, 0.0);
            let dv = mat_vec(g, &cross(&e, &axes[i]));
            jac[i][k] = (0..3).map(|j| grad[j] * dv[j]).sum::<C>() * 2.0 / scale;
        }
    }
    let norm2: f64 = fv.iter().map(|c| c.norm_sqr()).sum();
    let mut mu = if damped { norm2 } else { 0.0 };
    for _ in 0..12 {
        let mut lhs = [[C::new(0.0, 0.0); 3]; 3];
        let mut rhs = [C::new(0.0, 0.0); 3];
        for r in 0..3 {
            for c in 0..3 {
                lhs[r][c] = (0..3).map(|i| jac[i][r].conj() * jac[i][c]).sum();
            }
            lhs[r][r] += mu;
            rhs[r] = -(0..3).map(|i| jac[i][r].conj() * fv[i]).sum::<C>();
        }
        let step = solve3(&lhs, &rhs).and_then(|delta| rotation_from_cayley(&GroupParam { s: delta }).ok());
        if let Some(step) = step {
            let trial = mat_mul(g, &step);
            let tv = [0, 1, 2].map(|i| f.eval(&mat_vec(&trial, &axes[i])) / scale);
            if tv.iter().map(|c| c.norm_sqr()).sum::<f64>() < norm2 {
                return Some((trial, tv));
            }
        }
        mu = mu.max(1e-300) * 10.0;
    }
    None
}

/// Levenberg–Marquardt until the residual drops below `tol`, then further
/// steps while each still reduces `‖F‖` by 10%. Near a multiple zero the
/// error in `g` is of order `√residual`, so stopping at `tol` alone would
/// leave solutions too far apart to deduplicate.
fn refine(f: &NumericCubic, mut g: M3, axes: &[V3; 6], cfg: &SolveConfig) -> Option<M3> {
    let scale = f.norm();
    let mut fv = [0, 1, 2].map(|i| f.eval(&mat_vec(&g, &axes[i])) / scale);
    let mut converged = false;
    for _ in 0..cfg.max_newton_iters {
        if residual_at(f, &g, axes) < cfg.tol {
            converged = true;
            break;
        }
        let (next, nv) = lm_step(f, &g, &fv, axes, true)?;
        if next.iter().flatten().any(|c| !c.is_finite() || c.norm() > 1e8) {
            return None;
        }
        (g, fv) = (next, nv);
    }
    if !converged && residual_at(f, &g, axes) >= cfg.tol {
        return None;
    }
    let size = |v: &V3| v.iter().map(|c| c.norm_sqr()).sum::<f64>();
    for _ in 0..cfg.max_newton_iters {
        match lm_step(f, &g, &fv, axes, false) {
            Some((next, nv)) if size(&nv) < 0.81 * size(&fv) => (g, fv) = (next, nv),
            _ => break,
        }
    }
    Some(g)
}

/// `‖u × v‖ / (‖u‖ ‖v‖)`.
pub fn projective_distance(u: &V3, v: &V3) -> f64 {
    hnorm(&cross(u, v)) / (hnorm(u) * hnorm(v))
}

#[cfg(test)]
fn same_axes(a: &[V3; 6], b: &[V3; 6]) -> bool {
    within(a, b, 1e-6)
}

fn within(a: &[V3; 6], b: &[V3; 6], radius: f64) -> bool {
    a.iter().all(|u| b.iter().any(|v| projective_distance(u, v) < radius))
}

/// Merge radius for two solutions: `10⁻⁶`, widened to `100·√residual` since
/// at a multiple zero the axes are only determined to about `√residual`.
fn merge_radius(a: &IcosaSolution, b: &IcosaSolution) -> f64 {
    (100.0 * a.residual.max(b.residual).sqrt()).max(1e-6)
}

/// Each axis scaled so its largest-modulus coordinate is 1, then sorted.
fn canonical_key(axes: &[V3; 6]) -> Vec<[f64; 6]> {
    let mut key: Vec<[f64; 6]> = axes
        .iter()
        .map(|v| {
            let k = (0..3).max_by(|&i, &j| v[i].norm().total_cmp(&v[j].norm()).then(j.cmp(&i))).unwrap();
            let w = v.map(|c| c / v[k]);
            let r = |x: f64| (x * 1e9).round() / 1e9 + 0.0;
            [r(w[0].re), r(w[0].im), r(w[1].re), r(w[1].im), r(w[2].re), r(w[2].im)]
        })
        .collect();
    key.sort_by(|a, b| {
        a.iter().zip(b).map(|(x, y)| x.total_cmp(y)).find(|o| o.is_ne()).unwrap_or(std::cmp::Ordering::Equal)
    });
    key
}

fn solution(f: &NumericCubic, g: M3, axes: &[V3; 6]) -> IcosaSolution {
    let moved = axes.map(|a| mat_vec(&g, &a));
    IcosaSolution {
        param: cayley_param(&g),
        residual: residual_at(f, &g, axes),
        canonical_key: canonical_key(&moved),
        axes: moved,
        rotation: g,
    }
}

fn gaussian_start(seed: u64, k: usize) -> Option<M3> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(k as u64);
    let mut s = [C::new(0.0, 0.0); 3];
    for c in &mut s {
        *c = C::new(rng.sample(StandardNormal), rng.sample(StandardNormal));
    }
    rotation_from_cayley(&GroupParam { s }).ok()
}

/// Multistart search on a numeric cubic; classes are merged when every
/// axis of one lies within projective distance [`merge_radius`] of an axis
/// of the other, and returned sorted by canonical key.
pub fn find_icosahedral_sets_numeric(f: &NumericCubic, cfg: &SolveConfig) -> Result<SolveReport> {
    cfg.validate()?;
    if f.norm() == 0.0 {
        return Err(CoreError::ZeroInput);
    }
    let axes = axes_c64(&standard_icosahedron());
    let found: Vec<Option<M3>> = (0..cfg.starts)
        .into_par_iter()
        .map(|k| gaussian_start(cfg.seed, k).and_then(|g0| refine(f, g0, &axes, cfg)))
        .collect();
    let converged_starts = found.iter().flatten().count();
    let mut classes: Vec<IcosaSolution> = Vec::new();
    for g in found.into_iter().flatten() {
        let sol = solution(f, g, &axes);
        match classes.iter_mut().find(|c| within(&c.axes, &sol.axes, merge_radius(c, &sol))) {
            Some(c) if sol.residual < c.residual => *c = sol,
            Some(_) => {}
            None => classes.push(sol),
        }
    }
    classes.sort_by(|a, b| {
        a.canonical_key
            .iter()
            .flatten()
            .zip(b.canonical_key.iter().flatten())
            .map(|(x, y)| x.total_cmp(y))
            .find(|o| o.is_ne())
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    let prec = cfg.precision;
    let sextic = Sextic::Numeric(numeric_cubic_to_sextic(&f.coeffs, prec));
    let verdict = classify_sextic(&sextic, prec).ok().map(|c| c.verdict);
    Ok(SolveReport {
        family_signature: classes.len() > 2,
        solutions: classes,
        converged_starts,
        starts: cfg.starts,
        verdict,
    })
}

pub fn find_icosahedral_sets<F: Ring + IntoQISqrt5>(f: &HarmonicForm<F>, cfg: &SolveConfig) -> Result<SolveReport> {
    if f.degree() != 3 {
        return Err(CoreError::DegreeMismatch { left: f.degree(), right: 3 });
    }
    if f.is_zero() {
        return Err(CoreError::ZeroInput);
    }
    let mut report = find_icosahedral_sets_numeric(&NumericCubic::from_form(f), cfg)?;
    report.verdict = classify_bundle(f, cfg.precision).ok().map(|c| c.verdict);
    Ok(report)
}

/// A seeded random cubic through the icosahedron `g·a₁, …, g·a₆`.
#[derive(Clone, Debug)]
pub struct GeneratedCubic {
    pub cubic: HarmonicForm<QSqrt5>,
    pub rotation: Matrix<QSqrt5>,
    pub axes: [Vector<QSqrt5>; 6],
    pub kernel_dim: usize,
}

pub fn generate_cubic_through(g: &Matrix<QSqrt5>, seed: u64) -> Result<GeneratedCubic> {
    let ico = standard_icosahedron().rotated(g);
    let basis = cubics_through(&ico)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let poly = basis
            .iter()
            .fold(MultiPoly::zero_in(&X), |acc, b| acc + b.poly().scale(&QSqrt5::from(rng.gen_range(-9i64..=9))));
        if !poly.is_zero() {
            let cubic = HarmonicForm::new(3, poly)?;
            return Ok(GeneratedCubic { cubic, rotation: g.clone(), axes: ico.axes, kernel_dim: basis.len() });
        }
    }
}

/// [`generate_cubic_through`] for the exact Cayley rotation of a rational `s`.
pub fn generate_cubic_from_param(s: &Vector<QSqrt5>, seed: u64) -> Result<GeneratedCubic> {
    generate_cubic_through(&cayley_rotation(s)?, seed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::icosahedron::icosahedral_group;
    use crate::so3::{bombieri, project_fa, random_harmonic, vector};
    use icosa_exact::Rational;

    fn c(re: f64) -> C {
        C::new(re, 0.0)
    }

    fn orthogonality_error(g: &M3) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..3 {
            for j in 0..3 {
                let v: C = (0..3).map(|k| g[k][i] * g[k][j]).sum();
                worst = worst.max((v - if i == j { c(1.0) } else { c(0.0) }).norm());
            }
        }
        worst
    }

    #[test]
    fn cayley_chart_basics() {
        assert_eq!(rotation_from_cayley(&GroupParam { s: [c(0.0); 3] }).unwrap(), identity());
        let g = rotation_from_cayley(&GroupParam { s: [c(1.0), c(0.0), c(0.0)] }).unwrap();
        assert!(g[1][1].norm() < 1e-15 && g[2][2].norm() < 1e-15);
        let exact = cayley_rotation(&vector::<Rational>([1, 0, 0])).unwrap();
        assert_eq!(exact.transpose().try_mul(&exact).unwrap(), Matrix::identity(3));
        assert_eq!(exact[(1, 1)], Rational::from(0));
        let i = C::new(0.0, 1.0);
        assert!(matches!(
            rotation_from_cayley(&GroupParam { s: [i, c(0.0), c(0.0)] }),
            Err(CoreError::ChartSingularity)
        ));
    }

    #[test]
    fn random_parameters_give_orthogonal_matrices() {
        for k in 0..50 {
            let g = gaussian_start(9, k).unwrap();
            assert!(orthogonality_error(&g) < 1e-14 * hnorm(&g[0]).max(1.0).powi(2));
            assert!((det(&g) - c(1.0)).norm() < 1e-12);
            let back = rotation_from_cayley(&cayley_param(&g).unwrap()).unwrap();
            for i in 0..3 {
                for j in 0..3 {
                    assert!((back[i][j] - g[i][j]).norm() < 1e-9);
                }
            }
        }
    }

    #[test]
    fn residual_at_identity_matches_pairings() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let f = random_harmonic(3, &mut rng);
        let r = residual_system(&f, &GroupParam { s: [c(0.0); 3] }).unwrap();
        let fq = f.poly().map_coeffs(|q| QSqrt5::rational(q.clone()));
        for (i, a) in standard_icosahedron().axes.iter().take(3).enumerate() {
            let pairing = bombieri(&fq, project_fa(a).poly()).unwrap().to_f64();
            assert!((r[i] - c(pairing)).norm() < 1e-9 * pairing.abs().max(1.0));
        }
        assert!(r.iter().any(|v| v.norm() > 1e-3));
    }

    #[test]
    fn generated_cubic_vanishes_on_axes() {
        let gen = generate_cubic_through(&Matrix::identity(3), 5).unwrap();
        assert_eq!(gen.kernel_dim, 4);
        for a in &gen.axes {
            assert!(gen.cubic.poly().evaluate(a).unwrap().is_zero());
        }
        let r = residual_system(&gen.cubic, &GroupParam { s: [c(0.0); 3] }).unwrap();
        assert!(r.iter().all(|v| v.norm() < 1e-12));
    }

    #[test]
    fn generated_cubic_has_two_classes_including_seed() {
        let s = vector::<QSqrt5>([1, -2, 3]).map(|x| x * &QSqrt5::rational(Rational::from((1, 4))));
        let gen = generate_cubic_from_param(&s, 17).unwrap();
        let report = find_icosahedral_sets(&gen.cubic, &SolveConfig { starts: 120, ..SolveConfig::default() }).unwrap();
        assert_eq!(report.solutions.len(), 2, "{report:?}");
        assert_eq!(report.verdict, Some(Verdict::TwoIcosahedralSets));
        let seed_axes: [V3; 6] = gen.axes.clone().map(|a| a.map(|x| c(x.to_f64())));
        assert!(report.solutions.iter().any(|s| same_axes(&s.axes, &seed_axes)));
        let f = NumericCubic::from_form(&gen.cubic);
        for sol in &report.solutions {
            for a in &sol.axes {
                assert!(f.eval(a).norm() < 1e-10 * f.norm() * hnorm(a).powi(3));
            }
        }
    }

    #[test]
    fn stabilizer_preserves_key() {
        let gen = generate_cubic_through(&Matrix::identity(3), 3).unwrap();
        let report = find_icosahedral_sets(&gen.cubic, &SolveConfig { starts: 60, ..SolveConfig::default() }).unwrap();
        let sol = &report.solutions[0];
        for h in icosahedral_group() {
            let hc: M3 = std::array::from_fn(|i| std::array::from_fn(|j| c(h[(i, j)].to_f64())));
            let moved = solution(
                &NumericCubic::from_form(&gen.cubic),
                mat_mul(&sol.rotation, &hc),
                &axes_c64(&standard_icosahedron()),
            );
            assert!(same_axes(&moved.axes, &sol.axes));
            assert_eq!(moved.canonical_key, sol.canonical_key);
        }
    }

    #[test]
    fn output_is_deterministic() {
        let gen = generate_cubic_through(&Matrix::identity(3), 8).unwrap();
        let cfg = SolveConfig { starts: 40, seed: 99, ..SolveConfig::default() };
        let a = find_icosahedral_sets(&gen.cubic, &cfg).unwrap();
        let b = rayon::ThreadPoolBuilder::new()
            .num_threads(1)
            .build()
            .unwrap()
            .install(|| find_icosahedral_sets(&gen.cubic, &cfg).unwrap());
        assert_eq!(a.converged_starts, b.converged_starts);
        assert_eq!(a.solutions.len(), b.solutions.len());
        for (x, y) in a.solutions.iter().zip(&b.solutions) {
            assert_eq!(x.canonical_key, y.canonical_key);
            assert_eq!(x.rotation, y.rotation);
        }
    }

    #[test]
    fn invalid_config_rejected() {
        let gen = generate_cubic_through(&Matrix::identity(3), 8).unwrap();
        let cfg = SolveConfig { starts: 0, ..SolveConfig::default() };
        assert!(find_icosahedral_sets(&gen.cubic, &cfg).is_err());
    }
}
