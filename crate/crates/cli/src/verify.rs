//! The `verify` suites: exact and high-precision checks across the library.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use icosa_core::clebsch::{
    decagic_points, decagic_polynomial, orthogonal_triples, project_onto_complement, projection_family,
    quartic_r_check, sextic_at, triple_products,
};
use icosa_core::icosahedron::{
    enumerate_isotropic_weight_subsets, expected_weight_families, icosahedral_generators, isotropic_span,
    isotropy_defect, standard_icosahedron,
};
use icosa_core::invariants::{
    cubic_to_sextic, discriminant, discriminant_from_roots, j6_is_zero, j_invariants, root_profile, Sextic,
};
use icosa_core::pfaffian_curve::mu_cohomology_constants;
use icosa_core::picard::{developable_degree, known_class};
use icosa_core::so3::{bombieri, monomials, random_harmonic, random_vector, rotate, HarmonicForm, K};
use icosa_core::special_curve::{
    conic_intersection, function_divisor, point_order, special_conic, special_points, verify_covering_structure,
    CurveFunction, EcPoint, WeierstrassCurve, XY,
};
use icosa_exact::{rank_of, BigComplex, BinaryForm, ComplexEmbedding, Integer, MultiPoly, QSqrt5, Rational, Ring};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Clebsch,
    SpecialCurve,
    Weights,
    MuConstants,
    Invariants,
    All,
}

type Check = (&'static str, Box<dyn Fn() -> Result<String, String>>);

#[derive(Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Serialize)]
pub struct VerifyReport {
    pub suite: String,
    pub passed: bool,
    pub checks: Vec<CheckResult>,
}

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn q5_sextic(c: &[i64]) -> Sextic {
    Sextic::Exact(BinaryForm::new(c.iter().map(|&x| K::from(QSqrt5::from(x))).collect()))
}

fn clebsch_checks(prec: u32) -> Vec<Check> {
    vec![
        (
            "isotropic span",
            Box::new(|| {
                let span = isotropic_span(&standard_icosahedron()).map_err(err)?;
                ensure!(isotropy_defect(&span.basis).map_err(err)?.is_none(), "span is not isotropic");
                Ok(format!("dimension {}, isotropic", span.basis.len()))
            }),
        ),
        (
            "five orthogonal triples",
            Box::new(|| {
                let t = orthogonal_triples(&standard_icosahedron()).map_err(err)?;
                Ok(format!("{} triples", t.len()))
            }),
        ),
        (
            "triple product identities",
            Box::new(|| {
                let c = triple_products().map_err(err)?;
                ensure!(c.identities() == (true, true), "ΣP or ΣP³ is nonzero");
                let rows: Vec<Vec<QSqrt5>> = c.cubics.iter().map(HarmonicForm::coefficients).collect();
                ensure!(rank_of(&rows) == 4, "span has dimension {}", rank_of(&rows));
                let u = isotropic_span(&standard_icosahedron()).map_err(err)?;
                for p in &c.cubics {
                    for v in &u.basis {
                        ensure!(bombieri(p.poly(), v.poly()).map_err(err)?.is_zero(), "P_k not orthogonal to U₀");
                    }
                }
                Ok("ΣP ≡ 0, ΣP³ ≡ 0, span{P} = U₀^⊥".into())
            }),
        ),
        (
            "projection onto J6 = 0",
            Box::new(move || {
                let mut rng = ChaCha8Rng::seed_from_u64(5);
                for n in 0..10 {
                    let b = random_vector(&mut rng).map(QSqrt5::rational);
                    let pb = project_onto_complement(&b).map_err(err)?;
                    let s = Sextic::Exact(cubic_to_sextic(&pb).map_err(err)?);
                    ensure!(j6_is_zero(&s, prec).map_err(err)?, "p_b {n} has J6 ≠ 0");
                }
                Ok("10 random b".into())
            }),
        ),
        (
            "decagic",
            Box::new(move || {
                let d = decagic_polynomial();
                let (half, five) = icosahedral_generators().map_err(err)?;
                ensure!(rotate(&half, &d) == d && rotate(&five, &d) == d, "decagic is not invariant");
                for a in &standard_icosahedron().axes {
                    for k in 0..4 {
                        for e in monomials(k) {
                            ensure!(d.partial_multi(&e).evaluate(a).map_err(err)?.is_zero(), "order < 4 at {a:?}");
                        }
                    }
                }
                let fam = projection_family().map_err(err)?;
                for b in decagic_points(5, 7, prec).map_err(err)? {
                    let p = root_profile(&sextic_at(&fam, &b, prec), prec).map_err(err)?;
                    ensure!(p.partition == [2, 2, 2], "sample has profile {:?}", p.partition);
                }
                Ok("invariant, order 4 at the axes, samples give [2,2,2]".into())
            }),
        ),
        (
            "quartic on R",
            Box::new(|| {
                let r = quartic_r_check().map_err(err)?;
                ensure!(r.holds && r.sum_vanishes && r.cube_sum_vanishes, "{r:?}");
                Ok("9σ₂² − 20σ₄ ≡ 0".into())
            }),
        ),
        (
            "divisor classes",
            Box::new(|| {
                let k = |n: &str| known_class(n).expect("named class");
                let (r, rt, ks) = (k("R"), k("R~"), k("K_S"));
                ensure!(r.self_intersection() == 4 && r.degree() == 6, "R");
                ensure!(rt.self_intersection() == 4 && rt.degree() == 6, "R~");
                ensure!(r + rt == -4 * ks, "R + R~ ≠ −4K");
                ensure!(developable_degree(0, 6).map_err(err)? == 10, "developable degree");
                Ok("R² = R~² = 4, R + R~ = −4K, developable degree 10".into())
            }),
        ),
    ]
}

fn special_curve_checks() -> Vec<Check> {
    vec![
        (
            "cyclic group of order six",
            Box::new(|| {
                let c = WeierstrassCurve::special();
                let pts = special_points();
                for p in &pts {
                    for q in &pts {
                        ensure!(pts.contains(&c.add(p, q).map_err(err)?), "{p} + {q} leaves the set");
                    }
                }
                ensure!(point_order(&c, &EcPoint::affine(4, 10), 12).map_err(err)? == Some(6), "order of (4,10)");
                Ok("closed, generated by (4,10)".into())
            }),
        ),
        (
            "conic tangency",
            Box::new(|| {
                let d = conic_intersection(&WeierstrassCurve::special(), &special_conic()).map_err(err)?;
                ensure!(d.0.len() == 3 && d.0.values().all(|m| *m == 2), "intersection {d:?}");
                Ok("2(4,10) + 2(4,−10) + 2(−1,0)".into())
            }),
        ),
        (
            "principal divisors",
            Box::new(|| {
                let c = WeierstrassCurve::special();
                let x = MultiPoly::<Rational>::var(&XY, 0);
                let one = MultiPoly::constant_in(&XY, Rational::from(1));
                let d = function_divisor(&c, &CurveFunction::polynomial(&x + &one)).map_err(err)?;
                ensure!(d.degree() == 0 && d.get(&EcPoint::affine(-1, 0)) == 2, "div(x+1) = {d:?}");
                Ok("div(x + 1) = 2(−1,0) − 2∞".into())
            }),
        ),
        (
            "covering structure",
            Box::new(|| {
                let r = verify_covering_structure().map_err(err)?;
                ensure!(r.holds(), "{r:?}");
                Ok("div(p²) even, (5,1) over 0 and ∞".into())
            }),
        ),
    ]
}

fn weight_checks(max_d: u32) -> Vec<Check> {
    vec![(
        "weight families",
        Box::new(move || {
            for d in 2..=max_d {
                let found = enumerate_isotropic_weight_subsets(d).map_err(err)?;
                ensure!(found == expected_weight_families(d), "d = {d}: {found:?}");
            }
            Ok(format!("four families for 2 ≤ d ≤ {max_d}"))
        }),
    )]
}

fn mu_checks() -> Vec<Check> {
    vec![(
        "MU constants",
        Box::new(|| {
            let m = mu_cohomology_constants();
            ensure!(m.dual_c3 == 2, "c₃(E*) = {}", m.dual_c3);
            ensure!(m.k_roots == [Integer::from(-1), Integer::from(11)], "k roots {:?}", m.k_roots);
            ensure!(m.selected_k == -1, "k = {}", m.selected_k);
            Ok("c₃(E*) = 2, k = −1".into())
        }),
    )]
}

fn invariant_checks(prec: u32) -> Vec<Check> {
    vec![
        (
            "discriminant normalization",
            Box::new(|| {
                let Sextic::Exact(p) = q5_sextic(&[1, 0, 0, 0, 0, 0, -1]) else { unreachable!() };
                let d = discriminant(&p).map_err(err)?;
                ensure!(d == K::from(QSqrt5::from(46656)), "Δ(z⁶ − 1) = {d}");
                Ok("Δ(z⁶ − 1) = 46656".into())
            }),
        ),
        (
            "J6 identity",
            Box::new(move || {
                let mut rng = ChaCha8Rng::seed_from_u64(4);
                for _ in 0..10 {
                    let (a, b, c) = (rng.gen_range(1..=9), rng.gen_range(1..=9), rng.gen_range(-9..=-1));
                    let inv = j_invariants(&q5_sextic(&[0, 0, a, b, c, 0, 0]), prec).map_err(err)?;
                    let expected = Rational::from(b * b * (b * b - 4 * a * c).pow(2)) / 1024;
                    let exp = BigComplex::from_rational(&expected, prec);
                    let e = (&inv.j6 - &exp).abs().to_f64() / exp.abs().to_f64();
                    ensure!(e < 1e-20, "relative error {e:e}");
                }
                ensure!(j6_is_zero(&q5_sextic(&[0, 0, 1, -2, 1, 0, 0]), prec).map_err(err)?, "J6(z²(z−1)²)");
                ensure!(j6_is_zero(&q5_sextic(&[0, 0, 1, 0, -1, 0, 0]), prec).map_err(err)?, "J6(z²(z²−1))");
                Ok("J6(z²(az²+bz+c)) = b²(b²−4ac)²/1024; normal forms vanish".into())
            }),
        ),
        (
            "resultant against roots",
            Box::new(move || {
                let mut rng = ChaCha8Rng::seed_from_u64(12);
                let mut n = 0;
                while n < 20 {
                    let c: Vec<i64> =
                        (0..7).map(|i| if i == 0 { rng.gen_range(1..=9) } else { rng.gen_range(-9..=9) }).collect();
                    let p = q5_sextic(&c);
                    let Sextic::Exact(b) = &p else { unreachable!() };
                    let d = discriminant(b).map_err(err)?;
                    if d.is_zero() {
                        continue;
                    }
                    let exact = d.to_complex(prec);
                    let e = (&discriminant_from_roots(&p, prec).map_err(err)? - &exact).abs().to_f64()
                        / exact.abs().to_f64();
                    ensure!(e < 1e-25, "relative error {e:e}");
                    n += 1;
                }
                Ok("20 sextics agree".into())
            }),
        ),
        (
            "generic cubics off J6 = 0",
            Box::new(move || {
                let mut rng = ChaCha8Rng::seed_from_u64(8);
                for _ in 0..10 {
                    let f = random_harmonic(3, &mut rng);
                    let s = Sextic::Exact(cubic_to_sextic(&f).map_err(err)?);
                    ensure!(!j6_is_zero(&s, prec).map_err(err)?, "random cubic on J6 = 0");
                }
                Ok("10 random cubics".into())
            }),
        ),
    ]
}

fn checks(suite: Suite, max_d: u32, prec: u32) -> Vec<Check> {
    match suite {
        Suite::Clebsch => clebsch_checks(prec),
        Suite::SpecialCurve => special_curve_checks(),
        Suite::Weights => weight_checks(max_d),
        Suite::MuConstants => mu_checks(),
        Suite::Invariants => invariant_checks(prec),
        Suite::All => [Suite::Clebsch, Suite::SpecialCurve, Suite::Weights, Suite::MuConstants, Suite::Invariants]
            .into_iter()
            .flat_map(|s| checks(s, max_d, prec))
            .collect(),
    }
}

/// Runs the suite, logging each check to stderr and stopping at the first
/// failure.
pub fn run(suite: Suite, max_d: u32, prec: u32) -> VerifyReport {
    let mut results = Vec::new();
    for (name, check) in checks(suite, max_d, prec) {
        let outcome = check();
        let passed = outcome.is_ok();
        let detail = outcome.unwrap_or_else(|e| e);
        eprintln!("{} {name}: {detail}", if passed { "PASS" } else { "FAIL" });
        results.push(CheckResult { name, passed, detail });
        if !passed {
            break;
        }
    }
    let name = clap::ValueEnum::to_possible_value(&suite).map(|v| v.get_name().to_string()).unwrap_or_default();
    VerifyReport { suite: name, passed: results.iter().all(|r| r.passed), checks: results }
}
