//! Exact arithmetic on the elliptic curve `y² = x³ + x² + 4x + 4`: the group
//! law over ℚ, its tangency with the conic `y² = 4(2x − 3)(x + 1)`, and
//! divisors of rational functions.

use std::collections::BTreeMap;
use std::fmt;

use icosa_exact::{Integer, MultiPoly, Rational, Ring, UniPoly};

use crate::error::{CoreError, Result};

pub const XY: [&str; 2] = ["x", "y"];

/// `y² = x³ + a₂x² + a₄x + a₆`.
#[derive(Clone, Debug, PartialEq)]
pub struct WeierstrassCurve {
    pub a2: Rational,
    pub a4: Rational,
    pub a6: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EcPoint {
    Infinity,
    Affine { x: Rational, y: Rational },
}

impl EcPoint {
    pub fn affine(x: impl Into<Rational>, y: impl Into<Rational>) -> Self {
        EcPoint::Affine { x: x.into(), y: y.into() }
    }
}

impl fmt::Display for EcPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EcPoint::Infinity => write!(f, "∞"),
            EcPoint::Affine { x, y } => write!(f, "({x},{y})"),
        }
    }
}

impl WeierstrassCurve {
    pub fn new(a2: Rational, a4: Rational, a6: Rational) -> Result<Self> {
        let c = Self { a2, a4, a6 };
        if c.discriminant().is_zero() {
            return Err(CoreError::Precondition("singular cubic".into()));
        }
        Ok(c)
    }

    pub fn special() -> Self {
        Self::new(Rational::from(1), Rational::from(4), Rational::from(4)).expect("smooth")
    }

    /// Discriminant of the right-hand side.
    pub fn discriminant(&self) -> Rational {
        let (a, b, c) = (&self.a2, &self.a4, &self.a6);
        Rational::from(18) * a * b * c - Rational::from(4) * a.clone().pow(3) * c + a.clone().pow(2) * b.clone().pow(2)
            - Rational::from(4) * b.clone().pow(3)
            - Rational::from(27) * c.clone().pow(2)
    }

    pub fn rhs(&self) -> UniPoly<Rational> {
        UniPoly::new(vec![self.a6.clone(), self.a4.clone(), self.a2.clone(), Rational::from(1)])
    }

    pub fn contains(&self, p: &EcPoint) -> bool {
        match p {
            EcPoint::Infinity => true,
            EcPoint::Affine { x, y } => y.clone().pow(2) == self.rhs().eval(x),
        }
    }

    fn check(&self, p: &EcPoint) -> Result<()> {
        if self.contains(p) {
            Ok(())
        } else {
            Err(CoreError::OffCurve)
        }
    }

    pub fn neg(&self, p: &EcPoint) -> EcPoint {
        match p {
            EcPoint::Infinity => EcPoint::Infinity,
            EcPoint::Affine { x, y } => EcPoint::Affine { x: x.clone(), y: -y.clone() },
        }
    }

    pub fn add(&self, p: &EcPoint, q: &EcPoint) -> Result<EcPoint> {
        self.check(p)?;
        self.check(q)?;
        let (EcPoint::Affine { x: x1, y: y1 }, EcPoint::Affine { x: x2, y: y2 }) = (p, q) else {
            return Ok(if *p == EcPoint::Infinity { q.clone() } else { p.clone() });
        };
        let lambda = if x1 != x2 {
            (y2.clone() - y1) / (x2.clone() - x1)
        } else if y1 == y2 && !y1.is_zero() {
            (Rational::from(3) * x1.clone().pow(2) + Rational::from(2) * &self.a2 * x1 + &self.a4)
                / (Rational::from(2) * y1)
        } else {
            return Ok(EcPoint::Infinity);
        };
        let x3 = lambda.clone().pow(2) - &self.a2 - x1 - x2;
        let y3 = lambda * (x1.clone() - &x3) - y1;
        Ok(EcPoint::Affine { x: x3, y: y3 })
    }

    pub fn multiple(&self, p: &EcPoint, n: u64) -> Result<EcPoint> {
        let mut acc = EcPoint::Infinity;
        for _ in 0..n {
            acc = self.add(&acc, p)?;
        }
        Ok(acc)
    }
}

/// `ec_add` on the special curve.
pub fn ec_add(p: &EcPoint, q: &EcPoint) -> Result<EcPoint> {
    WeierstrassCurve::special().add(p, q)
}

/// Least `n ≤ bound` with `nP = ∞`, or `None`.
pub fn point_order(curve: &WeierstrassCurve, p: &EcPoint, bound: u64) -> Result<Option<u64>> {
    let mut acc = p.clone();
    for n in 1..=bound {
        if acc == EcPoint::Infinity {
            return Ok(Some(n));
        }
        acc = curve.add(&acc, p)?;
    }
    Ok(None)
}

/// The six rational points `∞, (4,−10), (0,−2), (−1,0), (0,2), (4,10)`.
pub fn special_points() -> Vec<EcPoint> {
    vec![
        EcPoint::Infinity,
        EcPoint::affine(4, -10),
        EcPoint::affine(0, -2),
        EcPoint::affine(-1, 0),
        EcPoint::affine(0, 2),
        EcPoint::affine(4, 10),
    ]
}

/// Multiplicities indexed by point, zero entries removed.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CurveDivisor(pub BTreeMap<EcPoint, i64>);

impl CurveDivisor {
    pub fn add_point(&mut self, p: EcPoint, m: i64) {
        let e = self.0.entry(p.clone()).or_insert(0);
        *e += m;
        if *e == 0 {
            self.0.remove(&p);
        }
    }

    pub fn degree(&self) -> i64 {
        self.0.values().sum()
    }

    pub fn support(&self) -> Vec<EcPoint> {
        self.0.keys().cloned().collect()
    }

    pub fn get(&self, p: &EcPoint) -> i64 {
        self.0.get(p).copied().unwrap_or(0)
    }

    pub fn scale(&self, k: i64) -> Self {
        let mut d = Self::default();
        for (p, m) in &self.0 {
            d.add_point(p.clone(), k * m);
        }
        d
    }

    /// `D / 2`, if every multiplicity is even.
    pub fn halve(&self) -> Option<Self> {
        self.0.values().all(|m| m % 2 == 0).then(|| {
            let mut d = Self::default();
            for (p, m) in &self.0 {
                d.add_point(p.clone(), m / 2);
            }
            d
        })
    }

    pub fn positive_part(&self) -> Self {
        Self(self.0.iter().filter(|(_, m)| **m > 0).map(|(p, m)| (p.clone(), *m)).collect())
    }

    pub fn negative_part(&self) -> Self {
        Self(self.0.iter().filter(|(_, m)| **m < 0).map(|(p, m)| (p.clone(), -m)).collect())
    }
}

impl std::ops::Add for &CurveDivisor {
    type Output = CurveDivisor;
    fn add(self, other: &CurveDivisor) -> CurveDivisor {
        let mut d = self.clone();
        for (p, m) in &other.0 {
            d.add_point(p.clone(), *m);
        }
        d
    }
}

/// `α(x) + β(x)y`, the canonical form of a polynomial function on the curve.
#[derive(Clone, Debug, PartialEq)]
pub struct Reduced {
    pub alpha: UniPoly<Rational>,
    pub beta: UniPoly<Rational>,
}

impl Reduced {
    pub fn is_zero(&self) -> bool {
        self.alpha.is_zero() && self.beta.is_zero()
    }

    /// `(α + βy)(α − βy) = α² − β²·rhs`.
    pub fn norm(&self, curve: &WeierstrassCurve) -> UniPoly<Rational> {
        self.alpha.mul(&self.alpha).sub(&self.beta.mul(&self.beta).mul(&curve.rhs()))
    }
}

pub fn reduce(curve: &WeierstrassCurve, p: &MultiPoly<Rational>) -> Result<Reduced> {
    if p.vars().len() != 2 {
        return Err(CoreError::Precondition("curve functions use the variables (x, y)".into()));
    }
    let rhs = curve.rhs();
    let mut alpha = UniPoly::zero();
    let mut beta = UniPoly::zero();
    for (e, c) in p.terms() {
        let mut coeffs = vec![Rational::new(); e[0] as usize];
        coeffs.push(c.clone());
        let t = UniPoly::new(coeffs).mul(&rhs.pow(e[1] / 2));
        if e[1] % 2 == 0 {
            alpha = alpha.add(&t);
        } else {
            beta = beta.add(&t);
        }
    }
    Ok(Reduced { alpha, beta })
}

/// A rational function `numerator / denominator` in `(x, y)`.
#[derive(Clone, Debug, PartialEq)]
pub struct CurveFunction {
    pub numerator: MultiPoly<Rational>,
    pub denominator: MultiPoly<Rational>,
}

impl CurveFunction {
    pub fn polynomial(p: MultiPoly<Rational>) -> Self {
        Self { numerator: p, denominator: MultiPoly::constant_in(&XY, Rational::from(1)) }
    }

    pub fn new(numerator: MultiPoly<Rational>, denominator: MultiPoly<Rational>) -> Self {
        Self { numerator, denominator }
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(&self.numerator * &other.numerator, &self.denominator * &other.denominator)
    }

    pub fn pow(&self, e: u32) -> Self {
        Self::new(self.numerator.pow(e), self.denominator.pow(e))
    }
}

/// `p² = (1 + x)⁵ (y − x − 2) / (y + 3x − 2)⁵`.
pub fn covering_square() -> CurveFunction {
    let x = MultiPoly::<Rational>::var(&XY, 0);
    let y = MultiPoly::<Rational>::var(&XY, 1);
    let c = |n: i64| MultiPoly::constant_in(&XY, Rational::from(n));
    let num = (&c(1) + &x).pow(5) * (&(&y - &x) - &c(2));
    let den = (&(&y + &x.scale(&Rational::from(3))) - &c(2)).pow(5);
    CurveFunction::new(num, den)
}

fn order_at_root(p: &UniPoly<Rational>, x0: &Rational) -> i64 {
    let lin = UniPoly::new(vec![-x0.clone(), Rational::from(1)]);
    let mut q = p.clone();
    let mut k = 0;
    while !q.is_zero() {
        let (quo, rem) = q.div_rem(&lin).expect("nonzero divisor");
        if !rem.is_zero() {
            break;
        }
        q = quo;
        k += 1;
    }
    k
}

fn strip_root(p: &UniPoly<Rational>, x0: &Rational, k: i64) -> UniPoly<Rational> {
    let lin = UniPoly::new(vec![-x0.clone(), Rational::from(1)]);
    (0..k).fold(p.clone(), |q, _| q.div_rem(&lin).expect("nonzero divisor").0)
}

fn degree(p: &UniPoly<Rational>) -> i64 {
    p.degree().map_or(i64::MAX, |d| d as i64)
}

/// Order of `α + βy` at an affine point of the curve.
fn affine_order(curve: &WeierstrassCurve, g: &Reduced, x0: &Rational, y0: &Rational) -> i64 {
    if y0.is_zero() {
        // Local parameter y, with ord(x − x₀) = 2; the two orders have
        // different parity, so they cannot cancel.
        let a = if g.alpha.is_zero() { i64::MAX } else { 2 * order_at_root(&g.alpha, x0) };
        let b = if g.beta.is_zero() { i64::MAX } else { 2 * order_at_root(&g.beta, x0) + 1 };
        return a.min(b);
    }
    let value = g.alpha.eval(x0) + g.beta.eval(x0) * y0;
    if !value.is_zero() {
        return 0;
    }
    let conj = g.alpha.eval(x0) - g.beta.eval(x0) * y0;
    if !conj.is_zero() {
        return order_at_root(&g.norm(curve), x0);
    }
    // Both α(x₀) and β(x₀) vanish: pull out the common power of x − x₀,
    // which is a local parameter at both points over x₀.
    let ord = |p: &UniPoly<Rational>| if p.is_zero() { i64::MAX } else { order_at_root(p, x0) };
    let k = ord(&g.alpha).min(ord(&g.beta));
    let rest = Reduced { alpha: strip_root(&g.alpha, x0, k), beta: strip_root(&g.beta, x0, k) };
    k + affine_order(curve, &rest, x0, y0)
}

/// `ord_∞`, using `ord(x) = −2` and `ord(y) = −3`.
fn infinity_order(g: &Reduced) -> i64 {
    let a = if g.alpha.is_zero() { i64::MAX } else { -2 * degree(&g.alpha) };
    let b = if g.beta.is_zero() { i64::MAX } else { -2 * degree(&g.beta) - 3 };
    a.min(b)
}

fn divisors(n: &Integer) -> Result<Vec<Integer>> {
    let n = n.clone().abs();
    let Some(m) = n.to_u64() else {
        return Err(CoreError::Precondition("coefficients too large for rational root search".into()));
    };
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= m {
        if m % d == 0 {
            out.push(Integer::from(d));
            out.push(Integer::from(m / d));
        }
        d += 1;
    }
    Ok(out)
}

/// Rational roots of a nonzero polynomial; `IrrationalSupport` if it has
/// any other roots.
pub fn rational_roots(p: &UniPoly<Rational>) -> Result<Vec<Rational>> {
    let mut roots = Vec::new();
    for (factor, _) in p.squarefree_decomposition() {
        let mut rest = factor;
        let lcm = rest.coeffs().iter().fold(Integer::from(1), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<Integer> = rest.coeffs().iter().map(|c| (c.clone() * &lcm).numer().clone()).collect();
        let low = ints.iter().position(|c| *c != 0).expect("nonzero factor");
        if low > 0 {
            roots.push(Rational::new());
            rest = strip_root(&rest, &Rational::new(), 1);
        }
        let (a0, an) = (&ints[low], ints.last().expect("nonzero"));
        for p in divisors(a0)? {
            for q in divisors(an)? {
                for s in [1, -1] {
                    let r = Rational::from((p.clone() * s, q.clone()));
                    if rest.degree().unwrap_or(0) > 0 && rest.eval(&r).is_zero() {
                        rest = strip_root(&rest, &r, 1);
                        roots.push(r);
                    }
                }
            }
        }
        if rest.degree().unwrap_or(0) > 0 {
            return Err(CoreError::IrrationalSupport);
        }
    }
    roots.sort();
    roots.dedup();
    Ok(roots)
}

fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if *r < 0 {
        return None;
    }
    let (n, d) = (r.numer(), r.denom());
    (n.is_perfect_square() && d.is_perfect_square()).then(|| Rational::from((n.clone().sqrt(), d.clone().sqrt())))
}

/// Points over the rational roots of the norm of `g`.
fn candidate_points(curve: &WeierstrassCurve, g: &Reduced) -> Result<Vec<EcPoint>> {
    let norm = g.norm(curve);
    let mut out = Vec::new();
    if norm.degree().unwrap_or(0) == 0 {
        return Ok(out);
    }
    for x0 in rational_roots(&norm)? {
        let v = curve.rhs().eval(&x0);
        let Some(y0) = rational_sqrt(&v) else {
            return Err(CoreError::IrrationalSupport);
        };
        out.push(EcPoint::Affine { x: x0.clone(), y: y0.clone() });
        if !y0.is_zero() {
            out.push(EcPoint::Affine { x: x0, y: -y0 });
        }
    }
    Ok(out)
}

/// Divisor of a polynomial function `α + βy` on the curve.
pub fn polynomial_divisor(curve: &WeierstrassCurve, g: &Reduced) -> Result<CurveDivisor> {
    if g.is_zero() {
        return Err(CoreError::ZeroFunction);
    }
    let mut d = CurveDivisor::default();
    for p in candidate_points(curve, g)? {
        let EcPoint::Affine { x, y } = &p else { unreachable!() };
        let m = affine_order(curve, g, x, y);
        d.add_point(p, m);
    }
    d.add_point(EcPoint::Infinity, infinity_order(g));
    Ok(d)
}

pub fn function_divisor(curve: &WeierstrassCurve, h: &CurveFunction) -> Result<CurveDivisor> {
    let num = reduce(curve, &h.numerator)?;
    let den = reduce(curve, &h.denominator)?;
    if num.is_zero() || den.is_zero() {
        return Err(CoreError::ZeroFunction);
    }
    Ok(&polynomial_divisor(curve, &num)? + &polynomial_divisor(curve, &den)?.scale(-1))
}

/// Intersection of the curve with the conic `y² = c(x)`, `deg c ≤ 2`.
pub fn conic_intersection(curve: &WeierstrassCurve, conic: &UniPoly<Rational>) -> Result<CurveDivisor> {
    if conic.degree().is_some_and(|d| d > 2) {
        return Err(CoreError::Precondition("conic must be y² = c(x) with deg c ≤ 2".into()));
    }
    let diff = Reduced { alpha: curve.rhs().sub(conic), beta: UniPoly::zero() };
    let mut d = polynomial_divisor(curve, &diff)?;
    d.0.remove(&EcPoint::Infinity);
    Ok(d)
}

/// `c(x) = 4(2x − 3)(x + 1)`.
pub fn special_conic() -> UniPoly<Rational> {
    UniPoly::new(vec![Rational::from(-12), Rational::from(-4), Rational::from(8)])
}

#[derive(Clone, Debug, PartialEq)]
pub struct CoveringReport {
    pub div_p_squared: CurveDivisor,
    pub div_p: Option<CurveDivisor>,
    pub even: bool,
    /// Multiplicities of the zero and pole fibres of `p`, largest first.
    pub zero_profile: Vec<i64>,
    pub pole_profile: Vec<i64>,
    pub support_in_rational_points: bool,
}

impl CoveringReport {
    pub fn holds(&self) -> bool {
        self.even && self.zero_profile == [5, 1] && self.pole_profile == [5, 1] && self.support_in_rational_points
    }
}

/// Checks `div(p²)` and the ramification of `p` over `0` and `∞`. The fibre
/// over the third branch point is not determined by `p²`.
pub fn verify_covering_structure() -> Result<CoveringReport> {
    let curve = WeierstrassCurve::special();
    let d = function_divisor(&curve, &covering_square())?;
    let div_p = d.halve();
    let profile = |d: &CurveDivisor| {
        let mut v: Vec<i64> = d.0.values().copied().collect();
        v.sort_by(|a, b| b.cmp(a));
        v
    };
    let (zero_profile, pole_profile) = match &div_p {
        Some(h) => (profile(&h.positive_part()), profile(&h.negative_part())),
        None => (vec![], vec![]),
    };
    let points = special_points();
    Ok(CoveringReport {
        even: div_p.is_some(),
        support_in_rational_points: d.support().iter().all(|p| points.contains(p)),
        div_p_squared: d,
        div_p,
        zero_profile,
        pole_profile,
    })
}
