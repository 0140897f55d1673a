//! Certified complex roots of univariate polynomials.
//!
//! Simultaneous Aberth iteration at a working precision above the requested
//! one, followed by clustering and a residual certificate. Failed
//! certificates double the working precision until a fixed cap.

use rug::Float;

use crate::bigcomplex::BigComplex;
use crate::field::ComplexEmbedding;
use crate::univariate::UniPoly;
use crate::{ExactError, Result};

/// Working precision never exceeds `requested · MAX_PRECISION_FACTOR`.
pub const MAX_PRECISION_FACTOR: u32 = 8;

#[derive(Clone, Debug)]
pub struct Root {
    pub value: BigComplex,
    pub multiplicity: usize,
}

#[derive(Clone, Debug)]
pub struct Roots {
    pub roots: Vec<Root>,
    /// Working precision at which the certificate passed.
    pub precision: u32,
    /// Smallest distance between two reported roots, if there are two.
    pub min_separation: Option<f64>,
    /// Largest `log₂` relative residual over the reported roots.
    pub log2_residual: f64,
}

impl Roots {
    /// Root values repeated by multiplicity.
    pub fn values(&self) -> Vec<BigComplex> {
        self.roots.iter().flat_map(|r| std::iter::repeat_n(r.value.clone(), r.multiplicity)).collect()
    }

    /// Multiplicities in decreasing order.
    pub fn partition(&self) -> Vec<usize> {
        let mut p: Vec<usize> = self.roots.iter().map(|r| r.multiplicity).collect();
        p.sort_unstable_by(|a, b| b.cmp(a));
        p
    }

    pub fn count(&self) -> usize {
        self.roots.iter().map(|r| r.multiplicity).sum()
    }
}

/// Roots of `Σ cₖ zᵏ` (coefficients low degree first), with clustered
/// multiplicities.
pub fn complex_roots(coeffs: &[BigComplex], prec: u32) -> Result<Roots> {
    let top = coeffs.iter().rposition(|c| !c.is_zero()).ok_or(ExactError::ZeroForm)?;
    if top == 0 {
        return Err(ExactError::ConstantPolynomial);
    }
    let zeros = coeffs.iter().position(|c| !c.is_zero()).unwrap_or(0);
    let reduced = &coeffs[zeros..=top];

    let mut wp = prec + 32;
    loop {
        let mut approx = if reduced.len() > 1 { aberth(reduced, wp) } else { Some(Vec::new()) };
        if let Some(found) = approx.as_mut() {
            found.extend(std::iter::repeat_n(BigComplex::zero(wp), zeros));
            let clusters = cluster(found, prec);
            let roots: Vec<Root> = clusters
                .into_iter()
                .map(|members| Root {
                    value: centroid(&members.iter().map(|&i| found[i].clone()).collect::<Vec<_>>()),
                    multiplicity: members.len(),
                })
                .collect();
            if let Some(log2_residual) = certify(coeffs, &roots, prec, wp) {
                return Ok(finish(roots, wp, log2_residual));
            }
        }
        if wp >= prec.saturating_mul(MAX_PRECISION_FACTOR) {
            return Err(ExactError::PrecisionUnachievable { bits: prec });
        }
        wp *= 2;
    }
}

/// Roots of an exact polynomial. Multiplicities come from the squarefree
/// decomposition, so no clustering threshold is involved.
pub fn exact_roots<F: ComplexEmbedding>(p: &UniPoly<F>, prec: u32) -> Result<Roots> {
    match p.degree() {
        None => return Err(ExactError::ZeroForm),
        Some(0) => return Err(ExactError::ConstantPolynomial),
        _ => {}
    }
    let mut roots = Vec::new();
    let mut worst = f64::NEG_INFINITY;
    let mut used = prec;
    for (factor, mult) in p.squarefree_decomposition() {
        if factor.degree() == Some(1) {
            let c = factor.coeffs();
            let r = -(c[0].clone() * &c[1].inv().expect("monic"));
            roots.push(Root { value: r.to_complex(prec + 32), multiplicity: mult });
            continue;
        }
        let mut wp = prec + 32;
        let simple = loop {
            let coeffs: Vec<BigComplex> = factor.coeffs().iter().map(|c| c.to_complex(wp)).collect();
            if let Some(found) = aberth(&coeffs, wp) {
                let candidate: Vec<Root> = found.into_iter().map(|value| Root { value, multiplicity: 1 }).collect();
                if let Some(res) = certify(&coeffs, &candidate, prec, wp) {
                    worst = worst.max(res);
                    used = used.max(wp);
                    break candidate;
                }
            }
            if wp >= prec.saturating_mul(MAX_PRECISION_FACTOR) {
                return Err(ExactError::PrecisionUnachievable { bits: prec });
            }
            wp *= 2;
        };
        roots.extend(simple.into_iter().map(|r| Root { multiplicity: mult, ..r }));
    }
    Ok(finish(roots, used, worst))
}

fn finish(roots: Vec<Root>, precision: u32, log2_residual: f64) -> Roots {
    let mut min_sep: Option<f64> = None;
    for i in 0..roots.len() {
        for j in i + 1..roots.len() {
            let d = (&roots[i].value - &roots[j].value).abs().to_f64();
            min_sep = Some(min_sep.map_or(d, |m| m.min(d)));
        }
    }
    Roots { roots, precision, min_separation: min_sep, log2_residual }
}

/// Horner evaluation of `p`, `p'` and `Σ|cₖ||z|ᵏ`.
fn horner(c: &[BigComplex], z: &BigComplex, wp: u32) -> (BigComplex, BigComplex, Float) {
    let n = c.len() - 1;
    let mut p = c[n].with_prec(wp);
    let mut dp = BigComplex::zero(wp);
    let az = z.abs();
    let mut scale = c[n].abs();
    for k in (0..n).rev() {
        dp = &(&dp * z) + &p;
        p = &(&p * z) + &c[k];
        scale = Float::with_val(wp, &scale * &az) + c[k].abs();
    }
    (p, dp, scale)
}

fn relative_residual(c: &[BigComplex], z: &BigComplex, wp: u32) -> f64 {
    let (p, _, scale) = horner(c, z, wp);
    if p.is_zero() {
        return f64::NEG_INFINITY;
    }
    let ratio = Float::with_val(wp, p.abs() / &scale);
    ratio.log2().to_f64()
}

/// Aberth–Ehrlich iteration. `None` when the iteration budget runs out.
fn aberth(c: &[BigComplex], wp: u32) -> Option<Vec<BigComplex>> {
    let n = c.len() - 1;
    let lead = c[n].abs();
    let mut radius = 0f64;
    for (k, ck) in c.iter().enumerate().take(n) {
        let ratio = Float::with_val(wp, ck.abs() / &lead).to_f64();
        if ratio > 0.0 {
            radius = radius.max(ratio.powf(1.0 / (n - k) as f64));
        }
    }
    if !(radius.is_finite() && radius > 0.0) {
        radius = 1.0;
    }
    let tau = std::f64::consts::TAU;
    let mut z: Vec<BigComplex> = (0..n)
        .map(|k| {
            let theta = tau * k as f64 / n as f64 + 0.7;
            BigComplex::from_f64(radius * theta.cos(), radius * theta.sin(), wp)
        })
        .collect();
    let mut done = vec![false; n];
    let tol_exp = -(wp as i32) + 12;
    let floor = -(wp as f64) + 2.0 * (n as f64 + 1.0).log2() + 8.0;
    let budget = 40 * n + 4 * wp as usize;
    let one = BigComplex::one(wp);
    for _ in 0..budget {
        if done.iter().all(|&d| d) {
            return Some(z);
        }
        for k in 0..n {
            if done[k] {
                continue;
            }
            let (p, dp, scale) = horner(c, &z[k], wp);
            if p.is_zero() {
                done[k] = true;
                continue;
            }
            if Float::with_val(wp, p.abs() / &scale).log2().to_f64() < floor {
                done[k] = true;
                continue;
            }
            if dp.is_zero() {
                z[k] = &z[k] + &BigComplex::from_f64(1e-3 * radius, 1e-3 * radius, wp);
                continue;
            }
            let ratio = &p / &dp;
            let mut repulsion = BigComplex::zero(wp);
            for j in 0..n {
                if j != k {
                    let diff = &z[k] - &z[j];
                    if diff.is_zero() {
                        continue;
                    }
                    repulsion = &repulsion + &(&one / &diff);
                }
            }
            let denom = &one - &(&ratio * &repulsion);
            let step = if denom.is_zero() { ratio } else { &ratio / &denom };
            if !step.is_finite() {
                return None;
            }
            z[k] = &z[k] - &step;
            let size = z[k].abs().max(&Float::with_val(wp, 1)).clone();
            let rel = Float::with_val(wp, step.abs() / &size);
            if rel.is_zero() || rel.get_exp().is_some_and(|e| e < tol_exp) {
                done[k] = true;
            }
        }
    }
    None
}

/// Groups indices whose values lie within `2^(−prec/4)` (relative to
/// `max(1, |z|)`), transitively.
fn cluster(values: &[BigComplex], prec: u32) -> Vec<Vec<usize>> {
    let n = values.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], i: usize) -> usize {
        let mut r = i;
        while p[r] != r {
            r = p[r];
        }
        let mut j = i;
        while p[j] != r {
            let next = p[j];
            p[j] = r;
            j = next;
        }
        r
    }
    let thresh = (-(prec as f64) / 4.0).exp2();
    for i in 0..n {
        for j in i + 1..n {
            let d = (&values[i] - &values[j]).abs().to_f64();
            let s = 1f64.max(values[i].abs().to_f64()).max(values[j].abs().to_f64());
            if d < thresh * s {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
    }
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut index_of = vec![usize::MAX; n];
    for i in 0..n {
        let r = find(&mut parent, i);
        if index_of[r] == usize::MAX {
            index_of[r] = groups.len();
            groups.push(Vec::new());
        }
        groups[index_of[r]].push(i);
    }
    groups
}

fn centroid(values: &[BigComplex]) -> BigComplex {
    let prec = values[0].prec();
    let sum = values.iter().fold(BigComplex::zero(prec), |acc, v| &acc + v);
    sum.scale(&Float::with_val(prec, Float::with_val(prec, 1) / values.len() as u32))
}

/// Largest log₂ relative residual when every root passes `2^(−prec/2)`.
fn certify(coeffs: &[BigComplex], roots: &[Root], prec: u32, wp: u32) -> Option<f64> {
    let bound = -(prec as f64) / 2.0;
    let mut worst = f64::NEG_INFINITY;
    for r in roots {
        let res = relative_residual(coeffs, &r.value, wp);
        if res.is_nan() || res >= bound {
            return None;
        }
        worst = worst.max(res);
    }
    Some(worst)
}

/// Monic coefficients (low degree first) of `∏ (z − rᵢ)`.
pub fn poly_from_roots(roots: &[BigComplex], prec: u32) -> Vec<BigComplex> {
    let mut c = vec![BigComplex::one(prec)];
    for r in roots {
        let mut next = vec![BigComplex::zero(prec); c.len() + 1];
        for (k, ck) in c.iter().enumerate() {
            next[k + 1] = &next[k + 1] + ck;
            next[k] = &next[k] - &(ck * r);
        }
        c = next;
    }
    c
}

/// Convenience: exact coefficients low degree first, embedded numerically.
pub fn embed_coeffs<F: ComplexEmbedding>(coeffs: &[F], prec: u32) -> Vec<BigComplex> {
    coeffs.iter().map(|c| if c.is_zero() { BigComplex::zero(prec) } else { c.to_complex(prec) }).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rug::Rational;

    fn c(re: f64) -> BigComplex {
        BigComplex::from_f64(re, 0.0, 128)
    }

    #[test]
    fn square_roots_of_one() {
        let r = complex_roots(&[c(-1.0), c(0.0), c(1.0)], 128).unwrap();
        assert_eq!(r.partition(), vec![1, 1]);
        let mut v: Vec<f64> = r.values().iter().map(|z| z.re.to_f64()).collect();
        v.sort_by(f64::total_cmp);
        assert!((v[0] + 1.0).abs() < 1e-30 && (v[1] - 1.0).abs() < 1e-30);
    }

    #[test]
    fn double_root_at_zero() {
        let r = complex_roots(&[c(0.0), c(0.0), c(1.0)], 128).unwrap();
        assert_eq!(r.roots.len(), 1);
        assert_eq!(r.roots[0].multiplicity, 2);
        assert!(r.roots[0].value.is_zero());
    }

    #[test]
    fn sixth_roots_of_unity() {
        let mut coeffs = vec![c(0.0); 7];
        coeffs[0] = c(-1.0);
        coeffs[6] = c(1.0);
        let r = complex_roots(&coeffs, 128).unwrap();
        assert_eq!(r.partition(), vec![1; 6]);
        for z in r.values() {
            let dev = Float::with_val(128, z.abs() - 1u32).abs();
            assert!(dev < 1e-30);
            let angle = z.im.to_f64().atan2(z.re.to_f64()) / (std::f64::consts::TAU / 6.0);
            assert!((angle - angle.round()).abs() < 1e-12);
        }
    }

    #[test]
    fn numeric_double_roots_cluster() {
        // (z - 1)^2 (z + 2)^2 (z - i)
        let roots = [c(1.0), c(1.0), c(-2.0), c(-2.0), BigComplex::from_f64(0.0, 1.0, 128)];
        let coeffs = poly_from_roots(&roots, 128);
        let r = complex_roots(&coeffs, 128).unwrap();
        assert_eq!(r.partition(), vec![2, 2, 1]);
    }

    #[test]
    fn exact_path_uses_squarefree_multiplicities() {
        // x^3 (x - 1)^2 (x^2 + 1)
        let x = UniPoly::new(vec![Rational::from(0), Rational::from(1)]);
        let p = x.pow(3).mul(&UniPoly::linear_root(Rational::from(1)).pow(2)).mul(&UniPoly::new(vec![
            Rational::from(1),
            Rational::from(0),
            Rational::from(1),
        ]));
        let r = exact_roots(&p, 128).unwrap();
        assert_eq!(r.partition(), vec![3, 2, 1, 1]);
        assert_eq!(r.count(), 7);
    }

    #[test]
    fn constant_is_rejected() {
        assert!(matches!(complex_roots(&[c(3.0)], 64), Err(ExactError::ConstantPolynomial)));
        assert!(matches!(complex_roots(&[c(0.0), c(0.0)], 64), Err(ExactError::ZeroForm)));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]
        #[test]
        fn reconstruction_matches_input(pts in proptest::collection::vec((-50i32..50, -50i32..50), 1..8)) {
            let prec = 128;
            let roots: Vec<BigComplex> = pts
                .iter()
                .enumerate()
                .map(|(k, &(a, b))| BigComplex::from_f64(a as f64 / 7.0 + k as f64 * 1e-3, b as f64 / 11.0, prec))
                .collect();
            let coeffs = poly_from_roots(&roots, prec);
            let found = complex_roots(&coeffs, prec).unwrap();
            let back = poly_from_roots(&found.values(), prec);
            let norm = coeffs.iter().map(|c| c.abs().to_f64()).fold(0.0, f64::max);
            for (a, b) in coeffs.iter().zip(&back) {
                prop_assert!((a - b).abs().to_f64() <= 1e-15 * norm);
            }
        }
    }
}
