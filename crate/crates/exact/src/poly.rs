//! Sparse multivariate polynomials over any exact ring.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::bigcomplex::BigComplex;
use crate::field::{ComplexEmbedding, Ring};
use crate::{ExactError, Result};

/// A polynomial as a map from exponent vectors to nonzero coefficients.
///
/// A polynomial with an empty variable list is a free constant: it combines
/// with a polynomial in any variables. Two non-empty variable lists must match
/// exactly; the operators panic on mismatch and the `try_*` methods report it.
#[derive(Clone)]
pub struct MultiPoly<F> {
    vars: Arc<[String]>,
    terms: BTreeMap<Vec<u32>, F>,
}

impl<F: Ring> MultiPoly<F> {
    pub fn zero_in(vars: &[&str]) -> Self {
        Self { vars: vars.iter().map(|s| s.to_string()).collect(), terms: BTreeMap::new() }
    }

    fn empty_like(vars: &Arc<[String]>) -> Self {
        Self { vars: vars.clone(), terms: BTreeMap::new() }
    }

    pub fn constant_in(vars: &[&str], c: F) -> Self {
        let mut p = Self::zero_in(vars);
        let n = p.nvars();
        p.insert_term(vec![0; n], c);
        p
    }

    /// The free constant `c` (no variables).
    pub fn constant(c: F) -> Self {
        let mut p = Self { vars: Arc::from(Vec::<String>::new()), terms: BTreeMap::new() };
        p.insert_term(Vec::new(), c);
        p
    }

    /// The `idx`-th variable of `vars`.
    pub fn var(vars: &[&str], idx: usize) -> Self {
        let mut e = vec![0; vars.len()];
        e[idx] = 1;
        Self::monomial(vars, e, F::one())
    }

    pub fn monomial(vars: &[&str], exps: Vec<u32>, c: F) -> Self {
        assert_eq!(exps.len(), vars.len(), "exponent arity");
        let mut p = Self::zero_in(vars);
        p.insert_term(exps, c);
        p
    }

    /// Builds from `(exponents, coefficient)` pairs, summing duplicates.
    pub fn from_terms(vars: &[&str], terms: impl IntoIterator<Item = (Vec<u32>, F)>) -> Result<Self> {
        let mut p = Self::zero_in(vars);
        for (e, c) in terms {
            if e.len() != vars.len() {
                return Err(ExactError::ArityMismatch { expected: vars.len(), found: e.len() });
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &F)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exps: &[u32]) -> F {
        self.terms.get(exps).cloned().unwrap_or_else(F::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn insert_term(&mut self, e: Vec<u32>, c: F) {
        if !c.is_zero() {
            self.terms.insert(e, c);
        }
    }

    /// Adds `c·x^e` in place.
    pub fn add_term(&mut self, e: Vec<u32>, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&e) {
            Some(old) => {
                let s = old + c;
                self.insert_term(e, s);
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// `Some(d)` when every term has total degree `d`; the zero polynomial has none.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(|e| e.iter().sum::<u32>());
        let d = it.next()?;
        it.all(|x| x == d).then_some(d)
    }

    pub fn scale(&self, c: &F) -> Self {
        let mut out = Self::empty_like(&self.vars);
        if c.is_zero() {
            return out;
        }
        for (e, a) in &self.terms {
            out.insert_term(e.clone(), a.clone() * c);
        }
        out
    }

    fn check_vars(&self, other: &Self) -> Result<Arc<[String]>> {
        if self.vars == other.vars || other.vars.is_empty() {
            Ok(self.vars.clone())
        } else if self.vars.is_empty() {
            Ok(other.vars.clone())
        } else {
            Err(ExactError::VariableMismatch { expected: self.vars.to_vec(), found: other.vars.to_vec() })
        }
    }

    /// Re-expresses a free constant in `vars`; identity otherwise.
    fn lifted(&self, vars: &Arc<[String]>) -> Self {
        if self.vars.len() == vars.len() {
            return Self { vars: vars.clone(), terms: self.terms.clone() };
        }
        debug_assert!(self.vars.is_empty());
        let mut out = Self::empty_like(vars);
        if let Some(c) = self.terms.get(&Vec::new()) {
            out.insert_term(vec![0; vars.len()], c.clone());
        }
        out
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        let vars = self.check_vars(other)?;
        let mut out = self.lifted(&vars);
        for (e, c) in &other.lifted(&vars).terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        let vars = self.check_vars(other)?;
        let mut out = self.lifted(&vars);
        for (e, c) in &other.lifted(&vars).terms {
            out.add_term(e.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        let vars = self.check_vars(other)?;
        let a = self.lifted(&vars);
        let b = other.lifted(&vars);
        let mut out = Self::empty_like(&vars);
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca.clone() * cb);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::constant(F::one()).lifted_to(self);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    fn lifted_to(&self, other: &Self) -> Self {
        if self.vars.is_empty() {
            self.lifted(&other.vars)
        } else {
            self.clone()
        }
    }

    /// `∂/∂x_idx`.
    pub fn partial(&self, idx: usize) -> Self {
        let mut out = Self::empty_like(&self.vars);
        for (e, c) in &self.terms {
            if e[idx] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[idx] -= 1;
            out.add_term(e2, c.clone() * &F::from_int(e[idx] as i64));
        }
        out
    }

    /// Iterated partial derivative `∂^α`.
    pub fn partial_multi(&self, alpha: &[u32]) -> Self {
        let mut p = self.clone();
        for (i, &k) in alpha.iter().enumerate() {
            for _ in 0..k {
                p = p.partial(i);
            }
        }
        p
    }

    /// Evaluates at a full point.
    pub fn evaluate(&self, point: &[F]) -> Result<F> {
        if point.len() != self.nvars() {
            return Err(ExactError::ArityMismatch { expected: self.nvars(), found: point.len() });
        }
        let mut cache: Vec<Vec<F>> = point.iter().map(|x| vec![F::one(), x.clone()]).collect();
        let mut acc = F::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                while cache[i].len() <= k as usize {
                    let next = cache[i].last().unwrap().clone() * &point[i];
                    cache[i].push(next);
                }
                t = t * &cache[i][k as usize];
            }
            acc = acc + t;
        }
        Ok(acc)
    }

    /// Substitutes `subs[i]` for variable `i`; the result lives in the
    /// substitutes' variables.
    pub fn substitute(&self, subs: &[MultiPoly<F>]) -> Result<MultiPoly<F>> {
        if subs.len() != self.nvars() {
            return Err(ExactError::ArityMismatch { expected: self.nvars(), found: subs.len() });
        }
        let target = subs
            .iter()
            .find(|s| !s.vars.is_empty())
            .map(|s| s.vars.clone())
            .unwrap_or_else(|| Arc::from(Vec::<String>::new()));
        for s in subs {
            if !s.vars.is_empty() && s.vars != target {
                return Err(ExactError::VariableMismatch { expected: target.to_vec(), found: s.vars.to_vec() });
            }
        }
        let one = MultiPoly::constant(F::one()).lifted(&target);
        let mut powers: Vec<Vec<MultiPoly<F>>> = subs.iter().map(|s| vec![one.clone(), s.lifted(&target)]).collect();
        let mut out = Self::empty_like(&target);
        for (e, c) in &self.terms {
            let mut t = one.scale(c);
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                while powers[i].len() <= k as usize {
                    let next = powers[i].last().unwrap() * &powers[i][1];
                    powers[i].push(next);
                }
                t = &t * &powers[i][k as usize];
            }
            out = &out + &t;
        }
        Ok(out)
    }

    /// Groups terms by the exponents of the variables at `outer`, returning
    /// coefficient polynomials in the remaining variables.
    pub fn coefficients_in(&self, outer: &[usize]) -> BTreeMap<Vec<u32>, MultiPoly<F>> {
        let inner: Vec<usize> = (0..self.nvars()).filter(|i| !outer.contains(i)).collect();
        let inner_vars: Arc<[String]> = inner.iter().map(|&i| self.vars[i].clone()).collect();
        let mut out: BTreeMap<Vec<u32>, MultiPoly<F>> = BTreeMap::new();
        for (e, c) in &self.terms {
            let ko: Vec<u32> = outer.iter().map(|&i| e[i]).collect();
            let ki: Vec<u32> = inner.iter().map(|&i| e[i]).collect();
            out.entry(ko).or_insert_with(|| Self::empty_like(&inner_vars)).add_term(ki, c.clone());
        }
        out
    }

    /// Same terms under new variable names of equal arity.
    pub fn with_vars(&self, vars: &[&str]) -> Result<Self> {
        if vars.len() != self.nvars() && !self.vars.is_empty() {
            return Err(ExactError::ArityMismatch { expected: self.nvars(), found: vars.len() });
        }
        let v: Arc<[String]> = vars.iter().map(|s| s.to_string()).collect();
        Ok(self.lifted(&v))
    }

    pub fn map_coeffs<G: Ring>(&self, f: impl Fn(&F) -> G) -> MultiPoly<G> {
        let mut out = MultiPoly { vars: self.vars.clone(), terms: BTreeMap::new() };
        for (e, c) in &self.terms {
            out.insert_term(e.clone(), f(c));
        }
        out
    }

    /// Numerical evaluation through the field's complex embedding.
    pub fn eval_complex(&self, point: &[BigComplex], prec: u32) -> Result<BigComplex>
    where
        F: ComplexEmbedding,
    {
        if point.len() != self.nvars() {
            return Err(ExactError::ArityMismatch { expected: self.nvars(), found: point.len() });
        }
        let mut acc = BigComplex::zero(prec);
        for (e, c) in &self.terms {
            let mut t = c.to_complex(prec);
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    t = &t * &point[i].powu(k);
                }
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }
}

impl<F: Ring> PartialEq for MultiPoly<F> {
    fn eq(&self, other: &Self) -> bool {
        match self.check_vars(other) {
            Ok(vars) => self.lifted(&vars).terms == other.lifted(&vars).terms,
            Err(_) => false,
        }
    }
}

impl<'a, F: Ring> Add<&'a MultiPoly<F>> for &MultiPoly<F> {
    type Output = MultiPoly<F>;
    fn add(self, rhs: &'a MultiPoly<F>) -> MultiPoly<F> {
        self.try_add(rhs).expect("polynomial variables")
    }
}

impl<'a, F: Ring> Sub<&'a MultiPoly<F>> for &MultiPoly<F> {
    type Output = MultiPoly<F>;
    fn sub(self, rhs: &'a MultiPoly<F>) -> MultiPoly<F> {
        self.try_sub(rhs).expect("polynomial variables")
    }
}

impl<'a, F: Ring> Mul<&'a MultiPoly<F>> for &MultiPoly<F> {
    type Output = MultiPoly<F>;
    fn mul(self, rhs: &'a MultiPoly<F>) -> MultiPoly<F> {
        self.try_mul(rhs).expect("polynomial variables")
    }
}

impl<F: Ring> Neg for &MultiPoly<F> {
    type Output = MultiPoly<F>;
    fn neg(self) -> MultiPoly<F> {
        self.map_coeffs(|c| -c.clone())
    }
}

impl<F: Ring> Add for MultiPoly<F> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl<'a, F: Ring> Add<&'a MultiPoly<F>> for MultiPoly<F> {
    type Output = Self;
    fn add(self, rhs: &'a Self) -> Self {
        &self + rhs
    }
}

impl<F: Ring> Sub for MultiPoly<F> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl<'a, F: Ring> Sub<&'a MultiPoly<F>> for MultiPoly<F> {
    type Output = Self;
    fn sub(self, rhs: &'a Self) -> Self {
        &self - rhs
    }
}

impl<F: Ring> Mul for MultiPoly<F> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl<'a, F: Ring> Mul<&'a MultiPoly<F>> for MultiPoly<F> {
    type Output = Self;
    fn mul(self, rhs: &'a Self) -> Self {
        &self * rhs
    }
}

impl<F: Ring> Neg for MultiPoly<F> {
    type Output = Self;
    fn neg(self) -> Self {
        -&self
    }
}

impl<F: Ring> Ring for MultiPoly<F> {
    fn zero() -> Self {
        Self { vars: Arc::from(Vec::<String>::new()), terms: BTreeMap::new() }
    }
    fn one() -> Self {
        Self::constant(F::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn from_int(n: i64) -> Self {
        Self::constant(F::from_int(n))
    }
}

impl<F: Ring + fmt::Display> fmt::Display for MultiPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c}")?;
            for (i, &k) in e.iter().enumerate() {
                match k {
                    0 => {}
                    1 => write!(f, "*{}", self.vars[i])?,
                    _ => write!(f, "*{}^{}", self.vars[i], k)?,
                }
            }
        }
        Ok(())
    }
}

impl<F: Ring> fmt::Debug for MultiPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MultiPoly").field("vars", &self.vars).field("terms", &self.terms).finish()
    }
}
