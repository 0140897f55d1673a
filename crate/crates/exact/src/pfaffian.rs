//! Skew-symmetric matrices over a ring and their Pfaffians.

use std::collections::HashMap;

use crate::field::Ring;
use crate::{ExactError, Result};

/// Largest dimension accepted by [`pfaffian`].
pub const MAX_PFAFFIAN_DIM: usize = 12;

/// Skew matrix storing only the strict upper triangle.
#[derive(Clone, Debug, PartialEq)]
pub struct SkewMatrix<R> {
    n: usize,
    upper: Vec<R>,
}

impl<R: Ring> SkewMatrix<R> {
    pub fn zeros(n: usize) -> Self {
        Self { n, upper: vec![R::zero(); n * n.saturating_sub(1) / 2] }
    }

    /// Builds from the upper triangle of `entry(i, j)`, `i < j`.
    pub fn from_fn(n: usize, mut entry: impl FnMut(usize, usize) -> R) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            for j in i + 1..n {
                let k = m.slot(i, j);
                m.upper[k] = entry(i, j);
            }
        }
        m
    }

    /// Accepts a full square matrix after checking `M = -Mᵀ` and a zero diagonal.
    pub fn from_dense(rows: &[Vec<R>]) -> Option<Self> {
        let n = rows.len();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n || !row[i].is_zero() {
                return None;
            }
            for j in i + 1..n {
                if row[j] != -rows[j][i].clone() {
                    return None;
                }
            }
        }
        Some(Self::from_fn(n, |i, j| rows[i][j].clone()))
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    fn slot(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < j);
        i * (2 * self.n - i - 1) / 2 + (j - i - 1)
    }

    pub fn get(&self, i: usize, j: usize) -> R {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Equal => R::zero(),
            Less => self.upper[self.slot(i, j)].clone(),
            Greater => -self.upper[self.slot(j, i)].clone(),
        }
    }

    pub fn to_dense(&self) -> Vec<Vec<R>> {
        (0..self.n).map(|i| (0..self.n).map(|j| self.get(i, j)).collect()).collect()
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> SkewMatrix<S> {
        SkewMatrix { n: self.n, upper: self.upper.iter().map(f).collect() }
    }

    /// `Σ cᵢ Mᵢ` for skew matrices of equal dimension.
    pub fn linear_combination(coeffs: &[R], mats: &[SkewMatrix<R>]) -> Self {
        let n = mats.first().map_or(0, |m| m.n);
        let mut out = Self::zeros(n);
        for (c, m) in coeffs.iter().zip(mats) {
            for (o, e) in out.upper.iter_mut().zip(&m.upper) {
                if !e.is_zero() {
                    *o = o.clone() + c.clone() * e;
                }
            }
        }
        out
    }
}

/// Pfaffian by recursive expansion along the first remaining row, memoized
/// on the set of remaining indices.
pub fn pfaffian<R: Ring>(m: &SkewMatrix<R>) -> Result<R> {
    let n = m.dim();
    if n % 2 == 1 {
        return Err(ExactError::OddDimension(n));
    }
    if n > MAX_PFAFFIAN_DIM {
        return Err(ExactError::DimensionTooLarge { found: n, max: MAX_PFAFFIAN_DIM });
    }
    let mut memo = HashMap::new();
    Ok(pf_rec(m, (1u32 << n) - 1, &mut memo))
}

fn pf_rec<R: Ring>(m: &SkewMatrix<R>, mask: u32, memo: &mut HashMap<u32, R>) -> R {
    if mask == 0 {
        return R::one();
    }
    if let Some(v) = memo.get(&mask) {
        return v.clone();
    }
    let first = mask.trailing_zeros() as usize;
    let rest = mask & !(1 << first);
    let mut acc = R::zero();
    let mut sign_positive = true;
    let mut bits = rest;
    while bits != 0 {
        let j = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        let entry = m.get(first, j);
        if !entry.is_zero() {
            let sub = pf_rec(m, rest & !(1 << j), memo);
            let term = entry * &sub;
            acc = if sign_positive { acc + term } else { acc - term };
        }
        sign_positive = !sign_positive;
    }
    memo.insert(mask, acc.clone());
    acc
}

/// Determinant over any commutative ring by memoized Laplace expansion.
///
/// Division-free, so it also works for polynomial entries; cost is
/// `O(n·2ⁿ)` ring operations.
pub fn det_expansion<R: Ring>(rows: &[Vec<R>]) -> R {
    let n = rows.len();
    assert!(n <= 20, "det_expansion is exponential in the dimension");
    let mut memo: HashMap<u32, R> = HashMap::new();
    det_rec(rows, 0, (1u32 << n) - 1, &mut memo)
}

fn det_rec<R: Ring>(rows: &[Vec<R>], r: usize, cols: u32, memo: &mut HashMap<u32, R>) -> R {
    if cols == 0 {
        return R::one();
    }
    if let Some(v) = memo.get(&cols) {
        return v.clone();
    }
    let mut acc = R::zero();
    let mut sign_positive = true;
    let mut bits = cols;
    while bits != 0 {
        let c = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        let entry = &rows[r][c];
        if !entry.is_zero() {
            let sub = det_rec(rows, r + 1, cols & !(1 << c), memo);
            let term = entry.clone() * &sub;
            acc = if sign_positive { acc + term } else { acc - term };
        }
        sign_positive = !sign_positive;
    }
    memo.insert(cols, acc.clone());
    acc
}
