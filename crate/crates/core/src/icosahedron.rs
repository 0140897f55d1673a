//! Icosahedral and degenerate isotropic subspaces of the representation.

use std::collections::{HashSet, VecDeque};

use icosa_exact::{rank_of, Field, Matrix, MultiPoly, QSqrt5, Rational, Ring};

use crate::error::{CoreError, Result};
use crate::so3::{
    apply, bombieri, cross, dot, harmonic_space_basis, lie_action, linear_form, norm_form, project_fa, vector,
    HarmonicForm, Vector, WeightBasis, K, X,
};

/// Six axes, one per antipodal vertex pair.
#[derive(Clone, Debug, PartialEq)]
pub struct Icosahedron<F> {
    pub axes: [Vector<F>; 6],
}

impl<F: Field> Icosahedron<F> {
    /// Checks `(aᵢ,aⱼ)² = (1/5)(aᵢ,aᵢ)(aⱼ,aⱼ)` for every pair and that no two
    /// axes are proportional.
    pub fn new(axes: [Vector<F>; 6]) -> Result<Self> {
        let fifth = F::from_rational(&Rational::from((1, 5)));
        for i in 0..6 {
            if dot(&axes[i], &axes[i]).is_zero() {
                return Err(CoreError::Precondition(format!("axis {i} is null")));
            }
            for j in i + 1..6 {
                let ab = dot(&axes[i], &axes[j]);
                let lhs = ab.clone() * &ab - fifth.clone() * &dot(&axes[i], &axes[i]) * &dot(&axes[j], &axes[j]);
                if !lhs.is_zero() {
                    return Err(CoreError::Precondition(format!("axes {i} and {j} are not at the icosahedral angle")));
                }
                if cross(&axes[i], &axes[j]).iter().all(Ring::is_zero) {
                    return Err(CoreError::Precondition(format!("axes {i} and {j} are proportional")));
                }
            }
        }
        Ok(Self { axes })
    }

    pub fn rotated(&self, g: &Matrix<F>) -> Self {
        Self { axes: self.axes.clone().map(|a| apply(g, &a)) }
    }

    /// The twelve vertices `±aᵢ`.
    pub fn vertices(&self) -> Vec<Vector<F>> {
        self.axes.iter().flat_map(|a| [a.clone(), a.clone().map(|c| -c)]).collect()
    }

    pub fn cubics(&self) -> Vec<HarmonicForm<F>> {
        self.axes.iter().map(project_fa).collect()
    }
}

/// Axes `(0,1,φ), (0,−1,φ), (1,φ,0), (−1,φ,0), (φ,0,1), (φ,0,−1)`.
pub fn standard_icosahedron() -> Icosahedron<QSqrt5> {
    let phi = QSqrt5::phi();
    let o = QSqrt5::from(0);
    let p1 = QSqrt5::from(1);
    let m1 = QSqrt5::from(-1);
    Icosahedron {
        axes: [
            [o.clone(), p1.clone(), phi.clone()],
            [o.clone(), m1.clone(), phi.clone()],
            [p1.clone(), phi.clone(), o.clone()],
            [m1.clone(), phi.clone(), o.clone()],
            [phi.clone(), o.clone(), p1.clone()],
            [phi.clone(), o.clone(), m1],
        ],
    }
}

fn frame<F: Field>(p: &Vector<F>, q: &Vector<F>) -> Matrix<F> {
    let r = cross(p, q);
    Matrix::from_fn(3, 3, |i, j| match j {
        0 => p[i].clone(),
        1 => q[i].clone(),
        _ => r[i].clone(),
    })
}

fn matrix_key<F: Ring>(m: &Matrix<F>) -> Vec<F> {
    (0..3).flat_map(|i| (0..3).map(move |j| (i, j))).map(|(i, j)| m[(i, j)].clone()).collect()
}

/// `σ` with `g·aᵢ = ±a_σ(i)`, if `g` permutes the axes.
pub fn axis_permutation<F: Field>(ico: &Icosahedron<F>, g: &Matrix<F>) -> Option<Vec<usize>> {
    ico.axes
        .iter()
        .map(|a| {
            let ga = apply(g, a);
            ico.axes.iter().position(|b| ga == *b || ga.iter().zip(b).all(|(x, y)| x.clone() + y == F::zero()))
        })
        .collect()
}

/// All 60 rotations preserving the vertex set, obtained by sending one
/// adjacent vertex pair to every other.
pub fn icosahedral_group() -> Vec<Matrix<QSqrt5>> {
    let ico = standard_icosahedron();
    let verts = ico.vertices();
    let (p, q) = (&ico.axes[0], &ico.axes[1]);
    let edge = dot(p, q);
    let base_inv = frame(p, q).inverse().expect("independent axes");
    let mut out = Vec::new();
    for v in &verts {
        for w in &verts {
            if dot(v, w) != edge {
                continue;
            }
            let g = frame(v, w).try_mul(&base_inv).expect("3×3");
            if axis_permutation(&ico, &g).is_some() {
                out.push(g);
            }
        }
    }
    out
}

/// The half-turn `diag(−1, −1, 1)` and a rotation of order 5 about `a₁`.
pub fn icosahedral_generators() -> Result<(Matrix<QSqrt5>, Matrix<QSqrt5>)> {
    let mut half = Matrix::<QSqrt5>::identity(3);
    half[(0, 0)] = QSqrt5::from(-1);
    half[(1, 1)] = QSqrt5::from(-1);
    let a1 = standard_icosahedron().axes[0].clone();
    let phi = QSqrt5::phi();
    let five = icosahedral_group()
        .into_iter()
        .find(|g| apply(g, &a1) == a1 && g[(0, 0)].clone() + &g[(1, 1)] + &g[(2, 2)] == phi)
        .ok_or_else(|| CoreError::SearchFailed("no order-5 rotation about a1".into()))?;
    Ok((half, five))
}

/// Breadth-first closure of a generating set under multiplication.
pub fn closure<F: Field + std::hash::Hash + Eq>(gens: &[Matrix<F>]) -> Vec<Matrix<F>> {
    let id = Matrix::<F>::identity(3);
    let mut seen = HashSet::from([matrix_key(&id)]);
    let mut out = vec![id.clone()];
    let mut queue = VecDeque::from([id]);
    while let Some(m) = queue.pop_front() {
        for g in gens {
            let next = g.try_mul(&m).expect("3×3");
            if seen.insert(matrix_key(&next)) {
                out.push(next.clone());
                queue.push_back(next);
            }
        }
    }
    out
}

/// Which isotropic subspace a basis describes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SubspaceKind {
    Nondegenerate,
    Type1,
    Type2,
    WeightFamily,
}

#[derive(Clone, Debug)]
pub struct IsotropicSubspace<F: Ring> {
    pub d: u32,
    pub basis: Vec<HarmonicForm<F>>,
    pub kind: SubspaceKind,
    /// Number of `ω_{eₖ}(u, v)` values checked, all exactly zero.
    pub pairs_checked: usize,
}

/// `ω_x(u, v) = (x·u, v)`.
pub fn omega<F: Field>(x: &Vector<F>, u: &MultiPoly<F>, v: &MultiPoly<F>) -> Result<F> {
    bombieri(&lie_action(x, u), v)
}

/// First `(k, i, j)` with `ω_{eₖ}(uᵢ, uⱼ) ≠ 0`, or `None` when the span is
/// isotropic.
pub fn isotropy_defect<F: Field>(basis: &[HarmonicForm<F>]) -> Result<Option<(usize, usize, usize)>> {
    for k in 0..3 {
        let mut e = [0i64; 3];
        e[k] = 1;
        let x = vector::<F>(e);
        for (i, u) in basis.iter().enumerate() {
            let xu = lie_action(&x, u.poly());
            for (j, v) in basis.iter().enumerate() {
                if !bombieri(&xu, v.poly())?.is_zero() {
                    return Ok(Some((k, i, j)));
                }
            }
        }
    }
    Ok(None)
}

fn independent_subset<F: Field>(forms: &[HarmonicForm<F>]) -> Vec<HarmonicForm<F>> {
    let mut chosen: Vec<HarmonicForm<F>> = Vec::new();
    let mut rows: Vec<Vec<F>> = Vec::new();
    for f in forms {
        let mut trial = rows.clone();
        trial.push(f.coefficients());
        if rank_of(&trial) > rows.len() {
            rows = trial;
            chosen.push(f.clone());
        }
    }
    chosen
}

fn certified<F: Field>(d: u32, basis: Vec<HarmonicForm<F>>, kind: SubspaceKind) -> Result<IsotropicSubspace<F>> {
    if let Some((k, i, j)) = isotropy_defect(&basis)? {
        return Err(CoreError::Precondition(format!("ω_e{} does not vanish on basis pair ({i}, {j})", k + 1)));
    }
    let n = basis.len();
    Ok(IsotropicSubspace { d, basis, kind, pairs_checked: 3 * n * n })
}

/// `span{f_{aᵢ}}` with its isotropy certificate.
pub fn isotropic_span<F: Field>(ico: &Icosahedron<F>) -> Result<IsotropicSubspace<F>> {
    let basis = independent_subset(&ico.cubics());
    if basis.len() != 3 {
        return Err(CoreError::SpanDimension(basis.len()));
    }
    certified(3, basis, SubspaceKind::Nondegenerate)
}

/// Basis of the harmonic cubics vanishing at every axis, i.e. `U^⊥`.
pub fn cubics_through<F: Field>(ico: &Icosahedron<F>) -> Result<Vec<HarmonicForm<F>>> {
    let basis = harmonic_space_basis::<F>(3);
    let rows = ico
        .cubics()
        .iter()
        .map(|c| basis.iter().map(|h| bombieri(c.poly(), h)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_rows(rows)?
        .kernel_basis()
        .iter()
        .map(|k| {
            let p = k.iter().zip(&basis).fold(MultiPoly::zero_in(&X), |acc, (c, h)| acc + h.scale(c));
            HarmonicForm::new(3, p)
        })
        .collect()
}

/// Type 1: `{f_b, (a,x)²(b,x), (a,x)³}`; type 2:
/// `{(a,x)((b,x)² − (1/5)(b,b)(x,x)), (a,x)²(b,x), (a,x)³}`.
pub fn degenerate_subspace<F: Field>(kind: SubspaceKind, a: &Vector<F>, b: &Vector<F>) -> Result<IsotropicSubspace<F>> {
    if a.iter().all(Ring::is_zero) || !dot(a, a).is_zero() {
        return Err(CoreError::Precondition("a must be a nonzero null vector".into()));
    }
    if !dot(a, b).is_zero() {
        return Err(CoreError::Precondition("a and b must be orthogonal".into()));
    }
    let la = linear_form(a);
    let lb = linear_form(b);
    let first = match kind {
        SubspaceKind::Type1 => {
            if dot(b, b).is_zero() {
                return Err(CoreError::Precondition("type 1 needs (b, b) ≠ 0".into()));
            }
            project_fa(b).into_poly()
        }
        SubspaceKind::Type2 => {
            let fifth = F::from_rational(&Rational::from((1, 5))) * &dot(b, b);
            &la * &(lb.pow(2) - norm_form().scale(&fifth))
        }
        _ => return Err(CoreError::Precondition("kind must be Type1 or Type2".into())),
    };
    let basis = [first, &la.pow(2) * &lb, la.pow(3)]
        .into_iter()
        .map(|p| HarmonicForm::new(3, p))
        .collect::<Result<Vec<_>>>()?;
    if independent_subset(&basis).len() != 3 {
        return Err(CoreError::Precondition("b is proportional to a".into()));
    }
    certified(3, basis, kind)
}

/// Coefficients of `tᵏ` in the expansion of `f_{a+tb}` next to the
/// displayed closed forms.
#[derive(Clone, Debug)]
pub struct CoalescenceReport<F: Ring> {
    pub computed: Vec<MultiPoly<F>>,
    pub expected: Vec<MultiPoly<F>>,
    pub holds: bool,
}

/// Checks `f_{a+tb} = (a,x)³ + 3t(a,x)²(b,x) + 3t²(a,x)((b,x)² − (1/5)(b,b)(x,x)) + t³f_b`
/// as polynomials in `(t, x)`.
pub fn coalescence_expansion<F: Field>(a: &Vector<F>, b: &Vector<F>) -> Result<CoalescenceReport<F>> {
    if !dot(a, a).is_zero() || !dot(a, b).is_zero() {
        return Err(CoreError::Precondition("need (a,a) = 0 and (a,b) = 0".into()));
    }
    const TX: [&str; 4] = ["t", "x1", "x2", "x3"];
    let t = MultiPoly::<F>::var(&TX, 0);
    let embed = |p: &MultiPoly<F>| {
        let xs: Vec<MultiPoly<F>> = (1..4).map(|i| MultiPoly::var(&TX, i)).collect();
        p.substitute(&xs).expect("three variables")
    };
    let la = embed(&linear_form(a));
    let lb = embed(&linear_form(b));
    let lc = &la + &(&t * &lb);
    let cc = (&t.scale(&(F::from_int(2) * &dot(a, b)))) + &t.pow(2).scale(&dot(b, b));
    let three_fifths = MultiPoly::constant(F::from_rational(&Rational::from((3, 5))));
    let lhs = lc.pow(3) - &(&(&three_fifths * &lc) * &cc) * &embed(&norm_form());
    let by_t = lhs.coefficients_in(&[0]);
    let computed: Vec<MultiPoly<F>> = (0..4u32)
        .map(|k| by_t.get(&vec![k]).cloned().unwrap_or_else(|| MultiPoly::zero_in(&X)).with_vars(&X).expect("arity"))
        .collect();
    let ax = linear_form(a);
    let bx = linear_form(b);
    let fifth = F::from_rational(&Rational::from((1, 5))) * &dot(b, b);
    let expected = vec![
        ax.pow(3),
        (&ax.pow(2) * &bx).scale(&F::from_int(3)),
        (&ax * &(bx.pow(2) - norm_form().scale(&fifth))).scale(&F::from_int(3)),
        project_fa(b).into_poly(),
    ];
    let holds = computed == expected;
    Ok(CoalescenceReport { computed, expected, holds })
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Every `d`-element set of weights whose weight vectors span an isotropic
/// subspace, found by testing all `C(2d+1, d)` subsets against the
/// matrices of `ω_{e₁}, ω_{e₂}, ω_{e₃}` in the weight basis.
pub fn enumerate_isotropic_weight_subsets(d: u32) -> Result<Vec<Vec<i32>>> {
    let wb = WeightBasis::new(d)?;
    let n = wb.dim();
    let half = K::from_rational(&Rational::from((1, 2)));
    let minus_i = -K::i();
    // L₁ = (n⁺ + n⁻)/2, L₂ = (n⁺ − n⁻)/(2i), L₃ = −i·h
    let l1 = Matrix::from_fn(n, n, |i, j| (wb.n_plus[(i, j)].clone() + &wb.n_minus[(i, j)]) * &half);
    let l2 = Matrix::from_fn(n, n, |i, j| (wb.n_plus[(i, j)].clone() - &wb.n_minus[(i, j)]) * &half * &minus_i);
    let l3 = wb.h.map(|c| c.clone() * &minus_i);
    let gram =
        Matrix::from_fn(n, n, |i, j| bombieri(wb.vectors[i].poly(), wb.vectors[j].poly()).expect("equal degrees"));
    let mut conflict = vec![vec![false; n]; n];
    for l in [&l1, &l2, &l3] {
        let om = l.transpose().try_mul(&gram)?;
        for j in 0..n {
            for k in 0..n {
                if !om[(j, k)].is_zero() {
                    conflict[j][k] = true;
                    conflict[k][j] = true;
                }
            }
        }
    }
    let mut out = Vec::new();
    for subset in combinations(n, d as usize) {
        let ok = subset.iter().all(|&j| subset.iter().all(|&k| !conflict[j][k]));
        if ok {
            out.push(subset.iter().map(|&k| wb.weight(k)).collect());
        }
    }
    Ok(out)
}

/// `±{1, …, d}` and `±{0, 2, …, d}`, deduplicated.
pub fn expected_weight_families(d: u32) -> Vec<Vec<i32>> {
    let d = d as i32;
    let pos: Vec<i32> = (1..=d).collect();
    let zero: Vec<i32> = std::iter::once(0).chain(2..=d).collect();
    let neg = |v: &[i32]| {
        let mut w: Vec<i32> = v.iter().map(|x| -x).collect();
        w.sort();
        w
    };
    let mut fams = vec![neg(&pos), neg(&zero), zero.clone(), pos.clone()];
    fams.sort();
    fams.dedup();
    fams
}
