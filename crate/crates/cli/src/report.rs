//! JSON reports for `classify` and `find-icosa`.

use num_complex::Complex64;
use serde::Serialize;

use icosa_core::invariants::{
    classify_sextic, cubic_to_sextic, j_invariants, sextic_of_cubic_coeffs, BundleClassification, DeltaMethod, Scalar,
    Sextic, Verdict,
};
use icosa_core::solver::{
    find_icosahedral_sets, find_icosahedral_sets_numeric, NumericCubic, SolveConfig, SolveReport,
};
use icosa_core::{CoreError, Result};
use icosa_exact::BigComplex;

use crate::document::{Coeffs, Cubic, ScalarJson};

#[derive(Serialize)]
pub struct InvariantsJson {
    #[serde(rename = "A")]
    pub a: ScalarJson,
    #[serde(rename = "B")]
    pub b: ScalarJson,
    #[serde(rename = "C")]
    pub c: ScalarJson,
    pub delta: ScalarJson,
    pub j6: ScalarJson,
    pub j10: ScalarJson,
    pub delta_method: &'static str,
}

#[derive(Serialize)]
pub struct FlagsJson {
    pub delta_zero: bool,
    pub j6_zero: bool,
    pub square_of_cubic: bool,
    pub harmonic_double_pair: bool,
    pub single_root: bool,
}

#[derive(Serialize)]
pub struct SolverSummary {
    pub classes: usize,
    pub converged_starts: usize,
    pub starts: usize,
    pub family_signature: bool,
    pub residuals: Vec<String>,
}

#[derive(Serialize)]
pub struct ClassificationReport {
    pub precision: u32,
    pub invariants: InvariantsJson,
    pub flags: FlagsJson,
    pub partition: Vec<usize>,
    pub verdict: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub solver: Option<SolverSummary>,
}

fn scalar(s: &Scalar) -> ScalarJson {
    match s {
        Scalar::Exact(k) => ScalarJson::exact(k),
        Scalar::Numeric(z) => ScalarJson::numeric(z),
    }
}

pub fn verdict_name(v: Verdict) -> String {
    format!("{v:?}")
}

pub fn sextic_of(cubic: &Cubic, prec: u32) -> Result<Sextic> {
    Ok(match cubic {
        Cubic::Exact(f) => Sextic::Exact(cubic_to_sextic(f)?),
        Cubic::Numeric(c) => Sextic::Numeric(sextic_of_cubic_coeffs(c, prec)),
    })
}

pub fn sextic_from_coeffs(c: Coeffs) -> Sextic {
    match c {
        Coeffs::Exact(v) => Sextic::Exact(icosa_exact::BinaryForm::new(v)),
        Coeffs::Numeric(v) => Sextic::Numeric(v),
    }
}

pub fn classify(sextic: &Sextic, prec: u32, solver: Option<SolverSummary>) -> Result<ClassificationReport> {
    if sextic.degree() != 6 {
        return Err(CoreError::DegreeMismatch { left: sextic.degree() as u32, right: 6 });
    }
    let inv = j_invariants(sextic, prec)?;
    let BundleClassification { verdict, flags, partition } = classify_sextic(sextic, prec)?;
    Ok(ClassificationReport {
        precision: prec,
        invariants: InvariantsJson {
            a: ScalarJson::numeric(&inv.a),
            b: ScalarJson::numeric(&inv.b),
            c: ScalarJson::numeric(&inv.c),
            delta: scalar(&inv.delta),
            j6: ScalarJson::numeric(&inv.j6),
            j10: scalar(&inv.j10),
            delta_method: match inv.method {
                DeltaMethod::Resultant => "resultant",
                DeltaMethod::RootProduct => "root-product",
            },
        },
        flags: FlagsJson {
            delta_zero: flags.delta_zero,
            j6_zero: flags.j6_zero,
            square_of_cubic: flags.square_of_cubic,
            harmonic_double_pair: flags.harmonic_double_pair,
            single_root: flags.single_root,
        },
        partition,
        verdict: verdict_name(verdict),
        solver,
    })
}

fn numeric_cubic(c: &[BigComplex]) -> NumericCubic {
    let v: Vec<Complex64> = c
        .iter()
        .map(|z| {
            let (re, im) = z.to_f64_pair();
            Complex64::new(re, im)
        })
        .collect();
    NumericCubic { coeffs: v.try_into().expect("ten coefficients") }
}

pub fn solve(cubic: &Cubic, cfg: &SolveConfig) -> Result<SolveReport> {
    match cubic {
        Cubic::Exact(f) => find_icosahedral_sets(f, cfg),
        Cubic::Numeric(c) => find_icosahedral_sets_numeric(&numeric_cubic(c), cfg),
    }
}

pub fn summary(r: &SolveReport) -> SolverSummary {
    SolverSummary {
        classes: r.solutions.len(),
        converged_starts: r.converged_starts,
        starts: r.starts,
        family_signature: r.family_signature,
        residuals: r.solutions.iter().map(|s| format!("{:e}", s.residual)).collect(),
    }
}

#[derive(Serialize)]
pub struct SolutionJson {
    pub residual: String,
    /// `g·aᵢ` as `[re, im]` pairs.
    pub axes: Vec<[[String; 2]; 3]>,
    pub rotation: [[[String; 2]; 3]; 3],
}

#[derive(Serialize)]
pub struct FindReport {
    pub classes: usize,
    pub starts: usize,
    pub converged_starts: usize,
    pub seed: u64,
    pub tol: String,
    pub family_signature: bool,
    pub verdict: Option<String>,
    pub solutions: Vec<SolutionJson>,
}

fn c64(z: &Complex64) -> [String; 2] {
    [z.re.to_string(), z.im.to_string()]
}

pub fn find_report(r: &SolveReport, cfg: &SolveConfig) -> FindReport {
    FindReport {
        classes: r.solutions.len(),
        starts: r.starts,
        converged_starts: r.converged_starts,
        seed: cfg.seed,
        tol: format!("{:e}", cfg.tol),
        family_signature: r.family_signature,
        verdict: r.verdict.map(verdict_name),
        solutions: r
            .solutions
            .iter()
            .map(|s| SolutionJson {
                residual: format!("{:e}", s.residual),
                axes: s.axes.iter().map(|a| a.each_ref().map(c64)).collect(),
                rotation: s.rotation.each_ref().map(|row| row.each_ref().map(c64)),
            })
            .collect(),
    }
}
