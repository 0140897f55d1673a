//! JSON documents for cubics and sextics, and the scalar encoding they share.

use serde::{Deserialize, Serialize};

use icosa_core::so3::{from_coefficients, monomials, HarmonicForm, K};
use icosa_exact::{parse_rational, rational_string, BigComplex, ComplexEmbedding, QISqrt5, QSqrt5, Rational};

pub const FORMAT_VERSION: u32 = 1;
pub const CUBIC_BASIS: &str = "ternary-monomial-deg3";
pub const SEXTIC_BASIS: &str = "binary-sextic";

/// Exact values as `{"q": "p/q"}`, `{"q5": [a, b]}` for `a + b√5`,
/// `{"qi5": [a, b, c, d]}` for `(a + b√5) + i(c + d√5)`; numeric values as
/// `["re", "im"]` decimal strings.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScalarJson {
    Q { q: String },
    Q5 { q5: [String; 2] },
    Qi5 { qi5: [String; 4] },
    Numeric([String; 2]),
}

impl ScalarJson {
    pub fn rational(r: &Rational) -> Self {
        ScalarJson::Q { q: rational_string(r) }
    }

    pub fn qsqrt5(x: &QSqrt5) -> Self {
        if x.is_rational() {
            Self::rational(&x.a)
        } else {
            ScalarJson::Q5 { q5: x.to_strings() }
        }
    }

    pub fn exact(x: &K) -> Self {
        if x.is_real() {
            Self::qsqrt5(&x.re)
        } else {
            ScalarJson::Qi5 { qi5: x.to_strings() }
        }
    }

    pub fn numeric(z: &BigComplex) -> Self {
        ScalarJson::Numeric(z.to_decimal_strings(decimal_digits(z.prec())))
    }

    pub fn is_exact(&self) -> bool {
        !matches!(self, ScalarJson::Numeric(_))
    }

    pub fn to_exact(&self) -> Result<Option<K>, String> {
        let bad = |e: icosa_exact::ExactError| e.to_string();
        Ok(Some(match self {
            ScalarJson::Q { q } => K::from(QSqrt5::rational(parse_rational(q).map_err(bad)?)),
            ScalarJson::Q5 { q5 } => K::from(QSqrt5::from_strings(&q5[0], &q5[1]).map_err(bad)?),
            ScalarJson::Qi5 { qi5 } => QISqrt5::from_strings(&[&qi5[0], &qi5[1], &qi5[2], &qi5[3]]).map_err(bad)?,
            ScalarJson::Numeric(_) => return Ok(None),
        }))
    }

    pub fn to_complex(&self, prec: u32) -> Result<BigComplex, String> {
        match self {
            ScalarJson::Numeric([re, im]) => BigComplex::parse(re, im, prec).map_err(|e| e.to_string()),
            _ => Ok(self.to_exact()?.expect("exact scalar").to_complex(prec)),
        }
    }
}

/// Significant decimal digits carried by `prec` bits.
pub fn decimal_digits(prec: u32) -> usize {
    ((prec as f64) * std::f64::consts::LOG10_2).floor().max(1.0) as usize
}

/// Coefficients after decoding: exact when every scalar is exact.
#[derive(Clone, Debug)]
pub enum Coeffs {
    Exact(Vec<K>),
    Numeric(Vec<BigComplex>),
}

fn decode(scalars: &[ScalarJson], prec: u32) -> Result<Coeffs, String> {
    if scalars.iter().all(ScalarJson::is_exact) {
        Ok(Coeffs::Exact(scalars.iter().map(|s| s.to_exact().map(Option::unwrap)).collect::<Result<_, _>>()?))
    } else {
        Ok(Coeffs::Numeric(scalars.iter().map(|s| s.to_complex(prec)).collect::<Result<_, _>>()?))
    }
}

/// A harmonic cubic over the monomials `x₁³, x₁²x₂, x₁²x₃, x₁x₂², x₁x₂x₃,
/// x₁x₃², x₂³, x₂²x₃, x₂x₃², x₃³`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CubicDocument {
    pub version: u32,
    pub basis: String,
    pub coefficients: Vec<ScalarJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub precision: Option<u32>,
}

/// `u₀z₁⁶ + u₁z₁⁵z₂ + ⋯ + u₆z₂⁶`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SexticDocument {
    pub version: u32,
    #[serde(default = "sextic_basis")]
    pub basis: String,
    pub coefficients: Vec<ScalarJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub precision: Option<u32>,
}

fn sextic_basis() -> String {
    SEXTIC_BASIS.to_string()
}

#[derive(Clone, Debug)]
pub enum Cubic {
    Exact(HarmonicForm<K>),
    Numeric(Vec<BigComplex>),
}

fn check_header(version: u32, basis: &str, expected: &str, len: usize, want: usize) -> Result<(), String> {
    if version != FORMAT_VERSION {
        return Err(format!("unsupported format version {version}"));
    }
    if basis != expected {
        return Err(format!("basis must be {expected:?}, found {basis:?}"));
    }
    if len != want {
        return Err(format!("expected {want} coefficients, found {len}"));
    }
    Ok(())
}

/// `‖Δf‖` and `‖f‖` for a numeric cubic, in the coefficient 2-norm.
fn laplacian_ratio(c: &[BigComplex]) -> f64 {
    let prec = c[0].prec();
    let mons = monomials(3);
    let linear = monomials(1);
    let mut out = vec![BigComplex::zero(prec); 3];
    for (e, v) in mons.iter().zip(c) {
        for i in 0..3 {
            if e[i] >= 2 {
                let mut d = e.clone();
                d[i] -= 2;
                let k = linear.iter().position(|l| *l == d).expect("degree 1");
                out[k] = &out[k] + &(v * &BigComplex::from_i64((e[i] * (e[i] - 1)) as i64, prec));
            }
        }
    }
    let norm = |v: &[BigComplex]| v.iter().map(|z| z.abs().to_f64().powi(2)).sum::<f64>().sqrt();
    norm(&out) / norm(c)
}

impl CubicDocument {
    pub fn from_exact(f: &HarmonicForm<K>) -> Self {
        Self {
            version: FORMAT_VERSION,
            basis: CUBIC_BASIS.into(),
            coefficients: f.coefficients().iter().map(ScalarJson::exact).collect(),
            precision: None,
        }
    }

    pub fn decode(&self, default_prec: u32) -> Result<Cubic, String> {
        check_header(self.version, &self.basis, CUBIC_BASIS, self.coefficients.len(), 10)?;
        let prec = self.precision.unwrap_or(default_prec);
        match decode(&self.coefficients, prec)? {
            Coeffs::Exact(c) => {
                let poly = from_coefficients(3, &c).map_err(|e| e.to_string())?;
                let f = HarmonicForm::new(3, poly).map_err(|e| e.to_string())?;
                if f.is_zero() {
                    return Err("cubic is zero".into());
                }
                Ok(Cubic::Exact(f))
            }
            Coeffs::Numeric(c) => {
                if c.iter().all(BigComplex::is_zero) {
                    return Err("cubic is zero".into());
                }
                let ratio = laplacian_ratio(&c);
                if !(ratio < 1e-10) {
                    return Err(format!("cubic is not harmonic: ‖Δf‖/‖f‖ = {ratio:e}"));
                }
                Ok(Cubic::Numeric(c))
            }
        }
    }
}

impl SexticDocument {
    pub fn decode(&self, default_prec: u32) -> Result<Coeffs, String> {
        check_header(self.version, &self.basis, SEXTIC_BASIS, self.coefficients.len(), 7)?;
        let c = decode(&self.coefficients, self.precision.unwrap_or(default_prec))?;
        let zero = match &c {
            Coeffs::Exact(v) => v.iter().all(icosa_exact::Ring::is_zero),
            Coeffs::Numeric(v) => v.iter().all(BigComplex::is_zero),
        };
        if zero {
            return Err("sextic is zero".into());
        }
        Ok(c)
    }
}
