use icosa_exact::ExactError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CoreError {
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error("polynomial is not homogeneous of degree {0}")]
    NotHomogeneous(u32),
    #[error("polynomial is not harmonic")]
    NotHarmonic,
    #[error("degree {found} is outside the supported range {min}..={max}")]
    DegreeOutOfRange { found: u32, min: u32, max: u32 },
    #[error("degrees differ: {left} and {right}")]
    DegreeMismatch { left: u32, right: u32 },
    #[error("input form is zero")]
    ZeroInput,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("icosahedral span has dimension {0}, expected 3")]
    SpanDimension(usize),
    #[error("the Pfaffian vanishes identically")]
    PfaffianVanishes,
    #[error("Cayley chart is singular at this parameter")]
    ChartSingularity,
    #[error("search failed: {0}")]
    SearchFailed(String),
    #[error("point is not on the curve")]
    OffCurve,
    #[error("the function vanishes identically on the curve")]
    ZeroFunction,
    #[error("zeros or poles at points with irrational coordinates")]
    IrrationalSupport,
}

pub type Result<T> = std::result::Result<T, CoreError>;
