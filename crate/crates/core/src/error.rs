use thiserror::Error;

/// Errors raised by the numerical pipeline.
///
/// Every variant maps to a stable name through [`Error::kind`], which is what
/// the CLI reports in its `"error"` field.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix is not symmetric: max asymmetry {asymmetry:e} exceeds {tol:e}")]
    NotSymmetric { asymmetry: f64, tol: f64 },
    #[error("imaginary part is not positive definite: smallest eigenvalue {lambda_min:e}")]
    NotPositive { lambda_min: f64 },
    #[error("C*Omega + D is ill-conditioned (condition number {condition:e})")]
    IllConditioned { condition: f64 },
    #[error("truncation radius exceeds cap {cap} (smallest eigenvalue of Im Omega {lambda_min:e})")]
    RadiusCapExceeded { cap: u32, lambda_min: f64 },
    #[error("all sampled theta values are below the degeneracy floor")]
    DegenerateSample,
    #[error("characteristic is even; an odd characteristic is required")]
    EvenCharacteristic,
    #[error("odd theta function is singular at the origin (|ell| = {ell_norm:e})")]
    SingularOddTheta { ell_norm: f64 },
    #[error("extended covector basis is singular (|det| = {det_abs:e})")]
    SingularBasis { det_abs: f64 },
    #[error("expected a cubic in {expected} variables, got {got}")]
    WrongArity { expected: usize, got: usize },
    #[error("cubic is singular (|discriminant| = {delta_abs:e})")]
    SingularCubic { delta_abs: f64 },
    #[error("matrix is singular (|det| = {det_abs:e})")]
    SingularMatrix { det_abs: f64 },
    #[error("invariant requires genus {required}, got genus {got}")]
    GenusUnsupported { required: usize, got: usize },
    #[error("the transformation does not fix the characteristic and no image characteristic was supplied")]
    CharacteristicMoved,
    #[error("quadrature did not converge (error estimate {estimate:e})")]
    QuadratureDivergence { estimate: f64 },
    #[error("branch points {left} and {right} are closer than {min_gap:e}")]
    NearDegenerateGaps { left: f64, right: f64, min_gap: f64 },
    #[error("no symplectic correction symmetrizes the period matrix (residual {residual:e})")]
    SymplecticBasisNotFound { residual: f64 },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

impl Error {
    /// Stable machine-readable name of the error variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::NotSymmetric { .. } => "NotSymmetric",
            Error::NotPositive { .. } => "NotPositive",
            Error::IllConditioned { .. } => "IllConditioned",
            Error::RadiusCapExceeded { .. } => "RadiusCapExceeded",
            Error::DegenerateSample => "DegenerateSample",
            Error::EvenCharacteristic => "EvenCharacteristic",
            Error::SingularOddTheta { .. } => "SingularOddTheta",
            Error::SingularBasis { .. } => "SingularBasis",
            Error::WrongArity { .. } => "WrongArity",
            Error::SingularCubic { .. } => "SingularCubic",
            Error::SingularMatrix { .. } => "SingularMatrix",
            Error::GenusUnsupported { .. } => "GenusUnsupported",
            Error::CharacteristicMoved => "CharacteristicMoved",
            Error::QuadratureDivergence { .. } => "QuadratureDivergence",
            Error::NearDegenerateGaps { .. } => "NearDegenerateGaps",
            Error::SymplecticBasisNotFound { .. } => "SymplecticBasisNotFound",
            Error::DimensionMismatch(_) => "DimensionMismatch",
            Error::InvalidInput(_) => "InvalidInput",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
