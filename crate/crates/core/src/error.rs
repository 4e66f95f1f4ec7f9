use num_complex::Complex64;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("lambda must be nonzero")]
    DegenerateLambda,
    #[error("integrand evaluated at branch point z = {0}")]
    BranchPointEvaluation(Complex64),
    #[error("energy {energy} has the wrong sign for {kind}")]
    RegimeMismatch { kind: String, energy: f64 },
    #[error("{0} is not a bound problem")]
    NotBoundProblem(String),
    #[error("invalid quantum numbers: {0}")]
    InvalidQuantumNumbers(String),
    #[error("coordinate {0} outside the problem domain")]
    DomainError(f64),
    #[error("b = {0} is a nonpositive integer")]
    InvalidB(Complex64),
    #[error("series did not converge after {0} terms")]
    SeriesDivergence(usize),
    #[error("quadrature failed: estimated error {error:e} exceeds tolerance {tolerance:e}")]
    QuadratureFailure { error: f64, tolerance: f64 },
    #[error("Gamma function pole at z = {0}")]
    PoleError(Complex64),
    #[error("-alpha_minus = {0} is not a nonnegative integer")]
    NonIntegerOrder(Complex64),
    #[error("method {method} cannot be used for {kind}")]
    MethodRegimeMismatch { method: String, kind: String },
    #[error("evaluation failed at point {index}: {source}")]
    PointFailure { index: usize, source: Box<Error> },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
