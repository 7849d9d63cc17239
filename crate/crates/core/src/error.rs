use thiserror::Error;

use crate::exactfield::FieldError;
use crate::polyalg::PolyError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Failures raised by the numerical pipeline.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("point is not on the unit sphere (|p| = {norm})")]
    NotOnSphere { norm: f64 },
    #[error("internal mismatch: {0}")]
    InternalMismatch(String),
    #[error("iteration did not converge: {0}")]
    NoConvergence(String),
    #[error("hypergeometric parameter c = {0} is a non-positive integer")]
    InvalidC(String),
    #[error("series argument |w| = {0} outside the convergence disc")]
    OutsideDisc(f64),
    #[error("|Z| = {0} is inside the series exclusion radius")]
    OutOfSeriesDomain(f64),
    #[error("Schwarzian right-hand side has a pole at Z = {0}")]
    PoleAtSingularPoint(String),
    #[error("repeated roots: discriminant is numerically zero")]
    RepeatedRoots,
    #[error("degenerate configuration: {0}")]
    DegenerateConfiguration(String),
    #[error("Tschirnhaus substitution collapsed distinct roots")]
    DegenerateImage,
    #[error("no preimage of y = {y} satisfies the original quintic (residual {residual:e})")]
    AmbiguousPreimage { y: String, residual: f64 },
    #[error("|gamma| = {0} exceeds the series radius 0.5")]
    OutsideRadius(f64),
    #[error("enumeration too large: {0} positions (limit 26)")]
    TooLarge(usize),
}
