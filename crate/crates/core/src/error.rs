use thiserror::Error;

use crate::algebra::AlgebraClass;
use crate::geometry::PartialPolar;

/// Which domain restriction an operation ran into.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DomainError {
    /// `x+y+z <= 0`: the real logarithm of the longitudinal part does not exist.
    NodalPlaneSide,
    /// The point sits on the trisector line, so the azimuth is undefined.
    TrisectorLine,
    /// Polar angle outside the open interval (0, pi/2).
    PolarAngleRange,
    /// Amplitude must be strictly positive.
    NonPositiveAmplitude,
}

impl std::fmt::Display for DomainError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let msg = match self {
            DomainError::NodalPlaneSide => "x+y+z must be > 0",
            DomainError::TrisectorLine => "x^2+y^2+z^2-xy-xz-yz must be > 0 (point on the trisector line)",
            DomainError::PolarAngleRange => "theta must lie in (0, pi/2)",
            DomainError::NonPositiveAmplitude => "rho must be > 0",
        };
        f.write_str(msg)
    }
}

#[derive(Clone, Debug, PartialEq, Error)]
pub enum Error {
    #[error("zero divisor: {0} has no inverse (x^3+y^3+z^3-3xyz = 0)")]
    ZeroDivisor(AlgebraClass),

    #[error("angle undefined: {}", if .0.theta.is_none() { "u = 0" } else { "D = 0 (point on the trisector line)" })]
    UndefinedAngle(PartialPolar),

    #[error("domain error: {0}")]
    Domain(DomainError),

    #[error("overflow: result component is not finite")]
    Overflow,

    #[error("indeterminate: trailing coefficients vanish")]
    Indeterminate,

    #[error("quadrature did not converge after {samples} samples")]
    NonConvergent { samples: usize },

    #[error("integrand is singular on the path")]
    SingularOnPath,

    #[error("winding is ambiguous: a projected pole lies on the projected loop")]
    AmbiguousWinding,

    #[error("longitudinal root {re}{im:+}i is complex; no real tricomplex linear factor exists")]
    ComplexLongitudinalRoot { re: f64, im: f64 },

    #[error("invalid input: {0}")]
    Invalid(String),
}

impl From<DomainError> for Error {
    fn from(e: DomainError) -> Self {
        Error::Domain(e)
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
