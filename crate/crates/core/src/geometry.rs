//! Geometric descriptors of tricomplex numbers.
//!
//! A point `P = (x,y,z)` is described by its projection `s` on the trisector
//! line, its distance `D` from that line, the modulus `d`, the polar angle
//! `theta` between `OP` and the trisector line, the azimuth `phi` of its
//! projection on the nodal plane and the amplitude `rho`.
//!
//! The canonical coordinates `(v1, v1t, vp)` split the algebra into a
//! transverse plane, where multiplication is ordinary complex multiplication
//! of `v1 + i*v1t`, and a longitudinal axis, where it is real multiplication.

use std::f64::consts::{PI, SQRT_2, TAU};
use std::fmt;

use num_complex::Complex64;

use crate::algebra::Tricomplex;
use crate::error::{DomainError, Error, Result};

const SQRT3: f64 = 1.732_050_807_568_877_2;
const FRAC_1_SQRT3: f64 = 0.577_350_269_189_625_7;

/// Full set of geometric descriptors for a point off the trisector line.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PolarForm {
    /// Modulus `d = |u|`.
    pub d: f64,
    /// Projection on the trisector line, `(x+y+z)/sqrt3`.
    pub s: f64,
    /// Distance to the trisector line.
    pub dist: f64,
    /// Angle with the trisector line, in `[0, pi]`.
    pub theta: f64,
    /// Azimuth in the nodal plane, in `[0, 2pi)`.
    pub phi: f64,
    /// Signed amplitude.
    pub rho: f64,
}

/// What is still known when an angle is undefined.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PartialPolar {
    pub d: f64,
    pub s: f64,
    pub dist: f64,
    pub rho: f64,
    /// `None` only when `u = 0`.
    pub theta: Option<f64>,
}

impl fmt::Display for PolarForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use crate::algebra::fmt_real as r;
        writeln!(f, "d={}", r(self.d))?;
        writeln!(f, "s={}", r(self.s))?;
        writeln!(f, "D={}", r(self.dist))?;
        writeln!(f, "theta={}", r(self.theta))?;
        writeln!(f, "phi={}", r(self.phi))?;
        write!(f, "rho={}", r(self.rho))
    }
}

impl PolarForm {
    pub const CSV_HEADER: &'static str = "d,s,D,theta,phi,rho";

    pub fn csv_row(&self) -> String {
        use crate::algebra::fmt_real as r;
        format!(
            "{},{},{},{},{},{}",
            r(self.d),
            r(self.s),
            r(self.dist),
            r(self.theta),
            r(self.phi),
            r(self.rho)
        )
    }
}

impl fmt::Display for PartialPolar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use crate::algebra::fmt_real as r;
        writeln!(f, "d={}", r(self.d))?;
        writeln!(f, "s={}", r(self.s))?;
        writeln!(f, "D={}", r(self.dist))?;
        match self.theta {
            Some(t) => writeln!(f, "theta={}", r(t))?,
            None => writeln!(f, "theta=undefined")?,
        }
        writeln!(f, "phi=undefined")?;
        write!(f, "rho={}", r(self.rho))
    }
}

/// Wraps an angle into `[0, 2pi)`.
pub fn normalize_angle(a: f64) -> f64 {
    let r = a.rem_euclid(TAU);
    // rem_euclid can round up to exactly TAU for tiny negative inputs
    if r >= TAU {
        0.0
    } else {
        r
    }
}

/// Geometric descriptors of `u`.
///
/// Fails with `UndefinedAngle` when `u` is on the trisector line (no azimuth)
/// or is zero (no polar angle either); the error carries what is defined.
pub fn polar(u: Tricomplex) -> Result<PolarForm> {
    let c = to_canonical(u);
    let d = u.modulus();
    let s = c.vp * FRAC_1_SQRT3;
    let delta = c.transverse().norm();
    let dist = (2.0f64 / 3.0).sqrt() * delta;
    let rho = u.amplitude();
    let tol = u.default_tol();

    if u.norm_inf() <= tol {
        return Err(Error::UndefinedAngle(PartialPolar {
            d,
            s,
            dist,
            rho,
            theta: None,
        }));
    }
    // tan theta = D/s = sqrt2 delta / sigma, with fewer roundings
    let theta = (SQRT_2 * delta).atan2(c.vp);
    if delta <= tol {
        return Err(Error::UndefinedAngle(PartialPolar {
            d,
            s,
            dist,
            rho,
            theta: Some(if s >= 0.0 { 0.0 } else { PI }),
        }));
    }
    Ok(PolarForm {
        d,
        s,
        dist,
        theta,
        phi: normalize_angle(c.v1t.atan2(c.v1)),
        rho,
    })
}

/// Transverse and longitudinal coordinates of a tricomplex number.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct CanonicalForm {
    pub v1: f64,
    pub v1t: f64,
    pub vp: f64,
}

impl CanonicalForm {
    pub fn new(v1: f64, v1t: f64, vp: f64) -> Self {
        CanonicalForm { v1, v1t, vp }
    }

    pub fn from_parts(transverse: Complex64, longitudinal: f64) -> Self {
        CanonicalForm::new(transverse.re, transverse.im, longitudinal)
    }

    /// `v1 + i*v1t`.
    pub fn transverse(&self) -> Complex64 {
        Complex64::new(self.v1, self.v1t)
    }

    /// Product in canonical coordinates: complex on the transverse pair, real
    /// on the longitudinal coordinate.
    pub fn mul(&self, other: &CanonicalForm) -> CanonicalForm {
        CanonicalForm::from_parts(self.transverse() * other.transverse(), self.vp * other.vp)
    }
}

pub fn to_canonical(u: Tricomplex) -> CanonicalForm {
    CanonicalForm {
        v1: u.x - 0.5 * (u.y + u.z),
        v1t: 0.5 * SQRT3 * (u.y - u.z),
        vp: u.sigma(),
    }
}

pub fn from_canonical(c: CanonicalForm) -> Tricomplex {
    let b = c.v1t / SQRT3;
    let side = (c.vp - c.v1) / 3.0;
    Tricomplex::new((2.0 * c.v1 + c.vp) / 3.0, side + b, side - b)
}

/// The canonical basis `e1 = (2-h-k)/3`, `e1t = (h-k)/sqrt3`, `ep = (1+h+k)/3`.
///
/// `e1` and `ep` are orthogonal idempotents summing to one; `e1t^2 = -e1`.
pub fn basis_constants() -> (Tricomplex, Tricomplex, Tricomplex) {
    (
        Tricomplex::new(2.0 / 3.0, -1.0 / 3.0, -1.0 / 3.0),
        Tricomplex::new(0.0, 1.0 / SQRT3, -1.0 / SQRT3),
        Tricomplex::new(1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0),
    )
}

/// Rebuilds `u` from amplitude, polar angle and azimuth.
///
/// Only the half-space `x+y+z > 0` off the trisector line is covered, so
/// `theta` must lie in `(0, pi/2)` and `rho` must be positive.
pub fn from_exponential(rho: f64, theta: f64, phi: f64) -> Result<Tricomplex> {
    if !(rho.is_finite() && rho > 0.0) {
        return Err(DomainError::NonPositiveAmplitude.into());
    }
    if !(theta > 0.0 && theta < 0.5 * PI) {
        return Err(DomainError::PolarAngleRange.into());
    }
    let ratio = theta.tan() / 2f64.sqrt();
    let transverse = rho * ratio.cbrt();
    let longitudinal = rho / (ratio * ratio).cbrt();
    let (sin, cos) = phi.sin_cos();
    Ok(from_canonical(CanonicalForm::new(
        transverse * cos,
        transverse * sin,
        longitudinal,
    )))
}

/// Point of the circle through `1`, `h` and `k` centred on `(1,1,1)/3`.
/// The circle is closed under multiplication and azimuths add.
pub fn invariant_circle_point(phi: f64) -> Tricomplex {
    let (sin, cos) = phi.sin_cos();
    from_canonical(CanonicalForm::new(cos, sin, 1.0))
}

/// Distance `d` at which the surface of constant amplitude `rho` meets the
/// polar angle `theta`, for `theta` in `(0, pi/2)`.
pub fn rho_surface_distance(rho: f64, theta: f64) -> Result<f64> {
    if !(theta > 0.0 && theta < 0.5 * PI) {
        return Err(DomainError::PolarAngleRange.into());
    }
    let (sin, cos) = theta.sin_cos();
    Ok(2f64.cbrt() * rho / (SQRT3 * (sin * sin).cbrt() * cos.cbrt()))
}
