//! Elementary functions of a tricomplex variable.
//!
//! The direct implementations follow the component formulas. The exponential,
//! trigonometric and hyperbolic functions write `h*y + k*z` as
//! `(h+k)a + (h-k)b` and combine closed forms along those two directions with
//! addition theorems; the logarithm and powers use amplitude and angles.
//! Splitting along `h+k` and `h-k` keeps intermediate factors no larger than
//! the result, which the product `exp(h*y) * exp(k*z)` does not.
//!
//! [`oracle_eval`] is a second, independent route through the canonical
//! isomorphism with `C x R`; the two must agree.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::algebra::{AlgebraClass, Tricomplex};
use crate::cosexp::{cosexp_complex, cosexp_triple, CosexpKind};
use crate::error::{DomainError, Error, Result};
use crate::geometry::{from_canonical, normalize_angle, polar, to_canonical, CanonicalForm};

const SQRT3: f64 = 1.732_050_807_568_877_2;
const SQRT3_2: f64 = 0.866_025_403_784_438_6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ElementaryFn {
    Exp,
    Log,
    Sin,
    Cos,
    Sinh,
    Cosh,
}

impl ElementaryFn {
    pub const ALL: [ElementaryFn; 6] = [
        ElementaryFn::Exp,
        ElementaryFn::Log,
        ElementaryFn::Sin,
        ElementaryFn::Cos,
        ElementaryFn::Sinh,
        ElementaryFn::Cosh,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ElementaryFn::Exp => "exp",
            ElementaryFn::Log => "log",
            ElementaryFn::Sin => "sin",
            ElementaryFn::Cos => "cos",
            ElementaryFn::Sinh => "sinh",
            ElementaryFn::Cosh => "cosh",
        }
    }

    /// Evaluates through the direct implementation.
    pub fn eval(self, u: Tricomplex) -> Result<Tricomplex> {
        match self {
            ElementaryFn::Exp => texp(u),
            ElementaryFn::Log => tlog(u),
            ElementaryFn::Sin => tsin(u),
            ElementaryFn::Cos => tcos(u),
            ElementaryFn::Sinh => tsinh(u),
            ElementaryFn::Cosh => tcosh(u),
        }
    }
}

impl fmt::Display for ElementaryFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ElementaryFn {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        ElementaryFn::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Invalid(format!("unknown function {s:?}")))
    }
}

/// `exp(h*y) = cx y + h mx y + k px y`.
pub fn exp_h(y: f64) -> Tricomplex {
    let (c, m, p) = cosexp_triple(y);
    Tricomplex::new(c, m, p)
}

/// `exp(k*z) = cx z + h px z + k mx z`.
pub fn exp_k(z: f64) -> Tricomplex {
    exp_h(z).swap_hk()
}

pub fn texp(u: Tricomplex) -> Result<Tricomplex> {
    let (a, b) = split(u);
    let along_sum = along_h_plus_k(2.0 * a, -a, f64::exp);
    let (s, c) = (SQRT3 * b).sin_cos();
    let along_diff = trisector_parts(1.0, c) + h_minus_k_times(s);
    (u.x.exp() * (along_sum * along_diff)).finite()
}

/// `(a, b)` with `h*y + k*z = (h+k)a + (h-k)b`.
fn split(u: Tricomplex) -> (f64, f64) {
    (0.5 * (u.y + u.z), 0.5 * (u.y - u.z))
}

/// `f((h+k)a)`: `h+k` acts as 2 along the trisector and as -1 across it, so
/// this is `f(2a)(1+h+k)/3 + f(-a)(2-h-k)/3`.
fn along_h_plus_k(long: f64, trans: f64, f: impl Fn(f64) -> f64) -> Tricomplex {
    trisector_parts(f(long), f(trans))
}

/// `l (1+h+k)/3 + t (2-h-k)/3`.
fn trisector_parts(l: f64, t: f64) -> Tricomplex {
    let side = (l - t) / 3.0;
    Tricomplex::new(side + t, side, side)
}

/// `s (h-k)/sqrt3`.
fn h_minus_k_times(s: f64) -> Tricomplex {
    let c = s / SQRT3;
    Tricomplex::new(0.0, c, -c)
}

fn log_domain(u: Tricomplex) -> Result<()> {
    if u.sigma().is_nan() || u.sigma() <= 0.0 {
        return Err(DomainError::NodalPlaneSide.into());
    }
    if u.delta() <= u.default_tol() {
        return Err(DomainError::TrisectorLine.into());
    }
    Ok(())
}

/// Principal logarithm, azimuth taken in `[0, 2pi)`.
///
/// `ln u = ln rho + (1/3)(h+k) ln(sqrt2 / tan theta) + (1/sqrt3)(h-k) phi`.
/// Requires `x+y+z > 0` and `u` off the trisector line.
pub fn tlog(u: Tricomplex) -> Result<Tricomplex> {
    log_domain(u)?;
    let p = polar(u)?;
    // sqrt2 / tan theta = sigma / delta and rho^3 = sigma delta^2; working
    // with the logs of sigma and delta avoids the rounding of tan and cbrt
    let ln_sigma = u.sigma().ln();
    let ln_delta = to_canonical(u).transverse().norm().ln();
    let hk_coeff = (ln_sigma - ln_delta) / 3.0;
    let rot_coeff = p.phi / SQRT3;
    Ok(Tricomplex::new(
        (ln_sigma + 2.0 * ln_delta) / 3.0,
        hk_coeff + rot_coeff,
        hk_coeff - rot_coeff,
    ))
}

fn exact_integer(m: f64) -> Option<i32> {
    if m.fract() == 0.0 && m.abs() <= f64::from(i32::MAX) {
        Some(m as i32)
    } else {
        None
    }
}

/// `u^m` through the transverse/longitudinal split:
/// `e1 delta^m cos(m phi) + e1t delta^m sin(m phi) + ep sigma^m`.
///
/// Integer exponents are single-valued; negative ones need a regular `u`.
/// Other exponents give the principal branch and need `x+y+z > 0` with `u`
/// off the trisector line.
pub fn tpow(u: Tricomplex, m: f64) -> Result<Tricomplex> {
    let c = to_canonical(u);
    let delta = c.transverse().norm();
    let phi = c.v1t.atan2(c.v1);
    let (radial, longitudinal) = match exact_integer(m) {
        Some(0) => return Ok(Tricomplex::ONE),
        Some(n) => {
            if n < 0 {
                match u.class() {
                    AlgebraClass::Regular => {}
                    class => return Err(Error::ZeroDivisor(class)),
                }
            }
            (delta.powi(n), c.vp.powi(n))
        }
        None => {
            log_domain(u)?;
            (delta.powf(m), c.vp.powf(m))
        }
    };
    let (sin, cos) = (m * phi).sin_cos();
    from_canonical(CanonicalForm::new(radial * cos, radial * sin, longitudinal)).finite()
}

/// `(h+k)^m = (1/3)[(-1)^(m-1) + 2^m](h+k) + (2/3)[(-1)^m + 2^(m-1)]`, `m >= 1`.
pub fn h_plus_k_power(m: u32) -> Tricomplex {
    let sign = if m.is_multiple_of(2) { 1.0 } else { -1.0 };
    let two_m = 2f64.powi(m as i32);
    let hk = (-sign + two_m) / 3.0;
    let re = 2.0 / 3.0 * (sign + 0.5 * two_m);
    Tricomplex::new(re, hk, hk)
}

/// `(h-k)^(2n) = (-1)^(n-1) 3^(n-1) (h+k-2)`, `(h-k)^(2n+1) = (-1)^n 3^n (h-k)`.
pub fn h_minus_k_power(m: u32) -> Tricomplex {
    let n = m / 2;
    if m.is_multiple_of(2) {
        if n == 0 {
            return Tricomplex::ONE;
        }
        let c = if n.is_multiple_of(2) { -1.0 } else { 1.0 } * 3f64.powi(n as i32 - 1);
        Tricomplex::new(-2.0 * c, c, c)
    } else {
        let c = if n.is_multiple_of(2) { 1.0 } else { -1.0 } * 3f64.powi(n as i32);
        Tricomplex::new(0.0, c, -c)
    }
}

/// Closed forms on the pure `h` axis.
mod pure_h {
    use super::*;

    pub fn cos(y: f64) -> Tricomplex {
        let (ch, sh) = ((SQRT3_2 * y).cosh(), (SQRT3_2 * y).sinh());
        let (s2, c2) = (0.5 * y).sin_cos();
        let a = y.cos() / 3.0;
        Tricomplex::new(
            a + 2.0 / 3.0 * ch * c2,
            a - ch * c2 / 3.0 + sh * s2 / SQRT3,
            a - ch * c2 / 3.0 - sh * s2 / SQRT3,
        )
    }

    pub fn sin(y: f64) -> Tricomplex {
        let (ch, sh) = ((SQRT3_2 * y).cosh(), (SQRT3_2 * y).sinh());
        let (s2, c2) = (0.5 * y).sin_cos();
        let a = y.sin() / 3.0;
        Tricomplex::new(
            a - 2.0 / 3.0 * ch * s2,
            a + ch * s2 / 3.0 + sh * c2 / SQRT3,
            a + ch * s2 / 3.0 - sh * c2 / SQRT3,
        )
    }

    pub fn cosh(y: f64) -> Tricomplex {
        let (s, c) = (SQRT3_2 * y).sin_cos();
        let (ch2, sh2) = ((0.5 * y).cosh(), (0.5 * y).sinh());
        let a = y.cosh() / 3.0;
        Tricomplex::new(
            a + 2.0 / 3.0 * c * ch2,
            a - c * ch2 / 3.0 - s * sh2 / SQRT3,
            a - c * ch2 / 3.0 + s * sh2 / SQRT3,
        )
    }

    pub fn sinh(y: f64) -> Tricomplex {
        let (s, c) = (SQRT3_2 * y).sin_cos();
        let (ch2, sh2) = ((0.5 * y).cosh(), (0.5 * y).sinh());
        let a = y.sinh() / 3.0;
        Tricomplex::new(
            a - 2.0 / 3.0 * c * sh2,
            a + c * sh2 / 3.0 + s * ch2 / SQRT3,
            a + c * sh2 / 3.0 - s * ch2 / SQRT3,
        )
    }
}

/// `cos(h*y)` in closed form.
pub fn cos_h(y: f64) -> Tricomplex {
    pure_h::cos(y)
}

/// `sin(h*y)` in closed form.
pub fn sin_h(y: f64) -> Tricomplex {
    pure_h::sin(y)
}

/// `cosh(h*y)` in closed form.
pub fn cosh_h(y: f64) -> Tricomplex {
    pure_h::cosh(y)
}

/// `sinh(h*y)` in closed form.
pub fn sinh_h(y: f64) -> Tricomplex {
    pure_h::sinh(y)
}

/// `cos(h*y)` from cosexponentials of `+-i*y`.
pub fn cos_h_recombined(y: f64) -> Tricomplex {
    let iy = Complex64::new(0.0, y);
    let half_sum = |k| ((cosexp_complex(k, iy) + cosexp_complex(k, -iy)) * 0.5).re;
    Tricomplex::new(
        half_sum(CosexpKind::Cx),
        half_sum(CosexpKind::Mx),
        half_sum(CosexpKind::Px),
    )
}

/// `sin(h*y)` from cosexponentials of `+-i*y`.
pub fn sin_h_recombined(y: f64) -> Tricomplex {
    let iy = Complex64::new(0.0, y);
    let half_diff = |k| ((cosexp_complex(k, iy) - cosexp_complex(k, -iy)) / Complex64::new(0.0, 2.0)).re;
    Tricomplex::new(
        half_diff(CosexpKind::Cx),
        half_diff(CosexpKind::Mx),
        half_diff(CosexpKind::Px),
    )
}

/// `cos(h*y + k*z)` and `sin(h*y + k*z)`.
fn trig_pure(y: f64, z: f64) -> (Tricomplex, Tricomplex) {
    let (a, b) = split(Tricomplex::new(0.0, y, z));
    let (ca, sa) = (
        along_h_plus_k(2.0 * a, -a, f64::cos),
        along_h_plus_k(2.0 * a, -a, f64::sin),
    );
    // (h-k)^2 = -3 across the trisector, so its cos and sin are hyperbolic
    let q = SQRT3 * b;
    let (cb, sb) = (trisector_parts(1.0, q.cosh()), h_minus_k_times(q.sinh()));
    (ca * cb - sa * sb, sa * cb + ca * sb)
}

fn hyp_pure(y: f64, z: f64) -> (Tricomplex, Tricomplex) {
    let (a, b) = split(Tricomplex::new(0.0, y, z));
    let (ca, sa) = (
        along_h_plus_k(2.0 * a, -a, f64::cosh),
        along_h_plus_k(2.0 * a, -a, f64::sinh),
    );
    let (s, c) = (SQRT3 * b).sin_cos();
    let (cb, sb) = (trisector_parts(1.0, c), h_minus_k_times(s));
    (ca * cb + sa * sb, sa * cb + ca * sb)
}

pub fn tcos(u: Tricomplex) -> Result<Tricomplex> {
    let (c, s) = trig_pure(u.y, u.z);
    (u.x.cos() * c - u.x.sin() * s).finite()
}

pub fn tsin(u: Tricomplex) -> Result<Tricomplex> {
    let (c, s) = trig_pure(u.y, u.z);
    (u.x.sin() * c + u.x.cos() * s).finite()
}

pub fn tcosh(u: Tricomplex) -> Result<Tricomplex> {
    let (c, s) = hyp_pure(u.y, u.z);
    (u.x.cosh() * c + u.x.sinh() * s).finite()
}

pub fn tsinh(u: Tricomplex) -> Result<Tricomplex> {
    let (c, s) = hyp_pure(u.y, u.z);
    (u.x.sinh() * c + u.x.cosh() * s).finite()
}

/// Evaluates `f` by mapping `u` to `(v1 + i v1t, vp)`, applying the complex
/// function to the transverse part and the real function to the longitudinal
/// part, and mapping back.
pub fn oracle_eval(f: ElementaryFn, u: Tricomplex) -> Result<Tricomplex> {
    let c = to_canonical(u);
    let t = c.transverse();
    let (t, p) = match f {
        ElementaryFn::Exp => (t.exp(), c.vp.exp()),
        ElementaryFn::Log => {
            log_domain(u)?;
            (Complex64::new(t.norm().ln(), normalize_angle(t.arg())), c.vp.ln())
        }
        ElementaryFn::Sin => (t.sin(), c.vp.sin()),
        ElementaryFn::Cos => (t.cos(), c.vp.cos()),
        ElementaryFn::Sinh => (t.sinh(), c.vp.sinh()),
        ElementaryFn::Cosh => (t.cosh(), c.vp.cosh()),
    };
    from_canonical(CanonicalForm::from_parts(t, p)).finite()
}

/// Truncated defining power series of `f` (not available for `Log`).
pub fn series_eval(f: ElementaryFn, u: Tricomplex, terms: usize) -> Option<Tricomplex> {
    // (parity of the powers kept, whether signs alternate)
    let (start, alternate) = match f {
        ElementaryFn::Exp => (None, false),
        ElementaryFn::Cos => (Some(0), true),
        ElementaryFn::Sin => (Some(1), true),
        ElementaryFn::Cosh => (Some(0), false),
        ElementaryFn::Sinh => (Some(1), false),
        ElementaryFn::Log => return None,
    };
    let mut sum = Tricomplex::ZERO;
    let mut term = Tricomplex::ONE;
    let mut sign = 1.0;
    for n in 0..terms as u32 {
        if n > 0 {
            term = term * u / f64::from(n);
        }
        let take = match start {
            None => true,
            Some(s) => n % 2 == s,
        };
        if take {
            sum += term * sign;
            if alternate {
                sign = -sign;
            }
        }
    }
    Some(sum)
}
