//! The tricomplex number type and its ring operations.
//!
//! A tricomplex number is `x + h*y + k*z` with real components and the
//! multiplication table `h^2 = k`, `k^2 = h`, `hk = 1`. The algebra is
//! commutative and associative. Its zero divisors are the points of the
//! nodal plane `x+y+z = 0` and of the trisector line `x = y = z`.

use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use crate::error::{Error, Result};

/// Relative scale used by [`Tricomplex::class`] and everything that needs a
/// default "is this on a nodal set" decision.
pub const DEFAULT_REL_TOL: f64 = 1e-12;

/// A tricomplex number `x + h*y + k*z`.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Tricomplex {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

/// Where a tricomplex number sits relative to the zero-divisor sets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AlgebraClass {
    Regular,
    OnTrisectorLine,
    OnNodalPlane,
    Zero,
}

impl fmt::Display for AlgebraClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AlgebraClass::Regular => "regular point",
            AlgebraClass::OnTrisectorLine => "point on the trisector line x=y=z",
            AlgebraClass::OnNodalPlane => "point on the nodal plane x+y+z=0",
            AlgebraClass::Zero => "zero",
        })
    }
}

impl Tricomplex {
    pub const ZERO: Tricomplex = Tricomplex::new(0.0, 0.0, 0.0);
    pub const ONE: Tricomplex = Tricomplex::new(1.0, 0.0, 0.0);
    pub const H: Tricomplex = Tricomplex::new(0.0, 1.0, 0.0);
    pub const K: Tricomplex = Tricomplex::new(0.0, 0.0, 1.0);

    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Tricomplex { x, y, z }
    }

    pub const fn real(x: f64) -> Self {
        Tricomplex::new(x, 0.0, 0.0)
    }

    pub fn to_array(self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }

    /// Returns `Err(Overflow)` when any component is infinite or NaN.
    pub fn finite(self) -> Result<Self> {
        if self.is_finite() {
            Ok(self)
        } else {
            Err(Error::Overflow)
        }
    }

    pub fn scale(self, a: f64) -> Self {
        Tricomplex::new(a * self.x, a * self.y, a * self.z)
    }

    /// Exchanges the `h` and `k` components. This is the algebra automorphism
    /// induced by `h <-> k`, so `f(k*y) = f(h*y).swap_hk()` for any power series
    /// with real coefficients.
    pub fn swap_hk(self) -> Self {
        Tricomplex::new(self.x, self.z, self.y)
    }

    /// `x + y + z`: the coordinate along the trisector direction, up to `sqrt(3)`.
    pub fn sigma(self) -> f64 {
        self.x + self.y + self.z
    }

    /// `x^2+y^2+z^2-xy-xz-yz`, evaluated as half the sum of squared differences
    /// so it never goes negative.
    pub fn delta_sq(self) -> f64 {
        let (a, b, c) = (self.x - self.y, self.x - self.z, self.y - self.z);
        0.5 * (a * a + b * b + c * c)
    }

    pub fn delta(self) -> f64 {
        self.delta_sq().sqrt()
    }

    /// `x^3+y^3+z^3-3xyz`, the determinant of the circulant representation.
    pub fn nu(self) -> f64 {
        self.sigma() * self.delta_sq()
    }

    /// Signed real cube root of `x^3+y^3+z^3-3xyz`.
    pub fn amplitude(self) -> f64 {
        self.nu().cbrt()
    }

    /// Euclidean norm `(x^2+y^2+z^2)^(1/2)`.
    pub fn modulus(self) -> f64 {
        (self.x * self.x + self.y * self.y + self.z * self.z).sqrt()
    }

    pub fn norm_inf(self) -> f64 {
        self.x.abs().max(self.y.abs()).max(self.z.abs())
    }

    pub fn default_tol(self) -> f64 {
        DEFAULT_REL_TOL * self.norm_inf().max(1.0)
    }

    /// Classifies against the nodal sets with absolute tolerance `tol`.
    ///
    /// The trisector test compares `sqrt(x^2+y^2+z^2-xy-xz-yz)` (a length) with
    /// `tol`, so both forms are tested on the same linear scale.
    pub fn classify(self, tol: f64) -> AlgebraClass {
        if self.norm_inf() <= tol {
            AlgebraClass::Zero
        } else if self.delta() <= tol {
            AlgebraClass::OnTrisectorLine
        } else if self.sigma().abs() <= tol {
            AlgebraClass::OnNodalPlane
        } else {
            AlgebraClass::Regular
        }
    }

    pub fn class(self) -> AlgebraClass {
        self.classify(self.default_tol())
    }

    pub fn is_regular(self) -> bool {
        self.class() == AlgebraClass::Regular
    }

    /// Multiplicative inverse, or `ZeroDivisor` for points on a nodal set.
    pub fn inverse(self) -> Result<Self> {
        match self.class() {
            AlgebraClass::Regular => {}
            class => return Err(Error::ZeroDivisor(class)),
        }
        let nu = self.nu();
        let Tricomplex { x, y, z } = self;
        Tricomplex::new(x * x - y * z, z * z - x * y, y * y - x * z)
            .scale(1.0 / nu)
            .finite()
    }

    pub fn checked_div(self, rhs: Tricomplex) -> Result<Self> {
        Ok(self * rhs.inverse()?)
    }

    /// `self^n` by repeated multiplication.
    pub fn powu(self, n: u32) -> Self {
        let mut acc = Tricomplex::ONE;
        for _ in 0..n {
            acc *= self;
        }
        acc
    }

    /// `self^n` for any integer exponent by repeated multiplication; negative
    /// exponents go through [`Tricomplex::inverse`].
    pub fn powi(self, n: i32) -> Result<Self> {
        if n >= 0 {
            Ok(self.powu(n as u32))
        } else {
            Ok(self.inverse()?.powu(n.unsigned_abs()))
        }
    }

    pub fn max_abs_diff(self, other: Tricomplex) -> f64 {
        (self - other).norm_inf()
    }
}

impl Add for Tricomplex {
    type Output = Tricomplex;
    fn add(self, r: Tricomplex) -> Tricomplex {
        Tricomplex::new(self.x + r.x, self.y + r.y, self.z + r.z)
    }
}

impl Sub for Tricomplex {
    type Output = Tricomplex;
    fn sub(self, r: Tricomplex) -> Tricomplex {
        Tricomplex::new(self.x - r.x, self.y - r.y, self.z - r.z)
    }
}

impl Neg for Tricomplex {
    type Output = Tricomplex;
    fn neg(self) -> Tricomplex {
        Tricomplex::new(-self.x, -self.y, -self.z)
    }
}

impl Mul for Tricomplex {
    type Output = Tricomplex;
    fn mul(self, r: Tricomplex) -> Tricomplex {
        let Tricomplex { x, y, z } = self;
        Tricomplex::new(
            x * r.x + y * r.z + z * r.y,
            z * r.z + x * r.y + y * r.x,
            y * r.y + x * r.z + z * r.x,
        )
    }
}

impl Mul<f64> for Tricomplex {
    type Output = Tricomplex;
    fn mul(self, a: f64) -> Tricomplex {
        self.scale(a)
    }
}

impl Mul<Tricomplex> for f64 {
    type Output = Tricomplex;
    fn mul(self, u: Tricomplex) -> Tricomplex {
        u.scale(self)
    }
}

impl Div<f64> for Tricomplex {
    type Output = Tricomplex;
    fn div(self, a: f64) -> Tricomplex {
        Tricomplex::new(self.x / a, self.y / a, self.z / a)
    }
}

impl AddAssign for Tricomplex {
    fn add_assign(&mut self, r: Tricomplex) {
        *self = *self + r;
    }
}

impl SubAssign for Tricomplex {
    fn sub_assign(&mut self, r: Tricomplex) {
        *self = *self - r;
    }
}

impl MulAssign for Tricomplex {
    fn mul_assign(&mut self, r: Tricomplex) {
        *self = *self * r;
    }
}

impl Sum for Tricomplex {
    fn sum<I: Iterator<Item = Tricomplex>>(iter: I) -> Tricomplex {
        iter.fold(Tricomplex::ZERO, Add::add)
    }
}

impl Product for Tricomplex {
    fn product<I: Iterator<Item = Tricomplex>>(iter: I) -> Tricomplex {
        iter.fold(Tricomplex::ONE, Mul::mul)
    }
}

impl From<[f64; 3]> for Tricomplex {
    fn from(a: [f64; 3]) -> Self {
        Tricomplex::new(a[0], a[1], a[2])
    }
}

impl From<f64> for Tricomplex {
    fn from(x: f64) -> Self {
        Tricomplex::real(x)
    }
}

/// Shortest decimal string that parses back to exactly `v` (never more than
/// 17 significant digits). Negative zero prints as `0`.
pub fn fmt_real(v: f64) -> String {
    let a = v.abs();
    if v == 0.0 {
        "0".to_string()
    } else if (1e-5..1e16).contains(&a) || !a.is_finite() {
        format!("{v}")
    } else {
        format!("{v:e}")
    }
}

impl fmt::Display for Tricomplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", fmt_real(self.x), fmt_real(self.y), fmt_real(self.z))
    }
}

impl FromStr for Tricomplex {
    type Err = Error;

    /// Parses the literal `(x,y,z)`; whitespace around tokens is allowed.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Invalid(format!("expected a tricomplex literal (x,y,z), got {s:?}"));
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(bad)?;
        let parts: Vec<&str> = inner.split(',').collect();
        if parts.len() != 3 {
            return Err(bad());
        }
        let mut v = [0.0; 3];
        for (slot, p) in v.iter_mut().zip(&parts) {
            *slot = p.trim().parse::<f64>().map_err(|_| bad())?;
            if !slot.is_finite() {
                return Err(bad());
            }
        }
        Ok(Tricomplex::from(v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(x: f64, y: f64, z: f64) -> Tricomplex {
        Tricomplex::new(x, y, z)
    }

    #[test]
    fn add_examples() {
        assert_eq!(t(1., 2., 3.) + t(4., 5., 6.), t(5., 7., 9.));
        assert_eq!(t(1., -2., 0.5) + Tricomplex::ZERO, t(1., -2., 0.5));
        assert_eq!(t(1., -1., 0.) + t(-1., 1., 0.), Tricomplex::ZERO);
    }

    #[test]
    fn multiplication_table() {
        assert_eq!(Tricomplex::H * Tricomplex::H, Tricomplex::K);
        assert_eq!(Tricomplex::K * Tricomplex::K, Tricomplex::H);
        assert_eq!(Tricomplex::H * Tricomplex::K, Tricomplex::ONE);
        assert_eq!(t(1., 1., 0.) * Tricomplex::K, t(1., 0., 1.));
        assert_eq!(t(1., 1., 1.) * t(1., 1., 1.), t(3., 3., 3.));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(Tricomplex::ONE.inverse().unwrap(), Tricomplex::ONE);
        let inv = t(1., 1., 0.).inverse().unwrap();
        assert!(inv.max_abs_diff(t(0.5, -0.5, 0.5)) < 1e-15);
        assert!((t(1., 1., 0.) * inv).max_abs_diff(Tricomplex::ONE) < 1e-15);
        assert_eq!(
            t(1., 1., 1.).inverse(),
            Err(Error::ZeroDivisor(AlgebraClass::OnTrisectorLine))
        );
        assert_eq!(
            t(1., -1., 0.).inverse(),
            Err(Error::ZeroDivisor(AlgebraClass::OnNodalPlane))
        );
        assert_eq!(Tricomplex::ZERO.inverse(), Err(Error::ZeroDivisor(AlgebraClass::Zero)));
    }

    #[test]
    fn amplitude_examples() {
        assert_eq!(Tricomplex::ONE.amplitude(), 1.0);
        assert!((t(1., 1., 0.).amplitude() - 2f64.cbrt()).abs() < 1e-15);
        assert_eq!(t(1., 1., 1.).amplitude(), 0.0);
        // negative radicand gives a negative amplitude
        assert!((t(-1., -1., 0.).amplitude() + 2f64.cbrt()).abs() < 1e-15);
    }

    #[test]
    fn classify_examples() {
        assert_eq!(t(1., -1., 0.).classify(1e-12), AlgebraClass::OnNodalPlane);
        assert_eq!(t(2., 2., 2.).classify(1e-12), AlgebraClass::OnTrisectorLine);
        assert_eq!(t(1., 2., 3.).classify(1e-12), AlgebraClass::Regular);
        assert_eq!(Tricomplex::ZERO.classify(0.0), AlgebraClass::Zero);
        assert_eq!(t(1e-13, 0., 0.).classify(1e-12), AlgebraClass::Zero);
    }

    #[test]
    fn nu_matches_expanded_cubic() {
        let u = t(1., 2., 3.);
        let expanded = 1. + 8. + 27. - 3. * 6.;
        assert_eq!(u.nu(), expanded);
        assert_eq!(u.sigma(), 6.0);
        assert_eq!(u.delta_sq(), 3.0);
    }

    #[test]
    fn integer_powers() {
        let u = t(1., 1., 0.);
        assert_eq!(u.powu(2), t(1., 2., 1.));
        assert_eq!(u.powu(0), Tricomplex::ONE);
        let m1 = u.powi(-1).unwrap();
        assert!(m1.max_abs_diff(u.inverse().unwrap()) < 1e-15);
    }

    #[test]
    fn literal_parse_and_print() {
        let u: Tricomplex = "(1,-0.5,0.5)".parse().unwrap();
        assert_eq!(u, t(1., -0.5, 0.5));
        assert_eq!(u.to_string(), "(1,-0.5,0.5)");
        let v: Tricomplex = " ( 1e-3 , 2 ,-3 ) ".parse().unwrap();
        assert_eq!(v, t(1e-3, 2., -3.));
        assert_eq!(t(-0.0, 0.0, 1.0).to_string(), "(0,0,1)");
        for bad in ["1,2,3", "(1,2)", "(1,2,3,4)", "(a,b,c)", "(inf,0,0)", "(NaN,0,0)", ""] {
            assert!(bad.parse::<Tricomplex>().is_err(), "{bad}");
        }
    }
}
