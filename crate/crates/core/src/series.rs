//! Power series in a tricomplex variable and their convergence regions.
//!
//! A series `sum a_l u^l` converges absolutely inside the ball `|u| < c0`
//! and, more sharply, inside the cylinder `|vp| < c+`, `|v1 + i v1t| < c1`
//! around the trisector line. The limits are estimated from tail ratios of
//! the stored (truncated) coefficients.

use crate::algebra::Tricomplex;
use crate::error::{Error, Result};
use crate::geometry::to_canonical;

const SQRT3: f64 = 1.732_050_807_568_877_2;

/// Number of trailing ratios averaged by the radius estimators.
pub const TAIL_RATIOS: usize = 8;

pub fn modulus(u: Tricomplex) -> f64 {
    u.modulus()
}

/// Truncated power series, coefficients by ascending power.
#[derive(Clone, Debug, PartialEq)]
pub struct TriSeries {
    coeffs: Vec<Tricomplex>,
}

impl TriSeries {
    pub fn new(coeffs: Vec<Tricomplex>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Invalid("series needs at least one coefficient".into()));
        }
        if let Some(bad) = coeffs.iter().position(|c| !c.is_finite()) {
            return Err(Error::Invalid(format!("coefficient {bad} is not finite")));
        }
        Ok(TriSeries { coeffs })
    }

    /// Builds `sum_l a_l u^l` from real coefficients `a_l`.
    pub fn from_real(coeffs: impl IntoIterator<Item = f64>) -> Result<Self> {
        TriSeries::new(coeffs.into_iter().map(Tricomplex::real).collect())
    }

    pub fn coeffs(&self) -> &[Tricomplex] {
        &self.coeffs
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }
}

/// Horner evaluation with tricomplex multiplication.
pub fn eval_series(s: &TriSeries, u: Tricomplex) -> Result<Tricomplex> {
    s.coeffs
        .iter()
        .rev()
        .fold(Tricomplex::ZERO, |acc, &a| acc * u + a)
        .finite()
}

/// Evaluation through the canonical split: complex Horner on the transverse
/// part, real Horner on the longitudinal part.
pub fn eval_series_split(s: &TriSeries, u: Tricomplex) -> Result<Tricomplex> {
    let cu = to_canonical(u);
    let (t, v) = (cu.transverse(), cu.vp);
    let mut acc_t = num_complex::Complex64::new(0.0, 0.0);
    let mut acc_p = 0.0;
    for &a in s.coeffs.iter().rev() {
        let ca = to_canonical(a);
        acc_t = acc_t * t + ca.transverse();
        acc_p = acc_p * v + ca.vp;
    }
    crate::geometry::from_canonical(crate::geometry::CanonicalForm::from_parts(acc_t, acc_p)).finite()
}

/// Mean of the last [`TAIL_RATIOS`] ratios `mag[l] / mag[l+1]` over adjacent
/// pairs where both magnitudes are nonzero.
///
/// A component that is identically zero converges everywhere and yields
/// infinity.
fn tail_ratio(mags: &[f64]) -> Result<f64> {
    if mags.iter().all(|&m| m == 0.0) {
        return Ok(f64::INFINITY);
    }
    let ratios: Vec<f64> = mags
        .windows(2)
        .filter(|w| w[0] != 0.0 && w[1] != 0.0)
        .map(|w| w[0] / w[1])
        .collect();
    if ratios.is_empty() {
        return Err(Error::Indeterminate);
    }
    let tail = &ratios[ratios.len().saturating_sub(TAIL_RATIOS)..];
    Ok(tail.iter().sum::<f64>() / tail.len() as f64)
}

/// Estimate of the spherical radius `c0 = lim |a_l| / (sqrt3 |a_{l+1}|)`.
pub fn radius_spherical(s: &TriSeries) -> Result<f64> {
    let mags: Vec<f64> = s.coeffs.iter().map(|a| a.modulus()).collect();
    match tail_ratio(&mags)? {
        r if r.is_infinite() => Err(Error::Indeterminate),
        r => Ok(r / SQRT3),
    }
}

/// Cylinder of convergence: `|vp| < cplus` and `|v1 + i v1t| < c1`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ConvergenceRegion {
    pub c0: f64,
    pub c1: f64,
    pub cplus: f64,
}

impl ConvergenceRegion {
    /// Radius of the cylinder in ordinary coordinates.
    pub fn geometric_radius(&self) -> f64 {
        self.c1 * (2.0f64 / 3.0).sqrt()
    }

    /// Height of the cylinder along the trisector line.
    pub fn geometric_height(&self) -> f64 {
        2.0 * self.cplus / SQRT3
    }

    pub fn in_ball(&self, u: Tricomplex) -> bool {
        u.modulus() < self.c0
    }

    pub fn in_cylinder(&self, u: Tricomplex) -> bool {
        let c = to_canonical(u);
        c.vp.abs() < self.cplus && c.transverse().norm() < self.c1
    }
}

/// Estimates both the longitudinal and the transverse radius, plus `c0`.
pub fn radius_cylindrical(s: &TriSeries) -> Result<ConvergenceRegion> {
    let split: Vec<_> = s.coeffs.iter().map(|&a| to_canonical(a)).collect();
    let long: Vec<f64> = split.iter().map(|c| c.vp.abs()).collect();
    let trans: Vec<f64> = split.iter().map(|c| c.transverse().norm()).collect();
    let cplus = tail_ratio(&long)?;
    let c1 = tail_ratio(&trans)?;
    if cplus.is_infinite() && c1.is_infinite() {
        return Err(Error::Indeterminate);
    }
    Ok(ConvergenceRegion {
        c0: radius_spherical(s)?,
        c1,
        cplus,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modulus_examples() {
        assert_eq!(modulus(Tricomplex::ONE), 1.0);
        assert!((modulus(Tricomplex::new(1.0, 1.0, 1.0)) - 3f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn constant_series() {
        let a0 = Tricomplex::new(0.5, -2.0, 1.0);
        let s = TriSeries::new(vec![a0]).unwrap();
        assert_eq!(eval_series(&s, Tricomplex::new(3.0, 1.0, 2.0)).unwrap(), a0);
    }

    #[test]
    fn exp_series_matches_texp() {
        let mut c = vec![1.0];
        for l in 1..30 {
            c.push(c[l - 1] / l as f64);
        }
        let s = TriSeries::from_real(c).unwrap();
        let u = Tricomplex::new(0.2, 0.1, -0.1);
        let e = crate::functions::texp(u).unwrap();
        assert!(eval_series(&s, u).unwrap().max_abs_diff(e) < 1e-12);
        assert!(eval_series_split(&s, u).unwrap().max_abs_diff(e) < 1e-12);
    }

    #[test]
    fn geometric_series() {
        let s = TriSeries::from_real(vec![1.0; 50]).unwrap();
        let u = Tricomplex::new(0.1, 0.05, 0.0);
        let want = (Tricomplex::ONE - u).inverse().unwrap();
        assert!(eval_series(&s, u).unwrap().max_abs_diff(want) < 1e-10);
    }

    #[test]
    fn spherical_radius_examples() {
        let ones = TriSeries::from_real(vec![1.0; 40]).unwrap();
        assert!((radius_spherical(&ones).unwrap() - 1.0 / 3f64.sqrt()).abs() < 1e-15);

        let pow3 = TriSeries::from_real((0..40).map(|l| 3f64.powf(l as f64 / 2.0))).unwrap();
        assert!((radius_spherical(&pow3).unwrap() - 1.0 / 3.0).abs() < 1e-13);

        let fact = |n: usize| {
            let mut c = vec![1.0];
            for l in 1..n {
                c.push(c[l - 1] / l as f64);
            }
            TriSeries::from_real(c).unwrap()
        };
        let r20 = radius_spherical(&fact(20)).unwrap();
        let r40 = radius_spherical(&fact(40)).unwrap();
        assert!(r40 > r20 && r20 > 5.0);
    }

    #[test]
    fn indeterminate_radius() {
        let s = TriSeries::from_real(vec![1.0, 0.0, 0.0, 0.0]).unwrap();
        assert_eq!(radius_spherical(&s), Err(Error::Indeterminate));
        let z = TriSeries::from_real(vec![0.0; 4]).unwrap();
        assert_eq!(radius_spherical(&z), Err(Error::Indeterminate));
        assert_eq!(radius_cylindrical(&z), Err(Error::Indeterminate));
    }

    #[test]
    fn cylindrical_radius_examples() {
        let ones = TriSeries::from_real(vec![1.0; 40]).unwrap();
        let r = radius_cylindrical(&ones).unwrap();
        assert!((r.cplus - 1.0).abs() < 1e-15 && (r.c1 - 1.0).abs() < 1e-15);

        let hpow = TriSeries::new((0..40).map(|l| Tricomplex::H.powu(l)).collect()).unwrap();
        let r = radius_cylindrical(&hpow).unwrap();
        assert!((r.cplus - 1.0).abs() < 1e-14 && (r.c1 - 1.0).abs() < 1e-14);
        assert!((r.geometric_radius() - (2.0f64 / 3.0).sqrt()).abs() < 1e-14);
        assert!((r.geometric_height() - 2.0 / 3f64.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn nodal_coefficients_have_unbounded_longitudinal_radius() {
        // every coefficient on the nodal plane: longitudinal part is identically 0
        let s = TriSeries::new(vec![Tricomplex::new(1.0, -1.0, 0.0); 10]).unwrap();
        let r = radius_cylindrical(&s).unwrap();
        assert!(r.cplus.is_infinite());
        assert!((r.c1 - 1.0).abs() < 1e-15);
    }
}
