use std::f64::consts::TAU;

use super::path::Path3;
use super::{pole_period, project_nodal};
use crate::algebra::Tricomplex;
use crate::error::{Error, Result};

/// Refinement control for [`path_integral_with`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadratureOptions {
    /// Stop when successive extrapolated estimates differ by less than
    /// `tol * max(1, |estimate|)` in every component.
    pub tol: f64,
    /// Largest number of segments tried before giving up.
    pub max_samples: usize,
}

impl Default for QuadratureOptions {
    fn default() -> Self {
        QuadratureOptions {
            tol: 1e-9,
            max_samples: 1 << 20,
        }
    }
}

/// A simple pole `residue / (u - location)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PoleSpec {
    pub location: Tricomplex,
    pub residue: Tricomplex,
}

impl PoleSpec {
    pub fn new(location: Tricomplex, residue: Tricomplex) -> Self {
        PoleSpec { location, residue }
    }
}

/// Which side of the plane `x+y+z = const` through a pole a loop lies on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PlaneSide {
    Above,
    Below,
}

fn midpoint_sum<F>(f: &F, path: &Path3, n: usize) -> Result<Tricomplex>
where
    F: Fn(Tricomplex) -> Result<Tricomplex>,
{
    let mut acc = Tricomplex::ZERO;
    let mut prev = path.point(0.0);
    for i in 0..n {
        let next = path.point((i + 1) as f64 / n as f64);
        let mid = path.point((i as f64 + 0.5) / n as f64);
        let v = f(mid).map_err(|_| Error::SingularOnPath)?;
        if !v.is_finite() {
            return Err(Error::SingularOnPath);
        }
        acc += v * (next - prev);
        prev = next;
    }
    Ok(acc)
}

/// `integral of f(u) du` along the path with default refinement settings.
pub fn path_integral<F>(f: F, path: &Path3) -> Result<Tricomplex>
where
    F: Fn(Tricomplex) -> Result<Tricomplex>,
{
    path_integral_with(f, path, QuadratureOptions::default())
}

/// Composite midpoint rule with one Richardson step, doubling the number of
/// segments until two extrapolated estimates agree.
pub fn path_integral_with<F>(f: F, path: &Path3, opts: QuadratureOptions) -> Result<Tricomplex>
where
    F: Fn(Tricomplex) -> Result<Tricomplex>,
{
    let mut n = path.base_samples().max(1);
    let mut coarse = midpoint_sum(&f, path, n)?;
    let mut prev_r: Option<Tricomplex> = None;
    loop {
        if 2 * n > opts.max_samples {
            return Err(Error::NonConvergent { samples: n });
        }
        n *= 2;
        let fine = midpoint_sum(&f, path, n)?;
        let r = (fine.scale(4.0) - coarse).scale(1.0 / 3.0);
        if let Some(p) = prev_r {
            if r.max_abs_diff(p) < opts.tol * r.norm_inf().max(1.0) {
                return Ok(r);
            }
        }
        prev_r = Some(r);
        coarse = fine;
    }
}

fn singular_tol(a: Tricomplex) -> f64 {
    1e-8 * a.norm_inf().max(1.0)
}

fn point_segment_distance(p: [f64; 2], a: [f64; 2], b: [f64; 2]) -> f64 {
    let (dx, dy) = (b[0] - a[0], b[1] - a[1]);
    let len2 = dx * dx + dy * dy;
    let t = if len2 > 0.0 {
        (((p[0] - a[0]) * dx + (p[1] - a[1]) * dy) / len2).clamp(0.0, 1.0)
    } else {
        0.0
    };
    let (ex, ey) = (a[0] + t * dx - p[0], a[1] + t * dy - p[1]);
    ex.hypot(ey)
}

/// Closed polygon approximating the loop: the exact corners of a polyline,
/// a fine sampling of a curve.
fn outline(path: &Path3) -> Vec<Tricomplex> {
    match path {
        Path3::Polyline { vertices, .. } => vertices.clone(),
        Path3::Parametric { .. } => {
            let n = 8 * path.base_samples();
            let mut pts = path.sample(n);
            pts.pop();
            pts
        }
    }
}

fn require_closed(path: &Path3) -> Result<()> {
    if path.is_closed() {
        Ok(())
    } else {
        Err(Error::Invalid("loop must be closed".into()))
    }
}

/// Smallest distance between the line through `a` parallel to the trisector
/// and the loop outline, measured in the projection onto the nodal plane.
fn line_clearance(a: Tricomplex, pts: &[Tricomplex]) -> f64 {
    let p = project_nodal(a);
    let proj: Vec<[f64; 2]> = pts.iter().map(|&u| project_nodal(u)).collect();
    (0..proj.len())
        .map(|i| point_segment_distance(p, proj[i], proj[(i + 1) % proj.len()]))
        .fold(f64::INFINITY, f64::min)
}

/// Reports whether the loop lies entirely above or below the plane
/// `x+y+z = const` through `a`. A loop touching or crossing that plane meets
/// the singular set of `1/(u-a)`.
pub fn pole_side(a: Tricomplex, path: &Path3) -> Result<PlaneSide> {
    let tol = singular_tol(a);
    let pts = outline(path);
    if pts.iter().all(|u| (*u - a).sigma() > tol) {
        Ok(PlaneSide::Above)
    } else if pts.iter().all(|u| (*u - a).sigma() < -tol) {
        Ok(PlaneSide::Below)
    } else {
        Err(Error::SingularOnPath)
    }
}

fn check_clear_of(a: Tricomplex, path: &Path3) -> Result<()> {
    require_closed(path)?;
    pole_side(a, path)?;
    if line_clearance(a, &outline(path)) <= singular_tol(a) {
        return Err(Error::SingularOnPath);
    }
    Ok(())
}

/// Integer winding number of the loop's projection on the nodal plane around
/// the projection of `a`. Multiple turns count with multiplicity.
pub fn winding_number(a: Tricomplex, path: &Path3) -> Result<i64> {
    require_closed(path)?;
    let pts = outline(path);
    if line_clearance(a, &pts) <= singular_tol(a) {
        return Err(Error::AmbiguousWinding);
    }
    let p = project_nodal(a);
    let rel: Vec<(f64, f64)> = pts
        .iter()
        .map(|&u| {
            let q = project_nodal(u);
            (q[0] - p[0], q[1] - p[1])
        })
        .collect();
    let mut total = 0.0;
    for i in 0..rel.len() {
        let (x0, y0) = rel[i];
        let (x1, y1) = rel[(i + 1) % rel.len()];
        total += (x0 * y1 - y0 * x1).atan2(x0 * x1 + y0 * y1);
    }
    Ok((total / TAU).round() as i64)
}

/// Numerical `loop integral of du/(u-a)`.
pub fn loop_integral_pole(a: Tricomplex, path: &Path3) -> Result<Tricomplex> {
    check_clear_of(a, path)?;
    path_integral(|u| (u - a).inverse(), path)
}

/// Numerical `loop integral of f(u) du/(u-a)`.
pub fn cauchy_value<F>(f: F, a: Tricomplex, path: &Path3) -> Result<Tricomplex>
where
    F: Fn(Tricomplex) -> Result<Tricomplex>,
{
    cauchy_derivative_value(f, a, path, 0)
}

/// Numerical `loop integral of f(u) du/(u-a)^(m+1)`, which for analytic `f`
/// equals `pole_period() * f^(m)(a) / m!`.
pub fn cauchy_derivative_value<F>(f: F, a: Tricomplex, path: &Path3, m: u32) -> Result<Tricomplex>
where
    F: Fn(Tricomplex) -> Result<Tricomplex>,
{
    check_clear_of(a, path)?;
    path_integral(|u| Ok(f(u)? * (u - a).inverse()?.powu(m + 1)), path)
}

/// Residue theorem: `pole_period()` times the sum of residues weighted by
/// the winding of the loop around each pole's line.
pub fn residue_sum(poles: &[PoleSpec], path: &Path3) -> Result<Tricomplex> {
    let mut acc = Tricomplex::ZERO;
    for pole in poles {
        let w = winding_number(pole.location, path)?;
        acc += pole.residue.scale(w as f64);
    }
    Ok(pole_period() * acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::functions::texp;

    fn above_circle(turns: i32) -> Path3 {
        Path3::circle(Tricomplex::new(1.0, 1.0, 1.0), 1.0, turns).unwrap()
    }

    #[test]
    fn constant_along_segment() {
        let u1 = Tricomplex::new(0.4, -1.2, 2.0);
        let p = Path3::polyline(vec![Tricomplex::ZERO, u1]).unwrap();
        let r = path_integral(|_| Ok(Tricomplex::ONE), &p).unwrap();
        assert!(r.max_abs_diff(u1) < 1e-15);
    }

    #[test]
    fn exp_antiderivative() {
        let w = Tricomplex::new(0.5, -0.3, 0.8);
        let p = Path3::polyline(vec![Tricomplex::ZERO, Tricomplex::new(0.2, 0.6, -0.4), w]).unwrap();
        let r = path_integral(texp, &p).unwrap();
        assert!(r.max_abs_diff(texp(w).unwrap() - Tricomplex::ONE) < 1e-8);
    }

    #[test]
    fn closed_triangle_square() {
        let p = Path3::closed_polyline(vec![
            Tricomplex::new(1.0, 0.0, 0.0),
            Tricomplex::new(0.0, 2.0, -1.0),
            Tricomplex::new(-1.0, 0.5, 3.0),
        ])
        .unwrap();
        let r = path_integral(|u| Ok(u * u), &p).unwrap();
        assert!(r.norm_inf() < 1e-8);
    }

    #[test]
    fn single_pole() {
        let r = loop_integral_pole(Tricomplex::ZERO, &above_circle(1)).unwrap();
        assert!(r.max_abs_diff(pole_period()) < 1e-9, "{r}");
        let r2 = loop_integral_pole(Tricomplex::ZERO, &above_circle(2)).unwrap();
        assert!(r2.max_abs_diff(pole_period().scale(2.0)) < 1e-9, "{r2}");
        let back = loop_integral_pole(Tricomplex::ZERO, &above_circle(-1)).unwrap();
        assert!(back.max_abs_diff(-pole_period()) < 1e-9);
    }

    #[test]
    fn below_the_plane_has_same_value() {
        let c = Path3::circle(Tricomplex::new(-1.0, -1.0, -1.0), 1.0, 1).unwrap();
        assert_eq!(pole_side(Tricomplex::ZERO, &c), Ok(PlaneSide::Below));
        let r = loop_integral_pole(Tricomplex::ZERO, &c).unwrap();
        assert!(r.max_abs_diff(pole_period()) < 1e-9, "{r}");
    }

    #[test]
    fn other_integer_powers_vanish() {
        let c = above_circle(1);
        for m in [-3, -2, 0, 1, 2] {
            let r = path_integral(|u: Tricomplex| u.powi(m), &c).unwrap();
            assert!(r.norm_inf() < 1e-7, "m={m}: {r}");
        }
    }

    #[test]
    fn exterior_pole() {
        let c = Path3::circle(Tricomplex::new(4.0, 1.0, 1.0), 0.5, 1).unwrap();
        let r = loop_integral_pole(Tricomplex::ZERO, &c).unwrap();
        assert!(r.norm_inf() < 1e-9);
        assert_eq!(winding_number(Tricomplex::ZERO, &c), Ok(0));
    }

    #[test]
    fn singular_loops_rejected() {
        // crosses the plane x+y+z = 0
        let tilted = Path3::closed_polyline(vec![
            Tricomplex::new(1.0, 0.0, 0.0),
            Tricomplex::new(0.0, -2.0, 0.0),
            Tricomplex::new(0.0, 0.0, 1.0),
        ])
        .unwrap();
        assert_eq!(
            loop_integral_pole(Tricomplex::ZERO, &tilted),
            Err(Error::SingularOnPath)
        );
        // passes through the line through the pole
        let through = Path3::circle(Tricomplex::new(2.0, 1.0, 1.0), 1.0 / 1.5f64.sqrt(), 1).unwrap();
        assert_eq!(
            loop_integral_pole(Tricomplex::new(1.0, 1.0, 1.0) * 0.5, &through),
            Err(Error::SingularOnPath)
        );
        let open = Path3::polyline(vec![Tricomplex::ONE, Tricomplex::H]).unwrap();
        assert!(matches!(
            loop_integral_pole(Tricomplex::ZERO, &open),
            Err(Error::Invalid(_))
        ));
    }

    #[test]
    fn cauchy_values() {
        let a = Tricomplex::new(0.5, 0.1, 0.1);
        let c = Path3::circle(a + Tricomplex::new(0.2, 0.2, 0.2), 0.7, 1).unwrap();
        let one = cauchy_value(|_| Ok(Tricomplex::ONE), a, &c).unwrap();
        assert!(one.max_abs_diff(pole_period()) < 1e-9);
        let e = cauchy_value(texp, a, &c).unwrap();
        assert!(e.max_abs_diff(pole_period() * texp(a).unwrap()) < 1e-6, "{e}");
        let d = cauchy_derivative_value(Ok, a, &c, 1).unwrap();
        assert!(d.max_abs_diff(pole_period()) < 1e-9);
    }

    #[test]
    fn residues() {
        let c = above_circle(1);
        let inside = PoleSpec::new(Tricomplex::ZERO, Tricomplex::new(1.0, 2.0, -0.5));
        let outside = PoleSpec::new(Tricomplex::new(-3.0, 0.0, 0.0), Tricomplex::new(0.3, 0.3, 1.0));
        let sum = residue_sum(&[inside, outside], &c).unwrap();
        let quad = path_integral(
            |u| {
                Ok(inside.residue * (u - inside.location).inverse()?
                    + outside.residue * (u - outside.location).inverse()?)
            },
            &c,
        )
        .unwrap();
        assert!(sum.max_abs_diff(quad) < 1e-6, "{sum} vs {quad}");
        assert!(sum.max_abs_diff(pole_period() * inside.residue) < 1e-12);
    }

    #[test]
    fn ambiguous_winding() {
        let c = above_circle(1);
        let on_curve = c.point(0.0) - Tricomplex::new(2.0, 2.0, 2.0);
        assert_eq!(winding_number(on_curve, &c), Err(Error::AmbiguousWinding));
    }
}
