use std::fmt;
use std::sync::Arc;

use crate::algebra::Tricomplex;
use crate::error::{Error, Result};

const CLOSURE_TOL: f64 = 1e-12;

type Curve = Arc<dyn Fn(f64) -> Tricomplex + Send + Sync>;

/// A path in tricomplex space, parametrized over `t in [0, 1]`.
#[derive(Clone)]
pub enum Path3 {
    /// Straight segments through the vertices. A closed polyline returns to
    /// its first vertex without repeating it.
    Polyline { vertices: Vec<Tricomplex>, closed: bool },
    /// A smooth curve with the number of samples used for its first
    /// quadrature pass.
    Parametric { curve: Curve, samples: usize, closed: bool },
}

impl fmt::Debug for Path3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Path3::Polyline { vertices, closed } => f
                .debug_struct("Polyline")
                .field("vertices", vertices)
                .field("closed", closed)
                .finish(),
            Path3::Parametric { samples, closed, .. } => f
                .debug_struct("Parametric")
                .field("samples", samples)
                .field("closed", closed)
                .finish_non_exhaustive(),
        }
    }
}

impl Path3 {
    /// Open polyline; needs at least two finite vertices.
    pub fn polyline(vertices: Vec<Tricomplex>) -> Result<Self> {
        Self::checked_polyline(vertices, false)
    }

    /// Closed polyline. A repeated final vertex equal to the first is dropped.
    pub fn closed_polyline(mut vertices: Vec<Tricomplex>) -> Result<Self> {
        if vertices.len() > 1 {
            let (first, last) = (vertices[0], vertices[vertices.len() - 1]);
            if first.max_abs_diff(last) <= CLOSURE_TOL {
                vertices.pop();
            }
        }
        Self::checked_polyline(vertices, true)
    }

    fn checked_polyline(vertices: Vec<Tricomplex>, closed: bool) -> Result<Self> {
        let min = if closed { 3 } else { 2 };
        if vertices.len() < min {
            return Err(Error::Invalid(format!("path needs at least {min} vertices")));
        }
        if vertices.iter().any(|v| !v.is_finite()) {
            return Err(Error::Invalid("path vertex is not finite".into()));
        }
        Ok(Path3::Polyline { vertices, closed })
    }

    /// Parametric curve on `[0, 1]`. A closed curve must return to its
    /// starting point.
    pub fn parametric<F>(curve: F, samples: usize, closed: bool) -> Result<Self>
    where
        F: Fn(f64) -> Tricomplex + Send + Sync + 'static,
    {
        if samples < 2 {
            return Err(Error::Invalid("path needs at least 2 samples".into()));
        }
        let (a, b) = (curve(0.0), curve(1.0));
        if !a.is_finite() || !b.is_finite() {
            return Err(Error::Invalid("path endpoint is not finite".into()));
        }
        if closed && a.max_abs_diff(b) > CLOSURE_TOL {
            return Err(Error::Invalid("closed path endpoints differ".into()));
        }
        Ok(Path3::Parametric {
            curve: Arc::new(curve),
            samples,
            closed,
        })
    }

    /// Circle of the given radius around `center`, lying in the plane
    /// through `center` perpendicular to the trisector line. Positive turns
    /// run counterclockwise seen from the positive trisector direction.
    pub fn circle(center: Tricomplex, radius: f64, turns: i32) -> Result<Self> {
        if !(radius.is_finite() && radius > 0.0) || !center.is_finite() {
            return Err(Error::Invalid("circle needs a finite positive radius".into()));
        }
        if turns == 0 {
            return Err(Error::Invalid("circle needs a nonzero number of turns".into()));
        }
        let e1 = Tricomplex::new(2.0, -1.0, -1.0).scale(1.0 / 6f64.sqrt());
        let e2 = Tricomplex::new(0.0, 1.0, -1.0).scale(1.0 / 2f64.sqrt());
        let sweep = std::f64::consts::TAU * f64::from(turns);
        let samples = 64 * turns.unsigned_abs() as usize;
        let curve = move |t: f64| {
            let psi = sweep * t;
            center + (e1.scale(psi.cos()) + e2.scale(psi.sin())).scale(radius)
        };
        // endpoints agree up to rounding of cos/sin at a multiple of 2pi
        Ok(Path3::Parametric {
            curve: Arc::new(curve),
            samples,
            closed: true,
        })
    }

    pub fn is_closed(&self) -> bool {
        match self {
            Path3::Polyline { closed, .. } | Path3::Parametric { closed, .. } => *closed,
        }
    }

    /// Default number of segments for a first quadrature pass.
    pub fn base_samples(&self) -> usize {
        match self {
            Path3::Polyline { vertices, closed } => {
                if *closed {
                    vertices.len()
                } else {
                    vertices.len() - 1
                }
            }
            Path3::Parametric { samples, .. } => *samples,
        }
    }

    /// Point at parameter `t in [0, 1]`. Polylines are parametrized with
    /// equal parameter length per segment.
    pub fn point(&self, t: f64) -> Tricomplex {
        match self {
            Path3::Parametric { curve, closed, .. } => {
                if *closed && t >= 1.0 {
                    curve(0.0)
                } else {
                    curve(t)
                }
            }
            Path3::Polyline { vertices, closed } => {
                let segs = self.base_samples();
                let pos = (t.clamp(0.0, 1.0) * segs as f64).min(segs as f64);
                let i = (pos.floor() as usize).min(segs - 1);
                let frac = pos - i as f64;
                let a = vertices[i];
                let b = if *closed && i + 1 == vertices.len() {
                    vertices[0]
                } else {
                    vertices[i + 1]
                };
                a + (b - a).scale(frac)
            }
        }
    }

    /// `n + 1` equally spaced points including both ends.
    pub fn sample(&self, n: usize) -> Vec<Tricomplex> {
        (0..=n).map(|i| self.point(i as f64 / n as f64)).collect()
    }

    /// Vertices of the path: the polyline corners, or `base_samples` points
    /// of a curve. Closed paths do not repeat the first point.
    pub fn corners(&self) -> Vec<Tricomplex> {
        match self {
            Path3::Polyline { vertices, .. } => vertices.clone(),
            Path3::Parametric { samples, closed, .. } => {
                let mut pts = self.sample(*samples);
                if *closed {
                    pts.pop();
                }
                pts
            }
        }
    }
}
