//! The polar cosexponential functions `cx`, `mx`, `px`.
//!
//! They split the exponential series by the residue of the power modulo 3:
//! `cx y = 1 + y^3/3! + ...`, `mx y = y + y^4/4! + ...`,
//! `px y = y^2/2! + y^5/5! + ...`, so `exp(h*y) = cx y + h mx y + k px y`.

use std::f64::consts::PI;

use num_complex::Complex64;

const SQRT3_2: f64 = 0.866_025_403_784_438_6;

/// Series truncation used when the series form is requested without a count.
pub const DEFAULT_TERMS: usize = 30;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CosexpKind {
    Cx,
    Mx,
    Px,
}

impl CosexpKind {
    pub const ALL: [CosexpKind; 3] = [CosexpKind::Cx, CosexpKind::Mx, CosexpKind::Px];

    /// Lowest power appearing in the series.
    pub fn offset(self) -> u32 {
        match self {
            CosexpKind::Cx => 0,
            CosexpKind::Mx => 1,
            CosexpKind::Px => 2,
        }
    }

    fn phase(self) -> f64 {
        match self {
            CosexpKind::Cx => 0.0,
            CosexpKind::Mx => -2.0 * PI / 3.0,
            CosexpKind::Px => 2.0 * PI / 3.0,
        }
    }

    /// The function this one differentiates to: `cx' = px`, `mx' = cx`, `px' = mx`.
    pub fn derivative(self) -> CosexpKind {
        match self {
            CosexpKind::Cx => CosexpKind::Px,
            CosexpKind::Mx => CosexpKind::Cx,
            CosexpKind::Px => CosexpKind::Mx,
        }
    }
}

/// Partial sum of the defining series with `terms` nonzero terms.
pub fn cosexp_series(kind: CosexpKind, y: f64, terms: usize) -> f64 {
    let first = kind.offset();
    // y^first / first!
    let mut term = match first {
        0 => 1.0,
        1 => y,
        _ => 0.5 * y * y,
    };
    let mut sum = 0.0;
    let mut n = first;
    for _ in 0..terms {
        sum += term;
        term *= y * y * y / f64::from((n + 1) * (n + 2) * (n + 3));
        n += 3;
    }
    sum
}

/// Below this `|y|` the series is used: the closed form loses digits to
/// cancellation near 0 (`mx y ~ y`, `px y ~ y^2/2`).
const SERIES_CUTOFF: f64 = 1.0;

/// Closed form `e^y/3 + (2/3) cos(sqrt3*y/2 + phase) e^(-y/2)`.
pub fn cosexp_closed(kind: CosexpKind, y: f64) -> f64 {
    y.exp() / 3.0 + 2.0 / 3.0 * (SQRT3_2 * y + kind.phase()).cos() * (-0.5 * y).exp()
}

/// `cx`, `mx` or `px` at `y`, accurate to rounding for all finite `y`.
pub fn cosexp(kind: CosexpKind, y: f64) -> f64 {
    if y.abs() <= SERIES_CUTOFF {
        cosexp_series(kind, y, 12)
    } else {
        cosexp_closed(kind, y)
    }
}

/// Derivative of `kind` evaluated at `y`.
pub fn cosexp_derivative(kind: CosexpKind, y: f64) -> f64 {
    cosexp(kind.derivative(), y)
}

/// `(cx y, mx y, px y)`.
pub fn cosexp_triple(y: f64) -> (f64, f64, f64) {
    (
        cosexp(CosexpKind::Cx, y),
        cosexp(CosexpKind::Mx, y),
        cosexp(CosexpKind::Px, y),
    )
}

/// Closed form continued to a complex argument.
pub fn cosexp_complex(kind: CosexpKind, w: Complex64) -> Complex64 {
    w.exp() / 3.0 + (w * SQRT3_2 + kind.phase()).cos() * (-0.5 * w).exp() * (2.0 / 3.0)
}
