//! Differentiation, analyticity checks and loop integrals.
//!
//! Functions of a tricomplex variable are passed as closures returning
//! `Result<Tricomplex>` so that domain failures of the integrand surface as
//! errors rather than as infinities.

mod analytic;
mod integrate;
mod path;

pub use analytic::{
    check_analytic, derivative, derivative_along, reexpand, RiemannReport, DEFAULT_FIRST_STEP, DEFAULT_SECOND_STEP,
};
pub use integrate::{
    cauchy_derivative_value, cauchy_value, loop_integral_pole, path_integral, path_integral_with, pole_side,
    residue_sum, winding_number, PlaneSide, PoleSpec, QuadratureOptions,
};
pub use path::Path3;

use crate::algebra::Tricomplex;

/// `2pi (h-k)/sqrt3`, the loop integral of `du/(u-a)` around the line
/// through `a` parallel to the trisector.
pub fn pole_period() -> Tricomplex {
    let c = 2.0 * std::f64::consts::PI / 3f64.sqrt();
    Tricomplex::new(0.0, c, -c)
}

/// Coordinates of the orthogonal projection onto the nodal plane, along the
/// axes `(2,-1,-1)/sqrt6` and `(0,1,-1)/sqrt2`.
pub fn project_nodal(u: Tricomplex) -> [f64; 2] {
    [(2.0 * u.x - u.y - u.z) / 6f64.sqrt(), (u.y - u.z) / 2f64.sqrt()]
}
