use crate::algebra::Tricomplex;
use crate::error::Result;

/// Central-difference step for first derivatives.
pub const DEFAULT_FIRST_STEP: f64 = 1e-5;
/// Step for second derivatives; larger to keep roundoff in check.
pub const DEFAULT_SECOND_STEP: f64 = 1e-4;

/// Derivative of `f` at `u0` by a central difference along the real axis.
pub fn derivative<F>(f: F, u0: Tricomplex, step: f64) -> Result<Tricomplex>
where
    F: Fn(Tricomplex) -> Result<Tricomplex>,
{
    derivative_along(f, u0, Tricomplex::ONE, step)
}

/// Central difference quotient `(f(u0 + s*dir) - f(u0 - s*dir)) / (2 s dir)`.
///
/// The quotient only exists when `dir` is invertible, i.e. not parallel to
/// the nodal plane or the trisector line.
pub fn derivative_along<F>(f: F, u0: Tricomplex, dir: Tricomplex, step: f64) -> Result<Tricomplex>
where
    F: Fn(Tricomplex) -> Result<Tricomplex>,
{
    let inc = dir.scale(step);
    let inv = inc.scale(2.0).inverse()?;
    let diff = f(u0 + inc)? - f(u0 - inc)?;
    (diff * inv).finite()
}

/// Residuals of the relations an analytic `f = F + hG + kH` must satisfy.
///
/// Index conventions: components `F, G, H` are `0, 1, 2`, variables `x, y, z`
/// are `0, 1, 2`.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct RiemannReport {
    /// First-order relations in three groups of three:
    /// `[Fx-Gy, Gx-Hy, Hx-Fy]`, `[Fx-Hz, Gx-Fz, Hx-Gz]`, `[Gy-Hz, Hy-Fz, Fy-Gz]`.
    pub first_order: [[f64; 3]; 3],
    /// For each component `C`: `[Cxx-Cyz, Cyy-Cxz, Czz-Cxy]`.
    pub second_order: [[f64; 3]; 3],
    /// Laplacians of `F-G`, `F-H`, `G-H`.
    pub laplacian: [f64; 3],
}

impl RiemannReport {
    pub fn first_order_group_max(&self) -> [f64; 3] {
        self.first_order.map(|g| g.into_iter().fold(0.0, f64::max))
    }

    pub fn second_order_max(&self) -> [f64; 3] {
        self.second_order.map(|g| g.into_iter().fold(0.0, f64::max))
    }

    pub fn max_residual(&self) -> f64 {
        self.first_order
            .iter()
            .chain(self.second_order.iter())
            .flatten()
            .chain(self.laplacian.iter())
            .fold(0.0, |m, &r| m.max(r))
    }
}

fn unit(i: usize, h: f64) -> Tricomplex {
    let mut a = [0.0; 3];
    a[i] = h;
    Tricomplex::from(a)
}

/// Evaluates every first-order, second-order and Laplace relation at `u0`
/// with central differences of width `step`.
#[allow(clippy::needless_range_loop)]
pub fn check_analytic<F>(f: F, u0: Tricomplex, step: f64) -> Result<RiemannReport>
where
    F: Fn(Tricomplex) -> Result<Tricomplex>,
{
    let h = step;
    let at = |du: Tricomplex| f(u0 + du).and_then(Tricomplex::finite).map(Tricomplex::to_array);

    // jac[c][v] = d comp_c / d var_v
    let mut jac = [[0.0; 3]; 3];
    let mut plus = [[0.0; 3]; 3];
    let mut minus = [[0.0; 3]; 3];
    for v in 0..3 {
        plus[v] = at(unit(v, h))?;
        minus[v] = at(unit(v, -h))?;
        for c in 0..3 {
            jac[c][v] = (plus[v][c] - minus[v][c]) / (2.0 * h);
        }
    }

    let center = at(Tricomplex::ZERO)?;
    // hess[c][i][j]
    let mut hess = [[[0.0; 3]; 3]; 3];
    for i in 0..3 {
        for c in 0..3 {
            hess[c][i][i] = (plus[i][c] - 2.0 * center[c] + minus[i][c]) / (h * h);
        }
        for j in (i + 1)..3 {
            let pp = at(unit(i, h) + unit(j, h))?;
            let pm = at(unit(i, h) + unit(j, -h))?;
            let mp = at(unit(i, -h) + unit(j, h))?;
            let mm = at(unit(i, -h) + unit(j, -h))?;
            for c in 0..3 {
                let d = (pp[c] - pm[c] - mp[c] + mm[c]) / (4.0 * h * h);
                hess[c][i][j] = d;
                hess[c][j][i] = d;
            }
        }
    }

    let d = |c: usize, v: usize| jac[c][v];
    let (fx, fy, fz) = (d(0, 0), d(0, 1), d(0, 2));
    let (gx, gy, gz) = (d(1, 0), d(1, 1), d(1, 2));
    let (hx, hy, hz) = (d(2, 0), d(2, 1), d(2, 2));
    let first_order = [
        [fx - gy, gx - hy, hx - fy],
        [fx - hz, gx - fz, hx - gz],
        [gy - hz, hy - fz, fy - gz],
    ]
    .map(|g| g.map(f64::abs));

    let second_order = hess.map(|m| {
        [
            (m[0][0] - m[1][2]).abs(),
            (m[1][1] - m[0][2]).abs(),
            (m[2][2] - m[0][1]).abs(),
        ]
    });

    let lap = |c: usize| hess[c][0][0] + hess[c][1][1] + hess[c][2][2];
    let laplacian = [
        (lap(0) - lap(1)).abs(),
        (lap(0) - lap(2)).abs(),
        (lap(1) - lap(2)).abs(),
    ];

    Ok(RiemannReport {
        first_order,
        second_order,
        laplacian,
    })
}

/// Re-expands `sum_k a_k u^k` about `a`, returning `c_k` with
/// `sum_k a_k u^k = sum_k c_k (u-a)^k` and
/// `c_k = sum_l C(k+l, k) a_{k+l} a^l`.
pub fn reexpand(coeffs: &[Tricomplex], a: Tricomplex) -> Vec<Tricomplex> {
    let n = coeffs.len();
    (0..n)
        .map(|k| {
            let mut binom = 1.0; // C(k+l, k) at l = 0
            let mut a_pow = Tricomplex::ONE;
            let mut acc = Tricomplex::ZERO;
            for l in 0..(n - k) {
                if l > 0 {
                    binom *= (k + l) as f64 / l as f64;
                    a_pow *= a;
                }
                acc += coeffs[k + l] * a_pow * binom;
            }
            acc
        })
        .collect()
}
