//! Real 3x3 matrices: the circulant representation of tricomplex numbers and
//! its block-diagonal reduction.

use std::ops::Mul;

use crate::algebra::Tricomplex;

const SQRT3_2: f64 = 0.866_025_403_784_438_6;

/// Row-major 3x3 real matrix.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Matrix3(pub [[f64; 3]; 3]);

impl Matrix3 {
    pub const IDENTITY: Matrix3 = Matrix3([[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]]);

    /// The orthogonal change of basis onto the axes `(2,-1,-1)/sqrt6`,
    /// `(0,1,-1)/sqrt2`, `(1,1,1)/sqrt3`. Its inverse is its transpose.
    pub fn reduction_basis() -> Matrix3 {
        let (s2, s3, s6) = (2f64.sqrt(), 3f64.sqrt(), 6f64.sqrt());
        Matrix3([
            [2.0 / s6, -1.0 / s6, -1.0 / s6],
            [0.0, 1.0 / s2, -1.0 / s2],
            [1.0 / s3, 1.0 / s3, 1.0 / s3],
        ])
    }

    pub fn transpose(&self) -> Matrix3 {
        let m = &self.0;
        let mut t = [[0.0; 3]; 3];
        for (i, row) in t.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                *v = m[j][i];
            }
        }
        Matrix3(t)
    }

    pub fn det(&self) -> f64 {
        let m = &self.0;
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    }

    /// Inverse by the adjugate; `None` when the determinant is zero.
    pub fn inverse(&self) -> Option<Matrix3> {
        let det = self.det();
        if det == 0.0 || !det.is_finite() {
            return None;
        }
        let m = &self.0;
        let cof = |r0: usize, r1: usize, c0: usize, c1: usize| m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
        let adj = [
            [cof(1, 2, 1, 2), -cof(0, 2, 1, 2), cof(0, 1, 1, 2)],
            [-cof(1, 2, 0, 2), cof(0, 2, 0, 2), -cof(0, 1, 0, 2)],
            [cof(1, 2, 0, 1), -cof(0, 2, 0, 1), cof(0, 1, 0, 1)],
        ];
        let mut out = [[0.0; 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                out[i][j] = adj[i][j] / det;
            }
        }
        Some(Matrix3(out))
    }

    pub fn max_abs_diff(&self, other: &Matrix3) -> f64 {
        self.0
            .iter()
            .flatten()
            .zip(other.0.iter().flatten())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    /// True when every row is the cyclic right shift of the row above.
    pub fn is_circulant(&self) -> bool {
        let m = &self.0;
        (1..3).all(|i| (0..3).all(|j| m[i][j] == m[i - 1][(j + 2) % 3]))
    }
}

impl Mul for Matrix3 {
    type Output = Matrix3;
    fn mul(self, r: Matrix3) -> Matrix3 {
        let mut out = [[0.0; 3]; 3];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                *v = (0..3).map(|k| self.0[i][k] * r.0[k][j]).sum();
            }
        }
        Matrix3(out)
    }
}

impl Tricomplex {
    /// Circulant matrix with rows `(x,y,z)`, `(z,x,y)`, `(y,z,x)`. The map is
    /// an algebra homomorphism and `det` equals `x^3+y^3+z^3-3xyz`.
    pub fn to_matrix(self) -> Matrix3 {
        let Tricomplex { x, y, z } = self;
        Matrix3([[x, y, z], [z, x, y], [y, z, x]])
    }

    /// Block-diagonal form `T U T^-1` of the circulant matrix: a 2x2 rotation-
    /// scaling block acting on the nodal plane and a 1x1 block `x+y+z`.
    pub fn irreducible_rep(self) -> Matrix3 {
        let Tricomplex { x, y, z } = self;
        let a = x - 0.5 * (y + z);
        let b = SQRT3_2 * (y - z);
        Matrix3([[a, b, 0.0], [-b, a, 0.0], [0.0, 0.0, x + y + z]])
    }
}
