//! Commutative hypercomplex numbers in three dimensions.
//!
//! Elements are `u = x + h*y + k*z` with `h^2 = k`, `k^2 = h`, `hk = 1`. The
//! crate covers the ring operations and zero divisors, the geometric and
//! exponential descriptions of a number, the cosexponential and elementary
//! functions, power series and their convergence regions, differentiation
//! and loop integration with residues, and polynomial factorization.

pub mod algebra;
pub mod calculus;
pub mod cli;
pub mod cosexp;
pub mod error;
pub mod functions;
pub mod geometry;
pub mod matrix;
pub mod poly;
pub mod roots;
pub mod series;

pub use algebra::{AlgebraClass, Tricomplex};
pub use error::{DomainError, Error, Result};
pub use geometry::{CanonicalForm, PolarForm};
pub use matrix::Matrix3;
