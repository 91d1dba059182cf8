//! Simultaneous root finding for complex polynomials (Aberth iteration).

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Stop once every correction is below this, relative to the root size.
pub const ROOT_TOL: f64 = 1e-12;
pub const MAX_ITERATIONS: usize = 200;
/// Roots closer than this (relative) are treated as one repeated root.
pub const CLUSTER_RADIUS: f64 = 1e-6;

fn horner(coeffs: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for &c in coeffs {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

/// All roots of `coeffs[0] z^n + ... + coeffs[n]`, with multiplicity.
///
/// Repeated roots come back as identical values (the mean of their cluster).
pub fn polynomial_roots(coeffs: &[Complex64]) -> Result<Vec<Complex64>> {
    if coeffs.is_empty() || coeffs[0] == Complex64::new(0.0, 0.0) {
        return Err(Error::Invalid("leading coefficient must be nonzero".into()));
    }
    if coeffs.iter().any(|c| !c.is_finite()) {
        return Err(Error::Invalid("polynomial coefficient is not finite".into()));
    }
    let lead = coeffs[0];
    let monic: Vec<Complex64> = coeffs.iter().map(|&c| c / lead).collect();
    let n = monic.len() - 1;
    match n {
        0 => return Ok(Vec::new()),
        1 => return Ok(vec![-monic[1]]),
        _ => {}
    }

    // Fujiwara bound on root size, and the centroid of the roots
    let bound = (1..=n)
        .map(|k| {
            let r = monic[k].norm().powf(1.0 / k as f64);
            if k == n {
                r / 2f64.powf(1.0 / n as f64)
            } else {
                r
            }
        })
        .fold(0.0, f64::max)
        * 2.0;
    let center = -monic[1] / n as f64;
    let radius = bound.max(1e-3);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            let a = std::f64::consts::TAU * k as f64 / n as f64 + 0.4;
            center + Complex64::from_polar(radius, a)
        })
        .collect();

    for _ in 0..MAX_ITERATIONS {
        let mut done = true;
        for i in 0..n {
            let (p, dp) = horner(&monic, z[i]);
            if p == Complex64::new(0.0, 0.0) {
                continue;
            }
            let ratio = p / dp;
            let repel: Complex64 = (0..n).filter(|&j| j != i).map(|j| (z[i] - z[j]).inv()).sum();
            let w = ratio / (Complex64::new(1.0, 0.0) - ratio * repel);
            if !w.is_finite() {
                continue;
            }
            z[i] -= w;
            if w.norm() > ROOT_TOL * z[i].norm().max(1.0) {
                done = false;
            }
        }
        if done {
            break;
        }
    }

    for zi in z.iter_mut() {
        for _ in 0..3 {
            let (p, dp) = horner(&monic, *zi);
            let next = *zi - p / dp;
            if !next.is_finite() || horner(&monic, next).0.norm() >= p.norm() {
                break;
            }
            *zi = next;
        }
    }

    Ok(merge_clusters(&monic, z))
}

fn derivative(coeffs: &[Complex64]) -> Vec<Complex64> {
    let n = coeffs.len() - 1;
    coeffs[..n]
        .iter()
        .enumerate()
        .map(|(k, &c)| c * (n - k) as f64)
        .collect()
}

/// Replaces each group of nearby roots by its mean, then sharpens the mean
/// as a simple root of the derivative of order `multiplicity - 1`.
fn merge_clusters(monic: &[Complex64], z: Vec<Complex64>) -> Vec<Complex64> {
    let n = z.len();
    let mut out = z.clone();
    let mut assigned = vec![false; n];
    for i in 0..n {
        if assigned[i] {
            continue;
        }
        let members: Vec<usize> = (i..n)
            .filter(|&j| !assigned[j])
            .filter(|&j| (z[j] - z[i]).norm() <= CLUSTER_RADIUS * z[i].norm().max(1.0))
            .collect();
        let mut mean = members.iter().map(|&j| z[j]).sum::<Complex64>() / members.len() as f64;
        if members.len() > 1 {
            let mut d = monic.to_vec();
            for _ in 1..members.len() {
                d = derivative(&d);
            }
            for _ in 0..4 {
                let (p, dp) = horner(&d, mean);
                let next = mean - p / dp;
                if !next.is_finite() || (next - mean).norm() > CLUSTER_RADIUS * mean.norm().max(1.0) {
                    break;
                }
                mean = next;
            }
        }
        for &j in &members {
            assigned[j] = true;
            out[j] = mean;
        }
    }
    out
}

/// Sorts by real part, then by imaginary part among roots whose real parts
/// agree to rounding.
pub fn sort_roots(roots: &mut [Complex64]) {
    roots.sort_by(|a, b| a.re.total_cmp(&b.re));
    let tie = |a: Complex64, b: Complex64| (a.re - b.re).abs() <= 1e-9 * a.norm().max(b.norm()).max(1.0);
    let mut start = 0;
    while start < roots.len() {
        let mut end = start + 1;
        while end < roots.len() && tie(roots[end - 1], roots[end]) {
            end += 1;
        }
        roots[start..end].sort_by(|a, b| a.im.total_cmp(&b.im));
        start = end;
    }
}

/// Real roots of a real polynomial, ascending. Roots with negligible
/// imaginary part are made real; any other complex root is an error.
pub fn real_roots(coeffs: &[f64]) -> Result<Vec<f64>> {
    let c: Vec<Complex64> = coeffs.iter().map(|&a| Complex64::new(a, 0.0)).collect();
    let roots = polynomial_roots(&c)?;
    let mut out = Vec::with_capacity(roots.len());
    for r in roots {
        if r.im.abs() < 1e-10 * r.norm().max(1.0) {
            out.push(r.re);
        } else {
            return Err(Error::ComplexLongitudinalRoot {
                re: r.re,
                im: r.im.abs(),
            });
        }
    }
    out.sort_by(f64::total_cmp);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn expand(roots: &[Complex64]) -> Vec<Complex64> {
        let mut p = vec![c(1.0, 0.0)];
        for &r in roots {
            let mut next = p.clone();
            next.push(c(0.0, 0.0));
            for (k, &a) in p.iter().enumerate() {
                next[k + 1] -= a * r;
            }
            p = next;
        }
        p
    }

    #[test]
    fn linear_and_quadratic() {
        assert_eq!(
            polynomial_roots(&[c(2.0, 0.0), c(-4.0, 2.0)]).unwrap(),
            vec![c(2.0, -1.0)]
        );
        let mut r = polynomial_roots(&[c(1.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)]).unwrap();
        sort_roots(&mut r);
        assert!((r[0] - c(0.0, -1.0)).norm() < 1e-14);
        assert!((r[1] - c(0.0, 1.0)).norm() < 1e-14);
    }

    #[test]
    fn recovers_constructed_roots() {
        let want = [c(1.5, -0.2), c(-0.7, 2.0), c(0.1, 0.1), c(-3.0, -1.0), c(2.2, 0.9)];
        let mut got = polynomial_roots(&expand(&want)).unwrap();
        sort_roots(&mut got);
        let mut w = want.to_vec();
        sort_roots(&mut w);
        for (a, b) in got.iter().zip(&w) {
            assert!((a - b).norm() < 1e-12, "{a} vs {b}");
        }
    }

    #[test]
    fn repeated_roots_cluster() {
        let r = polynomial_roots(&expand(&[c(1.0, 0.0), c(1.0, 0.0), c(-2.0, 0.0)])).unwrap();
        let ones = r.iter().filter(|z| (**z - c(1.0, 0.0)).norm() < 1e-10).count();
        assert_eq!(ones, 2);
        let r = real_roots(&[1.0, -2.0, 1.0]).unwrap();
        assert_eq!(r.len(), 2);
        assert!((r[0] - 1.0).abs() < 1e-12 && r[0] == r[1]);
    }

    #[test]
    fn real_polynomial_with_complex_roots() {
        assert!(matches!(
            real_roots(&[1.0, 0.0, 1.0]),
            Err(Error::ComplexLongitudinalRoot { re, im }) if re.abs() < 1e-14 && (im - 1.0).abs() < 1e-14
        ));
        assert_eq!(real_roots(&[1.0, 0.0, -1.0]).unwrap(), vec![-1.0, 1.0]);
    }

    #[test]
    fn invalid_input() {
        assert!(polynomial_roots(&[]).is_err());
        assert!(polynomial_roots(&[c(0.0, 0.0), c(1.0, 0.0)]).is_err());
    }

    #[test]
    fn sort_breaks_ties_by_imaginary_part() {
        let mut r = vec![c(1.0, 2.0), c(1.0 + 1e-15, -2.0), c(-1.0, 0.0)];
        sort_roots(&mut r);
        assert_eq!(r[0], c(-1.0, 0.0));
        assert_eq!(r[1].im, -2.0);
    }
}
