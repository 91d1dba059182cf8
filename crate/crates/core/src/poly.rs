//! Monic polynomials with tricomplex coefficients.
//!
//! In canonical coordinates a polynomial splits into a complex polynomial in
//! the transverse variable `v1 + i v1t` and a real polynomial in the
//! longitudinal variable `vp`. Each factors on its own; pairing the
//! transverse roots with the longitudinal roots in any order gives a
//! factorization into linear tricomplex factors, so a polynomial of degree
//! `m` has up to `m!` distinct root sets.

use num_complex::Complex64;

use crate::algebra::Tricomplex;
use crate::error::{Error, Result};
use crate::geometry::{from_canonical, to_canonical, CanonicalForm};
use crate::roots::{polynomial_roots, real_roots, sort_roots};

/// `u^m + a_1 u^(m-1) + ... + a_m`, coefficients stored leading first.
#[derive(Clone, Debug, PartialEq)]
pub struct TriPolynomial {
    coeffs: Vec<Tricomplex>,
}

/// The two independent parts of a polynomial, coefficients leading first.
#[derive(Clone, Debug, PartialEq)]
pub struct Decomposition {
    pub transverse: Vec<Complex64>,
    pub longitudinal: Vec<f64>,
}

impl Decomposition {
    /// Evaluates both parts at the canonical coordinates of `u` and
    /// reassembles the result.
    pub fn eval(&self, u: Tricomplex) -> Tricomplex {
        let c = to_canonical(u);
        let t = self
            .transverse
            .iter()
            .fold(Complex64::new(0.0, 0.0), |acc, &a| acc * c.transverse() + a);
        let l = self.longitudinal.iter().fold(0.0, |acc, &a| acc * c.vp + a);
        from_canonical(CanonicalForm::from_parts(t, l))
    }
}

/// One factorization `P(u) = (u - u_1)...(u - u_m)`.
#[derive(Clone, Debug, PartialEq)]
pub struct RootSet {
    pub roots: Vec<Tricomplex>,
    /// `pairing[l]` is the index, in ascending order, of the longitudinal
    /// root combined with the `l`-th transverse root.
    pub pairing: Vec<usize>,
}

impl RootSet {
    /// Coefficients of the expanded product of the linear factors.
    pub fn expand(&self) -> Vec<Tricomplex> {
        expand_roots(&self.roots)
    }

    /// Largest coefficient mismatch against `p`, relative to the size of
    /// `p`'s coefficients.
    pub fn relative_residual(&self, p: &TriPolynomial) -> f64 {
        let scale = p.coeffs.iter().map(|c| c.norm_inf()).fold(1.0, f64::max);
        self.expand()
            .iter()
            .zip(&p.coeffs)
            .map(|(a, b)| a.max_abs_diff(*b))
            .fold(0.0, f64::max)
            / scale
    }
}

/// Coefficients of `(u - r_1)...(u - r_m)`, leading first.
pub fn expand_roots(roots: &[Tricomplex]) -> Vec<Tricomplex> {
    let mut p = vec![Tricomplex::ONE];
    for &r in roots {
        let mut next = p.clone();
        next.push(Tricomplex::ZERO);
        for (k, &a) in p.iter().enumerate() {
            next[k + 1] -= a * r;
        }
        p = next;
    }
    p
}

impl TriPolynomial {
    /// Coefficients leading first; the first must be the unity `(1,0,0)`.
    pub fn new(coeffs: Vec<Tricomplex>) -> Result<Self> {
        if coeffs.len() < 2 {
            return Err(Error::Invalid("polynomial degree must be at least 1".into()));
        }
        if coeffs[0].max_abs_diff(Tricomplex::ONE) > 1e-12 {
            return Err(Error::Invalid("leading coefficient must be (1,0,0)".into()));
        }
        if let Some(bad) = coeffs.iter().position(|c| !c.is_finite()) {
            return Err(Error::Invalid(format!("coefficient {bad} is not finite")));
        }
        Ok(TriPolynomial { coeffs })
    }

    pub fn from_roots(roots: &[Tricomplex]) -> Result<Self> {
        TriPolynomial::new(expand_roots(roots))
    }

    pub fn coeffs(&self) -> &[Tricomplex] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn eval(&self, u: Tricomplex) -> Tricomplex {
        self.coeffs.iter().fold(Tricomplex::ZERO, |acc, &a| acc * u + a)
    }

    pub fn decompose(&self) -> Decomposition {
        let (transverse, longitudinal) = self
            .coeffs
            .iter()
            .map(|&a| {
                let c = to_canonical(a);
                (c.transverse(), c.vp)
            })
            .unzip();
        Decomposition {
            transverse,
            longitudinal,
        }
    }

    /// Transverse roots sorted by real then imaginary part, and real
    /// longitudinal roots in ascending order.
    fn component_roots(&self) -> Result<(Vec<Complex64>, Vec<f64>)> {
        let d = self.decompose();
        let mut t = polynomial_roots(&d.transverse)?;
        sort_roots(&mut t);
        let l = real_roots(&d.longitudinal)?;
        Ok((t, l))
    }
}

fn build(t: &[Complex64], l: &[f64], pairing: Vec<usize>) -> RootSet {
    let roots = t
        .iter()
        .zip(&pairing)
        .map(|(&ti, &j)| from_canonical(CanonicalForm::from_parts(ti, l[j])))
        .collect();
    RootSet { roots, pairing }
}

/// The canonical factorization: the `l`-th transverse root with the `l`-th
/// longitudinal root, both in sorted order.
pub fn factor(p: &TriPolynomial) -> Result<RootSet> {
    let (t, l) = p.component_roots()?;
    Ok(build(&t, &l, (0..l.len()).collect()))
}

fn sorted_key(roots: &[Tricomplex]) -> Vec<Tricomplex> {
    let mut k = roots.to_vec();
    k.sort_by(|a, b| a.x.total_cmp(&b.x).then(a.y.total_cmp(&b.y)).then(a.z.total_cmp(&b.z)));
    k
}

fn same_multiset(a: &[Tricomplex], b: &[Tricomplex], tol: f64) -> bool {
    // greedy matching, robust to ordering noise among near-equal roots
    let mut used = vec![false; b.len()];
    a.iter().all(
        |x| match (0..b.len()).find(|&j| !used[j] && x.max_abs_diff(b[j]) <= tol) {
            Some(j) => {
                used[j] = true;
                true
            }
            None => false,
        },
    )
}

/// Next permutation in lexicographic order; false after the last one.
fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Up to `cap` distinct root sets, one per distinct pairing of transverse
/// and longitudinal roots, starting with the canonical one.
pub fn enumerate_root_sets(p: &TriPolynomial, cap: usize) -> Result<Vec<RootSet>> {
    if cap == 0 {
        return Err(Error::Invalid("cap must be at least 1".into()));
    }
    let (t, l) = p.component_roots()?;
    let scale = p.coeffs.iter().map(|c| c.norm_inf()).fold(1.0, f64::max);
    let tol = 1e-9 * scale;
    let mut perm: Vec<usize> = (0..l.len()).collect();
    let mut out: Vec<RootSet> = Vec::new();
    let mut keys: Vec<Vec<Tricomplex>> = Vec::new();
    loop {
        let set = build(&t, &l, perm.clone());
        let key = sorted_key(&set.roots);
        if !keys.iter().any(|k| same_multiset(k, &key, tol)) {
            keys.push(key);
            out.push(set);
            if out.len() == cap {
                break;
            }
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    Ok(out)
}
