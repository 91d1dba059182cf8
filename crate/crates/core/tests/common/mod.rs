#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tricomplex::Tricomplex;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn tri_in(rng: &mut impl Rng, lo: f64, hi: f64) -> Tricomplex {
    Tricomplex::new(rng.gen_range(lo..hi), rng.gen_range(lo..hi), rng.gen_range(lo..hi))
}

/// Random point off both zero-divisor sets.
pub fn regular_in(rng: &mut impl Rng, lo: f64, hi: f64) -> Tricomplex {
    loop {
        let u = tri_in(rng, lo, hi);
        if u.is_regular() {
            return u;
        }
    }
}

/// Random regular point with `x+y+z > 0`.
pub fn upper_in(rng: &mut impl Rng, lo: f64, hi: f64) -> Tricomplex {
    loop {
        let u = regular_in(rng, lo, hi);
        if u.sigma() > 0.0 {
            return u;
        }
    }
}

/// `|a - b|_inf / scale`, with the scale floored at the smallest normal.
pub fn rel(a: Tricomplex, b: Tricomplex, scale: f64) -> f64 {
    a.max_abs_diff(b) / scale.max(f64::MIN_POSITIVE)
}

pub fn rel_real(a: f64, b: f64, scale: f64) -> f64 {
    (a - b).abs() / scale.max(f64::MIN_POSITIVE)
}

pub fn run_cli(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("tricomplex").chain(args.iter().copied());
    let code = tricomplex::cli::run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).expect("utf8 stdout"),
        String::from_utf8(err).expect("utf8 stderr"),
    )
}

pub fn data_file(name: &str) -> String {
    format!("{}/tests/data/{name}", env!("CARGO_MANIFEST_DIR"))
}
