mod common;

use common::rel;
use proptest::prelude::*;
use tricomplex::calculus::{cauchy_value, check_analytic, loop_integral_pole, pole_period, reexpand, Path3};
use tricomplex::cosexp::{cosexp, CosexpKind};
use tricomplex::functions::{oracle_eval, texp, tlog, tpow, ElementaryFn};
use tricomplex::geometry::{from_canonical, polar, to_canonical};
use tricomplex::poly::{factor, TriPolynomial};
use tricomplex::Tricomplex;

fn tri(r: f64) -> impl Strategy<Value = Tricomplex> {
    (-r..r, -r..r, -r..r).prop_map(|(x, y, z)| Tricomplex::new(x, y, z))
}

fn regular(r: f64) -> impl Strategy<Value = Tricomplex> {
    tri(r).prop_filter("regular", |u| u.is_regular())
}

fn upper(r: f64) -> impl Strategy<Value = Tricomplex> {
    regular(r).prop_filter("x+y+z > 0", |u| u.sigma() > 0.0)
}

proptest! {
    #[test]
    fn ring_axioms(u in tri(10.0), v in tri(10.0), w in tri(10.0)) {
        let (nu, nv, nw) = (u.modulus(), v.modulus(), w.modulus());
        prop_assert!(rel(u * v, v * u, nu * nv) < 1e-12);
        prop_assert!(rel((u * v) * w, u * (v * w), nu * nv * nw) < 1e-12);
        prop_assert!(rel(u * (v + w), u * v + u * w, nu * (nv + nw)) < 1e-12);
        prop_assert_eq!(u * Tricomplex::ONE, u);
    }

    #[test]
    fn invariants_multiply(u in tri(10.0), v in tri(10.0)) {
        let p = u * v;
        let (nu, nv) = (u.modulus(), v.modulus());
        prop_assert!((p.sigma() - u.sigma() * v.sigma()).abs() <= 1e-12 * 3.0 * nu * nv);
        prop_assert!((p.delta_sq() - u.delta_sq() * v.delta_sq()).abs() <= 1e-12 * (nu * nv).powi(2));
        prop_assert!((p.nu() - u.nu() * v.nu()).abs() <= 1e-12 * (nu * nv).powi(3));
    }

    #[test]
    fn canonical_form_is_a_ring_map(u in tri(10.0), v in tri(10.0)) {
        let scale = u.modulus() * v.modulus();
        let lhs = to_canonical(u * v);
        let rhs = to_canonical(u).mul(&to_canonical(v));
        prop_assert!((lhs.v1 - rhs.v1).abs() < 1e-12 * scale);
        prop_assert!((lhs.v1t - rhs.v1t).abs() < 1e-12 * scale);
        prop_assert!((lhs.vp - rhs.vp).abs() < 1e-12 * scale);
        prop_assert!(rel(from_canonical(to_canonical(u)), u, u.modulus().max(1e-300)) < 1e-15);
    }

    #[test]
    fn inverse_of_regular(u in regular(10.0)) {
        let inv = u.inverse().unwrap();
        prop_assert!((u * inv).max_abs_diff(Tricomplex::ONE) < 1e-10);
    }

    #[test]
    fn azimuth_adds_and_amplitude_multiplies(u in upper(10.0), v in upper(10.0)) {
        let (a, b, p) = (polar(u).unwrap(), polar(v).unwrap(), polar(u * v).unwrap());
        let d = (p.phi - a.phi - b.phi).rem_euclid(std::f64::consts::TAU);
        prop_assert!(d.min(std::f64::consts::TAU - d) < 1e-10);
        prop_assert!((p.rho - a.rho * b.rho).abs() < 1e-10 * u.modulus() * v.modulus());
    }

    #[test]
    fn exp_is_a_homomorphism(u in tri(5.0), v in tri(5.0)) {
        let (eu, ev) = (texp(u).unwrap(), texp(v).unwrap());
        let scale = 3f64.sqrt() * eu.modulus() * ev.modulus();
        prop_assert!(rel(texp(u + v).unwrap(), eu * ev, scale) < 1e-13);
    }

    #[test]
    fn log_inverts_exp(u in upper(10.0)) {
        let back = texp(tlog(u).unwrap()).unwrap();
        prop_assert!(rel(back, u, u.norm_inf()) < 1e-12);
    }

    #[test]
    fn integer_powers_match_products(u in tri(5.0), m in 0u32..8) {
        let direct = u.powu(m);
        let formula = tpow(u, f64::from(m)).unwrap();
        prop_assert!(rel(formula, direct, direct.modulus().max(1e-300)) < 1e-10);
    }

    #[test]
    fn direct_and_oracle_agree(u in regular(5.0)) {
        for f in ElementaryFn::ALL {
            if f == ElementaryFn::Log && u.sigma() <= 0.0 {
                continue;
            }
            let (a, b) = (f.eval(u).unwrap(), oracle_eval(f, u).unwrap());
            prop_assert!(rel(a, b, b.norm_inf().max(1.0)) < 1e-12, "{} at {}", f, u);
        }
    }

    #[test]
    fn cosexp_cubic_identity(y in -5.0f64..5.0) {
        let (c, m, p) = (cosexp(CosexpKind::Cx, y), cosexp(CosexpKind::Mx, y), cosexp(CosexpKind::Px, y));
        let scale = c.abs().powi(3) + m.abs().powi(3) + p.abs().powi(3) + 3.0 * (c * m * p).abs();
        prop_assert!((c.powi(3) + m.powi(3) + p.powi(3) - 3.0 * c * m * p - 1.0).abs() < 1e-13 * scale);
    }

    #[test]
    fn display_round_trips(u in tri(1e6)) {
        prop_assert_eq!(u.to_string().parse::<Tricomplex>().unwrap(), u);
    }

    #[test]
    fn taylor_reexpansion(
        coeffs in prop::collection::vec(tri(2.0), 1..6),
        a in tri(1.0),
        u in tri(1.0),
    ) {
        let shifted = reexpand(&coeffs, a);
        let eval = |cs: &[Tricomplex], w: Tricomplex| cs.iter().rev().fold(Tricomplex::ZERO, |acc, &c| acc * w + c);
        let scale: f64 = coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| c.norm_inf() * (3.0 * (u.norm_inf() + a.norm_inf() + 1.0)).powi(k as i32))
            .sum();
        prop_assert!(rel(eval(&coeffs, u), eval(&shifted, u - a), scale) < 1e-13);
    }

    #[test]
    fn powers_are_analytic(u in regular(1.0), m in 2i32..6) {
        let report = check_analytic(|w: Tricomplex| w.powi(m), u, 1e-4).unwrap();
        prop_assert!(report.max_residual() < 1e-5);
    }

    #[test]
    fn factoring_reconstructs_products(roots in prop::collection::vec(regular(2.0), 1..5)) {
        let p = TriPolynomial::from_roots(&roots).unwrap();
        prop_assert!(factor(&p).unwrap().relative_residual(&p) < 1e-8);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn pole_loops_deform_freely(
        a in tri(1.0),
        r1 in 0.2f64..2.0,
        r2 in 0.2f64..2.0,
        h1 in -2.0f64..2.0,
        h2 in -2.0f64..2.0,
        angle in 0.0f64..std::f64::consts::TAU,
        shift in 0.0f64..0.5,
    ) {
        prop_assume!(h1.abs() > 0.05 && h2.abs() > 0.05 && h1.signum() == h2.signum());
        let diag = Tricomplex::new(1.0, 1.0, 1.0);
        // move the second center off the pole, keeping the pole inside
        let off = (Tricomplex::new(2.0, -1.0, -1.0).scale(angle.cos() / 6f64.sqrt())
            + Tricomplex::new(0.0, 1.0, -1.0).scale(angle.sin() / 2f64.sqrt()))
        .scale(shift * r2);
        let c1 = Path3::circle(a + diag.scale(h1), r1, 1).unwrap();
        let c2 = Path3::circle(a + diag.scale(h2) + off, r2, 1).unwrap();
        let (i1, i2) = (loop_integral_pole(a, &c1).unwrap(), loop_integral_pole(a, &c2).unwrap());
        prop_assert!(i1.max_abs_diff(pole_period()) < 1e-7);
        prop_assert!(i1.max_abs_diff(i2) < 1e-7);
        let (v1, v2) = (cauchy_value(texp, a, &c1).unwrap(), cauchy_value(texp, a, &c2).unwrap());
        prop_assert!(v1.max_abs_diff(v2) < 1e-7 * v1.norm_inf().max(1.0));
    }
}
