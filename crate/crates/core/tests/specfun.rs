mod support;

use prolatekit::specfun::{bessel_j, bessel_j_sequence, gamma, ln_gamma};
use support::bessel_reference::BESSEL_J_TABLE;
use support::oracle::poisson_bessel;

#[test]
fn bessel_matches_high_precision_table() {
    let mut worst = 0.0f64;
    for &(nu, x, expect) in BESSEL_J_TABLE {
        let got = bessel_j(nu, x).unwrap_or_else(|e| panic!("J_{nu}({x}): {e}"));
        if expect.abs() < 1e-290 {
            // below the normal f64 range; only require a tiny non-negative-scale result
            assert!(got.abs() < 1e-280, "J_{nu}({x}) = {got:e}");
            continue;
        }
        let rel = (got - expect).abs() / expect.abs();
        worst = worst.max(rel);
        assert!(rel <= 1e-12, "J_{nu}({x}) = {got:e}, want {expect:e}, rel {rel:e}");
    }
    eprintln!("worst relative error {worst:e}");
}

#[test]
fn bessel_recurrence_residual() {
    for &alpha in &[0.0, 0.5, 3.0, 10.5] {
        for i in 0..=999 {
            let x = 0.1 + i as f64 * (100.0 - 0.1) / 999.0;
            let s = bessel_j_sequence(alpha - 1.0, 3, x).unwrap();
            let resid = (s[0] + s[2] - 2.0 * alpha / x * s[1]).abs();
            assert!(resid <= 1e-10 * (1.0 + s[1].abs()), "alpha={alpha} x={x} resid={resid:e}");
        }
    }
}

#[test]
fn bessel_agrees_with_poisson_integral() {
    for &alpha in &[0.0, 0.5, 1.0, 2.5, 7.0, 12.3, 20.0] {
        for &x in &[0.0, 0.4, 3.3, 9.0, 17.5, 31.0, 50.0] {
            let (oracle, floor) = poisson_bessel(alpha, x);
            let got = bessel_j(alpha, x).unwrap();
            let tol = 1e-10f64.max(floor);
            assert!((got - oracle).abs() <= tol, "alpha={alpha} x={x}: {got} vs {oracle}");
        }
    }
}

fn fitted_envelope_constant(exponent_shift: f64, x_min: f64) -> f64 {
    // sup of |J_a(x)| 2^a Gamma(a+1/2) / x^{a + shift} over a in [0,20], x in [x_min, 1]
    let mut c_fit = 0.0f64;
    for ia in 0..=40 {
        let alpha = ia as f64 * 0.5;
        let envelope_log = -alpha * 2f64.ln() - ln_gamma(alpha + 0.5).unwrap();
        for ix in 0..=200 {
            let x = x_min.powf(1.0 - ix as f64 / 200.0);
            let j = bessel_j(alpha, x).unwrap().abs();
            let bound = ((alpha + exponent_shift) * x.ln() + envelope_log).exp();
            c_fit = c_fit.max(j / bound);
        }
    }
    c_fit
}

#[test]
fn small_argument_bound_constant() {
    // With the power |x|^a the envelope holds with C = Gamma(1/2)/Gamma(1) = sqrt(pi).
    let c_fit = fitted_envelope_constant(0.0, 1e-6);
    eprintln!("fitted constant (power a) {c_fit}");
    assert!(c_fit <= 2.0);
    // With the power |x|^{a+1/2} the ratio grows like x^{-1/2} as x -> 0.
    let c_coarse = fitted_envelope_constant(0.5, 1e-2);
    let c_fine = fitted_envelope_constant(0.5, 1e-6);
    eprintln!("fitted constant (power a+1/2): {c_coarse} on [1e-2,1], {c_fine} on [1e-6,1]");
    assert!(c_fine > 10.0 * c_coarse);
}

#[test]
fn gamma_sanity() {
    assert!((gamma(5.0).unwrap() - 24.0).abs() < 1e-12);
    assert!((gamma(0.5).unwrap() - std::f64::consts::PI.sqrt()).abs() < 1e-14);
    assert!((ln_gamma(100.5).unwrap() - support::oracle::ln_gamma_ref(100.5)).abs() < 1e-11);
}
