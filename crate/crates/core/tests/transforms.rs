mod support;

use num_complex::Complex64;
use prolatekit::bessel_bases::{
    default_half_grid, default_real_grid, hankel_image_j, sample_spherical_j, sample_spherical_j_hankel, spherical_j,
    spherical_j_hankel, Bandwidth, Domain, PanelGrid, SampledFunction,
};
use prolatekit::prolate_core::{build_prolate_basis, sample_prolates};
use prolatekit::specfun::{bessel_j, Order};
use prolatekit::tail::{TailModel, Wave};
use prolatekit::transforms::{
    fourier_out_of_band, hankel_out_of_band, hankel_transform_at, lommel_kernel, muckenhoupt_estimate,
    operator_norm_scan, project_fourier, project_hankel, FourierRoute, HankelRoute, HilbertTransform, Projector,
    TestFunction, TransformError, WeightSpec,
};
use std::f64::consts::PI;
use support::oracle::{adaptive, adaptive_pieces, golub_welsch};

fn bw(c: f64) -> Bandwidth {
    Bandwidth::new(c).unwrap()
}

fn order(a: f64) -> Order {
    Order::new(a).unwrap()
}

fn gaussian(c: Bandwidth, center: f64, width: f64) -> SampledFunction {
    let grid = default_real_grid(c);
    let r = grid.upper();
    SampledFunction::from_fn(
        grid,
        Domain::RealLineTruncated,
        |x| (-((x - center) / width).powi(2)).exp(),
        TailModel::zero(r),
    )
}

fn half_bump(alpha: f64, c: Bandwidth, width: f64) -> SampledFunction {
    let grid = default_half_grid(c);
    let r = grid.upper();
    SampledFunction::from_fn(
        grid,
        Domain::HalfLineTruncated,
        |x| (x / width).powf(alpha + 0.5) * (-(x / width).powi(2)).exp(),
        TailModel::zero(r),
    )
}

/// Largest difference between `g` and `want` over the nodes with `|x| <= reach`.
fn worst_on(g: &SampledFunction, reach: f64, want: impl Fn(f64) -> f64) -> f64 {
    g.grid
        .nodes
        .iter()
        .zip(&g.values)
        .filter(|(x, _)| x.abs() <= reach)
        .map(|(x, v)| (v - want(*x)).abs())
        .fold(0.0, f64::max)
}

/// Legendre `P_n` by the three-term recurrence.
fn legendre(n: usize, x: f64) -> f64 {
    let (mut p0, mut p1) = (1.0, x);
    if n == 0 {
        return 1.0;
    }
    for k in 1..n {
        let p2 = ((2 * k + 1) as f64 * x * p1 - k as f64 * p0) / (k + 1) as f64;
        p0 = p1;
        p1 = p2;
    }
    p1
}

#[test]
fn hilbert_of_cosine_is_sine() {
    let grid = PanelGrid::real_line(200.0, 1.0);
    let wave = vec![Wave::new(0, 1.0, Complex64::new(1.0, 0.0))];
    let tail = TailModel { start: 200.0, right: wave.clone(), left: wave };
    let f = SampledFunction::from_fn(grid, Domain::RealLineTruncated, f64::cos, tail);
    let h = HilbertTransform::new(&f).unwrap();
    for &x in &[-5.0, -1.3, 0.0, 0.4, 2.0, 7.7] {
        let v = h.at(x).unwrap();
        assert!((v - x.sin()).abs() < 2e-4, "x={x}: {v}");
    }
}

#[test]
fn hilbert_of_indicator_is_logarithmic() {
    let grid = PanelGrid::from_breaks(vec![-3.0, -2.0, -1.0, 0.0, 1.0, 2.0, 3.0]);
    let f = SampledFunction::from_fn(
        grid,
        Domain::Interval,
        |x| if x.abs() <= 1.0 { 1.0 } else { 0.0 },
        TailModel::zero(3.0),
    );
    let h = HilbertTransform::new(&f).unwrap();
    for &x in &[-2.5f64, -0.5, 0.3, 0.9, 1.6] {
        let want = ((x + 1.0) / (x - 1.0)).abs().ln() / PI;
        let v = h.at(x).unwrap();
        assert!((v - want).abs() < 1e-8, "x={x}: {v} vs {want}");
    }
    assert_eq!(h.at(3.0), Err(TransformError::Outside(3.0)));
}

#[test]
fn hilbert_maps_even_to_odd() {
    let f = gaussian(bw(2.0), 0.0, 1.3);
    let h = HilbertTransform::new(&f).unwrap();
    for &x in &[0.2, 1.1, 4.0] {
        let (a, b) = (h.at(x).unwrap(), h.at(-x).unwrap());
        assert!((a + b).abs() < 1e-12, "x={x}");
    }
}

#[test]
fn fourier_projection_reproduces_band_limited_input() {
    let c = bw(5.0);
    for n in 0..6 {
        let j = sample_spherical_j(n, c, &default_real_grid(c));
        for (route, tol) in [(FourierRoute::Sinc, 1e-6), (FourierRoute::Hilbert, 1e-5)] {
            let p = project_fourier(&j, c, route).unwrap();
            let err = worst_on(&p, p.grid.upper(), |x| spherical_j(n, c, x));
            assert!(err < tol, "n={n} {route:?}: {err:e}");
        }
    }
}

#[test]
fn fourier_projection_of_wider_band_matches_spectral_oracle() {
    // P_c j_{n,2c}(x) = (2 pi)^{-1/2} int_{-c}^{c} U(xi) e^{i xi x} dxi,
    // U = (-i)^n sqrt((2n+1)/(4c)) P_n(xi/(2c))
    let c = 3.0;
    let wide = bw(2.0 * c);
    for n in [0, 1, 4] {
        let j = sample_spherical_j(n, wide, &default_real_grid(wide));
        let p = project_fourier(&j, bw(c), FourierRoute::Sinc).unwrap();
        let phase = Complex64::new(0.0, -1.0).powu(n as u32);
        let amp = ((2 * n + 1) as f64 / (4.0 * c)).sqrt();
        for &x in &[0.0, 0.7, -2.2, 5.1] {
            let re = adaptive(&|xi| amp * legendre(n, xi / (2.0 * c)) * (xi * x).cos(), -c, c, 1e-14);
            let im = adaptive(&|xi| amp * legendre(n, xi / (2.0 * c)) * (xi * x).sin(), -c, c, 1e-14);
            let want = (phase * Complex64::new(re, im)).re / (2.0 * PI).sqrt();
            let got = p.eval(x);
            assert!((got - want).abs() < 1e-6, "n={n} x={x}: {got} vs {want}");
        }
    }
}

#[test]
fn fourier_routes_agree_and_output_is_band_limited() {
    let c = bw(4.0);
    for (center, width) in [(0.0, 0.3), (1.0, 1.0), (-2.0, 0.6)] {
        let g = gaussian(c, center, width);
        let a = project_fourier(&g, c, FourierRoute::Sinc).unwrap();
        let b = project_fourier(&g, c, FourierRoute::Hilbert).unwrap();
        let gap = a.values.iter().zip(&b.values).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max);
        assert!(gap < 1e-5, "routes differ by {gap:e}");
        let mass = fourier_out_of_band(&a, c).unwrap();
        assert!(mass.abs() < 1e-5, "out-of-band mass {mass:e}");
    }
}

#[test]
fn fourier_projection_is_idempotent_and_self_adjoint() {
    let c = bw(4.0);
    let f = gaussian(c, 0.5, 0.4);
    let g = gaussian(c, -1.0, 0.8);
    let pf = project_fourier(&f, c, FourierRoute::Sinc).unwrap();
    let ppf = project_fourier(&pf, c, FourierRoute::Sinc).unwrap();
    let err = worst_on(&ppf, ppf.grid.upper(), |x| pf.eval(x));
    assert!(err < 2e-5, "idempotence {err:e}");
    let pg = project_fourier(&g, c, FourierRoute::Sinc).unwrap();
    let lhs = pf.inner(&g).unwrap();
    let rhs = f.inner(&pg).unwrap();
    assert!((lhs - rhs).abs() < 1e-6, "{lhs} vs {rhs}");
}

#[test]
fn fourier_projection_fixes_prolates() {
    let c = bw(6.0);
    let basis = build_prolate_basis(c, 50).unwrap();
    let psi = sample_prolates(&basis, 12, &default_real_grid(c)).unwrap();
    for (n, f) in psi.iter().enumerate() {
        let p = project_fourier(f, c, FourierRoute::Sinc).unwrap();
        let err = worst_on(&p, 10.0, |x| basis.eval_all(x)[n]);
        assert!(err < 1e-5, "n={n}: {err:e}");
    }
}

#[test]
fn projection_rejects_bad_input() {
    let c = bw(10.0);
    let coarse = PanelGrid::real_line(50.0, 1.0);
    let f = SampledFunction::from_fn(coarse, Domain::RealLineTruncated, |x| (-x * x).exp(), TailModel::zero(50.0));
    assert!(matches!(project_fourier(&f, c, FourierRoute::Sinc), Err(TransformError::Resolution { .. })));
    let h = half_bump(0.0, c, 1.0);
    assert!(matches!(project_fourier(&h, c, FourierRoute::Sinc), Err(TransformError::Domain(_))));
    let g = gaussian(c, 0.0, 1.0);
    assert!(matches!(project_hankel(&g, order(0.0), c, HankelRoute::Lommel), Err(TransformError::Domain(_))));
}

#[test]
fn hankel_transform_of_self_dual_gaussian() {
    // H^a [x^{a+1/2} e^{-x^2/2}] = same function
    for &a in &[0.0, 0.5, 2.0] {
        let grid = PanelGrid::half_line(12.0, 4.0);
        let f = SampledFunction::from_fn(
            grid,
            Domain::HalfLineTruncated,
            |x| x.powf(a + 0.5) * (-0.5 * x * x).exp(),
            TailModel::zero(12.0),
        );
        for &y in &[0.1f64, 0.8, 1.9, 4.0] {
            let want = y.powf(a + 0.5) * (-0.5 * y * y).exp();
            let got = hankel_transform_at(&f, order(a), y).unwrap();
            assert!((got - want).abs() < 1e-12, "a={a} y={y}: {got} vs {want}");
        }
    }
}

#[test]
fn hankel_transform_of_bessel_elements_is_their_image() {
    let c = bw(4.0);
    for &a in &[0.0, 0.5] {
        for n in 0..4 {
            let j = sample_spherical_j_hankel(n, order(a), c, &default_half_grid(c));
            for &x in &[0.3, 1.5, 3.1, 5.0] {
                let got = hankel_transform_at(&j, order(a), x).unwrap();
                let want = hankel_image_j(n, order(a), c, x);
                assert!((got - want).abs() < 1e-6, "a={a} n={n} x={x}: {got} vs {want}");
            }
        }
    }
}

#[test]
fn hankel_transform_is_an_involution_on_images() {
    // H (H tilde j_n) = tilde j_n with H tilde j_n supported on [0, c]
    let (a, c) = (0.5, 3.0);
    let grid = PanelGrid::from_breaks((0..=24).map(|i| c * i as f64 / 24.0).collect());
    for n in 0..3 {
        let img = SampledFunction::from_fn(
            grid.clone(),
            Domain::HalfLineTruncated,
            |x| hankel_image_j(n, order(a), bw(c), x),
            TailModel::zero(c),
        );
        for &x in &[0.2, 1.0, 2.7, 8.0] {
            let got = hankel_transform_at(&img, order(a), x).unwrap();
            let want = spherical_j_hankel(n, order(a), bw(c), x).unwrap();
            assert!((got - want).abs() < 1e-10, "n={n} x={x}: {got} vs {want}");
        }
    }
}

#[test]
fn lommel_kernel_matches_direct_quadrature() {
    let c = 3.0;
    for &a in &[0.0, 0.5, 1.5] {
        for &(x, y) in &[(0.4, 1.7), (2.0, 2.0), (1.3, 1.3 + 1e-8), (0.05, 6.0), (3.3, 0.9)] {
            let want = adaptive(
                &|t| {
                    if t == 0.0 {
                        return 0.0;
                    }
                    (x * t).sqrt() * bessel_j(a, x * t).unwrap() * (y * t).sqrt() * bessel_j(a, y * t).unwrap()
                },
                0.0,
                c,
                1e-15,
            );
            let got = lommel_kernel(order(a), bw(c), x, y);
            assert!((got - want).abs() < 1e-11, "a={a} ({x}, {y}): {got} vs {want}");
            assert_eq!(got, lommel_kernel(order(a), bw(c), y, x));
        }
    }
}

#[test]
fn hankel_routes_reproduce_band_limited_input() {
    let c = bw(5.0);
    for &a in &[0.0, 0.5] {
        for n in [0, 2] {
            let j = sample_spherical_j_hankel(n, order(a), c, &default_half_grid(c));
            for route in [HankelRoute::Lommel, HankelRoute::WeightedHilbert, HankelRoute::Spectral] {
                let p = project_hankel(&j, order(a), c, route).unwrap();
                let err = worst_on(&p, p.grid.upper(), |x| spherical_j_hankel(n, order(a), c, x).unwrap());
                assert!(err < 1e-5, "a={a} n={n} {route:?}: {err:e}");
            }
        }
    }
}

#[test]
fn hankel_projection_is_idempotent_and_band_limited() {
    let c = bw(4.0);
    let a = order(1.0);
    let f = half_bump(1.0, c, 0.5);
    let pf = project_hankel(&f, a, c, HankelRoute::Lommel).unwrap();
    let ppf = project_hankel(&pf, a, c, HankelRoute::Lommel).unwrap();
    let err = worst_on(&ppf, ppf.grid.upper(), |x| pf.eval(x));
    assert!(err < 2e-4, "idempotence {err:e}");
    let mass = hankel_out_of_band(&pf, a, c).unwrap();
    assert!(mass.abs() < 1e-5, "out-of-band mass {mass:e}");
    let g = half_bump(1.0, c, 1.7);
    let pg = project_hankel(&g, a, c, HankelRoute::Lommel).unwrap();
    let (lhs, rhs) = (pf.inner(&g).unwrap(), f.inner(&pg).unwrap());
    assert!((lhs - rhs).abs() < 1e-6, "{lhs} vs {rhs}");
}

#[test]
fn hankel_projection_is_bounded_by_band_l1_norm() {
    // |P f(x)| <= sup_s |sqrt(s) J_a(s)| int_0^c |H f|
    let (c, a) = (4.0, 0.5);
    let sup = (1..40000).map(|i| i as f64 * 1e-3).map(|s| (s.sqrt() * bessel_j(a, s).unwrap()).abs()).fold(0.0, f64::max);
    let (ts, ws) = golub_welsch(80, 0.0, c);
    for width in [0.3, 1.0, 2.5] {
        let f = half_bump(a, bw(c), width);
        let l1: f64 = ts.iter().zip(&ws).map(|(t, w)| w * hankel_transform_at(&f, order(a), *t).unwrap().abs()).sum();
        let pf = project_hankel(&f, order(a), bw(c), HankelRoute::Lommel).unwrap();
        assert!(pf.max_abs() <= sup * l1 + 1e-6, "width={width}");
    }
}

#[test]
fn weighted_hilbert_probe_stays_bounded() {
    // H on L^2((0, L), x^{-1/2}): the weight is A_2, so dilations cannot blow up
    let grid = PanelGrid::from_breaks((0..=30).map(|i| 0.5f64.powi(30 - i) * 40.0).chain([80.0]).collect());
    let mut ratios = Vec::new();
    for s in [0.25, 0.5, 1.0, 2.0, 4.0] {
        let f = SampledFunction::from_fn(grid.clone(), Domain::Interval, |x| (-(x / s - 2.0).powi(2)).exp(), TailModel::zero(80.0));
        let h = HilbertTransform::new(&f).unwrap();
        let hv: Vec<f64> = (0..grid.len()).map(|i| h.at_node(i).unwrap()).collect();
        let hf = SampledFunction::from_values(grid.clone(), Domain::Interval, hv, TailModel::zero(80.0));
        ratios.push(hf.weighted_lp_norm(2.0, -0.5).value / f.weighted_lp_norm(2.0, -0.5).value);
    }
    let (lo, hi) = ratios.iter().fold((f64::INFINITY, 0.0f64), |(a, b), r| (a.min(*r), b.max(*r)));
    assert!(hi < 2.0 && hi / lo < 1.5, "{ratios:?}");
}

#[test]
fn muckenhoupt_power_weights_have_exact_brackets() {
    // sup over intervals of [x^b]_p is attained on [0, L]:
    // 1/(1+b) * (1/(1 - b/(p-1)))^{p-1}
    for &(beta, p) in &[(-0.5, 2.0), (0.0, 3.0), (0.5, 2.0), (-0.3, 1.5)] {
        let r = muckenhoupt_estimate(&WeightSpec::Power { beta }, p, (0.0, 1.0), 10).unwrap();
        let want = 1.0 / (1.0 + beta) * (1.0 / (1.0 - beta / (p - 1.0))).powf(p - 1.0);
        for l in &r.levels {
            assert!((l.level_sup - want).abs() < 1e-12 * want, "beta={beta} p={p} depth {}", l.depth);
        }
        assert!(!r.diverging);
    }
}

#[test]
fn muckenhoupt_endpoints_diverge() {
    for &(beta, p) in &[(-1.0, 2.0), (1.0, 2.0), (2.0, 3.0)] {
        let r = muckenhoupt_estimate(&WeightSpec::Power { beta }, p, (0.0, 1.0), 8).unwrap();
        assert!(r.diverging && r.estimate().is_infinite(), "beta={beta} p={p}");
    }
    let away = muckenhoupt_estimate(&WeightSpec::Power { beta: -1.0 }, 2.0, (1.0, 2.0), 8).unwrap();
    assert!(away.estimate().is_finite());
    assert!(matches!(
        muckenhoupt_estimate(&WeightSpec::Power { beta: 0.0 }, 1.0, (0.0, 1.0), 3),
        Err(TransformError::Exponent(_))
    ));
}

#[test]
fn muckenhoupt_tabulated_weights() {
    let flat = WeightSpec::Tabulated { breaks: vec![0.0, 0.3, 1.0], values: vec![2.0, 2.0] };
    let r = muckenhoupt_estimate(&flat, 2.0, (0.0, 1.0), 6).unwrap();
    assert!((r.estimate() - 1.0).abs() < 1e-14);
    // two levels meeting at the midpoint: the worst interval straddles it evenly
    let step = WeightSpec::Tabulated { breaks: vec![0.0, 0.5, 1.0], values: vec![1.0, 4.0] };
    let r = muckenhoupt_estimate(&step, 2.0, (0.0, 1.0), 6).unwrap();
    assert!((r.estimate() - 2.5 * 0.625).abs() < 1e-14, "{}", r.estimate());
    let bad = WeightSpec::Tabulated { breaks: vec![0.0, 1.0], values: vec![-1.0] };
    assert!(muckenhoupt_estimate(&bad, 2.0, (0.0, 1.0), 2).is_err());
}

#[test]
fn norm_scan_is_isometric_on_the_band() {
    let op = Projector::Fourier { c: bw(5.0) };
    let family: Vec<TestFunction> = (0..5).map(|n| TestFunction::bessel(&op, n)).collect();
    let r = operator_norm_scan(&op, 2.0, 2.0, &family).unwrap();
    for row in &r.rows {
        assert!((row.ratio - 1.0).abs() < 1e-4, "{}: {}", row.label, row.ratio);
    }
    assert!(r.to_csv().starts_with("member,label,p,q"));
}

#[test]
fn norm_scan_on_a_dilation_family_is_bounded() {
    let op = Projector::Hankel { alpha: order(1.0), c: bw(5.0) };
    let family = TestFunction::standard_family(&op, 12);
    let r = operator_norm_scan(&op, 1.5, 2.0, &family).unwrap();
    assert!(r.max_ratio().is_finite() && r.max_ratio() < 10.0, "{}", r.max_ratio());
    for w in r.rows.windows(2) {
        assert!(w[1].running_max >= w[0].running_max);
    }
    assert!(matches!(operator_norm_scan(&op, 2.0, 1.5, &family), Err(TransformError::Exponent(_))));
}

#[test]
fn damped_oracle_sanity() {
    // the quadrature oracle itself: int_0^inf sin(x)/x dx = pi/2
    let v = adaptive_pieces(&|x| if x == 0.0 { 1.0 } else { x.sin() / x * (-1e-4 * x * x).exp() }, 0.0, 600.0, 600, 1e-12);
    assert!((v - PI / 2.0).abs() < 1e-2);
}
