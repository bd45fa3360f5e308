//! Independent numerical oracles used only by the test suites.

#![allow(dead_code)]

/// Gauss-Kronrod 7/15 nodes and weights on [-1, 1].
const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_728_8,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

/// Returns (integral, error estimate, integral of |f|).
fn kronrod(f: &dyn Fn(f64) -> f64, a: f64, b: f64) -> (f64, f64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut k = WGK[7] * fc;
    let mut g = WG[3] * fc;
    let mut abs = WGK[7] * fc.abs();
    for j in 0..7 {
        let x = h * XGK[j];
        let (l, r) = (f(c - x), f(c + x));
        k += WGK[j] * (l + r);
        abs += WGK[j] * (l.abs() + r.abs());
        if j % 2 == 1 {
            g += WG[j / 2] * (l + r);
        }
    }
    (k * h, ((k - g) * h).abs(), abs * h.abs())
}

/// Adaptive Gauss-Kronrod integration to absolute tolerance `tol`.
pub fn adaptive(f: &dyn Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    fn rec(f: &dyn Fn(f64) -> f64, a: f64, b: f64, tol: f64, depth: u32) -> f64 {
        let (v, e, abs) = kronrod(f, a, b);
        // below ~50 ulp of the absolute integrand mass no refinement helps
        if e <= tol.max(50.0 * f64::EPSILON * abs) || depth > 22 || (b - a).abs() < 1e-14 {
            return v;
        }
        let m = 0.5 * (a + b);
        rec(f, a, m, 0.5 * tol, depth + 1) + rec(f, m, b, 0.5 * tol, depth + 1)
    }
    rec(f, a, b, tol, 0)
}

/// Adaptive integration over [a, b] split into `pieces` equal sub-intervals
/// first, which keeps oscillatory integrands well resolved.
pub fn adaptive_pieces(f: &dyn Fn(f64) -> f64, a: f64, b: f64, pieces: usize, tol: f64) -> f64 {
    let h = (b - a) / pieces as f64;
    (0..pieces)
        .map(|i| adaptive(f, a + i as f64 * h, a + (i + 1) as f64 * h, tol / pieces as f64))
        .sum()
}

/// Poisson integral representation of J_alpha, alpha > -1/2, after t = sin(theta).
///
/// Returns the value and its rounding floor: the prefactor times the absolute
/// integrand mass times a few ulp, which bounds the achievable accuracy.
pub fn poisson_bessel(alpha: f64, x: f64) -> (f64, f64) {
    use std::f64::consts::{FRAC_PI_2, PI};
    if x == 0.0 {
        return (if alpha == 0.0 { 1.0 } else { 0.0 }, 0.0);
    }
    let integrand = |th: f64| th.cos().powf(2.0 * alpha) * (x * th.sin()).cos();
    let lg = ln_gamma_ref(alpha + 0.5);
    // NIST DLMF 10.9.4 normalisation: 2 (x/2)^a / (sqrt(pi) Gamma(a + 1/2))
    let pref = 2.0 * (alpha * (0.5 * x).ln() - lg).exp() / PI.sqrt();
    let pieces = 8 + (x.abs() as usize) / 2;
    let integral = adaptive_pieces(&integrand, 0.0, FRAC_PI_2, pieces, 1e-14 / pref.max(1.0));
    let mass = adaptive_pieces(&|t| integrand(t).abs(), 0.0, FRAC_PI_2, pieces, 1e-6);
    (pref * integral, 100.0 * f64::EPSILON * pref * mass)
}

/// Lanczos log-Gamma, independent of the library implementation.
pub fn ln_gamma_ref(x: f64) -> f64 {
    const G: f64 = 7.0;
    const C: [f64; 9] = [
        0.999_999_999_999_809_9,
        676.520_368_121_885_1,
        -1_259.139_216_722_402_8,
        771.323_428_777_653_1,
        -176.615_029_162_140_6,
        12.507_343_278_686_905,
        -0.138_571_095_265_720_12,
        9.984_369_578_019_572e-6,
        1.505_632_735_149_311_6e-7,
    ];
    if x < 0.5 {
        let pi = std::f64::consts::PI;
        return (pi / (pi * x).sin()).ln() - ln_gamma_ref(1.0 - x);
    }
    let x = x - 1.0;
    let mut a = C[0];
    let t = x + G + 0.5;
    for (i, c) in C.iter().enumerate().skip(1) {
        a += c / (x + i as f64);
    }
    0.5 * (2.0 * std::f64::consts::PI).ln() + (x + 0.5) * t.ln() - t + a.ln()
}

/// Gauss-Legendre rule on [a, b] from the Golub-Welsch eigenproblem.
pub fn golub_welsch(n: usize, a: f64, b: f64) -> (Vec<f64>, Vec<f64>) {
    let jac = nalgebra::DMatrix::from_fn(n, n, |i, j| {
        if i + 1 == j || j + 1 == i {
            let k = i.max(j) as f64;
            k / (4.0 * k * k - 1.0).sqrt()
        } else {
            0.0
        }
    });
    let eig = nalgebra::SymmetricEigen::new(jac);
    let (m, h) = (0.5 * (a + b), 0.5 * (b - a));
    let mut pairs: Vec<(f64, f64)> = (0..n)
        .map(|i| (m + h * eig.eigenvalues[i], 2.0 * h * eig.eigenvectors[(0, i)].powi(2)))
        .collect();
    pairs.sort_by(|x, y| x.0.total_cmp(&y.0));
    pairs.into_iter().unzip()
}
