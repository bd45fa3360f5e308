use super::{Bandwidth, Family};
use crate::quadrature::gauss_legendre_unit;
use crate::specfun::{bessel_j_sequence, gamma};
use rayon::prelude::*;
use std::f64::consts::PI;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LpError {
    #[error("p must lie in (1, inf), got {0}")]
    Exponent(f64),
    #[error("tail estimate {estimate:e} exceeds 1e-8 of the value {value:e}")]
    TailBound { value: f64, estimate: f64 },
}

/// `L^p` norm of `x^{-1/2} J_nu(c x)` with the uncertainty of its tail model.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LpReport {
    pub value: f64,
    pub tail_estimate: f64,
    /// Argument `c x` beyond which the tail is averaged analytically.
    pub cutoff: f64,
}

const NODES: usize = 16;
const MAX_CUTOFF: f64 = 1.0e6;

/// `|| x^{-1/2} J_{n+1/2}(c x) ||_{L^p(R)}` (Fourier family, parity-extended) or
/// `|| x^{-1/2} J_{2n+alpha+1}(c x) ||_{L^p(0, inf)}` (Hankel family).
pub fn lp_norm_bessel(n: usize, p: f64, family: Family, c: Bandwidth) -> Result<LpReport, LpError> {
    if !(p > 1.0 && p.is_finite()) {
        return Err(LpError::Exponent(p));
    }
    let (nu, sides) = match family {
        Family::Fourier => (n as f64 + 0.5, 2.0),
        Family::Hankel(a) => (2.0 * n as f64 + a.value() + 1.0, 1.0),
    };
    let scale = sides * c.value().powf(0.5 * p - 1.0);
    let mut cutoff = (40.0 * nu).max(2000.0);
    loop {
        let (integral, est) = unit_integral(nu, p, cutoff);
        let value = (scale * integral).powf(1.0 / p);
        // d(value)/d(integral) = value / (p integral)
        let estimate = value * est / (p * integral);
        if estimate <= 1e-8 * value || cutoff >= MAX_CUTOFF {
            let report = LpReport { value, tail_estimate: estimate, cutoff };
            if estimate > 1e-8 * value {
                return Err(LpError::TailBound { value, estimate });
            }
            return Ok(report);
        }
        cutoff *= 2.0;
    }
}

/// Predicted exponent `gamma` in `||x^{-1/2} J_{n+1/2}||_p ~ n^gamma`; `None`
/// at `p = 4`, where a logarithm enters.
pub fn predicted_exponent(p: f64) -> Option<f64> {
    if p < 4.0 {
        Some(-1.0 + 1.0 / p)
    } else if p > 4.0 {
        Some(-5.0 / 6.0 + 1.0 / (3.0 * p))
    } else {
        None
    }
}

/// Norms over a range of `n` with the least-squares slope of
/// `log norm` against `log n`.
#[derive(Debug, Clone, PartialEq)]
pub struct LpRate {
    pub p: f64,
    pub norms: Vec<(usize, f64)>,
    pub slope: f64,
    pub predicted: Option<f64>,
}

impl LpRate {
    /// Range of `norm n^{3/4} / log n`, the `p = 4` normalisation.
    pub fn log_band(&self) -> (f64, f64) {
        self.norms
            .iter()
            .map(|&(n, v)| v * (n as f64).powf(0.75) / (n as f64).ln())
            .fold((f64::INFINITY, 0.0), |(lo, hi), r| (lo.min(r), hi.max(r)))
    }
}

pub fn lp_rate(p: f64, family: Family, c: Bandwidth, ns: &[usize]) -> Result<LpRate, LpError> {
    let norms = ns
        .par_iter()
        .map(|&n| Ok((n, lp_norm_bessel(n, p, family, c)?.value)))
        .collect::<Result<Vec<_>, LpError>>()?;
    let pts: Vec<(f64, f64)> = norms.iter().map(|&(n, v)| ((n as f64).ln(), v.ln())).collect();
    let m = pts.len() as f64;
    let (mx, my) = pts.iter().fold((0.0, 0.0), |(a, b), (x, y)| (a + x / m, b + y / m));
    let (num, den) = pts.iter().fold((0.0, 0.0), |(a, b), (x, y)| (a + (x - mx) * (y - my), b + (x - mx).powi(2)));
    Ok(LpRate { p, norms, slope: num / den, predicted: predicted_exponent(p) })
}

fn bessel_and_derivative(nu: f64, z: f64) -> (f64, f64) {
    let s = bessel_j_sequence(nu - 1.0, 2, z).expect("z > 0");
    (s[1], s[0] - nu / z * s[1])
}

fn refine_zero(nu: f64, mut a: f64, mut b: f64) -> f64 {
    let fa = bessel_and_derivative(nu, a).0;
    let mut z = 0.5 * (a + b);
    for _ in 0..100 {
        let (f, d) = bessel_and_derivative(nu, z);
        if f == 0.0 {
            return z;
        }
        if (f > 0.0) == (fa > 0.0) {
            a = z;
        } else {
            b = z;
        }
        let newton = z - f / d;
        let next = if newton > a && newton < b { newton } else { 0.5 * (a + b) };
        if (next - z).abs() < 1e-15 * z {
            return next;
        }
        z = next;
    }
    z
}

/// Zeros of `J_nu` up to (at least) `limit`.
fn zeros_up_to(nu: f64, limit: f64) -> Vec<f64> {
    let mut zeros = Vec::new();
    // no zeros below nu; scan for the first two
    let step = 0.25;
    let mut z = nu.max(step);
    let mut f = bessel_and_derivative(nu, z).0;
    while zeros.len() < 2 {
        let z2 = z + step;
        let f2 = bessel_and_derivative(nu, z2).0;
        if (f > 0.0) != (f2 > 0.0) {
            zeros.push(refine_zero(nu, z, z2));
        }
        z = z2;
        f = f2;
    }
    // spacing decreases towards pi from above
    while *zeros.last().unwrap() < limit {
        let k = zeros.len();
        let last = zeros[k - 1];
        let gap = last - zeros[k - 2];
        let a = last + PI * (1.0 - 1e-12);
        let b = last + gap * (1.0 + 1e-12);
        zeros.push(refine_zero(nu, a, b));
    }
    zeros
}

/// `int_a^b z^{-p/2} |J_nu(z)|^p dz` on a panel whose endpoints may be zeros.
fn panel(nu: f64, p: f64, a: f64, b: f64, t: &[f64], w: &[f64]) -> f64 {
    let h = 0.5 * (b - a);
    let m = 0.5 * (b + a);
    let mut acc = 0.0;
    for (ti, wi) in t.iter().zip(w) {
        // cosine map clusters nodes at both ends
        let theta = 0.5 * PI * (ti + 1.0);
        let z = m - h * theta.cos();
        let jac = h * theta.sin() * 0.5 * PI;
        let j = bessel_j_sequence(nu, 1, z).expect("z > 0")[0];
        acc += wi * jac * z.powf(-0.5 * p) * j.abs().powf(p);
    }
    acc
}

fn mean_abs_cos_power(p: f64) -> f64 {
    gamma(0.5 * (p + 1.0)).unwrap() / (PI.sqrt() * gamma(0.5 * p + 1.0).unwrap())
}

/// `M_nu(z)^2 pi z / 2` from its asymptotic series.
fn modulus_series(nu: f64, z: f64) -> f64 {
    let mu = 4.0 * nu * nu;
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 1..60 {
        let kf = k as f64;
        let odd = 2.0 * kf - 1.0;
        term *= odd / (2.0 * kf) * (mu - odd * odd) / (4.0 * z * z);
        sum += term;
        if term.abs() < 1e-17 * sum {
            break;
        }
    }
    sum
}

/// Phase-averaged `int_z0^inf z^{-p/2} |J_nu|^p dz` starting at a zero `z0`.
fn averaged_tail(nu: f64, p: f64, z0: f64) -> f64 {
    let (t, w) = gauss_legendre_unit(40);
    // z = z0 / s, s = v^{1/(p-1)}
    let mut acc = 0.0;
    for (ti, wi) in t.iter().zip(&w) {
        let v = 0.5 * (ti + 1.0);
        let s = v.powf(1.0 / (p - 1.0));
        let val = if s == 0.0 { 1.0 } else { modulus_series(nu, z0 / s) };
        acc += 0.5 * wi * val.powf(0.5 * p);
    }
    mean_abs_cos_power(p) * (2.0 / PI).powf(0.5 * p) * z0.powf(1.0 - p) * acc / (p - 1.0)
}

/// Integral over `(0, inf)` and an estimate of the tail-model error.
fn unit_integral(nu: f64, p: f64, cutoff: f64) -> (f64, f64) {
    let (t, w) = gauss_legendre_unit(NODES);
    let zeros = zeros_up_to(nu, cutoff);
    let mut acc = 0.0;
    // before the first zero: unit-width panels, the last one ending at the zero
    let z1 = zeros[0];
    let panels = z1.ceil() as usize;
    for i in 0..panels {
        let a = z1 * i as f64 / panels as f64;
        let b = z1 * (i + 1) as f64 / panels as f64;
        acc += panel(nu, p, a, b, &t, &w);
    }
    let half = zeros.partition_point(|z| *z < 0.5 * zeros.last().unwrap());
    let mut second_half = 0.0;
    for (k, pair) in zeros.windows(2).enumerate() {
        let v = panel(nu, p, pair[0], pair[1], &t, &w);
        acc += v;
        if k >= half {
            second_half += v;
        }
    }
    let last = *zeros.last().unwrap();
    let tail = averaged_tail(nu, p, last);
    let coarse = averaged_tail(nu, p, zeros[half]);
    let est = (coarse - (second_half + tail)).abs();
    (acc + tail, est)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn l2_norm_matches_orthonormality() {
        let c = Bandwidth::new(3.0).unwrap();
        for n in [0usize, 4, 12] {
            let r = lp_norm_bessel(n, 2.0, Family::Fourier, c).unwrap();
            let expect = (2.0 / (2 * n + 1) as f64).sqrt();
            assert!((r.value - expect).abs() < 1e-9 * expect, "n={n}: {} vs {expect}", r.value);
        }
    }
}
