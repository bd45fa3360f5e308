use super::sampled::{default_radius, Domain, PanelGrid, SampledFunction};
use super::Bandwidth;
use crate::specfun::{bessel_j_sequence, Order, SpecFunError};
use crate::tail::{bessel_over_sqrt_tail, TailModel, Wave};
use std::f64::consts::PI;

fn parity(n: usize) -> f64 {
    if n % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

/// `j_{n,c}(x) = sqrt((2n+1)/2) J_{n+1/2}(c x) / sqrt(x)`, extended to
/// `x < 0` by `(-1)^n`.
pub fn spherical_j(n: usize, c: Bandwidth, x: f64) -> f64 {
    spherical_j_all(n, c, x)[n]
}

/// `j_{0,c}(x), ..., j_{kmax,c}(x)`.
pub fn spherical_j_all(kmax: usize, c: Bandwidth, x: f64) -> Vec<f64> {
    let c = c.value();
    let ax = x.abs();
    let mut out = if ax == 0.0 {
        let mut v = vec![0.0; kmax + 1];
        v[0] = (c / PI).sqrt();
        v
    } else {
        let j = bessel_j_sequence(0.5, kmax + 1, c * ax).expect("half-integer orders at x > 0");
        let s = 1.0 / ax.sqrt();
        j.iter()
            .enumerate()
            .map(|(k, v)| ((2 * k + 1) as f64 / 2.0).sqrt() * v * s)
            .collect()
    };
    if x < 0.0 {
        for (k, v) in out.iter_mut().enumerate() {
            *v *= parity(k);
        }
    }
    out
}

/// `tilde j_{n,alpha,c}(x) = sqrt(2(2n+alpha+1)) J_{2n+alpha+1}(c x) / sqrt(x)`.
pub fn spherical_j_hankel(n: usize, alpha: Order, c: Bandwidth, x: f64) -> Result<f64, SpecFunError> {
    if x <= 0.0 {
        return Err(SpecFunError::Domain("the Hankel-side basis lives on x > 0"));
    }
    Ok(spherical_j_hankel_all(n, alpha, c, x)[n])
}

/// `tilde j_0(x), ..., tilde j_{kmax}(x)` for `x >= 0` (zero at the origin).
pub fn spherical_j_hankel_all(kmax: usize, alpha: Order, c: Bandwidth, x: f64) -> Vec<f64> {
    let a = alpha.value();
    if x <= 0.0 {
        return vec![0.0; kmax + 1];
    }
    let j = bessel_j_sequence(a + 1.0, 2 * kmax + 1, c.value() * x).expect("positive order, x > 0");
    let s = 1.0 / x.sqrt();
    (0..=kmax)
        .map(|k| (2.0 * (2 * k) as f64 + 2.0 * a + 2.0).sqrt() * j[2 * k] * s)
        .collect()
}

fn scaled(waves: Vec<Wave>, s: f64) -> Vec<Wave> {
    waves.into_iter().map(|w| Wave { amp: w.amp * s, ..w }).collect()
}

/// Tail of `j_{n,c}` beyond `radius`.
pub fn spherical_j_tail(n: usize, c: Bandwidth, radius: f64) -> TailModel {
    let norm = ((2 * n + 1) as f64 / 2.0).sqrt();
    let right = scaled(bessel_over_sqrt_tail(n as f64 + 0.5, c.value(), radius), norm);
    let left = scaled(right.clone(), parity(n));
    TailModel { start: radius, right, left }
}

/// Tail of `tilde j_{n,alpha,c}` beyond `radius`.
pub fn spherical_j_hankel_tail(n: usize, alpha: Order, c: Bandwidth, radius: f64) -> TailModel {
    let nu = 2.0 * n as f64 + alpha.value() + 1.0;
    let right = scaled(bessel_over_sqrt_tail(nu, c.value(), radius), (2.0 * nu).sqrt());
    TailModel { start: radius, right, left: Vec::new() }
}

/// Default real-line grid for functions of bandwidth `c`.
pub fn default_real_grid(c: Bandwidth) -> PanelGrid {
    PanelGrid::real_line(default_radius(c.value()), c.value())
}

/// Default half-line grid for functions of Hankel bandwidth `c`.
pub fn default_half_grid(c: Bandwidth) -> PanelGrid {
    PanelGrid::half_line(default_radius(c.value()), c.value())
}

/// `j_{n,c}` sampled on `grid` with its exact tail.
pub fn sample_spherical_j(n: usize, c: Bandwidth, grid: &PanelGrid) -> SampledFunction {
    let tail = spherical_j_tail(n, c, grid.upper());
    SampledFunction::from_fn(grid.clone(), Domain::RealLineTruncated, |x| spherical_j(n, c, x), tail)
}

/// `j_{0,c}, ..., j_{kmax,c}` sampled on a common grid.
pub fn sample_spherical_j_all(kmax: usize, c: Bandwidth, grid: &PanelGrid) -> Vec<SampledFunction> {
    let cols: Vec<Vec<f64>> = grid.nodes.iter().map(|&x| spherical_j_all(kmax, c, x)).collect();
    (0..=kmax)
        .map(|k| {
            SampledFunction::from_values(
                grid.clone(),
                Domain::RealLineTruncated,
                cols.iter().map(|row| row[k]).collect(),
                spherical_j_tail(k, c, grid.upper()),
            )
        })
        .collect()
}

/// `tilde j_{n,alpha,c}` sampled on a half-line grid with its exact tail.
pub fn sample_spherical_j_hankel(n: usize, alpha: Order, c: Bandwidth, grid: &PanelGrid) -> SampledFunction {
    sample_spherical_j_hankel_all(n, alpha, c, grid).pop().unwrap()
}

pub fn sample_spherical_j_hankel_all(
    kmax: usize,
    alpha: Order,
    c: Bandwidth,
    grid: &PanelGrid,
) -> Vec<SampledFunction> {
    let cols: Vec<Vec<f64>> = grid.nodes.iter().map(|&x| spherical_j_hankel_all(kmax, alpha, c, x)).collect();
    (0..=kmax)
        .map(|k| {
            SampledFunction::from_values(
                grid.clone(),
                Domain::HalfLineTruncated,
                cols.iter().map(|row| row[k]).collect(),
                spherical_j_hankel_tail(k, alpha, c, grid.upper()),
            )
        })
        .collect()
}
