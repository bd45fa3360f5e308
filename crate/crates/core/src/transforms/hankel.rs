use super::TransformError;
use crate::bessel_bases::{Domain, PanelGrid, SampledFunction};
use crate::quadrature::QuadratureRule;
use crate::specfun::{bessel_j, rgamma, FixedOrderJ, Order};
use crate::tail::{eval_waves, hankel_kernel_tail, integrate_waves, mul_waves, TailModel, Wave};
use num_complex::Complex64;
use rayon::prelude::*;
use std::f64::consts::PI;

/// Above this `x R` the kernel tail is expanded asymptotically.
const ASYMPTOTIC_Z: f64 = 20.0;
/// Below this `x R` the tail is integrated by parts with series derivatives.
const SERIES_Z: f64 = 8.0;
/// Relative size of the transform on the last output panel that is accepted.
const OUTPUT_TAIL_LIMIT: f64 = 1e-6;

/// `H^alpha f` on an output grid.
#[derive(Debug, Clone, PartialEq)]
pub struct HankelTransform {
    pub function: SampledFunction,
    /// Largest `|H f|` on the last output panel relative to `max |H f|`.
    pub tail_estimate: f64,
}

/// `int_r^inf g(y) sqrt(x y) J_alpha(x y) dy` for the tail waves `g`.
pub fn kernel_tail_integral(waves: &[Wave], r: f64, alpha: f64, x: f64) -> Result<f64, TransformError> {
    if waves.is_empty() {
        return Ok(0.0);
    }
    let z = x * r;
    if z >= ASYMPTOTIC_Z {
        let k = hankel_kernel_tail(alpha, x, r);
        return Ok(integrate_waves(&mul_waves(waves, &k), r)?);
    }
    if z >= SERIES_Z {
        // direct quadrature until the asymptotic form is accurate
        let r2 = ASYMPTOTIC_Z / x;
        let omega = waves.iter().map(|w| w.freq).fold(0.0, f64::max) + x;
        let rule = QuadratureRule::oscillatory(r, r2, omega.max(1.0), 16);
        let near = rule.integrate(|y| {
            eval_waves(waves, r, y) * (x * y).sqrt() * bessel_j(alpha, x * y).expect("x y > 0")
        });
        let moved: Vec<Wave> = waves
            .iter()
            .map(|w| Wave { amp: w.amp * (r / r2).powi(w.power), ..*w })
            .collect();
        let k = hankel_kernel_tail(alpha, x, r2);
        return Ok(near + integrate_waves(&mul_waves(&moved, &k), r2)?);
    }
    by_parts(waves, r, alpha, x)
}

/// Integration by parts against `e^{i nu y}`; derivatives of the slowly varying
/// factor `(r/y)^p sqrt(x y) J_alpha(x y)` come from its power series.
fn by_parts(waves: &[Wave], r: f64, alpha: f64, x: f64) -> Result<f64, TransformError> {
    let z = x * r;
    let mut series = Vec::new();
    let mut t = z.powf(alpha + 0.5) * 0.5f64.powf(alpha) * rgamma(alpha + 1.0);
    for m in 0..80 {
        series.push(t);
        t *= -(0.25 * z * z) / ((m + 1) as f64 * (m as f64 + alpha + 1.0));
        if t.abs() < 1e-18 * series[0].abs() {
            break;
        }
    }
    let mut acc = 0.0;
    for w in waves {
        let scale = x.max((w.power as f64 + 2.0) / r);
        if w.freq == 0.0 || scale > 0.25 * w.freq {
            return Err(TransformError::Unresolved(x));
        }
        let i_nu = Complex64::new(0.0, w.freq);
        let mut falling = vec![1.0; series.len()];
        let mut denom = i_nu;
        let mut r_pow = 1.0;
        let mut sum = Complex64::new(0.0, 0.0);
        let mut prev = (f64::INFINITY, f64::INFINITY);
        let mut converged = false;
        for k in 0..60 {
            let hk: f64 = series.iter().zip(&falling).map(|(a, b)| a * b).sum::<f64>() * r_pow;
            let sign = if k % 2 == 0 { -1.0 } else { 1.0 };
            let term = sign * hk / denom;
            let size = term.norm();
            // one small term may be an accidental cancellation, so growth is
            // measured against the larger of the last two
            if size > prev.0.max(prev.1) {
                converged = prev.0.min(prev.1) <= 1e-12 * sum.norm();
                break;
            }
            sum += term;
            if size <= 1e-17 * sum.norm() {
                converged = true;
                break;
            }
            prev = (prev.1, size);
            for (m, f) in falling.iter_mut().enumerate() {
                let e = 2.0 * m as f64 + alpha + 0.5 - w.power as f64;
                *f *= e - k as f64;
            }
            r_pow /= r;
            denom *= i_nu;
        }
        if !converged {
            return Err(TransformError::Unresolved(x));
        }
        acc += (w.amp * Complex64::from_polar(1.0, w.freq * r) * sum).re;
    }
    Ok(acc)
}

pub(crate) fn check_input(f: &SampledFunction) -> Result<(), TransformError> {
    match f.domain {
        Domain::RealLineTruncated => Err(TransformError::Domain("the Hankel transform acts on (0, inf)")),
        Domain::Interval if f.grid.lower() < 0.0 => {
            Err(TransformError::Domain("the Hankel transform acts on (0, inf)"))
        }
        _ => Ok(()),
    }
}

fn tail_of(f: &SampledFunction) -> Option<&TailModel> {
    match f.domain {
        Domain::HalfLineTruncated if !f.tail.is_zero() => Some(&f.tail),
        _ => None,
    }
}

/// `H^alpha f(x) = int_0^inf f(y) sqrt(x y) J_alpha(x y) dy`, `x > 0`.
pub fn hankel_transform_at(f: &SampledFunction, alpha: Order, x: f64) -> Result<f64, TransformError> {
    check_input(f)?;
    transform_at(f, &FixedOrderJ::new(alpha), x)
}

/// As [`hankel_transform_at`] with the kernel order fixed in `j`; the input
/// domain is assumed checked.
pub(crate) fn transform_at(f: &SampledFunction, j: &FixedOrderJ, x: f64) -> Result<f64, TransformError> {
    if !(x > 0.0) {
        return Err(TransformError::Outside(x));
    }
    let mut acc = 0.0;
    for ((y, w), v) in f.grid.nodes.iter().zip(&f.grid.weights).zip(&f.values) {
        acc += w * v * (x * y).sqrt() * j.eval(x * y);
    }
    if let Some(t) = tail_of(f) {
        acc += kernel_tail_integral(&t.right, t.start, j.alpha(), x)?;
    }
    Ok(acc)
}

/// Default output grid of `H^alpha f`: the largest radius the input panels
/// resolve with eight nodes per period of the kernel.
pub fn hankel_output_grid(f: &SampledFunction) -> PanelGrid {
    let widest = f.grid.breaks.windows(2).map(|p| p[1] - p[0]).fold(0.0, f64::max);
    let x = (4.0 * PI / widest).max(4.5);
    PanelGrid::half_line(x, x)
}

/// `H^alpha f` sampled on `out`; rejected when the result has not decayed by
/// the end of `out`.
pub fn hankel_transform(
    f: &SampledFunction,
    alpha: Order,
    out: &PanelGrid,
) -> Result<HankelTransform, TransformError> {
    check_input(f)?;
    if out.lower() < 0.0 {
        return Err(TransformError::Domain("output grid must lie in [0, inf)"));
    }
    let j = FixedOrderJ::new(alpha);
    let values: Vec<f64> = out
        .nodes
        .par_iter()
        .map(|&x| transform_at(f, &j, x))
        .collect::<Result<_, _>>()?;
    let peak = values.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let last = out.breaks[out.breaks.len() - 2];
    let edge = out
        .nodes
        .iter()
        .zip(&values)
        .filter(|(x, _)| **x >= last)
        .fold(0.0f64, |m, (_, v)| m.max(v.abs()));
    let tail_estimate = if peak > 0.0 { edge / peak } else { 0.0 };
    if tail_estimate > OUTPUT_TAIL_LIMIT {
        return Err(TransformError::TailBound { estimate: tail_estimate, limit: OUTPUT_TAIL_LIMIT });
    }
    let function = SampledFunction::from_values(
        out.clone(),
        Domain::HalfLineTruncated,
        values,
        TailModel::zero(out.upper()),
    );
    Ok(HankelTransform { function, tail_estimate })
}
