use super::fit::{fit_tail, output_grid};
use super::hilbert::HilbertTransform;
use super::{check_resolution, TransformError};
use crate::bessel_bases::{Bandwidth, Domain, PanelGrid, SampledFunction};
use crate::quadrature::QuadratureRule;
use crate::tail::CauchyMoments;
use rayon::prelude::*;
use std::f64::consts::PI;

/// How `P_c` is evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FourierRoute {
    /// Convolution with `sin(c x) / (pi x)`.
    Sinc,
    /// `sin(cx) H(f cos(c.))(x) - cos(cx) H(f sin(c.))(x)`.
    Hilbert,
}

/// Band-limiting projector `P_c` (angular band `[-c, c]`).
///
/// The result lives on the panels of the input grid within half its radius;
/// beyond that it carries a fitted tail oscillating at frequency `c`.
pub fn project_fourier(
    f: &SampledFunction,
    c: Bandwidth,
    route: FourierRoute,
) -> Result<SampledFunction, TransformError> {
    if f.domain != Domain::RealLineTruncated {
        return Err(TransformError::Domain("P_c acts on real-line functions"));
    }
    let cv = c.value();
    check_resolution(&f.grid, cv)?;
    let (out, offset) = output_grid(&f.grid, f.domain)?;
    let values = match route {
        FourierRoute::Sinc => sinc_route(f, cv, &out)?,
        FourierRoute::Hilbert => hilbert_route(f, cv, &out, offset)?,
    };
    let tail = fit_tail(&out, &values, Domain::RealLineTruncated, cv);
    Ok(SampledFunction::from_values(out, Domain::RealLineTruncated, values, tail))
}

/// Moments of `f cos(c.)` and `f sin(c.)` beyond the grid.
fn modulated_moments(f: &SampledFunction, c: f64) -> Result<Option<(CauchyMoments, CauchyMoments)>, TransformError> {
    if f.tail.is_zero() {
        return Ok(None);
    }
    let cos = CauchyMoments::new(&f.tail.modulate(c, false), 0.75)?;
    let sin = CauchyMoments::new(&f.tail.modulate(c, true), 0.75)?;
    Ok(Some((cos, sin)))
}

fn sinc_route(f: &SampledFunction, c: f64, out: &PanelGrid) -> Result<Vec<f64>, TransformError> {
    let moments = modulated_moments(f, c)?;
    let nodes = &f.grid.nodes;
    let weights = &f.grid.weights;
    Ok(out
        .nodes
        .par_iter()
        .map(|&x| {
            let mut acc = 0.0;
            for ((t, w), v) in nodes.iter().zip(weights).zip(&f.values) {
                let d = x - t;
                let k = if d == 0.0 { c } else { (c * d).sin() / d };
                acc += w * v * k;
            }
            if let Some((mc, ms)) = &moments {
                let (s, co) = (c * x).sin_cos();
                acc += s * mc.at(x) - co * ms.at(x);
            }
            acc / PI
        })
        .collect())
}

fn modulated(f: &SampledFunction, c: f64, sine: bool) -> SampledFunction {
    let values = f
        .grid
        .nodes
        .iter()
        .zip(&f.values)
        .map(|(x, v)| v * if sine { (c * x).sin() } else { (c * x).cos() })
        .collect();
    SampledFunction::from_values(f.grid.clone(), f.domain, values, f.tail.modulate(c, sine))
}

fn hilbert_route(
    f: &SampledFunction,
    c: f64,
    out: &PanelGrid,
    offset: usize,
) -> Result<Vec<f64>, TransformError> {
    let gc = modulated(f, c, false);
    let gs = modulated(f, c, true);
    let hc = HilbertTransform::new(&gc)?;
    let hs = HilbertTransform::new(&gs)?;
    (0..out.len())
        .into_par_iter()
        .map(|i| {
            let x = out.nodes[i];
            let (s, co) = (c * x).sin_cos();
            Ok(s * hc.at_node(offset + i)? - co * hs.at_node(offset + i)?)
        })
        .collect()
}

/// Relative `L^2` mass of `g` outside the band `[-c, c]`:
/// `(||g||^2 - (1/2pi) int_{-c}^{c} |g^|^2) / ||g||^2`.
pub fn fourier_out_of_band(g: &SampledFunction, c: Bandwidth) -> Result<f64, TransformError> {
    let cv = c.value();
    let total = g.inner(g)?;
    let rule = QuadratureRule::composite(-cv, cv, 16, 16);
    let mut inside = 0.0;
    for (xi, w) in rule.nodes.iter().zip(&rule.weights) {
        inside += w * g.fourier(*xi)?.norm_sqr();
    }
    Ok((total - inside / (2.0 * PI)) / total)
}
