use super::hankel::{check_input, transform_at};
use super::TransformError;
use crate::bessel_bases::{Bandwidth, Domain, PanelGrid, SampledFunction};
use crate::specfun::{FixedOrderJ, Order};
use num_complex::Complex64;
use rayon::prelude::*;
use std::f64::consts::PI;

/// Quadrature grid on `(0, c]` graded towards zero whose panels resolve the
/// kernel `sqrt(t x) J_alpha(t x)` for `x <= x_max`.
pub fn spectral_grid(c: f64, x_max: f64) -> PanelGrid {
    let width = (c / 8.0).min(4.0 * PI / x_max.max(1e-12));
    let n = (c / width).ceil() as usize;
    let first = c / n as f64;
    let mut breaks = vec![0.0];
    for k in (1..=30).rev() {
        breaks.push(first * 0.5f64.powi(k));
    }
    for i in 1..=n {
        breaks.push(c * i as f64 / n as f64);
    }
    PanelGrid::from_breaks(breaks)
}

/// Symmetric grid on `[-c, c]` with a break at zero.
fn band_grid(c: f64, x_max: f64) -> PanelGrid {
    let width = (c / 8.0).min(4.0 * PI / x_max.max(1e-12));
    let n = (c / width).ceil() as usize;
    PanelGrid::from_breaks((0..=2 * n).map(|i| c * (i as f64 / n as f64 - 1.0)).collect())
}

#[derive(Debug, Clone)]
enum Image {
    Fourier(Vec<Complex64>),
    Hankel { j: FixedOrderJ, values: Vec<f64> },
}

/// `P_c f` or `P_c^alpha f` evaluated from the frequency side: the transform
/// of `f` is tabulated once on the band and integrated back on demand.
#[derive(Debug, Clone)]
pub struct SpectralProjector {
    band: PanelGrid,
    image: Image,
    x_max: f64,
}

impl SpectralProjector {
    /// Fourier band `[-c, c]`, accurate for `|x| <= x_max`.
    pub fn fourier(f: &SampledFunction, c: Bandwidth, x_max: f64) -> Result<Self, TransformError> {
        if f.domain == Domain::HalfLineTruncated {
            return Err(TransformError::Domain("P_c acts on real-line functions"));
        }
        let band = band_grid(c.value(), x_max);
        let image = band
            .nodes
            .par_iter()
            .map(|&xi| f.fourier(xi))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(SpectralProjector { band, image: Image::Fourier(image), x_max })
    }

    /// Hankel band `[0, c]`, accurate for `0 < x <= x_max`.
    pub fn hankel(f: &SampledFunction, alpha: Order, c: Bandwidth, x_max: f64) -> Result<Self, TransformError> {
        check_input(f)?;
        let band = spectral_grid(c.value(), x_max);
        let j = FixedOrderJ::new(alpha);
        let values = band
            .nodes
            .par_iter()
            .map(|&t| transform_at(f, &j, t))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(SpectralProjector { band, image: Image::Hankel { j, values }, x_max })
    }

    /// Largest `|x|` the band quadrature resolves.
    pub fn reach(&self) -> f64 {
        self.x_max
    }

    pub fn at(&self, x: f64) -> f64 {
        let b = &self.band;
        match &self.image {
            Image::Fourier(img) => {
                let mut acc = 0.0;
                for ((xi, w), v) in b.nodes.iter().zip(&b.weights).zip(img) {
                    acc += w * (v * Complex64::from_polar(1.0, xi * x)).re;
                }
                acc / (2.0 * PI)
            }
            Image::Hankel { j, values } => {
                if x <= 0.0 {
                    return 0.0;
                }
                let mut acc = 0.0;
                for ((t, w), v) in b.nodes.iter().zip(&b.weights).zip(values) {
                    acc += w * v * (t * x).sqrt() * j.eval(t * x);
                }
                acc
            }
        }
    }

    pub fn at_all(&self, xs: &[f64]) -> Vec<f64> {
        xs.par_iter().map(|&x| self.at(x)).collect()
    }

    /// `int_band |image|^2`, normalised so that it equals `||P f||_2^2`.
    pub fn band_energy(&self) -> f64 {
        let w = &self.band.weights;
        match &self.image {
            Image::Fourier(img) => w.iter().zip(img).map(|(w, v)| w * v.norm_sqr()).sum::<f64>() / (2.0 * PI),
            Image::Hankel { values, .. } => w.iter().zip(values).map(|(w, v)| w * v * v).sum(),
        }
    }
}
