use super::TransformError;
use crate::bessel_bases::{Domain, SampledFunction, PER_PANEL};
use crate::tail::CauchyMoments;
use std::f64::consts::PI;

/// Largest `|x| / R` at which the tail contribution is evaluated.
const REACH: f64 = 0.75;

/// `(1/pi) PV int f(t) / (x - t) dt` of a sampled function, with the tail
/// beyond the grid integrated through its inverse-power moments.
///
/// The singular part is removed by subtracting `f(x)` and integrating
/// `1/(x - t)` over the grid interval in closed form; a node coinciding with
/// `x` contributes the limit `-f'(x)` of the difference quotient.
pub struct HilbertTransform<'a> {
    f: &'a SampledFunction,
    moments: Option<CauchyMoments>,
}

impl<'a> HilbertTransform<'a> {
    pub fn new(f: &'a SampledFunction) -> Result<Self, TransformError> {
        let moments = if f.tail.is_zero() { None } else { Some(CauchyMoments::new(&f.tail, REACH)?) };
        Ok(HilbertTransform { f, moments })
    }

    fn bounds(&self) -> (f64, f64) {
        (self.f.grid.lower(), self.f.grid.upper())
    }

    fn check(&self, x: f64) -> Result<(), TransformError> {
        let (a, b) = self.bounds();
        if !(x > a && x < b) {
            return Err(TransformError::Outside(x));
        }
        if self.moments.is_some() && x.abs() > REACH * self.f.tail.start {
            return Err(TransformError::Outside(x));
        }
        if self.f.domain == Domain::HalfLineTruncated && x <= 0.0 {
            return Err(TransformError::Outside(x));
        }
        Ok(())
    }

    /// Transform at node `i` of the underlying grid.
    pub fn at_node(&self, i: usize) -> Result<f64, TransformError> {
        let x = self.f.grid.nodes[i];
        self.check(x)?;
        let g = &self.f.values;
        let gx = g[i];
        let mut acc = 0.0;
        for (j, (t, w)) in self.f.grid.nodes.iter().zip(&self.f.grid.weights).enumerate() {
            if j != i {
                acc += w * (g[j] - gx) / (x - t);
            }
        }
        acc -= self.f.grid.weights[i] * self.f.grid.derivative_at_node(g, i);
        Ok(self.finish(acc, x, gx))
    }

    /// Transform at an arbitrary interior point.
    pub fn at(&self, x: f64) -> Result<f64, TransformError> {
        self.check(x)?;
        let grid = &self.f.grid;
        let p = grid.panel_of(x).unwrap();
        let h = grid.breaks[p + 1] - grid.breaks[p];
        let near = (p * PER_PANEL..(p + 1) * PER_PANEL).find(|&j| (grid.nodes[j] - x).abs() < 1e-6 * h);
        let g = &self.f.values;
        let gx = match near {
            Some(j) => g[j],
            None => grid.interpolate(g, x),
        };
        let mut acc = 0.0;
        for (j, (t, w)) in grid.nodes.iter().zip(&grid.weights).enumerate() {
            if Some(j) == near {
                acc -= w * grid.derivative_at_node(g, j);
            } else {
                acc += w * (g[j] - gx) / (x - t);
            }
        }
        Ok(self.finish(acc, x, gx))
    }

    fn finish(&self, core: f64, x: f64, gx: f64) -> f64 {
        let (a, b) = self.bounds();
        let mut acc = core + gx * ((x - a) / (b - x)).ln();
        if let Some(m) = &self.moments {
            acc += m.at(x);
        }
        acc / PI
    }
}

/// `H f(x)` for a single point.
pub fn hilbert_transform(f: &SampledFunction, x: f64) -> Result<f64, TransformError> {
    HilbertTransform::new(f)?.at(x)
}
