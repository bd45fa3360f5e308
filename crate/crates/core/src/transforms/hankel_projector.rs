use super::fit::{fit_tail, output_grid};
use super::spectral::SpectralProjector;
use super::{check_resolution, TransformError};
use crate::bessel_bases::{Bandwidth, Domain, PanelGrid, SampledFunction};
use crate::specfun::{bessel_j_sequence, Order};
use crate::tail::{bessel_over_sqrt_tail, integrate_waves_shifted, mul_waves};
use rayon::prelude::*;

/// How `P_c^alpha` is evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HankelRoute {
    /// Closed-form Lommel kernel.
    Lommel,
    /// `W_1 f - W_2 f`: Hilbert transforms in `u = y^2`.
    WeightedHilbert,
    /// `H^alpha (chi_[0,c] H^alpha f)`.
    Spectral,
}

/// Bessel data of one point for the Lommel kernel.
#[derive(Debug, Clone, Copy)]
struct Point {
    alpha: f64,
    c: f64,
    x: f64,
    /// `J_{alpha-1}(c x)`, `J_alpha(c x)` and their derivatives.
    jm: f64,
    ja: f64,
    dm: f64,
    da: f64,
}

impl Point {
    fn new(alpha: f64, c: f64, x: f64) -> Self {
        let s = bessel_j_sequence(alpha - 2.0, 4, c * x).expect("c x > 0");
        Point { alpha, c, x, jm: s[1], ja: s[2], dm: 0.5 * (s[0] - s[2]), da: 0.5 * (s[1] - s[3]) }
    }
}

/// Distance below which the diagonal limit of the kernel is used.
fn on_diagonal(x: f64, y: f64) -> bool {
    (x - y).abs() < 1e-6 * (1.0 + x)
}

/// `K(x, x)` by L'Hopital in `y`.
fn diagonal(p: &Point) -> f64 {
    let d = p.jm * p.ja + p.c * p.x * (p.dm * p.ja - p.jm * p.da);
    -0.5 * p.c * d
}

fn kernel(c: f64, p: &Point, q: &Point) -> f64 {
    let (x, y) = (p.x, q.x);
    if x == y {
        return diagonal(p);
    }
    if on_diagonal(x, y) {
        // symmetric in x, y: the midpoint diagonal is second-order accurate
        return diagonal(&Point::new(p.alpha, p.c, 0.5 * (x + y)));
    }
    c * (x * y).sqrt() * (y * q.jm * p.ja - x * p.jm * q.ja) / (x * x - y * y)
}

/// `sqrt(x y) int_0^c J_alpha(t x) J_alpha(t y) t dt` by Lommel's formula.
pub fn lommel_kernel(alpha: Order, c: Bandwidth, x: f64, y: f64) -> f64 {
    let (a, cv) = (alpha.value(), c.value());
    kernel(cv, &Point::new(a, cv, x), &Point::new(a, cv, y))
}

/// Tail moments `int_R^inf f(y) y^{-1/2} J_nu(c y) y^{-s} dy` for
/// `nu = alpha - 1` (even `s`) and `nu = alpha` (odd `s`).
struct Moments {
    minus: Vec<f64>,
    plus: Vec<f64>,
}

const MOMENT_TERMS: usize = 32;

impl Moments {
    fn new(f: &SampledFunction, alpha: f64, c: f64) -> Result<Option<Self>, TransformError> {
        if f.domain != Domain::HalfLineTruncated || f.tail.is_zero() {
            return Ok(None);
        }
        let r = f.tail.start;
        let pm = mul_waves(&f.tail.right, &bessel_over_sqrt_tail(alpha - 1.0, c, r));
        let pa = mul_waves(&f.tail.right, &bessel_over_sqrt_tail(alpha, c, r));
        let minus = (0..MOMENT_TERMS)
            .map(|m| integrate_waves_shifted(&pm, r, 2 * m as i32))
            .collect::<Result<_, _>>()?;
        let plus = (0..MOMENT_TERMS)
            .map(|m| integrate_waves_shifted(&pa, r, 2 * m as i32 + 1))
            .collect::<Result<_, _>>()?;
        Ok(Some(Moments { minus, plus }))
    }

    /// `(sum x^{2m} M_{alpha-1}(2m), sum x^{2m} M_alpha(2m+1))`.
    fn sums(&self, x: f64) -> (f64, f64) {
        let (mut a, mut b, mut p) = (0.0, 0.0, 1.0);
        for (u, v) in self.minus.iter().zip(&self.plus) {
            a += p * u;
            b += p * v;
            p *= x * x;
        }
        (a, b)
    }
}

/// Band-limiting projector `P_c^alpha = H^alpha chi_[0,c] H^alpha`.
pub fn project_hankel(
    f: &SampledFunction,
    alpha: Order,
    c: Bandwidth,
    route: HankelRoute,
) -> Result<SampledFunction, TransformError> {
    if f.domain != Domain::HalfLineTruncated {
        return Err(TransformError::Domain("P_c^alpha acts on half-line functions"));
    }
    let (a, cv) = (alpha.value(), c.value());
    check_resolution(&f.grid, cv)?;
    let domain = f.domain;
    let (out, offset) = output_grid(&f.grid, domain)?;
    let values = match route {
        HankelRoute::Lommel => lommel_route(f, a, cv, &out, offset)?,
        HankelRoute::WeightedHilbert => hilbert_route(f, a, cv, &out, offset)?,
        HankelRoute::Spectral => spectral_route(f, alpha, c, &out)?,
    };
    let tail = fit_tail(&out, &values, domain, cv);
    Ok(SampledFunction::from_values(out, domain, values, tail))
}

fn points(f: &SampledFunction, a: f64, c: f64) -> Vec<Point> {
    f.grid.nodes.par_iter().map(|&y| Point::new(a, c, y)).collect()
}

fn lommel_route(
    f: &SampledFunction,
    a: f64,
    c: f64,
    out: &PanelGrid,
    offset: usize,
) -> Result<Vec<f64>, TransformError> {
    let pts = points(f, a, c);
    let moments = Moments::new(f, a, c)?;
    Ok((0..out.len())
        .into_par_iter()
        .map(|i| {
            let p = &pts[offset + i];
            let mut acc = 0.0;
            for ((q, w), v) in pts.iter().zip(&f.grid.weights).zip(&f.values) {
                acc += w * v * kernel(c, p, q);
            }
            if let Some(m) = &moments {
                let (s1, s2) = m.sums(p.x);
                acc += -c * p.x.sqrt() * p.ja * s1 + c * p.x.powf(1.5) * p.jm * s2;
            }
            acc
        })
        .collect())
}

/// `int_0^inf h(y) 2y / (x^2 - y^2) dy` over the grid, i.e. `pi H[h(sqrt u)](x^2)`,
/// with the singularity subtracted at node `i`.
fn subtracted(f: &SampledFunction, h: &[f64], i: usize) -> f64 {
    let x = f.grid.nodes[i];
    let r = f.grid.upper();
    let hx = h[i];
    let mut acc = 0.0;
    for (j, (y, w)) in f.grid.nodes.iter().zip(&f.grid.weights).enumerate() {
        if j != i {
            acc += w * (h[j] - hx) * 2.0 * y / (x * x - y * y);
        }
    }
    acc -= f.grid.weights[i] * f.grid.derivative_at_node(h, i);
    acc + hx * (x * x / (r * r - x * x)).ln()
}

fn hilbert_route(
    f: &SampledFunction,
    a: f64,
    c: f64,
    out: &PanelGrid,
    offset: usize,
) -> Result<Vec<f64>, TransformError> {
    let pts = points(f, a, c);
    let h1: Vec<f64> = pts.iter().zip(&f.values).map(|(p, v)| v * p.x.sqrt() * p.jm).collect();
    let h2: Vec<f64> = pts.iter().zip(&f.values).map(|(p, v)| v * p.ja / p.x.sqrt()).collect();
    let moments = Moments::new(f, a, c)?;
    Ok((0..out.len())
        .into_par_iter()
        .map(|i| {
            let p = &pts[offset + i];
            let mut i1 = subtracted(f, &h1, offset + i);
            let mut i2 = subtracted(f, &h2, offset + i);
            if let Some(m) = &moments {
                let (s1, s2) = m.sums(p.x);
                i1 -= 2.0 * s1;
                i2 -= 2.0 * s2;
            }
            // W_1 f(x^2) - W_2 f(x^2)
            0.5 * c * p.x.sqrt() * p.ja * i1 - 0.5 * c * p.x.powf(1.5) * p.jm * i2
        })
        .collect())
}

fn spectral_route(
    f: &SampledFunction,
    alpha: Order,
    c: Bandwidth,
    out: &PanelGrid,
) -> Result<Vec<f64>, TransformError> {
    Ok(SpectralProjector::hankel(f, alpha, c, out.upper())?.at_all(&out.nodes))
}

/// Relative `L^2` mass of `g` beyond `c` in the Hankel domain:
/// `(||g||^2 - int_0^c |H^alpha g|^2) / ||g||^2`.
pub fn hankel_out_of_band(g: &SampledFunction, alpha: Order, c: Bandwidth) -> Result<f64, TransformError> {
    let total = g.inner(g)?;
    let inside = SpectralProjector::hankel(g, alpha, c, 1.0)?.band_energy();
    Ok((total - inside) / total)
}
