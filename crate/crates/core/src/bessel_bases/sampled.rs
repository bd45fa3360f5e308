use crate::quadrature::{gauss_legendre_unit, QuadratureRule};
use crate::tail::{TailError, TailModel};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;
use std::sync::OnceLock;

/// Nodes per Gauss panel used by every grid in the crate.
pub const PER_PANEL: usize = 16;

/// Half-width of the finely resolved region around the origin.
const FINE_RADIUS: f64 = 4.0;
const FINE_WIDTH: f64 = 0.25;
const COARSE_MAX_WIDTH: f64 = 2.0;
/// Number of geometric panels grading a half-line grid towards zero.
const GRADED_LEVELS: i32 = 40;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Domain {
    RealLineTruncated,
    HalfLineTruncated,
    Interval,
}

/// Composite Gauss-Legendre grid with `PER_PANEL` nodes on each panel.
#[derive(Debug, Clone, PartialEq)]
pub struct PanelGrid {
    pub breaks: Vec<f64>,
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

struct UnitPanel {
    nodes: Vec<f64>,
    weights: Vec<f64>,
    bary: Vec<f64>,
}

fn unit_panel() -> &'static UnitPanel {
    static CELL: OnceLock<UnitPanel> = OnceLock::new();
    CELL.get_or_init(|| {
        let (nodes, weights) = gauss_legendre_unit(PER_PANEL);
        let bary = nodes
            .iter()
            .zip(&weights)
            .enumerate()
            .map(|(j, (x, w))| {
                let s = if j % 2 == 0 { 1.0 } else { -1.0 };
                s * ((1.0 - x * x) * w).sqrt()
            })
            .collect();
        UnitPanel { nodes, weights, bary }
    })
}

impl PanelGrid {
    pub fn from_breaks(breaks: Vec<f64>) -> Self {
        assert!(breaks.len() >= 2, "a grid needs at least one panel");
        let u = unit_panel();
        let mut nodes = Vec::with_capacity((breaks.len() - 1) * PER_PANEL);
        let mut weights = Vec::with_capacity(nodes.capacity());
        for p in breaks.windows(2) {
            assert!(p[0] < p[1], "grid breakpoints must increase");
            let h = 0.5 * (p[1] - p[0]);
            let m = 0.5 * (p[1] + p[0]);
            for (t, w) in u.nodes.iter().zip(&u.weights) {
                nodes.push(m + h * t);
                weights.push(h * w);
            }
        }
        PanelGrid { breaks, nodes, weights }
    }

    /// Symmetric grid on `[-radius, radius]` resolving angular frequency `omega`.
    pub fn real_line(radius: f64, omega: f64) -> Self {
        let pos = positive_breaks(radius, omega, false);
        let mut breaks: Vec<f64> = pos.iter().rev().map(|x| -x).collect();
        breaks.pop();
        breaks.extend(pos);
        Self::from_breaks(breaks)
    }

    /// Grid on `(0, radius]`, geometrically graded towards the origin.
    pub fn half_line(radius: f64, omega: f64) -> Self {
        Self::from_breaks(positive_breaks(radius, omega, true))
    }

    /// `panels` equal panels on `[a, b]`.
    pub fn interval(a: f64, b: f64, panels: usize) -> Self {
        let panels = panels.max(1);
        Self::from_breaks((0..=panels).map(|i| a + (b - a) * i as f64 / panels as f64).collect())
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn lower(&self) -> f64 {
        self.breaks[0]
    }

    pub fn upper(&self) -> f64 {
        *self.breaks.last().unwrap()
    }

    pub fn panels(&self) -> usize {
        self.breaks.len() - 1
    }

    pub fn rule(&self) -> QuadratureRule {
        QuadratureRule {
            nodes: self.nodes.clone(),
            weights: self.weights.clone(),
            interval: (self.lower(), self.upper()),
            design_degree: 2 * PER_PANEL - 1,
        }
    }

    /// Panel index containing `x`, if any.
    pub fn panel_of(&self, x: f64) -> Option<usize> {
        if x < self.lower() || x > self.upper() {
            return None;
        }
        let i = self.breaks.partition_point(|b| *b <= x);
        Some(i.saturating_sub(1).min(self.panels() - 1))
    }

    /// Smallest number of nodes per period of `omega` over all panels.
    pub fn nodes_per_period(&self, omega: f64) -> f64 {
        let widest = self
            .breaks
            .windows(2)
            .map(|p| p[1] - p[0])
            .fold(0.0, f64::max);
        PER_PANEL as f64 * 2.0 * PI / (omega.abs() * widest).max(1e-300)
    }

    /// Barycentric interpolation of nodal `values` at `x` inside the grid.
    pub fn interpolate(&self, values: &[f64], x: f64) -> f64 {
        let p = self.panel_of(x).expect("interpolation point outside grid");
        let (lo, hi) = (self.breaks[p], self.breaks[p + 1]);
        let t = (2.0 * x - lo - hi) / (hi - lo);
        let u = unit_panel();
        let vals = &values[p * PER_PANEL..(p + 1) * PER_PANEL];
        let mut num = 0.0;
        let mut den = 0.0;
        for j in 0..PER_PANEL {
            let d = t - u.nodes[j];
            if d == 0.0 {
                return vals[j];
            }
            let q = u.bary[j] / d;
            num += q * vals[j];
            den += q;
        }
        num / den
    }

    /// Derivative of the panel interpolant at node `i`.
    pub fn derivative_at_node(&self, values: &[f64], i: usize) -> f64 {
        let p = i / PER_PANEL;
        let k = i % PER_PANEL;
        let h = 0.5 * (self.breaks[p + 1] - self.breaks[p]);
        let u = unit_panel();
        let vals = &values[p * PER_PANEL..(p + 1) * PER_PANEL];
        let mut acc = 0.0;
        for j in 0..PER_PANEL {
            if j != k {
                let d = (u.bary[j] / u.bary[k]) / (u.nodes[k] - u.nodes[j]);
                acc += d * (vals[j] - vals[k]);
            }
        }
        acc / h
    }
}

fn positive_breaks(radius: f64, omega: f64, graded: bool) -> Vec<f64> {
    assert!(radius > FINE_RADIUS, "grid radius must exceed {FINE_RADIUS}");
    let mut b = vec![0.0];
    if graded {
        for k in (1..=GRADED_LEVELS).rev() {
            b.push(FINE_WIDTH * 0.5f64.powi(k));
        }
    }
    let fine_w = FINE_WIDTH.min(PI / omega.max(1e-12));
    let n_fine = (FINE_RADIUS / fine_w).ceil() as usize;
    for i in 1..=n_fine {
        b.push(FINE_RADIUS * i as f64 / n_fine as f64);
    }
    let coarse_w = (2.0 * PI / omega.max(1e-12)).min(COARSE_MAX_WIDTH);
    let n_coarse = ((radius - FINE_RADIUS) / coarse_w).ceil() as usize;
    for i in 1..=n_coarse {
        b.push(FINE_RADIUS + (radius - FINE_RADIUS) * i as f64 / n_coarse as f64);
    }
    b
}

/// Default truncation radius for bandwidth `c`.
pub fn default_radius(c: f64) -> f64 {
    (400.0 / c).max(100.0)
}

/// Function sampled on a panel grid with an analytic tail beyond it.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledFunction {
    pub grid: PanelGrid,
    pub values: Vec<f64>,
    pub domain: Domain,
    pub tail: TailModel,
}

/// Quadrature value of an `L^p` norm with the part attributed to the tail.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LpNorm {
    pub value: f64,
    /// Bound on the neglected far-tail contribution to `value^p`.
    pub tail_estimate: f64,
}

impl SampledFunction {
    pub fn from_fn<F: Fn(f64) -> f64>(grid: PanelGrid, domain: Domain, f: F, tail: TailModel) -> Self {
        let values = grid.nodes.iter().map(|&x| f(x)).collect();
        Self::from_values(grid, domain, values, tail)
    }

    pub fn from_values(grid: PanelGrid, domain: Domain, values: Vec<f64>, tail: TailModel) -> Self {
        assert_eq!(grid.len(), values.len());
        let tail = match domain {
            Domain::Interval => TailModel::zero(grid.upper()),
            _ => tail,
        };
        if !tail.is_zero() {
            let r = match domain {
                Domain::RealLineTruncated => grid.upper().max(-grid.lower()),
                _ => grid.upper(),
            };
            assert!(
                (tail.start - r).abs() <= 1e-9 * r,
                "tail must start at the grid radius"
            );
        }
        SampledFunction { grid, values, domain, tail }
    }

    pub fn radius(&self) -> f64 {
        self.grid.upper()
    }

    /// Value anywhere: interpolant inside the grid, tail model outside.
    pub fn eval(&self, x: f64) -> f64 {
        if x >= self.grid.lower() && x <= self.grid.upper() {
            return self.grid.interpolate(&self.values, x);
        }
        match self.domain {
            Domain::Interval => 0.0,
            Domain::HalfLineTruncated if x < 0.0 => 0.0,
            _ if self.tail.is_zero() => 0.0,
            _ => self.tail.eval(x),
        }
    }

    pub fn same_grid(&self, other: &SampledFunction) -> bool {
        self.grid.breaks == other.grid.breaks
    }

    pub fn scale(&self, s: f64) -> Self {
        SampledFunction {
            grid: self.grid.clone(),
            values: self.values.iter().map(|v| v * s).collect(),
            domain: self.domain,
            tail: self.tail.scale(s),
        }
    }

    /// `a f + b g` on a shared grid.
    pub fn combine(&self, a: f64, other: &SampledFunction, b: f64) -> Result<Self, TailError> {
        assert!(self.same_grid(other), "combine requires identical grids");
        Ok(SampledFunction {
            grid: self.grid.clone(),
            values: self.values.iter().zip(&other.values).map(|(x, y)| a * x + b * y).collect(),
            domain: self.domain,
            tail: self.tail.scale(a).add(&other.tail.scale(b))?,
        })
    }

    /// `int f g` including the tails.
    pub fn inner(&self, other: &SampledFunction) -> Result<f64, TailError> {
        let (big, small) = if self.radius() >= other.radius() { (self, other) } else { (other, self) };
        let core: f64 = if big.same_grid(small) {
            big.grid.weights.iter().zip(big.values.iter().zip(&small.values)).map(|(w, (x, y))| w * x * y).sum()
        } else {
            big.grid
                .weights
                .iter()
                .zip(big.grid.nodes.iter().zip(&big.values))
                .map(|(w, (&x, v))| w * v * small.eval(x))
                .sum()
        };
        if big.tail.is_zero() || small.tail.is_zero() {
            return Ok(core);
        }
        Ok(core + big.tail.inner(&small.tail)?)
    }

    pub fn norm2(&self) -> Result<f64, TailError> {
        Ok(self.inner(self)?.sqrt())
    }

    /// `int f(x) e^{-i w x} dx`.
    pub fn fourier(&self, w: f64) -> Result<Complex64, TailError> {
        let mut acc = Complex64::new(0.0, 0.0);
        for ((x, wt), v) in self.grid.nodes.iter().zip(&self.grid.weights).zip(&self.values) {
            acc += wt * v * Complex64::from_polar(1.0, -w * x);
        }
        if !self.tail.is_zero() {
            acc += self.tail.fourier(w)?;
        }
        Ok(acc)
    }

    /// Quadrature `L^p` norm. The tail is integrated numerically out to
    /// eight times the grid radius; beyond that its leading power is
    /// integrated against the mean of `|leading waves|^p`, and the envelope
    /// bound of the remainder is reported as `tail_estimate`.
    pub fn lp_norm(&self, p: f64) -> LpNorm {
        self.weighted_lp_norm(p, 0.0)
    }

    /// `L^p` norm with respect to `|x|^beta dx`.
    pub fn weighted_lp_norm(&self, p: f64, beta: f64) -> LpNorm {
        assert!(p >= 1.0);
        let weight = |x: f64| if beta == 0.0 { 1.0 } else { x.abs().powf(beta) };
        let mut acc: f64 = self
            .grid
            .nodes
            .iter()
            .zip(&self.grid.weights)
            .zip(&self.values)
            .map(|((&x, w), v)| w * v.abs().powf(p) * weight(x))
            .sum();
        let mut est = 0.0;
        if !self.tail.is_zero() {
            let r = self.tail.start;
            let omega = self
                .tail
                .right
                .iter()
                .chain(&self.tail.left)
                .map(|w| w.freq)
                .fold(0.0, f64::max)
                .max(1.0);
            let rule = QuadratureRule::oscillatory(r, 8.0 * r, omega, 12);
            let lead = self
                .tail
                .right
                .iter()
                .chain(&self.tail.left)
                .map(|w| w.power)
                .min()
                .unwrap_or(1) as f64;
            let env = self.tail.restart(8.0 * r).map(|t| t.envelope()).unwrap_or(f64::INFINITY);
            let decay = p * lead - beta;
            let sides: &[f64] = match self.domain {
                Domain::RealLineTruncated => &[1.0, -1.0],
                _ => &[1.0],
            };
            let far = QuadratureRule::oscillatory(8.0 * r, 16.0 * r, omega, 12);
            for &s in sides {
                acc += rule.integrate(|u| self.tail.eval(s * u).abs().powf(p) * weight(u));
                // beyond 8R: mean of |leading waves|^p times the integrated power law
                let waves = if s > 0.0 { &self.tail.right } else { &self.tail.left };
                if decay > 1.0 && waves.iter().any(|w| w.power as f64 == lead) {
                    let leading = |u: f64| -> f64 {
                        waves
                            .iter()
                            .filter(|w| w.power as f64 == lead)
                            .map(|w| (w.amp * Complex64::from_polar(1.0, w.freq * u)).re)
                            .sum()
                    };
                    let mean = far.integrate(|u| leading(u).abs().powf(p)) / (8.0 * r);
                    acc += mean * r.powf(p * lead) * (8.0 * r).powf(1.0 + beta - p * lead) / (decay - 1.0);
                }
                est += if decay > 1.0 {
                    env.powf(p) * (8.0 * r).powf(1.0 + beta) / (decay - 1.0)
                } else {
                    f64::INFINITY
                };
            }
        }
        LpNorm { value: acc.powf(1.0 / p), tail_estimate: est }
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().fold(0.0, |m, v| m.max(v.abs()))
    }
}
