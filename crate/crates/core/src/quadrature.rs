//! Gauss-Legendre rules and composite panel rules.

use crate::specfun::legendre_with_derivative;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

/// Nodes and positive weights on `[a, b]`, exact for polynomials of degree
/// `design_degree`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QuadratureRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
    pub interval: (f64, f64),
    pub design_degree: usize,
}

impl QuadratureRule {
    /// `n`-point Gauss-Legendre rule on `[a, b]`.
    pub fn gauss_legendre(n: usize, a: f64, b: f64) -> Self {
        assert!(n >= 1, "Gauss rule needs at least one node");
        assert!(a < b, "interval must satisfy a < b");
        let (x, w) = gauss_legendre_unit(n);
        let h = 0.5 * (b - a);
        let m = 0.5 * (a + b);
        QuadratureRule {
            nodes: x.iter().map(|t| m + h * t).collect(),
            weights: w.iter().map(|v| h * v).collect(),
            interval: (a, b),
            design_degree: 2 * n - 1,
        }
    }

    /// Composite rule: `panels` equal panels with `per_panel` Gauss nodes each.
    pub fn composite(a: f64, b: f64, panels: usize, per_panel: usize) -> Self {
        let breaks: Vec<f64> = (0..=panels)
            .map(|i| a + (b - a) * i as f64 / panels as f64)
            .collect();
        Self::from_breakpoints(&breaks, per_panel)
    }

    /// Composite rule over consecutive breakpoints.
    pub fn from_breakpoints(breaks: &[f64], per_panel: usize) -> Self {
        assert!(breaks.len() >= 2);
        let (x, w) = gauss_legendre_unit(per_panel);
        let mut nodes = Vec::with_capacity((breaks.len() - 1) * per_panel);
        let mut weights = Vec::with_capacity(nodes.capacity());
        for pair in breaks.windows(2) {
            let (lo, hi) = (pair[0], pair[1]);
            assert!(lo < hi, "breakpoints must be increasing");
            let h = 0.5 * (hi - lo);
            let m = 0.5 * (hi + lo);
            for (t, v) in x.iter().zip(&w) {
                nodes.push(m + h * t);
                weights.push(h * v);
            }
        }
        QuadratureRule {
            nodes,
            weights,
            interval: (breaks[0], *breaks.last().unwrap()),
            design_degree: 2 * per_panel - 1,
        }
    }

    /// Composite rule resolving oscillations of angular frequency `omega`
    /// with at least `nodes_per_period` nodes per period.
    pub fn oscillatory(a: f64, b: f64, omega: f64, nodes_per_period: usize) -> Self {
        const PER_PANEL: usize = 16;
        let periods = (b - a) * omega.abs() / (2.0 * PI);
        let needed = (periods * nodes_per_period as f64 / PER_PANEL as f64).ceil() as usize;
        Self::composite(a, b, needed.max(1), PER_PANEL)
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn integrate<F: Fn(f64) -> f64>(&self, f: F) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(x))
            .sum()
    }

    /// Concatenate two rules on adjacent intervals.
    pub fn join(mut self, other: QuadratureRule) -> Self {
        debug_assert!(self.interval.1 <= other.interval.0 + 1e-12);
        self.nodes.extend(other.nodes);
        self.weights.extend(other.weights);
        self.interval.1 = other.interval.1;
        self.design_degree = self.design_degree.min(other.design_degree);
        self
    }
}

/// Gauss-Legendre nodes (ascending) and weights on `[-1, 1]`.
pub fn gauss_legendre_unit(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut x = vec![0.0; n];
    let mut w = vec![0.0; n];
    let nf = n as f64;
    for i in 0..(n + 1) / 2 {
        // Tricomi initial guess for the i-th largest root
        let theta = PI * (4.0 * i as f64 + 3.0) / (4.0 * nf + 2.0);
        let mut t = (1.0 - (nf - 1.0) / (8.0 * nf * nf * nf)) * theta.cos();
        for _ in 0..100 {
            let (p, dp) = legendre_with_derivative(n, t);
            let step = p / dp;
            t -= step;
            if step.abs() < 1e-16 {
                break;
            }
        }
        let (_, dp) = legendre_with_derivative(n, t);
        let wt = 2.0 / ((1.0 - t * t) * dp * dp);
        x[n - 1 - i] = t;
        x[i] = -t;
        w[n - 1 - i] = wt;
        w[i] = wt;
    }
    if n % 2 == 1 {
        x[n / 2] = 0.0;
    }
    (x, w)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomials_integrated_exactly() {
        for n in [1usize, 2, 5, 16, 40, 101] {
            let rule = QuadratureRule::gauss_legendre(n, -0.3, 1.7);
            assert!(rule.weights.iter().all(|&w| w > 0.0));
            assert!(rule.nodes.windows(2).all(|p| p[0] < p[1]));
            for k in 0..=rule.design_degree.min(60) {
                let exact = (1.7f64.powi(k as i32 + 1) - (-0.3f64).powi(k as i32 + 1)) / (k as f64 + 1.0);
                let got = rule.integrate(|x| x.powi(k as i32));
                assert!((got - exact).abs() <= 1e-12 * exact.abs().max(1.0), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn oscillatory_rule_resolves_sine() {
        let rule = QuadratureRule::oscillatory(0.0, 100.0, 10.0, 8);
        let got = rule.integrate(|x| (10.0 * x).sin());
        let exact = (1.0 - (1000.0f64).cos()) / 10.0;
        assert!((got - exact).abs() < 1e-12);
    }
}
