use super::bessel::{bessel_j, hankel_coefficients, hankel_phase};
use super::gamma::rgamma;
use super::Order;
use std::f64::consts::PI;

const SERIES_END: f64 = 2.0;
const PANEL_WIDTH: f64 = 2.0;
const CHEB_POINTS: usize = 20;
const MAX_ASYMPTOTIC_START: f64 = 200.0;

/// `J_alpha(z)`, `z >= 0`, for one fixed order, tabulated for repeated use in
/// quadrature loops.
///
/// Power series on `[0, 2]`, Chebyshev panels of width 2 up to the point where
/// the Hankel expansion reaches double precision, and that expansion with a
/// fixed number of terms beyond. Orders whose expansion would start beyond
/// `z = 200` fall back to [`bessel_j`].
#[derive(Debug, Clone)]
pub struct FixedOrderJ {
    alpha: f64,
    series: Vec<f64>,
    panels: Vec<[f64; CHEB_POINTS]>,
    asymptotic_start: f64,
    p: Vec<f64>,
    q: Vec<f64>,
    phase: (f64, f64),
    fallback: bool,
}

impl FixedOrderJ {
    pub fn new(alpha: Order) -> Self {
        let a = alpha.value();
        // (z/2)^a sum_k s_k (z^2/4)^k, s_k = (-1)^k / (k! Gamma(k + a + 1))
        let mut series = Vec::new();
        let mut fact = 1.0;
        for k in 0..40 {
            if k > 0 {
                fact *= k as f64;
            }
            let s = if k % 2 == 0 { 1.0 } else { -1.0 } * rgamma(k as f64 + a + 1.0) / fact;
            series.push(s);
            if s.abs() * 4f64.powi(k) < 1e-18 {
                break;
            }
        }
        let Some((start, terms)) = asymptotic_start(a) else {
            return FixedOrderJ {
                alpha: a,
                series,
                panels: Vec::new(),
                asymptotic_start: f64::INFINITY,
                p: Vec::new(),
                q: Vec::new(),
                phase: (0.0, 1.0),
                fallback: true,
            };
        };
        let count = ((start - SERIES_END) / PANEL_WIDTH).ceil() as usize;
        let asymptotic_start = SERIES_END + count as f64 * PANEL_WIDTH;
        let panels = (0..count)
            .map(|i| {
                let lo = SERIES_END + i as f64 * PANEL_WIDTH;
                chebyshev_fit(|z| bessel_j(a, z).expect("z > 0"), lo, lo + PANEL_WIDTH)
            })
            .collect();
        let coef = hankel_coefficients(a, terms + 1);
        // P = a_0 - a_2/z^2 + a_4/z^4 - ..., Q = a_1/z - a_3/z^3 + ...
        let sign = |j: usize| if j % 2 == 0 { 1.0 } else { -1.0 };
        let p = coef.iter().step_by(2).enumerate().map(|(j, c)| sign(j) * c).collect();
        let q = coef.iter().skip(1).step_by(2).enumerate().map(|(j, c)| sign(j) * c).collect();
        FixedOrderJ {
            alpha: a,
            series,
            panels,
            asymptotic_start,
            p,
            q,
            phase: hankel_phase(a).sin_cos(),
            fallback: false,
        }
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// `J_alpha(z)` for `z >= 0`.
    pub fn eval(&self, z: f64) -> f64 {
        debug_assert!(z >= 0.0);
        if z <= SERIES_END {
            let u = 0.25 * z * z;
            let sum = self.series.iter().rev().fold(0.0, |acc, s| acc * u + s);
            return if self.alpha == 0.0 { sum } else { (0.5 * z).powf(self.alpha) * sum };
        }
        if self.fallback {
            return bessel_j(self.alpha, z).expect("z > 0");
        }
        if z < self.asymptotic_start {
            let i = (((z - SERIES_END) / PANEL_WIDTH) as usize).min(self.panels.len() - 1);
            let lo = SERIES_END + i as f64 * PANEL_WIDTH;
            return clenshaw(&self.panels[i], (2.0 * (z - lo) / PANEL_WIDTH) - 1.0);
        }
        let w = 1.0 / (z * z);
        let p = self.p.iter().rev().fold(0.0, |acc, c| acc * w + c);
        let q = self.q.iter().rev().fold(0.0, |acc, c| acc * w + c) / z;
        let (sz, cz) = z.sin_cos();
        let (ss, cs) = self.phase;
        let cos_chi = cz * cs + sz * ss;
        let sin_chi = sz * cs - cz * ss;
        (2.0 / (PI * z)).sqrt() * (p * cos_chi - q * sin_chi)
    }
}

/// Smallest multiple of 5 (at least 25) where the Hankel terms fall below
/// `1e-17` without exceeding 1 or turning upwards, with the number of terms used there.
fn asymptotic_start(a: f64) -> Option<(f64, usize)> {
    let coef = hankel_coefficients(a, 400);
    let mut z = 25.0;
    while z <= MAX_ASYMPTOTIC_START {
        let mut prev = f64::INFINITY;
        for (k, c) in coef.iter().enumerate().skip(1) {
            let t = c.abs() / z.powi(k as i32);
            if t < 1e-17 {
                return Some((z, k));
            }
            if t > 1.0 {
                break;
            }
            if t > prev && (2 * k - 1) as f64 > 2.0 * a {
                break;
            }
            prev = t;
        }
        z += 5.0;
    }
    None
}

fn chebyshev_fit(f: impl Fn(f64) -> f64, lo: f64, hi: f64) -> [f64; CHEB_POINTS] {
    let n = CHEB_POINTS;
    let values: Vec<f64> = (0..n)
        .map(|j| {
            let t = (PI * (j as f64 + 0.5) / n as f64).cos();
            f(lo + 0.5 * (t + 1.0) * (hi - lo))
        })
        .collect();
    let mut c = [0.0; CHEB_POINTS];
    for (k, ck) in c.iter_mut().enumerate() {
        let s: f64 = values.iter().enumerate().map(|(j, v)| v * (PI * k as f64 * (j as f64 + 0.5) / n as f64).cos()).sum();
        *ck = 2.0 * s / n as f64;
    }
    c[0] *= 0.5;
    c
}

fn clenshaw(c: &[f64], t: f64) -> f64 {
    let (mut b1, mut b2) = (0.0, 0.0);
    for ck in c.iter().skip(1).rev() {
        let b0 = 2.0 * t * b1 - b2 + ck;
        b2 = b1;
        b1 = b0;
    }
    t * b1 - b2 + c[0]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matches_the_general_routine() {
        for a in [0.0, 0.3, 0.5, 1.0, 2.0, 4.5, 7.0] {
            let j = FixedOrderJ::new(Order::new(a).unwrap());
            let mut worst = 0.0f64;
            for i in 0..20000 {
                let z = i as f64 * 0.0173;
                worst = worst.max((j.eval(z) - bessel_j(a, z).unwrap()).abs());
            }
            assert!(worst < 5e-15, "a={a}: {worst:e}");
        }
    }

    #[test]
    fn large_orders_fall_back() {
        let j = FixedOrderJ::new(Order::new(60.0).unwrap());
        assert!(j.fallback);
        assert_eq!(j.eval(41.0), bessel_j(60.0, 41.0).unwrap());
    }
}
