//! Oscillatory power-law tails beyond a truncation radius.
//!
//! A tail on one side of the origin is a finite sum of waves
//! `Re[A (r/u)^p e^{i w u}]` in the distance `u >= r` from the origin.
//! Products of tails and their integrals over `[r, inf)` are exact up to the
//! evaluation of generalised exponential integrals.

use crate::specfun::{hankel_coefficients, hankel_phase};
use num_complex::Complex64;
use std::f64::consts::PI;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum TailError {
    #[error("tail integral diverges (power {power}, frequency {freq})")]
    Divergent { power: i32, freq: f64 },
    #[error("tail radii differ: {0} vs {1}")]
    RadiusMismatch(f64, f64),
}

/// One term `Re[amp (r/u)^power e^{i freq u}]`, `freq >= 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Wave {
    pub power: i32,
    pub freq: f64,
    pub amp: Complex64,
}

impl Wave {
    pub fn new(power: i32, freq: f64, amp: Complex64) -> Self {
        if freq < 0.0 {
            Wave { power, freq: -freq, amp: amp.conj() }
        } else {
            Wave { power, freq, amp }
        }
    }

    /// `a cos(w u) + b sin(w u)` scaled by `(r/u)^power`.
    pub fn cos_sin(power: i32, freq: f64, a: f64, b: f64) -> Self {
        Wave::new(power, freq, Complex64::new(a, -b))
    }
}

/// Tails on both sides of the origin, valid for `|x| >= start`.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct TailModel {
    pub start: f64,
    pub right: Vec<Wave>,
    pub left: Vec<Wave>,
}

impl TailModel {
    pub fn zero(start: f64) -> Self {
        TailModel { start, right: Vec::new(), left: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.right.is_empty() && self.left.is_empty()
    }

    /// Tail value at `x`, `|x| >= start`.
    pub fn eval(&self, x: f64) -> f64 {
        if x >= 0.0 {
            eval_waves(&self.right, self.start, x)
        } else {
            eval_waves(&self.left, self.start, -x)
        }
    }

    pub fn scale(&self, s: f64) -> Self {
        let f = |w: &Vec<Wave>| w.iter().map(|v| Wave { amp: v.amp * s, ..*v }).collect();
        TailModel { start: self.start, right: f(&self.right), left: f(&self.left) }
    }

    pub fn add(&self, other: &TailModel) -> Result<TailModel, TailError> {
        let other = other.restart(self.start)?;
        let mut right = self.right.clone();
        right.extend(other.right);
        let mut left = self.left.clone();
        left.extend(other.left);
        Ok(TailModel { start: self.start, right: merge(right), left: merge(left) })
    }

    /// Re-express the waves relative to a larger radius.
    pub fn restart(&self, start: f64) -> Result<TailModel, TailError> {
        if start < self.start * (1.0 - 1e-12) {
            return Err(TailError::RadiusMismatch(self.start, start));
        }
        let ratio = self.start / start;
        let f = |w: &Vec<Wave>| {
            w.iter()
                .map(|v| Wave { amp: v.amp * ratio.powi(v.power), ..*v })
                .collect()
        };
        Ok(TailModel { start, right: f(&self.right), left: f(&self.left) })
    }

    /// Pointwise product with another tail.
    pub fn mul(&self, other: &TailModel) -> Result<TailModel, TailError> {
        let start = self.start.max(other.start);
        let a = self.restart(start)?;
        let b = other.restart(start)?;
        Ok(TailModel {
            start,
            right: mul_waves(&a.right, &b.right),
            left: mul_waves(&a.left, &b.left),
        })
    }

    /// Multiply by `cos(w x)` (`sine = false`) or `sin(w x)` on the whole line.
    pub fn modulate(&self, w: f64, sine: bool) -> TailModel {
        let mut right = Vec::new();
        let mut left = Vec::new();
        for v in &self.right {
            push_modulated(&mut right, v, w, sine, 1.0);
        }
        for v in &self.left {
            // sin(w x) = -sin(w u) for x = -u
            push_modulated(&mut left, v, w, sine, if sine { -1.0 } else { 1.0 });
        }
        TailModel { start: self.start, right: merge(right), left: merge(left) }
    }

    /// `int_{|x| >= start} tail(x) dx`.
    pub fn integral(&self) -> Result<f64, TailError> {
        Ok(integrate_waves(&self.right, self.start)? + integrate_waves(&self.left, self.start)?)
    }

    /// `int_{|x| >= R} f g` for two tails, `R` the larger start.
    pub fn inner(&self, other: &TailModel) -> Result<f64, TailError> {
        self.mul(other)?.integral()
    }

    /// `int_{|x| >= start} tail(x) e^{-i w x} dx`.
    pub fn fourier(&self, w: f64) -> Result<Complex64, TailError> {
        // Re[A e^{i v u}] e^{-i w u} = (A e^{i(v-w)u} + conj(A) e^{-i(v+w)u}) / 2
        let r = self.start;
        let mut acc = Complex64::new(0.0, 0.0);
        for v in &self.right {
            acc += 0.5 * v.amp * scaled_moment(v.power, v.freq - w, r)?;
            acc += 0.5 * v.amp.conj() * scaled_moment(v.power, -v.freq - w, r)?;
        }
        // left side: x = -u, e^{-i w x} = e^{i w u}
        for v in &self.left {
            acc += 0.5 * v.amp * scaled_moment(v.power, v.freq + w, r)?;
            acc += 0.5 * v.amp.conj() * scaled_moment(v.power, -v.freq + w, r)?;
        }
        Ok(acc)
    }

    /// Largest tail magnitude bound at the start radius.
    pub fn envelope(&self) -> f64 {
        self.right.iter().chain(&self.left).map(|v| v.amp.norm()).sum()
    }
}

fn push_modulated(out: &mut Vec<Wave>, v: &Wave, w: f64, sine: bool, sign: f64) {
    // Re[A e^{ivu}] cos(wu) = Re[A e^{i(v+w)u}]/2 + Re[A e^{i(v-w)u}]/2
    // Re[A e^{ivu}] sin(wu) = Re[-iA e^{i(v+w)u}]/2 + Re[iA e^{i(v-w)u}]/2
    let (p, m) = if sine {
        (Complex64::new(0.0, -0.5), Complex64::new(0.0, 0.5))
    } else {
        (Complex64::new(0.5, 0.0), Complex64::new(0.5, 0.0))
    };
    out.push(Wave::new(v.power, v.freq + w, v.amp * p * sign));
    out.push(Wave::new(v.power, v.freq - w, v.amp * m * sign));
}

pub fn eval_waves(waves: &[Wave], r: f64, u: f64) -> f64 {
    let q = r / u;
    waves
        .iter()
        .map(|v| (v.amp * Complex64::from_polar(1.0, v.freq * u)).re * q.powi(v.power))
        .sum()
}

pub fn mul_waves(a: &[Wave], b: &[Wave]) -> Vec<Wave> {
    let mut out = Vec::with_capacity(2 * a.len() * b.len());
    for x in a {
        for y in b {
            let p = x.power + y.power;
            out.push(Wave::new(p, x.freq + y.freq, 0.5 * x.amp * y.amp));
            out.push(Wave::new(p, x.freq - y.freq, 0.5 * x.amp * y.amp.conj()));
        }
    }
    merge(out)
}

/// Combine terms with equal power and frequency; drop exact zeros.
pub fn merge(mut waves: Vec<Wave>) -> Vec<Wave> {
    waves.sort_by(|a, b| a.power.cmp(&b.power).then(a.freq.total_cmp(&b.freq)));
    let mut out: Vec<Wave> = Vec::with_capacity(waves.len());
    for w in waves {
        if let Some(last) = out.last_mut() {
            if last.power == w.power && (last.freq - w.freq).abs() <= 1e-14 * (1.0 + w.freq) {
                last.amp += w.amp;
                continue;
            }
        }
        out.push(w);
    }
    out.retain(|w| w.amp != Complex64::new(0.0, 0.0));
    out
}

pub fn integrate_waves(waves: &[Wave], r: f64) -> Result<f64, TailError> {
    let mut acc = 0.0;
    for v in waves {
        acc += (v.amp * scaled_moment(v.power, v.freq, r)?).re;
    }
    Ok(acc)
}

/// `int_r^inf g(u) u^{-shift} du` for the waves `g` of one side.
pub fn integrate_waves_shifted(waves: &[Wave], r: f64, shift: i32) -> Result<f64, TailError> {
    let mut acc = 0.0;
    for v in waves {
        acc += (v.amp * scaled_moment(v.power + shift, v.freq, r)?).re;
    }
    Ok(acc * r.powi(-shift))
}

/// Moments `int_r^inf g(+-u) u^{-(m+1)} du` of a tail, used to integrate it
/// against `1/(x - t)` for `|x| < r`.
#[derive(Debug, Clone, PartialEq)]
pub struct CauchyMoments {
    pub start: f64,
    pub right: Vec<f64>,
    pub left: Vec<f64>,
}

impl CauchyMoments {
    /// Enough moments for `|x| <= reach * start` to round-off.
    pub fn new(tail: &TailModel, reach: f64) -> Result<Self, TailError> {
        assert!(reach > 0.0 && reach < 1.0);
        let count = (37.0 / -reach.ln()).ceil() as usize + 2;
        let r = tail.start;
        let side = |w: &[Wave]| -> Result<Vec<f64>, TailError> {
            if w.is_empty() {
                return Ok(Vec::new());
            }
            (0..count).map(|m| integrate_waves_shifted(w, r, m as i32 + 1)).collect()
        };
        Ok(CauchyMoments { start: r, right: side(&tail.right)?, left: side(&tail.left)? })
    }

    /// `int_{|t| >= start} g(t) / (x - t) dt`.
    pub fn at(&self, x: f64) -> f64 {
        // t = u:  1/(x-u) = -sum x^m u^{-(m+1)};  t = -u: 1/(x+u) = sum (-x)^m u^{-(m+1)}
        let mut acc = 0.0;
        let mut xm = 1.0;
        for m in 0..self.right.len().max(self.left.len()) {
            if let Some(v) = self.right.get(m) {
                acc -= xm * v;
            }
            if let Some(v) = self.left.get(m) {
                acc += if m % 2 == 0 { xm * v } else { -xm * v };
            }
            xm *= x;
        }
        acc
    }
}

/// `int_r^inf (r/u)^s e^{i nu u} du = r E_s(-i nu r)`.
pub fn scaled_moment(s: i32, nu: f64, r: f64) -> Result<Complex64, TailError> {
    if nu == 0.0 {
        if s <= 1 {
            return Err(TailError::Divergent { power: s, freq: nu });
        }
        return Ok(Complex64::new(r / (s as f64 - 1.0), 0.0));
    }
    if s <= 0 {
        return Err(TailError::Divergent { power: s, freq: nu });
    }
    let e = exp_integral(s as u32, Complex64::new(0.0, -nu.abs() * r));
    let v = r * e;
    Ok(if nu < 0.0 { v.conj() } else { v })
}

const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Generalised exponential integral `E_n(z) = int_1^inf t^{-n} e^{-z t} dt`
/// for `n >= 1`, `Re z >= 0`, `z != 0`.
pub fn exp_integral(n: u32, z: Complex64) -> Complex64 {
    assert!(n >= 1);
    let nf = n as f64;
    if z.norm() >= 2.0 {
        // modified Lentz evaluation of the continued fraction
        let tiny = 1e-300;
        let mut b = z + nf;
        let mut c = Complex64::new(1.0 / tiny, 0.0);
        let mut d = 1.0 / b;
        let mut h = d;
        for i in 1..100_000 {
            let an = -(i as f64) * (nf - 1.0 + i as f64);
            b += 2.0;
            d = 1.0 / (an * d + b);
            c = b + an / c;
            let del = c * d;
            h *= del;
            if (del - 1.0).norm() < 1e-16 {
                break;
            }
        }
        return h * (-z).exp();
    }
    // power series around the origin
    let mut psi = -EULER_GAMMA;
    for m in 1..n {
        psi += 1.0 / m as f64;
    }
    let mut sum = Complex64::new(0.0, 0.0);
    let mut term = Complex64::new(1.0, 0.0); // (-z)^k / k!
    let mut special = Complex64::new(0.0, 0.0);
    for k in 0..400u32 {
        if k == n - 1 {
            special = term * (psi - z.ln());
        } else {
            let add = term / (k as f64 - nf + 1.0);
            sum -= add;
            if k > n && add.norm() < 1e-18 * sum.norm().max(1e-300) {
                break;
            }
        }
        term *= -z / (k as f64 + 1.0);
    }
    special + sum
}

/// Tail of `y^{-1/2} J_nu(c y)` for `y >= r` from the Hankel expansion.
///
/// Requires `c r` well above `nu^2 / 10`; the expansion terminates for
/// half-integer orders.
pub fn bessel_over_sqrt_tail(nu: f64, c: f64, r: f64) -> Vec<Wave> {
    let z = c * r;
    let coeffs = hankel_coefficients(nu, 80);
    let phase = Complex64::from_polar(1.0, -hankel_phase(nu));
    let lead = (2.0 / (PI * c)).sqrt() / r;
    let mut out = Vec::new();
    let mut ipow = Complex64::new(1.0, 0.0);
    let mut zpow = 1.0;
    let mut prev = f64::INFINITY;
    for (j, a) in coeffs.iter().enumerate() {
        let mag = a.abs() * zpow;
        if *a == 0.0 {
            break;
        }
        if mag > prev && mag < 1e-3 {
            break; // asymptotic series starts to diverge
        }
        out.push(Wave::new(1 + j as i32, c, lead * ipow * a * zpow * phase));
        if mag < 1e-18 {
            break;
        }
        prev = mag;
        ipow *= Complex64::new(0.0, 1.0);
        zpow /= z;
    }
    out
}

/// Tail of the Hankel kernel `sqrt(x y) J_alpha(x y)` as a function of `y >= r`
/// for fixed `x > 0`.
pub fn hankel_kernel_tail(alpha: f64, x: f64, r: f64) -> Vec<Wave> {
    // sqrt(xy) J(xy) = sqrt(x) y^{1/2} J(xy); reuse the y^{-1/2} expansion
    // with one power less
    let mut w = bessel_over_sqrt_tail(alpha, x, r);
    for v in &mut w {
        v.power -= 1;
        v.amp *= x.sqrt() * r;
    }
    w
}

/// `1/(x - t)` for `|t| >= r > |x|` as tails in `|t|`; `eps` controls truncation.
pub fn cauchy_kernel_tail(x: f64, r: f64, eps: f64) -> TailModel {
    let q = x / r;
    assert!(q.abs() < 1.0, "cauchy tail needs |x| < r");
    let mut right = Vec::new();
    let mut left = Vec::new();
    // t = u:  1/(x-u) = -sum x^m u^{-(m+1)}
    // t = -u: 1/(x+u) =  sum (-x)^m u^{-(m+1)}
    let mut qm = 1.0 / r;
    let mut m = 0;
    while qm.abs() * r > eps || m < 2 {
        right.push(Wave::new(m + 1, 0.0, Complex64::new(-qm, 0.0)));
        let sgn = if m % 2 == 0 { 1.0 } else { -1.0 };
        left.push(Wave::new(m + 1, 0.0, Complex64::new(sgn * qm, 0.0)));
        qm *= q;
        m += 1;
        if m > 4000 {
            break;
        }
    }
    TailModel { start: r, right, left }
}
