//! Bessel functions of the first kind for real order and real argument.
//!
//! Orders are reduced to a base `b = nu - floor(nu)` in `[0, 1)`. Values for
//! `b, b+1, ...` come from one of two paths:
//!
//! * `x < ASYMPTOTIC_X`: Miller backward recurrence normalised with the
//!   Neumann sum `(x/2)^b = sum_k (b+2k) Gamma(b+k)/k! J_{b+2k}(x)`;
//! * `x >= ASYMPTOTIC_X`: Hankel asymptotic expansion for the two lowest
//!   orders, forward recurrence while the order stays below `x`, and a Miller
//!   segment matched onto the forward values for the remaining orders.
//!
//! Orders below the base are reached with the downward three-term recurrence,
//! which is the dominant direction for negative orders.

use super::gamma::gamma;
use super::SpecFunError;
use std::f64::consts::PI;

const ASYMPTOTIC_X: f64 = 25.0;
const RESCALE: f64 = 1e250;

/// `J_nu(x)`.
pub fn bessel_j(nu: f64, x: f64) -> Result<f64, SpecFunError> {
    Ok(bessel_j_sequence(nu, 1, x)?[0])
}

/// `J_{nu0 + k}(x)` for `k = 0..count`.
pub fn bessel_j_sequence(nu0: f64, count: usize, x: f64) -> Result<Vec<f64>, SpecFunError> {
    if !nu0.is_finite() || !x.is_finite() {
        return Err(SpecFunError::Domain("bessel_j requires finite order and argument"));
    }
    if count == 0 {
        return Ok(Vec::new());
    }
    let integer_order = nu0.fract() == 0.0;
    if x < 0.0 {
        if !integer_order {
            return Err(SpecFunError::Domain(
                "bessel_j of non-integer order is only defined for x > 0",
            ));
        }
        let mut out = bessel_j_sequence(nu0, count, -x)?;
        for (k, v) in out.iter_mut().enumerate() {
            let n = nu0 as i64 + k as i64;
            if n.rem_euclid(2) == 1 {
                *v = -*v;
            }
        }
        return Ok(out);
    }
    if x == 0.0 {
        return (0..count)
            .map(|k| {
                let nu = nu0 + k as f64;
                if nu == 0.0 {
                    Ok(1.0)
                } else if nu > 0.0 || nu.fract() == 0.0 {
                    Ok(0.0)
                } else {
                    Err(SpecFunError::Overflow("bessel_j of negative order at x = 0"))
                }
            })
            .collect();
    }

    let floor = nu0.floor();
    let base = nu0 - floor;
    let first = floor as i64; // offset of nu0 from base (may be negative)
    let last = first + count as i64 - 1;
    let top = last.max(1) as usize;
    let upward = positive_sequence(base, top, x)?;

    let mut out = Vec::with_capacity(count);
    if first >= 0 {
        out.extend_from_slice(&upward[first as usize..=last as usize]);
    } else {
        // downward from (base, base+1) to base + first
        let mut below = Vec::with_capacity((-first) as usize);
        let (mut hi, mut lo) = (upward[1], upward[0]);
        let mut order = base;
        for _ in 0..(-first) {
            let next = 2.0 * order / x * lo - hi;
            below.push(next);
            hi = lo;
            lo = next;
            order -= 1.0;
        }
        below.reverse();
        for k in 0..count as i64 {
            let idx = first + k;
            out.push(if idx < 0 {
                below[(idx - first) as usize]
            } else {
                upward[idx as usize]
            });
        }
    }
    if out.iter().any(|v| !v.is_finite()) {
        return Err(SpecFunError::Overflow("bessel_j"));
    }
    Ok(out)
}

/// `J_{base+k}(x)` for `k = 0..=top`, `base` in `[0,1)`, `x > 0`.
fn positive_sequence(base: f64, top: usize, x: f64) -> Result<Vec<f64>, SpecFunError> {
    if x < ASYMPTOTIC_X {
        return Ok(miller_normalised(base, top, x));
    }
    let mut vals = vec![0.0; top + 1];
    vals[0] = hankel_asymptotic(base, x);
    vals[1] = hankel_asymptotic(base + 1.0, x);
    let forward_top = (x.floor() as usize).min(top);
    for k in 1..forward_top {
        let nu = base + k as f64;
        vals[k + 1] = 2.0 * nu / x * vals[k] - vals[k - 1];
    }
    if forward_top < top {
        let anchor = forward_top.max(1);
        let raw = miller_raw(base, top, x, anchor - 1);
        // least-squares match on the two overlap orders
        let (a0, a1) = (vals[anchor - 1], vals[anchor]);
        let big = raw[0].abs().max(raw[1].abs());
        let (r0, r1) = (raw[0] / big, raw[1] / big);
        let scale = (a0 * r0 + a1 * r1) / (r0 * r0 + r1 * r1) / big;
        for k in anchor + 1..=top {
            vals[k] = scale * raw[k - (anchor - 1)];
        }
    }
    Ok(vals)
}

fn start_order(top: usize, x: f64) -> usize {
    let m = (top as f64).max(x);
    (m + 30.0 + 6.0 * m.sqrt()).ceil() as usize
}

/// Unnormalised backward recurrence; returns values for orders `from..=top`
/// (relative to `base`) with arbitrary common scale.
fn miller_raw(base: f64, top: usize, x: f64, from: usize) -> Vec<f64> {
    let start = start_order(top, x);
    let mut vals = vec![0.0; top + 1 - from];
    let mut hi = 0.0;
    let mut cur = 1e-300;
    for k in (from..start).rev() {
        // cur holds order k+1, hi holds order k+2
        let nu = base + (k + 1) as f64;
        let next = 2.0 * nu / x * cur - hi;
        hi = cur;
        cur = next;
        if k <= top {
            vals[k - from] = cur;
        }
        if cur.abs() > RESCALE {
            cur /= RESCALE;
            hi /= RESCALE;
            for v in vals.iter_mut() {
                *v /= RESCALE;
            }
        }
    }
    vals
}

fn miller_normalised(base: f64, top: usize, x: f64) -> Vec<f64> {
    let start = start_order(top, x);
    let mut vals = vec![0.0; top + 1];
    let mut hi = 0.0;
    let mut cur = 1e-300;
    let mut sum = 0.0;
    // weights w_k = (base + 2k) Gamma(base + k) / k!, with w_0 = Gamma(base + 1)
    let g1 = gamma(base + 1.0).unwrap_or(1.0);
    let half = start / 2 + 1;
    let mut weights = Vec::with_capacity(half + 1);
    weights.push(g1);
    let mut g = g1; // Gamma(base + k) / k! at k = 1
    for k in 1..=half {
        weights.push((base + 2.0 * k as f64) * g);
        g *= (base + k as f64) / (k as f64 + 1.0);
    }
    for k in (0..start).rev() {
        let nu = base + (k + 1) as f64;
        let next = 2.0 * nu / x * cur - hi;
        hi = cur;
        cur = next;
        if k <= top {
            vals[k] = cur;
        }
        if k % 2 == 0 {
            sum += weights[k / 2] * cur;
        }
        if cur.abs() > RESCALE {
            cur /= RESCALE;
            hi /= RESCALE;
            sum /= RESCALE;
            for v in vals.iter_mut() {
                *v /= RESCALE;
            }
        }
    }
    let norm = (0.5 * x).powf(base) / sum;
    for v in vals.iter_mut() {
        *v *= norm;
    }
    vals
}

/// Coefficients `a_k(nu) = prod_{j<=k} (4nu^2 - (2j-1)^2) / (k! 8^k)` of the
/// Hankel expansion, up to `max_terms` terms.
pub fn hankel_coefficients(nu: f64, max_terms: usize) -> Vec<f64> {
    let mu = 4.0 * nu * nu;
    let mut out = Vec::with_capacity(max_terms);
    let mut a = 1.0;
    out.push(a);
    for k in 1..max_terms {
        let odd = (2 * k - 1) as f64;
        a *= (mu - odd * odd) / (8.0 * k as f64);
        out.push(a);
    }
    out
}

/// Phase `(nu/2 + 1/4) pi` of the large-argument form.
pub fn hankel_phase(nu: f64) -> f64 {
    (0.5 * nu + 0.25) * PI
}

/// `P` and `Q` of `J_nu(x) = sqrt(2/(pi x)) (P cos chi - Q sin chi)`.
pub fn hankel_pq(nu: f64, x: f64) -> (f64, f64) {
    let mu = 4.0 * nu * nu;
    let mut p = 1.0;
    let mut q = 0.0;
    let mut term = 1.0;
    let mut last = f64::INFINITY;
    for k in 1..200 {
        let odd = (2 * k - 1) as f64;
        term *= (mu - odd * odd) / (8.0 * k as f64 * x);
        if term == 0.0 {
            break;
        }
        if term.abs() > last {
            break;
        }
        last = term.abs();
        // k odd -> Q, k even -> P; signs alternate in pairs
        match k % 4 {
            1 => q += term,
            2 => p -= term,
            3 => q -= term,
            _ => p += term,
        }
        if term.abs() < 1e-17 * p.abs().max(1e-300) {
            break;
        }
    }
    (p, q)
}

fn hankel_asymptotic(nu: f64, x: f64) -> f64 {
    let (p, q) = hankel_pq(nu, x);
    let chi_shift = hankel_phase(nu);
    // cos(x - s) and sin(x - s) with the shift applied after reduction of x
    let (sx, cx) = x.sin_cos();
    let (ss, cs) = chi_shift.sin_cos();
    let cos_chi = cx * cs + sx * ss;
    let sin_chi = sx * cs - cx * ss;
    (2.0 / (PI * x)).sqrt() * (p * cos_chi - q * sin_chi)
}

/// Derivative `J'_nu(x) = (J_{nu-1}(x) - J_{nu+1}(x)) / 2`.
pub fn bessel_j_derivative(nu: f64, x: f64) -> Result<f64, SpecFunError> {
    let s = bessel_j_sequence(nu - 1.0, 3, x)?;
    Ok(0.5 * (s[0] - s[2]))
}
