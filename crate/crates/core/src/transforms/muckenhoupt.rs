use super::TransformError;
use std::fmt::Write as _;

/// Weight on a subinterval of `(0, inf)`.
#[derive(Debug, Clone, PartialEq)]
pub enum WeightSpec {
    /// `x^beta`.
    Power { beta: f64 },
    /// Piecewise constant: `values[i]` on `[breaks[i], breaks[i+1])`.
    Tabulated { breaks: Vec<f64>, values: Vec<f64> },
}

/// Supremum of the `A^p` bracket at one dyadic depth.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ApLevel {
    pub depth: usize,
    /// Largest bracket among the intervals of this depth (`inf` if divergent).
    pub level_sup: f64,
    /// Largest bracket over all depths up to this one.
    pub running_sup: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ApWeightReport {
    pub p: f64,
    pub depth: usize,
    pub levels: Vec<ApLevel>,
    /// Per-depth suprema never decrease with depth.
    pub nondecreasing: bool,
    /// Some interval has a non-integrable weight or dual weight.
    pub diverging: bool,
}

impl ApWeightReport {
    /// Final estimate `[omega]_p` at the deepest level.
    pub fn estimate(&self) -> f64 {
        self.levels.last().map(|l| l.running_sup).unwrap_or(f64::NAN)
    }

    /// Running supremum at depth `d`.
    pub fn at_depth(&self, d: usize) -> Option<f64> {
        self.levels.iter().find(|l| l.depth == d).map(|l| l.running_sup)
    }

    /// `depth,level_sup,running_sup` rows with a header.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("depth,level_sup,running_sup\n");
        for l in &self.levels {
            writeln!(s, "{},{:.16e},{:.16e}", l.depth, l.level_sup, l.running_sup).unwrap();
        }
        s
    }
}

impl WeightSpec {
    fn validate(&self, a: f64, b: f64) -> Result<(), TransformError> {
        match self {
            WeightSpec::Power { beta } => {
                if !beta.is_finite() || a < 0.0 {
                    return Err(TransformError::Domain("power weights live on (0, inf)"));
                }
            }
            WeightSpec::Tabulated { breaks, values } => {
                if breaks.len() != values.len() + 1
                    || breaks.windows(2).any(|w| !(w[0] < w[1]))
                    || values.iter().any(|v| !(*v > 0.0 && v.is_finite()))
                {
                    return Err(TransformError::Domain("tabulated weight must be positive on increasing cells"));
                }
                if a < breaks[0] || b > *breaks.last().unwrap() {
                    return Err(TransformError::Domain("interval exceeds the tabulated weight"));
                }
            }
        }
        Ok(())
    }

    /// `int_a^b omega^s`, infinite when not integrable.
    fn integral(&self, s: f64, a: f64, b: f64) -> f64 {
        match self {
            WeightSpec::Power { beta } => power_integral(beta * s, a, b),
            WeightSpec::Tabulated { breaks, values } => {
                let mut acc = 0.0;
                for (i, v) in values.iter().enumerate() {
                    let lo = breaks[i].max(a);
                    let hi = breaks[i + 1].min(b);
                    if hi > lo {
                        acc += (hi - lo) * v.powf(s);
                    }
                }
                acc
            }
        }
    }
}

/// `int_a^b x^g dx`, `0 <= a < b`.
fn power_integral(g: f64, a: f64, b: f64) -> f64 {
    if a == 0.0 && g <= -1.0 {
        return f64::INFINITY;
    }
    if g == -1.0 {
        return (b / a).ln();
    }
    let e = g + 1.0;
    if a == 0.0 {
        return b.powf(e) / e;
    }
    // b^e - a^e without cancellation for nearby endpoints
    a.powf(e) * (e * (b / a).ln()).exp_m1() / e
}

/// `(avg omega) (avg omega^{-1/(p-1)})^{p-1}` on `[a, b]`.
fn bracket(w: &WeightSpec, p: f64, a: f64, b: f64) -> f64 {
    let len = b - a;
    let first = w.integral(1.0, a, b) / len;
    let second = w.integral(-1.0 / (p - 1.0), a, b) / len;
    if first.is_infinite() || second.is_infinite() {
        return f64::INFINITY;
    }
    first * second.powf(p - 1.0)
}

/// Lower bound of `[omega]_p` from the dyadic subintervals of `interval` and
/// their half-length shifts, down to `depth`.
pub fn muckenhoupt_estimate(
    omega: &WeightSpec,
    p: f64,
    interval: (f64, f64),
    depth: usize,
) -> Result<ApWeightReport, TransformError> {
    if !(p > 1.0 && p.is_finite()) {
        return Err(TransformError::Exponent(p));
    }
    let (a, b) = interval;
    if !(a < b) {
        return Err(TransformError::Domain("empty interval"));
    }
    omega.validate(a, b)?;
    let mut levels = Vec::with_capacity(depth + 1);
    let mut running = 0.0f64;
    let mut diverging = false;
    for d in 0..=depth {
        let count = 1usize << d;
        let len = (b - a) / count as f64;
        let mut sup = 0.0f64;
        for k in 0..count {
            let lo = a + k as f64 * len;
            sup = sup.max(bracket(omega, p, lo, lo + len));
            if k + 1 < count {
                let mid = lo + 0.5 * len;
                sup = sup.max(bracket(omega, p, mid, mid + len));
            }
        }
        diverging |= sup.is_infinite();
        running = running.max(sup);
        levels.push(ApLevel { depth: d, level_sup: sup, running_sup: running });
    }
    let nondecreasing = levels.windows(2).all(|w| w[1].level_sup >= w[0].level_sup);
    Ok(ApWeightReport { p, depth, levels, nondecreasing, diverging })
}
