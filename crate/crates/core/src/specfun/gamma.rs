use super::SpecFunError;

const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_8;

/// Stirling series coefficients B_{2k} / (2k (2k-1)).
const STIRLING: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360_360.0,
    1.0 / 156.0,
    -3617.0 / 122_400.0,
];

fn stirling(x: f64) -> f64 {
    let inv = 1.0 / x;
    let inv2 = inv * inv;
    let mut corr = 0.0;
    let mut pow = inv;
    for c in STIRLING {
        corr += c * pow;
        pow *= inv2;
    }
    (x - 0.5) * x.ln() - x + LN_SQRT_2PI + corr
}

/// Natural logarithm of the Gamma function for positive arguments.
///
/// Small integers come from an exact factorial table; everything else is
/// shifted above 15 and evaluated with the Stirling series.
pub fn ln_gamma(x: f64) -> Result<f64, SpecFunError> {
    if x.is_nan() {
        return Err(SpecFunError::Domain("ln_gamma of NaN"));
    }
    if x <= 0.0 {
        if x.fract() == 0.0 {
            return Err(SpecFunError::Pole(x));
        }
        return Err(SpecFunError::Domain("ln_gamma requires x > 0"));
    }
    if x.is_infinite() {
        return Ok(f64::INFINITY);
    }
    if x.fract() == 0.0 && x <= 30.0 {
        let n = x as u32;
        let mut acc = 1.0f64;
        for k in 2..n {
            acc *= k as f64;
        }
        return Ok(acc.ln());
    }
    if x >= 15.0 {
        return Ok(stirling(x));
    }
    let mut shift = 1.0;
    let mut z = x;
    while z < 15.0 {
        shift *= z;
        z += 1.0;
    }
    Ok(stirling(z) - shift.ln())
}

/// Gamma function for arguments where it is finite and representable.
pub fn gamma(x: f64) -> Result<f64, SpecFunError> {
    if x > 0.0 {
        let lg = ln_gamma(x)?;
        if lg > 709.0 {
            return Err(SpecFunError::Overflow("gamma"));
        }
        return Ok(lg.exp());
    }
    if x.fract() == 0.0 {
        return Err(SpecFunError::Pole(x));
    }
    // reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x)
    let g = gamma(1.0 - x)?;
    Ok(std::f64::consts::PI / ((std::f64::consts::PI * x).sin() * g))
}

/// Reciprocal Gamma; zero at the poles.
pub fn rgamma(x: f64) -> f64 {
    if x <= 0.0 && x.fract() == 0.0 {
        return 0.0;
    }
    match gamma(x) {
        Ok(g) => 1.0 / g,
        Err(_) => 0.0,
    }
}
