use super::CliError;
use crate::bessel_bases::{
    default_half_grid, default_real_grid, sample_spherical_j, sample_spherical_j_hankel, Bandwidth, Domain, Family,
    SampledFunction,
};
use crate::prolate_core::{sample_prolates, ProlateBasis};
use crate::tail::{TailModel, Wave};
use num_complex::Complex64;
use std::path::{Path, PathBuf};
use std::str::FromStr;

/// Input function addressed on the command line.
#[derive(Debug, Clone, PartialEq)]
pub enum FunctionSpec {
    /// `j_{n,c}` or `tilde j_{n,alpha,c}`.
    Jn(usize),
    /// The `n`-th prolate of the basis in use.
    Psi(usize),
    /// `(sin(c x / 2) / x)^2`, spectrum in `[-c, c]`.
    Fejer,
    /// `exp(-(x/s)^2)`, times `(x/s)^{alpha+1/2}` on the half line.
    Bump(f64),
    /// Two-column `x,value` file, linearly interpolated and zero outside.
    Csv(PathBuf),
}

impl FromStr for FunctionSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let Some(rest) = s.strip_prefix("builtin:") else {
            return Ok(FunctionSpec::Csv(PathBuf::from(s)));
        };
        let (name, arg) = rest.split_once(':').map_or((rest, None), |(a, b)| (a, Some(b)));
        let index = |a: Option<&str>| {
            a.ok_or_else(|| format!("builtin:{name} needs an index"))?
                .parse::<usize>()
                .map_err(|e| format!("builtin:{name}: {e}"))
        };
        match name {
            "jn" => Ok(FunctionSpec::Jn(index(arg)?)),
            "psi" => Ok(FunctionSpec::Psi(index(arg)?)),
            "fejer" if arg.is_none() => Ok(FunctionSpec::Fejer),
            "bump" => {
                let scale: f64 = arg
                    .ok_or("builtin:bump needs a scale")?
                    .parse()
                    .map_err(|e| format!("builtin:bump: {e}"))?;
                if !(scale > 0.0 && scale.is_finite()) {
                    return Err(format!("bump scale must be positive, got {scale}"));
                }
                Ok(FunctionSpec::Bump(scale))
            }
            _ => Err(format!("unknown function {s}")),
        }
    }
}

impl FunctionSpec {
    pub fn needs_basis(&self) -> bool {
        matches!(self, FunctionSpec::Psi(_))
    }

    /// Sample on the default grid of the family.
    pub fn sample(&self, family: Family, c: Bandwidth, basis: Option<&ProlateBasis>) -> Result<SampledFunction, CliError> {
        let grid = match family {
            Family::Fourier => default_real_grid(c),
            Family::Hankel(_) => default_half_grid(c),
        };
        let domain = match family {
            Family::Fourier => Domain::RealLineTruncated,
            Family::Hankel(_) => Domain::HalfLineTruncated,
        };
        let r = grid.upper();
        match self {
            FunctionSpec::Jn(n) => Ok(match family {
                Family::Fourier => sample_spherical_j(*n, c, &grid),
                Family::Hankel(a) => sample_spherical_j_hankel(*n, a, c, &grid),
            }),
            FunctionSpec::Psi(n) => {
                let basis = basis.ok_or_else(|| CliError::Config("builtin:psi needs a basis".into()))?;
                if *n >= basis.k {
                    return Err(CliError::Config(format!("builtin:psi:{n} exceeds K = {}", basis.k)));
                }
                let mut all = sample_prolates(basis, n + 1, &grid).map_err(|e| CliError::Numerics(e.to_string()))?;
                Ok(all.pop().unwrap())
            }
            FunctionSpec::Fejer => {
                if family != Family::Fourier {
                    return Err(CliError::Config("builtin:fejer is a real-line function".into()));
                }
                let h = 0.5 * c.value();
                // sin^2(h x) / x^2 = (1 - cos(c x)) / (2 x^2), both sides alike
                let waves = vec![
                    Wave::new(2, 0.0, Complex64::new(0.5 / (r * r), 0.0)),
                    Wave::new(2, c.value(), Complex64::new(-0.5 / (r * r), 0.0)),
                ];
                let tail = TailModel { start: r, right: waves.clone(), left: waves };
                Ok(SampledFunction::from_fn(
                    grid,
                    domain,
                    |x| if x == 0.0 { h * h } else { ((h * x).sin() / x).powi(2) },
                    tail,
                ))
            }
            FunctionSpec::Bump(s) => {
                let power = match family {
                    Family::Fourier => 0.0,
                    Family::Hankel(a) => a.value() + 0.5,
                };
                Ok(SampledFunction::from_fn(
                    grid,
                    domain,
                    |x| {
                        let u = x / s;
                        let g = (-u * u).exp();
                        if power == 0.0 {
                            g
                        } else {
                            g * u.abs().powf(power)
                        }
                    },
                    TailModel::zero(r),
                ))
            }
            FunctionSpec::Csv(path) => {
                let (xs, vs) = read_table(path)?;
                Ok(SampledFunction::from_fn(grid, domain, |x| linear(&xs, &vs, x), TailModel::zero(r)))
            }
        }
    }
}

/// `x,value` rows; `#` lines and a non-numeric header are skipped.
pub fn read_table(path: &Path) -> Result<(Vec<f64>, Vec<f64>), CliError> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .comment(Some(b'#'))
        .trim(csv::Trim::All)
        .from_path(path)
        .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    let mut xs = Vec::new();
    let mut vs = Vec::new();
    for (line, record) in reader.records().enumerate() {
        let record = record.map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
        if record.len() != 2 {
            return Err(CliError::Config(format!("{}: expected two columns", path.display())));
        }
        let parsed = (record[0].parse::<f64>(), record[1].parse::<f64>());
        match parsed {
            (Ok(x), Ok(v)) if x.is_finite() && v.is_finite() => {
                xs.push(x);
                vs.push(v);
            }
            _ if line == 0 => continue,
            _ => return Err(CliError::Config(format!("{}: bad row {}", path.display(), line + 1))),
        }
    }
    if xs.len() < 2 || xs.windows(2).any(|w| !(w[0] < w[1])) {
        return Err(CliError::Config(format!("{}: need at least two rows with increasing x", path.display())));
    }
    Ok((xs, vs))
}

fn linear(xs: &[f64], vs: &[f64], x: f64) -> f64 {
    if x < xs[0] || x > xs[xs.len() - 1] {
        return 0.0;
    }
    let i = xs.partition_point(|&t| t <= x).clamp(1, xs.len() - 1);
    let t = (x - xs[i - 1]) / (xs[i] - xs[i - 1]);
    vs[i - 1] + t * (vs[i] - vs[i - 1])
}

/// Uniform grid spec `a:b:count`, both ends included.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub a: f64,
    pub b: f64,
    pub count: usize,
}

impl FromStr for GridSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parts: Vec<&str> = s.split(':').collect();
        if parts.len() != 3 {
            return Err(format!("grid spec must be a:b:count, got {s}"));
        }
        let a: f64 = parts[0].parse().map_err(|e| format!("{s}: {e}"))?;
        let b: f64 = parts[1].parse().map_err(|e| format!("{s}: {e}"))?;
        let count: usize = parts[2].parse().map_err(|e| format!("{s}: {e}"))?;
        if !(a.is_finite() && b.is_finite() && a < b) || count == 0 {
            return Err(format!("grid spec needs a < b and count >= 1, got {s}"));
        }
        Ok(GridSpec { a, b, count })
    }
}

impl GridSpec {
    pub fn points(&self) -> Vec<f64> {
        if self.count == 1 {
            return vec![self.a];
        }
        let h = (self.b - self.a) / (self.count - 1) as f64;
        (0..self.count).map(|i| self.a + i as f64 * h).collect()
    }
}
