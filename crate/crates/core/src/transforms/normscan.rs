use super::fourier::{project_fourier, FourierRoute};
use super::hankel_projector::{project_hankel, HankelRoute};
use super::TransformError;
use crate::bessel_bases::{
    default_half_grid, default_real_grid, sample_spherical_j, sample_spherical_j_hankel, Bandwidth, Domain,
    SampledFunction,
};
use crate::specfun::Order;
use crate::tail::TailModel;
use rayon::prelude::*;
use std::fmt::Write as _;

/// Band-limiting projector to scan.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Projector {
    Fourier { c: Bandwidth },
    Hankel { alpha: Order, c: Bandwidth },
}

impl Projector {
    pub fn apply(&self, f: &SampledFunction) -> Result<SampledFunction, TransformError> {
        match *self {
            Projector::Fourier { c } => project_fourier(f, c, FourierRoute::Sinc),
            Projector::Hankel { alpha, c } => project_hankel(f, alpha, c, HankelRoute::Lommel),
        }
    }
}

/// Named member of a test family.
#[derive(Debug, Clone, PartialEq)]
pub struct TestFunction {
    pub label: String,
    pub function: SampledFunction,
}

impl TestFunction {
    /// Default-grid Gaussian `exp(-((x - center)/width)^2)`, multiplied by
    /// `x^power` on the half line.
    pub fn bump(op: &Projector, center: f64, width: f64, power: f64) -> Self {
        let (grid, domain) = match *op {
            Projector::Fourier { c } => (default_real_grid(c), Domain::RealLineTruncated),
            Projector::Hankel { c, .. } => (default_half_grid(c), Domain::HalfLineTruncated),
        };
        let tail = TailModel::zero(grid.upper());
        let function = SampledFunction::from_fn(
            grid,
            domain,
            |x| {
                let g = (-((x - center) / width).powi(2)).exp();
                if power == 0.0 {
                    g
                } else {
                    g * (x / width).abs().powf(power)
                }
            },
            tail,
        );
        TestFunction { label: format!("bump(center={center},width={width},power={power})"), function }
    }

    /// Bessel element `j_{n,c}` or `tilde j_{n,alpha,c}` of the projector's family.
    pub fn bessel(op: &Projector, n: usize) -> Self {
        let function = match *op {
            Projector::Fourier { c } => sample_spherical_j(n, c, &default_real_grid(c)),
            Projector::Hankel { alpha, c } => sample_spherical_j_hankel(n, alpha, c, &default_half_grid(c)),
        };
        TestFunction { label: format!("bessel(n={n})"), function }
    }

    /// Deterministic family: Bessel elements `0..4`, then a dilation sweep of
    /// bumps, then translated bumps.
    pub fn standard_family(op: &Projector, count: usize) -> Vec<Self> {
        let mut out = Vec::with_capacity(count);
        let power = match *op {
            Projector::Fourier { .. } => 0.0,
            Projector::Hankel { alpha, .. } => alpha.value() + 0.5,
        };
        let bessel = count.min(5);
        for n in 0..bessel {
            out.push(Self::bessel(op, n));
        }
        let rest = count - bessel;
        let sweep = rest.div_ceil(2);
        for k in 0..sweep {
            let t = if sweep > 1 { k as f64 / (sweep - 1) as f64 } else { 0.0 };
            let width = 0.25 * 16f64.powf(t);
            out.push(Self::bump(op, 0.0, width, power));
        }
        for k in 0..rest - sweep {
            let center = 0.5 + 2.5 * ((k as f64 * 0.618_033_988_749_895) % 1.0);
            let width = 0.3 + 0.7 * ((k as f64 * 0.414_213_562_373_095) % 1.0);
            out.push(Self::bump(op, center, width, 0.0));
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct NormRateRow {
    pub label: String,
    pub input_norm: f64,
    pub output_norm: f64,
    pub ratio: f64,
    /// Largest ratio over this and all earlier members.
    pub running_max: f64,
}

/// Lower bounds on `||op||_{L^p -> L^q}` over a test family.
#[derive(Debug, Clone, PartialEq)]
pub struct NormRateReport {
    pub p: f64,
    pub q: f64,
    pub rows: Vec<NormRateRow>,
}

impl NormRateReport {
    pub fn max_ratio(&self) -> f64 {
        self.rows.last().map(|r| r.running_max).unwrap_or(0.0)
    }

    /// `member,label,p,q,ratio,running_max` rows with a header.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("member,label,p,q,input_norm,output_norm,ratio,running_max\n");
        for (i, r) in self.rows.iter().enumerate() {
            writeln!(
                s,
                "{i},\"{}\",{},{},{:.16e},{:.16e},{:.16e},{:.16e}",
                r.label, self.p, self.q, r.input_norm, r.output_norm, r.ratio, r.running_max
            )
            .unwrap();
        }
        s
    }
}

/// `max ||op f||_q / ||f||_p` over the family, with the running maximum.
pub fn operator_norm_scan(
    op: &Projector,
    p: f64,
    q: f64,
    family: &[TestFunction],
) -> Result<NormRateReport, TransformError> {
    if !(p > 1.0 && p.is_finite()) {
        return Err(TransformError::Exponent(p));
    }
    if !(q >= p && q.is_finite()) {
        return Err(TransformError::Exponent(q));
    }
    let norms: Vec<(f64, f64)> = family
        .par_iter()
        .map(|t| {
            let out = op.apply(&t.function)?;
            Ok((t.function.lp_norm(p).value, out.lp_norm(q).value))
        })
        .collect::<Result<_, TransformError>>()?;
    let mut running = 0.0f64;
    let rows = family
        .iter()
        .zip(norms)
        .map(|(t, (a, b))| {
            let ratio = b / a;
            running = running.max(ratio);
            NormRateRow { label: t.label.clone(), input_norm: a, output_norm: b, ratio, running_max: running }
        })
        .collect();
    Ok(NormRateReport { p, q, rows })
}
