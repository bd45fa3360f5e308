//! Truncated prolate expansions `Psi_N f`, `Phi_N f` and their convergence
//! towards the band-limited projection.

mod report;

pub use report::{Coefficient, ExpansionReport, LpDivergenceReport, ProbeRow};

use crate::bessel_bases::{
    sample_spherical_j_all, sample_spherical_j_hankel_all, spherical_j_hankel_tail, spherical_j_tail, Domain,
    Family, PanelGrid, SampledFunction,
};
use crate::prolate_core::ProlateBasis;
use crate::tail::{TailError, TailModel, Wave};
use crate::transforms::{fit_tail, output_grid, SpectralProjector, TransformError};
use rayon::prelude::*;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ExpansionError {
    #[error("N_max = {n_max} needs K >= N_max + {margin}, got K = {k}")]
    Truncation { n_max: usize, k: usize, margin: usize },
    #[error("function domain does not match the basis family")]
    FamilyMismatch,
    #[error("real-line input needs a grid symmetric about 0")]
    Asymmetric,
    #[error("exponent must lie in [1, inf), got {0}")]
    Exponent(f64),
    #[error("p = 1 needs a band-limited input; projection residual {0:e}")]
    NotBandLimited(f64),
    #[error(transparent)]
    Transform(#[from] TransformError),
    #[error(transparent)]
    Tail(#[from] TailError),
}

/// Columns kept clear of the truncation edge of the basis.
pub const EXPANSION_MARGIN: usize = 10;
/// Per-coefficient quadrature tail above which a coefficient is flagged.
pub const COEFFICIENT_TAIL_LIMIT: f64 = 1e-6;
/// Error level a probe must end below to count as converged.
pub const PLATEAU_LIMIT: f64 = 1e-3;
/// Relative residual `|P f - f|` certifying band limitation.
pub const BAND_LIMIT_RESIDUAL: f64 = 1e-6;

/// Ten probes `i sqrt(2) / 10`, `i = 1..=10`, inside `(0, 2)`.
pub fn default_probes() -> Vec<f64> {
    (1..=10).map(|i| i as f64 * std::f64::consts::SQRT_2 / 10.0).collect()
}

/// Spherical Bessel family of `basis` sampled on `grid`.
fn bessel_family(basis: &ProlateBasis, grid: &PanelGrid) -> Vec<SampledFunction> {
    match basis.family {
        Family::Fourier => sample_spherical_j_all(basis.k - 1, basis.c, grid),
        Family::Hankel(a) => sample_spherical_j_hankel_all(basis.k - 1, a, basis.c, grid),
    }
}

fn check_input(f: &SampledFunction, basis: &ProlateBasis) -> Result<(), ExpansionError> {
    match (basis.family, f.domain) {
        (Family::Fourier, Domain::RealLineTruncated) => {
            if (f.grid.upper() + f.grid.lower()).abs() > 1e-9 * f.grid.upper() {
                return Err(ExpansionError::Asymmetric);
            }
            Ok(())
        }
        (Family::Hankel(_), Domain::HalfLineTruncated) => Ok(()),
        _ => Err(ExpansionError::FamilyMismatch),
    }
}

/// Node ranges of the outermost panel on each side of the grid.
fn outer_nodes(f: &SampledFunction) -> Vec<usize> {
    let g = &f.grid;
    let per = g.len() / g.panels();
    let n = g.len();
    match f.domain {
        Domain::RealLineTruncated => (0..per).chain(n - per..n).collect(),
        _ => (n - per..n).collect(),
    }
}

/// Highest-power waves of a tail on each side: the last retained term of its
/// asymptotic series.
fn last_tail_terms(tail: &TailModel) -> Option<TailModel> {
    if tail.is_zero() {
        return None;
    }
    let top = |w: &[Wave]| {
        let p = w.iter().map(|v| v.power).max();
        w.iter().filter(|v| Some(v.power) == p).copied().collect()
    };
    Some(TailModel { start: tail.start, right: top(&tail.right), left: top(&tail.left) })
}

/// `a_n = <f, psi_n>` for `n < K` by truncated-domain quadrature.
///
/// The quadrature tail of a coefficient is the part carried by the outermost
/// panels when `f` has no tail model, and the part carried by the last term
/// of the tail model otherwise.
pub fn expansion_coefficients(f: &SampledFunction, basis: &ProlateBasis) -> Result<Vec<Coefficient>, ExpansionError> {
    check_input(f, basis)?;
    coefficients_from(f, basis, &bessel_family(basis, &f.grid))
}

fn coefficients_from(
    f: &SampledFunction,
    basis: &ProlateBasis,
    js: &[SampledFunction],
) -> Result<Vec<Coefficient>, ExpansionError> {
    let outer = outer_nodes(f);
    let last = last_tail_terms(&f.tail);
    let moments: Vec<(f64, f64)> = js
        .par_iter()
        .map(|j| {
            let edge = match &last {
                None => outer.iter().map(|&i| f.grid.weights[i] * f.values[i] * j.values[i]).sum(),
                Some(_) if j.tail.is_zero() => 0.0,
                Some(t) => t.inner(&j.tail)?,
            };
            Ok((f.inner(j)?, edge))
        })
        .collect::<Result<_, TailError>>()?;
    Ok((0..basis.k)
        .map(|n| {
            let (mut value, mut edge) = (0.0, 0.0);
            for (k, (g, e)) in moments.iter().enumerate() {
                value += basis.b[(k, n)] * g;
                edge += basis.b[(k, n)] * e;
            }
            let quadrature_tail = edge.abs();
            Coefficient { n, value, quadrature_tail, flagged: quadrature_tail > COEFFICIENT_TAIL_LIMIT }
        })
        .collect())
}

/// `Psi_N f(x)` (or `Phi_N f(x)`) from precomputed coefficients, summed in
/// ascending `n`.
pub fn partial_sum(basis: &ProlateBasis, coefficients: &[Coefficient], n: usize, x: f64) -> f64 {
    let psi = basis.eval_all(x);
    coefficients.iter().take(n + 1).zip(&psi).map(|(a, v)| a.value * v).sum()
}

/// Reference `P_c f` (or `P_c^alpha f`) from the frequency side, reaching `x_max`.
pub fn reference_projector(
    f: &SampledFunction,
    basis: &ProlateBasis,
    x_max: f64,
) -> Result<SpectralProjector, ExpansionError> {
    Ok(match basis.family {
        Family::Fourier => SpectralProjector::fourier(f, basis.c, x_max)?,
        Family::Hankel(a) => SpectralProjector::hankel(f, a, basis.c, x_max)?,
    })
}

struct Engine<'a> {
    f: &'a SampledFunction,
    basis: &'a ProlateBasis,
    n_max: usize,
    coefficients: Vec<Coefficient>,
    out: PanelGrid,
    offset: usize,
    bessel: Vec<SampledFunction>,
    reference: SpectralProjector,
}

impl<'a> Engine<'a> {
    fn new(f: &'a SampledFunction, basis: &'a ProlateBasis, n_max: usize) -> Result<Self, ExpansionError> {
        if n_max + EXPANSION_MARGIN > basis.k {
            return Err(ExpansionError::Truncation { n_max, k: basis.k, margin: EXPANSION_MARGIN });
        }
        check_input(f, basis)?;
        let bessel = bessel_family(basis, &f.grid);
        let coefficients = coefficients_from(f, basis, &bessel)?;
        let (out, offset) = output_grid(&f.grid, f.domain)?;
        let reference = reference_projector(f, basis, out.upper())?;
        Ok(Engine { f, basis, n_max, coefficients, out, offset, bessel, reference })
    }

    /// Reference sampled on the output grid with a fitted tail.
    fn reference_function(&self) -> SampledFunction {
        let values = self.reference.at_all(&self.out.nodes);
        let tail = fit_tail(&self.out, &values, self.f.domain, self.basis.c.value());
        SampledFunction::from_values(self.out.clone(), self.f.domain, values, tail)
    }

    /// `max |P f - f| / max |f|` on the output grid.
    fn band_residual(&self, reference: &SampledFunction) -> f64 {
        let own = &self.f.values[self.offset..self.offset + self.out.len()];
        let peak = own.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        let worst = own.iter().zip(&reference.values).fold(0.0f64, |m, (a, b)| m.max((a - b).abs()));
        worst / peak.max(f64::MIN_POSITIVE)
    }

    /// `||Psi_N f - P f||_p` for `N = 0..=n_max`.
    fn lp_errors(&self, reference: &SampledFunction, p: f64) -> Result<Vec<f64>, ExpansionError> {
        let basis = self.basis;
        let k = basis.k;
        let r = self.out.upper();
        let js = self.bessel_on_output();
        let tails: Vec<TailModel> = (0..k)
            .map(|i| match basis.family {
                Family::Fourier => spherical_j_tail(i, basis.c, r),
                Family::Hankel(a) => spherical_j_hankel_tail(i, a, basis.c, r),
            })
            .collect();
        // Bessel-basis coefficients of Psi_N f, accumulated in ascending n
        let mut d = vec![0.0; k];
        let mut per_n = Vec::with_capacity(self.n_max + 1);
        for n in 0..=self.n_max {
            let a = self.coefficients[n].value;
            for (i, di) in d.iter_mut().enumerate() {
                *di += basis.b[(i, n)] * a;
            }
            per_n.push(d.clone());
        }
        per_n
            .par_iter()
            .map(|d| {
                let mut values: Vec<f64> = reference.values.iter().map(|v| -v).collect();
                let mut tail = reference.tail.scale(-1.0);
                for ((di, j), t) in d.iter().zip(&js).zip(&tails) {
                    for (v, jv) in values.iter_mut().zip(j.iter()) {
                        *v += di * jv;
                    }
                    tail = tail.add(&t.scale(*di))?;
                }
                let diff = SampledFunction::from_values(self.out.clone(), self.f.domain, values, tail);
                Ok(diff.lp_norm(p).value)
            })
            .collect()
    }

    fn bessel_on_output(&self) -> Vec<&[f64]> {
        self.bessel.iter().map(|j| &j.values[self.offset..self.offset + self.out.len()]).collect()
    }

    fn run(
        &self,
        reference_fn: &SampledFunction,
        p: f64,
        probes: &[f64],
        band_limited: bool,
    ) -> Result<ExpansionReport, ExpansionError> {
        let band_residual = self.band_residual(reference_fn);
        if band_limited && band_residual > BAND_LIMIT_RESIDUAL {
            return Err(ExpansionError::NotBandLimited(band_residual));
        }
        let lp_error = self.lp_errors(reference_fn, p)?;
        let reference = self.reference.at_all(probes);
        let psi: Vec<Vec<f64>> = probes.par_iter().map(|&x| self.basis.eval_all(x)).collect();
        let k = self.basis.k;
        let mut values = vec![vec![0.0; probes.len()]; self.n_max + 1];
        let mut tail_bound = vec![vec![0.0; probes.len()]; self.n_max + 1];
        for (i, row) in psi.iter().enumerate() {
            let mut acc = 0.0;
            for n in 0..=self.n_max {
                acc += self.coefficients[n].value * row[n];
                values[n][i] = acc;
            }
            // absolute tails summed from the far end so that they nest
            let mut tail = 0.0;
            for n in (0..k).rev() {
                if n <= self.n_max {
                    tail_bound[n][i] = tail;
                }
                tail += self.coefficients[n].value.abs() * row[n].abs();
            }
        }
        let abs_error: Vec<Vec<f64>> = values
            .iter()
            .map(|row| row.iter().zip(&reference).map(|(v, r)| (v - r).abs()).collect())
            .collect();
        Ok(ExpansionReport::assemble(
            self.basis.family,
            p,
            self.n_max,
            probes.to_vec(),
            self.coefficients.clone(),
            reference,
            values,
            abs_error,
            lp_error,
            tail_bound,
            band_residual,
        ))
    }
}

/// Coefficients, partial sums at `probes` and `L^p` errors against the
/// projection for `N <= n_max`. `p = 1` requires a band-limited `f`.
pub fn expansion_report(
    f: &SampledFunction,
    basis: &ProlateBasis,
    n_max: usize,
    p: f64,
    probes: &[f64],
) -> Result<ExpansionReport, ExpansionError> {
    if !(p >= 1.0 && p.is_finite()) {
        return Err(ExpansionError::Exponent(p));
    }
    let engine = Engine::new(f, basis, n_max)?;
    engine.run(&engine.reference_function(), p, probes, p == 1.0)
}

/// As [`expansion_report`] for several exponents, sharing the coefficients
/// and the reference projection.
pub fn expansion_reports(
    f: &SampledFunction,
    basis: &ProlateBasis,
    n_max: usize,
    ps: &[f64],
    probes: &[f64],
) -> Result<Vec<ExpansionReport>, ExpansionError> {
    if let Some(&p) = ps.iter().find(|p| !(**p >= 1.0 && p.is_finite())) {
        return Err(ExpansionError::Exponent(p));
    }
    let engine = Engine::new(f, basis, n_max)?;
    let reference = engine.reference_function();
    ps.iter().map(|&p| engine.run(&reference, p, probes, p == 1.0)).collect()
}

/// `Psi_N f` against `P_c f` for `N <= n_max`, measured in `L^2` at the
/// default probes.
pub fn expand(f: &SampledFunction, basis: &ProlateBasis, n_max: usize) -> Result<ExpansionReport, ExpansionError> {
    expansion_report(f, basis, n_max, 2.0, &default_probes())
}

/// Convergence of `Psi_N f` (`Phi_N f`) to the projection at `probes` for
/// `N <= K - 10`.
pub fn converge_report(
    f: &SampledFunction,
    basis: &ProlateBasis,
    p: f64,
    probes: &[f64],
) -> Result<ExpansionReport, ExpansionError> {
    expansion_report(f, basis, basis.k.saturating_sub(EXPANSION_MARGIN), p, probes)
}

/// `||Psi_N f - P_c f||_p` against `N`, tabulated without a verdict.
pub fn lp_divergence_probe(
    f: &SampledFunction,
    basis: &ProlateBasis,
    p: f64,
) -> Result<LpDivergenceReport, ExpansionError> {
    if !(p > 1.0 && p.is_finite()) {
        return Err(ExpansionError::Exponent(p));
    }
    let n_max = basis.k.saturating_sub(EXPANSION_MARGIN);
    let engine = Engine::new(f, basis, n_max)?;
    let reference = engine.reference_function();
    let errors = engine.lp_errors(&reference, p)?;
    Ok(LpDivergenceReport { p, errors })
}
