use super::PLATEAU_LIMIT;
use crate::bessel_bases::Family;
use std::fmt::Write as _;

/// `a_n = <f, psi_n>` with the share of the integral on the outermost panels.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Coefficient {
    pub n: usize,
    pub value: f64,
    pub quadrature_tail: f64,
    /// `quadrature_tail` exceeds the per-coefficient limit.
    pub flagged: bool,
}

/// One CSV row.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProbeRow {
    pub n: usize,
    pub probe_index: usize,
    pub x: f64,
    pub abs_error: f64,
    pub lp_error: f64,
    pub tail_bound: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExpansionReport {
    pub family: Family,
    pub p: f64,
    pub n_max: usize,
    pub probes: Vec<f64>,
    pub coefficients: Vec<Coefficient>,
    /// Projection of `f` at each probe.
    pub reference: Vec<f64>,
    /// `values[N][i] = Psi_N f(x_i)`.
    pub values: Vec<Vec<f64>>,
    pub abs_error: Vec<Vec<f64>>,
    /// `||Psi_N f - P f||_p` by quadrature.
    pub lp_error: Vec<f64>,
    /// `sum_{n > N} |a_n| |psi_n(x_i)|` over the computed coefficients.
    pub tail_bound: Vec<Vec<f64>>,
    /// Per probe, least-squares slope of `log10` of the monotone error
    /// envelope against `N` (over values above `1e-13`).
    pub envelope_slope: Vec<f64>,
    /// Probes whose error is still above the plateau limit at `n_max`.
    pub nonconvergent: Vec<usize>,
    /// `max |P f - f| / max |f|`: zero for band-limited input.
    pub band_residual: f64,
}

impl ExpansionReport {
    #[allow(clippy::too_many_arguments)]
    pub(super) fn assemble(
        family: Family,
        p: f64,
        n_max: usize,
        probes: Vec<f64>,
        coefficients: Vec<Coefficient>,
        reference: Vec<f64>,
        values: Vec<Vec<f64>>,
        abs_error: Vec<Vec<f64>>,
        lp_error: Vec<f64>,
        tail_bound: Vec<Vec<f64>>,
        band_residual: f64,
    ) -> Self {
        let mut report = ExpansionReport {
            family,
            p,
            n_max,
            probes,
            coefficients,
            reference,
            values,
            abs_error,
            lp_error,
            tail_bound,
            envelope_slope: Vec::new(),
            nonconvergent: Vec::new(),
            band_residual,
        };
        for i in 0..report.probes.len() {
            let env = report.envelope(i);
            report.envelope_slope.push(log_slope(&env));
            if env[n_max] > PLATEAU_LIMIT {
                report.nonconvergent.push(i);
            }
        }
        report
    }

    /// `max_{M >= N} |Psi_M f(x_i) - P f(x_i)|` for each `N`.
    pub fn envelope(&self, i: usize) -> Vec<f64> {
        let mut env = vec![0.0; self.n_max + 1];
        let mut run = 0.0f64;
        for n in (0..=self.n_max).rev() {
            run = run.max(self.abs_error[n][i]);
            env[n] = run;
        }
        env
    }

    /// Largest pointwise error over the probes at truncation `n`.
    pub fn max_error_at(&self, n: usize) -> f64 {
        self.abs_error[n].iter().fold(0.0, |m, v| m.max(*v))
    }

    /// Smallest `N` from which every probe stays below `tol`.
    pub fn settled_below(&self, tol: f64) -> Option<usize> {
        let mut first = None;
        for n in (0..=self.n_max).rev() {
            if self.max_error_at(n) < tol {
                first = Some(n);
            } else {
                break;
            }
        }
        first
    }

    /// Coefficients whose quadrature tail exceeds the limit.
    pub fn flagged_coefficients(&self) -> Vec<usize> {
        self.coefficients.iter().filter(|c| c.flagged).map(|c| c.n).collect()
    }

    pub fn rows(&self) -> Vec<ProbeRow> {
        let mut rows = Vec::with_capacity((self.n_max + 1) * self.probes.len());
        for n in 0..=self.n_max {
            for (i, &x) in self.probes.iter().enumerate() {
                rows.push(ProbeRow {
                    n,
                    probe_index: i,
                    x,
                    abs_error: self.abs_error[n][i],
                    lp_error: self.lp_error[n],
                    tail_bound: self.tail_bound[n][i],
                });
            }
        }
        rows
    }

    /// `N,probe_index,x,abs_error,lp_error,tail_bound` with a header.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("N,probe_index,x,abs_error,lp_error,tail_bound\n");
        for r in self.rows() {
            writeln!(
                s,
                "{},{},{:.16e},{:.16e},{:.16e},{:.16e}",
                r.n, r.probe_index, r.x, r.abs_error, r.lp_error, r.tail_bound
            )
            .unwrap();
        }
        s
    }

    /// `n,coefficient,quadrature_tail,flagged` with a header.
    pub fn coefficients_csv(&self) -> String {
        let mut s = String::from("n,coefficient,quadrature_tail,flagged\n");
        for c in &self.coefficients {
            writeln!(s, "{},{:.16e},{:.16e},{}", c.n, c.value, c.quadrature_tail, c.flagged).unwrap();
        }
        s
    }
}

/// Least-squares slope of `log10 v` against the index, over entries above
/// the quadrature floor.
fn log_slope(v: &[f64]) -> f64 {
    let pts: Vec<(f64, f64)> =
        v.iter().enumerate().filter(|(_, e)| **e > 1e-13).map(|(n, e)| (n as f64, e.log10())).collect();
    if pts.len() < 2 {
        return 0.0;
    }
    let m = pts.len() as f64;
    let (sx, sy) = pts.iter().fold((0.0, 0.0), |(a, b), (x, y)| (a + x, b + y));
    let (mx, my) = (sx / m, sy / m);
    let (num, den) = pts.iter().fold((0.0, 0.0), |(a, b), (x, y)| (a + (x - mx) * (y - my), b + (x - mx).powi(2)));
    num / den
}

/// `||Psi_N f - P f||_p` against `N`.
#[derive(Debug, Clone, PartialEq)]
pub struct LpDivergenceReport {
    pub p: f64,
    pub errors: Vec<f64>,
}

impl LpDivergenceReport {
    /// `N,p,lp_error` with a header.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("N,p,lp_error\n");
        for (n, e) in self.errors.iter().enumerate() {
            writeln!(s, "{n},{},{:.16e}", self.p, e).unwrap();
        }
        s
    }
}
