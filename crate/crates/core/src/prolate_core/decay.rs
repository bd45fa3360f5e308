use super::ProlateBasis;
use nalgebra::DMatrix;

/// One tabulated column of the certificate.
#[derive(Debug, Clone, PartialEq)]
pub struct DecayRow {
    pub n: usize,
    /// `|b_0^n| n^2`.
    pub leading: f64,
    /// `max_{k >= 1} |b_k^n| n^{|k-n|}`.
    pub off_diagonal: f64,
    /// `k` attaining `off_diagonal`.
    pub worst_k: usize,
    /// `|b_n^n|`.
    pub diagonal: f64,
}

/// Empirical check of `|b_0^n| <= C0 n^{-2}` and `|b_k^n| <= C1 n^{-|k-n|}`.
///
/// The constants are fitted on a calibration window (the first third of
/// `[n0, K - margin)`) and the certificate passes iff every tabulated product
/// over the whole range stays within 10% of them.
#[derive(Debug, Clone, PartialEq)]
pub struct DecayCertificate {
    pub n0: usize,
    pub n_max: usize,
    pub calibration_end: usize,
    pub c0: f64,
    pub c1: f64,
    pub rows: Vec<DecayRow>,
    pub leading_pass: bool,
    pub off_diagonal_pass: bool,
}

impl DecayCertificate {
    pub fn passes(&self) -> bool {
        self.leading_pass && self.off_diagonal_pass
    }

    /// Worst observed product relative to the fitted constants.
    pub fn worst_ratios(&self) -> (f64, f64) {
        let l = self.rows.iter().map(|r| r.leading).fold(0.0, f64::max) / self.c0.max(f64::MIN_POSITIVE);
        let o = self.rows.iter().map(|r| r.off_diagonal).fold(0.0, f64::max) / self.c1.max(f64::MIN_POSITIVE);
        (l, o)
    }
}

pub fn certify_decay(basis: &ProlateBasis, n0: usize) -> DecayCertificate {
    certify_matrix(&basis.b, n0, basis.k.saturating_sub(basis.margin))
}

/// Certificate for an arbitrary coefficient matrix over columns `n0..n_end`.
pub fn certify_matrix(b: &DMatrix<f64>, n0: usize, n_end: usize) -> DecayCertificate {
    let n0 = n0.max(1);
    let n_end = n_end.min(b.ncols()).max(n0 + 1);
    let rows: Vec<DecayRow> = (n0..n_end)
        .map(|n| {
            let nf = n as f64;
            let mut off = 0.0f64;
            let mut worst_k = n;
            for k in 1..b.nrows() {
                if k == n {
                    continue;
                }
                let v = b[(k, n)].abs() * nf.powi((k as i64 - n as i64).unsigned_abs() as i32);
                if v > off {
                    off = v;
                    worst_k = k;
                }
            }
            DecayRow { n, leading: b[(0, n)].abs() * nf * nf, off_diagonal: off, worst_k, diagonal: b[(n, n)].abs() }
        })
        .collect();
    let calibration = ((rows.len() + 2) / 3).max(1);
    let calibration_end = n0 + calibration;
    let fit = |f: &dyn Fn(&DecayRow) -> f64| rows[..calibration].iter().map(f).fold(0.0, f64::max);
    // an exactly vanishing table (e.g. the identity) passes with C = 1
    let c0 = fit(&|r| r.leading).max(if rows.iter().all(|r| r.leading == 0.0) { 1.0 } else { 0.0 });
    let c1 = fit(&|r| r.off_diagonal).max(if rows.iter().all(|r| r.off_diagonal == 0.0) { 1.0 } else { 0.0 });
    let leading_pass = rows.iter().all(|r| r.leading <= 1.1 * c0);
    let off_diagonal_pass = rows.iter().all(|r| r.off_diagonal <= 1.1 * c1);
    DecayCertificate { n0, n_max: n_end - 1, calibration_end, c0, c1, rows, leading_pass, off_diagonal_pass }
}
