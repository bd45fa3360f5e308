//! Prolates from the commuting second-order operator, which is tridiagonal
//! in normalised Legendre (Fourier case) or Jacobi (Hankel case) bases.
//!
//! Eigenvalues come from a dense symmetric solver on each block; eigenvectors
//! are then rebuilt from ratio recurrences run from both ends towards the
//! peak entry, so that exponentially small leading coefficients keep full
//! relative accuracy. Concentration eigenvalues follow from those leading
//! coefficients.

use crate::bessel_bases::{Bandwidth, Family};
use crate::specfun::{gamma, jacobi_at_one, Order};
use nalgebra::{DMatrix, SymmetricEigen};

/// Symmetric tridiagonal matrix.
pub(crate) struct Tridiagonal {
    pub diag: Vec<f64>,
    pub off: Vec<f64>,
}

impl Tridiagonal {
    fn dense(&self) -> DMatrix<f64> {
        let n = self.diag.len();
        let mut m = DMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = self.diag[i];
            if i + 1 < n {
                m[(i, i + 1)] = self.off[i];
                m[(i + 1, i)] = self.off[i];
            }
        }
        m
    }

    /// Eigenvalues ascending with the matching eigenvectors as columns.
    fn eigen(&self) -> (Vec<f64>, DMatrix<f64>) {
        let e = SymmetricEigen::new(self.dense());
        let mut order: Vec<usize> = (0..self.diag.len()).collect();
        order.sort_by(|&a, &b| e.eigenvalues[a].total_cmp(&e.eigenvalues[b]));
        let vals = order.iter().map(|&i| e.eigenvalues[i]).collect();
        let vecs = DMatrix::from_fn(self.diag.len(), order.len(), |r, c| e.eigenvectors[(r, order[c])]);
        (vals, vecs)
    }

    /// Eigenvector for eigenvalue `chi`, peak index taken from `approx`.
    fn refined_vector(&self, chi: f64, approx: &[f64]) -> Vec<f64> {
        let n = self.diag.len();
        let peak = approx
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.abs().total_cmp(&b.1.abs()))
            .map(|(i, _)| i)
            .unwrap();
        let mut d = vec![0.0; n];
        d[peak] = 1.0;
        // forward ratios rho_j = d_j / d_{j-1}, j = 1..=peak
        if peak > 0 {
            let mut rho = vec![0.0; peak + 1];
            rho[1] = -(self.diag[0] - chi) / self.off[0];
            for j in 1..peak {
                rho[j + 1] = -(self.off[j - 1] / rho[j] + (self.diag[j] - chi)) / self.off[j];
            }
            for j in (1..=peak).rev() {
                d[j - 1] = d[j] / rho[j];
            }
        }
        // backward ratios sigma_j = d_j / d_{j-1}, j = peak+1..n-1
        if peak + 1 < n {
            let mut sigma = vec![0.0; n];
            sigma[n - 1] = -self.off[n - 2] / (self.diag[n - 1] - chi);
            for j in (peak + 1..n - 1).rev() {
                sigma[j] = -self.off[j - 1] / ((self.diag[j] - chi) + self.off[j] * sigma[j + 1]);
            }
            for j in peak + 1..n {
                d[j] = d[j - 1] * sigma[j];
            }
        }
        let norm = d.iter().map(|v| v * v).sum::<f64>().sqrt();
        let s = if approx[peak] < 0.0 { -1.0 } else { 1.0 };
        d.iter().map(|v| s * v / norm).collect()
    }
}

/// One prolate: its coefficient column (length `rows`), `lambda` and `chi`.
pub(crate) struct Eigenpair {
    pub coeffs: Vec<f64>,
    pub lambda: f64,
    pub chi: f64,
}

/// Working size of the Legendre/Jacobi expansion for `count` prolates.
pub(crate) fn working_size(count: usize, c: f64) -> usize {
    2 * count + (2.0 * c).ceil() as usize + 80
}

fn legendre_block(c: f64, parity: usize, size: usize) -> Tridiagonal {
    let c2 = c * c;
    let mut diag = Vec::with_capacity(size);
    let mut off = Vec::with_capacity(size);
    for j in 0..size {
        let k = (2 * j + parity) as f64;
        diag.push(k * (k + 1.0) + c2 * (2.0 * k * (k + 1.0) - 1.0) / ((2.0 * k + 3.0) * (2.0 * k - 1.0)));
        off.push(c2 * (k + 2.0) * (k + 1.0) / ((2.0 * k + 3.0) * ((2.0 * k + 1.0) * (2.0 * k + 5.0)).sqrt()));
    }
    off.pop();
    Tridiagonal { diag, off }
}

fn jacobi_block(alpha: f64, c: f64, size: usize) -> Tridiagonal {
    let c2 = c * c;
    let mut diag = Vec::with_capacity(size);
    let mut off = Vec::with_capacity(size);
    for m in 0..size {
        let mf = m as f64;
        let s = 2.0 * mf + alpha;
        // recurrence coefficients of the orthonormal Jacobi (alpha, 0) family
        let b = if alpha == 0.0 { 0.0 } else { -alpha * alpha / (s * (s + 2.0)) };
        let a = 2.0 * (mf + 1.0) * (mf + alpha + 1.0) / ((s + 2.0) * ((s + 1.0) * (s + 3.0)).sqrt());
        let chi0 = (s + 0.5) * (s + 1.5);
        diag.push(chi0 + 0.5 * c2 * (1.0 - b));
        off.push(-0.5 * c2 * a);
    }
    off.pop();
    Tridiagonal { diag, off }
}

/// `P_k(0)` and `P_k'(0)` for the normalised Legendre functions `sqrt(k+1/2) P_k`.
fn normalised_legendre_at_zero(kmax: usize) -> (Vec<f64>, Vec<f64>) {
    let mut p = vec![0.0; kmax + 2];
    p[0] = 1.0;
    for k in (2..=kmax + 1).step_by(2) {
        p[k] = -p[k - 2] * (k - 1) as f64 / k as f64;
    }
    let val: Vec<f64> = (0..=kmax).map(|k| (k as f64 + 0.5).sqrt() * p[k]).collect();
    let der: Vec<f64> = (0..=kmax)
        .map(|k| if k % 2 == 1 { (k as f64 + 0.5).sqrt() * k as f64 * p[k - 1] } else { 0.0 })
        .collect();
    (val, der)
}

/// Prolates `0..count` of the Fourier family with coefficients in the
/// `j_{k,c}` basis (length `rows`).
pub(crate) fn fourier_prolates(c: Bandwidth, count: usize, rows: usize) -> Vec<Eigenpair> {
    let cv = c.value();
    let size = working_size(count.max(rows), cv);
    let half = size / 2 + 1;
    let (p0, dp0) = normalised_legendre_at_zero(2 * half + 1);
    let mut blocks = Vec::new();
    for parity in 0..2 {
        let t = legendre_block(cv, parity, half);
        let (vals, vecs) = t.eigen();
        blocks.push((t, vals, vecs));
    }
    (0..count)
        .map(|n| {
            let parity = n % 2;
            let (t, vals, vecs) = &blocks[parity];
            let idx = n / 2;
            let chi = vals[idx];
            let approx: Vec<f64> = vecs.column(idx).iter().copied().collect();
            let d = t.refined_vector(chi, &approx);
            // |mu| from the value or slope at the origin
            let mu = if parity == 0 {
                let psi0: f64 = d.iter().enumerate().map(|(j, v)| v * p0[2 * j]).sum();
                2f64.sqrt() * d[0] / psi0
            } else {
                let dpsi0: f64 = d.iter().enumerate().map(|(j, v)| v * dp0[2 * j + 1]).sum();
                cv * (2.0f64 / 3.0).sqrt() * d[0] / dpsi0
            };
            let lambda = cv * mu * mu / (2.0 * std::f64::consts::PI);
            let mut coeffs = vec![0.0; rows];
            for (j, v) in d.iter().enumerate() {
                let k = 2 * j + parity;
                if k >= rows {
                    break;
                }
                let s = if ((k - parity) / 2 + n / 2) % 2 == 0 { 1.0 } else { -1.0 };
                // i^{k-n} = (-1)^{(k-n)/2}
                coeffs[k] = s * v;
            }
            Eigenpair { coeffs, lambda, chi }
        })
        .collect()
}

/// Prolates `0..count` of the Hankel family of order `alpha`.
pub(crate) fn hankel_prolates(alpha: Order, c: Bandwidth, count: usize, rows: usize) -> Vec<Eigenpair> {
    let (a, cv) = (alpha.value(), c.value());
    let size = working_size(count.max(rows), cv) / 2 + 10;
    let t = jacobi_block(a, cv, size);
    let (vals, vecs) = t.eigen();
    let at_one: Vec<f64> = (0..size)
        .map(|m| (2.0 * (2.0 * m as f64 + a + 1.0)).sqrt() * jacobi_at_one(m, a))
        .collect();
    let pre = cv.powf(a + 0.5) / (2f64.powf(a) * gamma(a + 1.0).unwrap() * (2.0 * (a + 1.0)).sqrt());
    (0..count)
        .map(|n| {
            let chi = vals[n];
            let approx: Vec<f64> = vecs.column(n).iter().copied().collect();
            let d = t.refined_vector(chi, &approx);
            let s: f64 = d.iter().zip(&at_one).map(|(x, y)| x * y).sum();
            let g = pre * d[0] / s;
            let lambda = cv * g * g;
            let mut coeffs = vec![0.0; rows];
            let take = rows.min(d.len());
            coeffs[..take].copy_from_slice(&d[..take]);
            Eigenpair { coeffs, lambda, chi }
        })
        .collect()
}

/// Concentration eigen-decomposition of the Gram matrix, descending.
pub(crate) fn gram_prolates(family: Family, c: Bandwidth, k: usize) -> (Vec<f64>, DMatrix<f64>) {
    let mut a = crate::bessel_bases::gram_time_limited(family, c, k);
    // entries far below round-off of the leading block break the QR sweeps
    let top = a.amax();
    a.iter_mut().filter(|v| v.abs() < 1e-40 * top).for_each(|v| *v = 0.0);
    let e = SymmetricEigen::new(a);
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by(|&x, &y| e.eigenvalues[y].total_cmp(&e.eigenvalues[x]));
    let vals = order.iter().map(|&i| e.eigenvalues[i]).collect();
    let vecs = DMatrix::from_fn(k, k, |r, col| e.eigenvectors[(r, order[col])]);
    (vals, vecs)
}
