use super::construct::{fourier_prolates, gram_prolates, hankel_prolates, Eigenpair};
use super::ProlateError;
use crate::bessel_bases::{
    sample_spherical_j_all, sample_spherical_j_hankel_all, spherical_j_all, spherical_j_hankel_all, Bandwidth,
    Family, PanelGrid, SampledFunction,
};
use crate::specfun::Order;
use crate::tail::TailModel;
use nalgebra::DMatrix;

/// Default number of trailing columns treated as truncation-polluted.
pub const DEFAULT_MARGIN: usize = 10;

/// Prolate basis: `psi_n = sum_k B[(k, n)] j_k` (Fourier family) or
/// `phi_n = sum_k B[(k, n)] tilde j_k` (Hankel family).
#[derive(Debug, Clone, PartialEq)]
pub struct ProlateBasis {
    pub family: Family,
    pub c: Bandwidth,
    pub k: usize,
    /// Row `k`, column `n`.
    pub b: DMatrix<f64>,
    /// Concentration eigenvalues, strictly decreasing.
    pub lambdas: Vec<f64>,
    pub margin: usize,
}

/// The Hankel-family basis carries the same data.
pub type CircularProlateBasis = ProlateBasis;

/// How the eigenproblem is solved.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Construction {
    /// Commuting differential operator with ratio-recurrence eigenvectors.
    Tridiagonal,
    /// Dense eigen-decomposition of the `K x K` concentration Gram matrix.
    Gram,
}

pub fn build_prolate_basis(c: Bandwidth, k: usize) -> Result<ProlateBasis, ProlateError> {
    build_basis(Family::Fourier, c, k, Construction::Tridiagonal)
}

pub fn build_circular_prolate_basis(
    alpha: Order,
    c: Bandwidth,
    k: usize,
) -> Result<CircularProlateBasis, ProlateError> {
    build_basis(Family::Hankel(alpha), c, k, Construction::Tridiagonal)
}

/// Default truncation `ceil(2c/pi) + 40`.
pub fn default_truncation(c: Bandwidth) -> usize {
    (2.0 * c.value() / std::f64::consts::PI).ceil() as usize + 40
}

pub fn build_basis(
    family: Family,
    c: Bandwidth,
    k: usize,
    how: Construction,
) -> Result<ProlateBasis, ProlateError> {
    if k < 4 {
        return Err(ProlateError::Truncation(k));
    }
    let (lambdas, mut b) = match how {
        Construction::Tridiagonal => {
            let pairs: Vec<Eigenpair> = match family {
                Family::Fourier => fourier_prolates(c, k, k),
                Family::Hankel(alpha) => hankel_prolates(alpha, c, k, k),
            };
            for (n, w) in pairs.windows(2).enumerate() {
                let gap = w[1].chi - w[0].chi;
                if gap <= 1e-10 * (1.0 + w[0].chi.abs()) {
                    return Err(ProlateError::Degenerate { index: n, gap });
                }
            }
            let lambdas = pairs.iter().map(|p| p.lambda).collect();
            let b = DMatrix::from_fn(k, k, |r, col| pairs[col].coeffs[r]);
            (lambdas, b)
        }
        Construction::Gram => gram_prolates(family, c, k),
    };
    check_spectrum(&lambdas, how)?;
    normalise_signs(&mut b);
    Ok(ProlateBasis { family, c, k, b, lambdas, margin: DEFAULT_MARGIN.min(k / 2) })
}

fn check_spectrum(lambdas: &[f64], how: Construction) -> Result<(), ProlateError> {
    for (n, w) in lambdas.windows(2).enumerate() {
        let gap = w[0] - w[1];
        let resolved = match how {
            // the Gram route only resolves eigenvalues above round-off
            Construction::Gram => w[0] > 1e-10,
            Construction::Tridiagonal => true,
        };
        let too_close = match how {
            Construction::Gram => gap < 1e-13,
            // eigenvalues below the f64 range underflow to zero; their
            // separation is certified by the chi gaps instead
            Construction::Tridiagonal => !(gap > 0.0) && w[0] >= f64::MIN_POSITIVE,
        };
        if resolved && too_close {
            return Err(ProlateError::Degenerate { index: n, gap });
        }
    }
    if let Some(&l) = lambdas.first() {
        if !(l < 1.0 + 1e-12) {
            return Err(ProlateError::Spectrum(l));
        }
    }
    Ok(())
}

/// Scale each column so that its largest-magnitude entry is positive.
pub fn normalise_signs(b: &mut DMatrix<f64>) {
    for mut col in b.column_iter_mut() {
        let mut best = 0.0f64;
        let mut sign = 1.0;
        for v in col.iter() {
            if v.abs() > best {
                best = v.abs();
                sign = v.signum();
            }
        }
        if sign < 0.0 {
            col.neg_mut();
        }
    }
}

/// State of an evaluation request relative to the pollution margin.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EvalState {
    Clean,
    /// `n` lies within the truncation margin; values are less reliable.
    WithinMargin,
}

impl ProlateBasis {
    pub fn alpha(&self) -> Option<Order> {
        match self.family {
            Family::Fourier => None,
            Family::Hankel(a) => Some(a),
        }
    }

    pub fn state(&self, n: usize) -> EvalState {
        if n + self.margin >= self.k {
            EvalState::WithinMargin
        } else {
            EvalState::Clean
        }
    }

    /// Spherical Bessel values `0..K` of this basis' family at `x`.
    pub fn bessel_values(&self, x: f64) -> Vec<f64> {
        match self.family {
            Family::Fourier => spherical_j_all(self.k - 1, self.c, x),
            Family::Hankel(a) => spherical_j_hankel_all(self.k - 1, a, self.c, x),
        }
    }

    /// `sum_k B[(k, n)] v[k]` in ascending `k`.
    pub fn combine(&self, n: usize, v: &[f64]) -> f64 {
        let mut acc = 0.0;
        for (k, vk) in v.iter().enumerate().take(self.k) {
            acc += self.b[(k, n)] * vk;
        }
        acc
    }

    /// All prolates `0..K` at `x`.
    pub fn eval_all(&self, x: f64) -> Vec<f64> {
        let v = self.bessel_values(x);
        (0..self.k).map(|n| self.combine(n, &v)).collect()
    }

    /// Orthonormality defect `max |B^T B - I|` over the leading `cols` columns.
    pub fn orthogonality_defect(&self, cols: usize) -> f64 {
        let sub = self.b.columns(0, cols.min(self.k));
        let g = sub.transpose() * sub;
        let mut worst = 0.0f64;
        for i in 0..g.nrows() {
            for j in 0..g.ncols() {
                let e = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((g[(i, j)] - e).abs());
            }
        }
        worst
    }
}

/// `psi_n(x)`.
pub fn evaluate_psi(basis: &ProlateBasis, n: usize, x: f64) -> Result<(f64, EvalState), ProlateError> {
    if basis.family != Family::Fourier {
        return Err(ProlateError::FamilyMismatch);
    }
    if n >= basis.k {
        return Err(ProlateError::Index(n));
    }
    Ok((basis.combine(n, &basis.bessel_values(x)), basis.state(n)))
}

/// `phi_n^alpha(x)`, `x > 0`.
pub fn evaluate_phi(basis: &ProlateBasis, n: usize, x: f64) -> Result<(f64, EvalState), ProlateError> {
    if !matches!(basis.family, Family::Hankel(_)) {
        return Err(ProlateError::FamilyMismatch);
    }
    if n >= basis.k {
        return Err(ProlateError::Index(n));
    }
    if x <= 0.0 {
        return Err(ProlateError::Domain(x));
    }
    Ok((basis.combine(n, &basis.bessel_values(x)), basis.state(n)))
}

/// Prolates `0..count` sampled on `grid`, with tails assembled from the
/// spherical Bessel tails.
pub fn sample_prolates(basis: &ProlateBasis, count: usize, grid: &PanelGrid) -> Result<Vec<SampledFunction>, ProlateError> {
    if count > basis.k {
        return Err(ProlateError::Index(count));
    }
    let js = match basis.family {
        Family::Fourier => sample_spherical_j_all(basis.k - 1, basis.c, grid),
        Family::Hankel(a) => sample_spherical_j_hankel_all(basis.k - 1, a, basis.c, grid),
    };
    Ok((0..count)
        .map(|n| {
            let mut values = vec![0.0; grid.len()];
            let mut tail = TailModel::zero(js[0].tail.start);
            for (k, j) in js.iter().enumerate() {
                let b = basis.b[(k, n)];
                for (v, jv) in values.iter_mut().zip(&j.values) {
                    *v += b * jv;
                }
                tail = tail.add(&j.tail.scale(b)).expect("shared radius");
            }
            SampledFunction::from_values(grid.clone(), js[0].domain, values, tail)
        })
        .collect())
}
