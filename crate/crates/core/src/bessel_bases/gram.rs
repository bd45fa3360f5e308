use super::spherical::{spherical_j_all, spherical_j_hankel_all};
use super::{Bandwidth, Family};
use crate::quadrature::QuadratureRule;
use nalgebra::DMatrix;
use rayon::prelude::*;

/// Quadrature rule used for the concentration Gram matrix.
pub fn gram_rule(family: Family, c: Bandwidth, k: usize) -> QuadratureRule {
    let n = k + (2.0 * c.value()).ceil() as usize + 20;
    match family {
        Family::Fourier => QuadratureRule::gauss_legendre(n, -1.0, 1.0),
        Family::Hankel(_) => {
            // graded towards 0 for the x^{2 alpha + 1} endpoint behaviour
            let mut breaks: Vec<f64> = (0..=20).rev().map(|i| 0.5f64.powi(i)).collect();
            breaks.insert(0, 0.0);
            QuadratureRule::from_breakpoints(&breaks, n)
        }
    }
}

/// `A_{km} = int_{-1}^{1} j_k j_m` (Fourier) or `int_0^1 tilde j_k tilde j_m` (Hankel).
pub fn gram_time_limited(family: Family, c: Bandwidth, k: usize) -> DMatrix<f64> {
    assert!(k >= 1, "Gram matrix needs K >= 1");
    let rule = gram_rule(family, c, k);
    let rows: Vec<Vec<f64>> = rule
        .nodes
        .par_iter()
        .map(|&x| match family {
            Family::Fourier => spherical_j_all(k - 1, c, x),
            Family::Hankel(alpha) => spherical_j_hankel_all(k - 1, alpha, c, x),
        })
        .collect();
    let mut a = DMatrix::zeros(k, k);
    for i in 0..k {
        for j in i..k {
            if family == Family::Fourier && (i + j) % 2 == 1 {
                // odd integrand on a symmetric interval
                continue;
            }
            let mut s = 0.0;
            for (w, r) in rule.weights.iter().zip(&rows) {
                s += w * r[i] * r[j];
            }
            a[(i, j)] = s;
            a[(j, i)] = s;
        }
    }
    a
}
