use super::TransformError;
use crate::bessel_bases::{Domain, PanelGrid, PER_PANEL};
use crate::tail::{TailModel, Wave};
use nalgebra::{DMatrix, DVector};

/// Number of inverse powers in a fitted tail.
pub const TAIL_POWERS: i32 = 5;

/// Panels of `grid` within half its radius, and the index of the first
/// retained node in the original grid.
pub fn output_grid(grid: &PanelGrid, domain: Domain) -> Result<(PanelGrid, usize), TransformError> {
    let r = grid.upper();
    let limit = 0.5 * r * (1.0 + 1e-12);
    let (lo, hi) = match domain {
        Domain::RealLineTruncated => {
            if (grid.lower() + r).abs() > 1e-9 * r {
                return Err(TransformError::Domain("real-line grid must be symmetric"));
            }
            let hi = grid.breaks.iter().rposition(|b| *b <= limit).unwrap();
            let x = grid.breaks[hi];
            let lo = grid
                .breaks
                .iter()
                .position(|b| (b + x).abs() <= 1e-9 * r)
                .ok_or(TransformError::Domain("real-line grid must be symmetric"))?;
            (lo, hi)
        }
        Domain::HalfLineTruncated => {
            if grid.lower() != 0.0 {
                return Err(TransformError::Domain("half-line grid must start at 0"));
            }
            (0, grid.breaks.iter().rposition(|b| *b <= limit).unwrap())
        }
        Domain::Interval => (0, grid.breaks.len() - 1),
    };
    if hi <= lo {
        return Err(TransformError::Domain("grid too coarse for an output region"));
    }
    Ok((PanelGrid::from_breaks(grid.breaks[lo..=hi].to_vec()), lo * PER_PANEL))
}

/// Least-squares tail `sum_p Re[A_p (X/u)^p e^{i freq u}]`, `p = 1..=TAIL_POWERS`,
/// from the samples with `|x|` in `[X/2, X]`, `X` the grid radius.
pub fn fit_tail(grid: &PanelGrid, values: &[f64], domain: Domain, freq: f64) -> TailModel {
    let x_max = grid.upper();
    let mut tail = TailModel::zero(x_max);
    if domain == Domain::Interval {
        return tail;
    }
    let side = |sign: f64| -> Vec<Wave> {
        let pts: Vec<(f64, f64)> = grid
            .nodes
            .iter()
            .zip(values)
            .filter(|(x, _)| sign * **x >= 0.5 * x_max)
            .map(|(x, v)| (sign * x, *v))
            .collect();
        if pts.iter().all(|(_, v)| *v == 0.0) {
            return Vec::new();
        }
        let cols = 2 * TAIL_POWERS as usize;
        let a = DMatrix::from_fn(pts.len(), cols, |i, j| {
            let (u, _) = pts[i];
            let p = (j / 2) as i32 + 1;
            let s = (x_max / u).powi(p);
            if j % 2 == 0 {
                s * (freq * u).cos()
            } else {
                s * (freq * u).sin()
            }
        });
        let b = DVector::from_iterator(pts.len(), pts.iter().map(|(_, v)| *v));
        let sol = a.svd(true, true).solve(&b, 1e-14).expect("svd with both factors");
        (0..TAIL_POWERS as usize)
            .map(|k| Wave::cos_sin(k as i32 + 1, freq, sol[2 * k], sol[2 * k + 1]))
            .collect()
    };
    tail.right = side(1.0);
    if domain == Domain::RealLineTruncated {
        tail.left = side(-1.0);
    }
    tail
}
