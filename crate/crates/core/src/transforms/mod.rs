//! Hilbert and Hankel transforms, the Fourier and Hankel band-limiting
//! projectors, Muckenhoupt bracket estimates and operator-norm scans.

mod fit;
mod fourier;
mod hankel;
mod hankel_projector;
mod hilbert;
mod muckenhoupt;
mod normscan;
mod spectral;

pub use fit::{fit_tail, output_grid, TAIL_POWERS};
pub use fourier::{fourier_out_of_band, project_fourier, FourierRoute};
pub use hankel::{
    hankel_output_grid, hankel_transform, hankel_transform_at, kernel_tail_integral, HankelTransform,
};
pub use hankel_projector::{hankel_out_of_band, lommel_kernel, project_hankel, HankelRoute};
pub use hilbert::{hilbert_transform, HilbertTransform};
pub use muckenhoupt::{muckenhoupt_estimate, ApLevel, ApWeightReport, WeightSpec};
pub use normscan::{operator_norm_scan, NormRateReport, NormRateRow, Projector, TestFunction};
pub use spectral::{spectral_grid, SpectralProjector};

use crate::tail::TailError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum TransformError {
    #[error("grid resolves frequency {freq} with {nodes:.1} nodes per period; at least 8 are needed")]
    Resolution { freq: f64, nodes: f64 },
    #[error(transparent)]
    Tail(#[from] TailError),
    #[error("point {0} is not strictly inside the grid")]
    Outside(f64),
    #[error("unsupported input: {0}")]
    Domain(&'static str),
    #[error("truncation tail estimate {estimate:e} exceeds {limit:e} relative")]
    TailBound { estimate: f64, limit: f64 },
    #[error("input tail cannot be integrated against the kernel at x = {0}")]
    Unresolved(f64),
    #[error("exponent must lie in (1, inf), got {0}")]
    Exponent(f64),
}

/// Minimum nodes per period of the band-limit frequency.
pub const MIN_NODES_PER_PERIOD: f64 = 8.0;

pub(crate) fn check_resolution(
    grid: &crate::bessel_bases::PanelGrid,
    freq: f64,
) -> Result<(), TransformError> {
    let nodes = grid.nodes_per_period(freq);
    if nodes < MIN_NODES_PER_PERIOD {
        return Err(TransformError::Resolution { freq, nodes });
    }
    Ok(())
}
