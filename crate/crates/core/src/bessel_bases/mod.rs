//! Spherical Bessel bases `j_{n,c}` and `tilde j_{n,alpha,c}`, their
//! Fourier/Hankel images, sampled functions and concentration Gram matrices.

mod gram;
mod images;
mod lp;
mod sampled;
mod spherical;

pub use gram::{gram_rule, gram_time_limited};
pub use images::{fourier_image_j, hankel_image_j, FourierImage};
pub use lp::{lp_norm_bessel, lp_rate, predicted_exponent, LpError, LpRate, LpReport};
pub use sampled::{default_radius, Domain, LpNorm, PanelGrid, SampledFunction, PER_PANEL};
pub use spherical::{
    default_half_grid, default_real_grid, sample_spherical_j, sample_spherical_j_all,
    sample_spherical_j_hankel, sample_spherical_j_hankel_all, spherical_j, spherical_j_all,
    spherical_j_hankel, spherical_j_hankel_all, spherical_j_hankel_tail, spherical_j_tail,
};

use crate::specfun::Order;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
#[error("bandwidth must be positive and finite, got {0}")]
pub struct BandwidthError(pub f64);

/// Band limit `c > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Bandwidth(f64);

impl Bandwidth {
    pub fn new(c: f64) -> Result<Self, BandwidthError> {
        if c > 0.0 && c.is_finite() {
            Ok(Bandwidth(c))
        } else {
            Err(BandwidthError(c))
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

/// Which spherical Bessel family (and transform) is meant.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Family {
    Fourier,
    Hankel(Order),
}
