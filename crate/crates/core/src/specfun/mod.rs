//! Scalar special functions: Bessel `J`, Legendre and Jacobi polynomials, log-Gamma.

mod bessel;
mod fixed;
mod gamma;
mod poly;

pub use bessel::{
    bessel_j, bessel_j_derivative, bessel_j_sequence, hankel_coefficients, hankel_phase, hankel_pq,
};
pub use fixed::FixedOrderJ;
pub use gamma::{gamma, ln_gamma, rgamma};
pub use poly::{
    jacobi_at_one, jacobi_p, jacobi_sequence, legendre_p, legendre_sequence,
    legendre_with_derivative,
};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpecFunError {
    #[error("domain error: {0}")]
    Domain(&'static str),
    #[error("pole at {0}")]
    Pole(f64),
    #[error("overflow in {0}")]
    Overflow(&'static str),
}

/// Order of a Bessel function used on the Hankel side; requires `alpha > -1/2`.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct Order(f64);

impl Order {
    pub fn new(alpha: f64) -> Result<Self, SpecFunError> {
        if alpha.is_finite() && alpha > -0.5 {
            Ok(Order(alpha))
        } else {
            Err(SpecFunError::Domain("Hankel order must satisfy alpha > -1/2"))
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }
}
