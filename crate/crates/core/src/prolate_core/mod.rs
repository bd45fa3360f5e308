//! PSWF and CPSWF bases, their evaluation, persistence and coefficient-decay
//! certificates.

mod basis;
mod construct;
mod decay;
mod json;

pub use basis::{
    build_basis, build_circular_prolate_basis, build_prolate_basis, default_truncation, evaluate_phi,
    evaluate_psi, normalise_signs, sample_prolates, CircularProlateBasis, Construction, EvalState, ProlateBasis,
    DEFAULT_MARGIN,
};
pub use decay::{certify_decay, certify_matrix, DecayCertificate, DecayRow};
pub use json::{basis_from_json, basis_to_json};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ProlateError {
    #[error("truncation K = {0} is too small")]
    Truncation(usize),
    #[error("eigenvalues {index} and {} are not separated (gap {gap:e})", index + 1)]
    Degenerate { index: usize, gap: f64 },
    #[error("concentration eigenvalue {0} outside (0, 1]")]
    Spectrum(f64),
    #[error("basis family does not match the requested evaluation")]
    FamilyMismatch,
    #[error("index {0} exceeds the truncation")]
    Index(usize),
    #[error("point {0} outside the half-line")]
    Domain(f64),
    #[error("malformed basis file: {0}")]
    Format(String),
}
