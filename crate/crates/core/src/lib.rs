//! Exact computational algebra for Dirac operators with torsion.
//!
//! The crate has three layers:
//! * exact tensor algebra over rationals / Gaussian rationals: exterior
//!   calculus, Kulkarni-Nomizu products, curvature decompositions,
//!   Clifford/gamma-matrix algebra;
//! * heat-coefficient densities for the operators `D*D` and `P+ D*D`
//!   (chirally projected), with and without a unitary twist, plus the
//!   Holst density and the Barbero-Immirzi parameter;
//! * a numerical validation lab: exact trigonometric-polynomial integrals
//!   on the flat 4-torus and brute-force heat traces on the torus and the
//!   round 4-sphere fitted against the predicted coefficients.

pub mod clifford;
pub mod curvature;
pub mod io;
pub mod scalar;
pub mod spectral;
pub mod tensor;
pub mod torsion;
pub mod torus;
pub mod verify;

use thiserror::Error as ThisError;

#[derive(Debug, ThisError)]
pub enum Error {
    #[error("shape error: {0}")]
    Shape(String),
    #[error("unsupported dimension {0} (need 4)")]
    UnsupportedDim(usize),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}
