//! Exact real Möbius maps, pullbacks of binary forms, and enumeration of the
//! maps carrying one finite configuration on the real projective line to another.

mod config;
mod moebius;

pub use config::{config_maps, config_maps_colored, jacobian, PointConfig};
pub use moebius::{pullback_form, pullback_form_surd, ExtPoint, Moebius, SurdPoly};

use crate::exactnum::ExactError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ProjError {
    #[error("declared degree {declared} is below the polynomial degree {actual}")]
    DegreeMismatch { declared: usize, actual: usize },
    #[error("configuration has fewer than three points over the complex numbers")]
    TooFewPoints,
    #[error("matrix is singular")]
    Singular,
    #[error("map has irrational entries")]
    NonRational,
    #[error(transparent)]
    Exact(#[from] ExactError),
}
