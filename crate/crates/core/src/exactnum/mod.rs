//! Exact arithmetic kernel: rationals, univariate polynomials, real root
//! isolation, real algebraic numbers and multiquadratic surds.

mod algreal;
mod factor;
mod parse;
mod poly;
mod rat;
mod resultant;
mod roots;
mod surd;

pub use algreal::{sign_at, AlgReal};
pub use factor::{complex_roots, factor_lin_quad, quadratic_discriminant, LinQuadFactorization};
pub use parse::{parse_poly, parse_poly_list};
pub use poly::RatPoly;
pub use rat::{frac, int_sign, isqrt, mid, parse_rat, rat, rat_sqrt, rat_to_string, sign, to_f64, Int, Rat};
pub use resultant::{determinant, discriminant, eliminate, interpolate, resultant, sylvester_resultant};
pub use roots::{
    count_real_roots, isolate_real_roots, rational_between, rational_outside, root_bound,
    sample_points, sign_on_regions, Sturm,
};
pub use surd::{square_decompose, Surd};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExactError {
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("division by zero")]
    DivisionByZero,
    #[error("interval does not isolate exactly one root")]
    NotIsolating,
    #[error("polynomial has a multiple root")]
    NotSquareFree,
    #[error("unsupported input: {0}")]
    Unsupported(String),
}

/// `square_free_part` as a free function.
pub fn square_free_part(p: &RatPoly) -> Result<RatPoly, ExactError> {
    p.square_free_part()
}
