//! Non-exceptional conic bundles `A x^2 + B xy + C y^2 = H z^2` over the
//! affine line with the involution `z ↦ -z`: validation, invariants, normal
//! forms and conjugacy.

mod arcs;
mod conjugacy;
mod normalize;

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::exactnum::{frac, rat, ExactError, Rat, RatPoly};
use crate::projline::{Moebius, ProjError};

pub use arcs::{arcs_of, Arc, ArcEnd, ArcSet};
pub use conjugacy::{conjugate_mod_pgl2, fibrewise_conjugate, FibrewiseFailure, FibrewiseVerdict, PglVerdict};
pub use normalize::{diagonalize, normal_form_invariants, normalize, DiagonalModel, NormalFormInvariants};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConicBundleError {
    #[error("A or C vanishes identically, so the bundle is exceptional")]
    DegenerateBinaryPart,
    #[error("4AC - B^2 is constant")]
    ConstantDiscriminant,
    #[error("(B^2 - 4AC) H has a multiple root")]
    NotSquareFree,
    #[error("deg(B^2 - 4AC) is odd")]
    OddDiscriminantDegree,
    #[error("fibres over an unbounded region have real points")]
    NonEmptyFibreAtInfinity,
    #[error("no rational point of small height has an empty fibre")]
    NoEmptyFibre,
    #[error("fixed curve is empty (deg(4AC - B^2) = 2)")]
    EmptyFixedCurve,
    #[error("model is not normalized")]
    NotNormalized,
    #[error("normalization needs a field extension at an irrational point")]
    IrrationalSplitRequired,
    #[error(transparent)]
    Proj(#[from] ProjError),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// Validated model. `delta` is `4AC - B^2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConicBundleModel {
    a: RatPoly,
    b: RatPoly,
    c: RatPoly,
    h: RatPoly,
    delta: RatPoly,
}

pub fn delta_of(a: &RatPoly, b: &RatPoly, c: &RatPoly) -> RatPoly {
    &(a * c).scale(&rat(4)) - &(b * b)
}

/// Emptiness of the fibre given the signs of `Δ`, `A` and `H` at a point.
pub(crate) fn empty_from_signs(delta: i32, a: i32, h: i32) -> bool {
    delta > 0 && a == -h
}

pub(crate) fn fibre_empty_raw(a: &RatPoly, b: &RatPoly, c: &RatPoly, h: &RatPoly, t: &Rat) -> bool {
    empty_from_signs(delta_of(a, b, c).sign_at(t), a.sign_at(t), h.sign_at(t))
}

fn empty_at_infinity(a: &RatPoly, delta: &RatPoly, h: &RatPoly, positive: bool) -> bool {
    empty_from_signs(
        delta.sign_at_infinity(positive),
        a.sign_at_infinity(positive),
        h.sign_at_infinity(positive),
    )
}

pub fn validate_model(
    a: &RatPoly,
    b: &RatPoly,
    c: &RatPoly,
    h: &RatPoly,
) -> Result<ConicBundleModel, ConicBundleError> {
    if a.is_zero() || c.is_zero() {
        return Err(ConicBundleError::DegenerateBinaryPart);
    }
    if h.is_zero() {
        return Err(ConicBundleError::NotSquareFree);
    }
    let delta = delta_of(a, b, c);
    if delta.deg() <= 0 {
        return Err(ConicBundleError::ConstantDiscriminant);
    }
    if !(&delta * h).is_square_free() {
        return Err(ConicBundleError::NotSquareFree);
    }
    if delta.deg() % 2 != 0 {
        return Err(ConicBundleError::OddDiscriminantDegree);
    }
    if !empty_at_infinity(a, &delta, h, true) || !empty_at_infinity(a, &delta, h, false) {
        return Err(ConicBundleError::NonEmptyFibreAtInfinity);
    }
    Ok(ConicBundleModel {
        a: a.clone(),
        b: b.clone(),
        c: c.clone(),
        h: h.clone(),
        delta,
    })
}

impl ConicBundleModel {
    pub fn a(&self) -> &RatPoly {
        &self.a
    }

    pub fn b(&self) -> &RatPoly {
        &self.b
    }

    pub fn c(&self) -> &RatPoly {
        &self.c
    }

    pub fn h(&self) -> &RatPoly {
        &self.h
    }

    /// `4AC - B^2`.
    pub fn delta(&self) -> &RatPoly {
        &self.delta
    }

    pub fn fibre_empty_at(&self, t: &Rat) -> bool {
        empty_from_signs(self.delta.sign_at(t), self.a.sign_at(t), self.h.sign_at(t))
    }

    /// Each of `A, B, C` scaled by `k`, `H` by `m`.
    pub fn scaled(&self, k: &Rat, m: &Rat) -> Result<Self, ConicBundleError> {
        validate_model(&self.a.scale(k), &self.b.scale(k), &self.c.scale(k), &self.h.scale(m))
    }

    /// True when `H` has only real roots, `Δ > 0` at each, and negative
    /// leading coefficient.
    pub fn is_normalized(&self) -> bool {
        if !self.h.leading().is_negative() {
            return false;
        }
        let Ok(roots) = crate::exactnum::isolate_real_roots(&self.h) else {
            return false;
        };
        roots.len() as i64 == self.h.deg()
            && roots.iter().all(|r| crate::exactnum::sign_at(&self.delta, r) > 0)
    }
}

impl fmt::Display for ConicBundleModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) x^2 + ({}) xy + ({}) y^2 = ({}) z^2", self.a, self.b, self.c, self.h)
    }
}

/// `B^2 - 4AC` is `-Δ`; this returns `Δ = 4AC - B^2`.
pub fn discriminant(m: &ConicBundleModel) -> RatPoly {
    m.delta.clone()
}

/// `g` with `deg Δ = 2g + 2`.
pub fn fixed_curve_genus(m: &ConicBundleModel) -> Result<u32, ConicBundleError> {
    let d = m.delta.deg();
    if d == 2 {
        return Err(ConicBundleError::EmptyFixedCurve);
    }
    Ok((d / 2 - 1) as u32)
}

pub fn special_fibre_count(m: &ConicBundleModel) -> Result<u32, ConicBundleError> {
    let roots = crate::exactnum::isolate_real_roots(&m.h)?;
    if roots.len() as i64 != m.h.deg() || roots.iter().any(|r| crate::exactnum::sign_at(&m.delta, r) < 0) {
        return Err(ConicBundleError::NotNormalized);
    }
    Ok(m.h.deg() as u32)
}

/// `K^2 = 8 - deg(ΔH)`, equal to `6 - 2g - δ`.
pub fn canonical_degree(m: &ConicBundleModel) -> Result<i64, ConicBundleError> {
    let delta_count = special_fibre_count(m)? as i64;
    let k2 = 8 - m.delta.deg() - m.h.deg();
    let g = m.delta.deg() / 2 - 1;
    assert_eq!(k2, 6 - 2 * g - delta_count, "canonical degree formulas disagree");
    Ok(k2)
}

pub fn real_image_arcs(m: &ConicBundleModel) -> ArcSet {
    arcs_of(&m.a, &m.b, &m.c, &m.h)
}

/// Connected real locus; counted as arcs of the image on the base.
pub fn is_r_rational(m: &ConicBundleModel) -> Result<bool, ConicBundleError> {
    if !m.is_normalized() {
        return Err(ConicBundleError::NotNormalized);
    }
    Ok(real_image_arcs(m).len() == 1)
}

/// Reduces the binary part by `x ↦ x - q y` steps and swaps until
/// `deg B < deg A <= deg C`, so that `deg Δ = deg A + deg C`.
pub fn gauss_reduce(a: &RatPoly, b: &RatPoly, c: &RatPoly) -> (RatPoly, RatPoly, RatPoly) {
    let (mut a, mut b, mut c) = (a.clone(), b.clone(), c.clone());
    loop {
        if a.deg() > c.deg() {
            std::mem::swap(&mut a, &mut c);
        }
        if a.is_zero() || b.is_zero() || b.deg() < a.deg() {
            return (a, b, c);
        }
        let shift = (b.deg() - a.deg()) as usize;
        let q = RatPoly::monomial(b.leading() / (a.leading() * rat(2)), shift);
        let two = RatPoly::constant(rat(2));
        let new_b = &b - &(&two * &(&q * &a));
        let new_c = &(&c - &(&q * &b)) + &(&(&q * &q) * &a);
        b = new_b;
        c = new_c;
    }
}

/// Homogeneous degrees `(d_A, d_B, d_C, d_H)` for the completion over the
/// projective line, after reduction.
fn completion_degrees(a: &RatPoly, c: &RatPoly, h: &RatPoly) -> [usize; 4] {
    let da = a.deg() as usize;
    let dc = c.deg() as usize + (a.deg() + c.deg()) as usize % 2;
    let dh = h.deg() as usize + (da + h.deg() as usize) % 2;
    [da, (da + dc) / 2, dc, dh]
}

/// Weighted pullback along `t = φ(u)` with rational `φ`, without validation.
fn pullback_raw(
    a: &RatPoly,
    b: &RatPoly,
    c: &RatPoly,
    h: &RatPoly,
    phi: &Moebius,
) -> Result<[RatPoly; 4], ConicBundleError> {
    let entries = phi.as_rats().ok_or(ProjError::NonRational)?;
    let (a, b, c) = gauss_reduce(a, b, c);
    let [da, db, dc, dh] = completion_degrees(&a, &c, h);
    Ok([
        a.pullback(da, &entries),
        b.pullback(db, &entries),
        c.pullback(dc, &entries),
        h.pullback(dh, &entries),
    ])
}

/// The model over the base coordinate `u` with `t = φ(u)`; its root
/// configuration is the preimage of the original one.
pub fn pullback_model(m: &ConicBundleModel, phi: &Moebius) -> Result<ConicBundleModel, ConicBundleError> {
    let [a, b, c, h] = pullback_raw(&m.a, &m.b, &m.c, &m.h, phi)?;
    validate_model(&a, &b, &c, &h)
}

/// Rationals ordered by height, then magnitude, then sign.
pub fn small_rationals(max_height: i64) -> Vec<Rat> {
    let mut out = vec![Rat::zero()];
    for height in 1..=max_height {
        let mut layer = Vec::new();
        for d in 1..=height {
            for n in 0..=height {
                if n.max(d) != height || num_integer::gcd(n, d) != 1 {
                    continue;
                }
                layer.push(frac(n, d));
            }
        }
        layer.sort();
        for r in layer {
            if !r.is_zero() {
                out.push(r.clone());
                out.push(-r);
            }
        }
    }
    out
}

/// Moves a rational point with empty fibre to infinity by `t = p + 1/u`
/// and validates the result. Meant for affine data whose unbounded fibres
/// are not empty; the old point at infinity becomes `u = 0`.
pub fn reparametrize_at_infinity(
    a: &RatPoly,
    b: &RatPoly,
    c: &RatPoly,
    h: &RatPoly,
) -> Result<(ConicBundleModel, Moebius), ConicBundleError> {
    if a.is_zero() || c.is_zero() {
        return Err(ConicBundleError::DegenerateBinaryPart);
    }
    let delta = delta_of(a, b, c);
    let bad = &(&delta * h) * a;
    let p = small_rationals(12)
        .into_iter()
        .find(|p| bad.sign_at(p) != 0 && fibre_empty_raw(a, b, c, h, p))
        .ok_or(ConicBundleError::NoEmptyFibre)?;
    let phi = Moebius::from_rats(p, Rat::one(), Rat::one(), Rat::zero())?;
    let [a2, b2, c2, h2] = pullback_raw(a, b, c, h, &phi)?;
    Ok((validate_model(&a2, &b2, &c2, &h2)?, phi))
}
