//! Models `x^2 + f(t) y^2 = (t - a)(t - b) z^2` with
//! `f = ∏(t - ε_i) ∏ q_j`, sharing the fixed curve `w^2 = -4f`.

use num_traits::Signed;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::conicbundle::{validate_model, ConicBundleModel};
use crate::exactnum::{frac, rat, Rat, RatPoly};
use crate::projline::{config_maps, ExtPoint, Moebius, PointConfig};

use super::InvolutionError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorollaryParams {
    pub epsilons: Vec<Rat>,
    pub quads: Vec<RatPoly>,
    pub a: Rat,
    pub b: Rat,
}

impl CorollaryParams {
    pub fn validate(&self) -> Result<(), InvolutionError> {
        let bad = |s: &str| Err(InvolutionError::InvalidParameters(s.into()));
        let e = &self.epsilons;
        if e.len() < 4 || e.len() % 2 != 0 {
            return bad("need 2r epsilons with r >= 2");
        }
        if e.windows(2).any(|w| w[0] >= w[1]) {
            return bad("epsilons must be strictly increasing");
        }
        if !(self.a < e[0] && self.b > e[e.len() - 1]) {
            return bad("need a < first epsilon and b > last epsilon");
        }
        for q in &self.quads {
            let disc = q.coeff(1) * q.coeff(1) - rat(4) * q.coeff(2) * q.coeff(0);
            if q.deg() != 2 || !disc.is_negative() || !q.leading().is_positive() {
                return bad("quadratic factors must be monic-positive with negative discriminant");
            }
        }
        if !self.f().is_square_free() {
            return bad("f has a repeated factor");
        }
        Ok(())
    }

    pub fn r(&self) -> usize {
        self.epsilons.len() / 2
    }

    pub fn s(&self) -> usize {
        self.quads.len()
    }

    pub fn genus(&self) -> usize {
        self.r() + self.s() - 1
    }

    pub fn f(&self) -> RatPoly {
        self.quads.iter().fold(RatPoly::from_roots(&self.epsilons), |acc, q| &acc * q)
    }

    /// The model for the pair `(a, b)`.
    pub fn model(&self, a: &Rat, b: &Rat) -> Result<ConicBundleModel, InvolutionError> {
        let h = -RatPoly::from_roots(&[a.clone(), b.clone()]);
        Ok(validate_model(&RatPoly::one(), &RatPoly::zero(), &self.f(), &h)?)
    }
}

/// `count` models: the base pair first, then pairs `(a_i, b_i)` sampled from
/// small-height rationals, each outside the images of the earlier pairs under
/// every real Möbius map preserving the roots of `f`.
pub fn corollary_family(
    params: &CorollaryParams,
    count: usize,
    seed: u64,
) -> Result<Vec<ConicBundleModel>, InvolutionError> {
    corollary_pairs(params, count, seed)?
        .iter()
        .map(|(a, b)| params.model(a, b))
        .collect()
}

pub fn corollary_pairs(params: &CorollaryParams, count: usize, seed: u64) -> Result<Vec<(Rat, Rat)>, InvolutionError> {
    params.validate()?;
    let f = params.f();
    let sigma = PointConfig::from_form(&f, f.deg() as usize)?;
    let stabilizer = config_maps(&sigma, &sigma)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (lo, hi) = (params.epsilons[0].clone(), params.epsilons[params.epsilons.len() - 1].clone());
    let mut pairs: Vec<(Rat, Rat)> = Vec::new();
    let mut forbidden: Vec<[ExtPoint; 2]> = Vec::new();
    let mut candidate = (params.a.clone(), params.b.clone());
    let mut attempts = 0usize;
    while pairs.len() < count {
        let (a, b) = &candidate;
        let pt = [ExtPoint::rat(a.clone()), ExtPoint::rat(b.clone())];
        let swapped = [pt[1].clone(), pt[0].clone()];
        if !forbidden.contains(&pt) && !forbidden.contains(&swapped) {
            for phi in &stabilizer {
                forbidden.push(orbit_point(phi, a, b));
            }
            pairs.push(candidate.clone());
        }
        attempts += 1;
        if attempts > 1000 * (count + 1) {
            return Err(InvolutionError::InvalidParameters("could not sample enough generic pairs".into()));
        }
        let mut step = || frac(rng.gen_range(1..=40), rng.gen_range(1..=8));
        candidate = (&lo - step(), &hi + step());
    }
    Ok(pairs)
}

fn orbit_point(phi: &Moebius, a: &Rat, b: &Rat) -> [ExtPoint; 2] {
    [phi.apply_rat(a), phi.apply_rat(b)]
}
