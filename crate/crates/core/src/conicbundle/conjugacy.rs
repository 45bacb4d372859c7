//! Conjugacy of models over a fixed base and up to reparametrization of
//! the base.

use std::fmt;

use num_traits::Signed;

use crate::exactnum::{isolate_real_roots, sample_points, Rat, Surd};
use crate::projline::{config_maps_colored, pullback_form_surd, ExtPoint, Moebius, PointConfig};

use super::{empty_from_signs, real_image_arcs, ConicBundleError, ConicBundleModel};

/// First condition that fails, in the order discriminant, special fibres,
/// arc set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum FibrewiseFailure {
    /// No map of the base matches the root configurations.
    Configuration,
    Discriminant,
    SpecialFibres,
    Arcs,
}

impl fmt::Display for FibrewiseFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FibrewiseFailure::Configuration => "root configurations differ",
            FibrewiseFailure::Discriminant => "discriminants not positively proportional",
            FibrewiseFailure::SpecialFibres => "special fibre polynomials not proportional",
            FibrewiseFailure::Arcs => "arc sets differ",
        })
    }
}

/// `Δ_1 = λ Δ_2` and `H_1 = μ H_2` with `λ, μ > 0`, and equal arc sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FibrewiseVerdict {
    pub conjugate: bool,
    pub witness: Option<(Rat, Rat)>,
    pub failure: Option<FibrewiseFailure>,
}

impl FibrewiseVerdict {
    fn fail(f: FibrewiseFailure) -> Self {
        FibrewiseVerdict {
            conjugate: false,
            witness: None,
            failure: Some(f),
        }
    }
}

fn require_normalized(m: &ConicBundleModel) -> Result<(), ConicBundleError> {
    if m.is_normalized() {
        Ok(())
    } else {
        Err(ConicBundleError::NotNormalized)
    }
}

pub fn fibrewise_conjugate(
    m1: &ConicBundleModel,
    m2: &ConicBundleModel,
) -> Result<FibrewiseVerdict, ConicBundleError> {
    require_normalized(m1)?;
    require_normalized(m2)?;
    let Some(lambda) = m1.delta().ratio_to(m2.delta()).filter(|l| l.is_positive()) else {
        return Ok(FibrewiseVerdict::fail(FibrewiseFailure::Discriminant));
    };
    let Some(mu) = m1.h().ratio_to(m2.h()).filter(|m| m.is_positive()) else {
        return Ok(FibrewiseVerdict::fail(FibrewiseFailure::SpecialFibres));
    };
    if real_image_arcs(m1) != real_image_arcs(m2) {
        return Ok(FibrewiseVerdict::fail(FibrewiseFailure::Arcs));
    }
    Ok(FibrewiseVerdict {
        conjugate: true,
        witness: Some((lambda, mu)),
        failure: None,
    })
}

/// Verdict up to `PGL_2(R)` on the base. The witness `φ` satisfies
/// `φ(roots of Δ_1 H_1) = roots of Δ_2 H_2`, `Δ_2^φ = λ Δ_1` with `λ > 0`
/// and `H_2^φ = μ H_1`, where `F^φ` is the homogeneous pullback.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PglVerdict {
    pub conjugate: bool,
    pub map: Option<Moebius>,
    pub lambda: Option<Surd>,
    pub mu: Option<Surd>,
    pub failure: Option<FibrewiseFailure>,
    /// Number of configuration maps examined.
    pub candidates: usize,
}

fn configs(m: &ConicBundleModel) -> Result<Vec<PointConfig>, ConicBundleError> {
    let mut out = vec![PointConfig::from_form(m.delta(), m.delta().deg() as usize)?];
    if m.h().deg() > 0 {
        out.push(PointConfig::from_form(m.h(), m.h().deg() as usize)?);
    }
    Ok(out)
}

fn empty_at_surd(m: &ConicBundleModel, x: &ExtPoint) -> bool {
    match x {
        ExtPoint::Infinity => true,
        ExtPoint::Finite(x) => empty_from_signs(
            Surd::eval_poly(m.delta(), x).sign(),
            Surd::eval_poly(m.a(), x).sign(),
            Surd::eval_poly(m.h(), x).sign(),
        ),
    }
}

pub fn conjugate_mod_pgl2(m1: &ConicBundleModel, m2: &ConicBundleModel) -> Result<PglVerdict, ConicBundleError> {
    require_normalized(m1)?;
    require_normalized(m2)?;
    let fail = |f, n| PglVerdict {
        conjugate: false,
        map: None,
        lambda: None,
        mu: None,
        failure: Some(f),
        candidates: n,
    };
    if m1.delta().deg() != m2.delta().deg() {
        return Ok(fail(FibrewiseFailure::Discriminant, 0));
    }
    if m1.h().deg() != m2.h().deg() {
        return Ok(fail(FibrewiseFailure::SpecialFibres, 0));
    }
    let maps = config_maps_colored(&configs(m1)?, &configs(m2)?)?;
    let crit = &(m1.delta() * m1.h());
    let samples = sample_points(&isolate_real_roots(crit)?);
    let own: Vec<bool> = samples.iter().map(|s| m1.fibre_empty_at(s)).collect();
    let (dd, dh) = (m1.delta().deg() as usize, m1.h().deg() as usize);
    let mut worst = FibrewiseFailure::Configuration;
    for phi in &maps {
        let Some(lambda) = pullback_form_surd(m2.delta(), dd, phi)?
            .ratio_to_rat(m1.delta())
            .filter(|l| l.sign() > 0)
        else {
            worst = worst.max(FibrewiseFailure::Discriminant);
            continue;
        };
        let Some(mu) = pullback_form_surd(m2.h(), dh, phi)?.ratio_to_rat(m1.h()) else {
            worst = worst.max(FibrewiseFailure::SpecialFibres);
            continue;
        };
        let arcs_match = samples
            .iter()
            .zip(&own)
            .all(|(s, &e)| empty_at_surd(m2, &phi.apply_rat(s)) == e);
        if !arcs_match {
            worst = worst.max(FibrewiseFailure::Arcs);
            continue;
        }
        return Ok(PglVerdict {
            conjugate: true,
            map: Some(phi.clone()),
            lambda: Some(lambda),
            mu: Some(mu),
            failure: None,
            candidates: maps.len(),
        });
    }
    Ok(fail(worst, maps.len()))
}
