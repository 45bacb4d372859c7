//! Twisted Trepalin involutions given by `x^2 + y^2 + ∏(t - ε_i) = 0`,
//! `w^2 + (t - λ_1)(t - λ_2) = 0`.

use std::fmt;

use crate::exactnum::{rat_to_string, Rat};
use crate::projline::{config_maps, ExtPoint, Moebius, PointConfig};

use super::{InvolutionClass, InvolutionError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrepalinData {
    twist: u8,
    epsilons: Vec<Rat>,
    lambda1: Rat,
    lambda2: Rat,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RealType {
    Sphere,
    Torus,
}

impl fmt::Display for RealType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RealType::Sphere => "S2",
            RealType::Torus => "S1 x S1",
        })
    }
}

impl TrepalinData {
    pub fn new(twist: u8, epsilons: Vec<Rat>, lambda1: Rat, lambda2: Rat) -> Result<Self, InvolutionError> {
        let bad = |s: String| Err(InvolutionError::InvalidParameters(s));
        if twist > 2 {
            return bad(format!("twist {twist} is not 0, 1 or 2"));
        }
        if epsilons.len() % 2 != 0 || epsilons.is_empty() {
            return bad("the number of epsilons must be even and positive".into());
        }
        if epsilons.windows(2).any(|w| w[0] >= w[1]) {
            return bad("epsilons must be strictly increasing".into());
        }
        let r = epsilons.len() / 2;
        if twist > 0 && r < 2 {
            return bad(format!("twist {twist} needs at least 4 epsilons"));
        }
        let e = &epsilons;
        let (l1, l2) = (&lambda1, &lambda2);
        let ok = match twist {
            0 => l1 < l2 && *l1 != e[0] && e[0] < *l2 && *l2 < e[1],
            1 => (*l2 == e[1] && *l1 != e[0] && *l1 < e[1]) || (*l2 == e[2] && e[0] < *l1 && *l1 < e[1]),
            _ => *l1 == e[0] && (*l2 == e[1] || *l2 == e[2]),
        };
        if !ok {
            return bad(format!("lambdas are not in a valid position for twist {twist}"));
        }
        Ok(TrepalinData {
            twist,
            epsilons,
            lambda1,
            lambda2,
        })
    }

    pub fn twist(&self) -> u8 {
        self.twist
    }

    pub fn epsilons(&self) -> &[Rat] {
        &self.epsilons
    }

    pub fn lambdas(&self) -> (&Rat, &Rat) {
        (&self.lambda1, &self.lambda2)
    }

    /// `r`, half the number of epsilons.
    pub fn r(&self) -> usize {
        self.epsilons.len() / 2
    }

    /// Number of singular fibres: `4r`, `4r - 2` or `4r - 4`.
    pub fn singular_fibres(&self) -> usize {
        4 * self.r() - 2 * self.twist as usize
    }

    /// `K^2 = 8 - 4r + 2 twist`.
    pub fn canonical_degree(&self) -> i64 {
        8 - 4 * self.r() as i64 + 2 * self.twist as i64
    }

    /// Image under `t ↦ φ(t)` for a rational `φ` keeping all points finite
    /// and increasing; `None` otherwise.
    pub fn transform(&self, phi: &Moebius) -> Option<TrepalinData> {
        let m = |x: &Rat| phi.apply_rat(x).as_rat();
        let eps: Option<Vec<Rat>> = self.epsilons.iter().map(m).collect();
        TrepalinData::new(self.twist, eps?, m(&self.lambda1)?, m(&self.lambda2)?).ok()
    }
}

impl fmt::Display for TrepalinData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let eps: Vec<String> = self.epsilons.iter().map(rat_to_string).collect();
        write!(
            f,
            "twist {} epsilons [{}] lambdas ({}, {})",
            self.twist,
            eps.join(", "),
            rat_to_string(&self.lambda1),
            rat_to_string(&self.lambda2)
        )
    }
}

pub fn trepalin_class(d: &TrepalinData) -> InvolutionClass {
    let r = d.r() as u32;
    match d.twist {
        0 => InvolutionClass::T(r),
        1 => InvolutionClass::TPrime(r - 1),
        _ => InvolutionClass::TDoublePrime(r - 1),
    }
}

pub fn trepalin_real_type(d: &TrepalinData) -> RealType {
    let e = &d.epsilons;
    let torus = match d.twist {
        0 => e[0] < d.lambda1,
        1 => d.lambda2 == e[1] && e[0] < d.lambda1,
        _ => d.lambda2 == e[1],
    };
    if torus {
        RealType::Torus
    } else {
        RealType::Sphere
    }
}

/// Real Möbius maps sending the epsilons of `d1` onto those of `d2` and
/// `{λ_1, λ_2}` onto `{λ_1', λ_2'}`.
pub fn trepalin_base_maps(d1: &TrepalinData, d2: &TrepalinData) -> Result<Vec<Moebius>, InvolutionError> {
    if d1.epsilons.len() != d2.epsilons.len() || d1.epsilons.len() < 3 {
        return Ok(Vec::new());
    }
    let c1 = PointConfig::from_points(&d1.epsilons, false)?;
    let c2 = PointConfig::from_points(&d2.epsilons, false)?;
    let targets = [ExtPoint::rat(d2.lambda1.clone()), ExtPoint::rat(d2.lambda2.clone())];
    let hits = |phi: &Moebius, l: &Rat| targets.contains(&phi.apply_rat(l));
    Ok(config_maps(&c1, &c2)?
        .into_iter()
        .filter(|phi| hits(phi, &d1.lambda1) && hits(phi, &d1.lambda2))
        .collect())
}
