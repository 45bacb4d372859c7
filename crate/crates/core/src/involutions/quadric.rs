//! Involutions of the quadrics `x^2 + y^2 + z^2 = w^2` and
//! `P^1 x P^1 = {x^2 + y^2 = z^2 + w^2}`.

use std::fmt;

use num_traits::{Signed, Zero};

use crate::exactnum::Rat;

use super::InvolutionError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QuadricSurface {
    Q31,
    Q22,
}

impl fmt::Display for QuadricSurface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            QuadricSurface::Q31 => "Q31",
            QuadricSurface::Q22 => "Q22",
        })
    }
}

/// Action on `[w:x:y:z]` for `Q31`, or on `P^1 x P^1` for `Q22`. Factor
/// matrices `[a, b, c, d]` act on `[x:y]` by `[a x + b y : c x + d y]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QuadricAction {
    SignPattern([i32; 4]),
    FactorSwap,
    Fibrewise([Rat; 4], [Rat; 4]),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadricInvolutionData {
    surface: QuadricSurface,
    action: QuadricAction,
}

/// The two non-linearisable normal forms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QuadricRepresentative {
    /// `[w:x:y:z] ↦ [-w:x:y:z]` on `Q31`.
    Antipodal,
    /// `(id, α')` on `Q22` with `α': [x:y] ↦ [y:-x]`.
    Rotation,
}

impl fmt::Display for QuadricRepresentative {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            QuadricRepresentative::Antipodal => "antipodal",
            QuadricRepresentative::Rotation => "rotation",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QuadricClass {
    Linearisable,
    NonLinearisable(QuadricRepresentative),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedLocus {
    pub complex: String,
    pub real: String,
    pub has_real_point: bool,
}

const COORDS: [&str; 4] = ["w", "x", "y", "z"];

/// Whether a factor matrix is scalar, or `None` if it is not an involution.
fn factor_kind(m: &[Rat; 4]) -> Option<bool> {
    let [a, b, c, d] = m;
    let det = a * d - b * c;
    if det.is_zero() {
        return None;
    }
    if (a + d).is_zero() {
        return Some(false);
    }
    if b.is_zero() && c.is_zero() && a == d {
        return Some(true);
    }
    None
}

/// A trace-zero involution has real fixed points iff its determinant is negative.
fn factor_has_real_fixed_point(m: &[Rat; 4]) -> bool {
    factor_kind(m) == Some(true) || (&m[0] * &m[3] - &m[1] * &m[2]).is_negative()
}

impl QuadricInvolutionData {
    pub fn new(surface: QuadricSurface, action: QuadricAction) -> Result<Self, InvolutionError> {
        let bad = |s: &str| Err(InvolutionError::InvalidAction(s.into()));
        match (&surface, &action) {
            (QuadricSurface::Q31, QuadricAction::SignPattern(p)) => {
                if p.iter().any(|s| *s != 1 && *s != -1) {
                    return bad("sign pattern entries must be +1 or -1");
                }
                if p.iter().all(|s| *s == p[0]) {
                    return bad("sign pattern is the identity");
                }
            }
            (QuadricSurface::Q22, QuadricAction::FactorSwap) => {}
            (QuadricSurface::Q22, QuadricAction::Fibrewise(m1, m2)) => {
                match (factor_kind(m1), factor_kind(m2)) {
                    (None, _) | (_, None) => return bad("factor matrix does not square to a scalar"),
                    (Some(true), Some(true)) => return bad("both factors are the identity"),
                    _ => {}
                }
            }
            (QuadricSurface::Q31, _) => return bad("Q31 actions are sign patterns"),
            (QuadricSurface::Q22, _) => return bad("Q22 actions are a factor swap or a pair of factor involutions"),
        }
        Ok(QuadricInvolutionData { surface, action })
    }

    pub fn surface(&self) -> QuadricSurface {
        self.surface
    }

    pub fn action(&self) -> &QuadricAction {
        &self.action
    }

    pub fn fixed_locus(&self) -> FixedLocus {
        match &self.action {
            QuadricAction::SignPattern(p) => sign_pattern_locus(p),
            QuadricAction::FactorSwap => FixedLocus {
                complex: "the diagonal".into(),
                real: "S1".into(),
                has_real_point: true,
            },
            QuadricAction::Fibrewise(m1, m2) => {
                let (r1, r2) = (factor_has_real_fixed_point(m1), factor_has_real_fixed_point(m2));
                let has_real_point = r1 && r2;
                if factor_kind(m1) == Some(true) || factor_kind(m2) == Some(true) {
                    FixedLocus {
                        complex: "2 lines".into(),
                        real: if has_real_point { "S1 + S1" } else { "empty" }.into(),
                        has_real_point,
                    }
                } else {
                    FixedLocus {
                        complex: "4 points".into(),
                        real: format!("{} points", if has_real_point { 4 } else { 0 }),
                        has_real_point,
                    }
                }
            }
        }
    }
}

impl fmt::Display for QuadricAction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuadricAction::SignPattern(p) => {
                let s: Vec<String> = p
                    .iter()
                    .zip(COORDS)
                    .map(|(s, c)| format!("{}{}", if *s < 0 { "-" } else { "" }, c))
                    .collect();
                write!(f, "[{}]", s.join(":"))
            }
            QuadricAction::FactorSwap => f.write_str("swap"),
            QuadricAction::Fibrewise(m1, m2) => {
                let m = |m: &[Rat; 4]| m.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
                write!(f, "fibrewise [{}] [{}]", m(m1), m(m2))
            }
        }
    }
}

/// Fixed locus of a diagonal sign pattern on `x^2 + y^2 + z^2 = w^2`: the
/// union of the quadric's sections by the two eigenspaces.
fn sign_pattern_locus(p: &[i32; 4]) -> FixedLocus {
    let spaces: Vec<Vec<usize>> = [1, -1]
        .iter()
        .map(|s| (0..4).filter(|&i| p[i] == *s).collect())
        .collect();
    if let Some(plane) = spaces.iter().find(|v| v.len() == 3) {
        let lhs: Vec<String> = plane.iter().filter(|&&i| i != 0).map(|&i| format!("{}^2", COORDS[i])).collect();
        let real = plane.contains(&0);
        let rhs = if real { "w^2" } else { "0" };
        return FixedLocus {
            complex: format!("{{{}={}}}", lhs.join("+"), rhs),
            real: if real { "S1" } else { "empty" }.into(),
            has_real_point: real,
        };
    }
    // Two lines, each meeting the quadric in two points; real on the line through w.
    FixedLocus {
        complex: "4 points".into(),
        real: "2 points".into(),
        has_real_point: true,
    }
}

pub fn classify_quadric(q: &QuadricInvolutionData) -> QuadricClass {
    if q.fixed_locus().has_real_point {
        QuadricClass::Linearisable
    } else {
        QuadricClass::NonLinearisable(match q.surface {
            QuadricSurface::Q31 => QuadricRepresentative::Antipodal,
            QuadricSurface::Q22 => QuadricRepresentative::Rotation,
        })
    }
}
