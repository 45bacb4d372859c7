//! Real invariants of fixed curves: components of real hyperelliptic curves,
//! projective equivalence of binary forms, the Gaussian test, and ovals of
//! the Kowalevskaya quartics.

mod kowalevskaya;
mod tables;

use std::fmt;

use crate::conicbundle::ArcSet;
use crate::exactnum::{isolate_real_roots, sample_points, ExactError, RatPoly};
use crate::projline::{config_maps, pullback_form_surd, Moebius, PointConfig, ProjError};

pub use kowalevskaya::{kowalevskaya_class_profile, kowalevskaya_oval_profile, KowalevskayaQuartic, OvalProfile};
pub use tables::{bertini_table, geiser_table, BertiniRow, GeiserRow};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RealCurveError {
    #[error("form has a multiple root")]
    NotSquareFree,
    #[error("declared degree {0} is not even")]
    OddDegree(usize),
    #[error("degree {actual} is below the required {required}")]
    DegreeTooSmall { required: usize, actual: usize },
    #[error("quartic is singular")]
    SingularQuartic,
    #[error("real locus has {ovals} ovals (nested: {nested}), not one oval or two nested ovals")]
    OutsideKowalevskayaClass { ovals: usize, nested: bool },
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error(transparent)]
    Proj(#[from] ProjError),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// Square-free binary form of even degree `2n ≥ 4`, dehomogenized at the
/// second variable. A degree deficiency of one is a root at `∞`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryForm {
    poly: RatPoly,
    hom_degree: usize,
}

impl BinaryForm {
    pub fn new(poly: RatPoly, hom_degree: usize) -> Result<Self, RealCurveError> {
        if hom_degree % 2 == 1 {
            return Err(RealCurveError::OddDegree(hom_degree));
        }
        if hom_degree < 4 {
            return Err(RealCurveError::DegreeTooSmall {
                required: 4,
                actual: hom_degree,
            });
        }
        if poly.is_zero() || !poly.is_square_free() {
            return Err(RealCurveError::NotSquareFree);
        }
        let d = poly.deg() as usize;
        if d > hom_degree {
            return Err(ProjError::DegreeMismatch {
                declared: hom_degree,
                actual: d,
            }
            .into());
        }
        if hom_degree - d > 1 {
            return Err(RealCurveError::NotSquareFree);
        }
        Ok(BinaryForm { poly, hom_degree })
    }

    /// Form of degree `deg f` rounded up to even.
    pub fn from_poly(poly: RatPoly) -> Result<Self, RealCurveError> {
        let d = poly.deg().max(0) as usize;
        Self::new(poly, d + d % 2)
    }

    pub fn poly(&self) -> &RatPoly {
        &self.poly
    }

    pub fn hom_degree(&self) -> usize {
        self.hom_degree
    }

    /// `n` with `hom_degree = 2n`; the curve `x^2 = f` has genus `n - 1`.
    pub fn half_degree(&self) -> usize {
        self.hom_degree / 2
    }

    pub fn neg(&self) -> Self {
        BinaryForm {
            poly: -&self.poly,
            hom_degree: self.hom_degree,
        }
    }

    pub fn config(&self) -> Result<PointConfig, RealCurveError> {
        Ok(PointConfig::from_form(&self.poly, self.hom_degree)?)
    }

    /// Pullback by a rational map, as a form of the same degree.
    pub fn pullback(&self, m: &Moebius) -> Result<Self, RealCurveError> {
        let p = crate::projline::pullback_form(&self.poly, self.hom_degree, m)?;
        Self::new(p, self.hom_degree)
    }
}

impl fmt::Display for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (deg={})", self.poly, self.hom_degree)
    }
}

/// Arcs of the real projective line where `sign * f > 0`.
pub fn nonnegativity_arcs(f: &BinaryForm, sign: i32) -> Result<ArcSet, RealCurveError> {
    let g = if sign < 0 { -&f.poly } else { f.poly.clone() };
    let roots = isolate_real_roots(&g)?;
    let nonempty: Vec<bool> = sample_points(&roots).iter().map(|x| g.sign_at(x) > 0).collect();
    Ok(ArcSet::from_regions(&roots, &nonempty))
}

/// Components of the real locus of `x^2 = sign * f` in `P(n, 1, 1)`. Each
/// arc of `sign * f ≥ 0` bounded by roots gives one oval. Without real roots
/// and `sign * f > 0`, the two sections `x = ±√f` are exchanged around the
/// circle when `n` is odd, giving one component, and stay apart when `n` is
/// even.
pub fn hyperelliptic_components(f: &BinaryForm, sign: i32) -> Result<usize, RealCurveError> {
    let arcs = nonnegativity_arcs(f, sign)?;
    if arcs.is_full() {
        return Ok(if f.half_degree() % 2 == 0 { 2 } else { 1 });
    }
    Ok(arcs.len())
}

/// Real Möbius `m` and sign `σ` with `pullback(f, m) = σ c g` for some
/// `c > 0`, preferring `σ = +1`.
pub fn binary_form_projective_equiv(
    f: &BinaryForm,
    g: &BinaryForm,
) -> Result<Option<(Moebius, i32)>, RealCurveError> {
    let all = equivalences(f, g)?;
    Ok(all
        .iter()
        .find(|(_, s)| *s > 0)
        .or_else(|| all.first())
        .cloned())
}

/// Every witness found by the configuration search.
pub fn equivalences(f: &BinaryForm, g: &BinaryForm) -> Result<Vec<(Moebius, i32)>, RealCurveError> {
    if f.hom_degree != g.hom_degree {
        return Ok(Vec::new());
    }
    // Pullback by m moves roots by m^{-1}, so m carries roots of g onto roots of f.
    let maps = config_maps(&g.config()?, &f.config()?)?;
    let mut out = Vec::new();
    for m in maps {
        if let Some(k) = pullback_form_surd(&f.poly, f.hom_degree, &m)?.ratio_to_rat(&g.poly) {
            out.push((m, k.sign()));
        }
    }
    Ok(out)
}

fn require_degree(f: &BinaryForm, required: usize) -> Result<(), RealCurveError> {
    if f.hom_degree < required {
        return Err(RealCurveError::DegreeTooSmall {
            required,
            actual: f.hom_degree,
        });
    }
    Ok(())
}

/// Some `β ∈ GL_2(R)` has `β^* f = -f`.
pub fn is_gaussian(f: &BinaryForm) -> Result<bool, RealCurveError> {
    require_degree(f, 6)?;
    Ok(equivalences(f, f)?.iter().any(|(_, s)| *s < 0))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CurveVerdict {
    Conjugate,
    NotConjugate,
}

impl fmt::Display for CurveVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CurveVerdict::Conjugate => "Conjugate",
            CurveVerdict::NotConjugate => "NotConjugate",
        })
    }
}

/// Conjugacy of the de Jonquières involutions with fixed curves `x^2 = f`
/// and `x^2 = g`.
pub fn dejonquieres_conjugate(f: &BinaryForm, g: &BinaryForm) -> Result<CurveVerdict, RealCurveError> {
    require_degree(f, 6)?;
    require_degree(g, 6)?;
    if f.hom_degree != g.hom_degree {
        return Ok(CurveVerdict::NotConjugate);
    }
    let all = equivalences(f, g)?;
    let plus = all.iter().any(|(_, s)| *s > 0);
    let conj = plus || (!all.is_empty() && is_gaussian(f)?);
    Ok(if conj {
        CurveVerdict::Conjugate
    } else {
        CurveVerdict::NotConjugate
    })
}
