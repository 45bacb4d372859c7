//! Conjugacy classes of birational involutions of the real plane, the
//! classifier for regularised models, and per-class conjugacy decisions.

mod family;
mod quadric;
mod representatives;
mod trepalin;

use std::fmt;

use crate::conicbundle::{
    conjugate_mod_pgl2, fibrewise_conjugate, normal_form_invariants, normalize, ConicBundleError, ConicBundleModel,
    FibrewiseFailure,
};
use crate::exactnum::{ExactError, Surd};
use crate::projline::{Moebius, ProjError};
use crate::realcurves::{
    bertini_table, dejonquieres_conjugate, equivalences, geiser_table, hyperelliptic_components,
    kowalevskaya_class_profile, BinaryForm, CurveVerdict, KowalevskayaQuartic, RealCurveError,
};

pub use family::{corollary_family, corollary_pairs, CorollaryParams};
pub use quadric::{
    classify_quadric, FixedLocus, QuadricAction, QuadricClass, QuadricInvolutionData, QuadricRepresentative,
    QuadricSurface,
};
pub use representatives::class_representatives;
pub use trepalin::{trepalin_base_maps, trepalin_class, trepalin_real_type, RealType, TrepalinData};

pub const CITE_REMAINING: &str = "For the remaining classes T''4, dJ1, I1 and I'1 we do not know how to decide \
     whether two involutions inside a class are conjugate";
pub const CITE_DJ1_I1: &str = "involutions from dJ1 can be conjugate to involutions from I1; \
     we do not know whether these two classes coincide";
pub const CITE_T4: &str = "the base-map criterion distinguishes involutions in T4n only for n >= 2; \
     conjugacy inside T4 is open";
pub const CITE_DEL_PEZZO: &str = "conjugate if and only if the surfaces are equivariantly isomorphic; \
     no isomorphism was found among the supported coordinate changes";

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum InvolutionError {
    #[error("invalid action: {0}")]
    InvalidAction(String),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("real locus maps onto {arcs} arcs, so the surface is not R-rational")]
    NotRRational { arcs: usize },
    #[error("{0} special fibres, expected 0, 1 or 2")]
    DeltaOutOfRange(usize),
    #[error(transparent)]
    ConicBundle(#[from] ConicBundleError),
    #[error(transparent)]
    Curve(#[from] RealCurveError),
    #[error(transparent)]
    Proj(#[from] ProjError),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// The twelve classes. `T(n)` has `4n` singular fibres, `TPrime(n)` has
/// `4n + 2`, `TDoublePrime(n)` has `4n`; the others carry the genus of the
/// fixed curve.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum InvolutionClass {
    L,
    Q,
    T(u32),
    TPrime(u32),
    TDoublePrime(u32),
    B4,
    G3,
    K1,
    DJ(u32),
    I(u32),
    IPrime(u32),
    IDoublePrime(u32),
}

impl fmt::Display for InvolutionClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use InvolutionClass::*;
        match self {
            L => f.write_str("L"),
            Q => f.write_str("Q"),
            T(n) => write!(f, "T{}", 4 * n),
            TPrime(n) => write!(f, "T'{}", 4 * n + 2),
            TDoublePrime(n) => write!(f, "T''{}", 4 * n),
            B4 => f.write_str("B4"),
            G3 => f.write_str("G3"),
            K1 => f.write_str("K1"),
            DJ(g) => write!(f, "dJ{g}"),
            I(g) => write!(f, "I{g}"),
            IPrime(g) => write!(f, "I'{g}"),
            IDoublePrime(g) => write!(f, "I''{g}"),
        }
    }
}

/// Real del Pezzo surface of degree 1 or 2 as a double cover, labelled by
/// the reference row of its branch curve and the sign of the cover. The
/// branch curve equation is kept as opaque text.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DelPezzoLabel {
    pub curve: String,
    pub row: usize,
    pub sign: i32,
}

impl DelPezzoLabel {
    fn surface_topology(&self, degree: u8) -> &'static str {
        let (p, m) = if degree == 1 {
            let r = bertini_table()[self.row];
            (r.s_plus, r.s_minus)
        } else {
            let r = geiser_table()[self.row];
            (r.s_plus, r.s_minus)
        };
        if self.sign > 0 {
            p
        } else {
            m
        }
    }

    fn validate(&self, degree: u8) -> Result<(), InvolutionError> {
        let rows = if degree == 1 { bertini_table().len() } else { geiser_table().len() };
        if self.row >= rows {
            return Err(InvolutionError::InvalidParameters(format!("row {} out of range", self.row)));
        }
        if self.sign != 1 && self.sign != -1 {
            return Err(InvolutionError::InvalidParameters("sign must be +1 or -1".into()));
        }
        let top = self.surface_topology(degree);
        if top == "empty" || top.contains(" + ") {
            return Err(InvolutionError::InvalidParameters(format!(
                "real locus {top} is not connected, so the surface is not R-rational"
            )));
        }
        Ok(())
    }

    /// Real locus of the branch curve, which is the fixed curve.
    fn curve_topology(&self, degree: u8) -> String {
        if degree == 1 {
            format!("{} ovals and a big circle", bertini_table()[self.row].ovals)
        } else {
            geiser_table()[self.row].quartic.to_string()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InvolutionModel {
    Linear,
    Quadric(QuadricInvolutionData),
    Trepalin(TrepalinData),
    ConicBundle(ConicBundleModel),
    DeJonquieres(BinaryForm),
    Bertini(DelPezzoLabel),
    Geiser(DelPezzoLabel),
    Kowalevskaya(KowalevskayaQuartic),
}

impl InvolutionModel {
    pub fn bertini(label: DelPezzoLabel) -> Result<Self, InvolutionError> {
        label.validate(1)?;
        Ok(InvolutionModel::Bertini(label))
    }

    pub fn geiser(label: DelPezzoLabel) -> Result<Self, InvolutionError> {
        label.validate(2)?;
        Ok(InvolutionModel::Geiser(label))
    }

    /// Kowalevskaya model whose quartic is one oval or two nested ovals.
    pub fn kowalevskaya(k: KowalevskayaQuartic) -> Result<Self, InvolutionError> {
        kowalevskaya_class_profile(&k)?;
        Ok(InvolutionModel::Kowalevskaya(k))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConjugacyWitness {
    /// Both reduce to the same normal form.
    NormalForm(String),
    /// Identical defining data.
    IdenticalData,
    /// Base map carrying the Trepalin data of the first onto the second.
    BaseMap(Moebius),
    /// Base map `φ` with `Δ_2^φ = λ Δ_1`, `H_2^φ = μ H_1`.
    BaseChange { map: Moebius, lambda: Surd, mu: Surd },
    /// `f^m = c g` with `c > 0`.
    CurveMap(Moebius),
}

impl fmt::Display for ConjugacyWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConjugacyWitness::NormalForm(s) => write!(f, "normal form: {s}"),
            ConjugacyWitness::IdenticalData => f.write_str("identical data"),
            ConjugacyWitness::BaseMap(m) => write!(f, "base map {m}"),
            ConjugacyWitness::BaseChange { map, lambda, mu } => {
                write!(f, "base map {map}, lambda = {lambda}, mu = {mu}")
            }
            ConjugacyWitness::CurveMap(m) => write!(f, "curve map {m}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NotConjugateReason {
    DistinctClasses(InvolutionClass, InvolutionClass),
    QuadricRepresentatives(QuadricRepresentative, QuadricRepresentative),
    NoBaseMap,
    FixedCurvesDiffer,
    ConicBundle(FibrewiseFailure),
    SurfaceTopology(String, String),
}

impl fmt::Display for NotConjugateReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NotConjugateReason::DistinctClasses(a, b) => write!(f, "distinct classes {a} and {b}"),
            NotConjugateReason::QuadricRepresentatives(a, b) => {
                write!(f, "distinct quadric representatives {a} and {b}")
            }
            NotConjugateReason::NoBaseMap => f.write_str("no base map matches the singular fibres"),
            NotConjugateReason::FixedCurvesDiffer => f.write_str("fixed curves are not isomorphic"),
            NotConjugateReason::ConicBundle(e) => write!(f, "{e}"),
            NotConjugateReason::SurfaceTopology(a, b) => write!(f, "real loci differ: {a} vs {b}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConjugacyVerdict {
    Conjugate(ConjugacyWitness),
    NotConjugate(NotConjugateReason),
    /// A fibration-preserving conjugation exists, in a class where its
    /// absence would not decide conjugacy.
    FibrewiseConjugateOnly(ConjugacyWitness),
    /// The question is open; `fibrewise` is the fibration-preserving test
    /// when one applies.
    Unknown { citation: &'static str, fibrewise: Option<bool> },
}

impl ConjugacyVerdict {
    pub fn kind(&self) -> &'static str {
        match self {
            ConjugacyVerdict::Conjugate(_) => "Conjugate",
            ConjugacyVerdict::NotConjugate(_) => "NotConjugate",
            ConjugacyVerdict::FibrewiseConjugateOnly(_) => "FibrewiseConjugateOnly",
            ConjugacyVerdict::Unknown { .. } => "Unknown",
        }
    }

    pub fn is_conjugate(&self) -> bool {
        matches!(self, ConjugacyVerdict::Conjugate(_))
    }

    pub fn is_unknown(&self) -> bool {
        matches!(self, ConjugacyVerdict::Unknown { .. })
    }

    fn unknown(citation: &'static str) -> Self {
        ConjugacyVerdict::Unknown {
            citation,
            fibrewise: None,
        }
    }
}

impl fmt::Display for ConjugacyVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConjugacyVerdict::Conjugate(w) => write!(f, "Conjugate ({w})"),
            ConjugacyVerdict::NotConjugate(r) => write!(f, "NotConjugate ({r})"),
            ConjugacyVerdict::FibrewiseConjugateOnly(w) => write!(f, "FibrewiseConjugateOnly ({w})"),
            ConjugacyVerdict::Unknown { citation, fibrewise } => {
                write!(f, "Unknown ({citation})")?;
                if let Some(b) = fibrewise {
                    write!(f, "; fibrewise conjugate: {b}")?;
                }
                Ok(())
            }
        }
    }
}

pub fn quadric_conjugate(q1: &QuadricInvolutionData, q2: &QuadricInvolutionData) -> ConjugacyVerdict {
    use QuadricClass::*;
    match (classify_quadric(q1), classify_quadric(q2)) {
        (Linearisable, Linearisable) => ConjugacyVerdict::Conjugate(ConjugacyWitness::NormalForm("linear".into())),
        (NonLinearisable(a), NonLinearisable(b)) if a == b => {
            ConjugacyVerdict::Conjugate(ConjugacyWitness::NormalForm(a.to_string()))
        }
        (NonLinearisable(a), NonLinearisable(b)) => {
            ConjugacyVerdict::NotConjugate(NotConjugateReason::QuadricRepresentatives(a, b))
        }
        (a, b) => ConjugacyVerdict::NotConjugate(NotConjugateReason::DistinctClasses(
            quadric_tag(a),
            quadric_tag(b),
        )),
    }
}

fn quadric_tag(c: QuadricClass) -> InvolutionClass {
    match c {
        QuadricClass::Linearisable => InvolutionClass::L,
        QuadricClass::NonLinearisable(_) => InvolutionClass::Q,
    }
}

/// Witnesses carry the first data onto the second; for `T4` and `T''4` an
/// empty search is Unknown.
pub fn trepalin_conjugate(d1: &TrepalinData, d2: &TrepalinData) -> Result<ConjugacyVerdict, InvolutionError> {
    let (c1, c2) = (trepalin_class(d1), trepalin_class(d2));
    if c1 != c2 {
        return Ok(ConjugacyVerdict::NotConjugate(NotConjugateReason::DistinctClasses(c1, c2)));
    }
    if let Some(phi) = trepalin_base_maps(d1, d2)?.into_iter().next() {
        return Ok(ConjugacyVerdict::Conjugate(ConjugacyWitness::BaseMap(phi)));
    }
    Ok(match c1 {
        InvolutionClass::T(1) => ConjugacyVerdict::unknown(CITE_T4),
        InvolutionClass::TDoublePrime(1) => ConjugacyVerdict::unknown(CITE_REMAINING),
        _ => ConjugacyVerdict::NotConjugate(NotConjugateReason::NoBaseMap),
    })
}

/// Class of a conic bundle model from its normal-form invariants.
pub fn classify_conic_bundle(m: &ConicBundleModel) -> Result<InvolutionClass, InvolutionError> {
    let inv = normal_form_invariants(m)?;
    if inv.arcs.len() != 1 {
        return Err(InvolutionError::NotRRational { arcs: inv.arcs.len() });
    }
    let d = inv.delta.deg();
    if d == 2 {
        return Ok(InvolutionClass::T(1));
    }
    let g = (d / 2 - 1) as u32;
    Ok(match inv.kept_roots.len() {
        0 => InvolutionClass::I(g),
        1 => InvolutionClass::IPrime(g),
        2 => InvolutionClass::IDoublePrime(g),
        k => return Err(InvolutionError::DeltaOutOfRange(k)),
    })
}

pub fn classify_model(m: &InvolutionModel) -> Result<InvolutionClass, InvolutionError> {
    Ok(match m {
        InvolutionModel::Linear => InvolutionClass::L,
        InvolutionModel::Quadric(q) => quadric_tag(classify_quadric(q)),
        InvolutionModel::Trepalin(d) => trepalin_class(d),
        InvolutionModel::ConicBundle(c) => classify_conic_bundle(c)?,
        InvolutionModel::DeJonquieres(f) => InvolutionClass::DJ(f.half_degree() as u32 - 1),
        InvolutionModel::Bertini(_) => InvolutionClass::B4,
        InvolutionModel::Geiser(_) => InvolutionClass::G3,
        InvolutionModel::Kowalevskaya(_) => InvolutionClass::K1,
    })
}

/// Fixed curve `w^2 = sign * f` as a binary form and sign.
fn fixed_curve(m: &InvolutionModel) -> Result<Option<(BinaryForm, i32)>, InvolutionError> {
    Ok(match m {
        InvolutionModel::DeJonquieres(f) => Some((f.clone(), 1)),
        InvolutionModel::ConicBundle(c) => {
            let inv = normal_form_invariants(c)?;
            Some((BinaryForm::from_poly(inv.delta)?, -1))
        }
        _ => None,
    })
}

pub fn decide_conjugacy(m1: &InvolutionModel, m2: &InvolutionModel) -> Result<ConjugacyVerdict, InvolutionError> {
    use InvolutionClass::*;
    let (c1, c2) = (classify_model(m1)?, classify_model(m2)?);
    if c1 != c2 {
        if matches!((c1, c2), (DJ(1), I(1)) | (I(1), DJ(1))) {
            let (f1, s1) = fixed_curve(m1)?.expect("fixed curve");
            let (f2, s2) = fixed_curve(m2)?.expect("fixed curve");
            if hyperelliptic_components(&f1, s1)? != hyperelliptic_components(&f2, s2)? {
                return Ok(ConjugacyVerdict::NotConjugate(NotConjugateReason::FixedCurvesDiffer));
            }
            return Ok(ConjugacyVerdict::unknown(CITE_DJ1_I1));
        }
        return Ok(ConjugacyVerdict::NotConjugate(NotConjugateReason::DistinctClasses(c1, c2)));
    }
    match (m1, m2) {
        (InvolutionModel::Quadric(q1), InvolutionModel::Quadric(q2)) => Ok(quadric_conjugate(q1, q2)),
        (InvolutionModel::Trepalin(d1), InvolutionModel::Trepalin(d2)) => trepalin_conjugate(d1, d2),
        (InvolutionModel::ConicBundle(a), InvolutionModel::ConicBundle(b)) if c1 != T(1) => {
            conic_bundle_conjugate(a, b, c1)
        }
        (InvolutionModel::DeJonquieres(f), InvolutionModel::DeJonquieres(g)) => dj_conjugate(f, g, c1),
        (InvolutionModel::Bertini(a), InvolutionModel::Bertini(b)) => Ok(del_pezzo_conjugate(a, b, 1)),
        (InvolutionModel::Geiser(a), InvolutionModel::Geiser(b)) => Ok(del_pezzo_conjugate(a, b, 2)),
        (InvolutionModel::Kowalevskaya(a), InvolutionModel::Kowalevskaya(b)) => kowalevskaya_conjugate(a, b),
        _ => Ok(match c1 {
            L => ConjugacyVerdict::Conjugate(ConjugacyWitness::NormalForm("linear".into())),
            T(1) => ConjugacyVerdict::unknown(CITE_T4),
            _ => unreachable!("class {c1} has a single representation"),
        }),
    }
}

fn conic_bundle_conjugate(
    a: &ConicBundleModel,
    b: &ConicBundleModel,
    class: InvolutionClass,
) -> Result<ConjugacyVerdict, InvolutionError> {
    let (na, nb) = (normalize(a)?, normalize(b)?);
    let v = conjugate_mod_pgl2(&na, &nb)?;
    let decidable = !matches!(class, InvolutionClass::I(1) | InvolutionClass::IPrime(1));
    if v.conjugate {
        let w = ConjugacyWitness::BaseChange {
            map: v.map.expect("witness map"),
            lambda: v.lambda.expect("witness lambda"),
            mu: v.mu.expect("witness mu"),
        };
        return Ok(if decidable {
            ConjugacyVerdict::Conjugate(w)
        } else {
            ConjugacyVerdict::FibrewiseConjugateOnly(w)
        });
    }
    if decidable {
        let reason = v.failure.unwrap_or(FibrewiseFailure::Configuration);
        return Ok(ConjugacyVerdict::NotConjugate(NotConjugateReason::ConicBundle(reason)));
    }
    Ok(ConjugacyVerdict::Unknown {
        citation: CITE_REMAINING,
        fibrewise: Some(fibrewise_conjugate(&na, &nb)?.conjugate),
    })
}

fn dj_conjugate(f: &BinaryForm, g: &BinaryForm, class: InvolutionClass) -> Result<ConjugacyVerdict, InvolutionError> {
    if let Some((m, _)) = equivalences(f, g)?.into_iter().find(|(_, s)| *s > 0) {
        return Ok(ConjugacyVerdict::Conjugate(ConjugacyWitness::CurveMap(m)));
    }
    if class != InvolutionClass::DJ(1) {
        return Ok(match dejonquieres_conjugate(f, g)? {
            CurveVerdict::Conjugate => {
                ConjugacyVerdict::Conjugate(ConjugacyWitness::NormalForm("isomorphic fixed curves".into()))
            }
            CurveVerdict::NotConjugate => ConjugacyVerdict::NotConjugate(NotConjugateReason::FixedCurvesDiffer),
        });
    }
    if hyperelliptic_components(f, 1)? != hyperelliptic_components(g, 1)? {
        return Ok(ConjugacyVerdict::NotConjugate(NotConjugateReason::FixedCurvesDiffer));
    }
    Ok(ConjugacyVerdict::unknown(CITE_REMAINING))
}

fn kowalevskaya_conjugate(a: &KowalevskayaQuartic, b: &KowalevskayaQuartic) -> Result<ConjugacyVerdict, InvolutionError> {
    if a == b {
        return Ok(ConjugacyVerdict::Conjugate(ConjugacyWitness::IdenticalData));
    }
    // One oval bounds a sphere, two nested ovals a torus.
    let top = |k| -> Result<&'static str, InvolutionError> {
        Ok(if kowalevskaya_class_profile(k)?.nested { "S1 x S1" } else { "S2" })
    };
    let (ta, tb) = (top(a)?, top(b)?);
    if ta != tb {
        return Ok(ConjugacyVerdict::NotConjugate(NotConjugateReason::SurfaceTopology(ta.into(), tb.into())));
    }
    Ok(ConjugacyVerdict::unknown(CITE_DEL_PEZZO))
}

fn del_pezzo_conjugate(a: &DelPezzoLabel, b: &DelPezzoLabel, degree: u8) -> ConjugacyVerdict {
    if a == b {
        return ConjugacyVerdict::Conjugate(ConjugacyWitness::IdenticalData);
    }
    let (ca, cb) = (a.curve_topology(degree), b.curve_topology(degree));
    if ca != cb {
        return ConjugacyVerdict::NotConjugate(NotConjugateReason::FixedCurvesDiffer);
    }
    let (sa, sb) = (a.surface_topology(degree), b.surface_topology(degree));
    if sa != sb {
        return ConjugacyVerdict::NotConjugate(NotConjugateReason::SurfaceTopology(sa.into(), sb.into()));
    }
    ConjugacyVerdict::unknown(CITE_DEL_PEZZO)
}

/// Rational version of a verdict's base map, for tests and reports.
pub fn witness_map(v: &ConjugacyVerdict) -> Option<&Moebius> {
    match v {
        ConjugacyVerdict::Conjugate(w) | ConjugacyVerdict::FibrewiseConjugateOnly(w) => match w {
            ConjugacyWitness::BaseMap(m) | ConjugacyWitness::CurveMap(m) => Some(m),
            ConjugacyWitness::BaseChange { map, .. } => Some(map),
            _ => None,
        },
        _ => None,
    }
}

#[cfg(test)]
mod tests;
