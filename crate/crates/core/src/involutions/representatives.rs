//! One small model in each of the twelve classes.

use crate::conicbundle::validate_model;
use crate::exactnum::{frac, parse_poly, rat, RatPoly};
use crate::realcurves::{BinaryForm, KowalevskayaQuartic};

use super::{
    CorollaryParams, DelPezzoLabel, InvolutionClass, InvolutionModel, QuadricAction, QuadricInvolutionData,
    QuadricSurface, TrepalinData,
};

fn poly(s: &str) -> RatPoly {
    parse_poly(s).expect("fixed polynomial")
}

/// Representatives in the order L, Q, T4, T'6, T''4, B4, G3, K1, dJ1, I1,
/// I'1, I''1. The dJ1 and I1 models have isomorphic fixed curves.
pub fn class_representatives() -> Vec<(InvolutionClass, InvolutionModel)> {
    use InvolutionClass::*;
    let ints = |v: &[i64]| v.iter().map(|&x| rat(x)).collect::<Vec<_>>();
    let conic = |a: &str, c: &str, h: &str| {
        InvolutionModel::ConicBundle(validate_model(&poly(a), &RatPoly::zero(), &poly(c), &poly(h)).expect("valid model"))
    };
    let family = CorollaryParams {
        epsilons: ints(&[1, 2, 3, 4]),
        quads: Vec::new(),
        a: rat(0),
        b: rat(5),
    };
    vec![
        (L, InvolutionModel::Linear),
        (
            Q,
            InvolutionModel::Quadric(
                QuadricInvolutionData::new(QuadricSurface::Q31, QuadricAction::SignPattern([-1, 1, 1, 1]))
                    .expect("antipodal"),
            ),
        ),
        (
            T(1),
            InvolutionModel::Trepalin(TrepalinData::new(0, ints(&[0, 1]), rat(-1), frac(1, 2)).expect("T4")),
        ),
        (
            TPrime(1),
            InvolutionModel::Trepalin(TrepalinData::new(1, ints(&[0, 1, 2, 3]), rat(-1), rat(1)).expect("T'6")),
        ),
        (
            TDoublePrime(1),
            InvolutionModel::Trepalin(TrepalinData::new(2, ints(&[0, 1, 2, 3]), rat(0), rat(1)).expect("T''4")),
        ),
        (
            B4,
            InvolutionModel::bertini(DelPezzoLabel {
                curve: "w^2 = z^3 + x^6 + y^6".into(),
                row: 0,
                sign: 1,
            })
            .expect("Bertini"),
        ),
        (
            G3,
            InvolutionModel::geiser(DelPezzoLabel {
                curve: "x^4 + y^4 - z^4".into(),
                row: 1,
                sign: 1,
            })
            .expect("Geiser"),
        ),
        (
            K1,
            InvolutionModel::kowalevskaya(
                KowalevskayaQuartic::new(rat(1), rat(0), rat(1), rat(2), -1).expect("smooth quartic"),
            )
            .expect("one oval"),
        ),
        (
            DJ(1),
            InvolutionModel::DeJonquieres(BinaryForm::new(poly("-(t-1)*(t-2)*(t^2+1)"), 4).expect("form")),
        ),
        (I(1), conic("1", "(t-1)*(t-2)*(t^2+1)", "-1")),
        (IPrime(1), conic("t", "(t-1)*(t^2+1)", "-(t-2)")),
        (
            IDoublePrime(1),
            InvolutionModel::ConicBundle(family.model(&rat(0), &rat(5)).expect("family model")),
        ),
    ]
}
