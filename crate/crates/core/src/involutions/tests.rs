use super::*;
use crate::conicbundle::{real_image_arcs, validate_model};
use crate::exactnum::{frac, isolate_real_roots, parse_poly, rat, sign_on_regions, Rat, RatPoly};
use crate::projline::ExtPoint;
use crate::realcurves::hyperelliptic_components;

fn q31(p: [i32; 4]) -> QuadricInvolutionData {
    QuadricInvolutionData::new(QuadricSurface::Q31, QuadricAction::SignPattern(p)).unwrap()
}

fn ints(v: &[i64]) -> Vec<Rat> {
    v.iter().map(|&x| rat(x)).collect()
}

fn m(v: [i64; 4]) -> [Rat; 4] {
    v.map(rat)
}

const ID: [i64; 4] = [1, 0, 0, 1];
const ALPHA: [i64; 4] = [0, 1, 1, 0];
const ALPHA_PRIME: [i64; 4] = [0, 1, -1, 0];

fn q22(a: [i64; 4], b: [i64; 4]) -> QuadricInvolutionData {
    QuadricInvolutionData::new(QuadricSurface::Q22, QuadricAction::Fibrewise(m(a), m(b))).unwrap()
}

fn conic(a: &str, c: &str, h: &str) -> ConicBundleModel {
    validate_model(&parse_poly(a).unwrap(), &RatPoly::zero(), &parse_poly(c).unwrap(), &parse_poly(h).unwrap()).unwrap()
}

fn family(quads: &[&str]) -> CorollaryParams {
    CorollaryParams {
        epsilons: ints(&[1, 2, 3, 4]),
        quads: quads.iter().map(|q| parse_poly(q).unwrap()).collect(),
        a: rat(0),
        b: rat(5),
    }
}

#[test]
fn quadric_fixed_loci() {
    let rows = [
        (q31([1, -1, -1, 1]), "4 points", "2 points", QuadricClass::Linearisable),
        (q31([1, -1, 1, 1]), "{y^2+z^2=w^2}", "S1", QuadricClass::Linearisable),
        (
            q31([-1, 1, 1, 1]),
            "{x^2+y^2+z^2=0}",
            "empty",
            QuadricClass::NonLinearisable(QuadricRepresentative::Antipodal),
        ),
        (
            QuadricInvolutionData::new(QuadricSurface::Q22, QuadricAction::FactorSwap).unwrap(),
            "the diagonal",
            "S1",
            QuadricClass::Linearisable,
        ),
    ];
    for (q, complex, real, class) in rows {
        let f = q.fixed_locus();
        assert_eq!((f.complex.as_str(), f.real.as_str()), (complex, real), "{}", q.action());
        assert_eq!(classify_quadric(&q), class);
    }
    // A trace-zero factor has real fixed points iff its determinant is negative.
    assert_eq!(q22(ALPHA, ALPHA).fixed_locus().real, "4 points");
    assert_eq!(q22(ALPHA, ALPHA_PRIME).fixed_locus().real, "0 points");
    assert_eq!(q22(ALPHA_PRIME, ALPHA_PRIME).fixed_locus().complex, "4 points");
    assert_eq!(q22(ID, ALPHA_PRIME).fixed_locus().real, "empty");
    assert_eq!(q22(ID, ALPHA).fixed_locus().real, "S1 + S1");
    for (a, b) in [(ID, ALPHA_PRIME), (ALPHA, ALPHA_PRIME), (ALPHA_PRIME, ALPHA_PRIME)] {
        assert_eq!(
            classify_quadric(&q22(a, b)),
            QuadricClass::NonLinearisable(QuadricRepresentative::Rotation)
        );
    }
}

#[test]
fn quadric_validation() {
    let err = |s, a| matches!(QuadricInvolutionData::new(s, a), Err(InvolutionError::InvalidAction(_)));
    assert!(err(QuadricSurface::Q31, QuadricAction::SignPattern([1, 1, 1, 1])));
    assert!(err(QuadricSurface::Q31, QuadricAction::SignPattern([2, 1, 1, 1])));
    assert!(err(QuadricSurface::Q31, QuadricAction::FactorSwap));
    assert!(err(QuadricSurface::Q22, QuadricAction::SignPattern([-1, 1, 1, 1])));
    assert!(err(QuadricSurface::Q22, QuadricAction::Fibrewise(m(ID), m(ID))));
    assert!(err(QuadricSurface::Q22, QuadricAction::Fibrewise(m([1, 1, 0, 1]), m(ALPHA))));
    assert!(err(QuadricSurface::Q22, QuadricAction::Fibrewise(m([1, 1, 1, -1]), m([0, 0, 0, 0]))));
}

#[test]
fn quadric_verdicts() {
    let anti = q31([-1, 1, 1, 1]);
    let rot = q22(ID, ALPHA_PRIME);
    assert!(quadric_conjugate(&anti, &anti).is_conjugate());
    assert_eq!(
        quadric_conjugate(&anti, &rot),
        ConjugacyVerdict::NotConjugate(NotConjugateReason::QuadricRepresentatives(
            QuadricRepresentative::Antipodal,
            QuadricRepresentative::Rotation
        ))
    );
    assert!(quadric_conjugate(&q22(ID, ALPHA_PRIME), &q22(ALPHA_PRIME, ALPHA_PRIME)).is_conjugate());
    assert!(quadric_conjugate(&q31([1, -1, 1, 1]), &q22(ALPHA, ALPHA)).is_conjugate());
    assert_eq!(quadric_conjugate(&anti, &q31([1, -1, 1, 1])).kind(), "NotConjugate");
}

#[test]
fn trepalin_classes() {
    let t4 = TrepalinData::new(0, ints(&[0, 1]), rat(-1), frac(1, 2)).unwrap();
    assert_eq!(trepalin_class(&t4).to_string(), "T4");
    assert_eq!(t4.canonical_degree(), 4);
    assert_eq!(trepalin_real_type(&t4), RealType::Sphere);
    let t4_torus = TrepalinData::new(0, ints(&[0, 1]), frac(1, 4), frac(1, 2)).unwrap();
    assert_eq!(trepalin_real_type(&t4_torus), RealType::Torus);

    let t6 = TrepalinData::new(1, ints(&[0, 1, 2, 3]), rat(-1), rat(1)).unwrap();
    assert_eq!(trepalin_class(&t6).to_string(), "T'6");
    assert_eq!((t6.singular_fibres(), t6.canonical_degree()), (6, 2));
    assert_eq!(trepalin_real_type(&t6), RealType::Sphere);
    let t6_torus = TrepalinData::new(1, ints(&[0, 1, 2, 3]), frac(1, 2), rat(1)).unwrap();
    assert_eq!(trepalin_real_type(&t6_torus), RealType::Torus);
    let t6_far = TrepalinData::new(1, ints(&[0, 1, 2, 3]), frac(1, 2), rat(2)).unwrap();
    assert_eq!(trepalin_real_type(&t6_far), RealType::Sphere);

    let t4pp = TrepalinData::new(2, ints(&[0, 1, 2, 3]), rat(0), rat(2)).unwrap();
    assert_eq!(trepalin_class(&t4pp).to_string(), "T''4");
    assert_eq!(t4pp.canonical_degree(), 4);
    assert_eq!(trepalin_real_type(&t4pp), RealType::Sphere);
    let t4pp_torus = TrepalinData::new(2, ints(&[0, 1, 2, 3]), rat(0), rat(1)).unwrap();
    assert_eq!(trepalin_real_type(&t4pp_torus), RealType::Torus);

    let t12 = TrepalinData::new(0, ints(&[0, 1, 2, 3, 4, 5]), rat(-1), frac(1, 2)).unwrap();
    assert_eq!((trepalin_class(&t12), t12.canonical_degree()), (InvolutionClass::T(3), -4));
}

#[test]
fn trepalin_validation() {
    let bad = |t, e: &[i64], l1, l2| TrepalinData::new(t, ints(e), l1, l2).is_err();
    assert!(bad(3, &[0, 1], rat(-1), frac(1, 2)));
    assert!(bad(0, &[0, 1, 2], rat(-1), frac(1, 2)));
    assert!(bad(0, &[1, 0], rat(-1), frac(1, 2)));
    assert!(bad(0, &[0, 1], rat(0), frac(1, 2)));
    assert!(bad(0, &[0, 1], rat(-1), rat(2)));
    assert!(bad(1, &[0, 1], rat(-1), rat(1)));
    assert!(bad(1, &[0, 1, 2, 3], rat(0), rat(1)));
    assert!(bad(1, &[0, 1, 2, 3], rat(-1), rat(2)));
    assert!(bad(2, &[0, 1, 2, 3], rat(1), rat(2)));
    assert!(bad(2, &[0, 1, 2, 3], rat(0), rat(3)));
}

#[test]
fn trepalin_verdicts() {
    let d = TrepalinData::new(0, ints(&[0, 1, 2, 3]), rat(-1), frac(1, 2)).unwrap();
    let phi = Moebius::from_ints(2, 1, 0, 1).unwrap();
    let image = d.transform(&phi).unwrap();
    let v = trepalin_conjugate(&d, &image).unwrap();
    let w = witness_map(&v).unwrap();
    for (x, y) in d.epsilons().iter().zip(image.epsilons()) {
        assert_eq!(w.apply_rat(x), ExtPoint::rat(y.clone()));
    }
    // Moving λ2 from 1/2 to 2/3 leaves no map fixing {0,1,2,3} and matching the λ pairs.
    let perturbed = TrepalinData::new(0, ints(&[0, 1, 2, 3]), rat(-1), frac(2, 3)).unwrap();
    assert_eq!(
        trepalin_conjugate(&d, &perturbed).unwrap(),
        ConjugacyVerdict::NotConjugate(NotConjugateReason::NoBaseMap)
    );
    let t4a = TrepalinData::new(0, ints(&[0, 1]), rat(-1), frac(1, 2)).unwrap();
    let t4b = TrepalinData::new(0, ints(&[0, 1]), rat(-2), frac(1, 3)).unwrap();
    assert_eq!(
        trepalin_conjugate(&t4a, &t4b).unwrap(),
        ConjugacyVerdict::Unknown {
            citation: CITE_T4,
            fibrewise: None
        }
    );
    let t6 = TrepalinData::new(1, ints(&[0, 1, 2, 3]), rat(-1), rat(1)).unwrap();
    assert_eq!(trepalin_conjugate(&d, &t6).unwrap().kind(), "NotConjugate");
}

#[test]
fn classification() {
    let s0 = family(&[]);
    let m0 = InvolutionModel::ConicBundle(s0.model(&rat(0), &rat(5)).unwrap());
    assert_eq!(classify_model(&m0), Ok(InvolutionClass::IDoublePrime(1)));
    let s1 = family(&["t^2+1"]);
    let m1 = InvolutionModel::ConicBundle(s1.model(&rat(0), &rat(5)).unwrap());
    assert_eq!(classify_model(&m1), Ok(InvolutionClass::IDoublePrime(2)));
    let dj = InvolutionModel::DeJonquieres(BinaryForm::new(parse_poly("t^6-1").unwrap(), 6).unwrap());
    assert_eq!(classify_model(&dj), Ok(InvolutionClass::DJ(2)));
    let t4 = InvolutionModel::ConicBundle(conic("1", "(t-1)*(t-2)", "-1"));
    assert_eq!(classify_model(&t4), Ok(InvolutionClass::T(1)));
    let two_arcs = InvolutionModel::ConicBundle(conic("1", "(t-1)*(t-2)*(t-3)*(t-4)", "-1"));
    assert_eq!(classify_model(&two_arcs), Err(InvolutionError::NotRRational { arcs: 2 }));
    for (class, model) in class_representatives() {
        assert_eq!(classify_model(&model), Ok(class));
    }
}

#[test]
fn label_validation() {
    let label = |row, sign| DelPezzoLabel {
        curve: "c".into(),
        row,
        sign,
    };
    assert!(InvolutionModel::bertini(label(0, 1)).is_ok());
    assert!(InvolutionModel::bertini(label(1, 1)).is_err());
    assert!(InvolutionModel::bertini(label(1, -1)).is_ok());
    assert!(InvolutionModel::bertini(label(5, -1)).is_err());
    assert!(InvolutionModel::geiser(label(0, 1)).is_err());
    assert!(InvolutionModel::geiser(label(3, 1)).is_ok());
    let printed = KowalevskayaQuartic::new(rat(27), rat(-27), rat(6), rat(2), -1).unwrap();
    assert!(InvolutionModel::kowalevskaya(printed).is_err());
}

#[test]
fn cross_class_verdicts() {
    let reps = class_representatives();
    let get = |c: InvolutionClass| reps.iter().find(|(k, _)| *k == c).unwrap().1.clone();
    let (dj1, i1) = (get(InvolutionClass::DJ(1)), get(InvolutionClass::I(1)));
    assert_eq!(
        decide_conjugacy(&dj1, &i1),
        Ok(ConjugacyVerdict::Unknown {
            citation: CITE_DJ1_I1,
            fibrewise: None
        })
    );
    // Two real components against one.
    let dj1b = InvolutionModel::DeJonquieres(BinaryForm::new(parse_poly("(t^2-1)*(t^2-4)").unwrap(), 4).unwrap());
    assert_eq!(
        decide_conjugacy(&dj1b, &i1),
        Ok(ConjugacyVerdict::NotConjugate(NotConjugateReason::FixedCurvesDiffer))
    );
    // Genus 2 with the same fixed curve w^2 = -4(t-1)(t-2)(t^2+1)(t^2+2).
    let i2 = InvolutionModel::ConicBundle(conic("1", "(t-1)*(t-2)*(t^2+1)*(t^2+2)", "-1"));
    let dj2 = InvolutionModel::DeJonquieres(
        BinaryForm::new(parse_poly("-4*(t-1)*(t-2)*(t^2+1)*(t^2+2)").unwrap(), 6).unwrap(),
    );
    assert_eq!(
        decide_conjugacy(&dj2, &i2),
        Ok(ConjugacyVerdict::NotConjugate(NotConjugateReason::DistinctClasses(
            InvolutionClass::DJ(2),
            InvolutionClass::I(2)
        )))
    );
    assert!(decide_conjugacy(&InvolutionModel::Linear, &get(InvolutionClass::L)).unwrap().is_conjugate());
}

#[test]
fn within_class_verdicts() {
    let s1 = family(&["t^2+1"]);
    let x = InvolutionModel::ConicBundle(s1.model(&rat(0), &rat(5)).unwrap());
    let y = InvolutionModel::ConicBundle(s1.model(&frac(-1, 2), &rat(7)).unwrap());
    assert!(decide_conjugacy(&x, &x).unwrap().is_conjugate());
    assert_eq!(decide_conjugacy(&x, &y).unwrap().kind(), "NotConjugate");

    let i1 = InvolutionModel::ConicBundle(conic("1", "(t-1)*(t-2)*(t^2+1)", "-1"));
    let i1b = InvolutionModel::ConicBundle(conic("1", "(t-1)*(t-3)*(t^2+1)", "-1"));
    assert_eq!(decide_conjugacy(&i1, &i1).unwrap().kind(), "FibrewiseConjugateOnly");
    assert_eq!(
        decide_conjugacy(&i1, &i1b),
        Ok(ConjugacyVerdict::Unknown {
            citation: CITE_REMAINING,
            fibrewise: Some(false)
        })
    );

    let f = BinaryForm::new(parse_poly("t*(t-1)*(t-2)*(t^2+1)").unwrap(), 6).unwrap();
    let g = f.pullback(&Moebius::from_ints(1, 1, 0, 2).unwrap()).unwrap();
    let (df, dg) = (InvolutionModel::DeJonquieres(f.clone()), InvolutionModel::DeJonquieres(g));
    assert!(decide_conjugacy(&df, &dg).unwrap().is_conjugate());
    let dneg = InvolutionModel::DeJonquieres(f.neg());
    assert_eq!(
        decide_conjugacy(&df, &dneg),
        Ok(ConjugacyVerdict::NotConjugate(NotConjugateReason::FixedCurvesDiffer))
    );
}

#[test]
fn label_verdicts() {
    let g = |row, sign, curve: &str| {
        InvolutionModel::geiser(DelPezzoLabel {
            curve: curve.into(),
            row,
            sign,
        })
        .unwrap()
    };
    assert!(decide_conjugacy(&g(1, 1, "a"), &g(1, 1, "a")).unwrap().is_conjugate());
    assert!(decide_conjugacy(&g(1, 1, "a"), &g(1, 1, "b")).unwrap().is_unknown());
    assert_eq!(
        decide_conjugacy(&g(1, 1, "a"), &g(3, 1, "a")),
        Ok(ConjugacyVerdict::NotConjugate(NotConjugateReason::FixedCurvesDiffer))
    );
    assert_eq!(decide_conjugacy(&g(1, 1, "a"), &g(1, -1, "a")).unwrap().kind(), "NotConjugate");
    let k = |a: i64, s| {
        InvolutionModel::kowalevskaya(KowalevskayaQuartic::new(rat(a), rat(-a), frac(2 * a, 9), rat(2), s).unwrap())
    };
    let one = InvolutionModel::kowalevskaya(KowalevskayaQuartic::new(rat(1), rat(0), rat(1), rat(2), -1).unwrap()).unwrap();
    let nested = k(27, 1).unwrap();
    assert_eq!(decide_conjugacy(&one, &nested).unwrap().kind(), "NotConjugate");
    assert!(decide_conjugacy(&nested, &nested).unwrap().is_conjugate());
}

#[test]
fn corollary_example() {
    let p = family(&[]);
    let models = corollary_family(&p, 1, 0).unwrap();
    let m = &models[0];
    assert_eq!(m.delta(), &p.f().scale(&rat(4)));
    assert_eq!(m.h(), &-RatPoly::from_roots(&ints(&[0, 5])));
    assert_eq!(real_image_arcs(m).to_strings(), vec![["0".to_string(), "5".to_string()]]);
    assert_eq!(p.genus(), 1);

    let p1 = family(&["t^2+1"]);
    assert_eq!(p1.genus(), 2);
    let f = BinaryForm::from_poly(p1.f()).unwrap();
    assert_eq!(hyperelliptic_components(&f, -1), Ok(2));

    let bad = CorollaryParams { a: rat(2), ..family(&[]) };
    assert!(matches!(corollary_family(&bad, 1, 0), Err(InvolutionError::InvalidParameters(_))));
    let bad_quad = family(&["t^2-1"]);
    assert!(corollary_family(&bad_quad, 1, 0).is_err());
}

#[test]
fn corollary_members_are_pairwise_distinct() {
    let p = family(&["t^2+1"]);
    let pairs = corollary_pairs(&p, 4, 7).unwrap();
    assert_eq!(pairs[0], (rat(0), rat(5)));
    assert_eq!(pairs, corollary_pairs(&p, 4, 7).unwrap());
    let models: Vec<InvolutionModel> =
        corollary_family(&p, 4, 7).unwrap().into_iter().map(InvolutionModel::ConicBundle).collect();
    for i in 0..models.len() {
        for j in 0..models.len() {
            let v = decide_conjugacy(&models[i], &models[j]).unwrap();
            assert_eq!(v.is_conjugate(), i == j, "{i} {j}: {v}");
        }
    }
}

#[test]
fn fixed_curve_components_match_discriminant_regions() {
    let p = family(&["t^2+1"]);
    let m = p.model(&rat(0), &rat(5)).unwrap();
    let minus_delta = -m.delta();
    let roots = isolate_real_roots(&minus_delta).unwrap();
    let positive = sign_on_regions(&minus_delta, &roots).iter().filter(|s| **s > 0).count();
    let f = BinaryForm::from_poly(p.f()).unwrap();
    assert_eq!(hyperelliptic_components(&f, -1), Ok(positive));
}
