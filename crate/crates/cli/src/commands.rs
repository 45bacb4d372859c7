//! Command implementations. Each returns a report and an exit code.

use std::path::Path;

use serde_json::{json, Value};

use cremona_core::conicbundle::{
    conjugate_mod_pgl2, fibrewise_conjugate, fixed_curve_genus, normal_form_invariants, normalize,
    real_image_arcs, ConicBundleModel,
};
use cremona_core::exactnum::{parse_poly_list, rat, rat_to_string, RatPoly};
use cremona_core::involutions::{
    classify_model, corollary_family, corollary_pairs, decide_conjugacy, trepalin_class, trepalin_real_type,
    ConjugacyVerdict, ConjugacyWitness, CorollaryParams, InvolutionError, InvolutionModel, NotConjugateReason,
};
use cremona_core::projline::ExtPoint;
use cremona_core::realcurves::{
    bertini_table, equivalences, geiser_table, hyperelliptic_components, is_gaussian, kowalevskaya_oval_profile,
    BinaryForm,
};
use cremona_core::wittforms::{equiv_binary_criterion, equiv_binary_oracle};

use crate::model::{self, invalid, Loaded, Stanza};
use crate::report::Report;
use crate::CliError;

pub const EXIT_OK: i32 = 0;
pub const EXIT_UNKNOWN: i32 = 4;
pub const EXIT_MISMATCH: i32 = 5;

pub type Outcome = Result<(Report, i32), CliError>;

pub fn read_stanza(path: &Path) -> Result<Stanza, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    Stanza::parse(&text)
}

fn arcs_value(m: &ConicBundleModel) -> Value {
    json!(real_image_arcs(m).to_strings())
}

fn substitution_value(l: &Loaded) -> Value {
    match &l.substitution {
        Some(phi) => match phi.apply(&ExtPoint::Infinity).as_rat() {
            Some(p) => json!(format!("t = {} + 1/u", rat_to_string(&p))),
            None => json!(format!("map {phi}")),
        },
        None => Value::Null,
    }
}

fn class_string(m: &InvolutionModel) -> Result<String, CliError> {
    classify_model(m).map(|c| c.to_string()).map_err(invalid)
}

pub fn validate(path: &Path) -> Outcome {
    let st = read_stanza(path)?;
    let mut r = Report::new("validate");
    r.set("kind", st.kind.as_str());
    let res = if st.kind == "hyperelliptic" {
        model::hyperelliptic(&st).map(|_| Value::Null)
    } else {
        model::involution(&st).map(|l| substitution_value(&l))
    };
    match res {
        Ok(sub) => {
            r.set("valid", true).set("errors", json!([])).set("substitution", sub);
            Ok((r, EXIT_OK))
        }
        Err(CliError::Invalid(e)) => {
            r.set("valid", false).set("errors", json!([e])).set("substitution", Value::Null);
            Ok((r, 3))
        }
        Err(e) => Err(e),
    }
}

fn conic_invariants(r: &mut Report, m: &ConicBundleModel) -> Result<(), CliError> {
    let inv = normal_form_invariants(m).map_err(invalid)?;
    let delta_deg = inv.delta.deg();
    let special = inv.kept_roots.len() as i64;
    let arcs = real_image_arcs(m);
    r.set("delta", m.delta().to_string())
        .set("genus", fixed_curve_genus(m).ok().map_or(Value::Null, Value::from))
        .set("special_fibres", special)
        .set("k2", 8 - delta_deg - special)
        .set("arcs", arcs_value(m))
        .set("r_rational", arcs.len() == 1);
    Ok(())
}

fn form_invariants(r: &mut Report, f: &BinaryForm, sign: i32) -> Result<(), CliError> {
    r.set("form", f.to_string())
        .set("sign", sign)
        .set("genus", f.half_degree() as i64 - 1)
        .set("components", hyperelliptic_components(f, sign).map_err(invalid)?)
        .set(
            "gaussian",
            if f.hom_degree() >= 6 {
                Value::from(is_gaussian(f).map_err(invalid)?)
            } else {
                Value::Null
            },
        );
    Ok(())
}

pub fn invariants(path: &Path) -> Outcome {
    let st = read_stanza(path)?;
    let mut r = Report::new("invariants");
    r.set("kind", st.kind.as_str()).set("valid", true).set("errors", json!([]));
    let res = invariants_of(&st, &mut r);
    match res {
        Ok(()) => Ok((r, EXIT_OK)),
        Err(CliError::Invalid(e)) => {
            r.set("valid", false).set("errors", json!([e]));
            if st.kind == "conic_bundle" {
                for k in ["delta", "genus", "special_fibres", "k2", "arcs", "r_rational"] {
                    if r.get(k).is_none() {
                        r.set(k, Value::Null);
                    }
                }
            }
            Ok((r, 3))
        }
        Err(e) => Err(e),
    }
}

fn invariants_of(st: &Stanza, r: &mut Report) -> Result<(), CliError> {
    if st.kind == "hyperelliptic" {
        let (f, sign) = model::hyperelliptic(st)?;
        return form_invariants(r, &f, sign);
    }
    let l = model::involution(st)?;
    r.set("substitution", substitution_value(&l));
    match &l.model {
        InvolutionModel::ConicBundle(m) => conic_invariants(r, m)?,
        InvolutionModel::Trepalin(d) => {
            r.set("r", d.r())
                .set("twist", d.twist())
                .set("singular_fibres", d.singular_fibres())
                .set("k2", d.canonical_degree())
                .set("real_locus", trepalin_real_type(d).to_string());
        }
        InvolutionModel::DeJonquieres(f) => form_invariants(r, f, 1)?,
        InvolutionModel::Quadric(q) => {
            let fl = q.fixed_locus();
            r.set("surface", format!("{:?}", q.surface()))
                .set("action", q.action().to_string())
                .set("fixed_locus", fl.complex)
                .set("fixed_locus_real", fl.real);
        }
        InvolutionModel::Bertini(l) => {
            let row = &bertini_table()[l.row];
            r.set("branch_curve", format!("big circle + {} ovals", row.ovals))
                .set("real_locus", if l.sign > 0 { row.s_plus } else { row.s_minus });
        }
        InvolutionModel::Geiser(l) => {
            let row = &geiser_table()[l.row];
            r.set("branch_curve", row.quartic)
                .set("real_locus", if l.sign > 0 { row.s_plus } else { row.s_minus });
        }
        InvolutionModel::Kowalevskaya(k) => {
            let p = kowalevskaya_oval_profile(k).map_err(invalid)?;
            r.set("ovals", p.ovals)
                .set("nested", p.nested)
                .set("real_locus", if p.ovals == 1 { "S2" } else { "S1 x S1" });
        }
        InvolutionModel::Linear => {}
    }
    let class = match classify_model(&l.model) {
        Ok(c) => json!(c.to_string()),
        Err(InvolutionError::NotRRational { .. }) => Value::Null,
        Err(e) => return Err(invalid(e)),
    };
    r.set("class", class);
    Ok(())
}

pub fn classify(path: &Path) -> Outcome {
    let st = read_stanza(path)?;
    let l = model::involution(&st)?;
    let mut r = Report::new("classify");
    r.set("kind", st.kind.as_str())
        .set("substitution", substitution_value(&l))
        .set("class", class_string(&l.model)?);
    if let InvolutionModel::Trepalin(d) = &l.model {
        r.set("real_locus", trepalin_real_type(d).to_string());
        debug_assert_eq!(trepalin_class(d), classify_model(&l.model).unwrap());
    }
    Ok((r, EXIT_OK))
}

pub fn model_text(m: &ConicBundleModel) -> String {
    format!(
        "kind: conic_bundle\nA: {}\nB: {}\nC: {}\nH: {}\n",
        m.a(),
        m.b(),
        m.c(),
        m.h()
    )
}

fn conic_bundle(st: &Stanza) -> Result<(ConicBundleModel, Loaded), CliError> {
    let l = model::involution(st)?;
    match &l.model {
        InvolutionModel::ConicBundle(m) => Ok((m.clone(), l)),
        _ => Err(CliError::Invalid(format!("kind {} is not a conic bundle", st.kind))),
    }
}

pub fn normalize_cmd(path: &Path, out: Option<&Path>) -> Outcome {
    let st = read_stanza(path)?;
    let (m, l) = conic_bundle(&st)?;
    let n = normalize(&m).map_err(invalid)?;
    let mut r = Report::new("normalize");
    r.set("substitution", substitution_value(&l))
        .set("A", n.a().to_string())
        .set("B", n.b().to_string())
        .set("C", n.c().to_string())
        .set("H", n.h().to_string())
        .set("arcs", arcs_value(&n));
    if let Some(o) = out {
        std::fs::write(o, model_text(&n)).map_err(|e| CliError::Io(format!("{}: {e}", o.display())))?;
        r.set("written", o.display().to_string());
    }
    Ok((r, EXIT_OK))
}

fn witness_value(w: &ConjugacyWitness) -> Value {
    match w {
        ConjugacyWitness::BaseMap(m) | ConjugacyWitness::CurveMap(m) => json!({"map": m.to_string()}),
        ConjugacyWitness::BaseChange { map, lambda, mu } => {
            json!({"map": map.to_string(), "lambda": lambda.to_string(), "mu": mu.to_string()})
        }
        ConjugacyWitness::NormalForm(s) => json!({"normal_form": s}),
        ConjugacyWitness::IdenticalData => json!({"identical": true}),
    }
}

/// Verdict fields shared by every conjugacy report.
pub fn verdict_fields(r: &mut Report, v: &ConjugacyVerdict) -> i32 {
    r.set("verdict", v.kind());
    let (witness, reason, citation, fibrewise) = match v {
        ConjugacyVerdict::Conjugate(w) | ConjugacyVerdict::FibrewiseConjugateOnly(w) => {
            (witness_value(w), Value::Null, Value::Null, Value::Null)
        }
        ConjugacyVerdict::NotConjugate(e) => (Value::Null, json!(e.to_string()), Value::Null, Value::Null),
        ConjugacyVerdict::Unknown { citation, fibrewise } => (
            Value::Null,
            Value::Null,
            json!(citation),
            fibrewise.map_or(Value::Null, Value::from),
        ),
    };
    r.set("witness", witness)
        .set("reason", reason)
        .set("citation", citation)
        .set("fibrewise", fibrewise);
    if v.is_unknown() {
        EXIT_UNKNOWN
    } else {
        EXIT_OK
    }
}

fn conic_verdict(m1: &ConicBundleModel, m2: &ConicBundleModel, fix_base: bool) -> Result<ConjugacyVerdict, CliError> {
    let n1 = normalize(m1).map_err(invalid)?;
    let n2 = normalize(m2).map_err(invalid)?;
    if fix_base {
        let v = fibrewise_conjugate(&n1, &n2).map_err(invalid)?;
        return Ok(match (v.witness, v.failure) {
            (Some((l, m)), _) if v.conjugate => ConjugacyVerdict::Conjugate(ConjugacyWitness::NormalForm(format!(
                "identity base, lambda = {}, mu = {}",
                rat_to_string(&l),
                rat_to_string(&m)
            ))),
            (_, Some(f)) => ConjugacyVerdict::NotConjugate(NotConjugateReason::ConicBundle(f)),
            _ => ConjugacyVerdict::NotConjugate(NotConjugateReason::NoBaseMap),
        });
    }
    let v = conjugate_mod_pgl2(&n1, &n2).map_err(invalid)?;
    Ok(match (v.conjugate, v.map, v.lambda, v.mu, v.failure) {
        (true, Some(map), Some(lambda), Some(mu), _) => {
            ConjugacyVerdict::Conjugate(ConjugacyWitness::BaseChange { map, lambda, mu })
        }
        (_, _, _, _, Some(f)) => ConjugacyVerdict::NotConjugate(NotConjugateReason::ConicBundle(f)),
        _ => ConjugacyVerdict::NotConjugate(NotConjugateReason::NoBaseMap),
    })
}

pub fn conjugate(p1: &Path, p2: &Path, fix_base: bool) -> Outcome {
    let (s1, s2) = (read_stanza(p1)?, read_stanza(p2)?);
    let (l1, l2) = (model::involution(&s1)?, model::involution(&s2)?);
    let mut r = Report::new("conjugate");
    r.set("substitution_1", substitution_value(&l1))
        .set("substitution_2", substitution_value(&l2));
    let v = match (&l1.model, &l2.model) {
        (InvolutionModel::ConicBundle(m1), InvolutionModel::ConicBundle(m2)) => {
            let rr1 = real_image_arcs(m1).len() == 1;
            let rr2 = real_image_arcs(m2).len() == 1;
            r.set("arcs_1", arcs_value(m1))
                .set("arcs_2", arcs_value(m2))
                .set("r_rational_1", rr1)
                .set("r_rational_2", rr2);
            if fix_base || !rr1 || !rr2 {
                conic_verdict(m1, m2, fix_base)?
            } else {
                decide(&mut r, &l1.model, &l2.model)?
            }
        }
        _ if fix_base => return Err(CliError::Usage("--fix-base applies to two conic bundles".into())),
        (a, b) => decide(&mut r, a, b)?,
    };
    let code = verdict_fields(&mut r, &v);
    Ok((r, code))
}

fn decide(r: &mut Report, a: &InvolutionModel, b: &InvolutionModel) -> Result<ConjugacyVerdict, CliError> {
    r.set("class_1", class_string(a)?).set("class_2", class_string(b)?);
    decide_conjugacy(a, b).map_err(invalid)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Decider {
    Criterion,
    Oracle,
    Both,
}

fn pair(s: &str) -> Result<[RatPoly; 2], CliError> {
    let v = parse_poly_list(s).map_err(|e| CliError::Parse(format!("`{s}`: {e}")))?;
    <[RatPoly; 2]>::try_from(v).map_err(|_| CliError::Parse(format!("`{s}` must be two entries A;B")))
}

pub fn equiv_forms(left: &str, right: &str, mode: Decider) -> Outcome {
    let [a, b] = pair(left)?;
    let [c, d] = pair(right)?;
    let mut r = Report::new("equiv-forms");
    r.set("left", format!("<{a}, {b}>")).set("right", format!("<{c}, {d}>"));
    let run = |crit: bool| {
        if crit {
            equiv_binary_criterion(&a, &b, &c, &d)
        } else {
            equiv_binary_oracle(&a, &b, &c, &d)
        }
        .map_err(invalid)
    };
    let crit = matches!(mode, Decider::Criterion | Decider::Both).then(|| run(true)).transpose()?;
    let orac = matches!(mode, Decider::Oracle | Decider::Both).then(|| run(false)).transpose()?;
    r.set("criterion", crit.map_or(Value::Null, Value::from))
        .set("oracle", orac.map_or(Value::Null, Value::from));
    let equivalent = crit.or(orac).expect("one decider ran");
    r.set("equivalent", equivalent);
    if let (Some(x), Some(y)) = (crit, orac) {
        r.set("agree", x == y);
        if x != y {
            return Ok((r, EXIT_MISMATCH));
        }
    }
    Ok((r, EXIT_OK))
}

/// Form and sign from a model file or an inline `POLY deg=2n`.
fn curve_arg(arg: &str, sign: Option<&str>) -> Result<(BinaryForm, i32), CliError> {
    let override_sign = sign.map(model::sign).transpose()?;
    let (f, s) = if Path::new(arg).is_file() {
        let st = read_stanza(Path::new(arg))?;
        match st.kind.as_str() {
            "hyperelliptic" => model::hyperelliptic(&st)?,
            "dejonquieres" => match model::involution(&st)?.model {
                InvolutionModel::DeJonquieres(f) => (f, 1),
                _ => unreachable!("dejonquieres stanza builds a de Jonquieres model"),
            },
            other => return Err(CliError::Invalid(format!("kind {other} has no hyperelliptic curve"))),
        }
    } else {
        (model::inline_form(arg)?, 1)
    };
    Ok((f, override_sign.unwrap_or(s)))
}

pub fn curve_components(arg: &str, sign: Option<&str>) -> Outcome {
    let (f, s) = curve_arg(arg, sign)?;
    let mut r = Report::new("curve components");
    form_invariants(&mut r, &f, s)?;
    Ok((r, EXIT_OK))
}

pub fn curve_iso(a: &str, b: &str, sa: Option<&str>, sb: Option<&str>) -> Outcome {
    let (f, s1) = curve_arg(a, sa)?;
    let (g, s2) = curve_arg(b, sb)?;
    let mut r = Report::new("curve iso");
    r.set("form_1", f.to_string()).set("form_2", g.to_string());
    // x^2 = s1 f and x^2 = s2 g are isomorphic over R iff some pullback of f
    // is a multiple of g of sign s1 s2.
    let w = equivalences(&f, &g).map_err(invalid)?.into_iter().find(|(_, s)| *s == s1 * s2);
    r.set("isomorphic", w.is_some())
        .set("map", w.map_or(Value::Null, |(m, _)| json!(m.to_string())));
    Ok((r, EXIT_OK))
}

pub fn curve_gaussian(arg: &str) -> Outcome {
    let (f, _) = curve_arg(arg, None)?;
    let mut r = Report::new("curve gaussian");
    r.set("form", f.to_string()).set("gaussian", is_gaussian(&f).map_err(invalid)?);
    Ok((r, EXIT_OK))
}

pub struct CorollaryArgs<'a> {
    pub r: usize,
    pub s: usize,
    pub eps: &'a str,
    pub a: &'a str,
    pub b: &'a str,
    pub count: usize,
    pub seed: u64,
}

pub fn family_corollary(args: &CorollaryArgs) -> Outcome {
    let epsilons = model::rational_list(args.eps)?;
    if epsilons.len() != 2 * args.r {
        return Err(CliError::Invalid(format!(
            "expected {} epsilons for r = {}, got {}",
            2 * args.r,
            args.r,
            epsilons.len()
        )));
    }
    let quads = (1..=args.s as i64)
        .map(|k| RatPoly::new(vec![rat(k), rat(0), rat(1)]))
        .collect::<Vec<_>>();
    let params = CorollaryParams {
        epsilons,
        quads,
        a: model::rational(args.a)?,
        b: model::rational(args.b)?,
    };
    let pairs = corollary_pairs(&params, args.count, args.seed).map_err(invalid)?;
    let models = corollary_family(&params, args.count, args.seed).map_err(invalid)?;
    let mut r = Report::new("family corollary");
    r.set("r", params.r())
        .set("s", params.s())
        .set("genus", params.genus())
        .set("seed", args.seed)
        .set("f", params.f().to_string())
        .set(
            "pairs",
            json!(pairs.iter().map(|(a, b)| [rat_to_string(a), rat_to_string(b)]).collect::<Vec<_>>()),
        );
    let mut comps = Vec::new();
    let mut listed = Vec::new();
    for m in &models {
        let f = BinaryForm::from_poly(m.delta().clone()).map_err(invalid)?;
        comps.push(hyperelliptic_components(&f, -1).map_err(invalid)?);
        listed.push(json!({"A": m.a().to_string(), "C": m.c().to_string(), "H": m.h().to_string()}));
    }
    r.set("models", Value::Array(listed)).set("components", json!(comps));
    let ims: Vec<InvolutionModel> = models.into_iter().map(InvolutionModel::ConicBundle).collect();
    let mut verdicts = Vec::new();
    let mut code = EXIT_OK;
    let mut all_not = true;
    for i in 0..ims.len() {
        for j in i + 1..ims.len() {
            let v = decide_conjugacy(&ims[i], &ims[j]).map_err(|e: InvolutionError| invalid(e))?;
            all_not &= matches!(v, ConjugacyVerdict::NotConjugate(_));
            if v.is_unknown() {
                code = EXIT_UNKNOWN;
            }
            verdicts.push(json!({"i": i, "j": j, "verdict": v.kind(), "detail": v.to_string()}));
        }
    }
    r.set("verdicts", Value::Array(verdicts)).set("all_not_conjugate", all_not);
    Ok((r, code))
}
