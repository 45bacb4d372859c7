//! Line-oriented model files: one `kind:` line and `key: value` fields.

use std::collections::BTreeMap;

use cremona_core::conicbundle::{reparametrize_at_infinity, validate_model, ConicBundleError, ConicBundleModel};
use cremona_core::exactnum::{parse_poly, parse_rat, Rat, RatPoly};
use cremona_core::involutions::{
    DelPezzoLabel, InvolutionModel, QuadricAction, QuadricInvolutionData, QuadricSurface, TrepalinData,
};
use cremona_core::projline::Moebius;
use cremona_core::realcurves::{bertini_table, geiser_table, BinaryForm, KowalevskayaQuartic};

use crate::CliError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stanza {
    pub kind: String,
    fields: BTreeMap<String, String>,
}

const KINDS: [(&str, &[&str], &[&str]); 10] = [
    ("conic_bundle", &["A", "C", "H"], &["B"]),
    ("trepalin", &["twist", "epsilons", "lambda1", "lambda2"], &[]),
    ("dejonquieres", &["f", "deg"], &[]),
    ("quadric", &["surface", "action"], &[]),
    ("linear", &[], &[]),
    ("bertini", &["ovals", "sign"], &["curve"]),
    ("geiser", &["quartic", "sign"], &["curve"]),
    ("kowalevskaya", &["a", "b", "c", "s", "sign"], &[]),
    ("hyperelliptic", &["f", "sign"], &["deg"]),
    ("curve_pair", &[], &[]),
];

impl Stanza {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let mut kind = None;
        let mut fields = BTreeMap::new();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line
                .split_once(':')
                .ok_or_else(|| CliError::Parse(format!("line {}: expected `key: value`", n + 1)))?;
            let (k, v) = (k.trim(), v.trim());
            if k == "kind" {
                if kind.replace(v.to_string()).is_some() {
                    return Err(CliError::Parse("more than one `kind:` line".into()));
                }
            } else if fields.insert(k.to_string(), v.to_string()).is_some() {
                return Err(CliError::Parse(format!("duplicate key `{k}`")));
            }
        }
        let kind = kind.ok_or_else(|| CliError::Parse("missing `kind:` line".into()))?;
        let (_, required, optional) = KINDS
            .iter()
            .find(|(k, _, _)| *k == kind && *k != "curve_pair")
            .ok_or_else(|| CliError::Parse(format!("unknown kind `{kind}`")))?;
        for k in fields.keys() {
            if !required.contains(&k.as_str()) && !optional.contains(&k.as_str()) {
                return Err(CliError::Parse(format!("unknown key `{k}` for kind {kind}")));
            }
        }
        for k in *required {
            if !fields.contains_key(*k) {
                return Err(CliError::Parse(format!("missing key `{k}` for kind {kind}")));
            }
        }
        Ok(Stanza { kind, fields })
    }

    fn get(&self, k: &str) -> Option<&str> {
        self.fields.get(k).map(String::as_str)
    }

    fn req(&self, k: &str) -> &str {
        self.get(k).expect("required key checked at parse time")
    }

    fn poly(&self, k: &str) -> Result<RatPoly, CliError> {
        poly(self.req(k))
    }
}

pub fn poly(s: &str) -> Result<RatPoly, CliError> {
    parse_poly(s).map_err(|e| CliError::Parse(format!("polynomial `{s}`: {e}")))
}

pub fn rational(s: &str) -> Result<Rat, CliError> {
    parse_rat(s.trim()).ok_or_else(|| CliError::Parse(format!("not a rational number: `{s}`")))
}

pub fn rational_list(s: &str) -> Result<Vec<Rat>, CliError> {
    s.split(',').map(rational).collect()
}

pub fn sign(s: &str) -> Result<i32, CliError> {
    match s.trim() {
        "+" | "+1" | "1" => Ok(1),
        "-" | "-1" => Ok(-1),
        other => Err(CliError::Parse(format!("sign must be + or -, got `{other}`"))),
    }
}

fn integer(s: &str) -> Result<usize, CliError> {
    s.trim()
        .parse()
        .map_err(|_| CliError::Parse(format!("not a nonnegative integer: `{s}`")))
}

/// `POLY deg=2n`, or `POLY` with the degree rounded up to even.
pub fn inline_form(s: &str) -> Result<BinaryForm, CliError> {
    let (p, d) = match s.rsplit_once("deg=") {
        Some((p, d)) => (p.trim(), Some(integer(d)?)),
        None => (s.trim(), None),
    };
    let p = poly(p)?;
    let f = match d {
        Some(d) => BinaryForm::new(p, d),
        None => BinaryForm::from_poly(p),
    };
    f.map_err(|e| CliError::Invalid(e.to_string()))
}

/// Model plus the base substitution applied to make it valid, if any.
pub struct Loaded {
    pub model: InvolutionModel,
    pub substitution: Option<Moebius>,
}

pub fn load_conic_bundle(
    a: &RatPoly,
    b: &RatPoly,
    c: &RatPoly,
    h: &RatPoly,
) -> Result<(ConicBundleModel, Option<Moebius>), CliError> {
    match validate_model(a, b, c, h) {
        Ok(m) => Ok((m, None)),
        Err(ConicBundleError::NonEmptyFibreAtInfinity) => {
            let (m, phi) = reparametrize_at_infinity(a, b, c, h).map_err(invalid)?;
            Ok((m, Some(phi)))
        }
        Err(e) => Err(invalid(e)),
    }
}

pub fn invalid<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Invalid(e.to_string())
}

fn factor_matrix(s: &str) -> Result<[Rat; 4], CliError> {
    let v = rational_list(s)?;
    <[Rat; 4]>::try_from(v).map_err(|_| CliError::Parse(format!("matrix `{s}` needs four entries")))
}

fn quadric(st: &Stanza) -> Result<QuadricInvolutionData, CliError> {
    let surface = match st.req("surface") {
        "Q31" => QuadricSurface::Q31,
        "Q22" => QuadricSurface::Q22,
        other => return Err(CliError::Parse(format!("surface must be Q31 or Q22, got `{other}`"))),
    };
    let action = st.req("action");
    let action = if action == "swap" {
        QuadricAction::FactorSwap
    } else if let Some((m1, m2)) = action.split_once(';') {
        QuadricAction::Fibrewise(factor_matrix(m1)?, factor_matrix(m2)?)
    } else {
        let signs: Vec<i32> = action.split(',').map(sign).collect::<Result<_, _>>()?;
        QuadricAction::SignPattern(
            <[i32; 4]>::try_from(signs).map_err(|_| CliError::Parse("sign pattern needs four entries".into()))?,
        )
    };
    QuadricInvolutionData::new(surface, action).map_err(invalid)
}

fn table_row(st: &Stanza, degree: u8) -> Result<usize, CliError> {
    if degree == 1 {
        let k = integer(st.req("ovals"))?;
        bertini_table()
            .iter()
            .position(|r| r.ovals == k)
            .ok_or_else(|| CliError::Invalid(format!("no Bertini row with {k} ovals")))
    } else {
        let q = st.req("quartic");
        geiser_table()
            .iter()
            .position(|r| r.quartic == q)
            .ok_or_else(|| CliError::Invalid(format!("no Geiser row for quartic `{q}`")))
    }
}

pub fn kowalevskaya(st: &Stanza) -> Result<KowalevskayaQuartic, CliError> {
    let r = |k| rational(st.req(k));
    KowalevskayaQuartic::new(r("a")?, r("b")?, r("c")?, r("s")?, sign(st.req("sign"))?).map_err(invalid)
}

/// `(form, sign)` of a hyperelliptic stanza.
pub fn hyperelliptic(st: &Stanza) -> Result<(BinaryForm, i32), CliError> {
    let p = st.poly("f")?;
    let f = match st.get("deg") {
        Some(d) => BinaryForm::new(p, integer(d)?),
        None => BinaryForm::from_poly(p),
    }
    .map_err(invalid)?;
    Ok((f, sign(st.req("sign"))?))
}

/// Involution model of a stanza; curve-only kinds are rejected.
pub fn involution(st: &Stanza) -> Result<Loaded, CliError> {
    let plain = |model| Loaded {
        model,
        substitution: None,
    };
    Ok(match st.kind.as_str() {
        "conic_bundle" => {
            let b = st.get("B").map(poly).transpose()?.unwrap_or_else(RatPoly::zero);
            let (m, phi) = load_conic_bundle(&st.poly("A")?, &b, &st.poly("C")?, &st.poly("H")?)?;
            Loaded {
                model: InvolutionModel::ConicBundle(m),
                substitution: phi,
            }
        }
        "trepalin" => {
            let twist = integer(st.req("twist"))?;
            let twist = u8::try_from(twist).map_err(|_| CliError::Invalid(format!("twist {twist}")))?;
            let d = TrepalinData::new(
                twist,
                rational_list(st.req("epsilons"))?,
                rational(st.req("lambda1"))?,
                rational(st.req("lambda2"))?,
            )
            .map_err(invalid)?;
            plain(InvolutionModel::Trepalin(d))
        }
        "dejonquieres" => {
            let f = BinaryForm::new(st.poly("f")?, integer(st.req("deg"))?).map_err(invalid)?;
            plain(InvolutionModel::DeJonquieres(f))
        }
        "quadric" => plain(InvolutionModel::Quadric(quadric(st)?)),
        "linear" => plain(InvolutionModel::Linear),
        "bertini" | "geiser" => {
            let degree = if st.kind == "bertini" { 1 } else { 2 };
            let label = DelPezzoLabel {
                curve: st.get("curve").unwrap_or("").to_string(),
                row: table_row(st, degree)?,
                sign: sign(st.req("sign"))?,
            };
            let m = if degree == 1 {
                InvolutionModel::bertini(label)
            } else {
                InvolutionModel::geiser(label)
            };
            plain(m.map_err(invalid)?)
        }
        "kowalevskaya" => plain(InvolutionModel::kowalevskaya(kowalevskaya(st)?).map_err(invalid)?),
        other => return Err(CliError::Invalid(format!("kind {other} does not describe an involution"))),
    })
}
