//! Diagonal form of the binary part and the normal form with real special
//! fibres only.

use num_traits::{One, Signed, Zero};

use crate::exactnum::{
    factor_lin_quad, isolate_real_roots, rat, rat_sqrt, sign_at, AlgReal, ExactError, Rat, RatPoly,
};

use super::{arcs_of, gauss_reduce, validate_model, ArcSet, ConicBundleError, ConicBundleModel};

/// `Â x^2 + Ĉ y^2 = H z^2` with `Ĉ/Â` in the square class of `Δ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagonalModel {
    a_hat: RatPoly,
    c_hat: RatPoly,
    h: RatPoly,
    change: [i64; 4],
}

impl DiagonalModel {
    pub fn a_hat(&self) -> &RatPoly {
        &self.a_hat
    }

    pub fn c_hat(&self) -> &RatPoly {
        &self.c_hat
    }

    pub fn h(&self) -> &RatPoly {
        &self.h
    }

    /// Integer matrix `[a, b; c, d]` of the change `x ↦ a x + b y, y ↦ c x + d y`
    /// applied before completing the square.
    pub fn change(&self) -> [i64; 4] {
        self.change
    }

    pub fn arcs(&self) -> ArcSet {
        arcs_of(&self.a_hat, &RatPoly::zero(), &self.c_hat, &self.h)
    }
}

fn coprime(p: &RatPoly, q: &RatPoly) -> bool {
    RatPoly::gcd(p, q).is_constant()
}

/// Small unimodular integer matrices, identity first.
fn small_changes() -> Vec<[i64; 4]> {
    let mut out = vec![[1, 0, 0, 1], [0, 1, 1, 0]];
    for a in 1..=4i64 {
        for c in -4..=4i64 {
            if num_integer::gcd(a, c) != 1 || c == 0 {
                continue;
            }
            'bd: for b in -4..=4i64 {
                for d in -4..=4i64 {
                    if a * d - b * c == 1 {
                        out.push([a, b, c, d]);
                        break 'bd;
                    }
                }
            }
        }
    }
    out
}

pub fn diagonalize(m: &ConicBundleModel) -> Result<DiagonalModel, ConicBundleError> {
    let dh = m.delta() * m.h();
    if m.b().is_zero()
        && m.a().is_square_free()
        && m.c().is_square_free()
        && coprime(m.a(), m.h())
        && coprime(m.c(), m.h())
    {
        return Ok(DiagonalModel {
            a_hat: m.a().clone(),
            c_hat: m.c().clone(),
            h: m.h().clone(),
            change: [1, 0, 0, 1],
        });
    }
    let (a, b, c) = (m.a(), m.b(), m.c());
    for ch in small_changes() {
        let [p, _, r, _] = ch.map(|x| RatPoly::constant(rat(x)));
        let a2 = &(&(a * &(&p * &p)) + &(b * &(&p * &r))) + &(c * &(&r * &r));
        if a2.is_zero() || !coprime(&a2, &dh) {
            continue;
        }
        let (lc, factors) = a2.square_free_factorization()?;
        let mut s = RatPoly::constant(lc);
        for (f, mult) in factors {
            if mult % 2 == 1 {
                s = &s * &f;
            }
        }
        let c_hat = &s * m.delta();
        return Ok(DiagonalModel {
            a_hat: s,
            c_hat,
            h: m.h().clone(),
            change: ch,
        });
    }
    Err(ConicBundleError::Exact(ExactError::Unsupported(
        "no small change makes A coprime to (4AC - B^2) H".into(),
    )))
}

/// Normal-form data computed without performing any splitting: `Δ`, the real
/// roots of `H` with `Δ > 0` (which become the roots of the normalized `H`),
/// and the arc set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalFormInvariants {
    pub delta: RatPoly,
    pub kept_roots: Vec<AlgReal>,
    pub arcs: ArcSet,
}

pub fn normal_form_invariants(m: &ConicBundleModel) -> Result<NormalFormInvariants, ConicBundleError> {
    let kept_roots = isolate_real_roots(m.h())?
        .into_iter()
        .filter(|r| sign_at(m.delta(), r) > 0)
        .collect();
    Ok(NormalFormInvariants {
        delta: m.delta().clone(),
        kept_roots,
        arcs: super::real_image_arcs(m),
    })
}

struct Work {
    a: RatPoly,
    b: RatPoly,
    c: RatPoly,
    h: RatPoly,
}

impl Work {
    /// `x = π X + r Y`, then division by `π`: keeps `Δ`, divides `H` by `π`.
    fn lattice_step(&mut self, pi: &RatPoly, r: &RatPoly) {
        let value = &(&(&self.a * &(r * r)) + &(&self.b * r)) + &self.c;
        let c2 = value.exact_div(pi).expect("r is a root modulo pi");
        let two = RatPoly::constant(rat(2));
        self.b = &(&two * &(&self.a * r)) + &self.b;
        self.a = &self.a * pi;
        self.c = c2;
        self.h = self.h.exact_div(pi).expect("pi divides H");
    }
}

fn inv_mod(x: &RatPoly, m: &RatPoly) -> Option<RatPoly> {
    let (mut r0, mut r1) = (m.clone(), x.rem(m));
    let (mut s0, mut s1) = (RatPoly::zero(), RatPoly::one());
    while !r1.is_zero() {
        let (q, r) = r0.div_rem(&r1);
        let s = &s0 - &(&q * &s1);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
    }
    if r0.is_constant() && !r0.is_zero() {
        Some(s0.scale(&(Rat::one() / r0.leading())).rem(m))
    } else {
        None
    }
}

/// Square root of `e` modulo the monic quadratic `pi` with negative
/// discriminant, if it lies in `Q[t]/(pi)`.
fn sqrt_mod_quadratic(e: &RatPoly, pi: &RatPoly) -> Option<RatPoly> {
    let e = e.rem(pi);
    let (p, q) = (pi.coeff(1), pi.coeff(0));
    let disc = &p * &p - rat(4) * &q;
    let half = Rat::new(1.into(), 2.into());
    // e = a + b sqrt(disc) with sqrt(disc) = 2t + p.
    let a = e.coeff(0) - e.coeff(1) * &p * &half;
    let b = e.coeff(1) * &half;
    let root_disc = RatPoly::new(vec![p.clone(), rat(2)]);
    let mut candidates = Vec::new();
    if b.is_zero() {
        if let Some(x) = rat_sqrt(&a) {
            candidates.push(RatPoly::constant(x));
        }
        if let Some(y) = rat_sqrt(&(&a / &disc)) {
            candidates.push(root_disc.scale(&y));
        }
    } else if let Some(n) = rat_sqrt(&(&a * &a - &disc * &b * &b)) {
        for x2 in [(&a + &n) * &half, (&a - &n) * &half] {
            if let Some(x) = rat_sqrt(&x2).filter(|x| !x.is_zero()) {
                let y = &b / (rat(2) * &x);
                candidates.push(&RatPoly::constant(x) + &root_disc.scale(&y));
            }
        }
    }
    candidates.into_iter().find(|w| (&(w * w) - &e).rem(pi).is_zero())
}

/// `r` with `π | A r^2 + B r + C`, when one exists over the rationals.
fn root_mod(w: &Work, pi: &RatPoly) -> Option<RatPoly> {
    let disc = &(&w.b * &w.b) - &(&w.a * &w.c).scale(&rat(4));
    let (a, b, c) = (w.a.rem(pi), w.b.rem(pi), w.c.rem(pi));
    if a.is_zero() {
        let inv = inv_mod(&b, pi)?;
        return Some((&(-&c) * &inv).rem(pi));
    }
    let s = if pi.deg() == 1 {
        let t0 = -pi.coeff(0) / pi.coeff(1);
        RatPoly::constant(rat_sqrt(&disc.eval(&t0))?)
    } else {
        sqrt_mod_quadratic(&disc, pi)?
    };
    let inv = inv_mod(&a.scale(&rat(2)), pi)?;
    Some((&(&s - &b) * &inv).rem(pi))
}

/// Removes every special fibre that is not a real point with `Δ > 0`, makes
/// the leading coefficient of `H` negative, and reduces the binary part.
pub fn normalize(m: &ConicBundleModel) -> Result<ConicBundleModel, ConicBundleError> {
    let mut w = Work {
        a: m.a().clone(),
        b: m.b().clone(),
        c: m.c().clone(),
        h: m.h().clone(),
    };
    let delta = m.delta().clone();
    let mut rest = m.h().monic();
    for r in isolate_real_roots(m.h())? {
        let Some(t0) = r.as_rational() else { continue };
        let pi = RatPoly::linear(t0);
        rest = rest.exact_div(&pi).expect("rational root divides H");
        if delta.sign_at(t0) < 0 {
            let r = root_mod(&w, &pi).ok_or(ConicBundleError::IrrationalSplitRequired)?;
            w.lattice_step(&pi, &r);
        }
    }
    if !rest.is_constant() {
        match factor_lin_quad(&rest) {
            Ok(f) => {
                for q in &f.real_quadratics {
                    if isolate_real_roots(q)?.iter().any(|r| sign_at(&delta, r) < 0) {
                        return Err(ConicBundleError::IrrationalSplitRequired);
                    }
                }
                for q in &f.definite_quadratics {
                    let r = root_mod(&w, q).ok_or(ConicBundleError::IrrationalSplitRequired)?;
                    w.lattice_step(q, &r);
                }
            }
            Err(ExactError::Unsupported(_)) => {
                let roots = isolate_real_roots(&rest)?;
                if roots.len() as i64 != rest.deg() || roots.iter().any(|r| sign_at(&delta, r) < 0) {
                    return Err(ConicBundleError::IrrationalSplitRequired);
                }
            }
            Err(e) => return Err(e.into()),
        }
    }
    if w.h.leading().is_positive() {
        w = Work {
            a: -&w.a,
            b: -&w.b,
            c: -&w.c,
            h: -&w.h,
        };
    }
    let (a, b, c) = gauss_reduce(&w.a, &w.b, &w.c);
    let out = validate_model(&a, &b, &c, &w.h)?;
    debug_assert_eq!(out.delta(), m.delta());
    Ok(out)
}
