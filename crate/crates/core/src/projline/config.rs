//! Finite point configurations on the real projective line and the maps
//! between them.

use num_traits::{Signed, Zero};

use super::moebius::{pullback_form_surd, ExtPoint, Moebius};
use super::ProjError;
use crate::exactnum::{factor_lin_quad, quadratic_discriminant, rat, Rat, RatPoly, Surd};

/// Roots of a square-free binary form: real points (possibly `∞`) and
/// complex-conjugate pairs given by monic definite quadratics.
#[derive(Clone, Debug, PartialEq)]
pub struct PointConfig {
    form: RatPoly,
    degree: usize,
    real_points: Vec<ExtPoint>,
    conj_pairs: Vec<RatPoly>,
}

impl PointConfig {
    /// Configuration of roots of `f` read as a form of the given degree; the
    /// degree deficiency is the multiplicity of `∞`.
    pub fn from_form(f: &RatPoly, degree: usize) -> Result<Self, ProjError> {
        if f.is_zero() {
            return Err(ProjError::Exact(crate::exactnum::ExactError::ZeroPolynomial));
        }
        if f.deg() > degree as i64 {
            return Err(ProjError::DegreeMismatch {
                declared: degree,
                actual: f.deg() as usize,
            });
        }
        if degree as i64 - f.deg() > 1 {
            return Err(ProjError::Exact(crate::exactnum::ExactError::NotSquareFree));
        }
        let fac = factor_lin_quad(f)?;
        let mut real_points: Vec<ExtPoint> = fac
            .rational_roots
            .iter()
            .map(|r| ExtPoint::rat(r.clone()))
            .collect();
        for q in &fac.real_quadratics {
            for r in quadratic_real_roots(q) {
                real_points.push(r);
            }
        }
        if (f.deg() as usize) < degree {
            real_points.push(ExtPoint::Infinity);
        }
        real_points.sort_by(|a, b| a.sort_key_cmp(b));
        Ok(PointConfig {
            form: f.clone(),
            degree,
            real_points,
            conj_pairs: fac.definite_quadratics,
        })
    }

    /// Rational points, optionally with `∞`.
    pub fn from_points(points: &[Rat], infinity: bool) -> Result<Self, ProjError> {
        let f = RatPoly::from_roots(points);
        PointConfig::from_form(&f, points.len() + usize::from(infinity))
    }

    pub fn form(&self) -> &RatPoly {
        &self.form
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn real_points(&self) -> &[ExtPoint] {
        &self.real_points
    }

    pub fn conj_pairs(&self) -> &[RatPoly] {
        &self.conj_pairs
    }

    /// Number of points over the complex numbers.
    pub fn complex_cardinality(&self) -> usize {
        self.real_points.len() + 2 * self.conj_pairs.len()
    }
}

/// Real roots of a quadratic (rational coefficients, degree exactly 2 or 1 with a root at `∞`).
fn quadratic_real_roots(q: &RatPoly) -> Vec<ExtPoint> {
    let (c, b, a) = (q.coeff(0), q.coeff(1), q.coeff(2));
    if a.is_zero() {
        let mut out = vec![ExtPoint::Infinity];
        if !b.is_zero() {
            out.push(ExtPoint::rat(-c / b));
        }
        return out;
    }
    let disc = quadratic_discriminant(q);
    if disc.is_negative() {
        return Vec::new();
    }
    let s = Surd::sqrt_rat(&disc).unwrap();
    let two_a = rat(2) * &a;
    let base = Surd::from_rat(-b / &two_a);
    let off = s.scale(&two_a.recip());
    let mut v = vec![ExtPoint::Finite(&base - &off), ExtPoint::Finite(&base + &off)];
    v.sort_by(|x, y| x.sort_key_cmp(y));
    v
}

/// Jacobian covariant of two binary quadratics `p_i = a_i t^2 + b_i t s + c_i s^2`.
pub fn jacobian(p1: &RatPoly, p2: &RatPoly) -> RatPoly {
    let (c1, b1, a1) = (p1.coeff(0), p1.coeff(1), p1.coeff(2));
    let (c2, b2, a2) = (p2.coeff(0), p2.coeff(1), p2.coeff(2));
    let two = rat(2);
    let four = rat(4);
    RatPoly::new(vec![
        &two * (&b1 * &c2 - &b2 * &c1),
        &four * (&a1 * &c2 - &a2 * &c1),
        &two * (&a1 * &b2 - &a2 * &b1),
    ])
}

/// All real Möbius maps `φ` with `φ(src) = dst`.
pub fn config_maps(src: &PointConfig, dst: &PointConfig) -> Result<Vec<Moebius>, ProjError> {
    config_maps_colored(std::slice::from_ref(src), std::slice::from_ref(dst))
}

/// Maps sending each `src[i]` onto `dst[i]` simultaneously.
pub fn config_maps_colored(
    src: &[PointConfig],
    dst: &[PointConfig],
) -> Result<Vec<Moebius>, ProjError> {
    assert_eq!(src.len(), dst.len(), "color counts differ");
    let card = |cs: &[PointConfig]| cs.iter().map(|c| c.complex_cardinality()).sum::<usize>();
    if card(src) < 3 || card(dst) < 3 {
        return Err(ProjError::TooFewPoints);
    }
    for (s, d) in src.iter().zip(dst) {
        if s.real_points.len() != d.real_points.len() || s.conj_pairs.len() != d.conj_pairs.len() {
            return Ok(Vec::new());
        }
    }
    let colored = |cs: &[PointConfig]| -> Vec<(ExtPoint, usize)> {
        cs.iter()
            .enumerate()
            .flat_map(|(i, c)| c.real_points.iter().map(move |p| (p.clone(), i)))
            .collect()
    };
    let pairs = |cs: &[PointConfig]| -> Vec<(RatPoly, usize)> {
        cs.iter()
            .enumerate()
            .flat_map(|(i, c)| c.conj_pairs.iter().map(move |p| (p.clone(), i)))
            .collect()
    };
    let sr = colored(src);
    let dr = colored(dst);
    let sp = pairs(src);
    let dp = pairs(dst);

    let mut out: Vec<Moebius> = Vec::new();
    let consider = |phi: Moebius, out: &mut Vec<Moebius>| {
        if out.contains(&phi) {
            return;
        }
        if maps_reals(&phi, &sr, &dr) && verify(&phi, src, dst) {
            out.push(phi);
        }
    };

    if sr.len() >= 3 {
        let nx = normalizer(&sr[0].0, &sr[1].0, &sr[2].0);
        for (i, y1) in dr.iter().enumerate() {
            if y1.1 != sr[0].1 {
                continue;
            }
            for (j, y2) in dr.iter().enumerate() {
                if j == i || y2.1 != sr[1].1 {
                    continue;
                }
                for (k, y3) in dr.iter().enumerate() {
                    if k == i || k == j || y3.1 != sr[2].1 {
                        continue;
                    }
                    let ny = normalizer(&y1.0, &y2.0, &y3.0);
                    consider(ny.inverse().compose(&nx), &mut out);
                }
            }
        }
    } else if !sr.is_empty() {
        let (x, cx) = &sr[0];
        let (p, cp) = &sp[0];
        for (y, cy) in &dr {
            if cy != cx {
                continue;
            }
            for (q, cq) in &dp {
                if cq != cp {
                    continue;
                }
                for phi in point_pair_maps(x, p, y, q) {
                    consider(phi, &mut out);
                }
            }
        }
    } else {
        let (p1, c1) = &sp[0];
        let (p2, c2) = &sp[1];
        let x = quadratic_real_roots(&jacobian(p1, p2))[0].clone();
        for (i, (q1, d1)) in dp.iter().enumerate() {
            if d1 != c1 {
                continue;
            }
            for (j, (q2, d2)) in dp.iter().enumerate() {
                if i == j || d2 != c2 {
                    continue;
                }
                for y in quadratic_real_roots(&jacobian(q1, q2)) {
                    for phi in point_pair_maps(&x, p1, &y, q1) {
                        consider(phi, &mut out);
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Map sending `x1, x2, x3` to `0, ∞, 1`.
fn normalizer(x1: &ExtPoint, x2: &ExtPoint, x3: &ExtPoint) -> Moebius {
    use ExtPoint::*;
    let one = Surd::one();
    let zero = Surd::zero();
    match (x1, x2, x3) {
        (Infinity, Finite(b), Finite(c)) => Moebius::new(zero, c - b, one, -b),
        (Finite(a), Infinity, Finite(c)) => Moebius::new(one, -a, zero, c - a),
        (Finite(a), Finite(b), Infinity) => Moebius::new(one.clone(), -a, one, -b),
        (Finite(a), Finite(b), Finite(c)) => {
            let u = c - b;
            let v = c - a;
            Moebius::new(u.clone(), -&(a * &u), v.clone(), -&(b * &v))
        }
        _ => Err(ProjError::Singular),
    }
    .expect("distinct points")
}

/// Both real maps with `φ(x) = y` and `φ(P) = Q` for definite quadratics `P, Q`.
fn point_pair_maps(x: &ExtPoint, p: &RatPoly, y: &ExtPoint, q: &RatPoly) -> Vec<Moebius> {
    // Send x and y to ∞, then match centres and imaginary parts affinely.
    let centre = |poly: &RatPoly| -> Rat { -poly.coeff(1) / (rat(2) * poly.coeff(2)) };
    let to_inf = |pt: &ExtPoint, poly: &RatPoly| -> (Moebius, Surd, Surd) {
        let c = Surd::from_rat(centre(poly));
        match pt {
            ExtPoint::Infinity => (Moebius::identity(), c, Surd::one()),
            ExtPoint::Finite(v) => {
                let w = Surd::eval_poly(&poly.monic(), v);
                let m = Moebius::new(Surd::zero(), Surd::one(), Surd::one(), -v).unwrap();
                let cw = (&c - v).div(&w).unwrap();
                (m, cw, w)
            }
        }
    };
    let (tx, cp, wp) = to_inf(x, p);
    let (ty, cq, wq) = to_inf(y, q);
    let disc_ratio = quadratic_discriminant(&q.monic()) / quadratic_discriminant(&p.monic());
    let h = Surd::sqrt_rat(&disc_ratio).expect("ratio of negative discriminants");
    let alpha = &h * &wp.div(&wq).unwrap();
    let mut out = Vec::new();
    for a in [alpha.clone(), -&alpha] {
        let beta = &cq - &(&a * &cp);
        let affine = Moebius::new(a, beta, Surd::zero(), Surd::one()).unwrap();
        out.push(ty.inverse().compose(&affine).compose(&tx));
    }
    out
}

fn maps_reals(phi: &Moebius, src: &[(ExtPoint, usize)], dst: &[(ExtPoint, usize)]) -> bool {
    src.iter().all(|(x, c)| {
        let (num, den) = phi.apply_homogeneous(x);
        dst.iter().any(|(y, d)| d == c && y.matches(&num, &den))
    })
}

fn verify(phi: &Moebius, src: &[PointConfig], dst: &[PointConfig]) -> bool {
    src.iter().zip(dst).all(|(s, d)| {
        pullback_form_surd(&d.form, d.degree, phi)
            .ok()
            .and_then(|g| g.ratio_to_rat(&s.form))
            .is_some()
    })
}
