//! Factorization over Q into linear and quadratic factors, for polynomials
//! whose irreducible factors all have degree at most two.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{FromPrimitive, One, Signed, ToPrimitive, Zero};

use super::poly::RatPoly;
use super::rat::{to_f64, Int, Rat};
use super::roots::isolate_real_roots;
use super::ExactError;

#[derive(Clone, Debug, PartialEq)]
pub struct LinQuadFactorization {
    pub lc: Rat,
    /// Distinct rational roots, increasing.
    pub rational_roots: Vec<Rat>,
    /// Monic irreducible quadratics with two real roots.
    pub real_quadratics: Vec<RatPoly>,
    /// Monic quadratics with negative discriminant.
    pub definite_quadratics: Vec<RatPoly>,
}

pub fn quadratic_discriminant(q: &RatPoly) -> Rat {
    let (c, b, a) = (q.coeff(0), q.coeff(1), q.coeff(2));
    &b * &b - Rat::from_integer(4.into()) * a * c
}

/// Splits a square-free polynomial; `Unsupported` if an irreducible factor of
/// degree three or more remains.
pub fn factor_lin_quad(p: &RatPoly) -> Result<LinQuadFactorization, ExactError> {
    if p.is_zero() {
        return Err(ExactError::ZeroPolynomial);
    }
    if !p.is_square_free() {
        return Err(ExactError::NotSquareFree);
    }
    let lc = p.leading();
    let rational_roots: Vec<Rat> = isolate_real_roots(p)?
        .into_iter()
        .filter_map(|r| r.as_rational().cloned())
        .collect();
    let mut rest = p
        .exact_div(&RatPoly::from_roots(&rational_roots))
        .expect("rational roots divide")
        .primitive();
    let mut quads = Vec::new();
    while rest.deg() > 0 {
        if rest.deg() == 2 {
            quads.push(rest.monic());
            break;
        }
        if rest.deg() == 1 {
            unreachable!("rational roots were removed");
        }
        let q = find_quadratic_factor(&rest).ok_or_else(|| {
            ExactError::Unsupported(format!(
                "{rest} has an irreducible factor of degree above two"
            ))
        })?;
        rest = rest.exact_div(&q).expect("factor divides").primitive();
        quads.push(q.monic());
    }
    let (mut real_quadratics, mut definite_quadratics): (Vec<_>, Vec<_>) = quads
        .into_iter()
        .partition(|q| quadratic_discriminant(q).is_positive());
    real_quadratics.sort_by_key(|q| q.to_string());
    definite_quadratics.sort_by_key(|q| q.to_string());
    Ok(LinQuadFactorization {
        lc,
        rational_roots,
        real_quadratics,
        definite_quadratics,
    })
}

/// Numerical roots propose candidate quadratics; exact division confirms them.
fn find_quadratic_factor(p: &RatPoly) -> Option<RatPoly> {
    let ints = p.integer_coeffs();
    let lc = ints.last().unwrap().abs();
    let divisors = positive_divisors(&lc);
    let z = complex_roots(p);
    for i in 0..z.len() {
        for j in i + 1..z.len() {
            let s = z[i] + z[j];
            let m = z[i] * z[j];
            let tol = 1e-6 * (1.0 + s.norm() + m.norm());
            if s.im.abs() > tol || m.im.abs() > tol {
                continue;
            }
            for k in &divisors {
                let kf = k.to_f64().unwrap_or(f64::INFINITY);
                let (Some(b), Some(c)) = (
                    BigInt::from_f64((kf * s.re).round()),
                    BigInt::from_f64((kf * m.re).round()),
                ) else {
                    continue;
                };
                let q = RatPoly::new(vec![
                    Rat::from_integer(c),
                    Rat::from_integer(-b),
                    Rat::from_integer(k.clone()),
                ]);
                if q.deg() == 2 && q.divides(p) {
                    return Some(q);
                }
            }
        }
    }
    None
}

fn positive_divisors(n: &Int) -> Vec<Int> {
    let mut out = Vec::new();
    let mut d = Int::one();
    while &d * &d <= *n && d <= Int::from(1_000_000) {
        if (n % &d).is_zero() {
            out.push(d.clone());
            let e = n / &d;
            if e != d {
                out.push(e);
            }
        }
        d += 1;
    }
    out.sort();
    out
}

/// Durand-Kerner iteration on the monic normalization.
pub fn complex_roots(p: &RatPoly) -> Vec<Complex64> {
    let n = p.deg();
    if n < 1 {
        return Vec::new();
    }
    let n = n as usize;
    let lc = to_f64(&p.leading());
    let c: Vec<Complex64> = p
        .coeffs()
        .iter()
        .map(|x| Complex64::new(to_f64(x) / lc, 0.0))
        .collect();
    let radius = 1.0
        + c[..n]
            .iter()
            .map(|x| x.norm())
            .fold(0.0f64, f64::max);
    let seed = Complex64::new(0.4, 0.9);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| seed.powu(k as u32) * radius / seed.norm().powi(k as i32))
        .collect();
    let eval = |x: Complex64| c.iter().rev().fold(Complex64::zero(), |acc, a| acc * x + a);
    for _ in 0..2000 {
        let mut delta = 0.0f64;
        for i in 0..n {
            let mut den = Complex64::one();
            for j in 0..n {
                if i != j {
                    den *= z[i] - z[j];
                }
            }
            if den.norm() == 0.0 {
                den = Complex64::new(1e-12, 1e-12);
            }
            let step = eval(z[i]) / den;
            z[i] -= step;
            delta = delta.max(step.norm());
        }
        if delta < 1e-15 * radius {
            break;
        }
    }
    z
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{frac, parse_poly, rat};

    fn p(s: &str) -> RatPoly {
        parse_poly(s).unwrap()
    }

    #[test]
    fn splits_mixed_product() {
        let f = factor_lin_quad(&p("3*(t-1)*(2*t+1)*(t^2-2)*(t^2+t+1)*(t^2+4)")).unwrap();
        assert_eq!(f.rational_roots, vec![frac(-1, 2), rat(1)]);
        assert_eq!(f.real_quadratics, vec![p("t^2-2")]);
        assert_eq!(f.definite_quadratics.len(), 2);
        assert!(f.definite_quadratics.contains(&p("t^2+t+1")));
        assert_eq!(f.lc, rat(6));
    }

    #[test]
    fn non_monic_quadratics() {
        let f = factor_lin_quad(&p("(3*t^2 - 5)*(7*t^2 + 2*t + 1)*(t^2-3)")).unwrap();
        assert_eq!(f.real_quadratics.len(), 2);
        assert_eq!(f.definite_quadratics, vec![p("t^2 + 2/7*t + 1/7")]);
    }

    #[test]
    fn rejects_cubic_factor() {
        assert!(matches!(
            factor_lin_quad(&p("(t^3-2)*(t^2+1)")),
            Err(ExactError::Unsupported(_))
        ));
        assert_eq!(factor_lin_quad(&p("t^2*(t-1)")), Err(ExactError::NotSquareFree));
    }
}
