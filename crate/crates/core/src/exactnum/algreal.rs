//! Real algebraic numbers: a square-free polynomial and an isolating interval.

use std::cmp::Ordering;
use std::fmt;

use num_traits::Zero;

use super::poly::RatPoly;
use super::rat::{mid, rat, rat_to_string, sign, to_f64, Rat};
use super::resultant::eliminate;
use super::roots::{isolate_real_roots, Sturm};
use super::ExactError;

#[derive(Clone)]
pub enum AlgReal {
    Rational(Rat),
    /// Exactly one root of `poly` in the open interval `(lo, hi)`, with
    /// `poly(lo) * poly(hi) < 0`; `poly` is square-free without rational roots.
    Algebraic { poly: RatPoly, lo: Rat, hi: Rat },
}

impl AlgReal {
    pub fn from_rat(r: Rat) -> Self {
        AlgReal::Rational(r)
    }

    pub fn from_int(n: i64) -> Self {
        AlgReal::Rational(rat(n))
    }

    pub(crate) fn isolated_unchecked(poly: RatPoly, lo: Rat, hi: Rat) -> Self {
        AlgReal::Algebraic { poly, lo, hi }
    }

    /// Checked constructor from a defining polynomial and an interval that
    /// must contain exactly one of its real roots.
    pub fn from_isolating(poly: &RatPoly, lo: &Rat, hi: &Rat) -> Result<Self, ExactError> {
        if poly.is_zero() {
            return Err(ExactError::ZeroPolynomial);
        }
        let roots = isolate_real_roots(poly)?;
        let inside: Vec<AlgReal> = roots
            .into_iter()
            .filter(|r| r.cmp_rat(lo) == Ordering::Greater && r.cmp_rat(hi) == Ordering::Less)
            .collect();
        if inside.len() != 1 || poly.eval(lo).is_zero() || poly.eval(hi).is_zero() {
            return Err(ExactError::NotIsolating);
        }
        Ok(inside.into_iter().next().unwrap())
    }

    pub fn as_rational(&self) -> Option<&Rat> {
        match self {
            AlgReal::Rational(r) => Some(r),
            AlgReal::Algebraic { .. } => None,
        }
    }

    pub fn is_rational(&self) -> bool {
        self.as_rational().is_some()
    }

    /// Defining polynomial (`t - r` for rationals).
    pub fn minpoly(&self) -> RatPoly {
        match self {
            AlgReal::Rational(r) => RatPoly::linear(r).primitive(),
            AlgReal::Algebraic { poly, .. } => poly.clone(),
        }
    }

    /// Closed bounds; degenerate for rationals.
    pub fn bounds(&self) -> (Rat, Rat) {
        match self {
            AlgReal::Rational(r) => (r.clone(), r.clone()),
            AlgReal::Algebraic { lo, hi, .. } => (lo.clone(), hi.clone()),
        }
    }

    pub fn bisect(&self) -> Self {
        match self {
            AlgReal::Rational(_) => self.clone(),
            AlgReal::Algebraic { poly, lo, hi } => {
                let m = mid(lo, hi);
                let sm = poly.sign_at(&m);
                if sm == 0 {
                    return AlgReal::Rational(m);
                }
                if sm == poly.sign_at(lo) {
                    AlgReal::Algebraic {
                        poly: poly.clone(),
                        lo: m,
                        hi: hi.clone(),
                    }
                } else {
                    AlgReal::Algebraic {
                        poly: poly.clone(),
                        lo: lo.clone(),
                        hi: m,
                    }
                }
            }
        }
    }

    /// Refine until the interval is narrower than `width`.
    pub fn refined(&self, width: &Rat) -> Self {
        let mut x = self.clone();
        loop {
            let (lo, hi) = x.bounds();
            if &(hi - lo) < width {
                return x;
            }
            x = x.bisect();
        }
    }

    pub fn to_f64(&self) -> f64 {
        let x = self.refined(&Rat::new(1.into(), (1u64 << 60).into()));
        let (lo, hi) = x.bounds();
        to_f64(&mid(&lo, &hi))
    }

    pub fn sign(&self) -> i32 {
        sign_at(&RatPoly::t(), self)
    }

    pub fn cmp_rat(&self, r: &Rat) -> Ordering {
        match sign_at(&RatPoly::linear(r), self) {
            -1 => Ordering::Less,
            0 => Ordering::Equal,
            _ => Ordering::Greater,
        }
    }

    /// `minpoly` string with the isolating interval, or the rational itself.
    pub fn to_exact_string(&self) -> String {
        match self {
            AlgReal::Rational(r) => rat_to_string(r),
            AlgReal::Algebraic { poly, lo, hi } => format!(
                "algebraic({}, [{}, {}])",
                poly,
                rat_to_string(lo),
                rat_to_string(hi)
            ),
        }
    }

    pub fn neg(&self) -> Self {
        match self {
            AlgReal::Rational(r) => AlgReal::Rational(-r.clone()),
            AlgReal::Algebraic { poly, lo, hi } => AlgReal::Algebraic {
                poly: poly.reflect().primitive(),
                lo: -hi.clone(),
                hi: -lo.clone(),
            },
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        match (self, other) {
            (AlgReal::Rational(a), AlgReal::Rational(b)) => AlgReal::Rational(a + b),
            (AlgReal::Rational(a), AlgReal::Algebraic { poly, lo, hi })
            | (AlgReal::Algebraic { poly, lo, hi }, AlgReal::Rational(a)) => {
                AlgReal::Algebraic {
                    poly: poly.shift(&-a.clone()).primitive(),
                    lo: lo + a,
                    hi: hi + a,
                }
            }
            _ => {
                let p = self.minpoly();
                let q = other.minpoly();
                let bound = (p.deg() * q.deg()) as usize;
                let r = eliminate(
                    &p,
                    |x| q.compose(&(&RatPoly::constant(x.clone()) - &RatPoly::t())),
                    bound,
                )
                .expect("nonzero defining polynomials");
                select_root(&r, self, other, |(alo, ahi), (blo, bhi)| {
                    (alo + blo, ahi + bhi)
                })
            }
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.sign() == 0 || other.sign() == 0 {
            return AlgReal::Rational(Rat::zero());
        }
        match (self, other) {
            (AlgReal::Rational(a), AlgReal::Rational(b)) => AlgReal::Rational(a * b),
            (AlgReal::Rational(a), x @ AlgReal::Algebraic { .. })
            | (x @ AlgReal::Algebraic { .. }, AlgReal::Rational(a)) => {
                // p(t / a) cleared of denominators.
                let p = x.minpoly().compose(&RatPoly::new(vec![Rat::zero(), a.recip()]));
                let (lo, hi) = x.bounds();
                let (l, h) = (&lo * a, &hi * a);
                let (lo, hi) = if l < h { (l, h) } else { (h, l) };
                AlgReal::Algebraic {
                    poly: p.primitive(),
                    lo,
                    hi,
                }
            }
            _ => {
                let p = self.minpoly();
                let q = other.minpoly();
                let dq = q.deg() as usize;
                let bound = (p.deg() as usize) * dq;
                // y^dq q(x / y): coefficient of y^(dq - i) is q_i x^i.
                let r = eliminate(
                    &p,
                    |x| {
                        let mut c = vec![Rat::zero(); dq + 1];
                        let mut xp = rat(1);
                        for i in 0..=dq {
                            c[dq - i] = q.coeff(i) * &xp;
                            xp *= x;
                        }
                        RatPoly::new(c)
                    },
                    bound,
                )
                .expect("nonzero defining polynomials");
                select_root(&r, self, other, |(alo, ahi), (blo, bhi)| {
                    let c = [&alo * &blo, &alo * &bhi, &ahi * &blo, &ahi * &bhi];
                    let lo = c.iter().min().unwrap().clone();
                    let hi = c.iter().max().unwrap().clone();
                    (lo, hi)
                })
            }
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        match self {
            AlgReal::Rational(r) => (!r.is_zero()).then(|| AlgReal::Rational(r.recip())),
            AlgReal::Algebraic { poly, .. } => {
                let mut x = self.clone();
                loop {
                    let (lo, hi) = x.bounds();
                    if sign(&lo) == sign(&hi) && sign(&lo) != 0 {
                        let d = poly.deg() as usize;
                        return Some(AlgReal::Algebraic {
                            poly: poly.reverse(d).primitive(),
                            lo: hi.recip(),
                            hi: lo.recip(),
                        });
                    }
                    x = x.bisect();
                    if let AlgReal::Rational(r) = &x {
                        return Some(AlgReal::Rational(r.recip()));
                    }
                }
            }
        }
    }

    pub fn div(&self, other: &Self) -> Option<Self> {
        Some(self.mul(&other.inv()?))
    }
}

/// Pick the real root of `r` that lies in the interval image of `a op b`,
/// refining `a` and `b` until exactly one candidate remains.
fn select_root<F>(r: &RatPoly, a: &AlgReal, b: &AlgReal, image: F) -> AlgReal
where
    F: Fn((Rat, Rat), (Rat, Rat)) -> (Rat, Rat),
{
    let roots = isolate_real_roots(r).expect("nonzero elimination polynomial");
    let mut a = a.clone();
    let mut b = b.clone();
    loop {
        let (lo, hi) = image(a.bounds(), b.bounds());
        let mut cands = roots
            .iter()
            .filter(|x| x.cmp_rat(&lo) != Ordering::Less && x.cmp_rat(&hi) != Ordering::Greater);
        if let (Some(x), None) = (cands.next(), cands.next()) {
            return x.clone();
        }
        a = a.bisect();
        b = b.bisect();
    }
}

/// Exact sign of `q` at `x`: zero via a gcd test, otherwise by refining the
/// interval until it excludes every root of `q`.
pub fn sign_at(q: &RatPoly, x: &AlgReal) -> i32 {
    match x {
        AlgReal::Rational(r) => q.sign_at(r),
        AlgReal::Algebraic { poly, lo, hi } => {
            if q.is_zero() {
                return 0;
            }
            if q.is_constant() {
                return sign(&q.leading());
            }
            let g = RatPoly::gcd(q, poly);
            if !g.is_constant() && g.sign_at(lo) * g.sign_at(hi) < 0 {
                return 0;
            }
            let qs = q.square_free_part().expect("nonzero");
            let st = Sturm::new(&qs);
            let mut x = x.clone();
            loop {
                match &x {
                    AlgReal::Rational(r) => return q.sign_at(r),
                    AlgReal::Algebraic { lo, hi, .. } => {
                        let slo = qs.sign_at(lo);
                        if slo != 0 && qs.sign_at(hi) != 0 && st.count(lo, hi) == 0 {
                            return q.sign_at(lo);
                        }
                    }
                }
                x = x.bisect();
            }
        }
    }
}

impl PartialEq for AlgReal {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for AlgReal {}

impl PartialOrd for AlgReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for AlgReal {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (AlgReal::Rational(a), AlgReal::Rational(b)) => a.cmp(b),
            (x, AlgReal::Rational(r)) => x.cmp_rat(r),
            (AlgReal::Rational(r), x) => x.cmp_rat(r).reverse(),
            (
                AlgReal::Algebraic {
                    poly: p, lo: plo, hi: phi,
                },
                AlgReal::Algebraic {
                    poly: q, lo: qlo, hi: qhi,
                },
            ) => {
                let g = RatPoly::gcd(p, q);
                if !g.is_constant() {
                    let lo = plo.max(qlo);
                    let hi = phi.min(qhi);
                    if lo < hi && g.sign_at(lo) * g.sign_at(hi) < 0 {
                        return Ordering::Equal;
                    }
                }
                let mut a = self.clone();
                let mut b = other.clone();
                loop {
                    let (alo, ahi) = a.bounds();
                    let (blo, bhi) = b.bounds();
                    if ahi < blo || (ahi == blo && !(a.is_rational() && b.is_rational())) {
                        return Ordering::Less;
                    }
                    if bhi < alo || (bhi == alo && !(a.is_rational() && b.is_rational())) {
                        return Ordering::Greater;
                    }
                    if a.is_rational() || b.is_rational() {
                        return match (&a, &b) {
                            (AlgReal::Rational(r), y) => y.cmp_rat(r).reverse(),
                            (y, AlgReal::Rational(r)) => y.cmp_rat(r),
                            _ => unreachable!(),
                        };
                    }
                    a = a.bisect();
                    b = b.bisect();
                }
            }
        }
    }
}

impl fmt::Debug for AlgReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_exact_string())
    }
}

impl fmt::Display for AlgReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_exact_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{frac, parse_poly};

    fn p(s: &str) -> RatPoly {
        parse_poly(s).unwrap()
    }

    fn sqrt(n: i64) -> AlgReal {
        isolate_real_roots(&p(&format!("t^2 - {n}")))
            .unwrap()
            .pop()
            .unwrap()
    }

    #[test]
    fn sign_examples() {
        let s2 = sqrt(2);
        assert_eq!(sign_at(&p("t-1"), &s2), 1);
        assert_eq!(sign_at(&p("t^2-2"), &s2), 0);
        let neg = isolate_real_roots(&p("t^2-2")).unwrap()[0].clone();
        assert_eq!(sign_at(&p("t-3"), &neg), -1);
        assert_eq!(sign_at(&p("(t^2-2)*(t+7)"), &neg), 0);
        assert_eq!(sign_at(&p("t^2 - 2000001/1000000"), &s2), -1);
    }

    #[test]
    fn arithmetic_matches_known_values() {
        let s2 = sqrt(2);
        let s3 = sqrt(3);
        let sum = s2.add(&s3);
        assert_eq!(sign_at(&p("t^4 - 10*t^2 + 1"), &sum), 0);
        assert!((sum.to_f64() - (2f64.sqrt() + 3f64.sqrt())).abs() < 1e-12);
        let prod = s2.mul(&s3);
        assert_eq!(prod, sqrt(6));
        assert_eq!(s2.mul(&s2), AlgReal::from_int(2));
        assert_eq!(s2.sub(&s2), AlgReal::from_int(0));
        let inv = s2.inv().unwrap();
        assert_eq!(inv.mul(&AlgReal::from_int(2)), s2);
        assert_eq!(s2.neg().add(&AlgReal::from_rat(frac(3, 2))).sign(), 1);
    }

    #[test]
    fn ordering() {
        let mut v = [sqrt(3), AlgReal::from_int(1), sqrt(2), AlgReal::from_rat(frac(3, 2))];
        v.sort();
        let f: Vec<f64> = v.iter().map(|x| x.to_f64()).collect();
        assert!(f.windows(2).all(|w| w[0] < w[1]));
        let other = AlgReal::from_isolating(&p("(t^2-2)*(t^2-5)"), &rat(1), &rat(2)).unwrap();
        assert_eq!(other, sqrt(2));
        assert!(AlgReal::from_isolating(&p("t^2-2"), &rat(-2), &rat(2)).is_err());
    }

    #[test]
    fn exact_strings() {
        assert_eq!(AlgReal::from_rat(frac(-7, 2)).to_exact_string(), "-7/2");
        assert!(sqrt(2).to_exact_string().starts_with("algebraic(t^2 - 2, ["));
    }
}
