//! Sturm sequences and real root isolation.

use num_traits::{Signed, Zero};

use super::algreal::AlgReal;
use super::poly::RatPoly;
use super::rat::{mid, rat, sign, Rat};
use super::ExactError;

/// Sturm chain `p, p', -rem(p, p'), ...`, kept primitive (positive rescaling only).
#[derive(Clone, Debug)]
pub struct Sturm {
    seq: Vec<RatPoly>,
}

impl Sturm {
    pub fn new(p: &RatPoly) -> Self {
        let mut seq = vec![p.primitive()];
        let d = p.derivative().primitive();
        if !d.is_zero() {
            seq.push(d);
            loop {
                let n = seq.len();
                let r = seq[n - 2].rem(&seq[n - 1]);
                if r.is_zero() {
                    break;
                }
                seq.push((-r).primitive());
            }
        }
        Sturm { seq }
    }

    fn variations<I: Iterator<Item = i32>>(signs: I) -> usize {
        let mut last = 0;
        let mut v = 0;
        for s in signs.filter(|&s| s != 0) {
            if last != 0 && s != last {
                v += 1;
            }
            last = s;
        }
        v
    }

    pub fn variations_at(&self, x: &Rat) -> usize {
        Self::variations(self.seq.iter().map(|p| p.sign_at(x)))
    }

    pub fn variations_at_infinity(&self, positive: bool) -> usize {
        Self::variations(self.seq.iter().map(|p| p.sign_at_infinity(positive)))
    }

    /// Number of distinct real roots in `(lo, hi]`.
    pub fn count(&self, lo: &Rat, hi: &Rat) -> usize {
        self.variations_at(lo)
            .saturating_sub(self.variations_at(hi))
    }

    pub fn count_all(&self) -> usize {
        self.variations_at_infinity(false)
            .saturating_sub(self.variations_at_infinity(true))
    }
}

/// Strict bound on the absolute value of every root.
pub fn root_bound(p: &RatPoly) -> Rat {
    let lc = p.leading().abs();
    let m = p
        .coeffs()
        .iter()
        .take(p.coeffs().len().saturating_sub(1))
        .map(|c| c.abs() / &lc)
        .fold(Rat::zero(), |a, b| if b > a { b } else { a });
    m + rat(1)
}

pub fn count_real_roots(p: &RatPoly) -> Result<usize, ExactError> {
    if p.is_zero() {
        return Err(ExactError::ZeroPolynomial);
    }
    Ok(Sturm::new(&p.square_free_part()?).count_all())
}

/// One `AlgReal` per distinct real root, in increasing order.
pub fn isolate_real_roots(p: &RatPoly) -> Result<Vec<AlgReal>, ExactError> {
    let sqf = p.square_free_part()?;
    if sqf.is_constant() {
        return Ok(Vec::new());
    }
    let st = Sturm::new(&sqf);
    let b = root_bound(&sqf);
    let mut raw: Vec<Raw> = Vec::new();
    let lo = -b.clone();
    let n = st.count(&lo, &b);
    split(&sqf, &st, lo, b, n, &mut raw);

    let rationals: Vec<Rat> = raw
        .iter()
        .filter_map(|r| match r {
            Raw::Exact(x) => Some(x.clone()),
            Raw::Interval(..) => None,
        })
        .collect();
    let reduced = if rationals.is_empty() {
        sqf.clone()
    } else {
        sqf.exact_div(&RatPoly::from_roots(&rationals))
            .expect("rational roots divide")
            .primitive()
    };
    Ok(raw
        .into_iter()
        .map(|r| match r {
            Raw::Exact(x) => AlgReal::from_rat(x),
            Raw::Interval(lo, hi) => AlgReal::isolated_unchecked(reduced.clone(), lo, hi),
        })
        .collect())
}

enum Raw {
    Exact(Rat),
    Interval(Rat, Rat),
}

fn split(p: &RatPoly, st: &Sturm, lo: Rat, hi: Rat, n: usize, out: &mut Vec<Raw>) {
    if n == 0 {
        return;
    }
    if n == 1 {
        out.push(finish(p, st, lo, hi));
        return;
    }
    let m = mid(&lo, &hi);
    let left = st.count(&lo, &m);
    split(p, st, lo, m.clone(), left, out);
    split(p, st, m, hi, n - left, out);
}

/// Exactly one root in `(lo, hi]`: shrink to an open interval with nonroot
/// endpoints, then test for a rational root.
fn finish(p: &RatPoly, st: &Sturm, mut lo: Rat, mut hi: Rat) -> Raw {
    if p.eval(&hi).is_zero() {
        return Raw::Exact(hi);
    }
    while p.eval(&lo).is_zero() {
        let m = mid(&lo, &hi);
        if p.eval(&m).is_zero() {
            return Raw::Exact(m);
        }
        if st.count(&m, &hi) == 1 {
            lo = m;
        } else {
            hi = m;
        }
    }
    match rational_root_in(p, &mut lo, &mut hi) {
        Some(r) => Raw::Exact(r),
        None => Raw::Interval(lo, hi),
    }
}

/// A rational root `r` of a primitive integer polynomial satisfies
/// `lc * r ∈ Z`, so it suffices to test the multiples of `1/lc` in a narrow interval.
fn rational_root_in(p: &RatPoly, lo: &mut Rat, hi: &mut Rat) -> Option<Rat> {
    let lc = p.primitive().leading().abs();
    let s_lo = p.sign_at(lo);
    while (&*hi - &*lo) * &lc >= rat(1) {
        let m = mid(lo, hi);
        let s = p.sign_at(&m);
        if s == 0 {
            return Some(m);
        }
        if s == s_lo {
            *lo = m;
        } else {
            *hi = m;
        }
    }
    let k_lo = (&*lo * &lc).ceil().to_integer();
    let k_hi = (&*hi * &lc).floor().to_integer();
    let mut k = k_lo;
    while k <= k_hi {
        let r = Rat::new(k.clone(), lc.to_integer());
        if p.eval(&r).is_zero() {
            return Some(r);
        }
        k += 1;
    }
    None
}

/// A rational strictly between `a < b`.
pub fn rational_between(a: &AlgReal, b: &AlgReal) -> Rat {
    debug_assert!(a < b);
    let mut a = a.clone();
    let mut b = b.clone();
    loop {
        let (_, ahi) = a.bounds();
        let (blo, _) = b.bounds();
        if ahi < blo {
            return mid(&ahi, &blo);
        }
        if ahi == blo && a.as_rational().is_none() && b.as_rational().is_none() {
            // Shared endpoint that is not a root of either polynomial.
            return ahi;
        }
        if let (Some(x), Some(y)) = (a.as_rational(), b.as_rational()) {
            return mid(x, y);
        }
        a = a.bisect();
        b = b.bisect();
    }
}

/// A rational strictly below (`above = false`) or above every given number.
pub fn rational_outside(points: &[AlgReal], above: bool) -> Rat {
    let mut best: Option<Rat> = None;
    for p in points {
        let (lo, hi) = p.bounds();
        let cand = if above { hi + rat(1) } else { lo - rat(1) };
        best = Some(match best {
            None => cand,
            Some(b) => {
                if (above && cand > b) || (!above && cand < b) {
                    cand
                } else {
                    b
                }
            }
        });
    }
    best.unwrap_or_else(|| rat(0)).round()
        + if above { rat(1) } else { rat(-1) }
}

/// Sign of the polynomial strictly between consecutive roots, sampled exactly.
pub fn sign_on_regions(p: &RatPoly, breaks: &[AlgReal]) -> Vec<i32> {
    sample_points(breaks)
        .iter()
        .map(|x| sign(&p.eval(x)))
        .collect()
}

/// One rational sample per open region of `R \ breaks`; `breaks` must be
/// sorted and distinct.
pub fn sample_points(breaks: &[AlgReal]) -> Vec<Rat> {
    let mut out = Vec::with_capacity(breaks.len() + 1);
    if breaks.is_empty() {
        out.push(rat(0));
        return out;
    }
    out.push(rational_outside(breaks, false));
    for w in breaks.windows(2) {
        out.push(rational_between(&w[0], &w[1]));
    }
    out.push(rational_outside(breaks, true));
    out
}
