//! Exact arithmetic in multiquadratic fields: finite sums `sum c_D sqrt(D)` with
//! rational `c_D` and distinct square-free positive integers `D`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::poly::RatPoly;
use super::rat::{isqrt, rat_to_string, sign, to_f64, Int, Rat};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Surd {
    /// Key `1` is the rational part; no zero coefficients are stored.
    terms: BTreeMap<Int, Rat>,
}

/// Largest prime tried when extracting square factors; a cofactor left after
/// trial division below this bound is treated as square-free.
const TRIAL_LIMIT: u64 = 1_000_000;

/// `n = s^2 * d` with `d` square-free (up to the trial-division bound); `n > 0`.
pub fn square_decompose(n: &Int) -> (Int, Int) {
    let mut n = n.clone();
    let mut s = Int::one();
    let mut d = Int::one();
    let mut p: u64 = 2;
    while p <= TRIAL_LIMIT {
        let bp = BigInt::from(p);
        if &bp * &bp > n {
            break;
        }
        let mut e = 0;
        while n.is_multiple_of(&bp) {
            n /= &bp;
            e += 1;
        }
        for _ in 0..e / 2 {
            s *= &bp;
        }
        if e % 2 == 1 {
            d *= &bp;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    let r = isqrt(&n);
    if &r * &r == n {
        s *= r;
    } else {
        d *= n;
    }
    (s, d)
}

fn smallest_prime_factor(n: &Int) -> Int {
    let mut p: u64 = 2;
    while p <= TRIAL_LIMIT {
        let bp = BigInt::from(p);
        if &bp * &bp > *n {
            break;
        }
        if n.is_multiple_of(&bp) {
            return bp;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    n.clone()
}

impl Surd {
    pub fn zero() -> Self {
        Surd::default()
    }

    pub fn one() -> Self {
        Surd::from_rat(Rat::one())
    }

    pub fn from_rat(r: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !r.is_zero() {
            terms.insert(Int::one(), r);
        }
        Surd { terms }
    }

    pub fn from_int(n: i64) -> Self {
        Surd::from_rat(Rat::from_integer(n.into()))
    }

    /// `c * sqrt(n)` for a positive integer `n`.
    pub fn scaled_sqrt(c: Rat, n: &Int) -> Self {
        if c.is_zero() || n.is_zero() {
            return Surd::zero();
        }
        assert!(n.is_positive(), "square root of a negative integer");
        let (s, d) = square_decompose(n);
        let mut terms = BTreeMap::new();
        terms.insert(d, c * Rat::from_integer(s));
        Surd { terms }
    }

    /// Square root of a nonnegative rational; `None` for negatives.
    pub fn sqrt_rat(r: &Rat) -> Option<Self> {
        if r.is_negative() {
            return None;
        }
        let n = r.numer() * r.denom();
        Some(Surd::scaled_sqrt(
            Rat::new(Int::one(), r.denom().clone()),
            &n,
        ))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn as_rat(&self) -> Option<Rat> {
        match self.terms.len() {
            0 => Some(Rat::zero()),
            1 => self.terms.get(&Int::one()).cloned(),
            _ => None,
        }
    }

    pub fn is_rational(&self) -> bool {
        self.as_rat().is_some()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Int, &Rat)> {
        self.terms.iter()
    }

    fn insert_add(terms: &mut BTreeMap<Int, Rat>, k: Int, c: Rat) {
        let e = terms.entry(k.clone()).or_insert_with(Rat::zero);
        *e += c;
        if e.is_zero() {
            terms.remove(&k);
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Surd::zero();
        }
        Surd {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    /// Multiplicative inverse by repeated conjugation; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if let Some(r) = self.as_rat() {
            return Some(Surd::from_rat(r.recip()));
        }
        let big = self.terms.keys().next_back().unwrap();
        let p = smallest_prime_factor(big);
        // self = u + v sqrt(p) with u, v free of sqrt(p); conj = u - v sqrt(p).
        let conj = Surd {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| {
                    if k.is_multiple_of(&p) {
                        (k.clone(), -v.clone())
                    } else {
                        (k.clone(), v.clone())
                    }
                })
                .collect(),
        };
        let norm = self * &conj;
        Some(&conj * &norm.inv()?)
    }

    pub fn div(&self, other: &Self) -> Option<Self> {
        Some(self * &other.inv()?)
    }

    /// Rational enclosure `[lo, hi]` with every square root bracketed to `2^-k`.
    pub fn enclosure(&self, k: u32) -> (Rat, Rat) {
        let scale = Int::one() << (2 * k as usize);
        let den = Int::one() << (k as usize);
        let mut lo = Rat::zero();
        let mut hi = Rat::zero();
        for (d, c) in &self.terms {
            if d.is_one() {
                lo += c;
                hi += c;
                continue;
            }
            let r = isqrt(&(d * &scale));
            let a = Rat::new(r.clone(), den.clone());
            let b = Rat::new(r + 1, den.clone());
            if c.is_positive() {
                lo += c * &a;
                hi += c * &b;
            } else {
                lo += c * &b;
                hi += c * &a;
            }
        }
        (lo, hi)
    }

    pub fn sign(&self) -> i32 {
        if self.is_zero() {
            return 0;
        }
        if let Some(r) = self.as_rat() {
            return sign(&r);
        }
        let mut k = 16;
        loop {
            let (lo, hi) = self.enclosure(k);
            if lo.is_positive() {
                return 1;
            }
            if hi.is_negative() {
                return -1;
            }
            k *= 2;
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.terms
            .iter()
            .map(|(d, c)| to_f64(c) * d.to_f64().unwrap_or(f64::NAN).sqrt())
            .sum()
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Surd::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Horner evaluation of a rational polynomial.
    pub fn eval_poly(p: &RatPoly, x: &Surd) -> Surd {
        let mut acc = Surd::zero();
        for c in p.coeffs().iter().rev() {
            acc = &(&acc * x) + &Surd::from_rat(c.clone());
        }
        acc
    }
}

impl Add for &Surd {
    type Output = Surd;
    fn add(self, rhs: &Surd) -> Surd {
        let mut terms = self.terms.clone();
        for (k, v) in &rhs.terms {
            Surd::insert_add(&mut terms, k.clone(), v.clone());
        }
        Surd { terms }
    }
}

impl Sub for &Surd {
    type Output = Surd;
    fn sub(self, rhs: &Surd) -> Surd {
        self + &(-rhs)
    }
}

impl Neg for &Surd {
    type Output = Surd;
    fn neg(self) -> Surd {
        Surd {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), -v.clone())).collect(),
        }
    }
}

impl Mul for &Surd {
    type Output = Surd;
    fn mul(self, rhs: &Surd) -> Surd {
        let mut terms = BTreeMap::new();
        for (k1, v1) in &self.terms {
            for (k2, v2) in &rhs.terms {
                let g = k1.gcd(k2);
                let key = (k1 / &g) * (k2 / &g);
                let c = v1 * v2 * Rat::from_integer(g);
                Surd::insert_add(&mut terms, key, c);
            }
        }
        Surd { terms }
    }
}

impl PartialOrd for Surd {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Surd {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).sign().cmp(&0)
    }
}

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in &self.terms {
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            if d.is_one() {
                write!(f, "{}", rat_to_string(&a))?;
            } else if a.is_one() {
                write!(f, "sqrt({d})")?;
            } else {
                write!(f, "{}*sqrt({d})", rat_to_string(&a))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Surd({self})")
    }
}
