//! Real Möbius maps with multiquadratic entries and pullbacks of binary forms.

use std::fmt;

use num_traits::Zero;

use super::ProjError;
use crate::exactnum::{Rat, RatPoly, Surd};

/// A point of the real projective line.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ExtPoint {
    Finite(Surd),
    Infinity,
}

impl ExtPoint {
    pub fn rat(r: Rat) -> Self {
        ExtPoint::Finite(Surd::from_rat(r))
    }

    pub fn as_rat(&self) -> Option<Rat> {
        match self {
            ExtPoint::Finite(s) => s.as_rat(),
            ExtPoint::Infinity => None,
        }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, ExtPoint::Infinity)
    }

    /// Homogeneous coordinates `(x, 1)` or `(1, 0)`.
    pub fn homogeneous(&self) -> (Surd, Surd) {
        match self {
            ExtPoint::Finite(x) => (x.clone(), Surd::one()),
            ExtPoint::Infinity => (Surd::one(), Surd::zero()),
        }
    }

    /// Whether the homogeneous pair `(num, den)` represents this point.
    pub fn matches(&self, num: &Surd, den: &Surd) -> bool {
        match self {
            ExtPoint::Infinity => den.is_zero() && !num.is_zero(),
            ExtPoint::Finite(y) => !den.is_zero() && *num == y * den,
        }
    }

    /// Total order with `∞` last.
    pub fn sort_key_cmp(&self, other: &Self) -> std::cmp::Ordering {
        use std::cmp::Ordering::*;
        match (self, other) {
            (ExtPoint::Infinity, ExtPoint::Infinity) => Equal,
            (ExtPoint::Infinity, _) => Greater,
            (_, ExtPoint::Infinity) => Less,
            (ExtPoint::Finite(a), ExtPoint::Finite(b)) => a.cmp(b),
        }
    }
}

impl fmt::Display for ExtPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtPoint::Finite(x) => write!(f, "{x}"),
            ExtPoint::Infinity => write!(f, "inf"),
        }
    }
}

/// `z ↦ (a z + b) / (c z + d)`, stored with the first nonzero entry equal to 1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Moebius {
    m: [Surd; 4],
}

impl Moebius {
    pub fn new(a: Surd, b: Surd, c: Surd, d: Surd) -> Result<Self, ProjError> {
        let det = &(&a * &d) - &(&b * &c);
        if det.is_zero() {
            return Err(ProjError::Singular);
        }
        let m = [a, b, c, d];
        let lead = m.iter().find(|x| !x.is_zero()).unwrap().inv().unwrap();
        Ok(Moebius {
            m: m.map(|x| &x * &lead),
        })
    }

    pub fn from_rats(a: Rat, b: Rat, c: Rat, d: Rat) -> Result<Self, ProjError> {
        Moebius::new(
            Surd::from_rat(a),
            Surd::from_rat(b),
            Surd::from_rat(c),
            Surd::from_rat(d),
        )
    }

    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Result<Self, ProjError> {
        Moebius::new(
            Surd::from_int(a),
            Surd::from_int(b),
            Surd::from_int(c),
            Surd::from_int(d),
        )
    }

    pub fn identity() -> Self {
        Moebius::from_ints(1, 0, 0, 1).unwrap()
    }

    /// The coordinate swap `t ↔ s`, i.e. `z ↦ 1/z`.
    pub fn swap() -> Self {
        Moebius::from_ints(0, 1, 1, 0).unwrap()
    }

    pub fn entries(&self) -> &[Surd; 4] {
        &self.m
    }

    pub fn as_rats(&self) -> Option<[Rat; 4]> {
        let v: Option<Vec<Rat>> = self.m.iter().map(|x| x.as_rat()).collect();
        v.map(|v| [v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone()])
    }

    pub fn is_rational(&self) -> bool {
        self.m.iter().all(|x| x.is_rational())
    }

    pub fn det(&self) -> Surd {
        &(&self.m[0] * &self.m[3]) - &(&self.m[1] * &self.m[2])
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Moebius) -> Moebius {
        let [a, b, c, d] = &self.m;
        let [e, f, g, h] = &other.m;
        Moebius::new(
            &(a * e) + &(b * g),
            &(a * f) + &(b * h),
            &(c * e) + &(d * g),
            &(c * f) + &(d * h),
        )
        .expect("product of invertible matrices")
    }

    pub fn inverse(&self) -> Moebius {
        let [a, b, c, d] = &self.m;
        Moebius::new(d.clone(), -b, -c, a.clone()).expect("invertible")
    }

    /// Image as a homogeneous pair.
    pub fn apply_homogeneous(&self, p: &ExtPoint) -> (Surd, Surd) {
        let (x, y) = p.homogeneous();
        let [a, b, c, d] = &self.m;
        (&(a * &x) + &(b * &y), &(c * &x) + &(d * &y))
    }

    pub fn apply(&self, p: &ExtPoint) -> ExtPoint {
        let (num, den) = self.apply_homogeneous(p);
        if den.is_zero() {
            ExtPoint::Infinity
        } else {
            ExtPoint::Finite(num.div(&den).unwrap())
        }
    }

    pub fn apply_rat(&self, r: &Rat) -> ExtPoint {
        self.apply(&ExtPoint::rat(r.clone()))
    }

    /// `z ↦ z + c`.
    pub fn translation(c: Rat) -> Self {
        Moebius::new(Surd::one(), Surd::from_rat(c), Surd::zero(), Surd::one()).unwrap()
    }
}

impl fmt::Display for Moebius {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = &self.m;
        write!(f, "[{a}, {b}; {c}, {d}]")
    }
}

impl fmt::Debug for Moebius {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Moebius{self}")
    }
}

/// Dense polynomial with multiquadratic coefficients, constant term first.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct SurdPoly {
    coeffs: Vec<Surd>,
}

impl SurdPoly {
    pub fn new(mut coeffs: Vec<Surd>) -> Self {
        while coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            coeffs.pop();
        }
        SurdPoly { coeffs }
    }

    pub fn from_rat_poly(p: &RatPoly) -> Self {
        SurdPoly::new(p.coeffs().iter().map(|c| Surd::from_rat(c.clone())).collect())
    }

    pub fn coeffs(&self) -> &[Surd] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn deg(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    pub fn eval(&self, x: &Surd) -> Surd {
        let mut acc = Surd::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    pub fn to_rat_poly(&self) -> Option<RatPoly> {
        let v: Option<Vec<Rat>> = self.coeffs.iter().map(|c| c.as_rat()).collect();
        v.map(RatPoly::new)
    }

    /// `k` with `self = k * other`, if any.
    pub fn ratio_to_rat(&self, other: &RatPoly) -> Option<Surd> {
        if self.is_zero() || other.is_zero() || self.coeffs.len() != other.coeffs().len() {
            return None;
        }
        let k = self.coeffs.last().unwrap().scale(&other.leading().recip());
        for (a, b) in self.coeffs.iter().zip(other.coeffs()) {
            if *a != k.scale(b) {
                return None;
            }
        }
        Some(k)
    }

    fn mul(&self, other: &SurdPoly) -> SurdPoly {
        if self.is_zero() || other.is_zero() {
            return SurdPoly::default();
        }
        let mut v = vec![Surd::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                v[i + j] = &v[i + j] + &(a * b);
            }
        }
        SurdPoly::new(v)
    }

    fn add(&self, other: &SurdPoly) -> SurdPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let z = Surd::zero();
        SurdPoly::new(
            (0..n)
                .map(|i| {
                    let a = self.coeffs.get(i).unwrap_or(&z);
                    let b = other.coeffs.get(i).unwrap_or(&z);
                    a + b
                })
                .collect(),
        )
    }
}

impl fmt::Display for SurdPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(p) = self.to_rat_poly() {
            return write!(f, "{p}");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*t")?,
                _ => write!(f, "({c})*t^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// `F(a t + b s, c t + d s)` for `F` of declared degree `d`, dehomogenized at `s = 1`.
pub fn pullback_form_surd(f: &RatPoly, degree: usize, m: &Moebius) -> Result<SurdPoly, ProjError> {
    if f.deg() > degree as i64 {
        return Err(ProjError::DegreeMismatch {
            declared: degree,
            actual: f.deg() as usize,
        });
    }
    let [a, b, c, d] = m.entries();
    let num = SurdPoly::new(vec![b.clone(), a.clone()]);
    let den = SurdPoly::new(vec![d.clone(), c.clone()]);
    let mut den_pows = vec![SurdPoly::new(vec![Surd::one()])];
    for i in 1..=degree {
        let next = den_pows[i - 1].mul(&den);
        den_pows.push(next);
    }
    let mut acc = SurdPoly::default();
    let mut num_pow = SurdPoly::new(vec![Surd::one()]);
    for (i, coef) in f.coeffs().iter().enumerate() {
        if !coef.is_zero() {
            let term = num_pow.mul(&den_pows[degree - i]);
            let scaled = SurdPoly::new(term.coeffs.iter().map(|x| x.scale(coef)).collect());
            acc = acc.add(&scaled);
        }
        num_pow = num_pow.mul(&num);
    }
    Ok(acc)
}

/// Rational-matrix pullback; `NonRational` for maps with irrational entries.
pub fn pullback_form(f: &RatPoly, degree: usize, m: &Moebius) -> Result<RatPoly, ProjError> {
    let r = m.as_rats().ok_or(ProjError::NonRational)?;
    if f.deg() > degree as i64 {
        return Err(ProjError::DegreeMismatch {
            declared: degree,
            actual: f.deg() as usize,
        });
    }
    Ok(f.pullback(degree, &r))
}
