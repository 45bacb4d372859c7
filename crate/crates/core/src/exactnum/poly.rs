//! Dense univariate polynomials over the rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rat::{rat, rat_to_string, sign, Int, Rat};
use super::ExactError;

/// Polynomial in `t`, constant term first, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct RatPoly {
    coeffs: Vec<Rat>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Self::new(vec![c])
    }

    /// The variable `t`.
    pub fn t() -> Self {
        Self::new(vec![Rat::zero(), Rat::one()])
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&x| rat(x)).collect())
    }

    /// `t - r`.
    pub fn linear(r: &Rat) -> Self {
        Self::new(vec![-r.clone(), Rat::one()])
    }

    /// Monic polynomial with the given roots.
    pub fn from_roots(roots: &[Rat]) -> Self {
        roots
            .iter()
            .fold(Self::one(), |acc, r| &acc * &Self::linear(r))
    }

    pub fn monomial(c: Rat, k: usize) -> Self {
        let mut v = vec![Rat::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with `-1` for the zero polynomial.
    pub fn deg(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn sign_at(&self, x: &Rat) -> i32 {
        sign(&self.eval(x))
    }

    /// Sign for `t -> +inf` (`positive`) or `t -> -inf`.
    pub fn sign_at_infinity(&self, positive: bool) -> i32 {
        let s = sign(&self.leading());
        if !positive && self.deg() % 2 == 1 {
            -s
        } else {
            s
        }
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * rat(i as i64))
                .collect(),
        )
    }

    pub fn scale(&self, c: &Rat) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let dd = d.coeffs.len() - 1;
        if self.coeffs.len() < d.coeffs.len() {
            return (Self::zero(), self.clone());
        }
        let lc_inv = d.leading().recip();
        let mut r = self.coeffs.clone();
        let mut q = vec![Rat::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = &r[k + dd] * &lc_inv;
            if !c.is_zero() {
                for (j, dj) in d.coeffs.iter().enumerate() {
                    r[k + j] -= &c * dj;
                }
            }
            q[k] = c;
        }
        r.truncate(dd);
        (Self::new(q), Self::new(r))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    /// Quotient when `d` divides `self` exactly.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    pub fn divides(&self, other: &Self) -> bool {
        !self.is_zero() && other.rem(self).is_zero()
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        self.scale(&self.leading().recip())
    }

    /// Integer coefficients with content 1, sign of the leading coefficient kept.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let ints = self.integer_coeffs();
        Self::new(ints.into_iter().map(Rat::from_integer).collect())
    }

    /// Integer coefficient vector of the primitive associate.
    pub fn integer_coeffs(&self) -> Vec<Int> {
        if self.is_zero() {
            return Vec::new();
        }
        let lcm = self
            .coeffs
            .iter()
            .fold(Int::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<Int> = self
            .coeffs
            .iter()
            .map(|c| (c * Rat::from_integer(lcm.clone())).to_integer())
            .collect();
        let g = ints.iter().fold(Int::zero(), |acc, c| acc.gcd(c));
        ints.into_iter().map(|c| c / &g).collect()
    }

    /// Monic gcd; zero if both inputs are zero.
    pub fn gcd(a: &Self, b: &Self) -> Self {
        let mut x = a.primitive();
        let mut y = b.primitive();
        while !y.is_zero() {
            let r = x.rem(&y).primitive();
            x = y;
            y = r;
        }
        x.monic()
    }

    /// `self(other(t))`.
    pub fn compose(&self, other: &Self) -> Self {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * other) + &Self::constant(c.clone());
        }
        acc
    }

    /// `self(t + c)`.
    pub fn shift(&self, c: &Rat) -> Self {
        self.compose(&Self::new(vec![c.clone(), Rat::one()]))
    }

    /// `self(-t)`.
    pub fn reflect(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c.clone() } else { c.clone() })
                .collect(),
        )
    }

    /// `t^d self(1/t)`; requires `d >= deg`.
    pub fn reverse(&self, d: usize) -> Self {
        let mut v = vec![Rat::zero(); d + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[d - i] = c.clone();
        }
        Self::new(v)
    }

    pub fn is_square_free(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        Self::gcd(self, &self.derivative()).is_constant()
    }

    /// `p / gcd(p, p')`, primitive with the leading sign kept.
    pub fn square_free_part(&self) -> Result<Self, ExactError> {
        if self.is_zero() {
            return Err(ExactError::ZeroPolynomial);
        }
        let g = Self::gcd(self, &self.derivative());
        Ok(self.exact_div(&g).expect("gcd divides").primitive())
    }

    /// Yun's algorithm: `p = c * prod f_i^i` with `f_i` monic, square-free, coprime.
    pub fn square_free_factorization(&self) -> Result<(Rat, Vec<(Self, usize)>), ExactError> {
        if self.is_zero() {
            return Err(ExactError::ZeroPolynomial);
        }
        let c = self.leading();
        let f = self.monic();
        let mut out = Vec::new();
        if f.is_constant() {
            return Ok((c, out));
        }
        let df = f.derivative();
        let a = Self::gcd(&f, &df);
        let mut b = f.exact_div(&a).unwrap();
        let mut d = &df.exact_div(&a).unwrap() - &b.derivative();
        let mut i = 1;
        while !b.is_constant() {
            let g = Self::gcd(&b, &d);
            if !g.is_constant() {
                out.push((g.clone(), i));
            }
            let nb = b.exact_div(&g).unwrap();
            d = &d.exact_div(&g).unwrap() - &nb.derivative();
            b = nb;
            i += 1;
        }
        Ok((c, out))
    }

    /// Representative of the square class over the reals' rational function
    /// field: product of the odd-multiplicity factors with the leading sign.
    pub fn square_class(&self) -> Result<Self, ExactError> {
        let (c, factors) = self.square_free_factorization()?;
        let mut rep = Self::constant(rat(sign(&c) as i64));
        for (f, m) in factors {
            if m % 2 == 1 {
                rep = &rep * &f;
            }
        }
        Ok(rep.primitive())
    }

    /// `k` with `self = k * other`, if any.
    pub fn ratio_to(&self, other: &Self) -> Option<Rat> {
        if self.is_zero() || other.is_zero() || self.coeffs.len() != other.coeffs.len() {
            return None;
        }
        let k = self.leading() / other.leading();
        (other.scale(&k) == *self).then_some(k)
    }

    /// Homogeneous substitution `s^d p(t/s)` with `(t, s) = (a u + b, c u + d)`.
    pub fn pullback(&self, d: usize, m: &[Rat; 4]) -> Self {
        let num = Self::new(vec![m[1].clone(), m[0].clone()]);
        let den = Self::new(vec![m[3].clone(), m[2].clone()]);
        let mut acc = Self::zero();
        let mut den_pows = vec![Self::one()];
        for i in 1..=d {
            den_pows.push(&den_pows[i - 1] * &den);
        }
        let mut num_pow = Self::one();
        for (i, c) in self.coeffs.iter().enumerate() {
            acc = &acc + &(&num_pow * &den_pows[d - i]).scale(c);
            num_pow = &num_pow * &num;
        }
        acc
    }

    pub fn is_positive_constant(&self) -> bool {
        self.is_constant() && self.leading().is_positive()
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let mono = match i {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{i}"),
            };
            if i == 0 {
                write!(f, "{}", rat_to_string(&a))?;
            } else if a.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{}*{mono}", rat_to_string(&a))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatPoly({self})")
    }
}

impl Add for &RatPoly {
    type Output = RatPoly;
    fn add(self, rhs: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RatPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &RatPoly {
    type Output = RatPoly;
    fn sub(self, rhs: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RatPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &RatPoly {
    type Output = RatPoly;
    fn mul(self, rhs: &RatPoly) -> RatPoly {
        if self.is_zero() || rhs.is_zero() {
            return RatPoly::zero();
        }
        let mut v = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        RatPoly::new(v)
    }
}

impl Neg for &RatPoly {
    type Output = RatPoly;
    fn neg(self) -> RatPoly {
        RatPoly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RatPoly {
            type Output = RatPoly;
            fn $m(self, rhs: RatPoly) -> RatPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&RatPoly> for RatPoly {
            type Output = RatPoly;
            fn $m(self, rhs: &RatPoly) -> RatPoly {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for RatPoly {
    type Output = RatPoly;
    fn neg(self) -> RatPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::frac;

    fn p(s: &str) -> RatPoly {
        crate::exactnum::parse_poly(s).unwrap()
    }

    #[test]
    fn display_is_canonical() {
        assert_eq!(p("(t-1)*(t-2)").to_string(), "t^2 - 3*t + 2");
        assert_eq!(p("-1/2*t^3").to_string(), "-1/2*t^3");
        assert_eq!(p("0").to_string(), "0");
        assert_eq!(p("7/2 - t").to_string(), "-t + 7/2");
    }

    #[test]
    fn division_and_gcd() {
        let a = p("(t-1)*(t-2)*(t^2+1)");
        let b = p("(t-2)*(t+5)");
        assert_eq!(RatPoly::gcd(&a, &b), p("t-2"));
        let (q, r) = a.div_rem(&b);
        assert_eq!(&(&q * &b) + &r, a);
        assert!(r.deg() < b.deg());
    }

    #[test]
    fn square_free_part_examples() {
        assert_eq!(p("t^2").square_free_part().unwrap(), p("t"));
        assert_eq!(
            p("(t-1)*(t-2)").square_free_part().unwrap(),
            p("(t-1)*(t-2)")
        );
        let s = p("-(t^2+1)^2*(t-3)").square_free_part().unwrap();
        assert_eq!(s.ratio_to(&p("-(t^2+1)*(t-3)")).map(|k| k > rat(0)), Some(true));
        assert_eq!(RatPoly::zero().square_free_part(), Err(ExactError::ZeroPolynomial));
    }

    #[test]
    fn yun_factorization() {
        let f = p("3*(t-1)*(t+2)^2*(t^2+1)^3");
        let (c, fs) = f.square_free_factorization().unwrap();
        assert_eq!(c, rat(3));
        assert_eq!(fs, vec![(p("t-1"), 1), (p("t+2"), 2), (p("t^2+1"), 3)]);
        assert_eq!(f.square_class().unwrap(), p("(t-1)*(t^2+1)"));
        assert_eq!(p("-4*t^2").square_class().unwrap(), p("-1"));
    }

    #[test]
    fn primitive_keeps_sign() {
        assert_eq!(p("-1/2*t + 1/3").primitive(), p("-3*t + 2"));
    }

    #[test]
    fn pullback_of_forms() {
        // (t+s)^2 - s^2 = t^2 + 2ts
        let f = p("t^2 - 1");
        let one = rat(1);
        let zero = rat(0);
        let m = [one.clone(), one.clone(), zero, one];
        assert_eq!(f.pullback(2, &m), p("t^2 + 2*t"));
        // t of degree 1 under the swap is the constant 1
        let sw = [rat(0), rat(1), rat(1), rat(0)];
        assert_eq!(p("t").pullback(1, &sw), p("1"));
    }

    #[test]
    fn ratio_and_reverse() {
        assert_eq!(p("2*t+4").ratio_to(&p("t+2")), Some(rat(2)));
        assert_eq!(p("2*t+4").ratio_to(&p("t+3")), None);
        assert_eq!(p("t^2 + 2*t").reverse(3), p("2*t^2 + t"));
        assert_eq!(p("t^3 - t").reflect(), p("-t^3 + t"));
        assert_eq!(p("t^2").shift(&frac(1, 2)), p("t^2 + t + 1/4"));
    }
}
