//! Resultants and the small amount of linear algebra they need.

use num_traits::{One, Zero};

use super::poly::RatPoly;
use super::rat::{rat, Rat};
use super::ExactError;

/// Sylvester resultant, computed by the Euclidean recurrence
/// `res(a, b) = (-1)^(da db) lc(b)^(da - dr) res(b, a mod b)`.
pub fn resultant(p: &RatPoly, q: &RatPoly) -> Result<Rat, ExactError> {
    if p.is_zero() || q.is_zero() {
        return Err(ExactError::ZeroPolynomial);
    }
    let mut a = p.clone();
    let mut b = q.clone();
    let mut s = Rat::one();
    loop {
        let da = a.deg() as usize;
        let db = b.deg() as usize;
        if db == 0 {
            return Ok(s * pow(&b.leading(), da));
        }
        let r = a.rem(&b);
        if r.is_zero() {
            return Ok(Rat::zero());
        }
        let dr = r.deg() as usize;
        if (da * db) % 2 == 1 {
            s = -s;
        }
        s *= pow(&b.leading(), da - dr);
        a = b;
        b = r;
    }
}

/// Resultant as the determinant of the Sylvester matrix built with the given
/// formal degrees (leading zeros allowed).
pub fn sylvester_resultant(p: &RatPoly, q: &RatPoly, dp: usize, dq: usize) -> Rat {
    let n = dp + dq;
    if n == 0 {
        return Rat::one();
    }
    let mut m = vec![vec![Rat::zero(); n]; n];
    for i in 0..dq {
        for j in 0..=dp {
            m[i][i + j] = p.coeff(dp - j);
        }
    }
    for i in 0..dp {
        for j in 0..=dq {
            m[dq + i][i + j] = q.coeff(dq - j);
        }
    }
    determinant(m)
}

pub fn discriminant(p: &RatPoly) -> Result<Rat, ExactError> {
    let d = p.degree().ok_or(ExactError::ZeroPolynomial)?;
    let r = resultant(p, &p.derivative())?;
    let sign = if (d * (d.saturating_sub(1)) / 2) % 2 == 1 {
        -Rat::one()
    } else {
        Rat::one()
    };
    Ok(sign * r / p.leading())
}

pub fn determinant(mut m: Vec<Vec<Rat>>) -> Rat {
    let n = m.len();
    let mut det = Rat::one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Rat::zero();
        };
        if piv != col {
            m.swap(piv, col);
            det = -det;
        }
        let pv = m[col][col].clone();
        det *= &pv;
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let f = &m[r][col] / &pv;
            for c in col..n {
                let delta = &f * &m[col][c];
                m[r][c] -= delta;
            }
        }
    }
    det
}

/// Polynomial through `(x_i, y_i)` (Newton divided differences).
pub fn interpolate(xs: &[Rat], ys: &[Rat]) -> RatPoly {
    let n = xs.len();
    let mut coef: Vec<Rat> = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            coef[i] = (&coef[i] - &coef[i - 1]) / (&xs[i] - &xs[i - j]);
        }
    }
    let mut acc = RatPoly::zero();
    for i in (0..n).rev() {
        acc = &(&acc * &RatPoly::linear(&xs[i])) + &RatPoly::constant(coef[i].clone());
    }
    acc
}

/// `res_y(p(y), Q_x(y))` as a polynomial in `x`, where `family(x0)` returns
/// `Q_{x0}` with a leading coefficient independent of `x0`; `bound` is a
/// degree bound for the result.
pub fn eliminate<F>(p: &RatPoly, family: F, bound: usize) -> Result<RatPoly, ExactError>
where
    F: Fn(&Rat) -> RatPoly,
{
    let xs: Vec<Rat> = (0..=bound as i64).map(rat).collect();
    let ys = xs
        .iter()
        .map(|x| resultant(p, &family(x)))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(interpolate(&xs, &ys))
}

fn pow(x: &Rat, k: usize) -> Rat {
    let mut acc = Rat::one();
    for _ in 0..k {
        acc *= x;
    }
    acc
}
