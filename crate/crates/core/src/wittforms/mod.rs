//! Quadratic forms over the rational function field of the real line:
//! residues, signature profiles, and two independent deciders for
//! equivalence of binary diagonal forms.

use std::fmt;

use num_traits::Signed;

use crate::exactnum::{
    isolate_real_roots, quadratic_discriminant, rat, sample_points, sign, sign_at, AlgReal,
    ExactError, RatPoly,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WittError {
    #[error("form has no entries")]
    Empty,
    #[error("form entry is the zero polynomial")]
    ZeroEntry,
    #[error("input polynomial has a multiple root")]
    NotSquareFree,
    #[error("entries have a nonconstant common divisor")]
    CommonDivisor,
    #[error("modulus is reducible over the reals")]
    ReducibleModulus,
    #[error("residue fields of degree above two are not modeled")]
    ResidueFieldUnsupported,
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// Diagonal form `⟨p_1, ..., p_n⟩` with nonzero polynomial entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagFormRt {
    entries: Vec<RatPoly>,
}

impl DiagFormRt {
    pub fn new(entries: Vec<RatPoly>) -> Result<Self, WittError> {
        if entries.is_empty() {
            return Err(WittError::Empty);
        }
        if entries.iter().any(|e| e.is_zero()) {
            return Err(WittError::ZeroEntry);
        }
        Ok(DiagFormRt { entries })
    }

    pub fn entries(&self) -> &[RatPoly] {
        &self.entries
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    /// Orthogonal sum.
    pub fn concat(&self, other: &DiagFormRt) -> DiagFormRt {
        let mut e = self.entries.clone();
        e.extend(other.entries.iter().cloned());
        DiagFormRt { entries: e }
    }

    fn product(&self) -> RatPoly {
        self.entries
            .iter()
            .fold(RatPoly::one(), |acc, e| &acc * e)
    }
}

impl fmt::Display for DiagFormRt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        write!(f, "<{}>", parts.join(", "))
    }
}

/// Witt class over the reals, identified by its signature.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WittClassR {
    pub signature: i64,
}

/// Witt class over the complex numbers, identified by the rank parity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WittClassC {
    pub parity: u8,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Residue {
    Real(WittClassR),
    Complex(WittClassC),
}

/// Second residue along a monic irreducible `pi` of degree one or two.
pub fn second_residue(form: &DiagFormRt, pi: &RatPoly) -> Result<Residue, WittError> {
    let pi = pi.monic();
    match pi.deg() {
        1 => {
            let root = -pi.coeff(0);
            let mut sig = 0i64;
            for e in &form.entries {
                let s = e.square_class()?;
                if let Some(v) = s.exact_div(&pi) {
                    sig += v.sign_at(&root) as i64;
                }
            }
            Ok(Residue::Real(WittClassR { signature: sig }))
        }
        2 => {
            if !quadratic_discriminant(&pi).is_negative() {
                return Err(WittError::ReducibleModulus);
            }
            let mut parity = 0u8;
            for e in &form.entries {
                if pi.divides(&e.square_class()?) {
                    parity ^= 1;
                }
            }
            Ok(Residue::Complex(WittClassC { parity }))
        }
        d if d > 2 => Err(WittError::ResidueFieldUnsupported),
        _ => Err(WittError::ReducibleModulus),
    }
}

/// Image under the splitting at infinity: even-degree entries contribute the
/// sign of their leading coefficient.
pub fn residue_at_infinity(form: &DiagFormRt) -> WittClassR {
    let signature = form
        .entries
        .iter()
        .filter(|e| e.deg() % 2 == 0)
        .map(|e| sign(&e.leading()) as i64)
        .sum();
    WittClassR { signature }
}

/// Signatures on the open regions `(-∞, b_0), (b_0, b_1), ..., (b_k, ∞)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignatureProfile {
    pub breakpoints: Vec<AlgReal>,
    pub signatures: Vec<i64>,
}

impl SignatureProfile {
    /// Signature at a rational point that is not a breakpoint.
    pub fn signature_at(&self, x: &crate::exactnum::Rat) -> i64 {
        let idx = self
            .breakpoints
            .iter()
            .take_while(|b| b.cmp_rat(x) == std::cmp::Ordering::Less)
            .count();
        self.signatures[idx]
    }

    /// Region-by-region equality on the common refinement of breakpoints.
    pub fn agrees_with(&self, other: &SignatureProfile) -> bool {
        let mut merged: Vec<AlgReal> = self
            .breakpoints
            .iter()
            .chain(other.breakpoints.iter())
            .cloned()
            .collect();
        merged.sort();
        merged.dedup();
        sample_points(&merged)
            .iter()
            .all(|x| self.signature_at(x) == other.signature_at(x))
    }

    /// Whether the two unbounded regions, glued through ∞, carry one signature.
    pub fn continuous_through_infinity(&self) -> bool {
        self.signatures.first() == self.signatures.last()
    }
}

impl fmt::Display for SignatureProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.breakpoints.len();
        let mut parts = Vec::new();
        for (i, s) in self.signatures.iter().enumerate() {
            let lo = if i == 0 {
                "-inf".to_string()
            } else {
                self.breakpoints[i - 1].to_exact_string()
            };
            let hi = if i == n {
                "inf".to_string()
            } else {
                self.breakpoints[i].to_exact_string()
            };
            parts.push(format!("({lo}, {hi}): {s}"));
        }
        write!(f, "{}", parts.join("; "))
    }
}

pub fn signature_profile(form: &DiagFormRt) -> SignatureProfile {
    let breakpoints = isolate_real_roots(&form.product()).expect("nonzero entries");
    let signatures = sample_points(&breakpoints)
        .iter()
        .map(|x| form.entries.iter().map(|e| e.sign_at(x) as i64).sum())
        .collect();
    SignatureProfile {
        breakpoints,
        signatures,
    }
}

/// Completes the square in `a x^2 + b xy + c y^2`, giving `⟨a, a(4ac - b^2)⟩`.
pub fn diagonalize_binary(a: &RatPoly, b: &RatPoly, c: &RatPoly) -> Result<DiagFormRt, WittError> {
    let four = RatPoly::constant(rat(4));
    let disc = &(&four * &(a * c)) - &(b * b);
    if !a.is_zero() {
        DiagFormRt::new(vec![a.clone(), a * &disc])
    } else if !c.is_zero() {
        DiagFormRt::new(vec![c.clone(), c * &disc])
    } else if !b.is_zero() {
        DiagFormRt::new(vec![b.clone(), -b])
    } else {
        Err(WittError::ZeroEntry)
    }
}

/// Signature-profile decider: equal discriminant square classes and equal
/// signatures on every region. Square-freeness is not required.
pub fn equiv_binary_oracle(
    a: &RatPoly,
    b: &RatPoly,
    c: &RatPoly,
    d: &RatPoly,
) -> Result<bool, WittError> {
    let left = DiagFormRt::new(vec![a.clone(), b.clone()])?;
    let right = DiagFormRt::new(vec![c.clone(), d.clone()])?;
    let det = &(a * b) * &(c * d);
    if !det.square_class()?.is_positive_constant() {
        return Ok(false);
    }
    Ok(signature_profile(&left).agrees_with(&signature_profile(&right)))
}

/// Root-local decider with conditions checked at every real root of `ABCD`,
/// the roles of the four entries permuted so the printed case list applies.
pub fn equiv_binary_criterion(
    a: &RatPoly,
    b: &RatPoly,
    c: &RatPoly,
    d: &RatPoly,
) -> Result<bool, WittError> {
    criterion(a, b, c, d, RootScope::AllEntries)
}

/// The same conditions checked only at the real roots of `A`.
pub fn equiv_binary_criterion_as_printed(
    a: &RatPoly,
    b: &RatPoly,
    c: &RatPoly,
    d: &RatPoly,
) -> Result<bool, WittError> {
    criterion(a, b, c, d, RootScope::FirstEntryOnly)
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum RootScope {
    FirstEntryOnly,
    AllEntries,
}

fn check_square_free(ps: &[&RatPoly]) -> Result<(), WittError> {
    for p in ps {
        if p.is_zero() {
            return Err(WittError::ZeroEntry);
        }
        if !p.is_square_free() {
            return Err(WittError::NotSquareFree);
        }
    }
    Ok(())
}

fn criterion(
    a: &RatPoly,
    b: &RatPoly,
    c: &RatPoly,
    d: &RatPoly,
    scope: RootScope,
) -> Result<bool, WittError> {
    check_square_free(&[a, b, c, d])?;
    // (1) ABCD is a square.
    let prod = &(a * b) * &(c * d);
    if !prod.square_class()?.is_positive_constant() {
        return Ok(false);
    }
    // (3) degree parities and leading signs at infinity.
    if !condition_at_infinity(a, b, c, d) {
        return Ok(false);
    }
    // (2) root-local sign conditions.
    let roots = match scope {
        RootScope::FirstEntryOnly => isolate_real_roots(a)?,
        RootScope::AllEntries => isolate_real_roots(&prod)?,
    };
    for eps in &roots {
        let z = |p: &RatPoly| sign_at(p, eps) == 0;
        let (x, y, u, v) = if z(a) {
            (a, b, c, d)
        } else if z(b) {
            (b, a, c, d)
        } else if z(c) {
            (c, d, a, b)
        } else {
            (d, c, a, b)
        };
        if !local_condition(x, y, u, v, eps) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Conditions (2.a)-(2.c) at a root `eps` of `x`; `p_eps(eps)` is `p'(eps)`.
fn local_condition(x: &RatPoly, y: &RatPoly, u: &RatPoly, v: &RatPoly, eps: &AlgReal) -> bool {
    let zero = |p: &RatPoly| sign_at(p, eps) == 0;
    let quot = |p: &RatPoly| sign_at(&p.derivative(), eps);
    let (zy, zu, zv) = (zero(y), zero(u), zero(v));
    let sx = quot(x);
    if !zy {
        let ok_u = !zu || sx * quot(u) > 0;
        let ok_v = !zv || sx * quot(v) > 0;
        ok_u && ok_v
    } else if !zu && !zv {
        sx * quot(y) < 0
    } else if zu && zv {
        let (sy, su, sv) = (quot(y), quot(u), quot(v));
        (sx * sy < 0 && su * sv < 0) || (sx == sy && sy == su && su == sv)
    } else {
        // Excluded by (1) for square-free inputs.
        true
    }
}

fn condition_at_infinity(a: &RatPoly, b: &RatPoly, c: &RatPoly, d: &RatPoly) -> bool {
    let odd = |p: &RatPoly| p.deg() % 2 == 1;
    let lc = |p: &RatPoly| sign(&p.leading());
    let (oa, ob, oc, od) = (odd(a), odd(b), odd(c), odd(d));
    if oa != ob && oc != od {
        let e1 = if oa { b } else { a };
        let e2 = if oc { d } else { c };
        return lc(e1) == lc(e2);
    }
    match (oa && ob, oc && od, !oa && !ob, !oc && !od) {
        (true, true, _, _) => true,
        (true, _, _, true) => lc(c) * lc(d) < 0,
        (_, true, true, _) => lc(a) * lc(b) < 0,
        (_, _, true, true) => {
            (lc(a) * lc(b) < 0 && lc(c) * lc(d) < 0)
                || (lc(a) == lc(b) && lc(b) == lc(c) && lc(c) == lc(d))
        }
        _ => false,
    }
}

/// Equivariant ternary criterion: `F = μE` with `μ > 0` and the binary parts equivalent.
pub fn equiv_ternary_g(
    a: &RatPoly,
    b: &RatPoly,
    e: &RatPoly,
    c: &RatPoly,
    d: &RatPoly,
    f: &RatPoly,
) -> Result<bool, WittError> {
    check_square_free(&[a, b, e, c, d, f])?;
    let g1 = RatPoly::gcd(&RatPoly::gcd(a, b), e);
    let g2 = RatPoly::gcd(&RatPoly::gcd(c, d), f);
    if !g1.is_constant() || !g2.is_constant() {
        return Err(WittError::CommonDivisor);
    }
    match f.ratio_to(e) {
        Some(mu) if mu > rat(0) => equiv_binary_criterion(a, b, c, d),
        _ => Ok(false),
    }
}

/// Residue along the real place `eps`: signs of `p/(t - eps)` at `eps` over
/// the entries whose square class vanishes there.
pub fn real_residue_at(form: &DiagFormRt, eps: &AlgReal) -> Result<WittClassR, WittError> {
    let mut signature = 0;
    for e in &form.entries {
        let s = e.square_class()?;
        if sign_at(&s, eps) == 0 {
            signature += sign_at(&s.derivative(), eps) as i64;
        }
    }
    Ok(WittClassR { signature })
}

/// Whether every second residue of the form vanishes, at real places and at
/// pairs of complex-conjugate places.
pub fn residues_vanish(form: &DiagFormRt) -> Result<bool, WittError> {
    let classes: Vec<RatPoly> = form
        .entries
        .iter()
        .map(|e| e.square_class())
        .collect::<Result<_, _>>()?;
    let (_, factors) = form.product().square_free_factorization()?;
    for (f, _) in factors {
        let real = isolate_real_roots(&f)?;
        for eps in &real {
            if real_residue_at(form, eps)?.signature != 0 {
                return Ok(false);
            }
        }
        if (real.len() as i64) < f.deg() {
            let parity = classes.iter().filter(|c| f.divides(c)).count() % 2;
            if parity != 0 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests;
