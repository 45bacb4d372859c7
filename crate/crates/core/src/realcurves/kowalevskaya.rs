//! The quartics `-(y^2 + a x^2 + b x z + c z^2)^2 ± x z (x - z)(x - s z) = 0`.

use std::collections::BTreeMap;

use num_traits::Signed;

use crate::exactnum::{isolate_real_roots, rat, sample_points, sign_at, AlgReal, Rat, RatPoly};

use super::RealCurveError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KowalevskayaQuartic {
    a: Rat,
    b: Rat,
    c: Rat,
    s: Rat,
    sign: i32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OvalProfile {
    pub ovals: usize,
    pub nested: bool,
}

impl KowalevskayaQuartic {
    /// Checks `a > 0`, `s > 1` and smoothness. In the chart `z = 1`, with
    /// `Y = y^2`, `q = a x^2 + b x + c` and `G = ± x (x-1)(x-s)`, the
    /// equation is `(Y + q)^2 = G`. `F_y = -4y(Y + q)` vanishes on `Y + q = 0`,
    /// where a singular point needs a double root of `G` (none for `s ≠ 0, 1`),
    /// or on `y = 0`, where it needs a double root of `G - q^2`. At the two
    /// complex points at infinity `∂F/∂z = ±x^3 ≠ 0`.
    pub fn new(a: Rat, b: Rat, c: Rat, s: Rat, sign: i32) -> Result<Self, RealCurveError> {
        if !a.is_positive() {
            return Err(RealCurveError::InvalidParameters("a must be positive".into()));
        }
        if s <= rat(1) {
            return Err(RealCurveError::InvalidParameters("s must exceed 1".into()));
        }
        if sign != 1 && sign != -1 {
            return Err(RealCurveError::InvalidParameters("sign must be +1 or -1".into()));
        }
        let k = KowalevskayaQuartic { a, b, c, s, sign };
        if !k.p().is_square_free() {
            return Err(RealCurveError::SingularQuartic);
        }
        Ok(k)
    }

    pub fn params(&self) -> (&Rat, &Rat, &Rat, &Rat, i32) {
        (&self.a, &self.b, &self.c, &self.s, self.sign)
    }

    /// `a x^2 + b x + c`.
    pub fn q(&self) -> RatPoly {
        RatPoly::new(vec![self.c.clone(), self.b.clone(), self.a.clone()])
    }

    /// `± x (x - 1)(x - s)`.
    pub fn g(&self) -> RatPoly {
        RatPoly::from_roots(&[rat(0), rat(1), self.s.clone()]).scale(&rat(self.sign as i64))
    }

    /// `G - q^2`; its roots are where the curve meets `y = 0`.
    fn p(&self) -> RatPoly {
        let q = self.q();
        &self.g() - &(&q * &q)
    }

    /// `f_4(x, y, 1)`.
    pub fn eval_affine(&self, x: &Rat, y: &Rat) -> Rat {
        let u = y * y + self.q().eval(x);
        self.g().eval(x) - &u * &u
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
enum Branch {
    /// `Y = -q + √G`.
    Outer,
    /// `Y = -q - √G`.
    Inner,
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, i: usize) -> usize {
        let p = self.0[i];
        if p == i {
            return i;
        }
        let r = self.find(p);
        self.0[i] = r;
        r
    }

    fn union(&mut self, i: usize, j: usize) {
        let (a, b) = (self.find(i), self.find(j));
        self.0[a] = b;
    }
}

/// Branches `(Y±, sign of y)` over an open strip, from a rational sample.
fn strip_branches(q: &RatPoly, g: &RatPoly, x: &Rat) -> Vec<(Branch, i32)> {
    let (gx, qx) = (g.eval(x), q.eval(x));
    if !gx.is_positive() {
        return Vec::new();
    }
    let q2 = &qx * &qx;
    let mut out = Vec::new();
    if qx.is_negative() || q2 < gx {
        out.extend([(Branch::Outer, 1), (Branch::Outer, -1)]);
    }
    if qx.is_negative() && q2 > gx {
        out.extend([(Branch::Inner, 1), (Branch::Inner, -1)]);
    }
    out
}

/// Point of the critical fibre at `c` where a branch ends.
fn limit_point(q: &RatPoly, g: &RatPoly, p: &RatPoly, c: &AlgReal, br: Branch, s: i32) -> (Branch, i32) {
    let (sg, sq, sp) = (sign_at(g, c), sign_at(q, c), sign_at(p, c));
    let (br, y_sign) = if sg == 0 {
        (Branch::Outer, -sq)
    } else {
        match br {
            Branch::Outer => (br, if sq <= 0 { 1 } else { sp }),
            Branch::Inner => (br, if sq >= 0 { -1 } else { -sp }),
        }
    };
    debug_assert!(y_sign >= 0);
    (br, if y_sign == 0 { 0 } else { s })
}

/// Connected components of `C_4(R)` and whether two of them are nested.
pub fn kowalevskaya_oval_profile(k: &KowalevskayaQuartic) -> Result<OvalProfile, RealCurveError> {
    let (q, g, p) = (k.q(), k.g(), k.p());
    let mut crit = isolate_real_roots(&g)?;
    for r in isolate_real_roots(&p)? {
        if !crit.contains(&r) {
            crit.push(r);
        }
    }
    crit.sort();
    let samples = sample_points(&crit);

    let mut nodes: BTreeMap<(usize, bool, Branch, i32), usize> = BTreeMap::new();
    let id = |key, nodes: &mut BTreeMap<_, usize>| {
        let n = nodes.len();
        *nodes.entry(key).or_insert(n)
    };
    let mut edges = Vec::new();
    for (i, x) in samples.iter().enumerate() {
        let bs = strip_branches(&q, &g, x);
        for &(br, s) in &bs {
            let b = id((i, false, br, s), &mut nodes);
            for ci in [i.wrapping_sub(1), i] {
                if let Some(c) = crit.get(ci) {
                    let (pb, ps) = limit_point(&q, &g, &p, c, br, s);
                    edges.push((b, id((ci, true, pb, ps), &mut nodes)));
                }
            }
        }
    }
    let mut uf = UnionFind((0..nodes.len()).collect());
    for (u, v) in edges {
        uf.union(u, v);
    }
    // Component root -> (strip index, branch) list.
    let mut comps: BTreeMap<usize, Vec<(usize, Branch)>> = BTreeMap::new();
    for (&(i, is_point, br, _), &n) in &nodes {
        let r = uf.find(n);
        let e = comps.entry(r).or_default();
        if !is_point {
            e.push((i, br));
        }
    }
    let comps: Vec<Vec<(usize, Branch)>> = comps.into_values().collect();
    let nested = comps.len() == 2 && (nests(&comps[0], &comps[1]) || nests(&comps[1], &comps[0]));
    Ok(OvalProfile {
        ovals: comps.len(),
        nested,
    })
}

/// `inner` lies strictly inside `outer`: its strips are within the strip range
/// of `outer`, and on shared strips it uses only `Y-` while `outer` uses only `Y+`.
fn nests(inner: &[(usize, Branch)], outer: &[(usize, Branch)]) -> bool {
    let range = |c: &[(usize, Branch)]| {
        let lo = c.iter().map(|x| x.0).min().unwrap_or(0);
        let hi = c.iter().map(|x| x.0).max().unwrap_or(0);
        (lo, hi)
    };
    let (il, ih) = range(inner);
    let (ol, oh) = range(outer);
    if inner.is_empty() || outer.is_empty() || il < ol || ih > oh {
        return false;
    }
    let shared = |i: usize| inner.iter().any(|x| x.0 == i) && outer.iter().any(|x| x.0 == i);
    inner.iter().all(|&(i, b)| !shared(i) || b == Branch::Inner)
        && outer.iter().all(|&(i, b)| !shared(i) || b == Branch::Outer)
}

/// Profile of a quartic in the Kowalevskaya class: one oval or two nested
/// ovals. Other topologies are rejected.
pub fn kowalevskaya_class_profile(k: &KowalevskayaQuartic) -> Result<OvalProfile, RealCurveError> {
    let p = kowalevskaya_oval_profile(k)?;
    match (p.ovals, p.nested) {
        (1, _) | (2, true) => Ok(p),
        (ovals, nested) => Err(RealCurveError::OutsideKowalevskayaClass { ovals, nested }),
    }
}
