//! Seeded generators shared by the property and acceptance suites.
#![allow(dead_code)]

use cremona_core::conicbundle::{normalize, validate_model, ConicBundleError, ConicBundleModel};
use cremona_core::exactnum::{rat, rat_sqrt, Rat, RatPoly};
use cremona_core::projline::{ExtPoint, Moebius};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn poly_roots(roots: &[Rat]) -> RatPoly {
    RatPoly::from_roots(roots)
}

/// Random element of `SL_2(Z)` with small entries.
pub fn unimodular<R: Rng>(rng: &mut R) -> [i64; 4] {
    loop {
        let (a, b, c) = (rng.gen_range(-2..=2), rng.gen_range(-2..=2), rng.gen_range(-2..=2));
        for d in -3..=3i64 {
            if a * d - b * c == 1 {
                return [a, b, c, d];
            }
        }
    }
}

/// Binary part after `x ↦ a x + b y, y ↦ c x + d y`.
pub fn change(a: &RatPoly, b: &RatPoly, c: &RatPoly, m: [i64; 4]) -> [RatPoly; 3] {
    let [p, q, r, s] = m.map(|x| RatPoly::constant(rat(x)));
    let two = RatPoly::constant(rat(2));
    let quad = |u: &RatPoly, v: &RatPoly| &(&(a * &(u * u)) + &(b * &(u * v))) + &(c * &(v * v));
    let mixed = &(&(&two * &(a * &(&p * &q))) + &(b * &(&(&p * &s) + &(&q * &r)))) + &(&two * &(c * &(&r * &s)));
    [quad(&p, &r), mixed, quad(&q, &s)]
}

fn distinct<R: Rng>(rng: &mut R, n: usize, lo: i64, hi: i64) -> Vec<i64> {
    let mut pool: Vec<i64> = (lo..=hi).collect();
    pool.shuffle(rng);
    let mut v: Vec<i64> = pool.into_iter().take(n).collect();
    v.sort();
    v
}

/// Validated model whose normalization needs no field extension. `H` mixes
/// roots with `Δ > 0`, rational roots with `-Δ` a square, and occasionally
/// a conjugate pair.
pub fn random_model<R: Rng>(rng: &mut R) -> ConicBundleModel {
    loop {
        let n_real = 2 * rng.gen_range(1..=2);
        let mut c = poly_roots(&distinct(rng, n_real, -6, 6).iter().map(|&x| rat(x)).collect::<Vec<_>>());
        if rng.gen_bool(0.5) {
            c = &c * &RatPoly::from_ints(&[rng.gen_range(1..=3), 0, 1]);
        }
        let a = RatPoly::constant(rat(if rng.gen_bool(0.8) { 1 } else { 2 }));
        let delta = (&a * &c).scale(&rat(4));
        let mut candidates = Vec::new();
        for h in -9..=9i64 {
            let v = delta.eval(&rat(h));
            if v > rat(0) || (v < rat(0) && rat_sqrt(&-v).is_some()) {
                candidates.push(h);
            }
        }
        candidates.shuffle(rng);
        let k = rng.gen_range(0..=3.min(candidates.len()));
        let mut h_roots: Vec<Rat> = candidates[..k].iter().map(|&x| rat(x)).collect();
        h_roots.sort();
        let mut h = poly_roots(&h_roots);
        if rng.gen_bool(0.3) {
            h = &h * &RatPoly::from_ints(&[1, 0, 1]);
        }
        if rng.gen_bool(0.5) {
            h = -h;
        }
        let [a2, b2, c2] = change(&a, &RatPoly::zero(), &c, unimodular(rng));
        let k = rat(rng.gen_range(1..=3));
        let Ok(m) = validate_model(&a2.scale(&k), &b2.scale(&k), &c2.scale(&k), &h) else {
            continue;
        };
        match normalize(&m) {
            Err(ConicBundleError::IrrationalSplitRequired) => continue,
            _ => return m,
        }
    }
}

/// Normalized model with `B` general, all roots of `Δ` and `H` rational.
/// Returns the model with the root sets of `Δ` and `H`.
pub fn random_real_model<R: Rng>(rng: &mut R) -> (ConicBundleModel, Vec<Rat>, Vec<Rat>) {
    loop {
        let n = 2 * rng.gen_range(2..=3);
        let e: Vec<Rat> = distinct(rng, n, -7, 7).iter().map(|&x| rat(x)).collect();
        let c = poly_roots(&e);
        let hs: Vec<Rat> = (-9..=9)
            .map(rat)
            .filter(|h| c.eval(h) > rat(0))
            .collect::<Vec<_>>()
            .choose_multiple(rng, 2)
            .cloned()
            .collect();
        let mut hs = hs;
        hs.sort();
        let h = -poly_roots(&hs);
        let [a2, b2, c2] = change(&RatPoly::constant(rat(1)), &RatPoly::zero(), &c, unimodular(rng));
        if let Ok(m) = validate_model(&a2, &b2, &c2, &h) {
            if m.is_normalized() {
                return (m, e, hs);
            }
        }
    }
}

pub fn random_moebius<R: Rng>(rng: &mut R) -> Moebius {
    loop {
        let v: [i64; 4] = [(); 4].map(|_| rng.gen_range(-3..=3));
        if v[0] * v[3] - v[1] * v[2] != 0 {
            return Moebius::from_ints(v[0], v[1], v[2], v[3]).unwrap();
        }
    }
}

/// Rational maps sending each `src[i]` onto `dst[i]`, by trying every image
/// of three source points.
pub fn brute_force_maps(src: &[Vec<Rat>], dst: &[Vec<Rat>]) -> Vec<Moebius> {
    let s: Vec<Rat> = src.concat();
    let d: Vec<Rat> = dst.concat();
    if s.len() != d.len() || s.len() < 3 {
        return Vec::new();
    }
    let to_zero_inf_one = |p: &Rat, q: &Rat, r: &Rat| {
        // z ↦ (z - p)(r - q) / ((z - q)(r - p))
        let rq = r - q;
        let rp = r - p;
        Moebius::from_rats(rq.clone(), -(p * &rq), rp.clone(), -(q * &rp)).unwrap()
    };
    let src_norm = to_zero_inf_one(&s[0], &s[1], &s[2]);
    let mut out = Vec::new();
    for i in 0..d.len() {
        for j in 0..d.len() {
            for k in 0..d.len() {
                if i == j || j == k || i == k {
                    continue;
                }
                let dst_norm = to_zero_inf_one(&d[i], &d[j], &d[k]);
                let m = dst_norm.inverse().compose(&src_norm);
                let ok = src.iter().zip(dst).all(|(sc, dc)| {
                    sc.iter().all(|x| match m.apply_rat(x) {
                        ExtPoint::Finite(y) => y.as_rat().is_some_and(|y| dc.contains(&y)),
                        ExtPoint::Infinity => false,
                    })
                });
                if ok {
                    out.push(m);
                }
            }
        }
    }
    out
}
