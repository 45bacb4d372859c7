use cremona_core::exactnum::{frac, rat, to_f64, Rat, RatPoly};
use cremona_core::projline::{pullback_form_surd, Moebius};
use cremona_core::realcurves::{
    binary_form_projective_equiv, dejonquieres_conjugate, hyperelliptic_components, kowalevskaya_class_profile,
    kowalevskaya_oval_profile, BinaryForm, KowalevskayaQuartic, OvalProfile,
};
use proptest::prelude::*;

/// Components of `{f > 0}` and `{f < 0}` on a grid over a box containing the
/// curve, by flood fill. Negative at infinity, so ovals = pos + neg - 1.
fn region_counts(k: &KowalevskayaQuartic, n: usize) -> (usize, usize) {
    let (a, b, c, s, sign) = k.params();
    let (a, b, c, s) = (to_f64(a), to_f64(b), to_f64(c), to_f64(s));
    let sg = sign as f64;
    let f = |x: f64, y: f64| {
        let u = y * y + a * x * x + b * x + c;
        sg * x * (x - 1.0) * (x - s) - u * u
    };
    let ybr = |x: f64| {
        let q = a * x * x + b * x + c;
        let g = sg * x * (x - 1.0) * (x - s);
        if g < 0.0 { f64::NEG_INFINITY } else { g.sqrt() - q }
    };
    let xs: Vec<f64> = (0..=4000).map(|i| -40.0 + 80.0 * i as f64 / 4000.0).collect();
    let inside: Vec<&f64> = xs.iter().filter(|&&x| ybr(x) > 0.0).collect();
    let (x0, x1) = match (inside.first(), inside.last()) {
        (Some(&&l), Some(&&h)) => (l - 0.5, h + 0.5),
        _ => (-1.0, 1.0),
    };
    let ymax = xs.iter().map(|&x| ybr(x)).fold(0.0f64, f64::max).sqrt() + 0.5;
    let grid: Vec<Vec<i8>> = (0..n)
        .map(|i| {
            let x = x0 + (x1 - x0) * i as f64 / (n - 1) as f64;
            (0..n)
                .map(|j| {
                    let y = -ymax + 2.0 * ymax * j as f64 / (n - 1) as f64;
                    if f(x, y) > 0.0 { 1 } else { -1 }
                })
                .collect()
        })
        .collect();
    let mut seen = vec![vec![false; n]; n];
    let (mut pos, mut neg) = (0, 0);
    for i in 0..n {
        for j in 0..n {
            if seen[i][j] {
                continue;
            }
            let v = grid[i][j];
            if v > 0 { pos += 1 } else { neg += 1 }
            let mut stack = vec![(i, j)];
            seen[i][j] = true;
            while let Some((p, q)) = stack.pop() {
                for (dp, dq) in [(0i64, 1i64), (1, 0), (0, -1), (-1, 0)] {
                    let (u, w) = (p as i64 + dp, q as i64 + dq);
                    if u < 0 || w < 0 || u >= n as i64 || w >= n as i64 {
                        continue;
                    }
                    let (u, w) = (u as usize, w as usize);
                    if !seen[u][w] && grid[u][w] == v {
                        seen[u][w] = true;
                        stack.push((u, w));
                    }
                }
            }
        }
    }
    (pos, neg)
}

fn oracle(k: &KowalevskayaQuartic) -> OvalProfile {
    let (pos, neg) = region_counts(k, 500);
    OvalProfile {
        ovals: pos + neg - 1,
        nested: pos == 1 && neg == 2,
    }
}

fn quartic() -> impl Strategy<Value = Option<KowalevskayaQuartic>> {
    (1i64..=6, -8i64..=8, -4i64..=8, prop::sample::select(vec![frac(3, 2), rat(2), rat(3)]), prop::bool::ANY)
        .prop_map(|(a, b, c, s, sg)| {
            KowalevskayaQuartic::new(frac(a, 2), frac(b, 2), frac(c, 4), s, if sg { 1 } else { -1 }).ok()
        })
}

/// Distinct rational roots with optional definite quadratics.
fn form_parts(min_deg: usize) -> impl Strategy<Value = (Vec<i64>, Vec<i64>, bool)> {
    (prop::collection::btree_set(-6i64..=6, 0..=5), prop::collection::btree_set(1i64..=4, 0..=2), prop::bool::ANY)
        .prop_filter("degree", move |(r, q, _)| r.len() + 2 * q.len() + 1 >= min_deg)
        .prop_map(|(r, q, neg)| (r.into_iter().collect(), q.into_iter().collect(), neg))
}

fn build(roots: &[i64], quads: &[i64], neg: bool) -> BinaryForm {
    let mut p = RatPoly::from_roots(&roots.iter().map(|&x| rat(x)).collect::<Vec<_>>());
    for &k in quads {
        p = &p * &RatPoly::from_ints(&[k, 0, 1]);
    }
    if neg {
        p = -p;
    }
    BinaryForm::from_poly(p).unwrap()
}

/// Maximal runs of `sign * f > 0` on the circle, from the sorted roots and
/// signs at midpoints. `∞` is a root when the degree is odd.
fn runs_oracle(roots: &[i64], f: &BinaryForm, sign: i32) -> usize {
    let g = f.poly().scale(&rat(sign as i64));
    if roots.is_empty() && f.poly().deg() % 2 == 0 {
        return usize::MAX;
    }
    let mut pts: Vec<Rat> = vec![rat(roots[0] - 1)];
    for w in roots.windows(2) {
        pts.push(frac(w[0] + w[1], 2));
    }
    pts.push(rat(roots.last().copied().unwrap_or(0) + 1));
    if roots.is_empty() {
        pts = vec![rat(-1), rat(1)];
    }
    let pos: Vec<bool> = pts.iter().map(|x| g.eval(x) > rat(0)).collect();
    let mut runs = pos.windows(2).filter(|w| w[0] && !w[1]).count() + usize::from(*pos.last().unwrap());
    if f.poly().deg() % 2 == 0 && pos[0] && *pos.last().unwrap() {
        runs -= 1;
    }
    runs
}

fn moebius() -> impl Strategy<Value = Moebius> {
    [-3i64..=3, -3i64..=3, -3i64..=3, -3i64..=3]
        .prop_filter("invertible", |v| v[0] * v[3] != v[1] * v[2])
        .prop_map(|v| Moebius::from_ints(v[0], v[1], v[2], v[3]).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn oval_sweep_matches_grid(k in quartic()) {
        if let Some(k) = k {
            prop_assert_eq!(kowalevskaya_oval_profile(&k).unwrap(), oracle(&k));
        }
    }

    #[test]
    fn class_profiles_are_one_oval_or_two_nested(k in quartic()) {
        if let Some(k) = k {
            if let Ok(p) = kowalevskaya_class_profile(&k) {
                prop_assert!(p.ovals == 1 || (p.ovals == 2 && p.nested));
            }
        }
    }

    #[test]
    fn components_count_sign_runs((roots, quads, neg) in form_parts(4), sign in prop::sample::select(vec![1, -1])) {
        let f = build(&roots, &quads, neg);
        let n = hyperelliptic_components(&f, sign).unwrap();
        let expect = runs_oracle(&roots, &f, sign);
        if expect != usize::MAX {
            prop_assert_eq!(n, expect);
            // A positive definite factor keeps the arcs.
            let g = BinaryForm::from_poly(f.poly() * &RatPoly::from_ints(&[7, 0, 1])).unwrap();
            if !roots.is_empty() {
                prop_assert_eq!(hyperelliptic_components(&g, sign).unwrap(), n);
            }
        }
    }

    #[test]
    fn equivalence_witnesses_verify((roots, quads, neg) in form_parts(4), m in moebius()) {
        let f = build(&roots, &quads, neg);
        let g = f.pullback(&m).unwrap();
        let (w, s) = binary_form_projective_equiv(&f, &g).unwrap().unwrap();
        prop_assert_eq!(s, 1);
        let k = pullback_form_surd(f.poly(), f.hom_degree(), &w).unwrap().ratio_to_rat(g.poly()).unwrap();
        prop_assert!(k.sign() > 0);
        let (w2, s2) = binary_form_projective_equiv(&g, &f).unwrap().unwrap();
        prop_assert_eq!(s2, 1);
        let k2 = pullback_form_surd(g.poly(), g.hom_degree(), &w2).unwrap().ratio_to_rat(f.poly()).unwrap();
        prop_assert!(k2.sign() > 0);
    }

    #[test]
    fn de_jonquieres_invariance(
        (r1, q1, n1) in form_parts(6),
        (r2, q2, n2) in form_parts(6),
        m in moebius(),
        c in 1i64..=5,
    ) {
        let f = build(&r1, &q1, n1);
        let g = build(&r2, &q2, n2);
        prop_assume!(f.hom_degree() == g.hom_degree());
        let v = dejonquieres_conjugate(&f, &g).unwrap();
        let f2 = f.pullback(&m).unwrap();
        let g2 = BinaryForm::new(g.poly().scale(&rat(c)), g.hom_degree()).unwrap();
        prop_assert_eq!(dejonquieres_conjugate(&f2, &g2).unwrap(), v);
        prop_assert_eq!(dejonquieres_conjugate(&g, &f).unwrap(), v);
    }
}
