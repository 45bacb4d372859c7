use super::*;
use crate::exactnum::parse_poly;

fn p(s: &str) -> RatPoly {
    parse_poly(s).unwrap()
}

fn form(v: &[&str]) -> DiagFormRt {
    DiagFormRt::new(v.iter().map(|s| p(s)).collect()).unwrap()
}

#[test]
fn residues_at_finite_places() {
    assert_eq!(
        second_residue(&form(&["t"]), &p("t")).unwrap(),
        Residue::Real(WittClassR { signature: 1 })
    );
    assert_eq!(
        second_residue(&form(&["t-1"]), &p("t")).unwrap(),
        Residue::Real(WittClassR { signature: 0 })
    );
    assert_eq!(
        second_residue(&form(&["-(t^2+1)"]), &p("t^2+1")).unwrap(),
        Residue::Complex(WittClassC { parity: 1 })
    );
    assert_eq!(
        second_residue(&form(&["t"]), &p("t^2-1")),
        Err(WittError::ReducibleModulus)
    );
    assert_eq!(
        second_residue(&form(&["t"]), &p("t^3+t+1")),
        Err(WittError::ResidueFieldUnsupported)
    );
    // Square factors are removed before the valuation is read.
    assert_eq!(
        second_residue(&form(&["t^3"]), &p("t")).unwrap(),
        Residue::Real(WittClassR { signature: 1 })
    );
}

#[test]
fn residues_at_infinity() {
    assert_eq!(residue_at_infinity(&form(&["1", "1"])).signature, 2);
    assert_eq!(residue_at_infinity(&form(&["t"])).signature, 0);
    assert_eq!(residue_at_infinity(&form(&["-t^2", "t^3"])).signature, -1);
}

#[test]
fn profiles() {
    let pr = signature_profile(&form(&["t", "1-t"]));
    assert_eq!(pr.signatures, vec![0, 2, 0]);
    assert_eq!(pr.breakpoints.len(), 2);
    assert_eq!(signature_profile(&form(&["1", "1"])).signatures, vec![2]);
    let pr = signature_profile(&form(&["(t-1)*(t-3)*(t^2+1)", "(t-2)*(t-4)*(t^2+2)"]));
    assert_eq!(pr.signatures, vec![2, 0, -2, 0, 2]);
    assert!(pr.continuous_through_infinity());
}

fn both(a: &str, b: &str, c: &str, d: &str) -> (bool, bool) {
    let (a, b, c, d) = (p(a), p(b), p(c), p(d));
    (
        equiv_binary_criterion(&a, &b, &c, &d).unwrap(),
        equiv_binary_oracle(&a, &b, &c, &d).unwrap(),
    )
}

#[test]
fn decider_examples() {
    assert_eq!(both("1", "-1", "t", "-t"), (true, true));
    assert_eq!(both("1", "1", "1", "-1"), (false, false));
    assert_eq!(both("t", "t-1", "t*(t-1)", "1"), (false, false));
    let o = |a: &str, b: &str, c: &str, d: &str| {
        equiv_binary_oracle(&p(a), &p(b), &p(c), &p(d)).unwrap()
    };
    assert!(o("t^2", "1", "1", "1"));
    assert!(o("t", "-t", "1", "-1"));
}

#[test]
fn criterion_rejects_multiple_roots() {
    assert_eq!(
        equiv_binary_criterion(&p("(t-1)^2"), &p("1"), &p("1"), &p("1")),
        Err(WittError::NotSquareFree)
    );
}

#[test]
fn printed_reading_misses_conditions_at_other_roots() {
    // A = 1 has no roots, so the printed reading checks nothing locally,
    // while on (0, 1) the signatures are 2 and -2.
    let (a, b, c, d) = (p("1"), p("-t*(t-1)"), p("-t"), p("t-1"));
    assert!(equiv_binary_criterion_as_printed(&a, &b, &c, &d).unwrap());
    assert!(!equiv_binary_criterion(&a, &b, &c, &d).unwrap());
    assert!(!equiv_binary_oracle(&a, &b, &c, &d).unwrap());
}

#[test]
fn irrational_roots() {
    // <t^2-2, 1> vs <1, t^2-2> (swap) and vs <-1, -(t^2-2)> (different signatures).
    assert_eq!(both("t^2-2", "1", "1", "t^2-2"), (true, true));
    assert_eq!(both("t^2-2", "1", "-1", "-(t^2-2)"), (false, false));
    assert_eq!(both("t^2-2", "2-t^2", "1", "-1"), (true, true));
}

#[test]
fn ternary_examples() {
    let t = |v: [&str; 6]| {
        equiv_ternary_g(&p(v[0]), &p(v[1]), &p(v[2]), &p(v[3]), &p(v[4]), &p(v[5])).unwrap()
    };
    assert!(t(["1", "-1", "t", "1", "-1", "2*t"]));
    assert!(!t(["1", "-1", "t", "1", "-1", "-t"]));
    assert!(!t(["1", "1", "t", "1", "-1", "t"]));
    assert_eq!(
        equiv_ternary_g(&p("t"), &p("t"), &p("t"), &p("1"), &p("1"), &p("1")),
        Err(WittError::CommonDivisor)
    );
}

#[test]
fn exactness_smoke() {
    for (entries, sig) in [
        (vec!["t", "-t"], 0),
        (vec!["t^2+1", "t^2+1"], 2),
        (vec!["t*(t-1)", "-t*(t-1)", "5"], 1),
        (vec!["(t^2-2)", "-(t^2-2)", "-1", "-1"], -2),
    ] {
        let f = form(&entries);
        assert!(residues_vanish(&f).unwrap(), "{f}");
        let pr = signature_profile(&f);
        assert!(pr.signatures.iter().all(|&s| s == sig), "{f}: {pr}");
        assert_eq!(residue_at_infinity(&f).signature, sig);
    }
    assert!(!residues_vanish(&form(&["t", "t"])).unwrap());
    assert!(!residues_vanish(&form(&["t^2+1", "1"])).unwrap());
}

#[test]
fn completing_the_square() {
    // x^2 + 2t xy + y^2 has discriminant 4 - 4t^2.
    let d = diagonalize_binary(&p("1"), &p("2*t"), &p("1")).unwrap();
    assert_eq!(d.entries()[1], p("4 - 4*t^2"));
}
