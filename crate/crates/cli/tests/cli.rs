use std::path::PathBuf;
use std::process::Command;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

fn models() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../models")
}

fn model(name: &str) -> String {
    models().join(name).display().to_string()
}

/// `(exit code, stdout)`.
fn run(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_cremona")).args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

fn run_json(args: &[&str]) -> (i32, Value) {
    let mut v = vec!["--json"];
    v.extend_from_slice(args);
    let (code, out) = run(&v);
    (code, serde_json::from_str(&out).unwrap())
}

fn line<'a>(out: &'a str, key: &str) -> Option<&'a str> {
    out.lines().find_map(|l| l.strip_prefix(&format!("{key}: ")))
}

#[test]
fn example_pair_is_not_conjugate() {
    let (code, out) = run(&["conjugate", &model("y1.model"), &model("y2.model")]);
    assert_eq!(code, 0);
    assert_eq!(line(&out, "verdict"), Some("NotConjugate"));
    assert_eq!(line(&out, "reason"), Some("arc sets differ"));
    assert_eq!(line(&out, "substitution_1"), Some("t = -1 + 1/u"));
    assert_eq!(line(&out, "r_rational_1"), Some("true"));
    assert_eq!(line(&out, "r_rational_2"), Some("false"));
}

#[test]
fn fixed_base_uses_fibrewise_test() {
    let y1 = model("y1.model");
    let (code, j) = run_json(&["conjugate", &y1, &y1, "--fix-base"]);
    assert_eq!((code, j["verdict"].as_str()), (0, Some("Conjugate")));
    let (code, _) = run(&["conjugate", &model("trepalin_r1.model"), &y1, "--fix-base"]);
    assert_eq!(code, 1);
}

#[test]
fn both_deciders_agree_on_example() {
    let (code, j) = run_json(&["equiv-forms", "--left", "1;-1", "--right", "t;-t", "--both"]);
    assert_eq!(code, 0);
    assert_eq!(j["criterion"], true);
    assert_eq!(j["oracle"], true);
    assert_eq!(j["agree"], true);
    let (_, j) = run_json(&["equiv-forms", "--left", "1;1", "--right", "t;-t", "--oracle"]);
    assert_eq!((j["oracle"].clone(), j["criterion"].clone()), (Value::Bool(false), Value::Null));
}

#[test]
fn classify_trepalin() {
    let (code, out) = run(&["classify", &model("trepalin_r1.model")]);
    assert_eq!(code, 0);
    assert_eq!(line(&out, "class"), Some("T4"));
}

#[test]
fn unknown_verdicts_exit_4_with_citation() {
    let t4 = model("trepalin_r1.model");
    let (code, j) = run_json(&["conjugate", &t4, &t4]);
    assert_eq!(code, 4);
    assert_eq!(j["verdict"], "Unknown");
    assert!(j["citation"].as_str().unwrap().contains("T4"));
    let (code, j) = run_json(&["conjugate", &model("dj1.model"), &model("i1.model")]);
    assert_eq!(code, 4);
    assert!(j["citation"].as_str().unwrap().contains("dJ1"));
}

#[test]
fn quadric_representatives() {
    let (code, j) = run_json(&["conjugate", &model("antipodal.model"), &model("rotation.model")]);
    assert_eq!((code, j["verdict"].as_str()), (0, Some("NotConjugate")));
}

#[test]
fn normalize_output_is_a_fixed_point() {
    let dir = tempfile::tempdir().unwrap();
    let (o1, o2) = (dir.path().join("n1.model"), dir.path().join("n2.model"));
    let (o1, o2) = (o1.to_str().unwrap(), o2.to_str().unwrap());
    assert_eq!(run(&["normalize", &model("y1.model"), "-o", o1]).0, 0);
    assert_eq!(run(&["validate", o1]).0, 0);
    assert_eq!(run(&["normalize", o1, "-o", o2]).0, 0);
    assert_eq!(std::fs::read_to_string(o1).unwrap(), std::fs::read_to_string(o2).unwrap());
}

#[test]
fn invariants_schema() {
    let (code, j) = run_json(&["invariants", &model("y2.model")]);
    assert_eq!(code, 0);
    for k in ["valid", "errors", "delta", "genus", "special_fibres", "k2", "arcs", "r_rational"] {
        assert!(j.get(k).is_some(), "missing {k}");
    }
    assert_eq!(j["r_rational"], false);
    assert_eq!(j["class"], Value::Null);
    assert_eq!(j["genus"], 3);
    assert_eq!(j["k2"], -2);
}

#[test]
fn error_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let write = |name: &str, text: &str| {
        let p = dir.path().join(name);
        std::fs::write(&p, text).unwrap();
        p.display().to_string()
    };
    assert_eq!(run(&["frobnicate"]).0, 1);
    assert_eq!(run(&["classify", "/nonexistent/x.model"]).0, 2);
    let unknown_key = write("k.model", "kind: linear\nfoo: 1\n");
    assert_eq!(run(&["validate", &unknown_key]).0, 2);
    let two_kinds = write("d.model", "kind: linear\nkind: linear\n");
    assert_eq!(run(&["validate", &two_kinds]).0, 2);
    let bad_poly = write("p.model", "kind: conic_bundle\nA: 1\nC: t^^2\nH: -1\n");
    assert_eq!(run(&["validate", &bad_poly]).0, 2);
    let not_square_free = write("s.model", "kind: conic_bundle\nA: 1\nC: (t^2+1)^2\nH: -1\n");
    let (code, j) = run_json(&["validate", &not_square_free]);
    assert_eq!((code, j["valid"].clone()), (3, Value::Bool(false)));
    let two_arcs = write("a.model", "kind: conic_bundle\nA: 1\nC: (t-1)*(t-2)*(t-3)*(t-4)\nH: -1\n");
    assert_eq!(run(&["classify", &two_arcs]).0, 3);
}

#[test]
fn curve_commands() {
    let f = "t*(t-1)*(t-2)*(t^2+1) deg=6";
    let (_, j) = run_json(&["curve", "gaussian", f]);
    assert_eq!(j["gaussian"], false);
    let (_, j) = run_json(&["curve", "iso", f, f, "--sign2", "-"]);
    assert_eq!(j["isomorphic"], false);
    let (_, j) = run_json(&["curve", "iso", f, &model("curve.model")]);
    assert_eq!(j["isomorphic"], true);
    let (_, j) = run_json(&["curve", "components", "(1-t^2)*(4-t^2) deg=4"]);
    assert_eq!(j["components"], 2);
    assert_eq!(run(&["curve", "gaussian", "t^4-1 deg=4"]).0, 3);
}

#[test]
fn corollary_family_is_pairwise_distinct() {
    let args = ["family", "corollary", "--r", "2", "--s", "1", "--eps", "1,2,3,4", "--a", "0", "--b", "5", "--count", "3"];
    let (code, j) = run_json(&args);
    assert_eq!(code, 0);
    assert_eq!(j["components"], serde_json::json!([2, 2, 2]));
    assert_eq!(j["verdicts"].as_array().unwrap().len(), 3);
    assert_eq!(j["all_not_conjugate"], true);
    assert_eq!(run(&args).1, run(&args).1);
}

/// Top-level scalar fields of the JSON form appear verbatim in the human form.
fn assert_parity(args: &[&str]) {
    let (c1, human) = run(args);
    let (c2, j) = run_json(args);
    assert_eq!(c1, c2, "{args:?}");
    for (k, v) in j.as_object().unwrap() {
        let expect = match v {
            Value::Null => "none".to_string(),
            Value::String(s) => s.clone(),
            Value::Bool(_) | Value::Number(_) => v.to_string(),
            _ => continue,
        };
        assert_eq!(line(&human, k), Some(expect.as_str()), "{k} in {args:?}");
    }
}

fn random_poly(rng: &mut ChaCha8Rng) -> String {
    let terms: Vec<String> = (0..rng.gen_range(1..=3))
        .map(|i| format!("({})*t^{i}", rng.gen_range(-3..=3)))
        .collect();
    let s = terms.join(" + ");
    if s.chars().filter(|c| c.is_ascii_digit() && *c != '0').count() == 0 {
        "1".into()
    } else {
        s
    }
}

#[test]
fn human_and_json_reports_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let dir = tempfile::tempdir().unwrap();
    let fixed = ["y1.model", "y2.model", "trepalin_r1.model", "dj1.model", "i1.model", "antipodal.model", "rotation.model"];
    for n in 0..100 {
        match n % 2 {
            0 => {
                let l = format!("{};{}", random_poly(&mut rng), random_poly(&mut rng));
                let r = format!("{};{}", random_poly(&mut rng), random_poly(&mut rng));
                assert_parity(&["equiv-forms", "--left", &l, "--right", &r]);
            }
            _ => {
                let p = dir.path().join(format!("t{n}.model"));
                let e0 = rng.gen_range(-3..=3);
                let text = format!(
                    "kind: trepalin\ntwist: 0\nepsilons: {e0}, {}\nlambda1: {}\nlambda2: {}/2\n",
                    e0 + 2,
                    e0 - rng.gen_range(1..=3),
                    2 * e0 + 1 + rng.gen_range(0..=2)
                );
                std::fs::write(&p, text).unwrap();
                let other = model(fixed[rng.gen_range(0..fixed.len())]);
                assert_parity(&["conjugate", p.to_str().unwrap(), &other]);
            }
        }
    }
}
