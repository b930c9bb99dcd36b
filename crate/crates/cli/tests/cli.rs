//! The `polyrep` binary: exit codes, JSON shape and determinism.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use polyrep::poly::parse_poly;
use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name)
}

fn scratch(name: &str, text: &str) -> PathBuf {
    let path = Path::new(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn run(args: &[&str], path: Option<&Path>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_polyrep"));
    cmd.args(args);
    if let Some(p) = path {
        cmd.arg(p);
    }
    cmd.output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn json(args: &[&str], path: &Path) -> (i32, Value, String) {
    let out = run(&[args, &["--json"]].concat(), Some(path));
    let text = String::from_utf8(out.stdout.clone()).unwrap();
    let value = serde_json::from_str(&text).unwrap_or_else(|e| panic!("{e}: {text}"));
    (code(&out), value, text)
}

/// Every string under one of `keys` is a polynomial that prints back the same.
fn check_polynomials(v: &Value, keys: &[&str], found: &mut usize) {
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                if keys.contains(&k.as_str()) {
                    for s in x.as_array().expect("polynomial lists") {
                        let s = s.as_str().unwrap();
                        let p = parse_poly(s).unwrap_or_else(|e| panic!("{k}: {s}: {e}"));
                        assert_eq!(p.to_string(), s);
                        *found += 1;
                    }
                } else {
                    check_polynomials(x, keys, found);
                }
            }
        }
        Value::Array(a) => a.iter().for_each(|x| check_polynomials(x, keys, found)),
        _ => {}
    }
}

#[test]
fn transversal_exit_codes() {
    assert_eq!(code(&run(&["transversal"], Some(&fixture("conjugate_sextic.toml")))), 0);
    assert_eq!(code(&run(&["transversal"], Some(&fixture("rational_sextic.toml")))), 0);
    assert_eq!(code(&run(&["transversal"], Some(&fixture("non_transversal_octic.toml")))), 2);
}

#[test]
fn reparam_exit_codes() {
    assert_eq!(code(&run(&["reparam", "--check"], Some(&fixture("rational_sextic.toml")))), 0);
    assert_eq!(code(&run(&["reparam"], Some(&fixture("almost_polynomial.toml")))), 0);
    assert_eq!(code(&run(&["reparam"], Some(&fixture("non_transversal_octic.toml")))), 2);
    let steiner = scratch("steiner.toml", "components = [\"t1^2\", \"t2^2\", \"t3^2\", \"t1*t2 + t2*t3\"]\n");
    assert_eq!(code(&run(&["reparam"], Some(&steiner))), 3);
}

#[test]
fn failures_exit_with_one() {
    let missing = Path::new(env!("CARGO_TARGET_TMPDIR")).join("no-such-file.toml");
    let out = run(&["base-locus"], Some(&missing));
    assert_eq!(code(&out), 1);
    assert!(String::from_utf8_lossy(&out.stderr).contains("no-such-file.toml"));
    let broken = scratch("broken.toml", "components = [\"t1 +\", \"t2\"\n");
    assert_eq!(code(&run(&["base-locus"], Some(&broken))), 1);
    let bad_poly = scratch("bad_poly.toml", "components = [\"t1 + \", \"t2\", \"t3\"]\n");
    assert_eq!(code(&run(&["base-locus"], Some(&bad_poly))), 1);
    let planar = scratch("planar.toml", "components = [\"t1\", \"t2\", \"t3\"]\n");
    assert_eq!(code(&run(&["reparam"], Some(&planar))), 1);
    assert_eq!(code(&run(&["transversal"], Some(&planar))), 1);
    assert_eq!(code(&run(&["frobnicate"], None)), 1);
    assert_eq!(code(&run(&["reparam", "--seed", "many"], Some(&planar))), 1);
    assert_eq!(code(&run(&["--help"], None)), 0);
}

#[test]
fn json_is_reproducible_and_parses() {
    for name in ["conjugate_sextic.toml", "rational_sextic.toml", "cremona.toml", "identity.toml"] {
        for cmd in ["base-locus", "degree"] {
            let (c1, v, a) = json(&[cmd], &fixture(name));
            let (c2, _, b) = json(&[cmd], &fixture(name));
            assert_eq!((c1, c2), (0, 0));
            assert_eq!(a, b, "{cmd} {name} is not deterministic");
            assert!(v["input"].is_string() && v["seed"].is_u64());
        }
    }
    let (_, v, _) = json(&["base-locus"], &fixture("conjugate_sextic.toml"));
    assert_eq!(v["total_multiplicity"], 27);
    assert_eq!(v["families"].as_array().unwrap().len(), 2);
    let (_, v, _) = json(&["degree"], &fixture("non_transversal_octic.toml"));
    assert_eq!((v["map_degree"].as_u64(), v["base_multiplicity"].as_u64()), (Some(8), Some(60)));
}

#[test]
fn seeds_are_reported_but_do_not_change_results() {
    let path = fixture("rational_sextic.toml");
    let (_, mut a, _) = json(&["reparam", "--seed", "7"], &path);
    let (_, mut b, _) = json(&["reparam", "--seed", "8"], &path);
    assert_eq!(a["seed"], 7);
    a["seed"] = Value::Null;
    b["seed"] = Value::Null;
    assert_eq!(a, b);
}

#[test]
fn emitted_polynomials_reparse() {
    let keys = ["affine", "parametrization", "projectivity", "r_bar", "s_bar"];
    let mut found = 0;
    for name in ["rational_sextic.toml", "conjugate_sextic.toml", "almost_polynomial.toml"] {
        let (c, v, _) = json(&["reparam"], &fixture(name));
        assert_eq!(c, 0, "{name}");
        check_polynomials(&v, &keys, &mut found);
    }
    assert!(found >= 30, "only {found} polynomials seen");
}

#[test]
fn check_flag_is_recorded() {
    let path = fixture("rational_sextic.toml");
    let (_, checked, _) = json(&["reparam", "--check"], &path);
    let (_, plain, _) = json(&["reparam"], &path);
    assert_eq!(checked["checked"], true);
    assert!(plain.get("checked").is_none());
    assert_eq!(checked["outcome"], "polynomial");
    let text = String::from_utf8(run(&["reparam", "--check"], Some(&path)).stdout).unwrap();
    assert!(text.contains("checked:"));
    assert!(text.contains("polynomial parametrization of degree 2 (surface degree 4)"));
}
