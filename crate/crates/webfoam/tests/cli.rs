use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;
use webfoam::cli::run;

fn root() -> &'static Path {
    Path::new(env!("CARGO_MANIFEST_DIR"))
}

fn data(name: &str) -> String {
    root().join("data").join(name).display().to_string()
}

fn golden(name: &str) -> String {
    let path: PathBuf = root().join("tests/golden").join(name);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("webfoam").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn json(args: &[&str]) -> Value {
    let (code, out, err) = call(args);
    assert_eq!(code, 0, "{args:?}: {err}");
    serde_json::from_str(&out).unwrap_or_else(|e| panic!("{args:?}: {e}\n{out}"))
}

fn required_keys(sub: &str) -> Vec<String> {
    let schema: Value = serde_json::from_str(
        &std::fs::read_to_string(root().join("docs/cli-schema.json")).unwrap(),
    )
    .unwrap();
    schema["subcommands"][sub]["required"]
        .as_array()
        .unwrap_or_else(|| panic!("no schema for {sub}"))
        .iter()
        .map(|k| k.as_str().unwrap().to_string())
        .collect()
}

#[test]
fn golden_outputs() {
    let theta_web = data("theta_web.json");
    let cases: [(&[&str], &str); 6] = [
        (&["tait", &theta_web], "tait_theta_web.json"),
        (&["foam-eval", "theta 0 1 2"], "foam_eval_theta.json"),
        (
            &[
                "dims", "--kappa", "0", "--bplus", "0", "--b1", "0", "--sigma2", "0", "--chi", "4",
                "--t", "2",
            ],
            "dims_suspension.json",
        ),
        (
            &["module", "--web", "unknot", "--decompose"],
            "module_unknot.json",
        ),
        (&["catalogue"], "catalogue.json"),
        (&["euler", "trefoil"], "euler_trefoil.json"),
    ];
    for (args, file) in cases {
        let expected: Value = serde_json::from_str(&golden(file)).unwrap();
        assert_eq!(json(args), expected, "{file}");
    }
    let (code, out, _) = call(&["--format", "table", "tait", "theta"]);
    assert_eq!(code, 0);
    assert_eq!(out, golden("tait_theta.txt"));
}

#[test]
fn headline_values() {
    assert_eq!(json(&["tait", &data("theta.json")])["count"], 6);
    assert_eq!(json(&["foam-eval", "theta", "0", "1", "2"])["value"], 1);
    assert_eq!(json(&["foam-eval", "theta 0 0 2"])["value"], 0);
    assert_eq!(json(&["euler", "hopf"])["chi"], 9);
    assert_eq!(json(&["euler", "hopf", "--dual"])["chi"], 9);
    assert_eq!(json(&["tait", "hopf"])["planar_dim"], Value::Null);
    let m = json(&[
        "module",
        "--generators",
        "u1,u2,u3",
        "--relation",
        "u1+u2+u3",
        "--relation",
        "u1*u2+u1*u3+u2*u3+1",
        "--relation",
        "u1*u2*u3",
    ]);
    assert_eq!(m["dim"], 6);
    let psi = json(&[
        "dims", "--kappa", "1/8", "--bplus", "0", "--b1", "0", "--sigma2", "-1/2", "--chi", "2",
        "--t", "0",
    ]);
    assert!(psi["dim"].is_string());
}

#[test]
fn adhm_verify_rank_three() {
    let r = json(&["adhm-verify", "--rank", "3"]);
    assert_eq!(r["nu"], 3);
    assert_eq!(r["nu_mod2"], 1);
    assert_eq!(r["pass"], true);
    assert_eq!(r["grid_points"], 100);
    assert_eq!(r["samples_per_point"], 100);
}

#[test]
fn outputs_follow_schema() {
    let theta_web = data("theta_web.json");
    let cases: [(&str, &[&str]); 8] = [
        ("tait", &["tait", &theta_web]),
        ("tait", &["tait", "trefoil"]),
        ("euler", &["euler", "kinoshita_theta", "--dual"]),
        ("foam-eval", &["foam-eval", "theta 1 1 1"]),
        (
            "module",
            &[
                "module",
                "--web",
                "tetrahedron",
                "--decompose",
                "--matrices",
            ],
        ),
        (
            "dims",
            &[
                "dims", "--kappa", "0", "--bplus", "0", "--b1", "0", "--sigma2", "0", "--chi", "4",
                "--t", "2",
            ],
        ),
        (
            "adhm-verify",
            &["adhm-verify", "--grid", "2", "--samples", "3"],
        ),
        ("catalogue", &["catalogue", "--verify"]),
    ];
    for (sub, args) in cases {
        let v = json(args);
        for k in required_keys(sub) {
            assert!(v.get(&k).is_some(), "{sub} output lacks {k}");
        }
    }
}

#[test]
fn catalogue_verify_is_clean() {
    let v = json(&["catalogue", "--verify"]);
    assert_eq!(v["ok"], true);
    assert_eq!(v["entries"].as_array().unwrap().len(), 14);
}

#[test]
fn exit_codes() {
    assert_eq!(call(&["--help"]).0, 0);
    let (code, _, err) = call(&["tait", "no_such_web"]);
    assert_eq!(code, 1);
    assert!(err.starts_with("error:"));
    // incongruent kappa has no mod 6 reduction
    assert_eq!(
        call(&[
            "dims", "--kappa", "1/3", "--bplus", "0", "--b1", "0", "--sigma2", "0", "--chi", "4",
            "--t", "2"
        ])
        .0,
        1
    );
    assert_eq!(call(&["foam-eval", "theta 0 x 2"]).0, 1);
    assert_eq!(call(&["adhm-verify", "--rank", "1"]).0, 1);
    assert_eq!(call(&["frobnicate"]).0, 2);
    assert_eq!(call(&["--format", "yaml", "catalogue"]).0, 2);
    assert_eq!(call(&["dims", "--kappa", "0"]).0, 2);
    assert_eq!(call(&[]).0, 2);
}

#[test]
fn table_format() {
    let (code, out, _) = call(&["--format", "table", "catalogue"]);
    assert_eq!(code, 0);
    assert!(out.lines().any(|l| l.contains("kinoshita_theta")));
    let (_, out, _) = call(&[
        "--format", "table", "dims", "--kappa", "0", "--bplus", "0", "--b1", "0", "--sigma2", "0",
        "--chi", "4", "--t", "2",
    ]);
    assert!(out
        .lines()
        .any(|l| l.split_whitespace().collect::<Vec<_>>() == ["dim", "-2"]));
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_webfoam");
    let ok = Command::new(bin)
        .args(["foam-eval", "theta 0 1 2"])
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(
        serde_json::from_slice::<Value>(&ok.stdout).unwrap()["value"],
        1
    );
    let bad = Command::new(bin)
        .args(["tait", "missing.json"])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(1));
    let usage = Command::new(bin).arg("--rank").output().unwrap();
    assert_eq!(usage.status.code(), Some(2));
}
