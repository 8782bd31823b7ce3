use std::process::{Command, Output};

use schurmf::groups::ClassifiedGroup;
use schurmf::{Partition, SchurExpansion};
use serde_json::Value;

fn schurmf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_schurmf"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn lr_example() {
    let out = schurmf(&[
        "lr",
        "--mu",
        "[4,2,1]",
        "--nu",
        "[3,2,1]",
        "--lambda",
        "[4,4,3,2]",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "2");
}

#[test]
fn plethysm_example_on_both_routes() {
    let want = "s[4,2] + s[3,2,1] + s[3,1,1,1] + s[2,2,2]";
    for extra in [&[][..], &["--oracle"][..]] {
        let mut args = vec!["plethysm", "--inner", "[2,1]", "--outer", "[2]"];
        args.extend_from_slice(extra);
        let out = schurmf(&args);
        assert!(out.status.success());
        assert_eq!(stdout(&out).trim(), want);
    }
}

#[test]
fn classify_gate() {
    let out = schurmf(&["classify", "--n", "60"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("n below validity threshold 66"));
}

#[test]
fn exit_codes() {
    assert_eq!(
        schurmf(&["lr", "--mu", "[2,2", "--nu", "[1]", "--lambda", "[3]"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(schurmf(&["lr", "--bogus", "1"]).status.code(), Some(2));
    assert_eq!(
        schurmf(&["plethysm", "--inner", "[3,2]", "--outer", "[4]"])
            .status
            .code(),
        Some(3)
    );
    let ok = schurmf(&[
        "--oracle-cap",
        "20",
        "plethysm",
        "--inner",
        "[3,2]",
        "--outer",
        "[4]",
    ]);
    assert!(ok.status.success());
    assert_eq!(
        schurmf(&["verify", "--suite", "nope"]).status.code(),
        Some(2)
    );
    assert_eq!(
        schurmf(&["induce", "--group", "{", "--char", "{}"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn json_round_trips() {
    let out = schurmf(&["product", "--x", "s[2,1]", "--y", "s[2,1] + s[1]", "--json"]);
    let z: SchurExpansion = serde_json::from_slice(&out.stdout).unwrap();
    let (x, y) = (
        SchurExpansion::parse("s[2,1]").unwrap(),
        SchurExpansion::parse("s[2,1] + s[1]").unwrap(),
    );
    assert_eq!(z, x.multiply(&y));

    let out = schurmf(&["classify", "--n", "66", "--json"]);
    let groups: Vec<ClassifiedGroup> = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(groups, schurmf::groups::classify_subgroups(66).unwrap());

    let out = schurmf(&["birect", "--a", "3", "--b", "2", "--conjugate", "--json"]);
    let common: Option<Partition> = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(common, Some("[4,4,2,2]".parse().unwrap()));
}

#[test]
fn induced_queries() {
    let group = r#"{"family":"SmWr2CapAlt","params":{"m":8,"ambient":17}}"#;
    let char = |mu: &str| {
        format!(r#"{{"kind":"Wreath","params":{{"factors":[{{"mu":{mu},"nu":[2]}}]}}}}"#)
    };
    let out = schurmf(&["mf", "--group", group, "--char", &char("[4,4]"), "--json"]);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["verdict"], false);
    let group = r#"{"family":"SmWr2CapAlt","params":{"m":10,"ambient":21}}"#;
    let out = schurmf(&["mf", "--group", group, "--char", &char("[5,5]")]);
    assert_eq!(stdout(&out).trim(), "true");
    let young = r#"{"family":"Young","params":{"k":3,"l":2}}"#;
    let rho = r#"{"kind":"Product","params":{"lambda":[2,1],"mu":[2]}}"#;
    let out = schurmf(&["induce", "--group", young, "--char", rho]);
    assert_eq!(stdout(&out).trim(), "s[4,1] + s[3,2] + s[3,1,1] + s[2,2,1]");
}

#[test]
fn cross_checked_predicates() {
    let out = schurmf(&["mf-product", "--mu", "[2,1]", "--nu", "[2,1]", "--json"]);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(
        (v["predicate"].clone(), v["brute_force"].clone()),
        (false.into(), false.into())
    );
    let out = schurmf(&["mf-plethysm", "--mu", "[2]", "--nu", "[5]", "--json"]);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(
        (v["predicate"].clone(), v["brute_force"].clone()),
        (true.into(), true.into())
    );
}

#[test]
fn involutions_report() {
    let out = schurmf(&["involutions", "--n", "4"]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("a_4 = 10\n"));
}

#[test]
fn verify_is_deterministic() {
    let run = || {
        let out = schurmf(&["verify", "--suite", "birectangles", "--json"]);
        assert!(out.status.success());
        let mut v: Value = serde_json::from_slice(&out.stdout).unwrap();
        for r in v.as_array_mut().unwrap() {
            r.as_object_mut().unwrap().remove("elapsed");
        }
        v
    };
    assert_eq!(run(), run());
}
