use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}

fn qf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qf"))
        .args(args)
        .env_remove("QF_BUDGET")
        .env_remove("QF_TC_CAP")
        .env_remove("QF_ORDER_CAP")
        .env_remove("QF_THREADS")
        .output()
        .expect("qf runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn path(name: &str) -> String {
    data(name).to_string_lossy().into_owned()
}

#[test]
fn validate_exit_codes() {
    assert_eq!(qf(&["validate", &path("dihedral3.json")]).status.code(), Some(0));
    let broken = qf(&["validate", &path("broken_diagonal.json")]);
    assert_eq!(broken.status.code(), Some(1));
    assert!(stdout(&broken).contains("Idempotence: witness [0]"));
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"order\": 2,").unwrap();
    assert_eq!(qf(&["validate", bad.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(qf(&["validate", &path("s3.json")]).status.code(), Some(0));
    assert_eq!(qf(&["validate", &path("z3.json")]).status.code(), Some(0));
}

#[test]
fn validate_json_report() {
    let o = qf(&["--json", "validate", &path("broken_diagonal.json")]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["valid"], false);
    assert_eq!(v["violations"][0]["axiom"], "idempotence");
    assert_eq!(v["violations"][0]["witness"], serde_json::json!([0]));
}

#[test]
fn coset_command() {
    let o = qf(&["coset", &path("s3.json"), "--gen", "1,0,2", "--meridian", "1,0,2"]);
    assert_eq!(o.status.code(), Some(0));
    let q = qf_core::io::quandle_from_json(&stdout(&o)).unwrap();
    assert_eq!(q.order(), 3);
    assert!(qf_core::quandle::are_isomorphic(&q, &qf_core::FiniteQuandle::dihedral(3)).is_some());

    let whole = qf(&["coset", &path("s3.json"), "--gen", "1,0,2", "--gen", "1,2,0", "--meridian", "0"]);
    assert_eq!(qf_core::io::quandle_from_json(&stdout(&whole)).unwrap().order(), 1);

    let non_central = qf(&["coset", &path("s3.json"), "--gen", "1,0,2", "--meridian", "1,2,0"]);
    assert_eq!(non_central.status.code(), Some(3));

    let forced = qf(&["--json", "coset", &path("s3.json"), "--gen", "1,2,0", "--meridian", "1,0,2", "--force"]);
    assert_eq!(forced.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&forced.stdout).unwrap();
    assert_eq!(v["central"], false);

    let check = qf(&["coset", &path("s3.json"), "--gen", "1,0,2", "--meridian", "1,0,2", "--check"]);
    assert_eq!(check.status.code(), Some(0));
    assert!(!stdout(&check).contains("FAIL"));
}

#[test]
fn coset_writes_sidecar() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r3.json");
    let o = qf(&["coset", &path("s3.json"), "--gen", "1,0,2", "--meridian", "1,0,2", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let q = qf_core::io::quandle_from_json(&std::fs::read_to_string(&out).unwrap()).unwrap();
    let side: qf_core::io::CosetSidecar =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("r3.cosets.json")).unwrap()).unwrap();
    assert_eq!(side.representatives.len(), q.order());
    assert_eq!(side.subgroup.len(), 2);
}

#[test]
fn color_command() {
    let o = qf(&["color", &path("trefoil.gauss"), &path("dihedral3.json")]);
    assert_eq!(stdout(&o).trim(), "9");
    let o = qf(&["color", &path("unknot.gauss"), &path("trivial3.json")]);
    assert_eq!(stdout(&o).trim(), "3");
    let o = qf(&["color", &path("figure_eight.gauss"), &path("dihedral3.json"), "--budget", "2"]);
    assert_eq!(o.status.code(), Some(4));
    let o = Command::new(env!("CARGO_BIN_EXE_qf"))
        .args(["color", &path("figure_eight.gauss"), &path("dihedral3.json")])
        .env("QF_BUDGET", "2")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(4));
}

#[test]
fn diagram_parse_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.gauss");
    std::fs::write(&bad, "O1+ U2+").unwrap();
    let o = qf(&["color", bad.to_str().unwrap(), &path("dihedral3.json")]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn adconj_command() {
    let o = qf(&["--json", "adconj", &path("dihedral3.json"), "--abelianization"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v, serde_json::json!({"rank": 1, "torsion": []}));
    let o = qf(&["--json", "adconj", &path("trivial3.json"), "--abelianization"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["rank"], 3);

    let o = qf(&["adconj", &path("dihedral3.json"), "--present"]);
    let p = qf_core::io::presentation_from_json(&stdout(&o)).unwrap();
    assert_eq!(p.generator_count(), 3);
    assert_eq!(p.relators().len(), 6);

    let o = qf(&["--json", "adconj", &path("dihedral3.json"), "--inn"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["order"], 6);

    assert_eq!(qf(&["adconj", &path("dihedral3.json")]).status.code(), Some(2));
}

#[test]
fn crosscheck_command() {
    let o = qf(&["--json", "crosscheck", &path("trefoil.gauss"), &path("s3.json"), "1,0,2"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!((v["colorings"].as_u64(), v["reps"].as_u64(), v["match"].as_bool()), (Some(9), Some(9), Some(true)));
    let o = qf(&["crosscheck", &path("unknot.gauss"), &path("z3.json"), "1"]);
    assert_eq!(stdout(&o).trim(), "colorings 1 reps 1: match");
}

#[test]
fn enumerate_command() {
    let one: serde_json::Value = serde_json::from_slice(&qf(&["--json", "enumerate", "1"]).stdout).unwrap();
    assert_eq!(one.as_array().unwrap().len(), 1);
    let two: serde_json::Value = serde_json::from_slice(&qf(&["--json", "enumerate", "2"]).stdout).unwrap();
    assert_eq!(two.as_array().unwrap().len(), 1);
    assert_eq!(qf(&["enumerate", "6"]).status.code(), Some(6));
    assert_eq!(qf(&["enumerate", "4", "--order-cap", "3"]).status.code(), Some(6));
}

#[test]
fn cosets_command() {
    let o = qf(&["--json", "cosets", &path("s3_presentation.json")]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["index"], 6);
    let o = qf(&["--json", "cosets", &path("s3_presentation.json"), "--sub", "b"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["index"], 2);
    assert_eq!(qf(&["cosets", &path("s3_presentation.json"), "--tc-cap", "3"]).status.code(), Some(4));
}

#[test]
fn outputs_are_deterministic_across_thread_counts() {
    for args in [
        vec!["--json", "enumerate", "4"],
        vec!["--json", "crosscheck", &path("figure_eight.gauss"), &path("s3.json"), "1,0,2"],
    ] {
        let mut one = vec!["--threads", "1"];
        one.extend(args.iter().map(|s| &**s));
        let mut many = vec!["--threads", "8"];
        many.extend(args.iter().map(|s| &**s));
        assert_eq!(qf(&one).stdout, qf(&many).stdout);
    }
}
