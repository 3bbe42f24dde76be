use std::path::Path;
use std::process::{Command, Output};

fn fplrs(args: &[&str], cache: Option<&Path>) -> Output {
    let mut c = Command::new(env!("CARGO_BIN_EXE_fplrs"));
    c.args(args).env_remove("FPLRS_CACHE_DIR").env_remove("FPLRS_THREADS");
    if let Some(d) = cache {
        c.env("FPLRS_CACHE_DIR", d);
    }
    c.output().unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

fn entry_sum(v: &serde_json::Value, field: &str) -> (usize, u64) {
    let m = v[field].as_object().unwrap();
    let sum = m
        .values()
        .map(|x| match x {
            serde_json::Value::String(s) => s.parse::<u64>().unwrap(),
            other => other.as_u64().unwrap(),
        })
        .sum();
    (m.len(), sum)
}

#[test]
fn enumerate_small() {
    let v = json(&fplrs(&["enumerate", "--n", "4"], None));
    assert_eq!(entry_sum(&v, "counts"), (14, 42));
    let v = json(&fplrs(&["enumerate", "--n", "1", "--sign", "-"], None));
    assert_eq!(entry_sum(&v, "counts"), (1, 1));
}

#[test]
fn warm_cache_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("psi.json");
    let out = out.to_str().unwrap();
    let cache = dir.path().join("cache");
    let cold = fplrs(&["enumerate", "--n", "5", "--out", out], Some(&cache));
    assert!(cold.status.success());
    let first = std::fs::read(out).unwrap();
    let warm = fplrs(&["enumerate", "--n", "5", "--out", out], Some(&cache));
    assert!(warm.status.success());
    assert!(String::from_utf8_lossy(&warm.stderr).contains("cached"));
    assert_eq!(first, std::fs::read(out).unwrap());
    let plain = fplrs(&["enumerate", "--n", "5"], None);
    assert_eq!(first, plain.stdout);
}

#[test]
fn groundstate_small() {
    let v = json(&fplrs(&["groundstate", "--n", "2"], None));
    assert_eq!(v["entries"], serde_json::json!({"()()": "1", "(())": "1"}));
    let v = json(&fplrs(&["groundstate", "--n", "1"], None));
    assert_eq!(v["entries"], serde_json::json!({"()": "1"}));
    let v = json(&fplrs(&["groundstate", "--n", "3"], None));
    assert_eq!(entry_sum(&v, "entries"), (5, 7));
}

#[test]
fn suites_pass() {
    for suite in ["rs", "orbits", "tl", "wieland", "gyration-general", "identities"] {
        let o = fplrs(&["verify", suite, "--n-max", "4", "--format", "csv"], None);
        assert_eq!(o.status.code(), Some(0), "{suite}: {}", String::from_utf8_lossy(&o.stdout));
        let text = String::from_utf8(o.stdout).unwrap();
        assert!(text.starts_with("suite,check,n,j,status,detail\n"));
        assert!(!text.contains(",fail,"));
    }
}

#[test]
fn orbit_report_csv() {
    let o = fplrs(&["orbit-report", "--n", "3"], None);
    assert!(o.status.success());
    let text = String::from_utf8(o.stdout).unwrap();
    assert!(text.lines().count() > 1);
}

#[test]
fn exit_codes() {
    assert_eq!(fplrs(&["enumerate", "--n", "9"], None).status.code(), Some(3));
    assert_eq!(fplrs(&["verify", "rs", "--n-max", "12"], None).status.code(), Some(3));
    assert_eq!(fplrs(&["enumerate"], None).status.code(), Some(2));
    assert_eq!(fplrs(&["verify", "nonsense"], None).status.code(), Some(2));
    assert_eq!(fplrs(&["enumerate", "--n", "3", "--sign", "x"], None).status.code(), Some(2));
    assert_eq!(fplrs(&["enumerate", "--n", "0"], None).status.code(), Some(2));
}
