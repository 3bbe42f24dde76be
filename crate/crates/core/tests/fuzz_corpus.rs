//! Replays the checked-in fuzz corpus on stable, with the same properties
//! the fuzz targets assert.

use std::fs;
use std::path::PathBuf;

use fplrs::fpl::{PsiTable, VertexType};
use fplrs::identities::AuxType;
use fplrs::lattice::{BoundaryCondition, Domain, Sign};
use fplrs::{LinkPattern, LpVector};

fn corpus(target: &str) -> Vec<String> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus").join(target);
    let mut files: Vec<_> = fs::read_dir(&dir).unwrap().map(|e| e.unwrap().path()).collect();
    files.sort();
    assert!(!files.is_empty(), "no seeds in {}", dir.display());
    files.into_iter().filter_map(|p| String::from_utf8(fs::read(p).unwrap()).ok()).collect()
}

#[test]
fn domain_json() {
    let mut ok = 0;
    for s in corpus("domain_json") {
        if let Ok(d) = Domain::from_json(&s) {
            assert_eq!(Domain::from_json(&d.to_json()).unwrap(), d);
            assert_eq!(d.boundary_string().total(), 4);
            assert_eq!(d.num_terminations(), 4 * d.num_cells() - 2 * d.num_internal());
            ok += 1;
        }
    }
    assert_eq!(ok, 2);
}

#[test]
fn boundary_string() {
    let mut ok = 0;
    for s in corpus("boundary_string") {
        if let Ok(t) = s.parse::<BoundaryCondition>() {
            assert_eq!(t.to_string().parse::<BoundaryCondition>().unwrap(), t);
            assert_eq!(t.complement().complement(), t);
            ok += 1;
        }
    }
    assert!(ok >= 2);
}

#[test]
fn psi_json() {
    let mut ok = 0;
    for s in corpus("psi_json") {
        if let Ok(t) = PsiTable::from_json(&s) {
            assert_eq!(PsiTable::from_json(&t.to_json()).unwrap(), t);
            ok += 1;
        }
    }
    assert_eq!(ok, 2);
}

#[test]
fn lp_vector_json() {
    let mut ok = 0;
    for s in corpus("lp_vector_json") {
        if let Ok(v) = LpVector::from_json(&s) {
            assert_eq!(LpVector::from_json(&v.to_json()).unwrap(), v);
            ok += 1;
        }
    }
    assert_eq!(ok, 2);
}

#[test]
fn link_word() {
    let mut ok = 0;
    for s in corpus("link_word") {
        if let Ok(p) = LinkPattern::from_word(&s) {
            assert_eq!(p.to_word(), s);
            assert_eq!(p.rotate(2 * p.n() as i64), p);
            assert_eq!(s.parse::<LinkPattern>().ok(), Some(p));
            ok += 1;
        }
    }
    assert!(ok >= 4);
}

#[test]
fn tokens() {
    for s in corpus("tokens") {
        if let Ok(x) = s.parse::<Sign>() {
            assert_eq!(x.to_string().parse::<Sign>().ok(), Some(x));
        }
        if let Ok(x) = s.parse::<VertexType>() {
            assert_eq!(x.to_string().parse::<VertexType>().ok(), Some(x));
        }
        if let Ok(x) = s.parse::<AuxType>() {
            assert_eq!(x.to_string().parse::<AuxType>().ok(), Some(x));
        }
    }
}
