//! Stored certificates: round trip through disk, and tampering is caught.

use pminor::extraction::extract_2c;
use pminor::harness::{load_certificates, save_certificates, StoredCertificate};
use pminor::SimpleGraph;

fn stored() -> StoredCertificate {
    let g = SimpleGraph::cycle(12);
    let out = extract_2c(&g, 4).unwrap();
    StoredCertificate::from_outcome(&g, &out).expect("a cycle contains a shorter cycle")
}

fn temp(name: &str) -> std::path::PathBuf {
    std::env::temp_dir().join(format!("pminor-{}-{name}.json", std::process::id()))
}

#[test]
fn round_trip() {
    let cert = stored();
    let path = temp("round-trip");
    save_certificates(&path, std::slice::from_ref(&cert)).unwrap();
    let back = load_certificates(&path).unwrap();
    std::fs::remove_file(&path).ok();
    assert_eq!(back, vec![cert]);
}

#[test]
fn shared_vertex_is_rejected() {
    let mut cert = stored();
    let v = cert.partition[0][0];
    cert.partition[1].push(v);
    assert!(cert.verify().is_err());
}

#[test]
fn different_host_is_rejected() {
    let mut cert = stored();
    cert.host = pminor::graph6::encode(&SimpleGraph::empty(12));
    assert!(cert.verify().is_err());
}

#[test]
fn wrong_family_is_rejected() {
    let mut cert = stored();
    cert.k += 1;
    assert!(cert.verify().is_err());
    let path = temp("bad");
    save_certificates(&path, &[cert]).unwrap();
    let loaded = load_certificates(&path);
    std::fs::remove_file(&path).ok();
    assert!(loaded.is_err());
}

#[test]
fn json_fields() {
    let v = serde_json::to_value(stored()).unwrap();
    for key in ["version", "host", "family", "k", "partition", "trace"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert!(v.get("a").is_none());
}
