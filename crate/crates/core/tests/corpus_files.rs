use std::fs;

use semikit::corpus::{read_corpus, verify_suite, write_corpus, CorpusSpec, Descriptor, Manifest};
use semikit::{Error, Limits};

fn spec(descriptors: &[&str]) -> CorpusSpec {
    CorpusSpec::new(
        descriptors
            .iter()
            .map(|d| d.parse::<Descriptor>().unwrap())
            .collect(),
    )
}

#[test]
fn corpus_directory_round_trip() {
    let spec = spec(&[
        "paper_band",
        "rees:2x2:z2:1",
        "transform:3:2:11",
        "census:2",
    ]);
    let instances = spec.resolve().unwrap();
    assert_eq!(instances.len(), 3 + 6);
    let dir = tempfile::tempdir().unwrap();
    let manifest = write_corpus(dir.path(), &instances).unwrap();
    assert_eq!(manifest.entries.len(), instances.len());
    assert_eq!(manifest.entries[1].seed, Some(1));
    assert_eq!(manifest.entries[1].descriptor, "rees:2x2:z2:1");

    let back = read_corpus(dir.path(), &Limits::default()).unwrap();
    assert_eq!(back, instances);

    let text = fs::read_to_string(dir.path().join("manifest.json")).unwrap();
    let parsed: Manifest = serde_json::from_str(&text).unwrap();
    assert_eq!(parsed, manifest);
}

#[test]
fn tampered_file_is_rejected() {
    let instances = spec(&["t2"]).resolve().unwrap();
    let dir = tempfile::tempdir().unwrap();
    let manifest = write_corpus(dir.path(), &instances).unwrap();
    let path = dir.path().join(&manifest.entries[0].file);
    fs::write(&path, "2\n0 0\n0 0\n").unwrap();
    assert!(matches!(
        read_corpus(dir.path(), &Limits::default()),
        Err(Error::InvariantViolation(_))
    ));
}

#[test]
fn directory_without_manifest() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("b.sg"), "1\n0\n").unwrap();
    fs::write(dir.path().join("a.sg"), "2\n0 1\n1 0\n").unwrap();
    fs::write(dir.path().join("notes.txt"), "ignored").unwrap();
    let back = read_corpus(dir.path(), &Limits::default()).unwrap();
    let orders: Vec<usize> = back.iter().map(|i| i.semigroup.order()).collect();
    assert_eq!(orders, vec![2, 1]);
    assert_eq!(back[0].semigroup.name(), Some("a"));
}

#[test]
fn identical_specs_give_identical_reports() {
    let s = spec(&["census:3", "rees:3x2:s3:99", "transform:4:2:3"]);
    let a = verify_suite(&s).unwrap();
    let b = verify_suite(&s).unwrap();
    assert_eq!(a, b);
    assert_eq!(
        serde_json::to_string(&a).unwrap(),
        serde_json::to_string(&b).unwrap()
    );
    assert!(a.all_passed());
    assert_eq!(a.rng, "chacha8/seed_from_u64");
}

#[test]
fn paper_band_corpus() {
    let r = verify_suite(&spec(&["paper_band"])).unwrap();
    assert_eq!(r.summary.failed, 0);
    assert_eq!(r.summary.checks, 14);
}

#[test]
fn census_beyond_the_limit_is_refused() {
    let e = spec(&["census:5"]).resolve().unwrap_err();
    assert_eq!(e, Error::CensusLimitExceeded { order: 5, limit: 4 });
}
