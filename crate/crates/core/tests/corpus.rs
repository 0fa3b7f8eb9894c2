mod common;

use std::collections::BTreeSet;

use chordfree::corpus::{
    generate_fixture, shipped_fixture_dir, standard_corpus, CorpusError, Family, Fixture,
    Provenance,
};
use chordfree::graph::Adjacency;
use chordfree::structure::class_membership;

#[test]
fn shipped_files_equal_regenerated_ones() {
    let corpus = standard_corpus().unwrap();
    assert!(corpus.len() >= 30);
    for f in &corpus {
        let path = shipped_fixture_dir().join(format!("{}.json", f.name));
        let on_disk = std::fs::read_to_string(&path).unwrap();
        assert_eq!(on_disk, f.to_json(), "{}", f.name);
    }
}

#[test]
fn shipped_files_round_trip_and_verify() {
    let fixtures = common::fixtures();
    let names: BTreeSet<&str> = fixtures.iter().map(|f| f.name.as_str()).collect();
    assert_eq!(names.len(), fixtures.len());
    for f in &fixtures {
        let path = shipped_fixture_dir().join(format!("{}.json", f.name));
        let text = std::fs::read_to_string(&path).unwrap();
        assert_eq!(Fixture::parse(&text).unwrap().to_json(), text, "{}", f.name);
        f.verify().unwrap();
    }
    assert!(fixtures.iter().any(|f| f.provenance == Provenance::Curated));
}

#[test]
fn corpus_covers_members_and_non_members() {
    let fixtures = common::fixtures();
    let members = fixtures.iter().filter(|f| f.expected.member).count();
    assert!(members >= 20);
    assert!(fixtures.len() - members >= 5);
    assert!(fixtures.iter().any(|f| f.expected.components > 1));
}

#[test]
fn tampered_fixture_fails_verification() {
    let text = std::fs::read_to_string(shipped_fixture_dir().join("cycle-7.json")).unwrap();
    let tampered = text.replace("\"member\":true", "\"member\":false");
    assert!(matches!(
        Fixture::parse(&tampered).unwrap().verify(),
        Err(CorpusError::ExpectationFailed { .. })
    ));
    let wrong_generator = text.replace("cycle(7)", "path(7)");
    assert!(Fixture::parse(&wrong_generator).unwrap().verify().is_err());
}

#[test]
fn generator_examples() {
    let c7 = generate_fixture("c7", &"cycle(7)".parse().unwrap()).unwrap();
    assert!(c7.expected.member);
    assert_eq!(c7.expected.max_degree, 2);
    let grid = generate_fixture("g", &"grid(3,3)".parse().unwrap()).unwrap();
    assert_eq!(grid.expected.degeneracy, 2);
    assert!(!grid.expected.member);
    let oct = generate_fixture("o", &"platonic(octahedron)".parse().unwrap()).unwrap();
    assert!(!oct.expected.member);
}

#[test]
fn family_expressions_round_trip() {
    for text in [
        "cycle(7)",
        "grid(3,3)",
        "union(cycle(5),path(4))",
        "truncated(tetrahedron)",
        "shielded-triangle(5)",
        "h-gadget",
    ] {
        let family: Family = text.parse().unwrap();
        assert_eq!(family.to_string(), text);
    }
    for bad in ["cycle(2)", "nonsense(1)", "cycle(7", "platonic(torus)"] {
        let parsed = bad.parse::<Family>().and_then(|f| f.build());
        assert!(parsed.is_err(), "{bad}");
    }
}

#[test]
fn gadget_shapes() {
    let h = common::fixture("h-gadget");
    assert!(class_membership(&h).is_member);
    assert_eq!(h.vertices().filter(|&v| h.degree(v) == 4).count(), 5);
    let t = common::fixture("triangle-555");
    assert_eq!(t.vertices().filter(|&v| t.degree(v) == 5).count(), 3);
}
