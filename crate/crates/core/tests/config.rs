mod common;

use std::collections::BTreeSet;

use chordfree::config::{
    complete_seed, configuration_h, find_reducible_set, find_reducible_set_abstract,
    match_configuration, parse_configuration, verify_reducible, ConfigError, DegreeSpec,
    FindOptions, Kind, Label, ReduceFailure,
};
use chordfree::corpus::{random_plane_graph, Family};
use chordfree::graph::{Adjacency, SimpleGraph, VertexId};
use proptest::prelude::*;

/// Independent check of `|N(x_i) - S| <= k - i`.
fn reducible_by_hand(g: &impl Adjacency, order: &[VertexId]) -> bool {
    let k = order.len();
    let inside: BTreeSet<VertexId> = order.iter().copied().collect();
    order.iter().enumerate().all(|(i, &v)| {
        g.neighbors(v).iter().filter(|w| !inside.contains(w)).count() <= k - (i + 1)
    })
}

#[test]
fn shipped_h() {
    let h = configuration_h();
    assert_eq!(h.vertex_count(), 6);
    let labels: BTreeSet<Label> = h.vertices.iter().filter_map(|v| v.label).collect();
    let want: BTreeSet<Label> = (0..5).map(Label::Top).chain([Label::Bottom(1)]).collect();
    assert_eq!(labels, want);
    for v in &h.vertices {
        if v.label == Some(Label::Bottom(1)) {
            assert_eq!(v.degree, DegreeSpec::ShownToDelta);
        } else {
            assert_eq!(v.degree, DegreeSpec::Exact(4));
        }
    }
    assert_eq!(h.vertices.iter().filter(|v| v.kind == Kind::Solid).count(), 1);
}

#[test]
fn labels_round_trip() {
    for text in ["x_k", "x_{k-1}", "x_{k-4}", "x_1", "x_12"] {
        let label: Label = text.parse().unwrap();
        assert_eq!(label.to_string(), text);
    }
    assert_eq!("x_{k\u{2212}2}".parse::<Label>().unwrap(), Label::Top(2));
    assert!("y_1".parse::<Label>().is_err());
    assert!("x_0".parse::<Label>().is_err());
    assert_eq!(Label::Top(2).index(7), Some(5));
    assert_eq!(Label::Bottom(8).index(7), None);
}

#[test]
fn malformed_patterns() {
    let low = r#"{"vertices": [
        {"id": "a", "kind": "hollow", "degree": [2, 5]},
        {"id": "b", "kind": "hollow"}, {"id": "c", "kind": "hollow"}, {"id": "d", "kind": "hollow"}],
        "edges": [["a", "b"], ["a", "c"], ["a", "d"]]}"#;
    assert!(matches!(
        parse_configuration(low),
        Err(ConfigError::DegreeBelowShownEdges { shown: 3, lower: 2, .. })
    ));
    assert!(matches!(
        parse_configuration(r#"{"vertices": []}"#),
        Err(ConfigError::MalformedPattern(_))
    ));
    assert!(matches!(
        parse_configuration(r#"{"vertices": [{"id": "a", "kind": "hollow"}], "edges": [["a", "z"]]}"#),
        Err(ConfigError::MalformedPattern(_))
    ));
}

#[test]
fn h_matches_agree_with_brute_force() {
    let h = configuration_h();
    for f in common::fixtures().iter().filter(|f| f.graph.vertex_count() <= 14) {
        let found: BTreeSet<Vec<VertexId>> = match_configuration(&f.graph, &h)
            .into_iter()
            .map(|m| m.map)
            .collect();
        assert_eq!(found, common::brute_h_matches(&f.graph), "{}", f.name);
    }
    assert!(!match_configuration(&common::fixture("h-gadget"), &h).is_empty());
    assert!(match_configuration(&common::fixture("cube"), &h).is_empty());
    assert!(match_configuration(&common::fixture("octahedron"), &h).is_empty());
}

#[test]
fn verify_examples() {
    let c7 = common::fixture("cycle-7");
    let all: Vec<VertexId> = (0..7).rev().collect();
    assert_eq!(verify_reducible(&c7, &all, 7).unwrap().outside_counts, vec![0; 7]);

    let star = Family::Star(7).build().unwrap();
    let centre = (0..8).find(|&v| star.degree(v) == 7).unwrap();
    let leaves: Vec<VertexId> = (0..8).filter(|&v| v != centre).take(6).collect();
    let top: Vec<VertexId> = leaves.iter().copied().chain([centre]).collect();
    assert!(matches!(
        verify_reducible(&star, &top, 7),
        Err(ReduceFailure::Violation { index: 7, count: 1, bound: 0, .. })
    ));
    let bottom: Vec<VertexId> = [centre].into_iter().chain(leaves).collect();
    let set = verify_reducible(&star, &bottom, 7).unwrap();
    assert_eq!(set.outside_counts[0], 1);

    assert!(matches!(
        verify_reducible(&c7, &[0, 1, 2], 7),
        Err(ReduceFailure::WrongSize { expected: 7, found: 3 })
    ));
    assert!(matches!(
        verify_reducible(&c7, &[0, 1, 2, 3, 4, 5, 5], 7),
        Err(ReduceFailure::DuplicateVertex { vertex: 5 })
    ));
    assert!(matches!(
        verify_reducible(&c7, &[0, 1, 2, 3, 4, 5, 9], 7),
        Err(ReduceFailure::UnknownVertex { vertex: 9 })
    ));
}

#[test]
fn seed_completion() {
    let p8 = common::fixture("path-8");
    let order = complete_seed(&p8, &[], 7).unwrap();
    assert!(verify_reducible(&p8, &order, 7).is_ok());
    assert!(reducible_by_hand(&p8, &order));
    let big: Vec<(usize, VertexId)> = (0..8).map(|v| (v + 1, v)).collect();
    assert!(matches!(
        complete_seed(&p8, &big, 7),
        Err(ConfigError::SeedTooLarge { seed: 8, k: 7 })
    ));
    assert!(matches!(
        complete_seed(&common::fixture("cycle-3"), &[], 7),
        Err(ConfigError::GraphTooSmall { n: 3, k: 7 })
    ));
}

#[test]
fn search_examples() {
    let opts = FindOptions::default();
    let c7 = common::fixture("cycle-7");
    let cert = find_reducible_set(&c7, 7, &[], &opts).unwrap();
    assert_eq!(cert.set.vertices.len(), 7);

    let cube = common::fixture("cube");
    let cert = find_reducible_set(&cube, 7, &[], &opts).unwrap();
    assert!(reducible_by_hand(&cube, &cert.set.vertices));

    let gadget = common::fixture("h-gadget");
    let cert = find_reducible_set(&gadget, 7, &[configuration_h()], &opts).unwrap();
    assert!(reducible_by_hand(&gadget, &cert.set.vertices));
}

#[test]
fn complete_graph_on_eight_has_no_reducible_seven_set() {
    let k8 = SimpleGraph::complete(8);
    assert!(find_reducible_set_abstract(&k8, 7, &FindOptions::default()).is_none());
    // each 7-subset with each of its vertices at the top position
    for out in 0..8 {
        let mut set: Vec<VertexId> = (0..8).filter(|&v| v != out).collect();
        for _ in 0..7 {
            set.rotate_left(1);
            assert!(!reducible_by_hand(&k8, &set));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn certificates_reverify(n in 7usize..40, extra in 0usize..50, seed in any::<u64>()) {
        let g = random_plane_graph(n, extra, true, seed);
        let k = 7.max(g.max_degree());
        if let Some(cert) = find_reducible_set(&g, k, &[configuration_h()], &FindOptions::default()) {
            prop_assert!(reducible_by_hand(&g, &cert.set.vertices));
            prop_assert_eq!(cert.set.vertices.len(), k);
        }
    }

    #[test]
    fn h_matches_agree_on_random_graphs(n in 6usize..14, extra in 0usize..20, seed in any::<u64>()) {
        let g = random_plane_graph(n, extra, false, seed);
        let found: BTreeSet<Vec<VertexId>> = match_configuration(&g, &configuration_h())
            .into_iter()
            .map(|m| m.map)
            .collect();
        prop_assert_eq!(found, common::brute_h_matches(&g));
    }
}
