mod common;

use chordfree::corpus::random_plane_graph;
use chordfree::degeneracy::{assert_4_degenerate, degeneracy_ordering};
use chordfree::graph::Adjacency;
use chordfree::structure::find_chordal_cycles;
use proptest::prelude::*;

fn check_certificate(g: &impl Adjacency) -> usize {
    let cert = degeneracy_ordering(g);
    let mut sorted = cert.ordering.clone();
    sorted.sort_unstable();
    assert_eq!(sorted, g.vertices().collect::<Vec<_>>());
    let backs = cert.back_degrees(g);
    assert_eq!(backs.iter().copied().max().unwrap_or(0), cert.degeneracy);
    cert.degeneracy
}

#[test]
fn known_values() {
    assert_eq!(check_certificate(&common::fixture("binary-tree-3")), 1);
    assert_eq!(check_certificate(&common::fixture("cycle-7")), 2);
    assert_eq!(check_certificate(&common::fixture("cube")), 3);
    assert_eq!(check_certificate(&common::fixture("icosahedron")), 5);
    let ico = assert_4_degenerate(&common::fixture("icosahedron"), false);
    assert!(!ico.passed);
    assert!(ico.precondition_not_checked);
    assert_eq!(ico.witness_min_degree, Some(5));
    assert!(assert_4_degenerate(&common::fixture("cube"), true).passed);
    assert!(assert_4_degenerate(&common::fixture("hexpatch-3x3"), true).passed);
}

#[test]
fn smallest_last_matches_subset_oracle() {
    for f in common::fixtures().iter().filter(|f| f.graph.vertex_count() <= 16) {
        assert_eq!(
            check_certificate(&f.graph),
            common::subset_degeneracy(&f.graph),
            "{}",
            f.name
        );
    }
}

#[test]
fn no_chordal_four_cycle_means_four_degenerate() {
    for f in common::fixtures() {
        if find_chordal_cycles(&f.graph, 4).unwrap().is_empty() {
            let check = assert_4_degenerate(&f.graph, true);
            assert!(check.passed, "{}: degeneracy {}", f.name, check.degeneracy);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_graphs_match_subset_oracle(n in 1usize..14, extra in 0usize..30, seed in any::<u64>()) {
        let g = random_plane_graph(n, extra, false, seed);
        prop_assert_eq!(check_certificate(&g), common::subset_degeneracy(&g));
    }

    #[test]
    fn members_are_four_degenerate(n in 1usize..40, extra in 0usize..60, seed in any::<u64>()) {
        let g = random_plane_graph(n, extra, true, seed);
        prop_assert!(assert_4_degenerate(&g, true).passed);
    }
}
