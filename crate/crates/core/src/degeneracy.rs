//! Smallest-last elimination orderings.

use serde::Serialize;

use crate::graph::{Adjacency, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegeneracyCertificate {
    pub degeneracy: usize,
    /// `ordering[j]` has at most `degeneracy` neighbors among
    /// `ordering[j + 1..]`.
    pub ordering: Vec<VertexId>,
}

impl DegeneracyCertificate {
    /// Number of neighbors of each ordered vertex that come later.
    pub fn back_degrees<G: Adjacency + ?Sized>(&self, g: &G) -> Vec<usize> {
        let mut pos = vec![0; g.vertex_count()];
        for (i, &v) in self.ordering.iter().enumerate() {
            pos[v] = i;
        }
        self.ordering
            .iter()
            .enumerate()
            .map(|(i, &v)| g.neighbors(v).iter().filter(|&&w| pos[w] > i).count())
            .collect()
    }
}

/// Repeatedly removes a vertex of minimum remaining degree (lowest id on
/// ties). The removal sequence is the certificate ordering.
pub fn degeneracy_ordering<G: Adjacency + ?Sized>(g: &G) -> DegeneracyCertificate {
    let n = g.vertex_count();
    let mut deg: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut ordering = Vec::with_capacity(n);
    let mut degeneracy = 0;
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !removed[v])
            .min_by_key(|&v| (deg[v], v))
            .expect("a vertex remains");
        degeneracy = degeneracy.max(deg[v]);
        removed[v] = true;
        ordering.push(v);
        for &w in g.neighbors(v) {
            if !removed[w] {
                deg[w] -= 1;
            }
        }
    }
    DegeneracyCertificate {
        degeneracy,
        ordering,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegeneracyCheck {
    pub passed: bool,
    pub degeneracy: usize,
    pub certificate: DegeneracyCertificate,
    /// Minimum degree of the subgraph left when the first vertex of
    /// back-degree above 4 was removed.
    pub witness_min_degree: Option<usize>,
    /// Remaining vertices at that point.
    pub witness_subgraph: Option<Vec<VertexId>>,
    /// Set when the caller did not establish that the graph lies in the
    /// class the bound is known for.
    pub precondition_not_checked: bool,
}

/// Checks degeneracy at most 4. `membership_checked` should be true when
/// the caller has verified that `g` has no chordal 4-cycles.
pub fn assert_4_degenerate<G: Adjacency + ?Sized>(
    g: &G,
    membership_checked: bool,
) -> DegeneracyCheck {
    let certificate = degeneracy_ordering(g);
    let backs = certificate.back_degrees(g);
    let failure = backs.iter().position(|&b| b > 4);
    DegeneracyCheck {
        passed: failure.is_none(),
        degeneracy: certificate.degeneracy,
        witness_min_degree: failure.map(|i| backs[i]),
        witness_subgraph: failure.map(|i| {
            let mut rest = certificate.ordering[i..].to_vec();
            rest.sort_unstable();
            rest
        }),
        certificate,
        precondition_not_checked: !membership_checked,
    }
}
