use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use super::cycles::simple_cycles;
use crate::graph::{degree_profile, Adjacency, FaceId, PlaneGraph, VertexId};

/// A pattern that cannot occur in a graph without chordal 4- and 6-cycles.
///
/// Two cycles are *adjacent* here when they share exactly one edge and no
/// other vertex, so that their union is a longer cycle with that edge as a
/// chord.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum StructuralViolation {
    AdjacentTriangles {
        a: Vec<VertexId>,
        b: Vec<VertexId>,
    },
    QuadWithTwoTriangles {
        quad: Vec<VertexId>,
        t1: Vec<VertexId>,
        t2: Vec<VertexId>,
    },
    TriangleAdjacentToPentagon {
        triangle: Vec<VertexId>,
        pentagon: Vec<VertexId>,
    },
    AdjacentQuads {
        a: Vec<VertexId>,
        b: Vec<VertexId>,
    },
    /// A 3-face with a 3-vertex on it but no adjacent 6+-face (min degree 3).
    TriangleFaceWithoutLargeNeighbor { face: FaceId },
    /// `d(v) >= 8` with `f3 + f4 > 3d/4` or `f3 > d/2`.
    SmallFaceExcess {
        vertex: VertexId,
        degree: usize,
        f3: usize,
        f4: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructuralAudit {
    pub violations: Vec<StructuralViolation>,
    /// Whether the checks that need minimum degree 3 were run.
    pub min_degree_checks: bool,
}

struct CycleSet {
    cycles: Vec<Vec<VertexId>>,
    by_edge: HashMap<(VertexId, VertexId), Vec<usize>>,
}

impl CycleSet {
    fn new(g: &PlaneGraph, len: usize) -> Self {
        let cycles = simple_cycles(g, len);
        let mut by_edge: HashMap<_, Vec<usize>> = HashMap::new();
        for (i, c) in cycles.iter().enumerate() {
            for e in cycle_edges(c) {
                by_edge.entry(e).or_default().push(i);
            }
        }
        CycleSet { cycles, by_edge }
    }
}

fn cycle_edges(c: &[VertexId]) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
    (0..c.len()).map(move |i| {
        let (a, b) = (c[i], c[(i + 1) % c.len()]);
        (a.min(b), a.max(b))
    })
}

fn strictly_adjacent(a: &[VertexId], b: &[VertexId]) -> bool {
    let shared: BTreeSet<_> = a.iter().filter(|v| b.contains(v)).collect();
    if shared.len() != 2 {
        return false;
    }
    let common_edges = cycle_edges(a)
        .filter(|e| cycle_edges(b).any(|f| f == *e))
        .count();
    common_edges == 1
}

/// Pairs `(i, j)` with cycle `i` from `xs` strictly adjacent to cycle `j`
/// from `ys`. When `same` is set, only `i < j` is reported.
fn adjacent_pairs(xs: &CycleSet, ys: &CycleSet, same: bool) -> Vec<(usize, usize)> {
    let mut out = BTreeSet::new();
    for (i, c) in xs.cycles.iter().enumerate() {
        for e in cycle_edges(c) {
            for &j in ys.by_edge.get(&e).into_iter().flatten() {
                if same && j <= i {
                    continue;
                }
                if strictly_adjacent(c, &ys.cycles[j]) {
                    out.insert((i, j));
                }
            }
        }
    }
    out.into_iter().collect()
}

pub fn structural_audit(g: &PlaneGraph) -> StructuralAudit {
    let mut violations = Vec::new();
    let tri = CycleSet::new(g, 3);
    let quad = CycleSet::new(g, 4);

    for (i, j) in adjacent_pairs(&tri, &tri, true) {
        violations.push(StructuralViolation::AdjacentTriangles {
            a: tri.cycles[i].clone(),
            b: tri.cycles[j].clone(),
        });
    }
    let quad_tri = adjacent_pairs(&quad, &tri, false);
    for (k, &(q, t1)) in quad_tri.iter().enumerate() {
        for &(q2, t2) in &quad_tri[k + 1..] {
            if q2 == q {
                violations.push(StructuralViolation::QuadWithTwoTriangles {
                    quad: quad.cycles[q].clone(),
                    t1: tri.cycles[t1].clone(),
                    t2: tri.cycles[t2].clone(),
                });
            }
        }
    }

    let min_degree_checks = g.vertex_count() > 0 && g.min_degree() >= 3;
    let profile = degree_profile(g);
    if min_degree_checks {
        let pent = CycleSet::new(g, 5);
        for (i, j) in adjacent_pairs(&tri, &pent, false) {
            violations.push(StructuralViolation::TriangleAdjacentToPentagon {
                triangle: tri.cycles[i].clone(),
                pentagon: pent.cycles[j].clone(),
            });
        }
        for (i, j) in adjacent_pairs(&quad, &quad, true) {
            violations.push(StructuralViolation::AdjacentQuads {
                a: quad.cycles[i].clone(),
                b: quad.cycles[j].clone(),
            });
        }
        let adjacency = g.face_adjacency();
        for f in g.faces() {
            if f.degree() != 3 || !f.walk.iter().any(|&v| g.degree(v) == 3) {
                continue;
            }
            if !adjacency[f.id].iter().any(|&h| profile.face_degrees[h] >= 6) {
                violations.push(StructuralViolation::TriangleFaceWithoutLargeNeighbor { face: f.id });
            }
        }
    }

    for v in g.vertices() {
        let d = g.degree(v);
        if d < 8 {
            continue;
        }
        let f3 = profile.faces_of_degree_at(v, 3);
        let f4 = profile.faces_of_degree_at(v, 4);
        if 4 * (f3 + f4) > 3 * d || 2 * f3 > d {
            violations.push(StructuralViolation::SmallFaceExcess {
                vertex: v,
                degree: d,
                f3,
                f4,
            });
        }
    }

    StructuralAudit {
        violations,
        min_degree_checks,
    }
}
