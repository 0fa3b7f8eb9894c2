use serde::Serialize;

use super::StructureError;
use crate::graph::{Adjacency, PlaneGraph, VertexId};

/// A cycle together with one chord.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct CycleWitness {
    pub cycle_vertices: Vec<VertexId>,
    pub chord: (VertexId, VertexId),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassReport {
    pub is_member: bool,
    pub chordal4: Vec<CycleWitness>,
    pub chordal6: Vec<CycleWitness>,
    pub euler_ok: bool,
}

/// All simple cycles of length `len` (>= 3), each listed once in canonical
/// form: starts at its smallest vertex, and the second vertex is smaller than
/// the last. Output is sorted.
pub fn simple_cycles<G: Adjacency + ?Sized>(g: &G, len: usize) -> Vec<Vec<VertexId>> {
    assert!(len >= 3, "cycles have length at least 3");
    let mut out = Vec::new();
    let mut path = Vec::with_capacity(len);
    let mut on_path = vec![false; g.vertex_count()];
    for s in g.vertices() {
        path.push(s);
        on_path[s] = true;
        extend(g, len, s, &mut path, &mut on_path, &mut out);
        on_path[s] = false;
        path.pop();
    }
    out.sort();
    out
}

fn extend<G: Adjacency + ?Sized>(
    g: &G,
    len: usize,
    s: VertexId,
    path: &mut Vec<VertexId>,
    on_path: &mut [bool],
    out: &mut Vec<Vec<VertexId>>,
) {
    let last = *path.last().unwrap();
    if path.len() == len {
        if g.has_edge(last, s) && path[1] < last {
            out.push(path.clone());
        }
        return;
    }
    for &w in g.neighbors(last) {
        if w > s && !on_path[w] {
            path.push(w);
            on_path[w] = true;
            extend(g, len, s, path, on_path, out);
            on_path[w] = false;
            path.pop();
        }
    }
}

/// Every (cycle, chord) pair for cycles of length 4 or 6.
pub fn find_chordal_cycles<G: Adjacency + ?Sized>(
    g: &G,
    length: usize,
) -> Result<Vec<CycleWitness>, StructureError> {
    if length != 4 && length != 6 {
        return Err(StructureError::UnsupportedLength(length));
    }
    let mut out = Vec::new();
    for cycle in simple_cycles(g, length) {
        for i in 0..length {
            // positions two or more apart are non-consecutive; j < length
            // keeps each unordered pair once and skips the closing edge
            for j in i + 2..length {
                if i == 0 && j == length - 1 {
                    continue;
                }
                let (a, b) = (cycle[i], cycle[j]);
                if g.has_edge(a, b) {
                    out.push(CycleWitness {
                        cycle_vertices: cycle.clone(),
                        chord: (a.min(b), a.max(b)),
                    });
                }
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Membership in the class of plane graphs without chordal 4- and 6-cycles.
pub fn class_membership(g: &PlaneGraph) -> ClassReport {
    let chordal4 = find_chordal_cycles(g, 4).expect("supported length");
    let chordal6 = find_chordal_cycles(g, 6).expect("supported length");
    // a PlaneGraph only exists once the Euler check has passed
    let euler_ok = true;
    ClassReport {
        is_member: euler_ok && chordal4.is_empty() && chordal6.is_empty(),
        chordal4,
        chordal6,
        euler_ok,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::SimpleGraph;

    #[test]
    fn k4_has_three_four_cycles_with_two_chords_each() {
        let k4 = SimpleGraph::complete(4);
        assert_eq!(simple_cycles(&k4, 4).len(), 3);
        assert_eq!(simple_cycles(&k4, 3).len(), 4);
        assert_eq!(find_chordal_cycles(&k4, 4).unwrap().len(), 6);
    }

    #[test]
    fn c4_plus_chord() {
        let g = SimpleGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
        let w = find_chordal_cycles(&g, 4).unwrap();
        assert_eq!(
            w,
            vec![CycleWitness {
                cycle_vertices: vec![0, 1, 2, 3],
                chord: (0, 2)
            }]
        );
    }

    #[test]
    fn unsupported_length() {
        let g = SimpleGraph::complete(5);
        assert_eq!(
            find_chordal_cycles(&g, 5),
            Err(StructureError::UnsupportedLength(5))
        );
    }
}
