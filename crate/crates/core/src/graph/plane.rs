use std::collections::BTreeSet;

use super::{Adjacency, GraphError, VertexId};

pub type FaceId = usize;

/// A face of a [`PlaneGraph`], stored as its closed boundary walk.
///
/// `walk[i] -> walk[i + 1]` (indices mod the walk length) is the directed
/// edge leaving corner `i`. A bridge is traversed twice by the same face, so
/// the degree counts it twice. An isolated vertex bounds one face with an
/// empty walk.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub id: FaceId,
    pub walk: Vec<VertexId>,
    pub component: usize,
}

impl Face {
    pub fn degree(&self) -> usize {
        self.walk.len()
    }

    /// Directed edges of the boundary walk, one per corner.
    pub fn darts(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        let len = self.walk.len();
        (0..len).map(move |i| (self.walk[i], self.walk[(i + 1) % len]))
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.walk.contains(&v)
    }

    /// Distinct boundary vertices in increasing order.
    pub fn vertex_set(&self) -> BTreeSet<VertexId> {
        self.walk.iter().copied().collect()
    }
}

/// A simple graph together with a rotation system (cyclic neighbor order
/// around every vertex) and the faces that rotation determines.
///
/// Immutable once built; every constructor validates simplicity, symmetry
/// and the per-component Euler identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneGraph {
    rotation: Vec<Vec<VertexId>>,
    // mirror[u][i] = position of u in rotation[rotation[u][i]]
    mirror: Vec<Vec<usize>>,
    // dart_face[u][i] = face whose walk contains the dart u -> rotation[u][i]
    dart_face: Vec<Vec<FaceId>>,
    faces: Vec<Face>,
    component: Vec<usize>,
    component_count: usize,
}

impl PlaneGraph {
    /// Validates a dense rotation system (vertex ids `0..rotation.len()`)
    /// and traces its faces.
    pub fn from_rotation(rotation: Vec<Vec<VertexId>>) -> Result<Self, GraphError> {
        let n = rotation.len();
        for (u, list) in rotation.iter().enumerate() {
            let mut seen = BTreeSet::new();
            for &v in list {
                if v == u {
                    return Err(GraphError::SelfLoop { vertex: u });
                }
                if v >= n {
                    return Err(GraphError::UnknownVertex { vertex: v });
                }
                if !seen.insert(v) {
                    return Err(GraphError::DuplicateNeighbor {
                        vertex: u,
                        neighbor: v,
                    });
                }
            }
        }
        let mut mirror = Vec::with_capacity(n);
        for (u, list) in rotation.iter().enumerate() {
            let mut row = Vec::with_capacity(list.len());
            for &v in list {
                match rotation[v].iter().position(|&w| w == u) {
                    Some(j) => row.push(j),
                    None => return Err(GraphError::NonSymmetricAdjacency { u, v }),
                }
            }
            mirror.push(row);
        }

        let mut g = PlaneGraph {
            rotation,
            mirror,
            dart_face: Vec::new(),
            faces: Vec::new(),
            component: Vec::new(),
            component_count: 0,
        };
        g.component = g.components();
        g.component_count = g.component.iter().map(|&c| c + 1).max().unwrap_or(0);
        g.trace();
        g.check_euler()?;
        Ok(g)
    }

    fn trace(&mut self) {
        let n = self.rotation.len();
        let mut dart_face: Vec<Vec<FaceId>> = self
            .rotation
            .iter()
            .map(|l| vec![usize::MAX; l.len()])
            .collect();
        let mut faces = Vec::new();
        for u in 0..n {
            if self.rotation[u].is_empty() {
                faces.push(Face {
                    id: faces.len(),
                    walk: Vec::new(),
                    component: self.component[u],
                });
                continue;
            }
            for i in 0..self.rotation[u].len() {
                if dart_face[u][i] != usize::MAX {
                    continue;
                }
                let id = faces.len();
                let mut walk = Vec::new();
                let (mut a, mut ai) = (u, i);
                while dart_face[a][ai] == usize::MAX {
                    dart_face[a][ai] = id;
                    walk.push(a);
                    let b = self.rotation[a][ai];
                    // leave b by the neighbor following a in b's rotation
                    let back = self.mirror[a][ai];
                    let bi = (back + 1) % self.rotation[b].len();
                    a = b;
                    ai = bi;
                }
                faces.push(Face {
                    id,
                    walk,
                    component: self.component[u],
                });
            }
        }
        self.dart_face = dart_face;
        self.faces = faces;
    }

    fn check_euler(&self) -> Result<(), GraphError> {
        let k = self.component_count;
        let mut vs = vec![0usize; k];
        let mut es = vec![0usize; k];
        let mut fs = vec![0usize; k];
        for v in 0..self.rotation.len() {
            vs[self.component[v]] += 1;
            es[self.component[v]] += self.rotation[v].len();
        }
        for f in &self.faces {
            fs[f.component] += 1;
        }
        for c in 0..k {
            let (v, e, f) = (vs[c], es[c] / 2, fs[c]);
            if v + f != e + 2 {
                return Err(GraphError::EulerViolation {
                    component: c,
                    vertices: v,
                    edges: e,
                    faces: f,
                });
            }
        }
        Ok(())
    }

    pub fn rotation(&self, v: VertexId) -> &[VertexId] {
        &self.rotation[v]
    }

    pub fn rotations(&self) -> &[Vec<VertexId>] {
        &self.rotation
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face(&self, f: FaceId) -> &Face {
        &self.faces[f]
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn component_of(&self, v: VertexId) -> usize {
        self.component[v]
    }

    pub fn component_count(&self) -> usize {
        self.component_count
    }

    pub fn component_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.component_count];
        for &c in &self.component {
            sizes[c] += 1;
        }
        sizes
    }

    /// Face containing the dart `u -> v`. Panics if `uv` is not an edge.
    pub fn face_of_dart(&self, u: VertexId, v: VertexId) -> FaceId {
        let i = self.rotation[u]
            .iter()
            .position(|&w| w == v)
            .expect("dart must be an edge");
        self.dart_face[u][i]
    }

    /// Faces at the corners of `v`, in rotation order. The corner between
    /// neighbors `rotation[i-1]` and `rotation[i]` is the face of the dart
    /// `v -> rotation[i]`; a face appears once per corner.
    pub fn corner_faces(&self, v: VertexId) -> &[FaceId] {
        &self.dart_face[v]
    }

    /// Faces on the two sides of edge `uv` (equal for a bridge).
    pub fn edge_faces(&self, u: VertexId, v: VertexId) -> (FaceId, FaceId) {
        (self.face_of_dart(u, v), self.face_of_dart(v, u))
    }

    /// For every face, the list of faces across each of its boundary darts
    /// that is a different face. A face sharing two edges with `g` lists
    /// `g` twice.
    pub fn face_adjacency(&self) -> Vec<Vec<FaceId>> {
        self.faces
            .iter()
            .map(|f| {
                f.darts()
                    .map(|(a, b)| self.face_of_dart(b, a))
                    .filter(|&g| g != f.id)
                    .collect()
            })
            .collect()
    }

    /// Plane subgraph obtained by deleting `removed`; the inherited rotation
    /// is still a sphere embedding. Returns the old id of every new vertex.
    pub fn remove_vertices(&self, removed: &[VertexId]) -> (PlaneGraph, Vec<VertexId>) {
        let n = self.rotation.len();
        let mut gone = vec![false; n];
        for &v in removed {
            gone[v] = true;
        }
        let kept: Vec<VertexId> = (0..n).filter(|&v| !gone[v]).collect();
        let mut new_id = vec![usize::MAX; n];
        for (i, &v) in kept.iter().enumerate() {
            new_id[v] = i;
        }
        let rotation = kept
            .iter()
            .map(|&v| {
                self.rotation[v]
                    .iter()
                    .filter(|&&w| !gone[w])
                    .map(|&w| new_id[w])
                    .collect()
            })
            .collect();
        let sub = PlaneGraph::from_rotation(rotation).expect("sub-embedding of a plane graph");
        (sub, kept)
    }

    /// Plane subgraph with the given undirected edges deleted.
    pub fn remove_edges(&self, edges: &[(VertexId, VertexId)]) -> PlaneGraph {
        let drop: BTreeSet<(VertexId, VertexId)> = edges
            .iter()
            .map(|&(u, v)| (u.min(v), u.max(v)))
            .collect();
        let rotation = self
            .rotation
            .iter()
            .enumerate()
            .map(|(u, list)| {
                list.iter()
                    .copied()
                    .filter(|&w| !drop.contains(&(u.min(w), u.max(w))))
                    .collect()
            })
            .collect();
        PlaneGraph::from_rotation(rotation).expect("sub-embedding of a plane graph")
    }
}

impl Adjacency for PlaneGraph {
    fn vertex_count(&self) -> usize {
        self.rotation.len()
    }

    fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.rotation[v]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> PlaneGraph {
        PlaneGraph::from_rotation(vec![
            vec![1, 2, 3],
            vec![0, 3, 2],
            vec![0, 1, 3],
            vec![0, 2, 1],
        ])
        .unwrap()
    }

    #[test]
    fn triangle_has_two_faces() {
        let g = PlaneGraph::from_rotation(vec![vec![1, 2], vec![2, 0], vec![0, 1]]).unwrap();
        assert_eq!(g.face_count(), 2);
        assert!(g.faces().iter().all(|f| f.degree() == 3));
    }

    #[test]
    fn tetrahedron_faces() {
        let g = k4();
        assert_eq!(g.face_count(), 4);
        assert!(g.faces().iter().all(|f| f.degree() == 3));
    }

    #[test]
    fn nonplanar_rotation_of_k4_is_rejected() {
        // Same graph, rotation at vertex 1 flipped: traces as a torus.
        let err = PlaneGraph::from_rotation(vec![
            vec![1, 2, 3],
            vec![0, 2, 3],
            vec![0, 1, 3],
            vec![0, 2, 1],
        ])
        .unwrap_err();
        assert!(matches!(err, GraphError::EulerViolation { .. }));
    }

    #[test]
    fn path_has_one_face_walking_each_edge_twice() {
        let g = PlaneGraph::from_rotation(vec![vec![1], vec![0, 2], vec![1]]).unwrap();
        assert_eq!(g.face_count(), 1);
        assert_eq!(g.face(0).degree(), 4);
        assert_eq!(g.face(0).walk, vec![0, 1, 2, 1]);
    }

    #[test]
    fn duplicate_neighbor_and_asymmetry() {
        let dup = PlaneGraph::from_rotation(vec![vec![1, 3, 1], vec![0, 2], vec![1, 3], vec![2, 0]]);
        assert_eq!(
            dup.unwrap_err(),
            GraphError::DuplicateNeighbor {
                vertex: 0,
                neighbor: 1
            }
        );
        let asym = PlaneGraph::from_rotation(vec![vec![1], vec![]]);
        assert_eq!(
            asym.unwrap_err(),
            GraphError::NonSymmetricAdjacency { u: 0, v: 1 }
        );
    }

    #[test]
    fn isolated_vertices_get_an_empty_face_each() {
        let g = PlaneGraph::from_rotation(vec![vec![], vec![2], vec![1]]).unwrap();
        assert_eq!(g.component_count(), 2);
        assert_eq!(g.face_count(), 2);
        assert_eq!(g.face(0).degree(), 0);
    }

    #[test]
    fn face_adjacency_is_symmetric_per_edge() {
        let g = k4();
        let adj = g.face_adjacency();
        for (f, list) in adj.iter().enumerate() {
            assert_eq!(list.len(), 3);
            for &h in list {
                assert!(adj[h].contains(&f));
            }
        }
    }

    #[test]
    fn removing_a_vertex_keeps_an_embedding() {
        let (h, old) = k4().remove_vertices(&[0]);
        assert_eq!(old, vec![1, 2, 3]);
        assert_eq!(h.face_count(), 2);
        let e = k4().remove_edges(&[(0, 1)]);
        assert_eq!(e.face_count(), 3);
    }
}
