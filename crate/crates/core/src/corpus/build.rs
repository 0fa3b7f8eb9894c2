//! Rotation-system constructions used by the generators.

use std::collections::HashMap;

use crate::graph::{Adjacency, GraphError, PlaneGraph, VertexId};

/// Builds the rotation system whose traced faces are exactly `faces`.
///
/// Every face is a closed walk; every directed edge must occur in exactly
/// one walk. A vertex may repeat inside a walk (cut vertices, leaves).
pub fn from_faces(n: usize, faces: &[Vec<VertexId>]) -> Result<PlaneGraph, GraphError> {
    let mut succ: Vec<HashMap<VertexId, VertexId>> = vec![HashMap::new(); n];
    for walk in faces {
        let m = walk.len();
        for j in 0..m {
            let (a, b, c) = (walk[(j + m - 1) % m], walk[j], walk[(j + 1) % m]);
            for v in [a, b, c] {
                if v >= n {
                    return Err(GraphError::UnknownVertex { vertex: v });
                }
            }
            if succ[b].insert(a, c).is_some() {
                return Err(GraphError::Parse(format!(
                    "directed edge {a} -> {b} lies on two faces"
                )));
            }
        }
    }
    let rotation = succ
        .iter()
        .enumerate()
        .map(|(v, s)| cycle_from_successors(v, s))
        .collect::<Result<Vec<_>, _>>()?;
    PlaneGraph::from_rotation(rotation)
}

fn cycle_from_successors(
    v: VertexId,
    succ: &HashMap<VertexId, VertexId>,
) -> Result<Vec<VertexId>, GraphError> {
    let Some(&start) = succ.keys().min() else {
        return Ok(Vec::new());
    };
    let mut order = vec![start];
    let mut cur = succ[&start];
    while cur != start {
        if order.len() > succ.len() {
            break;
        }
        order.push(cur);
        cur = *succ.get(&cur).ok_or_else(|| {
            GraphError::Parse(format!("faces leave a gap in the rotation at vertex {v}"))
        })?;
    }
    if order.len() != succ.len() {
        return Err(GraphError::Parse(format!(
            "faces around vertex {v} do not close into one cycle"
        )));
    }
    Ok(order)
}

/// Like [`from_faces`], but only the bounded faces are given; the outer
/// face is closed off automatically. Each vertex may lie on the outer
/// boundary at most once.
pub fn from_inner_faces(n: usize, faces: &[Vec<VertexId>]) -> Result<PlaneGraph, GraphError> {
    let mut succ: Vec<HashMap<VertexId, VertexId>> = vec![HashMap::new(); n];
    for walk in faces {
        let m = walk.len();
        for j in 0..m {
            let (a, b, c) = (walk[(j + m - 1) % m], walk[j], walk[(j + 1) % m]);
            if b >= n {
                return Err(GraphError::UnknownVertex { vertex: b });
            }
            succ[b].insert(a, c);
        }
    }
    for (v, s) in succ.iter_mut().enumerate() {
        let targets: Vec<VertexId> = s.values().copied().collect();
        let heads: Vec<VertexId> = s.keys().copied().filter(|a| !targets.contains(a)).collect();
        let tails: Vec<VertexId> = targets.into_iter().filter(|c| !s.contains_key(c)).collect();
        match (heads.as_slice(), tails.as_slice()) {
            ([], []) => {}
            ([h], [t]) => {
                s.insert(*t, *h);
            }
            _ => {
                return Err(GraphError::Parse(format!(
                    "vertex {v} meets the outer boundary more than once"
                )))
            }
        }
    }
    let rotation = succ
        .iter()
        .enumerate()
        .map(|(v, s)| cycle_from_successors(v, s))
        .collect::<Result<Vec<_>, _>>()?;
    PlaneGraph::from_rotation(rotation)
}

/// Any rotation of a forest is a plane embedding; neighbors are kept in
/// edge order.
pub fn forest(n: usize, edges: &[(VertexId, VertexId)]) -> Result<PlaneGraph, GraphError> {
    let mut rotation = vec![Vec::new(); n];
    for &(u, v) in edges {
        if u >= n || v >= n {
            return Err(GraphError::UnknownVertex { vertex: u.max(v) });
        }
        rotation[u].push(v);
        rotation[v].push(u);
    }
    PlaneGraph::from_rotation(rotation)
}

/// Adds `count` pendant vertices at `v`, inside the face that contains
/// the directed edge `before -> v`.
pub fn attach_leaves(g: &PlaneGraph, before: VertexId, v: VertexId, count: usize) -> PlaneGraph {
    let mut rotation = g.rotations().to_vec();
    let pos = rotation[v]
        .iter()
        .position(|&w| w == before)
        .expect("before is a neighbor of v");
    for _ in 0..count {
        let leaf = rotation.len();
        rotation[v].insert(pos + 1, leaf);
        rotation.push(vec![v]);
    }
    PlaneGraph::from_rotation(rotation).expect("leaves keep the embedding planar")
}

/// Adds `count` pendant vertices at `v` inside the face `face`.
pub fn attach_leaves_in_face(g: &PlaneGraph, face: usize, v: VertexId, count: usize) -> PlaneGraph {
    let walk = &g.face(face).walk;
    let i = walk
        .iter()
        .position(|&w| w == v)
        .expect("vertex lies on the face");
    let before = walk[(i + walk.len() - 1) % walk.len()];
    attach_leaves(g, before, v, count)
}

/// Planar dual; every face must be bounded by a cycle and no two faces may
/// share more than one edge.
pub fn dual(g: &PlaneGraph) -> Result<PlaneGraph, GraphError> {
    let rotation = g
        .faces()
        .iter()
        .map(|f| f.darts().map(|(a, b)| g.face_of_dart(b, a)).collect())
        .collect();
    PlaneGraph::from_rotation(rotation)
}

/// Replaces every vertex of degree `d >= 3` by a `d`-cycle.
pub fn truncate(g: &PlaneGraph) -> Result<PlaneGraph, GraphError> {
    let mut base = vec![0; g.vertex_count() + 1];
    for v in g.vertices() {
        base[v + 1] = base[v] + g.degree(v);
    }
    let t = |v: VertexId, i: usize| base[v] + i;
    let pos = |b: VertexId, a: VertexId| g.rotation(b).iter().position(|&w| w == a).unwrap();
    let mut faces = Vec::new();
    for f in g.faces() {
        let mut walk = Vec::new();
        for (a, b) in f.darts() {
            walk.push(t(a, pos(a, b)));
            walk.push(t(b, pos(b, a)));
        }
        faces.push(walk);
    }
    for v in g.vertices() {
        faces.push((0..g.degree(v)).rev().map(|i| t(v, i)).collect());
    }
    from_faces(base[g.vertex_count()], &faces)
}

/// Medial graph: one vertex per edge, adjacent when consecutive on a face.
/// Vertices of degree 1 and 2 contribute no face of their own.
pub fn medial(g: &PlaneGraph) -> Result<PlaneGraph, GraphError> {
    let edges: Vec<(VertexId, VertexId)> = g.edges();
    let id: HashMap<(VertexId, VertexId), usize> =
        edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let e = |a: VertexId, b: VertexId| id[&(a.min(b), a.max(b))];
    let mut faces = Vec::new();
    for f in g.faces() {
        let mut walk: Vec<usize> = f.darts().map(|(a, b)| e(a, b)).collect();
        walk.dedup();
        if walk.len() > 1 && walk.first() == walk.last() {
            walk.pop();
        }
        if walk.len() >= 3 {
            faces.push(walk);
        }
    }
    for v in g.vertices().filter(|&v| g.degree(v) >= 3) {
        faces.push(g.rotation(v).iter().rev().map(|&w| e(v, w)).collect());
    }
    from_faces(edges.len(), &faces)
}

/// Places a new vertex on every edge.
pub fn subdivide(g: &PlaneGraph) -> PlaneGraph {
    let n = g.vertex_count();
    let mut rotation = g.rotations().to_vec();
    for (u, v) in g.edges() {
        let w = rotation.len();
        for (a, b) in [(u, v), (v, u)] {
            let i = rotation[a].iter().position(|&x| x == b).unwrap();
            rotation[a][i] = w;
        }
        rotation.push(vec![u, v]);
    }
    debug_assert!(rotation.len() == n + g.edge_count());
    PlaneGraph::from_rotation(rotation).expect("subdivision is planar")
}

/// Adds a vertex inside `face` joined to every vertex of its walk. The
/// walk must be a cycle.
pub fn stack(g: &PlaneGraph, face: usize) -> PlaneGraph {
    let mut rotation = g.rotations().to_vec();
    let w = rotation.len();
    let walk = g.face(face).walk.clone();
    let m = walk.len();
    let mut hub = Vec::with_capacity(m);
    for j in 0..m {
        let (a, b) = (walk[(j + m - 1) % m], walk[j]);
        let i = rotation[b].iter().position(|&x| x == a).unwrap();
        rotation[b].insert(i + 1, w);
        hub.push(b);
    }
    hub.reverse();
    rotation.push(hub);
    PlaneGraph::from_rotation(rotation).expect("stacking keeps the embedding planar")
}

/// Side-by-side copies; vertices of `h` are shifted past those of `g`.
pub fn disjoint_union(g: &PlaneGraph, h: &PlaneGraph) -> PlaneGraph {
    let n = g.vertex_count();
    let mut rotation = g.rotations().to_vec();
    rotation.extend(
        h.rotations()
            .iter()
            .map(|l| l.iter().map(|&v| v + n).collect()),
    );
    PlaneGraph::from_rotation(rotation).expect("union of plane graphs")
}
