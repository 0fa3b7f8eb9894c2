use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use super::pattern::{patterns, DegreePattern};
use crate::graph::{Adjacency, FaceId, PlaneGraph, VertexId};

fn special_face_patterns() -> &'static [DegreePattern] {
    static P: OnceLock<Vec<DegreePattern>> = OnceLock::new();
    P.get_or_init(|| patterns(&["3,3,5+", "3,4,4", "3,4,5", "3,4,6"]))
}

fn bad_face_patterns() -> &'static [DegreePattern] {
    static P: OnceLock<Vec<DegreePattern>> = OnceLock::new();
    P.get_or_init(|| patterns(&["3,3,5,5+", "3,4,5-,6-"]))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum VertexKind {
    #[serde(rename = "simple-3")]
    Simple3,
    #[serde(rename = "special-3")]
    Special3,
    #[serde(rename = "simple-2")]
    Simple2,
    #[serde(rename = "special-2")]
    Special2,
    #[serde(rename = "other")]
    Other,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FaceProfile {
    pub face: FaceId,
    pub degree: usize,
    /// Degrees of the boundary walk, in walk order.
    pub vertex_degrees: Vec<usize>,
    pub is_special: bool,
    pub is_bad: bool,
    /// Face across each boundary edge (once per common edge).
    pub adjacent_face_ids: Vec<FaceId>,
    pub has_two_vertex: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VertexProfile {
    pub vertex: VertexId,
    pub degree: usize,
    pub kind: VertexKind,
    /// Adjacent simple 3-vertices.
    pub n3: usize,
    /// Adjacent simple 2-vertices.
    pub n2: usize,
    /// Adjacent vertices of degree at most 3.
    pub low_neighbors: usize,
    pub is_bad_three: bool,
    pub weakly_incident_bad_faces: Vec<FaceId>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub faces: Vec<FaceProfile>,
    pub vertices: Vec<VertexProfile>,
}

impl Classification {
    pub fn special_faces(&self) -> Vec<FaceId> {
        self.faces
            .iter()
            .filter(|f| f.is_special)
            .map(|f| f.face)
            .collect()
    }

    pub fn bad_faces(&self) -> Vec<FaceId> {
        self.faces
            .iter()
            .filter(|f| f.is_bad)
            .map(|f| f.face)
            .collect()
    }
}

pub fn is_special_degree_vector(degrees: &[usize]) -> bool {
    degrees.len() == 3 && special_face_patterns().iter().any(|p| p.matches(degrees))
}

pub fn is_bad_degree_vector(degrees: &[usize]) -> bool {
    degrees.len() == 4 && bad_face_patterns().iter().any(|p| p.matches(degrees))
}

pub fn classify_faces_and_vertices(g: &PlaneGraph) -> Classification {
    let adjacency = g.face_adjacency();
    let faces: Vec<FaceProfile> = g
        .faces()
        .iter()
        .map(|f| {
            let vertex_degrees: Vec<usize> = f.walk.iter().map(|&v| g.degree(v)).collect();
            FaceProfile {
                face: f.id,
                degree: f.degree(),
                is_special: is_special_degree_vector(&vertex_degrees),
                is_bad: is_bad_degree_vector(&vertex_degrees),
                has_two_vertex: vertex_degrees.contains(&2),
                vertex_degrees,
                adjacent_face_ids: adjacency[f.id].clone(),
            }
        })
        .collect();

    let n = g.vertex_count();
    let mut on_special = vec![false; n];
    let mut bad_three = vec![false; n];
    for fp in &faces {
        for &v in &g.face(fp.face).walk {
            if fp.is_special {
                on_special[v] = true;
            }
            if fp.is_bad && g.degree(v) == 3 {
                bad_three[v] = true;
            }
        }
    }

    let kind: Vec<VertexKind> = g
        .vertices()
        .map(|v| match g.degree(v) {
            3 if on_special[v] => VertexKind::Special3,
            3 => VertexKind::Simple3,
            2 if g.neighbors(v).iter().any(|&w| (3..=4).contains(&g.degree(w))) => {
                VertexKind::Special2
            }
            2 => VertexKind::Simple2,
            _ => VertexKind::Other,
        })
        .collect();

    let mut weak: Vec<Vec<FaceId>> = vec![Vec::new(); n];
    for fp in faces.iter().filter(|f| f.is_bad) {
        let face = g.face(fp.face);
        for &w in &face.walk {
            if g.degree(w) != 3 {
                continue;
            }
            for &v in g.neighbors(w) {
                if !face.contains_vertex(v) && !weak[v].contains(&fp.face) {
                    weak[v].push(fp.face);
                }
            }
        }
    }

    let vertices = g
        .vertices()
        .map(|v| {
            let nbrs = g.neighbors(v);
            let mut weakly = std::mem::take(&mut weak[v]);
            weakly.sort_unstable();
            VertexProfile {
                vertex: v,
                degree: g.degree(v),
                kind: kind[v],
                n3: nbrs.iter().filter(|&&w| kind[w] == VertexKind::Simple3).count(),
                n2: nbrs.iter().filter(|&&w| kind[w] == VertexKind::Simple2).count(),
                low_neighbors: nbrs.iter().filter(|&&w| g.degree(w) <= 3).count(),
                is_bad_three: bad_three[v],
                weakly_incident_bad_faces: weakly,
            }
        })
        .collect();

    Classification { faces, vertices }
}
