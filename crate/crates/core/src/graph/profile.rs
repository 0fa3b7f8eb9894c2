use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{Adjacency, PlaneGraph};

/// Degree condition in the usual plane-graph notation: `k` (exactly k),
/// `k+` (at least k), `k-` (2..=k), `k--` (1..=k), `lo..hi` (inclusive)
/// and `*` (anything).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DegreeCond {
    Exact(usize),
    AtLeast(usize),
    AtMost(usize),
    AtMostWithLeaves(usize),
    Range(usize, usize),
    Any,
}

impl DegreeCond {
    pub fn matches(self, d: usize) -> bool {
        match self {
            DegreeCond::Exact(k) => d == k,
            DegreeCond::AtLeast(k) => d >= k,
            DegreeCond::AtMost(k) => (2..=k).contains(&d),
            DegreeCond::AtMostWithLeaves(k) => (1..=k).contains(&d),
            DegreeCond::Range(lo, hi) => (lo..=hi).contains(&d),
            DegreeCond::Any => true,
        }
    }
}

impl fmt::Display for DegreeCond {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            DegreeCond::Exact(k) => write!(f, "{k}"),
            DegreeCond::AtLeast(k) => write!(f, "{k}+"),
            DegreeCond::AtMost(k) => write!(f, "{k}-"),
            DegreeCond::AtMostWithLeaves(k) => write!(f, "{k}--"),
            DegreeCond::Range(lo, hi) => write!(f, "{lo}..{hi}"),
            DegreeCond::Any => write!(f, "*"),
        }
    }
}

impl FromStr for DegreeCond {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let num = |t: &str| {
            t.parse::<usize>()
                .map_err(|_| format!("bad degree condition {s:?}"))
        };
        if s == "*" {
            Ok(DegreeCond::Any)
        } else if let Some((lo, hi)) = s.split_once("..") {
            Ok(DegreeCond::Range(num(lo)?, num(hi)?))
        } else if let Some(k) = s.strip_suffix("--") {
            Ok(DegreeCond::AtMostWithLeaves(num(k)?))
        } else if let Some(k) = s.strip_suffix('-') {
            Ok(DegreeCond::AtMost(num(k)?))
        } else if let Some(k) = s.strip_suffix('+') {
            Ok(DegreeCond::AtLeast(num(k)?))
        } else {
            Ok(DegreeCond::Exact(num(s)?))
        }
    }
}

impl Serialize for DegreeCond {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for DegreeCond {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(usize),
            Text(String),
        }
        match Raw::deserialize(d)? {
            Raw::Num(k) => Ok(DegreeCond::Exact(k)),
            Raw::Text(t) => t.parse().map_err(serde::de::Error::custom),
        }
    }
}

/// Degree table of a plane graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeProfile {
    pub vertex_degrees: Vec<usize>,
    pub face_degrees: Vec<usize>,
    pub max_degree: usize,
    pub min_degree: usize,
    /// `incident_faces[v][i]` = number of corners of `v` lying on an i-face.
    pub incident_faces: Vec<BTreeMap<usize, usize>>,
    /// `boundary_vertices[f][i]` = number of i-vertices on the walk of `f`.
    pub boundary_vertices: Vec<BTreeMap<usize, usize>>,
}

impl DegreeProfile {
    /// `f_i(v)`.
    pub fn faces_of_degree_at(&self, v: usize, i: usize) -> usize {
        self.incident_faces[v].get(&i).copied().unwrap_or(0)
    }

    /// `n_i(f)`.
    pub fn vertices_of_degree_on(&self, f: usize, i: usize) -> usize {
        self.boundary_vertices[f].get(&i).copied().unwrap_or(0)
    }

    pub fn vertex_is(&self, v: usize, cond: DegreeCond) -> bool {
        cond.matches(self.vertex_degrees[v])
    }

    pub fn face_is(&self, f: usize, cond: DegreeCond) -> bool {
        cond.matches(self.face_degrees[f])
    }
}

pub fn degree_profile(g: &PlaneGraph) -> DegreeProfile {
    let vertex_degrees: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let face_degrees: Vec<usize> = g.faces().iter().map(|f| f.degree()).collect();
    let incident_faces = g
        .vertices()
        .map(|v| {
            let mut m = BTreeMap::new();
            for &f in g.corner_faces(v) {
                *m.entry(face_degrees[f]).or_insert(0) += 1;
            }
            m
        })
        .collect();
    let boundary_vertices = g
        .faces()
        .iter()
        .map(|f| {
            let mut m = BTreeMap::new();
            for &v in &f.walk {
                *m.entry(vertex_degrees[v]).or_insert(0) += 1;
            }
            m
        })
        .collect();
    DegreeProfile {
        max_degree: g.max_degree(),
        min_degree: g.min_degree(),
        vertex_degrees,
        face_degrees,
        incident_faces,
        boundary_vertices,
    }
}
