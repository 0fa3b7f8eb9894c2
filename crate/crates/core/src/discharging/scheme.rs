use std::fmt;

use serde::{Deserialize, Serialize, Serializer};

use super::scalar::ChargeScalar;
use super::DischargeError;
use crate::graph::{Adjacency, FaceId, PlaneGraph, VertexId};

/// Initial charge scheme.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Scheme {
    /// `w(v) = 2d(v) - 6`, `w(f) = d(f) - 6`; total `-12` per component.
    A,
    /// `w(v) = 3d(v) - 10`, `w(f) = 2d(f) - 10`; total `-20` per component.
    B,
}

impl Scheme {
    pub fn vertex_charge(self, d: usize) -> i64 {
        let d = d as i64;
        match self {
            Scheme::A => 2 * d - 6,
            Scheme::B => 3 * d - 10,
        }
    }

    pub fn face_charge(self, d: usize) -> i64 {
        let d = d as i64;
        match self {
            Scheme::A => d - 6,
            Scheme::B => 2 * d - 10,
        }
    }

    pub fn component_total(self) -> i64 {
        match self {
            Scheme::A => -12,
            Scheme::B => -20,
        }
    }
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Scheme::A => "A",
            Scheme::B => "B",
        })
    }
}

impl std::str::FromStr for Scheme {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "A" | "a" => Ok(Scheme::A),
            "B" | "b" => Ok(Scheme::B),
            _ => Err(format!("unknown charge scheme {s:?} (expected A or B)")),
        }
    }
}

/// A vertex or a face. Vertices sort before faces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Element {
    Vertex(VertexId),
    Face(FaceId),
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Vertex(v) => write!(f, "v{v}"),
            Element::Face(x) => write!(f, "f{x}"),
        }
    }
}

impl std::str::FromStr for Element {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || format!("bad element {s:?} (expected v<id> or f<id>)");
        let (kind, id) = s.split_at_checked(1).ok_or_else(bad)?;
        let id: usize = id.parse().map_err(|_| bad())?;
        match kind {
            "v" => Ok(Element::Vertex(id)),
            "f" => Ok(Element::Face(id)),
            _ => Err(bad()),
        }
    }
}

impl Serialize for Element {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(bound(serialize = ""))]
pub struct Transfer<S: ChargeScalar> {
    pub rule: String,
    pub source: Element,
    pub sink: Element,
    #[serde(serialize_with = "as_string")]
    pub amount: S,
}

/// Charges before and after discharging, with every transfer.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(bound(serialize = ""))]
pub struct ChargeLedger<S: ChargeScalar> {
    pub scheme: Scheme,
    pub rulesets: Vec<String>,
    #[serde(serialize_with = "all_as_string")]
    pub initial_vertex: Vec<S>,
    #[serde(serialize_with = "all_as_string")]
    pub initial_face: Vec<S>,
    pub transfers: Vec<Transfer<S>>,
    #[serde(serialize_with = "all_as_string")]
    pub final_vertex: Vec<S>,
    #[serde(serialize_with = "all_as_string")]
    pub final_face: Vec<S>,
}

fn as_string<S: ChargeScalar, Z: Serializer>(x: &S, s: Z) -> Result<Z::Ok, Z::Error> {
    s.collect_str(x)
}

fn all_as_string<S: ChargeScalar, Z: Serializer>(xs: &[S], s: Z) -> Result<Z::Ok, Z::Error> {
    s.collect_seq(xs.iter().map(|x| x.to_string()))
}

impl<S: ChargeScalar> ChargeLedger<S> {
    pub fn initial(&self, e: Element) -> &S {
        match e {
            Element::Vertex(v) => &self.initial_vertex[v],
            Element::Face(f) => &self.initial_face[f],
        }
    }

    pub fn final_charge(&self, e: Element) -> &S {
        match e {
            Element::Vertex(v) => &self.final_vertex[v],
            Element::Face(f) => &self.final_face[f],
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = Element> {
        let faces = self.initial_face.len();
        (0..self.initial_vertex.len())
            .map(Element::Vertex)
            .chain((0..faces).map(Element::Face))
    }

    pub fn initial_total(&self) -> S {
        sum(self.initial_vertex.iter().chain(&self.initial_face))
    }

    pub fn final_total(&self) -> S {
        sum(self.final_vertex.iter().chain(&self.final_face))
    }

    /// Sum of final charges per connected component.
    pub fn final_component_totals(&self, g: &PlaneGraph) -> Vec<S> {
        component_totals(g, &self.final_vertex, &self.final_face)
    }

    pub fn initial_component_totals(&self, g: &PlaneGraph) -> Vec<S> {
        component_totals(g, &self.initial_vertex, &self.initial_face)
    }
}

fn sum<'a, S: ChargeScalar>(xs: impl Iterator<Item = &'a S>) -> S {
    xs.fold(S::zero(), |acc, x| acc + x.clone())
}

fn component_totals<S: ChargeScalar>(g: &PlaneGraph, vs: &[S], fs: &[S]) -> Vec<S> {
    let mut out = vec![S::zero(); g.component_count()];
    for v in g.vertices() {
        let c = g.component_of(v);
        out[c] = out[c].clone() + vs[v].clone();
    }
    for f in g.faces() {
        out[f.component] = out[f.component].clone() + fs[f.id].clone();
    }
    out
}

/// Initial charges under `scheme`, checked against the per-component total.
pub fn initial_charges<S: ChargeScalar>(
    g: &PlaneGraph,
    scheme: Scheme,
) -> Result<ChargeLedger<S>, DischargeError> {
    let initial_vertex: Vec<S> = g
        .vertices()
        .map(|v| S::from_int(scheme.vertex_charge(g.degree(v))))
        .collect();
    let initial_face: Vec<S> = g
        .faces()
        .iter()
        .map(|f| S::from_int(scheme.face_charge(f.degree())))
        .collect();
    let expected = S::from_int(scheme.component_total());
    for (c, total) in component_totals(g, &initial_vertex, &initial_face)
        .into_iter()
        .enumerate()
    {
        if total != expected {
            return Err(DischargeError::TotalMismatch {
                component: c,
                expected: expected.to_string(),
                found: total.to_string(),
            });
        }
    }
    Ok(ChargeLedger {
        scheme,
        rulesets: Vec::new(),
        final_vertex: initial_vertex.clone(),
        final_face: initial_face.clone(),
        initial_vertex,
        initial_face,
        transfers: Vec::new(),
    })
}
