//! Fixture corpus: generated families, the on-disk fixture format and
//! re-verification of recorded properties.

mod build;
mod generators;
mod random;

use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use build::{
    attach_leaves, attach_leaves_in_face, disjoint_union, dual, forest, from_faces,
    from_inner_faces, medial, stack, subdivide, truncate,
};
pub use generators::{Declared, Family, Solid};
pub use random::random_plane_graph;

use crate::degeneracy::degeneracy_ordering;
use crate::graph::{graph_members, Adjacency, GraphError, GraphFile, PlaneGraph};
use crate::structure::class_membership;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CorpusError {
    #[error("bad generator parameters: {0}")]
    BadParams(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("fixture {fixture}: {property} is {found}, expected {expected}")]
    ExpectationFailed {
        fixture: String,
        property: String,
        expected: String,
        found: String,
    },
    #[error("malformed fixture: {0}")]
    Parse(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    Generated,
    Curated,
}

/// Recorded properties of a fixture graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expected {
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub components: usize,
    pub member: bool,
    pub min_degree: usize,
    pub max_degree: usize,
    pub degeneracy: usize,
}

impl Expected {
    pub fn measure(g: &PlaneGraph) -> Self {
        Expected {
            vertices: g.vertex_count(),
            edges: g.edge_count(),
            faces: g.face_count(),
            components: g.component_count(),
            member: class_membership(g).is_member,
            min_degree: g.min_degree(),
            max_degree: g.max_degree(),
            degeneracy: degeneracy_ordering(g).degeneracy,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fixture {
    pub name: String,
    pub provenance: Provenance,
    /// Family expression the graph was generated from.
    pub generator: Option<String>,
    pub expected: Expected,
    pub graph: PlaneGraph,
}

#[derive(Deserialize)]
struct Header {
    name: String,
    provenance: Provenance,
    #[serde(default)]
    generator: Option<String>,
    expected: Expected,
}

fn mismatch(name: &str, property: &str, expected: impl ToString, found: impl ToString) -> CorpusError {
    CorpusError::ExpectationFailed {
        fixture: name.to_string(),
        property: property.to_string(),
        expected: expected.to_string(),
        found: found.to_string(),
    }
}

/// Builds `family`, measures it and checks the measurements against what
/// the family declares.
pub fn generate_fixture(name: &str, family: &Family) -> Result<Fixture, CorpusError> {
    let graph = family.build()?;
    let expected = Expected::measure(&graph);
    let declared = family.declared();
    if let Some(m) = declared.member {
        if m != expected.member {
            return Err(mismatch(name, "member", m, expected.member));
        }
    }
    if let Some(d) = declared.degeneracy {
        if d != expected.degeneracy {
            return Err(mismatch(name, "degeneracy", d, expected.degeneracy));
        }
    }
    Ok(Fixture {
        name: name.to_string(),
        provenance: Provenance::Generated,
        generator: Some(family.to_string()),
        expected,
        graph,
    })
}

impl Fixture {
    /// Recomputes every recorded property; for generated fixtures also
    /// rebuilds the graph from its family.
    pub fn verify(&self) -> Result<(), CorpusError> {
        let found = Expected::measure(&self.graph);
        if found != self.expected {
            let want = serde_json::to_string(&self.expected).unwrap();
            let got = serde_json::to_string(&found).unwrap();
            return Err(mismatch(&self.name, "expected block", want, got));
        }
        if let Some(spec) = &self.generator {
            let family: Family = spec.parse()?;
            if family.build()? != self.graph {
                return Err(mismatch(&self.name, "graph", spec, "a different rotation system"));
            }
        }
        Ok(())
    }

    /// Canonical text form; parsing and writing again reproduces it byte
    /// for byte.
    pub fn to_json(&self) -> String {
        let mut out = String::from("{\n");
        out.push_str(&format!("  \"name\": {},\n", serde_json::to_string(&self.name).unwrap()));
        out.push_str(&format!(
            "  \"provenance\": {},\n",
            serde_json::to_string(&self.provenance).unwrap()
        ));
        if let Some(g) = &self.generator {
            out.push_str(&format!("  \"generator\": {},\n", serde_json::to_string(g).unwrap()));
        }
        out.push_str(&format!(
            "  \"expected\": {},\n",
            serde_json::to_string(&self.expected).unwrap()
        ));
        out.push_str(&graph_members(&self.graph));
        out.push_str("\n}\n");
        out
    }

    pub fn parse(text: &str) -> Result<Self, CorpusError> {
        let header: Header =
            serde_json::from_str(text).map_err(|e| CorpusError::Parse(e.to_string()))?;
        let graph = GraphFile::parse(text)?.build()?;
        Ok(Fixture {
            name: header.name,
            provenance: header.provenance,
            generator: header.generator,
            expected: header.expected,
            graph,
        })
    }
}

/// The shipped corpus, in a fixed order.
pub fn standard_families() -> Vec<(&'static str, &'static str)> {
    vec![
        ("empty-3", "empty(3)"),
        ("path-8", "path(8)"),
        ("cycle-3", "cycle(3)"),
        ("cycle-11", "cycle(11)"),
        ("cycle-7", "cycle(7)"),
        ("cycle-9", "cycle(9)"),
        ("star-6", "star(6)"),
        ("star-9", "star(9)"),
        ("spider-3-3-2", "spider(3,3,2)"),
        ("caterpillar-4-2", "caterpillar(4,2)"),
        ("binary-tree-3", "binary-tree(3)"),
        ("k26", "k2n(6)"),
        ("k25", "k2n(5)"),
        ("friendship-3", "friendship(3)"),
        ("friendship-4", "friendship(4)"),
        ("hexpatch-1x3", "hexpatch(1,3)"),
        ("hexpatch-2x2", "hexpatch(2,2)"),
        ("hexpatch-3x3", "hexpatch(3,3)"),
        ("kagome-2x2", "kagome(2,2)"),
        ("kagome-3x3", "kagome(3,3)"),
        ("dodecahedron", "platonic(dodecahedron)"),
        ("truncated-tetrahedron", "truncated(tetrahedron)"),
        ("truncated-octahedron", "truncated(octahedron)"),
        ("subdivided-dodecahedron", "subdivided(dodecahedron)"),
        ("subdivided-octahedron", "subdivided(octahedron)"),
        ("c5-plus-p4", "union(cycle(5),path(4))"),
        ("h-gadget", "h-gadget"),
        ("special-344", "special-gadget(3,4,4)"),
        ("badface-3355", "badface-gadget(3,3,5,5)"),
        ("badface-3455", "badface-gadget(3,4,5,5)"),
        ("quad-3366", "padded-face(3,3,6,6)"),
        ("triangle-444", "shielded-triangle(4)"),
        ("triangle-555", "shielded-triangle(5)"),
        ("tetrahedron", "platonic(tetrahedron)"),
        ("cube", "platonic(cube)"),
        ("octahedron", "platonic(octahedron)"),
        ("icosahedron", "platonic(icosahedron)"),
        ("wheel-6", "wheel(6)"),
        ("prism-3", "prism(3)"),
        ("prism-5", "prism(5)"),
        ("grid-3x3", "grid(3,3)"),
        ("grid-2x4", "grid(2,4)"),
        ("stacked-3", "stacked(3)"),
    ]
}

pub fn standard_corpus() -> Result<Vec<Fixture>, CorpusError> {
    standard_families()
        .into_iter()
        .map(|(name, spec)| generate_fixture(name, &spec.parse()?))
        .collect()
}

/// Every `*.json` fixture in `dir`, sorted by file name.
pub fn load_fixture_dir(dir: &Path) -> Result<Vec<Fixture>, CorpusError> {
    let mut paths: Vec<_> = std::fs::read_dir(dir)
        .map_err(|e| CorpusError::Parse(format!("{}: {e}", dir.display())))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    paths.sort();
    paths
        .iter()
        .map(|p| {
            let text = std::fs::read_to_string(p)
                .map_err(|e| CorpusError::Parse(format!("{}: {e}", p.display())))?;
            Fixture::parse(&text)
        })
        .collect()
}

/// Fixtures shipped with the crate.
pub fn shipped_fixture_dir() -> &'static Path {
    Path::new(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixture_text_round_trips() {
        let f = generate_fixture("cycle-5", &Family::Cycle(5)).unwrap();
        let text = f.to_json();
        let back = Fixture::parse(&text).unwrap();
        assert_eq!(back, f);
        assert_eq!(back.to_json(), text);
        back.verify().unwrap();
    }

    #[test]
    fn wrong_declaration_is_reported() {
        let mut f = generate_fixture("cycle-5", &Family::Cycle(5)).unwrap();
        f.expected.member = false;
        assert!(matches!(f.verify(), Err(CorpusError::ExpectationFailed { .. })));
    }
}
