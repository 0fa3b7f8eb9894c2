use std::collections::BTreeMap;
use std::path::Path;

use serde::Deserialize;

use super::{Adjacency, GraphError, PlaneGraph, VertexId};

/// On-disk graph: `{ "vertices": [..], "rotation": { "<v>": [..] } }`.
/// Unknown top-level keys (fixture metadata) are ignored.
#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
pub struct GraphFile {
    pub vertices: Vec<VertexId>,
    pub rotation: BTreeMap<VertexId, Vec<VertexId>>,
}

impl GraphFile {
    pub fn parse(text: &str) -> Result<Self, GraphError> {
        serde_json::from_str(text).map_err(|e| GraphError::Parse(e.to_string()))
    }

    pub fn from_graph(g: &PlaneGraph) -> Self {
        GraphFile {
            vertices: g.vertices().collect(),
            rotation: g.vertices().map(|v| (v, g.rotation(v).to_vec())).collect(),
        }
    }

    pub fn build(&self) -> Result<PlaneGraph, GraphError> {
        let n = self.vertices.len();
        let mut declared = vec![false; n];
        for &v in &self.vertices {
            if v >= n {
                return Err(GraphError::NonDenseVertexIds {
                    expected: n,
                    found: v,
                });
            }
            if declared[v] {
                return Err(GraphError::DuplicateVertex { vertex: v });
            }
            declared[v] = true;
        }
        let mut rotation = vec![Vec::new(); n];
        for (&v, list) in &self.rotation {
            if v >= n {
                return Err(GraphError::UnknownVertex { vertex: v });
            }
            rotation[v] = list.clone();
        }
        PlaneGraph::from_rotation(rotation)
    }
}

pub fn read_graph_file(path: &Path) -> Result<PlaneGraph, GraphError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| GraphError::Parse(format!("{}: {e}", path.display())))?;
    GraphFile::parse(&text)?.build()
}

fn int_list(xs: &[usize]) -> String {
    let parts: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

/// The `"vertices"` and `"rotation"` members, indented by two spaces and
/// without the enclosing braces. Shared with the fixture writer.
pub(crate) fn graph_members(g: &PlaneGraph) -> String {
    let vertices: Vec<usize> = g.vertices().collect();
    let mut out = format!("  \"vertices\": {},\n  \"rotation\": {{", int_list(&vertices));
    let n = g.vertex_count();
    if n == 0 {
        out.push('}');
        return out;
    }
    out.push('\n');
    for v in 0..n {
        out.push_str(&format!("    \"{v}\": {}", int_list(g.rotation(v))));
        out.push_str(if v + 1 < n { ",\n" } else { "\n" });
    }
    out.push_str("  }");
    out
}

/// Canonical serialization: one rotation entry per line in vertex order,
/// trailing newline.
pub fn write_graph_json(g: &PlaneGraph) -> String {
    format!("{{\n{}\n}}\n", graph_members(g))
}

const DOT_PALETTE: [&str; 12] = [
    "#e6194b", "#3cb44b", "#ffe119", "#4363d8", "#f58231", "#911eb4", "#46f0f0", "#f032e6",
    "#bcf60c", "#fabebe", "#008080", "#e6beff",
];

/// Graphviz text. With `colors`, vertices get a `color` label and a fill
/// cycling through a fixed palette.
pub fn write_dot<G: Adjacency + ?Sized>(g: &G, colors: Option<&[usize]>) -> String {
    let mut out = String::from("graph G {\n  node [style=filled, fillcolor=white];\n");
    for v in g.vertices() {
        match colors.and_then(|c| c.get(v)) {
            Some(&c) => out.push_str(&format!(
                "  {v} [label=\"{v}:{c}\", fillcolor=\"{}\"];\n",
                DOT_PALETTE[c % DOT_PALETTE.len()]
            )),
            None => out.push_str(&format!("  {v};\n")),
        }
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("  {u} -- {v};\n"));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_rebuilds_c4() {
        let text = r#"{"vertices":[0,1,2,3],"rotation":{"0":[1,3],"1":[2,0],"2":[3,1],"3":[0,2]}}"#;
        let g = GraphFile::parse(text).unwrap().build().unwrap();
        assert_eq!(g.face_count(), 2);
        let again = GraphFile::parse(&write_graph_json(&g)).unwrap().build().unwrap();
        assert_eq!(g, again);
    }

    #[test]
    fn dot_lists_every_edge_once() {
        let text = r#"{"vertices":[0,1,2],"rotation":{"0":[1,2],"1":[2,0],"2":[0,1]}}"#;
        let g = GraphFile::parse(text).unwrap().build().unwrap();
        let dot = write_dot(&g, Some(&[1, 2, 3]));
        assert_eq!(dot.matches(" -- ").count(), 3);
        assert!(dot.contains("label=\"2:3\""));
    }

    #[test]
    fn rejects_sparse_ids() {
        let text = r#"{"vertices":[0,5],"rotation":{"0":[5],"5":[0]}}"#;
        assert!(matches!(
            GraphFile::parse(text).unwrap().build(),
            Err(GraphError::NonDenseVertexIds { .. })
        ));
    }

    #[test]
    fn duplicate_neighbor_in_file() {
        let text = r#"{"vertices":[0,1,2,3],"rotation":{"0":[1,3,1],"1":[2,0],"2":[3,1],"3":[0,2]}}"#;
        assert!(matches!(
            GraphFile::parse(text).unwrap().build(),
            Err(GraphError::DuplicateNeighbor { .. })
        ));
    }
}
