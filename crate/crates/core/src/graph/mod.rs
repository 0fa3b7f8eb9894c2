//! Graph data model: an abstract adjacency view, a plain simple graph and
//! the embedded [`PlaneGraph`] with traced faces.

mod io;
mod plane;
mod profile;

use std::ops::Range;

use thiserror::Error;

pub(crate) use io::graph_members;
pub use io::{read_graph_file, write_dot, write_graph_json, GraphFile};
pub use plane::{Face, FaceId, PlaneGraph};
pub use profile::{degree_profile, DegreeCond, DegreeProfile};

pub type VertexId = usize;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {u} lists {v} as a neighbor but {v} does not list {u}")]
    NonSymmetricAdjacency { u: VertexId, v: VertexId },
    #[error("vertex {vertex} lists neighbor {neighbor} more than once")]
    DuplicateNeighbor { vertex: VertexId, neighbor: VertexId },
    #[error("vertex {vertex} lists itself as a neighbor")]
    SelfLoop { vertex: VertexId },
    #[error("vertex {vertex} is referenced but not declared")]
    UnknownVertex { vertex: VertexId },
    #[error("vertex {vertex} is declared more than once")]
    DuplicateVertex { vertex: VertexId },
    #[error("vertex ids must be 0..{expected}, found {found}")]
    NonDenseVertexIds { expected: usize, found: VertexId },
    #[error(
        "component {component}: |V|-|E|+|F| = {vertices}-{edges}+{faces} != 2 (rotation is not a sphere embedding)"
    )]
    EulerViolation {
        component: usize,
        vertices: usize,
        edges: usize,
        faces: usize,
    },
    #[error("malformed graph file: {0}")]
    Parse(String),
}

/// Read-only adjacency access shared by plane and abstract graphs.
pub trait Adjacency {
    fn vertex_count(&self) -> usize;

    fn neighbors(&self, v: VertexId) -> &[VertexId];

    fn degree(&self, v: VertexId) -> usize {
        self.neighbors(v).len()
    }

    fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.neighbors(u).contains(&v)
    }

    fn edge_count(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).sum::<usize>() / 2
    }

    fn vertices(&self) -> Range<VertexId> {
        0..self.vertex_count()
    }

    fn max_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).max().unwrap_or(0)
    }

    fn min_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Undirected edges as `(u, v)` with `u < v`, in lexicographic order.
    fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in self.vertices() {
            for &v in self.neighbors(u) {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Connected component index per vertex, numbered in order of the
    /// smallest vertex they contain.
    fn components(&self) -> Vec<usize> {
        let n = self.vertex_count();
        let mut comp = vec![usize::MAX; n];
        let mut next = 0;
        let mut stack = Vec::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = next;
            stack.push(s);
            while let Some(u) = stack.pop() {
                for &w in self.neighbors(u) {
                    if comp[w] == usize::MAX {
                        comp[w] = next;
                        stack.push(w);
                    }
                }
            }
            next += 1;
        }
        comp
    }
}

/// Undirected simple graph without an embedding. Neighbor lists are sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    adj: Vec<Vec<VertexId>>,
}

impl SimpleGraph {
    pub fn empty(n: usize) -> Self {
        SimpleGraph {
            adj: vec![Vec::new(); n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Self, GraphError> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::UnknownVertex { vertex: u });
            }
            if v >= n {
                return Err(GraphError::UnknownVertex { vertex: v });
            }
            if u == v {
                return Err(GraphError::SelfLoop { vertex: u });
            }
            if adj[u].contains(&v) {
                return Err(GraphError::DuplicateNeighbor {
                    vertex: u,
                    neighbor: v,
                });
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(SimpleGraph { adj })
    }

    pub fn complete(n: usize) -> Self {
        let edges: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Self::from_edges(n, &edges).expect("complete graph is simple")
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let edges: Vec<_> = (0..a)
            .flat_map(|u| (a..a + b).map(move |v| (u, v)))
            .collect();
        Self::from_edges(a + b, &edges).expect("complete bipartite graph is simple")
    }

    pub fn from_adjacency<G: Adjacency + ?Sized>(g: &G) -> Self {
        let adj = g
            .vertices()
            .map(|v| {
                let mut list = g.neighbors(v).to_vec();
                list.sort_unstable();
                list
            })
            .collect();
        SimpleGraph { adj }
    }
}

impl Adjacency for SimpleGraph {
    fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v]
    }
}

/// Deletes `removed` from `g`, relabelling the survivors densely in
/// increasing order. Returns the subgraph and, for each new id, the old id.
pub fn delete_vertices<G: Adjacency + ?Sized>(
    g: &G,
    removed: &[VertexId],
) -> (SimpleGraph, Vec<VertexId>) {
    let n = g.vertex_count();
    let mut gone = vec![false; n];
    for &v in removed {
        gone[v] = true;
    }
    let kept: Vec<VertexId> = (0..n).filter(|&v| !gone[v]).collect();
    let mut new_id = vec![usize::MAX; n];
    for (i, &v) in kept.iter().enumerate() {
        new_id[v] = i;
    }
    let adj = kept
        .iter()
        .map(|&v| {
            let mut list: Vec<_> = g
                .neighbors(v)
                .iter()
                .filter(|&&w| !gone[w])
                .map(|&w| new_id[w])
                .collect();
            list.sort_unstable();
            list
        })
        .collect();
    (SimpleGraph { adj }, kept)
}
