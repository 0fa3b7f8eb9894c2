use std::collections::HashMap;

use serde::Serialize;

use crate::graph::{Adjacency, VertexId};

/// First problem found by the validators.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ColoringViolation {
    WrongLength { expected: usize, found: usize },
    ColorOutOfRange { vertex: VertexId, color: usize },
    Improper { u: VertexId, v: VertexId, color: usize },
    Unbalanced { smallest: usize, largest: usize },
    NotInList { vertex: VertexId, color: usize },
    OverCap { color: usize, count: usize, cap: usize },
}

impl std::fmt::Display for ColoringViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ColoringViolation::WrongLength { expected, found } => {
                write!(f, "{found} colors for {expected} vertices")
            }
            ColoringViolation::ColorOutOfRange { vertex, color } => {
                write!(f, "vertex {vertex} has color {color} outside the range")
            }
            ColoringViolation::Improper { u, v, color } => {
                write!(f, "edge {u}-{v} has both ends colored {color}")
            }
            ColoringViolation::Unbalanced { smallest, largest } => {
                write!(f, "class sizes range from {smallest} to {largest}")
            }
            ColoringViolation::NotInList { vertex, color } => {
                write!(f, "vertex {vertex} colored {color}, not in its list")
            }
            ColoringViolation::OverCap { color, count, cap } => {
                write!(f, "color {color} used {count} times, cap {cap}")
            }
        }
    }
}

fn proper<G: Adjacency + ?Sized>(g: &G, colors: &[usize]) -> Result<(), ColoringViolation> {
    if colors.len() != g.vertex_count() {
        return Err(ColoringViolation::WrongLength {
            expected: g.vertex_count(),
            found: colors.len(),
        });
    }
    for (u, v) in g.edges() {
        if colors[u] == colors[v] {
            return Err(ColoringViolation::Improper {
                u,
                v,
                color: colors[u],
            });
        }
    }
    Ok(())
}

/// Checks that `colors` (values `1..=k`) is proper and every class size
/// is `⌊n/k⌋` or `⌈n/k⌉`.
pub fn validate_coloring<G: Adjacency + ?Sized>(
    g: &G,
    colors: &[usize],
    k: usize,
) -> Result<(), ColoringViolation> {
    proper(g, colors)?;
    let mut sizes = vec![0usize; k];
    for (v, &c) in colors.iter().enumerate() {
        if c == 0 || c > k {
            return Err(ColoringViolation::ColorOutOfRange { vertex: v, color: c });
        }
        sizes[c - 1] += 1;
    }
    let smallest = sizes.iter().copied().min().unwrap_or(0);
    let largest = sizes.iter().copied().max().unwrap_or(0);
    if largest > smallest + 1 {
        return Err(ColoringViolation::Unbalanced { smallest, largest });
    }
    Ok(())
}

/// Checks properness, list membership and that no color is used more than
/// `⌈n/k⌉` times.
pub fn validate_list_coloring<G: Adjacency + ?Sized>(
    g: &G,
    colors: &[usize],
    lists: &[Vec<usize>],
    k: usize,
) -> Result<(), ColoringViolation> {
    proper(g, colors)?;
    for (v, &c) in colors.iter().enumerate() {
        if !lists[v].contains(&c) {
            return Err(ColoringViolation::NotInList { vertex: v, color: c });
        }
    }
    let cap = colors.len().div_ceil(k.max(1));
    let mut usage: HashMap<usize, usize> = HashMap::new();
    for &c in colors {
        *usage.entry(c).or_default() += 1;
    }
    let mut over: Vec<_> = usage.into_iter().filter(|&(_, n)| n > cap).collect();
    over.sort_unstable();
    if let Some(&(color, count)) = over.first() {
        return Err(ColoringViolation::OverCap { color, count, cap });
    }
    Ok(())
}
