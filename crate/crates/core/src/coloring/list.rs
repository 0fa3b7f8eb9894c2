use std::collections::{BTreeMap, BTreeSet};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::ColoringError;
use crate::graph::{Adjacency, VertexId};

/// `lists[v]` holds exactly `k` distinct colors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ListAssignment {
    pub k: usize,
    pub lists: Vec<Vec<usize>>,
}

impl ListAssignment {
    pub fn new(k: usize, lists: Vec<Vec<usize>>) -> Result<Self, ColoringError> {
        for (v, l) in lists.iter().enumerate() {
            let distinct: BTreeSet<_> = l.iter().collect();
            if l.len() != k || distinct.len() != k {
                return Err(ColoringError::NotUniform {
                    vertex: v,
                    size: distinct.len(),
                    k,
                });
            }
        }
        Ok(ListAssignment { k, lists })
    }

    /// Every vertex gets `{1, .., k}`.
    pub fn identical(n: usize, k: usize) -> Self {
        ListAssignment {
            k,
            lists: vec![(1..=k).collect(); n],
        }
    }

    /// Restriction to `kept` (old ids, in new-id order).
    pub fn restrict(&self, kept: &[VertexId]) -> Self {
        ListAssignment {
            k: self.k,
            lists: kept.iter().map(|&v| self.lists[v].clone()).collect(),
        }
    }

    /// Parses `{"<v>": [colors], ..}`; every vertex `0..n` must appear.
    pub fn from_json(text: &str, n: usize) -> Result<Self, ColoringError> {
        let raw: BTreeMap<VertexId, Vec<usize>> =
            serde_json::from_str(text).map_err(|e| ColoringError::BadLists(e.to_string()))?;
        let mut lists = vec![None; n];
        for (v, l) in raw {
            if v >= n {
                return Err(ColoringError::BadLists(format!("vertex {v} not in graph")));
            }
            lists[v] = Some(l);
        }
        let lists: Vec<Vec<usize>> = lists
            .into_iter()
            .enumerate()
            .map(|(v, l)| l.ok_or_else(|| ColoringError::BadLists(format!("no list for {v}"))))
            .collect::<Result<_, _>>()?;
        let k = lists.first().map_or(0, |l| l.len());
        ListAssignment::new(k, lists)
    }
}

/// Uniform random `k`-subsets of `{1, .., palette}`, one per vertex, from a
/// seeded ChaCha8 stream. Each list is sorted.
pub fn random_uniform_lists(n: usize, k: usize, palette: usize, seed: u64) -> ListAssignment {
    assert!(k <= palette, "palette smaller than list size");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let lists = (0..n)
        .map(|_| {
            let mut l: Vec<usize> = rand::seq::index::sample(&mut rng, palette, k)
                .into_iter()
                .map(|i| i + 1)
                .collect();
            l.sort_unstable();
            l
        })
        .collect();
    ListAssignment { k, lists }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EquitableListColoring {
    pub colors: Vec<usize>,
    pub usage: BTreeMap<usize, usize>,
    /// `⌈n / k⌉`.
    pub cap: usize,
}

impl EquitableListColoring {
    pub fn from_colors(colors: Vec<usize>, k: usize) -> Self {
        let mut usage = BTreeMap::new();
        for &c in &colors {
            *usage.entry(c).or_insert(0) += 1;
        }
        EquitableListColoring {
            cap: colors.len().div_ceil(k.max(1)),
            colors,
            usage,
        }
    }
}

/// Exhaustive search for a proper coloring from the lists using each
/// color at most `⌈n / k⌉` times.
pub fn exact_list_coloring<G: Adjacency + ?Sized>(
    g: &G,
    lists: &ListAssignment,
    limit: usize,
) -> Result<Option<EquitableListColoring>, ColoringError> {
    let n = g.vertex_count();
    if lists.lists.len() != n {
        return Err(ColoringError::BadLists(format!(
            "{} lists for {n} vertices",
            lists.lists.len()
        )));
    }
    if n > limit && lists.k < n {
        return Err(ColoringError::SizeLimit { n, limit });
    }
    let cap = n.div_ceil(lists.k.max(1));
    let mut colors = vec![0; n];
    let mut usage: BTreeMap<usize, usize> = BTreeMap::new();
    if list_search(g, lists, cap, &mut colors, &mut usage, n) {
        Ok(Some(EquitableListColoring::from_colors(colors, lists.k)))
    } else {
        Ok(None)
    }
}

fn options<G: Adjacency + ?Sized>(
    g: &G,
    lists: &ListAssignment,
    cap: usize,
    colors: &[usize],
    usage: &BTreeMap<usize, usize>,
    v: VertexId,
) -> Vec<usize> {
    lists.lists[v]
        .iter()
        .copied()
        .filter(|c| usage.get(c).copied().unwrap_or(0) < cap)
        .filter(|&c| g.neighbors(v).iter().all(|&w| colors[w] != c))
        .collect()
}

fn list_search<G: Adjacency + ?Sized>(
    g: &G,
    lists: &ListAssignment,
    cap: usize,
    colors: &mut Vec<usize>,
    usage: &mut BTreeMap<usize, usize>,
    left: usize,
) -> bool {
    if left == 0 {
        return true;
    }
    // most constrained uncolored vertex, lowest id on ties
    let mut best: Option<(usize, VertexId, Vec<usize>)> = None;
    for v in g.vertices() {
        if colors[v] != 0 {
            continue;
        }
        let opts = options(g, lists, cap, colors, usage, v);
        if best.as_ref().is_none_or(|b| opts.len() < b.0) {
            let len = opts.len();
            best = Some((len, v, opts));
            if len == 0 {
                break;
            }
        }
    }
    let (_, v, opts) = best.expect("an uncolored vertex remains");
    for c in opts {
        colors[v] = c;
        *usage.entry(c).or_insert(0) += 1;
        if list_search(g, lists, cap, colors, usage, left - 1) {
            return true;
        }
        *usage.get_mut(&c).expect("counted") -= 1;
        colors[v] = 0;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::SimpleGraph;

    #[test]
    fn random_lists_are_uniform_and_reproducible() {
        let a = random_uniform_lists(10, 7, 21, 5);
        let b = random_uniform_lists(10, 7, 21, 5);
        assert_eq!(a, b);
        assert!(ListAssignment::new(7, a.lists.clone()).is_ok());
        assert!(a.lists.iter().flatten().all(|&c| (1..=21).contains(&c)));
        assert_ne!(a, random_uniform_lists(10, 7, 21, 6));
    }

    #[test]
    fn non_uniform_rejected() {
        assert!(matches!(
            ListAssignment::new(2, vec![vec![1, 2], vec![3, 3]]),
            Err(ColoringError::NotUniform { vertex: 1, .. })
        ));
    }

    #[test]
    fn triangle_with_two_colors_fails() {
        let k3 = SimpleGraph::complete(3);
        let lists = ListAssignment::identical(3, 2);
        assert!(exact_list_coloring(&k3, &lists, 20).unwrap().is_none());
        let lists = ListAssignment::identical(3, 3);
        assert!(exact_list_coloring(&k3, &lists, 20).unwrap().is_some());
    }
}
