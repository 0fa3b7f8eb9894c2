use std::collections::BTreeSet;

use serde::Serialize;

use super::dsl::Configuration;
use super::matcher::match_configuration;
use super::ConfigError;
use crate::graph::{Adjacency, PlaneGraph, VertexId};

/// Ordered vertices `x_1..x_k` (`vertices[i - 1]` is `x_i`) with
/// `|N(x_i) - S| <= k - i` for every `i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReducibleSet {
    pub k: usize,
    pub vertices: Vec<VertexId>,
    /// `outside_counts[i - 1] = |N(x_i) - S|`.
    pub outside_counts: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ReduceFailure {
    WrongSize { expected: usize, found: usize },
    DuplicateVertex { vertex: VertexId },
    UnknownVertex { vertex: VertexId },
    /// `x_index` has `count` neighbors outside S, more than `bound = k - index`.
    Violation {
        index: usize,
        vertex: VertexId,
        count: usize,
        bound: usize,
    },
}

impl std::fmt::Display for ReduceFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ReduceFailure::WrongSize { expected, found } => {
                write!(f, "expected {expected} vertices, got {found}")
            }
            ReduceFailure::DuplicateVertex { vertex } => write!(f, "vertex {vertex} repeated"),
            ReduceFailure::UnknownVertex { vertex } => write!(f, "vertex {vertex} not in graph"),
            ReduceFailure::Violation {
                index,
                vertex,
                count,
                bound,
            } => write!(
                f,
                "x_{index} = {vertex} has {count} neighbors outside S, more than {bound}"
            ),
        }
    }
}

fn outside_counts<G: Adjacency + ?Sized>(g: &G, set: &[VertexId]) -> Vec<usize> {
    let inside: BTreeSet<VertexId> = set.iter().copied().collect();
    set.iter()
        .map(|&v| g.neighbors(v).iter().filter(|w| !inside.contains(w)).count())
        .collect()
}

/// Checks `|N(x_i) - S| <= k - i` for `order = [x_1, .., x_k]`.
pub fn verify_reducible<G: Adjacency + ?Sized>(
    g: &G,
    order: &[VertexId],
    k: usize,
) -> Result<ReducibleSet, ReduceFailure> {
    if order.len() != k {
        return Err(ReduceFailure::WrongSize {
            expected: k,
            found: order.len(),
        });
    }
    let mut seen = BTreeSet::new();
    for &v in order {
        if v >= g.vertex_count() {
            return Err(ReduceFailure::UnknownVertex { vertex: v });
        }
        if !seen.insert(v) {
            return Err(ReduceFailure::DuplicateVertex { vertex: v });
        }
    }
    let counts = outside_counts(g, order);
    for (i, &c) in counts.iter().enumerate() {
        let index = i + 1;
        if c > k - index {
            return Err(ReduceFailure::Violation {
                index,
                vertex: order[i],
                count: c,
                bound: k - index,
            });
        }
    }
    Ok(ReducibleSet {
        k,
        vertices: order.to_vec(),
        outside_counts: counts,
    })
}

/// Seed entry: a vertex pinned to index `i` (1-based) of `x_1..x_k`.
pub type SeedEntry = (usize, VertexId);

/// Fills the unpinned positions from the highest index down, each time
/// taking a vertex of minimum degree in `G` minus everything chosen so far
/// (all seed vertices count as chosen from the start). Ties go to the
/// lowest id. Returns `[x_1, .., x_k]`.
pub fn complete_seed<G: Adjacency + ?Sized>(
    g: &G,
    seed: &[SeedEntry],
    k: usize,
) -> Result<Vec<VertexId>, ConfigError> {
    let n = g.vertex_count();
    if seed.len() > k {
        return Err(ConfigError::SeedTooLarge {
            seed: seed.len(),
            k,
        });
    }
    if n < k {
        return Err(ConfigError::GraphTooSmall { n, k });
    }
    let mut slot = vec![None; k + 1];
    let mut chosen = vec![false; n];
    for &(i, v) in seed {
        if i == 0 || i > k {
            return Err(ConfigError::BadSeed(format!("index {i} outside 1..={k}")));
        }
        if v >= n {
            return Err(ConfigError::BadSeed(format!("vertex {v} not in graph")));
        }
        if slot[i].is_some() {
            return Err(ConfigError::BadSeed(format!("index {i} pinned twice")));
        }
        if chosen[v] {
            return Err(ConfigError::BadSeed(format!("vertex {v} pinned twice")));
        }
        slot[i] = Some(v);
        chosen[v] = true;
    }
    let mut deg: Vec<usize> = (0..n)
        .map(|v| g.neighbors(v).iter().filter(|&&w| !chosen[w]).count())
        .collect();
    for i in (1..=k).rev() {
        if slot[i].is_some() {
            continue;
        }
        let v = (0..n)
            .filter(|&v| !chosen[v])
            .min_by_key(|&v| (deg[v], v))
            .expect("n >= k leaves a vertex");
        slot[i] = Some(v);
        chosen[v] = true;
        for &w in g.neighbors(v) {
            deg[w] -= 1;
        }
    }
    Ok(slot[1..].iter().map(|s| s.expect("filled")).collect())
}

/// Pins `top[j]` to `x_{k-j}` and completes.
pub fn complete_top_seed<G: Adjacency + ?Sized>(
    g: &G,
    top: &[VertexId],
    k: usize,
) -> Result<Vec<VertexId>, ConfigError> {
    if top.len() > k {
        return Err(ConfigError::SeedTooLarge { seed: top.len(), k });
    }
    let seed: Vec<SeedEntry> = top.iter().enumerate().map(|(j, &v)| (k - j, v)).collect();
    complete_seed(g, &seed, k)
}

/// The order of `set` most likely to satisfy the condition: decreasing
/// number of outside neighbors, so `x_1` has the most. If any order of the
/// set works, this one does.
pub fn best_order<G: Adjacency + ?Sized>(g: &G, set: &[VertexId]) -> Vec<VertexId> {
    let counts = outside_counts(g, set);
    let mut idx: Vec<usize> = (0..set.len()).collect();
    idx.sort_by_key(|&i| (std::cmp::Reverse(counts[i]), set[i]));
    idx.into_iter().map(|i| set[i]).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FindOptions {
    /// Seeds are drawn from this many lowest-degree vertices.
    pub seed_pool: usize,
    pub max_seed_size: usize,
    /// Only vertices of at most this degree enter seeds.
    pub max_seed_degree: usize,
    /// Exhaustive subset search runs only if `C(n, k)` is at most this.
    pub exhaustive_limit: u64,
}

impl Default for FindOptions {
    fn default() -> Self {
        FindOptions {
            seed_pool: 40,
            max_seed_size: 5,
            max_seed_degree: 5,
            exhaustive_limit: 500_000,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReducibleCertificate {
    pub set: ReducibleSet,
    /// Which search stage produced the set.
    pub strategy: String,
}

fn try_candidate<G: Adjacency + ?Sized>(
    g: &G,
    order: &[VertexId],
    k: usize,
    strategy: &str,
) -> Option<ReducibleCertificate> {
    let certify = |o: &[VertexId]| {
        verify_reducible(g, o, k).ok().map(|set| ReducibleCertificate {
            set,
            strategy: strategy.to_string(),
        })
    };
    certify(order).or_else(|| certify(&best_order(g, order)))
}

/// Seeds from configuration matches: labelled vertices go to their
/// indices, unlabelled ones stay out of S. Matches whose labels collide or
/// do not fit in `1..=k` are skipped.
pub fn catalog_seeds(
    g: &PlaneGraph,
    k: usize,
    catalog: &[Configuration],
) -> Vec<(String, Vec<SeedEntry>)> {
    let mut out = Vec::new();
    for cfg in catalog {
        let labelled = cfg.labelled();
        if labelled.is_empty() {
            continue;
        }
        for m in match_configuration(g, cfg) {
            let mut seed = Vec::new();
            let mut ok = true;
            for &(p, label) in &labelled {
                match label.index(k) {
                    Some(i) => seed.push((i, m.map[p])),
                    None => ok = false,
                }
            }
            let vs: BTreeSet<_> = seed.iter().map(|s| s.1).collect();
            let is: BTreeSet<_> = seed.iter().map(|s| s.0).collect();
            if ok && vs.len() == seed.len() && is.len() == seed.len() {
                out.push((cfg.name.clone(), seed));
            }
        }
    }
    out
}

/// Searches for a reducible set of size `k`, trying in turn: catalog
/// matches, the plain min-degree completion, closed neighborhoods of
/// low-degree vertices, bounded seed enumeration, and (when small enough)
/// every k-subset.
pub fn find_reducible_set(
    g: &PlaneGraph,
    k: usize,
    catalog: &[Configuration],
    opts: &FindOptions,
) -> Option<ReducibleCertificate> {
    if g.vertex_count() < k {
        return None;
    }
    for (name, seed) in catalog_seeds(g, k, catalog) {
        if let Ok(order) = complete_seed(g, &seed, k) {
            if let Some(c) = try_candidate(g, &order, k, &format!("catalog:{name}")) {
                return Some(c);
            }
        }
    }
    find_reducible_set_abstract(g, k, opts)
}

/// [`find_reducible_set`] without the catalog stage; works on any graph.
pub fn find_reducible_set_abstract<G: Adjacency + ?Sized>(
    g: &G,
    k: usize,
    opts: &FindOptions,
) -> Option<ReducibleCertificate> {
    let n = g.vertex_count();
    if n < k || k == 0 {
        return None;
    }
    if let Ok(order) = complete_seed(g, &[], k) {
        if let Some(c) = try_candidate(g, &order, k, "min-degree") {
            return Some(c);
        }
    }

    let mut by_degree: Vec<VertexId> = g.vertices().collect();
    by_degree.sort_by_key(|&v| (g.degree(v), v));

    for &v in &by_degree {
        let nbrs = g.neighbors(v);
        if nbrs.len() + 1 > k {
            continue;
        }
        let mut seed: Vec<SeedEntry> = vec![(k, v)];
        seed.extend(nbrs.iter().enumerate().map(|(i, &w)| (i + 1, w)));
        if let Ok(order) = complete_seed(g, &seed, k) {
            if let Some(c) = try_candidate(g, &order, k, "neighborhood") {
                return Some(c);
            }
        }
    }

    let pool: Vec<VertexId> = by_degree
        .iter()
        .copied()
        .filter(|&v| g.degree(v) <= opts.max_seed_degree)
        .take(opts.seed_pool)
        .collect();
    let max_size = opts.max_seed_size.min(k).min(pool.len());
    for size in 1..=max_size {
        let mut found = None;
        for_each_subset(pool.len(), size, &mut |idx| {
            let top: Vec<VertexId> = idx.iter().map(|&i| pool[i]).collect();
            if let Ok(order) = complete_top_seed(g, &top, k) {
                found = try_candidate(g, &order, k, "seed-search");
            }
            found.is_some()
        });
        if found.is_some() {
            return found;
        }
    }

    if binomial(n as u64, k as u64) <= opts.exhaustive_limit {
        let mut found = None;
        for_each_subset(n, k, &mut |idx| {
            found = try_candidate(g, idx, k, "exhaustive");
            found.is_some()
        });
        return found;
    }
    None
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: u64 = 1;
    for i in 0..k {
        r = r.saturating_mul(n - i) / (i + 1);
    }
    r
}

/// Calls `f` on every increasing `size`-subset of `0..n` until it returns
/// true.
fn for_each_subset(n: usize, size: usize, f: &mut dyn FnMut(&[usize]) -> bool) {
    if size > n {
        return;
    }
    let mut idx: Vec<usize> = (0..size).collect();
    loop {
        if f(&idx) {
            return;
        }
        let Some(i) = (0..size).rev().find(|&i| idx[i] < n - size + i) else {
            return;
        };
        idx[i] += 1;
        for j in i + 1..size {
            idx[j] = idx[j - 1] + 1;
        }
    }
}
