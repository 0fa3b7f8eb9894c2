use serde::Serialize;

use super::exact::{exact_equitable_with_limit, EquitableColoring, DEFAULT_EXACT_LIMIT};
use super::list::{exact_list_coloring, EquitableListColoring, ListAssignment};
use super::ColoringError;
use crate::config::{
    builtin_catalog, find_reducible_set, verify_reducible, Configuration, FindOptions,
    ReducibleCertificate,
};
use crate::graph::{Adjacency, PlaneGraph, VertexId};
use crate::structure::class_membership;

/// Colors `x_1..x_k` of `set` in index order, each with the lowest color
/// not used on its neighbors outside the set nor on an earlier `x_j`.
/// `base` colors `G - S`, whose vertex `i` is `kept[i]` in `g`.
pub fn extend_coloring<G: Adjacency + ?Sized>(
    g: &G,
    set: &[VertexId],
    base: &EquitableColoring,
    kept: &[VertexId],
) -> Result<EquitableColoring, ColoringError> {
    let k = base.k;
    verify_reducible(g, set, k).map_err(|e| ColoringError::PreconditionViolated(e.to_string()))?;
    let mut colors = vec![0; g.vertex_count()];
    for (i, &v) in kept.iter().enumerate() {
        colors[v] = base.colors[i];
    }
    let in_set: Vec<bool> = {
        let mut m = vec![false; g.vertex_count()];
        for &v in set {
            m[v] = true;
        }
        m
    };
    let mut placed = Vec::with_capacity(k);
    for &x in set {
        let mut forbidden = vec![false; k + 1];
        for &w in g.neighbors(x) {
            if !in_set[w] {
                forbidden[colors[w]] = true;
            }
        }
        for &c in &placed {
            forbidden[c] = true;
        }
        let c = (1..=k)
            .find(|&c| !forbidden[c])
            .ok_or_else(|| ColoringError::PreconditionViolated("no free color".into()))?;
        colors[x] = c;
        placed.push(c);
    }
    Ok(EquitableColoring::from_colors(k, colors))
}

/// List version of [`extend_coloring`]: `x_i` takes the first color of its
/// list not on its outside neighbors nor on an earlier `x_j`.
pub fn extend_list_coloring<G: Adjacency + ?Sized>(
    g: &G,
    set: &[VertexId],
    lists: &ListAssignment,
    base: &[usize],
    kept: &[VertexId],
) -> Result<Vec<usize>, ColoringError> {
    let k = lists.k;
    verify_reducible(g, set, k).map_err(|e| ColoringError::PreconditionViolated(e.to_string()))?;
    let mut colors = vec![0; g.vertex_count()];
    for (i, &v) in kept.iter().enumerate() {
        colors[v] = base[i];
    }
    let mut in_set = vec![false; g.vertex_count()];
    for &v in set {
        in_set[v] = true;
    }
    let mut placed: Vec<usize> = Vec::with_capacity(k);
    for &x in set {
        let c = lists.lists[x]
            .iter()
            .copied()
            .find(|c| {
                !placed.contains(c)
                    && g.neighbors(x).iter().all(|&w| in_set[w] || colors[w] != *c)
            })
            .ok_or_else(|| ColoringError::PreconditionViolated("no free list color".into()))?;
        colors[x] = c;
        placed.push(c);
    }
    Ok(colors)
}

#[derive(Debug, Clone)]
pub struct ConstructiveOptions {
    /// Subproblems with at most `max(k, base_threshold)` vertices are
    /// solved exactly.
    pub base_threshold: usize,
    /// Skip the membership and `k >= max(7, Δ)` checks.
    pub force: bool,
    pub exact_limit: usize,
    pub find: FindOptions,
    pub catalog: Vec<Configuration>,
}

impl Default for ConstructiveOptions {
    fn default() -> Self {
        ConstructiveOptions {
            base_threshold: 12,
            force: false,
            exact_limit: DEFAULT_EXACT_LIMIT,
            find: FindOptions::default(),
            catalog: builtin_catalog(),
        }
    }
}

/// A subproblem where no reducible set was found and the exact solver was
/// used instead.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Anomaly {
    pub vertices: usize,
    pub k: usize,
    pub message: String,
}

/// One reduction step: the certificate found on a subgraph with `vertices`
/// vertices. Certificate ids refer to that subgraph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReductionStep {
    pub vertices: usize,
    pub certificate: ReducibleCertificate,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConstructiveOutcome<C> {
    pub coloring: C,
    pub steps: Vec<ReductionStep>,
    pub anomalies: Vec<Anomaly>,
}

fn check_preconditions(g: &PlaneGraph, k: usize, force: bool) -> Result<(), ColoringError> {
    if force {
        return Ok(());
    }
    let need = 7.max(g.max_degree());
    if k < need {
        return Err(ColoringError::PreconditionViolated(format!(
            "k = {k} is below max(7, Δ) = {need}"
        )));
    }
    if !class_membership(g).is_member {
        return Err(ColoringError::PreconditionViolated(
            "graph has a chordal 4- or 6-cycle".into(),
        ));
    }
    Ok(())
}

fn small_components(g: &PlaneGraph) -> bool {
    g.component_sizes().iter().all(|&s| s <= 4)
}

/// Equitable `k`-coloring by repeatedly removing a reducible set, coloring
/// the rest, and extending.
pub fn color_constructive(
    g: &PlaneGraph,
    k: usize,
    opts: &ConstructiveOptions,
) -> Result<ConstructiveOutcome<EquitableColoring>, ColoringError> {
    check_preconditions(g, k, opts.force)?;
    let mut steps = Vec::new();
    let mut anomalies = Vec::new();
    let coloring = constructive_rec(g, k, opts, &mut steps, &mut anomalies)?;
    Ok(ConstructiveOutcome {
        coloring,
        steps,
        anomalies,
    })
}

fn exact_or_fail(g: &PlaneGraph, k: usize, limit: usize) -> Result<EquitableColoring, ColoringError> {
    exact_equitable_with_limit(g, k, limit)?.ok_or(ColoringError::Infeasible {
        n: g.vertex_count(),
        k,
    })
}

fn constructive_rec(
    g: &PlaneGraph,
    k: usize,
    opts: &ConstructiveOptions,
    steps: &mut Vec<ReductionStep>,
    anomalies: &mut Vec<Anomaly>,
) -> Result<EquitableColoring, ColoringError> {
    let n = g.vertex_count();
    if n <= k.max(opts.base_threshold)
        || (small_components(g) && n <= opts.exact_limit)
    {
        return exact_or_fail(g, k, opts.exact_limit);
    }
    match find_reducible_set(g, k, &opts.catalog, &opts.find) {
        Some(cert) => {
            let (rest, kept) = g.remove_vertices(&cert.set.vertices);
            let set = cert.set.vertices.clone();
            steps.push(ReductionStep {
                vertices: n,
                certificate: cert,
            });
            let base = constructive_rec(&rest, k, opts, steps, anomalies)?;
            extend_coloring(g, &set, &base, &kept)
        }
        None => {
            anomalies.push(Anomaly {
                vertices: n,
                k,
                message: "no reducible set found; solved exactly".into(),
            });
            exact_or_fail(g, k, opts.exact_limit)
        }
    }
}

/// Equitable list coloring by the same recursion as
/// [`color_constructive`].
pub fn list_color_constructive(
    g: &PlaneGraph,
    lists: &ListAssignment,
    opts: &ConstructiveOptions,
) -> Result<ConstructiveOutcome<EquitableListColoring>, ColoringError> {
    let lists = ListAssignment::new(lists.k, lists.lists.clone())?;
    if lists.lists.len() != g.vertex_count() {
        return Err(ColoringError::BadLists(format!(
            "{} lists for {} vertices",
            lists.lists.len(),
            g.vertex_count()
        )));
    }
    check_preconditions(g, lists.k, opts.force)?;
    let mut steps = Vec::new();
    let mut anomalies = Vec::new();
    let colors = list_rec(g, &lists, opts, &mut steps, &mut anomalies)?;
    Ok(ConstructiveOutcome {
        coloring: EquitableListColoring::from_colors(colors, lists.k),
        steps,
        anomalies,
    })
}

fn exact_list_or_fail(
    g: &PlaneGraph,
    lists: &ListAssignment,
    limit: usize,
) -> Result<Vec<usize>, ColoringError> {
    // identical lists: solve the balanced problem and rename colors
    if let Some(first) = lists.lists.first() {
        if lists.lists.iter().all(|l| l == first) {
            return exact_or_fail(g, lists.k, limit)
                .map(|c| c.colors.iter().map(|&i| first[i - 1]).collect());
        }
    }
    exact_list_coloring(g, lists, limit)?
        .map(|c| c.colors)
        .ok_or(ColoringError::Infeasible {
            n: g.vertex_count(),
            k: lists.k,
        })
}

fn list_rec(
    g: &PlaneGraph,
    lists: &ListAssignment,
    opts: &ConstructiveOptions,
    steps: &mut Vec<ReductionStep>,
    anomalies: &mut Vec<Anomaly>,
) -> Result<Vec<usize>, ColoringError> {
    let n = g.vertex_count();
    let k = lists.k;
    if n <= k.max(opts.base_threshold)
        || (small_components(g) && n <= opts.exact_limit)
    {
        return exact_list_or_fail(g, lists, opts.exact_limit);
    }
    match find_reducible_set(g, k, &opts.catalog, &opts.find) {
        Some(cert) => {
            let (rest, kept) = g.remove_vertices(&cert.set.vertices);
            let set = cert.set.vertices.clone();
            steps.push(ReductionStep {
                vertices: n,
                certificate: cert,
            });
            let base = list_rec(&rest, &lists.restrict(&kept), opts, steps, anomalies)?;
            extend_list_coloring(g, &set, lists, &base, &kept)
        }
        None => {
            anomalies.push(Anomaly {
                vertices: n,
                k,
                message: "no reducible set found; solved exactly".into(),
            });
            exact_list_or_fail(g, lists, opts.exact_limit)
        }
    }
}
