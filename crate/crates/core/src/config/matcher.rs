use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::dsl::{Configuration, Kind};
use crate::graph::{Adjacency, PlaneGraph, VertexId};

/// An occurrence of a configuration: `map[p]` is the host vertex of
/// pattern vertex `p`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Match {
    pub map: Vec<VertexId>,
}

impl Match {
    pub fn named(&self, cfg: &Configuration) -> BTreeMap<String, VertexId> {
        cfg.vertices
            .iter()
            .zip(&self.map)
            .map(|(v, &h)| (v.id.clone(), h))
            .collect()
    }
}

/// Permutations of the pattern vertices preserving labels, kinds, degree
/// specs, edges, face constraints and distinct groups. Includes the
/// identity; `perm[p]` is the image of `p`.
pub fn automorphisms(cfg: &Configuration) -> Vec<Vec<usize>> {
    let n = cfg.vertex_count();
    let edges: BTreeSet<(usize, usize)> = cfg.edges.iter().copied().collect();
    let sig: Vec<_> = cfg
        .vertices
        .iter()
        .map(|v| (v.label, v.kind, v.degree, v.shown))
        .collect();
    let mut out = Vec::new();
    let mut perm = Vec::with_capacity(n);
    let mut used = vec![false; n];
    extend_automorphism(cfg, &edges, &sig, &mut perm, &mut used, &mut out);
    out
}

fn extend_automorphism<T: PartialEq>(
    cfg: &Configuration,
    edges: &BTreeSet<(usize, usize)>,
    sig: &[T],
    perm: &mut Vec<usize>,
    used: &mut [bool],
    out: &mut Vec<Vec<usize>>,
) {
    let n = sig.len();
    let p = perm.len();
    if p == n {
        if preserves_structure(cfg, perm) {
            out.push(perm.clone());
        }
        return;
    }
    for q in 0..n {
        if used[q] || sig[p] != sig[q] {
            continue;
        }
        let consistent = (0..p).all(|r| {
            let e = (p.min(r), p.max(r));
            let f = (q.min(perm[r]), q.max(perm[r]));
            edges.contains(&e) == edges.contains(&f)
        });
        if consistent {
            perm.push(q);
            used[q] = true;
            extend_automorphism(cfg, edges, sig, perm, used, out);
            used[q] = false;
            perm.pop();
        }
    }
}

fn preserves_structure(cfg: &Configuration, perm: &[usize]) -> bool {
    let as_sets = |groups: Vec<(BTreeSet<usize>, BTreeSet<usize>)>| -> BTreeSet<_> {
        groups.into_iter().collect()
    };
    let faces = as_sets(
        cfg.faces
            .iter()
            .map(|f| {
                (
                    f.cycle.iter().copied().collect(),
                    f.anchored.iter().copied().collect(),
                )
            })
            .collect(),
    );
    let mapped = as_sets(
        cfg.faces
            .iter()
            .map(|f| {
                (
                    f.cycle.iter().map(|&p| perm[p]).collect(),
                    f.anchored.iter().map(|&p| perm[p]).collect(),
                )
            })
            .collect(),
    );
    let groups: BTreeSet<BTreeSet<usize>> = cfg
        .distinct
        .iter()
        .map(|g| g.iter().copied().collect())
        .collect();
    let mapped_groups: BTreeSet<BTreeSet<usize>> = cfg
        .distinct
        .iter()
        .map(|g| g.iter().map(|&p| perm[p]).collect())
        .collect();
    faces == mapped && groups == mapped_groups
}

/// Lexicographically least representative of the orbit of `map` under the
/// pattern automorphisms.
pub fn canonical(map: &[VertexId], autos: &[Vec<usize>]) -> Vec<VertexId> {
    autos
        .iter()
        .map(|perm| perm.iter().map(|&q| map[q]).collect::<Vec<_>>())
        .min()
        .unwrap_or_else(|| map.to_vec())
}

/// Whether `map` satisfies every constraint of `cfg` in `g`.
pub fn is_valid_match(g: &PlaneGraph, cfg: &Configuration, map: &[VertexId]) -> bool {
    let n = cfg.vertex_count();
    if map.len() != n || map.iter().any(|&h| h >= g.vertex_count()) {
        return false;
    }
    let delta = g.max_degree();
    for (p, v) in cfg.vertices.iter().enumerate() {
        let (lo, hi) = v.degree.bounds(v.shown, delta);
        let d = g.degree(map[p]);
        if d < lo || d > hi {
            return false;
        }
    }
    for p in 0..n {
        for q in p + 1..n {
            if map[p] == map[q] && cfg.must_differ(p, q) {
                return false;
            }
        }
    }
    let mut host_edges = BTreeSet::new();
    for &(a, b) in &cfg.edges {
        let (x, y) = (map[a], map[b]);
        if !g.has_edge(x, y) || !host_edges.insert((x.min(y), x.max(y))) {
            return false;
        }
    }
    for (p, v) in cfg.vertices.iter().enumerate() {
        if v.kind == Kind::Solid {
            let shown: BTreeSet<VertexId> = cfg.neighbors(p).iter().map(|&q| map[q]).collect();
            if g.neighbors(map[p]).iter().any(|w| !shown.contains(w)) {
                return false;
            }
        }
    }
    cfg.faces.iter().all(|fc| {
        let image: Vec<VertexId> = fc.cycle.iter().map(|&p| map[p]).collect();
        let anchored: Vec<usize> = fc
            .anchored
            .iter()
            .map(|a| fc.cycle.iter().position(|p| p == a).expect("anchored on cycle"))
            .collect();
        g.faces()
            .iter()
            .any(|f| face_fits(&f.walk, &image, &anchored))
    })
}

/// `walk` has the same multiset of vertices as `image`, and some rotation
/// or reflection of `walk` agrees with `image` at every anchored position.
fn face_fits(walk: &[VertexId], image: &[VertexId], anchored: &[usize]) -> bool {
    let m = image.len();
    if walk.len() != m {
        return false;
    }
    let mut a = walk.to_vec();
    let mut b = image.to_vec();
    a.sort_unstable();
    b.sort_unstable();
    if a != b {
        return false;
    }
    (0..m).any(|shift| {
        [false, true].iter().any(|&rev| {
            anchored.iter().all(|&i| {
                let j = if rev { (shift + m - i) % m } else { (shift + i) % m };
                walk[j] == image[i]
            })
        })
    })
}

/// Every occurrence of `cfg` in `g`, one per orbit of pattern
/// automorphisms, sorted.
pub fn match_configuration(g: &PlaneGraph, cfg: &Configuration) -> Vec<Match> {
    let n = cfg.vertex_count();
    let order = search_order(cfg);
    let adj: Vec<Vec<usize>> = (0..n).map(|p| cfg.neighbors(p)).collect();
    let delta = g.max_degree();
    let bounds: Vec<(usize, usize)> = cfg
        .vertices
        .iter()
        .map(|v| v.degree.bounds(v.shown, delta))
        .collect();
    let autos = automorphisms(cfg);
    let mut found = BTreeSet::new();
    let mut map = vec![usize::MAX; n];
    let mut state = Search {
        g,
        cfg,
        order: &order,
        adj: &adj,
        bounds: &bounds,
    };
    state.run(0, &mut map, &mut |m: &[VertexId]| {
        if is_valid_match(g, cfg, m) {
            found.insert(canonical(m, &autos));
        }
    });
    found.into_iter().map(|map| Match { map }).collect()
}

/// Pattern vertices in breadth-first order, so every vertex after the
/// first of its component has an earlier neighbor.
fn search_order(cfg: &Configuration) -> Vec<usize> {
    let n = cfg.vertex_count();
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(p) = queue.pop_front() {
            order.push(p);
            for q in cfg.neighbors(p) {
                if !seen[q] {
                    seen[q] = true;
                    queue.push_back(q);
                }
            }
        }
    }
    order
}

struct Search<'a> {
    g: &'a PlaneGraph,
    cfg: &'a Configuration,
    order: &'a [usize],
    adj: &'a [Vec<usize>],
    bounds: &'a [(usize, usize)],
}

impl Search<'_> {
    fn run(&mut self, step: usize, map: &mut Vec<VertexId>, emit: &mut dyn FnMut(&[VertexId])) {
        if step == self.order.len() {
            emit(map);
            return;
        }
        let p = self.order[step];
        let anchor = self.adj[p].iter().find(|&&q| map[q] != usize::MAX).copied();
        let candidates: Vec<VertexId> = match anchor {
            Some(q) => self.g.neighbors(map[q]).to_vec(),
            None => self.g.vertices().collect(),
        };
        let (lo, hi) = self.bounds[p];
        for h in candidates {
            let d = self.g.degree(h);
            if d < lo || d > hi {
                continue;
            }
            let edges_ok = self.adj[p]
                .iter()
                .all(|&q| map[q] == usize::MAX || self.g.has_edge(h, map[q]));
            let distinct_ok = (0..map.len())
                .all(|q| map[q] != h || !self.cfg.must_differ(p, q));
            if edges_ok && distinct_ok {
                map[p] = h;
                self.run(step + 1, map, emit);
                map[p] = usize::MAX;
            }
        }
    }
}
