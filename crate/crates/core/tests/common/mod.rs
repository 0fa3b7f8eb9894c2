//! Brute-force oracles shared by the integration tests. None of them call
//! the search code they are compared against.

#![allow(dead_code)]

use std::collections::BTreeSet;

use chordfree::corpus::{load_fixture_dir, shipped_fixture_dir, Fixture};
use chordfree::graph::{Adjacency, PlaneGraph, VertexId};

pub fn fixtures() -> Vec<Fixture> {
    load_fixture_dir(shipped_fixture_dir()).expect("shipped fixtures load")
}

pub fn fixture(name: &str) -> PlaneGraph {
    fixtures()
        .into_iter()
        .find(|f| f.name == name)
        .unwrap_or_else(|| panic!("no fixture named {name}"))
        .graph
}

/// Max over all nonempty vertex subsets of the minimum induced degree.
pub fn subset_degeneracy<G: Adjacency + ?Sized>(g: &G) -> usize {
    let n = g.vertex_count();
    assert!(n <= 20, "subset oracle is exponential");
    let mut best = 0;
    for mask in 1u32..(1 << n) {
        let min = (0..n)
            .filter(|&v| mask >> v & 1 == 1)
            .map(|v| g.neighbors(v).iter().filter(|&&w| mask >> w & 1 == 1).count())
            .min()
            .unwrap();
        best = best.max(min);
    }
    best
}

fn next_permutation(xs: &mut [usize]) -> bool {
    let Some(i) = (1..xs.len()).rev().find(|&i| xs[i - 1] < xs[i]) else {
        return false;
    };
    let j = (i..xs.len()).rev().find(|&j| xs[j] > xs[i - 1]).unwrap();
    xs.swap(i - 1, j);
    xs[i..].reverse();
    true
}

fn for_each_subset(n: usize, k: usize, f: &mut dyn FnMut(&[usize])) {
    let mut idx: Vec<usize> = (0..k).collect();
    if k > n {
        return;
    }
    loop {
        f(&idx);
        let Some(i) = (0..k).rev().find(|&i| idx[i] < n - k + i) else {
            return;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// `(cycle, chord)` pairs found by trying every vertex subset of size `len`
/// in every cyclic order. Cycles start at their smallest vertex with the
/// second vertex below the last; chords are `(min, max)`.
pub fn brute_chordal_cycles<G: Adjacency + ?Sized>(
    g: &G,
    len: usize,
) -> BTreeSet<(Vec<VertexId>, (VertexId, VertexId))> {
    let mut out = BTreeSet::new();
    for_each_subset(g.vertex_count(), len, &mut |set| {
        let first = set[0];
        let mut rest = set[1..].to_vec();
        loop {
            let cycle: Vec<VertexId> = std::iter::once(first).chain(rest.iter().copied()).collect();
            let is_cycle = (0..len).all(|i| g.has_edge(cycle[i], cycle[(i + 1) % len]));
            if is_cycle && cycle[1] < cycle[len - 1] {
                for i in 0..len {
                    for j in i + 1..len {
                        let consecutive = j == i + 1 || (i == 0 && j == len - 1);
                        if !consecutive && g.has_edge(cycle[i], cycle[j]) {
                            let (a, b) = (cycle[i], cycle[j]);
                            out.insert((cycle.clone(), (a.min(b), a.max(b))));
                        }
                    }
                }
            }
            if !next_permutation(&mut rest) {
                break;
            }
        }
    });
    out
}

fn is_equitable<G: Adjacency + ?Sized>(g: &G, colors: &[usize], k: usize) -> bool {
    if g.edges().iter().any(|&(u, v)| colors[u] == colors[v]) {
        return false;
    }
    let mut sizes = vec![0; k];
    for &c in colors {
        sizes[c] += 1;
    }
    sizes.iter().max().unwrap() - sizes.iter().min().unwrap() <= 1
}

/// Whether any of the `k^n` assignments is an equitable coloring.
pub fn brute_equitable<G: Adjacency + ?Sized>(g: &G, k: usize) -> bool {
    let n = g.vertex_count();
    assert!((k as f64).powi(n as i32) <= 5e6, "brute force too large");
    let mut colors = vec![0; n];
    loop {
        if is_equitable(g, &colors, k) {
            return true;
        }
        let Some(i) = (0..n).find(|&i| colors[i] + 1 < k) else {
            return n == 0;
        };
        colors[i] += 1;
        for c in &mut colors[..i] {
            *c = 0;
        }
    }
}

/// Whether some choice from the lists is proper and uses no color more
/// than `⌈n/k⌉` times.
pub fn brute_list_colorable<G: Adjacency + ?Sized>(g: &G, lists: &[Vec<usize>], k: usize) -> bool {
    let n = g.vertex_count();
    let cap = n.div_ceil(k);
    let mut pick = vec![0; n];
    loop {
        let colors: Vec<usize> = (0..n).map(|v| lists[v][pick[v]]).collect();
        let proper = g.edges().iter().all(|&(u, v)| colors[u] != colors[v]);
        let capped = colors
            .iter()
            .all(|c| colors.iter().filter(|&d| d == c).count() <= cap);
        if proper && capped {
            return true;
        }
        let Some(i) = (0..n).find(|&i| pick[i] + 1 < lists[i].len()) else {
            return false;
        };
        pick[i] += 1;
        for p in &mut pick[..i] {
            *p = 0;
        }
    }
}

/// Occurrences of the shipped configuration H, as maps in its vertex order
/// `[a, b, c, e, d, y]`: a 4-vertex `a` whose neighbors are exactly
/// `b, c, e, y`, the triangle face `abc`, a 4-face on `a, b, d, e` with `ab`
/// on its boundary, `b, c, d, e` of degree 4, all six distinct.
pub fn brute_h_matches(g: &PlaneGraph) -> BTreeSet<Vec<VertexId>> {
    let n = g.vertex_count();
    let four: Vec<VertexId> = (0..n).filter(|&v| g.degree(v) == 4).collect();
    let face_on = |verts: &[VertexId], len: usize, along: Option<(VertexId, VertexId)>| {
        let want: BTreeSet<VertexId> = verts.iter().copied().collect();
        g.faces().iter().any(|f| {
            let walk = &f.walk;
            let set: BTreeSet<VertexId> = walk.iter().copied().collect();
            walk.len() == len
                && set == want
                && along.is_none_or(|(x, y)| {
                    (0..len).any(|i| {
                        let (p, q) = (walk[i], walk[(i + 1) % len]);
                        (p, q) == (x, y) || (p, q) == (y, x)
                    })
                })
        })
    };
    let mut out = BTreeSet::new();
    for &a in &four {
        for &b in &four {
            for &c in &four {
                for &e in &four {
                    for &d in &four {
                        for y in 0..n {
                            let m = [a, b, c, e, d, y];
                            let distinct: BTreeSet<_> = m.iter().collect();
                            if distinct.len() != 6 {
                                continue;
                            }
                            let edges = [(a, b), (b, c), (c, a), (b, d), (d, e), (e, a), (a, y)];
                            if !edges.iter().all(|&(u, v)| g.has_edge(u, v)) {
                                continue;
                            }
                            let around: BTreeSet<_> = g.neighbors(a).iter().copied().collect();
                            if around != BTreeSet::from([b, c, e, y]) {
                                continue;
                            }
                            if face_on(&[a, b, c], 3, None) && face_on(&[a, b, d, e], 4, Some((a, b)))
                            {
                                out.insert(m.to_vec());
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

/// Euler characteristic of each component computed from a fresh face trace.
pub fn euler_per_component(g: &PlaneGraph) -> Vec<i64> {
    let comp = g.components();
    let count = comp.iter().max().map_or(0, |m| m + 1);
    let mut chi = vec![0i64; count];
    for v in g.vertices() {
        chi[comp[v]] += 1;
    }
    for (u, _) in g.edges() {
        chi[comp[u]] -= 1;
    }
    for f in g.faces() {
        let owner = f.walk.first().map_or(f.component, |&v| comp[v]);
        chi[owner] += 1;
    }
    chi
}
