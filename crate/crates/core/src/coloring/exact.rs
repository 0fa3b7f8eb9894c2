use serde::Serialize;

use super::ColoringError;
use crate::graph::{Adjacency, VertexId};

/// Proper coloring with colors `1..=k` whose class sizes differ by at most
/// one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EquitableColoring {
    pub k: usize,
    /// `colors[v]` in `1..=k`.
    pub colors: Vec<usize>,
    /// `class_sizes[c - 1]` = number of vertices of color `c`.
    pub class_sizes: Vec<usize>,
}

impl EquitableColoring {
    pub fn from_colors(k: usize, colors: Vec<usize>) -> Self {
        let mut class_sizes = vec![0; k];
        for &c in &colors {
            class_sizes[c - 1] += 1;
        }
        EquitableColoring {
            k,
            colors,
            class_sizes,
        }
    }
}

/// Largest vertex count the exact solvers accept when `k < n`.
pub const DEFAULT_EXACT_LIMIT: usize = 20;

/// Exhaustive search for an equitable `k`-coloring. `Ok(None)` proves that
/// none exists.
pub fn exact_equitable<G: Adjacency + ?Sized>(
    g: &G,
    k: usize,
) -> Result<Option<EquitableColoring>, ColoringError> {
    exact_equitable_with_limit(g, k, DEFAULT_EXACT_LIMIT)
}

pub fn exact_equitable_with_limit<G: Adjacency + ?Sized>(
    g: &G,
    k: usize,
    limit: usize,
) -> Result<Option<EquitableColoring>, ColoringError> {
    let n = g.vertex_count();
    if k == 0 {
        return Ok(if n == 0 {
            Some(EquitableColoring::from_colors(0, Vec::new()))
        } else {
            None
        });
    }
    if k >= n {
        // every vertex its own color
        return Ok(Some(EquitableColoring::from_colors(k, (1..=n).collect())));
    }
    if n > limit {
        return Err(ColoringError::SizeLimit { n, limit });
    }
    let mut order: Vec<VertexId> = g.vertices().collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut search = Search {
        g,
        k,
        q: n / k,
        r: n % k,
        order,
        colors: vec![0; n],
        sizes: vec![0; k + 1],
        full: 0,
    };
    if search.run(0, 0) {
        Ok(Some(EquitableColoring::from_colors(k, search.colors)))
    } else {
        Ok(None)
    }
}

struct Search<'a, G: Adjacency + ?Sized> {
    g: &'a G,
    k: usize,
    q: usize,
    r: usize,
    order: Vec<VertexId>,
    colors: Vec<usize>,
    sizes: Vec<usize>,
    /// Classes at size `q + 1`.
    full: usize,
}

impl<G: Adjacency + ?Sized> Search<'_, G> {
    fn cap(&self) -> usize {
        if self.r == 0 {
            self.q
        } else {
            self.q + 1
        }
    }

    fn run(&mut self, step: usize, used: usize) -> bool {
        if step == self.order.len() {
            return true;
        }
        let remaining = self.order.len() - step;
        let deficit: usize = (1..=self.k)
            .map(|c| self.q.saturating_sub(self.sizes[c]))
            .sum();
        if deficit > remaining {
            return false;
        }
        let v = self.order[step];
        let top = (used + 1).min(self.k);
        for c in 1..=top {
            if self.sizes[c] == self.cap() {
                continue;
            }
            let grows_full = self.r > 0 && self.sizes[c] == self.q;
            if grows_full && self.full == self.r {
                continue;
            }
            if self.g.neighbors(v).iter().any(|&w| self.colors[w] == c) {
                continue;
            }
            self.colors[v] = c;
            self.sizes[c] += 1;
            if grows_full {
                self.full += 1;
            }
            if self.run(step + 1, used.max(c)) {
                return true;
            }
            if grows_full {
                self.full -= 1;
            }
            self.sizes[c] -= 1;
            self.colors[v] = 0;
        }
        false
    }
}

/// Least `k` with an equitable `k`-coloring.
pub fn chi_e<G: Adjacency + ?Sized>(g: &G) -> Result<usize, ColoringError> {
    let n = g.vertex_count();
    for k in 1..=n.max(1) {
        if exact_equitable(g, k)?.is_some() {
            return Ok(k);
        }
    }
    Ok(n.max(1))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChiStar {
    pub value: usize,
    /// `Δ + 1`; every `l` in `value..=checked_up_to` was solved exactly.
    pub checked_up_to: usize,
    /// Whether the exact solver found an equitable `(Δ + 1)`-coloring.
    pub top_verified: bool,
}

/// Least `k` such that every `l` in `k..=Δ+1` admits an equitable
/// `l`-coloring. Beyond `Δ + 1` colorability is taken as known; the
/// `Δ + 1` case itself is solved, not assumed.
pub fn chi_star_e<G: Adjacency + ?Sized>(g: &G) -> Result<ChiStar, ColoringError> {
    let top = g.max_degree() + 1;
    let top_verified = exact_equitable(g, top)?.is_some();
    if !top_verified {
        return Ok(ChiStar {
            value: top + 1,
            checked_up_to: top,
            top_verified,
        });
    }
    let mut value = top;
    while value > 1 && exact_equitable(g, value - 1)?.is_some() {
        value -= 1;
    }
    Ok(ChiStar {
        value,
        checked_up_to: top,
        top_verified,
    })
}
