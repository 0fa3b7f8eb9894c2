use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Adjacency, PlaneGraph, VertexId};
use crate::structure::class_membership;

/// Joins the corners at walk positions `i` and `j` of `face` by an edge
/// drawn inside that face.
fn add_chord(g: &PlaneGraph, face: usize, i: usize, j: usize) -> PlaneGraph {
    let walk = &g.face(face).walk;
    let m = walk.len();
    let (u, w) = (walk[i], walk[j]);
    let mut rotation = g.rotations().to_vec();
    for (x, y, before) in [(u, w, walk[(i + m - 1) % m]), (w, u, walk[(j + m - 1) % m])] {
        let pos = rotation[x].iter().position(|&z| z == before).unwrap();
        rotation[x].insert(pos + 1, y);
    }
    PlaneGraph::from_rotation(rotation).expect("a chord inside a face keeps the embedding plane")
}

fn random_tree(n: usize, rng: &mut ChaCha8Rng) -> PlaneGraph {
    let mut rotation: Vec<Vec<VertexId>> = vec![Vec::new(); n];
    for v in 1..n {
        let p = rng.random_range(0..v);
        let at = rng.random_range(0..=rotation[p].len());
        rotation[p].insert(at, v);
        rotation[v].push(p);
    }
    PlaneGraph::from_rotation(rotation).expect("trees are plane")
}

/// Random connected plane graph: a random tree plus up to `extra` chords
/// placed inside faces. With `members_only`, chords that would create a
/// chordal 4- or 6-cycle are rejected.
pub fn random_plane_graph(n: usize, extra: usize, members_only: bool, seed: u64) -> PlaneGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = random_tree(n.max(1), &mut rng);
    let mut attempts = 0;
    let mut added = 0;
    while added < extra && attempts < 20 * (extra + 1) {
        attempts += 1;
        let face = rng.random_range(0..g.face_count());
        let m = g.face(face).degree();
        if m < 4 {
            continue;
        }
        let i = rng.random_range(0..m);
        let j = rng.random_range(0..m);
        let walk = &g.face(face).walk;
        let (u, w) = (walk[i], walk[j]);
        if u == w || g.has_edge(u, w) {
            continue;
        }
        let h = add_chord(&g, face, i, j);
        if members_only && !class_membership(&h).is_member {
            continue;
        }
        g = h;
        added += 1;
    }
    g
}
