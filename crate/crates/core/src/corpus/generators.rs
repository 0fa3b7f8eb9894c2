//! Named graph families with parameters, written `name(p1,p2,..)`.

use std::fmt;
use std::str::FromStr;

use super::build::{
    attach_leaves, disjoint_union, dual, forest, from_faces, from_inner_faces, medial, stack,
    subdivide, truncate,
};
use super::CorpusError;
use crate::graph::{PlaneGraph, VertexId};
use crate::structure::{is_bad_degree_vector, is_special_degree_vector};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Solid {
    Tetrahedron,
    Cube,
    Octahedron,
    Icosahedron,
    Dodecahedron,
}

impl Solid {
    const ALL: [(Solid, &'static str); 5] = [
        (Solid::Tetrahedron, "tetrahedron"),
        (Solid::Cube, "cube"),
        (Solid::Octahedron, "octahedron"),
        (Solid::Icosahedron, "icosahedron"),
        (Solid::Dodecahedron, "dodecahedron"),
    ];

    fn name(self) -> &'static str {
        Solid::ALL.iter().find(|(s, _)| *s == self).unwrap().1
    }
}

impl FromStr for Solid {
    type Err = CorpusError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Solid::ALL
            .iter()
            .find(|(_, n)| *n == s)
            .map(|(s, _)| *s)
            .ok_or_else(|| CorpusError::BadParams(format!("unknown solid {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    /// `n` isolated vertices.
    Empty(usize),
    Path(usize),
    Cycle(usize),
    /// `K_{1,n}`.
    Star(usize),
    /// Paths of the given lengths glued at one end.
    Spider(Vec<usize>),
    /// Path on `spine` vertices, each carrying `legs` leaves.
    Caterpillar(usize, usize),
    BinaryTree(usize),
    /// `K_{2,n}`.
    TwoByN(usize),
    /// `t` triangles sharing one vertex.
    Friendship(usize),
    Grid(usize, usize),
    /// Offset rows of hexagons.
    Hexpatch(usize, usize),
    /// Medial graph of a hexagon patch.
    Kagome(usize, usize),
    Wheel(usize),
    Prism(usize),
    Platonic(Solid),
    Truncated(Solid),
    Subdivided(Solid),
    /// Triangle with `rounds` vertices stacked into successive faces.
    Stacked(usize),
    /// Triangle and 4-face sharing an edge, all five of degree 4, plus a
    /// pendant neighbor of the shared 4-vertex.
    HGadget,
    /// A cycle whose vertices are padded with leaves to the given degrees.
    PaddedFace(Vec<usize>),
    /// [`Family::PaddedFace`] on four vertices that must form a bad face.
    BadFaceGadget(Vec<usize>),
    /// [`Family::PaddedFace`] on three vertices that must form a special face.
    SpecialGadget(Vec<usize>),
    /// Triangle whose three neighboring faces are 4-faces, corners padded
    /// to degree `d`.
    ShieldedTriangle(usize),
    Union(Box<Family>, Box<Family>),
}

/// What a family is known to satisfy, checked when a fixture is generated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Declared {
    pub member: Option<bool>,
    pub degeneracy: Option<usize>,
}

fn declared(member: bool, degeneracy: usize) -> Declared {
    Declared {
        member: Some(member),
        degeneracy: Some(degeneracy),
    }
}

fn bad(msg: impl Into<String>) -> CorpusError {
    CorpusError::BadParams(msg.into())
}

fn cycle_faces(n: usize) -> Vec<Vec<VertexId>> {
    let inner: Vec<VertexId> = (0..n).collect();
    let outer = inner.iter().rev().copied().collect();
    vec![inner, outer]
}

fn platonic(s: Solid) -> PlaneGraph {
    let built = match s {
        Solid::Tetrahedron => from_faces(
            4,
            &[vec![0, 1, 2], vec![0, 2, 3], vec![0, 3, 1], vec![1, 3, 2]],
        ),
        Solid::Cube => prism(4),
        Solid::Octahedron => {
            let r = |i: usize| 1 + i % 4;
            let mut faces = Vec::new();
            for i in 0..4 {
                faces.push(vec![0, r(i), r(i + 1)]);
                faces.push(vec![5, r(i + 1), r(i)]);
            }
            from_faces(6, &faces)
        }
        Solid::Icosahedron => {
            let u = |i: usize| 1 + i % 5;
            let l = |i: usize| 6 + i % 5;
            let mut faces = Vec::new();
            for i in 0..5 {
                faces.push(vec![0, u(i), u(i + 1)]);
                faces.push(vec![u(i + 1), u(i), l(i)]);
                faces.push(vec![u(i + 1), l(i), l(i + 1)]);
                faces.push(vec![11, l(i + 1), l(i)]);
            }
            from_faces(12, &faces)
        }
        Solid::Dodecahedron => dual(&platonic(Solid::Icosahedron)),
    };
    built.expect("platonic solids are plane")
}

fn prism(n: usize) -> Result<PlaneGraph, crate::graph::GraphError> {
    let mut faces = vec![(0..n).collect::<Vec<_>>()];
    for i in 0..n {
        let j = (i + 1) % n;
        faces.push(vec![j, i, n + i, n + j]);
    }
    from_inner_faces(2 * n, &faces)
}

fn hexpatch(rows: usize, cols: usize) -> PlaneGraph {
    let width = 2 * cols + 2;
    let at = |line: usize, x: usize| line * width + x;
    let mut faces = Vec::new();
    for i in 0..rows {
        for j in 0..cols {
            let x = i % 2 + 2 * j;
            faces.push(vec![
                at(i, x),
                at(i, x + 1),
                at(i, x + 2),
                at(i + 1, x + 2),
                at(i + 1, x + 1),
                at(i + 1, x),
            ]);
        }
    }
    let mut dense = vec![usize::MAX; (rows + 1) * width];
    let mut next = 0;
    for f in &mut faces {
        for v in f.iter_mut() {
            if dense[*v] == usize::MAX {
                dense[*v] = next;
                next += 1;
            }
            *v = dense[*v];
        }
    }
    from_inner_faces(next, &faces).expect("hexagon patches are plane")
}

fn padded_face(degrees: &[usize]) -> PlaneGraph {
    let m = degrees.len();
    let mut g = from_faces(m, &cycle_faces(m)).expect("cycle");
    for (i, &d) in degrees.iter().enumerate() {
        // the outer face runs against the cycle, so it holds (i+1) -> i
        g = attach_leaves(&g, (i + 1) % m, i, d - 2);
    }
    g
}

fn shielded_triangle(d: usize) -> PlaneGraph {
    let (a, b, c, p, q, r, s, t, u) = (0, 1, 2, 3, 4, 5, 6, 7, 8);
    let faces = [
        vec![a, b, c],
        vec![b, a, p, q],
        vec![c, b, r, s],
        vec![a, c, t, u],
        vec![a, u, t, c, s, r, b, q, p],
    ];
    let mut g = from_faces(9, &faces).expect("shielded triangle");
    for (before, v) in [(p, a), (r, b), (t, c)] {
        g = attach_leaves(&g, before, v, d - 4);
    }
    g
}

fn h_gadget() -> PlaneGraph {
    let (a, b, c, d, e, y) = (0, 1, 2, 3, 4, 5);
    let faces = [
        vec![a, b, c],
        vec![b, a, e, d],
        vec![a, c, b, d, e, a, y],
    ];
    let mut g = from_faces(6, &faces).expect("h gadget");
    for (before, v, count) in [(c, b, 1), (a, c, 2), (b, d, 2), (d, e, 2)] {
        g = attach_leaves(&g, before, v, count);
    }
    g
}

impl Family {
    pub fn build(&self) -> Result<PlaneGraph, CorpusError> {
        use Family::*;
        let g = match self {
            Empty(n) => {
                if *n == 0 {
                    return Err(bad("empty graph needs at least one vertex"));
                }
                PlaneGraph::from_rotation(vec![Vec::new(); *n])?
            }
            Path(n) => {
                if *n == 0 {
                    return Err(bad("path needs at least one vertex"));
                }
                let edges: Vec<_> = (1..*n).map(|i| (i - 1, i)).collect();
                forest(*n, &edges)?
            }
            Cycle(n) => {
                if *n < 3 {
                    return Err(bad("cycle needs at least 3 vertices"));
                }
                from_faces(*n, &cycle_faces(*n))?
            }
            Star(n) => {
                let edges: Vec<_> = (1..=*n).map(|i| (0, i)).collect();
                forest(n + 1, &edges)?
            }
            Spider(legs) => {
                let mut edges = Vec::new();
                let mut next = 1;
                for &len in legs {
                    let mut prev = 0;
                    for _ in 0..len {
                        edges.push((prev, next));
                        prev = next;
                        next += 1;
                    }
                }
                forest(next, &edges)?
            }
            Caterpillar(spine, legs) => {
                if *spine == 0 {
                    return Err(bad("caterpillar needs a spine"));
                }
                let mut edges: Vec<_> = (1..*spine).map(|i| (i - 1, i)).collect();
                let mut next = *spine;
                for s in 0..*spine {
                    for _ in 0..*legs {
                        edges.push((s, next));
                        next += 1;
                    }
                }
                forest(next, &edges)?
            }
            BinaryTree(depth) => {
                let n = (1usize << (depth + 1)) - 1;
                let edges: Vec<_> = (1..n).map(|i| ((i - 1) / 2, i)).collect();
                forest(n, &edges)?
            }
            TwoByN(n) => {
                if *n < 2 {
                    return Err(bad("K_{2,n} needs n >= 2"));
                }
                let faces: Vec<_> = (0..*n)
                    .map(|i| vec![0, 2 + i, 1, 2 + (i + 1) % n])
                    .collect();
                from_faces(n + 2, &faces)?
            }
            Friendship(t) => {
                if *t == 0 {
                    return Err(bad("friendship graph needs a triangle"));
                }
                let mut faces: Vec<_> = (0..*t).map(|i| vec![0, 1 + 2 * i, 2 + 2 * i]).collect();
                faces.push(
                    (0..*t)
                        .flat_map(|i| [0, 2 + 2 * i, 1 + 2 * i])
                        .collect(),
                );
                from_faces(2 * t + 1, &faces)?
            }
            Grid(r, c) => {
                if *r < 2 || *c < 2 {
                    return Err(bad("grid needs at least 2 rows and 2 columns"));
                }
                let at = |i: usize, j: usize| i * c + j;
                let mut faces = Vec::new();
                for i in 0..r - 1 {
                    for j in 0..c - 1 {
                        faces.push(vec![at(i, j), at(i, j + 1), at(i + 1, j + 1), at(i + 1, j)]);
                    }
                }
                from_inner_faces(r * c, &faces)?
            }
            Hexpatch(r, c) | Kagome(r, c) => {
                if *r == 0 || *c == 0 {
                    return Err(bad("hexagon patch needs at least one hexagon"));
                }
                let h = hexpatch(*r, *c);
                if matches!(self, Kagome(..)) {
                    medial(&h)?
                } else {
                    h
                }
            }
            Wheel(n) => {
                if *n < 3 {
                    return Err(bad("wheel needs at least 3 rim vertices"));
                }
                let faces: Vec<_> = (0..*n).map(|i| vec![0, 1 + i, 1 + (i + 1) % n]).collect();
                from_inner_faces(n + 1, &faces)?
            }
            Prism(n) => {
                if *n < 3 {
                    return Err(bad("prism needs at least 3 sides"));
                }
                prism(*n)?
            }
            Platonic(s) => platonic(*s),
            Truncated(s) => truncate(&platonic(*s))?,
            Subdivided(s) => subdivide(&platonic(*s)),
            Stacked(rounds) => {
                let mut g = from_faces(3, &cycle_faces(3))?;
                for _ in 0..*rounds {
                    g = stack(&g, 0);
                }
                g
            }
            HGadget => h_gadget(),
            PaddedFace(ds) | BadFaceGadget(ds) | SpecialGadget(ds) => {
                if ds.len() < 3 || ds.iter().any(|&d| d < 2) {
                    return Err(bad("padded face needs 3+ corners of degree >= 2"));
                }
                if matches!(self, BadFaceGadget(_)) && !is_bad_degree_vector(ds) {
                    return Err(bad(format!("{ds:?} is not a bad-face degree vector")));
                }
                if matches!(self, SpecialGadget(_)) && !is_special_degree_vector(ds) {
                    return Err(bad(format!("{ds:?} is not a special-face degree vector")));
                }
                padded_face(ds)
            }
            ShieldedTriangle(d) => {
                if *d < 4 {
                    return Err(bad("shielded triangle corners have degree >= 4"));
                }
                shielded_triangle(*d)
            }
            Union(a, b) => disjoint_union(&a.build()?, &b.build()?),
        };
        Ok(g)
    }

    /// Known membership and degeneracy, where the family determines them.
    pub fn declared(&self) -> Declared {
        use Family::*;
        match self {
            Empty(_) => declared(true, 0),
            Path(n) => declared(true, usize::from(*n > 1)),
            Cycle(_) => declared(true, 2),
            Star(n) => declared(true, usize::from(*n > 0)),
            Spider(legs) => declared(true, usize::from(legs.iter().any(|&l| l > 0))),
            Caterpillar(s, l) => declared(true, usize::from(*s > 1 || *l > 0)),
            BinaryTree(d) => declared(true, usize::from(*d > 0)),
            TwoByN(_) | Friendship(_) | Hexpatch(..) => declared(true, 2),
            Grid(r, c) => declared(*r == 2 && *c == 2, 2),
            Kagome(..) => Declared {
                member: Some(true),
                degeneracy: None,
            },
            Wheel(_) | Prism(_) => declared(false, 3),
            Platonic(s) => match s {
                Solid::Tetrahedron | Solid::Cube => declared(false, 3),
                Solid::Octahedron => declared(false, 4),
                Solid::Icosahedron => declared(false, 5),
                Solid::Dodecahedron => declared(true, 3),
            },
            Truncated(_) => declared(true, 3),
            Subdivided(_) => declared(true, 2),
            Stacked(r) => declared(*r == 0, if *r == 0 { 2 } else { 3 }),
            HGadget | PaddedFace(_) | BadFaceGadget(_) | SpecialGadget(_) | ShieldedTriangle(_) => {
                declared(true, 2)
            }
            Union(a, b) => {
                let (x, y) = (a.declared(), b.declared());
                Declared {
                    member: x.member.zip(y.member).map(|(p, q)| p && q),
                    degeneracy: x.degeneracy.zip(y.degeneracy).map(|(p, q)| p.max(q)),
                }
            }
        }
    }
}

fn join(xs: &[usize]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Family::*;
        match self {
            Empty(n) => write!(f, "empty({n})"),
            Path(n) => write!(f, "path({n})"),
            Cycle(n) => write!(f, "cycle({n})"),
            Star(n) => write!(f, "star({n})"),
            Spider(l) => write!(f, "spider({})", join(l)),
            Caterpillar(s, l) => write!(f, "caterpillar({s},{l})"),
            BinaryTree(d) => write!(f, "binary-tree({d})"),
            TwoByN(n) => write!(f, "k2n({n})"),
            Friendship(t) => write!(f, "friendship({t})"),
            Grid(r, c) => write!(f, "grid({r},{c})"),
            Hexpatch(r, c) => write!(f, "hexpatch({r},{c})"),
            Kagome(r, c) => write!(f, "kagome({r},{c})"),
            Wheel(n) => write!(f, "wheel({n})"),
            Prism(n) => write!(f, "prism({n})"),
            Platonic(s) => write!(f, "platonic({})", s.name()),
            Truncated(s) => write!(f, "truncated({})", s.name()),
            Subdivided(s) => write!(f, "subdivided({})", s.name()),
            Stacked(r) => write!(f, "stacked({r})"),
            HGadget => write!(f, "h-gadget"),
            PaddedFace(d) => write!(f, "padded-face({})", join(d)),
            BadFaceGadget(d) => write!(f, "badface-gadget({})", join(d)),
            SpecialGadget(d) => write!(f, "special-gadget({})", join(d)),
            ShieldedTriangle(d) => write!(f, "shielded-triangle({d})"),
            Union(a, b) => write!(f, "union({a},{b})"),
        }
    }
}

/// Splits `a,b(c,d),e` at top-level commas.
fn split_args(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => {
                out.push(s[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(s[start..].trim());
    out
}

impl FromStr for Family {
    type Err = CorpusError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let (name, args) = match s.find('(') {
            Some(i) if s.ends_with(')') => (&s[..i], split_args(&s[i + 1..s.len() - 1])),
            Some(_) => return Err(bad(format!("unbalanced parentheses in {s:?}"))),
            None => (s, Vec::new()),
        };
        let nums = || -> Result<Vec<usize>, CorpusError> {
            args.iter()
                .map(|a| a.parse().map_err(|_| bad(format!("bad number {a:?} in {s:?}"))))
                .collect()
        };
        let want = |count: usize| -> Result<Vec<usize>, CorpusError> {
            let v = nums()?;
            if v.len() != count {
                return Err(bad(format!("{name} takes {count} parameter(s)")));
            }
            Ok(v)
        };
        let solid = || -> Result<Solid, CorpusError> {
            match args.as_slice() {
                [one] => one.parse(),
                _ => Err(bad(format!("{name} takes one solid name"))),
            }
        };
        use Family::*;
        Ok(match name {
            "empty" => Empty(want(1)?[0]),
            "path" => Path(want(1)?[0]),
            "cycle" => Cycle(want(1)?[0]),
            "star" => Star(want(1)?[0]),
            "spider" => Spider(nums()?),
            "caterpillar" => {
                let v = want(2)?;
                Caterpillar(v[0], v[1])
            }
            "binary-tree" => BinaryTree(want(1)?[0]),
            "k2n" => TwoByN(want(1)?[0]),
            "friendship" => Friendship(want(1)?[0]),
            "grid" | "hexpatch" | "kagome" => {
                let v = want(2)?;
                match name {
                    "grid" => Grid(v[0], v[1]),
                    "hexpatch" => Hexpatch(v[0], v[1]),
                    _ => Kagome(v[0], v[1]),
                }
            }
            "wheel" => Wheel(want(1)?[0]),
            "prism" => Prism(want(1)?[0]),
            "platonic" => Platonic(solid()?),
            "truncated" => Truncated(solid()?),
            "subdivided" => Subdivided(solid()?),
            "stacked" => Stacked(want(1)?[0]),
            "h-gadget" => HGadget,
            "padded-face" => PaddedFace(nums()?),
            "badface-gadget" => BadFaceGadget(nums()?),
            "special-gadget" => SpecialGadget(nums()?),
            "shielded-triangle" => ShieldedTriangle(want(1)?[0]),
            "union" => match args.as_slice() {
                [a, b] => Union(Box::new(a.parse()?), Box::new(b.parse()?)),
                _ => return Err(bad("union takes two families")),
            },
            _ => return Err(bad(format!("unknown family {name:?}"))),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Adjacency;

    #[test]
    fn display_parses_back() {
        for s in [
            "cycle(7)",
            "spider(1,2,3)",
            "platonic(octahedron)",
            "union(cycle(5),path(4))",
            "h-gadget",
            "badface-gadget(3,3,5,5)",
        ] {
            assert_eq!(s.parse::<Family>().unwrap().to_string(), s);
        }
        assert!("grid(3)".parse::<Family>().is_err());
        assert!("platonic(sphere)".parse::<Family>().is_err());
    }

    #[test]
    fn solids_have_the_right_counts() {
        let expect = [
            (Solid::Tetrahedron, 4, 6),
            (Solid::Cube, 8, 12),
            (Solid::Octahedron, 6, 12),
            (Solid::Icosahedron, 12, 30),
            (Solid::Dodecahedron, 20, 30),
        ];
        for (s, n, m) in expect {
            let g = Family::Platonic(s).build().unwrap();
            assert_eq!((g.vertex_count(), g.edge_count()), (n, m), "{s:?}");
        }
    }

    #[test]
    fn gadgets_have_the_requested_degrees() {
        let g = Family::ShieldedTriangle(5).build().unwrap();
        assert_eq!((0..3).map(|v| g.degree(v)).collect::<Vec<_>>(), vec![5, 5, 5]);
        let g = Family::PaddedFace(vec![3, 3, 6, 6]).build().unwrap();
        assert_eq!((0..4).map(|v| g.degree(v)).collect::<Vec<_>>(), vec![3, 3, 6, 6]);
        let g = Family::HGadget.build().unwrap();
        assert_eq!((0..5).map(|v| g.degree(v)).collect::<Vec<_>>(), vec![4; 5]);
        assert!(Family::BadFaceGadget(vec![3, 3, 6, 6]).build().is_err());
    }
}
