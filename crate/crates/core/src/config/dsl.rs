use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize, Serializer};

use super::ConfigError;

/// Position label of a pattern vertex in the ordered set `x_1..x_k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    /// `x_{k-j}`; `Top(0)` is `x_k`.
    Top(usize),
    /// `x_i` for `i >= 1`.
    Bottom(usize),
}

impl Label {
    /// Index in `1..=k`, or `None` when it does not fit.
    pub fn index(self, k: usize) -> Option<usize> {
        match self {
            Label::Top(j) if j < k => Some(k - j),
            Label::Bottom(i) if (1..=k).contains(&i) => Some(i),
            _ => None,
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Top(0) => write!(f, "x_k"),
            Label::Top(j) => write!(f, "x_{{k-{j}}}"),
            Label::Bottom(i) => write!(f, "x_{i}"),
        }
    }
}

impl FromStr for Label {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || format!("bad label {s:?}");
        let body = s.trim().strip_prefix("x_").ok_or_else(bad)?;
        let body = body.trim_start_matches('{').trim_end_matches('}');
        let body: String = body.replace('\u{2212}', "-").replace(' ', "");
        if body == "k" {
            return Ok(Label::Top(0));
        }
        if let Some(j) = body.strip_prefix("k-") {
            return j.parse().map(Label::Top).map_err(|_| bad());
        }
        match body.parse::<usize>() {
            Ok(i) if i >= 1 => Ok(Label::Bottom(i)),
            _ => Err(bad()),
        }
    }
}

impl Serialize for Label {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    /// Has no host edges besides the shown ones.
    Solid,
    Hollow,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum DegreeSpec {
    Exact(usize),
    Range(usize, usize),
    /// From the number of shown edges up to the host's maximum degree.
    ShownToDelta,
}

impl DegreeSpec {
    /// Inclusive degree bounds for a vertex with `shown` pattern edges in a
    /// host of maximum degree `delta`.
    pub fn bounds(self, shown: usize, delta: usize) -> (usize, usize) {
        match self {
            DegreeSpec::Exact(d) => (d, d),
            DegreeSpec::Range(lo, hi) => (lo, hi),
            DegreeSpec::ShownToDelta => (shown, delta.max(shown)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PatternVertex {
    pub id: String,
    pub label: Option<Label>,
    pub kind: Kind,
    pub degree: DegreeSpec,
    /// Number of pattern edges at this vertex.
    pub shown: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FaceConstraint {
    /// Pattern vertices bounding one host face.
    pub cycle: Vec<usize>,
    /// Members of `cycle` whose position along the face is fixed; the
    /// others may be permuted.
    pub anchored: Vec<usize>,
}

/// Degree-constrained plane pattern. Vertex references are indices into
/// `vertices`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Configuration {
    pub name: String,
    pub vertices: Vec<PatternVertex>,
    pub edges: Vec<(usize, usize)>,
    pub faces: Vec<FaceConstraint>,
    /// Groups whose members must map to pairwise distinct host vertices.
    /// Always includes the group of `x_k, x_{k-1}, x_{k-2}` when present.
    pub distinct: Vec<Vec<usize>>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawId {
    Num(u64),
    Text(String),
}

impl RawId {
    fn into_string(self) -> String {
        match self {
            RawId::Num(n) => n.to_string(),
            RawId::Text(t) => t,
        }
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawDegree {
    Exact(usize),
    Range([usize; 2]),
    Text(String),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawVertex {
    id: RawId,
    label: Option<String>,
    kind: Kind,
    degree: Option<RawDegree>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFace {
    cycle: Vec<RawId>,
    #[serde(default)]
    anchored: Vec<RawId>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    #[serde(default)]
    name: String,
    vertices: Vec<RawVertex>,
    #[serde(default)]
    edges: Vec<[RawId; 2]>,
    #[serde(default)]
    faces: Vec<RawFace>,
    #[serde(default)]
    distinct: Vec<Vec<RawId>>,
}

pub fn parse_configuration(text: &str) -> Result<Configuration, ConfigError> {
    let raw: RawConfig =
        serde_json::from_str(text).map_err(|e| ConfigError::MalformedPattern(e.to_string()))?;
    Configuration::from_raw(raw)
}

impl Configuration {
    fn from_raw(raw: RawConfig) -> Result<Self, ConfigError> {
        let malformed = |m: String| ConfigError::MalformedPattern(m);
        if raw.vertices.is_empty() {
            return Err(malformed("pattern has no vertices".into()));
        }
        let mut index = BTreeMap::new();
        let mut labels = BTreeMap::new();
        let mut vertices = Vec::new();
        for (i, v) in raw.vertices.into_iter().enumerate() {
            let id = v.id.into_string();
            if index.insert(id.clone(), i).is_some() {
                return Err(malformed(format!("duplicate vertex id {id:?}")));
            }
            let label = match v.label {
                Some(t) => {
                    let l: Label = t.parse().map_err(malformed)?;
                    if labels.insert(l, i).is_some() {
                        return Err(malformed(format!("label {l} used twice")));
                    }
                    Some(l)
                }
                None => None,
            };
            let degree = match v.degree {
                None => None,
                Some(RawDegree::Exact(d)) => Some(DegreeSpec::Exact(d)),
                Some(RawDegree::Range([lo, hi])) => {
                    if lo > hi {
                        return Err(malformed(format!("vertex {id:?}: empty range")));
                    }
                    Some(DegreeSpec::Range(lo, hi))
                }
                Some(RawDegree::Text(t)) if t == "shown-to-Delta" => Some(DegreeSpec::ShownToDelta),
                Some(RawDegree::Text(t)) => {
                    return Err(malformed(format!("vertex {id:?}: bad degree {t:?}")))
                }
            };
            vertices.push((id, label, v.kind, degree));
        }
        let lookup = |r: RawId| -> Result<usize, ConfigError> {
            let id = r.into_string();
            index
                .get(&id)
                .copied()
                .ok_or_else(|| ConfigError::MalformedPattern(format!("unknown vertex {id:?}")))
        };

        let n = vertices.len();
        let mut edges = Vec::new();
        let mut shown = vec![0; n];
        for [a, b] in raw.edges {
            let (a, b) = (lookup(a)?, lookup(b)?);
            if a == b {
                return Err(malformed(format!("loop at {:?}", vertices[a].0)));
            }
            let e = (a.min(b), a.max(b));
            if edges.contains(&e) {
                return Err(malformed(format!(
                    "edge {:?}-{:?} listed twice",
                    vertices[a].0, vertices[b].0
                )));
            }
            edges.push(e);
            shown[a] += 1;
            shown[b] += 1;
        }

        let mut faces = Vec::new();
        for f in raw.faces {
            let cycle: Vec<usize> = f.cycle.into_iter().map(lookup).collect::<Result<_, _>>()?;
            let anchored: Vec<usize> =
                f.anchored.into_iter().map(lookup).collect::<Result<_, _>>()?;
            if cycle.len() < 3 {
                return Err(malformed("face constraint shorter than 3".into()));
            }
            for i in 0..cycle.len() {
                let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
                if !edges.contains(&(a.min(b), a.max(b))) {
                    return Err(malformed(format!(
                        "face boundary uses missing edge {:?}-{:?}",
                        vertices[a].0, vertices[b].0
                    )));
                }
            }
            if anchored.iter().any(|a| !cycle.contains(a)) {
                return Err(malformed("anchored vertex not on its face".into()));
            }
            faces.push(FaceConstraint { cycle, anchored });
        }

        let mut distinct: Vec<Vec<usize>> = Vec::new();
        let mut top: Vec<usize> = (0..3)
            .filter_map(|j| labels.get(&Label::Top(j)).copied())
            .collect();
        top.sort_unstable();
        if top.len() > 1 {
            distinct.push(top);
        }
        for group in raw.distinct {
            let mut g: Vec<usize> = group.into_iter().map(lookup).collect::<Result<_, _>>()?;
            g.sort_unstable();
            g.dedup();
            if g.len() > 1 && !distinct.contains(&g) {
                distinct.push(g);
            }
        }

        let vertices = vertices
            .into_iter()
            .enumerate()
            .map(|(i, (id, label, kind, degree))| {
                let s = shown[i];
                let degree = match (kind, degree) {
                    (Kind::Solid, None) => DegreeSpec::Exact(s),
                    (Kind::Solid, Some(DegreeSpec::Exact(d))) if d == s => DegreeSpec::Exact(d),
                    (Kind::Solid, Some(_)) => {
                        return Err(malformed(format!(
                            "solid vertex {id:?} must have degree equal to its {s} shown edges"
                        )))
                    }
                    (Kind::Hollow, None) => DegreeSpec::ShownToDelta,
                    (Kind::Hollow, Some(spec)) => {
                        let lo = match spec {
                            DegreeSpec::Exact(d) => d,
                            DegreeSpec::Range(lo, _) => lo,
                            DegreeSpec::ShownToDelta => s,
                        };
                        if lo < s {
                            return Err(ConfigError::DegreeBelowShownEdges {
                                vertex: id,
                                shown: s,
                                lower: lo,
                            });
                        }
                        spec
                    }
                };
                Ok(PatternVertex {
                    id,
                    label,
                    kind,
                    degree,
                    shown: s,
                })
            })
            .collect::<Result<Vec<_>, _>>()?;

        Ok(Configuration {
            name: raw.name,
            vertices,
            edges,
            faces,
            distinct,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn neighbors(&self, p: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == p {
                    Some(b)
                } else if b == p {
                    Some(a)
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn labelled(&self) -> Vec<(usize, Label)> {
        self.vertices
            .iter()
            .enumerate()
            .filter_map(|(i, v)| v.label.map(|l| (i, l)))
            .collect()
    }

    /// Whether `p` and `q` belong to a common distinct group.
    pub fn must_differ(&self, p: usize, q: usize) -> bool {
        self.distinct
            .iter()
            .any(|g| g.contains(&p) && g.contains(&q))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels_parse_in_both_spellings() {
        assert_eq!("x_k".parse(), Ok(Label::Top(0)));
        assert_eq!("x_{k-3}".parse(), Ok(Label::Top(3)));
        assert_eq!("x_{k\u{2212}1}".parse(), Ok(Label::Top(1)));
        assert_eq!("x_2".parse(), Ok(Label::Bottom(2)));
        assert!("x_0".parse::<Label>().is_err());
        assert_eq!(Label::Top(2).index(7), Some(5));
        assert_eq!(Label::Bottom(8).index(7), None);
        assert_eq!(Label::Top(4).to_string(), "x_{k-4}");
    }

    #[test]
    fn hollow_range_below_shown_edges() {
        let text = r#"{"vertices":[
            {"id":"h","kind":"hollow","degree":[2,5]},
            {"id":"a","kind":"hollow"},{"id":"b","kind":"hollow"},{"id":"c","kind":"hollow"}],
            "edges":[["h","a"],["h","b"],["h","c"]]}"#;
        assert!(matches!(
            parse_configuration(text),
            Err(ConfigError::DegreeBelowShownEdges { shown: 3, lower: 2, .. })
        ));
    }

    #[test]
    fn empty_pattern_is_malformed() {
        assert!(matches!(
            parse_configuration(r#"{"vertices":[]}"#),
            Err(ConfigError::MalformedPattern(_))
        ));
    }

    #[test]
    fn top_three_labels_are_implicitly_distinct() {
        let text = r#"{"vertices":[
            {"id":0,"label":"x_k","kind":"hollow"},
            {"id":1,"label":"x_{k-1}","kind":"hollow"},
            {"id":2,"label":"x_{k-2}","kind":"hollow"},
            {"id":3,"label":"x_1","kind":"hollow"}],
            "edges":[[0,1],[1,2],[2,3]]}"#;
        let c = parse_configuration(text).unwrap();
        assert_eq!(c.distinct, vec![vec![0, 1, 2]]);
        assert!(c.must_differ(0, 2));
        assert!(!c.must_differ(0, 3));
        assert_eq!(c.vertices[1].degree, DegreeSpec::ShownToDelta);
    }
}
