use num_rational::Ratio;
use serde::Deserialize;

use super::DischargeError;
use crate::graph::DegreeCond;
use crate::structure::{DegreePattern, VertexKind};

/// How a rule row pairs sources with sinks, and how often it fires.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Relation {
    /// Once per corner of the vertex on the face.
    VertexToIncidentFace,
    /// Once per neighbor.
    VertexToAdjacentVertex,
    /// Once per common edge.
    FaceToAdjacentFace,
    /// Once per (vertex, bad face) pair of weak incidence.
    VertexToWeaklyIncidentFace,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Share {
    /// Among the qualifying faces at the source that are adjacent to each
    /// other, only the one with the lowest id receives.
    OnePerAdjacentGroup,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SourceFilter {
    pub degree: Option<DegreeCond>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SinkFilter {
    /// Degree of the sink (face length or vertex degree).
    pub degree: Option<DegreeCond>,
    /// Face sinks: boundary degrees must match one of these.
    #[serde(default)]
    pub pattern: Vec<DegreePattern>,
    /// Face sinks: boundary degrees must match none of these.
    #[serde(default)]
    pub exclude_pattern: Vec<DegreePattern>,
    /// Vertex sinks.
    pub kind: Option<VertexKind>,
    /// Vertex sinks: exact number of neighbors of degree 1..=3.
    pub low_neighbors: Option<usize>,
    /// Face sinks: whether a 2-vertex lies on the face.
    pub two_vertex: Option<bool>,
    /// Face sinks: bad-face status.
    pub bad: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RuleRow {
    pub rule: String,
    pub relation: Relation,
    #[serde(default)]
    pub source: SourceFilter,
    #[serde(default)]
    pub sink: SinkFilter,
    #[serde(deserialize_with = "amount")]
    pub amount: Ratio<i64>,
    pub share: Option<Share>,
}

fn amount<'de, D: serde::Deserializer<'de>>(d: D) -> Result<Ratio<i64>, D::Error> {
    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Raw {
        Int(i64),
        Text(String),
    }
    let r = match Raw::deserialize(d)? {
        Raw::Int(n) => Ratio::from_integer(n),
        Raw::Text(t) => t
            .trim()
            .parse::<Ratio<i64>>()
            .map_err(|_| serde::de::Error::custom(format!("bad amount {t:?}")))?,
    };
    if r < Ratio::from_integer(0) {
        return Err(serde::de::Error::custom("rule amounts must be nonnegative"));
    }
    Ok(r)
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RuleTable {
    pub name: String,
    pub rules: Vec<RuleRow>,
}

const BUILTIN: [(&str, &str); 5] = [
    ("D", include_str!("../../rules/D.json")),
    ("R1", include_str!("../../rules/R1.json")),
    ("R3", include_str!("../../rules/R3.json")),
    ("R2v", include_str!("../../rules/R2v.json")),
    ("R4v", include_str!("../../rules/R4v.json")),
];

impl RuleTable {
    pub fn parse(text: &str) -> Result<Self, DischargeError> {
        serde_json::from_str(text).map_err(|e| DischargeError::MalformedRules(e.to_string()))
    }

    /// Shipped tables: `D`, `R1` (minimum degree 3), `R3` (with 2-vertices),
    /// `R2v` and `R4v` (variants for faces on 2-vertices). The long names
    /// `R-case1`, `R-case3`, `R-case2-variant`, `R-case4-variant` are
    /// accepted too.
    pub fn builtin(id: &str) -> Result<Self, DischargeError> {
        let key = match id {
            "R-case1" => "R1",
            "R-case3" => "R3",
            "R-case2-variant" => "R2v",
            "R-case4-variant" => "R4v",
            other => other,
        };
        let (_, text) = BUILTIN
            .iter()
            .find(|(name, _)| *name == key)
            .ok_or_else(|| DischargeError::UnknownRuleset(id.to_string()))?;
        Self::parse(text)
    }

    pub fn builtin_ids() -> Vec<&'static str> {
        BUILTIN.iter().map(|(name, _)| *name).collect()
    }
}

/// Sort key for rule ids: alphabetic prefix, then the number (so `R10`
/// follows `R9`).
pub fn rule_order(id: &str) -> (String, u64, String) {
    let split = id.find(|c: char| c.is_ascii_digit()).unwrap_or(id.len());
    let (prefix, rest) = id.split_at(split);
    let digits: String = rest.chars().take_while(|c| c.is_ascii_digit()).collect();
    let tail = rest[digits.len()..].to_string();
    (prefix.to_string(), digits.parse().unwrap_or(0), tail)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtins_parse() {
        for id in RuleTable::builtin_ids() {
            let t = RuleTable::builtin(id).unwrap();
            assert_eq!(t.name, id);
            assert!(!t.rules.is_empty());
        }
        assert!(RuleTable::builtin("R-case3").is_ok());
        assert!(RuleTable::builtin("Z").is_err());
    }

    #[test]
    fn natural_rule_order() {
        let mut ids = vec!["R10", "R2", "D3", "R1", "C2V", "R9"];
        ids.sort_by_key(|s| rule_order(s));
        assert_eq!(ids, vec!["C2V", "D3", "R1", "R2", "R9", "R10"]);
    }

    #[test]
    fn negative_amount_rejected() {
        let text = r#"{"name":"x","rules":[{"rule":"X1","relation":"vertex-to-adjacent-vertex","amount":"-1"}]}"#;
        assert!(RuleTable::parse(text).is_err());
    }
}
