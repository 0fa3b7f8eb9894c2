use std::collections::BTreeSet;

use serde::{Serialize, Serializer};

use super::scalar::ChargeScalar;
use super::scheme::{ChargeLedger, Element};
use crate::graph::PlaneGraph;
use crate::structure::{Classification, DegreePattern, VertexKind};

/// Elements allowed to end negative, each with the lowest final charge it
/// may have. `exempt` elements are ignored entirely (e.g. the outer
/// boundary of a patch).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Allowances<S: ChargeScalar> {
    pub special_three_vertex: Option<S>,
    /// Special faces of type (3,4,4), (3,4,5), (3,4,6).
    pub special_face: Option<S>,
    /// Special faces of type (3,3,5+).
    pub special_face_335: Option<S>,
    pub special_two_vertex: Option<S>,
    pub one_vertex: Option<S>,
    pub exempt: BTreeSet<Element>,
}

impl<S: ChargeScalar> Allowances<S> {
    pub fn none() -> Self {
        Allowances {
            special_three_vertex: None,
            special_face: None,
            special_face_335: None,
            special_two_vertex: None,
            one_vertex: None,
            exempt: BTreeSet::new(),
        }
    }

    /// The exceptional budget of the second charge scheme: special
    /// 3-vertices `-1`, special faces `-7/3` or `-2` for (3,3,5+), special
    /// 2-vertices `-4`, 1-vertices `-7`.
    pub fn exceptional_budget() -> Self {
        Allowances {
            special_three_vertex: Some(S::from_int(-1)),
            special_face: Some(S::from_ratio(-7, 3)),
            special_face_335: Some(S::from_int(-2)),
            special_two_vertex: Some(S::from_int(-4)),
            one_vertex: Some(S::from_int(-7)),
            exempt: BTreeSet::new(),
        }
    }

    pub fn with_exempt(mut self, exempt: impl IntoIterator<Item = Element>) -> Self {
        self.exempt.extend(exempt);
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum NegativeStatus {
    Allowed,
    /// Matches an allowance category but lies below its bound.
    BelowBound,
    Unexplained,
    Exempt,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(bound(serialize = ""))]
pub struct NegativeEntry<S: ChargeScalar> {
    pub element: Element,
    #[serde(serialize_with = "as_string")]
    pub charge: S,
    pub status: NegativeStatus,
    pub category: Option<&'static str>,
    #[serde(serialize_with = "opt_as_string")]
    pub bound: Option<S>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(bound(serialize = ""))]
pub struct AuditReport<S: ChargeScalar> {
    pub negatives: Vec<NegativeEntry<S>>,
    pub allowed: Vec<Element>,
    /// Negative elements not covered by an allowance (including those below
    /// their bound).
    pub unexplained: Vec<Element>,
    pub exempt: Vec<Element>,
    #[serde(serialize_with = "as_string")]
    pub final_total: S,
    #[serde(serialize_with = "as_string")]
    pub expected_total: S,
    /// Sum of the bounds of the allowed exceptions.
    #[serde(serialize_with = "as_string")]
    pub exception_floor: S,
    /// Sum of the unexplained negative charges.
    #[serde(serialize_with = "as_string")]
    pub unexplained_deficit: S,
    /// Whether `exception_floor + unexplained_deficit` exceeds the scheme
    /// total, i.e. the negatives cannot add up to it. Never true on a real
    /// graph; true exactly when the budget argument yields a contradiction.
    pub budget_contradicts_total: bool,
}

fn as_string<S: ChargeScalar, Z: Serializer>(x: &S, s: Z) -> Result<Z::Ok, Z::Error> {
    s.collect_str(x)
}

fn opt_as_string<S: ChargeScalar, Z: Serializer>(x: &Option<S>, s: Z) -> Result<Z::Ok, Z::Error> {
    match x {
        Some(x) => s.collect_str(x),
        None => s.serialize_none(),
    }
}

fn category<'a, S: ChargeScalar>(
    e: Element,
    g: &PlaneGraph,
    classes: &Classification,
    allow: &'a Allowances<S>,
) -> Option<(&'static str, &'a Option<S>)> {
    use crate::graph::Adjacency;
    match e {
        Element::Vertex(v) => match classes.vertices[v].kind {
            VertexKind::Special3 => Some(("special-3-vertex", &allow.special_three_vertex)),
            VertexKind::Special2 => Some(("special-2-vertex", &allow.special_two_vertex)),
            _ if g.degree(v) == 1 => Some(("1-vertex", &allow.one_vertex)),
            _ => None,
        },
        Element::Face(f) => {
            let fp = &classes.faces[f];
            if !fp.is_special {
                return None;
            }
            let p335: DegreePattern = "3,3,5+".parse().expect("pattern");
            if p335.matches(&fp.vertex_degrees) {
                Some(("special-face-3-3-5+", &allow.special_face_335))
            } else {
                Some(("special-face", &allow.special_face))
            }
        }
    }
}

pub fn audit_charges<S: ChargeScalar>(
    g: &PlaneGraph,
    classes: &Classification,
    ledger: &ChargeLedger<S>,
    allowances: &Allowances<S>,
) -> AuditReport<S> {
    let mut negatives = Vec::new();
    let mut allowed = Vec::new();
    let mut unexplained = Vec::new();
    let mut exempt = Vec::new();
    let mut exception_floor = S::zero();
    let mut unexplained_deficit = S::zero();
    for e in ledger.elements() {
        let charge = ledger.final_charge(e).clone();
        if !charge.is_negative() {
            continue;
        }
        let cat = category(e, g, classes, allowances);
        let (status, name, bound) = if allowances.exempt.contains(&e) {
            (NegativeStatus::Exempt, cat.map(|c| c.0), None)
        } else {
            match cat {
                Some((name, Some(bound))) if charge >= *bound => {
                    (NegativeStatus::Allowed, Some(name), Some(bound.clone()))
                }
                Some((name, Some(bound))) => {
                    (NegativeStatus::BelowBound, Some(name), Some(bound.clone()))
                }
                Some((name, None)) => (NegativeStatus::Unexplained, Some(name), None),
                None => (NegativeStatus::Unexplained, None, None),
            }
        };
        match status {
            NegativeStatus::Allowed => {
                exception_floor = exception_floor + bound.clone().expect("allowed has a bound");
                allowed.push(e);
            }
            NegativeStatus::Exempt => exempt.push(e),
            _ => {
                unexplained_deficit = unexplained_deficit + charge.clone();
                unexplained.push(e);
            }
        }
        negatives.push(NegativeEntry {
            element: e,
            charge,
            status,
            category: name,
            bound,
        });
    }
    let expected_total =
        S::from_int(ledger.scheme.component_total() * g.component_count() as i64);
    let budget_contradicts_total =
        exception_floor.clone() + unexplained_deficit.clone() > expected_total;
    AuditReport {
        negatives,
        allowed,
        unexplained,
        exempt,
        final_total: ledger.final_total(),
        expected_total,
        exception_floor,
        unexplained_deficit,
        budget_contradicts_total,
    }
}
