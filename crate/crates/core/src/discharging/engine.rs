use std::collections::{BTreeMap, BTreeSet};

use super::rules::{rule_order, Relation, RuleRow, RuleTable, Share, SinkFilter};
use super::scalar::ChargeScalar;
use super::scheme::{ChargeLedger, Element, Transfer};
use super::DischargeError;
use crate::graph::{Adjacency, FaceId, PlaneGraph};
use crate::structure::{Classification, FaceProfile, VertexProfile};

enum Sink<'a> {
    Face(&'a FaceProfile, Option<usize>),
    Vertex(&'a VertexProfile),
}

fn sink_matches(filter: &SinkFilter, sink: &Sink) -> bool {
    match sink {
        Sink::Face(fp, corner) => {
            if filter.kind.is_some() || filter.low_neighbors.is_some() {
                return false;
            }
            let hit = |p: &crate::structure::DegreePattern| match corner {
                Some(c) => p.matches_at(&fp.vertex_degrees, *c),
                None => p.matches(&fp.vertex_degrees),
            };
            filter.degree.is_none_or(|d| d.matches(fp.degree))
                && (filter.pattern.is_empty() || filter.pattern.iter().any(hit))
                && !filter.exclude_pattern.iter().any(hit)
                && filter.two_vertex.is_none_or(|t| t == fp.has_two_vertex)
                && filter.bad.is_none_or(|b| b == fp.is_bad)
        }
        Sink::Vertex(vp) => {
            if !filter.pattern.is_empty()
                || !filter.exclude_pattern.is_empty()
                || filter.two_vertex.is_some()
                || filter.bad.is_some()
            {
                return false;
            }
            filter.degree.is_none_or(|d| d.matches(vp.degree))
                && filter.kind.is_none_or(|k| k == vp.kind)
                && filter.low_neighbors.is_none_or(|n| n == vp.low_neighbors)
        }
    }
}

/// Matching rows at one instance, one per rule id. Rows of the same rule
/// that match with different amounts are an error.
fn resolve<'r>(
    rows: &[&'r RuleRow],
    source_degree: usize,
    sink: &Sink,
    source: Element,
    sink_el: Element,
) -> Result<Vec<(&'r str, &'r RuleRow)>, DischargeError> {
    let mut by_rule: BTreeMap<&str, Vec<&RuleRow>> = BTreeMap::new();
    for row in rows {
        if row.source.degree.is_none_or(|d| d.matches(source_degree))
            && sink_matches(&row.sink, sink)
        {
            by_rule.entry(row.rule.as_str()).or_default().push(row);
        }
    }
    let mut out = Vec::new();
    for (rule, hits) in by_rule {
        let amounts: BTreeSet<_> = hits.iter().map(|r| r.amount).collect();
        if amounts.len() > 1 {
            return Err(DischargeError::AmbiguousRule {
                rule: rule.to_string(),
                from: source.to_string(),
                to: sink_el.to_string(),
                amounts: amounts.iter().map(|a| a.to_string()).collect(),
            });
        }
        out.push((rule, hits[0]));
    }
    Ok(out)
}

struct Pending<'r> {
    row: &'r RuleRow,
    source: Element,
    sink: Element,
}

/// Applies every row of `table` to `g` and appends the transfers to
/// `ledger`. Transfers are kept sorted by rule id, source, then sink.
pub fn apply_ruleset<S: ChargeScalar>(
    g: &PlaneGraph,
    classes: &Classification,
    mut ledger: ChargeLedger<S>,
    table: &RuleTable,
) -> Result<ChargeLedger<S>, DischargeError> {
    let rows_for = |rel: Relation| -> Vec<&RuleRow> {
        table.rules.iter().filter(|r| r.relation == rel).collect()
    };
    let mut pending: Vec<Pending> = Vec::new();

    let corner_rows = rows_for(Relation::VertexToIncidentFace);
    if !corner_rows.is_empty() {
        for v in g.vertices() {
            let mut shared: BTreeMap<&str, (&RuleRow, BTreeSet<FaceId>)> = BTreeMap::new();
            for (i, &f) in g.corner_faces(v).iter().enumerate() {
                let next = g.rotation(v)[i];
                let face = g.face(f);
                let corner = face
                    .darts()
                    .position(|d| d == (v, next))
                    .expect("dart lies on its face");
                let sink = Sink::Face(&classes.faces[f], Some(corner));
                let (src, dst) = (Element::Vertex(v), Element::Face(f));
                for (rule, row) in resolve(&corner_rows, g.degree(v), &sink, src, dst)? {
                    match row.share {
                        Some(Share::OnePerAdjacentGroup) => {
                            shared.entry(rule).or_insert((row, BTreeSet::new())).1.insert(f);
                        }
                        None => pending.push(Pending {
                            row,
                            source: src,
                            sink: dst,
                        }),
                    }
                }
            }
            for (row, faces) in shared.into_values() {
                for f in group_leaders(classes, &faces) {
                    pending.push(Pending {
                        row,
                        source: Element::Vertex(v),
                        sink: Element::Face(f),
                    });
                }
            }
        }
    }

    let vertex_rows = rows_for(Relation::VertexToAdjacentVertex);
    if !vertex_rows.is_empty() {
        for v in g.vertices() {
            for &w in g.neighbors(v) {
                let sink = Sink::Vertex(&classes.vertices[w]);
                let (src, dst) = (Element::Vertex(v), Element::Vertex(w));
                for (_, row) in resolve(&vertex_rows, g.degree(v), &sink, src, dst)? {
                    pending.push(Pending {
                        row,
                        source: src,
                        sink: dst,
                    });
                }
            }
        }
    }

    let face_rows = rows_for(Relation::FaceToAdjacentFace);
    if !face_rows.is_empty() {
        for fp in &classes.faces {
            for &h in &fp.adjacent_face_ids {
                let sink = Sink::Face(&classes.faces[h], None);
                let (src, dst) = (Element::Face(fp.face), Element::Face(h));
                for (_, row) in resolve(&face_rows, fp.degree, &sink, src, dst)? {
                    pending.push(Pending {
                        row,
                        source: src,
                        sink: dst,
                    });
                }
            }
        }
    }

    let weak_rows = rows_for(Relation::VertexToWeaklyIncidentFace);
    if !weak_rows.is_empty() {
        for vp in &classes.vertices {
            for &f in &vp.weakly_incident_bad_faces {
                let sink = Sink::Face(&classes.faces[f], None);
                let (src, dst) = (Element::Vertex(vp.vertex), Element::Face(f));
                for (_, row) in resolve(&weak_rows, vp.degree, &sink, src, dst)? {
                    pending.push(Pending {
                        row,
                        source: src,
                        sink: dst,
                    });
                }
            }
        }
    }

    for p in pending {
        if p.row.amount == num_rational::Ratio::from_integer(0) {
            continue;
        }
        let amount = S::from_ratio(*p.row.amount.numer(), *p.row.amount.denom());
        ledger.transfers.push(Transfer {
            rule: p.row.rule.clone(),
            source: p.source,
            sink: p.sink,
            amount,
        });
    }
    ledger.transfers.sort_by(|a, b| {
        (rule_order(&a.rule), a.source, a.sink).cmp(&(rule_order(&b.rule), b.source, b.sink))
    });
    ledger.rulesets.push(table.name.clone());
    recompute_final(&mut ledger);
    Ok(ledger)
}

/// Splits `faces` into groups connected by face adjacency and returns the
/// lowest id of each group.
fn group_leaders(classes: &Classification, faces: &BTreeSet<FaceId>) -> Vec<FaceId> {
    let mut seen = BTreeSet::new();
    let mut leaders = Vec::new();
    for &f in faces {
        if !seen.insert(f) {
            continue;
        }
        leaders.push(f);
        let mut stack = vec![f];
        while let Some(x) = stack.pop() {
            for &y in &classes.faces[x].adjacent_face_ids {
                if faces.contains(&y) && seen.insert(y) {
                    stack.push(y);
                }
            }
        }
    }
    leaders
}

fn recompute_final<S: ChargeScalar>(ledger: &mut ChargeLedger<S>) {
    ledger.final_vertex = ledger.initial_vertex.clone();
    ledger.final_face = ledger.initial_face.clone();
    for t in &ledger.transfers {
        for (e, sign) in [(t.source, -1), (t.sink, 1)] {
            let slot = match e {
                Element::Vertex(v) => &mut ledger.final_vertex[v],
                Element::Face(f) => &mut ledger.final_face[f],
            };
            *slot = if sign < 0 {
                slot.clone() - t.amount.clone()
            } else {
                slot.clone() + t.amount.clone()
            };
        }
    }
}
