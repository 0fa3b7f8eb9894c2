use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::graph::DegreeCond;

/// Degree-vector pattern for a face, e.g. `3,4,5-,6-` or `(3,3,5+)`.
///
/// Slots are matched against the multiset of boundary-vertex degrees. One
/// slot may be prefixed with `@`; it then has to be taken by the corner
/// named when matching (the vertex giving or receiving charge).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DegreePattern {
    slots: Vec<DegreeCond>,
    anchor: Option<usize>,
}

impl DegreePattern {
    pub fn new(slots: Vec<DegreeCond>) -> Self {
        DegreePattern {
            slots,
            anchor: None,
        }
    }

    pub fn len(&self) -> usize {
        self.slots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slots.is_empty()
    }

    pub fn slots(&self) -> &[DegreeCond] {
        &self.slots
    }

    pub fn anchor(&self) -> Option<usize> {
        self.anchor
    }

    /// Multiset match, ignoring any anchor.
    pub fn matches(&self, degrees: &[usize]) -> bool {
        self.matches_inner(degrees, None)
    }

    /// Match where `degrees[corner]` must occupy the anchored slot (if the
    /// pattern has one).
    pub fn matches_at(&self, degrees: &[usize], corner: usize) -> bool {
        self.matches_inner(degrees, self.anchor.map(|a| (corner, a)))
    }

    fn matches_inner(&self, degrees: &[usize], pinned: Option<(usize, usize)>) -> bool {
        if degrees.len() != self.slots.len() {
            return false;
        }
        let mut used = vec![false; self.slots.len()];
        if let Some((corner, slot)) = pinned {
            if !self.slots[slot].matches(degrees[corner]) {
                return false;
            }
            used[slot] = true;
            let rest: Vec<usize> = degrees
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != corner)
                .map(|(_, &d)| d)
                .collect();
            return assign(&self.slots, &rest, 0, &mut used);
        }
        assign(&self.slots, degrees, 0, &mut used)
    }
}

fn assign(slots: &[DegreeCond], degrees: &[usize], i: usize, used: &mut [bool]) -> bool {
    if i == degrees.len() {
        return true;
    }
    for s in 0..slots.len() {
        if !used[s] && slots[s].matches(degrees[i]) {
            used[s] = true;
            if assign(slots, degrees, i + 1, used) {
                used[s] = false;
                return true;
            }
            used[s] = false;
        }
    }
    false
}

impl fmt::Display for DegreePattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.slots.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            if self.anchor == Some(i) {
                f.write_str("@")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl FromStr for DegreePattern {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let body = s.trim().trim_start_matches('(').trim_end_matches(')');
        let mut slots = Vec::new();
        let mut anchor = None;
        for (i, part) in body.split(',').enumerate() {
            let part = part.trim();
            let cond = match part.strip_prefix('@') {
                Some(rest) => {
                    if anchor.replace(i).is_some() {
                        return Err(format!("pattern {s:?} has more than one anchor"));
                    }
                    rest
                }
                None => part,
            };
            slots.push(cond.parse()?);
        }
        if slots.is_empty() {
            return Err("empty degree pattern".into());
        }
        Ok(DegreePattern { slots, anchor })
    }
}

impl Serialize for DegreePattern {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for DegreePattern {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        String::deserialize(d)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

pub(crate) fn patterns(list: &[&str]) -> Vec<DegreePattern> {
    list.iter()
        .map(|p| p.parse().expect("built-in pattern"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> DegreePattern {
        s.parse().unwrap()
    }

    #[test]
    fn multiset_matching_needs_a_bijection() {
        let bad = p("3,4,5-,6-");
        assert!(bad.matches(&[4, 3, 6, 5]));
        assert!(bad.matches(&[3, 4, 4, 4]));
        assert!(!bad.matches(&[3, 4, 6, 6]));
        assert!(!bad.matches(&[3, 4, 5]));
        assert!(p("(3,3,5+)").matches(&[5, 3, 3]));
        assert!(!p("(3,3,5+)").matches(&[4, 3, 3]));
    }

    #[test]
    fn anchored_slot_must_take_the_named_corner() {
        let q = p("3,@4,4+,6+");
        // corner 1 has degree 4 and may take the anchor
        assert!(q.matches_at(&[3, 4, 4, 6], 1));
        // corner 3 has degree 6, cannot be the anchored 4
        assert!(!q.matches_at(&[3, 4, 4, 6], 3));
        // without an anchor, any corner works
        assert!(p("3,4,4+,6+").matches_at(&[3, 4, 4, 6], 3));
    }

    #[test]
    fn display_round_trip() {
        for s in ["3,4,5-,6-", "@5,5+,5+,5+", "2..6,3--"] {
            assert_eq!(p(s).to_string(), s);
        }
        assert!("3,@4,@5".parse::<DegreePattern>().is_err());
    }
}
