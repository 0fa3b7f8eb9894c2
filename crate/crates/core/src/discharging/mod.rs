//! Charge schemes, declarative discharging rules and charge audits, all in
//! exact rational arithmetic.

mod audit;
mod engine;
mod rules;
mod scalar;
mod scheme;

use thiserror::Error;

pub use audit::{audit_charges, Allowances, AuditReport, NegativeEntry, NegativeStatus};
pub use engine::apply_ruleset;
pub use rules::{rule_order, Relation, RuleRow, RuleTable, Share, SinkFilter, SourceFilter};
pub use scalar::ChargeScalar;
pub use scheme::{initial_charges, ChargeLedger, Element, Scheme, Transfer};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DischargeError {
    #[error("component {component}: initial charges sum to {found}, expected {expected}")]
    TotalMismatch {
        component: usize,
        expected: String,
        found: String,
    },
    #[error("rule {rule} gives {from} -> {to} conflicting amounts {amounts:?}")]
    AmbiguousRule {
        rule: String,
        from: String,
        to: String,
        amounts: Vec<String>,
    },
    #[error("unknown ruleset {0:?}")]
    UnknownRuleset(String),
    #[error("malformed rule table: {0}")]
    MalformedRules(String),
}
