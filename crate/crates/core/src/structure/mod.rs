//! Chordal-cycle detection, class membership, the forbidden adjacent-cycle
//! patterns and face/vertex classification.

mod classify;
mod cycles;
mod cycle_audit;
mod pattern;

use thiserror::Error;

pub use classify::{
    classify_faces_and_vertices, is_bad_degree_vector, is_special_degree_vector, Classification,
    FaceProfile, VertexKind, VertexProfile,
};
pub use cycles::{class_membership, find_chordal_cycles, simple_cycles, ClassReport, CycleWitness};
pub use cycle_audit::{structural_audit, StructuralAudit, StructuralViolation};
pub use pattern::DegreePattern;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StructureError {
    #[error("chordal cycles of length {0} are not supported (only 4 and 6)")]
    UnsupportedLength(usize),
}
