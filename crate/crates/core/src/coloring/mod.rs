//! Equitable colorings: exact oracles, the reducible-set extension step,
//! the recursive constructive solver, list versions and a validator.

mod constructive;
mod exact;
mod list;
mod validate;

use thiserror::Error;

pub use constructive::{
    color_constructive, extend_coloring, extend_list_coloring, list_color_constructive, Anomaly,
    ConstructiveOptions, ConstructiveOutcome, ReductionStep,
};
pub use exact::{
    chi_e, chi_star_e, exact_equitable, exact_equitable_with_limit, ChiStar, EquitableColoring,
    DEFAULT_EXACT_LIMIT,
};
pub use list::{
    exact_list_coloring, random_uniform_lists, EquitableListColoring, ListAssignment,
};
pub use validate::{validate_coloring, validate_list_coloring, ColoringViolation};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ColoringError {
    #[error("exact search limited to {limit} vertices, graph has {n}")]
    SizeLimit { n: usize, limit: usize },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("vertex {vertex} has {size} distinct list colors, expected {k}")]
    NotUniform { vertex: usize, size: usize, k: usize },
    #[error("bad list assignment: {0}")]
    BadLists(String),
    #[error("no equitable coloring of the {n}-vertex subproblem with k = {k}")]
    Infeasible { n: usize, k: usize },
}
