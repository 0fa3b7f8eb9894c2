//! Configuration patterns, matching in plane graphs, and reducible vertex
//! sets for the equitable-coloring extension step.

mod catalog;
mod dsl;
mod matcher;
mod reducible;

use thiserror::Error;

pub use catalog::{
    builtin_catalog, configuration_h, configuration_stubs, load_catalog_dir, ConfigurationStub,
};
pub use dsl::{
    parse_configuration, Configuration, DegreeSpec, FaceConstraint, Kind, Label, PatternVertex,
};
pub use matcher::{automorphisms, canonical, is_valid_match, match_configuration, Match};
pub use reducible::{
    best_order, catalog_seeds, complete_seed, complete_top_seed, find_reducible_set,
    find_reducible_set_abstract, verify_reducible, FindOptions, ReduceFailure,
    ReducibleCertificate, ReducibleSet, SeedEntry,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConfigError {
    #[error("malformed pattern: {0}")]
    MalformedPattern(String),
    #[error("vertex {vertex:?} shows {shown} edges but allows degree {lower}")]
    DegreeBelowShownEdges {
        vertex: String,
        shown: usize,
        lower: usize,
    },
    #[error("graph has {n} vertices, fewer than k = {k}")]
    GraphTooSmall { n: usize, k: usize },
    #[error("seed of size {seed} exceeds k = {k}")]
    SeedTooLarge { seed: usize, k: usize },
    #[error("bad seed: {0}")]
    BadSeed(String),
}
