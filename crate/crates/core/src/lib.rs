pub mod coloring;
pub mod config;
pub mod corpus;
pub mod degeneracy;
pub mod discharging;
pub mod graph;
pub mod structure;

/// Arbitrary-precision exact charge.
pub type Charge = num_rational::BigRational;
/// Machine-word exact charge; enough for every shipped rule table.
pub type SmallCharge = num_rational::Ratio<i64>;
