//! Construction and certification of biregular (3,m)-graphs of even girth.
//!
//! The library builds the graphs two ways: by lifting voltage graphs over
//! Z_m with pinned vertices, and by gluing copies of cubic cages at remote
//! vertices. Girth is certified both symbolically (voltage sums of closed
//! walks in the voltage graph) and by brute force on the lift, and the two
//! routes are cross-checked against each other in the test suite.

pub mod analysis;
pub mod constructions;
pub mod cycles;
pub mod identify;
pub mod io;
pub mod search;
pub mod voltage;

pub use analysis::{analyze, girth, is_bipartite, GraphReport, Length};
pub use constructions::ConstructionSpec;
pub use voltage::{SimpleGraph, VoltageGraph};
