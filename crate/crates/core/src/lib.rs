//! Total dominator colorings of central graphs: graph families, the central
//! graph operator, exact solvers with certified witnesses, closed-form
//! values, and a theorem conformance report.

pub mod central;
pub mod chromatic;
pub mod coloring;
pub mod constructions;
pub mod enumerate;
mod error;
pub mod family;
pub mod formulas;
pub mod graph;
pub mod io;
pub mod longest_path;
pub mod report;
pub mod solve;

pub use error::{Error, Result};
