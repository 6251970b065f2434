//! Exceptional sequences, m-clusters and their bijection for Dynkin quivers,
//! computed with exact rational arithmetic.

pub mod bijection;
pub mod config;
pub mod counting;
pub mod error;
pub mod lemmas;
pub mod linalg;
pub mod rep;
pub mod report;
pub mod root;
pub mod schema;
pub mod shift;
pub mod suites;
pub mod wide;

pub use error::{Error, Result};
pub use rep::{ModuleId, RepEngine};
pub use root::{DimVector, DynkinDiagram, DynkinType, Quiver};
