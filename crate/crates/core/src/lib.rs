//! Chromatic symmetric functions of chained and twinned graph families,
//! expanded in the elementary basis.
//!
//! The [`formulas`] module evaluates closed forms; [`oracle`] computes the
//! same functions by brute force so that the two can be compared.

pub mod compositions;
pub mod error;
pub mod formulas;
pub mod graphs;
pub mod oracle;
pub mod serial;
pub mod symfunc;

pub use compositions::{Composition, Partition};
pub use error::{Error, Result};
pub use formulas::{Family, FamilyKind};
pub use graphs::Graph;
pub use symfunc::ESymFunc;
