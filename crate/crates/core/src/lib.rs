//! Intuitionistic neutrosophic soft sets.
//!
//! Every element of the universe carries a truth, indeterminacy and falsity
//! grade per parameter. Grades are exact four-digit decimals and every triple
//! satisfies `min(T, F)`, `min(T, I)`, `min(F, I) <= 0.5` with
//! `T + I + F <= 2`.
//!
//! - [`grades`]: exact grades and validated triples.
//! - [`soft_algebra`]: soft sets, containment, complement, union,
//!   intersection, AND and OR.
//! - [`decision`]: comparison matrix, scores and object selection.
//! - [`reference_oracle`]: naive independent implementations for auditing.
//! - [`io`]: the JSON document format and text rendering.

pub mod decision;
pub mod error;
pub mod grades;
pub mod io;
pub mod reference_oracle;
pub mod soft_algebra;

pub use decision::{comparison_matrix, scores, select_best, ComparisonMatrix, DecisionTable, ScoreVector, Selection};
pub use error::{Error, Location, Result};
pub use grades::{complement_triple, validate_triple, Grade, GradeTriple};
pub use soft_algebra::{CompoundParameter, InsSet, Parameter, SoftSet};
