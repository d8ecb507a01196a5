//! Diagram-level link invariants: PD codes, Seifert data, braids,
//! Whitehead doubles and closed-form slice-torus values.

pub mod bounds;
pub mod braid;
pub mod catalog;
pub mod diagram;
pub mod rational;
pub mod error;
pub mod seifert;
pub mod whitehead;

pub use diagram::{Crossing, Diagram, EdgeId, LinkingMatrix};
pub use error::{LinkError, Result};
