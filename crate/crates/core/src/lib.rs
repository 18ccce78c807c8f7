//! Adapted complex structures on the two-step nilpotent Lie algebras
//! attached to finite simple graphs.

pub mod algebra;
pub mod catalog;
pub mod complex;
pub mod error;
pub mod families;
pub mod forms;
pub mod graph;
pub mod hermitian;
pub mod linalg;
pub mod plan;
pub mod search;
pub mod structure;

pub use algebra::{BasisElement, GraphLieAlgebra, LieVector};
pub use complex::{AdaptedMap, IntegrabilityMode, Orbit};
pub use graph::Graph;
