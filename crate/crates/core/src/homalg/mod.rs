//! Graded free modules over quotient rings, chain complexes of them and
//! degreewise homology.

mod complex;
pub mod linalg;
mod minimal;
mod module;

pub use complex::{GradedChainComplex, HomologyEntry, HomologyTable};
pub use linalg::Matrix;
pub use minimal::{are_cycles, minimal_generators, span_dim, HomogeneousElement};
pub use module::{multiplication_matrix, GradedFreeModule, GradedMap};
