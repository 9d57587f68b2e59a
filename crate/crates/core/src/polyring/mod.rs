//! Exact fields, weighted multivariate polynomials and their text form.

pub mod field;
pub mod monomial;
mod parse;
pub mod poly;

pub use field::{Field, FieldSpec, PrimeField, Rationals};
pub use monomial::{Monomial, MonomialOrder, PolyRingSpec};
pub use poly::{Homogeneity, Poly, PolyOp, PolyRing};
