//! Koszul complexes, two-step Tate complexes and complete Tate complexes
//! for homogeneous ideals of graded quotient rings, computed with exact
//! per-degree linear algebra.
//!
//! The crate is layered bottom-up:
//!
//! * [`polyring`]: exact fields and weighted polynomial arithmetic,
//! * [`groebner`]: Buchberger bases, quotient rings, Hilbert functions,
//! * [`homalg`]: graded free modules, chain complexes and homology,
//! * [`tate`]: Koszul, two-step Tate and complete Tate constructions,
//! * [`qci`]: the quasi-complete-intersection decision pipeline, Betti
//!   numbers over complete intersections and the generic lifting.

pub mod error;
pub mod groebner;
pub mod homalg;
pub mod polyring;
pub mod qci;
pub mod tate;

pub use error::{Error, Result};
