//! The qci decision pipeline and its companions: grade evidence, Betti
//! numbers over complete intersections, the generic lift, and
//! nested-pair verification.

mod betti;
mod check;
mod dimension;
mod grade;
mod lift;
mod minimal;

pub use betti::{betti_over_ci, BettiTable, Splitting};
pub use check::{
    qci_check, CompleteTateCheck, Hypothesis, QciCertificate, QciOptions, Verdict, Window,
};
pub use dimension::{dimension_theorem_check, DimensionReport, SeriesCheck};
pub use grade::{grade_probe, GradeCertificate, GradeEvidence};
pub use lift::{generic_lift, nested_pair_verify, CIPairData, PairCheck, PairReport};
pub use minimal::minimalize_ideal_generators;
