//! Koszul complexes, two-step Tate complexes `P = ∧F ⊗ D G` and the
//! minimal two-step complete Tate complex `T`.

mod complete;
mod data;
mod two_step;

pub use complete::{build_complete_tate, wedge_of_cycles, CompleteTate};
pub use data::{extract_tate_data, TateData};
pub use two_step::{
    build_koszul, build_two_step_tate, compositions, subsets, tate_basis, tate_rank_series, TateBasisElement,
    TwoStepTate,
};
