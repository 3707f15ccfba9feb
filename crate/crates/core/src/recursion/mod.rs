//! The polynomial recursion: split off one indecomposable summand at a time
//! and sum `q^rank · P_{sub} · P_{quotient}` over strata.

mod base;
mod engine;
mod order;
mod strata;

pub use base::{base_case_rigid_interpolation, base_case_type_a, base_case_type_d, rigid_dimension};
pub use engine::{poincare, FlagEngine};
pub use order::{directed_order, is_directed};
pub use strata::{enumerate_splittings, stratum_rank, StratumSplit};
