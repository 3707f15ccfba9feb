//! Representations of quivers, `Hom` and `Ext^1`, and indecomposables.

mod multiset;
mod reflection;
mod representation;

pub use multiset::RootMultiset;
pub use reflection::{admissible_sink_order, indecomposable_for_root};
pub use representation::{
    build_rep, ext1_dim, hom_basis, hom_dim, is_rigid, is_subrepresentation, HomBasis, Representation,
};
