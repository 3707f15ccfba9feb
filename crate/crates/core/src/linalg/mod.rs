//! Exact linear algebra over `Q` and prime fields.

mod field;
mod matrix;
mod subspace;

pub use field::{is_prime, Field, FieldSpec, PrimeField, Rationals};
pub use matrix::Matrix;
pub use subspace::{enumerate_subspaces, gaussian_binomial, q_multinomial, Subspace, SubspaceIter};
