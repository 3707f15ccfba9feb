//! Exact Poincaré polynomials of flag varieties of subrepresentations
//! ("flag quiver Grassmannians") for Dynkin quivers.
//!
//! The polynomial of `F_u(V)` is computed by splitting `V` into indecomposable
//! summands, ordering them so that `Ext^1` vanishes in one direction, and
//! stratifying flags of `V = V' ⊕ W` by the type of their intersection with
//! `V'`. Each stratum is a vector bundle over a product of smaller flag
//! varieties, so the polynomial is a sum of `q^rank · P_{V'} · P_W` terms.
//! The indecomposable base cases are decided by counting points over prime
//! fields.
//!
//! Every polynomial can be checked against [`oracle::count_flags`], which
//! enumerates flags over `F_p` directly from the definition.
//!
//! Module map:
//!
//! * [`quiver`], [`dynkin`]: quivers, dimension vectors, flag types, the Euler
//!   form, Dynkin classification and positive roots.
//! * [`linalg`]: exact matrices over `Q` and `F_p`, subspaces and subspace
//!   enumeration.
//! * [`rep`]: representations, `Hom`/`Ext^1`, indecomposables built by
//!   reflection functors.
//! * [`oracle`]: brute-force flag counting over `F_p`.
//! * [`poly`]: integer polynomials and interpolation.
//! * [`recursion`]: directed ordering, strata, the bundle rank and the
//!   polynomial recursion.
//! * [`flagcat`]: the extended quiver, the functor `Φ` and fiber checks.
//! * [`campaign`]: verification campaigns used by the `flagmann` binary.

pub mod campaign;
pub mod dynkin;
pub mod error;
pub mod flagcat;
pub mod linalg;
pub mod oracle;
pub mod parse;
pub mod poly;
pub mod quiver;
pub mod recursion;
pub mod rep;

pub use dynkin::{classify_dynkin, positive_roots, DynkinClass, DynkinKind};
pub use error::{Error, Result};
pub use linalg::{FieldSpec, Matrix, PrimeField, Rationals, Subspace};
pub use poly::PoincarePolynomial;
pub use quiver::{euler_form, flag_differences, DimVector, FlagType, Quiver};
pub use recursion::{poincare, FlagEngine};
pub use rep::{Representation, RootMultiset};
