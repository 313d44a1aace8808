//! Exact-arithmetic association schemes.
//!
//! A scheme is stored as a color matrix on `n` points together with its
//! structure-constant tensor, computed once by direct counting at
//! construction. Everything downstream (closed subsets, quotients,
//! admissible morphisms, adjacency algebras, Hopf comodule checks) works
//! over exact integers and rationals; there is no floating point anywhere.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod algebra;
pub mod bridge;
pub mod closed;
pub mod corpus;
pub mod error;
pub mod group;
pub mod hopf;
pub mod morphism;
pub mod relset;
pub mod scheme;

pub use algebra::{alg_hom, alg_product, group_algebra_iso, tensor_iso, Algebra, AlgebraElement, AlgebraMap, Rational};
pub use closed::ClosedSubset;
pub use error::Error;
pub use group::{group_scheme, Group, GroupHom};
pub use morphism::Morphism;
pub use relset::RelSet;
pub use scheme::Scheme;
