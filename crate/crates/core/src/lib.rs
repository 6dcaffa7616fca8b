//! Exact arithmetic for finite-dimensional Hom-algebras over ℚ: constructions,
//! Hom-power calculus and decision procedures for Hom-power associativity.

pub mod algebra;
pub mod calculus;
pub mod constructions;
pub mod element;
pub mod error;
pub mod identities;
pub mod io;
pub mod linear_map;
pub mod perm;
pub mod random;
pub mod repro;
pub mod scalar;

pub use algebra::HomAlgebra;
pub use element::Element;
pub use error::{Error, Result};
pub use linear_map::LinearMap;
pub use scalar::Scalar;
