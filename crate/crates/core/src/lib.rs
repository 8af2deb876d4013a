//! Finite-field tools for scattered subspaces of V(k, q^n), linearized
//! polynomials and their rank-metric codes.

pub mod error;
pub mod family;
pub mod gf;
pub mod linalg;
pub mod linpoly;
pub mod numtheory;
pub mod rankcode;
pub mod subspace;

pub use error::{Budget, Error, Result};
pub use gf::{Elem, Field, FieldRef};
pub use linpoly::LinPoly;
pub use rankcode::RankCode;
pub use subspace::{FqSubspace, FqnSubspace};
