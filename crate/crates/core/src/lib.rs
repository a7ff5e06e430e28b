//! Computational toolkit around elementary matrix groups over finitely
//! presented commutative rings: strong Groebner bases over `Z`, finite-index
//! and depth-ideal tests, elementary-matrix machinery, invariant measures on
//! dual groups and characters of finite subquotients.

pub mod character;
pub mod depth;
pub mod dual;
pub mod error;
pub mod finite_ring;
pub mod ideal;
pub mod lattice;
pub mod matgroup;
pub mod ring;

pub use error::{Error, Result};
