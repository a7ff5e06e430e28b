//! Finite-index tests, additive structure of finite quotients and depth ideals.

mod finite;
mod search;

pub use finite::{
    cardinality_and_structure, finite_index_test, staircase, AbGroup, FiniteIndex, FinitenessCertificate,
    FinitenessVerdict, PowerRelation, Staircase, FACTOR_CAP,
};
pub use search::{
    commensurable, compute_depth, depth_certificate, depth_membership, is_depth, torsion_order, DepthBounds,
    DepthCertificate, DepthResult, DepthStatus, DepthVerdict,
};
