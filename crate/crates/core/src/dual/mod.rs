//! Finite models of the dual action: `Q^d`, its Pontryagin dual, orbits,
//! Haar and Fourier identities and the classification of invariant ergodic
//! measures.

pub mod classify;
pub mod measure;
pub mod model;

pub use classify::{classify_measures, Classification, ParametricMeasure};
pub use measure::{haar, translated_haar_transform, Measure};
pub use model::{all_subgroups, invariant_subgroup_check, span, DualElement, FiniteModel, SubgroupCheck, MODEL_CAP};
