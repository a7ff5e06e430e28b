//! Elementary matrices, congruence levels and finite matrix groups.

pub mod enumerate;
pub mod fmat;
pub mod level;
pub mod normal_form;
pub mod predicates;
pub mod rmat;
pub mod stable_range;
pub mod word;

pub use enumerate::{
    el_generators, el_subgroup, elementary_generators, f_subgroup, generate_subgroup, normal_closure, sl_elements,
    GroupSet, ELEMENT_CAP,
};
pub use fmat::FMat;
pub use level::{fin_sl_level, fin_sltil_level, in_sl, in_sltil, iota, sl_level, sltil_level};
pub use normal_form::{normal_form_conjugate, normal_form_finite, normal_form_integer, NormalForm};
pub use rmat::RMatrix;
pub use stable_range::{shorten_integer, FiniteShortener};
pub use word::{center_word, units_order_dividing, ElementaryWord, Letter};
