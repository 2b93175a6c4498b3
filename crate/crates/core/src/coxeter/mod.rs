//! Coxeter systems, their geometric representation, roots and group elements.

pub mod catalog;
mod dsl;
mod element;
mod graph;
mod root;
mod system;

pub use dsl::{parse_system, to_dsl};
pub use element::{
    check_odd_support, coset_min, enumerate_parabolic, enumerate_subgroup, reflection_element, GroupElement,
};
pub use graph::CoxeterGraph;
pub use root::{
    classify_root, depth, descent_path, enumerate_parabolic_roots, enumerate_positive_roots, enumerate_positive_roots_capped, reflect, RootClass, RootEnumeration, RootVector,
};
pub use system::CoxeterSystem;
