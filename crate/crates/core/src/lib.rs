//! Exact computations with Coxeter groups: root systems, reflection subgroups
//! and their canonical generators, parabolic and locally parabolic closures,
//! and rule-defined families of infinite rank studied through truncations.

pub mod cli;
pub mod coxeter;
pub mod error;
pub mod families;
pub mod label;
pub mod linalg;
pub mod locpar;
pub mod numberfield;
pub mod parabolic;
pub mod refsub;
pub mod scenarios;

pub use coxeter::{CoxeterGraph, CoxeterSystem, GroupElement, RootVector};
pub use error::{Error, Result};
pub use label::Label;
