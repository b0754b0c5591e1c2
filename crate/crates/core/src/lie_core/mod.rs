//! Exact root-system and representation kernel.

pub mod cartan_type;
pub mod form;
pub mod labels;
pub mod matrix;
pub mod rational;
pub mod root_system;
pub mod weight;

pub use cartan_type::{CartanType, Family, SimpleType};
pub use form::{inner_product, BilinearForm};
pub use labels::LabelSystem;
pub use rational::{q, qi, Rational};
pub use root_system::{generate_positive_roots, RootSystem, WeightClass};
pub use weight::{BasisTag, Weight};
