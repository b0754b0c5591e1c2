//! The five families of outer compact symmetric spaces: coordinates, involution, root
//! partition, restriction to the isotropy torus and the isotropy root system.

mod families;
pub mod space;
pub mod spec;
pub mod verify;

pub use space::{
    build_space, k_cartan_matrix, restrict_weight, Involution, RestrictionMap, RootPartition, SymmetricSpace,
};
pub use spec::{Dims, Family, SymmetricSpaceSpec};
pub use verify::{verify_root_partition, Check, VerifyReport};
