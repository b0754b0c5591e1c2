//! Exact computation of the first Dirac eigenvalue on the compact outer spin
//! symmetric spaces `SU(2m)/SO(2m)`, `SU(2m)/Sp(m)`,
//! `SO(2p+2q+2)/SO(2p+1)×SO(2q+1)`, `E6/F4` and `E6/Sp(4)`.
//!
//! The pipeline runs in four stages, one module each:
//!
//! * [`lie_core`]: rational weights, root systems, Weyl groups, Freudenthal multiplicities.
//! * [`symmetric_space`]: the involution, the root partition and the isotropy root system.
//! * [`spin_module`]: weights of the isotropy spin representation and its decomposition.
//! * [`dirac_solver`]: lattice minimization of `‖μ+δ‖²` over restriction fibers.
//!
//! [`cli`] wraps the pipeline in reports with text, JSON and CSV renderings.

#![allow(clippy::needless_range_loop)]

pub mod cli;
pub mod dirac_solver;
pub mod error;
pub mod lie_core;
pub mod spin_module;
pub mod symmetric_space;

pub use error::{Error, Result};
pub use lie_core::{BasisTag, BilinearForm, Rational, RootSystem, Weight};

/// Resource limits. Exceeding one raises [`Error::CapExceeded`] instead of running away.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Maximum number of positive roots produced by reflection closure.
    pub root_closure: usize,
    /// Maximum size of an explicitly enumerated Weyl orbit.
    pub orbit: usize,
    /// Maximum dimension of an irreducible module expanded weight by weight.
    pub dimension: u64,
    /// Maximum number of sign patterns or table entries enumerated.
    pub enumeration: u64,
    /// Maximum number of free coordinates in a fiber lattice.
    pub arity: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            root_closure: 10_000,
            orbit: 1_000_000,
            dimension: 1 << 22,
            enumeration: 1 << 22,
            arity: 16,
        }
    }
}
