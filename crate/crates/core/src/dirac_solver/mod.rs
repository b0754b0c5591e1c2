//! Minimization of `‖μ+δ_G‖²` over the integral weights restricting to each spin highest
//! weight, certification of the spin condition, and the resulting first eigenvalue
//! `λ² = s·⟨μ, μ+2δ_G⟩ + dim 𝔭/16`.

mod branching;
mod closed_form;
mod eigen;
mod fiber;
mod minimize;

pub use branching::{branching_multiplicity, Branching};
pub use closed_form::closed_form_reference;
pub use eigen::{first_eigenvalue, first_eigenvalue_with, spin_condition_check, EigenvalueResult, SpinEvidence};
pub use fiber::{fiber_lattice, FiberLattice, FiberSolver};
pub use minimize::{fiber_points_below, minimize_over_fiber, Candidate};
