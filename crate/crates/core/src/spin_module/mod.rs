//! Weights of the isotropy spin representation and its decomposition into irreducibles.
//!
//! The spin character is `2^⌊dim 𝔱_0/2⌋ · Π (e^{r/2} + e^{−r/2})` over the restricted roots
//! `r ∈ Φ2⁺ ∪ Φ3′⁺`. It is `W_K`-invariant, so only its dominant part is stored; the
//! product is expanded by a sign-by-sign convolution on doubled Dynkin labels that drops
//! partial sums which can no longer end in the dominant chamber.

mod decompose;
mod inner_pair;
mod table;

pub use decompose::{decompose_spin, decompose_table, SpinHighestWeight, SpinHighestWeights};
pub use inner_pair::{parthasarathy_highest_weights, InnerPair};
pub use table::{enumerate_spin_weights, highest_weight_candidates, SpinWeightEntry, SpinWeightTable};
