//! Character peeling of the spin table.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use super::table::{enumerate_spin_weights, SpinWeightTable};
use crate::error::{Error, Result};
use crate::lie_core::labels::Labels;
use crate::lie_core::Weight;
use crate::symmetric_space::SymmetricSpace;

/// An irreducible constituent of the spin representation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpinHighestWeight {
    pub weight: Weight,
    pub labels: Labels,
    pub multiplicity: u128,
    pub dim: BigInt,
}

/// The decomposition, in peeling order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpinHighestWeights {
    pub entries: Vec<SpinHighestWeight>,
    pub spinor_dim: BigInt,
}

impl SpinHighestWeights {
    /// `Σ mult × dim`
    pub fn total_dim(&self) -> BigInt {
        self.entries.iter().map(|e| BigInt::from(e.multiplicity) * &e.dim).sum()
    }

    pub fn weights(&self) -> impl Iterator<Item = &Weight> {
        self.entries.iter().map(|e| &e.weight)
    }

    pub fn contains(&self, w: &Weight) -> bool {
        self.entries.iter().any(|e| &e.weight == w)
    }
}

/// Enumerates the spin table and peels it.
pub fn decompose_spin(space: &SymmetricSpace) -> Result<SpinHighestWeights> {
    let table = enumerate_spin_weights(space)?;
    decompose_table(space, &table)
}

/// Repeatedly removes the character of the remaining weight with the largest
/// `‖ν+δ_K‖²` (ties: lexicographically largest coordinates), scaled by its multiplicity.
pub fn decompose_table(space: &SymmetricSpace, table: &SpinWeightTable) -> Result<SpinHighestWeights> {
    let k = space.k();
    let ls = k.label_system();
    let cap = k.caps().enumeration.min(usize::MAX as u64) as usize;
    let mut remaining: BTreeMap<Labels, i128> = table.dominant_map().into_iter().map(|(l, m)| (l, m as i128)).collect();
    let mut entries = Vec::new();
    while !remaining.is_empty() {
        let top = remaining
            .keys()
            .max_by(|a, b| {
                ls.shifted_norm_scaled(a)
                    .cmp(&ls.shifted_norm_scaled(b))
                    .then_with(|| k.weight_from_labels(a).cmp(&k.weight_from_labels(b)))
            })
            .cloned()
            .expect("nonempty");
        let c = remaining[&top];
        if c <= 0 {
            return Err(Error::inconsistent(
                "decompose_spin",
                format!("maximal weight {top:?} has multiplicity {c}"),
            ));
        }
        for (nu, m) in ls.dominant_multiplicities(&top, cap)? {
            let slot = remaining.entry(nu.clone()).or_insert(0);
            *slot -= c * m as i128;
            if *slot < 0 {
                return Err(Error::inconsistent(
                    "decompose_spin",
                    format!("negative multiplicity at {nu:?} after removing {top:?}"),
                ));
            }
            if *slot == 0 {
                remaining.remove(&nu);
            }
        }
        entries.push(SpinHighestWeight {
            weight: k.weight_from_labels(&top),
            dim: k.weyl_dim_labels(&top),
            labels: top,
            multiplicity: c as u128,
        });
    }
    let out = SpinHighestWeights {
        entries,
        spinor_dim: table.spinor_dim().clone(),
    };
    if out.total_dim() != out.spinor_dim {
        return Err(Error::inconsistent(
            "decompose_spin",
            format!(
                "Σ mult × dim = {} but 2^⌊dim 𝔭/2⌋ = {}",
                out.total_dim(),
                out.spinor_dim
            ),
        ));
    }
    Ok(out)
}
