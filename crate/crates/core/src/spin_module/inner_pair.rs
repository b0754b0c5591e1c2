//! Highest-weight candidates from the inner pair `(G1, K1)`, whose roots are the
//! restrictions of `Φ1 ∪ Φ2` and of `Φ1`.
//!
//! The candidates are `w·δ_{G1} − δ_{K1} + ½Σγ′` for `w` with `wΦ_{G1}⁺ ⊃ Φ_{K1}⁺`. Such
//! `w·δ_{G1}` are exactly the `K1`-dominant points of the `W_{G1}`-orbit of `δ_{G1}`, one per
//! `W_{K1}`-coset, and they are reached by a search over `K1`-dominant points moved by the
//! reflections in `Φ2`.

use std::collections::{BTreeSet, VecDeque};

use num_traits::Signed;

use super::table::restricted_labels;
use crate::error::{Error, Result};
use crate::lie_core::{q, qi, RootSystem, Weight};
use crate::symmetric_space::{Family, SymmetricSpace};

/// Restricted roots and Weyl vectors of the inner pair.
#[derive(Clone, Debug)]
pub struct InnerPair {
    pub k1_positive: Vec<Weight>,
    pub phi2_positive: Vec<Weight>,
    pub delta_g1: Weight,
    pub delta_k1: Weight,
    pub half_sum_phi3: Weight,
}

impl InnerPair {
    pub fn new(space: &SymmetricSpace) -> Result<Self> {
        let part = space.partition();
        let restrict = |v: &[Weight]| v.iter().map(|r| space.restrict(r)).collect::<Result<Vec<_>>>();
        let k1_positive = restrict(&part.phi1_plus)?;
        let phi2_positive = restrict(&part.phi2_plus)?;
        let zero = Weight::zero(space.k().basis().clone(), space.k().ambient_dim());
        let half_sum = |v: &[Weight]| -> Result<Weight> {
            let mut acc = zero.clone();
            for r in v {
                acc = acc.try_add(r)?;
            }
            Ok(acc.scale(&q(1, 2)))
        };
        let delta_k1 = half_sum(&k1_positive)?;
        let all: Vec<Weight> = k1_positive.iter().chain(&phi2_positive).cloned().collect();
        let delta_g1 = half_sum(&all)?;
        Ok(InnerPair {
            half_sum_phi3: space.half_sum_phi3()?,
            k1_positive,
            phi2_positive,
            delta_g1,
            delta_k1,
        })
    }

    fn reflect(k: &RootSystem, x: &Weight, r: &Weight) -> Result<Weight> {
        let c = k.inner(x, r)? * qi(2) / k.norm2(r)?;
        x.try_sub(&r.scale(&c))
    }

    /// `K1`-dominant representative, by reflecting in any positive root with negative pairing.
    fn k1_dominant(&self, k: &RootSystem, x: &Weight) -> Result<Weight> {
        let mut v = x.clone();
        'outer: loop {
            for r in &self.k1_positive {
                if k.inner(&v, r)?.is_negative() {
                    v = Self::reflect(k, &v, r)?;
                    continue 'outer;
                }
            }
            return Ok(v);
        }
    }

    /// The `K1`-dominant points `w·δ_{G1}`, sorted.
    pub fn coset_points(&self, k: &RootSystem) -> Result<Vec<Weight>> {
        let cap = k.caps().orbit;
        let start = self.k1_dominant(k, &self.delta_g1)?;
        if start != self.delta_g1 {
            return Err(Error::inconsistent("parthasarathy", "δ_G1 is not K1-dominant"));
        }
        let mut seen: BTreeSet<Weight> = BTreeSet::new();
        let mut queue = VecDeque::new();
        seen.insert(start.clone());
        queue.push_back(start);
        while let Some(x) = queue.pop_front() {
            for b in &self.phi2_positive {
                let y = self.k1_dominant(k, &Self::reflect(k, &x, b)?)?;
                if seen.insert(y.clone()) {
                    if seen.len() > cap {
                        return Err(Error::cap(
                            "W_G1/W_K1 coset representatives",
                            cap,
                            format!("more than {cap}"),
                            "raise the orbit cap",
                        ));
                    }
                    queue.push_back(y);
                }
            }
        }
        Ok(seen.into_iter().collect())
    }
}

/// Candidate highest weights `w·δ_{G1} − δ_{K1} + ½Σγ′`, sorted and deduplicated.
///
/// For the `SO` family with `p = 0` the pair degenerates to `G1 = K1` and the single
/// candidate `½Σγ′` is returned; other spaces without `Φ2` are rejected.
pub fn parthasarathy_highest_weights(space: &SymmetricSpace) -> Result<Vec<Weight>> {
    let pair = InnerPair::new(space)?;
    if pair.phi2_positive.is_empty() && space.spec().family() != Family::SoGrassmann {
        return Err(Error::Validation(format!(
            "{}: Φ2 is empty, so the inner pair gives no information",
            space.spec()
        )));
    }
    let k = space.k();
    // every γ′ must be K-integral for the shift to land on the weight lattice
    for g in &space.partition().phi3_prime_plus {
        restricted_labels(space, g)?;
    }
    let shift = pair.half_sum_phi3.try_sub(&pair.delta_k1)?;
    let mut out: Vec<Weight> = pair
        .coset_points(k)?
        .into_iter()
        .map(|x| x.try_add(&shift))
        .collect::<Result<_>>()?;
    out.sort();
    out.dedup();
    Ok(out)
}
