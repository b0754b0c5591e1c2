//! Exact multiplicity of a `K`-irreducible inside the restriction of a `G`-irreducible.
//!
//! With `m_Res(ν) = Σ_{μ' ↦ ν} m_G(μ')` the restricted weight multiplicities, the
//! multiplicity of `V_K(λ)` is `Σ_{w ∈ W_K} ε(w)·m_Res(λ + δ_K − w·δ_K)`.

use std::collections::{HashMap, HashSet, VecDeque};

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;

use super::fiber::FiberSolver;
use super::minimize::FiberQuadratic;
use crate::error::{Error, Result};
use crate::lie_core::labels::Labels;
use crate::lie_core::{Rational, Weight};
use crate::symmetric_space::SymmetricSpace;

/// `W_K·δ_K` in `K`-labels with the sign `ε(w)` of each element.
pub(crate) fn signed_weyl_vector_orbit(space: &SymmetricSpace) -> Result<Vec<(Labels, i8)>> {
    let ls = space.k().label_system();
    let cap = space.g().caps().orbit;
    let start: Labels = vec![1; ls.rank()];
    let mut seen: HashSet<Labels> = HashSet::from([start.clone()]);
    let mut out = vec![(start.clone(), 1i8)];
    let mut queue = VecDeque::from([(start, 1i8)]);
    while let Some((v, sign)) = queue.pop_front() {
        for i in 0..ls.rank() {
            let mut w = v.clone();
            ls.reflect_simple(&mut w, i);
            if seen.insert(w.clone()) {
                if seen.len() > cap {
                    return Err(Error::cap(
                        "K Weyl group",
                        cap,
                        format!("more than {cap}"),
                        "raise the orbit cap",
                    ));
                }
                out.push((w.clone(), -sign));
                queue.push_back((w, -sign));
            }
        }
    }
    Ok(out)
}

/// The constant `r` with `⟨res v, res w⟩_K = r·⟨v, w⟩_G` on `σ`-fixed vectors, if there is
/// one; restricted weights of `V_G(μ)` then have `‖ν‖²_K ≤ r·‖μ‖²_G`.
fn projection_ratio(space: &SymmetricSpace) -> Result<Option<Rational>> {
    let g = space.g();
    let k = space.k();
    let fixed: Vec<Weight> = g
        .simple_roots()
        .iter()
        .map(|a| a.try_add(&space.involution().apply(a)?))
        .collect::<Result<_>>()?;
    let restricted: Vec<Weight> = fixed.iter().map(|v| space.restrict(v)).collect::<Result<_>>()?;
    let mut ratio: Option<Rational> = None;
    for i in 0..fixed.len() {
        for j in 0..fixed.len() {
            let gv = g.inner(&fixed[i], &fixed[j])?;
            let kv = k.inner(&restricted[i], &restricted[j])?;
            if gv.is_zero() {
                if !kv.is_zero() {
                    return Ok(None);
                }
                continue;
            }
            let r = kv / gv;
            match &ratio {
                Some(x) if *x != r => return Ok(None),
                _ => ratio = Some(r),
            }
        }
    }
    Ok(ratio)
}

/// Restriction of one `G`-irreducible, ready to be decomposed under `K`.
pub struct Branching<'a> {
    space: &'a SymmetricSpace,
    solver: FiberSolver,
    dominant: HashMap<Labels, u128>,
    norm_scaled: i128,
    /// `scale_K·‖ν‖²_K` bound for restricted weights, when the restriction is an isometry on
    /// `σ`-fixed vectors.
    k_norm_bound: Option<i128>,
    orbit: Vec<(Labels, i8)>,
}

impl<'a> Branching<'a> {
    /// `mu` must be `G`-dominant and integral.
    pub fn new(space: &'a SymmetricSpace, mu: &Weight) -> Result<Self> {
        let g = space.g();
        let labels = g
            .integral_labels(mu)?
            .ok_or_else(|| Error::NotDominant(mu.to_string()))?;
        let ls = g.label_system();
        let cap = usize::try_from(g.caps().enumeration).unwrap_or(usize::MAX);
        let dominant = ls.dominant_multiplicities(&labels, cap)?.into_iter().collect();
        let norm_scaled = ls.inner_scaled(&labels, &labels);
        let k_norm_bound = match projection_ratio(space)? {
            Some(r) => {
                let t = r
                    * Rational::new(norm_scaled.into(), ls.scale().into())
                    * Rational::from_integer(space.k().label_system().scale().into());
                t.floor().to_integer().to_i128()
            }
            None => None,
        };
        Ok(Branching {
            space,
            solver: FiberSolver::new(space)?,
            dominant,
            norm_scaled,
            k_norm_bound,
            orbit: signed_weyl_vector_orbit(space)?,
        })
    }

    fn within_norm(&self, nu: &[i64]) -> bool {
        self.k_norm_bound
            .is_none_or(|b| self.space.k().label_system().inner_scaled(nu, nu) <= b)
    }

    /// Multiplicity of the restricted weight `ν` (given in `K`-labels).
    pub fn restricted_multiplicity(&self, nu: &[i64]) -> Result<u128> {
        let space = self.space;
        let Some(fl) = self.solver.solve(space, &space.k().weight_from_labels(nu))? else {
            return Ok(0);
        };
        let fq = FiberQuadratic::with_shift(space, &fl, false);
        let ls = space.g().label_system();
        let cap = space.g().caps().enumeration;
        let mut total = 0u128;
        for x in fq.points_below(self.norm_scaled, cap)? {
            let (dom, _) = ls.dominant(&fl.labels_at(&x));
            total += self.dominant.get(&dom).copied().unwrap_or(0);
        }
        Ok(total)
    }

    /// Multiplicity of `V_K(λ)` in the restriction; `λ` is `K`-dominant.
    pub fn multiplicity(&self, lambda: &Weight) -> Result<BigInt> {
        let k = self.space.k();
        let lam = k
            .integral_labels(lambda)?
            .ok_or_else(|| Error::NotDominant(lambda.to_string()))?;
        if self.restricted_multiplicity(&lam)? == 0 {
            return Ok(BigInt::from(0));
        }
        // m_Res is W_K-invariant, so each term only needs its K-dominant form
        let kls = k.label_system();
        let mut coeff: HashMap<Labels, i128> = HashMap::new();
        for (wd, sign) in &self.orbit {
            let nu: Labels = lam.iter().zip(wd).map(|(l, w)| l + 1 - w).collect();
            *coeff.entry(kls.dominant(&nu).0).or_default() += i128::from(*sign);
        }
        coeff.retain(|nu, c| *c != 0 && self.within_norm(nu));
        let terms: Vec<i128> = coeff
            .par_iter()
            .map(|(nu, c)| Ok(c * self.restricted_multiplicity(nu)? as i128))
            .collect::<Result<_>>()?;
        let n: i128 = terms.iter().sum();
        if n < 0 {
            return Err(Error::inconsistent(
                "branching",
                format!("negative multiplicity {n} for {lambda}"),
            ));
        }
        Ok(BigInt::from(n))
    }
}

/// Multiplicity of `V_K(λ)` in the restriction of `V_G(μ)`.
pub fn branching_multiplicity(space: &SymmetricSpace, mu: &Weight, lambda: &Weight) -> Result<BigInt> {
    Branching::new(space, mu)?.multiplicity(lambda)
}
