//! Construction of a symmetric space: `G`, `σ*`, the partition, the restriction map and `K`.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use num_traits::Zero;

use super::families::{family_data, FamilyData};
use super::spec::{Dims, SymmetricSpaceSpec};
use crate::error::{Error, Result};
use crate::lie_core::cartan_type::{self, CartanType};
use crate::lie_core::matrix::{self, QMatrix};
use crate::lie_core::{BasisTag, BilinearForm, Rational, RootSystem, Weight};
use crate::Caps;

/// `σ*` as a matrix acting on ambient coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Involution {
    basis: BasisTag,
    matrix: QMatrix,
}

impl Involution {
    pub fn matrix(&self) -> &QMatrix {
        &self.matrix
    }

    pub fn apply(&self, mu: &Weight) -> Result<Weight> {
        if mu.basis() != &self.basis || mu.rank() != self.matrix.len() {
            return Err(Error::BasisMismatch {
                left: mu.basis().to_string(),
                right: self.basis.to_string(),
            });
        }
        Ok(Weight::new(
            self.basis.clone(),
            matrix::mul_vec(&self.matrix, mu.coords()),
        ))
    }
}

/// The sets `Φ1⁺`, `Φ2⁺`, `Φ3′⁺`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootPartition {
    pub phi1_plus: Vec<Weight>,
    pub phi2_plus: Vec<Weight>,
    pub phi3_prime_plus: Vec<Weight>,
}

/// Restriction from `i𝔱*` to `i𝔱_K*`, as a `rank_K × dim` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RestrictionMap {
    from: BasisTag,
    to: BasisTag,
    matrix: QMatrix,
}

impl RestrictionMap {
    pub fn matrix(&self) -> &QMatrix {
        &self.matrix
    }

    pub fn source(&self) -> &BasisTag {
        &self.from
    }

    pub fn target(&self) -> &BasisTag {
        &self.to
    }

    /// Basis of the kernel (the `𝔱_0` directions).
    pub fn kernel(&self) -> Vec<Vec<Rational>> {
        matrix::null_space(&self.matrix, self.source_dim())
    }

    fn source_dim(&self) -> usize {
        self.matrix.first().map_or(0, |r| r.len())
    }
}

/// Applies the restriction map.
pub fn restrict_weight(map: &RestrictionMap, mu: &Weight) -> Result<Weight> {
    if mu.basis() != &map.from || mu.rank() != map.source_dim() {
        return Err(Error::BasisMismatch {
            left: mu.basis().to_string(),
            right: map.from.to_string(),
        });
    }
    Ok(Weight::new(map.to.clone(), matrix::mul_vec(&map.matrix, mu.coords())))
}

/// A fully built outer symmetric space.
#[derive(Clone, Debug)]
pub struct SymmetricSpace {
    spec: SymmetricSpaceSpec,
    g: RootSystem,
    involution: Involution,
    partition: RootPartition,
    restriction: RestrictionMap,
    k: RootSystem,
    k_type: CartanType,
}

impl SymmetricSpace {
    pub fn spec(&self) -> &SymmetricSpaceSpec {
        &self.spec
    }

    pub fn dims(&self) -> Dims {
        self.spec.dims()
    }

    pub fn g(&self) -> &RootSystem {
        &self.g
    }

    pub fn k(&self) -> &RootSystem {
        &self.k
    }

    pub fn involution(&self) -> &Involution {
        &self.involution
    }

    pub fn partition(&self) -> &RootPartition {
        &self.partition
    }

    pub fn restriction(&self) -> &RestrictionMap {
        &self.restriction
    }

    pub fn k_type(&self) -> &CartanType {
        &self.k_type
    }

    pub fn restrict(&self, mu: &Weight) -> Result<Weight> {
        restrict_weight(&self.restriction, mu)
    }

    /// `Σ γ′/2` over `γ ∈ Φ3′⁺`.
    pub fn half_sum_phi3(&self) -> Result<Weight> {
        let mut acc = Weight::zero(self.k.basis().clone(), self.k.ambient_dim());
        for g in &self.partition.phi3_prime_plus {
            acc = acc.try_add(&self.restrict(g)?)?;
        }
        Ok(acc.scale(&crate::lie_core::q(1, 2)))
    }

    /// Basis of `𝔱_0`: kernel of the restriction inside the span of the roots.
    pub fn t0_directions(&self) -> Vec<Vec<Rational>> {
        let cols = matrix::transpose(&self.g.simple_roots().iter().map(|r| r.coords().to_vec()).collect());
        let composed = matrix::mul(&self.restriction.matrix, &cols);
        matrix::null_space(&composed, self.g.rank())
            .iter()
            .map(|c| matrix::mul_vec(&cols, c))
            .collect()
    }

    /// `s = dim 𝔤 / (24 ‖δ_G‖²)`.
    pub fn normalization(&self) -> Result<Rational> {
        let n = self.g.norm2(self.g.weyl_vector())?;
        Ok(Rational::from_integer(self.dims().g.into()) / (Rational::from_integer(24.into()) * n))
    }
}

/// Builds every object of the space and checks the transcribed partition against the
/// generated positive roots.
pub fn build_space(spec: &SymmetricSpaceSpec, caps: &Caps) -> Result<SymmetricSpace> {
    let data = family_data(spec);
    let FamilyData {
        g_basis,
        k_basis,
        gram,
        simple_roots,
        sigma,
        phi1,
        phi2,
        phi3_prime,
        k_basis_vectors,
    } = data;
    let form = BilinearForm::new(gram.clone())?;
    let wrap = |v: Vec<Rational>| Weight::new(g_basis.clone(), v);
    let g = RootSystem::with_basis(
        g_basis.clone(),
        form,
        simple_roots.into_iter().map(wrap).collect(),
        caps,
    )?;
    let involution = Involution {
        basis: g_basis.clone(),
        matrix: sigma,
    };
    let partition = RootPartition {
        phi1_plus: phi1.into_iter().map(wrap).collect(),
        phi2_plus: phi2.into_iter().map(wrap).collect(),
        phi3_prime_plus: phi3_prime.into_iter().map(wrap).collect(),
    };
    let mut covered: Vec<Weight> = partition
        .phi1_plus
        .iter()
        .chain(&partition.phi2_plus)
        .chain(&partition.phi3_prime_plus)
        .cloned()
        .collect();
    for gm in &partition.phi3_prime_plus {
        covered.push(involution.apply(gm)?);
    }
    let covered_set: BTreeSet<Weight> = covered.iter().cloned().collect();
    let generated: BTreeSet<Weight> = g.positive_roots().iter().cloned().collect();
    if covered_set.len() != covered.len() || covered_set != generated {
        return Err(Error::inconsistent(
            "build_space",
            format!(
                "{spec}: partition covers {} roots ({} distinct) but Φ⁺ has {}",
                covered.len(),
                covered_set.len(),
                generated.len()
            ),
        ));
    }

    // restriction = Gram_K⁻¹ · Bᵀ · Gram_G, with B the isotropy basis vectors as columns
    let bt: QMatrix = k_basis_vectors.clone();
    let bt_g = matrix::mul(&bt, &gram);
    let gram_k = matrix::mul(&bt_g, &matrix::transpose(&bt));
    let gram_k_inv =
        matrix::inverse(&gram_k).ok_or_else(|| Error::inconsistent("build_space", "degenerate isotropy basis"))?;
    let restriction = RestrictionMap {
        from: g_basis.clone(),
        to: k_basis.clone(),
        matrix: matrix::mul(&gram_k_inv, &bt_g),
    };
    let k_form = BilinearForm::new(gram_k)?;

    let k = isotropy_root_system(&partition, &restriction, k_basis, k_form, caps)?;
    let k_type = k.cartan_type()?;
    Ok(SymmetricSpace {
        spec: *spec,
        g,
        involution,
        partition,
        restriction,
        k,
        k_type,
    })
}

/// `Φ_K⁺ = {θ′ : θ ∈ Φ1⁺ ∪ Φ3′⁺}`; simple roots are its indecomposable elements, put in
/// Bourbaki order with ties broken towards lexicographically larger coordinates.
fn isotropy_root_system(
    partition: &RootPartition,
    restriction: &RestrictionMap,
    k_basis: BasisTag,
    k_form: BilinearForm,
    caps: &Caps,
) -> Result<RootSystem> {
    let mut pos: BTreeSet<Weight> = BTreeSet::new();
    for r in partition.phi1_plus.iter().chain(&partition.phi3_prime_plus) {
        let w = restrict_weight(restriction, r)?;
        if w.is_zero() {
            return Err(Error::inconsistent(
                "build_space",
                format!("root {r} restricts to zero"),
            ));
        }
        pos.insert(w);
    }
    let simple: Vec<Weight> = pos
        .iter()
        .filter(|a| {
            !pos.iter().any(|b| {
                let c = a.try_sub(b).expect("same basis");
                pos.contains(&c)
            })
        })
        .cloned()
        .collect();
    let draft = RootSystem::with_basis(k_basis.clone(), k_form.clone(), simple.clone(), caps)?;
    let prefer = |i: usize, j: usize| -> Ordering { simple[j].coords().cmp(simple[i].coords()) };
    let (_, order) = cartan_type::canonical_order(draft.cartan(), prefer)?;
    let ordered: Vec<Weight> = order.iter().flatten().map(|&i| simple[i].clone()).collect();
    let k = RootSystem::with_basis(k_basis, k_form, ordered, caps)?;
    let generated: BTreeSet<Weight> = k.positive_roots().iter().cloned().collect();
    if generated != pos {
        return Err(Error::inconsistent(
            "build_space",
            format!(
                "restricted roots ({}) do not form the positive system generated by their indecomposables ({})",
                pos.len(),
                generated.len()
            ),
        ));
    }
    Ok(k)
}

/// The Cartan matrix of the isotropy simple system and its recognized type.
pub fn k_cartan_matrix(rs_k: &RootSystem) -> Result<(Vec<Vec<i64>>, CartanType)> {
    let (ty, _) = cartan_type::recognize(rs_k.cartan())?;
    Ok((rs_k.cartan().to_vec(), ty))
}

pub(crate) fn is_zero_vec(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}
