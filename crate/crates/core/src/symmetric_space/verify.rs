//! Structural checks of the root partition, the involution and the isotropy type.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::space::{is_zero_vec, SymmetricSpace};
use crate::lie_core::matrix;
use crate::lie_core::{qi, Weight};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn push(&mut self, name: &str, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.to_string(),
            passed,
            detail: detail.into(),
        });
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn extend(&mut self, other: VerifyReport) {
        self.checks.extend(other.checks);
    }
}

/// Runs R1–R5, the involution checks, the partition cover, the dimension identity and
/// the isotropy type check. Failures are report entries, never errors.
pub fn verify_root_partition(space: &SymmetricSpace) -> VerifyReport {
    let mut rep = VerifyReport::default();
    let g = space.g();
    let sigma = space.involution();
    let part = space.partition();
    let dims = space.dims();
    let restrict = |w: &Weight| space.restrict(w).expect("ambient weight");
    let s = |w: &Weight| sigma.apply(w).expect("ambient weight");
    let neg = |w: &Weight| -w;

    // involution
    let m = sigma.matrix();
    let sq = matrix::mul(m, m);
    rep.push("sigma_involutive", sq == matrix::identity(m.len()), "σ*² = id");
    let gram = g.form().gram();
    let pulled = matrix::mul(&matrix::mul(&matrix::transpose(m), gram), m);
    rep.push("sigma_isometry", &pulled == gram, "σ*ᵀ·Gram·σ* = Gram");
    let pos: BTreeSet<Weight> = g.positive_roots().iter().cloned().collect();
    let image: BTreeSet<Weight> = pos.iter().map(s).collect();
    rep.push(
        "sigma_permutes_positive_roots",
        image == pos,
        format!("{} roots", pos.len()),
    );
    rep.push(
        "sigma_fixes_weyl_vector",
        &s(g.weyl_vector()) == g.weyl_vector(),
        format!("δ_G = {}", g.weyl_vector()),
    );

    // cover
    let mut all: Vec<Weight> = part
        .phi1_plus
        .iter()
        .chain(&part.phi2_plus)
        .chain(&part.phi3_prime_plus)
        .cloned()
        .collect();
    all.extend(part.phi3_prime_plus.iter().map(s));
    let all_set: BTreeSet<Weight> = all.iter().cloned().collect();
    rep.push(
        "partition_covers_positive_roots",
        all_set.len() == all.len() && all_set == pos,
        format!(
            "|Φ1⁺| + |Φ2⁺| + 2|Φ3′⁺| = {} + {} + 2·{} = {}, |Φ⁺| = {}",
            part.phi1_plus.len(),
            part.phi2_plus.len(),
            part.phi3_prime_plus.len(),
            all.len(),
            pos.len()
        ),
    );

    // full root sets
    let phi3: Vec<Weight> = part
        .phi3_prime_plus
        .iter()
        .flat_map(|r| {
            let t = s(r);
            [r.clone(), neg(r), t.clone(), neg(&t)]
        })
        .collect();
    let phi1: Vec<Weight> = part.phi1_plus.iter().flat_map(|r| [r.clone(), neg(r)]).collect();
    let roots: Vec<Weight> = pos.iter().flat_map(|r| [r.clone(), neg(r)]).collect();

    // R1
    let r1 = phi3.iter().all(|r| !restrict(r).is_zero());
    rep.push("R1_phi3_restrictions_nonzero", r1, "every γ ∈ Φ3 has γ′ ≠ 0");

    // R2: σ*-fixed iff orthogonal to the 𝔱_0 directions (kernel of the restriction)
    let kernel = space.t0_directions();
    let r2 = roots.iter().all(|r| {
        let fixed = &s(r) == r;
        let lowered = g.form().lower(r.coords());
        let vanishes = kernel.iter().all(|v| matrix::dot(&lowered, v) == qi(0));
        fixed == vanishes
    });
    rep.push(
        "R2_fixed_iff_vanishing_on_t0",
        r2,
        format!("dim 𝔱_0 = {}", kernel.len()),
    );

    // R3
    let res1: BTreeSet<Weight> = phi1.iter().map(restrict).collect();
    let r3 = phi3.iter().all(|r| {
        let w = restrict(r);
        !res1.contains(&w) && !res1.contains(&neg(&w))
    });
    rep.push("R3_phi1_phi3_restrictions_distinct", r3, "α′ ≠ ±γ′ for α ∈ Φ1, γ ∈ Φ3");

    // R4
    let fixed_pos: BTreeSet<Weight> = pos.iter().filter(|r| &s(r) == *r).cloned().collect();
    let phi12: BTreeSet<Weight> = part.phi1_plus.iter().chain(&part.phi2_plus).cloned().collect();
    let r4 = fixed_pos == phi12
        && part.phi3_prime_plus.iter().all(|r| {
            let t = s(r);
            &t != r && t != neg(r)
        });
    rep.push(
        "R4_fixed_point_structure",
        r4,
        format!("{} σ*-fixed positive roots", fixed_pos.len()),
    );

    // R5
    let mut by_res: BTreeMap<Weight, BTreeSet<Weight>> = BTreeMap::new();
    for r in &phi3 {
        by_res.entry(restrict(r)).or_default().insert(r.clone());
    }
    let r5 = by_res.values().all(|set| {
        set.len() == 2 && {
            let v: Vec<&Weight> = set.iter().collect();
            &s(v[0]) == v[1]
        }
    });
    rep.push(
        "R5_restriction_two_to_one_on_phi3",
        r5,
        format!("{} fibers", by_res.len()),
    );

    // restriction
    let r = space.restriction().matrix();
    let r_sigma = matrix::mul(r, m);
    rep.push("restriction_sigma_invariant", &r_sigma == r, "res ∘ σ* = res");
    let rank = matrix::rank(r);
    rep.push(
        "restriction_surjective",
        rank as u64 == dims.t_k && kernel.len() as u64 == dims.t0,
        format!("rank {rank}, kernel {}", kernel.len()),
    );
    let kernel_in_roots = kernel.iter().all(|v| !is_zero_vec(v));
    rep.push(
        "restriction_kernel_basis",
        kernel_in_roots,
        "kernel basis nondegenerate",
    );

    // isotropy roots
    let k_pos: BTreeSet<Weight> = space.k().positive_roots().iter().cloned().collect();
    let restricted: BTreeSet<Weight> = part
        .phi1_plus
        .iter()
        .chain(&part.phi3_prime_plus)
        .map(restrict)
        .collect();
    rep.push(
        "k_roots_are_restrictions",
        k_pos == restricted && restricted.len() == part.phi1_plus.len() + part.phi3_prime_plus.len(),
        format!("|Φ_K⁺| = {}", k_pos.len()),
    );

    // dimensions
    let n1 = part.phi1_plus.len() as u64;
    let n2 = part.phi2_plus.len() as u64;
    let n3 = part.phi3_prime_plus.len() as u64;
    rep.push(
        "dim_p_identity",
        dims.p == dims.t0 + 2 * n2 + 2 * n3,
        format!("{} = {} + {} + {}", dims.p, dims.t0, 2 * n2, 2 * n3),
    );
    rep.push(
        "dim_k_identity",
        dims.k == dims.t_k + 2 * (n1 + n3),
        format!("{} = {} + {}", dims.k, dims.t_k, 2 * (n1 + n3)),
    );
    rep.push(
        "dim_g_identity",
        dims.g == g.rank() as u64 + 2 * pos.len() as u64 && dims.t == g.rank() as u64,
        format!("{} = {} + {}", dims.g, g.rank(), 2 * pos.len()),
    );

    // isotropy type
    let expected = space.spec().expected_k_type();
    rep.push(
        "k_type",
        space.k_type().is_isomorphic(&expected),
        format!("found {}, expected {}", space.k_type(), expected),
    );

    // normalization
    match space.normalization() {
        Ok(sn) => {
            let stated = space.spec().stated_normalization();
            let dn = g.norm2(g.weyl_vector()).expect("δ_G");
            let strange = &sn * dn == qi(dims.g as i64) / qi(24);
            rep.push(
                "normalization",
                sn == stated && strange,
                format!("s = {sn}, stated {stated}"),
            );
        }
        Err(e) => rep.push("normalization", false, e.to_string()),
    }
    rep
}
