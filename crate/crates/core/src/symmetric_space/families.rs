//! Per-family coordinates, simple roots, involution and root partition.
//!
//! Coordinates follow each family's customary basis:
//!
//! * `SU(2m)/SO(2m)`: `[μ1, μ3, …, μ(2m−1); μ2, μ4, …, μ(2m)]` with the odd block summing to
//!   zero. The odd block is stored first.
//! * `SU(2m)/Sp(m)`: `[μ1, …, μ(2m)]` summing to zero.
//! * `SO(2n)`, `n = p+q+1`: `(μ1, …, μn)`.
//! * `E6`: coefficients on the simple roots `θ1..θ6` (Bourbaki numbering, `θ2` on the branch),
//!   with `‖θ‖² = 2`.

use crate::lie_core::matrix::{identity, QMatrix};
use crate::lie_core::{q, qi, BasisTag, Rational};

use super::spec::{Family, SymmetricSpaceSpec};

pub(crate) struct FamilyData {
    pub g_basis: BasisTag,
    pub k_basis: BasisTag,
    pub gram: QMatrix,
    pub simple_roots: Vec<Vec<Rational>>,
    pub sigma: QMatrix,
    pub phi1: Vec<Vec<Rational>>,
    pub phi2: Vec<Vec<Rational>>,
    pub phi3_prime: Vec<Vec<Rational>>,
    /// Ambient vectors, fixed by `σ*`, whose restrictions form the isotropy coordinate basis.
    pub k_basis_vectors: Vec<Vec<Rational>>,
}

pub(crate) fn family_data(spec: &SymmetricSpaceSpec) -> FamilyData {
    match spec.family() {
        Family::SuSo => su_so(spec.m() as usize),
        Family::SuSp => su_sp(spec.m() as usize),
        Family::SoGrassmann => so_grassmann(spec.p() as usize, spec.q() as usize),
        Family::E6F4 => e6(false),
        Family::E6Sp4 => e6(true),
    }
}

fn vector(n: usize, entries: &[(usize, i64)]) -> Vec<Rational> {
    let mut v = vec![qi(0); n];
    for &(i, c) in entries {
        v[i] += qi(c);
    }
    v
}

fn su_so(m: usize) -> FamilyData {
    let n = 2 * m;
    // x̂_(2i−1) ↦ index i−1, x̂_(2i) ↦ index m+i−1 (1-based i)
    let odd = |i: usize| i - 1;
    let even = |i: usize| m + i - 1;
    let mut sigma = identity(n);
    for (i, row) in sigma.iter_mut().enumerate().take(m) {
        row[i] = qi(-1);
    }
    let beta = vector(n, &[(even(m), 2)]);
    let mut simple = vec![beta];
    for i in 1..m {
        simple.push(vector(
            n,
            &[(odd(i), 1), (odd(i + 1), -1), (even(i), 1), (even(i + 1), -1)],
        ));
        simple.push(vector(
            n,
            &[(odd(i), -1), (odd(i + 1), 1), (even(i), 1), (even(i + 1), -1)],
        ));
    }
    let phi2 = (1..=m).map(|i| vector(n, &[(even(i), 2)])).collect();
    let mut phi3 = Vec::new();
    for i in 1..=m {
        for j in i + 1..=m {
            phi3.push(vector(n, &[(odd(i), 1), (odd(j), -1), (even(i), 1), (even(j), -1)]));
            phi3.push(vector(n, &[(odd(i), 1), (odd(j), -1), (even(i), 1), (even(j), 1)]));
        }
    }
    FamilyData {
        g_basis: BasisTag::new(format!("su({n})/[odd;even]")),
        k_basis: BasisTag::new(format!("so({n})/x'")),
        gram: identity(n),
        simple_roots: simple,
        sigma,
        phi1: vec![],
        phi2,
        phi3_prime: phi3,
        k_basis_vectors: (1..=m).map(|i| vector(n, &[(even(i), 1)])).collect(),
    }
}

fn su_sp(m: usize) -> FamilyData {
    let n = 2 * m;
    // y_k ↦ index k−1
    let y = |k: usize| k - 1;
    let mut sigma = vec![vec![qi(0); n]; n];
    for k in 0..m {
        sigma[k][m + k] = qi(-1);
        sigma[m + k][k] = qi(-1);
    }
    let mut simple = vec![vector(n, &[(y(m), 1), (y(2 * m), -1)])];
    for k in 1..m {
        simple.push(vector(n, &[(y(k), 1), (y(k + 1), -1)]));
        simple.push(vector(n, &[(y(m + k), -1), (y(m + k + 1), 1)]));
    }
    let phi1 = (1..=m).map(|k| vector(n, &[(y(k), 1), (y(m + k), -1)])).collect();
    let mut phi3 = Vec::new();
    for k in 1..=m {
        for l in k + 1..=m {
            phi3.push(vector(n, &[(y(k), 1), (y(l), -1)]));
            phi3.push(vector(n, &[(y(k), 1), (y(m + l), -1)]));
        }
    }
    let half = q(1, 2);
    let k_basis_vectors = (1..=m)
        .map(|k| {
            let mut v = vec![qi(0); n];
            v[y(k)] = half.clone();
            v[y(m + k)] = -half.clone();
            v
        })
        .collect();
    FamilyData {
        g_basis: BasisTag::new(format!("su({n})/y")),
        k_basis: BasisTag::new(format!("sp({m})/x")),
        gram: identity(n),
        simple_roots: simple,
        sigma,
        phi1,
        phi2: vec![],
        phi3_prime: phi3,
        k_basis_vectors,
    }
}

fn so_grassmann(p: usize, q: usize) -> FamilyData {
    let n = p + q + 1;
    // x̂_k ↦ index k−1
    let x = |k: usize| k - 1;
    let mut sigma = identity(n);
    sigma[n - 1][n - 1] = qi(-1);
    let mut simple = Vec::new();
    for k in (1..p).chain(p + 1..p + q) {
        simple.push(vector(n, &[(x(k), 1), (x(k + 1), -1)]));
    }
    if p >= 1 {
        simple.push(vector(n, &[(x(p), 1), (x(p + 1), -1)]));
    }
    simple.push(vector(n, &[(x(p + q), 1), (x(n), -1)]));
    simple.push(vector(n, &[(x(p + q), 1), (x(n), 1)]));
    let pm = |i: usize, j: usize| vec![vector(n, &[(x(i), 1), (x(j), -1)]), vector(n, &[(x(i), 1), (x(j), 1)])];
    let mut phi1 = Vec::new();
    for i in 1..=p {
        for j in i + 1..=p {
            phi1.extend(pm(i, j));
        }
    }
    for i in p + 1..=p + q {
        for j in i + 1..=p + q {
            phi1.extend(pm(i, j));
        }
    }
    let mut phi2 = Vec::new();
    for i in 1..=p {
        for j in p + 1..=p + q {
            phi2.extend(pm(i, j));
        }
    }
    let phi3 = (1..=p + q).map(|i| vector(n, &[(x(i), 1), (x(n), -1)])).collect();
    FamilyData {
        g_basis: BasisTag::new(format!("so({})/x", 2 * n)),
        k_basis: BasisTag::new(format!("so({})xso({})/x'", 2 * p + 1, 2 * q + 1)),
        gram: identity(n),
        simple_roots: simple,
        sigma,
        phi1,
        phi2,
        phi3_prime: phi3,
        k_basis_vectors: (1..=p + q).map(|i| vector(n, &[(x(i), 1)])).collect(),
    }
}

/// Bourbaki E6 Cartan matrix: edges 1–3, 3–4, 4–5, 5–6 and 2–4.
pub(crate) fn e6_cartan() -> Vec<Vec<i64>> {
    let mut a = vec![vec![0i64; 6]; 6];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    for (i, j) in [(1, 3), (3, 4), (4, 5), (5, 6), (2, 4)] {
        a[i - 1][j - 1] = -1;
        a[j - 1][i - 1] = -1;
    }
    a
}

fn theta(c: [i64; 6]) -> Vec<Rational> {
    c.iter().map(|&x| qi(x)).collect()
}

const E6_PHI3_PRIME: [[i64; 6]; 12] = [
    [1, 0, 0, 0, 0, 0],
    [0, 0, 1, 0, 0, 0],
    [1, 0, 1, 0, 0, 0],
    [0, 0, 1, 1, 0, 0],
    [1, 0, 1, 1, 0, 0],
    [0, 1, 1, 1, 0, 0],
    [1, 1, 1, 1, 0, 0],
    [1, 0, 1, 1, 1, 0],
    [1, 1, 1, 1, 1, 0],
    [1, 1, 1, 2, 1, 0],
    [1, 1, 2, 2, 1, 0],
    [1, 1, 2, 2, 1, 1],
];

const E6F4_PHI1: [[i64; 6]; 12] = [
    [0, 1, 0, 0, 0, 0],
    [0, 0, 0, 1, 0, 0],
    [0, 1, 0, 1, 0, 0],
    [0, 0, 1, 1, 1, 0],
    [0, 1, 1, 1, 1, 0],
    [1, 0, 1, 1, 1, 1],
    [0, 1, 1, 2, 1, 0],
    [1, 1, 1, 1, 1, 1],
    [1, 1, 1, 2, 1, 1],
    [1, 1, 2, 2, 2, 1],
    [1, 1, 2, 3, 2, 1],
    [1, 2, 2, 3, 2, 1],
];

const E6SP4_PHI1: [[i64; 6]; 4] = [
    [0, 0, 0, 1, 0, 0],
    [0, 0, 1, 1, 1, 0],
    [1, 0, 1, 1, 1, 1],
    [1, 2, 2, 3, 2, 1],
];

const E6SP4_PHI2: [[i64; 6]; 8] = [
    [0, 1, 0, 0, 0, 0],
    [0, 1, 0, 1, 0, 0],
    [0, 1, 1, 1, 1, 0],
    [0, 1, 1, 2, 1, 0],
    [1, 1, 1, 1, 1, 1],
    [1, 1, 1, 2, 1, 1],
    [1, 1, 2, 2, 2, 1],
    [1, 1, 2, 3, 2, 1],
];

fn e6(sp4: bool) -> FamilyData {
    let gram = e6_cartan().iter().map(|r| r.iter().map(|&x| qi(x)).collect()).collect();
    let simple = (0..6)
        .map(|i| {
            let mut c = [0; 6];
            c[i] = 1;
            theta(c)
        })
        .collect();
    // diagram symmetry θ1 ↔ θ6, θ3 ↔ θ5
    let perm = [5, 1, 4, 3, 2, 0];
    let mut sigma = vec![vec![qi(0); 6]; 6];
    for (i, &j) in perm.iter().enumerate() {
        sigma[j][i] = qi(1);
    }
    let (phi1, phi2): (Vec<_>, Vec<_>) = if sp4 {
        (
            E6SP4_PHI1.iter().map(|c| theta(*c)).collect(),
            E6SP4_PHI2.iter().map(|c| theta(*c)).collect(),
        )
    } else {
        (E6F4_PHI1.iter().map(|c| theta(*c)).collect(), vec![])
    };
    let half = q(1, 2);
    let pair = |i: usize, j: usize| {
        let mut v = vec![qi(0); 6];
        v[i] = half.clone();
        v[j] = half.clone();
        v
    };
    let single = |i: usize| {
        let mut v = vec![qi(0); 6];
        v[i] = qi(1);
        v
    };
    FamilyData {
        g_basis: BasisTag::new("e6/theta"),
        k_basis: BasisTag::new(if sp4 { "sp(4)/theta'" } else { "f4/theta'" }),
        gram,
        simple_roots: simple,
        sigma,
        phi1,
        phi2,
        phi3_prime: E6_PHI3_PRIME.iter().map(|c| theta(*c)).collect(),
        k_basis_vectors: vec![pair(0, 5), single(1), pair(2, 4), single(3)],
    }
}
