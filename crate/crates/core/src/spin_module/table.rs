//! The spin weight table and the highest-weight candidates.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Pow};

use crate::error::{Error, Result};
use crate::lie_core::labels::Labels;
use crate::lie_core::{RootSystem, Weight};
use crate::symmetric_space::SymmetricSpace;

/// One dominant weight of the spin representation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpinWeightEntry {
    pub weight: Weight,
    pub labels: Labels,
    pub multiplicity: u128,
    pub orbit_size: BigInt,
}

/// Dominant part of the spin character of `K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpinWeightTable {
    entries: Vec<SpinWeightEntry>,
    r0: u32,
    half_spin: bool,
    factor: u128,
    sign_patterns: BigInt,
    spinor_dim: BigInt,
}

impl SpinWeightTable {
    /// Dominant entries, in decreasing `‖ν+δ_K‖²` order.
    pub fn entries(&self) -> &[SpinWeightEntry] {
        &self.entries
    }

    /// `dim 𝔱_0 = 2 r0` (even case) or `2 r0 − 1` (odd case).
    pub fn r0(&self) -> u32 {
        self.r0
    }

    /// True when `dim 𝔱_0` is odd and only one half-spinor module is counted.
    pub fn is_half_spin(&self) -> bool {
        self.half_spin
    }

    /// Multiplicity carried by each sign pattern: `2^{r0}` or `2^{r0−1}`.
    pub fn pattern_factor(&self) -> u128 {
        self.factor
    }

    /// `2^{|Φ2⁺|+|Φ3′⁺|}`
    pub fn sign_patterns(&self) -> &BigInt {
        &self.sign_patterns
    }

    /// `2^⌊dim 𝔭/2⌋`
    pub fn spinor_dim(&self) -> &BigInt {
        &self.spinor_dim
    }

    /// `Σ m(ν)·|W_K ν|`, which equals [`Self::spinor_dim`].
    pub fn total(&self) -> BigInt {
        self.entries
            .iter()
            .map(|e| BigInt::from(e.multiplicity) * &e.orbit_size)
            .sum()
    }

    /// Multiplicity of an arbitrary weight, looked up through its dominant representative.
    pub fn multiplicity(&self, k: &RootSystem, nu: &Weight) -> Result<u128> {
        let Some(l) = k.integral_labels(nu)? else {
            return Ok(0);
        };
        let (dom, _) = k.label_system().dominant(&l);
        Ok(self
            .entries
            .iter()
            .find(|e| e.labels == dom)
            .map_or(0, |e| e.multiplicity))
    }

    /// The full table, expanding every dominant entry to its orbit.
    pub fn expand(&self, k: &RootSystem) -> Result<BTreeMap<Weight, u128>> {
        let cap = k.caps().enumeration;
        if self.total_orbit_points() > BigInt::from(cap) {
            return Err(Error::cap(
                "expanded spin weight table",
                cap,
                self.total_orbit_points(),
                "use the dominant entries instead",
            ));
        }
        let mut out = BTreeMap::new();
        for e in &self.entries {
            for l in k.label_system().orbit(&e.labels, k.caps().orbit)? {
                out.insert(k.weight_from_labels(&l), e.multiplicity);
            }
        }
        Ok(out)
    }

    fn total_orbit_points(&self) -> BigInt {
        self.entries.iter().map(|e| e.orbit_size.clone()).sum()
    }

    pub(crate) fn dominant_map(&self) -> BTreeMap<Labels, u128> {
        self.entries
            .iter()
            .map(|e| (e.labels.clone(), e.multiplicity))
            .collect()
    }
}

/// Labels of the restriction of an ambient root, as integers.
pub(crate) fn restricted_labels(space: &SymmetricSpace, r: &Weight) -> Result<Labels> {
    let w = space.restrict(r)?;
    space
        .k()
        .integral_labels(&w)?
        .ok_or_else(|| Error::inconsistent("spin_module", format!("restricted root {w} is not K-integral")))
}

/// Expands `Π (e^{r/2} + e^{−r/2})` on doubled labels starting from `start`, keeping only
/// final sums in the closed dominant chamber. Partial sums that cannot reach the chamber
/// with the remaining steps are dropped as soon as that is certain.
pub(crate) fn signed_half_sums(start: &[i64], steps: &[Labels], cap: u64) -> Result<HashMap<Labels, u128>> {
    let rank = start.len();
    let mut steps = steps.to_vec();
    // large steps first keeps the remaining slack small for as long as possible
    steps.sort_by_key(|s| std::cmp::Reverse(s.iter().map(|x| x.abs()).sum::<i64>()));
    let mut slack = vec![vec![0i64; rank]; steps.len() + 1];
    for k in (0..steps.len()).rev() {
        for i in 0..rank {
            slack[k][i] = slack[k + 1][i] + steps[k][i].abs();
        }
    }
    let alive = |v: &[i64], k: usize| v.iter().zip(&slack[k]).all(|(a, s)| a + s >= 0);
    let mut states: HashMap<Labels, u128> = HashMap::new();
    if alive(start, 0) {
        states.insert(start.to_vec(), 1);
    }
    for (k, step) in steps.iter().enumerate() {
        let mut next: HashMap<Labels, u128> = HashMap::with_capacity(states.len() * 2);
        for (v, c) in &states {
            for sign in [1i64, -1] {
                let w: Labels = v.iter().zip(step).map(|(a, b)| a + sign * b).collect();
                if alive(&w, k + 1) {
                    *next.entry(w).or_insert(0) += c;
                }
            }
        }
        if next.len() as u64 > cap {
            return Err(Error::cap(
                "spin weight convolution states",
                cap,
                format!("more than {}", next.len()),
                "raise --max-enum",
            ));
        }
        states = next;
    }
    Ok(states)
}

fn halve(doubled: &Labels, what: &str) -> Result<Labels> {
    if doubled.iter().any(|x| x % 2 != 0) {
        return Err(Error::inconsistent(
            "spin_module",
            format!("{what} has non-integral labels {doubled:?}/2"),
        ));
    }
    Ok(doubled.iter().map(|x| x / 2).collect())
}

/// Dominant part of the spin weight table with the parity-dependent multiplicity factor.
pub fn enumerate_spin_weights(space: &SymmetricSpace) -> Result<SpinWeightTable> {
    let k = space.k();
    let part = space.partition();
    let steps: Vec<Labels> = part
        .phi2_plus
        .iter()
        .chain(&part.phi3_prime_plus)
        .map(|r| restricted_labels(space, r))
        .collect::<Result<_>>()?;
    let dims = space.dims();
    let t0 = dims.t0 as u32;
    let (r0, half_spin) = if t0.is_multiple_of(2) {
        (t0 / 2, false)
    } else {
        (t0.div_ceil(2), true)
    };
    let factor: u128 = 1u128 << (if half_spin { r0 - 1 } else { r0 });
    let raw = signed_half_sums(&vec![0; k.rank()], &steps, k.caps().enumeration)?;
    let ls = k.label_system();
    let mut entries = Vec::with_capacity(raw.len());
    for (d, c) in raw {
        let labels = halve(&d, "spin weight")?;
        entries.push(SpinWeightEntry {
            weight: k.weight_from_labels(&labels),
            orbit_size: ls.orbit_size(&labels),
            labels,
            multiplicity: c * factor,
        });
    }
    sort_entries(k, &mut entries);
    let table = SpinWeightTable {
        entries,
        r0,
        half_spin,
        factor,
        sign_patterns: BigInt::from(2u8).pow(steps.len() as u32),
        spinor_dim: BigInt::from(2u8).pow((dims.p / 2) as u32),
    };
    let total = table.total();
    if total != table.spinor_dim {
        return Err(Error::inconsistent(
            "enumerate_spin_weights",
            format!("table total {total} differs from 2^⌊dim 𝔭/2⌋ = {}", table.spinor_dim),
        ));
    }
    if &table.sign_patterns * BigInt::from(factor) != table.spinor_dim {
        return Err(Error::inconsistent("enumerate_spin_weights", "sign pattern count"));
    }
    debug_assert!(table
        .entries
        .iter()
        .all(|e| e.multiplicity > 0 && e.orbit_size >= BigInt::one()));
    Ok(table)
}

fn sort_entries(k: &RootSystem, entries: &mut [SpinWeightEntry]) {
    let ls = k.label_system();
    entries.sort_by(|a, b| {
        ls.shifted_norm_scaled(&b.labels)
            .cmp(&ls.shifted_norm_scaled(&a.labels))
            .then_with(|| b.weight.cmp(&a.weight))
    });
}

/// K-dominant integral weights `½(±β′… + Σγ′)`, deduplicated, in decreasing `‖λ+δ_K‖²` order.
pub fn highest_weight_candidates(space: &SymmetricSpace) -> Result<Vec<Weight>> {
    let k = space.k();
    let part = space.partition();
    let mut start = vec![0i64; k.rank()];
    for g in &part.phi3_prime_plus {
        for (a, b) in start.iter_mut().zip(restricted_labels(space, g)?) {
            *a += b;
        }
    }
    let steps: Vec<Labels> = part
        .phi2_plus
        .iter()
        .map(|r| restricted_labels(space, r))
        .collect::<Result<_>>()?;
    let raw = signed_half_sums(&start, &steps, k.caps().enumeration)?;
    let ls = k.label_system();
    let mut out: Vec<Labels> = raw
        .into_keys()
        .filter(|d| d.iter().all(|x| x % 2 == 0))
        .map(|d| d.iter().map(|x| x / 2).collect())
        .collect();
    out.sort_by(|a, b| {
        ls.shifted_norm_scaled(b)
            .cmp(&ls.shifted_norm_scaled(a))
            .then_with(|| k.weight_from_labels(b).cmp(&k.weight_from_labels(a)))
    });
    Ok(out.iter().map(|l| k.weight_from_labels(l)).collect())
}
