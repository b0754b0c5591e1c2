//! Integer engine on Dynkin labels.
//!
//! A weight in the span of the roots is stored through its labels `a_j = ⟨μ, α_j∨⟩`.
//! Integral weights have integer labels, so reflections, dominance tests and the
//! Freudenthal recursion run on `i64` vectors. Inner products use the integer matrix
//! `scale · ⟨ω_i, ω_j⟩`.

use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::Mutex;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use super::rational::{lcm_of_denominators, Rational};
use crate::error::{Error, Result};

pub type Labels = Vec<i64>;

#[derive(Debug)]
pub struct LabelSystem {
    rank: usize,
    /// `cartan[i][j] = ⟨α_i, α_j∨⟩`
    cartan: Vec<Vec<i64>>,
    pos_coeffs: Vec<Vec<i64>>,
    pos_labels: Vec<Labels>,
    /// `α∨ = Σ coroot_coeffs[r][i] α_i∨`
    coroot_coeffs: Vec<Vec<i64>>,
    heights: Vec<i64>,
    /// `scale · ⟨ω_i, ω_j⟩`
    gram: Vec<Vec<i64>>,
    scale: i64,
    /// `gram · labels(α_r)`, so that `scale · ⟨μ, α_r⟩ = root_duals[r] · μ`
    root_duals: Vec<Vec<i64>>,
    components: Vec<Vec<usize>>,
    stabilizer_orders: Mutex<HashMap<u64, BigInt>>,
}

impl Clone for LabelSystem {
    fn clone(&self) -> Self {
        LabelSystem {
            rank: self.rank,
            cartan: self.cartan.clone(),
            pos_coeffs: self.pos_coeffs.clone(),
            pos_labels: self.pos_labels.clone(),
            coroot_coeffs: self.coroot_coeffs.clone(),
            heights: self.heights.clone(),
            gram: self.gram.clone(),
            scale: self.scale,
            root_duals: self.root_duals.clone(),
            components: self.components.clone(),
            stabilizer_orders: Mutex::new(HashMap::new()),
        }
    }
}

impl LabelSystem {
    /// `simple_norms[i] = ⟨α_i, α_i⟩`, `fund_gram[i][j] = ⟨ω_i, ω_j⟩`.
    pub(crate) fn new(
        cartan: Vec<Vec<i64>>,
        pos_coeffs: Vec<Vec<i64>>,
        simple_norms: &[Rational],
        fund_gram: &[Vec<Rational>],
    ) -> Result<Self> {
        let rank = cartan.len();
        let pos_labels: Vec<Labels> = pos_coeffs
            .iter()
            .map(|c| {
                (0..rank)
                    .map(|j| (0..rank).map(|k| c[k] * cartan[k][j]).sum())
                    .collect()
            })
            .collect();
        let mut coroot_coeffs = Vec::with_capacity(pos_coeffs.len());
        for c in &pos_coeffs {
            // ‖α‖² = Σ c_i c_j ⟨α_i, α_j⟩ with ⟨α_i, α_j⟩ = cartan[i][j] ‖α_j‖² / 2
            let mut norm = Rational::from_integer(0.into());
            for i in 0..rank {
                for j in 0..rank {
                    if c[i] != 0 && c[j] != 0 {
                        norm += Rational::from_integer((c[i] * c[j] * cartan[i][j]).into()) * &simple_norms[j]
                            / Rational::from_integer(2.into());
                    }
                }
            }
            let mut d = Vec::with_capacity(rank);
            for i in 0..rank {
                let v = Rational::from_integer(c[i].into()) * &simple_norms[i] / &norm;
                if !v.is_integer() {
                    return Err(Error::MalformedRootSystem(format!(
                        "non-integral coroot coefficient for root {c:?}"
                    )));
                }
                d.push(v.to_integer().to_i64().unwrap());
            }
            coroot_coeffs.push(d);
        }
        let heights = pos_coeffs.iter().map(|c| c.iter().sum()).collect();
        let scale_big = lcm_of_denominators(fund_gram.iter().flatten());
        let scale = scale_big.to_i64().expect("form scale fits in i64");
        let gram: Vec<Vec<i64>> = fund_gram
            .iter()
            .map(|row| {
                row.iter()
                    .map(|x| {
                        (x * Rational::from_integer(scale_big.clone()))
                            .to_integer()
                            .to_i64()
                            .unwrap()
                    })
                    .collect()
            })
            .collect();
        let root_duals = pos_labels
            .iter()
            .map(|l| (0..rank).map(|i| (0..rank).map(|j| gram[i][j] * l[j]).sum()).collect())
            .collect();
        let components = connected_components(&cartan);
        Ok(LabelSystem {
            rank,
            cartan,
            pos_coeffs,
            pos_labels,
            coroot_coeffs,
            heights,
            gram,
            scale,
            root_duals,
            components,
            stabilizer_orders: Mutex::new(HashMap::new()),
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn num_positive_roots(&self) -> usize {
        self.pos_labels.len()
    }

    pub fn positive_root_labels(&self) -> &[Labels] {
        &self.pos_labels
    }

    pub fn positive_root_coeffs(&self) -> &[Vec<i64>] {
        &self.pos_coeffs
    }

    pub fn coroot_coeffs(&self) -> &[Vec<i64>] {
        &self.coroot_coeffs
    }

    pub fn scale(&self) -> i64 {
        self.scale
    }

    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    /// `⟨μ, α_r∨⟩` for positive root `r`.
    pub fn coroot_pairing(&self, r: usize, l: &[i64]) -> i64 {
        self.coroot_coeffs[r].iter().zip(l).map(|(d, a)| d * a).sum()
    }

    pub fn reflect_simple(&self, l: &mut [i64], i: usize) {
        let a = l[i];
        if a != 0 {
            for j in 0..self.rank {
                l[j] -= a * self.cartan[i][j];
            }
        }
    }

    pub fn reflect(&self, l: &mut [i64], r: usize) {
        let p = self.coroot_pairing(r, l);
        if p != 0 {
            for (x, y) in l.iter_mut().zip(&self.pos_labels[r]) {
                *x -= p * y;
            }
        }
    }

    pub fn is_dominant(l: &[i64]) -> bool {
        l.iter().all(|&a| a >= 0)
    }

    /// Dominant representative and the number of simple reflections used.
    pub fn dominant(&self, l: &[i64]) -> (Labels, usize) {
        let mut v = l.to_vec();
        let mut count = 0;
        while let Some(i) = v.iter().position(|&a| a < 0) {
            self.reflect_simple(&mut v, i);
            count += 1;
        }
        (v, count)
    }

    /// `scale · ⟨μ, ν⟩`
    pub fn inner_scaled(&self, a: &[i64], b: &[i64]) -> i128 {
        let mut acc: i128 = 0;
        for i in 0..self.rank {
            if a[i] == 0 {
                continue;
            }
            let mut row: i128 = 0;
            for j in 0..self.rank {
                row += (self.gram[i][j] as i128) * (b[j] as i128);
            }
            acc += (a[i] as i128) * row;
        }
        acc
    }

    /// `scale · ‖μ + δ‖²`
    pub fn shifted_norm_scaled(&self, l: &[i64]) -> i128 {
        let s: Labels = l.iter().map(|a| a + 1).collect();
        self.inner_scaled(&s, &s)
    }

    /// Order of the stabilizer of a dominant weight (a standard parabolic subgroup).
    pub fn stabilizer_order(&self, l: &[i64]) -> BigInt {
        let mask: u64 = l
            .iter()
            .enumerate()
            .filter(|(_, &a)| a == 0)
            .fold(0, |m, (i, _)| m | (1 << i));
        if let Some(v) = self.stabilizer_orders.lock().unwrap().get(&mask) {
            return v.clone();
        }
        let mut acc = Rational::one();
        for (c, h) in self.pos_coeffs.iter().zip(&self.heights) {
            let inside = c.iter().enumerate().all(|(i, &x)| x == 0 || mask & (1 << i) != 0);
            if inside {
                acc *= Rational::new((h + 1).into(), (*h).into());
            }
        }
        debug_assert!(acc.is_integer());
        let v = acc.to_integer();
        self.stabilizer_orders.lock().unwrap().insert(mask, v.clone());
        v
    }

    pub fn weyl_group_order(&self) -> BigInt {
        self.stabilizer_order(&vec![0; self.rank])
    }

    pub fn orbit_size(&self, dominant: &[i64]) -> BigInt {
        self.weyl_group_order() / self.stabilizer_order(dominant)
    }

    /// Full Weyl orbit by breadth-first closure under simple reflections.
    pub fn orbit(&self, l: &[i64], cap: usize) -> Result<Vec<Labels>> {
        let mut seen: HashSet<Labels> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(l.to_vec());
        queue.push_back(l.to_vec());
        while let Some(v) = queue.pop_front() {
            for i in 0..self.rank {
                if v[i] == 0 {
                    continue;
                }
                let mut w = v.clone();
                self.reflect_simple(&mut w, i);
                if seen.insert(w.clone()) {
                    if seen.len() > cap {
                        return Err(Error::cap(
                            "Weyl orbit",
                            cap,
                            format!("more than {cap}"),
                            "use dominant_representative instead",
                        ));
                    }
                    queue.push_back(w);
                }
            }
        }
        let mut out: Vec<Labels> = seen.into_iter().collect();
        out.sort();
        Ok(out)
    }

    /// Dominant weights `ν ≤ λ` in the root-lattice class of `λ`.
    pub fn dominant_weights_below(&self, lambda: &[i64], cap: usize) -> Result<Vec<Labels>> {
        let mut seen: HashSet<Labels> = HashSet::new();
        let mut stack = vec![lambda.to_vec()];
        seen.insert(lambda.to_vec());
        while let Some(v) = stack.pop() {
            for root in &self.pos_labels {
                let w: Labels = v.iter().zip(root).map(|(a, b)| a - b).collect();
                if Self::is_dominant(&w) && !seen.contains(&w) {
                    seen.insert(w.clone());
                    if seen.len() > cap {
                        return Err(Error::cap(
                            "dominant weights of an irreducible module",
                            cap,
                            format!("more than {cap}"),
                            "raise the enumeration cap",
                        ));
                    }
                    stack.push(w);
                }
            }
        }
        let mut out: Vec<Labels> = seen.into_iter().collect();
        out.sort_by(|a, b| {
            self.shifted_norm_scaled(b)
                .cmp(&self.shifted_norm_scaled(a))
                .then_with(|| b.cmp(a))
        });
        Ok(out)
    }

    /// Freudenthal recursion over dominant weights; returns `(ν, m(ν))` with
    /// `m(ν) > 0`, in decreasing `‖ν+δ‖²` order.
    pub fn dominant_multiplicities(&self, lambda: &[i64], cap: usize) -> Result<Vec<(Labels, u128)>> {
        if !Self::is_dominant(lambda) {
            return Err(Error::NotDominant(format!("{lambda:?}")));
        }
        if self.components.len() > 1 {
            return self.product_multiplicities(lambda, cap);
        }
        let weights = self.dominant_weights_below(lambda, cap)?;
        let top = self.shifted_norm_scaled(lambda);
        let mut mult: HashMap<Labels, u128> = HashMap::with_capacity(weights.len());
        mult.insert(lambda.to_vec(), 1);
        let mut out = vec![(lambda.to_vec(), 1u128)];
        for nu in weights.iter().skip(1) {
            let mut num: i128 = 0;
            for (r, root) in self.pos_labels.iter().enumerate() {
                let mut w = nu.clone();
                loop {
                    for (x, y) in w.iter_mut().zip(root) {
                        *x += y;
                    }
                    let (d, _) = self.dominant(&w);
                    match mult.get(&d) {
                        Some(&m) if m > 0 => {
                            let ip: i128 = self.root_duals[r]
                                .iter()
                                .zip(&w)
                                .map(|(u, x)| (*u as i128) * (*x as i128))
                                .sum();
                            num += 2 * (m as i128) * ip;
                        }
                        _ => break,
                    }
                }
            }
            let den = top - self.shifted_norm_scaled(nu);
            if den <= 0 || num % den != 0 {
                return Err(Error::inconsistent(
                    "Freudenthal recursion",
                    format!("non-integral multiplicity at {nu:?}"),
                ));
            }
            let m = num / den;
            if m < 0 {
                return Err(Error::inconsistent("Freudenthal recursion", "negative multiplicity"));
            }
            if m > 0 {
                mult.insert(nu.clone(), m as u128);
                out.push((nu.clone(), m as u128));
            } else {
                mult.insert(nu.clone(), 0);
            }
        }
        Ok(out)
    }

    fn product_multiplicities(&self, lambda: &[i64], cap: usize) -> Result<Vec<(Labels, u128)>> {
        let mut acc: Vec<(Labels, u128)> = vec![(vec![0; self.rank], 1)];
        for comp in &self.components {
            let sub = self.subsystem(comp)?;
            let part: Labels = comp.iter().map(|&i| lambda[i]).collect();
            let chars = sub.dominant_multiplicities(&part, cap)?;
            let mut next = Vec::with_capacity(acc.len() * chars.len());
            for (l, m) in &acc {
                for (c, mc) in &chars {
                    let mut v = l.clone();
                    for (k, &i) in comp.iter().enumerate() {
                        v[i] = c[k];
                    }
                    next.push((v, m * mc));
                }
            }
            if next.len() > cap {
                return Err(Error::cap(
                    "dominant weights of an irreducible module",
                    cap,
                    next.len(),
                    "raise the enumeration cap",
                ));
            }
            acc = next;
        }
        acc.sort_by(|(a, _), (b, _)| {
            self.shifted_norm_scaled(b)
                .cmp(&self.shifted_norm_scaled(a))
                .then_with(|| b.cmp(a))
        });
        Ok(acc)
    }

    /// Restriction to a union of connected components of the Dynkin diagram.
    pub fn subsystem(&self, idx: &[usize]) -> Result<LabelSystem> {
        let cartan: Vec<Vec<i64>> = idx
            .iter()
            .map(|&i| idx.iter().map(|&j| self.cartan[i][j]).collect())
            .collect();
        let inside = |c: &Vec<i64>| c.iter().enumerate().all(|(i, &x)| x == 0 || idx.contains(&i));
        let mut pos_coeffs = Vec::new();
        let mut coroot = Vec::new();
        for (c, d) in self.pos_coeffs.iter().zip(&self.coroot_coeffs) {
            if inside(c) {
                pos_coeffs.push(idx.iter().map(|&i| c[i]).collect::<Vec<i64>>());
                coroot.push(idx.iter().map(|&i| d[i]).collect::<Vec<i64>>());
            }
        }
        let gram: Vec<Vec<i64>> = idx
            .iter()
            .map(|&i| idx.iter().map(|&j| self.gram[i][j]).collect())
            .collect();
        let rank = idx.len();
        let pos_labels: Vec<Labels> = pos_coeffs
            .iter()
            .map(|c: &Vec<i64>| {
                (0..rank)
                    .map(|j| (0..rank).map(|k| c[k] * cartan[k][j]).sum())
                    .collect()
            })
            .collect();
        let root_duals = pos_labels
            .iter()
            .map(|l| (0..rank).map(|i| (0..rank).map(|j| gram[i][j] * l[j]).sum()).collect())
            .collect();
        let heights = pos_coeffs.iter().map(|c| c.iter().sum()).collect();
        let components = connected_components(&cartan);
        Ok(LabelSystem {
            rank,
            cartan,
            pos_coeffs,
            pos_labels,
            coroot_coeffs: coroot,
            heights,
            gram,
            scale: self.scale,
            root_duals,
            components,
            stabilizer_orders: Mutex::new(HashMap::new()),
        })
    }

    /// `Σ_ν m(ν) |W ν|` over the dominant multiplicities, i.e. the module dimension.
    pub fn total_from_dominant(&self, chars: &[(Labels, u128)]) -> BigInt {
        chars.iter().map(|(l, m)| BigInt::from(*m) * self.orbit_size(l)).sum()
    }
}

pub(crate) fn connected_components(cartan: &[Vec<i64>]) -> Vec<Vec<usize>> {
    let n = cartan.len();
    let mut comp = vec![usize::MAX; n];
    let mut out = Vec::new();
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        let id = out.len();
        let mut members = vec![];
        let mut stack = vec![s];
        comp[s] = id;
        while let Some(v) = stack.pop() {
            members.push(v);
            for w in 0..n {
                if w != v && cartan[v][w] != 0 && comp[w] == usize::MAX {
                    comp[w] = id;
                    stack.push(w);
                }
            }
        }
        members.sort_unstable();
        out.push(members);
    }
    out
}

/// `gcd` helper kept here for callers working with label vectors.
pub fn gcd_all(v: &[i64]) -> i64 {
    v.iter().fold(0i64, |g, &x| g.gcd(&x))
}
