//! Root systems given by a simple system inside a rational inner-product space.

use std::collections::{HashSet, VecDeque};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::cartan_type::{self, CartanType};
use super::form::BilinearForm;
use super::labels::{LabelSystem, Labels};
use super::matrix::{self, QMatrix};
use super::rational::{qi, Rational};
use super::weight::{BasisTag, Weight};
use crate::error::{Error, Result};
use crate::Caps;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WeightClass {
    DominantIntegral,
    IntegralNotDominant,
    NonIntegral,
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    basis: BasisTag,
    form: BilinearForm,
    simple_roots: Vec<Weight>,
    positive_roots: Vec<Weight>,
    positive_coeffs: Vec<Vec<i64>>,
    cartan: Vec<Vec<i64>>,
    weyl_vector: Weight,
    fundamental_weights: Vec<Weight>,
    /// `2 α_i / ⟨α_i, α_i⟩` lowered by the form, so that `⟨μ, α_i∨⟩ = coroot_rows[i] · μ`.
    coroot_rows: Vec<Vec<Rational>>,
    /// `(Aᵀ)⁻¹`: Dynkin labels to simple-root coordinates.
    labels_to_simple: QMatrix,
    engine: Arc<LabelSystem>,
    caps: Caps,
}

/// Positive roots of the system spanned by `simple_roots`, sorted by height and then
/// lexicographically by coordinates.
pub fn generate_positive_roots(simple_roots: &[Weight], form: &BilinearForm, cap: usize) -> Result<Vec<Weight>> {
    let (cartan, _) = validated_cartan(simple_roots, form)?;
    let coeffs = positive_root_coeffs(&cartan, cap)?;
    let basis = simple_roots
        .first()
        .map(|w| w.basis().clone())
        .unwrap_or_else(|| BasisTag::new("empty"));
    Ok(sorted_roots(&basis, form.dim(), simple_roots, coeffs)
        .into_iter()
        .map(|(_, w)| w)
        .collect())
}

fn sorted_roots(basis: &BasisTag, dim: usize, simple: &[Weight], coeffs: Vec<Vec<i64>>) -> Vec<(Vec<i64>, Weight)> {
    let mut out: Vec<(Vec<i64>, Weight)> = coeffs
        .into_iter()
        .map(|c| {
            let w = combine(basis, dim, simple, &c);
            (c, w)
        })
        .collect();
    out.sort_by(|a, b| {
        let ha: i64 = a.0.iter().sum();
        let hb: i64 = b.0.iter().sum();
        ha.cmp(&hb).then_with(|| a.1.cmp(&b.1))
    });
    out
}

fn combine(basis: &BasisTag, dim: usize, simple: &[Weight], c: &[i64]) -> Weight {
    let mut v = vec![Rational::zero(); dim];
    for (k, a) in c.iter().enumerate() {
        if *a != 0 {
            let a = qi(*a);
            for (x, y) in v.iter_mut().zip(simple[k].coords()) {
                *x += &a * y;
            }
        }
    }
    Weight::new(basis.clone(), v)
}

fn validated_cartan(simple: &[Weight], form: &BilinearForm) -> Result<(Vec<Vec<i64>>, Vec<Rational>)> {
    let n = simple.len();
    for w in simple {
        if w.rank() != form.dim() {
            return Err(Error::MalformedRootSystem(format!(
                "simple root {w} does not match form dimension {}",
                form.dim()
            )));
        }
        simple[0].check_same_basis(w)?;
    }
    let rows: QMatrix = simple.iter().map(|w| w.coords().to_vec()).collect();
    if n > 0 && matrix::rank(&rows) != n {
        return Err(Error::MalformedRootSystem("simple roots are linearly dependent".into()));
    }
    let norms: Vec<Rational> = simple.iter().map(|w| form.norm2(w.coords())).collect();
    let mut cartan = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            let v = qi(2) * form.eval(simple[i].coords(), simple[j].coords()) / &norms[j];
            if !v.is_integer() {
                return Err(Error::MalformedRootSystem(format!(
                    "non-integral Cartan entry ({i},{j}) = {v}"
                )));
            }
            let v = v.to_integer().to_i64().unwrap();
            let ok = if i == j { v == 2 } else { (-3..=0).contains(&v) };
            if !ok {
                return Err(Error::MalformedRootSystem(format!(
                    "invalid Cartan entry ({i},{j}) = {v}"
                )));
            }
            cartan[i][j] = v;
        }
    }
    Ok((cartan, norms))
}

/// Reflection closure in simple-root coordinates.
fn positive_root_coeffs(cartan: &[Vec<i64>], cap: usize) -> Result<Vec<Vec<i64>>> {
    let n = cartan.len();
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut queue = VecDeque::new();
    for i in 0..n {
        let mut e = vec![0; n];
        e[i] = 1;
        seen.insert(e.clone());
        queue.push_back(e);
    }
    while let Some(c) = queue.pop_front() {
        for i in 0..n {
            let p: i64 = (0..n).map(|k| c[k] * cartan[k][i]).sum();
            if p == 0 {
                continue;
            }
            let mut d = c.clone();
            d[i] -= p;
            if d.iter().all(|&x| x >= 0) && d.iter().any(|&x| x > 0) && seen.insert(d.clone()) {
                if seen.len() > cap {
                    return Err(Error::cap(
                        "positive root closure",
                        cap,
                        format!("more than {cap}"),
                        "the simple system does not generate a finite root system",
                    ));
                }
                queue.push_back(d);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

impl RootSystem {
    pub fn new(form: BilinearForm, simple_roots: Vec<Weight>, caps: &Caps) -> Result<Self> {
        Self::with_basis(
            simple_roots
                .first()
                .map(|w| w.basis().clone())
                .unwrap_or_else(|| BasisTag::new("empty")),
            form,
            simple_roots,
            caps,
        )
    }

    /// Like [`RootSystem::new`] but names the basis explicitly, which matters for rank 0.
    pub fn with_basis(basis: BasisTag, form: BilinearForm, simple_roots: Vec<Weight>, caps: &Caps) -> Result<Self> {
        if let Some(w) = simple_roots.iter().find(|w| w.basis() != &basis) {
            return Err(Error::BasisMismatch {
                left: basis.to_string(),
                right: w.basis().to_string(),
            });
        }
        let (cartan, norms) = validated_cartan(&simple_roots, &form)?;
        let n = simple_roots.len();
        let dim = form.dim();
        let (positive_coeffs, positive_roots): (Vec<Vec<i64>>, Vec<Weight>) = sorted_roots(
            &basis,
            dim,
            &simple_roots,
            positive_root_coeffs(&cartan, caps.root_closure)?,
        )
        .into_iter()
        .unzip();
        let coroot_rows: Vec<Vec<Rational>> = simple_roots
            .iter()
            .zip(&norms)
            .map(|(a, nrm)| form.lower(a.coords()).into_iter().map(|x| qi(2) * x / nrm).collect())
            .collect();
        let a_q: QMatrix = cartan.iter().map(|r| r.iter().map(|&x| qi(x)).collect()).collect();
        let inv = matrix::inverse(&a_q).ok_or_else(|| Error::MalformedRootSystem("singular Cartan matrix".into()))?;
        // ω_i = Σ_k (A⁻¹)_{ik} α_k
        let fundamental_weights: Vec<Weight> = (0..n)
            .map(|i| {
                let mut v = vec![Rational::zero(); dim];
                for k in 0..n {
                    for (x, y) in v.iter_mut().zip(simple_roots[k].coords()) {
                        *x += &inv[i][k] * y;
                    }
                }
                Weight::new(basis.clone(), v)
            })
            .collect();
        let fund_gram: QMatrix = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| form.eval(fundamental_weights[i].coords(), fundamental_weights[j].coords()))
                    .collect()
            })
            .collect();
        let mut weyl = vec![Rational::zero(); dim];
        for w in &fundamental_weights {
            for (x, y) in weyl.iter_mut().zip(w.coords()) {
                *x += y;
            }
        }
        let weyl_vector = Weight::new(basis.clone(), weyl);
        let labels_to_simple = matrix::transpose(&inv);
        let engine = LabelSystem::new(cartan.clone(), positive_coeffs.clone(), &norms, &fund_gram)?;
        Ok(RootSystem {
            basis,
            form,
            simple_roots,
            positive_roots,
            positive_coeffs,
            cartan,
            weyl_vector,
            fundamental_weights,
            coroot_rows,
            labels_to_simple,
            engine: Arc::new(engine),
            caps: *caps,
        })
    }

    /// The root system of a Cartan matrix, realized in simple-root coordinates with
    /// long roots of squared length 2.
    pub fn from_cartan(cartan: &[Vec<i64>], basis: BasisTag, caps: &Caps) -> Result<Self> {
        let n = cartan.len();
        let mut norms: Vec<Option<Rational>> = vec![None; n];
        for comp in super::labels::connected_components(cartan) {
            norms[comp[0]] = Some(Rational::one());
            let mut stack = vec![comp[0]];
            while let Some(i) = stack.pop() {
                for j in 0..n {
                    if j != i && cartan[i][j] != 0 && norms[j].is_none() {
                        // ⟨α_i, α_j⟩ = A_ij ‖α_j‖²/2 = A_ji ‖α_i‖²/2
                        let d = norms[i].clone().unwrap() * qi(cartan[j][i]) / qi(cartan[i][j]);
                        norms[j] = Some(d);
                        stack.push(j);
                    }
                }
            }
            let max = comp.iter().map(|&i| norms[i].clone().unwrap()).max().unwrap();
            for &i in &comp {
                norms[i] = Some(norms[i].clone().unwrap() * qi(2) / &max);
            }
        }
        let gram: QMatrix = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| qi(cartan[i][j]) * norms[j].clone().unwrap() / qi(2))
                    .collect()
            })
            .collect();
        let form = BilinearForm::new(gram)?;
        let simple = (0..n)
            .map(|i| {
                let mut e = vec![0i64; n];
                e[i] = 1;
                Weight::from_ints(basis.clone(), &e)
            })
            .collect();
        let rs = RootSystem::with_basis(basis, form, simple, caps)?;
        if rs.cartan() != cartan {
            return Err(Error::MalformedRootSystem(format!("{cartan:?} is not a Cartan matrix")));
        }
        Ok(rs)
    }

    /// The simple root system of the given type, in Bourbaki order.
    pub fn of_type(t: &CartanType, caps: &Caps) -> Result<Self> {
        let n = t.rank();
        let mut a = vec![vec![0i64; n]; n];
        let mut off = 0;
        for c in t.components() {
            let m = cartan_type::cartan_matrix(*c)?;
            for i in 0..c.rank {
                for j in 0..c.rank {
                    a[off + i][off + j] = m[i][j];
                }
            }
            off += c.rank;
        }
        RootSystem::from_cartan(&a, BasisTag::new(format!("simple roots of {t}")), caps)
    }

    pub fn basis(&self) -> &BasisTag {
        &self.basis
    }

    pub fn rank(&self) -> usize {
        self.simple_roots.len()
    }

    /// Dimension of the ambient coordinate space (at least the rank).
    pub fn ambient_dim(&self) -> usize {
        self.form.dim()
    }

    pub fn form(&self) -> &BilinearForm {
        &self.form
    }

    pub fn caps(&self) -> &Caps {
        &self.caps
    }

    pub fn simple_roots(&self) -> &[Weight] {
        &self.simple_roots
    }

    pub fn positive_roots(&self) -> &[Weight] {
        &self.positive_roots
    }

    /// Simple-root coefficients of each positive root, aligned with [`Self::positive_roots`].
    pub fn positive_root_coeffs(&self) -> &[Vec<i64>] {
        &self.positive_coeffs
    }

    /// `cartan[i][j] = ⟨α_i, α_j∨⟩`.
    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn weyl_vector(&self) -> &Weight {
        &self.weyl_vector
    }

    pub fn fundamental_weights(&self) -> &[Weight] {
        &self.fundamental_weights
    }

    pub fn label_system(&self) -> &LabelSystem {
        &self.engine
    }

    pub fn cartan_type(&self) -> Result<CartanType> {
        Ok(cartan_type::recognize(&self.cartan)?.0)
    }

    pub fn weyl_group_order(&self) -> BigInt {
        self.engine.weyl_group_order()
    }

    pub fn inner(&self, a: &Weight, b: &Weight) -> Result<Rational> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.form.eval(a.coords(), b.coords()))
    }

    pub fn norm2(&self, a: &Weight) -> Result<Rational> {
        self.inner(a, a)
    }

    fn check(&self, mu: &Weight) -> Result<()> {
        if mu.basis() != &self.basis || mu.rank() != self.ambient_dim() {
            return Err(Error::BasisMismatch {
                left: format!("{}[{}]", mu.basis(), mu.rank()),
                right: format!("{}[{}]", self.basis, self.ambient_dim()),
            });
        }
        Ok(())
    }

    /// `⟨μ, α_i∨⟩` for the simple root `i`.
    pub fn simple_pairing(&self, mu: &Weight, i: usize) -> Rational {
        self.coroot_rows[i].iter().zip(mu.coords()).map(|(a, b)| a * b).sum()
    }

    /// Dynkin labels `⟨μ, α_i∨⟩`.
    pub fn labels(&self, mu: &Weight) -> Result<Vec<Rational>> {
        self.check(mu)?;
        Ok((0..self.rank()).map(|i| self.simple_pairing(mu, i)).collect())
    }

    /// Dynkin labels when all are integers.
    pub fn integral_labels(&self, mu: &Weight) -> Result<Option<Labels>> {
        let l = self.labels(mu)?;
        Ok(l.iter().map(super::rational::as_i64).collect())
    }

    /// The weight `Σ a_i ω_i` in the span of the roots.
    pub fn weight_from_labels(&self, labels: &[i64]) -> Weight {
        let mut v = vec![Rational::zero(); self.ambient_dim()];
        for (a, w) in labels.iter().zip(&self.fundamental_weights) {
            if *a != 0 {
                let a = qi(*a);
                for (x, y) in v.iter_mut().zip(w.coords()) {
                    *x += &a * y;
                }
            }
        }
        Weight::new(self.basis.clone(), v)
    }

    /// Coordinates of a root-lattice element in the simple-root basis, from its labels.
    pub fn simple_coords(&self, labels: &[Rational]) -> Vec<Rational> {
        matrix::mul_vec(&self.labels_to_simple, labels)
    }

    pub fn classify_weight(&self, mu: &Weight) -> Result<WeightClass> {
        let l = self.labels(mu)?;
        if l.iter().any(|x| !x.is_integer()) {
            Ok(WeightClass::NonIntegral)
        } else if l.iter().all(|x| !x.is_negative()) {
            Ok(WeightClass::DominantIntegral)
        } else {
            Ok(WeightClass::IntegralNotDominant)
        }
    }

    pub fn is_dominant(&self, mu: &Weight) -> Result<bool> {
        Ok(self.labels(mu)?.iter().all(|x| !x.is_negative()))
    }

    pub fn reflect_simple(&self, mu: &Weight, i: usize) -> Weight {
        let p = self.simple_pairing(mu, i);
        let coords = mu
            .coords()
            .iter()
            .zip(self.simple_roots[i].coords())
            .map(|(x, a)| x - &p * a)
            .collect();
        Weight::new(mu.basis().clone(), coords)
    }

    /// The dominant weight in the orbit of `μ` and the number of simple reflections used.
    pub fn dominant_representative(&self, mu: &Weight) -> Result<(Weight, usize)> {
        let mut labels = self.labels(mu)?;
        let mut coords = mu.coords().to_vec();
        let mut count = 0;
        while let Some(i) = labels.iter().position(|x| x.is_negative()) {
            let a = labels[i].clone();
            for (x, y) in coords.iter_mut().zip(self.simple_roots[i].coords()) {
                *x -= &a * y;
            }
            for j in 0..self.rank() {
                labels[j] -= &a * qi(self.cartan[i][j]);
            }
            count += 1;
        }
        Ok((Weight::new(mu.basis().clone(), coords), count))
    }

    /// The full Weyl orbit of `μ`, sorted.
    pub fn weyl_orbit(&self, mu: &Weight) -> Result<Vec<Weight>> {
        self.check(mu)?;
        let cap = self.caps.orbit;
        if let Some(l) = self.integral_labels(mu)? {
            let (d, _) = self.engine.dominant(&l);
            let size = self.engine.orbit_size(&d);
            if size > BigInt::from(cap) {
                return Err(Error::cap(
                    "Weyl orbit",
                    cap,
                    size,
                    "use dominant_representative instead",
                ));
            }
            let base = self.weight_from_labels(&l);
            let perp = mu - &base;
            let mut out: Vec<Weight> = self
                .engine
                .orbit(&l, cap)?
                .iter()
                .map(|w| &perp + &self.weight_from_labels(w))
                .collect();
            out.sort();
            return Ok(out);
        }
        let mut seen: HashSet<Weight> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(mu.clone());
        queue.push_back(mu.clone());
        while let Some(v) = queue.pop_front() {
            for i in 0..self.rank() {
                let w = self.reflect_simple(&v, i);
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
        let mut out: Vec<Weight> = seen.into_iter().collect();
        out.sort();
        Ok(out)
    }

    fn dominant_labels(&self, lambda: &Weight) -> Result<Labels> {
        match self.integral_labels(lambda)? {
            Some(l) if LabelSystem::is_dominant(&l) => Ok(l),
            _ => Err(Error::NotDominant(lambda.to_string())),
        }
    }

    /// `Π_{α>0} ⟨λ+δ, α∨⟩ / ⟨δ, α∨⟩`.
    pub fn weyl_dim(&self, lambda: &Weight) -> Result<BigInt> {
        let l = self.dominant_labels(lambda)?;
        Ok(self.weyl_dim_labels(&l))
    }

    pub fn weyl_dim_labels(&self, l: &[i64]) -> BigInt {
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for d in self.engine.coroot_coeffs() {
            let h: i64 = d.iter().sum();
            let s: i64 = d.iter().zip(l).map(|(c, a)| c * (a + 1)).sum();
            num *= s;
            den *= h;
        }
        num / den
    }

    /// `⟨μ, μ + 2δ⟩`.
    pub fn casimir(&self, mu: &Weight) -> Result<Rational> {
        let two_delta = self.weyl_vector.scale(&qi(2));
        self.inner(mu, &mu.try_add(&two_delta)?)
    }

    /// `‖μ + δ‖²`.
    pub fn shifted_norm(&self, mu: &Weight) -> Result<Rational> {
        self.norm2(&mu.try_add(&self.weyl_vector)?)
    }

    /// Multiplicities of the dominant weights of the irreducible module `V(λ)`,
    /// in decreasing `‖ν+δ‖²` order.
    pub fn dominant_character(&self, lambda: &Weight) -> Result<Vec<(Weight, u128)>> {
        let l = self.dominant_labels(lambda)?;
        let base = self.weight_from_labels(&l);
        let perp = lambda - &base;
        Ok(self
            .engine
            .dominant_multiplicities(&l, self.caps.enumeration as usize)?
            .into_iter()
            .map(|(v, m)| (&perp + &self.weight_from_labels(&v), m))
            .collect())
    }

    /// Every weight of `V(λ)` with its multiplicity, ordered by the height of `λ − μ`
    /// and then lexicographically.
    pub fn freudenthal_multiplicities(&self, lambda: &Weight) -> Result<Vec<(Weight, u128)>> {
        let l = self.dominant_labels(lambda)?;
        let dim = self.weyl_dim_labels(&l);
        if dim > BigInt::from(self.caps.dimension) {
            return Err(Error::cap(
                "irreducible module dimension",
                self.caps.dimension,
                dim,
                "raise --max-dim",
            ));
        }
        let base = self.weight_from_labels(&l);
        let perp = lambda - &base;
        let mut out: Vec<(Labels, u128)> = Vec::new();
        for (d, m) in self
            .engine
            .dominant_multiplicities(&l, self.caps.enumeration as usize)?
        {
            for w in self.engine.orbit(&d, self.caps.dimension as usize)? {
                out.push((w, m));
            }
        }
        let height = |w: &Labels| -> Rational {
            let diff: Vec<Rational> = l.iter().zip(w).map(|(a, b)| qi(a - b)).collect();
            self.simple_coords(&diff).iter().sum()
        };
        let mut keyed: Vec<(Rational, Weight, u128)> = out
            .into_iter()
            .map(|(w, m)| (height(&w), &perp + &self.weight_from_labels(&w), m))
            .collect();
        keyed.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.cmp(&b.1)));
        Ok(keyed.into_iter().map(|(_, w, m)| (w, m)).collect())
    }
}
