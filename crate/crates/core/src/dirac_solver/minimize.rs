//! Exact minimization of `‖μ+δ_G‖²` over a fiber lattice.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::fiber::FiberLattice;
use crate::error::{Error, Result};
use crate::lie_core::labels::Labels;
use crate::lie_core::{qi, Rational, Weight};
use crate::symmetric_space::SymmetricSpace;

/// A fiber point together with its dominant representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Candidate {
    pub mu: Weight,
    pub mu_dominant: Weight,
    /// `‖μ+δ_G‖²`
    pub shifted_norm: Rational,
    /// `‖μ_dom+δ_G‖²`
    pub dominant_shifted_norm: Rational,
    /// `⟨μ_dom, μ_dom+2δ_G⟩`
    pub casimir_value: Rational,
    pub restriction: Weight,
    pub(crate) dominant_labels: Labels,
}

impl Candidate {
    pub fn new(space: &SymmetricSpace, labels: &[i64]) -> Result<Self> {
        let g = space.g();
        let ls = g.label_system();
        let scale = qi(ls.scale());
        let mu = g.weight_from_labels(labels);
        let (dom, _) = ls.dominant(labels);
        let norm = |l: &[i64]| Rational::from_integer(ls.shifted_norm_scaled(l).into()) / &scale;
        let delta2 = norm(&vec![0; labels.len()]);
        let dn = norm(&dom);
        Ok(Candidate {
            restriction: space.restrict(&mu)?,
            mu,
            mu_dominant: g.weight_from_labels(&dom),
            shifted_norm: norm(labels),
            casimir_value: &dn - delta2,
            dominant_shifted_norm: dn,
            dominant_labels: dom,
        })
    }

    pub fn is_dominant(&self) -> bool {
        self.mu == self.mu_dominant
    }
}

/// The displacement part of a fiber: Gram matrix `Q` in scaled units, its inverse and the
/// factorization `Q = Uᵀ·diag(D)·U` with `U` unit upper triangular.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct FiberForm {
    q: Vec<Vec<i128>>,
    inv: Vec<Vec<Rational>>,
    dg: Vec<Rational>,
    u: Vec<Vec<Rational>>,
}

impl FiberForm {
    pub(crate) fn new(space: &SymmetricSpace, d: &[Labels]) -> Result<Self> {
        let ls = space.g().label_system();
        let n = d.len();
        let q: Vec<Vec<i128>> = (0..n)
            .map(|i| (0..n).map(|j| ls.inner_scaled(&d[i], &d[j])).collect())
            .collect();
        let qr = |i: usize, j: usize| Rational::from_integer(BigInt::from(q[i][j]));
        let qm: Vec<Vec<Rational>> = (0..n).map(|i| (0..n).map(|j| qr(i, j)).collect()).collect();
        let inv = if n == 0 {
            vec![]
        } else {
            crate::lie_core::matrix::inverse(&qm)
                .ok_or_else(|| Error::inconsistent("fiber_lattice", "degenerate fiber form"))?
        };
        let mut dg = vec![Rational::zero(); n];
        let mut u = vec![vec![Rational::zero(); n]; n];
        for i in 0..n {
            let mut di = qr(i, i);
            for k in 0..i {
                di -= &dg[k] * &u[k][i] * &u[k][i];
            }
            dg[i] = di;
            u[i][i] = qi(1);
            for j in i + 1..n {
                let mut v = qr(i, j);
                for k in 0..i {
                    v -= &dg[k] * &u[k][i] * &u[k][j];
                }
                u[i][j] = v / &dg[i];
            }
        }
        Ok(FiberForm { q, inv, dg, u })
    }
}

/// Quadratic form `F(x) = scale·‖basepoint + Σ x_i d_i + shift‖² = c0 + 2 cᵀx + xᵀQx`,
/// with `shift` either `δ_G` or zero.
pub(crate) struct FiberQuadratic<'a> {
    form: &'a FiberForm,
    c: Vec<i128>,
    c0: i128,
    scale: i64,
}

impl<'a> FiberQuadratic<'a> {
    pub(crate) fn new(space: &SymmetricSpace, fl: &'a FiberLattice) -> Self {
        Self::with_shift(space, fl, true)
    }

    pub(crate) fn with_shift(space: &SymmetricSpace, fl: &'a FiberLattice, shifted: bool) -> Self {
        let ls = space.g().label_system();
        let off = i64::from(shifted);
        let v: Labels = fl.base_labels.iter().map(|a| a + off).collect();
        FiberQuadratic {
            form: &fl.form,
            c: fl
                .displacement_labels
                .iter()
                .map(|di| ls.inner_scaled(di, &v))
                .collect(),
            c0: ls.inner_scaled(&v, &v),
            scale: ls.scale(),
        }
    }

    pub(crate) fn eval(&self, x: &[i64]) -> i128 {
        let n = x.len();
        let mut acc = self.c0;
        for i in 0..n {
            acc += 2 * self.c[i] * x[i] as i128;
            for j in 0..n {
                acc += self.form.q[i][j] * x[i] as i128 * x[j] as i128;
            }
        }
        acc
    }

    pub(crate) fn scale(&self) -> i64 {
        self.scale
    }

    /// Continuous minimizer `x* = −Q⁻¹c`.
    fn center(&self) -> Vec<Rational> {
        let n = self.c.len();
        let inv = &self.form.inv;
        (0..n)
            .map(|i| {
                -(0..n)
                    .map(|j| &inv[i][j] * Rational::from_integer(BigInt::from(self.c[j])))
                    .sum::<Rational>()
            })
            .collect()
    }

    /// Every `x` with `F(x) ≤ bound`.
    pub(crate) fn points_below(&self, bound: i128, cap: u64) -> Result<Vec<Vec<i64>>> {
        let n = self.c.len();
        if n == 0 {
            return Ok(if self.c0 <= bound { vec![vec![]] } else { vec![] });
        }
        let center = self.center();
        let fmin: Rational = {
            // F(x*) = c0 + cᵀx*
            let lin: Rational = (0..n)
                .map(|i| Rational::from_integer(BigInt::from(self.c[i])) * &center[i])
                .sum();
            Rational::from_integer(BigInt::from(self.c0)) + lin
        };
        let radius = Rational::from_integer(BigInt::from(bound)) - fmin;
        if radius < Rational::zero() {
            return Ok(vec![]);
        }
        let mut out = Vec::new();
        let mut x = vec![0i64; n];
        enumerate(n, &center, &self.form.dg, &self.form.u, &radius, &mut x, &mut out, cap)?;
        out.retain(|p| self.eval(p) <= bound);
        out.sort();
        Ok(out)
    }
}

#[allow(clippy::too_many_arguments)]
fn enumerate(
    level: usize,
    center: &[Rational],
    dg: &[Rational],
    u: &[Vec<Rational>],
    remaining: &Rational,
    x: &mut Vec<i64>,
    out: &mut Vec<Vec<i64>>,
    cap: u64,
) -> Result<()> {
    if level == 0 {
        out.push(x.clone());
        if out.len() as u64 > cap {
            return Err(Error::cap(
                "fiber lattice points",
                cap,
                format!("more than {cap}"),
                "raise --max-enum",
            ));
        }
        return Ok(());
    }
    let i = level - 1;
    let n = center.len();
    let mut c = center[i].clone();
    for j in i + 1..n {
        c -= &u[i][j] * (Rational::from_integer(x[j].into()) - &center[j]);
    }
    let ok = |t: i64| -> Option<Rational> {
        let diff = Rational::from_integer(t.into()) - &c;
        let used = &dg[i] * &diff * &diff;
        (used <= *remaining).then(|| remaining - used)
    };
    let cf = c.to_f64().unwrap_or(0.0);
    let s = (remaining.to_f64().unwrap_or(0.0) / dg[i].to_f64().unwrap_or(1.0))
        .max(0.0)
        .sqrt();
    let mut lo = (cf - s).floor() as i64 - 1;
    let mut hi = (cf + s).ceil() as i64 + 1;
    while ok(lo).is_some() {
        lo -= 1;
    }
    while ok(hi).is_some() {
        hi += 1;
    }
    for t in lo..=hi {
        if let Some(rest) = ok(t) {
            x[i] = t;
            enumerate(i, center, dg, u, &rest, x, out, cap)?;
        }
    }
    x[i] = 0;
    Ok(())
}

/// Displacement coordinates of all minimizers of `‖μ+δ_G‖²` on the fiber.
pub(crate) fn minimizing_coordinates(space: &SymmetricSpace, fl: &FiberLattice) -> Result<(i128, Vec<Vec<i64>>)> {
    let caps = space.g().caps();
    if fl.arity > caps.arity {
        return Err(Error::cap("fiber arity", caps.arity, fl.arity, "raise the arity cap"));
    }
    let fq = FiberQuadratic::new(space, fl);
    let x0: Vec<i64> = if fl.arity == 0 {
        vec![]
    } else {
        fq.center()
            .iter()
            .map(|r| r.round().to_integer().to_i64().unwrap_or(0))
            .collect()
    };
    let bound = fq.eval(&x0);
    let pts = fq.points_below(bound, caps.enumeration)?;
    let best = pts.iter().map(|p| fq.eval(p)).min().unwrap_or(bound);
    let mins: Vec<Vec<i64>> = pts.into_iter().filter(|p| fq.eval(p) == best).collect();
    Ok((best, mins))
}

/// All lattice points achieving the exact minimum of `‖μ+δ_G‖²` on the fiber.
pub fn minimize_over_fiber(space: &SymmetricSpace, fl: &FiberLattice) -> Result<Vec<Candidate>> {
    let (_, mins) = minimizing_coordinates(space, fl)?;
    let mut out: Vec<Candidate> = mins
        .iter()
        .map(|x| Candidate::new(space, &fl.labels_at(x)))
        .collect::<Result<_>>()?;
    out.sort_by(|a, b| a.mu.cmp(&b.mu));
    Ok(out)
}

/// Every fiber point with `‖μ+δ_G‖² ≤ bound`.
pub fn fiber_points_below(space: &SymmetricSpace, fl: &FiberLattice, bound: &Rational) -> Result<Vec<Candidate>> {
    let caps = space.g().caps();
    if fl.arity > caps.arity {
        return Err(Error::cap("fiber arity", caps.arity, fl.arity, "raise the arity cap"));
    }
    let fq = FiberQuadratic::new(space, fl);
    let scaled = (bound * Rational::from_integer(fq.scale().into())).floor().to_integer();
    let scaled = scaled
        .to_i128()
        .ok_or_else(|| Error::inconsistent("fiber_points_below", "bound out of range"))?;
    fq.points_below(scaled, caps.enumeration)?
        .iter()
        .map(|x| Candidate::new(space, &fl.labels_at(x)))
        .collect()
}
