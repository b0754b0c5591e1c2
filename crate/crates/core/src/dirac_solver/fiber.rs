//! Integral weights with a prescribed restriction, as an affine lattice in label coordinates.

use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::minimize::FiberForm;
use crate::error::{Error, Result};
use crate::lie_core::labels::Labels;
use crate::lie_core::matrix::{self, QMatrix};
use crate::lie_core::rational::lcm_of_denominators;
use crate::lie_core::{Rational, Weight};
use crate::symmetric_space::SymmetricSpace;

/// `{basepoint + Σ x_i d_i : x ∈ ℤ^arity}` is exactly the set of integral `G`-weights
/// restricting to `lambda`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberLattice {
    pub lambda: Weight,
    pub basepoint: Weight,
    pub displacement_basis: Vec<Weight>,
    pub arity: usize,
    pub(crate) base_labels: Labels,
    pub(crate) displacement_labels: Vec<Labels>,
    pub(crate) form: Arc<FiberForm>,
}

impl FiberLattice {
    /// Labels of `basepoint + Σ x_i d_i`.
    pub fn labels_at(&self, x: &[i64]) -> Labels {
        let mut a = self.base_labels.clone();
        for (xi, d) in x.iter().zip(&self.displacement_labels) {
            for (aj, dj) in a.iter_mut().zip(d) {
                *aj += xi * dj;
            }
        }
        a
    }

    /// The weight `basepoint + Σ x_i d_i`.
    pub fn point(&self, space: &SymmetricSpace, x: &[i64]) -> Weight {
        space.g().weight_from_labels(&self.labels_at(x))
    }
}

/// Column-style Hermite reduction: returns `(H, U)` with `A·U = H`, `U` unimodular, and
/// `H` in column echelon form; `pivots[i]` is the pivot column of row `i`, if any.
type Echelon = (Vec<Vec<BigInt>>, Vec<Vec<BigInt>>, Vec<Option<usize>>);

fn column_echelon(a: &[Vec<BigInt>], cols: usize) -> Echelon {
    let rows = a.len();
    let mut h: Vec<Vec<BigInt>> = a.to_vec();
    let mut u: Vec<Vec<BigInt>> = (0..cols)
        .map(|i| {
            (0..cols)
                .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                .collect()
        })
        .collect();
    let col_op = |m: &mut Vec<Vec<BigInt>>, dst: usize, src: usize, f: &BigInt| {
        for row in m.iter_mut() {
            let t = &row[src] * f;
            row[dst] -= t;
        }
    };
    let swap = |m: &mut Vec<Vec<BigInt>>, i: usize, j: usize| {
        for row in m.iter_mut() {
            row.swap(i, j);
        }
    };
    let mut pivots = vec![None; rows];
    let mut c = 0;
    for i in 0..rows {
        if c >= cols {
            break;
        }
        loop {
            let best = (c..cols).filter(|&j| !h[i][j].is_zero()).min_by_key(|&j| h[i][j].abs());
            let Some(b) = best else { break };
            swap(&mut h, c, b);
            swap(&mut u, c, b);
            let mut done = true;
            for j in c + 1..cols {
                if !h[i][j].is_zero() {
                    let f = h[i][j].div_floor(&h[i][c]);
                    col_op(&mut h, j, c, &f);
                    col_op(&mut u, j, c, &f);
                    if !h[i][j].is_zero() {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if !h[i][c].is_zero() {
            pivots[i] = Some(c);
            c += 1;
        }
    }
    (h, u, pivots)
}

/// Precomputed integer solver for `restriction(μ) = λ` on `G`-labels; the displacement
/// lattice and its quadratic form are shared by every fiber.
#[derive(Clone, Debug)]
pub struct FiberSolver {
    denominator: BigInt,
    h: Vec<Vec<BigInt>>,
    u: Vec<Vec<BigInt>>,
    pivots: Vec<Option<usize>>,
    displacement_labels: Vec<Labels>,
    displacement_basis: Vec<Weight>,
    form: Arc<FiberForm>,
    rank: usize,
}

impl FiberSolver {
    pub fn new(space: &SymmetricSpace) -> Result<Self> {
        let g = space.g();
        let fw: QMatrix = g.fundamental_weights().iter().map(|w| w.coords().to_vec()).collect();
        let m = matrix::mul(space.restriction().matrix(), &matrix::transpose(&fw));
        let rank = g.rank();
        let denominator = lcm_of_denominators(m.iter().flatten());
        let a: Vec<Vec<BigInt>> = m
            .iter()
            .map(|row| {
                row.iter()
                    .map(|r| (r * Rational::from_integer(denominator.clone())).to_integer())
                    .collect()
            })
            .collect();
        let (h, u, pivots) = column_echelon(&a, rank);
        let used: Vec<usize> = pivots.iter().flatten().copied().collect();
        let free: Vec<usize> = (0..rank).filter(|c| !used.contains(c)).collect();
        let disp: Vec<Labels> = free
            .iter()
            .map(|&c| (0..rank).map(|r| to_i64(&u[r][c])).collect::<Result<Labels>>())
            .collect::<Result<_>>()?;
        let disp = size_reduce(space, disp);
        let form = Arc::new(FiberForm::new(space, &disp)?);
        Ok(FiberSolver {
            denominator,
            h,
            u,
            pivots,
            displacement_basis: disp.iter().map(|l| g.weight_from_labels(l)).collect(),
            displacement_labels: disp,
            form,
            rank,
        })
    }

    pub fn arity(&self) -> usize {
        self.displacement_labels.len()
    }

    /// The fiber over `lambda`, or `None` if no integral weight restricts to it.
    pub fn solve(&self, space: &SymmetricSpace, lambda: &Weight) -> Result<Option<FiberLattice>> {
        let k = space.k();
        if lambda.basis() != k.basis() || lambda.rank() != k.ambient_dim() {
            return Err(Error::BasisMismatch {
                left: lambda.basis().to_string(),
                right: k.basis().to_string(),
            });
        }
        let scaled: Vec<Rational> = lambda
            .coords()
            .iter()
            .map(|c| c * Rational::from_integer(self.denominator.clone()))
            .collect();
        if scaled.iter().any(|c| !c.is_integer()) {
            return Ok(None);
        }
        let b: Vec<BigInt> = scaled.iter().map(|c| c.to_integer()).collect();
        let mut y = vec![BigInt::zero(); self.rank];
        for (i, p) in self.pivots.iter().enumerate() {
            let acc: BigInt = (0..self.rank).map(|j| &self.h[i][j] * &y[j]).sum();
            let rest = &b[i] - acc;
            match p {
                Some(c) => {
                    let (qt, r) = rest.div_rem(&self.h[i][*c]);
                    if !r.is_zero() {
                        return Ok(None);
                    }
                    y[*c] = qt;
                }
                None if !rest.is_zero() => return Ok(None),
                None => {}
            }
        }
        let base: Labels = (0..self.rank)
            .map(|r| to_i64(&(0..self.rank).map(|c| &self.u[r][c] * &y[c]).sum::<BigInt>()))
            .collect::<Result<_>>()?;
        Ok(Some(FiberLattice {
            lambda: lambda.clone(),
            basepoint: space.g().weight_from_labels(&base),
            displacement_basis: self.displacement_basis.clone(),
            arity: self.displacement_labels.len(),
            base_labels: base,
            displacement_labels: self.displacement_labels.clone(),
            form: self.form.clone(),
        }))
    }
}

fn to_i64(v: &BigInt) -> Result<i64> {
    v.to_i64()
        .ok_or_else(|| Error::inconsistent("fiber_lattice", "label out of range"))
}

/// Builds the fiber over `lambda` (given in `K` coordinates).
pub fn fiber_lattice(space: &SymmetricSpace, lambda: &Weight) -> Result<FiberLattice> {
    let fl = FiberSolver::new(space)?
        .solve(space, lambda)?
        .ok_or_else(|| Error::NotInImage(lambda.to_string()))?;
    if space.restrict(&fl.basepoint)? != *lambda
        || fl
            .displacement_basis
            .iter()
            .any(|d| !space.restrict(d).map(|r| r.is_zero()).unwrap_or(false))
    {
        return Err(Error::inconsistent(
            "fiber_lattice",
            format!("fiber over {lambda} fails its own check"),
        ));
    }
    Ok(fl)
}

/// Pairwise size reduction of the displacement basis under the `G` form, which keeps the
/// enumeration intervals tight.
fn size_reduce(space: &SymmetricSpace, mut d: Vec<Labels>) -> Vec<Labels> {
    let ls = space.g().label_system();
    loop {
        let mut changed = false;
        d.sort_by_key(|v| ls.inner_scaled(v, v));
        for i in 0..d.len() {
            for j in 0..d.len() {
                if i == j {
                    continue;
                }
                let nij = ls.inner_scaled(&d[i], &d[j]);
                let njj = ls.inner_scaled(&d[j], &d[j]);
                if 2 * nij.abs() <= njj {
                    continue;
                }
                let f = Rational::new(nij.into(), njj.into())
                    .round()
                    .to_integer()
                    .to_i64()
                    .unwrap_or(0);
                let dj = d[j].clone();
                for (a, b) in d[i].iter_mut().zip(&dj) {
                    *a -= f * b;
                }
                changed = true;
            }
        }
        if !changed {
            return d;
        }
    }
}
