use num_traits::Zero;

use super::matrix::{determinant, QMatrix};
use super::rational::Rational;
use super::weight::Weight;
use crate::error::{Error, Result};

/// Symmetric positive-definite Gram matrix on an ambient coordinate space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearForm {
    gram: QMatrix,
}

impl BilinearForm {
    /// Validates symmetry and positive definiteness (leading principal minors).
    pub fn new(gram: QMatrix) -> Result<Self> {
        let n = gram.len();
        if gram.iter().any(|row| row.len() != n) {
            return Err(Error::Validation("Gram matrix is not square".into()));
        }
        for i in 0..n {
            for j in 0..i {
                if gram[i][j] != gram[j][i] {
                    return Err(Error::Validation(format!("Gram matrix not symmetric at ({i},{j})")));
                }
            }
        }
        for k in 1..=n {
            let minor: QMatrix = gram[..k].iter().map(|r| r[..k].to_vec()).collect();
            if determinant(&minor) <= Rational::zero() {
                return Err(Error::Validation(format!(
                    "Gram matrix not positive definite (minor {k})"
                )));
            }
        }
        Ok(BilinearForm { gram })
    }

    pub fn identity(n: usize) -> Self {
        BilinearForm {
            gram: super::matrix::identity(n),
        }
    }

    pub fn gram(&self) -> &QMatrix {
        &self.gram
    }

    pub fn dim(&self) -> usize {
        self.gram.len()
    }

    pub fn eval(&self, a: &[Rational], b: &[Rational]) -> Rational {
        let mut acc = Rational::zero();
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if !bj.is_zero() && !self.gram[i][j].is_zero() {
                    acc += ai * &self.gram[i][j] * bj;
                }
            }
        }
        acc
    }

    pub fn norm2(&self, a: &[Rational]) -> Rational {
        self.eval(a, a)
    }

    /// `gram · v`, the covector pairing against `v`.
    pub fn lower(&self, v: &[Rational]) -> Vec<Rational> {
        super::matrix::mul_vec(&self.gram, v)
    }
}

/// `⟨a, b⟩` for two weights in the same basis.
pub fn inner_product(form: &BilinearForm, a: &Weight, b: &Weight) -> Result<Rational> {
    a.check_same_basis(b)?;
    if a.rank() != form.dim() {
        return Err(Error::Validation(format!(
            "weight of rank {} against a form of dimension {}",
            a.rank(),
            form.dim()
        )));
    }
    Ok(form.eval(a.coords(), b.coords()))
}
