use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::Arc;

use num_traits::Zero;

use super::rational::Rational;
use crate::error::{Error, Result};

/// Identifier of an ambient coordinate system, e.g. `"su(6)/bracket"`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisTag(Arc<str>);

impl BasisTag {
    pub fn new(name: impl AsRef<str>) -> Self {
        BasisTag(Arc::from(name.as_ref()))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for BasisTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Exact coordinate vector tagged with the basis it is expressed in.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Weight {
    basis: BasisTag,
    coords: Vec<Rational>,
}

impl Weight {
    pub fn new(basis: BasisTag, coords: Vec<Rational>) -> Self {
        Weight { basis, coords }
    }

    pub fn from_ints(basis: BasisTag, coords: &[i64]) -> Self {
        Weight::new(basis, coords.iter().map(|&c| super::rational::qi(c)).collect())
    }

    pub fn zero(basis: BasisTag, rank: usize) -> Self {
        Weight::new(basis, vec![Rational::zero(); rank])
    }

    pub fn basis(&self) -> &BasisTag {
        &self.basis
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn check_same_basis(&self, other: &Weight) -> Result<()> {
        if self.basis != other.basis || self.rank() != other.rank() {
            return Err(Error::BasisMismatch {
                left: format!("{}[{}]", self.basis, self.rank()),
                right: format!("{}[{}]", other.basis, other.rank()),
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Weight) -> Result<Weight> {
        self.check_same_basis(other)?;
        Ok(self.zip(other, |a, b| a + b))
    }

    pub fn try_sub(&self, other: &Weight) -> Result<Weight> {
        self.check_same_basis(other)?;
        Ok(self.zip(other, |a, b| a - b))
    }

    pub fn scale(&self, c: &Rational) -> Weight {
        Weight::new(self.basis.clone(), self.coords.iter().map(|x| x * c).collect())
    }

    /// Same coordinates, relabelled basis. Used only where two tags name the same space.
    pub fn retag(&self, basis: BasisTag) -> Weight {
        Weight::new(basis, self.coords.clone())
    }

    fn zip(&self, other: &Weight, f: impl Fn(&Rational, &Rational) -> Rational) -> Weight {
        Weight::new(
            self.basis.clone(),
            self.coords.iter().zip(&other.coords).map(|(a, b)| f(a, b)).collect(),
        )
    }

    /// Coordinates rendered as strings such as `"7/3"`.
    pub fn coord_strings(&self) -> Vec<String> {
        self.coords.iter().map(|c| c.to_string()).collect()
    }
}

impl PartialOrd for Weight {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Weight {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.basis
            .cmp(&other.basis)
            .then_with(|| self.coords.cmp(&other.coords))
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

// Operator forms panic on a basis mismatch; use `try_add`/`try_sub` at API boundaries.
impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        self.try_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        self.try_sub(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight::new(self.basis.clone(), self.coords.iter().map(|c| -c).collect())
    }
}
