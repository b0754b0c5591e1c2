//! Family selectors, parameter validation and dimension data.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::lie_core::{q, CartanType, Family as Lie, Rational, SimpleType};

/// The five outer families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// `SU(2m)/SO(2m)`
    SuSo,
    /// `SU(2m)/Sp(m)`
    SuSp,
    /// `SO(2p+2q+2)/SO(2p+1)×SO(2q+1)`
    SoGrassmann,
    /// `E6/F4`
    E6F4,
    /// `E6/Sp(4)`
    E6Sp4,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::SuSo,
        Family::SuSp,
        Family::SoGrassmann,
        Family::E6F4,
        Family::E6Sp4,
    ];

    /// Stable kebab-case identifier.
    pub fn name(self) -> &'static str {
        match self {
            Family::SuSo => "su2m-so2m",
            Family::SuSp => "su2m-sp-m",
            Family::SoGrassmann => "so-grassmann",
            Family::E6F4 => "e6-f4",
            Family::E6Sp4 => "e6-sp4",
        }
    }

    pub fn title(self) -> &'static str {
        match self {
            Family::SuSo => "SU(2m)/SO(2m)",
            Family::SuSp => "SU(2m)/Sp(m)",
            Family::SoGrassmann => "SO(2p+2q+2)/SO(2p+1)×SO(2q+1)",
            Family::E6F4 => "E6/F4",
            Family::E6Sp4 => "E6/Sp(4)",
        }
    }

    pub fn is_parametric(self) -> bool {
        matches!(self, Family::SuSo | Family::SuSp | Family::SoGrassmann)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "su2m-so2m" => Ok(Family::SuSo),
            "su2m-sp-m" | "su2m-sp_m" | "su2m-spm" => Ok(Family::SuSp),
            "so-grassmann" => Ok(Family::SoGrassmann),
            "e6-f4" => Ok(Family::E6F4),
            "e6-sp4" => Ok(Family::E6Sp4),
            other => Err(Error::Validation(format!(
                "unknown space `{other}` (expected one of su2m-so2m, su2m-sp-m, so-grassmann, e6-f4, e6-sp4)"
            ))),
        }
    }
}

/// Dimensions of `𝔤, 𝔨, 𝔭, 𝔱, 𝔱_K, 𝔱_0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct Dims {
    pub g: u64,
    pub k: u64,
    pub p: u64,
    pub t: u64,
    #[serde(rename = "tK")]
    pub t_k: u64,
    pub t0: u64,
}

/// A validated member of one of the five families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SymmetricSpaceSpec {
    family: Family,
    m: u32,
    p: u32,
    q: u32,
}

impl SymmetricSpaceSpec {
    pub fn su_so(m: u32) -> Result<Self> {
        if m < 2 {
            return Err(Error::Validation(format!("su2m-so2m needs m >= 2, got m = {m}")));
        }
        Ok(SymmetricSpaceSpec {
            family: Family::SuSo,
            m,
            p: 0,
            q: 0,
        })
    }

    pub fn su_sp(m: u32) -> Result<Self> {
        if m < 2 {
            return Err(Error::Validation(format!("su2m-sp-m needs m >= 2, got m = {m}")));
        }
        Ok(SymmetricSpaceSpec {
            family: Family::SuSp,
            m,
            p: 0,
            q: 0,
        })
    }

    pub fn so_grassmann(p: u32, q: u32) -> Result<Self> {
        if p > q {
            return Err(Error::Validation(format!(
                "so-grassmann needs p <= q, got p = {p}, q = {q}"
            )));
        }
        if p + q < 1 {
            return Err(Error::Validation("so-grassmann needs p + q >= 1".into()));
        }
        Ok(SymmetricSpaceSpec {
            family: Family::SoGrassmann,
            m: 0,
            p,
            q,
        })
    }

    pub fn e6_f4() -> Self {
        SymmetricSpaceSpec {
            family: Family::E6F4,
            m: 0,
            p: 0,
            q: 0,
        }
    }

    pub fn e6_sp4() -> Self {
        SymmetricSpaceSpec {
            family: Family::E6Sp4,
            m: 0,
            p: 0,
            q: 0,
        }
    }

    /// Builds a spec from optional parameters, rejecting missing or superfluous ones.
    pub fn from_parts(family: Family, m: Option<u32>, p: Option<u32>, q: Option<u32>) -> Result<Self> {
        let missing = |what: &str| Error::Validation(format!("{family} needs --{what}"));
        let extra = |what: &str| Error::Validation(format!("{family} takes no --{what}"));
        match family {
            Family::SuSo | Family::SuSp => {
                if p.is_some() {
                    return Err(extra("p"));
                }
                if q.is_some() {
                    return Err(extra("q"));
                }
                let m = m.ok_or_else(|| missing("m"))?;
                if family == Family::SuSo {
                    Self::su_so(m)
                } else {
                    Self::su_sp(m)
                }
            }
            Family::SoGrassmann => {
                if m.is_some() {
                    return Err(extra("m"));
                }
                Self::so_grassmann(p.ok_or_else(|| missing("p"))?, q.ok_or_else(|| missing("q"))?)
            }
            Family::E6F4 | Family::E6Sp4 => {
                for (v, n) in [(m, "m"), (p, "p"), (q, "q")] {
                    if v.is_some() {
                        return Err(extra(n));
                    }
                }
                Ok(if family == Family::E6F4 {
                    Self::e6_f4()
                } else {
                    Self::e6_sp4()
                })
            }
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// Parameter string such as `m=3` or `p=1,q=2`; empty for the exceptional spaces.
    pub fn params(&self) -> String {
        match self.family {
            Family::SuSo | Family::SuSp => format!("m={}", self.m),
            Family::SoGrassmann => format!("p={},q={}", self.p, self.q),
            _ => String::new(),
        }
    }

    /// Concrete group quotient, e.g. `SU(6)/SO(6)`.
    pub fn title(&self) -> String {
        let (m, p, q) = (self.m, self.p, self.q);
        match self.family {
            Family::SuSo => format!("SU({})/SO({})", 2 * m, 2 * m),
            Family::SuSp => format!("SU({})/Sp({})", 2 * m, m),
            Family::SoGrassmann => format!("SO({})/SO({})×SO({})", 2 * (p + q + 1), 2 * p + 1, 2 * q + 1),
            Family::E6F4 => "E6/F4".into(),
            Family::E6Sp4 => "E6/Sp(4)".into(),
        }
    }

    pub fn dims(&self) -> Dims {
        let (m, p, q) = (self.m as u64, self.p as u64, self.q as u64);
        match self.family {
            Family::SuSo => Dims {
                g: 4 * m * m - 1,
                k: m * (2 * m - 1),
                p: 2 * m * m + m - 1,
                t: 2 * m - 1,
                t_k: m,
                t0: m - 1,
            },
            Family::SuSp => Dims {
                g: 4 * m * m - 1,
                k: m * (2 * m + 1),
                p: 2 * m * m - m - 1,
                t: 2 * m - 1,
                t_k: m,
                t0: m - 1,
            },
            Family::SoGrassmann => {
                let n = p + q + 1;
                Dims {
                    g: n * (2 * n - 1),
                    k: p * (2 * p + 1) + q * (2 * q + 1),
                    p: (2 * p + 1) * (2 * q + 1),
                    t: n,
                    t_k: p + q,
                    t0: 1,
                }
            }
            Family::E6F4 => Dims {
                g: 78,
                k: 52,
                p: 26,
                t: 6,
                t_k: 4,
                t0: 2,
            },
            Family::E6Sp4 => Dims {
                g: 78,
                k: 36,
                p: 42,
                t: 6,
                t_k: 4,
                t0: 2,
            },
        }
    }

    /// Isotropy type: `D_m`, `C_m`, `B_p×B_q`, `F4`, `C4`.
    pub fn expected_k_type(&self) -> CartanType {
        let (m, p, q) = (self.m as usize, self.p as usize, self.q as usize);
        match self.family {
            Family::SuSo => CartanType::simple(Lie::D, m),
            Family::SuSp => CartanType::simple(Lie::C, m),
            Family::SoGrassmann => CartanType::new([SimpleType::new(Lie::B, p), SimpleType::new(Lie::B, q)]),
            Family::E6F4 => CartanType::simple(Lie::F, 4),
            Family::E6Sp4 => CartanType::simple(Lie::C, 4),
        }
    }

    /// Normalization constant of each family's scalar product relative to the Killing
    /// form: `1/(8m)`, `1/(4m)`, `1/(4(p+q))`, `1/24`.
    pub fn stated_normalization(&self) -> Rational {
        match self.family {
            Family::SuSo => q(1, 8 * self.m as i64),
            Family::SuSp => q(1, 4 * self.m as i64),
            Family::SoGrassmann => q(1, 4 * (self.p + self.q) as i64),
            Family::E6F4 | Family::E6Sp4 => q(1, 24),
        }
    }
}

impl fmt::Display for SymmetricSpaceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params = self.params();
        if params.is_empty() {
            write!(f, "{}", self.family)
        } else {
            write!(f, "{}({})", self.family, params)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation_boundaries() {
        assert!(SymmetricSpaceSpec::su_so(1).is_err());
        assert!(SymmetricSpaceSpec::su_sp(1).is_err());
        assert!(SymmetricSpaceSpec::so_grassmann(2, 1).is_err());
        assert!(SymmetricSpaceSpec::so_grassmann(0, 0).is_err());
        assert!(SymmetricSpaceSpec::so_grassmann(0, 1).is_ok());
        assert!(SymmetricSpaceSpec::from_parts(Family::E6F4, Some(2), None, None).is_err());
        assert!(SymmetricSpaceSpec::from_parts(Family::SuSo, None, None, None).is_err());
    }

    #[test]
    fn dimension_identities() {
        let mut specs = vec![SymmetricSpaceSpec::e6_f4(), SymmetricSpaceSpec::e6_sp4()];
        for m in 2..8 {
            specs.push(SymmetricSpaceSpec::su_so(m).unwrap());
            specs.push(SymmetricSpaceSpec::su_sp(m).unwrap());
        }
        for q in 1..6 {
            for p in 0..=q {
                specs.push(SymmetricSpaceSpec::so_grassmann(p, q).unwrap());
            }
        }
        for s in specs {
            let d = s.dims();
            assert_eq!(d.g, d.k + d.p, "{s}");
            assert_eq!(d.t, d.t_k + d.t0, "{s}");
        }
    }

    #[test]
    fn names_round_trip() {
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
        }
        assert_eq!("su2m-sp_m".parse::<Family>().unwrap(), Family::SuSp);
    }
}
