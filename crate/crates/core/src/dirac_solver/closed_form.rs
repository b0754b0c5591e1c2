//! The closed forms tabulated for each family, evaluated as printed.

use crate::lie_core::{q, qi, Rational};
use crate::symmetric_space::{Family, SymmetricSpaceSpec};

/// `(1/32)` for even `m`, `(1/32)(1 − 1/m²)` for odd `m`.
fn parity_term(m: i64) -> Rational {
    if m % 2 == 0 {
        q(1, 32)
    } else {
        q(1, 32) * (qi(1) - q(1, m * m))
    }
}

/// The tabulated value of `λ²`; the exceptional spaces are constants.
pub fn closed_form_reference(spec: &SymmetricSpaceSpec) -> Rational {
    let (m, p, qq) = (spec.m() as i64, spec.p() as i64, spec.q() as i64);
    match spec.family() {
        Family::SuSo => q(1, 12) * qi((m + 1) * (4 * m - 1)) + parity_term(m),
        Family::SuSp => q(1, 12) * qi((m - 1) * (4 * m + 1)) + parity_term(m),
        Family::SoGrassmann => {
            let num = 8 * p * qq * (2 * p + qq + 1) + 4 * p * (p + 1) + 4 * qq * (qq + 1) + 1;
            q(num, 16 * (p + qq))
        }
        Family::E6F4 => q(277, 72),
        Family::E6Sp4 => q(529, 72),
    }
}
