//! Exact rational helpers on top of [`num_rational::BigRational`].

use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Unbounded exact rational, always kept in lowest terms with a positive denominator.
pub type Rational = num_rational::BigRational;

pub fn q(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn qi(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    Rational::from_str(s.trim()).map_err(|_| Error::Validation(format!("not a rational: `{s}`")))
}

/// `Some(n)` when `r` is an integer fitting in `i64`.
pub fn as_i64(r: &Rational) -> Option<i64> {
    if r.is_integer() {
        r.to_integer().to_i64()
    } else {
        None
    }
}

pub fn lcm_of_denominators<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values.into_iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

/// Decimal rendering with `sig` significant digits, rounding half away from zero.
pub fn to_decimal(r: &Rational, sig: usize) -> String {
    if r.is_zero() {
        return "0".to_string();
    }
    let sig = sig.max(1);
    let neg = r.is_negative();
    let x = r.abs();
    let ten = BigInt::from(10);
    // exponent e with 10^e <= x < 10^(e+1)
    let mut e: i64 = 0;
    let mut probe = x.clone();
    while probe >= Rational::from_integer(ten.clone()) {
        probe /= Rational::from_integer(ten.clone());
        e += 1;
    }
    while probe < Rational::one() {
        probe *= Rational::from_integer(ten.clone());
        e -= 1;
    }
    let shift = sig as i64 - 1 - e;
    let scaled = if shift >= 0 {
        x * Rational::from_integer(ten.pow(shift as u32))
    } else {
        x / Rational::from_integer(ten.pow((-shift) as u32))
    };
    let mut digits = round_half_up(&scaled);
    let mut shift = shift;
    if digits >= ten.pow(sig as u32) {
        digits /= &ten;
        shift -= 1;
    }
    let mut s = digits.to_string();
    let out = if shift <= 0 {
        s.push_str(&"0".repeat((-shift) as usize));
        s
    } else {
        let shift = shift as usize;
        if s.len() <= shift {
            s = format!("{}{}", "0".repeat(shift - s.len() + 1), s);
        }
        let (int, frac) = s.split_at(s.len() - shift);
        let frac = frac.trim_end_matches('0');
        if frac.is_empty() {
            int.to_string()
        } else {
            format!("{int}.{frac}")
        }
    };
    if neg {
        format!("-{out}")
    } else {
        out
    }
}

fn round_half_up(x: &Rational) -> BigInt {
    let two = BigInt::from(2);
    let floor = x.floor().to_integer();
    let frac = x - Rational::from_integer(floor.clone());
    if frac * Rational::from_integer(two) >= Rational::one() {
        floor + 1
    } else {
        floor
    }
}
