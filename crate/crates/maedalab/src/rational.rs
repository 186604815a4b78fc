//! Small helpers for exact rational arithmetic.
//!
//! Guaranteed computations in this crate never convert through floating
//! point; the conversions here exist only for the flagged float mirrors in
//! CLI output and plots.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact rational over arbitrary-precision integers.
pub type Rational = BigRational;

/// `n/d` as a reduced rational.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// `n` as a rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n!` as a big integer.
pub fn factorial(n: u64) -> BigUint {
    let mut acc = BigUint::one();
    for k in 2..=n {
        acc *= k;
    }
    acc
}

/// Non-guaranteed float mirror of a rational, safe for numerators and
/// denominators far beyond the f64 range.
pub fn ratio_to_f64(r: &Rational) -> f64 {
    let numer = r.numer();
    let denom = r.denom();
    if numer.is_zero() {
        return 0.0;
    }
    let sign = if numer.is_negative() { -1.0 } else { 1.0 };
    let n = numer.abs();
    let d = denom.abs();
    // Keep ~80 high bits of each side and re-apply the scale difference.
    let shift_n = n.bits().saturating_sub(80);
    let shift_d = d.bits().saturating_sub(80);
    let nf = (n >> shift_n).to_f64().unwrap_or(f64::INFINITY);
    let df = (d >> shift_d).to_f64().unwrap_or(f64::INFINITY);
    let exp = shift_n as i64 - shift_d as i64;
    if exp.abs() > 16_000 {
        return if exp > 0 { sign * f64::INFINITY } else { 0.0 };
    }
    sign * (nf / df) * 2f64.powi(exp as i32)
}
