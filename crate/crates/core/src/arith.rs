//! Exact integer and rational helpers.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational number with arbitrary-precision numerator and denominator.
pub type Rational = BigRational;

/// Binomial coefficient `C(top, k)`, zero when `k < 0` or `k > top`.
///
/// A negative `top` never arises from an admissible family index, so it is
/// reported as an error instead of being extended to the generalized binomial.
pub fn binomial(top: i64, k: i64) -> Result<BigUint> {
    if top < 0 {
        return Err(Error::NegativeBinomialTop { top });
    }
    if k < 0 || k > top {
        return Ok(BigUint::zero());
    }
    let k = k.min(top - k) as u64;
    let top = top as u64;
    let mut acc = BigUint::one();
    // acc stays equal to C(top - k + i, i) after step i, so the division is exact.
    for i in 1..=k {
        acc *= top - k + i;
        acc /= i;
    }
    Ok(acc)
}

/// Reduced rational `p / q` with a positive denominator.
pub fn rational_reduce(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<Rational> {
    let q = q.into();
    if q.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(Rational::new(p.into(), q))
}

pub(crate) fn ratio(p: i64, q: i64) -> Result<Rational> {
    rational_reduce(p, q)
}

pub(crate) fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub(crate) fn uint(v: BigUint) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Converts an exact rational to a positive integer, or explains why it is not one.
pub(crate) fn positive_integer(value: &Rational, what: impl FnOnce() -> String) -> Result<BigUint> {
    if !value.is_integer() {
        return Err(Error::Consistency(format!("{} is not integral: {}", what(), value)));
    }
    if !value.is_positive() {
        return Err(Error::Consistency(format!("{} is not positive: {}", what(), value)));
    }
    Ok(value
        .to_integer()
        .to_biguint()
        .expect("positive integer fits in BigUint"))
}
