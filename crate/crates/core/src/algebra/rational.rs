//! Exact rationals. Backed by `num_rational::BigRational`, which keeps
//! values in lowest terms with a positive denominator.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p"` or `"p/q"` (optional sign on `p`).
pub fn parse_rational(text: &str) -> Result<Rational> {
    let err = || Error::Parse {
        pos: 0,
        msg: format!("not a rational number: {text:?}"),
    };
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| err())?;
    let den: BigInt = den.parse().map_err(|_| err())?;
    if den.is_zero() {
        return Err(err());
    }
    Ok(Rational::new(num, den))
}

/// Positive gcd of numerators over lcm of denominators; zero for an empty input.
pub fn content<'a>(values: impl IntoIterator<Item = &'a Rational>) -> Rational {
    let mut num = BigInt::zero();
    let mut den = BigInt::one();
    for v in values {
        num = num.gcd(v.numer());
        den = den.lcm(v.denom());
    }
    if num.is_zero() {
        Rational::zero()
    } else {
        Rational::new(num.abs(), den)
    }
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}
