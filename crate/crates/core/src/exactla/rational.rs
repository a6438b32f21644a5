//! Rational scalars and their string form.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::ExactError;

/// Exact rational scalar. Always reduced with a positive denominator.
pub type Q = BigRational;

/// `n/d` as a reduced rational. Panics on `d == 0`.
pub fn q(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// The integer `n` as a rational.
pub fn qi(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn zero() -> Q {
    Q::zero()
}

pub fn one() -> Q {
    Q::one()
}

/// Formats as `p/q`, or `p` when the denominator is one.
pub fn fmt_q(x: &Q) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses `p/q` or `p`, tolerating surrounding whitespace.
pub fn parse_q(s: &str) -> Result<Q, ExactError> {
    let t = s.trim();
    let bad = || ExactError::BadRational(s.to_string());
    let (n, d) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Q::new(n, d))
}

/// Bit length of numerator plus denominator, used to rank pivots.
pub fn bit_size(x: &Q) -> u64 {
    x.numer().bits() + x.denom().bits()
}

/// Least common multiple of the denominators of a slice.
pub fn common_denominator<'a>(xs: impl IntoIterator<Item = &'a Q>) -> BigInt {
    let mut l = BigInt::one();
    for x in xs {
        if !x.is_zero() {
            l = num_integer::lcm(l, x.denom().clone());
        }
    }
    l.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn string_forms() {
        assert_eq!(fmt_q(&q(6, -4)), "-3/2");
        assert_eq!(fmt_q(&qi(7)), "7");
        assert_eq!(parse_q(" -3/2 ").unwrap(), q(-3, 2));
        assert_eq!(parse_q("12").unwrap(), qi(12));
        assert!(parse_q("1/0").is_err());
        assert!(parse_q("x").is_err());
    }

    #[test]
    fn reduced_on_construction() {
        let x = q(10, -4);
        assert_eq!(x.numer(), &BigInt::from(-5));
        assert_eq!(x.denom(), &BigInt::from(2));
    }
}
