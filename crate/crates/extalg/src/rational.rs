//! Exact rational scalars and binomial coefficients.
//!
//! Coefficients are arbitrary-precision rationals (`num_rational::BigRational`),
//! always stored in lowest terms with a positive denominator. Generic-basis
//! entries blow up quickly under elimination, so no fixed-width type appears
//! anywhere in the arithmetic substrate.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Rational from an integer.
pub fn rat_int(p: i64) -> Rational {
    Rational::from_integer(BigInt::from(p))
}

/// Rational p/q. Panics if q = 0.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Binomial coefficient C(n, k) as a big integer; 0 when k > n.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    num_integer::binomial(BigInt::from(n), BigInt::from(k))
}

/// Binomial coefficient as a rational, for dimensional fractions.
pub fn binomial_rat(n: usize, k: usize) -> Rational {
    Rational::from_integer(binomial(n, k))
}

/// Binomial coefficient as usize; only valid at desk scale.
pub fn binomial_usize(n: usize, k: usize) -> usize {
    use num_traits::ToPrimitive;
    binomial(n, k).to_usize().expect("binomial exceeds usize")
}

/// Canonical "p/q" rendering with q > 0 and gcd(p, q) = 1, even when q = 1.
pub fn format_rational(x: &Rational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Parse "p/q" or a bare integer "p".
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((p, q)) => (p, q),
        None => (s, "1"),
    };
    let p: BigInt = num
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational numerator in {s:?}")))?;
    let q: BigInt = den
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational denominator in {s:?}")))?;
    if q.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(p, q))
}

/// True when x is a nonnegative integer-valued rational.
pub fn is_nonneg(x: &Rational) -> bool {
    !x.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial_usize(4, 2), 6);
        assert_eq!(binomial_usize(5, 0), 1);
        assert_eq!(binomial_usize(3, 5), 0);
        assert_eq!(binomial_usize(14, 7), 3432);
    }

    #[test]
    fn format_always_has_denominator() {
        assert_eq!(format_rational(&rat_int(4)), "4/1");
        assert_eq!(format_rational(&rat(25, 12)), "25/12");
        assert_eq!(format_rational(&rat(-2, 4)), "-1/2");
        assert_eq!(format_rational(&rat(0, 7)), "0/1");
    }

    #[test]
    fn parse_round_trip() {
        for s in ["4/1", "25/12", "-1/2", "0/1"] {
            let x = parse_rational(s).unwrap();
            assert_eq!(format_rational(&x), s);
        }
        assert_eq!(parse_rational("7").unwrap(), rat_int(7));
        assert_eq!(parse_rational("6/4").unwrap(), rat(3, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x/2").is_err());
    }
}
