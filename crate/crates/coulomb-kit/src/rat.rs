//! Exact rational scalars. Everything in this crate computes over `Rat`;
//! no floating point appears anywhere in the pipeline.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational number, the sole scalar type of the crate.
pub type Rat = BigRational;

/// Rational from an integer.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Rational p/q. Panics if q = 0.
pub fn ratio(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

pub fn is_integer(x: &Rat) -> bool {
    x.denom().is_one()
}

/// True when x is an even integer.
pub fn is_even_integer(x: &Rat) -> bool {
    is_integer(x) && (x.numer() % 2u8).is_zero()
}

/// Renders a rational as "p" or "p/q" (lowest terms, q > 0).
pub fn format_rat(x: &Rat) -> String {
    if is_integer(x) {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses "p" or "p/q" back into a rational.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        None => s.parse::<BigInt>().ok().map(Rat::from_integer),
        Some((p, q)) => {
            let p = p.trim().parse::<BigInt>().ok()?;
            let q = q.trim().parse::<BigInt>().ok()?;
            if q.is_zero() {
                None
            } else {
                Some(Rat::new(p, q))
            }
        }
    }
}

pub fn abs(x: &Rat) -> Rat {
    x.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn format_and_parse_round_trip() {
        for s in ["0", "7", "-3", "1/2", "-5/4", "22/7"] {
            let x = parse_rat(s).unwrap();
            assert_eq!(format_rat(&x), s);
        }
        assert_eq!(parse_rat("4/2").map(|x| format_rat(&x)).as_deref(), Some("2"));
        assert!(parse_rat("1/0").is_none());
        assert!(parse_rat("x").is_none());
    }

    #[test]
    fn parity_helpers() {
        assert!(is_even_integer(&rat(4)));
        assert!(!is_even_integer(&rat(3)));
        assert!(!is_even_integer(&ratio(1, 2)));
        assert!(is_integer(&ratio(6, 3)));
    }
}
