use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::Error;

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

/// Parses `p` or `p/q`. The denominator must be a non-zero run of digits.
pub fn parse_rational(s: &str) -> Result<Rational, Error> {
    let err = |reason| Error::ParseScalar {
        input: s.to_string(),
        reason,
    };
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let digits = num.strip_prefix(['-', '+']).unwrap_or(num);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(err("malformed numerator"));
    }
    let numer: BigInt = num
        .trim_start_matches('+')
        .parse()
        .map_err(|_| err("malformed numerator"))?;
    let denom = match den {
        None => BigInt::from(1),
        Some(d) => {
            if d.is_empty() || !d.bytes().all(|b| b.is_ascii_digit()) {
                return Err(err("malformed denominator"));
            }
            let d: BigInt = d.parse().map_err(|_| err("malformed denominator"))?;
            if d.is_zero() {
                return Err(err("zero denominator"));
            }
            d
        }
    };
    Ok(Rational::new(numer, denom))
}
