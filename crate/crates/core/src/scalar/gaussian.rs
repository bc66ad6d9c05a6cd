use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{forward_binop, parse_rational, Rational, RingKind, Scalar};
use crate::error::Error;

/// A complex number with rational real and imaginary parts.
///
/// Text form is `re`, `imi`, or `re±imi` with the unit coefficient
/// elided (`"i"`, `"-3+i"`, `"3/4-1/2i"`).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GaussianRational {
    re: Rational,
    im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::new(Rational::from_integer(BigInt::from(n)), Rational::zero())
    }

    /// `numer / denom`; panics on a zero denominator.
    pub fn ratio(numer: i64, denom: i64) -> Self {
        Self::new(
            Rational::new(BigInt::from(numer), BigInt::from(denom)),
            Rational::zero(),
        )
    }

    /// `re + im·i` from two integer-ratio pairs.
    pub fn complex(re: (i64, i64), im: (i64, i64)) -> Self {
        Self::new(
            Rational::new(BigInt::from(re.0), BigInt::from(re.1)),
            Rational::new(BigInt::from(im.0), BigInt::from(im.1)),
        )
    }

    pub fn i() -> Self {
        Self::new(Rational::zero(), Rational::one())
    }

    pub fn re(&self) -> &Rational {
        &self.re
    }

    pub fn im(&self) -> &Rational {
        &self.im
    }

    /// `|z|²`
    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }
}

impl From<i64> for GaussianRational {
    fn from(n: i64) -> Self {
        Self::from_integer(n)
    }
}

impl From<Rational> for GaussianRational {
    fn from(r: Rational) -> Self {
        Self::new(r, Rational::zero())
    }
}

impl Zero for GaussianRational {
    fn zero() -> Self {
        Self::new(Rational::zero(), Rational::zero())
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussianRational {
    fn one() -> Self {
        Self::new(Rational::one(), Rational::zero())
    }
}

impl<'a> Add<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl<'a> Sub<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl<'a> Mul<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

forward_binop!(GaussianRational, Add, add);
forward_binop!(GaussianRational, Sub, sub);
forward_binop!(GaussianRational, Mul, mul);

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-self.re, -self.im)
    }
}

impl Scalar for GaussianRational {
    const RING: RingKind = RingKind::GaussianRational;

    fn conj(&self) -> Self {
        Self::new(self.re.clone(), -self.im.clone())
    }

    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sqr();
        Some(Self::new(&self.re / &n, -(&self.im / &n)))
    }

    fn is_unit(&self) -> bool {
        !self.is_zero()
    }
}

fn write_imag(f: &mut fmt::Formatter<'_>, im: &Rational) -> fmt::Result {
    if im.is_one() {
        f.write_str("i")
    } else if (-im).is_one() {
        f.write_str("-i")
    } else {
        write!(f, "{im}i")
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        if !self.re.is_zero() {
            write!(f, "{}", self.re)?;
            if self.im.is_positive() {
                f.write_str("+")?;
            }
        }
        write_imag(f, &self.im)
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for GaussianRational {
    type Err = Error;

    fn from_str(input: &str) -> Result<Self, Error> {
        let s = input.trim();
        if s.is_empty() {
            return Err(Error::ParseScalar {
                input: input.to_string(),
                reason: "empty scalar",
            });
        }
        let Some(body) = s.strip_suffix('i') else {
            return Ok(Self::from(parse_rational(s)?));
        };
        // The imaginary coefficient starts at the last sign that is not the
        // leading one.
        let split = body
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .map(|(k, _)| k)
            .last();
        let (re_text, coef) = match split {
            Some(k) => (Some(&body[..k]), &body[k..]),
            None => (None, body),
        };
        let im = match coef {
            "" | "+" => Rational::one(),
            "-" => -Rational::one(),
            c => parse_rational(c.strip_prefix('+').unwrap_or(c))?,
        };
        let re = match re_text {
            Some(r) => parse_rational(r)?,
            None => Rational::zero(),
        };
        Ok(Self::new(re, im))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gr(s: &str) -> GaussianRational {
        s.parse().unwrap()
    }

    #[test]
    fn field_arithmetic() {
        assert_eq!(gr("1/2") + gr("1/2"), GaussianRational::one());
        assert_eq!(gr("i") * gr("i"), gr("-1"));
        assert_eq!(gr("2").inverse().unwrap(), gr("1/2"));
        assert_eq!(gr("1+i").inverse().unwrap(), gr("1/2-1/2i"));
        assert!(gr("0").inverse().is_none());
    }

    #[test]
    fn conjugation() {
        assert_eq!(gr("3/4+1/2i").conj(), gr("3/4-1/2i"));
        assert_eq!(gr("3/4+1/2i").conj().to_string(), "3/4-1/2i");
    }

    #[test]
    fn text_format() {
        for s in ["2", "1/2i", "-3+i", "3/4-1/2i", "i", "-i", "0", "-7/3", "5-i"] {
            assert_eq!(gr(s).to_string(), s);
        }
        assert_eq!(gr("1/2i"), GaussianRational::complex((0, 1), (1, 2)));
        assert_eq!(gr("-3+i"), GaussianRational::complex((-3, 1), (1, 1)));
        assert_eq!(gr(" 2/4 ").to_string(), "1/2");
        for bad in ["", "1/0", "1/0i", "x", "1+2", "ii", "1/2/3", "--1"] {
            assert!(bad.parse::<GaussianRational>().is_err(), "{bad:?}");
        }
    }
}
