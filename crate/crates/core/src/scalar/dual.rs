use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Zero};

use super::{forward_binop, GaussianRational, RingKind, Scalar};
use crate::error::Error;

/// `const_part + eps_part·ε` with `ε² = 0` and `ε* = ε`.
///
/// Text form: `"<gr>"` when the `ε` part vanishes, `"(<gr>)e"` when the
/// constant part vanishes, `"<gr>+(<gr>)e"` otherwise.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DualGaussian {
    const_part: GaussianRational,
    eps_part: GaussianRational,
}

impl DualGaussian {
    pub fn new(const_part: GaussianRational, eps_part: GaussianRational) -> Self {
        DualGaussian {
            const_part,
            eps_part,
        }
    }

    /// Embeds a field element with zero `ε` part.
    pub fn lift(c: GaussianRational) -> Self {
        Self::new(c, GaussianRational::zero())
    }

    /// `c·ε`
    pub fn eps(c: GaussianRational) -> Self {
        Self::new(GaussianRational::zero(), c)
    }

    pub fn const_part(&self) -> &GaussianRational {
        &self.const_part
    }

    pub fn eps_part(&self) -> &GaussianRational {
        &self.eps_part
    }

    /// Membership in the Jacobson radical `(ε)`.
    pub fn is_radical(&self) -> bool {
        self.const_part.is_zero()
    }
}

impl From<i64> for DualGaussian {
    fn from(n: i64) -> Self {
        Self::lift(GaussianRational::from(n))
    }
}

impl From<GaussianRational> for DualGaussian {
    fn from(c: GaussianRational) -> Self {
        Self::lift(c)
    }
}

impl Zero for DualGaussian {
    fn zero() -> Self {
        Self::new(GaussianRational::zero(), GaussianRational::zero())
    }

    fn is_zero(&self) -> bool {
        self.const_part.is_zero() && self.eps_part.is_zero()
    }
}

impl One for DualGaussian {
    fn one() -> Self {
        Self::lift(GaussianRational::one())
    }
}

impl<'a> Add<&'a DualGaussian> for &'a DualGaussian {
    type Output = DualGaussian;
    fn add(self, rhs: &DualGaussian) -> DualGaussian {
        DualGaussian::new(
            &self.const_part + &rhs.const_part,
            &self.eps_part + &rhs.eps_part,
        )
    }
}

impl<'a> Sub<&'a DualGaussian> for &'a DualGaussian {
    type Output = DualGaussian;
    fn sub(self, rhs: &DualGaussian) -> DualGaussian {
        DualGaussian::new(
            &self.const_part - &rhs.const_part,
            &self.eps_part - &rhs.eps_part,
        )
    }
}

impl<'a> Mul<&'a DualGaussian> for &'a DualGaussian {
    type Output = DualGaussian;
    fn mul(self, rhs: &DualGaussian) -> DualGaussian {
        DualGaussian::new(
            &self.const_part * &rhs.const_part,
            &self.const_part * &rhs.eps_part + &self.eps_part * &rhs.const_part,
        )
    }
}

forward_binop!(DualGaussian, Add, add);
forward_binop!(DualGaussian, Sub, sub);
forward_binop!(DualGaussian, Mul, mul);

impl Neg for DualGaussian {
    type Output = DualGaussian;
    fn neg(self) -> DualGaussian {
        DualGaussian::new(-self.const_part, -self.eps_part)
    }
}

impl Scalar for DualGaussian {
    const RING: RingKind = RingKind::DualGaussian;

    fn conj(&self) -> Self {
        Self::new(self.const_part.conj(), self.eps_part.conj())
    }

    fn inverse(&self) -> Option<Self> {
        let a_inv = self.const_part.inverse()?;
        let eps = -(a_inv.clone() * &self.eps_part * &a_inv);
        Some(Self::new(a_inv, eps))
    }

    fn is_unit(&self) -> bool {
        !self.const_part.is_zero()
    }
}

impl fmt::Display for DualGaussian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.eps_part.is_zero() {
            return write!(f, "{}", self.const_part);
        }
        if !self.const_part.is_zero() {
            write!(f, "{}+", self.const_part)?;
        }
        write!(f, "({})e", self.eps_part)
    }
}

impl fmt::Debug for DualGaussian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for DualGaussian {
    type Err = Error;

    fn from_str(input: &str) -> Result<Self, Error> {
        let s = input.trim();
        let Some(body) = s.strip_suffix(")e") else {
            return Ok(Self::lift(s.parse()?));
        };
        let bad = |reason| Error::ParseScalar {
            input: input.to_string(),
            reason,
        };
        let open = body.rfind('(').ok_or_else(|| bad("unbalanced parenthesis"))?;
        let eps_part: GaussianRational = body[open + 1..].parse()?;
        let prefix = &body[..open];
        let const_part = if prefix.is_empty() {
            GaussianRational::zero()
        } else {
            prefix
                .strip_suffix('+')
                .ok_or_else(|| bad("expected '+' before the ε part"))?
                .parse()?
        };
        Ok(Self::new(const_part, eps_part))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dg(s: &str) -> DualGaussian {
        s.parse().unwrap()
    }

    #[test]
    fn nilpotent_unit() {
        let e = dg("(1)e");
        assert!((e.clone() * &e).is_zero());
        assert_eq!(dg("1+(1)e") * dg("1+(-1)e"), DualGaussian::one());
        assert!(e.inverse().is_none());
        assert!(e.is_radical());
    }

    #[test]
    fn inverse_of_one_plus_three_eps() {
        let x = dg("1+(3)e");
        let inv = x.inverse().unwrap();
        assert_eq!(inv, dg("1+(-3)e"));
        // expansion: (1 + 3ε)(1 − 3ε) = 1 + 3ε − 3ε − 9ε² = 1
        assert_eq!(x * &inv, DualGaussian::one());
    }

    #[test]
    fn involution_fixes_eps() {
        assert_eq!(dg("1+(2i)e").conj(), dg("1+(-2i)e"));
        assert_eq!(dg("(1)e").conj(), dg("(1)e"));
    }

    #[test]
    fn text_format() {
        for s in ["1+(2/3i)e", "(1)e", "3/4", "-i+(1-i)e", "(-1/2)e", "0"] {
            assert_eq!(dg(s).to_string(), s);
        }
        for bad in ["(1e", "1(2)e", "1+(1/0)e", "1+()e", "e"] {
            assert!(bad.parse::<DualGaussian>().is_err(), "{bad:?}");
        }
    }
}
