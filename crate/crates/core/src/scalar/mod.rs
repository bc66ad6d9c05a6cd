//! The two scalar `*`-rings.
//!
//! [`GaussianRational`] is the field `ℚ(i)` with complex conjugation.
//! [`DualGaussian`] is `ℚ(i)[ε]/(ε²)` with the involution applied to both
//! coefficients and `ε* = ε`; it is a local ring and its Jacobson radical
//! is exactly the set of elements with zero constant part.

mod dual;
mod gaussian;
mod rational;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

pub use dual::DualGaussian;
pub use gaussian::GaussianRational;
pub use rational::{parse_rational, Rational};

use crate::error::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RingKind {
    GaussianRational,
    DualGaussian,
}

impl RingKind {
    pub fn as_str(self) -> &'static str {
        match self {
            RingKind::GaussianRational => "gaussian_rational",
            RingKind::DualGaussian => "dual_gaussian",
        }
    }
}

impl fmt::Display for RingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for RingKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "gaussian_rational" | "gaussian" => Ok(RingKind::GaussianRational),
            "dual_gaussian" | "dual" => Ok(RingKind::DualGaussian),
            _ => Err(Error::Document(format!("unknown ring {s:?}"))),
        }
    }
}

/// An exact scalar ring with involution.
///
/// Arithmetic is available both on owned values and with a borrowed
/// right-hand side, so generic code can write `a.clone() * &b`.
pub trait Scalar:
    Clone
    + PartialEq
    + Eq
    + fmt::Debug
    + fmt::Display
    + FromStr<Err = Error>
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    const RING: RingKind;

    /// The involution.
    fn conj(&self) -> Self;

    /// Two-sided multiplicative inverse, if one exists.
    fn inverse(&self) -> Option<Self>;

    fn is_unit(&self) -> bool;

    /// Fallible inverse used where a missing inverse is an error.
    fn try_inverse(&self) -> Result<Self, Error> {
        self.inverse().ok_or(Error::NotInvertible { stage: 0 })
    }
}

macro_rules! forward_binop {
    ($ty:ty, $trait:ident, $method:ident) => {
        impl std::ops::$trait<$ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                std::ops::$trait::$method(&self, &rhs)
            }
        }
        impl<'a> std::ops::$trait<&'a $ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: &'a $ty) -> $ty {
                std::ops::$trait::$method(&self, rhs)
            }
        }
    };
}
pub(crate) use forward_binop;
