//! The inverse species and their defining equations.
//!
//! For `a: X → Y` and a candidate `x: Y → X` the Penrose equations are
//! `(1) axa = a`, `(2) xax = x`, `(3) (ax)* = ax`, `(4) (xa)* = xa`.
//! The group inverse adds `ax = xa`; the core inverse is characterised by
//! `axa = a, xax = x, (ax)* = ax, ax² = x, xa² = a` and the dual core
//! inverse by the mirrored set.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, GroupSystem, ProjectionReject, Result};
use crate::matrix::{ExactSolve, Matrix, Side};
use crate::scalar::{GaussianRational, Scalar};

type G = GaussianRational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum InverseKind {
    One,
    OneTwo,
    OneThree,
    OneFour,
    OneTwoThree,
    OneTwoFour,
    MoorePenrose,
    Group,
    Core,
    DualCore,
}

impl InverseKind {
    pub const ALL: [InverseKind; 10] = [
        InverseKind::One,
        InverseKind::OneTwo,
        InverseKind::OneThree,
        InverseKind::OneFour,
        InverseKind::OneTwoThree,
        InverseKind::OneTwoFour,
        InverseKind::MoorePenrose,
        InverseKind::Group,
        InverseKind::Core,
        InverseKind::DualCore,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            InverseKind::One => "one",
            InverseKind::OneTwo => "one_two",
            InverseKind::OneThree => "one_three",
            InverseKind::OneFour => "one_four",
            InverseKind::OneTwoThree => "one_two_three",
            InverseKind::OneTwoFour => "one_two_four",
            InverseKind::MoorePenrose => "moore_penrose",
            InverseKind::Group => "group",
            InverseKind::Core => "core",
            InverseKind::DualCore => "dual_core",
        }
    }

    pub fn equations(self) -> &'static [Equation] {
        use Equation::*;
        match self {
            InverseKind::One => &[Penrose1],
            InverseKind::OneTwo => &[Penrose1, Penrose2],
            InverseKind::OneThree => &[Penrose1, Penrose3],
            InverseKind::OneFour => &[Penrose1, Penrose4],
            InverseKind::OneTwoThree => &[Penrose1, Penrose2, Penrose3],
            InverseKind::OneTwoFour => &[Penrose1, Penrose2, Penrose4],
            InverseKind::MoorePenrose => &[Penrose1, Penrose2, Penrose3, Penrose4],
            InverseKind::Group => &[Penrose1, Penrose2, Commute],
            InverseKind::Core => &[Penrose1, Penrose2, Penrose3, CoreRight, CoreLeft],
            InverseKind::DualCore => &[Penrose1, Penrose2, Penrose4, DualLeft, DualRight],
        }
    }

    /// Kinds defined by a subset of the Penrose equations only.
    pub fn is_penrose_subset(self) -> bool {
        !self.requires_square()
    }

    pub fn requires_square(self) -> bool {
        matches!(
            self,
            InverseKind::Group | InverseKind::Core | InverseKind::DualCore
        )
    }
}

impl fmt::Display for InverseKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for InverseKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let alias = match s {
            "mp" | "dagger" => "moore_penrose",
            "dual" => "dual_core",
            other => other,
        };
        InverseKind::ALL
            .into_iter()
            .find(|k| k.as_str() == alias)
            .ok_or_else(|| Error::Document(format!("unknown inverse kind {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Equation {
    /// `axa = a`
    Penrose1,
    /// `xax = x`
    Penrose2,
    /// `(ax)* = ax`
    Penrose3,
    /// `(xa)* = xa`
    Penrose4,
    /// `ax = xa`
    Commute,
    /// `ax² = x`
    CoreRight,
    /// `xa² = a`
    CoreLeft,
    /// `x²a = x`
    DualLeft,
    /// `a²x = a`
    DualRight,
}

impl Equation {
    pub fn id(self) -> &'static str {
        match self {
            Equation::Penrose1 => "1",
            Equation::Penrose2 => "2",
            Equation::Penrose3 => "3",
            Equation::Penrose4 => "4",
            Equation::Commute => "commute",
            Equation::CoreRight => "ax^2=x",
            Equation::CoreLeft => "xa^2=a",
            Equation::DualLeft => "x^2a=x",
            Equation::DualRight => "a^2x=a",
        }
    }

    /// Evaluates the equation exactly. Shapes must already be compatible.
    pub fn holds<S: Scalar>(self, a: &Matrix<S>, x: &Matrix<S>) -> bool {
        match self {
            Equation::Penrose1 => &(a * x) * a == *a,
            Equation::Penrose2 => &(x * a) * x == *x,
            Equation::Penrose3 => (a * x).is_hermitian(),
            Equation::Penrose4 => (x * a).is_hermitian(),
            Equation::Commute => a * x == x * a,
            Equation::CoreRight => &(a * x) * x == *x,
            Equation::CoreLeft => &(x * a) * a == *a,
            Equation::DualLeft => &(x * x) * a == *x,
            Equation::DualRight => &(a * a) * x == *a,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EquationCheck {
    pub id: &'static str,
    pub holds: bool,
}

/// Exact evaluation of every defining equation of `kind` for a candidate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate<S> {
    pub kind: InverseKind,
    pub valid: bool,
    pub equations: Vec<EquationCheck>,
    #[serde(skip)]
    pub candidate: Matrix<S>,
}

/// Checks `x` against the equations of `kind`; never computes an inverse.
pub fn verify<S: Scalar>(kind: InverseKind, a: &Matrix<S>, x: &Matrix<S>) -> Result<Certificate<S>> {
    if x.shape() != (a.cols(), a.rows()) {
        return Err(Error::dims(format!(
            "candidate {}x{} for a {}x{} matrix",
            x.rows(),
            x.cols(),
            a.rows(),
            a.cols()
        )));
    }
    if kind.requires_square() && !a.is_square() {
        return Err(Error::dims(format!("{kind} inverse of a non-square matrix")));
    }
    let equations: Vec<EquationCheck> = kind
        .equations()
        .iter()
        .map(|&e| EquationCheck {
            id: e.id(),
            holds: e.holds(a, x),
        })
        .collect();
    Ok(Certificate {
        kind,
        valid: equations.iter().all(|e| e.holds),
        equations,
        candidate: x.clone(),
    })
}

/// Moore-Penrose inverse `G*(F*AG*)⁻¹F*` from a full-rank factorization.
pub fn mp_inverse(a: &Matrix<G>) -> Matrix<G> {
    let Ok(frf) = a.full_rank_factorize() else {
        return Matrix::zeros(a.cols(), a.rows());
    };
    let (fa, ga) = (frf.f.adjoint(), frf.g.adjoint());
    let middle = (&(&fa * a) * &ga)
        .invert()
        .expect("F*AG* = (F*F)(GG*) is invertible for a full-rank factorization");
    &(&ga * &middle) * &fa
}

/// `{i,j,..,l}`-inverse for the Penrose-subset kinds; the Moore-Penrose
/// inverse serves every such class.
pub fn ijl_inverse(a: &Matrix<G>, kind: InverseKind) -> Result<Matrix<G>> {
    if !kind.is_penrose_subset() {
        return Err(Error::UnsupportedKind(kind));
    }
    Ok(mp_inverse(a))
}

/// Group inverse `y·a·x` from solutions of `a²x = a` and `ya² = a`.
///
/// Works over any [`ExactSolve`] ring. Over a field it exists iff
/// `rank(a²) = rank(a)`.
pub fn group_inverse<S: ExactSolve>(a: &Matrix<S>) -> Result<Matrix<S>> {
    let (x, y) = group_witnesses(a)?;
    Ok(&(&y * a) * &x)
}

/// Solutions `(x, y)` of `a²x = a` and `ya² = a`.
pub fn group_witnesses<S: ExactSolve>(a: &Matrix<S>) -> Result<(Matrix<S>, Matrix<S>)> {
    if !a.is_square() {
        return Err(Error::dims("group inverse of a non-square matrix"));
    }
    let a2 = a.square();
    let unsolvable = |system| move |e: Error| match e {
        Error::NoSolution { .. } => Error::NotGroupInvertible { system },
        other => other,
    };
    let x = a2.solve(a, Side::Right).map_err(unsolvable(GroupSystem::Right))?;
    let y = a2.solve(a, Side::Left).map_err(unsolvable(GroupSystem::Left))?;
    Ok((x, y))
}

fn rename_group_error(e: Error, dual: bool) -> Error {
    match e {
        Error::NotGroupInvertible { system } if dual => Error::NotDualCoreInvertible { system },
        Error::NotGroupInvertible { system } => Error::NotCoreInvertible { system },
        other => other,
    }
}

/// Core inverse `a#·a·a†`.
pub fn core_inverse(a: &Matrix<G>) -> Result<Matrix<G>> {
    let group = group_inverse(a).map_err(|e| rename_group_error(e, false))?;
    Ok(&(&group * a) * &mp_inverse(a))
}

/// Dual core inverse `a†·a·a#`.
pub fn dual_core_inverse(a: &Matrix<G>) -> Result<Matrix<G>> {
    let group = group_inverse(a).map_err(|e| rename_group_error(e, true))?;
    Ok(&(&mp_inverse(a) * a) * &group)
}

/// Any inverse species over the field.
pub fn inverse_of(a: &Matrix<G>, kind: InverseKind) -> Result<Matrix<G>> {
    match kind {
        InverseKind::Group => group_inverse(a),
        InverseKind::Core => core_inverse(a),
        InverseKind::DualCore => dual_core_inverse(a),
        other => ijl_inverse(a, other),
    }
}

/// Core inverse `u⁻¹au⁻¹` from a Hermitian `p` with `pa = 0` and
/// `u = a + p` invertible; the result is cross-checked against
/// `(u*u)⁻¹a*`.
pub fn core_via_projection<S: ExactSolve>(a: &Matrix<S>, p: &Matrix<S>) -> Result<Matrix<S>> {
    if !a.is_square() || p.shape() != a.shape() {
        return Err(Error::dims("projection route needs square a and p of equal size"));
    }
    if !p.is_hermitian() {
        return Err(Error::Reject(ProjectionReject::NotHermitian));
    }
    if !(p * a).is_zero() {
        return Err(Error::Reject(ProjectionReject::PaNotZero));
    }
    let u = a + p;
    let u_inv = u
        .invert()
        .map_err(|_| Error::Reject(ProjectionReject::UNotInvertible))?;
    let via_u = &(&u_inv * a) * &u_inv;
    let via_gram = &(&u.adjoint() * &u)
        .invert()
        .map_err(|_| Error::contract("u*u not invertible although u is"))?
        * &a.adjoint();
    if via_u != via_gram {
        return Err(Error::contract("u⁻¹au⁻¹ differs from (u*u)⁻¹a*"));
    }
    Ok(via_u)
}
