//! Exact generalized inverses over rings with involution.
//!
//! Matrices live over one of two concrete `*`-rings: [`GaussianRational`]
//! (rational complex numbers, a field) and [`DualGaussian`] (dual numbers
//! `a + b·ε` with `ε² = 0` over the Gaussian rationals, a local ring whose
//! Jacobson radical is the `ε`-ideal). Every computation is exact, so every
//! defining equation is checked by structural equality.
//!
//! The crate is organised bottom-up:
//!
//! * [`scalar`]: the two scalar rings, their text format and involution.
//! * [`matrix`]: dense matrices, adjoint, inversion, rank, full-rank
//!   factorization and exact linear solving.
//! * [`inverses`]: Moore-Penrose, `{i,j,..,l}`, group, core and dual core
//!   inverses together with [`Certificate`]s of their defining equations.
//! * [`oracle`]: independent routes to the same inverses (linear
//!   solvability, full-rank-factorization formulas).
//! * [`sum`]: inverses of a perturbed sum `f = φ + η − ε` with explicit
//!   invertibility witnesses.
//! * [`radical`]: perturbation `a + j` of a core invertible `a` by a
//!   radical element `j`.
//! * [`campaign`]: seeded, deterministic fuzz campaigns that test both
//!   directions of every equivalence against the oracle.
//! * [`json`]: the matrix and report documents used by the `coreinv` tool.
//! * [`cli`]: the `coreinv` command line itself.

pub mod campaign;
pub mod cli;
pub mod error;
pub mod inverses;
pub mod json;
pub mod matrix;
pub mod oracle;
pub mod radical;
pub mod sample;
pub mod scalar;
pub mod sum;

pub use error::{Error, Result};
pub use inverses::{Certificate, EquationCheck, InverseKind};
pub use matrix::{ExactSolve, FullRankFactorization, Matrix, Side};
pub use scalar::{DualGaussian, GaussianRational, Rational, RingKind, Scalar};
