//! Perturbing a core (dual core) invertible `a` by a radical element `j`.
//!
//! Over `M_n(DualGaussian)` the Jacobson radical is the set of matrices
//! with zero constant part. For such `j`, `a + j` is core invertible
//! exactly when `ε = (1 − aa^⊕)j(1 + a^⊕j)⁻¹(1 − a^⊕a)` vanishes; the dual
//! core case replaces `a^⊕` with `a_⊕`. When `ε = 0` the inverse is
//! computed by the closed formula and compared with the linear-system
//! oracle and a Hermitian-projection construction. When `ε ≠ 0` the oracle
//! must independently find no inverse.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::inverses::{core_inverse, core_via_projection, dual_core_inverse, verify, Certificate, InverseKind};
use crate::matrix::Matrix;
use crate::oracle::{oracle_core, oracle_dual_core, oracle_existence, ExistenceReport};
use crate::scalar::DualGaussian;
use crate::sum::{Factor, FactorWitness, SumContext};

type D = DualGaussian;
type M = Matrix<D>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Variant {
    Core,
    Dual,
}

impl Variant {
    pub fn kind(self) -> InverseKind {
        match self {
            Variant::Core => InverseKind::Core,
            Variant::Dual => InverseKind::DualCore,
        }
    }
}

impl std::str::FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "core" => Ok(Variant::Core),
            "dual" | "dual_core" => Ok(Variant::Dual),
            _ => Err(Error::PreconditionViolated(format!("unknown variant {s:?}"))),
        }
    }
}

/// True iff every entry of `j` has zero constant part.
pub fn radical_check(j: &M) -> bool {
    j.is_radical()
}

/// The core (or dual core) inverse of `a`, or `None` if there is none.
///
/// A matrix with no `ε` part gets the field inverse lifted, provided the
/// defining equations still hold after embedding; everything else goes
/// through the linear-system oracle.
pub fn lifted_inverse(a: &M, variant: Variant) -> Result<Option<M>> {
    if !a.is_square() {
        return Err(Error::dims("core inverses need a square matrix"));
    }
    if a.eps_part().is_zero() {
        let field = match variant {
            Variant::Core => core_inverse(&a.const_part()),
            Variant::Dual => dual_core_inverse(&a.const_part()),
        };
        if let Ok(x) = field {
            let x = Matrix::lift(&x);
            if verify(variant.kind(), a, &x)?.valid {
                return Ok(Some(x));
            }
        }
    }
    match variant {
        Variant::Core => oracle_core(a),
        Variant::Dual => oracle_dual_core(a),
    }
}

/// `(1 − aa')j(1 + a'j)⁻¹(1 − a'a)` for the core or dual core inverse `a'`.
pub fn epsilon_criterion(a: &M, a_inv: &M, j: &M, variant: Variant) -> Result<M> {
    check_preconditions(a, a_inv, j, variant)?;
    Ok(epsilon_of(a, a_inv, j))
}

fn epsilon_of(a: &M, a_inv: &M, j: &M) -> M {
    let w = (a_inv * j)
        .one_plus()
        .invert()
        .expect("1 + a'j is a unit for radical j");
    &(&(&(a * a_inv).one_minus() * j) * &w) * &(a_inv * a).one_minus()
}

fn check_preconditions(a: &M, a_inv: &M, j: &M, variant: Variant) -> Result<()> {
    if a.shape() != j.shape() || !a.is_square() {
        return Err(Error::dims("a and j must be square of equal size"));
    }
    if !radical_check(j) {
        return Err(Error::PreconditionViolated("j is not in the radical".into()));
    }
    if !verify(variant.kind(), a, a_inv)?.valid {
        return Err(Error::PreconditionViolated(format!(
            "supplied matrix is not the {} inverse of a",
            variant.kind()
        )));
    }
    Ok(())
}

/// All quantities of a radical perturbation `a + j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RadicalPerturbation {
    pub variant: Variant,
    pub a: M,
    /// `a^⊕` or `a_⊕`
    pub a_inv: M,
    pub j: M,
    pub epsilon: M,
    /// `γ`, `δ` for the core variant; `ρ`, `ξ` for the dual one.
    pub factors: Vec<FactorWitness<D>>,
}

impl RadicalPerturbation {
    pub fn new(a: &M, a_inv: &M, j: &M, variant: Variant) -> Result<Self> {
        check_preconditions(a, a_inv, j, variant)?;
        let one_plus_aj = (a_inv * j).one_plus();
        let w_left = one_plus_aj
            .invert()
            .map_err(|_| Error::contract("1 + a'j not invertible for radical j"))?;
        let one_plus_ja = (j * a_inv).one_plus();
        let w_right = one_plus_ja
            .invert()
            .map_err(|_| Error::contract("1 + ja' not invertible for radical j"))?;
        let epsilon = epsilon_of(a, a_inv, j);
        if !epsilon.is_radical() {
            return Err(Error::contract("ε left the radical"));
        }
        let p_range = a * a_inv;
        let p_domain = a_inv * a;
        let (first, second) = match variant {
            Variant::Core => {
                let gamma = &(&(&(&w_left * &p_domain.one_minus()) * &one_plus_ja) * &p_range)
                    * &w_right;
                let delta = &(&(&(&w_right.adjoint() * &a_inv.adjoint()) * &j.adjoint())
                    * &p_range.one_minus())
                    * &w_right;
                ((Factor::CoreGamma, gamma), (Factor::CoreDelta, delta))
            }
            Variant::Dual => {
                let rho = &(&(&(&w_left * &p_domain) * &one_plus_aj) * &p_range.one_minus())
                    * &w_right;
                let xi = &(&(&(&w_left * &p_domain.one_minus()) * &j.adjoint())
                    * &a_inv.adjoint())
                    * &w_left.adjoint();
                ((Factor::Rho, rho), (Factor::Xi, xi))
            }
        };
        // the same quantities written for a general perturbation φ + η
        let ctx = SumContext::with_inverse(a, j, variant.kind(), a_inv)?;
        let (general_first, general_second) = match variant {
            Variant::Core => (ctx.left_idempotent_term(), ctx.mu()),
            Variant::Dual => (ctx.right_idempotent_term(), ctx.lambda()),
        };
        if general_first != first.1 || general_second != second.1 {
            return Err(Error::contract(
                "radical factors differ from the general perturbation factors",
            ));
        }
        if ctx.epsilon != epsilon {
            return Err(Error::contract("radical ε differs from the general ε"));
        }
        let factors = [first, second]
            .into_iter()
            .map(|(factor, value)| {
                let inverse = value.one_minus().invert().ok();
                FactorWitness {
                    factor,
                    value,
                    inverse,
                }
            })
            .collect();
        Ok(RadicalPerturbation {
            variant,
            a: a.clone(),
            a_inv: a_inv.clone(),
            j: j.clone(),
            epsilon,
            factors,
        })
    }

    /// Builds the perturbation, computing `a`'s inverse first.
    pub fn from_pair(a: &M, j: &M, variant: Variant) -> Result<Self> {
        let a_inv = lifted_inverse(a, variant)?.ok_or_else(|| {
            Error::PreconditionViolated(format!("a has no {} inverse", variant.kind()))
        })?;
        Self::new(a, &a_inv, j, variant)
    }

    pub fn epsilon_is_zero(&self) -> bool {
        self.epsilon.is_zero()
    }

    pub fn sum(&self) -> M {
        &self.a + &self.j
    }

    fn factor_inverse(&self, factor: Factor) -> Result<&M> {
        self.factors
            .iter()
            .find(|w| w.factor == factor)
            .and_then(|w| w.inverse.as_ref())
            .ok_or_else(|| Error::contract(format!("{factor:?} is singular although ε = 0")))
    }

    /// The closed formula for the inverse of `a + j`; only meaningful when
    /// `ε = 0`.
    fn formula(&self) -> Result<M> {
        let w_left = (&self.a_inv * &self.j).one_plus().invert()?;
        let core = &w_left * &self.a_inv;
        Ok(match self.variant {
            Variant::Core => {
                &(self.factor_inverse(Factor::CoreGamma)? * &core)
                    * self.factor_inverse(Factor::CoreDelta)?
            }
            Variant::Dual => {
                &(self.factor_inverse(Factor::Xi)? * &core) * self.factor_inverse(Factor::Rho)?
            }
        })
    }
}

/// `q = [(1 + ja^⊕)⁻¹]*(1 − aa^⊕)(1 + ja^⊕)⁻¹` and `u = a + j + q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Projection {
    pub q: M,
    pub u: M,
}

/// The Hermitian element certifying core invertibility of `a + j` when
/// `ε = 0`.
pub fn projection_construction(a: &M, a_core: &M, j: &M) -> Result<Projection> {
    let epsilon = epsilon_criterion(a, a_core, j, Variant::Core)?;
    if !epsilon.is_zero() {
        return Err(Error::PreconditionViolated("ε ≠ 0".into()));
    }
    let w = (j * a_core)
        .one_plus()
        .invert()
        .map_err(|_| Error::contract("1 + ja^⊕ not invertible for radical j"))?;
    let q = &(&w.adjoint() * &(a * a_core).one_minus()) * &w;
    let b = a + j;
    let u = &b + &q;
    if !q.is_hermitian() {
        return Err(Error::contract("q is not Hermitian"));
    }
    if !(&q * &b).is_zero() {
        return Err(Error::contract("q(a + j) ≠ 0"));
    }
    if u.invert().is_err() {
        return Err(Error::contract("a + j + q is not invertible"));
    }
    Ok(Projection { q, u })
}

/// Inverse of `a + j` as produced by each independent route.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RadicalResult {
    pub inverse: M,
    pub certificate: Certificate<D>,
    /// `a^⊕ = a#·a·a^(1,3)` (or its dual) from linear-system witnesses.
    pub oracle: M,
    /// Core variant: the Hermitian-projection route. Dual variant: the
    /// adjoint of the core route applied to `(a*, j*)`.
    pub third_route: M,
    pub projection: Option<Projection>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RadicalOutcome {
    pub perturbation: RadicalPerturbation,
    pub existence: ExistenceReport<D>,
    /// `None` exactly when `ε ≠ 0`, with the oracle agreeing.
    pub result: Option<RadicalResult>,
}

impl RadicalOutcome {
    pub fn exists(&self) -> bool {
        self.result.is_some()
    }

    pub fn inverse(&self) -> Option<&M> {
        self.result.as_ref().map(|r| &r.inverse)
    }
}

/// Evaluates the criterion and, when it holds, the inverse of `a + j`
/// along three routes. Every disagreement with the oracle is a
/// [`Error::ContractViolation`].
pub fn perturbed_inverse(p: &RadicalPerturbation) -> Result<RadicalOutcome> {
    let b = p.sum();
    let existence = oracle_existence(&b)?;
    let oracle_exists = match p.variant {
        Variant::Core => existence.core_exists,
        Variant::Dual => existence.dual_core_exists,
    };
    if oracle_exists != p.epsilon_is_zero() {
        return Err(Error::contract(format!(
            "criterion says {} but the oracle says {}",
            p.epsilon_is_zero(),
            oracle_exists
        )));
    }
    if !oracle_exists {
        return Ok(RadicalOutcome {
            perturbation: p.clone(),
            existence,
            result: None,
        });
    }
    let kind = p.variant.kind();
    let inverse = p.formula()?;
    let certificate = verify(kind, &b, &inverse)?;
    if !certificate.valid {
        return Err(Error::contract(format!("formula result is not a {kind} inverse of a + j")));
    }
    let oracle = match p.variant {
        Variant::Core => oracle_core(&b)?,
        Variant::Dual => oracle_dual_core(&b)?,
    }
    .ok_or_else(|| Error::contract("oracle flags disagree with oracle inverse"))?;
    let (third_route, projection) = match p.variant {
        Variant::Core => {
            let proj = projection_construction(&p.a, &p.a_inv, &p.j)?;
            (core_via_projection(&b, &proj.q)?, Some(proj))
        }
        Variant::Dual => {
            let mirror = RadicalPerturbation::from_pair(&p.a.adjoint(), &p.j.adjoint(), Variant::Core)?;
            let mirrored = perturbed_inverse(&mirror)?
                .result
                .ok_or_else(|| Error::contract("adjoint pair has no core inverse"))?;
            (mirrored.inverse.adjoint(), None)
        }
    };
    if oracle != inverse || third_route != inverse {
        return Err(Error::contract("routes to the inverse of a + j disagree"));
    }
    Ok(RadicalOutcome {
        perturbation: p.clone(),
        existence,
        result: Some(RadicalResult {
            inverse,
            certificate,
            oracle,
            third_route,
            projection,
        }),
    })
}

pub fn perturbed_core_inverse(p: &RadicalPerturbation) -> Result<RadicalOutcome> {
    if p.variant != Variant::Core {
        return Err(Error::UnsupportedKind(p.variant.kind()));
    }
    perturbed_inverse(p)
}

pub fn perturbed_dual_core_inverse(p: &RadicalPerturbation) -> Result<RadicalOutcome> {
    if p.variant != Variant::Dual {
        return Err(Error::UnsupportedKind(p.variant.kind()));
    }
    perturbed_inverse(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::GaussianRational;

    type G = GaussianRational;

    fn lift(rows: &[&[i64]]) -> M {
        Matrix::lift(&Matrix::<G>::from_ints(rows))
    }

    fn eps_unit(i: usize, j: usize) -> M {
        Matrix::eps(&Matrix::<G>::unit(2, i, j))
    }

    fn diag10() -> M {
        lift(&[&[1, 0], &[0, 0]])
    }

    #[test]
    fn radical_membership() {
        assert!(radical_check(&eps_unit(1, 1)));
        assert!(!radical_check(&lift(&[&[0, 1], &[0, 0]])));
        assert!(radical_check(&M::zeros(2, 2)));
    }

    #[test]
    fn criterion_examples() {
        let a = diag10();
        assert_eq!(epsilon_criterion(&a, &a, &eps_unit(1, 1), Variant::Core).unwrap(), eps_unit(1, 1));
        assert!(epsilon_criterion(&a, &a, &eps_unit(0, 1), Variant::Core).unwrap().is_zero());
        let i = M::identity(2);
        let j = Matrix::eps(&Matrix::<G>::from_ints(&[&[1, 2], &[-3, 1]]));
        assert!(epsilon_criterion(&i, &i, &j, Variant::Core).unwrap().is_zero());
        assert!(matches!(
            epsilon_criterion(&a, &a, &lift(&[&[0, 1], &[0, 0]]), Variant::Core),
            Err(Error::PreconditionViolated(_))
        ));
        assert!(matches!(
            epsilon_criterion(&a, &M::identity(2), &eps_unit(0, 1), Variant::Core),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn core_examples() {
        let p = RadicalPerturbation::from_pair(&diag10(), &eps_unit(0, 1), Variant::Core).unwrap();
        let out = perturbed_core_inverse(&p).unwrap();
        assert_eq!(out.inverse().unwrap(), &diag10());
        assert!(p.factors.iter().all(|w| w.value.is_zero()));

        let p = RadicalPerturbation::from_pair(&diag10(), &eps_unit(1, 1), Variant::Core).unwrap();
        let out = perturbed_core_inverse(&p).unwrap();
        assert!(!out.exists());
        assert!(!out.existence.core_exists);

        let p = RadicalPerturbation::from_pair(&M::identity(2), &eps_unit(0, 1), Variant::Core)
            .unwrap();
        let out = perturbed_core_inverse(&p).unwrap();
        assert_eq!(out.inverse().unwrap(), &(&M::identity(2) - &eps_unit(0, 1)));
    }

    #[test]
    fn dual_examples() {
        let i = M::identity(2);
        let p = RadicalPerturbation::from_pair(&i, &eps_unit(1, 0), Variant::Dual).unwrap();
        let out = perturbed_dual_core_inverse(&p).unwrap();
        assert_eq!(out.inverse().unwrap(), &(&i - &eps_unit(1, 0)));

        let p = RadicalPerturbation::from_pair(&diag10(), &eps_unit(1, 0), Variant::Dual).unwrap();
        let out = perturbed_dual_core_inverse(&p).unwrap();
        assert_eq!(out.inverse().unwrap(), &diag10());
        let mirror =
            RadicalPerturbation::from_pair(&diag10().adjoint(), &eps_unit(0, 1), Variant::Core)
                .unwrap();
        let mirrored = perturbed_core_inverse(&mirror).unwrap();
        assert_eq!(out.inverse().unwrap(), &mirrored.inverse().unwrap().adjoint());

        let p = RadicalPerturbation::from_pair(&diag10(), &eps_unit(1, 1), Variant::Dual).unwrap();
        assert!(!perturbed_dual_core_inverse(&p).unwrap().exists());
    }

    #[test]
    fn projection_examples() {
        let proj = projection_construction(&diag10(), &diag10(), &eps_unit(0, 1)).unwrap();
        assert_eq!(proj.q, lift(&[&[0, 0], &[0, 1]]));

        let i = M::identity(2);
        let proj = projection_construction(&i, &i, &M::zeros(2, 2)).unwrap();
        assert!(proj.q.is_zero());
        assert!(proj.u.is_identity());

        let a = lift(&[&[1, 1], &[0, 0]]);
        let a_core = lifted_inverse(&a, Variant::Core).unwrap().unwrap();
        assert_eq!(a_core, diag10());
        let j = eps_unit(0, 0);
        let proj = projection_construction(&a, &a_core, &j).unwrap();
        assert!((&proj.q * &(&a + &j)).is_zero());
        assert!(proj.q.is_hermitian());
    }

    #[test]
    fn variant_mismatch() {
        let p = RadicalPerturbation::from_pair(&diag10(), &eps_unit(0, 1), Variant::Core).unwrap();
        assert!(matches!(perturbed_dual_core_inverse(&p), Err(Error::UnsupportedKind(_))));
        assert!(matches!(
            RadicalPerturbation::from_pair(&lift(&[&[0, 1], &[0, 0]]), &eps_unit(0, 1), Variant::Core),
            Err(Error::PreconditionViolated(_))
        ));
    }
}
