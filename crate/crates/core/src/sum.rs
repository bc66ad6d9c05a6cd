//! Inverses of a perturbed sum `f = φ + η − ε`.
//!
//! Given a `τ`-inverse `φ^τ` of `φ: X → Y` and `η: X → Y` with
//! `1 + φ^τη` invertible, put `α = (1 + φ^τη)⁻¹`, `β = (1 + ηφ^τ)⁻¹` and
//! `ε = (1 − φφ^τ)ηα(1 − φ^τφ)`. Then `f₀ = αφ^τ = φ^τβ` is a
//! `{1,2}`-inverse of `f`, and whether `f` has a core, dual core, group,
//! `{1,2,3}`, `{1,2,4}` or Moore-Penrose inverse is decided by the
//! invertibility of a few factors `1 − γ`, `1 − σ`, ... built from these
//! quantities. Every operation here evaluates the factors, the resulting
//! inverse when it exists, and the algebraic identities tying them to
//! `f` and `f₀`, all exactly.

use serde::Serialize;

use crate::error::{Error, Result, SumRejection};
use crate::inverses::{inverse_of, verify, Certificate, InverseKind};
use crate::matrix::{ExactSolve, Matrix};
use crate::scalar::GaussianRational;

type G = GaussianRational;

/// The derived quantities of a perturbation `φ + η`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SumContext<S> {
    pub tau: InverseKind,
    pub phi: Matrix<S>,
    pub eta: Matrix<S>,
    pub phi_tau: Matrix<S>,
    /// `(1_X + φ^τη)⁻¹`
    pub alpha: Matrix<S>,
    pub alpha_inv: Matrix<S>,
    /// `(1_Y + ηφ^τ)⁻¹`
    pub beta: Matrix<S>,
    pub beta_inv: Matrix<S>,
    pub epsilon: Matrix<S>,
    pub f: Matrix<S>,
    /// `αφ^τ = φ^τβ`
    pub f0: Matrix<S>,
}

/// A factor whose invertibility gates existence. The serialized name is
/// the factor itself, e.g. `"1-gamma"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Factor {
    #[serde(rename = "1-gamma")]
    CoreGamma,
    #[serde(rename = "1-sigma")]
    CoreSigma,
    #[serde(rename = "1-delta")]
    CoreDelta,
    #[serde(rename = "1-rho")]
    Rho,
    #[serde(rename = "1-zeta")]
    Zeta,
    #[serde(rename = "1-xi")]
    Xi,
    #[serde(rename = "1-gamma_group")]
    GroupGamma,
    #[serde(rename = "1-delta_group")]
    GroupDelta,
    #[serde(rename = "1-lambda")]
    Lambda,
    #[serde(rename = "1-mu")]
    Mu,
}

/// The perturbation term `x` of a factor `1 − x` and the inverse of
/// `1 − x` when it exists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorWitness<S> {
    pub factor: Factor,
    pub value: Matrix<S>,
    pub inverse: Option<Matrix<S>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SumResult<S> {
    pub inverse: Matrix<S>,
    pub certificate: Certificate<S>,
    /// Closed-form inverse of each factor, expressed through `f` and its
    /// computed inverse.
    pub closed_forms: Vec<(Factor, Matrix<S>)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SumOutcome<S> {
    pub kind: InverseKind,
    pub witness: Vec<FactorWitness<S>>,
    pub identities: Vec<IdentityCheck>,
    /// `None` when some factor is singular.
    pub result: Option<SumResult<S>>,
}

impl<S> SumOutcome<S> {
    pub fn exists(&self) -> bool {
        self.result.is_some()
    }

    pub fn failing(&self) -> Vec<Factor> {
        self.witness
            .iter()
            .filter(|w| w.inverse.is_none())
            .map(|w| w.factor)
            .collect()
    }

    pub fn factor(&self, factor: Factor) -> Option<&FactorWitness<S>> {
        self.witness.iter().find(|w| w.factor == factor)
    }

    pub fn inverse(&self) -> Option<&Matrix<S>> {
        self.result.as_ref().map(|r| &r.inverse)
    }
}

const CONTEXT_KINDS: [InverseKind; 7] = [
    InverseKind::OneTwo,
    InverseKind::OneTwoThree,
    InverseKind::OneTwoFour,
    InverseKind::MoorePenrose,
    InverseKind::Group,
    InverseKind::Core,
    InverseKind::DualCore,
];

/// Builds the context over the field, computing `φ^τ` itself.
///
/// The `{1,2}`, `{1,2,3}` and `{1,2,4}` classes are represented by the
/// Moore-Penrose inverse; use [`SumContext::with_inverse`] to supply a
/// different member of the class.
pub fn build_context(phi: &Matrix<G>, eta: &Matrix<G>, tau: InverseKind) -> Result<SumContext<G>> {
    if !CONTEXT_KINDS.contains(&tau) {
        return Err(Error::UnsupportedKind(tau));
    }
    if tau.requires_square() && !phi.is_square() {
        return Err(Error::dims(format!("{tau} perturbation needs a square φ")));
    }
    let phi_tau = match inverse_of(phi, tau) {
        Ok(x) => x,
        Err(
            Error::NotGroupInvertible { .. }
            | Error::NotCoreInvertible { .. }
            | Error::NotDualCoreInvertible { .. },
        ) => return Err(Error::Rejected(SumRejection::TauInverseMissing)),
        Err(e) => return Err(e),
    };
    SumContext::with_inverse(phi, eta, tau, &phi_tau)
}

fn require(cond: bool, what: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::contract(what.to_string()))
    }
}

fn check(name: &'static str, holds: bool) -> IdentityCheck {
    IdentityCheck { name, holds }
}

impl<S: ExactSolve> SumContext<S> {
    /// Builds the context around a supplied `τ`-inverse, which is
    /// verified first.
    pub fn with_inverse(
        phi: &Matrix<S>,
        eta: &Matrix<S>,
        tau: InverseKind,
        phi_tau: &Matrix<S>,
    ) -> Result<Self> {
        if !CONTEXT_KINDS.contains(&tau) {
            return Err(Error::UnsupportedKind(tau));
        }
        if phi.shape() != eta.shape() {
            return Err(Error::dims(format!(
                "φ is {}x{} but η is {}x{}",
                phi.rows(),
                phi.cols(),
                eta.rows(),
                eta.cols()
            )));
        }
        if tau.requires_square() && !phi.is_square() {
            return Err(Error::dims(format!("{tau} perturbation needs a square φ")));
        }
        if !verify(tau, phi, phi_tau)?.valid {
            return Err(Error::PreconditionViolated(format!(
                "supplied matrix is not a {tau} inverse of φ"
            )));
        }
        let alpha_inv = (phi_tau * eta).one_plus();
        let alpha = alpha_inv
            .invert()
            .map_err(|_| Error::Rejected(SumRejection::OnePlusPhiTauEtaNotInvertible))?;
        let beta_inv = (eta * phi_tau).one_plus();
        let beta = beta_inv
            .invert()
            .map_err(|_| Error::contract("1 + ηφ^τ singular while 1 + φ^τη is invertible"))?;
        let left = (phi * phi_tau).one_minus();
        let right = (phi_tau * phi).one_minus();
        let epsilon = &(&(&left * eta) * &alpha) * &right;
        let f = &(phi + eta) - &epsilon;
        let f0 = &alpha * phi_tau;
        require(f0 == phi_tau * &beta, "αφ^τ ≠ φ^τβ")?;
        require(&(&f0 * &f) * &f0 == f0, "f₀ff₀ ≠ f₀")?;
        require(&(&f * &f0) * &f == f, "ff₀f ≠ f")?;
        Ok(SumContext {
            tau,
            phi: phi.clone(),
            eta: eta.clone(),
            phi_tau: phi_tau.clone(),
            alpha,
            alpha_inv,
            beta,
            beta_inv,
            epsilon,
            f,
            f0,
        })
    }

    /// `φφ^τ` on `Y`.
    pub fn range_projector(&self) -> Matrix<S> {
        &self.phi * &self.phi_tau
    }

    /// `φ^τφ` on `X`.
    pub fn domain_projector(&self) -> Matrix<S> {
        &self.phi_tau * &self.phi
    }

    fn f0_f(&self) -> Matrix<S> {
        &self.f0 * &self.f
    }

    fn f_f0(&self) -> Matrix<S> {
        &self.f * &self.f0
    }

    /// `α(1 − φ^τφ)β⁻¹φφ^τβ`: the core `γ`, and `ζ` in the dual case.
    pub fn left_idempotent_term(&self) -> Matrix<S> {
        &(&(&(&self.alpha * &self.domain_projector().one_minus()) * &self.beta_inv)
            * &self.range_projector())
            * &self.beta
    }

    /// `αφ^τφα⁻¹(1 − φφ^τ)β`: the core `σ`, and `ρ` in the dual case.
    pub fn right_idempotent_term(&self) -> Matrix<S> {
        &(&(&(&self.alpha * &self.domain_projector()) * &self.alpha_inv)
            * &self.range_projector().one_minus())
            * &self.beta
    }

    /// `α(1 − φ^τφ)η*(φ^τ)*α*`: `λ`, and `ξ` in the dual core case.
    pub fn lambda(&self) -> Matrix<S> {
        &(&(&(&self.alpha * &self.domain_projector().one_minus()) * &self.eta.adjoint())
            * &self.phi_tau.adjoint())
            * &self.alpha.adjoint()
    }

    /// `β*(φ^τ)*η*(1 − φφ^τ)β`: `μ`, and the core `δ`.
    pub fn mu(&self) -> Matrix<S> {
        &(&(&(&self.beta.adjoint() * &self.phi_tau.adjoint()) * &self.eta.adjoint())
            * &self.range_projector().one_minus())
            * &self.beta
    }

    /// `α(1 − φ#φ)ηφ#β`
    pub fn group_gamma(&self) -> Matrix<S> {
        &(&(&(&self.alpha * &self.domain_projector().one_minus()) * &self.eta) * &self.phi_tau)
            * &self.beta
    }

    /// `αφ#η(1 − φφ#)β`
    pub fn group_delta(&self) -> Matrix<S> {
        &(&(&(&self.alpha * &self.phi_tau) * &self.eta) * &self.range_projector().one_minus())
            * &self.beta
    }

    fn witness(&self, factor: Factor, value: Matrix<S>) -> FactorWitness<S> {
        let inverse = value.one_minus().invert().ok();
        FactorWitness {
            factor,
            value,
            inverse,
        }
    }

    fn expect_tau(&self, allowed: &[InverseKind]) -> Result<()> {
        if allowed.contains(&self.tau) {
            Ok(())
        } else {
            Err(Error::UnsupportedKind(self.tau))
        }
    }
}

fn value<S>(witness: &[FactorWitness<S>], factor: Factor) -> &Matrix<S> {
    &witness
        .iter()
        .find(|w| w.factor == factor)
        .expect("factor present")
        .value
}

fn inv<S>(witness: &[FactorWitness<S>], factor: Factor) -> &Matrix<S> {
    witness
        .iter()
        .find(|w| w.factor == factor)
        .and_then(|w| w.inverse.as_ref())
        .expect("factor invertible")
}

fn all_hold(identities: &[IdentityCheck]) -> Result<()> {
    match identities.iter().find(|c| !c.holds) {
        None => Ok(()),
        Some(c) => Err(Error::contract(format!("identity {} fails", c.name))),
    }
}

/// Identities shared by every `τ`: how `f₀f` and `ff₀` factor through
/// `α` and `β`.
fn base_identities<S: ExactSolve>(ctx: &SumContext<S>) -> Vec<IdentityCheck> {
    let f0f = ctx.f0_f();
    let ff0 = ctx.f_f0();
    vec![
        check(
            "1-f0f=alpha(1-phi_tau phi)",
            f0f.one_minus() == &ctx.alpha * &ctx.domain_projector().one_minus(),
        ),
        check(
            "1-ff0=(1-phi phi_tau)beta",
            ff0.one_minus() == &ctx.range_projector().one_minus() * &ctx.beta,
        ),
    ]
}

/// Core-case identities of a witness `(γ, σ, δ)`.
pub fn core_identities<S: ExactSolve>(ctx: &SumContext<S>, witness: &[FactorWitness<S>]) -> Vec<IdentityCheck> {
    let (f, f0) = (&ctx.f, &ctx.f0);
    let f0f = ctx.f0_f();
    let ff0 = ctx.f_f0();
    let gamma = value(witness, Factor::CoreGamma);
    let sigma = value(witness, Factor::CoreSigma);
    let delta = value(witness, Factor::CoreDelta);
    let mut out = base_identities(ctx);
    out.extend([
        check("f gamma=0", (f * gamma).is_zero()),
        check("sigma f=0", (sigma * f).is_zero()),
        check("delta f=0", (delta * f).is_zero()),
        check(
            "f0f=alpha phi_tau phi alpha^-1",
            f0f == &(&ctx.alpha * &ctx.domain_projector()) * &ctx.alpha_inv,
        ),
        check("gamma=(1-f0f)ff0", *gamma == &f0f.one_minus() * &ff0),
        check("sigma=f0f(1-ff0)", *sigma == &f0f * &ff0.one_minus()),
        check("delta=(ff0)*(1-ff0)", *delta == &ff0.adjoint() * &ff0.one_minus()),
        check("f0f^2=(1-gamma)f", &f0f * f == &gamma.one_minus() * f),
        check("f^2f0=f(1-sigma)", &(f * f) * f0 == f * &sigma.one_minus()),
        check(
            "f*ff0=f*(1-delta)",
            &f.adjoint() * &ff0 == &f.adjoint() * &delta.one_minus(),
        ),
    ]);
    out
}

/// Dual-core identities of a witness `(ρ, ζ, ξ)`.
pub fn dual_core_identities<S: ExactSolve>(
    ctx: &SumContext<S>,
    witness: &[FactorWitness<S>],
) -> Vec<IdentityCheck> {
    let f = &ctx.f;
    let f0f = ctx.f0_f();
    let ff0 = ctx.f_f0();
    let rho = value(witness, Factor::Rho);
    let zeta = value(witness, Factor::Zeta);
    let xi = value(witness, Factor::Xi);
    let mut out = base_identities(ctx);
    out.extend([
        check("rho f=0", (rho * f).is_zero()),
        check("f zeta=0", (f * zeta).is_zero()),
        check("f xi=0", (f * xi).is_zero()),
        check("rho=f0f(1-ff0)", *rho == &f0f * &ff0.one_minus()),
        check("zeta=(1-f0f)ff0", *zeta == &f0f.one_minus() * &ff0),
        check("xi=(1-f0f)(f0f)*", *xi == &f0f.one_minus() * &f0f.adjoint()),
    ]);
    out
}

fn closed_form<S: ExactSolve>(
    witness: &[FactorWitness<S>],
    factor: Factor,
    form: Matrix<S>,
) -> Result<(Factor, Matrix<S>)> {
    let one_minus = value(witness, factor).one_minus();
    require(
        (&form * &one_minus).is_identity() && (&one_minus * &form).is_identity(),
        &format!("closed form is not the inverse of {factor:?}"),
    )?;
    Ok((factor, form))
}

/// The closed-form inverses of the factors in `witness`, built from `f`
/// and its computed inverse `fi`; each is checked to be the exact
/// two-sided inverse of its factor.
pub fn closed_form_inverses<S: ExactSolve>(
    ctx: &SumContext<S>,
    witness: &[FactorWitness<S>],
    fi: &Matrix<S>,
) -> Result<Vec<(Factor, Matrix<S>)>> {
    let f = &ctx.f;
    let pp = ctx.range_projector();
    let qq = ctx.domain_projector();
    let fi_f = fi * f;
    let f_fi = f * fi;
    witness
        .iter()
        .map(|w| {
            let form = match w.factor {
                Factor::CoreGamma => &pp.one_minus() + &(&fi_f * &pp),
                Factor::CoreSigma => &pp.one_minus() + &(&pp * &fi_f),
                Factor::CoreDelta | Factor::Mu | Factor::GroupDelta => {
                    &pp.one_minus() + &(&pp * &f_fi)
                }
                Factor::Rho => &qq.one_minus() + &(&qq * &f_fi),
                Factor::Zeta => &qq.one_minus() + &(&f_fi * &qq),
                Factor::Xi | Factor::Lambda | Factor::GroupGamma => {
                    &qq.one_minus() + &(&fi_f * &qq)
                }
            };
            closed_form(witness, w.factor, form)
        })
        .collect()
}

fn finish<S: ExactSolve>(
    ctx: &SumContext<S>,
    kind: InverseKind,
    witness: Vec<FactorWitness<S>>,
    identities: Vec<IdentityCheck>,
    formula: impl FnOnce(&[FactorWitness<S>]) -> Matrix<S>,
) -> Result<SumOutcome<S>> {
    all_hold(&identities)?;
    let result = if witness.iter().all(|w| w.inverse.is_some()) {
        let inverse = formula(&witness);
        let certificate = verify(kind, &ctx.f, &inverse)?;
        require(certificate.valid, &format!("formula result is not a {kind} inverse of f"))?;
        let closed_forms = closed_form_inverses(ctx, &witness, &inverse)?;
        Some(SumResult {
            inverse,
            certificate,
            closed_forms,
        })
    } else {
        None
    };
    Ok(SumOutcome {
        kind,
        witness,
        identities,
        result,
    })
}

/// Core inverse of `f`: exists iff `1 − γ`, `1 − σ`, `1 − δ` are
/// invertible, and then `f^⊕ = (1 − γ)⁻¹αφ^⊕(1 − δ)⁻¹`.
pub fn sum_core_inverse<S: ExactSolve>(ctx: &SumContext<S>) -> Result<SumOutcome<S>> {
    ctx.expect_tau(&[InverseKind::Core])?;
    let witness = vec![
        ctx.witness(Factor::CoreGamma, ctx.left_idempotent_term()),
        ctx.witness(Factor::CoreSigma, ctx.right_idempotent_term()),
        ctx.witness(Factor::CoreDelta, ctx.mu()),
    ];
    let identities = core_identities(ctx, &witness);
    finish(ctx, InverseKind::Core, witness, identities, |w| {
        &(&(inv(w, Factor::CoreGamma) * &ctx.alpha) * &ctx.phi_tau) * inv(w, Factor::CoreDelta)
    })
}

/// Dual core inverse of `f`: exists iff `1 − ρ`, `1 − ζ`, `1 − ξ` are
/// invertible, and then `f_⊕ = (1 − ξ)⁻¹αφ_⊕(1 − ρ)⁻¹`.
pub fn sum_dual_core_inverse<S: ExactSolve>(ctx: &SumContext<S>) -> Result<SumOutcome<S>> {
    ctx.expect_tau(&[InverseKind::DualCore])?;
    let witness = vec![
        ctx.witness(Factor::Rho, ctx.right_idempotent_term()),
        ctx.witness(Factor::Zeta, ctx.left_idempotent_term()),
        ctx.witness(Factor::Xi, ctx.lambda()),
    ];
    let identities = dual_core_identities(ctx, &witness);
    finish(ctx, InverseKind::DualCore, witness, identities, |w| {
        &(&(inv(w, Factor::Xi) * &ctx.alpha) * &ctx.phi_tau) * inv(w, Factor::Rho)
    })
}

/// Group, `{1,2,4}`, `{1,2,3}` or Moore-Penrose inverse of `f`, per the
/// `τ` the context was built with.
pub fn sum_tau_inverse<S: ExactSolve>(ctx: &SumContext<S>) -> Result<SumOutcome<S>> {
    let f0f = ctx.f0_f();
    let ff0 = ctx.f_f0();
    let mut identities = base_identities(ctx);
    let lambda_identity = |lambda: &Matrix<S>| {
        check("lambda=(1-f0f)(f0f)*", *lambda == &f0f.one_minus() * &f0f.adjoint())
    };
    let mu_identity =
        |mu: &Matrix<S>| check("mu=(ff0)*(1-ff0)", *mu == &ff0.adjoint() * &ff0.one_minus());
    match ctx.tau {
        InverseKind::Group => {
            let witness = vec![
                ctx.witness(Factor::GroupGamma, ctx.group_gamma()),
                ctx.witness(Factor::GroupDelta, ctx.group_delta()),
            ];
            let (gamma, delta) = (&witness[0].value, &witness[1].value);
            identities.extend([
                check("f gamma=0", (&ctx.f * gamma).is_zero()),
                check("delta f=0", (delta * &ctx.f).is_zero()),
                check("gamma=(1-f0f)ff0", *gamma == &f0f.one_minus() * &ff0),
                check("delta=f0f(1-ff0)", *delta == &f0f * &ff0.one_minus()),
            ]);
            finish(ctx, InverseKind::Group, witness, identities, |w| {
                &(&(inv(w, Factor::GroupGamma) * &ctx.alpha) * &ctx.phi_tau)
                    * inv(w, Factor::GroupDelta)
            })
        }
        InverseKind::OneTwoFour => {
            let witness = vec![ctx.witness(Factor::Lambda, ctx.lambda())];
            identities.push(lambda_identity(&witness[0].value));
            finish(ctx, InverseKind::OneTwoFour, witness, identities, |w| {
                &(inv(w, Factor::Lambda) * &ctx.alpha) * &ctx.phi_tau
            })
        }
        InverseKind::OneTwoThree => {
            let witness = vec![ctx.witness(Factor::Mu, ctx.mu())];
            identities.push(mu_identity(&witness[0].value));
            finish(ctx, InverseKind::OneTwoThree, witness, identities, |w| {
                &(&ctx.phi_tau * &ctx.beta) * inv(w, Factor::Mu)
            })
        }
        InverseKind::MoorePenrose => {
            let witness = vec![
                ctx.witness(Factor::Lambda, ctx.lambda()),
                ctx.witness(Factor::Mu, ctx.mu()),
            ];
            identities.push(lambda_identity(&witness[0].value));
            identities.push(mu_identity(&witness[1].value));
            finish(ctx, InverseKind::MoorePenrose, witness, identities, |w| {
                &(&(inv(w, Factor::Lambda) * &ctx.alpha) * &ctx.phi_tau) * inv(w, Factor::Mu)
            })
        }
        other => Err(Error::UnsupportedKind(other)),
    }
}

/// Dispatches on the context's `τ`.
pub fn sum_inverse<S: ExactSolve>(ctx: &SumContext<S>) -> Result<SumOutcome<S>> {
    match ctx.tau {
        InverseKind::Core => sum_core_inverse(ctx),
        InverseKind::DualCore => sum_dual_core_inverse(ctx),
        _ => sum_tau_inverse(ctx),
    }
}

/// Core inverse of the idempotent-like product `ff₀`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductCore<S> {
    pub ff0: Matrix<S>,
    /// `ff₀(1 − δ)⁻¹`
    pub core: Matrix<S>,
    /// `β*(1 − φφ^⊕)β`
    pub q: Matrix<S>,
    pub certificate: Certificate<S>,
    pub identities: Vec<IdentityCheck>,
}

/// `(ff₀)^⊕ = ff₀(1 − δ)⁻¹` whenever `1 − δ` is invertible, certified
/// both by the five core equations and by the Hermitian element
/// `q = β*(1 − φφ^⊕)β = 1 − δ − ff₀` with `q·ff₀ = 0`.
pub fn product_core_inverse<S: ExactSolve>(ctx: &SumContext<S>) -> Result<ProductCore<S>> {
    ctx.expect_tau(&[InverseKind::Core])?;
    let delta = ctx.mu();
    let one_minus_delta = delta.one_minus();
    let delta_inv = one_minus_delta.invert()?;
    let ff0 = ctx.f_f0();
    let core = &ff0 * &delta_inv;
    let certificate = verify(InverseKind::Core, &ff0, &core)?;
    require(certificate.valid, "ff₀(1 − δ)⁻¹ is not the core inverse of ff₀")?;
    let q = &(&ctx.beta.adjoint() * &ctx.range_projector().one_minus()) * &ctx.beta;
    let identities = vec![
        check("q=q*", q.is_hermitian()),
        check("q ff0=0", (&q * &ff0).is_zero()),
        check("q+ff0=1-delta", &q + &ff0 == one_minus_delta),
        check(
            "projection route agrees",
            crate::inverses::core_via_projection(&ff0, &q).as_ref() == Ok(&core),
        ),
    ];
    all_hold(&identities)?;
    Ok(ProductCore {
        ff0,
        core,
        q,
        certificate,
        identities,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::inverses::{core_inverse, dual_core_inverse, group_inverse, mp_inverse};
    use crate::matrix::parse_rows;

    type M = Matrix<G>;

    fn diag10() -> M {
        M::from_ints(&[&[1, 0], &[0, 0]])
    }

    fn swap() -> M {
        M::from_ints(&[&[0, 1], &[1, 0]])
    }

    fn quarter() -> M {
        parse_rows(&[&["1/4", "1/4"], &["1/4", "1/4"]]).unwrap()
    }

    #[test]
    fn context_examples() {
        let ctx = build_context(&M::identity(2), &M::unit(2, 0, 1), InverseKind::Core).unwrap();
        assert_eq!(ctx.alpha, M::from_ints(&[&[1, -1], &[0, 1]]));
        assert!(ctx.epsilon.is_zero());
        assert_eq!(ctx.f, M::from_ints(&[&[1, 1], &[0, 1]]));

        let ctx = build_context(&diag10(), &swap(), InverseKind::Core).unwrap();
        assert_eq!(ctx.epsilon, M::from_ints(&[&[0, 0], &[0, -1]]));
        assert_eq!(ctx.f, M::from_ints(&[&[1, 1], &[1, 1]]));

        assert_eq!(
            build_context(&M::identity(2), &-M::identity(2), InverseKind::Core),
            Err(Error::Rejected(SumRejection::OnePlusPhiTauEtaNotInvertible))
        );
        assert_eq!(
            build_context(&M::unit(2, 0, 1), &M::zeros(2, 2), InverseKind::Core),
            Err(Error::Rejected(SumRejection::TauInverseMissing))
        );
        assert!(matches!(
            build_context(&M::zeros(2, 3), &M::zeros(2, 3), InverseKind::Core),
            Err(Error::DimensionMismatch(_))
        ));
        assert_eq!(
            build_context(&diag10(), &swap(), InverseKind::One),
            Err(Error::UnsupportedKind(InverseKind::One))
        );
    }

    #[test]
    fn with_inverse_verifies_candidate() {
        let wrong = M::identity(2);
        assert!(matches!(
            SumContext::with_inverse(&diag10(), &swap(), InverseKind::Core, &wrong),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn core_sum_examples() {
        let ctx = build_context(&M::identity(2), &M::unit(2, 0, 1), InverseKind::Core).unwrap();
        let out = sum_core_inverse(&ctx).unwrap();
        assert_eq!(out.inverse().unwrap(), &M::from_ints(&[&[1, -1], &[0, 1]]));
        assert!(out.witness.iter().all(|w| w.value.is_zero()));
        for (_, form) in &out.result.as_ref().unwrap().closed_forms {
            assert!(form.is_identity());
        }

        let ctx = build_context(&diag10(), &swap(), InverseKind::Core).unwrap();
        let out = sum_core_inverse(&ctx).unwrap();
        assert_eq!(out.inverse().unwrap(), &quarter());
        assert_eq!(out.inverse().unwrap(), &core_inverse(&ctx.f).unwrap());
        assert_eq!(out.result.as_ref().unwrap().closed_forms.len(), 3);

        let ctx = build_context(&M::identity(2), &M::zeros(2, 2), InverseKind::Core).unwrap();
        let out = sum_core_inverse(&ctx).unwrap();
        assert_eq!(out.inverse().unwrap(), &M::identity(2));
        for (_, form) in &out.result.unwrap().closed_forms {
            assert!(form.is_identity());
        }
    }

    #[test]
    fn small_perturbations_agree_with_direct_core() {
        let mut missing = 0;
        for code in 0..81 {
            let digits: Vec<i64> = (0..4).map(|k| (code / 3i64.pow(k)) % 3 - 1).collect();
            let eta = M::from_ints(&[&digits[..2], &digits[2..]]);
            let Ok(ctx) = build_context(&diag10(), &eta, InverseKind::Core) else {
                continue;
            };
            let out = sum_core_inverse(&ctx).unwrap();
            assert_eq!(out.inverse().cloned(), core_inverse(&ctx.f).ok(), "η = {eta}");
            if !out.exists() {
                missing += 1;
                assert!(!out.failing().is_empty());
            }
        }
        assert!(missing > 0);
    }

    #[test]
    fn product_core_examples() {
        let ctx = build_context(&M::identity(2), &M::unit(2, 0, 1), InverseKind::Core).unwrap();
        let pc = product_core_inverse(&ctx).unwrap();
        assert!(pc.ff0.is_identity());
        assert!(pc.core.is_identity());

        let ctx = build_context(&diag10(), &swap(), InverseKind::Core).unwrap();
        let pc = product_core_inverse(&ctx).unwrap();
        assert!(pc.certificate.valid);
        assert!(pc.identities.iter().all(|c| c.holds));

        let ctx = build_context(&diag10(), &M::zeros(2, 2), InverseKind::Core).unwrap();
        let pc = product_core_inverse(&ctx).unwrap();
        assert_eq!(pc.ff0, diag10());
        assert_eq!(pc.core, diag10());
    }

    #[test]
    fn dual_core_sum_examples() {
        let ctx =
            build_context(&M::identity(2), &M::unit(2, 0, 1), InverseKind::DualCore).unwrap();
        let out = sum_dual_core_inverse(&ctx).unwrap();
        assert_eq!(out.inverse().unwrap(), &M::from_ints(&[&[1, -1], &[0, 1]]));

        let ctx = build_context(&diag10(), &swap(), InverseKind::DualCore).unwrap();
        let out = sum_dual_core_inverse(&ctx).unwrap();
        let expected = core_inverse(&ctx.f.adjoint()).unwrap().adjoint();
        assert_eq!(out.inverse().unwrap(), &expected);
        assert_eq!(out.inverse().unwrap(), &dual_core_inverse(&ctx.f).unwrap());

        let ctx =
            build_context(&M::identity(2), &M::zeros(2, 2), InverseKind::DualCore).unwrap();
        assert!(sum_dual_core_inverse(&ctx).unwrap().inverse().unwrap().is_identity());
    }

    #[test]
    fn tau_sum_examples() {
        let ctx = build_context(&diag10(), &swap(), InverseKind::MoorePenrose).unwrap();
        let out = sum_tau_inverse(&ctx).unwrap();
        assert_eq!(out.inverse().unwrap(), &mp_inverse(&ctx.f));

        let ctx = build_context(&M::identity(2), &M::unit(2, 0, 1), InverseKind::Group).unwrap();
        let out = sum_tau_inverse(&ctx).unwrap();
        assert_eq!(out.inverse().unwrap(), &ctx.f.invert().unwrap());
        assert_eq!(out.inverse().unwrap(), &group_inverse(&ctx.f).unwrap());

        let phi = M::from_ints(&[&[1, 0, 0], &[0, 0, 0]]);
        let ctx = build_context(&phi, &M::zeros(2, 3), InverseKind::OneTwoFour).unwrap();
        let out = sum_tau_inverse(&ctx).unwrap();
        assert_eq!(out.inverse().unwrap(), &mp_inverse(&phi));
        assert!(out.witness[0].value.is_zero());
        assert!(ctx.alpha.is_identity());
    }

    #[test]
    fn wrong_tau_is_rejected() {
        let ctx = build_context(&diag10(), &swap(), InverseKind::Core).unwrap();
        assert!(matches!(
            sum_dual_core_inverse(&ctx),
            Err(Error::UnsupportedKind(InverseKind::Core))
        ));
        assert!(matches!(
            sum_tau_inverse(&ctx),
            Err(Error::UnsupportedKind(InverseKind::Core))
        ));
    }
}
