//! Seeded campaigns that test both directions of each existence criterion
//! against the independent oracle.
//!
//! Trial `i` draws from its own ChaCha stream (`seed`, stream `i`), so a
//! trial's inputs depend only on the seed and its index. Trials run in
//! parallel and are collected in index order, which keeps the report
//! byte-identical across runs and thread counts.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::inverses::{inverse_of, mp_inverse, InverseKind};
use crate::json::MatrixDoc;
use crate::matrix::Matrix;
use crate::oracle::{group_frf, one_four_witness, one_three_witness, oracle_core, oracle_dual_core, oracle_group, oracle_mp_frf};
use crate::radical::{lifted_inverse, perturbed_inverse, RadicalPerturbation, Variant};
use crate::sample::{random_index_one, random_low_rank, random_matrix, random_unitary, ScalarSampler};
use crate::scalar::{DualGaussian, GaussianRational, RingKind, Scalar};
use num_traits::Zero;
use crate::sum::{build_context, product_core_inverse, sum_core_inverse, sum_inverse, Factor, ProductCore, SumContext, SumOutcome};

type G = GaussianRational;

/// Which existence criterion a campaign exercises.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Theorem {
    /// Core inverse of `φ + η − ε`.
    #[serde(rename = "thm2_1")]
    CoreSum,
    /// Dual core inverse of `φ + η − ε`.
    #[serde(rename = "thm2_3")]
    DualCoreSum,
    #[serde(rename = "prop_i")]
    GroupSum,
    #[serde(rename = "prop_ii")]
    OneTwoFourSum,
    #[serde(rename = "prop_iii")]
    OneTwoThreeSum,
    #[serde(rename = "prop_iv")]
    MoorePenroseSum,
    /// Core inverse of `a + j` with `j` radical.
    #[serde(rename = "thm3_1")]
    RadicalCore,
    #[serde(rename = "thm3_2")]
    RadicalDualCore,
}

impl Theorem {
    pub const ALL: [Theorem; 8] = [
        Theorem::CoreSum,
        Theorem::DualCoreSum,
        Theorem::GroupSum,
        Theorem::OneTwoFourSum,
        Theorem::OneTwoThreeSum,
        Theorem::MoorePenroseSum,
        Theorem::RadicalCore,
        Theorem::RadicalDualCore,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Theorem::CoreSum => "thm2_1",
            Theorem::DualCoreSum => "thm2_3",
            Theorem::GroupSum => "prop_i",
            Theorem::OneTwoFourSum => "prop_ii",
            Theorem::OneTwoThreeSum => "prop_iii",
            Theorem::MoorePenroseSum => "prop_iv",
            Theorem::RadicalCore => "thm3_1",
            Theorem::RadicalDualCore => "thm3_2",
        }
    }

    pub fn kind(self) -> InverseKind {
        match self {
            Theorem::CoreSum | Theorem::RadicalCore => InverseKind::Core,
            Theorem::DualCoreSum | Theorem::RadicalDualCore => InverseKind::DualCore,
            Theorem::GroupSum => InverseKind::Group,
            Theorem::OneTwoFourSum => InverseKind::OneTwoFour,
            Theorem::OneTwoThreeSum => InverseKind::OneTwoThree,
            Theorem::MoorePenroseSum => InverseKind::MoorePenrose,
        }
    }

    pub fn ring(self) -> RingKind {
        match self {
            Theorem::RadicalCore | Theorem::RadicalDualCore => RingKind::DualGaussian,
            _ => RingKind::GaussianRational,
        }
    }

    pub fn rectangular(self) -> bool {
        matches!(
            self,
            Theorem::OneTwoFourSum | Theorem::OneTwoThreeSum | Theorem::MoorePenroseSum
        )
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.to_ascii_lowercase();
        Theorem::ALL
            .into_iter()
            .find(|t| t.as_str() == lower)
            .ok_or_else(|| Error::Document(format!("unknown theorem {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CampaignConfig {
    pub seed: u64,
    pub trials: usize,
    /// Inclusive range of matrix sizes.
    pub dims: (usize, usize),
    pub ring: RingKind,
    pub theorem: Theorem,
    /// Share of trials (in percent) that force rank-deficient inputs and
    /// structured perturbations.
    pub forced_percent: u32,
    /// Corrupts every oracle answer, so each trial must be reported as a
    /// violation. Exists to exercise the violation path end to end.
    pub inject_fault: bool,
}

impl CampaignConfig {
    pub fn new(theorem: Theorem, seed: u64, trials: usize) -> Self {
        CampaignConfig {
            seed,
            trials,
            dims: (2, 3),
            ring: theorem.ring(),
            theorem,
            forced_percent: 30,
            inject_fault: false,
        }
    }

    pub fn with_dims(mut self, min: usize, max: usize) -> Self {
        self.dims = (min, max);
        self
    }

    pub fn validate(&self) -> Result<()> {
        let (lo, hi) = self.dims;
        if lo == 0 || lo > hi || hi > 8 {
            return Err(Error::dims(format!("dims {lo}..{hi} must satisfy 1 ≤ min ≤ max ≤ 8")));
        }
        if self.ring != self.theorem.ring() {
            return Err(Error::UnsupportedRing {
                op: self.theorem.as_str(),
                ring: self.ring,
            });
        }
        if self.forced_percent > 100 {
            return Err(Error::PreconditionViolated("forced percent above 100".into()));
        }
        Ok(())
    }
}

/// Parses `"2..3"`, `"2..=3"` or `"3"`.
pub fn parse_dims(s: &str) -> Result<(usize, usize)> {
    let bad = || Error::Document(format!("bad dims {s:?}"));
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
    match s.split_once("..") {
        Some((a, b)) => Ok((num(a)?, num(b.strip_prefix('=').unwrap_or(b))?)),
        None => {
            let n = num(s)?;
            Ok((n, n))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Sampler {
    Random,
    LowRank,
    Sparse,
    ForcedPositive,
    ForcedNegative,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    ExistsAgree,
    NotExistsAgree,
    ContractViolation,
}

#[derive(Debug, Clone, Serialize)]
#[serde(untagged)]
pub enum Inputs {
    Sum { phi: MatrixDoc, eta: MatrixDoc },
    Radical { a: MatrixDoc, j: MatrixDoc },
}

#[derive(Debug, Clone, Serialize)]
pub struct TrialRecord {
    pub trial: usize,
    pub shape: (usize, usize),
    pub sampler: Sampler,
    pub resamples: usize,
    pub inputs: Inputs,
    pub verdict: Verdict,
    pub formula_exists: Option<bool>,
    pub oracle_exists: Option<bool>,
    pub failing: Vec<Factor>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub epsilon_is_zero: Option<bool>,
    /// Exact equalities confirmed in this trial.
    pub checks: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Summary {
    pub theorem: Theorem,
    pub ring: RingKind,
    pub seed: u64,
    pub trials: usize,
    pub dims: (usize, usize),
    pub exists_agree: usize,
    pub not_exists_agree: usize,
    pub contract_violations: usize,
    pub resamples: usize,
    pub checks: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub epsilon_zero: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub epsilon_zero_rate: Option<f64>,
}

#[derive(Debug, Clone)]
pub struct CampaignReport {
    pub trials: Vec<TrialRecord>,
    pub summary: Summary,
}

impl CampaignReport {
    /// One JSON object per trial, then `{"summary": ...}`.
    pub fn to_jsonl(&self) -> String {
        let mut out = String::new();
        for t in &self.trials {
            out.push_str(&serde_json::to_string(t).expect("trial records serialize"));
            out.push('\n');
        }
        let summary = serde_json::json!({ "summary": self.summary });
        out.push_str(&summary.to_string());
        out.push('\n');
        out
    }
}

pub fn run_campaign(config: &CampaignConfig) -> Result<CampaignReport> {
    config.validate()?;
    let trials: Vec<TrialRecord> = (0..config.trials)
        .into_par_iter()
        .map(|i| run_trial(config, i))
        .collect();
    let count = |v: Verdict| trials.iter().filter(|t| t.verdict == v).count();
    let radical = config.ring == RingKind::DualGaussian;
    let epsilon_zero = radical.then(|| {
        trials
            .iter()
            .filter(|t| t.epsilon_is_zero == Some(true))
            .count()
    });
    let summary = Summary {
        theorem: config.theorem,
        ring: config.ring,
        seed: config.seed,
        trials: config.trials,
        dims: config.dims,
        exists_agree: count(Verdict::ExistsAgree),
        not_exists_agree: count(Verdict::NotExistsAgree),
        contract_violations: count(Verdict::ContractViolation),
        resamples: trials.iter().map(|t| t.resamples).sum(),
        checks: trials.iter().map(|t| t.checks).sum(),
        epsilon_zero,
        epsilon_zero_rate: epsilon_zero
            .filter(|_| config.trials > 0)
            .map(|k| k as f64 / config.trials as f64),
    };
    Ok(CampaignReport { trials, summary })
}

/// The oracle's view of whether `f` has an inverse of `kind` and, for
/// the species that are unique, its value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleAnswer {
    pub exists: bool,
    pub value: Option<Matrix<G>>,
}

pub fn oracle_answer(f: &Matrix<G>, kind: InverseKind) -> Result<OracleAnswer> {
    let unique = |value: Option<Matrix<G>>| OracleAnswer {
        exists: value.is_some(),
        value,
    };
    Ok(match kind {
        InverseKind::Core => unique(oracle_core(f)?),
        InverseKind::DualCore => unique(oracle_dual_core(f)?),
        InverseKind::Group => {
            let by_systems = oracle_group(f)?;
            let by_factors = if f.is_zero() {
                Some(f.clone())
            } else {
                group_frf(f)
            };
            if by_systems != by_factors {
                return Err(Error::contract("group inverse routes of the oracle disagree"));
            }
            unique(by_systems)
        }
        InverseKind::MoorePenrose => unique(Some(oracle_mp_frf(f))),
        InverseKind::OneTwoThree => OracleAnswer {
            exists: one_three_witness(f)?.is_some(),
            value: None,
        },
        InverseKind::OneTwoFour => OracleAnswer {
            exists: one_four_witness(f)?.is_some(),
            value: None,
        },
        other => return Err(Error::UnsupportedKind(other)),
    })
}

/// A perturbation run cross-checked against the oracle.
#[derive(Debug, Clone)]
pub struct SumCheck {
    pub outcome: SumOutcome<G>,
    pub oracle: OracleAnswer,
    pub product_core: Option<ProductCore<G>>,
    pub checks: usize,
}

fn corrupt(mut answer: OracleAnswer) -> OracleAnswer {
    match answer.value.as_mut() {
        Some(v) if v.rows() > 0 && v.cols() > 0 => {
            let bumped = v.get(0, 0) + &G::from_integer(1);
            v.set(0, 0, bumped);
        }
        _ => answer.exists = !answer.exists,
    }
    answer
}

/// Runs the formula for `ctx` and compares existence and value with the
/// oracle; the dual core case is also compared with the core formula
/// applied to `(φ*, η*)`. Any disagreement is a contract violation.
pub fn check_sum(ctx: &SumContext<G>, inject_fault: bool) -> Result<SumCheck> {
    let outcome = sum_inverse(ctx)?;
    let mut checks = outcome.identities.len();
    if let Some(r) = &outcome.result {
        checks += r.closed_forms.len() + r.certificate.equations.len();
    }
    let mut oracle = oracle_answer(&ctx.f, ctx.tau)?;
    if inject_fault {
        oracle = corrupt(oracle);
    }
    if oracle.exists != outcome.exists() {
        return Err(Error::contract(format!(
            "formula says {} inverse exists: {}, oracle says {}",
            ctx.tau,
            outcome.exists(),
            oracle.exists
        )));
    }
    if let (Some(expected), Some(found)) = (&oracle.value, outcome.inverse()) {
        if expected != found {
            return Err(Error::contract(format!("formula {} inverse differs from the oracle", ctx.tau)));
        }
        checks += 1;
    }
    if ctx.tau == InverseKind::DualCore {
        let mirror = build_context(&ctx.phi.adjoint(), &ctx.eta.adjoint(), InverseKind::Core)?;
        let mirrored = sum_core_inverse(&mirror)?;
        if mirrored.inverse().map(Matrix::adjoint).as_ref() != outcome.inverse() {
            return Err(Error::contract("dual core formula disagrees with the adjoint core formula"));
        }
        checks += 1;
    }
    let product_core = match outcome.factor(Factor::CoreDelta) {
        Some(w) if w.inverse.is_some() => {
            let pc = product_core_inverse(ctx)?;
            checks += pc.identities.len() + 1;
            Some(pc)
        }
        _ => None,
    };
    // a {1}-inverse of φ + η is also one of ε
    let t = mp_inverse(&(&ctx.phi + &ctx.eta));
    if &(&ctx.epsilon * &t) * &ctx.epsilon != ctx.epsilon {
        return Err(Error::contract("(φ + η)† is not a {1}-inverse of ε"));
    }
    checks += 1;
    Ok(SumCheck {
        outcome,
        oracle,
        product_core,
        checks,
    })
}

const MAX_RESAMPLES: usize = 1000;

fn trial_rng(config: &CampaignConfig, index: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    rng.set_stream(index as u64);
    rng
}

fn run_trial(config: &CampaignConfig, index: usize) -> TrialRecord {
    let mut rng = trial_rng(config, index);
    if config.ring == RingKind::DualGaussian {
        radical_trial(config, index, &mut rng)
    } else {
        sum_trial(config, index, &mut rng)
    }
}

fn violation(record: &mut TrialRecord, e: Error) {
    record.verdict = Verdict::ContractViolation;
    record.detail = Some(e.to_string());
}

/// Sparse matrix with entries in `{-1, 0, 1}`.
fn sparse<R: Rng>(rng: &mut R, rows: usize, cols: usize) -> Matrix<G> {
    Matrix::from_fn(rows, cols, |_, _| G::from_integer(rng.random_range(-1..=1)))
}

/// A `τ`-inverse of `φ`, occasionally a non-Moore-Penrose member of the
/// `{1,2,3}` or `{1,2,4}` class.
fn tau_inverse<R: Rng>(rng: &mut R, phi: &Matrix<G>, kind: InverseKind) -> Result<Matrix<G>> {
    let mp = mp_inverse(phi);
    let (m, n) = phi.shape();
    let shifted = rng.random_bool(0.5);
    Ok(match kind {
        InverseKind::OneTwoThree if shifted => {
            let z = random_matrix::<G, _>(rng, n, m);
            &mp + &(&(&(&mp * phi).one_minus() * &z) * &(phi * &mp))
        }
        InverseKind::OneTwoFour if shifted => {
            let z = random_matrix::<G, _>(rng, n, m);
            &mp + &(&(&(&mp * phi) * &z) * &(phi * &mp).one_minus())
        }
        other => inverse_of(phi, other)?,
    })
}

/// Nonzero rational drawn from the scalar distribution.
fn nonzero<R: Rng>(rng: &mut R) -> G {
    loop {
        let x = G::sample(rng);
        if !x.is_zero() {
            return x;
        }
    }
}

/// A pair whose perturbed `f` has no group, core or dual core inverse.
///
/// The 2×2 block `φ₀ = diag(λ, 0)`, `η₀ = [[a, b], [c, d]]` gives the rank
/// one `f₀ = [λ + a; c]·[λ + a, b]/(λ + a)`, which is square-zero exactly
/// when `(λ + a)² + bc = 0`. It is placed next to a random index-one block
/// and the whole pair is conjugated by a random unitary, which every
/// quantity involved follows.
fn forced_negative<R: Rng>(rng: &mut R, n: usize) -> (Matrix<G>, Matrix<G>) {
    let lambda = nonzero(rng);
    let shifted = nonzero(rng);
    let a = &shifted - &lambda;
    let b = nonzero(rng);
    let c = -(&(&shifted * &shifted) * &b.inverse().expect("nonzero"));
    let d = G::sample(rng);
    let rest = n - 2;
    let tail_rank = rng.random_range(0..=rest);
    let phi_tail = random_index_one(rng, rest, tail_rank);
    let eta_tail: Matrix<G> = random_matrix(rng, rest, rest);
    let mut phi = Matrix::zeros(n, n);
    let mut eta = Matrix::zeros(n, n);
    phi.set(0, 0, lambda);
    for (i, j, x) in [(0, 0, a), (0, 1, b), (1, 0, c), (1, 1, d)] {
        eta.set(i, j, x);
    }
    for i in 0..rest {
        for j in 0..rest {
            phi.set(i + 2, j + 2, phi_tail.get(i, j).clone());
            eta.set(i + 2, j + 2, eta_tail.get(i, j).clone());
        }
    }
    let u = random_unitary(rng, n);
    let conj = |m: &Matrix<G>| &(&u * m) * &u.adjoint();
    (conj(&phi), conj(&eta))
}

fn sample_sum<R: Rng>(
    rng: &mut R,
    theorem: Theorem,
    (m, n): (usize, usize),
    forced: bool,
) -> (Matrix<G>, Matrix<G>, Sampler) {
    if forced && !theorem.rectangular() && n >= 2 && rng.random_bool(0.5) {
        let (phi, eta) = forced_negative(rng, n);
        return (phi, eta, Sampler::ForcedNegative);
    }
    let full = m.min(n);
    let rank = if forced && full > 1 {
        rng.random_range(1..full)
    } else {
        rng.random_range(0..=full)
    };
    let phi = if theorem.rectangular() {
        random_low_rank(rng, m, n, rank)
    } else {
        random_index_one(rng, n, rank)
    };
    let sampler = if forced {
        Sampler::Sparse
    } else if rng.random_bool(0.5) {
        Sampler::LowRank
    } else {
        Sampler::Random
    };
    let eta = match sampler {
        Sampler::Sparse => sparse(rng, m, n),
        Sampler::LowRank => {
            let k = rng.random_range(1..=full);
            random_low_rank(rng, m, n, k)
        }
        _ => random_matrix(rng, m, n),
    };
    (phi, eta, sampler)
}

fn sum_trial(config: &CampaignConfig, index: usize, rng: &mut ChaCha8Rng) -> TrialRecord {
    let theorem = config.theorem;
    let kind = theorem.kind();
    let (lo, hi) = config.dims;
    let n = rng.random_range(lo..=hi);
    let m = if theorem.rectangular() {
        rng.random_range(lo..=hi)
    } else {
        n
    };
    let forced = rng.random_range(0..100) < config.forced_percent;
    let mut resamples = 0;
    loop {
        let (phi, eta, sampler) = sample_sum(rng, theorem, (m, n), forced);
        let mut record = TrialRecord {
            trial: index,
            shape: (m, n),
            sampler,
            resamples,
            inputs: Inputs::Sum {
                phi: MatrixDoc::from_matrix(&phi),
                eta: MatrixDoc::from_matrix(&eta),
            },
            verdict: Verdict::ContractViolation,
            formula_exists: None,
            oracle_exists: None,
            failing: Vec::new(),
            epsilon_is_zero: None,
            checks: 0,
            detail: None,
        };
        let ctx = tau_inverse(rng, &phi, kind)
            .and_then(|phi_tau| SumContext::with_inverse(&phi, &eta, kind, &phi_tau));
        let ctx = match ctx {
            Ok(ctx) => ctx,
            Err(Error::Rejected(_)) if resamples < MAX_RESAMPLES => {
                resamples += 1;
                continue;
            }
            Err(e) => {
                violation(&mut record, e);
                return record;
            }
        };
        match check_sum(&ctx, config.inject_fault) {
            Ok(check) => {
                let exists = check.outcome.exists();
                record.formula_exists = Some(exists);
                record.oracle_exists = Some(check.oracle.exists);
                record.failing = check.outcome.failing();
                record.checks = check.checks;
                record.verdict = if exists {
                    Verdict::ExistsAgree
                } else {
                    Verdict::NotExistsAgree
                };
            }
            Err(e) => violation(&mut record, e),
        }
        return record;
    }
}

/// Radical `εJ` for which the criterion holds: `J` with
/// `(1 − aa')J(1 − a'a) = 0`.
fn positive_radical<R: Rng>(rng: &mut R, a: &Matrix<G>, a_inv: &Matrix<G>) -> Matrix<G> {
    let n = a.rows();
    let k: Matrix<G> = random_matrix(rng, n, n);
    let left = (a * a_inv).one_minus();
    let right = (a_inv * a).one_minus();
    &k - &(&(&left * &k) * &right)
}

fn radical_trial(config: &CampaignConfig, index: usize, rng: &mut ChaCha8Rng) -> TrialRecord {
    let variant = match config.theorem {
        Theorem::RadicalDualCore => Variant::Dual,
        _ => Variant::Core,
    };
    let (lo, hi) = config.dims;
    let n = rng.random_range(lo..=hi);
    let forced = rng.random_range(0..100) < config.forced_percent;
    let sampler = match (forced, rng.random_bool(0.5)) {
        (true, true) => Sampler::ForcedPositive,
        (true, false) => Sampler::ForcedNegative,
        (false, _) => Sampler::Random,
    };
    let rank = match sampler {
        Sampler::ForcedNegative => rng.random_range(0..n),
        _ => rng.random_range(0..=n),
    };
    let a_field = random_index_one(rng, n, rank);
    let a_inv_field = match variant {
        Variant::Core => inverse_of(&a_field, InverseKind::Core),
        Variant::Dual => inverse_of(&a_field, InverseKind::DualCore),
    }
    .expect("index-one matrices have core inverses");
    let big_j = match sampler {
        Sampler::ForcedPositive => positive_radical(rng, &a_field, &a_inv_field),
        _ => random_matrix(rng, n, n),
    };
    let a = Matrix::<DualGaussian>::lift(&a_field);
    let j = Matrix::<DualGaussian>::eps(&big_j);
    let mut record = TrialRecord {
        trial: index,
        shape: (n, n),
        sampler,
        resamples: 0,
        inputs: Inputs::Radical {
            a: MatrixDoc::from_matrix(&a),
            j: MatrixDoc::from_matrix(&j),
        },
        verdict: Verdict::ContractViolation,
        formula_exists: None,
        oracle_exists: None,
        failing: Vec::new(),
        epsilon_is_zero: None,
        checks: 0,
        detail: None,
    };
    let run = || -> Result<_> {
        let a_inv = lifted_inverse(&a, variant)?
            .ok_or_else(|| Error::contract("lifted matrix lost its inverse"))?;
        let p = RadicalPerturbation::new(&a, &a_inv, &j, variant)?;
        perturbed_inverse(&p)
    };
    match run() {
        Ok(out) => {
            let formula = out.perturbation.epsilon_is_zero();
            let mut oracle = match variant {
                Variant::Core => out.existence.core_exists,
                Variant::Dual => out.existence.dual_core_exists,
            };
            if config.inject_fault {
                oracle = !oracle;
            }
            record.formula_exists = Some(formula);
            record.oracle_exists = Some(oracle);
            record.epsilon_is_zero = Some(formula);
            record.failing = out
                .perturbation
                .factors
                .iter()
                .filter(|w| w.inverse.is_none())
                .map(|w| w.factor)
                .collect();
            // criterion vs oracle, certificate equations, oracle route, third route
            record.checks = 1 + out
                .result
                .as_ref()
                .map_or(0, |r| r.certificate.equations.len() + 2);
            record.verdict = match (formula == oracle, formula) {
                (false, _) => {
                    record.detail = Some("criterion and oracle disagree".into());
                    Verdict::ContractViolation
                }
                (true, true) => Verdict::ExistsAgree,
                (true, false) => Verdict::NotExistsAgree,
            };
        }
        Err(e) => violation(&mut record, e),
    }
    record
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dims_parse() {
        assert_eq!(parse_dims("2..3").unwrap(), (2, 3));
        assert_eq!(parse_dims("2..=4").unwrap(), (2, 4));
        assert_eq!(parse_dims("3").unwrap(), (3, 3));
        assert!(parse_dims("a..b").is_err());
    }

    #[test]
    fn theorem_names() {
        for t in Theorem::ALL {
            assert_eq!(t.as_str().parse::<Theorem>().unwrap(), t);
            assert_eq!(serde_json::to_string(&t).unwrap(), format!("\"{t}\""));
        }
        assert_eq!("prop_IV".parse::<Theorem>().unwrap(), Theorem::MoorePenroseSum);
    }

    #[test]
    fn empty_campaign() {
        let report = run_campaign(&CampaignConfig::new(Theorem::CoreSum, 1, 0)).unwrap();
        assert!(report.trials.is_empty());
        assert_eq!(report.summary.contract_violations, 0);
        assert_eq!(report.to_jsonl().lines().count(), 1);
    }

    #[test]
    fn ring_must_match() {
        let mut cfg = CampaignConfig::new(Theorem::RadicalCore, 1, 1);
        cfg.ring = RingKind::GaussianRational;
        assert!(matches!(run_campaign(&cfg), Err(Error::UnsupportedRing { .. })));
    }

    #[test]
    fn small_campaigns_are_clean() {
        for t in Theorem::ALL {
            let report = run_campaign(&CampaignConfig::new(t, 7, 12)).unwrap();
            let bad: Vec<_> = report.trials.iter().filter(|r| r.detail.is_some()).collect();
            assert!(bad.is_empty(), "{t}: {bad:?}");
        }
    }

    #[test]
    fn injected_faults_are_reported() {
        let mut cfg = CampaignConfig::new(Theorem::CoreSum, 3, 4);
        cfg.inject_fault = true;
        let report = run_campaign(&cfg).unwrap();
        assert_eq!(report.summary.contract_violations, 4);
    }
}
