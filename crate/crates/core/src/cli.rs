//! The `coreinv` command line.
//!
//! Every subcommand prints a JSON report (or JSON lines for `fuzz`) and
//! exits with
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | inverse exists / candidate valid / campaign clean |
//! | 2 | inverse does not exist / candidate invalid |
//! | 3 | unreadable or malformed input |
//! | 4 | precondition not met |
//! | 5 | contract violation: a formula disagreed with the oracle |

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::campaign::{check_sum, parse_dims, run_campaign, CampaignConfig, Theorem};
use crate::error::{Error, Result};
use crate::inverses::{inverse_of, verify, InverseKind};
use crate::json::{AnyMatrix, ComputeReport, PerturbReport, RadicalReport, VerifyReport};
use crate::matrix::Matrix;
use crate::oracle::{oracle_core, oracle_dual_core, oracle_group};
use crate::radical::{perturbed_inverse, RadicalPerturbation, Variant};
use crate::scalar::{DualGaussian, RingKind};
use crate::sum::build_context;

pub const EXIT_OK: u8 = 0;
pub const EXIT_NOT_EXISTS: u8 = 2;
pub const EXIT_INPUT: u8 = 3;
pub const EXIT_PRECONDITION: u8 = 4;
pub const EXIT_CONTRACT: u8 = 5;

#[derive(Debug, Parser)]
#[command(name = "coreinv", version, about = "Exact core, dual core and related generalized inverses")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute an inverse of a matrix document.
    Compute {
        matrix: PathBuf,
        #[arg(long, default_value = "core")]
        kind: InverseKind,
        /// Reject documents over a different ring.
        #[arg(long)]
        ring: Option<RingKind>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a candidate against the defining equations of a kind.
    Verify {
        matrix: PathBuf,
        candidate: PathBuf,
        #[arg(long, default_value = "core")]
        kind: InverseKind,
        #[arg(long)]
        ring: Option<RingKind>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Inverse of the perturbed sum f = φ + η − ε built from a τ-inverse of φ.
    Perturb {
        phi: PathBuf,
        eta: PathBuf,
        #[arg(long, alias = "kind", default_value = "core")]
        tau: InverseKind,
        #[arg(long)]
        ring: Option<RingKind>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Core or dual core inverse of a + j for a radical j (dual ring).
    Radical {
        a: PathBuf,
        j: PathBuf,
        #[arg(long, default_value = "core")]
        variant: Variant,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Seeded campaign testing a criterion against the oracle.
    Fuzz {
        #[arg(long, default_value = "thm2_1")]
        theorem: Theorem,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        /// Inclusive size range, e.g. `2..3`.
        #[arg(long, default_value = "2..3")]
        dims: String,
        /// Defaults to the ring the theorem lives over.
        #[arg(long)]
        ring: Option<RingKind>,
        /// Percentage of trials with forced rank-deficient inputs.
        #[arg(long, default_value_t = 30)]
        forced: u32,
        /// Corrupt every oracle answer; each trial must then be reported
        /// as a violation.
        #[arg(long)]
        inject_fault: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Maps an error to its exit code.
pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::ParseScalar { .. }
        | Error::DimensionMismatch(_)
        | Error::UnsupportedRing { .. }
        | Error::UnsupportedKind(_)
        | Error::Document(_)
        | Error::ZeroMatrix => EXIT_INPUT,
        Error::NotInvertible { .. }
        | Error::NoSolution { .. }
        | Error::NotGroupInvertible { .. }
        | Error::NotCoreInvertible { .. }
        | Error::NotDualCoreInvertible { .. } => EXIT_NOT_EXISTS,
        Error::Reject(_) | Error::Rejected(_) | Error::PreconditionViolated(_) => EXIT_PRECONDITION,
        Error::ContractViolation(_) => EXIT_CONTRACT,
    }
}

fn read_matrix(path: &Path, ring: Option<RingKind>) -> Result<AnyMatrix> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Document(format!("{}: {e}", path.display())))?;
    let m = AnyMatrix::parse(&text)?;
    match ring {
        Some(r) if r != m.ring() => Err(Error::Document(format!(
            "{} holds a {} matrix, expected {r}",
            path.display(),
            m.ring()
        ))),
        _ => Ok(m),
    }
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Error::Document(format!("{}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .map_err(|e| Error::Document(e.to_string()))
        }
    }
}

fn json_line<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("reports serialize");
    s.push('\n');
    s
}

fn verdict(exists: bool) -> u8 {
    if exists {
        EXIT_OK
    } else {
        EXIT_NOT_EXISTS
    }
}

fn dual_inverse(a: &Matrix<DualGaussian>, kind: InverseKind) -> Result<Option<Matrix<DualGaussian>>> {
    match kind {
        InverseKind::Group => oracle_group(a),
        InverseKind::Core => oracle_core(a),
        InverseKind::DualCore => oracle_dual_core(a),
        _ => Err(Error::UnsupportedRing {
            op: kind.as_str(),
            ring: RingKind::DualGaussian,
        }),
    }
}

fn compute(path: &Path, kind: InverseKind, ring: Option<RingKind>) -> Result<(String, u8)> {
    let report = match read_matrix(path, ring)? {
        AnyMatrix::Gaussian(a) => match inverse_of(&a, kind) {
            Ok(x) => {
                let cert = verify(kind, &a, &x)?;
                if !cert.valid {
                    return Err(Error::contract(format!("computed {kind} inverse fails its equations")));
                }
                ComputeReport::new(kind, &a, Some((&x, cert)))
            }
            Err(e) if exit_code(&e) == EXIT_NOT_EXISTS => ComputeReport::new(kind, &a, None),
            Err(e) => return Err(e),
        },
        AnyMatrix::Dual(a) => {
            if kind.requires_square() && !a.is_square() {
                return Err(Error::dims(format!("{kind} inverse of a non-square matrix")));
            }
            match dual_inverse(&a, kind)? {
                Some(x) => {
                    let cert = verify(kind, &a, &x)?;
                    ComputeReport::new(kind, &a, Some((&x, cert)))
                }
                None => ComputeReport::new(kind, &a, None),
            }
        }
    };
    Ok((json_line(&report), verdict(report.exists)))
}

fn verify_cmd(path: &Path, candidate: &Path, kind: InverseKind, ring: Option<RingKind>) -> Result<(String, u8)> {
    let a = read_matrix(path, ring)?;
    let x = read_matrix(candidate, Some(a.ring()))?;
    let report = match (a, x) {
        (AnyMatrix::Gaussian(a), AnyMatrix::Gaussian(x)) => VerifyReport::new(&a, &verify(kind, &a, &x)?),
        (AnyMatrix::Dual(a), AnyMatrix::Dual(x)) => VerifyReport::new(&a, &verify(kind, &a, &x)?),
        _ => unreachable!("rings checked above"),
    };
    Ok((json_line(&report), verdict(report.certificate.valid)))
}

fn perturb(phi: &Path, eta: &Path, tau: InverseKind, ring: Option<RingKind>) -> Result<(String, u8)> {
    let (AnyMatrix::Gaussian(phi), AnyMatrix::Gaussian(eta)) = (read_matrix(phi, ring)?, read_matrix(eta, ring)?) else {
        return Err(Error::UnsupportedRing {
            op: "perturb",
            ring: RingKind::DualGaussian,
        });
    };
    let ctx = build_context(&phi, &eta, tau)?;
    let check = check_sum(&ctx, false)?;
    let report = PerturbReport::new(&ctx, &check.outcome, check.product_core.as_ref());
    Ok((json_line(&report), verdict(report.exists)))
}

fn radical(a: &Path, j: &Path, variant: Variant) -> Result<(String, u8)> {
    let ring = Some(RingKind::DualGaussian);
    let (AnyMatrix::Dual(a), AnyMatrix::Dual(j)) = (read_matrix(a, ring)?, read_matrix(j, ring)?) else {
        unreachable!("ring checked on read")
    };
    let p = RadicalPerturbation::from_pair(&a, &j, variant)?;
    let out = perturbed_inverse(&p)?;
    let report = RadicalReport::new(&out);
    Ok((json_line(&report), verdict(report.exists)))
}

fn dispatch(command: &Command) -> Result<(String, u8)> {
    match command {
        Command::Compute { matrix, kind, ring, .. } => compute(matrix, *kind, *ring),
        Command::Verify {
            matrix,
            candidate,
            kind,
            ring,
            ..
        } => verify_cmd(matrix, candidate, *kind, *ring),
        Command::Perturb { phi, eta, tau, ring, .. } => perturb(phi, eta, *tau, *ring),
        Command::Radical { a, j, variant, .. } => radical(a, j, *variant),
        Command::Fuzz {
            theorem,
            seed,
            trials,
            dims,
            ring,
            forced,
            inject_fault,
            ..
        } => {
            let mut config = CampaignConfig::new(*theorem, *seed, *trials);
            config.dims = parse_dims(dims)?;
            config.ring = ring.unwrap_or(theorem.ring());
            config.forced_percent = *forced;
            config.inject_fault = *inject_fault;
            let report = run_campaign(&config)?;
            let code = if report.summary.contract_violations > 0 {
                EXIT_CONTRACT
            } else {
                EXIT_OK
            };
            Ok((report.to_jsonl(), code))
        }
    }
}

fn out_path(command: &Command) -> Option<&Path> {
    match command {
        Command::Compute { out, .. }
        | Command::Verify { out, .. }
        | Command::Perturb { out, .. }
        | Command::Radical { out, .. }
        | Command::Fuzz { out, .. } => out.as_deref(),
    }
}

/// Parses `args`, runs the command and returns the exit code. Reports go
/// to stdout or `--out`; errors go to stderr as `{"error": ..., "exit_code": ...}`.
pub fn run<I, T>(args: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
        }
    };
    let result = dispatch(&cli.command).and_then(|(text, code)| {
        emit(out_path(&cli.command), &text)?;
        Ok(code)
    });
    match result {
        Ok(code) => code,
        Err(e) => {
            let code = exit_code(&e);
            eprintln!("{}", serde_json::json!({ "error": e.to_string(), "exit_code": code }));
            code
        }
    }
}
