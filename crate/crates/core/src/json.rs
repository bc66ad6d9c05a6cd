//! JSON documents: matrices and the reports produced by the CLI.
//!
//! A matrix document is
//! `{"ring": "gaussian_rational", "rows": 2, "cols": 2, "entries": [["1", "1/2i"], ["0", "-3+i"]]}`
//! with every entry in the scalar text format. Parsing then printing a
//! document reproduces it byte for byte.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::inverses::{Certificate, EquationCheck, InverseKind};
use crate::matrix::Matrix;
use crate::oracle::ExistenceReport;
use crate::radical::{RadicalOutcome, Variant};
use crate::scalar::{DualGaussian, GaussianRational, RingKind, Scalar};
use crate::sum::{Factor, IdentityCheck, ProductCore, SumContext, SumOutcome};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixDoc {
    pub ring: RingKind,
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<String>>,
}

impl MatrixDoc {
    pub fn from_matrix<S: Scalar>(m: &Matrix<S>) -> Self {
        MatrixDoc {
            ring: S::RING,
            rows: m.rows(),
            cols: m.cols(),
            entries: (0..m.rows())
                .map(|i| m.row(i).iter().map(ToString::to_string).collect())
                .collect(),
        }
    }

    pub fn to_matrix<S: Scalar>(&self) -> Result<Matrix<S>> {
        if self.ring != S::RING {
            return Err(Error::Document(format!(
                "expected a {} matrix, found {}",
                S::RING,
                self.ring
            )));
        }
        if self.entries.len() != self.rows || self.entries.iter().any(|r| r.len() != self.cols) {
            return Err(Error::Document(format!(
                "entries do not form a {}x{} array",
                self.rows, self.cols
            )));
        }
        let data = self
            .entries
            .iter()
            .flatten()
            .map(|s| s.parse::<S>())
            .collect::<Result<Vec<_>>>()?;
        Matrix::new(self.rows, self.cols, data)
    }

    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Document(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("matrix documents always serialize")
    }
}

/// A matrix over whichever ring its document names.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnyMatrix {
    Gaussian(Matrix<GaussianRational>),
    Dual(Matrix<DualGaussian>),
}

impl AnyMatrix {
    pub fn from_doc(doc: &MatrixDoc) -> Result<Self> {
        Ok(match doc.ring {
            RingKind::GaussianRational => AnyMatrix::Gaussian(doc.to_matrix()?),
            RingKind::DualGaussian => AnyMatrix::Dual(doc.to_matrix()?),
        })
    }

    pub fn parse(text: &str) -> Result<Self> {
        Self::from_doc(&MatrixDoc::parse(text)?)
    }

    pub fn ring(&self) -> RingKind {
        match self {
            AnyMatrix::Gaussian(_) => RingKind::GaussianRational,
            AnyMatrix::Dual(_) => RingKind::DualGaussian,
        }
    }

    pub fn to_doc(&self) -> MatrixDoc {
        match self {
            AnyMatrix::Gaussian(m) => MatrixDoc::from_matrix(m),
            AnyMatrix::Dual(m) => MatrixDoc::from_matrix(m),
        }
    }

    /// Rank is only defined over the field.
    pub fn rank(&self) -> Result<usize> {
        match self {
            AnyMatrix::Gaussian(m) => Ok(m.rank()),
            AnyMatrix::Dual(_) => Err(Error::UnsupportedRing {
                op: "rank",
                ring: RingKind::DualGaussian,
            }),
        }
    }
}

fn doc<S: Scalar>(m: &Matrix<S>) -> MatrixDoc {
    MatrixDoc::from_matrix(m)
}

/// Output of `compute`.
#[derive(Debug, Clone, Serialize)]
pub struct ComputeReport {
    pub kind: InverseKind,
    pub input: MatrixDoc,
    pub exists: bool,
    pub inverse: Option<MatrixDoc>,
    pub certificate: Option<CertificateDoc>,
}

impl ComputeReport {
    pub fn new<S: Scalar>(kind: InverseKind, a: &Matrix<S>, inverse: Option<(&Matrix<S>, Certificate<S>)>) -> Self {
        ComputeReport {
            kind,
            input: doc(a),
            exists: inverse.is_some(),
            certificate: inverse.as_ref().map(|(_, c)| strip(c)),
            inverse: inverse.map(|(x, _)| doc(x)),
        }
    }
}

/// Output of `verify`.
#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub input: MatrixDoc,
    pub candidate: MatrixDoc,
    pub certificate: CertificateDoc,
}

impl VerifyReport {
    pub fn new<S: Scalar>(a: &Matrix<S>, certificate: &Certificate<S>) -> Self {
        VerifyReport {
            input: doc(a),
            candidate: doc(&certificate.candidate),
            certificate: strip(certificate),
        }
    }
}

/// A certificate without its candidate, so both rings share one type.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CertificateDoc {
    pub kind: InverseKind,
    pub valid: bool,
    pub equations: Vec<EquationCheck>,
}

pub fn strip<S>(c: &Certificate<S>) -> CertificateDoc {
    CertificateDoc {
        kind: c.kind,
        valid: c.valid,
        equations: c.equations.clone(),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct FactorDoc {
    pub factor: Factor,
    pub value: MatrixDoc,
    pub invertible: bool,
    pub inverse: Option<MatrixDoc>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClosedFormDoc {
    pub factor: Factor,
    pub inverse: MatrixDoc,
}

#[derive(Debug, Clone, Serialize)]
pub struct ProductCoreDoc {
    pub ff0: MatrixDoc,
    pub core: MatrixDoc,
    pub q: MatrixDoc,
    pub certificate: CertificateDoc,
    pub identities: Vec<IdentityCheck>,
}

impl ProductCoreDoc {
    pub fn new<S: Scalar>(pc: &ProductCore<S>) -> Self {
        ProductCoreDoc {
            ff0: doc(&pc.ff0),
            core: doc(&pc.core),
            q: doc(&pc.q),
            certificate: strip(&pc.certificate),
            identities: pc.identities.clone(),
        }
    }
}

/// Output of `perturb`.
#[derive(Debug, Clone, Serialize)]
pub struct PerturbReport {
    pub ring: RingKind,
    pub tau: InverseKind,
    pub phi: MatrixDoc,
    pub eta: MatrixDoc,
    pub phi_tau: MatrixDoc,
    pub alpha: MatrixDoc,
    pub beta: MatrixDoc,
    pub epsilon: MatrixDoc,
    pub f: MatrixDoc,
    pub f0: MatrixDoc,
    pub exists: bool,
    pub failing: Vec<Factor>,
    pub factors: Vec<FactorDoc>,
    pub result: Option<MatrixDoc>,
    pub certificate: Option<CertificateDoc>,
    pub closed_forms: Vec<ClosedFormDoc>,
    pub identities: Vec<IdentityCheck>,
    pub product_core: Option<ProductCoreDoc>,
    pub oracle_agrees: bool,
}

impl PerturbReport {
    pub fn new<S: Scalar>(ctx: &SumContext<S>, out: &SumOutcome<S>, product_core: Option<&ProductCore<S>>) -> Self {
        let result = out.result.as_ref();
        PerturbReport {
            ring: S::RING,
            tau: ctx.tau,
            phi: doc(&ctx.phi),
            eta: doc(&ctx.eta),
            phi_tau: doc(&ctx.phi_tau),
            alpha: doc(&ctx.alpha),
            beta: doc(&ctx.beta),
            epsilon: doc(&ctx.epsilon),
            f: doc(&ctx.f),
            f0: doc(&ctx.f0),
            exists: out.exists(),
            failing: out.failing(),
            factors: out
                .witness
                .iter()
                .map(|w| FactorDoc {
                    factor: w.factor,
                    value: doc(&w.value),
                    invertible: w.inverse.is_some(),
                    inverse: w.inverse.as_ref().map(doc),
                })
                .collect(),
            result: result.map(|r| doc(&r.inverse)),
            certificate: result.map(|r| strip(&r.certificate)),
            closed_forms: result
                .map(|r| {
                    r.closed_forms
                        .iter()
                        .map(|(factor, m)| ClosedFormDoc {
                            factor: *factor,
                            inverse: doc(m),
                        })
                        .collect()
                })
                .unwrap_or_default(),
            identities: out.identities.clone(),
            product_core: product_core.map(ProductCoreDoc::new),
            oracle_agrees: true,
        }
    }
}

/// Output of `radical`.
#[derive(Debug, Clone, Serialize)]
pub struct RadicalReport {
    pub ring: RingKind,
    pub variant: Variant,
    pub a: MatrixDoc,
    pub j: MatrixDoc,
    pub a_inv: MatrixDoc,
    pub radical_check: bool,
    pub epsilon: MatrixDoc,
    pub epsilon_is_zero: bool,
    pub exists: bool,
    pub factors: Vec<FactorDoc>,
    pub result: Option<MatrixDoc>,
    pub certificate: Option<CertificateDoc>,
    pub oracle: ExistenceReport<()>,
    pub projection_q: Option<MatrixDoc>,
    pub routes_agree: bool,
}

impl RadicalReport {
    pub fn new(out: &RadicalOutcome) -> Self {
        let p = &out.perturbation;
        let e = &out.existence;
        let result = out.result.as_ref();
        RadicalReport {
            ring: RingKind::DualGaussian,
            variant: p.variant,
            a: doc(&p.a),
            j: doc(&p.j),
            a_inv: doc(&p.a_inv),
            radical_check: p.j.is_radical(),
            epsilon: doc(&p.epsilon),
            epsilon_is_zero: p.epsilon_is_zero(),
            exists: out.exists(),
            factors: p
                .factors
                .iter()
                .map(|w| FactorDoc {
                    factor: w.factor,
                    value: doc(&w.value),
                    invertible: w.inverse.is_some(),
                    inverse: w.inverse.as_ref().map(doc),
                })
                .collect(),
            result: result.map(|r| doc(&r.inverse)),
            certificate: result.map(|r| strip(&r.certificate)),
            oracle: ExistenceReport {
                group_exists: e.group_exists,
                one_three_exists: e.one_three_exists,
                one_four_exists: e.one_four_exists,
                core_exists: e.core_exists,
                dual_core_exists: e.dual_core_exists,
                group_witnesses: None,
                one_three: None,
                one_four: None,
            },
            projection_q: result.and_then(|r| r.projection.as_ref()).map(|p| doc(&p.q)),
            routes_agree: true,
        }
    }
}
