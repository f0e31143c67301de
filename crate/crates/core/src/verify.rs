//! Decider-independent certificate checking, built only on the graph type
//! and the brute-force oracle.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::certificate::{Certificate, Verdict};
use crate::graph::{Mapping, OrientedGraph};
use crate::oracle::{self, OracleError, SearchProblem, DEFAULT_NODE_BUDGET};
use crate::target::Target;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("malformed certificate: {0}")]
    MalformedCertificate(String),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub target: Target,
    pub verdict: Verdict,
    /// YES: the colouring is locally injective into the target.
    /// NO: the obstruction maps locally injectively into G.
    pub clause_a: bool,
    /// NO only: the obstruction has no locally-injective homomorphism to
    /// the target.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub clause_b: Option<bool>,
    /// A homomorphism of the obstruction to the target refuting clause (b).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Mapping>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.clause_a && self.clause_b.unwrap_or(true)
    }
}

fn malformed(message: impl Into<String>) -> VerifyError {
    VerifyError::MalformedCertificate(message.into())
}

pub fn verify(
    g: &OrientedGraph,
    target: Target,
    cert: &Certificate,
) -> Result<VerificationReport, VerifyError> {
    verify_with_budget(g, target, cert, DEFAULT_NODE_BUDGET)
}

pub fn verify_with_budget(
    g: &OrientedGraph,
    target: Target,
    cert: &Certificate,
    budget: u64,
) -> Result<VerificationReport, VerifyError> {
    if cert.target != target {
        return Err(malformed(format!(
            "certificate is for {}, expected {target}",
            cert.target
        )));
    }
    let h = target.graph();
    let mut report = VerificationReport {
        target,
        verdict: cert.verdict,
        clause_a: false,
        clause_b: None,
        witness: None,
    };
    match (cert.verdict, &cert.colouring, &cert.obstruction) {
        (Verdict::Yes, Some(f), None) => {
            if f.len() != g.n() {
                return Err(malformed(format!(
                    "colouring has {} entries for {} vertices",
                    f.len(),
                    g.n()
                )));
            }
            report.clause_a = oracle::check(&SearchProblem::new(g, &h, target.mode), f)?;
        }
        (Verdict::No, None, Some(o)) => {
            if o.embedding.len() != o.graph.n() {
                return Err(malformed(format!(
                    "embedding has {} entries for {} obstruction vertices",
                    o.embedding.len(),
                    o.graph.n()
                )));
            }
            if o.graph.is_reflexive() {
                return Err(malformed("obstruction graph is reflexive"));
            }
            report.clause_a =
                oracle::check(&SearchProblem::new(&o.graph, g, target.mode), &o.embedding)?;
            let problem = SearchProblem::new(&o.graph, &h, target.mode).with_budget(budget);
            report.witness = oracle::search(&problem)?;
            report.clause_b = Some(report.witness.is_none());
        }
        (Verdict::Yes, _, _) => return Err(malformed("YES needs exactly a colouring")),
        (Verdict::No, _, _) => return Err(malformed("NO needs exactly an obstruction")),
    }
    Ok(report)
}
