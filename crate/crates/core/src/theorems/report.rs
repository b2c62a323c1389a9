use serde::Serialize;

use super::{LinearIsoCertificate, RingIsoCertificate};
use crate::coring::GaloisEvidence;
use crate::error::{Error, Result};
use crate::hopf::AxiomReport;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Dimension {
    pub name: String,
    pub value: usize,
}

/// Everything a suite computed: preconditions, dimensions, certificates and extra checks.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub preconditions: AxiomReport,
    pub dimensions: Vec<Dimension>,
    pub certificates: Vec<RingIsoCertificate>,
    pub linear_certificates: Vec<LinearIsoCertificate>,
    pub checks: AxiomReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub galois: Option<GaloisEvidence>,
}

impl SuiteReport {
    pub fn new(suite: &str) -> Self {
        SuiteReport {
            suite: suite.to_string(),
            ..Default::default()
        }
    }

    pub fn dim(&mut self, name: impl Into<String>, value: usize) {
        self.dimensions.push(Dimension { name: name.into(), value });
    }

    /// Adds a precondition report; a failing one aborts the suite.
    pub fn require(&mut self, prefix: &str, report: AxiomReport) -> Result<()> {
        let failure = report.first_failure();
        self.preconditions.extend(prefix, report);
        match failure {
            Some(f) => Err(Error::AxiomFailure(format!("{prefix}.{f}"))),
            None => Ok(()),
        }
    }

    pub fn check(&mut self, name: &str, ok: bool, detail: impl FnOnce() -> String) {
        self.checks.push(name, (!ok).then(detail));
    }

    pub fn passed(&self) -> bool {
        self.preconditions.passed()
            && self.checks.passed()
            && self.certificates.iter().all(RingIsoCertificate::passed)
            && self.linear_certificates.iter().all(LinearIsoCertificate::passed)
    }

    /// Recomputes every certificate from its stored data.
    pub fn reverify(&self) -> bool {
        self.certificates.iter().all(RingIsoCertificate::reverify)
            && self.linear_certificates.iter().all(LinearIsoCertificate::reverify)
    }

    pub fn first_failure(&self) -> Option<String> {
        if let Some(f) = self.preconditions.first_failure() {
            return Some(f);
        }
        if let Some(c) = self.certificates.iter().find(|c| !c.passed()) {
            return Some(c.failure_summary());
        }
        if let Some(c) = self.linear_certificates.iter().find(|c| !c.passed()) {
            return Some(format!("{}: rank {} of {}", c.label, c.rank, c.source_dim));
        }
        self.checks.first_failure()
    }
}
