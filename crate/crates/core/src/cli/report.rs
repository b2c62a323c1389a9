use std::fmt::Write as _;
use std::time::Duration;

use serde::Serialize;

use crate::error::Error;
use crate::hopf::AxiomReport;
use crate::theorems::SuiteReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    PreconditionFailed,
}

impl Status {
    fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::PreconditionFailed => "PRECONDITION",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ErrorInfo {
    pub kind: String,
    pub message: String,
}

impl From<&Error> for ErrorInfo {
    fn from(e: &Error) -> Self {
        let kind = match e {
            Error::Singular => "singular",
            Error::NoSolution => "no_solution",
            Error::Dimension(_) => "dimension",
            Error::InvalidGroup(_) => "invalid_group",
            Error::BadCharacteristic(_) => "bad_characteristic",
            Error::NotASubring => "not_a_subring",
            Error::IllDefined(_) => "ill_defined",
            Error::NoDualBasis => "no_dual_basis",
            Error::NotClosed(_) => "not_closed",
            Error::AxiomFailure(_) => "axiom_failure",
            Error::CertificateFailure(_) => "certificate_failure",
            Error::NotGalois(_) => "not_galois",
            Error::Parse(_) => "parse",
        };
        ErrorInfo {
            kind: kind.to_string(),
            message: e.to_string(),
        }
    }
}

/// Errors that mean "the suite does not apply", as opposed to "the claim failed".
pub fn is_precondition(e: &Error) -> bool {
    matches!(
        e,
        Error::AxiomFailure(_) | Error::NotGalois(_) | Error::NoDualBasis | Error::BadCharacteristic(_)
    )
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Entry {
    pub label: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub checks: Option<AxiomReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub suite: Option<SuiteReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorInfo>,
}

impl Entry {
    pub fn from_checks(label: impl Into<String>, checks: AxiomReport) -> Self {
        Entry {
            label: label.into(),
            status: if checks.passed() { Status::Pass } else { Status::Fail },
            checks: Some(checks),
            suite: None,
            error: None,
        }
    }

    pub fn from_suite(label: impl Into<String>, outcome: Result<SuiteReport, Error>) -> Self {
        let label = label.into();
        match outcome {
            Ok(r) => Entry {
                label,
                status: if r.passed() { Status::Pass } else { Status::Fail },
                checks: None,
                suite: Some(r),
                error: None,
            },
            Err(e) => Entry {
                label,
                status: if is_precondition(&e) { Status::PreconditionFailed } else { Status::Fail },
                checks: None,
                suite: None,
                error: Some(ErrorInfo::from(&e)),
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub command: String,
    pub instance: String,
    pub field: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub suite: Option<String>,
    pub entries: Vec<Entry>,
    pub passed: bool,
    pub exit_code: i32,
    /// Wall-clock time, text form only so that JSON stays reproducible.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl Report {
    pub fn new(command: &str, instance: &str, field: &str, suite: Option<&str>, entries: Vec<Entry>, elapsed: Duration) -> Self {
        let exit_code = if entries.iter().any(|e| e.status == Status::PreconditionFailed) {
            2
        } else if entries.iter().any(|e| e.status == Status::Fail) {
            1
        } else {
            0
        };
        Report {
            command: command.to_string(),
            instance: instance.to_string(),
            field: field.to_string(),
            suite: suite.map(str::to_string),
            passed: exit_code == 0,
            exit_code,
            entries,
            elapsed,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let suite = self.suite.as_deref().map(|s| format!(" suite {s}")).unwrap_or_default();
        let _ = writeln!(out, "{} {} over {}{}", self.command, self.instance, self.field, suite);
        for e in &self.entries {
            let _ = writeln!(out, "[{}] {}", e.status.label(), e.label);
            if let Some(c) = &e.checks {
                write_checks(&mut out, c, "");
            }
            if let Some(s) = &e.suite {
                write_suite(&mut out, s);
            }
            if let Some(err) = &e.error {
                let _ = writeln!(out, "  error ({}): {}", err.kind, err.message);
            }
        }
        let _ = writeln!(out, "elapsed {:.3} s", self.elapsed.as_secs_f64());
        let _ = writeln!(out, "RESULT {}", if self.passed { "PASS" } else { "FAIL" });
        out
    }
}

fn write_checks(out: &mut String, c: &AxiomReport, prefix: &str) {
    for check in &c.checks {
        let status = if check.passed { "ok" } else { "FAILED" };
        let _ = write!(out, "  {prefix}{}: {status}", check.name);
        if let Some(d) = &check.detail {
            let _ = write!(out, " ({d})");
        }
        out.push('\n');
    }
}

fn write_suite(out: &mut String, s: &SuiteReport) {
    let passed = s.preconditions.checks.iter().filter(|c| c.passed).count();
    let _ = writeln!(out, "  preconditions: {passed}/{} ok", s.preconditions.checks.len());
    for c in s.preconditions.failures() {
        let _ = writeln!(out, "  precondition {} FAILED: {}", c.name, c.detail.as_deref().unwrap_or(""));
    }
    for d in &s.dimensions {
        let _ = writeln!(out, "  dim {} = {}", d.name, d.value);
    }
    if let Some(g) = &s.galois {
        let _ = writeln!(
            out,
            "  galois: {} (rank {} of {} -> {}, dim B = {})",
            g.galois, g.rank, g.source_dim, g.target_dim, g.coinvariants_dim
        );
    }
    for cert in &s.certificates {
        let kind = match cert.kind {
            crate::theorems::MapKind::Multiplicative => "multiplicative",
            crate::theorems::MapKind::AntiMultiplicative => "anti-multiplicative",
        };
        let _ = writeln!(
            out,
            "  certificate {}: rank {} ({} -> {}), bijective {}, unital {}, {kind} {} => {}",
            cert.label,
            cert.rank,
            cert.source_dim,
            cert.target_dim,
            cert.bijective,
            cert.unital,
            cert.multiplicative,
            if cert.passed() { "ok" } else { "FAILED" }
        );
        if let Some(w) = &cert.witness {
            let _ = writeln!(out, "    witness: basis pair ({}, {})", w.left, w.right);
        }
    }
    for cert in &s.linear_certificates {
        let _ = writeln!(
            out,
            "  linear certificate {}: {} -> {}, rank {} ({} -> {}) => {}",
            cert.label,
            cert.source,
            cert.target,
            cert.rank,
            cert.source_dim,
            cert.target_dim,
            if cert.passed() { "ok" } else { "FAILED" }
        );
    }
    write_checks(out, &s.checks, "check ");
}
