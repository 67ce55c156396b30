//! Pass/fail records for identity suites.

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CaseResult {
    pub labels: Vec<String>,
    pub residual: f64,
    pub pass: bool,
}

/// Residuals of one identity suite, one case per label tuple.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub cases: Vec<CaseResult>,
    pub max_residual: f64,
    pub pass: bool,
}

impl VerificationReport {
    /// Builds a report from `(labels, residual)` pairs. Cases are sorted by
    /// label tuple so the output does not depend on evaluation order.
    pub fn from_cases(suite: &str, cases: Vec<(Vec<String>, f64)>, tol: f64) -> Self {
        let mut cases: Vec<CaseResult> = cases
            .into_iter()
            .map(|(labels, residual)| CaseResult {
                labels,
                residual,
                pass: residual.is_finite() && residual < tol,
            })
            .collect();
        cases.sort_by(|a, b| a.labels.cmp(&b.labels));
        let max_residual = cases.iter().map(|c| c.residual).fold(0.0, f64::max);
        let pass = cases.iter().all(|c| c.pass);
        VerificationReport {
            suite: suite.to_string(),
            cases,
            max_residual,
            pass,
        }
    }

    /// The case with the largest residual, if any.
    pub fn worst(&self) -> Option<&CaseResult> {
        self.cases.iter().max_by(|a, b| a.residual.total_cmp(&b.residual))
    }

    pub fn to_text(&self) -> String {
        let verdict = if self.pass { "PASS" } else { "FAIL" };
        let mut line = format!(
            "{:<12} {} cases={} max_residual={:.3e}",
            self.suite,
            verdict,
            self.cases.len(),
            self.max_residual
        );
        if !self.pass {
            if let Some(w) = self.worst() {
                line.push_str(&format!(" worst=({})", w.labels.join(",")));
            }
        }
        line
    }
}
