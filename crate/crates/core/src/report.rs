//! Machine-readable computation report.
//!
//! Every number travels as a decimal string so no consumer loses precision.
//! Keys are declared in alphabetical order, which makes the serialized form
//! canonical: parsing a report and writing it back is byte-identical.

use std::fmt::Write as _;
use std::time::Duration;

use serde::{Deserialize, Serialize};

use crate::indices::IndexReport;
use crate::poly::Polynomial;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Report {
    /// Index `k` is the coefficient of `x^k`.
    pub coefficients: Vec<String>,
    pub degree: String,
    pub edge_count: String,
    pub edge_hyper_wiener: String,
    pub edge_wiener: String,
    pub method: String,
    pub spec: String,
    /// Milliseconds with three decimals, e.g. `"0.042"`.
    pub timing_ms: String,
    pub warnings: Vec<String>,
}

impl Report {
    pub fn new(spec: &str, method: &str, indices: &IndexReport, warnings: Vec<String>, elapsed: Duration) -> Self {
        Self {
            coefficients: indices.polynomial.coeffs().iter().map(u64::to_string).collect(),
            degree: indices.degree.to_string(),
            edge_count: indices.edge_count.to_string(),
            edge_hyper_wiener: indices.edge_hyper_wiener.to_string(),
            edge_wiener: indices.edge_wiener.to_string(),
            method: method.to_string(),
            spec: spec.to_string(),
            timing_ms: format_millis(elapsed),
            warnings,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    /// Parses the coefficient strings back into a polynomial.
    pub fn polynomial(&self) -> Result<Polynomial, std::num::ParseIntError> {
        let coeffs = self
            .coefficients
            .iter()
            .map(|c| c.parse::<u64>())
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Polynomial::new(coeffs))
    }

    pub fn to_text(&self) -> String {
        let poly = self
            .polynomial()
            .map(|p| p.to_string())
            .unwrap_or_else(|_| self.coefficients.join(", "));
        let mut out = String::new();
        let _ = writeln!(out, "spec:              {}", self.spec);
        let _ = writeln!(out, "method:            {}", self.method);
        let _ = writeln!(out, "H_e(x) =           {poly}");
        let _ = writeln!(out, "edges:             {}", self.edge_count);
        let _ = writeln!(out, "degree:            {}", self.degree);
        let _ = writeln!(out, "edge-Wiener:       {}", self.edge_wiener);
        let _ = writeln!(out, "edge-hyper-Wiener: {}", self.edge_hyper_wiener);
        let _ = writeln!(out, "time (ms):         {}", self.timing_ms);
        for w in &self.warnings {
            let _ = writeln!(out, "warning: {w}");
        }
        out
    }
}

pub fn format_millis(elapsed: Duration) -> String {
    let micros = elapsed.as_micros();
    format!("{}.{:03}", micros / 1000, micros % 1000)
}
