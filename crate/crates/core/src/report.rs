//! Machine-readable report serialization.
//!
//! Float fields are emitted as decimal strings with 17 significant digits,
//! which round-trip to the exact f64 and keep the byte stream stable across
//! platforms and runs.

use serde::{Deserialize, Serialize};

use crate::identities::{CheckResult, ConfigEcho, Report};

/// One check, JSON shape.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct JsonCheck {
    pub id: String,
    pub lhs_value: String,
    pub rhs_value: String,
    pub abs_err: String,
    pub rel_err: String,
    pub pass: bool,
    pub evaluations: u64,
    pub elapsed_ms: String,
    pub error: Option<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct JsonConfig {
    pub selected_ids: Vec<String>,
    pub tolerance_override: Option<String>,
    pub max_terms: u64,
    pub max_evals: u64,
}

/// Whole-run JSON shape.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct JsonReport {
    pub config: JsonConfig,
    pub results: Vec<JsonCheck>,
    pub all_pass: bool,
}

/// 17 significant digits, the shortest count that pins every f64.
pub fn fmt17(v: f64) -> String {
    format!("{v:.16e}")
}

impl JsonCheck {
    fn from_result(r: &CheckResult) -> Self {
        JsonCheck {
            id: r.id.clone(),
            lhs_value: fmt17(r.lhs_value),
            rhs_value: fmt17(r.rhs_value),
            abs_err: fmt17(r.abs_err),
            rel_err: fmt17(r.rel_err),
            pass: r.pass,
            evaluations: r.evaluations,
            elapsed_ms: fmt17(r.elapsed_ms),
            error: r.error.clone(),
        }
    }
}

impl JsonReport {
    pub fn from_report(report: &Report) -> Self {
        let ConfigEcho {
            selected_ids,
            tolerance_override,
            max_terms,
            max_evals,
        } = &report.config_echo;
        JsonReport {
            config: JsonConfig {
                selected_ids: selected_ids.clone(),
                tolerance_override: tolerance_override.map(fmt17),
                max_terms: *max_terms,
                max_evals: *max_evals,
            },
            results: report.results.iter().map(JsonCheck::from_result).collect(),
            all_pass: report.all_pass,
        }
    }
}

impl Report {
    /// Pretty-printed JSON per the documented schema.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&JsonReport::from_report(self))
            .expect("report serialization cannot fail")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fmt17_round_trips() {
        for &v in &[
            0.76874789242686583,
            -1.0 / 3.0,
            1e-300,
            0.0,
            f64::MAX,
            123456.789,
        ] {
            let s = fmt17(v);
            let back: f64 = s.parse().unwrap();
            assert_eq!(v.to_bits(), back.to_bits(), "{s}");
        }
        assert!(fmt17(f64::NAN).parse::<f64>().unwrap().is_nan());
    }
}
