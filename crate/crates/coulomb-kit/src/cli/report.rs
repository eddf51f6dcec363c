//! Machine-readable reports. JSON serialization goes through
//! `serde_json::Value` whose object keys are sorted, so a report is a
//! byte-identical function of its contents.

use crate::rat::format_rat;
use crate::series::HilbertSeries;
use serde_json::{json, Value};

pub const REPORT_SCHEMA: &str = "coulomb-kit/report/1";

/// Exit code conventions of the batch tool.
pub mod exit {
    /// Success / anomaly passes / all properties hold.
    pub const OK: i32 = 0;
    /// A mathematical check failed (anomaly fails, property violated).
    pub const MATH_FAIL: i32 = 1;
    /// Invalid input (parse error, wrong shape, non-symplectic rep).
    pub const INVALID_INPUT: i32 = 2;
    /// The monopole sum does not converge ("not good").
    pub const NOT_GOOD: i32 = 3;
}

#[derive(Debug, Clone)]
pub struct Report {
    pub command: String,
    pub inputs: Value,
    pub results: Value,
    pub warnings: Vec<String>,
    pub status: String,
}

impl Report {
    pub fn new(command: &str, inputs: Value) -> Self {
        Report {
            command: command.to_string(),
            inputs,
            results: Value::Null,
            warnings: Vec::new(),
            status: "ok".to_string(),
        }
    }

    pub fn to_value(&self) -> Value {
        json!({
            "schema": REPORT_SCHEMA,
            "command": self.command,
            "inputs": self.inputs,
            "results": self.results,
            "warnings": self.warnings,
            "status": self.status,
        })
    }

    /// Canonical single-line JSON; repeated runs are byte-identical.
    pub fn to_json(&self) -> String {
        self.to_value().to_string()
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(&self.to_value()).expect("report serializes")
    }
}

/// Exponent `exp2/2` as "k" or "p/2".
pub fn format_exp2(exp2: i64) -> String {
    if exp2 % 2 == 0 {
        format!("{}", exp2 / 2)
    } else {
        format!("{exp2}/2")
    }
}

/// Series as `{"complete_through": …, "coefficients": [[exp, coeff], …]}`
/// with all rationals rendered as `p/q` strings.
pub fn series_to_value(s: &HilbertSeries) -> Value {
    let coefficients: Vec<Value> = s
        .terms()
        .map(|(e, c)| json!([format_exp2(e), format_rat(c)]))
        .collect();
    json!({
        "complete_through": format_exp2(s.order2()),
        "coefficients": coefficients,
    })
}
