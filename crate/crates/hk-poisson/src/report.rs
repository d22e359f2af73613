//! Report records shared by the estimate scans and the CLI: pass/fail bound
//! reports, growth-scan rows, and the CSV/JSON serialization with a fixed
//! row schema `(context, r, p, lhs, rhs, normalized, verdict)`.

use std::fmt;

use serde::Serialize;

/// Fixed verdict vocabulary used in every report row.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    #[serde(rename = "pass")]
    Pass,
    #[serde(rename = "fail")]
    Fail,
    #[serde(rename = "o-small")]
    OSmall,
    #[serde(rename = "O-bounded")]
    OBounded,
    #[serde(rename = "diverges")]
    Diverges,
    #[serde(rename = "consistent-with-P[f]")]
    ConsistentWithPoisson,
    #[serde(rename = "violates-hypotheses")]
    ViolatesHypotheses,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::OSmall => "o-small",
            Verdict::OBounded => "O-bounded",
            Verdict::Diverges => "diverges",
            Verdict::ConsistentWithPoisson => "consistent-with-P[f]",
            Verdict::ViolatesHypotheses => "violates-hypotheses",
        };
        f.write_str(s)
    }
}

impl std::str::FromStr for Verdict {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "pass" => Verdict::Pass,
            "fail" => Verdict::Fail,
            "o-small" => Verdict::OSmall,
            "O-bounded" => Verdict::OBounded,
            "diverges" => Verdict::Diverges,
            "consistent-with-P[f]" => Verdict::ConsistentWithPoisson,
            "violates-hypotheses" => Verdict::ViolatesHypotheses,
            other => return Err(format!("unknown verdict {other:?}")),
        })
    }
}

/// One checked inequality `lhs ≤ rhs + tol`.
#[derive(Clone, Debug, Serialize)]
pub struct BoundReport {
    pub context: String,
    pub lhs: f64,
    pub rhs: f64,
    /// rhs − lhs.
    pub slack: f64,
    pub pass: bool,
    pub tol: f64,
}

impl BoundReport {
    pub fn new(context: impl Into<String>, lhs: f64, rhs: f64, tol: f64) -> Self {
        let slack = rhs - lhs;
        BoundReport {
            context: context.into(),
            lhs,
            rhs,
            slack,
            pass: slack >= -tol,
            tol,
        }
    }

    pub fn verdict(&self) -> Verdict {
        if self.pass {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }
}

/// One report row with the fixed CSV schema.
#[derive(Clone, Debug, Serialize)]
pub struct Row {
    pub context: String,
    pub r: f64,
    /// Norm selector as printed: "1", "2", "inf", "alexiewicz", or "-".
    pub p: String,
    pub lhs: f64,
    pub rhs: f64,
    pub normalized: f64,
    pub verdict: Verdict,
}

fn fmt17(x: f64) -> String {
    if x.is_nan() {
        "nan".into()
    } else if x.is_infinite() {
        if x > 0.0 { "inf".into() } else { "-inf".into() }
    } else {
        format!("{x:.16e}")
    }
}

impl Row {
    pub fn csv_line(&self) -> String {
        format!(
            "{},{},{},{},{},{},{}",
            self.context,
            fmt17(self.r),
            self.p,
            fmt17(self.lhs),
            fmt17(self.rhs),
            fmt17(self.normalized),
            self.verdict
        )
    }
}

pub const CSV_HEADER: &str = "context,r,p,lhs,rhs,normalized,verdict";

/// A full report: command metadata plus rows sorted by (context, r).
///
/// CSV output holds only the header and rows so repeated runs with the same
/// flags are byte-identical; the timestamp lives in the JSON metadata only.
#[derive(Clone, Debug, Serialize)]
pub struct ScanReport {
    pub command: String,
    pub tolerances: Tolerances,
    pub timestamp: Option<String>,
    pub rows: Vec<Row>,
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct Tolerances {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_depth: u32,
    pub osc_accel_terms: u32,
}

impl From<&crate::quad::QuadratureSpec> for Tolerances {
    fn from(s: &crate::quad::QuadratureSpec) -> Self {
        Tolerances {
            abs_tol: s.abs_tol,
            rel_tol: s.rel_tol,
            max_depth: s.max_depth,
            osc_accel_terms: s.osc_accel_terms,
        }
    }
}

impl ScanReport {
    pub fn new(command: impl Into<String>, spec: &crate::quad::QuadratureSpec, mut rows: Vec<Row>) -> Self {
        rows.sort_by(|a, b| {
            a.context
                .cmp(&b.context)
                .then(a.r.partial_cmp(&b.r).unwrap_or(std::cmp::Ordering::Equal))
        });
        ScanReport {
            command: command.into(),
            tolerances: spec.into(),
            timestamp: None,
            rows,
        }
    }

    pub fn all_pass(&self) -> bool {
        self.rows.iter().all(|r| r.verdict != Verdict::Fail)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from(CSV_HEADER);
        out.push('\n');
        for row in &self.rows {
            out.push_str(&row.csv_line());
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }
}
