use std::fmt;

use serde::Serialize;

use crate::linalg::{format_rational, is_zero_vec, Rational};

/// Number of violations kept verbatim; the rest are only counted.
pub const MAX_LISTED: usize = 10;

/// One failed identity on one basis tuple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub axiom: &'static str,
    /// 0-based basis indices of the witness tuple.
    pub witness: Vec<usize>,
    /// The nonzero difference `lhs - rhs`, in basis coordinates (flattened
    /// row-major for matrix-valued identities).
    pub residual: Vec<Rational>,
}

/// Outcome of an identity check over all basis tuples.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    violations: Vec<Violation>,
    total: usize,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    /// Records a violation if `residual` is nonzero.
    pub fn check(&mut self, axiom: &'static str, witness: &[usize], residual: Vec<Rational>) {
        if is_zero_vec(&residual) {
            return;
        }
        self.total += 1;
        if self.violations.len() < MAX_LISTED {
            self.violations.push(Violation {
                axiom,
                witness: witness.to_vec(),
                residual,
            });
        }
    }

    pub fn is_empty(&self) -> bool {
        self.total == 0
    }

    pub fn total(&self) -> usize {
        self.total
    }

    pub fn violations(&self) -> &[Violation] {
        &self.violations
    }

    /// Does any recorded violation carry this axiom label?
    pub fn mentions(&self, axiom: &str) -> bool {
        self.violations.iter().any(|v| v.axiom == axiom)
    }

    pub fn merge(&mut self, other: Report) {
        self.total += other.total;
        for v in other.violations {
            if self.violations.len() < MAX_LISTED {
                self.violations.push(v);
            }
        }
    }

    pub fn to_json(&self) -> ReportJson {
        ReportJson {
            ok: self.is_empty(),
            total: self.total,
            violations: self
                .violations
                .iter()
                .map(|v| ViolationJson {
                    axiom: v.axiom.to_string(),
                    witness: v.witness.iter().map(|i| i + 1).collect(),
                    residual: v.residual.iter().map(format_rational).collect(),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ReportJson {
    pub ok: bool,
    pub total: usize,
    pub violations: Vec<ViolationJson>,
}

/// Witness indices are 1-based here, like the document format.
#[derive(Debug, Serialize)]
pub struct ViolationJson {
    pub axiom: String,
    pub witness: Vec<usize>,
    pub residual: Vec<String>,
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "ok");
        }
        writeln!(f, "{} violation(s)", self.total)?;
        for v in &self.violations {
            let w: Vec<String> = v.witness.iter().map(|i| (i + 1).to_string()).collect();
            let r: Vec<String> = v.residual.iter().map(format_rational).collect();
            writeln!(f, "  {} at ({}): residual [{}]", v.axiom, w.join(","), r.join(", "))?;
        }
        if self.total > self.violations.len() {
            writeln!(f, "  ... {} more", self.total - self.violations.len())?;
        }
        Ok(())
    }
}
