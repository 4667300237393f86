//! Verification reports shared by the poset and graph checks.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::Poly;

/// Outcome of one identity or oracle check. A failed check always carries a
/// witness with enough data to reproduce it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
}

impl CheckReport {
    pub fn pass(name: impl Into<String>) -> Self {
        CheckReport {
            name: name.into(),
            passed: true,
            witness: None,
        }
    }

    pub fn fail(name: impl Into<String>, witness: Value) -> Self {
        CheckReport {
            name: name.into(),
            passed: false,
            witness: Some(witness),
        }
    }

    pub fn with_witness(mut self, witness: Value) -> Self {
        self.witness = Some(witness);
        self
    }

    /// Combines several reports; passes iff all pass, and keeps the first
    /// failing witness.
    pub fn all(name: impl Into<String>, reports: impl IntoIterator<Item = CheckReport>) -> Self {
        let mut checked = 0usize;
        for r in reports {
            checked += 1;
            if !r.passed {
                return CheckReport::fail(name, json!({ "failed": r.name, "witness": r.witness }));
            }
        }
        CheckReport::pass(name).with_witness(json!({ "checked": checked }))
    }
}

/// Compares two polynomials; on mismatch the witness includes a small integer
/// point where they differ.
pub fn compare_polys(name: impl Into<String>, input: Value, lhs: &Poly, rhs: &Poly) -> CheckReport {
    if lhs == rhs {
        return CheckReport::pass(name);
    }
    let diff = lhs - rhs;
    let bound = diff.total_degree().unwrap_or(0) as i64;
    let point = (0..=bound)
        .flat_map(|x| (0..=bound).map(move |y| (x, y)))
        .find(|&(x, y)| !num_traits::Zero::is_zero(&diff.evaluate_int(x, y)))
        .unwrap_or((0, 0));
    CheckReport::fail(
        name,
        json!({
            "input": input,
            "lhs": lhs.to_string(),
            "rhs": rhs.to_string(),
            "point": { "x": point.0, "y": point.1 },
            "lhs_value": lhs.evaluate_int(point.0, point.1).to_string(),
            "rhs_value": rhs.evaluate_int(point.0, point.1).to_string(),
        }),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mismatch_has_witness_point() {
        let r = compare_polys("t", json!(null), &Poly::x(), &Poly::y());
        assert!(!r.passed);
        let w = r.witness.unwrap();
        assert_ne!(w["lhs_value"], w["rhs_value"]);
    }

    #[test]
    fn aggregate() {
        let ok = CheckReport::all("agg", [CheckReport::pass("a"), CheckReport::pass("b")]);
        assert!(ok.passed);
        let bad = CheckReport::all("agg", [CheckReport::pass("a"), CheckReport::fail("b", json!(1))]);
        assert!(!bad.passed);
        assert_eq!(bad.witness.unwrap()["failed"], "b");
    }

    #[test]
    fn json_shape() {
        let r = CheckReport::fail("x", json!({"k": 1}));
        let v: Value = serde_json::to_value(&r).unwrap();
        assert_eq!(v, json!({"name": "x", "passed": false, "witness": {"k": 1}}));
    }
}
