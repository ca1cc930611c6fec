//! Machine-readable verification reports:
//! `{"check":…, "params":…, "status":"pass|fail", "first_discrepancy":{…}|null}`.

use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub check: String,
    pub params: Value,
    pub status: Status,
    pub first_discrepancy: Option<Value>,
}

impl VerificationReport {
    pub fn pass(check: impl Into<String>, params: Value) -> Self {
        Self {
            check: check.into(),
            params,
            status: Status::Pass,
            first_discrepancy: None,
        }
    }

    pub fn fail(check: impl Into<String>, params: Value, discrepancy: Value) -> Self {
        Self {
            check: check.into(),
            params,
            status: Status::Fail,
            first_discrepancy: Some(discrepancy),
        }
    }

    /// Pass if `discrepancy` is `None`.
    pub fn from_outcome(check: impl Into<String>, params: Value, discrepancy: Option<Value>) -> Self {
        match discrepancy {
            None => Self::pass(check, params),
            Some(d) => Self::fail(check, params, d),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn layout() {
        let r = VerificationReport::pass("cf", json!({"L": 2}));
        assert_eq!(
            r.to_json().to_string(),
            r#"{"check":"cf","params":{"L":2},"status":"pass","first_discrepancy":null}"#
        );
        let f = VerificationReport::fail("cf", json!({}), json!({"n": 3}));
        assert!(!f.passed());
        assert_eq!(f.to_json()["status"], "fail");
    }
}
