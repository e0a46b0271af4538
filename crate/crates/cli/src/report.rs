//! Check results and the JSON report.

use std::fmt;

use serde::{Deserialize, Serialize};

pub const REPORT_VERSION: &str = "1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Holds under the adopted convention, contradicts the printed text.
    Flagged,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Flagged => "flagged",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub check_id: String,
    pub status: Status,
    pub expected: String,
    pub actual: String,
    pub citation: String,
}

impl CheckResult {
    pub fn new(
        id: &str,
        pass: bool,
        expected: impl fmt::Display,
        actual: impl fmt::Display,
        citation: &str,
    ) -> Self {
        CheckResult {
            check_id: id.to_string(),
            status: if pass { Status::Pass } else { Status::Fail },
            expected: expected.to_string(),
            actual: actual.to_string(),
            citation: citation.to_string(),
        }
    }

    /// A printed claim that is wrong as written. `resolved` says whether the adopted reading
    /// checks out; if not the entry is a failure.
    pub fn erratum(
        id: &str,
        resolved: bool,
        printed: impl fmt::Display,
        resolution: impl fmt::Display,
        citation: &str,
    ) -> Self {
        CheckResult {
            check_id: id.to_string(),
            status: if resolved { Status::Flagged } else { Status::Fail },
            expected: printed.to_string(),
            actual: resolution.to_string(),
            citation: citation.to_string(),
        }
    }

    pub fn from_error(id: &str, expected: impl fmt::Display, err: impl fmt::Display, citation: &str) -> Self {
        Self::new(id, false, expected, format!("error: {err}"), citation)
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}: {}", self.status, self.check_id, self.actual)
        .and_then(|_| {
            if self.status == Status::Pass {
                Ok(())
            } else {
                write!(f, " (printed/expected: {})", self.expected)
            }
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Flags {
    pub order: usize,
    pub height: i64,
    pub pmax: u64,
    pub json: Option<String>,
    pub quiet: bool,
}

impl Default for Flags {
    fn default() -> Self {
        Flags { order: 60, height: 256, pmax: 10_000, json: None, quiet: false }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub version: String,
    pub flags: Flags,
    pub results: Vec<CheckResult>,
}

impl Report {
    pub fn new(flags: Flags, results: Vec<CheckResult>) -> Self {
        Report { version: REPORT_VERSION.to_string(), flags, results }
    }

    pub fn count(&self, s: Status) -> usize {
        self.results.iter().filter(|r| r.status == s).count()
    }

    pub fn flagged(&self) -> Vec<&CheckResult> {
        self.results.iter().filter(|r| r.status == Status::Flagged).collect()
    }

    /// 0 when nothing failed, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.count(Status::Fail) == 0 {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> serde_json::Result<String> {
        serde_json::to_string_pretty(self)
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn status() -> impl Strategy<Value = Status> {
        prop_oneof![Just(Status::Pass), Just(Status::Fail), Just(Status::Flagged)]
    }

    fn result() -> impl Strategy<Value = CheckResult> {
        ("[a-z_.]{1,20}", status(), "\\PC{0,30}", "\\PC{0,30}", "[a-z :]{0,20}").prop_map(
            |(check_id, status, expected, actual, citation)| CheckResult { check_id, status, expected, actual, citation },
        )
    }

    proptest! {
        #[test]
        fn json_round_trips(
            results in proptest::collection::vec(result(), 0..8),
            order in 1usize..500,
            height in 1i64..100_000,
            pmax in 7u64..100_000,
            json in proptest::option::of("[a-z/]{1,12}"),
            quiet: bool,
        ) {
            let r = Report::new(Flags { order, height, pmax, json, quiet }, results);
            prop_assert_eq!(Report::from_json(&r.to_json().unwrap()).unwrap(), r);
        }

        #[test]
        fn exit_code_tracks_failures(results in proptest::collection::vec(result(), 0..8)) {
            let r = Report::new(Flags::default(), results);
            let any_fail = r.results.iter().any(|c| c.status == Status::Fail);
            prop_assert_eq!(r.exit_code(), i32::from(any_fail));
        }
    }

    #[test]
    fn schema_keys() {
        let r = Report::new(Flags::default(), vec![CheckResult::erratum("a.b", true, "p", "q", "c")]);
        let v: serde_json::Value = serde_json::from_str(&r.to_json().unwrap()).unwrap();
        assert_eq!(v["version"], "1");
        assert_eq!(v["flags"]["order"], 60);
        assert_eq!(v["results"][0]["status"], "flagged");
        for k in ["check_id", "status", "expected", "actual", "citation"] {
            assert!(v["results"][0].get(k).is_some(), "{k}");
        }
    }

    #[test]
    fn erratum_status() {
        assert_eq!(CheckResult::erratum("x", true, "", "", "").status, Status::Flagged);
        assert_eq!(CheckResult::erratum("x", false, "", "", "").status, Status::Fail);
        let e = CheckResult::from_error("x", "ok", "boom", "c");
        assert_eq!((e.status, e.actual.as_str()), (Status::Fail, "error: boom"));
    }
}
