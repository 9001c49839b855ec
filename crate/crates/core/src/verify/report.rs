use std::fmt;

use serde::Serialize;

use crate::curve::CurveParams;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Inconclusive => "inconclusive",
            Status::Skipped => "skipped",
        })
    }
}

/// One named comparison of an expected and a computed value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub n: Option<u32>,
    pub k: Option<u32>,
    pub j: Option<u32>,
    pub status: Status,
    pub expected: String,
    pub actual: String,
    pub millis: u64,
}

impl CheckResult {
    /// Pass iff the two strings are identical.
    pub fn compare(name: &str, expected: impl ToString, actual: impl ToString) -> Self {
        let (expected, actual) = (expected.to_string(), actual.to_string());
        CheckResult {
            name: name.to_string(),
            n: None,
            k: None,
            j: None,
            status: if expected == actual { Status::Pass } else { Status::Fail },
            expected,
            actual,
            millis: 0,
        }
    }

    pub fn with_status(name: &str, status: Status, expected: impl ToString, actual: impl ToString) -> Self {
        CheckResult {
            status,
            ..Self::compare(name, expected, actual)
        }
    }

    pub fn n(mut self, n: u32) -> Self {
        self.n = Some(n);
        self
    }

    pub fn kj(mut self, k: u32, j: u32) -> Self {
        self.k = Some(k);
        self.j = Some(j);
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    fn sort_key(&self) -> (&str, Option<u32>, Option<u32>, Option<u32>) {
        (&self.name, self.n, self.k, self.j)
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub inconclusive: usize,
    pub skipped: usize,
}

impl Summary {
    pub fn tally<'a, I: IntoIterator<Item = &'a CheckResult>>(checks: I) -> Self {
        let mut s = Summary::default();
        for c in checks {
            match c.status {
                Status::Pass => s.pass += 1,
                Status::Fail => s.fail += 1,
                Status::Inconclusive => s.inconclusive += 1,
                Status::Skipped => s.skipped += 1,
            }
        }
        s
    }

    pub fn add(&mut self, other: Summary) {
        self.pass += other.pass;
        self.fail += other.fail;
        self.inconclusive += other.inconclusive;
        self.skipped += other.skipped;
    }

    /// 0 all pass, 1 any failure, 3 inconclusive without failures.
    pub fn exit_code(&self) -> i32 {
        if self.fail > 0 {
            1
        } else if self.inconclusive > 0 {
            3
        } else {
            0
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ParamsView {
    pub q: u32,
    pub m: u32,
    pub d: u32,
    pub e: u32,
}

impl From<CurveParams> for ParamsView {
    fn from(p: CurveParams) -> Self {
        ParamsView {
            q: p.q(),
            m: p.m(),
            d: p.d(),
            e: p.e(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub params: ParamsView,
    pub checks: Vec<CheckResult>,
    pub summary: Summary,
}

impl VerificationReport {
    /// Sorts checks by name and parameters and recomputes the summary.
    pub fn new(params: CurveParams, mut checks: Vec<CheckResult>) -> Self {
        checks.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
        let summary = Summary::tally(&checks);
        VerificationReport {
            params: params.into(),
            checks,
            summary,
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn csv_header() -> [&'static str; 10] {
        ["q", "m", "name", "n", "k", "j", "status", "expected", "actual", "millis"]
    }

    pub fn csv_records(&self) -> Vec<[String; 10]> {
        let opt = |v: Option<u32>| v.map(|x| x.to_string()).unwrap_or_default();
        self.checks
            .iter()
            .map(|c| {
                [
                    self.params.q.to_string(),
                    self.params.m.to_string(),
                    c.name.clone(),
                    opt(c.n),
                    opt(c.k),
                    opt(c.j),
                    c.status.to_string(),
                    c.expected.clone(),
                    c.actual.clone(),
                    c.millis.to_string(),
                ]
            })
            .collect()
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(Self::csv_header()).expect("in-memory write");
        for r in self.csv_records() {
            w.write_record(&r).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("utf8")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "curve q={} m={} d={} e={}\n",
            self.params.q, self.params.m, self.params.d, self.params.e
        );
        for c in &self.checks {
            let mut tag = c.name.clone();
            for (label, v) in [("n", c.n), ("k", c.k), ("j", c.j)] {
                if let Some(v) = v {
                    tag.push_str(&format!(" {label}={v}"));
                }
            }
            out.push_str(&format!("{:<13} {tag}", format!("[{}]", c.status)));
            if c.status == Status::Pass {
                out.push_str(&format!(": {}\n", c.actual));
            } else {
                out.push_str(&format!(": expected {}, got {}\n", c.expected, c.actual));
            }
        }
        let s = self.summary;
        out.push_str(&format!(
            "summary: {} pass, {} fail, {} inconclusive, {} skipped\n",
            s.pass, s.fail, s.inconclusive, s.skipped
        ));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn summary_matches_tally_and_order_is_stable() {
        let p = CurveParams::new(1, 1).unwrap();
        let checks = vec![
            CheckResult::compare("b", 1, 2).n(2),
            CheckResult::compare("a", 1, 1).n(3),
            CheckResult::compare("a", 1, 1).n(1),
            CheckResult::with_status("c", Status::Inconclusive, "x", "budget"),
        ];
        let r = VerificationReport::new(p, checks);
        assert_eq!(r.summary, Summary { pass: 2, fail: 1, inconclusive: 1, skipped: 0 });
        let names: Vec<_> = r.checks.iter().map(|c| (c.name.as_str(), c.n)).collect();
        assert_eq!(names, vec![("a", Some(1)), ("a", Some(3)), ("b", Some(2)), ("c", None)]);
        assert_eq!(r.summary.exit_code(), 1);
    }

    #[test]
    fn json_schema_fields() {
        let p = CurveParams::new(1, 1).unwrap();
        let r = VerificationReport::new(p, vec![CheckResult::compare("x", "5/2", "5/2").n(1)]);
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["params"]["e"], 5);
        assert_eq!(v["checks"][0]["status"], "pass");
        assert_eq!(v["checks"][0]["expected"], "5/2");
        assert!(v["checks"][0]["k"].is_null());
        assert_eq!(v["summary"]["pass"], 1);
    }

    #[test]
    fn csv_quotes_commas() {
        let p = CurveParams::new(1, 1).unwrap();
        let r = VerificationReport::new(p, vec![CheckResult::compare("x", "(x2, x3)", "(x2, x3)")]);
        let csv = r.to_csv();
        assert!(csv.starts_with("q,m,name,n,k,j,status,expected,actual,millis\n"));
        assert!(csv.contains("\"(x2, x3)\""));
    }
}
