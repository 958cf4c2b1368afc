use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::SuiteConfig;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ReportFormat {
    Text,
    Structured,
}

impl FromStr for ReportFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(ReportFormat::Text),
            "structured" | "jsonl" => Ok(ReportFormat::Structured),
            _ => Err(Error::Argument(format!("unknown report format `{s}` (text|structured)"))),
        }
    }
}

/// `Abort` is a third state: the check neither passed nor failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Abort,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Abort => "abort",
        }
    }
}

/// One check on one instance. `defect` is `0`, the serialized nonzero
/// defect, or the abort reason.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub index: usize,
    pub check: String,
    pub verdict: Verdict,
    pub input: Vec<String>,
    pub defect: String,
}

impl CheckRecord {
    pub(crate) fn from_outcome(
        index: usize,
        check: String,
        input: Vec<String>,
        result: Result<Option<String>>,
    ) -> Self {
        let (verdict, defect) = match result {
            Ok(None) => (Verdict::Pass, "0".to_string()),
            Ok(Some(d)) => (Verdict::Fail, d),
            Err(e) => (Verdict::Abort, e.to_string()),
        };
        CheckRecord {
            index,
            check,
            verdict,
            input,
            defect,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FirstFailure {
    pub index: usize,
    pub check: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub checks: usize,
    pub passed: usize,
    pub failed: usize,
    pub aborted: usize,
    pub first_failure: Option<FirstFailure>,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub config: SuiteConfig,
    pub records: Vec<CheckRecord>,
    pub summary: Summary,
}

#[derive(Serialize)]
struct Tagged<'a, T> {
    record: &'static str,
    suite: &'a str,
    #[serde(flatten)]
    body: &'a T,
}

#[derive(Serialize)]
struct SummaryLine<'a> {
    config: &'a SuiteConfig,
    #[serde(flatten)]
    summary: &'a Summary,
}

impl VerificationReport {
    pub fn new(config: SuiteConfig, records: Vec<CheckRecord>) -> Self {
        let count = |v| records.iter().filter(|r| r.verdict == v).count();
        let (passed, failed, aborted) = (count(Verdict::Pass), count(Verdict::Fail), count(Verdict::Abort));
        let first_failure = records
            .iter()
            .find(|r| r.verdict == Verdict::Fail)
            .map(|r| FirstFailure {
                index: r.index,
                check: r.check.clone(),
            });
        let verdict = if failed > 0 {
            Verdict::Fail
        } else if aborted > 0 {
            Verdict::Abort
        } else {
            Verdict::Pass
        };
        let summary = Summary {
            checks: records.len(),
            passed,
            failed,
            aborted,
            first_failure,
            verdict,
        };
        VerificationReport {
            config,
            records,
            summary,
        }
    }

    pub fn passed(&self) -> bool {
        self.summary.verdict == Verdict::Pass
    }

    /// 0 when every defect vanished, 1 on any nonzero defect, 3 when only
    /// aborts (term cap) prevented a verdict.
    pub fn exit_code(&self) -> i32 {
        match self.summary.verdict {
            Verdict::Pass => 0,
            Verdict::Fail => 1,
            Verdict::Abort => 3,
        }
    }

    /// Records of one check id.
    pub fn checks<'a>(&'a self, check: &'a str) -> impl Iterator<Item = &'a CheckRecord> + 'a {
        self.records.iter().filter(move |r| r.check == check)
    }

    /// Line-delimited JSON: one `check` record per line, then a `summary`.
    /// Contains no timings, so equal configurations give equal bytes.
    pub fn to_structured(&self) -> String {
        let suite = self.config.suite.name();
        let mut out = String::new();
        for r in &self.records {
            let line = Tagged {
                record: "check",
                suite,
                body: r,
            };
            out.push_str(&serde_json::to_string(&line).expect("records serialize"));
            out.push('\n');
        }
        let summary = SummaryLine {
            config: &self.config,
            summary: &self.summary,
        };
        let line = Tagged {
            record: "summary",
            suite,
            body: &summary,
        };
        out.push_str(&serde_json::to_string(&line).expect("summary serializes"));
        out.push('\n');
        out
    }

    /// Human-readable form: failures and aborts in full, passes counted.
    pub fn to_text(&self) -> String {
        let c = &self.config;
        let s = &self.summary;
        let mut out = String::new();
        let model = match c.model {
            super::ModelKind::Forms => format!(
                "forms(n={}, degree<={}, d={})",
                c.n_coords,
                c.max_poly_degree,
                if c.differential { "on" } else { "off" }
            ),
            super::ModelKind::Formal => "formal".to_string(),
        };
        let _ = writeln!(out, "suite {}  model {}  seed {}  samples {}", c.suite, model, c.seed, c.samples);
        if let Some(m) = c.mutation {
            let _ = writeln!(out, "mutation {m}");
        }
        let all = c.suite == super::SuiteId::MutationSanity;
        for r in self.records.iter().filter(|r| all || r.verdict != Verdict::Pass) {
            let _ = writeln!(out, "{} #{} {}", r.verdict.as_str().to_uppercase(), r.index, r.check);
            for (k, i) in r.input.iter().enumerate() {
                let _ = writeln!(out, "    input[{k}] = {i}");
            }
            let _ = writeln!(out, "    defect   = {}", r.defect);
        }
        let _ = writeln!(
            out,
            "{}: {} checks, {} passed, {} failed, {} aborted",
            s.verdict.as_str().to_uppercase(),
            s.checks,
            s.passed,
            s.failed,
            s.aborted
        );
        out
    }

    pub fn render(&self) -> String {
        match self.config.report_format {
            ReportFormat::Text => self.to_text(),
            ReportFormat::Structured => self.to_structured(),
        }
    }
}
