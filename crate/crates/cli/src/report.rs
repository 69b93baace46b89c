//! JSON-lines reports and the human summary.
//!
//! The first line is a header describing the corpus; every further line is
//! one check result `{check, group, verdict, witness, millis}`.

use std::fmt::Write as _;

use codegree_core::verify::{CheckResult, Verdict, WitnessValue, CORPUS_LIMITATIONS};
use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

#[derive(Serialize)]
struct Header<'a> {
    corpus: CorpusHeader<'a>,
}

#[derive(Serialize)]
struct CorpusHeader<'a> {
    max_order: Option<usize>,
    groups: Option<usize>,
    suites: &'a [&'a str],
    limitations: &'a str,
}

#[derive(Serialize)]
struct Line<'a> {
    check: &'a str,
    group: &'a str,
    verdict: &'a str,
    witness: WitnessMap<'a>,
    millis: Option<u64>,
}

/// Witness entries in insertion order.
struct WitnessMap<'a>(&'a [(&'static str, WitnessValue)]);

impl Serialize for WitnessMap<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (key, value) in self.0 {
            match value {
                WitnessValue::Int(v) => map.serialize_entry(key, v)?,
                WitnessValue::List(v) => map.serialize_entry(key, v)?,
                WitnessValue::Text(v) => map.serialize_entry(key, v)?,
                WitnessValue::Bool(v) => map.serialize_entry(key, v)?,
            }
        }
        map.end()
    }
}

/// What the header says about the run; `None` when no corpus was built.
pub struct RunInfo<'a> {
    pub max_order: Option<usize>,
    pub groups: Option<usize>,
    pub suites: &'a [&'a str],
}

pub fn jsonl(info: &RunInfo<'_>, results: &[CheckResult]) -> String {
    let header = Header {
        corpus: CorpusHeader {
            max_order: info.max_order,
            groups: info.groups,
            suites: info.suites,
            limitations: CORPUS_LIMITATIONS,
        },
    };
    let mut out = serde_json::to_string(&header).expect("plain data serializes");
    out.push('\n');
    for r in results {
        out.push_str(&result_line(r));
        out.push('\n');
    }
    out
}

pub fn result_line(r: &CheckResult) -> String {
    let line = Line {
        check: r.check,
        group: &r.group,
        verdict: r.verdict.as_str(),
        witness: WitnessMap(&r.witness),
        millis: r.millis,
    };
    serde_json::to_string(&line).expect("plain data serializes")
}

/// Pass, fail and skip counts per check in order of first appearance,
/// followed by every failing result.
pub fn summary(results: &[CheckResult]) -> String {
    let mut rows: Vec<(&str, &str, [usize; 3])> = Vec::new();
    for r in results {
        let i = match rows.iter().position(|row| row.1 == r.check) {
            Some(i) => i,
            None => {
                rows.push((r.suite.id(), r.check, [0; 3]));
                rows.len() - 1
            }
        };
        let slot = match r.verdict {
            Verdict::Pass => 0,
            Verdict::Fail => 1,
            Verdict::Skipped => 2,
        };
        rows[i].2[slot] += 1;
    }
    let mut out = String::new();
    writeln!(out, "{:<14} {:<36} {:>6} {:>6} {:>8}", "suite", "check", "pass", "fail", "skipped").unwrap();
    for (suite, check, [pass, fail, skipped]) in &rows {
        writeln!(out, "{suite:<14} {check:<36} {pass:>6} {fail:>6} {skipped:>8}").unwrap();
    }
    let failures: Vec<&CheckResult> = results.iter().filter(|r| r.verdict == Verdict::Fail).collect();
    let total = |v: Verdict| results.iter().filter(|r| r.verdict == v).count();
    writeln!(
        out,
        "total: {} pass, {} fail, {} skipped",
        total(Verdict::Pass),
        failures.len(),
        total(Verdict::Skipped)
    )
    .unwrap();
    if !failures.is_empty() {
        out.push_str("failures:\n");
        for r in failures {
            writeln!(out, "  {}", result_line(r)).unwrap();
        }
    }
    out
}
