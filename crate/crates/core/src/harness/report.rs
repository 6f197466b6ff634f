//! JSON and fixed-width text rendering of harness results.
//!
//! JSON objects use sorted keys and contain no floats, so a report parsed and
//! re-serialized is byte-identical. Run times are only emitted on request;
//! otherwise `runtime_ms` is `null` and two runs produce identical output.

use std::fmt::Write;

use serde_json::{json, Map, Value};

use super::{Analysis, CorpusReport, EntryResult, SweepReport, Violation};
use crate::group::ConjugacyClass;

pub const ARTIFACT_VERSION: &str = env!("CARGO_PKG_VERSION");

fn runtime(ms: u64, timing: bool) -> Value {
    if timing {
        json!(ms)
    } else {
        Value::Null
    }
}

fn class_json(c: &ConjugacyClass) -> Value {
    json!({
        "rep_cycles": c.representative.to_string(),
        "order": c.element_order,
        "class_size": c.size(),
        "centralizer_order": c.centralizer_order,
    })
}

fn violation_json(v: &Violation) -> Value {
    json!({ "group": v.group, "check": v.check, "detail": v.detail })
}

fn entry_json(e: &EntryResult) -> Value {
    let checks: Map<String, Value> = e
        .checks
        .named()
        .iter()
        .map(|(k, o)| (k.to_string(), json!(o.as_str())))
        .collect();
    json!({
        "name": e.name,
        "order": e.order(),
        "defect": e.defect(),
        "deficient_classes": e.deficiency.deficient_classes.iter().map(class_json).collect::<Vec<_>>(),
        "verdict": e.verdict(),
        "checks": checks,
        "expected": e.expected.as_ref().map(|x| x.to_string()),
        "match": e.matches,
    })
}

fn pad(text: &str, width: usize) -> String {
    format!("{text:<width$}")
}

fn entry_table(entries: &[EntryResult], out: &mut String) {
    let header = [
        ("name", 12),
        ("order", 6),
        ("defect", 6),
        ("verdict", 24),
        ("A1", 5),
        ("A2", 5),
        ("N", 5),
        ("GH", 14),
        ("expected", 40),
        ("match", 5),
    ];
    let line: Vec<String> = header.iter().map(|(h, w)| pad(h, *w)).collect();
    writeln!(out, "{}", line.join(" ").trim_end()).unwrap();
    for e in entries {
        let c = e.checks;
        let cells = [
            e.name.clone(),
            e.order().to_string(),
            e.defect().to_string(),
            e.verdict(),
            c.prop_a1.as_str().to_string(),
            c.prop_a2.as_str().to_string(),
            c.theorem_n.as_str().to_string(),
            c.theorem_gh.as_str().to_string(),
            e.expected.as_ref().map_or("-".to_string(), |x| x.to_string()),
            match e.matches {
                Some(true) => "yes".to_string(),
                Some(false) => "NO".to_string(),
                None => "-".to_string(),
            },
        ];
        let line: Vec<String> = cells
            .iter()
            .zip(header)
            .map(|(cell, (_, w))| pad(cell, w))
            .collect();
        writeln!(out, "{}", line.join(" ").trim_end()).unwrap();
    }
}

fn violations_text(violations: &[&Violation], out: &mut String) {
    writeln!(out, "violations: {}", violations.len()).unwrap();
    for v in violations {
        writeln!(out, "  {} [{}] {}", v.group, v.check, v.detail).unwrap();
    }
}

fn runtime_text(ms: u64, timing: bool, out: &mut String) {
    if timing {
        writeln!(out, "runtime_ms: {ms}").unwrap();
    }
}

impl CorpusReport {
    pub fn to_json(&self, timing: bool) -> Value {
        json!({
            "artifact_version": ARTIFACT_VERSION,
            "command": "verify-corpus",
            "entries": self.entries.iter().map(entry_json).collect::<Vec<_>>(),
            "violations": self.violations().map(violation_json).collect::<Vec<_>>(),
            "runtime_ms": runtime(self.runtime_ms, timing),
        })
    }

    pub fn to_text(&self, timing: bool) -> String {
        let mut out = String::new();
        entry_table(&self.entries, &mut out);
        writeln!(out, "mismatches: {}", self.mismatches()).unwrap();
        violations_text(&self.violations().collect::<Vec<_>>(), &mut out);
        runtime_text(self.runtime_ms, timing, &mut out);
        out
    }
}

impl SweepReport {
    pub fn to_json(&self, timing: bool) -> Value {
        let histogram: Map<String, Value> = self
            .defect_histogram
            .iter()
            .map(|(j, n)| (j.to_string(), json!(n)))
            .collect();
        let aggregate: Vec<Value> = self
            .aggregate
            .iter()
            .map(|((order, defect, verdict), count)| {
                json!({ "order": order, "defect": defect, "verdict": verdict, "count": count })
            })
            .collect();
        json!({
            "artifact_version": ARTIFACT_VERSION,
            "command": format!("sweep {}", &self.universe[2..]),
            "universe": self.universe,
            "subgroup_count": self.subgroup_count,
            "defect_histogram": histogram,
            "aggregate": aggregate,
            "checks_run": self.checks_run,
            "violations": self.violations.iter().map(violation_json).collect::<Vec<_>>(),
            "runtime_ms": runtime(self.runtime_ms, timing),
        })
    }

    pub fn to_text(&self, timing: bool) -> String {
        let mut out = String::new();
        writeln!(out, "universe: {}", self.universe).unwrap();
        writeln!(out, "subgroups: {}", self.subgroup_count).unwrap();
        let hist: Vec<String> = self
            .defect_histogram
            .iter()
            .map(|(j, n)| format!("{j}:{n}"))
            .collect();
        writeln!(out, "defect histogram: {}", hist.join(" ")).unwrap();
        let run: Vec<String> = self.checks_run.iter().map(|(k, n)| format!("{k}={n}")).collect();
        writeln!(out, "checks evaluated: {}", run.join(" ")).unwrap();
        writeln!(out, "{} {} {} count", pad("order", 6), pad("defect", 6), pad("verdict", 24)).unwrap();
        for ((order, defect, verdict), count) in &self.aggregate {
            writeln!(
                out,
                "{} {} {} {count}",
                pad(&order.to_string(), 6),
                pad(&defect.to_string(), 6),
                pad(verdict, 24)
            )
            .unwrap();
        }
        violations_text(&self.violations.iter().collect::<Vec<_>>(), &mut out);
        runtime_text(self.runtime_ms, timing, &mut out);
        out
    }
}

impl Analysis {
    pub fn to_json(&self, timing: bool) -> Value {
        let mut entry = entry_json(&self.result);
        let classes: Vec<Value> = self
            .classes
            .iter()
            .map(|(c, deficient)| {
                let mut v = class_json(c);
                v["deficient"] = json!(deficient);
                v
            })
            .collect();
        let profile: Map<String, Value> = self
            .order_profile
            .iter()
            .map(|(o, n)| (o.to_string(), json!(n)))
            .collect();
        entry["classes"] = json!(classes);
        entry["order_profile"] = json!(profile);
        json!({
            "artifact_version": ARTIFACT_VERSION,
            "command": "analyze",
            "entries": [entry],
            "violations": self.result.violations.iter().map(violation_json).collect::<Vec<_>>(),
            "runtime_ms": runtime(self.runtime_ms, timing),
        })
    }

    pub fn to_text(&self, timing: bool) -> String {
        let r = &self.result;
        let mut out = String::new();
        writeln!(out, "group: {}", self.spec).unwrap();
        writeln!(out, "order: {}", r.order()).unwrap();
        let profile: Vec<String> = self.order_profile.iter().map(|(o, n)| format!("{o}:{n}")).collect();
        writeln!(out, "element orders: {}", profile.join(" ")).unwrap();
        writeln!(
            out,
            "{} {} {} {} deficient",
            pad("representative", 28),
            pad("order", 6),
            pad("size", 6),
            pad("|C(x)|", 8)
        )
        .unwrap();
        for (c, deficient) in &self.classes {
            writeln!(
                out,
                "{} {} {} {} {}",
                pad(&c.representative.to_string(), 28),
                pad(&c.element_order.to_string(), 6),
                pad(&c.size().to_string(), 6),
                pad(&c.centralizer_order.to_string(), 8),
                if *deficient { "yes" } else { "no" }
            )
            .unwrap();
        }
        writeln!(out, "defect: {}", r.defect()).unwrap();
        writeln!(out, "verdict: {}", r.verdict()).unwrap();
        for (key, outcome) in r.checks.named() {
            writeln!(out, "{key}: {}", outcome.as_str()).unwrap();
        }
        violations_text(&r.violations.iter().collect::<Vec<_>>(), &mut out);
        runtime_text(self.runtime_ms, timing, &mut out);
        out
    }
}

#[cfg(test)]
mod tests {
    use super::super::*;

    #[test]
    fn json_round_trips_byte_identically() {
        let entries: Vec<CorpusEntry> =
            corpus().into_iter().filter(|e| e.name.starts_with('C')).collect();
        let report = verify_entries(&entries, Limits::default()).unwrap();
        let text = serde_json::to_string_pretty(&report.to_json(false)).unwrap();
        let parsed: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(serde_json::to_string_pretty(&parsed).unwrap(), text);
        assert!(parsed["runtime_ms"].is_null());
        let keys: Vec<&String> = parsed["entries"][0].as_object().unwrap().keys().collect();
        assert_eq!(
            keys,
            ["checks", "defect", "deficient_classes", "expected", "match", "name", "order", "verdict"]
        );
    }

    #[test]
    fn timing_is_opt_in() {
        let report = sweep(3, Limits::default()).unwrap();
        assert!(report.to_json(false)["runtime_ms"].is_null());
        assert!(report.to_json(true)["runtime_ms"].is_u64());
        assert!(!report.to_text(false).contains("runtime_ms"));
    }

    #[test]
    fn analysis_lists_every_class() {
        let a = analyze(&"sym:4".parse().unwrap(), Limits::default()).unwrap();
        let json = a.to_json(false);
        assert_eq!(json["entries"][0]["classes"].as_array().unwrap().len(), 5);
        assert_eq!(json["entries"][0]["order_profile"]["2"], 9);
        let text = a.to_text(false);
        assert!(text.contains("defect: 2"));
        assert!(text.contains("verdict: OutsideD0D1(2)"));
    }
}
