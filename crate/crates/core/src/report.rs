//! Certificate report and its text and markdown renderings.
//!
//! Both renderings depend only on the report contents, which the pipeline
//! fills deterministically. Wall-clock timings are kept outside the
//! rendered certificate.

use std::fmt::Write;
use std::time::Duration;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        }
    }

    pub fn of(ok: bool) -> Status {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Table {
    pub name: String,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(name: impl Into<String>, header: &[&str]) -> Self {
        Table { name: name.into(), header: header.iter().map(|s| s.to_string()).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<String>) {
        self.rows.push(row);
    }
}

/// One stage of the certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Section {
    pub name: &'static str,
    pub status: Status,
    pub entries: Vec<(String, String)>,
    /// Named checks; the stage passes only if all of them hold.
    pub checks: Vec<(String, bool)>,
    pub tables: Vec<Table>,
    pub notes: Vec<String>,
}

impl Section {
    pub fn new(name: &'static str) -> Self {
        Section { name, status: Status::Pass, entries: Vec::new(), checks: Vec::new(), tables: Vec::new(), notes: Vec::new() }
    }

    pub fn skipped(name: &'static str) -> Self {
        Section { status: Status::Skipped, ..Section::new(name) }
    }

    pub fn entry(&mut self, key: &str, value: impl ToString) {
        self.entries.push((key.to_string(), value.to_string()));
    }

    pub fn check(&mut self, key: &str, ok: bool) {
        self.checks.push((key.to_string(), ok));
        if !ok {
            self.status = Status::Fail;
        }
    }

    pub fn fail(&mut self, note: impl Into<String>) {
        self.status = Status::Fail;
        self.notes.push(note.into());
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    pub fn check_passed(&self, key: &str) -> Option<bool> {
        self.checks.iter().find(|(k, _)| k == key).map(|(_, v)| *v)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixtureRecord {
    pub name: String,
    pub sha256: String,
    /// `match`, `mismatch`, `missing` or `unused`.
    pub status: String,
}

#[derive(Clone, Debug, Default)]
pub struct CertificateReport {
    pub tool: String,
    pub config: Vec<(String, String)>,
    pub sections: Vec<Section>,
    pub fixtures: Vec<FixtureRecord>,
    pub diffs: Vec<crate::fixtures::FixtureDiff>,
    pub timings: Vec<(&'static str, Duration)>,
}

impl CertificateReport {
    pub fn verdict(&self) -> bool {
        self.sections.iter().all(|s| s.status != Status::Fail)
            && self.fixtures.iter().all(|f| f.status == "match" || f.status == "unused")
    }

    pub fn section(&self, name: &str) -> Option<&Section> {
        self.sections.iter().find(|s| s.name == name)
    }

    /// Look up `section.key` among entries.
    pub fn value(&self, key: &str) -> Option<&str> {
        let (s, k) = key.split_once('.')?;
        self.section(s)?.get(k)
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "certificate.tool = {}", self.tool);
        let _ = writeln!(out, "certificate.verdict = {}", if self.verdict() { "pass" } else { "fail" });
        for (k, v) in &self.config {
            let _ = writeln!(out, "config.{k} = {v}");
        }
        for f in &self.fixtures {
            let _ = writeln!(out, "fixture.{}.sha256 = {}", f.name, f.sha256);
            let _ = writeln!(out, "fixture.{}.status = {}", f.name, f.status);
        }
        for d in &self.diffs {
            let _ = writeln!(
                out,
                "fixture_diff.{}.{} = expected {:?} computed {:?}",
                d.fixture, d.index, d.expected, d.computed
            );
        }
        for s in &self.sections {
            let _ = writeln!(out);
            let _ = writeln!(out, "{}.status = {}", s.name, s.status.as_str());
            for (k, v) in &s.entries {
                let _ = writeln!(out, "{}.{} = {}", s.name, k, v);
            }
            for (k, ok) in &s.checks {
                let _ = writeln!(out, "{}.check.{} = {}", s.name, k, if *ok { "pass" } else { "fail" });
            }
            for (i, n) in s.notes.iter().enumerate() {
                let _ = writeln!(out, "{}.note.{} = {}", s.name, i, n);
            }
            for t in &s.tables {
                let _ = writeln!(out, "{}.table.{} =", s.name, t.name);
                let _ = writeln!(out, "\t{}", t.header.join("\t"));
                for r in &t.rows {
                    let _ = writeln!(out, "\t{}", r.join("\t"));
                }
            }
        }
        out
    }

    pub fn render_markdown(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "# Certificate\n");
        let _ = writeln!(out, "- tool: `{}`", self.tool);
        let _ = writeln!(out, "- verdict: **{}**", if self.verdict() { "pass" } else { "fail" });
        for (k, v) in &self.config {
            let _ = writeln!(out, "- {k}: `{v}`");
        }
        let _ = writeln!(out, "\n## Fixtures\n");
        let _ = writeln!(out, "| fixture | status | sha256 |");
        let _ = writeln!(out, "|---|---|---|");
        for f in &self.fixtures {
            let _ = writeln!(out, "| {} | {} | `{}` |", f.name, f.status, f.sha256);
        }
        if !self.diffs.is_empty() {
            let _ = writeln!(out, "\n### Fixture differences\n");
            for d in &self.diffs {
                let _ = writeln!(
                    out,
                    "- `{}` data line {}: expected `{}`, computed `{}`",
                    d.fixture, d.index, d.expected, d.computed
                );
            }
        }
        for s in &self.sections {
            let _ = writeln!(out, "\n## {} ({})\n", s.name, s.status.as_str());
            for (k, v) in &s.entries {
                let _ = writeln!(out, "- {k}: {v}");
            }
            for (k, ok) in &s.checks {
                let _ = writeln!(out, "- check `{k}`: {}", if *ok { "pass" } else { "**fail**" });
            }
            for n in &s.notes {
                let _ = writeln!(out, "\n> {n}");
            }
            for t in &s.tables {
                let _ = writeln!(out, "\n### {}\n", t.name);
                let _ = writeln!(out, "| {} |", t.header.join(" | "));
                let _ = writeln!(out, "|{}", "---|".repeat(t.header.len()));
                for r in &t.rows {
                    let _ = writeln!(out, "| {} |", r.join(" | "));
                }
            }
        }
        out
    }

    pub fn render_timings(&self) -> String {
        let mut out = String::new();
        for (k, d) in &self.timings {
            let _ = writeln!(out, "{k}\t{:.3}s", d.as_secs_f64());
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failing_check_fails_section_and_verdict() {
        let mut s = Section::new("demo");
        s.entry("count", 3);
        s.check("count_is_three", true);
        let mut r = CertificateReport { tool: "t".into(), sections: vec![s.clone()], ..Default::default() };
        assert!(r.verdict());
        s.check("other", false);
        r.sections = vec![s, Section::skipped("later")];
        assert!(!r.verdict());
        let text = r.render_text();
        assert!(text.contains("demo.check.other = fail"));
        assert!(text.contains("later.status = skipped"));
        assert_eq!(r.value("demo.count"), Some("3"));
    }
}
