//! Aggregate run reports and their two renderings.

use std::fmt::Write as _;

use actegory_core::report::ProbeReport;
use actegory_core::CheckReport;
use serde::{Deserialize, Serialize};

use crate::error::CliError;
use crate::plan::{Bounds, Format};

pub const SCHEMA: &str = "actegory-report";
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunReport {
    pub schema: String,
    pub version: u32,
    pub plan: String,
    pub bounds: Bounds,
    /// Bounds that took their default values.
    pub defaulted: Vec<String>,
    pub seed: u64,
    /// One entry per palette that exceeded `max_palette` and was sampled.
    pub subsampling: Vec<String>,
    pub instances: Vec<InstanceReport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceReport {
    pub name: String,
    pub kind: String,
    /// Requested suites this instance does not support, with the reason.
    pub skipped: Vec<String>,
    /// Set when construction or a suite raised a structural error; the
    /// instance was abandoned at that point.
    pub error: Option<String>,
    pub suites: Vec<SuiteReport>,
    pub probe: Option<ProbeReport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<CheckReport>,
}

impl SuiteReport {
    pub fn failures(&self) -> usize {
        self.checks.iter().map(|c| c.failures.len()).sum()
    }

    pub fn instances(&self) -> usize {
        self.checks.iter().map(|c| c.instance_count()).sum()
    }
}

impl InstanceReport {
    pub fn new(name: &str, kind: &str) -> Self {
        InstanceReport {
            name: name.into(),
            kind: kind.into(),
            skipped: Vec::new(),
            error: None,
            suites: Vec::new(),
            probe: None,
        }
    }

    pub fn failures(&self) -> usize {
        self.suites.iter().map(SuiteReport::failures).sum()
    }
}

impl RunReport {
    pub fn failures(&self) -> usize {
        self.instances.iter().map(InstanceReport::failures).sum()
    }

    pub fn errors(&self) -> usize {
        self.instances.iter().filter(|i| i.error.is_some()).count()
    }

    /// 0 when clean, 1 on axiom failures, 2 when any instance errored.
    pub fn exit_code(&self) -> i32 {
        if self.errors() > 0 {
            2
        } else if self.failures() > 0 {
            1
        } else {
            0
        }
    }
}

pub fn emit_report(report: &RunReport, format: Format) -> Result<String, CliError> {
    match format {
        Format::Human => Ok(human(report)),
        Format::Machine => serde_json::to_string_pretty(report).map(|s| s + "\n").map_err(|e| CliError::Report(e.to_string())),
    }
}

/// Reads a machine report back.
pub fn parse_report(text: &str) -> Result<RunReport, CliError> {
    let r: RunReport = serde_json::from_str(text).map_err(|e| CliError::Report(e.to_string()))?;
    if r.schema != SCHEMA || r.version != SCHEMA_VERSION {
        return Err(CliError::Report(format!("unsupported report schema {} v{}", r.schema, r.version)));
    }
    Ok(r)
}

fn human(r: &RunReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "plan {} (report schema v{})", r.plan, r.version);
    let _ = writeln!(
        out,
        "bounds: carriers of size <= {}, at most {} palette objects, seed {}",
        r.bounds.max_size, r.bounds.max_palette, r.seed
    );
    for d in &r.defaulted {
        let _ = writeln!(out, "default applied: {d}");
    }
    for s in &r.subsampling {
        let _ = writeln!(out, "subsampled: {s}");
    }
    for inst in &r.instances {
        let _ = writeln!(out);
        let _ = writeln!(out, "instance {} [{}]", inst.name, inst.kind);
        for s in &inst.suites {
            let verdict = if s.failures() == 0 { "PASS" } else { "FAIL" };
            let _ = writeln!(out, "  {verdict} {} ({} instances, {} failures)", s.suite, s.instances(), s.failures());
            for c in &s.checks {
                for line in c.to_string().lines() {
                    let _ = writeln!(out, "    {line}");
                }
            }
        }
        if let Some(p) = &inst.probe {
            let mut constraints: Vec<&str> = Vec::new();
            for e in &p.entries {
                if !constraints.contains(&e.constraint.as_str()) {
                    constraints.push(&e.constraint);
                }
            }
            for c in constraints {
                let all: Vec<_> = p.entries.iter().filter(|e| e.constraint == c).collect();
                let inv = all.iter().filter(|e| e.invertible).count();
                let _ = write!(out, "  probe {c}: {inv}/{} invertible", all.len());
                match all.iter().find(|e| !e.invertible) {
                    Some(e) => {
                        let w = e.witness.as_ref().map(|w| w.to_string()).unwrap_or_default();
                        let _ = writeln!(out, "; not at ({}): {w}", e.objects.join(", "));
                    }
                    None => {
                        let _ = writeln!(out);
                    }
                }
            }
        }
        for s in &inst.skipped {
            let _ = writeln!(out, "  skipped {s}");
        }
        if let Some(e) = &inst.error {
            let _ = writeln!(out, "  ERROR {e}");
        }
    }
    let _ = writeln!(out);
    let _ = writeln!(
        out,
        "summary: {} instance(s), {} failure(s), {} error(s)",
        r.instances.len(),
        r.failures(),
        r.errors()
    );
    out
}
