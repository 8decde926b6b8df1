//! Check-plan documents.
//!
//! A plan is a TOML file:
//!
//! ```toml
//! version = 1
//! name = "z2"
//! suites = ["skew", "lax"]
//!
//! [bounds]
//! max_size = 2
//! max_palette = 8
//!
//! [[instances]]
//! kind = "monoid"
//! preset = "Z2"
//! ```
//!
//! Unknown fields are rejected everywhere.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::CliError;

pub const PLAN_VERSION: u32 = 1;
pub const DEFAULT_MAX_SIZE: usize = 2;
pub const DEFAULT_MAX_PALETTE: usize = 8;

/// The fixed suite vocabulary of plan documents.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Skew,
    Action,
    Adjunction,
    Lax,
    Oplax,
    BraidingLeft,
    BraidingRight,
    Symmetry,
    Closedness,
    Probes,
    TheoremChecks,
}

impl Suite {
    pub const ALL: [Suite; 11] = [
        Suite::Skew,
        Suite::Action,
        Suite::Adjunction,
        Suite::Lax,
        Suite::Oplax,
        Suite::BraidingLeft,
        Suite::BraidingRight,
        Suite::Symmetry,
        Suite::Closedness,
        Suite::Probes,
        Suite::TheoremChecks,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Skew => "skew",
            Suite::Action => "action",
            Suite::Adjunction => "adjunction",
            Suite::Lax => "lax",
            Suite::Oplax => "oplax",
            Suite::BraidingLeft => "braiding-left",
            Suite::BraidingRight => "braiding-right",
            Suite::Symmetry => "symmetry",
            Suite::Closedness => "closedness",
            Suite::Probes => "probes",
            Suite::TheoremChecks => "theorem-checks",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

/// A suite entry as written: a suite name or `"all"`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SuiteSelection {
    All,
    Only(Suite),
}

impl<'de> Deserialize<'de> for SuiteSelection {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        if s == "all" {
            return Ok(SuiteSelection::All);
        }
        s.parse().map(SuiteSelection::Only).map_err(|e: String| {
            let names: Vec<&str> = Suite::ALL.iter().map(|s| s.name()).collect();
            serde::de::Error::custom(format!("{e}; expected \"all\" or one of {}", names.join(", ")))
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Format {
    Human,
    Machine,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "human" => Ok(Format::Human),
            "machine" => Ok(Format::Machine),
            _ => Err(format!("unknown format {s:?}; expected human or machine")),
        }
    }
}

/// Palette bounds as recorded in reports.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Bounds {
    /// Carriers range over `{0..n}` for `n ≤ max_size`.
    pub max_size: usize,
    /// Palettes longer than this are subsampled with the plan seed.
    pub max_palette: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds { max_size: DEFAULT_MAX_SIZE, max_palette: DEFAULT_MAX_PALETTE }
    }
}

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawBounds {
    max_size: Option<usize>,
    max_palette: Option<usize>,
}

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawReport {
    path: Option<String>,
    format: Option<Format>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPlan {
    version: u32,
    name: Option<String>,
    #[serde(default)]
    suites: Vec<SuiteSelection>,
    bounds: Option<RawBounds>,
    seed: Option<u64>,
    report: Option<RawReport>,
    instances: Vec<InstanceSpec>,
}

/// Built-in monoids by name.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize)]
pub enum MonoidPreset {
    #[serde(rename = "trivial")]
    Trivial,
    Z2,
    Z3,
    /// `({0, 1}, ∨)`.
    #[serde(rename = "or")]
    Or,
}

#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MonoidSpec {
    pub label: Option<String>,
    pub preset: Option<MonoidPreset>,
    /// Row-major operation table, `table[a][b] = a·b`.
    pub table: Option<Vec<Vec<usize>>>,
    pub identity: Option<usize>,
    pub suites: Option<Vec<SuiteSelection>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SetParamSpec {
    pub label: Option<String>,
    /// Size of the fixed set `J`.
    pub j: usize,
    pub suites: Option<Vec<SuiteSelection>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SelfActionSpec {
    pub label: Option<String>,
    pub suites: Option<Vec<SuiteSelection>>,
}

/// A functor given by carrier sizes per object and, per generator in
/// listing order, the table of its image.
#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctorTable {
    pub values: Vec<usize>,
    #[serde(default)]
    pub maps: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KanSpec {
    pub label: Option<String>,
    pub objects: Vec<String>,
    /// Generators `(name, dom, cod)` by object index.
    #[serde(default)]
    pub arrows: Vec<(String, usize, usize)>,
    /// Composites `(g, f, g∘f)` among generators, indexed after the
    /// identities.
    #[serde(default)]
    pub composites: Vec<(usize, usize, usize)>,
    pub j: FunctorTable,
    pub suites: Option<Vec<SuiteSelection>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MutationSpec {
    pub label: Option<String>,
    /// Fixture names; empty means all.
    #[serde(default)]
    pub fixtures: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum InstanceSpec {
    Monoid(MonoidSpec),
    SelfAction(SelfActionSpec),
    Copower(SetParamSpec),
    Power(SetParamSpec),
    Exponential(SetParamSpec),
    Kan(KanSpec),
    Mutation(MutationSpec),
}

impl InstanceSpec {
    pub fn kind(&self) -> &'static str {
        match self {
            InstanceSpec::Monoid(_) => "monoid",
            InstanceSpec::SelfAction(_) => "self-action",
            InstanceSpec::Copower(_) => "copower",
            InstanceSpec::Power(_) => "power",
            InstanceSpec::Exponential(_) => "exponential",
            InstanceSpec::Kan(_) => "kan",
            InstanceSpec::Mutation(_) => "mutation",
        }
    }

    fn label(&self) -> Option<&String> {
        match self {
            InstanceSpec::Monoid(s) => s.label.as_ref(),
            InstanceSpec::SelfAction(s) => s.label.as_ref(),
            InstanceSpec::Copower(s) | InstanceSpec::Power(s) | InstanceSpec::Exponential(s) => s.label.as_ref(),
            InstanceSpec::Kan(s) => s.label.as_ref(),
            InstanceSpec::Mutation(s) => s.label.as_ref(),
        }
    }

    fn suites(&self) -> Option<&Vec<SuiteSelection>> {
        match self {
            InstanceSpec::Monoid(s) => s.suites.as_ref(),
            InstanceSpec::SelfAction(s) => s.suites.as_ref(),
            InstanceSpec::Copower(s) | InstanceSpec::Power(s) | InstanceSpec::Exponential(s) => s.suites.as_ref(),
            InstanceSpec::Kan(s) => s.suites.as_ref(),
            InstanceSpec::Mutation(_) => None,
        }
    }

    /// Suites this kind of instance can run.
    pub fn applicable(&self) -> &'static [Suite] {
        use Suite::*;
        match self {
            InstanceSpec::Monoid(_) => {
                &[Skew, Action, Adjunction, Lax, Oplax, BraidingLeft, Symmetry, Closedness, Probes, TheoremChecks]
            }
            InstanceSpec::SelfAction(_) => &[Skew, Action, Adjunction, Lax, Oplax, BraidingLeft, Symmetry, Probes, TheoremChecks],
            InstanceSpec::Copower(_) | InstanceSpec::Power(_) => &[Skew, Action, Adjunction, Probes, TheoremChecks],
            InstanceSpec::Exponential(_) => &[Skew, Action, Adjunction, BraidingRight, Symmetry, Probes, TheoremChecks],
            InstanceSpec::Kan(_) => &[Skew, Action, Adjunction, Lax, Oplax, Probes, TheoremChecks],
            InstanceSpec::Mutation(_) => &[],
        }
    }
}

/// One instance of a validated plan with its resolved suite list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlannedInstance {
    pub name: String,
    pub spec: InstanceSpec,
    pub suites: Vec<Suite>,
    /// Plan-level suites this kind cannot run.
    pub skipped: Vec<Suite>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckPlan {
    pub name: String,
    pub bounds: Bounds,
    /// Bounds the document left out and that took their defaults.
    pub defaulted: Vec<String>,
    pub seed: u64,
    pub report_path: Option<String>,
    pub format: Format,
    pub instances: Vec<PlannedInstance>,
}

fn expand(list: &[SuiteSelection]) -> Vec<Suite> {
    let mut out = Vec::new();
    for s in list {
        match s {
            SuiteSelection::All => out.extend(Suite::ALL),
            SuiteSelection::Only(s) => out.push(*s),
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Parses and validates a plan document.
pub fn parse_spec(text: &str) -> Result<CheckPlan, CliError> {
    let raw: RawPlan = toml::from_str(text).map_err(|e| CliError::Schema(e.to_string()))?;
    if raw.version != PLAN_VERSION {
        return Err(CliError::Schema(format!(
            "version: unsupported plan version {} (expected {PLAN_VERSION})",
            raw.version
        )));
    }
    let mut defaulted = Vec::new();
    let rb = raw.bounds.unwrap_or_default();
    let bounds = Bounds {
        max_size: rb.max_size.unwrap_or_else(|| {
            defaulted.push(format!("bounds.max_size = {DEFAULT_MAX_SIZE}"));
            DEFAULT_MAX_SIZE
        }),
        max_palette: rb.max_palette.unwrap_or_else(|| {
            defaulted.push(format!("bounds.max_palette = {DEFAULT_MAX_PALETTE}"));
            DEFAULT_MAX_PALETTE
        }),
    };
    if bounds.max_size < 1 {
        return Err(CliError::Schema(String::from("bounds.max_size: must be at least 1")));
    }
    if bounds.max_palette < 1 {
        return Err(CliError::Schema(String::from("bounds.max_palette: must be at least 1")));
    }
    if raw.instances.is_empty() {
        return Err(CliError::Schema(String::from("instances: at least one instance is required")));
    }
    let plan_suites = if raw.suites.is_empty() { Suite::ALL.to_vec() } else { expand(&raw.suites) };
    let mut instances = Vec::new();
    for (i, spec) in raw.instances.into_iter().enumerate() {
        validate_instance(i, &spec)?;
        let applicable = spec.applicable();
        let (suites, skipped) = match spec.suites() {
            Some(own) => {
                let own = expand(own);
                if let Some(bad) = own.iter().find(|s| !applicable.contains(s) && !own_is_all(spec.suites())) {
                    return Err(CliError::Schema(format!(
                        "instances[{i}].suites: {bad} does not apply to kind {}",
                        spec.kind()
                    )));
                }
                (own.into_iter().filter(|s| applicable.contains(s)).collect(), Vec::new())
            }
            None => plan_suites.iter().copied().partition(|s| applicable.contains(s)),
        };
        let name = spec.label().cloned().unwrap_or_else(|| default_name(&spec));
        instances.push(PlannedInstance { name, spec, suites, skipped });
    }
    let report = raw.report.unwrap_or_default();
    Ok(CheckPlan {
        name: raw.name.unwrap_or_else(|| String::from("plan")),
        bounds,
        defaulted,
        seed: raw.seed.unwrap_or(0),
        report_path: report.path,
        format: report.format.unwrap_or(Format::Human),
        instances,
    })
}

fn own_is_all(list: Option<&Vec<SuiteSelection>>) -> bool {
    list.is_some_and(|l| l.contains(&SuiteSelection::All))
}

fn default_name(spec: &InstanceSpec) -> String {
    match spec {
        InstanceSpec::Monoid(m) => match (m.preset, &m.table) {
            (Some(MonoidPreset::Trivial), _) => String::from("monoid trivial"),
            (Some(MonoidPreset::Z2), _) => String::from("monoid Z2"),
            (Some(MonoidPreset::Z3), _) => String::from("monoid Z3"),
            (Some(MonoidPreset::Or), _) => String::from("monoid or"),
            (None, Some(t)) => format!("monoid of order {}", t.len()),
            (None, None) => String::from("monoid"),
        },
        InstanceSpec::SelfAction(_) => String::from("cartesian self-action"),
        InstanceSpec::Copower(s) => format!("copower J={}", s.j),
        InstanceSpec::Power(s) => format!("power J={}", s.j),
        InstanceSpec::Exponential(s) => format!("exponential J={}", s.j),
        InstanceSpec::Kan(k) => format!("kan over {} object(s)", k.objects.len()),
        InstanceSpec::Mutation(_) => String::from("mutation fixtures"),
    }
}

fn validate_instance(i: usize, spec: &InstanceSpec) -> Result<(), CliError> {
    let err = |field: &str, msg: String| Err(CliError::Schema(format!("instances[{i}].{field}: {msg}")));
    match spec {
        InstanceSpec::Monoid(m) => match (&m.preset, &m.table) {
            (Some(_), Some(_)) => err("table", String::from("give either preset or table, not both")),
            (None, None) => err("preset", String::from("a monoid needs a preset or a table")),
            (Some(_), None) if m.identity.is_some() => err("identity", String::from("only valid with table")),
            _ => Ok(()),
        },
        InstanceSpec::Kan(k) => {
            if k.objects.is_empty() {
                return err("objects", String::from("at least one object is required"));
            }
            if k.j.values.len() != k.objects.len() {
                return err("j.values", format!("{} sizes for {} objects", k.j.values.len(), k.objects.len()));
            }
            if k.j.maps.len() != k.arrows.len() {
                return err("j.maps", format!("{} tables for {} arrows", k.j.maps.len(), k.arrows.len()));
            }
            Ok(())
        }
        InstanceSpec::Mutation(m) => {
            let known: Vec<&str> = actegory_core::mutation::fixtures().iter().map(|f| f.name).collect();
            match m.fixtures.iter().find(|f| !known.contains(&f.as_str())) {
                Some(f) => err("fixtures", format!("unknown fixture {f:?}")),
                None => Ok(()),
            }
        }
        _ => Ok(()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const MINIMAL: &str = r#"
version = 1
suites = ["skew"]
[bounds]
max_size = 2
[[instances]]
kind = "monoid"
preset = "Z2"
"#;

    #[test]
    fn minimal_document_is_valid() {
        let p = parse_spec(MINIMAL).unwrap();
        assert_eq!(p.bounds.max_size, 2);
        assert_eq!(p.instances.len(), 1);
        assert_eq!(p.instances[0].suites, vec![Suite::Skew]);
        assert_eq!(p.instances[0].name, "monoid Z2");
    }

    #[test]
    fn unknown_suite_is_named() {
        let e = parse_spec(&MINIMAL.replace("\"skew\"", "\"hexagon\"")).unwrap_err();
        let msg = e.to_string();
        assert!(msg.contains("hexagon") && msg.contains("suites"), "{msg}");
        assert_eq!(e.exit_code(), 2);
    }

    #[test]
    fn missing_bounds_take_defaults_and_are_recorded() {
        let p = parse_spec("version = 1\n[[instances]]\nkind = \"power\"\nj = 1\n").unwrap();
        assert_eq!(p.bounds, Bounds::default());
        assert_eq!(p.defaulted.len(), 2);
        assert_eq!(p.instances[0].suites, vec![Suite::Skew, Suite::Action, Suite::Adjunction, Suite::Probes, Suite::TheoremChecks]);
        assert!(p.instances[0].skipped.contains(&Suite::BraidingRight));
    }

    #[test]
    fn unknown_fields_are_rejected() {
        let e = parse_spec(&MINIMAL.replace("preset = \"Z2\"", "preset = \"Z2\"\ncolour = 3")).unwrap_err();
        assert!(e.to_string().contains("colour"), "{e}");
        let e = parse_spec(&format!("{MINIMAL}\n[extra]\nx = 1\n")).unwrap_err();
        assert!(e.to_string().contains("extra"), "{e}");
    }

    #[test]
    fn bounds_must_be_positive() {
        assert!(parse_spec(&MINIMAL.replace("max_size = 2", "max_size = 0")).is_err());
    }

    #[test]
    fn explicit_inapplicable_suite_is_rejected() {
        let doc = "version = 1\n[[instances]]\nkind = \"power\"\nj = 1\nsuites = [\"closedness\"]\n";
        let e = parse_spec(doc).unwrap_err();
        assert!(e.to_string().contains("instances[0].suites"), "{e}");
    }

    #[test]
    fn wrong_version_is_rejected() {
        assert!(parse_spec(&MINIMAL.replace("version = 1", "version = 7")).is_err());
    }

    #[test]
    fn kan_listing_must_match() {
        let doc = r#"
version = 1
[[instances]]
kind = "kan"
objects = ["0", "1"]
arrows = [["u", 0, 1]]
j = { values = [1, 1] }
"#;
        let e = parse_spec(doc).unwrap_err();
        assert!(e.to_string().contains("j.maps"), "{e}");
    }
}
